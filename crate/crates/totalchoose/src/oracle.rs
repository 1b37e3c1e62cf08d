//! Exact brute-force total-list-coloring oracle: exhaustive backtracking over
//! all elements, most-constrained-first. Desk-scale ground truth for every
//! other module; it never calls the pipeline or the gadget solvers.

use crate::graph::{ElementId, ListAssignment, Multigraph, PartialTotalColoring};

/// Outcome of an oracle run. `Infeasible` is exact whenever the budget was
/// not exhausted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    Found(PartialTotalColoring),
    Infeasible,
    BudgetExceeded,
}

/// Searches for a complete proper total coloring of `g` from `lists`,
/// spending at most `node_budget` color-assignment attempts.
pub fn oracle_total_color(
    g: &Multigraph,
    lists: &ListAssignment,
    node_budget: u64,
) -> OracleOutcome {
    let elements: Vec<ElementId> = g.elements().collect();
    let neighbors: Vec<Vec<usize>> = {
        let index_of = |x: ElementId| -> usize {
            match x {
                ElementId::Vertex(i) => i,
                ElementId::Edge(i) => g.vertex_count() + i,
            }
        };
        elements
            .iter()
            .map(|&x| {
                let mut out = Vec::new();
                g.for_each_total_neighbor(x, |y| out.push(index_of(y)));
                out
            })
            .collect()
    };
    let mut state = Search {
        lists: elements
            .iter()
            .map(|&x| lists.get(x).as_slice().to_vec())
            .collect(),
        neighbors,
        colors: vec![None; elements.len()],
        budget: node_budget,
        exhausted: false,
    };
    if state.run(elements.len()) {
        let mut coloring = PartialTotalColoring::empty(g);
        for (i, &x) in elements.iter().enumerate() {
            coloring.set(x, state.colors[i].unwrap());
        }
        OracleOutcome::Found(coloring)
    } else if state.exhausted {
        OracleOutcome::BudgetExceeded
    } else {
        OracleOutcome::Infeasible
    }
}

struct Search {
    lists: Vec<Vec<u32>>,
    neighbors: Vec<Vec<usize>>,
    colors: Vec<Option<u32>>,
    budget: u64,
    exhausted: bool,
}

impl Search {
    fn available(&self, i: usize) -> Vec<u32> {
        self.lists[i]
            .iter()
            .copied()
            .filter(|&c| !self.neighbors[i].iter().any(|&n| self.colors[n] == Some(c)))
            .collect()
    }

    /// Most-constrained uncolored element: fewest available colors, ties by
    /// element order.
    fn pick(&self) -> Option<(usize, Vec<u32>)> {
        let mut best: Option<(usize, Vec<u32>)> = None;
        for i in 0..self.colors.len() {
            if self.colors[i].is_some() {
                continue;
            }
            let avail = self.available(i);
            let better = match &best {
                None => true,
                Some((_, b)) => avail.len() < b.len(),
            };
            if better {
                let empty = avail.is_empty();
                best = Some((i, avail));
                if empty {
                    break;
                }
            }
        }
        best
    }

    fn run(&mut self, remaining: usize) -> bool {
        if remaining == 0 {
            return true;
        }
        if self.exhausted {
            return false;
        }
        let Some((i, avail)) = self.pick() else {
            return true;
        };
        for c in avail {
            if self.budget == 0 {
                self.exhausted = true;
                return false;
            }
            self.budget -= 1;
            self.colors[i] = Some(c);
            if self.run(remaining - 1) {
                return true;
            }
            self.colors[i] = None;
            if self.exhausted {
                return false;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::named;
    use crate::graph::ColorSet;
    use crate::verify::verify_total_coloring;

    #[test]
    fn single_vertex_with_singleton_list() {
        let g = Multigraph::new(1, &[]).unwrap();
        let lists = ListAssignment::uniform(&g, ColorSet::new(vec![3]));
        match oracle_total_color(&g, &lists, 1_000) {
            OracleOutcome::Found(c) => assert_eq!(c.get(ElementId::Vertex(0)), Some(3)),
            other => panic!("expected a coloring, got {other:?}"),
        }
    }

    #[test]
    fn k4_needs_more_than_four_colors() {
        let g = named::complete(4);
        let lists = ListAssignment::uniform(&g, ColorSet::range(4));
        assert_eq!(
            oracle_total_color(&g, &lists, 10_000_000),
            OracleOutcome::Infeasible
        );
    }

    #[test]
    fn k4_is_colorable_with_five() {
        let g = named::complete(4);
        let lists = ListAssignment::uniform(&g, ColorSet::range(5));
        match oracle_total_color(&g, &lists, 10_000_000) {
            OracleOutcome::Found(c) => {
                assert_eq!(verify_total_coloring(&g, &lists, &c, true), Ok(()));
            }
            other => panic!("expected a coloring, got {other:?}"),
        }
    }

    #[test]
    fn tiny_budget_is_reported() {
        let g = named::complete(4);
        let lists = ListAssignment::uniform(&g, ColorSet::range(4));
        assert_eq!(
            oracle_total_color(&g, &lists, 3),
            OracleOutcome::BudgetExceeded
        );
    }
}
