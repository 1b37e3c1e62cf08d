//! The greedy pass: orders elements by distance from a root vertex in the
//! subdivision graph and colors them in decreasing order of that distance.
//!
//! The subdivision graph `S(G)` replaces each edge with a path of length two,
//! so its vertices are exactly the elements of `G`. When every element far
//! from the root still has two uncolored elements on its path toward the root,
//! at most `2*max_degree - 2` colors are blocked, and lists of size
//! `2*max_degree - 1` always leave a choice. This works whenever the root is
//! degree-deficient in the (possibly edge-reduced) graph, or sits on an edge
//! of multiplicity at least 3 whose copies are colored last.

use crate::error::{Error, Result};
use crate::graph::{ElementId, ElementSet, ListAssignment, Multigraph, PartialTotalColoring};
use crate::plan::{GadgetPlan, Role};
use std::collections::{BTreeMap, VecDeque};

/// Distances from a root vertex in the subdivision graph, restricted to
/// non-skipped elements. Vertices sit at even distance, edges at odd distance.
#[derive(Debug, Clone)]
pub struct SubdivisionDistanceMap {
    root: usize,
    vertex_dist: Vec<Option<u32>>,
    edge_dist: Vec<Option<u32>>,
}

impl SubdivisionDistanceMap {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn get(&self, x: ElementId) -> Option<u32> {
        match x {
            ElementId::Vertex(i) => self.vertex_dist[i],
            ElementId::Edge(i) => self.edge_dist[i],
        }
    }

    /// Reached elements with their distances, vertices first, index order.
    pub fn elements(&self) -> impl Iterator<Item = (ElementId, u32)> + '_ {
        let vs = self
            .vertex_dist
            .iter()
            .enumerate()
            .filter_map(|(i, d)| d.map(|d| (ElementId::Vertex(i), d)));
        let es = self
            .edge_dist
            .iter()
            .enumerate()
            .filter_map(|(i, d)| d.map(|d| (ElementId::Edge(i), d)));
        vs.chain(es)
    }

    pub fn reached_count(&self) -> usize {
        self.elements().count()
    }
}

fn bfs_subdivision(g: &Multigraph, root: usize, skip: &ElementSet) -> SubdivisionDistanceMap {
    let mut map = SubdivisionDistanceMap {
        root,
        vertex_dist: vec![None; g.vertex_count()],
        edge_dist: vec![None; g.edge_count()],
    };
    map.vertex_dist[root] = Some(0);
    let mut queue = VecDeque::from([ElementId::Vertex(root)]);
    while let Some(x) = queue.pop_front() {
        let d = map.get(x).unwrap();
        match x {
            ElementId::Vertex(v) => {
                for &e in g.incident_edges(v) {
                    if skip.contains_edge(e) || map.edge_dist[e].is_some() {
                        continue;
                    }
                    map.edge_dist[e] = Some(d + 1);
                    queue.push_back(ElementId::Edge(e));
                }
            }
            ElementId::Edge(e) => {
                let (a, b) = g.endpoints(e);
                for v in [a, b] {
                    if skip.contains(ElementId::Vertex(v)) || map.vertex_dist[v].is_some() {
                        continue;
                    }
                    map.vertex_dist[v] = Some(d + 1);
                    queue.push_back(ElementId::Vertex(v));
                }
            }
        }
    }
    map
}

/// BFS distances over the subdivision graph of `g` minus `skip`, from `root`.
/// Fails if any non-skipped element is unreachable; a failure signals a caller
/// bug, since the pipeline only skips edge sets it then covers chunk by chunk.
pub fn subdivision_distances(
    g: &Multigraph,
    root: usize,
    skip: &ElementSet,
) -> Result<SubdivisionDistanceMap> {
    if skip.contains(ElementId::Vertex(root)) {
        return Err(Error::Invariant(format!("root vertex {root} is skipped")));
    }
    let map = bfs_subdivision(g, root, skip);
    for x in g.elements() {
        if !skip.contains(x) && map.get(x).is_none() {
            return Err(Error::Disconnected(x));
        }
    }
    Ok(map)
}

/// Like [`subdivision_distances`] but covers only the elements reachable from
/// `root`; used to color one connected chunk of a reduced graph at a time.
pub fn reachable_subdivision_distances(
    g: &Multigraph,
    root: usize,
    skip: &ElementSet,
) -> SubdivisionDistanceMap {
    bfs_subdivision(g, root, skip)
}

/// The coloring order for a greedy pass: non-increasing distance, ties by
/// element id, with the heavy parallel class (when given) colored last among
/// the root's edges, and the root as the final element.
///
/// Preconditions: with no heavy class the root must be degree-deficient in the
/// reduced graph; a heavy class must be at least three parallel copies at the
/// root.
pub fn greedy_order(
    g: &Multigraph,
    dist: &SubdivisionDistanceMap,
    heavy_group: Option<&[usize]>,
) -> Result<Vec<ElementId>> {
    let root = dist.root();
    let reduced_degree = g
        .incident_edges(root)
        .iter()
        .filter(|&&e| dist.get(ElementId::Edge(e)).is_some())
        .count();
    match heavy_group {
        Some(copies) => {
            if copies.len() < 3 {
                return Err(Error::Invariant(format!(
                    "heavy class has {} copies, need at least 3",
                    copies.len()
                )));
            }
            for &e in copies {
                let (a, b) = g.endpoints(e);
                if a != root && b != root {
                    return Err(Error::Invariant(format!(
                        "heavy edge {e} is not incident to root {root}"
                    )));
                }
            }
        }
        None => {
            if reduced_degree >= g.max_degree() {
                return Err(Error::Invariant(format!(
                    "root {root} has reduced degree {reduced_degree}, not below max degree {}",
                    g.max_degree()
                )));
            }
        }
    }
    let is_heavy = |x: ElementId| -> bool {
        match (heavy_group, x) {
            (Some(copies), ElementId::Edge(e)) => copies.contains(&e),
            _ => false,
        }
    };
    let mut order: Vec<(u32, bool, ElementId)> =
        dist.elements().map(|(x, d)| (d, is_heavy(x), x)).collect();
    // descending distance; heavy copies last among the root's edges; id ties
    order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));
    Ok(order.into_iter().map(|(_, _, x)| x).collect())
}

/// Extends `fixed` by greedily assigning each element of `order` the smallest
/// list color unused on its already-colored total neighbors. Fails with
/// `NoAvailableColor` only when the ordering preconditions were violated.
///
/// When `dist` is given, the pass also checks the invariant that an element at
/// subdivision distance two or more still has two uncolored total neighbors
/// at the moment it is colored.
pub fn greedy_extend(
    g: &Multigraph,
    lists: &ListAssignment,
    order: &[ElementId],
    fixed: &PartialTotalColoring,
    dist: Option<&SubdivisionDistanceMap>,
) -> Result<PartialTotalColoring> {
    let mut coloring = fixed.clone();
    greedy_extend_into(g, lists, order, &mut coloring, dist)?;
    Ok(coloring)
}

pub(crate) fn greedy_extend_into(
    g: &Multigraph,
    lists: &ListAssignment,
    order: &[ElementId],
    coloring: &mut PartialTotalColoring,
    dist: Option<&SubdivisionDistanceMap>,
) -> Result<()> {
    let mut banned: Vec<u32> = Vec::with_capacity(2 * g.max_degree());
    for &x in order {
        if coloring.is_colored(x) {
            return Err(Error::Invariant(format!(
                "{x} appears in the greedy order but is already colored"
            )));
        }
        banned.clear();
        let mut uncolored_neighbors = 0usize;
        g.for_each_total_neighbor(x, |y| match coloring.get(y) {
            Some(c) => banned.push(c),
            None => uncolored_neighbors += 1,
        });
        if let Some(d) = dist {
            if d.get(x).unwrap_or(0) >= 2 && uncolored_neighbors < 2 {
                return Err(Error::Invariant(format!(
                    "{x} at subdivision distance >= 2 has {uncolored_neighbors} uncolored neighbors"
                )));
            }
        }
        let color = lists
            .get(x)
            .first_available(&banned)
            .ok_or(Error::NoAvailableColor(x))?;
        coloring.set(x, color);
    }
    Ok(())
}

/// Per-role lower bounds on residual list sizes. The counting that justifies
/// them: an uncolored full vertex sees at most `k-3` colored edges and `k-2`
/// colored vertices out of a `2k-1` list, leaving 4; a full edge loses at most
/// `k-3` per endpoint, leaving 5; a thin halfedge keeps 2; a thick halfedge
/// keeps 3 because its partner halfedge at the shared endpoint is uncolored.
pub fn role_minimum(role: Role) -> usize {
    match role {
        Role::FullVertex => 4,
        Role::FullEdge => 5,
        Role::ThickHalfedge => 3,
        Role::ThinHalfedge => 2,
    }
}

/// Residual lists for the uncolored subgraph: each element's list minus the
/// colors on its colored total neighbors, together with its role.
#[derive(Debug, Clone)]
pub struct ResidualLists {
    entries: BTreeMap<ElementId, (Role, crate::graph::ColorSet)>,
}

impl ResidualLists {
    pub fn get(&self, x: ElementId) -> Option<(Role, &crate::graph::ColorSet)> {
        self.entries.get(&x).map(|(r, l)| (*r, l))
    }

    pub fn list(&self, x: ElementId) -> &crate::graph::ColorSet {
        &self.entries[&x].1
    }

    pub fn iter(&self) -> impl Iterator<Item = (ElementId, Role, &crate::graph::ColorSet)> {
        self.entries.iter().map(|(x, (r, l))| (*x, *r, l))
    }
}

/// Computes residual lists for every element of `plan` against `partial` and
/// checks the per-role minima; a violation means the planner mis-counted and
/// aborts the run.
pub fn residual_lists(
    g: &Multigraph,
    lists: &ListAssignment,
    partial: &PartialTotalColoring,
    plan: &GadgetPlan,
) -> Result<ResidualLists> {
    for h in plan.halfedges() {
        if !partial.is_colored(ElementId::Vertex(h.outer)) {
            return Err(Error::Invariant(format!(
                "halfedge outer endpoint vertex {} is uncolored",
                h.outer
            )));
        }
    }
    let mut entries = BTreeMap::new();
    let mut banned: Vec<u32> = Vec::new();
    for (x, role) in plan.elements_with_roles() {
        if partial.is_colored(x) {
            return Err(Error::Invariant(format!(
                "plan element {x} is already colored"
            )));
        }
        banned.clear();
        g.for_each_total_neighbor(x, |y| {
            if let Some(c) = partial.get(y) {
                banned.push(c);
            }
        });
        let residual = lists.get(x).without(&banned);
        let need = role_minimum(role);
        if residual.len() < need {
            return Err(Error::MinimumViolated {
                element: x,
                have: residual.len(),
                need,
            });
        }
        entries.insert(x, (role, residual));
    }
    Ok(ResidualLists { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ColorSet;

    fn star3() -> Multigraph {
        // center 0, leaves 1..3
        Multigraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn path3() -> Multigraph {
        Multigraph::new(3, &[(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn distances_on_star() {
        let g = star3();
        let skip = ElementSet::empty(&g);
        let d = subdivision_distances(&g, 0, &skip).unwrap();
        assert_eq!(d.get(ElementId::Vertex(0)), Some(0));
        for e in 0..3 {
            assert_eq!(d.get(ElementId::Edge(e)), Some(1));
        }
        for v in 1..4 {
            assert_eq!(d.get(ElementId::Vertex(v)), Some(2));
        }
    }

    #[test]
    fn distances_on_path() {
        let g = path3();
        let skip = ElementSet::empty(&g);
        let d = subdivision_distances(&g, 0, &skip).unwrap();
        assert_eq!(d.get(ElementId::Vertex(0)), Some(0));
        assert_eq!(d.get(ElementId::Edge(0)), Some(1));
        assert_eq!(d.get(ElementId::Vertex(1)), Some(2));
        assert_eq!(d.get(ElementId::Edge(1)), Some(3));
        assert_eq!(d.get(ElementId::Vertex(2)), Some(4));
    }

    #[test]
    fn distances_detect_disconnection() {
        let g = path3();
        let mut skip = ElementSet::empty(&g);
        skip.insert(ElementId::Edge(1));
        let err = subdivision_distances(&g, 0, &skip).unwrap_err();
        assert_eq!(err, Error::Disconnected(ElementId::Vertex(2)));
    }

    #[test]
    fn distances_reach_k4_minus_triangle() {
        let g = Multigraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        // drop the triangle on {1,2,3}; everything stays reachable from 0
        let skip = ElementSet::from_elements(
            &g,
            [ElementId::Edge(3), ElementId::Edge(4), ElementId::Edge(5)],
        );
        let d = subdivision_distances(&g, 0, &skip).unwrap();
        assert_eq!(d.reached_count(), 4 + 3);
    }

    #[test]
    fn order_on_path_is_strictly_decreasing() {
        let g = path3();
        let skip = ElementSet::empty(&g);
        let d = subdivision_distances(&g, 0, &skip).unwrap();
        let order = greedy_order(&g, &d, None).unwrap();
        assert_eq!(
            order,
            vec![
                ElementId::Vertex(2),
                ElementId::Edge(1),
                ElementId::Vertex(1),
                ElementId::Edge(0),
                ElementId::Vertex(0)
            ]
        );
    }

    #[test]
    fn order_puts_heavy_copies_last() {
        // triple edge 0-1 plus a pendant edge at 1 keeps max degree at 4
        let g = Multigraph::new(3, &[(0, 1), (0, 1), (0, 1), (1, 2)]).unwrap();
        let skip = ElementSet::empty(&g);
        let d = subdivision_distances(&g, 0, &skip).unwrap();
        let order = greedy_order(&g, &d, Some(&[0, 1, 2])).unwrap();
        let tail = &order[order.len() - 4..];
        assert_eq!(
            tail,
            &[
                ElementId::Edge(0),
                ElementId::Edge(1),
                ElementId::Edge(2),
                ElementId::Vertex(0)
            ]
        );
    }

    #[test]
    fn theta_graph_order_ends_with_the_copies_then_the_root() {
        // two vertices joined by a triple edge: the whole order is the far
        // vertex, the three copies, then the root
        let g = Multigraph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let skip = ElementSet::empty(&g);
        let d = subdivision_distances(&g, 0, &skip).unwrap();
        let order = greedy_order(&g, &d, Some(&[0, 1, 2])).unwrap();
        assert_eq!(
            order,
            vec![
                ElementId::Vertex(1),
                ElementId::Edge(0),
                ElementId::Edge(1),
                ElementId::Edge(2),
                ElementId::Vertex(0)
            ]
        );
    }

    #[test]
    fn greedy_covers_k4_minus_a_triangle() {
        // drop the triangle on {1,2,3}; rooted at a triangle vertex, the pass
        // colors every remaining element and stays proper in the full graph
        let g = Multigraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let lists = ListAssignment::uniform(&g, ColorSet::new((1..=5).collect()));
        let skip = ElementSet::from_elements(
            &g,
            [ElementId::Edge(3), ElementId::Edge(4), ElementId::Edge(5)],
        );
        let d = subdivision_distances(&g, 1, &skip).unwrap();
        let order = greedy_order(&g, &d, None).unwrap();
        assert_eq!(order.len(), 4 + 3);
        let c =
            greedy_extend(&g, &lists, &order, &PartialTotalColoring::empty(&g), Some(&d)).unwrap();
        assert_eq!(c.colored_count(), 7);
        assert_eq!(
            crate::verify::verify_total_coloring(&g, &lists, &c, false),
            Ok(())
        );
    }

    #[test]
    fn order_rejects_full_degree_root_without_heavy_class() {
        let g = Multigraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let skip = ElementSet::empty(&g);
        let d = subdivision_distances(&g, 0, &skip).unwrap();
        assert!(greedy_order(&g, &d, None).is_err());
    }

    #[test]
    fn greedy_colors_star_from_leaf_root() {
        let g = star3();
        let lists = ListAssignment::uniform(&g, ColorSet::new((1..=5).collect()));
        let skip = ElementSet::empty(&g);
        let d = subdivision_distances(&g, 1, &skip).unwrap();
        let order = greedy_order(&g, &d, None).unwrap();
        let c = greedy_extend(
            &g,
            &lists,
            &order,
            &PartialTotalColoring::empty(&g),
            Some(&d),
        )
        .unwrap();
        assert!(c.is_complete(&g));
        assert_eq!(
            crate::verify::verify_total_coloring(&g, &lists, &c, true),
            Ok(())
        );
    }

    #[test]
    fn greedy_respects_singleton_lists() {
        let g = Multigraph::new(2, &[(0, 1)]).unwrap();
        let lists = ListAssignment::new(
            &g,
            vec![ColorSet::new(vec![1]), ColorSet::new(vec![3])],
            vec![ColorSet::new(vec![2])],
        )
        .unwrap();
        let order = vec![
            ElementId::Vertex(0),
            ElementId::Edge(0),
            ElementId::Vertex(1),
        ];
        let c = greedy_extend(&g, &lists, &order, &PartialTotalColoring::empty(&g), None).unwrap();
        assert_eq!(c.get(ElementId::Vertex(0)), Some(1));
        assert_eq!(c.get(ElementId::Edge(0)), Some(2));
        assert_eq!(c.get(ElementId::Vertex(1)), Some(3));
    }

    #[test]
    fn residual_minimum_violation_is_reported() {
        // doubled edge in a triangle, planned, but every list is a single
        // color: the full-edge minimum of 5 cannot hold
        let g = Multigraph::new(3, &[(0, 1), (0, 1), (0, 2), (1, 2)]).unwrap();
        let lists = ListAssignment::uniform(&g, ColorSet::new(vec![1]));
        let plan = crate::plan::plan_double_edge(&g, 0).unwrap();
        let partial = {
            let mut c = PartialTotalColoring::empty(&g);
            c.set(ElementId::Vertex(2), 1);
            c
        };
        let err = residual_lists(&g, &lists, &partial, &plan).unwrap_err();
        assert!(matches!(err, Error::MinimumViolated { .. }), "{err:?}");
    }

    #[test]
    fn residual_roles_carry_the_counting_minima() {
        assert_eq!(role_minimum(Role::FullEdge), 5);
        assert_eq!(role_minimum(Role::FullVertex), 4);
        assert_eq!(role_minimum(Role::ThickHalfedge), 3);
        assert_eq!(role_minimum(Role::ThinHalfedge), 2);
    }

    #[test]
    fn residual_lists_on_a_planned_double_edge() {
        // doubled edge in a triangle with ample lists: full roles keep their
        // minima with room to spare, the shared outer vertex is the only
        // colored neighbor
        let g = Multigraph::new(3, &[(0, 1), (0, 1), (0, 2), (1, 2)]).unwrap();
        let lists = ListAssignment::uniform(&g, ColorSet::range(5));
        let plan = crate::plan::plan_double_edge(&g, 0).unwrap();
        let mut partial = PartialTotalColoring::empty(&g);
        partial.set(ElementId::Vertex(2), 0);
        let res = residual_lists(&g, &lists, &partial, &plan).unwrap();
        assert_eq!(res.list(ElementId::Vertex(0)).len(), 4); // lost the outer's color
        assert_eq!(res.list(ElementId::Edge(0)).len(), 5); // full edge untouched
        let (role, l) = res.get(ElementId::Edge(2)).unwrap();
        assert_eq!(role, Role::ThickHalfedge);
        assert_eq!(l.len(), 4); // only the outer endpoint's color is gone
    }

    #[test]
    fn greedy_reports_exhausted_list() {
        let g = Multigraph::new(2, &[(0, 1)]).unwrap();
        let lists = ListAssignment::uniform(&g, ColorSet::new(vec![1]));
        let order = vec![ElementId::Vertex(0), ElementId::Vertex(1)];
        let err =
            greedy_extend(&g, &lists, &order, &PartialTotalColoring::empty(&g), None).unwrap_err();
        assert_eq!(err, Error::NoAvailableColor(ElementId::Vertex(1)));
    }
}
