//! The end-to-end coloring pipeline. Each connected component is dispatched
//! to a greedy pass (when some vertex is degree-deficient or a multiplicity-3
//! class exists), the double-edge plan, or the special-cycle plan; the plan's
//! shape is fixed first, everything outside it is colored greedily chunk by
//! chunk, the plan vertices are uncolored again, and a gadget solver extends
//! the coloring to the rest. The result is verified before it is returned.

use crate::cycle::find_special_cycle_in;
use crate::error::{Error, Result};
use crate::gadget::{solve_fixed, solve_ring, FixedGadget, FixedGadgetKind, RingGadget};
use crate::graph::{
    Component, ElementId, ElementSet, ListAssignment, Multigraph, PartialTotalColoring,
};
use crate::greedy::{
    greedy_extend_into, greedy_order, reachable_subdivision_distances, residual_lists,
};
use crate::plan::{plan_double_edge, plan_from_cycle, GadgetPlan, PlanShape};
use crate::verify::verify_total_coloring;
use std::collections::BTreeMap;

/// Which pipeline path colored a component (or, for `CycleReplacement`, how
/// often a 4-cycle was replaced during planning).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Branch {
    Greedy,
    DoubleEdgeThick,
    DoubleEdgeThin,
    TriangleTwoThick,
    FourCycleTwoThick,
    K4,
    K33,
    RingThree,
    RingFour,
    RingLong,
    CycleReplacement,
}

impl Branch {
    pub const ALL: [Branch; 11] = [
        Branch::Greedy,
        Branch::DoubleEdgeThick,
        Branch::DoubleEdgeThin,
        Branch::TriangleTwoThick,
        Branch::FourCycleTwoThick,
        Branch::K4,
        Branch::K33,
        Branch::RingThree,
        Branch::RingFour,
        Branch::RingLong,
        Branch::CycleReplacement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Branch::Greedy => "greedy",
            Branch::DoubleEdgeThick => "double-edge-thick",
            Branch::DoubleEdgeThin => "double-edge-thin",
            Branch::TriangleTwoThick => "triangle-two-thick",
            Branch::FourCycleTwoThick => "four-cycle-two-thick",
            Branch::K4 => "k4",
            Branch::K33 => "k33",
            Branch::RingThree => "ring-3",
            Branch::RingFour => "ring-4",
            Branch::RingLong => "ring-long",
            Branch::CycleReplacement => "cycle-replacement",
        }
    }
}

/// Dispatch counters and the adjacency probes spent by one run.
#[derive(Debug, Clone, Default)]
pub struct RunStats {
    counts: BTreeMap<Branch, u64>,
    pub probes: u64,
}

impl RunStats {
    pub fn count(&self, b: Branch) -> u64 {
        self.counts.get(&b).copied().unwrap_or(0)
    }

    fn bump(&mut self, b: Branch) {
        *self.counts.entry(b).or_insert(0) += 1;
    }

    pub fn merge(&mut self, other: &RunStats) {
        for (b, c) in &other.counts {
            *self.counts.entry(*b).or_insert(0) += c;
        }
        self.probes += other.probes;
    }

    pub fn branches_hit(&self) -> Vec<Branch> {
        self.counts
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(b, _)| *b)
            .collect()
    }
}

/// Produces a complete verified total coloring of `g` from `lists`.
/// Requires maximum degree at least 3 and every list of size at least
/// `2 * max_degree - 1`.
pub fn total_color(g: &Multigraph, lists: &ListAssignment) -> Result<PartialTotalColoring> {
    total_color_with_stats(g, lists).map(|(c, _)| c)
}

/// Like [`total_color`], also reporting which dispatch branches ran and how
/// many adjacency probes the run spent.
pub fn total_color_with_stats(
    g: &Multigraph,
    lists: &ListAssignment,
) -> Result<(PartialTotalColoring, RunStats)> {
    let delta = g.max_degree();
    if delta < 3 {
        return Err(Error::DeltaTooSmall(delta));
    }
    let need = 2 * delta - 1;
    if let Some((element, have)) = lists.first_undersized(need) {
        return Err(Error::ListTooSmall {
            element,
            have,
            need,
        });
    }
    let probes_before = g.probes();
    let mut coloring = PartialTotalColoring::empty(g);
    let mut stats = RunStats::default();
    for comp in g.components() {
        color_component(g, lists, &comp, &mut coloring, &mut stats)?;
    }
    if let Err(v) = verify_total_coloring(g, lists, &coloring, true) {
        return Err(Error::Invariant(format!("final verification failed: {v}")));
    }
    stats.probes = g.probes() - probes_before;
    Ok((coloring, stats))
}

fn color_component(
    g: &Multigraph,
    lists: &ListAssignment,
    comp: &Component,
    coloring: &mut PartialTotalColoring,
    stats: &mut RunStats,
) -> Result<()> {
    let delta = g.max_degree();
    if let Some(&root) = comp.vertices.iter().find(|&&v| g.degree(v) < delta) {
        greedy_whole(g, lists, root, None, coloring)?;
        stats.bump(Branch::Greedy);
        return Ok(());
    }
    for &e in &comp.edges {
        let group = g.parallel_group(e);
        if group.len() >= 3 {
            let (u, v) = g.endpoints(e);
            let mut copies = group.to_vec();
            copies.sort_unstable();
            greedy_whole(g, lists, u.min(v), Some(&copies), coloring)?;
            stats.bump(Branch::Greedy);
            return Ok(());
        }
    }
    for &e in &comp.edges {
        if g.parallel_group(e).len() == 2 {
            let plan = plan_double_edge(g, e)?;
            let branch = branch_of(&plan.shape);
            run_plan(g, lists, comp, &plan, coloring)?;
            stats.bump(branch);
            return Ok(());
        }
    }
    let cycle = find_special_cycle_in(g, comp)?;
    let outcome = plan_from_cycle(g, &cycle)?;
    for _ in 0..outcome.replacements {
        stats.bump(Branch::CycleReplacement);
    }
    let branch = branch_of(&outcome.plan.shape);
    run_plan(g, lists, comp, &outcome.plan, coloring)?;
    stats.bump(branch);
    Ok(())
}

fn branch_of(shape: &PlanShape) -> Branch {
    match shape {
        PlanShape::Ring { positions } => match positions.len() {
            3 => Branch::RingThree,
            4 => Branch::RingFour,
            _ => Branch::RingLong,
        },
        PlanShape::DoubleEdge { thick: true, .. } => Branch::DoubleEdgeThick,
        PlanShape::DoubleEdge { thick: false, .. } => Branch::DoubleEdgeThin,
        PlanShape::TriangleTwoThick { .. } => Branch::TriangleTwoThick,
        PlanShape::FourCycleTwoThick { .. } => Branch::FourCycleTwoThick,
        PlanShape::K4 { .. } => Branch::K4,
        PlanShape::K33 { .. } => Branch::K33,
    }
}

/// One greedy pass over the root's whole component, with no skipped edges.
fn greedy_whole(
    g: &Multigraph,
    lists: &ListAssignment,
    root: usize,
    heavy: Option<&[usize]>,
    coloring: &mut PartialTotalColoring,
) -> Result<()> {
    let skip = ElementSet::empty(g);
    let dist = reachable_subdivision_distances(g, root, &skip);
    let order = greedy_order(g, &dist, heavy)?;
    greedy_extend_into(g, lists, &order, coloring, Some(&dist))
}

/// Colors everything outside the plan chunk by chunk, uncolors the plan's
/// vertices, computes the residual lists, and runs the matching gadget
/// solver.
///
/// Removing the plan's edges can split the component; each chunk is rooted
/// at a vertex that lost edges, so the greedy counting still applies. Chunks
/// containing plan vertices are colored last and rooted at a plan vertex:
/// a halfedge's outer endpoint then still sees its uncolored plan partner
/// when its own turn comes.
fn run_plan(
    g: &Multigraph,
    lists: &ListAssignment,
    comp: &Component,
    plan: &GadgetPlan,
    coloring: &mut PartialTotalColoring,
) -> Result<()> {
    let delta = g.max_degree();
    let skip =
        ElementSet::from_elements(g, plan.uncolored_edges().into_iter().map(ElementId::Edge));
    let plan_vertices = plan.uncolored_vertices();
    let is_plan_vertex = |v: usize| plan_vertices.contains(&v);

    // chunks of the component after removing the plan's edges
    let mut visited = vec![false; g.vertex_count()];
    let mut plain_chunks: Vec<Vec<usize>> = Vec::new();
    let mut plan_chunks: Vec<Vec<usize>> = Vec::new();
    for &start in &comp.vertices {
        if visited[start] {
            continue;
        }
        let mut chunk = vec![start];
        visited[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &e in g.incident_edges(v) {
                if skip.contains_edge(e) {
                    continue;
                }
                let w = g.opposite(e, v);
                if !visited[w] {
                    visited[w] = true;
                    chunk.push(w);
                    queue.push_back(w);
                }
            }
        }
        chunk.sort_unstable();
        if chunk.iter().any(|&v| is_plan_vertex(v)) {
            plan_chunks.push(chunk);
        } else {
            plain_chunks.push(chunk);
        }
    }

    for chunk in plain_chunks.iter().chain(plan_chunks.iter()) {
        let root = chunk
            .iter()
            .copied()
            .find(|&v| is_plan_vertex(v))
            .or_else(|| {
                chunk.iter().copied().find(|&v| {
                    let reduced = g
                        .incident_edges(v)
                        .iter()
                        .filter(|&&e| !skip.contains_edge(e))
                        .count();
                    reduced < delta
                })
            })
            .ok_or_else(|| {
                Error::Invariant("reduced chunk has no deficient vertex to root at".into())
            })?;
        let dist = reachable_subdivision_distances(g, root, &skip);
        let order = greedy_order(g, &dist, None)?;
        greedy_extend_into(g, lists, &order, coloring, Some(&dist))?;
    }

    for &v in &plan_vertices {
        coloring.unset(ElementId::Vertex(v));
    }
    let residual = residual_lists(g, lists, coloring, plan)?;

    match &plan.shape {
        PlanShape::Ring { positions } => {
            let gadget = RingGadget {
                vertex_lists: positions
                    .iter()
                    .map(|p| residual.list(ElementId::Vertex(p.vertex)).clone())
                    .collect(),
                edge_lists: positions
                    .iter()
                    .map(|p| residual.list(ElementId::Edge(p.cycle_edge)).clone())
                    .collect(),
                halfedge_lists: positions
                    .iter()
                    .map(|p| residual.list(ElementId::Edge(p.halfedge.edge)).clone())
                    .collect(),
            };
            let sol = solve_ring(&gadget)?;
            for (i, p) in positions.iter().enumerate() {
                coloring.set(ElementId::Vertex(p.vertex), sol.vertex_colors[i]);
                coloring.set(ElementId::Edge(p.cycle_edge), sol.edge_colors[i]);
                coloring.set(ElementId::Edge(p.halfedge.edge), sol.halfedge_colors[i]);
            }
        }
        shape => {
            let (kind, slots) = fixed_slots(shape);
            let lists_by_slot = slots
                .iter()
                .map(|&x| residual.list(x).clone())
                .collect::<Vec<_>>();
            let gadget = FixedGadget::new(kind, lists_by_slot)?;
            let colors = solve_fixed(&gadget)?;
            for (&x, &c) in slots.iter().zip(colors.iter()) {
                coloring.set(x, c);
            }
        }
    }
    Ok(())
}

/// Canonical slot order of a fixed shape, as elements of the host graph.
fn fixed_slots(shape: &PlanShape) -> (FixedGadgetKind, Vec<ElementId>) {
    use ElementId::{Edge, Vertex};
    match shape {
        PlanShape::DoubleEdge {
            thick,
            v1,
            v2,
            copies,
            h1,
            h2,
        } => {
            let kind = if *thick {
                FixedGadgetKind::DoubleEdgeThick
            } else {
                FixedGadgetKind::DoubleEdgeThin
            };
            (
                kind,
                vec![
                    Vertex(*v1),
                    Vertex(*v2),
                    Edge(copies[0]),
                    Edge(copies[1]),
                    Edge(h1.edge),
                    Edge(h2.edge),
                ],
            )
        }
        PlanShape::TriangleTwoThick {
            vertices,
            cycle_edges,
            halfedges,
        } => {
            let mut slots: Vec<ElementId> = vertices.iter().map(|&v| Vertex(v)).collect();
            slots.extend(cycle_edges.iter().map(|&e| Edge(e)));
            slots.extend(halfedges.iter().map(|h| Edge(h.edge)));
            (FixedGadgetKind::TriangleTwoThick, slots)
        }
        PlanShape::FourCycleTwoThick {
            vertices,
            cycle_edges,
            halfedges,
        } => {
            let mut slots: Vec<ElementId> = vertices.iter().map(|&v| Vertex(v)).collect();
            slots.extend(cycle_edges.iter().map(|&e| Edge(e)));
            slots.extend(halfedges.iter().map(|h| Edge(h.edge)));
            (FixedGadgetKind::FourCycleTwoThick, slots)
        }
        PlanShape::K4 { vertices, edges } => {
            let mut slots: Vec<ElementId> = vertices.iter().map(|&v| Vertex(v)).collect();
            slots.extend(edges.iter().map(|&e| Edge(e)));
            (FixedGadgetKind::K4, slots)
        }
        PlanShape::K33 {
            part_a,
            part_b,
            edges,
        } => {
            let mut slots: Vec<ElementId> = part_a
                .iter()
                .chain(part_b.iter())
                .map(|&v| Vertex(v))
                .collect();
            slots.extend(edges.iter().flatten().map(|&e| Edge(e)));
            (FixedGadgetKind::K33, slots)
        }
        PlanShape::Ring { .. } => unreachable!("rings are handled by the ring solver"),
    }
}
