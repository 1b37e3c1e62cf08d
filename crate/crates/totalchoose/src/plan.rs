//! Plans the uncolored subgraph H before any coloring happens: which vertices
//! and edges stay uncolored, which incident edges act as halfedges, and which
//! closed shape the gadget solver will receive.

use crate::cycle::CycleWitness;
use crate::error::{Error, Result};
use crate::graph::{ElementId, Multigraph};

/// The role an uncolored element plays in the gadget, which fixes the minimum
/// residual list size it is guaranteed: full edges keep 5 colors, vertices 4,
/// thick halfedges 3, thin halfedges 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    FullVertex,
    FullEdge,
    ThickHalfedge,
    ThinHalfedge,
}

/// An uncolored edge with exactly one endpoint in H. Thick halfedges come in
/// pairs whose outer endpoints coincide (and stay colored), so the pair is
/// mutually conflicting and must receive distinct colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlannedHalfedge {
    pub edge: usize,
    pub inner: usize,
    pub outer: usize,
    pub thick: bool,
}

/// One position of a ring plan: a cycle vertex, the cycle edge leaving it
/// toward the next position, and its halfedge.
#[derive(Debug, Clone, Copy)]
pub struct RingPosition {
    pub vertex: usize,
    pub cycle_edge: usize,
    pub halfedge: PlannedHalfedge,
}

/// The closed enumeration of uncolored-subgraph shapes.
#[derive(Debug, Clone)]
pub enum PlanShape {
    /// A cycle of length >= 3 with a thin halfedge at every vertex; the outer
    /// endpoints are pairwise distinct.
    Ring { positions: Vec<RingPosition> },
    /// A parallel pair with one halfedge at each endpoint; thick when the two
    /// halfedges meet at a common outer vertex.
    DoubleEdge {
        thick: bool,
        v1: usize,
        v2: usize,
        copies: [usize; 2],
        h1: PlannedHalfedge,
        h2: PlannedHalfedge,
    },
    /// A triangle whose halfedges at positions 0 and 1 share an outer vertex.
    TriangleTwoThick {
        vertices: [usize; 3],
        cycle_edges: [usize; 3],
        halfedges: [PlannedHalfedge; 3],
    },
    /// A 4-cycle whose halfedges at the antipodal positions 0 and 2 share an
    /// outer vertex.
    FourCycleTwoThick {
        vertices: [usize; 4],
        cycle_edges: [usize; 4],
        halfedges: [PlannedHalfedge; 4],
    },
    /// A complete graph on four vertices, no halfedges. `edges` is in pair
    /// order (01, 02, 03, 12, 13, 23).
    K4 {
        vertices: [usize; 4],
        edges: [usize; 6],
    },
    /// A complete bipartite graph on parts of size three, no halfedges.
    /// `edges[i][j]` joins `part_a[i]` and `part_b[j]`.
    K33 {
        part_a: [usize; 3],
        part_b: [usize; 3],
        edges: [[usize; 3]; 3],
    },
}

/// The uncolored subgraph H: its shape, elements, halfedge roles, and the
/// designated root for the greedy pass over the rest of the graph.
#[derive(Debug, Clone)]
pub struct GadgetPlan {
    pub shape: PlanShape,
    pub root: usize,
}

impl GadgetPlan {
    fn new(shape: PlanShape) -> Self {
        let root = match &shape {
            PlanShape::Ring { positions } => positions.iter().map(|p| p.vertex).min().unwrap(),
            PlanShape::DoubleEdge { v1, v2, .. } => *v1.min(v2),
            PlanShape::TriangleTwoThick { vertices, .. } => *vertices.iter().min().unwrap(),
            PlanShape::FourCycleTwoThick { vertices, .. } => *vertices.iter().min().unwrap(),
            PlanShape::K4 { vertices, .. } => *vertices.iter().min().unwrap(),
            PlanShape::K33 { part_a, part_b, .. } => {
                *part_a.iter().chain(part_b.iter()).min().unwrap()
            }
        };
        GadgetPlan { shape, root }
    }

    pub fn uncolored_vertices(&self) -> Vec<usize> {
        match &self.shape {
            PlanShape::Ring { positions } => positions.iter().map(|p| p.vertex).collect(),
            PlanShape::DoubleEdge { v1, v2, .. } => vec![*v1, *v2],
            PlanShape::TriangleTwoThick { vertices, .. } => vertices.to_vec(),
            PlanShape::FourCycleTwoThick { vertices, .. } => vertices.to_vec(),
            PlanShape::K4 { vertices, .. } => vertices.to_vec(),
            PlanShape::K33 { part_a, part_b, .. } => {
                part_a.iter().chain(part_b.iter()).copied().collect()
            }
        }
    }

    /// Every uncolored edge: full edges and halfedges alike.
    pub fn uncolored_edges(&self) -> Vec<usize> {
        let mut out = self.full_edges();
        out.extend(self.halfedges().iter().map(|h| h.edge));
        out
    }

    /// Uncolored edges with both endpoints uncolored.
    pub fn full_edges(&self) -> Vec<usize> {
        match &self.shape {
            PlanShape::Ring { positions } => positions.iter().map(|p| p.cycle_edge).collect(),
            PlanShape::DoubleEdge { copies, .. } => copies.to_vec(),
            PlanShape::TriangleTwoThick { cycle_edges, .. } => cycle_edges.to_vec(),
            PlanShape::FourCycleTwoThick { cycle_edges, .. } => cycle_edges.to_vec(),
            PlanShape::K4 { edges, .. } => edges.to_vec(),
            PlanShape::K33 { edges, .. } => edges.iter().flatten().copied().collect(),
        }
    }

    pub fn halfedges(&self) -> Vec<PlannedHalfedge> {
        match &self.shape {
            PlanShape::Ring { positions } => positions.iter().map(|p| p.halfedge).collect(),
            PlanShape::DoubleEdge { h1, h2, .. } => vec![*h1, *h2],
            PlanShape::TriangleTwoThick { halfedges, .. } => halfedges.to_vec(),
            PlanShape::FourCycleTwoThick { halfedges, .. } => halfedges.to_vec(),
            PlanShape::K4 { .. } | PlanShape::K33 { .. } => Vec::new(),
        }
    }

    /// Every uncolored element paired with its role.
    pub fn elements_with_roles(&self) -> Vec<(ElementId, Role)> {
        let mut out: Vec<(ElementId, Role)> = self
            .uncolored_vertices()
            .into_iter()
            .map(|v| (ElementId::Vertex(v), Role::FullVertex))
            .collect();
        out.extend(
            self.full_edges()
                .into_iter()
                .map(|e| (ElementId::Edge(e), Role::FullEdge)),
        );
        out.extend(self.halfedges().into_iter().map(|h| {
            let role = if h.thick {
                Role::ThickHalfedge
            } else {
                Role::ThinHalfedge
            };
            (ElementId::Edge(h.edge), role)
        }));
        out
    }

    pub fn contains(&self, x: ElementId) -> bool {
        match x {
            ElementId::Vertex(v) => self.uncolored_vertices().contains(&v),
            ElementId::Edge(e) => self.uncolored_edges().contains(&e),
        }
    }
}

/// The plan for a multiplicity-2 edge in a regular graph: both endpoints, both
/// copies, and one extra incident edge per endpoint, thick when those two
/// extra edges meet at a common vertex.
pub fn plan_double_edge(g: &Multigraph, e: usize) -> Result<GadgetPlan> {
    let group: Vec<usize> = {
        let mut ids = g.parallel_group(e).to_vec();
        ids.sort_unstable();
        ids
    };
    if group.len() != 2 {
        return Err(Error::Invariant(format!(
            "edge {e} has multiplicity {}, expected exactly 2",
            group.len()
        )));
    }
    let (u, v) = g.endpoints(group[0]);
    let (v1, v2) = (u.min(v), u.max(v));
    let pick = |at: usize| -> Result<usize> {
        g.incident_edges(at)
            .iter()
            .copied()
            .filter(|ie| !group.contains(ie))
            .min()
            .ok_or_else(|| {
                Error::Invariant(format!(
                    "vertex {at} has no edge beyond the parallel pair; graph is not regular of degree >= 3"
                ))
            })
    };
    let e1 = pick(v1)?;
    let e2 = pick(v2)?;
    let w1 = g.opposite(e1, v1);
    let w2 = g.opposite(e2, v2);
    let thick = w1 == w2;
    let h1 = PlannedHalfedge {
        edge: e1,
        inner: v1,
        outer: w1,
        thick,
    };
    let h2 = PlannedHalfedge {
        edge: e2,
        inner: v2,
        outer: w2,
        thick,
    };
    Ok(GadgetPlan::new(PlanShape::DoubleEdge {
        thick,
        v1,
        v2,
        copies: [group[0], group[1]],
        h1,
        h2,
    }))
}

/// Result of planning from a special cycle, with the number of times the
/// 4-cycle had to be replaced on the way.
#[derive(Debug)]
pub struct PlanOutcome {
    pub plan: GadgetPlan,
    pub replacements: usize,
}

/// Builds the plan for a special cycle in a regular simple graph, following
/// the full case analysis on the cycle length. Long cycles become rings.
/// Triangles become rings, two-thick triangles, or a K4 when all chosen
/// incident edges meet at one apex. 4-cycles become rings, two-thick 4-cycles,
/// a K33 when both antipodal pairs of chosen edges meet at adjacent vertices,
/// or are replaced by a nearby induced 4-cycle and replanned when the meeting
/// vertices are non-adjacent.
pub fn plan_from_cycle(g: &Multigraph, c: &CycleWitness) -> Result<PlanOutcome> {
    let mut cycle = c.clone();
    let mut replacements = 0usize;
    for _revision in 0..4 {
        if cycle.len() < 3 {
            return Err(Error::Invariant(
                "cycle plans need length at least 3; parallel pairs take the double-edge plan"
                    .into(),
            ));
        }
        if cycle.len() > 4 {
            return Ok(PlanOutcome {
                plan: ring_plan(g, &cycle)?,
                replacements,
            });
        }
        if cycle.len() == 3 {
            return Ok(PlanOutcome {
                plan: triangle_plan(g, &cycle)?,
                replacements,
            });
        }
        // 4-cycle: adjacent pairs with a common outside neighbor restart as a triangle
        if let Some((w, x, y)) = adjacent_pair_with_outside_neighbor(g, &cycle) {
            cycle = triangle_cycle(g, w, x, y);
            continue;
        }
        match four_cycle_plan(g, &cycle)? {
            FourCyclePlan::Done(plan) => {
                return Ok(PlanOutcome { plan, replacements });
            }
            FourCyclePlan::Replace(next) => {
                replacements += 1;
                cycle = next;
            }
        }
    }
    Err(Error::PlanLoopExceeded)
}

fn triangle_cycle(g: &Multigraph, w: usize, x: usize, y: usize) -> CycleWitness {
    CycleWitness {
        vertices: vec![w, x, y],
        edges: vec![
            g.first_edge_between(w, x).unwrap(),
            g.first_edge_between(x, y).unwrap(),
            g.first_edge_between(y, w).unwrap(),
        ],
    }
}

fn adjacent_pair_with_outside_neighbor(
    g: &Multigraph,
    cycle: &CycleWitness,
) -> Option<(usize, usize, usize)> {
    let m = cycle.len();
    for i in 0..m {
        let w = cycle.vertices[i];
        let x = cycle.vertices[(i + 1) % m];
        let mut best: Option<usize> = None;
        for &e in g.incident_edges(w) {
            let y = g.opposite(e, w);
            if !cycle.contains_vertex(y) && g.has_edge_between(x, y) && best.is_none_or(|b| y < b) {
                best = Some(y);
            }
        }
        if let Some(y) = best {
            return Some((w, x, y));
        }
    }
    None
}

fn non_cycle_options(g: &Multigraph, cycle: &CycleWitness) -> Result<Vec<Vec<usize>>> {
    cycle
        .vertices
        .iter()
        .map(|&v| {
            let mut opts: Vec<usize> = g
                .incident_edges(v)
                .iter()
                .copied()
                .filter(|e| !cycle.edges.contains(e))
                .collect();
            opts.sort_unstable();
            if opts.is_empty() {
                Err(Error::Invariant(format!(
                    "cycle vertex {v} has no incident edge beyond the cycle"
                )))
            } else {
                Ok(opts)
            }
        })
        .collect()
}

fn shared_pair_count(g: &Multigraph, cycle: &CycleWitness, selection: &[usize]) -> usize {
    let outers: Vec<usize> = selection
        .iter()
        .zip(&cycle.vertices)
        .map(|(&e, &v)| g.opposite(e, v))
        .collect();
    let mut count = 0;
    for i in 0..outers.len() {
        for j in i + 1..outers.len() {
            if outers[i] == outers[j] {
                count += 1;
            }
        }
    }
    count
}

/// Enumerates every choice of one non-cycle edge per cycle vertex and returns
/// the lexicographically first choice with the fewest shared outer endpoints.
fn best_selection(g: &Multigraph, cycle: &CycleWitness) -> Result<(Vec<usize>, usize)> {
    let options = non_cycle_options(g, cycle)?;
    let mut indices = vec![0usize; options.len()];
    let mut best: Option<(Vec<usize>, usize)> = None;
    loop {
        let selection: Vec<usize> = indices
            .iter()
            .zip(&options)
            .map(|(&i, opts)| opts[i])
            .collect();
        let count = shared_pair_count(g, cycle, &selection);
        if best.as_ref().is_none_or(|(_, c)| count < *c) {
            best = Some((selection, count));
            if count == 0 {
                break;
            }
        }
        // odometer step
        let mut pos = indices.len();
        loop {
            if pos == 0 {
                return Ok(best.unwrap());
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < options[pos].len() {
                break;
            }
            indices[pos] = 0;
        }
    }
    Ok(best.unwrap())
}

fn make_halfedge(g: &Multigraph, inner: usize, edge: usize, thick: bool) -> PlannedHalfedge {
    PlannedHalfedge {
        edge,
        inner,
        outer: g.opposite(edge, inner),
        thick,
    }
}

fn ring_plan(g: &Multigraph, cycle: &CycleWitness) -> Result<GadgetPlan> {
    let (selection, shared) = best_selection(g, cycle)?;
    if shared != 0 {
        return Err(Error::Invariant(format!(
            "ring halfedges share outer endpoints on a cycle of length {}",
            cycle.len()
        )));
    }
    let positions: Vec<RingPosition> = (0..cycle.len())
        .map(|i| RingPosition {
            vertex: cycle.vertices[i],
            cycle_edge: cycle.edges[i],
            halfedge: make_halfedge(g, cycle.vertices[i], selection[i], false),
        })
        .collect();
    Ok(GadgetPlan::new(PlanShape::Ring { positions }))
}

fn ring_plan_from_selection(
    g: &Multigraph,
    cycle: &CycleWitness,
    selection: &[usize],
) -> GadgetPlan {
    let positions: Vec<RingPosition> = (0..cycle.len())
        .map(|i| RingPosition {
            vertex: cycle.vertices[i],
            cycle_edge: cycle.edges[i],
            halfedge: make_halfedge(g, cycle.vertices[i], selection[i], false),
        })
        .collect();
    GadgetPlan::new(PlanShape::Ring { positions })
}

fn triangle_plan(g: &Multigraph, cycle: &CycleWitness) -> Result<GadgetPlan> {
    let (selection, shared) = best_selection(g, cycle)?;
    let outers: Vec<usize> = selection
        .iter()
        .zip(&cycle.vertices)
        .map(|(&e, &v)| g.opposite(e, v))
        .collect();
    match shared {
        0 => Ok(ring_plan_from_selection(g, cycle, &selection)),
        1 => {
            // rotate so the sharing pair sits at positions 0 and 1
            let rot = match sharing_positions(&outers).unwrap() {
                (0, 1) => 0,
                (1, 2) => 1,
                _ => 2, // the pair (0, 2) is cyclically (2, 0)
            };
            let idx = |k: usize| (rot + k) % 3;
            let vertices = [
                cycle.vertices[idx(0)],
                cycle.vertices[idx(1)],
                cycle.vertices[idx(2)],
            ];
            let cycle_edges = [
                cycle.edges[idx(0)],
                cycle.edges[idx(1)],
                cycle.edges[idx(2)],
            ];
            let halfedges = [
                make_halfedge(g, vertices[0], selection[idx(0)], true),
                make_halfedge(g, vertices[1], selection[idx(1)], true),
                make_halfedge(g, vertices[2], selection[idx(2)], false),
            ];
            Ok(GadgetPlan::new(PlanShape::TriangleTwoThick {
                vertices,
                cycle_edges,
                halfedges,
            }))
        }
        3 => {
            let apex = outers[0];
            let vs = [
                cycle.vertices[0],
                cycle.vertices[1],
                cycle.vertices[2],
                apex,
            ];
            let mut edges = [0usize; 6];
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            for (slot, &(i, j)) in pairs.iter().enumerate() {
                edges[slot] = g.first_edge_between(vs[i], vs[j]).ok_or_else(|| {
                    Error::Invariant(format!(
                        "expected an edge between vertices {} and {}",
                        vs[i], vs[j]
                    ))
                })?;
            }
            Ok(GadgetPlan::new(PlanShape::K4 {
                vertices: vs,
                edges,
            }))
        }
        _ => Err(Error::Invariant(format!(
            "impossible shared-endpoint count {shared} on a triangle"
        ))),
    }
}

fn sharing_positions(outers: &[usize]) -> Option<(usize, usize)> {
    for i in 0..outers.len() {
        for j in i + 1..outers.len() {
            if outers[i] == outers[j] {
                return Some((i, j));
            }
        }
    }
    None
}

enum FourCyclePlan {
    Done(GadgetPlan),
    Replace(CycleWitness),
}

fn four_cycle_plan(g: &Multigraph, cycle: &CycleWitness) -> Result<FourCyclePlan> {
    let (selection, shared) = best_selection(g, cycle)?;
    let outers: Vec<usize> = selection
        .iter()
        .zip(&cycle.vertices)
        .map(|(&e, &v)| g.opposite(e, v))
        .collect();
    match shared {
        0 => Ok(FourCyclePlan::Done(ring_plan_from_selection(
            g, cycle, &selection,
        ))),
        1 => {
            let (i, j) = sharing_positions(&outers).unwrap();
            if (j - i) % 2 != 0 {
                return Err(Error::Invariant(
                    "adjacent cycle vertices share an outer endpoint after the triangle check"
                        .into(),
                ));
            }
            // rotate so the sharing (antipodal) pair sits at positions 0 and 2
            let rot = i;
            let idx = |k: usize| (rot + k) % 4;
            let vertices = [
                cycle.vertices[idx(0)],
                cycle.vertices[idx(1)],
                cycle.vertices[idx(2)],
                cycle.vertices[idx(3)],
            ];
            let cycle_edges = [
                cycle.edges[idx(0)],
                cycle.edges[idx(1)],
                cycle.edges[idx(2)],
                cycle.edges[idx(3)],
            ];
            let halfedges = [
                make_halfedge(g, vertices[0], selection[idx(0)], true),
                make_halfedge(g, vertices[1], selection[idx(1)], false),
                make_halfedge(g, vertices[2], selection[idx(2)], true),
                make_halfedge(g, vertices[3], selection[idx(3)], false),
            ];
            Ok(FourCyclePlan::Done(GadgetPlan::new(
                PlanShape::FourCycleTwoThick {
                    vertices,
                    cycle_edges,
                    halfedges,
                },
            )))
        }
        2 => {
            // both antipodal pairs meet: at u for positions {0,2}, at v for {1,3}
            if outers[0] != outers[2] || outers[1] != outers[3] {
                return Err(Error::Invariant(
                    "two shared pairs on a 4-cycle must be the antipodal ones".into(),
                ));
            }
            let u = outers[0];
            let v = outers[1];
            if u == v {
                return Err(Error::Invariant(
                    "all four chosen edges meet at one vertex; adjacent pairs should have restarted".into(),
                ));
            }
            if g.has_edge_between(u, v) {
                let part_a = [cycle.vertices[0], cycle.vertices[2], v];
                let part_b = [cycle.vertices[1], cycle.vertices[3], u];
                let mut edges = [[0usize; 3]; 3];
                for (i, &a) in part_a.iter().enumerate() {
                    for (j, &b) in part_b.iter().enumerate() {
                        edges[i][j] = g.first_edge_between(a, b).ok_or_else(|| {
                            Error::Invariant(format!(
                                "expected an edge between vertices {a} and {b}"
                            ))
                        })?;
                    }
                }
                Ok(FourCyclePlan::Done(GadgetPlan::new(PlanShape::K33 {
                    part_a,
                    part_b,
                    edges,
                })))
            } else {
                // replace the cycle: swap u in for the smaller of the two
                // cycle vertices not adjacent to it
                let keep_pos = if cycle.vertices[1] < cycle.vertices[3] {
                    3
                } else {
                    1
                };
                let keep = cycle.vertices[keep_pos];
                let (e_v2_keep, e_keep_v0) = if keep_pos == 3 {
                    (cycle.edges[2], cycle.edges[3])
                } else {
                    (cycle.edges[1], cycle.edges[0])
                };
                let next = CycleWitness {
                    vertices: vec![cycle.vertices[0], u, cycle.vertices[2], keep],
                    edges: vec![selection[0], selection[2], e_v2_keep, e_keep_v0],
                };
                next.validate(g)?;
                Ok(FourCyclePlan::Replace(next))
            }
        }
        _ => Err(Error::Invariant(format!(
            "impossible shared-endpoint count {shared} on a 4-cycle"
        ))),
    }
}
