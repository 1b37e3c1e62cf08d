//! Finds an induced cycle C such that any two of its vertices with a common
//! neighbor off C force |V(C)| <= 4. A double edge counts as a cycle of
//! length 2 and is always preferred. All searches are breadth-first and run
//! in time linear in the graph size for fixed maximum degree.

use crate::error::{Error, Result};
use crate::graph::{Component, Multigraph};
use std::collections::VecDeque;

/// A cycle as a cyclically ordered vertex sequence plus its edge ids:
/// `edges[i]` joins `vertices[i]` and `vertices[(i+1) % len]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Checks the witness structure: distinct vertices, edges joining
    /// consecutive pairs, and (for simple graphs) chordlessness.
    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        let m = self.len();
        if m < 2 || self.edges.len() != m {
            return Err(Error::Invariant("malformed cycle witness".into()));
        }
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != m {
            return Err(Error::Invariant("cycle witness repeats a vertex".into()));
        }
        for i in 0..m {
            let (a, b) = g.endpoints(self.edges[i]);
            let (u, v) = (self.vertices[i], self.vertices[(i + 1) % m]);
            if (a, b) != (u, v) && (a, b) != (v, u) {
                return Err(Error::Invariant(format!(
                    "cycle edge {} does not join vertices {u} and {v}",
                    self.edges[i]
                )));
            }
        }
        if m > 2 && !is_chordless(g, &self.vertices) {
            return Err(Error::Invariant("cycle witness has a chord".into()));
        }
        Ok(())
    }
}

fn is_chordless(g: &Multigraph, cycle: &[usize]) -> bool {
    let m = cycle.len();
    for i in 0..m {
        for j in i + 1..m {
            let consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if !consecutive && g.has_edge_between(cycle[i], cycle[j]) {
                return false;
            }
        }
    }
    true
}

/// A 2-cycle formed by the first parallel pair, scanning edges in id order;
/// absent when the graph is simple.
pub fn find_multi_edge(g: &Multigraph) -> Option<CycleWitness> {
    find_multi_edge_among(g, (0..g.edge_count()).collect::<Vec<_>>().as_slice())
}

pub(crate) fn find_multi_edge_among(g: &Multigraph, edges: &[usize]) -> Option<CycleWitness> {
    for &e in edges {
        let group = g.parallel_group(e);
        if group.len() >= 2 {
            let mut ids: Vec<usize> = group.to_vec();
            ids.sort_unstable();
            let (u, v) = g.endpoints(ids[0]);
            return Some(CycleWitness {
                vertices: vec![u, v],
                edges: vec![ids[0], ids[1]],
            });
        }
    }
    None
}

/// A minimum-length cycle through `v`, or an error if `v` lies on none.
///
/// For each edge e = vu at `v`, a BFS in G - e finds the shortest v-u path
/// avoiding e; the best path plus e is a shortest cycle through `v` (any such
/// cycle contains some edge at `v`, and removing it leaves exactly such a
/// path). The result is chordless: a chord plus the arc through `v` would be
/// a strictly shorter cycle through `v`. That is checked, not assumed.
pub fn shortest_cycle_through(g: &Multigraph, v: usize) -> Result<CycleWitness> {
    let incident: Vec<usize> = g.incident_edges(v).to_vec();
    let mut best: Option<CycleWitness> = None;
    for &e in &incident {
        let u = g.opposite(e, v);
        if let Some(path) = shortest_path_avoiding(g, v, u, e) {
            let len = path.vertices.len();
            if best.as_ref().is_none_or(|b| len < b.len()) {
                // cycle = path v..u plus the avoided edge closing u -> v
                let mut edges = path.edges;
                edges.push(e);
                best = Some(CycleWitness {
                    vertices: path.vertices,
                    edges,
                });
            }
        }
    }
    let cycle = best.ok_or(Error::NoCycleThrough(v))?;
    if cycle.len() > 2 && !is_chordless(g, &cycle.vertices) {
        return Err(Error::Invariant(format!(
            "shortest cycle through {v} has a chord"
        )));
    }
    Ok(cycle)
}

struct PathWitness {
    vertices: Vec<usize>, // from the source to the target, inclusive
    edges: Vec<usize>,    // edges[i] joins vertices[i] and vertices[i+1]
}

fn shortest_path_avoiding(
    g: &Multigraph,
    from: usize,
    to: usize,
    avoid: usize,
) -> Option<PathWitness> {
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()]; // (vertex, edge)
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &e in g.incident_edges(x) {
            if e == avoid {
                continue;
            }
            let y = g.opposite(e, x);
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, e));
                queue.push_back(y);
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut vertices = vec![to];
    let mut edges = Vec::new();
    let mut cur = to;
    while let Some((p, e)) = parent[cur] {
        vertices.push(p);
        edges.push(e);
        cur = p;
    }
    vertices.reverse();
    edges.reverse();
    Some(PathWitness { vertices, edges })
}

/// Specializes a shortest cycle `d` through some vertex: when two of its
/// vertices share a neighbor `y` off the cycle, they are either adjacent
/// (giving a triangle through `y`) or two apart on the cycle (giving a
/// 4-cycle through `y` and the midpoint); otherwise `d` is returned as is.
pub fn specialize_cycle(g: &Multigraph, d: &CycleWitness) -> Result<CycleWitness> {
    if d.len() <= 2 {
        return Ok(d.clone());
    }
    let m = d.len();
    let Some((y, positions)) = shared_off_cycle_neighbor(g, d) else {
        return Ok(d.clone());
    };
    // prefer a cyclically adjacent pair of attachment points: triangle
    for a in 0..positions.len() {
        for b in a + 1..positions.len() {
            let (i, j) = (positions[a], positions[b]);
            let gap = cyclic_gap(i, j, m);
            if gap == 1 {
                let (w, x) = (d.vertices[i], d.vertices[j]);
                return Ok(triangle_witness(g, w, x, y));
            }
        }
    }
    // otherwise some pair sits two apart; its midpoint closes a 4-cycle
    for a in 0..positions.len() {
        for b in a + 1..positions.len() {
            let (i, j) = (positions[a], positions[b]);
            if cyclic_gap(i, j, m) != 2 {
                continue;
            }
            let mid = midpoint_position(i, j, m);
            let (w, x, z) = (d.vertices[i], d.vertices[j], d.vertices[mid]);
            if g.has_edge_between(y, z) {
                // the would-be 4-cycle has a chord, which closes a triangle
                return Ok(triangle_witness(g, y, z, w));
            }
            let ew_y = g.first_edge_between(w, y).unwrap();
            let ey_x = g.first_edge_between(y, x).unwrap();
            let ex_z = g.first_edge_between(x, z).unwrap();
            let ez_w = g.first_edge_between(z, w).unwrap();
            return Ok(CycleWitness {
                vertices: vec![w, y, x, z],
                edges: vec![ew_y, ey_x, ex_z, ez_w],
            });
        }
    }
    // a shortest cycle admits no attachment pair further than two apart
    Err(Error::Invariant(format!(
        "off-cycle vertex {y} attaches to the cycle only at distant positions"
    )))
}

fn triangle_witness(g: &Multigraph, a: usize, b: usize, c: usize) -> CycleWitness {
    CycleWitness {
        vertices: vec![a, b, c],
        edges: vec![
            g.first_edge_between(a, b).unwrap(),
            g.first_edge_between(b, c).unwrap(),
            g.first_edge_between(c, a).unwrap(),
        ],
    }
}

fn cyclic_gap(i: usize, j: usize, m: usize) -> usize {
    let d = j.abs_diff(i);
    d.min(m - d)
}

fn midpoint_position(i: usize, j: usize, m: usize) -> usize {
    // positions are two apart cyclically; the midpoint is between them
    if j.abs_diff(i) == 2 {
        (i + j) / 2
    } else {
        // wrapped around: the midpoint is the last position between j and i
        (j + 1) % m
    }
}

/// Smallest off-cycle vertex adjacent to at least two cycle vertices,
/// with the sorted positions it attaches to.
fn shared_off_cycle_neighbor(g: &Multigraph, d: &CycleWitness) -> Option<(usize, Vec<usize>)> {
    let mut position_of = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in d.vertices.iter().enumerate() {
        position_of[v] = i;
    }
    let mut attach: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (i, &v) in d.vertices.iter().enumerate() {
        for &e in g.incident_edges(v) {
            let y = g.opposite(e, v);
            if position_of[y] == usize::MAX {
                let ps = attach.entry(y).or_default();
                if !ps.contains(&i) {
                    ps.push(i);
                }
            }
        }
    }
    attach.into_iter().find_map(|(y, mut ps)| {
        if ps.len() >= 2 {
            ps.sort_unstable();
            Some((y, ps))
        } else {
            None
        }
    })
}

/// The special induced cycle of a connected regular graph: a parallel pair if
/// one exists, otherwise the specialization of a shortest cycle through the
/// lowest-indexed vertex.
pub fn find_special_cycle(g: &Multigraph) -> Result<CycleWitness> {
    let all: Vec<usize> = (0..g.edge_count()).collect();
    let vertices: Vec<usize> = (0..g.vertex_count()).collect();
    find_special_cycle_in(
        g,
        &Component {
            vertices,
            edges: all,
        },
    )
}

pub(crate) fn find_special_cycle_in(g: &Multigraph, comp: &Component) -> Result<CycleWitness> {
    if let Some(two) = find_multi_edge_among(g, &comp.edges) {
        return Ok(two);
    }
    let v = *comp
        .vertices
        .first()
        .ok_or_else(|| Error::Invariant("empty component".into()))?;
    let d = shortest_cycle_through(g, v)?;
    specialize_cycle(g, &d)
}
