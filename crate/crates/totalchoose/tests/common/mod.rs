//! Shared fixtures and independent oracles for the integration tests.
//! Everything here is derived from first principles (endpoint lookups only),
//! not from the library's adjacency or solver code paths.

#![allow(dead_code)]

use totalchoose::graph::{ElementId, ListAssignment, Multigraph, PartialTotalColoring};

/// 3-regular: a triangle whose doubled edge forces the thick double-edge
/// shape (both extra edges meet at the third triangle vertex).
pub fn double_edge_thick_graph() -> Multigraph {
    let edges = [
        (0, 1),
        (0, 1),
        (0, 2),
        (1, 2),
        (2, 3),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 3),
        (4, 6),
        (5, 7),
    ];
    Multigraph::new(8, &edges).unwrap()
}

/// 3-regular: a doubled edge whose extra edges go to distinct vertices,
/// forcing the thin double-edge shape.
pub fn double_edge_thin_graph() -> Multigraph {
    let edges = [
        (0, 1),
        (0, 1),
        (0, 2),
        (1, 3),
        (2, 4),
        (2, 5),
        (3, 4),
        (3, 5),
        (4, 5),
    ];
    Multigraph::new(6, &edges).unwrap()
}

/// 3-regular: the special cycle is a triangle with exactly two of the three
/// chosen incident edges meeting at a common vertex.
pub fn triangle_two_thick_graph() -> Multigraph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 0),
        (0, 3),
        (1, 3),
        (2, 4),
        (3, 4),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (9, 5),
        (6, 8),
        (7, 9),
    ];
    Multigraph::new(10, &edges).unwrap()
}

/// 3-regular: the special cycle is a 4-cycle whose antipodal pair shares one
/// outer vertex, forcing the two-thick 4-cycle shape.
pub fn four_cycle_two_thick_graph() -> Multigraph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (0, 4),
        (2, 4),
        (1, 5),
        (3, 6),
        (5, 6),
        (4, 7),
        (5, 7),
        (6, 7),
    ];
    Multigraph::new(8, &edges).unwrap()
}

/// 3-regular: planning lands on a 4-cycle whose two antipodal chosen-edge
/// pairs meet at non-adjacent vertices, forcing one cycle replacement.
pub fn replacement_graph() -> Multigraph {
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (0, 4),
        (2, 4),
        (4, 5),
        (3, 5),
        (1, 6),
        (5, 9),
        (6, 7),
        (6, 8),
        (7, 8),
        (7, 9),
        (8, 9),
    ];
    Multigraph::new(10, &edges).unwrap()
}

/// Triple edge as its own component: the heavy-multiedge greedy path.
pub fn triple_edge_graph() -> Multigraph {
    Multigraph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap()
}

/// All elements within subdivision-graph distance two of `x`, computed by a
/// two-step walk over the subdivision graph built from endpoint lookups only.
/// This is the alternative characterization of total-graph adjacency.
pub fn neighbors_via_subdivision_graph(g: &Multigraph, x: ElementId) -> Vec<ElementId> {
    let step = |y: ElementId| -> Vec<ElementId> {
        match y {
            ElementId::Vertex(v) => (0..g.edge_count())
                .filter(|&e| {
                    let (a, b) = g.endpoints(e);
                    a == v || b == v
                })
                .map(ElementId::Edge)
                .collect(),
            ElementId::Edge(e) => {
                let (a, b) = g.endpoints(e);
                vec![ElementId::Vertex(a), ElementId::Vertex(b)]
            }
        }
    };
    let mut out: Vec<ElementId> = step(x)
        .into_iter()
        .flat_map(|y| {
            let mut two = step(y);
            two.push(y);
            two
        })
        .filter(|&y| y != x)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Total-graph adjacency straight from the definition, using only endpoint
/// lookups: vertices are adjacent when some edge joins them, a vertex and an
/// edge when it is an endpoint, two edges when they share an endpoint.
pub fn elements_adjacent(g: &Multigraph, x: ElementId, y: ElementId) -> bool {
    if x == y {
        return false;
    }
    match (x, y) {
        (ElementId::Vertex(a), ElementId::Vertex(b)) => (0..g.edge_count()).any(|e| {
            let (u, v) = g.endpoints(e);
            (u, v) == (a, b) || (u, v) == (b, a)
        }),
        (ElementId::Vertex(a), ElementId::Edge(e)) | (ElementId::Edge(e), ElementId::Vertex(a)) => {
            let (u, v) = g.endpoints(e);
            u == a || v == a
        }
        (ElementId::Edge(e1), ElementId::Edge(e2)) => {
            let (u1, v1) = g.endpoints(e1);
            let (u2, v2) = g.endpoints(e2);
            u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2
        }
    }
}

/// Proper-coloring check over the explicitly built total graph; the
/// reference the production verifier is compared against.
pub fn proper_by_explicit_total_graph(
    g: &Multigraph,
    lists: &ListAssignment,
    coloring: &PartialTotalColoring,
    require_complete: bool,
) -> bool {
    let elements: Vec<ElementId> = g.elements().collect();
    for &x in &elements {
        match coloring.get(x) {
            None => {
                if require_complete {
                    return false;
                }
            }
            Some(c) => {
                if !lists.get(x).contains(c) {
                    return false;
                }
            }
        }
    }
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            let (cx, cy) = (coloring.get(elements[i]), coloring.get(elements[j]));
            if let (Some(cx), Some(cy)) = (cx, cy) {
                if cx == cy && elements_adjacent(g, elements[i], elements[j]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Shortest cycle length through `v` by brute force: two incident edges plus
/// the shortest path between their far endpoints avoiding `v`.
pub fn brute_shortest_cycle_through(g: &Multigraph, v: usize) -> Option<usize> {
    let incident: Vec<usize> = g.incident_edges(v).to_vec();
    let mut best: Option<usize> = None;
    for i in 0..incident.len() {
        for j in i + 1..incident.len() {
            let a = g.opposite(incident[i], v);
            let b = g.opposite(incident[j], v);
            if a == b {
                // two parallel edges close a 2-cycle
                best = Some(best.map_or(2, |t| t.min(2)));
                continue;
            }
            if let Some(d) = dist_avoiding_vertex(g, a, b, v) {
                let len = d + 2;
                best = Some(best.map_or(len, |t| t.min(len)));
            }
        }
    }
    best
}

fn dist_avoiding_vertex(g: &Multigraph, from: usize, to: usize, banned: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            return Some(dist[x]);
        }
        for &e in g.incident_edges(x) {
            let y = g.opposite(e, x);
            if y != banned && dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Checks the special-cycle contract by brute force: the witness is a real
/// induced cycle, and if longer than 4 no two of its vertices share an
/// off-cycle neighbor.
pub fn special_cycle_property_holds(g: &Multigraph, c: &totalchoose::cycle::CycleWitness) -> bool {
    if c.validate(g).is_err() {
        return false;
    }
    if c.len() <= 4 {
        return true;
    }
    for y in 0..g.vertex_count() {
        if c.contains_vertex(y) {
            continue;
        }
        let on_cycle_neighbors = c
            .vertices
            .iter()
            .filter(|&&w| g.has_edge_between(y, w))
            .count();
        if on_cycle_neighbors >= 2 {
            return false;
        }
    }
    true
}

/// Brute-force feasibility for a ring instance, with the conflict relation
/// rebuilt from the shape definition position by position; independent of the
/// solver's sweep and of its conflict table.
pub fn ring_feasible_by_backtracking(g: &totalchoose::gadget::RingGadget) -> bool {
    let m = g.len();
    // assignment order: v0, e0, h0, v1, e1, h1, ...
    let mut assignment: Vec<u32> = Vec::with_capacity(3 * m);
    fn ok_so_far(a: &[u32], m: usize) -> bool {
        let idx = a.len() - 1;
        let (pos, role) = (idx / 3, idx % 3);
        let val = a[idx];
        let vertex = |i: usize| a.get(3 * i).copied();
        let edge = |i: usize| a.get(3 * i + 1).copied();
        match role {
            0 => {
                // vertex at pos: previous vertex, previous edge
                if pos > 0 && (vertex(pos - 1) == Some(val) || edge(pos - 1) == Some(val)) {
                    return false;
                }
                if pos == m - 1 && vertex(0) == Some(val) {
                    return false;
                }
                true
            }
            1 => {
                // cycle edge at pos: own vertex, previous edge; wrap at m-1
                if vertex(pos) == Some(val) {
                    return false;
                }
                if pos > 0 && edge(pos - 1) == Some(val) {
                    return false;
                }
                if pos == m - 1 {
                    let h0 = a.get(2).copied();
                    if vertex(0) == Some(val) || edge(0) == Some(val) || h0 == Some(val) {
                        return false;
                    }
                }
                true
            }
            _ => {
                // halfedge at pos: own vertex, both cycle edges at its vertex
                if vertex(pos) == Some(val) || edge(pos) == Some(val) {
                    return false;
                }
                if pos > 0 && edge(pos - 1) == Some(val) {
                    return false;
                }
                true
            }
        }
    }
    fn search(g: &totalchoose::gadget::RingGadget, a: &mut Vec<u32>, m: usize) -> bool {
        if a.len() == 3 * m {
            // the wrap constraint h0 vs e_{m-1} was applied when e_{m-1} was
            // placed; nothing is left to check
            return true;
        }
        let idx = a.len();
        let (pos, role) = (idx / 3, idx % 3);
        let list = match role {
            0 => &g.vertex_lists[pos],
            1 => &g.edge_lists[pos],
            _ => &g.halfedge_lists[pos],
        };
        for c in list.iter() {
            a.push(c);
            if ok_so_far(a, m) && search(g, a, m) {
                return true;
            }
            a.pop();
        }
        false
    }
    search(g, &mut assignment, m)
}
