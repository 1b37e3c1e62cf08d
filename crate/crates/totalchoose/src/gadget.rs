//! Solvers that extend a coloring to the uncolored subgraph H.
//!
//! The ring shape (a cycle with a halfedge at every vertex) is solved by
//! dynamic programming around the cycle. The six fixed shapes are solved by
//! bounded exhaustive search over pruned lists, except the thin double edge,
//! which follows a short constructive procedure. List sizes at the role
//! minima guarantee every instance is solvable, so an infeasible instance is
//! reported as an error and treated as a bug.

use crate::error::{Error, Result};
use crate::graph::ColorSet;
use crate::plan::Role;
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::BTreeMap;

/// Truncates each list to its role minimum, keeping the smallest colors.
/// A list already below its minimum is a structural error.
pub fn prune_lists(lists: &[ColorSet], minima: &[usize]) -> Result<Vec<ColorSet>> {
    debug_assert_eq!(lists.len(), minima.len());
    lists
        .iter()
        .zip(minima)
        .enumerate()
        .map(|(i, (l, &need))| {
            if l.len() < need {
                Err(Error::Invariant(format!(
                    "list {i} has {} colors, below the minimum {need}",
                    l.len()
                )))
            } else {
                Ok(l.truncated(need))
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Ring gadget
// ---------------------------------------------------------------------------

/// A cycle of length `m >= 3` with one halfedge per vertex. Position `i`
/// holds vertex `i`, the cycle edge from vertex `i` to vertex `i+1 mod m`,
/// and the halfedge at vertex `i`. Halfedges never conflict with each other;
/// the planner guarantees their outer endpoints are pairwise distinct.
#[derive(Debug, Clone)]
pub struct RingGadget {
    pub vertex_lists: Vec<ColorSet>,
    pub edge_lists: Vec<ColorSet>,
    pub halfedge_lists: Vec<ColorSet>,
}

impl RingGadget {
    pub fn len(&self) -> usize {
        self.vertex_lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_lists.is_empty()
    }

    fn validate(&self) -> Result<()> {
        let m = self.len();
        if m < 3 || self.edge_lists.len() != m || self.halfedge_lists.len() != m {
            return Err(Error::Invariant(format!(
                "ring needs three equal-length list tables of size >= 3, got {}/{}/{}",
                m,
                self.edge_lists.len(),
                self.halfedge_lists.len()
            )));
        }
        for i in 0..m {
            if self.vertex_lists[i].len() < 4
                || self.edge_lists[i].len() < 5
                || self.halfedge_lists[i].len() < 2
            {
                return Err(Error::Invariant(format!(
                    "ring position {i} violates the (4, 5, 2) list minima"
                )));
            }
        }
        Ok(())
    }
}

/// Colors for each ring position, parallel to the gadget's list tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSolution {
    pub vertex_colors: Vec<u32>,
    pub edge_colors: Vec<u32>,
    pub halfedge_colors: Vec<u32>,
}

/// The conflict relation of a ring of length `m`, over slots numbered
/// vertex `i` = `i`, cycle edge `i` = `m + i`, halfedge `i` = `2m + i`.
pub fn ring_conflict_pairs(m: usize) -> Vec<(usize, usize)> {
    let v = |i: usize| i % m;
    let e = |i: usize| m + i % m;
    let h = |i: usize| 2 * m + i % m;
    let mut pairs = Vec::new();
    for i in 0..m {
        pairs.push((v(i), e(i))); // vertex and its outgoing cycle edge
        pairs.push((v(i + 1), e(i))); // vertex and its incoming cycle edge
        pairs.push((v(i), h(i))); // vertex and its halfedge
        pairs.push((h(i), e(i))); // halfedge and both cycle edges at vertex i
        pairs.push((h(i + 1), e(i)));
        pairs.push((v(i), v(i + 1))); // consecutive vertices
        pairs.push((e(i), e(i + 1))); // consecutive cycle edges share vertex i+1
    }
    pairs.retain(|&(a, b)| a != b);
    for p in pairs.iter_mut() {
        *p = (p.0.min(p.1), p.0.max(p.1));
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// Solves a ring gadget by cutting the cycle at position 0: every valid
/// (vertex, edge, halfedge) triple there seeds a sweep over the remaining
/// positions with state (previous vertex color, previous edge color), with
/// halfedge feasibility folded into the transition; the wrap constraints are
/// applied at the last position. Only the smallest (4, 5, 2) colors of each
/// list are considered; the size guarantees keep that restriction solvable.
pub fn solve_ring(g: &RingGadget) -> Result<RingSolution> {
    g.validate()?;
    let m = g.len();
    let vl: Vec<ColorSet> = g.vertex_lists.iter().map(|l| l.truncated(4)).collect();
    let el: Vec<ColorSet> = g.edge_lists.iter().map(|l| l.truncated(5)).collect();
    let hl: Vec<ColorSet> = g.halfedge_lists.iter().map(|l| l.truncated(2)).collect();

    for v0 in vl[0].iter() {
        for e0 in el[0].iter().filter(|&c| c != v0) {
            for h0 in hl[0].iter().filter(|&c| c != v0 && c != e0) {
                if let Some(sol) = sweep_ring(m, &vl, &el, &hl, v0, e0, h0) {
                    return Ok(sol);
                }
            }
        }
    }
    Err(Error::Infeasible("ring"))
}

fn sweep_ring(
    m: usize,
    vl: &[ColorSet],
    el: &[ColorSet],
    hl: &[ColorSet],
    v0: u32,
    e0: u32,
    h0: u32,
) -> Option<RingSolution> {
    // layers[i - 1]: state (v_i, e_i) -> parent state (v_{i-1}, e_{i-1})
    let mut layers: Vec<BTreeMap<(u32, u32), (u32, u32)>> = Vec::with_capacity(m - 1);
    let mut prev: Vec<(u32, u32)> = vec![(v0, e0)];
    for i in 1..m {
        let last = i == m - 1;
        let mut layer: BTreeMap<(u32, u32), (u32, u32)> = BTreeMap::new();
        for &(pv, pe) in &prev {
            for vi in vl[i].iter() {
                if vi == pv || vi == pe {
                    continue;
                }
                if last && vi == v0 {
                    continue;
                }
                for ei in el[i].iter() {
                    if ei == pe || ei == vi {
                        continue;
                    }
                    if last && (ei == e0 || ei == v0 || ei == h0) {
                        continue;
                    }
                    if !hl[i].iter().any(|h| h != vi && h != pe && h != ei) {
                        continue;
                    }
                    layer.entry((vi, ei)).or_insert((pv, pe));
                }
            }
        }
        if layer.is_empty() {
            return None;
        }
        prev = layer.keys().copied().collect();
        layers.push(layer);
    }

    // walk parents back from the lexicographically first final state
    let mut states = vec![(0u32, 0u32); m];
    states[0] = (v0, e0);
    states[m - 1] = *layers[m - 2].keys().next().unwrap();
    for i in (1..m - 1).rev() {
        states[i] = layers[i][&states[i + 1]];
    }
    let vertex_colors: Vec<u32> = states.iter().map(|s| s.0).collect();
    let edge_colors: Vec<u32> = states.iter().map(|s| s.1).collect();
    let mut halfedge_colors = vec![h0];
    for i in 1..m {
        let (vi, ei) = states[i];
        let pe = states[i - 1].1;
        let hi = hl[i].iter().find(|&h| h != vi && h != pe && h != ei)?;
        halfedge_colors.push(hi);
    }
    Some(RingSolution {
        vertex_colors,
        edge_colors,
        halfedge_colors,
    })
}

/// Checks a ring solution against the lists and the ring conflict relation.
pub fn check_ring_solution(g: &RingGadget, sol: &RingSolution) -> bool {
    let m = g.len();
    if sol.vertex_colors.len() != m || sol.edge_colors.len() != m || sol.halfedge_colors.len() != m
    {
        return false;
    }
    let color = |slot: usize| -> u32 {
        if slot < m {
            sol.vertex_colors[slot]
        } else if slot < 2 * m {
            sol.edge_colors[slot - m]
        } else {
            sol.halfedge_colors[slot - 2 * m]
        }
    };
    for i in 0..m {
        if !g.vertex_lists[i].contains(sol.vertex_colors[i])
            || !g.edge_lists[i].contains(sol.edge_colors[i])
            || !g.halfedge_lists[i].contains(sol.halfedge_colors[i])
        {
            return false;
        }
    }
    ring_conflict_pairs(m)
        .into_iter()
        .all(|(a, b)| color(a) != color(b))
}

// ---------------------------------------------------------------------------
// Fixed gadgets
// ---------------------------------------------------------------------------

/// The six fixed uncolored-subgraph shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FixedGadgetKind {
    /// Parallel pair, halfedges at both endpoints meeting at one outer vertex.
    DoubleEdgeThick,
    /// Parallel pair, halfedges with distinct outer vertices.
    DoubleEdgeThin,
    /// Triangle; the halfedges at slots h0, h1 share an outer vertex.
    TriangleTwoThick,
    /// 4-cycle; the halfedges at the antipodal slots h0, h2 share an outer vertex.
    FourCycleTwoThick,
    /// Complete graph on four vertices.
    K4,
    /// Complete bipartite graph with parts of size three.
    K33,
}

impl FixedGadgetKind {
    pub const ALL: [FixedGadgetKind; 6] = [
        FixedGadgetKind::DoubleEdgeThick,
        FixedGadgetKind::DoubleEdgeThin,
        FixedGadgetKind::TriangleTwoThick,
        FixedGadgetKind::FourCycleTwoThick,
        FixedGadgetKind::K4,
        FixedGadgetKind::K33,
    ];

    pub fn slot_count(self) -> usize {
        self.slot_roles().len()
    }

    /// Roles in canonical slot order.
    ///
    /// Double edges: `[v1, v2, p1, p2, h1, h2]` with the parallel copies p1,
    /// p2. Triangle: `[v0, v1, v2, e01, e12, e20, h0, h1, h2]`. 4-cycle:
    /// `[v0..v3, e0..e3, h0..h3]` with edge `i` joining vertices `i, i+1`.
    /// K4: `[v0..v3, e01, e02, e03, e12, e13, e23]`. K33:
    /// `[a0..a2, b0..b2, e00, e01, .., e22]` with `e_ij` joining `a_i, b_j`.
    pub fn slot_roles(self) -> Vec<Role> {
        use Role::*;
        match self {
            FixedGadgetKind::DoubleEdgeThick => vec![
                FullVertex,
                FullVertex,
                FullEdge,
                FullEdge,
                ThickHalfedge,
                ThickHalfedge,
            ],
            FixedGadgetKind::DoubleEdgeThin => vec![
                FullVertex,
                FullVertex,
                FullEdge,
                FullEdge,
                ThinHalfedge,
                ThinHalfedge,
            ],
            FixedGadgetKind::TriangleTwoThick => vec![
                FullVertex,
                FullVertex,
                FullVertex,
                FullEdge,
                FullEdge,
                FullEdge,
                ThickHalfedge,
                ThickHalfedge,
                ThinHalfedge,
            ],
            FixedGadgetKind::FourCycleTwoThick => vec![
                FullVertex,
                FullVertex,
                FullVertex,
                FullVertex,
                FullEdge,
                FullEdge,
                FullEdge,
                FullEdge,
                ThickHalfedge,
                ThinHalfedge,
                ThickHalfedge,
                ThinHalfedge,
            ],
            FixedGadgetKind::K4 => {
                let mut roles = vec![FullVertex; 4];
                roles.extend(vec![FullEdge; 6]);
                roles
            }
            FixedGadgetKind::K33 => {
                let mut roles = vec![FullVertex; 6];
                roles.extend(vec![FullEdge; 9]);
                roles
            }
        }
    }

    /// The conflict relation over canonical slots, including the mutual
    /// conflict of a thick halfedge pair (they meet at the shared colored
    /// outer vertex, so they must differ).
    pub fn conflicts(self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = match self {
            FixedGadgetKind::DoubleEdgeThick | FixedGadgetKind::DoubleEdgeThin => {
                let (v1, v2, p1, p2, h1, h2) = (0, 1, 2, 3, 4, 5);
                let mut p = vec![
                    (v1, v2),
                    (v1, p1),
                    (v1, p2),
                    (v2, p1),
                    (v2, p2),
                    (p1, p2),
                    (h1, v1),
                    (h1, p1),
                    (h1, p2),
                    (h2, v2),
                    (h2, p1),
                    (h2, p2),
                ];
                if self == FixedGadgetKind::DoubleEdgeThick {
                    p.push((h1, h2));
                }
                p
            }
            FixedGadgetKind::TriangleTwoThick => {
                let mut p = Vec::new();
                // triangle core: vertices 0..3, edge slot 3+i joins i, i+1 mod 3
                for i in 0..3 {
                    let e = 3 + i;
                    p.push((i, (i + 1) % 3));
                    p.push((i, e));
                    p.push(((i + 1) % 3, e));
                    p.push((e, 3 + (i + 1) % 3));
                    let h = 6 + i;
                    p.push((h, i));
                    p.push((h, 3 + i)); // outgoing cycle edge at vertex i
                    p.push((h, 3 + (i + 2) % 3)); // incoming cycle edge
                }
                p.push((6, 7)); // thick pair
                p
            }
            FixedGadgetKind::FourCycleTwoThick => {
                let mut p = Vec::new();
                for i in 0..4 {
                    let e = 4 + i;
                    p.push((i, (i + 1) % 4));
                    p.push((i, e));
                    p.push(((i + 1) % 4, e));
                    p.push((e, 4 + (i + 1) % 4));
                    let h = 8 + i;
                    p.push((h, i));
                    p.push((h, 4 + i));
                    p.push((h, 4 + (i + 3) % 4));
                }
                p.push((8, 10)); // thick pair at antipodal vertices
                p
            }
            FixedGadgetKind::K4 => {
                let vertex_pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
                let mut p = Vec::new();
                for (slot, &(a, b)) in vertex_pairs.iter().enumerate() {
                    let e = 4 + slot;
                    p.push((a, b));
                    p.push((a, e));
                    p.push((b, e));
                    for (slot2, &(c, d)) in vertex_pairs.iter().enumerate().skip(slot + 1) {
                        if a == c || a == d || b == c || b == d {
                            p.push((e, 4 + slot2));
                        }
                    }
                }
                p
            }
            FixedGadgetKind::K33 => {
                let mut p = Vec::new();
                let e = |i: usize, j: usize| 6 + 3 * i + j;
                for i in 0..3 {
                    for j in 0..3 {
                        p.push((i, 3 + j)); // a_i adjacent to b_j
                        p.push((i, e(i, j)));
                        p.push((3 + j, e(i, j)));
                        for j2 in j + 1..3 {
                            p.push((e(i, j), e(i, j2))); // share a_i
                        }
                        for i2 in i + 1..3 {
                            p.push((e(i, j), e(i2, j))); // share b_j
                        }
                    }
                }
                p
            }
        };
        for p in pairs.iter_mut() {
            *p = (p.0.min(p.1), p.0.max(p.1));
        }
        pairs.sort_unstable();
        pairs.dedup();
        pairs
    }

    /// The two thick halfedge slots, for the shapes that have them.
    pub fn thick_pair(self) -> Option<(usize, usize)> {
        match self {
            FixedGadgetKind::DoubleEdgeThick => Some((4, 5)),
            FixedGadgetKind::TriangleTwoThick => Some((6, 7)),
            FixedGadgetKind::FourCycleTwoThick => Some((8, 10)),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FixedGadgetKind::DoubleEdgeThick => "double-edge-thick",
            FixedGadgetKind::DoubleEdgeThin => "double-edge-thin",
            FixedGadgetKind::TriangleTwoThick => "triangle-two-thick",
            FixedGadgetKind::FourCycleTwoThick => "four-cycle-two-thick",
            FixedGadgetKind::K4 => "k4",
            FixedGadgetKind::K33 => "k33",
        }
    }
}

/// A fixed-shape instance: lists in the kind's canonical slot order.
#[derive(Debug, Clone)]
pub struct FixedGadget {
    pub kind: FixedGadgetKind,
    pub lists: Vec<ColorSet>,
}

impl FixedGadget {
    pub fn new(kind: FixedGadgetKind, lists: Vec<ColorSet>) -> Result<Self> {
        if lists.len() != kind.slot_count() {
            return Err(Error::Invariant(format!(
                "{} needs {} lists, got {}",
                kind.name(),
                kind.slot_count(),
                lists.len()
            )));
        }
        Ok(FixedGadget { kind, lists })
    }

    fn minima(&self) -> Vec<usize> {
        self.kind
            .slot_roles()
            .into_iter()
            .map(crate::greedy::role_minimum)
            .collect()
    }
}

/// Solves a fixed gadget over its pruned lists. The thin double edge follows
/// the constructive procedure in [`solve_double_edge_thin`]; every other kind
/// is a bounded exhaustive search in slot order, colors ascending.
pub fn solve_fixed(g: &FixedGadget) -> Result<Vec<u32>> {
    let pruned = prune_lists(&g.lists, &g.minima())?;
    if g.kind == FixedGadgetKind::DoubleEdgeThin {
        return solve_double_edge_thin_pruned(&pruned);
    }
    let conflicts = g.kind.conflicts();
    let slots = pruned.len();
    let mut neighbors: Vec<Vec<usize>> = vec![Vec::new(); slots];
    for &(a, b) in &conflicts {
        neighbors[a].push(b);
        neighbors[b].push(a);
    }
    let mut colors: Vec<Option<u32>> = vec![None; slots];
    if backtrack(&pruned, &neighbors, &mut colors, 0) {
        Ok(colors.into_iter().map(Option::unwrap).collect())
    } else {
        Err(Error::Infeasible(g.kind.name()))
    }
}

fn backtrack(
    lists: &[ColorSet],
    neighbors: &[Vec<usize>],
    colors: &mut Vec<Option<u32>>,
    slot: usize,
) -> bool {
    if slot == lists.len() {
        return true;
    }
    'colors: for c in lists[slot].iter() {
        for &n in &neighbors[slot] {
            if colors[n] == Some(c) {
                continue 'colors;
            }
        }
        colors[slot] = Some(c);
        if backtrack(lists, neighbors, colors, slot + 1) {
            return true;
        }
        colors[slot] = None;
    }
    false
}

/// The constructive procedure for the thin double edge, slots
/// `[v1, v2, p1, p2, h1, h2]` pruned to sizes (4, 4, 5, 5, 2, 2).
///
/// Since `|L(v1)| + |L(h2)| > |L(p1)|`, either v1 and h2 share an available
/// color (used on both; they do not conflict) or some color of their union
/// misses `L(p1)` (used on its owner, the other colored freely). Either way
/// `L(p1)` keeps 4 colors clear of v1 and h2, so after coloring h1, v2, p2
/// greedily a color remains for p1.
pub fn solve_double_edge_thin(g: &FixedGadget) -> Result<Vec<u32>> {
    if g.kind != FixedGadgetKind::DoubleEdgeThin {
        return Err(Error::Invariant(format!(
            "constructive double-edge procedure called on {}",
            g.kind.name()
        )));
    }
    let pruned = prune_lists(&g.lists, &g.minima())?;
    solve_double_edge_thin_pruned(&pruned)
}

fn solve_double_edge_thin_pruned(l: &[ColorSet]) -> Result<Vec<u32>> {
    let (lv1, lv2, lp1, lp2, lh1, lh2) = (&l[0], &l[1], &l[2], &l[3], &l[4], &l[5]);
    let common = lv1.iter().find(|&c| lh2.contains(c));
    let (cv1, ch2) = match common {
        Some(c) => (c, c),
        None => {
            let c = lv1
                .iter()
                .chain(lh2.iter())
                .filter(|&c| !lp1.contains(c))
                .min()
                .ok_or(Error::Infeasible("double-edge-thin: no usable seed color"))?;
            if lv1.contains(c) {
                (c, lh2.iter().next().unwrap())
            } else {
                (lv1.iter().next().unwrap(), c)
            }
        }
    };
    // greedy tail: h1 avoids v1; v2 avoids v1, h2; p2 avoids all four
    let ch1 = lh1
        .first_available(&[cv1])
        .ok_or(Error::Infeasible("double-edge-thin: h1"))?;
    let cv2 = lv2
        .first_available(&[cv1, ch2])
        .ok_or(Error::Infeasible("double-edge-thin: v2"))?;
    let cp2 = lp2
        .first_available(&[cv1, cv2, ch1, ch2])
        .ok_or(Error::Infeasible("double-edge-thin: p2"))?;
    let cp1 = lp1
        .first_available(&[cv1, cv2, ch1, ch2, cp2])
        .ok_or(Error::Infeasible("double-edge-thin: p1"))?;
    Ok(vec![cv1, cv2, cp1, cp2, ch1, ch2])
}

/// Checks a fixed-gadget solution against the lists and conflict relation.
pub fn check_fixed_solution(g: &FixedGadget, colors: &[u32]) -> bool {
    if colors.len() != g.kind.slot_count() {
        return false;
    }
    for (list, &c) in g.lists.iter().zip(colors) {
        if !list.contains(c) {
            return false;
        }
    }
    g.kind
        .conflicts()
        .into_iter()
        .all(|(a, b)| colors[a] != colors[b])
}

// ---------------------------------------------------------------------------
// Instance sampling (used by the trial harness and the acceptance sweep)
// ---------------------------------------------------------------------------

fn sample_list<R: Rng>(rng: &mut R, size: usize, palette: u32) -> ColorSet {
    let mut pool: Vec<u32> = (0..palette).collect();
    pool.shuffle(rng);
    pool.truncate(size);
    ColorSet::new(pool)
}

/// A random fixed-gadget instance with every list at exactly its role
/// minimum, drawn from `0..palette`.
pub fn sample_fixed_instance<R: Rng>(
    kind: FixedGadgetKind,
    palette: u32,
    rng: &mut R,
) -> FixedGadget {
    let lists = kind
        .slot_roles()
        .into_iter()
        .map(|r| sample_list(rng, crate::greedy::role_minimum(r), palette))
        .collect();
    FixedGadget { kind, lists }
}

/// A random ring instance of length `m` with lists at the (4, 5, 2) minima.
pub fn sample_ring_instance<R: Rng>(m: usize, palette: u32, rng: &mut R) -> RingGadget {
    RingGadget {
        vertex_lists: (0..m).map(|_| sample_list(rng, 4, palette)).collect(),
        edge_lists: (0..m).map(|_| sample_list(rng, 5, palette)).collect(),
        halfedge_lists: (0..m).map(|_| sample_list(rng, 2, palette)).collect(),
    }
}
