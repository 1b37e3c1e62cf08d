//! Seeded instance generators (pairing model) and a few named graphs.
//! Every generator is deterministic for a fixed seed and produces loopless,
//! connected graphs; infeasible parameters are input errors.

use crate::error::{Error, Result};
use crate::graph::{ColorSet, ListAssignment, Multigraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_ATTEMPTS: usize = 5000;

/// Pairs the stubs into edges, then repairs loops, forbidden pairs, and (in
/// simple mode) duplicates by swapping stub positions with random partners.
/// Far more reliable than whole-shuffle rejection at higher degrees.
fn pair_stubs<R: Rng>(
    stub_counts: &[usize],
    planted: &[(usize, usize)],
    forbid_pair: Option<(usize, usize)>,
    simple: bool,
    rng: &mut R,
) -> Option<Vec<(usize, usize)>> {
    let mut stubs: Vec<usize> = Vec::new();
    for (v, &c) in stub_counts.iter().enumerate() {
        stubs.extend(std::iter::repeat_n(v, c));
    }
    stubs.shuffle(rng);
    let pair_count = stubs.len() / 2;
    if pair_count > 0 {
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        for _round in 0..200 {
            let mut seen: std::collections::HashMap<(usize, usize), usize> = planted
                .iter()
                .map(|&(a, b)| (key(a, b), usize::MAX))
                .collect();
            let mut bad: Vec<usize> = Vec::new();
            for i in 0..pair_count {
                let (a, b) = (stubs[2 * i], stubs[2 * i + 1]);
                let is_loop = a == b;
                let forbidden = !is_loop && forbid_pair == Some(key(a, b));
                let duplicate = !is_loop && simple && *seen.entry(key(a, b)).or_insert(i) != i;
                if is_loop || forbidden || duplicate {
                    bad.push(i);
                }
            }
            if bad.is_empty() {
                break;
            }
            for &i in &bad {
                let j = rng.random_range(0..pair_count);
                stubs.swap(2 * i + 1, 2 * j + 1);
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = planted.to_vec();
    let mut used: std::collections::HashSet<(usize, usize)> = if simple {
        planted.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect()
    } else {
        Default::default()
    };
    for pair in stubs.chunks(2) {
        let (a, b) = (pair[0], pair[1]);
        if a == b {
            return None;
        }
        let k = (a.min(b), a.max(b));
        if simple && !used.insert(k) {
            return None;
        }
        if forbid_pair == Some(k) {
            return None;
        }
        edges.push((a, b));
    }
    Some(edges)
}

fn finish(n: usize, edges: Vec<(usize, usize)>) -> Option<Multigraph> {
    let g = Multigraph::new(n, &edges).ok()?;
    if g.is_connected() {
        Some(g)
    } else {
        None
    }
}

/// A connected simple `d`-regular graph on `n` vertices via the pairing
/// model, resampled until loop-free, parallel-free, and connected.
pub fn gen_random_regular(n: usize, d: usize, seed: u64) -> Result<Multigraph> {
    if n == 0 || d == 0 || d >= n || !(n * d).is_multiple_of(2) {
        return Err(Error::BadGeneratorInput(format!(
            "no simple {d}-regular graph on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let counts = vec![d; n];
    for _ in 0..MAX_ATTEMPTS {
        if let Some(edges) = pair_stubs(&counts, &[], None, true, &mut rng) {
            if let Some(g) = finish(n, edges) {
                return Ok(g);
            }
        }
    }
    Err(Error::BadGeneratorInput(format!(
        "pairing model failed to produce a connected simple {d}-regular graph on {n} vertices"
    )))
}

/// A connected `delta`-regular loopless multigraph. Disjoint vertex pairs are
/// planted as parallel pairs with probability `double_edge_prob`; the rest of
/// the stubs are paired freely, so higher multiplicities can also occur.
pub fn gen_random_multigraph(
    n: usize,
    delta: usize,
    double_edge_prob: f64,
    seed: u64,
) -> Result<Multigraph> {
    if n < 2
        || delta < 2
        || !(n * delta).is_multiple_of(2)
        || !(0.0..=1.0).contains(&double_edge_prob)
    {
        return Err(Error::BadGeneratorInput(format!(
            "no {delta}-regular multigraph on {n} vertices (or bad probability)"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut counts = vec![delta; n];
        let mut planted = Vec::new();
        let mut i = 0;
        while i + 1 < n {
            if rng.random_bool(double_edge_prob) {
                planted.push((i, i + 1));
                planted.push((i, i + 1));
                counts[i] -= 2;
                counts[i + 1] -= 2;
            }
            i += 2;
        }
        if let Some(edges) = pair_stubs(&counts, &planted, None, false, &mut rng) {
            if let Some(g) = finish(n, edges) {
                return Ok(g);
            }
        }
    }
    Err(Error::BadGeneratorInput(format!(
        "failed to produce a connected {delta}-regular multigraph on {n} vertices"
    )))
}

/// A connected `delta`-regular multigraph with one planted edge of exactly
/// the given multiplicity between vertices 0 and 1.
pub fn gen_with_multiedge(
    n: usize,
    delta: usize,
    multiplicity: usize,
    seed: u64,
) -> Result<Multigraph> {
    if n < 2 || multiplicity < 2 || multiplicity > delta || !(n * delta).is_multiple_of(2) {
        return Err(Error::BadGeneratorInput(format!(
            "no {delta}-regular multigraph on {n} vertices with a multiplicity-{multiplicity} edge"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts = vec![delta; n];
    counts[0] = delta - multiplicity;
    counts[1] = delta - multiplicity;
    let planted: Vec<(usize, usize)> = (0..multiplicity).map(|_| (0, 1)).collect();
    for _ in 0..MAX_ATTEMPTS {
        if let Some(edges) = pair_stubs(&counts, &planted, Some((0, 1)), false, &mut rng) {
            if let Some(g) = finish(n, edges) {
                return Ok(g);
            }
        }
    }
    Err(Error::BadGeneratorInput(format!(
        "failed to produce a connected multigraph with a multiplicity-{multiplicity} edge"
    )))
}

/// A connected simple graph that is `delta`-regular except for the two
/// endpoints of one removed edge, which are deficient.
pub fn gen_deficient(n: usize, delta: usize, seed: u64) -> Result<Multigraph> {
    if n == 0 || delta == 0 || delta >= n || !(n * delta).is_multiple_of(2) {
        return Err(Error::BadGeneratorInput(format!(
            "no simple {delta}-regular graph on {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let counts = vec![delta; n];
    for _ in 0..MAX_ATTEMPTS {
        if let Some(mut edges) = pair_stubs(&counts, &[], None, true, &mut rng) {
            edges.pop();
            if let Some(g) = finish(n, edges) {
                return Ok(g);
            }
        }
    }
    Err(Error::BadGeneratorInput(format!(
        "failed to produce a connected deficient graph on {n} vertices"
    )))
}

/// Gives every element a list of `size` distinct colors drawn from
/// `0..palette`, vertices first, in index order.
pub fn gen_lists(g: &Multigraph, size: usize, palette: u32, seed: u64) -> Result<ListAssignment> {
    if size == 0 || size > palette as usize {
        return Err(Error::BadGeneratorInput(format!(
            "cannot draw {size} distinct colors from a palette of {palette}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || {
        let mut pool: Vec<u32> = (0..palette).collect();
        pool.shuffle(&mut rng);
        pool.truncate(size);
        ColorSet::new(pool)
    };
    let vertex_lists = (0..g.vertex_count()).map(|_| draw()).collect();
    let edge_lists = (0..g.edge_count()).map(|_| draw()).collect();
    ListAssignment::new(g, vertex_lists, edge_lists)
}

/// Fixed graphs used throughout the tests, examples, and trial harness.
pub mod named {
    use crate::graph::Multigraph;

    pub fn complete(n: usize) -> Multigraph {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Multigraph::new(n, &edges).unwrap()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Multigraph::new(a + b, &edges).unwrap()
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
    pub fn petersen() -> Multigraph {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
        ];
        Multigraph::new(10, &edges).unwrap()
    }

    /// The prism over a `k`-gon: two `k`-cycles joined by a perfect matching.
    /// `circular_ladder(4)` is the cube graph.
    pub fn circular_ladder(k: usize) -> Multigraph {
        let mut edges = Vec::new();
        for i in 0..k {
            edges.push((i, (i + 1) % k));
        }
        for i in 0..k {
            edges.push((k + i, k + (i + 1) % k));
        }
        for i in 0..k {
            edges.push((i, k + i));
        }
        Multigraph::new(2 * k, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Multigraph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::new(n, &edges).unwrap()
    }
}
