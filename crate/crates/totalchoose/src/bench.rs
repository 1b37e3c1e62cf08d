//! Scaling harness for the linear-time claim: colors random regular graphs
//! of increasing size and reports wall time and adjacency probes per element.
//! Probe counts make the check robust to machine noise; the claim shows up
//! as near-constant per-element cost across sizes.

use crate::color::total_color;
use crate::error::{Error, Result};
use crate::generate::{gen_lists, gen_random_regular};
use crate::verify::verify_total_coloring;
use std::time::Instant;

/// One measured size.
#[derive(Debug, Clone)]
pub struct BenchPoint {
    pub n: usize,
    pub elements: usize,
    pub millis: f64,
    pub probes: u64,
}

impl BenchPoint {
    pub fn probes_per_element(&self) -> f64 {
        self.probes as f64 / self.elements as f64
    }

    pub fn millis_per_element(&self) -> f64 {
        self.millis / self.elements as f64
    }
}

/// Per-size measurements for one degree, sizes strictly increasing.
#[derive(Debug, Clone)]
pub struct BenchReport {
    pub delta: usize,
    pub points: Vec<BenchPoint>,
}

impl BenchReport {
    /// Largest over smallest probes-per-element across sizes.
    pub fn probe_ratio(&self) -> f64 {
        ratio(self.points.iter().map(BenchPoint::probes_per_element))
    }

    /// Largest over smallest wall-time-per-element across sizes.
    pub fn time_ratio(&self) -> f64 {
        ratio(self.points.iter().map(BenchPoint::millis_per_element))
    }
}

fn ratio(values: impl Iterator<Item = f64>) -> f64 {
    let vs: Vec<f64> = values.collect();
    let max = vs.iter().copied().fold(f64::NAN, f64::max);
    let min = vs.iter().copied().fold(f64::NAN, f64::min);
    max / min
}

/// Colors one seeded random `delta`-regular graph per size and measures the
/// run. Lists have size `2 * delta - 1` over a palette of `4 * delta`.
pub fn run_bench(delta: usize, sizes: &[usize], seed: u64) -> Result<BenchReport> {
    if sizes.is_empty() || sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::BadGeneratorInput(
            "bench sizes must be strictly increasing".into(),
        ));
    }
    let mut points = Vec::new();
    for (i, &n) in sizes.iter().enumerate() {
        let g = gen_random_regular(n, delta, seed.wrapping_add(i as u64))?;
        let lists = gen_lists(&g, 2 * delta - 1, 4 * delta as u32, seed ^ 0x9e37)?;
        g.reset_probes();
        let start = Instant::now();
        let coloring = total_color(&g, &lists)?;
        let millis = start.elapsed().as_secs_f64() * 1e3;
        let probes = g.probes();
        if let Err(v) = verify_total_coloring(&g, &lists, &coloring, true) {
            return Err(Error::Invariant(format!("bench coloring invalid: {v}")));
        }
        points.push(BenchPoint {
            n,
            elements: g.element_count(),
            millis,
            probes,
        });
    }
    Ok(BenchReport { delta, points })
}
