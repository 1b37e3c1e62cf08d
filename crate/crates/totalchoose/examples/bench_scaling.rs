//! Measures per-element cost across growing random 3-regular graphs. Linear
//! running time shows up as near-constant probes and time per element.

use totalchoose::bench::run_bench;

fn main() {
    let sizes = [1 << 10, 1 << 12, 1 << 14];
    let report = run_bench(3, &sizes, 2024).expect("bench");
    println!(
        "{:>8} {:>9} {:>10} {:>10} {:>12} {:>9}",
        "n", "elements", "millis", "probes", "probes/elem", "us/elem"
    );
    for p in &report.points {
        println!(
            "{:>8} {:>9} {:>10.2} {:>10} {:>12.2} {:>9.3}",
            p.n,
            p.elements,
            p.millis,
            p.probes,
            p.probes_per_element(),
            1e3 * p.millis_per_element()
        );
    }
    println!(
        "probe ratio {:.3}, time ratio {:.3} (1.0 would be perfectly linear)",
        report.probe_ratio(),
        report.time_ratio()
    );
}
