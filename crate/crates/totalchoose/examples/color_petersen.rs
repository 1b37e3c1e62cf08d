//! Colors the Petersen graph end to end: random 5-lists on all 25 elements,
//! the full pipeline, then independent verification.

use totalchoose::color::total_color_with_stats;
use totalchoose::generate::{gen_lists, named};
use totalchoose::graph::ElementId;
use totalchoose::verify::verify_total_coloring;

fn main() {
    let g = named::petersen();
    let delta = g.max_degree();
    let lists = gen_lists(&g, 2 * delta - 1, 12, 42).expect("list generation");

    let (coloring, stats) = total_color_with_stats(&g, &lists).expect("coloring");
    verify_total_coloring(&g, &lists, &coloring, true).expect("verification");

    println!(
        "Petersen graph: {} vertices, {} edges, max degree {delta}, lists of size {}",
        g.vertex_count(),
        g.edge_count(),
        2 * delta - 1
    );
    for v in 0..g.vertex_count() {
        print!("v{v}={} ", coloring.get(ElementId::Vertex(v)).unwrap());
    }
    println!();
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        print!("{u}-{v}={} ", coloring.get(ElementId::Edge(e)).unwrap());
    }
    println!();
    println!(
        "dispatch: {:?}, {} adjacency probes",
        stats.branches_hit(),
        stats.probes
    );
}
