//! Runs the induced-cycle finder on several graphs and checks its contract:
//! the returned cycle is induced, and when longer than four no two of its
//! vertices share a neighbor off the cycle.

use totalchoose::cycle::find_special_cycle;
use totalchoose::generate::{gen_random_regular, named};
use totalchoose::graph::Multigraph;

fn show(name: &str, g: &Multigraph) {
    let c = find_special_cycle(g).expect("special cycle");
    c.validate(g).expect("witness structure");
    let shared_off_cycle = (0..g.vertex_count())
        .filter(|&y| !c.contains_vertex(y))
        .any(|y| {
            c.vertices
                .iter()
                .filter(|&&w| g.has_edge_between(y, w))
                .count()
                >= 2
        });
    assert!(c.len() <= 4 || !shared_off_cycle);
    println!(
        "{name:<24} length {} cycle {:?}{}",
        c.len(),
        c.vertices,
        if shared_off_cycle {
            "  (shared outside neighbors, length <= 4 as promised)"
        } else {
            ""
        }
    );
}

fn main() {
    show("Petersen", &named::petersen());
    show("K4", &named::complete(4));
    show("K(3,3)", &named::complete_bipartite(3, 3));
    show("K(4,4)", &named::complete_bipartite(4, 4));
    show("cube", &named::circular_ladder(4));
    show("triangular prism", &named::circular_ladder(3));
    let doubled = Multigraph::new(3, &[(0, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
    show("triangle + doubled edge", &doubled);
    for seed in 0..3 {
        let g = gen_random_regular(64, 3, seed).unwrap();
        show(&format!("random 3-regular #{seed}"), &g);
    }
}
