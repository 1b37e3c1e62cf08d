//! Exercises the extension solvers directly: a ring instance solved by the
//! cyclic sweep, and one random instance of each fixed shape solved over
//! pruned lists. Thick halfedge pairs always come out distinct.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use totalchoose::gadget::{
    check_fixed_solution, check_ring_solution, sample_fixed_instance, sample_ring_instance,
    solve_fixed, solve_ring, FixedGadgetKind,
};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let ring = sample_ring_instance(6, 12, &mut rng);
    let sol = solve_ring(&ring).expect("ring instances at the size minima always solve");
    assert!(check_ring_solution(&ring, &sol));
    println!("ring of length 6:");
    println!("  vertices  {:?}", sol.vertex_colors);
    println!("  edges     {:?}", sol.edge_colors);
    println!("  halfedges {:?}", sol.halfedge_colors);

    for kind in FixedGadgetKind::ALL {
        let g = sample_fixed_instance(kind, 12, &mut rng);
        let colors = solve_fixed(&g).expect("fixed instances at the minima always solve");
        assert!(check_fixed_solution(&g, &colors));
        let thick = kind
            .thick_pair()
            .map(|(a, b)| format!(" thick pair ({}, {})", colors[a], colors[b]))
            .unwrap_or_default();
        println!("{:<22} -> {:?}{}", kind.name(), colors, thick);
    }
}
