//! End-to-end pipeline tests on targeted constructions, plus property tests
//! for the graph-level invariants, checked against the independent oracles in
//! `common`.

mod common;

use common::*;
use proptest::prelude::*;
use totalchoose::color::{total_color_with_stats, Branch};
use totalchoose::cycle::find_special_cycle;
use totalchoose::generate::{gen_deficient, gen_lists, gen_with_multiedge, named};
use totalchoose::graph::{ColorSet, ElementId, ListAssignment, Multigraph, PartialTotalColoring};
use totalchoose::verify::verify_total_coloring;

fn five_lists(g: &Multigraph, seed: u64) -> ListAssignment {
    gen_lists(g, 5, 12, seed).unwrap()
}

fn assert_branch(g: &Multigraph, lists: &ListAssignment, branch: Branch) {
    let (coloring, stats) = total_color_with_stats(g, lists).unwrap();
    assert_eq!(verify_total_coloring(g, lists, &coloring, true), Ok(()));
    assert!(
        stats.count(branch) > 0,
        "expected branch {:?}, saw {:?}",
        branch,
        stats.branches_hit()
    );
    // generous linear work bound per run
    let size = (g.vertex_count() + g.edge_count()) as u64;
    let bound = 200 * g.max_degree() as u64 * size;
    assert!(
        stats.probes <= bound,
        "{} probes on {} elements",
        stats.probes,
        size
    );
}

#[test]
fn branch_double_edge_thick() {
    let g = double_edge_thick_graph();
    assert_branch(&g, &five_lists(&g, 1), Branch::DoubleEdgeThick);
}

#[test]
fn branch_double_edge_thin() {
    let g = double_edge_thin_graph();
    assert_branch(&g, &five_lists(&g, 2), Branch::DoubleEdgeThin);
}

#[test]
fn branch_triangle_two_thick() {
    let g = triangle_two_thick_graph();
    assert_branch(&g, &five_lists(&g, 3), Branch::TriangleTwoThick);
}

#[test]
fn branch_four_cycle_two_thick() {
    let g = four_cycle_two_thick_graph();
    assert_branch(&g, &five_lists(&g, 4), Branch::FourCycleTwoThick);
}

#[test]
fn branch_cycle_replacement() {
    let g = replacement_graph();
    assert_branch(&g, &five_lists(&g, 5), Branch::CycleReplacement);
}

#[test]
fn branch_k4() {
    let g = named::complete(4);
    assert_branch(&g, &five_lists(&g, 6), Branch::K4);
}

#[test]
fn branch_k33() {
    let g = named::complete_bipartite(3, 3);
    assert_branch(&g, &five_lists(&g, 7), Branch::K33);
}

#[test]
fn branch_ring_three() {
    let g = named::circular_ladder(3);
    assert_branch(&g, &five_lists(&g, 8), Branch::RingThree);
}

#[test]
fn branch_ring_four() {
    let g = named::circular_ladder(4);
    assert_branch(&g, &five_lists(&g, 9), Branch::RingFour);
}

#[test]
fn branch_ring_long() {
    let g = named::petersen();
    assert_branch(&g, &five_lists(&g, 10), Branch::RingLong);
}

#[test]
fn branch_greedy_deficient() {
    let g = gen_deficient(12, 3, 0).unwrap();
    assert_branch(&g, &five_lists(&g, 11), Branch::Greedy);
}

#[test]
fn branch_greedy_heavy_multiedge() {
    let g = triple_edge_graph();
    assert_branch(&g, &five_lists(&g, 12), Branch::Greedy);
}

#[test]
fn heavy_multiedge_inside_a_regular_graph() {
    for seed in 0..5 {
        let g = gen_with_multiedge(10, 4, 3, seed).unwrap();
        let lists = gen_lists(&g, 7, 16, seed).unwrap();
        assert_branch(&g, &lists, Branch::Greedy);
    }
}

#[test]
fn colors_a_graph_with_an_isolated_vertex_component() {
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    edges.push((5, 6)); // K4, an isolated vertex 4, and a lone edge
    let g = Multigraph::new(7, &edges).unwrap();
    let lists = five_lists(&g, 20);
    let (coloring, _) = total_color_with_stats(&g, &lists).unwrap();
    assert_eq!(verify_total_coloring(&g, &lists, &coloring, true), Ok(()));
}

#[test]
fn colors_a_component_with_two_separate_double_edges() {
    // one doubled pair is planned, the other is handled by the greedy pass
    let edges = vec![(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)];
    let g = Multigraph::new(4, &edges).unwrap();
    for v in 0..4 {
        assert_eq!(g.degree(v), 3);
    }
    let lists = five_lists(&g, 21);
    let (coloring, stats) = total_color_with_stats(&g, &lists).unwrap();
    assert_eq!(verify_total_coloring(&g, &lists, &coloring, true), Ok(()));
    assert!(stats.count(Branch::DoubleEdgeThick) + stats.count(Branch::DoubleEdgeThin) > 0);
}

#[test]
fn special_cycles_on_named_graphs_satisfy_the_contract() {
    for g in [
        named::petersen(),
        named::complete(4),
        named::complete_bipartite(3, 3),
        named::complete_bipartite(4, 4),
        named::circular_ladder(3),
        named::circular_ladder(4),
        named::circular_ladder(7),
    ] {
        let c = find_special_cycle(&g).unwrap();
        assert!(special_cycle_property_holds(&g, &c));
    }
}

#[test]
fn k44_special_cycle_is_a_four_cycle() {
    let g = named::complete_bipartite(4, 4);
    let c = find_special_cycle(&g).unwrap();
    assert_eq!(c.len(), 4);
}

#[test]
fn shortest_cycle_length_matches_brute_force_on_small_regular_graphs() {
    for seed in 0..60u64 {
        let n = 6 + (seed as usize % 5) * 2;
        let g = totalchoose::generate::gen_random_regular(n, 3, seed).unwrap();
        let got = totalchoose::cycle::shortest_cycle_through(&g, 0).unwrap();
        let want = brute_shortest_cycle_through(&g, 0).unwrap();
        assert_eq!(got.len(), want, "seed {seed}");
    }
}

// --- property tests ---------------------------------------------------------

/// Loopless multigraphs on up to 7 vertices with up to 12 edge instances.
fn small_multigraph() -> impl Strategy<Value = Multigraph> {
    (2usize..=7)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n - 1), 0..=12)))
        .prop_map(|(n, raw)| {
            let edges: Vec<(usize, usize)> = raw
                .into_iter()
                .map(|(a, b)| if b >= a { (a, b + 1) } else { (a, b) })
                .collect();
            Multigraph::new(n, &edges).unwrap()
        })
}

proptest! {
    #[test]
    fn total_neighbors_match_the_subdivision_walk(g in small_multigraph()) {
        // total-graph adjacency is exactly distance <= 2 in the subdivision graph
        for x in g.elements() {
            prop_assert_eq!(
                g.total_neighbors(x).unwrap(),
                neighbors_via_subdivision_graph(&g, x)
            );
        }
    }

    #[test]
    fn instance_files_roundtrip(g in small_multigraph(), with_lists in any::<bool>(), seed in 0u64..100) {
        use totalchoose::format::{read_instance, write_instance, InstanceFile, InstanceMeta};
        let lists = with_lists.then(|| gen_lists(&g, 3, 9, seed).unwrap());
        let inst = InstanceFile {
            graph: g,
            lists,
            meta: InstanceMeta { seed: Some(seed), delta: None, palette: None },
        };
        let text = write_instance(&inst);
        let back = read_instance(&text).unwrap();
        prop_assert_eq!(write_instance(&back), text);
    }

    #[test]
    fn total_neighbors_are_symmetric(g in small_multigraph()) {
        let elements: Vec<ElementId> = g.elements().collect();
        let neighborhoods: Vec<Vec<ElementId>> = elements
            .iter()
            .map(|&x| g.total_neighbors(x).unwrap())
            .collect();
        for (i, &x) in elements.iter().enumerate() {
            for (j, &y) in elements.iter().enumerate() {
                prop_assert_eq!(
                    neighborhoods[i].contains(&y),
                    neighborhoods[j].contains(&x),
                    "asymmetry between {} and {}", x, y
                );
            }
        }
    }

    #[test]
    fn total_neighborhoods_respect_the_degree_bound(g in small_multigraph()) {
        let bound = 2 * g.max_degree();
        for x in g.elements() {
            let n = g.total_neighbors(x).unwrap();
            prop_assert!(n.len() <= bound);
            match x {
                ElementId::Edge(e) => {
                    let (u, v) = g.endpoints(e);
                    if g.multiplicity(u, v) == 1 {
                        prop_assert_eq!(n.len(), g.degree(u) + g.degree(v));
                    }
                }
                ElementId::Vertex(v) => {
                    let parallel_free = g
                        .incident_edges(v)
                        .iter()
                        .all(|&e| {
                            let (a, b) = g.endpoints(e);
                            g.multiplicity(a, b) == 1
                        });
                    if parallel_free {
                        prop_assert_eq!(n.len(), 2 * g.degree(v));
                    } else {
                        prop_assert!(n.len() < 2 * g.degree(v));
                    }
                }
            }
        }
    }

    #[test]
    fn verifier_matches_the_explicit_total_graph(
        g in small_multigraph(),
        palette in 2u32..5,
        raw_colors in prop::collection::vec(prop::option::of(0u32..5), 0..25),
        require_complete in any::<bool>(),
    ) {
        let lists = ListAssignment::uniform(&g, ColorSet::range(palette));
        let mut coloring = PartialTotalColoring::empty(&g);
        for (x, c) in g.elements().zip(raw_colors) {
            if let Some(c) = c {
                coloring.set(x, c);
            }
        }
        let got = verify_total_coloring(&g, &lists, &coloring, require_complete).is_ok();
        let want = proper_by_explicit_total_graph(&g, &lists, &coloring, require_complete);
        prop_assert_eq!(got, want);
    }

    #[test]
    fn greedy_never_fails_under_the_deficiency_hypothesis(seed in 0u64..500) {
        // random graphs with a deficient vertex, lists of size 2*max_degree - 1
        let delta = 3 + (seed % 3) as usize;
        let n = 8 + (seed % 7) as usize * 2;
        let g = gen_deficient(n, delta, seed).unwrap();
        let lists = gen_lists(&g, 2 * delta - 1, 4 * delta as u32, seed ^ 0xabc).unwrap();
        let coloring = totalchoose::total_color(&g, &lists).unwrap();
        prop_assert_eq!(verify_total_coloring(&g, &lists, &coloring, true), Ok(()));
    }

    #[test]
    fn ring_solver_matches_backtracking_feasibility(seed in 0u64..300) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let m = 3 + (seed % 4) as usize;
        let g = totalchoose::gadget::sample_ring_instance(m, 12, &mut rng);
        let sol = totalchoose::gadget::solve_ring(&g);
        prop_assert!(sol.is_ok());
        prop_assert!(totalchoose::gadget::check_ring_solution(&g, &sol.unwrap()));
        prop_assert!(ring_feasible_by_backtracking(&g));
    }
}
