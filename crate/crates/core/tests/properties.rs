use proptest::prelude::*;

use cyclenum::connectivity::{blocks, bridges, cut_vertices, is_biconnected};
use cyclenum::generators::{
    gen_class_g, gen_class_h, gen_class_h_prime, gen_closed_necklace, gen_random_eulerian,
    gen_random_eulerian_with, subdivide,
};
use cyclenum::operators::{
    edge_identification, edge_separation_step, find_ve_separator, ve_separation_step,
    vertex_edge_identification, vertex_identification,
};
use cyclenum::oracle::{
    four_regular_block_check, is_class_h, is_class_h_prime, is_treewidth_at_most_2,
    oracle_cycle_numbers,
};
use cyclenum::recognition::{
    block_reports, decompose, is_cycle_number_unique, ve_components, ve_components_naive, Order,
};
use cyclenum::rng::Rng;
use cyclenum::{EdgeId, MultiGraph, VertexId};

fn components(g: &MultiGraph) -> usize {
    g.component_labels().1
}

/// Eulerian graph with a mix of structures; every third one has a dense core.
fn eulerian(seed: u64, n: usize) -> MultiGraph {
    match seed % 3 {
        0 => gen_class_g(n.max(2), seed).unwrap().0,
        1 => gen_random_eulerian_with(n, 2, 4, seed).unwrap(),
        _ => gen_random_eulerian(n.clamp(2, 6), 3, seed).unwrap(),
    }
}

fn anchor(g: &MultiGraph, rng: &mut Rng) -> (EdgeId, VertexId) {
    let e = EdgeId(rng.below(g.m()));
    let (a, b) = g.endpoints(e);
    (e, if rng.chance(1, 2) { a } else { b })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bridges_match_edge_removal(seed in 0u64..10_000, n in 2usize..9) {
        let mut g = eulerian(seed, n);
        // a pendant path creates bridges
        let tail = g.add_vertex();
        g.add_edge(VertexId(0), tail).unwrap();
        let expected: Vec<EdgeId> = g
            .edges()
            .filter(|&e| components(&g.remove_edges(&[e]).unwrap().0) > components(&g))
            .collect();
        prop_assert_eq!(bridges(&g), expected);
    }

    #[test]
    fn cut_vertices_match_vertex_removal(seed in 0u64..10_000, n in 2usize..10) {
        let g = eulerian(seed, n);
        let expected: Vec<VertexId> = g
            .vertices()
            .filter(|&v| components(&g.remove_vertex(v).unwrap().0) > components(&g))
            .collect();
        prop_assert_eq!(cut_vertices(&g).into_iter().collect::<Vec<_>>(), expected);
    }

    #[test]
    fn blocks_partition_edges(seed in 0u64..10_000, n in 2usize..12) {
        let g = eulerian(seed, n);
        let forest = blocks(&g);
        let mut seen = vec![0; g.m()];
        for b in &forest.blocks {
            prop_assert!(is_biconnected(&b.graph));
            for e in &b.edge_map {
                seen[e.0] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
    }

    #[test]
    fn operator_sizes_and_parity(s1 in 0u64..5_000, s2 in 0u64..5_000, n1 in 2usize..7, n2 in 2usize..7) {
        let g1 = eulerian(s1, n1);
        let g2 = eulerian(s2, n2);
        let mut rng = Rng::new(s1 ^ (s2 << 20));
        let vi = vertex_identification(&g1, VertexId(rng.below(g1.n())), &g2, VertexId(rng.below(g2.n()))).unwrap().graph;
        prop_assert_eq!((vi.n(), vi.m()), (g1.n() + g2.n() - 1, g1.m() + g2.m()));
        prop_assert!(vi.is_eulerian());
        let (e1, u1) = anchor(&g1, &mut rng);
        let (e2, u2) = anchor(&g2, &mut rng);
        let ei = edge_identification(&g1, e1, u1, &g2, e2, u2).unwrap().graph;
        prop_assert_eq!((ei.n(), ei.m()), (g1.n() + g2.n(), g1.m() + g2.m()));
        prop_assert!(ei.is_eulerian());
        let ve = vertex_edge_identification(&g1, e1, u1, &g2, e2, u2).unwrap().graph;
        prop_assert_eq!((ve.n(), ve.m()), (g1.n() + g2.n() - 1, g1.m() + g2.m() - 1));
        prop_assert!(ve.is_eulerian());
    }

    #[test]
    fn biconnectivity_under_identifications(s1 in 0u64..5_000, s2 in 0u64..5_000) {
        let g1 = gen_random_eulerian_with(5, 2, 3, s1).unwrap();
        let g2 = gen_random_eulerian_with(4, 1, 3, s2).unwrap();
        let mut rng = Rng::new(s1 + 7 * s2);
        let (e1, u1) = anchor(&g1, &mut rng);
        let (e2, u2) = anchor(&g2, &mut rng);
        let both = is_biconnected(&g1) && is_biconnected(&g2);
        let ei = edge_identification(&g1, e1, u1, &g2, e2, u2).unwrap().graph;
        prop_assert_eq!(is_biconnected(&ei), both);
        let ve = vertex_edge_identification(&g1, e1, u1, &g2, e2, u2).unwrap().graph;
        prop_assert_eq!(is_biconnected(&ve), both && g1.m() > 1 && g2.m() > 1);
        let vi = vertex_identification(&g1, u1, &g2, u2).unwrap().graph;
        prop_assert!(!is_biconnected(&vi));
    }

    #[test]
    fn treewidth_under_identifications(s1 in 0u64..5_000, s2 in 0u64..5_000) {
        // operands are Eulerian, hence 2-edge-connected
        let g1 = gen_random_eulerian(5, 2, s1).unwrap();
        let g2 = gen_random_eulerian(5, 1 + s2 as usize % 3, s2).unwrap();
        let mut rng = Rng::new(s1 * 3 + s2);
        let both = is_treewidth_at_most_2(&g1) && is_treewidth_at_most_2(&g2);
        let (e1, u1) = anchor(&g1, &mut rng);
        let (e2, u2) = anchor(&g2, &mut rng);
        let vi = vertex_identification(&g1, u1, &g2, u2).unwrap().graph;
        let ei = edge_identification(&g1, e1, u1, &g2, e2, u2).unwrap().graph;
        let ve = vertex_edge_identification(&g1, e1, u1, &g2, e2, u2).unwrap().graph;
        prop_assert_eq!(is_treewidth_at_most_2(&vi), both);
        prop_assert_eq!(is_treewidth_at_most_2(&ei), both);
        prop_assert_eq!(is_treewidth_at_most_2(&ve), both);
    }

    #[test]
    fn separation_steps_invert(seed in 0u64..10_000, n in 3usize..10) {
        let g = gen_random_eulerian_with(n, 1, 3, seed).unwrap();
        prop_assume!(is_biconnected(&g));
        if let Some(s) = find_ve_separator(&g).unwrap() {
            let (h, record) = ve_separation_step(&g, s).unwrap();
            prop_assert_eq!(components(&h), 2);
            for c in h.components() {
                prop_assert!(is_biconnected(&c.graph));
            }
            let mut back = h;
            record.reidentify(&mut back).unwrap();
            prop_assert!(back.same_labelled(&g));
        }
    }

    #[test]
    fn recognition_is_deterministic_and_replays(seed in 0u64..10_000, n in 1usize..30) {
        let g = eulerian(seed, n);
        let (v1, t1) = decompose(&g, Order::Ascending).unwrap();
        let (v2, t2) = decompose(&g, Order::Ascending).unwrap();
        prop_assert_eq!(&v1, &v2);
        prop_assert_eq!(&t1, &t2);
        prop_assert!(t1.replay().unwrap().same_labelled(&g));
        for r in block_reports(&g, Order::Ascending).unwrap() {
            prop_assert!(r.block.graph.n() < 2 || r.trace.steps.len() + 2 <= r.block.graph.n());
        }
    }

    #[test]
    fn order_never_changes_the_verdict(seed in 0u64..10_000, n in 2usize..25, order_seed in 0u64..1_000) {
        let g = eulerian(seed, n);
        let a = is_cycle_number_unique(&g, Order::Ascending).unwrap().unique;
        let b = is_cycle_number_unique(&g, Order::Randomized(order_seed)).unwrap().unique;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn fused_route_matches_naive(seed in 0u64..10_000, n in 2usize..40, order_seed in 0u64..100) {
        let g = eulerian(seed, n);
        for b in blocks(&g).blocks {
            if b.graph.m() == 0 {
                continue;
            }
            for order in [Order::Ascending, Order::Randomized(order_seed)] {
                let fast = ve_components(&b.graph, order).unwrap();
                let slow = ve_components_naive(&b.graph, order).unwrap();
                prop_assert_eq!(&fast.steps, &slow.steps);
                prop_assert!(fast.final_graph.same_labelled(&slow.final_graph));
            }
        }
    }

    #[test]
    fn oracle_bounds(seed in 0u64..10_000, n in 1usize..8) {
        let g = eulerian(seed, n);
        prop_assume!(g.m() <= 16);
        let r = oracle_cycle_numbers(&g, 24).unwrap();
        prop_assert!(r.c_min <= r.nu_max);
        prop_assert!(r.min_witness.validate(&g).is_ok());
        prop_assert!(r.max_witness.validate(&g).is_ok());
        // every cycle has at least two edges
        prop_assert!(2 * r.nu_max <= g.m());
    }

    #[test]
    fn class_h_closed_under_edge_identification(s1 in 0u64..5_000, s2 in 0u64..5_000, n1 in 2usize..10, n2 in 2usize..10) {
        let (g1, _) = gen_class_h(n1, s1).unwrap();
        let (g2, _) = gen_class_h(n2, s2).unwrap();
        let mut rng = Rng::new(s1 ^ s2 ^ 0x55);
        let (e1, u1) = anchor(&g1, &mut rng);
        let (e2, u2) = anchor(&g2, &mut rng);
        let id = edge_identification(&g1, e1, u1, &g2, e2, u2).unwrap();
        prop_assert!(is_class_h(&id.graph));
        // and splitting the two new edges recovers the operands
        let second = EdgeId(g1.m() + e2.0);
        let (split, _) = edge_separation_step(&id.graph, (e1, second)).unwrap();
        let mut sizes: Vec<usize> = split.components().iter().map(|c| c.graph.m()).collect();
        sizes.sort();
        let mut want = vec![g1.m(), g2.m()];
        want.sort();
        prop_assert_eq!(sizes, want);
    }

    #[test]
    fn class_h_prime_outputs(seed in 0u64..10_000, n in 1usize..25) {
        let (g, script) = gen_class_h_prime(n, seed).unwrap();
        prop_assert_eq!(g.n(), n);
        prop_assert!(is_class_h_prime(&g));
        prop_assert_eq!(script.replay().unwrap(), g);
    }

    #[test]
    fn four_regular_structure_matches_definition(seed in 0u64..10_000, k in 2usize..6) {
        let mut rng = Rng::new(seed);
        // a ring of cut vertices, each carrying a subdivided class-H member
        let mut g = cyclenum::generators::gen_cycle(k).unwrap();
        for i in 0..k {
            let (mut h, _) = gen_class_h(rng.range(2, 6), seed + i as u64).unwrap();
            let e = EdgeId(rng.below(h.m()));
            let x = subdivide(&mut h, e).unwrap();
            g = vertex_identification(&g, VertexId(i), &h, x).unwrap().graph;
        }
        prop_assert!(g.vertices().all(|v| g.degree(v).unwrap() == 4));
        prop_assert!(four_regular_block_check(&g));
        prop_assert!(is_class_h_prime(&g));

        // two Hamiltonian cycles: 4-regular, treewidth varies
        let mut two = MultiGraph::new(k + 3);
        for _ in 0..2 {
            cyclenum::generators::add_random_cycle(&mut two, k + 3, &mut rng).unwrap();
        }
        prop_assert_eq!(four_regular_block_check(&two), is_class_h_prime(&two));
    }
}

#[test]
fn closed_necklaces_are_in_h() {
    for k in 2..10 {
        assert!(is_class_h(&gen_closed_necklace(k).unwrap()));
    }
}
