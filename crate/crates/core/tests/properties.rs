mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use transdecomp::decomposition::{lift, lift_with_origins, verify, EdgePartition};
use transdecomp::graph::{automorphism_group, isomorphism, quotient};
use transdecomp::permgroup::{
    block_image, generate, orbit, OnPairs, OnPoints, DEFAULT_CLOSURE_CAP,
};
use transdecomp::pls::{from_decomposition, is_line_transitive, to_decomposition};
use transdecomp::{BlockSystem, Edge, Graph, PartialLinearSpace, PermGroup, Permutation};

use common::{brute_force_automorphisms, naive_closure, random_covers};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn perms(max_degree: usize, max_gens: usize) -> impl Strategy<Value = Vec<Permutation>> {
    (1..=max_degree).prop_flat_map(move |n| prop::collection::vec(perm(n), 1..=max_gens))
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=6).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges = pairs.iter().zip(mask).filter(|(_, keep)| *keep).map(|(&p, _)| p);
            Graph::new(n, edges).unwrap()
        })
    })
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_cancels_on_both_sides(p in (1usize..=9).prop_flat_map(perm)) {
        let id = Permutation::identity(p.degree());
        prop_assert_eq!(p.then(&p.inverse()).unwrap(), id.clone());
        prop_assert_eq!(p.inverse().then(&p).unwrap(), id);
    }

    #[test]
    fn closure_matches_naive_and_divides_factorial(gens in perms(6, 3)) {
        let g = generate(&gens, DEFAULT_CLOSURE_CAP).unwrap();
        let els: BTreeSet<_> = g.elements().unwrap().iter().cloned().collect();
        prop_assert_eq!(&els, &naive_closure(&gens));
        prop_assert_eq!(factorial(g.degree()) % els.len(), 0);
    }

    #[test]
    fn generate_is_idempotent(gens in perms(5, 3)) {
        let g = generate(&gens, DEFAULT_CLOSURE_CAP).unwrap();
        let again = generate(g.elements().unwrap(), DEFAULT_CLOSURE_CAP).unwrap();
        prop_assert_eq!(g.elements(), again.elements());
    }

    #[test]
    fn orbit_from_generators_matches_enumeration(gens in perms(7, 2), seed in any::<usize>()) {
        let n = gens[0].degree();
        let g = generate(&gens, DEFAULT_CLOSURE_CAP).unwrap();
        let start = seed % n;
        let by_gens = orbit(&g, &OnPoints(n), start).unwrap();
        let by_elements: BTreeSet<usize> = g.elements().unwrap().iter().map(|p| p.apply(start)).collect();
        prop_assert_eq!(by_gens, by_elements);
        if n >= 2 {
            let pair = (0, 1 + seed % (n - 1));
            let by_gens = orbit(&g, &OnPairs(n), pair).unwrap();
            let by_elements: BTreeSet<(usize, usize)> = g.elements().unwrap().iter().map(|p| {
                let (x, y) = (p.apply(pair.0), p.apply(pair.1));
                (x.min(y), x.max(y))
            }).collect();
            prop_assert_eq!(by_gens, by_elements);
        }
    }

    #[test]
    fn derived_subgroup_is_normal(gens in perms(5, 2)) {
        let g = generate(&gens, DEFAULT_CLOSURE_CAP).unwrap();
        let d = g.derived_subgroup().unwrap();
        for x in g.elements().unwrap() {
            for c in d.elements().unwrap() {
                prop_assert_eq!(d.contains(&c.conjugate_by(x).unwrap()), Some(true));
            }
        }
        prop_assert_eq!(g.order().unwrap() % d.order().unwrap(), 0);
    }

    #[test]
    fn automorphism_search_matches_brute_force(g in small_graph()) {
        let aut = automorphism_group(&g).unwrap();
        let found: BTreeSet<_> = aut.elements().unwrap().iter().cloned().collect();
        prop_assert_eq!(found, brute_force_automorphisms(&g));
        for p in aut.elements().unwrap() {
            prop_assert!(g.is_automorphism(p).unwrap());
        }
    }

    #[test]
    fn isomorphism_is_found_both_ways(g in small_graph(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut images: Vec<usize> = (0..g.n()).collect();
        images.shuffle(&mut rng);
        let sigma = Permutation::new(images).unwrap();
        let h = Graph::new(g.n(), g.edges().iter().map(|e| (sigma.apply(e.u()), sigma.apply(e.v())))).unwrap();
        let forward = isomorphism(&g, &h).unwrap().expect("relabelled graph is isomorphic");
        let backward = isomorphism(&h, &g).unwrap().expect("isomorphism is symmetric");
        for e in g.edges() {
            prop_assert!(h.contains_edge(e.map(&forward)));
        }
        for e in h.edges() {
            prop_assert!(g.contains_edge(e.map(&backward)));
        }
        prop_assert!(forward <= sigma);
    }

    #[test]
    fn quotient_edges_are_exactly_crossing_pairs(g in small_graph(), seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..=g.n());
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); k];
        for v in 0..g.n() {
            // first k vertices seed the blocks so none is empty
            let b = if v < k { v } else { rng.gen_range(0..k) };
            blocks[b].push(v);
        }
        let bs = BlockSystem::new(blocks).unwrap();
        let q = quotient(&g, &bs).unwrap();
        for i in 0..k {
            for j in i + 1..k {
                let crossing = bs.block(i).iter().any(|&a| bs.block(j).iter().any(|&b| g.has_edge(a, b)));
                prop_assert_eq!(q.has_edge(i, j), crossing);
            }
        }
        prop_assert_eq!(quotient(&g, &BlockSystem::singletons(g.n())).unwrap(), g);
    }

    #[test]
    fn lift_is_equivariant_and_verified(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for inst in random_covers(&mut rng, 2) {
            let (lifted, origins) =
                lift_with_origins(&inst.graph, &inst.blocks, &inst.quotient_partition, &inst.group).unwrap();
            let report = verify(&lifted, &inst.group).unwrap();
            prop_assert!(report.passes(), "{}: {}", inst.name, report);
            // (P_Q)^g = P_{Q^g} for every element g
            let full = inst.group.enumerated(DEFAULT_CLOSURE_CAP).unwrap();
            let qp = &inst.quotient_partition;
            for g in full.elements().unwrap() {
                let on_blocks = block_image(&inst.blocks, g).unwrap();
                for (pi, part) in lifted.parts().iter().enumerate() {
                    let q_image = qp.image_of_part(origins[pi], &on_blocks).unwrap();
                    let target = origins.iter().position(|&o| o == q_image).unwrap();
                    let image: BTreeSet<Edge> = part.iter().map(|e| e.map(g)).collect();
                    let expected: BTreeSet<Edge> = lifted.part(target).iter().copied().collect();
                    prop_assert_eq!(image, expected);
                }
            }
        }
    }

    #[test]
    fn disjoint_line_spaces_round_trip(lines in 2usize..=5, size in 2usize..=4, isolated in 0usize..=2) {
        let points = lines * size + isolated;
        let space_lines: Vec<Vec<usize>> = (0..lines).map(|i| (i * size..(i + 1) * size).collect()).collect();
        let space = PartialLinearSpace::new(points, space_lines).unwrap();
        let shift = Permutation::new(
            (0..points).map(|p| if p < lines * size { (p + size) % (lines * size) } else { p }).collect(),
        ).unwrap();
        let group = PermGroup::new(vec![shift]).unwrap();
        prop_assert!(is_line_transitive(&space, &group).unwrap().holds());
        let (_, partition) = to_decomposition(&space).unwrap();
        prop_assert!(verify(&partition, &group).unwrap().passes());
        prop_assert_eq!(from_decomposition(&partition, &group).unwrap(), space);
    }
}

#[test]
fn random_partitions_are_rarely_invariant_but_always_consistent() {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let g = transdecomp::graph::generalized_petersen(5, 2).unwrap();
    let aut = automorphism_group(&g).unwrap();
    for _ in 0..10 {
        let k = rng.gen_range(1..=4);
        let mut parts = vec![Vec::new(); k];
        for (i, &e) in g.edges().iter().enumerate() {
            let b = if i < k { i } else { rng.gen_range(0..k) };
            parts[b].push(e);
        }
        let partition = EdgePartition::new(g.clone(), parts).unwrap();
        let report = verify(&partition, &aut).unwrap();
        let (inv, trans) = common::verify_by_enumeration(&partition, aut.elements().unwrap());
        assert_eq!((report.is_invariant, report.is_transitive), (inv, trans));
    }
}

#[test]
fn lift_keeps_quotient_names() {
    let inst = common::cycle_cover(4, 2, 2);
    let named = EdgePartition::with_names(
        inst.quotient.clone(),
        inst.quotient_partition.parts().to_vec(),
        vec![Some("even".into()), Some("odd".into())],
    )
    .unwrap();
    let lifted = lift(&inst.graph, &inst.blocks, &named, &inst.group).unwrap();
    let names: BTreeSet<_> = lifted.names().iter().flatten().cloned().collect();
    assert_eq!(names, BTreeSet::from(["even".to_string(), "odd".to_string()]));
}
