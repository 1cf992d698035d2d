//! Test-only oracles and instance generators. Nothing here calls the
//! search, verification or lifting code it is used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use transdecomp::decomposition::EdgePartition;
use transdecomp::graph::{complete_graph, cycle_graph, generalized_petersen, path_graph};
use transdecomp::{BlockSystem, Edge, Graph, PermGroup, Permutation};

/// All automorphisms by filtering every permutation of the vertex set.
pub fn brute_force_automorphisms(g: &Graph) -> BTreeSet<Permutation> {
    let n = g.n();
    let edges: BTreeSet<(usize, usize)> = g.edges().iter().map(|e| (e.u(), e.v())).collect();
    (0..n)
        .permutations(n)
        .filter(|images| {
            edges.iter().all(|&(a, b)| {
                let (x, y) = (images[a], images[b]);
                edges.contains(&(x.min(y), x.max(y)))
            })
        })
        .map(|images| Permutation::new(images).unwrap())
        .collect()
}

fn image_set(part: &[Edge], g: &Permutation) -> BTreeSet<(usize, usize)> {
    part.iter()
        .map(|e| {
            let (x, y) = (g.apply(e.u()), g.apply(e.v()));
            (x.min(y), x.max(y))
        })
        .collect()
}

fn as_set(part: &[Edge]) -> BTreeSet<(usize, usize)> {
    part.iter().map(|e| (e.u(), e.v())).collect()
}

/// Conditions (i) and (ii) checked against every element of the group.
pub fn verify_by_enumeration(partition: &EdgePartition, elements: &[Permutation]) -> (bool, bool) {
    let parts: Vec<BTreeSet<(usize, usize)>> = partition.parts().iter().map(|p| as_set(p)).collect();
    let invariant = elements.iter().all(|g| {
        partition
            .parts()
            .iter()
            .all(|p| parts.contains(&image_set(p, g)))
    });
    let transitive = parts.is_empty()
        || (0..parts.len()).all(|j| {
            elements
                .iter()
                .any(|g| image_set(partition.part(0), g) == parts[j])
        });
    (invariant, transitive)
}

/// Closure by repeated multiplication until nothing new appears.
pub fn naive_closure(generators: &[Permutation]) -> BTreeSet<Permutation> {
    let n = generators[0].degree();
    let mut set: BTreeSet<Permutation> = BTreeSet::from([Permutation::identity(n)]);
    loop {
        let mut next = set.clone();
        for a in &set {
            for g in generators {
                next.insert(a.then(g).unwrap());
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// Small graphs (at most 6 vertices) for the brute-force comparison.
pub fn small_graph_corpus<R: Rng>(rng: &mut R, random_count: usize) -> Vec<(String, Graph)> {
    let mut corpus = Vec::new();
    for n in 1..=6 {
        corpus.push((format!("K{n}"), complete_graph(n).unwrap()));
        corpus.push((format!("P{n}"), path_graph(n).unwrap()));
        corpus.push((format!("empty{n}"), Graph::new(n, []).unwrap()));
    }
    for n in 3..=6 {
        corpus.push((format!("C{n}"), cycle_graph(n).unwrap()));
    }
    corpus.push(("star6".into(), Graph::new(6, (1..6).map(|i| (0, i))).unwrap()));
    corpus.push((
        "K33".into(),
        Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap(),
    ));
    corpus.push(("prism".into(), generalized_petersen(3, 1).unwrap()));
    corpus.push(("paw".into(), Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()));
    for i in 0..random_count {
        let n = rng.gen_range(2..=6);
        let edges: Vec<(usize, usize)> = (0..n)
            .tuple_combinations()
            .filter(|_| rng.gen_bool(0.45))
            .collect();
        corpus.push((format!("random{i}"), Graph::new(n, edges).unwrap()));
    }
    corpus
}

/// A graph, an independent invariant block system, a group and a verified
/// decomposition of the quotient, ready to be lifted.
pub struct CoverInstance {
    pub name: String,
    pub graph: Graph,
    pub blocks: BlockSystem,
    pub group: PermGroup,
    pub quotient: Graph,
    pub quotient_partition: EdgePartition,
}

fn divisors(m: usize) -> Vec<usize> {
    (1..=m).filter(|&s| m.is_multiple_of(s)).collect()
}

/// `C_N` with `N = m·d`, the dihedral group, blocks by residue mod `m`
/// (quotient `C_m`), and quotient edge `{r, r+1}` placed in part `r mod s`.
pub fn cycle_cover(m: usize, d: usize, s: usize) -> CoverInstance {
    assert!(m >= 3 && d >= 2 && m.is_multiple_of(s));
    let n = m * d;
    let graph = cycle_graph(n).unwrap();
    let rotation = Permutation::new((0..n).map(|i| (i + 1) % n).collect()).unwrap();
    let reflection = Permutation::new((0..n).map(|i| (n - i) % n).collect()).unwrap();
    let group = PermGroup::new(vec![rotation, reflection]).unwrap();
    let blocks = BlockSystem::new((0..m).map(|r| (0..d).map(|t| r + t * m).collect()).collect()).unwrap();
    let quotient = cycle_graph(m).unwrap();
    let mut parts = vec![Vec::new(); s];
    for r in 0..m {
        parts[r % s].push(Edge::new(r, (r + 1) % m).unwrap());
    }
    let quotient_partition = EdgePartition::new(quotient.clone(), parts).unwrap();
    CoverInstance {
        name: format!("C{n}/C{m} s={s}"),
        graph,
        blocks,
        group,
        quotient,
        quotient_partition,
    }
}

/// Prism `GP(N,1)`, `N = m·d`, with rotation and ring swap; blocks by
/// residue mod `m` on each ring (quotient `GP(m,1)`); part `j` holds the two
/// ring edges and the spoke at every position `r ≡ j mod s`.
pub fn prism_cover(m: usize, d: usize, s: usize) -> CoverInstance {
    assert!(m >= 3 && d >= 2 && m.is_multiple_of(s));
    let n = m * d;
    let graph = generalized_petersen(n, 1).unwrap();
    let rotation = Permutation::new((0..2 * n).map(|v| if v < n { (v + 1) % n } else { n + (v - n + 1) % n }).collect())
        .unwrap();
    let swap = Permutation::new((0..2 * n).map(|v| if v < n { v + n } else { v - n }).collect()).unwrap();
    let group = PermGroup::new(vec![rotation, swap]).unwrap();
    let outer = (0..m).map(|r| (0..d).map(|t| r + t * m).collect::<Vec<_>>());
    let inner = (0..m).map(|r| (0..d).map(|t| n + r + t * m).collect::<Vec<_>>());
    let blocks = BlockSystem::new(outer.chain(inner).collect()).unwrap();
    let quotient = generalized_petersen(m, 1).unwrap();
    let mut parts = vec![Vec::new(); s];
    for r in 0..m {
        let next = (r + 1) % m;
        parts[r % s].extend([
            Edge::new(r, next).unwrap(),
            Edge::new(m + r, m + next).unwrap(),
            Edge::new(r, m + r).unwrap(),
        ]);
    }
    let quotient_partition = EdgePartition::new(quotient.clone(), parts).unwrap();
    CoverInstance {
        name: format!("GP({n},1)/GP({m},1) s={s}"),
        graph,
        blocks,
        group,
        quotient,
        quotient_partition,
    }
}

/// Renames the vertices of an instance by `sigma` (vertex `v` becomes `sigma(v)`).
pub fn relabel(inst: CoverInstance, sigma: &Permutation) -> CoverInstance {
    let graph = Graph::new(
        inst.graph.n(),
        inst.graph.edges().iter().map(|e| (sigma.apply(e.u()), sigma.apply(e.v()))),
    )
    .unwrap();
    let blocks = BlockSystem::new(
        inst.blocks
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&v| sigma.apply(v)).collect())
            .collect(),
    )
    .unwrap();
    let sigma_inv = sigma.inverse();
    let gens = inst
        .group
        .generators()
        .iter()
        .map(|g| sigma_inv.then(g).unwrap().then(sigma).unwrap())
        .collect();
    CoverInstance {
        name: format!("{} relabelled", inst.name),
        graph,
        blocks,
        group: PermGroup::new(gens).unwrap(),
        ..inst
    }
}

/// Random cycle and prism covers with random vertex relabellings.
pub fn random_covers<R: Rng>(rng: &mut R, count: usize) -> Vec<CoverInstance> {
    (0..count)
        .map(|i| {
            let m = rng.gen_range(3..=6);
            let d = rng.gen_range(2..=3);
            let s = *divisors(m).choose(rng).unwrap();
            let inst = if i % 2 == 0 { cycle_cover(m, d, s) } else { prism_cover(m, d, s) };
            let mut images: Vec<usize> = (0..inst.graph.n()).collect();
            images.shuffle(rng);
            relabel(inst, &Permutation::new(images).unwrap())
        })
        .collect()
}
