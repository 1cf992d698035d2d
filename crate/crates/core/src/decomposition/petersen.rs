use crate::graph::{kneser_petersen, petersen_pair_labels, Edge};
use crate::permgroup::{generate, PermGroup, Permutation, DEFAULT_CLOSURE_CAP};

use super::EdgePartition;

/// Edges `{{b,c},{d,e}}` of the Kneser-labelled Petersen graph with
/// `a ∉ {b,c,d,e}`, for `a ∈ 1..=5`.
pub fn petersen_qa_part(a: usize) -> Vec<Edge> {
    assert!((1..=5).contains(&a), "a must lie in 1..=5");
    let labels = petersen_pair_labels();
    kneser_petersen()
        .edges()
        .iter()
        .copied()
        .filter(|e| {
            let (x, y) = (labels[e.u()], labels[e.v()]);
            ![x.0, x.1, y.0, y.1].contains(&a)
        })
        .collect()
}

/// The five parts `Q_1..Q_5` on [`kneser_petersen`], named `"Q1"`..`"Q5"`
/// and ordered by least edge.
pub fn petersen_qa_partition() -> EdgePartition {
    let parts = (1..=5).map(petersen_qa_part).collect();
    let names = (1..=5).map(|a| Some(format!("Q{a}"))).collect();
    EdgePartition::with_names(kneser_petersen(), parts, names)
        .expect("the Q_a partition the Petersen edges")
        .canonicalized()
        .0
}

/// `A_5` on `{0..4}`, generated by `(0 1 2)` and `(0 1 2 3 4)`.
pub fn a5_on_five_points() -> PermGroup {
    let gens = [
        Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap(),
        Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
    ];
    generate(&gens, DEFAULT_CLOSURE_CAP).expect("A5 has 60 elements")
}

/// `A_5` acting on the vertices of [`kneser_petersen`] by `{a,b} ↦ {a^g, b^g}`.
pub fn a5_on_kneser_petersen() -> PermGroup {
    let labels = petersen_pair_labels();
    let lift = |g: &Permutation| {
        let images = labels
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (g.apply(a - 1) + 1, g.apply(b - 1) + 1);
                let key = (x.min(y), x.max(y));
                labels.iter().position(|&l| l == key).expect("pairs map to pairs")
            })
            .collect();
        Permutation::new(images).expect("pair images form a bijection")
    };
    let gens: Vec<Permutation> = a5_on_five_points().generators().iter().map(lift).collect();
    generate(&gens, DEFAULT_CLOSURE_CAP).expect("A5 on pairs has 60 elements")
}
