use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::permgroup::{orbit, OnPoints, PermGroup, Permutation, DEFAULT_CLOSURE_CAP};

use super::EdgePartition;

/// Why a permutation fails to act on the parts of a partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartActionWitness {
    /// Two edges of `part` land in different parts.
    Split {
        part: usize,
        first: [usize; 2],
        first_image_part: usize,
        second: [usize; 2],
        second_image_part: usize,
    },
    /// `part` lands inside `image_part` but does not cover it.
    NotOnto {
        part: usize,
        image_part: usize,
        uncovered: [usize; 2],
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartImage {
    /// The induced permutation of part indices.
    Mapped(Permutation),
    Broken(PartActionWitness),
}

/// The permutation of parts induced by an automorphism `g`, or a witness
/// that `g` does not map every part wholly onto a part.
pub fn part_action(partition: &EdgePartition, g: &Permutation) -> Result<PartImage> {
    if let Some(edge) = partition.graph().broken_edge(g)? {
        return Err(Error::NotAutomorphism { generator: 0, edge });
    }
    Ok(part_action_unchecked(partition, g))
}

fn part_action_unchecked(partition: &EdgePartition, g: &Permutation) -> PartImage {
    let mut images = Vec::with_capacity(partition.len());
    for (pi, part) in partition.parts().iter().enumerate() {
        let first = part[0];
        let target = partition.part_of(first.map(g)).expect("automorphisms map edges to edges");
        for &e in &part[1..] {
            let t = partition.part_of(e.map(g)).expect("automorphisms map edges to edges");
            if t != target {
                return PartImage::Broken(PartActionWitness::Split {
                    part: pi,
                    first: first.endpoints(),
                    first_image_part: target,
                    second: e.endpoints(),
                    second_image_part: t,
                });
            }
        }
        if partition.part(target).len() != part.len() {
            let image: BTreeSet<Edge> = part.iter().map(|e| e.map(g)).collect();
            let uncovered = partition
                .part(target)
                .iter()
                .find(|e| !image.contains(e))
                .expect("a larger target has an uncovered edge");
            return PartImage::Broken(PartActionWitness::NotOnto {
                part: pi,
                image_part: target,
                uncovered: uncovered.endpoints(),
            });
        }
        images.push(target);
    }
    // g permutes edges, so equal-sized wholly-mapped parts have distinct targets
    PartImage::Mapped(Permutation::new(images).expect("part images are distinct"))
}

/// A failed condition together with its counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum Witness {
    Partition { detail: String },
    /// Generator `generator` does not map parts wholly onto parts.
    Invariance {
        generator: usize,
        #[serde(flatten)]
        witness: PartActionWitness,
    },
    /// No group element maps part `from` wholly onto part `to`.
    Transitivity { from: usize, to: usize },
}

/// Outcome of checking whether a partition is a `G`-transitive decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub parts: usize,
    pub is_partition: bool,
    pub is_invariant: bool,
    pub is_transitive: bool,
    pub max_subgraph_valency: usize,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    /// Both decomposition conditions hold.
    pub fn passes(&self) -> bool {
        self.is_partition && self.is_invariant && self.is_transitive
    }

    pub fn is_one_decomposition(&self) -> bool {
        self.passes() && self.max_subgraph_valency == 1
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        writeln!(f, "parts: {}", self.parts)?;
        writeln!(f, "partition: {}", yn(self.is_partition))?;
        writeln!(f, "invariant (parts mapped wholly onto parts): {}", yn(self.is_invariant))?;
        writeln!(f, "transitive on parts: {}", yn(self.is_transitive))?;
        writeln!(f, "max subgraph valency: {}", self.max_subgraph_valency)?;
        for w in &self.witnesses {
            match w {
                Witness::Partition { detail } => writeln!(f, "witness: not a partition: {detail}")?,
                Witness::Invariance { generator, witness } => match witness {
                    PartActionWitness::Split {
                        part,
                        first,
                        first_image_part,
                        second,
                        second_image_part,
                    } => writeln!(
                        f,
                        "witness: generator {generator} splits part {part}: {{{},{}}} -> part {first_image_part}, {{{},{}}} -> part {second_image_part}",
                        first[0], first[1], second[0], second[1]
                    )?,
                    PartActionWitness::NotOnto {
                        part,
                        image_part,
                        uncovered,
                    } => writeln!(
                        f,
                        "witness: generator {generator} maps part {part} into part {image_part} without covering {{{},{}}}",
                        uncovered[0], uncovered[1]
                    )?,
                },
                Witness::Transitivity { from, to } => {
                    writeln!(f, "witness: no group element maps part {from} onto part {to}")?
                }
            }
        }
        write!(f, "result: {}", if self.passes() { "PASS" } else { "FAIL" })
    }
}

/// Checks both decomposition conditions against the generators of `group`.
///
/// Invariance is tested generator by generator. When it holds, transitivity
/// is read off the part-index group generated by the induced permutations.
/// When it fails, transitivity is decided directly by enumerating the group.
pub fn verify(partition: &EdgePartition, group: &PermGroup) -> Result<VerificationReport> {
    let graph = partition.graph();
    if group.degree() != graph.n() {
        return Err(Error::DegreeMismatch {
            left: graph.n(),
            right: group.degree(),
        });
    }
    for (gi, g) in group.generators().iter().enumerate() {
        if let Some(edge) = graph.broken_edge(g)? {
            return Err(Error::NotAutomorphism { generator: gi, edge });
        }
    }

    let mut witnesses = Vec::new();
    let is_partition = match EdgePartition::new(graph.clone(), partition.parts().to_vec()) {
        Ok(_) => true,
        Err(e) => {
            witnesses.push(Witness::Partition { detail: e.to_string() });
            false
        }
    };

    let mut induced = Vec::new();
    let mut is_invariant = true;
    for (gi, g) in group.generators().iter().enumerate() {
        match part_action_unchecked(partition, g) {
            PartImage::Mapped(p) => induced.push(p),
            PartImage::Broken(witness) => {
                is_invariant = false;
                witnesses.push(Witness::Invariance { generator: gi, witness });
                break;
            }
        }
    }

    let is_transitive = if partition.is_empty() {
        true
    } else if is_invariant {
        let part_group = PermGroup::new(induced)?;
        let reached = orbit(&part_group, &OnPoints(partition.len()), 0)?;
        match (0..partition.len()).find(|j| !reached.contains(j)) {
            Some(to) => {
                witnesses.push(Witness::Transitivity { from: 0, to });
                false
            }
            None => true,
        }
    } else {
        let full = group.enumerated(DEFAULT_CLOSURE_CAP)?;
        let elements = full.elements().unwrap_or_default();
        let unreachable = (0..partition.len()).find(|&j| {
            !elements
                .iter()
                .any(|g| wholly_onto(partition, 0, j, g))
        });
        match unreachable {
            Some(to) => {
                witnesses.push(Witness::Transitivity { from: 0, to });
                false
            }
            None => true,
        }
    };

    Ok(VerificationReport {
        parts: partition.len(),
        is_partition,
        is_invariant,
        is_transitive,
        max_subgraph_valency: partition.max_valency(),
        witnesses,
    })
}

fn wholly_onto(partition: &EdgePartition, from: usize, to: usize, g: &Permutation) -> bool {
    let source = partition.part(from);
    let target = partition.part(to);
    source.len() == target.len() && source.iter().all(|e| target.binary_search(&e.map(g)).is_ok())
}
