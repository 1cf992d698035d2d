//! Permutations, generated groups and their actions.

mod action;
mod perm;

use std::collections::{BTreeSet, VecDeque};

pub use action::{is_transitive, orbit, Action, OnBlocks, OnPairs, OnPoints, OnSets};
pub use perm::{compose, inverse, Permutation};

use crate::error::{Error, Result};
use crate::graph::BlockSystem;

/// Default bound on the number of elements a closure may produce.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// A finite permutation group given by generators, optionally with its full
/// element list (sorted lexicographically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Option<Vec<Permutation>>,
}

impl PermGroup {
    /// A group from generators only; elements are not enumerated.
    pub fn new(generators: Vec<Permutation>) -> Result<Self> {
        let degree = check_generators(&generators)?;
        Ok(PermGroup {
            degree,
            generators,
            elements: None,
        })
    }

    /// `elements` must be the sorted closure of `generators`.
    pub(crate) fn from_parts(generators: Vec<Permutation>, elements: Vec<Permutation>) -> Result<Self> {
        let degree = check_generators(&generators)?;
        Ok(PermGroup {
            degree,
            generators,
            elements: Some(elements),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        let id = Permutation::identity(degree);
        PermGroup {
            degree,
            generators: vec![id.clone()],
            elements: Some(vec![id]),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> Option<&[Permutation]> {
        self.elements.as_deref()
    }

    pub fn order(&self) -> Option<usize> {
        self.elements.as_ref().map(Vec::len)
    }

    /// Returns the group with its elements populated, enumerating if needed.
    pub fn enumerated(&self, cap: usize) -> Result<PermGroup> {
        match self.elements {
            Some(_) => Ok(self.clone()),
            None => generate(&self.generators, cap),
        }
    }

    /// Membership test; requires populated elements.
    pub fn contains(&self, p: &Permutation) -> Option<bool> {
        self.elements.as_ref().map(|els| els.binary_search(p).is_ok())
    }

    /// Commutator subgroup, fully enumerated. `self` must have elements.
    pub fn derived_subgroup(&self) -> Result<PermGroup> {
        let elements = self
            .elements
            .as_ref()
            .ok_or_else(|| Error::input("derived_subgroup needs an enumerated group"))?;
        let mut commutators = BTreeSet::new();
        for p in elements {
            for q in elements {
                commutators.insert(p.commutator(q)?);
            }
        }
        let commutators: Vec<Permutation> = commutators.into_iter().collect();
        let generators = greedy_generators(&commutators, self.degree, elements.len())?;
        generate(&generators, elements.len())
    }
}

fn check_generators(generators: &[Permutation]) -> Result<usize> {
    let first = generators
        .first()
        .ok_or_else(|| Error::input("a group needs at least one generator"))?;
    let degree = first.degree();
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
    }
    Ok(degree)
}

/// Breadth-first closure of `generators` under composition.
///
/// The result contains the identity and is sorted lexicographically.
pub fn generate(generators: &[Permutation], cap: usize) -> Result<PermGroup> {
    let degree = check_generators(generators)?;
    let elements = closure(generators, degree, cap)?;
    Ok(PermGroup {
        degree,
        generators: generators.to_vec(),
        elements: Some(elements.into_iter().collect()),
    })
}

fn closure(generators: &[Permutation], degree: usize, cap: usize) -> Result<BTreeSet<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = x.then_unchecked(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::Resource {
                        what: "group closure",
                        limit: cap,
                    });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// Picks a generating set for `⟨candidates⟩` by scanning the candidates in
/// order and keeping each one not already generated by those kept so far.
/// Falls back to the identity when every candidate is trivial.
pub fn greedy_generators(candidates: &[Permutation], degree: usize, cap: usize) -> Result<Vec<Permutation>> {
    let mut kept: Vec<Permutation> = Vec::new();
    let mut span = BTreeSet::from([Permutation::identity(degree)]);
    for c in candidates {
        if c.degree() != degree {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: c.degree(),
            });
        }
        if !span.contains(c) {
            kept.push(c.clone());
            span = closure(&kept, degree, cap)?;
        }
    }
    if kept.is_empty() {
        kept.push(Permutation::identity(degree));
    }
    Ok(kept)
}

/// The action a group induces on the blocks of an invariant block system.
#[derive(Clone, Debug)]
pub struct InducedAction {
    /// Group on block indices, generated by the deduplicated induced generators.
    pub group: PermGroup,
    /// The induced permutation of each original generator, in order.
    pub generator_images: Vec<Permutation>,
    /// True iff no nonidentity element of the original group fixes every block.
    pub kernel_is_trivial: bool,
    /// A nonidentity element acting trivially on blocks, when one exists.
    pub kernel_witness: Option<Permutation>,
}

/// Permutation of block indices induced by `g`, or `None` when `g` maps some
/// block onto a non-block (reported as that block's index in `Err`).
pub fn block_image(blocks: &BlockSystem, g: &Permutation) -> std::result::Result<Permutation, usize> {
    let images = (0..blocks.len())
        .map(|b| blocks.image_of_block(b, g).ok_or(b))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    // images of distinct blocks are disjoint, so this is a bijection
    Ok(Permutation::new(images).expect("block images form a bijection"))
}

/// Computes `G^ℬ`, checking that every generator preserves `blocks`.
///
/// The kernel flag needs the full element list; the group is enumerated
/// (up to [`DEFAULT_CLOSURE_CAP`]) when it has not been already.
pub fn induced_action_on_blocks(group: &PermGroup, blocks: &BlockSystem) -> Result<InducedAction> {
    if group.degree() != blocks.degree() {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: blocks.degree(),
        });
    }
    let generator_images = group
        .generators()
        .iter()
        .enumerate()
        .map(|(gi, g)| block_image(blocks, g).map_err(|block| Error::NotInvariant { generator: gi, block }))
        .collect::<Result<Vec<_>>>()?;

    let mut distinct: Vec<Permutation> = Vec::new();
    for img in &generator_images {
        if !img.is_identity() && !distinct.contains(img) {
            distinct.push(img.clone());
        }
    }
    if distinct.is_empty() {
        distinct.push(Permutation::identity(blocks.len()));
    }
    let induced = generate(&distinct, DEFAULT_CLOSURE_CAP)?;

    let full = group.enumerated(DEFAULT_CLOSURE_CAP)?;
    let mut kernel_witness = None;
    for g in full.elements().unwrap_or_default() {
        if g.is_identity() {
            continue;
        }
        let img = block_image(blocks, g)
            .map_err(|b| Error::Internal(format!("element {g} breaks block {b} although generators preserve it")))?;
        if img.is_identity() {
            kernel_witness = Some(g.clone());
            break;
        }
    }

    Ok(InducedAction {
        group: induced,
        generator_images,
        kernel_is_trivial: kernel_witness.is_none(),
        kernel_witness,
    })
}
