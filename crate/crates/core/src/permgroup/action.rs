//! Group actions induced by point permutations.
//!
//! Every action here reduces to point images: a pair, a set, a block or an
//! edge part is moved by moving its points. Orbits are computed from the
//! generators alone.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::graph::BlockSystem;

use super::{PermGroup, Permutation};

/// A set acted on by permutations of `{0..degree-1}`.
pub trait Action {
    type Item: Clone + Ord + Debug;

    /// Degree of the point permutations this action accepts.
    fn degree(&self) -> usize;

    fn contains(&self, item: &Self::Item) -> bool;

    /// Image of `item` under `g`, or `None` when it falls outside the domain.
    fn act(&self, item: &Self::Item, g: &Permutation) -> Option<Self::Item>;
}

/// The natural action on points.
#[derive(Clone, Copy, Debug)]
pub struct OnPoints(pub usize);

impl Action for OnPoints {
    type Item = usize;

    fn degree(&self) -> usize {
        self.0
    }

    fn contains(&self, item: &usize) -> bool {
        *item < self.0
    }

    fn act(&self, item: &usize, g: &Permutation) -> Option<usize> {
        Some(g.apply(*item))
    }
}

/// Action on 2-subsets `(a, b)` with `a < b`.
#[derive(Clone, Copy, Debug)]
pub struct OnPairs(pub usize);

impl Action for OnPairs {
    type Item = (usize, usize);

    fn degree(&self) -> usize {
        self.0
    }

    fn contains(&self, &(a, b): &(usize, usize)) -> bool {
        a < b && b < self.0
    }

    fn act(&self, &(a, b): &(usize, usize), g: &Permutation) -> Option<(usize, usize)> {
        let (x, y) = (g.apply(a), g.apply(b));
        Some((x.min(y), x.max(y)))
    }
}

/// Action on arbitrary point sets, represented as sorted vectors.
#[derive(Clone, Copy, Debug)]
pub struct OnSets(pub usize);

impl Action for OnSets {
    type Item = Vec<usize>;

    fn degree(&self) -> usize {
        self.0
    }

    fn contains(&self, item: &Vec<usize>) -> bool {
        item.windows(2).all(|w| w[0] < w[1]) && item.iter().all(|&x| x < self.0)
    }

    fn act(&self, item: &Vec<usize>, g: &Permutation) -> Option<Vec<usize>> {
        let mut image: Vec<usize> = item.iter().map(|&x| g.apply(x)).collect();
        image.sort_unstable();
        Some(image)
    }
}

/// Action on the block indices of a block system; undefined for elements
/// that break the system.
#[derive(Clone, Copy, Debug)]
pub struct OnBlocks<'a>(pub &'a BlockSystem);

impl Action for OnBlocks<'_> {
    type Item = usize;

    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn contains(&self, item: &usize) -> bool {
        *item < self.0.len()
    }

    fn act(&self, item: &usize, g: &Permutation) -> Option<usize> {
        self.0.image_of_block(*item, g)
    }
}

/// Orbit of `start` under the group generated by `group`'s generators.
pub fn orbit<A: Action>(group: &PermGroup, action: &A, start: A::Item) -> Result<BTreeSet<A::Item>> {
    if action.degree() != group.degree() {
        return Err(Error::DegreeMismatch {
            left: group.degree(),
            right: action.degree(),
        });
    }
    if !action.contains(&start) {
        return Err(Error::input(format!("{start:?} is not in the action's domain")));
    }
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(item) = queue.pop_front() {
        for (gi, g) in group.generators().iter().enumerate() {
            let image = action
                .act(&item, g)
                .filter(|img| action.contains(img))
                .ok_or_else(|| {
                    Error::input(format!("generator {gi} maps {item:?} outside the action's domain"))
                })?;
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    Ok(seen)
}

/// True iff the orbit of one element of `domain` is all of `domain`.
pub fn is_transitive<A: Action>(group: &PermGroup, domain: &BTreeSet<A::Item>, action: &A) -> Result<bool> {
    let Some(first) = domain.first() else {
        return Err(Error::input("transitivity is undefined on an empty domain"));
    };
    Ok(orbit(group, action, first.clone())? == *domain)
}
