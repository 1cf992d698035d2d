use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0..n-1}` stored as its image array.
///
/// Ordering is lexicographic on the image arrays.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from `images[i] = image of i`, rejecting non-bijections.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n {
                return Err(Error::input(format!("image {x} of point {i} is out of range 0..{n}")));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::input(format!("point {x} appears twice as an image")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::input(format!("cycle point {x} out of range 0..{n}")));
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::input(format!("point {x} appears in more than one cycle")));
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` followed by `other`: the result sends `i` to `other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// The commutator `p⁻¹ q⁻¹ p q`, read left to right.
    pub fn commutator(&self, other: &Permutation) -> Result<Permutation> {
        Ok(self
            .inverse()
            .then(&other.inverse())?
            .then_unchecked(self)
            .then_unchecked(other))
    }

    /// `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation> {
        Ok(g.inverse().then(self)?.then_unchecked(g))
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }
}

/// Applies `p` then `q`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.then(q)
}

pub fn inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

impl fmt::Display for Permutation {
    /// Disjoint cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.images[x];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
