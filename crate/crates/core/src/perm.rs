use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::state::{check_dim, State};

/// A permutation of coordinate positions.
///
/// Acting on states it shuffles coordinates: the image's bit `i` is the
/// argument's bit `sigma(i)`. Stored 0-based; displayed 1-based, the usual
/// convention for coordinate indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordPerm {
    sigma: Vec<u8>,
}

impl CoordPerm {
    /// Builds from 0-based images: `sigma[i]` is the source position of
    /// output coordinate `i`.
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        check_dim(n)?;
        let mut seen = vec![false; n];
        for &j in &sigma {
            if j >= n || seen[j] {
                return Err(Error::NotAPermutation { n });
            }
            seen[j] = true;
        }
        Ok(Self {
            sigma: sigma.into_iter().map(|j| j as u8).collect(),
        })
    }

    /// Builds from 1-based images as written in tables, e.g. `[3, 1, 2]`.
    pub fn from_one_based(sigma: &[usize]) -> Result<Self> {
        if sigma.contains(&0) {
            return Err(Error::NotAPermutation { n: sigma.len() });
        }
        Self::new(sigma.iter().map(|&j| j - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect()).expect("dimension in range")
    }

    pub fn dim(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn image(&self, i: usize) -> usize {
        self.sigma[i] as usize
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.sigma.iter().map(|&j| j as usize + 1).collect()
    }

    /// Applies the coordinate shuffle to a state.
    pub fn apply(&self, s: &State) -> State {
        assert_eq!(self.dim(), s.dim(), "dimension mismatch");
        let bits: Vec<bool> = (0..self.dim()).map(|i| s.bit(self.image(i))).collect();
        State::from_bits(&bits).expect("dimension preserved")
    }

    /// Plain function composition on positions: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &CoordPerm) -> CoordPerm {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        CoordPerm {
            sigma: (0..self.dim())
                .map(|i| self.sigma[other.image(i)])
                .collect(),
        }
    }

    pub fn inverse(&self) -> CoordPerm {
        let mut inv = vec![0u8; self.dim()];
        for (i, &j) in self.sigma.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        CoordPerm { sigma: inv }
    }

    /// All `n!` coordinate permutations in lexicographic order of their
    /// image arrays.
    pub fn all(n: usize) -> impl Iterator<Item = CoordPerm> {
        check_dim(n).expect("dimension in range");
        (0..n as u8)
            .permutations(n)
            .map(|sigma| CoordPerm { sigma })
    }
}

impl fmt::Display for CoordPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.one_based().iter().join(" "))
    }
}

impl fmt::Debug for CoordPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoordPerm{self}")
    }
}
