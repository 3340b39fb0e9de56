use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::CoordPerm;
use crate::state::{check_dim, State};
use crate::table::TruthTable;

/// A bijection `g: B^n → B^n`, stored as a permutation of the canonical
/// indices. Construction validates bijectivity, so holding a `Bijection`
/// is proof the map is invertible.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bijection {
    n: u8,
    map: Vec<u16>,
}

impl Bijection {
    pub fn new(n: usize, map: Vec<u16>) -> Result<Self> {
        check_dim(n)?;
        if map.len() != 1usize << n {
            return Err(Error::LengthMismatch {
                expected: 1usize << n,
                got: map.len(),
            });
        }
        let mut seen = vec![false; map.len()];
        for &y in &map {
            let y = y as usize;
            if y >= map.len() {
                return Err(Error::IndexOutOfRange { index: y, n });
            }
            if seen[y] {
                return Err(Error::NotBijective {
                    output: State::new(n, y).expect("index in range").bit_string(),
                });
            }
            seen[y] = true;
        }
        Ok(Self { n: n as u8, map })
    }

    pub(crate) fn from_map_unchecked(n: usize, map: Vec<u16>) -> Self {
        debug_assert!(Self::new(n, map.clone()).is_ok());
        Self { n: n as u8, map }
    }

    pub fn identity(n: usize) -> Self {
        check_dim(n).expect("dimension in range");
        Self {
            n: n as u8,
            map: (0..1u32 << n).map(|i| i as u16).collect(),
        }
    }

    /// Validates a truth table as a permutation.
    pub fn from_table(t: &TruthTable) -> Result<Self> {
        Self::new(t.dim(), t.raw_rows().to_vec())
    }

    /// The state map induced by a coordinate permutation.
    pub fn from_coord_perm(sigma: &CoordPerm) -> Self {
        let n = sigma.dim();
        let map = State::all(n)
            .map(|s| sigma.apply(&s).index() as u16)
            .collect();
        Self { n: n as u8, map }
    }

    /// The translation `μ ↦ μ ⊕ λ`; always an involution.
    pub fn translation(lambda: &State) -> Self {
        let n = lambda.dim();
        let map = (0..1usize << n)
            .map(|i| (i ^ lambda.index()) as u16)
            .collect();
        Self { n: n as u8, map }
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn map(&self) -> &[u16] {
        &self.map
    }

    pub(crate) fn map_idx(&self, i: usize) -> usize {
        self.map[i] as usize
    }

    pub fn apply(&self, mu: &State) -> Result<State> {
        if mu.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: mu.dim(),
            });
        }
        State::new(self.dim(), self.map_idx(mu.index()))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Bijection) -> Result<Bijection> {
        if other.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(Self {
            n: self.n,
            map: (0..self.size())
                .map(|i| self.map[other.map_idx(i)])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Bijection {
        let mut inv = vec![0u16; self.size()];
        for (i, &y) in self.map.iter().enumerate() {
            inv[y as usize] = i as u16;
        }
        Self {
            n: self.n,
            map: inv,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &y)| i == y as usize)
    }

    pub fn as_table(&self) -> TruthTable {
        TruthTable::from_rows(self.dim(), self.map.clone()).expect("valid permutation rows")
    }

    /// All `(2^n)!` bijections in lexicographic order of their index arrays.
    /// Only sensible for very small `n`.
    pub fn all(n: usize) -> impl Iterator<Item = Bijection> {
        check_dim(n).expect("dimension in range");
        let size = 1usize << n;
        (0..size as u16)
            .permutations(size)
            .map(move |map| Bijection { n: n as u8, map })
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.map.iter().join(" "))
    }
}

impl fmt::Debug for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bijection(n={}, {})", self.dim(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(bits: &str) -> State {
        let v: Vec<bool> = bits.chars().map(|c| c == '1').collect();
        State::from_bits(&v).unwrap()
    }

    #[test]
    fn rejects_non_bijective_tables() {
        let t = TruthTable::constant(s("01"));
        assert_eq!(
            Bijection::from_table(&t),
            Err(Error::NotBijective {
                output: "01".into()
            })
        );
    }

    #[test]
    fn coordinate_permutation_bijection() {
        // sigma = (3 1 2) sends (a,b,c) to (c,a,b)
        let sigma = CoordPerm::from_one_based(&[3, 1, 2]).unwrap();
        let pi = Bijection::from_coord_perm(&sigma);
        assert_eq!(pi.apply(&s("110")).unwrap(), s("011"));
        // identity coordinate permutation gives the identity bijection
        assert!(Bijection::from_coord_perm(&CoordPerm::identity(3)).is_identity());
        // the swap matches the hand-written table
        let swap = CoordPerm::from_one_based(&[2, 1]).unwrap();
        let g = Bijection::from_coord_perm(&swap);
        assert_eq!(g.apply(&s("10")).unwrap(), s("01"));
        assert_eq!(g.apply(&s("01")).unwrap(), s("10"));
    }

    #[test]
    fn translation_bijection() {
        assert!(Bijection::translation(&State::zero(3)).is_identity());
        let t = Bijection::translation(&s("001"));
        assert_eq!(t.apply(&s("010")).unwrap(), s("011"));
        // every translation is its own inverse
        let t11 = Bijection::translation(&s("11"));
        assert_eq!(t11.inverse(), t11);
    }

    #[test]
    fn translations_compose_by_xor() {
        let a = s("101");
        let b = s("011");
        let lhs = Bijection::translation(&a)
            .compose(&Bijection::translation(&b))
            .unwrap();
        assert_eq!(lhs, Bijection::translation(&a.xor(&b)));
    }

    #[test]
    fn compose_and_inverse() {
        let g = Bijection::new(2, vec![1, 3, 0, 2]).unwrap();
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        // a coordinate 3-cycle composes to the identity in three steps
        let sigma = CoordPerm::from_one_based(&[3, 1, 2]).unwrap();
        let pi = Bijection::from_coord_perm(&sigma);
        let cubed = pi.compose(&pi.compose(&pi).unwrap()).unwrap();
        assert!(cubed.is_identity());
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all: Vec<Bijection> = Bijection::all(1).collect();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].map(), &[0, 1]);
        assert_eq!(all[1].map(), &[1, 0]);
        let count = Bijection::all(2).count();
        assert_eq!(count, 24);
        let maps: Vec<Vec<u16>> = Bijection::all(2).map(|b| b.map().to_vec()).collect();
        assert!(maps.windows(2).all(|w| w[0] < w[1]));
    }
}
