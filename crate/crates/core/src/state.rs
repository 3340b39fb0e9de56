use std::fmt;

use crate::error::{Error, Result};

/// Largest supported dimension; tables hold `2^n` rows.
pub const MAX_DIM: usize = 16;

/// A point of `B^n`.
///
/// Coordinate 1 is written leftmost and is the most significant bit of the
/// canonical index, so `State` round-trips between the bit-tuple view and
/// `index = Σ bit_i · 2^(n-1-i)`. The same type doubles as an update mask:
/// bit `i` set means "coordinate `i` is selected".
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    n: u8,
    index: u16,
}

pub(crate) fn check_dim(n: usize) -> Result<()> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::DimensionOutOfRange { n });
    }
    Ok(())
}

impl State {
    pub fn new(n: usize, index: usize) -> Result<Self> {
        check_dim(n)?;
        if index >= 1usize << n {
            return Err(Error::IndexOutOfRange { index, n });
        }
        Ok(Self {
            n: n as u8,
            index: index as u16,
        })
    }

    /// All-zeros state (also the empty mask).
    pub fn zero(n: usize) -> Self {
        Self::new(n, 0).expect("dimension in range")
    }

    /// All-ones state (the full mask).
    pub fn ones(n: usize) -> Self {
        Self::new(n, (1usize << n) - 1).expect("dimension in range")
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        check_dim(bits.len())?;
        let index = bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize);
        Self::new(bits.len(), index)
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    /// Bit at 0-based position `i`, counting from the left.
    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.dim(), "coordinate {i} out of range");
        (self.index >> (self.dim() - 1 - i)) & 1 == 1
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.dim()).map(move |i| self.bit(i))
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }

    fn with_index(&self, index: u16) -> Self {
        Self {
            n: self.n,
            index: index & self.full_mask(),
        }
    }

    fn full_mask(&self) -> u16 {
        (((1u32 << self.n) - 1) & 0xffff) as u16
    }

    pub fn xor(&self, other: &State) -> State {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.with_index(self.index ^ other.index)
    }

    pub fn and(&self, other: &State) -> State {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.with_index(self.index & other.index)
    }

    pub fn or(&self, other: &State) -> State {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.with_index(self.index | other.index)
    }

    pub fn complement(&self) -> State {
        self.with_index(!self.index)
    }

    /// Mask inclusion: every bit set here is set in `other`.
    pub fn is_subset_of(&self, other: &State) -> bool {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.index & !other.index == 0
    }

    /// All `2^n` states in canonical index order.
    pub fn all(n: usize) -> impl Iterator<Item = State> {
        check_dim(n).expect("dimension in range");
        (0..1usize << n).map(move |i| State {
            n: n as u8,
            index: i as u16,
        })
    }

    pub fn bit_string(&self) -> String {
        format!("{:0width$b}", self.index, width = self.dim())
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bit_string())
    }
}

impl fmt::Debug for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "State({})", self.bit_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_and_bits_round_trip() {
        for n in 1..=4 {
            for s in State::all(n) {
                let bits: Vec<bool> = s.bits().collect();
                assert_eq!(State::from_bits(&bits).unwrap(), s);
            }
        }
    }

    #[test]
    fn leftmost_bit_is_most_significant() {
        // (1,0) over B^2 has canonical index 2
        let s = State::from_bits(&[true, false]).unwrap();
        assert_eq!(s.index(), 2);
        assert!(s.bit(0));
        assert!(!s.bit(1));
        assert_eq!(s.bit_string(), "10");
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert_eq!(State::new(0, 0), Err(Error::DimensionOutOfRange { n: 0 }));
        assert_eq!(State::new(17, 0), Err(Error::DimensionOutOfRange { n: 17 }));
        assert_eq!(
            State::new(2, 4),
            Err(Error::IndexOutOfRange { index: 4, n: 2 })
        );
    }

    #[test]
    fn mask_algebra() {
        let a = State::from_bits(&[true, false, true]).unwrap();
        let b = State::from_bits(&[true, true, false]).unwrap();
        assert_eq!(a.xor(&b).bit_string(), "011");
        assert_eq!(a.and(&b).bit_string(), "100");
        assert_eq!(a.or(&b).bit_string(), "111");
        assert_eq!(a.complement().bit_string(), "010");
        assert!(a.and(&b).is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
    }
}
