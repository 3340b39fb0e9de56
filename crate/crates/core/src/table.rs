use std::fmt;

use crate::error::{Error, Result};
use crate::state::{check_dim, State};

/// A total function `Φ: B^n → B^n` stored as one output row per input state,
/// in canonical index order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u8,
    rows: Vec<u16>,
}

impl TruthTable {
    /// Builds from output states listed in canonical input order.
    pub fn new(n: usize, outputs: Vec<State>) -> Result<Self> {
        check_dim(n)?;
        if outputs.len() != 1usize << n {
            return Err(Error::LengthMismatch {
                expected: 1usize << n,
                got: outputs.len(),
            });
        }
        let mut rows = Vec::with_capacity(outputs.len());
        for out in &outputs {
            if out.dim() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: out.dim(),
                });
            }
            rows.push(out.index() as u16);
        }
        Ok(Self { n: n as u8, rows })
    }

    /// Builds from raw output indices in canonical input order.
    pub fn from_rows(n: usize, rows: Vec<u16>) -> Result<Self> {
        check_dim(n)?;
        if rows.len() != 1usize << n {
            return Err(Error::LengthMismatch {
                expected: 1usize << n,
                got: rows.len(),
            });
        }
        for &r in &rows {
            if r as usize >= 1usize << n {
                return Err(Error::IndexOutOfRange {
                    index: r as usize,
                    n,
                });
            }
        }
        Ok(Self { n: n as u8, rows })
    }

    pub fn from_fn(n: usize, f: impl Fn(State) -> State) -> Result<Self> {
        check_dim(n)?;
        Self::new(n, State::all(n).map(f).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |s| s).expect("dimension in range")
    }

    pub fn constant(value: State) -> Self {
        Self::from_fn(value.dim(), |_| value).expect("dimension in range")
    }

    /// Componentwise complement, a fixture that shows up all over the tests.
    pub fn negation(n: usize) -> Self {
        Self::from_fn(n, |s| s.complement()).expect("dimension in range")
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn out_idx(&self, input: usize) -> usize {
        self.rows[input] as usize
    }

    pub(crate) fn raw_rows(&self) -> &[u16] {
        &self.rows
    }

    fn state(&self, index: usize) -> State {
        State::new(self.dim(), index).expect("index in range")
    }

    fn check_arg(&self, mu: &State) -> Result<()> {
        if mu.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: mu.dim(),
            });
        }
        Ok(())
    }

    /// `Φ(μ)`.
    pub fn apply(&self, mu: &State) -> Result<State> {
        self.check_arg(mu)?;
        Ok(self.state(self.out_idx(mu.index())))
    }

    /// Masked update index arithmetic: coordinate `i` of the result comes
    /// from `Φ(μ)` when bit `i` of `nu` is set and from `μ` otherwise.
    pub(crate) fn nu_idx(&self, nu: usize, mu: usize) -> usize {
        let full = (1usize << self.dim()) - 1;
        (mu & !nu & full) | (self.out_idx(mu) & nu)
    }

    /// `Φ^ν(μ)`: updates exactly the coordinates selected by `nu`.
    pub fn nu_apply(&self, nu: &State, mu: &State) -> Result<State> {
        self.check_arg(nu)?;
        self.check_arg(mu)?;
        Ok(self.state(self.nu_idx(nu.index(), mu.index())))
    }

    /// Mask of excited (unstable) coordinates: bit `i` set iff `Φ_i(μ) ≠ μ_i`.
    pub fn excited(&self, mu: &State) -> Result<State> {
        self.check_arg(mu)?;
        Ok(self.state(mu.index() ^ self.out_idx(mu.index())))
    }

    /// States with `Φ(μ) = μ`, in canonical order.
    pub fn fixed_points(&self) -> Vec<State> {
        (0..self.size())
            .filter(|&i| self.out_idx(i) == i)
            .map(|i| self.state(i))
            .collect()
    }

    /// The dual `μ ↦ complement(Φ(complement(μ)))`; an involution.
    pub fn dual(&self) -> TruthTable {
        let full = self.size() - 1;
        let rows = (0..self.size())
            .map(|i| (self.out_idx(i ^ full) ^ full) as u16)
            .collect();
        Self { n: self.n, rows }
    }

    /// The full table of `Φ^ν` for a fixed mask.
    pub fn masked(&self, nu: &State) -> Result<TruthTable> {
        self.check_arg(nu)?;
        let rows = (0..self.size())
            .map(|mu| self.nu_idx(nu.index(), mu) as u16)
            .collect();
        Ok(Self { n: self.n, rows })
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &TruthTable) -> Result<TruthTable> {
        if inner.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: inner.dim(),
            });
        }
        let rows = (0..self.size())
            .map(|i| self.rows[inner.out_idx(i)])
            .collect();
        Ok(Self { n: self.n, rows })
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &r)| i == r as usize)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.size()];
        for &r in &self.rows {
            if seen[r as usize] {
                return false;
            }
            seen[r as usize] = true;
        }
        true
    }

    /// `(input, output)` pairs in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (State, State)> + '_ {
        (0..self.size()).map(move |i| (self.state(i), self.state(self.out_idx(i))))
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, ", self.dim())?;
        for (i, (input, output)) in self.entries().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{input}->{output}")?;
        }
        f.write_str(")")
    }
}
