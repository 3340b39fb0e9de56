//! Isomorphism and anti-isomorphism pairs `(g, g′)` between systems.
//!
//! A pair is an isomorphism from `Φ` to `Ψ` when `g(Φ^ν(μ)) = Ψ^{g′(ν)}(g(μ))`
//! for every mask and state: `g` maps states, `g′` relabels update masks, and
//! every masked-update square commutes. Anti-isomorphisms reverse the bottom
//! arrow: `Ψ^{g′(ν)}(g(Φ^ν(μ))) = g(μ)`, so the image system runs the
//! original backwards.
//!
//! Checking a given pair is a straight scan over all `(ν, μ)`. Finding all
//! pairs is exhaustive: every candidate `g` is tried, and for each `g` the
//! admissible `g′` are exactly the perfect matchings of the bipartite
//! relation "mask `ν` may map to `ν′`", enumerated by backtracking.

pub(crate) mod matching;
mod verify;

pub use verify::{
    verify_anti_iso, verify_iso, Counterexample, StatementOutcome, VerificationReport,
    VerifyOptions, DEFAULT_BUDGET, DEFAULT_HORIZON, DEFAULT_SEED,
};

use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::bijection::Bijection;
use crate::error::{Error, Result};
use crate::table::TruthTable;

/// Largest dimension the exhaustive pair search will attempt by default;
/// `(2^4)! ≈ 2·10^13` candidate maps is already far out of reach.
pub const DEFAULT_SEARCH_CAP: usize = 3;

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MorphismKind {
    Iso,
    AntiIso,
}

impl MorphismKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MorphismKind::Iso => "iso",
            MorphismKind::AntiIso => "anti-iso",
        }
    }
}

/// A couple `(g, g′)` together with which diagram family it satisfies.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MorphismPair {
    pub g: Bijection,
    pub gp: Bijection,
    pub kind: MorphismKind,
}

impl MorphismPair {
    pub fn new(g: Bijection, gp: Bijection, kind: MorphismKind) -> Result<Self> {
        if g.dim() != gp.dim() {
            return Err(Error::DimensionMismatch {
                left: g.dim(),
                right: gp.dim(),
            });
        }
        Ok(Self { g, gp, kind })
    }

    pub fn identity(n: usize, kind: MorphismKind) -> Self {
        Self {
            g: Bijection::identity(n),
            gp: Bijection::identity(n),
            kind,
        }
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    pub fn is_identity(&self) -> bool {
        self.g.is_identity() && self.gp.is_identity()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "g": self.g.map().iter().map(|&i| i as usize).collect::<Vec<_>>(),
            "gp": self.gp.map().iter().map(|&i| i as usize).collect::<Vec<_>>(),
            "kind": self.kind.as_str(),
        })
    }
}

impl fmt::Display for MorphismPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, g'={}, {})", self.g, self.gp, self.kind.as_str())
    }
}

fn check_dims(phi: &TruthTable, psi: &TruthTable, g: &Bijection, gp: &Bijection) -> Result<usize> {
    let n = phi.dim();
    for other in [psi.dim(), g.dim(), gp.dim()] {
        if other != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: other,
            });
        }
    }
    Ok(n)
}

/// Does `g(Φ^ν(μ)) = Ψ^{g′(ν)}(g(μ))` hold for all `2^n · 2^n` pairs?
pub fn check_iso(
    phi: &TruthTable,
    psi: &TruthTable,
    g: &Bijection,
    gp: &Bijection,
) -> Result<bool> {
    let n = check_dims(phi, psi, g, gp)?;
    let size = 1usize << n;
    for nu in 0..size {
        let nu_image = gp.map_idx(nu);
        for mu in 0..size {
            let left = g.map_idx(phi.nu_idx(nu, mu));
            let right = psi.nu_idx(nu_image, g.map_idx(mu));
            if left != right {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Does `Ψ^{g′(ν)}(g(Φ^ν(μ))) = g(μ)` hold for all `(ν, μ)`?
pub fn check_anti_iso(
    phi: &TruthTable,
    psi: &TruthTable,
    g: &Bijection,
    gp: &Bijection,
) -> Result<bool> {
    let n = check_dims(phi, psi, g, gp)?;
    let size = 1usize << n;
    for nu in 0..size {
        let nu_image = gp.map_idx(nu);
        for mu in 0..size {
            let forward = g.map_idx(phi.nu_idx(nu, mu));
            if psi.nu_idx(nu_image, forward) != g.map_idx(mu) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(g, g′) ↦ (g⁻¹, g′⁻¹)`; the inverted pair relates the systems in the
/// opposite direction with the same kind.
pub fn invert_pair(pair: &MorphismPair) -> MorphismPair {
    MorphismPair {
        g: pair.g.inverse(),
        gp: pair.gp.inverse(),
        kind: pair.kind,
    }
}

/// Options for the exhaustive pair search.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Stop collecting pairs beyond this many; the outcome is flagged
    /// truncated.
    pub limit: Option<usize>,
    /// Count matchings without materializing pairs. Ignores `limit`.
    pub count_only: bool,
    /// Dimension cap for the exhaustive search.
    pub max_dim: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            limit: None,
            count_only: false,
            max_dim: DEFAULT_SEARCH_CAP,
        }
    }
}

/// Result of a pair search. `count` equals `pairs.len()` unless the search
/// ran in count-only mode, where it is the full total.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub pairs: Vec<MorphismPair>,
    pub count: usize,
    pub truncated: bool,
}

/// All masked-update tables, indexed by mask.
pub(crate) fn all_masked(t: &TruthTable) -> Vec<Vec<u16>> {
    let size = t.size();
    (0..size)
        .map(|nu| (0..size).map(|mu| t.nu_idx(nu, mu) as u16).collect())
        .collect()
}

fn find_pairs(
    phi: &TruthTable,
    psi: &TruthTable,
    opts: &SearchOptions,
    kind: MorphismKind,
) -> Result<SearchOutcome> {
    if phi.dim() != psi.dim() {
        return Err(Error::DimensionMismatch {
            left: phi.dim(),
            right: psi.dim(),
        });
    }
    let n = phi.dim();
    if n > opts.max_dim {
        return Err(Error::TooLarge {
            what: "exhaustive search dimension",
            size: n as u128,
            limit: opts.max_dim as u128,
        });
    }
    let size = 1usize << n;
    let phi_masked = all_masked(phi);
    let psi_masked = all_masked(psi);

    let mut pairs = Vec::new();
    let mut count = 0usize;
    let mut truncated = false;

    for g_map in (0..size as u16).permutations(size) {
        let mut g_inv = vec![0u16; size];
        for (x, &y) in g_map.iter().enumerate() {
            g_inv[y as usize] = x as u16;
        }
        // conjugate C_ν = g ∘ Φ^ν ∘ g⁻¹, then the admissible mask images
        let mut candidates: Vec<Vec<u16>> = Vec::with_capacity(size);
        let mut feasible = true;
        for masked in &phi_masked {
            let conj: Vec<u16> = (0..size)
                .map(|x| g_map[masked[g_inv[x] as usize] as usize])
                .collect();
            let s: Vec<u16> = (0..size as u16)
                .filter(|&nup| match kind {
                    MorphismKind::Iso => psi_masked[nup as usize] == conj,
                    MorphismKind::AntiIso => {
                        (0..size).all(|x| psi_masked[nup as usize][conj[x] as usize] == x as u16)
                    }
                })
                .collect();
            if s.is_empty() {
                feasible = false;
                break;
            }
            candidates.push(s);
        }
        if !feasible {
            continue;
        }
        let completed = matching::for_each_perfect_matching(&candidates, |assignment| {
            if !opts.count_only {
                if opts.limit.is_some_and(|l| pairs.len() >= l) {
                    truncated = true;
                    return false;
                }
                pairs.push(MorphismPair {
                    g: Bijection::from_map_unchecked(n, g_map.clone()),
                    gp: Bijection::from_map_unchecked(n, assignment.to_vec()),
                    kind,
                });
            }
            count += 1;
            true
        });
        if !completed {
            break;
        }
    }
    Ok(SearchOutcome {
        pairs,
        count,
        truncated,
    })
}

/// Enumerates every isomorphism pair from `Φ` to `Ψ`, in lexicographic order
/// of `g`'s index array and then `g′`'s.
pub fn find_isos(
    phi: &TruthTable,
    psi: &TruthTable,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    find_pairs(phi, psi, opts, MorphismKind::Iso)
}

/// Enumerates every anti-isomorphism pair from `Φ` to `Ψ`, same ordering.
pub fn find_anti_isos(
    phi: &TruthTable,
    psi: &TruthTable,
    opts: &SearchOptions,
) -> Result<SearchOutcome> {
    find_pairs(phi, psi, opts, MorphismKind::AntiIso)
}
