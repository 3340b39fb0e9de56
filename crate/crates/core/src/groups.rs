//! Automorphism pairs under composition: closure generation, group-law
//! checking, and symmetry classification of a system.
//!
//! Pairs compose componentwise, `(h, h′)∘(g, g′) = (h∘g, h′∘g′)`, and the
//! automorphism pairs of a fixed system form a group under this law. Any
//! subgroup of order above one certifies the system symmetrical; two special
//! shapes get their own flags: coordinate shuffles `(π_σ, π_σ)` and
//! translations `(θ^λ, g′)`.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::bijection::Bijection;
use crate::error::{Error, Result};
use crate::morphisms::{
    all_masked, check_anti_iso, check_iso, find_anti_isos, find_isos, invert_pair, matching,
    MorphismKind, MorphismPair, SearchOptions, DEFAULT_SEARCH_CAP,
};
use crate::perm::CoordPerm;
use crate::state::State;
use crate::table::TruthTable;

/// A finite set of isomorphism pairs, kept sorted and deduplicated so output
/// order is reproducible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairSet {
    n: u8,
    pairs: Vec<MorphismPair>,
}

impl PairSet {
    pub fn new(n: usize, pairs: Vec<MorphismPair>) -> Result<Self> {
        crate::state::check_dim(n)?;
        let mut set = BTreeSet::new();
        for pair in pairs {
            if pair.dim() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: pair.dim(),
                });
            }
            if pair.kind != MorphismKind::Iso {
                return Err(Error::KindMismatch);
            }
            set.insert(pair);
        }
        Ok(Self {
            n: n as u8,
            pairs: set.into_iter().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: &MorphismPair) -> bool {
        self.pairs.binary_search(pair).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MorphismPair> {
        self.pairs.iter()
    }

    pub fn pairs(&self) -> &[MorphismPair] {
        &self.pairs
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.len(),
            "pairs": self.pairs.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Componentwise composition `(p.g ∘ q.g, p.g′ ∘ q.g′)`; `q` acts first.
pub fn compose_pairs(p: &MorphismPair, q: &MorphismPair) -> Result<MorphismPair> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    if p.kind != MorphismKind::Iso || q.kind != MorphismKind::Iso {
        return Err(Error::KindMismatch);
    }
    Ok(MorphismPair {
        g: p.g.compose(&q.g)?,
        gp: p.gp.compose(&q.gp)?,
        kind: MorphismKind::Iso,
    })
}

/// Closure of the generators under composition and inversion, including the
/// identity pair. Pure pair algebra: no system is consulted.
pub fn close_pairs(n: usize, generators: &[MorphismPair]) -> Result<PairSet> {
    let mut set: BTreeSet<MorphismPair> = BTreeSet::new();
    set.insert(MorphismPair::identity(n, MorphismKind::Iso));
    let mut queue: Vec<MorphismPair> = Vec::new();
    for gen in generators {
        if gen.dim() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: gen.dim(),
            });
        }
        if gen.kind != MorphismKind::Iso {
            return Err(Error::KindMismatch);
        }
        if set.insert(gen.clone()) {
            queue.push(gen.clone());
        }
    }
    while let Some(next) = queue.pop() {
        let mut fresh = Vec::new();
        let inv = invert_pair(&next);
        if !set.contains(&inv) {
            fresh.push(inv);
        }
        for other in &set {
            for candidate in [compose_pairs(&next, other)?, compose_pairs(other, &next)?] {
                if !set.contains(&candidate) {
                    fresh.push(candidate);
                }
            }
        }
        for pair in fresh {
            if set.insert(pair.clone()) {
                queue.push(pair);
            }
        }
    }
    Ok(PairSet {
        n: n as u8,
        pairs: set.into_iter().collect(),
    })
}

/// Validates every generator as an automorphism pair of `phi`, then closes.
pub fn generate_group(generators: &PairSet, phi: &TruthTable) -> Result<PairSet> {
    if generators.dim() != phi.dim() {
        return Err(Error::DimensionMismatch {
            left: generators.dim(),
            right: phi.dim(),
        });
    }
    for (index, pair) in generators.iter().enumerate() {
        if !check_iso(phi, phi, &pair.g, &pair.gp)? {
            return Err(Error::NotAnAutomorphism { index });
        }
    }
    close_pairs(phi.dim(), generators.pairs())
}

/// Why a pair set fails to be a symmetry group of `phi`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupDefect {
    DimensionMismatch,
    MissingIdentity,
    NotAnAutomorphism { index: usize },
    NotClosedUnderComposition { left: usize, right: usize },
    NotClosedUnderInversion { index: usize },
}

impl fmt::Display for GroupDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupDefect::DimensionMismatch => write!(f, "dimension mismatch"),
            GroupDefect::MissingIdentity => write!(f, "missing identity pair"),
            GroupDefect::NotAnAutomorphism { index } => {
                write!(f, "element {index} is not an automorphism")
            }
            GroupDefect::NotClosedUnderComposition { left, right } => {
                write!(
                    f,
                    "composition of elements {left} and {right} escapes the set"
                )
            }
            GroupDefect::NotClosedUnderInversion { index } => {
                write!(f, "inverse of element {index} escapes the set")
            }
        }
    }
}

/// Group-law check; `None` means the set is a group of automorphism pairs.
pub fn group_defect(set: &PairSet, phi: &TruthTable) -> Option<GroupDefect> {
    if set.dim() != phi.dim() {
        return Some(GroupDefect::DimensionMismatch);
    }
    for (index, pair) in set.iter().enumerate() {
        match check_iso(phi, phi, &pair.g, &pair.gp) {
            Ok(true) => {}
            _ => return Some(GroupDefect::NotAnAutomorphism { index }),
        }
    }
    if !set.contains(&MorphismPair::identity(phi.dim(), MorphismKind::Iso)) {
        return Some(GroupDefect::MissingIdentity);
    }
    for (index, pair) in set.iter().enumerate() {
        if !set.contains(&invert_pair(pair)) {
            return Some(GroupDefect::NotClosedUnderInversion { index });
        }
    }
    for (left, p) in set.iter().enumerate() {
        for (right, q) in set.iter().enumerate() {
            let composed = compose_pairs(p, q).expect("kinds and dimensions agree");
            if !set.contains(&composed) {
                return Some(GroupDefect::NotClosedUnderComposition { left, right });
            }
        }
    }
    None
}

pub fn is_group(set: &PairSet, phi: &TruthTable) -> bool {
    group_defect(set, phi).is_none()
}

/// Options for [`classify_with`].
#[derive(Clone, Debug)]
pub struct ClassifyOptions {
    /// Dimension cap for the full automorphism searches; the targeted
    /// coordinate and translation scans run regardless.
    pub max_dim: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self {
            max_dim: DEFAULT_SEARCH_CAP,
        }
    }
}

/// Symmetry flags with witnesses. `None` on the tri-state flags means the
/// exhaustive search was out of reach and no cheap witness settled it.
#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub dim: usize,
    /// Cardinality of the full automorphism pair set, when computed.
    pub aut_order: Option<usize>,
    /// More than one automorphism pair exists.
    pub symmetrical: Option<bool>,
    /// Some anti-automorphism pair exists.
    pub anti_symmetrical: Option<bool>,
    /// Some `(π_σ, π_σ)` with `σ ≠ id` is an automorphism pair.
    pub coordinate_symmetric: bool,
    /// Some `(θ^λ, g′) ≠ (id, id)` is an automorphism pair; `λ = 0` with a
    /// non-identity relabeling counts.
    pub translation_symmetric: bool,
    /// The table equals its dual.
    pub self_dual: bool,
    pub symmetry_witness: Option<MorphismPair>,
    pub anti_symmetry_witness: Option<MorphismPair>,
    pub coordinate_witness: Option<CoordPerm>,
    pub translation_witness: Option<MorphismPair>,
}

impl SymmetryReport {
    pub fn to_json(&self) -> Value {
        let flag = |v: Option<bool>| match v {
            Some(b) => json!(b),
            None => Value::Null,
        };
        json!({
            "order": self.aut_order,
            "flags": {
                "symmetrical": flag(self.symmetrical),
                "anti_symmetrical": flag(self.anti_symmetrical),
                "coordinate_symmetric": self.coordinate_symmetric,
                "translation_symmetric": self.translation_symmetric,
                "self_dual": self.self_dual,
            },
            "witnesses": {
                "symmetry": self.symmetry_witness.as_ref().map(|p| p.to_json()),
                "anti_symmetry": self.anti_symmetry_witness.as_ref().map(|p| p.to_json()),
                "coordinate": self.coordinate_witness.as_ref().map(|s| json!(s.one_based())),
                "translation": self.translation_witness.as_ref().map(|p| p.to_json()),
            },
        })
    }
}

impl fmt::Display for SymmetryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tri = |v: Option<bool>| match v {
            Some(true) => "true",
            Some(false) => "false",
            None => "unknown",
        };
        match self.aut_order {
            Some(k) => writeln!(f, "automorphism pairs: {k}")?,
            None => writeln!(f, "automorphism pairs: not enumerated")?,
        }
        writeln!(f, "symmetrical: {}", tri(self.symmetrical))?;
        if let Some(w) = &self.symmetry_witness {
            writeln!(f, "  witness: {w}")?;
        }
        writeln!(f, "anti_symmetrical: {}", tri(self.anti_symmetrical))?;
        if let Some(w) = &self.anti_symmetry_witness {
            writeln!(f, "  witness: {w}")?;
        }
        writeln!(f, "coordinate_symmetric: {}", self.coordinate_symmetric)?;
        if let Some(w) = &self.coordinate_witness {
            writeln!(f, "  witness: sigma = {w}")?;
        }
        writeln!(f, "translation_symmetric: {}", self.translation_symmetric)?;
        if let Some(w) = &self.translation_witness {
            writeln!(f, "  witness: {w}")?;
        }
        write!(f, "self_dual: {}", self.self_dual)
    }
}

/// Classifies with the default search cap.
pub fn classify(phi: &TruthTable) -> Result<SymmetryReport> {
    classify_with(phi, &ClassifyOptions::default())
}

/// Computes the symmetry flags. Coordinate, translation, and duality flags
/// use targeted scans (`n!` shuffles, `2^n` translations) and work at any
/// supported dimension; the exact automorphism counts run only below the
/// cap.
pub fn classify_with(phi: &TruthTable, opts: &ClassifyOptions) -> Result<SymmetryReport> {
    let n = phi.dim();
    let self_dual = phi.dual() == *phi;

    let mut coordinate_witness = None;
    for sigma in CoordPerm::all(n) {
        if sigma.is_identity() {
            continue;
        }
        let pi = Bijection::from_coord_perm(&sigma);
        if check_iso(phi, phi, &pi, &pi)? {
            coordinate_witness = Some(sigma);
            break;
        }
    }

    let translation_witness = translation_scan(phi)?;

    let mut aut_order = None;
    let mut symmetrical = None;
    let mut symmetry_witness = None;
    let mut anti_symmetrical = None;
    let mut anti_symmetry_witness = None;

    if n <= opts.max_dim {
        let opts = SearchOptions {
            max_dim: n,
            ..SearchOptions::default()
        };
        let isos = find_isos(phi, phi, &opts)?;
        aut_order = Some(isos.count);
        symmetrical = Some(isos.count > 1);
        symmetry_witness = isos.pairs.iter().find(|p| !p.is_identity()).cloned();
        let antis = find_anti_isos(phi, phi, &opts)?;
        anti_symmetrical = Some(antis.count > 0);
        anti_symmetry_witness = antis.pairs.first().cloned();
    } else {
        // cheap certificates only; leave unknown when none is found
        if coordinate_witness.is_some() || translation_witness.is_some() {
            symmetrical = Some(true);
        }
        let id = Bijection::identity(n);
        if check_anti_iso(phi, phi, &id, &id)? {
            anti_symmetrical = Some(true);
            anti_symmetry_witness = Some(MorphismPair::identity(n, MorphismKind::AntiIso));
        }
    }

    if symmetry_witness.is_none() {
        symmetry_witness = coordinate_witness
            .as_ref()
            .map(|sigma| {
                let pi = Bijection::from_coord_perm(sigma);
                MorphismPair::new(pi.clone(), pi, MorphismKind::Iso)
            })
            .transpose()?
            .or_else(|| translation_witness.clone());
    }

    Ok(SymmetryReport {
        dim: n,
        aut_order,
        symmetrical,
        anti_symmetrical,
        coordinate_symmetric: coordinate_witness.is_some(),
        translation_symmetric: translation_witness.is_some(),
        self_dual,
        symmetry_witness,
        anti_symmetry_witness,
        coordinate_witness,
        translation_witness,
    })
}

/// Finds the first translation pair in scan order: `λ` ascending, then the
/// lexicographically smallest mask relabeling completing it. For `λ = 0`
/// the identity completion is skipped, since `(id, id)` certifies nothing.
fn translation_scan(phi: &TruthTable) -> Result<Option<MorphismPair>> {
    let n = phi.dim();
    let size = 1usize << n;
    let phi_masked = all_masked(phi);
    for lambda in State::all(n) {
        let theta = Bijection::translation(&lambda);
        // θ is an involution, so the conjugate of Φ^ν by θ is θ∘Φ^ν∘θ
        let mut candidates: Vec<Vec<u16>> = Vec::with_capacity(size);
        let mut feasible = true;
        for masked in &phi_masked {
            let conj: Vec<u16> = (0..size)
                .map(|x| theta.map()[masked[theta.map_idx(x)] as usize])
                .collect();
            let s: Vec<u16> = (0..size as u16)
                .filter(|&nup| phi_masked[nup as usize] == conj)
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
        let skip_identity = lambda.is_zero();
        let mut witness = None;
        matching::for_each_perfect_matching(&candidates, |assignment| {
            let is_id = assignment.iter().enumerate().all(|(i, &v)| i == v as usize);
            if skip_identity && is_id {
                return true;
            }
            witness = Some(assignment.to_vec());
            false
        });
        if let Some(map) = witness {
            return Ok(Some(MorphismPair {
                g: theta,
                gp: Bijection::new(n, map)?,
                kind: MorphismKind::Iso,
            }));
        }
    }
    Ok(None)
}
