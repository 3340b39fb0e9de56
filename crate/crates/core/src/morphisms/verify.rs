//! Machine-checks that the three characterizations of a pair agree on a
//! concrete instance: the pointwise masked-update diagrams, the discrete
//! trajectory identity, and the timed signal identity.
//!
//! The pointwise statement is always evaluated exhaustively. Trajectory
//! statements are exhaustive for small instances (`n ≤ 2`, horizon `≤ 3`)
//! and sampled with a seeded generator beyond that, so reports are
//! reproducible.
//!
//! For anti-isomorphism pairs the trajectory statements are relational: the
//! `g`-image of a forward orbit must be a member branch of the image
//! system's backward relation under the lifted schedule — each
//! `Ψ^{ĝ′(α)^k}` step recovers the `g`-image one step earlier. Backward
//! steps may branch, so this membership reading is the weakest faithful
//! one, and any pair that passes the pointwise statement but fails it is
//! reported rather than hidden.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bijection::Bijection;
use crate::error::{Error, Result};
use crate::orbits::{
    all_mask_sequences, continuous_anti_orbit, continuous_orbit, discrete_orbit, is_anti_orbit,
    lift_hat, lift_tilde, OrbitPrefix, SchedulePrefix, TimedSchedule,
};
use crate::state::State;
use crate::table::TruthTable;

use super::{check_dims, MorphismKind};

pub const DEFAULT_HORIZON: i32 = 4;
pub const DEFAULT_BUDGET: u64 = 1000;
pub const DEFAULT_SEED: u64 = 0xbd5eed;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Horizon `K` for trajectory statements.
    pub horizon: i32,
    /// Sample count when the instance is too large to enumerate.
    pub budget: u64,
    /// Seed for the sampling generator, recorded in the report.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            horizon: DEFAULT_HORIZON,
            budget: DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
        }
    }
}

/// First failure found while checking one statement.
#[derive(Clone, PartialEq, Debug)]
pub enum Counterexample {
    Pointwise {
        nu: State,
        mu: State,
    },
    Discrete {
        mu: State,
        masks: Vec<State>,
        step: i32,
    },
    Timed {
        mu: State,
        masks: Vec<State>,
        times: Vec<f64>,
        at: f64,
    },
}

impl Counterexample {
    fn to_json(&self) -> Value {
        match self {
            Counterexample::Pointwise { nu, mu } => json!({
                "type": "pointwise",
                "nu": nu.bit_string(),
                "mu": mu.bit_string(),
            }),
            Counterexample::Discrete { mu, masks, step } => json!({
                "type": "discrete",
                "mu": mu.bit_string(),
                "masks": masks.iter().map(|m| m.bit_string()).collect::<Vec<_>>(),
                "step": step,
            }),
            Counterexample::Timed {
                mu,
                masks,
                times,
                at,
            } => json!({
                "type": "timed",
                "mu": mu.bit_string(),
                "masks": masks.iter().map(|m| m.bit_string()).collect::<Vec<_>>(),
                "times": times,
                "at": at,
            }),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Pointwise { nu, mu } => write!(f, "nu={nu}, mu={mu}"),
            Counterexample::Discrete { mu, masks, step } => {
                write!(f, "mu={mu}, masks=[")?;
                for (i, m) in masks.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, "], step={step}")
            }
            Counterexample::Timed { mu, at, .. } => write!(f, "mu={mu}, t={at}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StatementOutcome {
    pub pass: bool,
    pub samples: u64,
    pub counterexample: Option<Counterexample>,
}

impl StatementOutcome {
    fn pass(samples: u64) -> Self {
        Self {
            pass: true,
            samples,
            counterexample: None,
        }
    }

    fn fail(samples: u64, counterexample: Counterexample) -> Self {
        Self {
            pass: false,
            samples,
            counterexample: Some(counterexample),
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "pass": self.pass,
            "samples": self.samples,
            "counterexample": self.counterexample.as_ref().map(|c| c.to_json()),
        })
    }
}

/// Outcome of checking the three equivalent statements on one pair.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub kind: MorphismKind,
    pub horizon: i32,
    pub budget: u64,
    pub seed: u64,
    /// Whether trajectory statements were enumerated rather than sampled.
    pub exhaustive: bool,
    /// Statement a): every masked-update diagram commutes.
    pub pointwise: StatementOutcome,
    /// Statement b): the discrete trajectory identity.
    pub discrete: StatementOutcome,
    /// Statement c): the stationarity identity plus the timed signal
    /// identity at breakpoints and interior samples.
    pub timed: StatementOutcome,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.pointwise.pass && self.discrete.pass && self.timed.pass
    }

    /// The three statements are equivalent, so verdicts must agree; a
    /// disagreement on a sampled instance is worth manual analysis.
    pub fn verdicts_agree(&self) -> bool {
        self.pointwise.pass == self.discrete.pass && self.discrete.pass == self.timed.pass
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": self.kind.as_str(),
            "horizon": self.horizon,
            "budget": self.budget,
            "seed": self.seed,
            "exhaustive": self.exhaustive,
            "statements": {
                "a": self.pointwise.to_json(),
                "b": self.discrete.to_json(),
                "c": self.timed.to_json(),
            },
            "all_pass": self.all_pass(),
            "verdicts_agree": self.verdicts_agree(),
        })
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |f: &mut fmt::Formatter<'_>, label: &str, o: &StatementOutcome| {
            write!(
                f,
                "{label}: {} [{} samples]",
                if o.pass { "PASS" } else { "FAIL" },
                o.samples
            )?;
            if let Some(c) = &o.counterexample {
                write!(f, " counterexample: {c}")?;
            }
            writeln!(f)
        };
        writeln!(
            f,
            "{} pair, horizon {}, budget {}, seed {}, {}",
            self.kind.as_str(),
            self.horizon,
            self.budget,
            self.seed,
            if self.exhaustive {
                "exhaustive"
            } else {
                "sampled"
            }
        )?;
        line(f, "a (pointwise diagrams)", &self.pointwise)?;
        line(f, "b (discrete orbits)   ", &self.discrete)?;
        line(f, "c (timed signals)     ", &self.timed)?;
        write!(
            f,
            "verdicts agree: {}",
            if self.verdicts_agree() { "yes" } else { "NO" }
        )
    }
}

/// Checks the isomorphism statements on `(Φ, Ψ, g, g′)`.
pub fn verify_iso(
    phi: &TruthTable,
    psi: &TruthTable,
    g: &Bijection,
    gp: &Bijection,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    verify(phi, psi, g, gp, opts, MorphismKind::Iso)
}

/// Checks the anti-isomorphism statements on `(Φ, Ψ, g, g′)`.
pub fn verify_anti_iso(
    phi: &TruthTable,
    psi: &TruthTable,
    g: &Bijection,
    gp: &Bijection,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    verify(phi, psi, g, gp, opts, MorphismKind::AntiIso)
}

fn verify(
    phi: &TruthTable,
    psi: &TruthTable,
    g: &Bijection,
    gp: &Bijection,
    opts: &VerifyOptions,
    kind: MorphismKind,
) -> Result<VerificationReport> {
    let n = check_dims(phi, psi, g, gp)?;
    if opts.horizon < -1 {
        return Err(Error::LengthMismatch {
            expected: 0,
            got: opts.horizon.unsigned_abs() as usize,
        });
    }
    let exhaustive = n <= 2 && opts.horizon <= 3;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    let pointwise = check_pointwise(phi, psi, g, gp, kind);
    let discrete = check_discrete(phi, psi, g, gp, opts, kind, exhaustive, &mut rng)?;
    let timed = check_timed(phi, psi, g, gp, opts, kind, exhaustive, &mut rng)?;

    Ok(VerificationReport {
        kind,
        horizon: opts.horizon,
        budget: opts.budget,
        seed: opts.seed,
        exhaustive,
        pointwise,
        discrete,
        timed,
    })
}

fn check_pointwise(
    phi: &TruthTable,
    psi: &TruthTable,
    g: &Bijection,
    gp: &Bijection,
    kind: MorphismKind,
) -> StatementOutcome {
    let size = phi.size();
    let mut samples = 0u64;
    for nu in 0..size {
        let nu_image = gp.map_idx(nu);
        for mu in 0..size {
            samples += 1;
            let forward = g.map_idx(phi.nu_idx(nu, mu));
            let ok = match kind {
                MorphismKind::Iso => forward == psi.nu_idx(nu_image, g.map_idx(mu)),
                MorphismKind::AntiIso => psi.nu_idx(nu_image, forward) == g.map_idx(mu),
            };
            if !ok {
                return StatementOutcome::fail(
                    samples,
                    Counterexample::Pointwise {
                        nu: State::new(phi.dim(), nu).expect("index in range"),
                        mu: State::new(phi.dim(), mu).expect("index in range"),
                    },
                );
            }
        }
    }
    StatementOutcome::pass(samples)
}

fn random_masks(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Vec<State> {
    (0..len)
        .map(|_| State::new(n, rng.gen_range(0..1usize << n)).expect("index in range"))
        .collect()
}

fn random_state(rng: &mut ChaCha8Rng, n: usize) -> State {
    State::new(n, rng.gen_range(0..1usize << n)).expect("index in range")
}

/// `(μ, α)` instances for a trajectory statement: the full enumeration when
/// small, otherwise `budget` random draws.
fn trajectory_instances(
    n: usize,
    len: usize,
    exhaustive: bool,
    budget: u64,
    rng: &mut ChaCha8Rng,
) -> Vec<(State, Vec<State>)> {
    if exhaustive {
        let mut out = Vec::new();
        for masks in all_mask_sequences(n, len) {
            for mu in State::all(n) {
                out.push((mu, masks.clone()));
            }
        }
        out
    } else {
        (0..budget)
            .map(|_| (random_state(rng, n), random_masks(rng, n, len)))
            .collect()
    }
}

#[allow(clippy::too_many_arguments)]
fn check_discrete(
    phi: &TruthTable,
    psi: &TruthTable,
    g: &Bijection,
    gp: &Bijection,
    opts: &VerifyOptions,
    kind: MorphismKind,
    exhaustive: bool,
    rng: &mut ChaCha8Rng,
) -> Result<StatementOutcome> {
    let n = phi.dim();
    let len = (opts.horizon + 1) as usize;
    let mut samples = 0u64;
    for (mu, masks) in trajectory_instances(n, len, exhaustive, opts.budget, rng) {
        samples += 1;
        let alpha = SchedulePrefix::new(n, masks.clone())?;
        let orbit = discrete_orbit(phi, &mu, &alpha)?;
        let image = g_image(g, &orbit)?;
        let lifted = lift_hat(gp, &alpha)?;
        let failed_step = match kind {
            MorphismKind::Iso => {
                let mirrored = discrete_orbit(psi, &g.apply(&mu)?, &lifted)?;
                image
                    .values()
                    .iter()
                    .zip(mirrored.values())
                    .position(|(a, b)| a != b)
            }
            MorphismKind::AntiIso => {
                if is_anti_orbit(psi, &lifted, &image)? {
                    None
                } else {
                    first_invalid_backward_step(psi, lifted.steps(), image.values())
                }
            }
        };
        if let Some(pos) = failed_step {
            return Ok(StatementOutcome::fail(
                samples,
                Counterexample::Discrete {
                    mu,
                    masks,
                    step: pos as i32 - 1,
                },
            ));
        }
    }
    Ok(StatementOutcome::pass(samples))
}

fn g_image(g: &Bijection, orbit: &OrbitPrefix) -> Result<OrbitPrefix> {
    OrbitPrefix::new(
        orbit
            .values()
            .iter()
            .map(|v| g.apply(v))
            .collect::<Result<Vec<_>>>()?,
    )
}

/// Position (into the value list) of the first entry violating the backward
/// recurrence, for counterexample reporting.
fn first_invalid_backward_step(
    psi: &TruthTable,
    masks: &[State],
    values: &[State],
) -> Option<usize> {
    for (k, mask) in masks.iter().enumerate() {
        if psi.nu_idx(mask.index(), values[k + 1].index()) != values[k].index() {
            return Some(k + 1);
        }
    }
    None
}

fn random_times(rng: &mut ChaCha8Rng, len: usize) -> Vec<f64> {
    let mut t = rng.gen_range(-1.0..1.0);
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(t);
        t += rng.gen_range(0.25..1.25);
    }
    out
}

/// Breakpoints, one interior point per interval, and one point on each side.
fn sample_times(times: &[f64]) -> Vec<f64> {
    if times.is_empty() {
        return vec![0.0];
    }
    let mut out = vec![times[0] - 1.0];
    for (i, &t) in times.iter().enumerate() {
        out.push(t);
        if let Some(&next) = times.get(i + 1) {
            out.push((t + next) / 2.0);
        }
    }
    out.push(times[times.len() - 1] + 1.0);
    out
}

#[allow(clippy::too_many_arguments)]
fn check_timed(
    phi: &TruthTable,
    psi: &TruthTable,
    g: &Bijection,
    gp: &Bijection,
    opts: &VerifyOptions,
    kind: MorphismKind,
    exhaustive: bool,
    rng: &mut ChaCha8Rng,
) -> Result<StatementOutcome> {
    let n = phi.dim();
    let mut samples = 0u64;

    // stationarity at the zero mask: g(μ) must be fixed by Ψ^{g′(0…0)}
    let zero_image = gp.map_idx(0);
    for mu in 0..phi.size() {
        samples += 1;
        let moved = psi.nu_idx(zero_image, g.map_idx(mu));
        if moved != g.map_idx(mu) {
            return Ok(StatementOutcome::fail(
                samples,
                Counterexample::Pointwise {
                    nu: State::zero(n),
                    mu: State::new(n, mu)?,
                },
            ));
        }
    }

    let len = (opts.horizon + 1) as usize;
    for (mu, masks) in trajectory_instances(n, len, exhaustive, opts.budget, rng) {
        samples += 1;
        let times = random_times(rng, len);
        let rho = TimedSchedule::new(SchedulePrefix::new(n, masks.clone())?, times.clone())?;
        let forward = continuous_orbit(phi, &mu, &rho)?;
        let lifted = lift_tilde(gp, &rho)?;

        let mirrored = match kind {
            MorphismKind::Iso => continuous_orbit(psi, &g.apply(&mu)?, &lifted)?,
            MorphismKind::AntiIso => {
                let orbit = discrete_orbit(phi, &mu, rho.schedule())?;
                let image = g_image(g, &orbit)?;
                if !is_anti_orbit(psi, lifted.schedule(), &image)? {
                    let pos =
                        first_invalid_backward_step(psi, lifted.schedule().steps(), image.values())
                            .expect("membership failed at some step");
                    return Ok(StatementOutcome::fail(
                        samples,
                        Counterexample::Timed {
                            mu,
                            masks,
                            times: times.clone(),
                            at: times[pos - 1],
                        },
                    ));
                }
                continuous_anti_orbit(psi, &image, &lifted)?
            }
        };

        for t in sample_times(rho.times()) {
            let expected = g.apply(&forward.value_at(t))?;
            if mirrored.value_at(t) != expected {
                return Ok(StatementOutcome::fail(
                    samples,
                    Counterexample::Timed {
                        mu,
                        masks,
                        times,
                        at: t,
                    },
                ));
            }
        }
    }
    Ok(StatementOutcome::pass(samples))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphisms::{check_iso, invert_pair, MorphismPair};

    fn table(n: usize, rows: &[u16]) -> TruthTable {
        TruthTable::from_rows(n, rows.to_vec()).unwrap()
    }

    fn conjugate_fixture() -> (TruthTable, TruthTable, Bijection, Bijection) {
        let phi = table(2, &[1, 2, 3, 0]);
        let psi = table(2, &[3, 2, 0, 1]);
        let g = Bijection::new(2, vec![3, 1, 2, 0]).unwrap();
        let gp = Bijection::new(2, vec![0, 2, 1, 3]).unwrap();
        (phi, psi, g, gp)
    }

    #[test]
    fn conjugate_pair_passes_all_statements() {
        let (phi, psi, g, gp) = conjugate_fixture();
        let report = verify_iso(&phi, &psi, &g, &gp, &VerifyOptions::default()).unwrap();
        assert!(report.all_pass(), "{report}");
        assert!(report.verdicts_agree());
        // default horizon 4 is sampled even at n = 2
        assert!(!report.exhaustive);
    }

    #[test]
    fn exhaustive_regime_at_small_horizon() {
        let (phi, psi, g, gp) = conjugate_fixture();
        let opts = VerifyOptions {
            horizon: 2,
            ..VerifyOptions::default()
        };
        let report = verify_iso(&phi, &psi, &g, &gp, &opts).unwrap();
        assert!(report.exhaustive);
        assert!(report.all_pass());
        // 4 starts × 4^3 schedules
        assert_eq!(report.discrete.samples, 256);
    }

    #[test]
    fn corrupted_relabeling_fails_pointwise_and_a_trajectory_statement() {
        let (phi, psi, g, gp) = conjugate_fixture();
        // swap two images in g'
        let mut broken = gp.map().to_vec();
        broken.swap(0, 3);
        let gp_bad = Bijection::new(2, broken).unwrap();
        let report = verify_iso(&phi, &psi, &g, &gp_bad, &VerifyOptions::default()).unwrap();
        assert!(!report.pointwise.pass);
        assert!(report.pointwise.counterexample.is_some());
        assert!(!report.discrete.pass || !report.timed.pass);
    }

    #[test]
    fn identity_pair_on_same_system_passes() {
        let (phi, _, _, _) = conjugate_fixture();
        let id = Bijection::identity(2);
        let report = verify_iso(&phi, &phi, &id, &id, &VerifyOptions::default()).unwrap();
        assert!(report.all_pass());
    }

    #[test]
    fn negation_identity_pair_passes_anti_statements() {
        let phi = TruthTable::negation(2);
        let id = Bijection::identity(2);
        let report = verify_anti_iso(&phi, &phi, &id, &id, &VerifyOptions::default()).unwrap();
        assert!(report.all_pass(), "{report}");
    }

    #[test]
    fn constants_fail_anti_statements_via_identity() {
        let phi = TruthTable::constant(State::new(2, 1).unwrap());
        let psi = TruthTable::constant(State::new(2, 2).unwrap());
        let id = Bijection::identity(2);
        let report = verify_anti_iso(&phi, &psi, &id, &id, &VerifyOptions::default()).unwrap();
        assert!(!report.pointwise.pass);
    }

    #[test]
    fn empty_horizon_trajectories_always_pass() {
        let (phi, psi, g, gp) = conjugate_fixture();
        let opts = VerifyOptions {
            horizon: -1,
            ..VerifyOptions::default()
        };
        let report = verify_iso(&phi, &psi, &g, &gp, &opts).unwrap();
        assert!(report.discrete.pass);
        // one sample per start state, empty schedule
        assert_eq!(report.discrete.samples, 4);
        // the backward statement degenerates the same way
        let phi = TruthTable::negation(2);
        let id = Bijection::identity(2);
        let report = verify_anti_iso(&phi, &phi, &id, &id, &opts).unwrap();
        assert!(report.discrete.pass);
        assert_eq!(report.discrete.samples, 4);
    }

    #[test]
    fn reports_are_reproducible_for_a_seed() {
        let (phi, psi, g, gp) = conjugate_fixture();
        let opts = VerifyOptions {
            horizon: 5,
            budget: 64,
            seed: 7,
        };
        let a = verify_iso(&phi, &psi, &g, &gp, &opts).unwrap();
        let b = verify_iso(&phi, &psi, &g, &gp, &opts).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn inverted_conjugate_pair_verifies_backwards() {
        let (phi, psi, g, gp) = conjugate_fixture();
        let inv = invert_pair(&MorphismPair::new(g, gp, MorphismKind::Iso).unwrap());
        assert!(check_iso(&psi, &phi, &inv.g, &inv.gp).unwrap());
        let report = verify_iso(&psi, &phi, &inv.g, &inv.gp, &VerifyOptions::default()).unwrap();
        assert!(report.all_pass());
    }
}
