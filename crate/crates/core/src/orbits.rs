//! Forward and backward trajectories of a system under mask schedules.
//!
//! A schedule is a finite prefix of an infinite mask sequence; a timed
//! schedule attaches strictly increasing event instants. Forward orbits
//! follow the masked updates; anti-orbits run the recurrence in reverse and
//! are relations, not functions: a step may have zero or several preimages,
//! so backward trajectories come as sets of branches. Piecewise-constant
//! signals read either kind of trajectory against real time, with the last
//! value persisting after the final event.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::bijection::Bijection;
use crate::error::{Error, Result};
use crate::state::State;
use crate::table::TruthTable;

/// Hard cap on anti-orbit branch fan-out.
pub const DEFAULT_BRANCH_CAP: usize = 1 << 20;

/// Guard on `(2^n)^(K+2)`, the number of trajectories enumerated by
/// [`system_prefixes`].
pub const DEFAULT_ENUMERATION_GUARD: u128 = 1 << 24;

/// A finite prefix `α^0, …, α^K` of an update-mask sequence. The empty
/// prefix stands for horizon `K = -1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchedulePrefix {
    n: u8,
    steps: Vec<State>,
}

impl SchedulePrefix {
    pub fn new(n: usize, steps: Vec<State>) -> Result<Self> {
        crate::state::check_dim(n)?;
        for step in &steps {
            if step.dim() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: step.dim(),
                });
            }
        }
        Ok(Self { n: n as u8, steps })
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    /// Horizon `K`; `-1` for the empty prefix.
    pub fn horizon(&self) -> i32 {
        self.steps.len() as i32 - 1
    }

    pub fn steps(&self) -> &[State] {
        &self.steps
    }

    pub fn reversed(&self) -> SchedulePrefix {
        Self {
            n: self.n,
            steps: self.steps.iter().rev().copied().collect(),
        }
    }
}

/// A schedule prefix with event instants `t_0 < t_1 < … < t_K`.
#[derive(Clone, PartialEq, Debug)]
pub struct TimedSchedule {
    schedule: SchedulePrefix,
    times: Vec<f64>,
}

impl TimedSchedule {
    pub fn new(schedule: SchedulePrefix, times: Vec<f64>) -> Result<Self> {
        if times.len() != schedule.steps().len() {
            return Err(Error::LengthMismatch {
                expected: schedule.steps().len(),
                got: times.len(),
            });
        }
        for (i, w) in times.windows(2).enumerate() {
            // NaN must be rejected too, so require a definite Less
            if w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less) {
                return Err(Error::NonIncreasingTimes { position: i + 1 });
            }
        }
        Ok(Self { schedule, times })
    }

    pub fn dim(&self) -> usize {
        self.schedule.dim()
    }

    pub fn schedule(&self) -> &SchedulePrefix {
        &self.schedule
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }
}

/// Values `x_{-1}, x_0, …, x_K` of a trajectory; `x_{-1}` is the start state.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct OrbitPrefix {
    values: Vec<State>,
}

impl OrbitPrefix {
    pub fn new(values: Vec<State>) -> Result<Self> {
        let n = match values.first() {
            Some(v) => v.dim(),
            None => {
                return Err(Error::LengthMismatch {
                    expected: 1,
                    got: 0,
                })
            }
        };
        for v in &values {
            if v.dim() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: v.dim(),
                });
            }
        }
        Ok(Self { values })
    }

    pub fn start(&self) -> State {
        self.values[0]
    }

    pub fn values(&self) -> &[State] {
        &self.values
    }

    /// Value at step `k`, with `k = -1` the start state.
    pub fn value_at_step(&self, k: i32) -> Option<State> {
        let i = (k + 1) as usize;
        self.values.get(i).copied()
    }

    pub fn horizon(&self) -> i32 {
        self.values.len() as i32 - 2
    }

    /// The value sequence with consecutive duplicates merged.
    pub fn stutter_collapsed(&self) -> Vec<State> {
        let mut out: Vec<State> = Vec::with_capacity(self.values.len());
        for &v in &self.values {
            if out.last() != Some(&v) {
                out.push(v);
            }
        }
        out
    }
}

/// A piecewise-constant signal over real time: one value before the first
/// breakpoint and a new value from each breakpoint on; the last value
/// persists.
#[derive(Clone, PartialEq, Debug)]
pub struct PiecewiseSignal {
    initial: State,
    breakpoints: Vec<(f64, State)>,
}

impl PiecewiseSignal {
    pub fn new(initial: State, breakpoints: Vec<(f64, State)>) -> Result<Self> {
        for (i, w) in breakpoints.windows(2).enumerate() {
            if w[0].0.partial_cmp(&w[1].0) != Some(std::cmp::Ordering::Less) {
                return Err(Error::NonIncreasingTimes { position: i + 1 });
            }
        }
        for (_, v) in &breakpoints {
            if v.dim() != initial.dim() {
                return Err(Error::DimensionMismatch {
                    left: initial.dim(),
                    right: v.dim(),
                });
            }
        }
        Ok(Self {
            initial,
            breakpoints,
        })
    }

    pub fn dim(&self) -> usize {
        self.initial.dim()
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn breakpoints(&self) -> &[(f64, State)] {
        &self.breakpoints
    }

    pub fn value_at(&self, t: f64) -> State {
        let mut value = self.initial;
        for &(tk, v) in &self.breakpoints {
            if t >= tk {
                value = v;
            } else {
                break;
            }
        }
        value
    }

    pub fn to_json(&self) -> Value {
        json!({
            "initial": self.initial.bit_string(),
            "breakpoints": self
                .breakpoints
                .iter()
                .map(|(t, v)| json!([t, v.bit_string()]))
                .collect::<Vec<_>>(),
        })
    }
}

/// Which trajectory family a system prefix set was built from.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum OrbitMode {
    Forward,
    Anti,
}

/// All stutter-collapsed trajectory prefixes of a system up to a horizon,
/// over every start state and every mask schedule. Two systems with equal
/// sets are indistinguishable by finite observations up to that horizon,
/// because event instants are arbitrary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SystemPrefixSet {
    n: u8,
    horizon: i32,
    sequences: BTreeSet<Vec<State>>,
}

impl SystemPrefixSet {
    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn horizon(&self) -> i32 {
        self.horizon
    }

    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    pub fn sequences(&self) -> impl Iterator<Item = &[State]> {
        self.sequences.iter().map(|s| s.as_slice())
    }

    pub fn contains(&self, seq: &[State]) -> bool {
        self.sequences.contains(seq)
    }
}

fn check_same_dim(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

/// The discrete-time forward trajectory: `x_{-1} = μ` and
/// `x_{k+1} = Φ^{α^{k+1}}(x_k)`, with `α^0` producing `x_0`.
pub fn discrete_orbit(phi: &TruthTable, mu: &State, alpha: &SchedulePrefix) -> Result<OrbitPrefix> {
    check_same_dim(phi.dim(), mu.dim())?;
    check_same_dim(phi.dim(), alpha.dim())?;
    let mut values = Vec::with_capacity(alpha.steps().len() + 1);
    let mut current = mu.index();
    values.push(*mu);
    for step in alpha.steps() {
        current = phi.nu_idx(step.index(), current);
        values.push(State::new(phi.dim(), current)?);
    }
    Ok(OrbitPrefix { values })
}

/// The continuous-time forward trajectory: the start value before `t_0` and
/// the `k`-th discrete orbit value on `[t_k, t_{k+1})`.
pub fn continuous_orbit(
    phi: &TruthTable,
    mu: &State,
    rho: &TimedSchedule,
) -> Result<PiecewiseSignal> {
    let orbit = discrete_orbit(phi, mu, rho.schedule())?;
    assemble_signal(&orbit, rho)
}

fn assemble_signal(orbit: &OrbitPrefix, rho: &TimedSchedule) -> Result<PiecewiseSignal> {
    let breakpoints = rho
        .times()
        .iter()
        .copied()
        .zip(orbit.values()[1..].iter().copied())
        .collect();
    PiecewiseSignal::new(orbit.start(), breakpoints)
}

/// All `y` with `Φ^ν(y) = x`; may be empty or contain several states.
pub fn preimages_nu(phi: &TruthTable, nu: &State, x: &State) -> Result<Vec<State>> {
    check_same_dim(phi.dim(), nu.dim())?;
    check_same_dim(phi.dim(), x.dim())?;
    let mut out = Vec::new();
    for y in 0..phi.size() {
        if phi.nu_idx(nu.index(), y) == x.index() {
            out.push(State::new(phi.dim(), y)?);
        }
    }
    Ok(out)
}

/// All backward trajectories from `μ`: sequences `y_{-1} = μ, y_0, …, y_K`
/// with `Φ^{α^k}(y_k) = y_{k-1}` for `k = 0…K`. Empty when some step has no
/// preimage.
pub fn anti_orbit_branches(
    phi: &TruthTable,
    mu: &State,
    alpha: &SchedulePrefix,
) -> Result<Vec<OrbitPrefix>> {
    anti_orbit_branches_capped(phi, mu, alpha, DEFAULT_BRANCH_CAP)
}

/// As [`anti_orbit_branches`] with an explicit branch cap.
pub fn anti_orbit_branches_capped(
    phi: &TruthTable,
    mu: &State,
    alpha: &SchedulePrefix,
    cap: usize,
) -> Result<Vec<OrbitPrefix>> {
    check_same_dim(phi.dim(), mu.dim())?;
    check_same_dim(phi.dim(), alpha.dim())?;
    let mut branches: Vec<Vec<State>> = vec![vec![*mu]];
    for step in alpha.steps() {
        let mut extended = Vec::new();
        for branch in &branches {
            let last = branch.last().expect("branches are nonempty");
            for y in preimages_nu(phi, step, last)? {
                let mut longer = branch.clone();
                longer.push(y);
                extended.push(longer);
                if extended.len() > cap {
                    return Err(Error::BranchExplosion { cap });
                }
            }
        }
        branches = extended;
        if branches.is_empty() {
            break;
        }
    }
    branches.sort();
    Ok(branches
        .into_iter()
        .map(|values| OrbitPrefix { values })
        .collect())
}

/// Membership form of the backward recurrence: does `seq` satisfy
/// `Φ^{α^k}(y_k) = y_{k-1}` for every step of `alpha`?
pub fn is_anti_orbit(phi: &TruthTable, alpha: &SchedulePrefix, seq: &OrbitPrefix) -> Result<bool> {
    check_same_dim(phi.dim(), alpha.dim())?;
    check_same_dim(phi.dim(), seq.start().dim())?;
    if seq.values().len() != alpha.steps().len() + 1 {
        return Err(Error::LengthMismatch {
            expected: alpha.steps().len() + 1,
            got: seq.values().len(),
        });
    }
    for (k, step) in alpha.steps().iter().enumerate() {
        let y_prev = seq.values()[k];
        let y_k = seq.values()[k + 1];
        if phi.nu_idx(step.index(), y_k.index()) != y_prev.index() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reads a backward branch against real time, exactly as forward signals are
/// assembled: branch value `k` holds on `[t_k, t_{k+1})`.
pub fn continuous_anti_orbit(
    phi: &TruthTable,
    branch: &OrbitPrefix,
    rho: &TimedSchedule,
) -> Result<PiecewiseSignal> {
    if !is_anti_orbit(phi, rho.schedule(), branch)? {
        return Err(Error::NotAnAntiOrbit);
    }
    assemble_signal(branch, rho)
}

/// Stepwise image of a schedule under `g`: mask `k` becomes `g(α^k)`.
pub fn lift_hat(g: &Bijection, alpha: &SchedulePrefix) -> Result<SchedulePrefix> {
    check_same_dim(g.dim(), alpha.dim())?;
    let steps = alpha
        .steps()
        .iter()
        .map(|step| g.apply(step))
        .collect::<Result<Vec<_>>>()?;
    SchedulePrefix::new(alpha.dim(), steps)
}

/// Image of a timed schedule under `g`, preserving event instants. The zero
/// mask maps to itself even when `g(0,…,0) ≠ (0,…,0)`: off-event instants
/// carry the zero mask by construction, and this branch keeps the image a
/// well-formed timed schedule.
pub fn lift_tilde(g: &Bijection, rho: &TimedSchedule) -> Result<TimedSchedule> {
    check_same_dim(g.dim(), rho.dim())?;
    let steps = rho
        .schedule()
        .steps()
        .iter()
        .map(|step| {
            if step.is_zero() {
                Ok(*step)
            } else {
                g.apply(step)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    TimedSchedule::new(SchedulePrefix::new(rho.dim(), steps)?, rho.times().to_vec())
}

/// Iterator over all mask sequences of a fixed length, in lexicographic
/// order.
pub(crate) fn all_mask_sequences(n: usize, len: usize) -> impl Iterator<Item = Vec<State>> {
    let size = 1usize << n;
    let total = (size as u128).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut seq = vec![State::zero(n); len];
        for slot in (0..len).rev() {
            seq[slot] = State::new(n, (code % size as u128) as usize).expect("index in range");
            code /= size as u128;
        }
        seq
    })
}

/// The set of stutter-collapsed trajectory prefixes over every start state
/// and every schedule of length `K+1`, forward or backward.
pub fn system_prefixes(phi: &TruthTable, horizon: i32, mode: OrbitMode) -> Result<SystemPrefixSet> {
    system_prefixes_guarded(phi, horizon, mode, DEFAULT_ENUMERATION_GUARD)
}

/// As [`system_prefixes`] with an explicit enumeration guard on
/// `(2^n)^(K+2)`.
pub fn system_prefixes_guarded(
    phi: &TruthTable,
    horizon: i32,
    mode: OrbitMode,
    guard: u128,
) -> Result<SystemPrefixSet> {
    if horizon < -1 {
        return Err(Error::LengthMismatch {
            expected: 0,
            got: horizon.unsigned_abs() as usize,
        });
    }
    let n = phi.dim();
    let len = (horizon + 1) as usize;
    let work = (1u128 << n).pow(len as u32 + 1);
    if work > guard {
        return Err(Error::TooLarge {
            what: "trajectory enumeration",
            size: work,
            limit: guard,
        });
    }
    let mut sequences = BTreeSet::new();
    for masks in all_mask_sequences(n, len) {
        let alpha = SchedulePrefix::new(n, masks)?;
        for mu in State::all(n) {
            match mode {
                OrbitMode::Forward => {
                    sequences.insert(discrete_orbit(phi, &mu, &alpha)?.stutter_collapsed());
                }
                OrbitMode::Anti => {
                    for branch in anti_orbit_branches(phi, &mu, &alpha)? {
                        sequences.insert(branch.stutter_collapsed());
                    }
                }
            }
        }
    }
    Ok(SystemPrefixSet {
        n: n as u8,
        horizon,
        sequences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(bits: &str) -> State {
        let v: Vec<bool> = bits.chars().map(|c| c == '1').collect();
        State::from_bits(&v).unwrap()
    }

    fn sched(masks: &[&str]) -> SchedulePrefix {
        let steps: Vec<State> = masks.iter().map(|m| s(m)).collect();
        SchedulePrefix::new(steps[0].dim(), steps).unwrap()
    }

    fn exa2() -> TruthTable {
        TruthTable::constant(s("01"))
    }

    #[test]
    fn discrete_orbit_follows_the_recurrence() {
        // constant function, masks (1,0) then (0,1)
        let orbit = discrete_orbit(&exa2(), &s("10"), &sched(&["10", "01"])).unwrap();
        assert_eq!(orbit.values(), &[s("10"), s("00"), s("01")]);
    }

    #[test]
    fn zero_masks_keep_the_state() {
        let phi = TruthTable::negation(2);
        let orbit = discrete_orbit(&phi, &s("10"), &sched(&["00", "00", "00"])).unwrap();
        assert!(orbit.values().iter().all(|&v| v == s("10")));
    }

    #[test]
    fn full_masks_iterate_synchronously() {
        let phi = TruthTable::negation(2);
        let orbit = discrete_orbit(&phi, &s("10"), &sched(&["11", "11"])).unwrap();
        assert_eq!(orbit.values(), &[s("10"), s("01"), s("10")]);
    }

    #[test]
    fn continuous_orbit_samples() {
        let rho = TimedSchedule::new(sched(&["10", "01"]), vec![0.0, 1.5]).unwrap();
        let signal = continuous_orbit(&exa2(), &s("10"), &rho).unwrap();
        assert_eq!(signal.value_at(-1.0), s("10"));
        assert_eq!(signal.value_at(0.0), s("00"));
        assert_eq!(signal.value_at(1.0), s("00"));
        assert_eq!(signal.value_at(1.5), s("01"));
        assert_eq!(signal.value_at(100.0), s("01"));
    }

    #[test]
    fn constant_function_two_event_values() {
        // For the constant (0,1) function the first coordinate can only be
        // cleared and the second only set, so two events give
        // (μ1·!a1, μ2∨a2) then (μ1·!a1·!b1, μ2∨a2∨b2).
        let phi = exa2();
        for mu in State::all(2) {
            for a in State::all(2) {
                for b in State::all(2) {
                    let alpha = SchedulePrefix::new(2, vec![a, b]).unwrap();
                    let orbit = discrete_orbit(&phi, &mu, &alpha).unwrap();
                    let v0 =
                        State::from_bits(&[mu.bit(0) && !a.bit(0), mu.bit(1) || a.bit(1)]).unwrap();
                    let v1 = State::from_bits(&[
                        mu.bit(0) && !a.bit(0) && !b.bit(0),
                        mu.bit(1) || a.bit(1) || b.bit(1),
                    ])
                    .unwrap();
                    assert_eq!(orbit.values(), &[mu, v0, v1]);
                }
            }
        }
    }

    #[test]
    fn preimages_under_zero_mask() {
        let phi = exa2();
        for x in State::all(2) {
            assert_eq!(preimages_nu(&phi, &State::zero(2), &x).unwrap(), vec![x]);
        }
    }

    #[test]
    fn preimages_of_negation_are_unique() {
        let phi = TruthTable::negation(2);
        assert_eq!(
            preimages_nu(&phi, &s("11"), &s("00")).unwrap(),
            vec![s("11")]
        );
    }

    #[test]
    fn preimages_may_be_empty() {
        // Φ^(0,1) of the constant (0,1) function always sets coordinate 2
        assert!(preimages_nu(&exa2(), &s("01"), &s("00"))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn empty_schedule_has_one_branch() {
        let phi = exa2();
        let alpha = SchedulePrefix::new(2, vec![]).unwrap();
        let branches = anti_orbit_branches(&phi, &s("11"), &alpha).unwrap();
        assert_eq!(branches.len(), 1);
        assert_eq!(branches[0].values(), &[s("11")]);
    }

    #[test]
    fn negation_branch_is_unique() {
        let phi = TruthTable::negation(2);
        let branches = anti_orbit_branches(&phi, &s("00"), &sched(&["11"])).unwrap();
        assert_eq!(branches.len(), 1);
        assert_eq!(branches[0].values(), &[s("00"), s("11")]);
    }

    #[test]
    fn constant_function_has_dead_branches() {
        // nothing maps onto (1,1) under the full update of the constant (0,1)
        let branches = anti_orbit_branches(&exa2(), &s("11"), &sched(&["11"])).unwrap();
        assert!(branches.is_empty());
    }

    #[test]
    fn branch_cap_is_enforced() {
        // the identity table keeps every state in place under the zero mask,
        // but a full mask on the identity has 1 preimage; use a constant
        // where the zero-coordinate mask collapses everything instead
        let phi = TruthTable::constant(s("00"));
        let alpha = sched(&["11", "11"]);
        let err = anti_orbit_branches_capped(&phi, &s("00"), &alpha, 3).unwrap_err();
        assert_eq!(err, Error::BranchExplosion { cap: 3 });
    }

    #[test]
    fn is_anti_orbit_membership() {
        let phi = TruthTable::negation(2);
        let alpha = sched(&["11"]);
        let good = OrbitPrefix::new(vec![s("00"), s("11")]).unwrap();
        let bad = OrbitPrefix::new(vec![s("00"), s("00")]).unwrap();
        assert!(is_anti_orbit(&phi, &alpha, &good).unwrap());
        assert!(!is_anti_orbit(&phi, &alpha, &bad).unwrap());
        let empty = SchedulePrefix::new(2, vec![]).unwrap();
        let single = OrbitPrefix::new(vec![s("10")]).unwrap();
        assert!(is_anti_orbit(&phi, &empty, &single).unwrap());
        // wrong length is an error, not a false
        assert_eq!(
            is_anti_orbit(&phi, &empty, &good),
            Err(Error::LengthMismatch {
                expected: 1,
                got: 2
            })
        );
    }

    #[test]
    fn continuous_anti_orbit_assembles_branches() {
        let phi = TruthTable::negation(2);
        let rho = TimedSchedule::new(sched(&["11"]), vec![0.0]).unwrap();
        let branch = OrbitPrefix::new(vec![s("00"), s("11")]).unwrap();
        let signal = continuous_anti_orbit(&phi, &branch, &rho).unwrap();
        assert_eq!(signal.value_at(-0.1), s("00"));
        assert_eq!(signal.value_at(0.0), s("11"));
        let invalid = OrbitPrefix::new(vec![s("00"), s("00")]).unwrap();
        assert_eq!(
            continuous_anti_orbit(&phi, &invalid, &rho),
            Err(Error::NotAnAntiOrbit)
        );
        // an eventless branch reads as the constant signal
        let still = TimedSchedule::new(SchedulePrefix::new(2, vec![]).unwrap(), vec![]).unwrap();
        let single = OrbitPrefix::new(vec![s("10")]).unwrap();
        let flat = continuous_anti_orbit(&phi, &single, &still).unwrap();
        assert_eq!(flat.value_at(-5.0), s("10"));
        assert_eq!(flat.value_at(5.0), s("10"));
    }

    #[test]
    fn lift_hat_maps_stepwise() {
        let swap =
            Bijection::from_coord_perm(&crate::perm::CoordPerm::from_one_based(&[2, 1]).unwrap());
        let alpha = sched(&["10", "11"]);
        let lifted = lift_hat(&swap, &alpha).unwrap();
        assert_eq!(lifted.steps(), &[s("01"), s("11")]);
        assert_eq!(lifted.steps().len(), alpha.steps().len());
        let id = Bijection::identity(2);
        assert_eq!(lift_hat(&id, &alpha).unwrap(), alpha);
    }

    #[test]
    fn lift_tilde_preserves_zero_events() {
        // g moves the zero state, but zero events must stay zero
        let g = Bijection::translation(&s("11"));
        assert!(!g.apply(&s("00")).unwrap().is_zero());
        let rho = TimedSchedule::new(sched(&["00", "10"]), vec![0.0, 1.0]).unwrap();
        let lifted = lift_tilde(&g, &rho).unwrap();
        assert_eq!(lifted.schedule().steps(), &[s("00"), s("01")]);
        assert_eq!(lifted.times(), rho.times());
    }

    #[test]
    fn signal_json_shape() {
        let signal = PiecewiseSignal::new(s("10"), vec![(0.5, s("00"))]).unwrap();
        assert_eq!(
            signal.to_json().to_string(),
            r#"{"breakpoints":[[0.5,"00"]],"initial":"10"}"#
        );
    }

    #[test]
    fn timed_schedule_rejects_bad_times() {
        assert_eq!(
            TimedSchedule::new(sched(&["10", "01"]), vec![1.0, 1.0]).unwrap_err(),
            Error::NonIncreasingTimes { position: 1 }
        );
        assert_eq!(
            TimedSchedule::new(sched(&["10"]), vec![]).unwrap_err(),
            Error::LengthMismatch {
                expected: 1,
                got: 0
            }
        );
    }

    #[test]
    fn trivial_horizon_prefixes_are_singletons() {
        let set = system_prefixes(&exa2(), -1, OrbitMode::Forward).unwrap();
        assert_eq!(set.len(), 4);
        for mu in State::all(2) {
            assert!(set.contains(&[mu]));
        }
        let anti = system_prefixes(&exa2(), -1, OrbitMode::Anti).unwrap();
        assert_eq!(anti, set);
    }

    #[test]
    fn enumeration_guard_trips() {
        let err = system_prefixes_guarded(&exa2(), 3, OrbitMode::Forward, 16).unwrap_err();
        assert!(matches!(err, Error::TooLarge { .. }));
    }

    #[test]
    fn stutter_collapse_merges_runs() {
        let orbit = OrbitPrefix::new(vec![s("00"), s("00"), s("01"), s("01"), s("00")]).unwrap();
        assert_eq!(orbit.stutter_collapsed(), vec![s("00"), s("01"), s("00")]);
    }
}
