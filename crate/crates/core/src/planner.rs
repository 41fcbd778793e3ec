//! Choosing `(N, C)` so that frequencies of interest fall on the
//! rectangular-index bins.
//!
//! Bin `m` of an `N`-point transform sits at `m · fs / N`. The folded path
//! only yields bins `m = k·L`, i.e. frequencies `k · fs / C`. The planner
//! searches all valid plans up to `max_n` and keeps the one with the
//! smallest `C` (the transform length that drives the multiplication
//! count), breaking ties by smaller `N`.

use serde::{Deserialize, Serialize};

use crate::error::{Result, RicError};
use crate::plan::RicPlan;

/// A target frequency mapped onto a bin of the proposal.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Assignment {
    pub target: f64,
    pub k: usize,
    pub bin_index: usize,
    pub achieved: f64,
    pub rel_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlanProposal {
    pub plan: RicPlan,
    pub sample_rate: f64,
    pub bin_width: f64,
    pub assignments: Vec<Assignment>,
}

/// Search constraints for [`plan_for_frequencies`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlannerOptions {
    pub max_n: usize,
    pub power_of_two_only: bool,
    /// Largest acceptable relative frequency error; `0` demands exact hits.
    pub tol: f64,
}

impl Default for PlannerOptions {
    fn default() -> Self {
        PlannerOptions {
            max_n: 4096,
            power_of_two_only: true,
            tol: 0.0,
        }
    }
}

/// One row of a [`coverage_report`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoverageRow {
    pub target: f64,
    pub bin_index: usize,
    pub achieved: f64,
    pub rel_error: f64,
}

/// Frequency of bin `index` in an `n`-point transform.
pub fn bin_frequency(index: usize, n: usize, sample_rate: f64) -> f64 {
    index as f64 * sample_rate / n as f64
}

fn rel_error(achieved: f64, target: f64) -> f64 {
    if target == 0.0 {
        achieved.abs()
    } else {
        (achieved - target).abs() / target.abs()
    }
}

/// Nearest rectangular-index bin to `target`; ties go to the lower bin.
pub(crate) fn nearest_assignment(plan: &RicPlan, sample_rate: f64, target: f64) -> Assignment {
    let c = plan.c();
    let guess = (target * c as f64 / sample_rate).floor();
    let guess = if guess.is_finite() && guess > 0.0 {
        guess as usize
    } else {
        0
    };
    let lo = guess.saturating_sub(1).min(c - 1);
    let hi = (guess + 1).min(c - 1);

    let mut best: Option<Assignment> = None;
    for k in lo..=hi {
        let bin_index = k * plan.l();
        let achieved = bin_frequency(bin_index, plan.n(), sample_rate);
        let cand = Assignment {
            target,
            k,
            bin_index,
            achieved,
            rel_error: rel_error(achieved, target),
        };
        let better = match &best {
            None => true,
            Some(b) => (cand.achieved - target).abs() < (b.achieved - target).abs(),
        };
        if better {
            best = Some(cand);
        }
    }
    best.expect("non-empty candidate range")
}

fn validate(sample_rate: f64, targets: &[f64], opts: &PlannerOptions) -> Result<()> {
    if !(sample_rate.is_finite() && sample_rate > 0.0) {
        return Err(RicError::Range(format!("sample rate {sample_rate} must be positive")));
    }
    if targets.is_empty() {
        return Err(RicError::Config("at least one target frequency is required".into()));
    }
    let nyquist = sample_rate / 2.0;
    if let Some(t) = targets.iter().find(|&&t| !(t > 0.0 && t < nyquist)) {
        return Err(RicError::Range(format!("target {t} Hz outside (0, {nyquist}) Hz")));
    }
    if opts.max_n < 4 {
        return Err(RicError::Range(format!("max_n {} must be at least 4", opts.max_n)));
    }
    if !(opts.tol.is_finite() && opts.tol >= 0.0) {
        return Err(RicError::Range(format!("tolerance {} must be non-negative", opts.tol)));
    }
    Ok(())
}

/// Candidate plans in search order: ascending `C`, then ascending `N`.
fn candidates(opts: &PlannerOptions) -> impl Iterator<Item = RicPlan> + '_ {
    (2..=opts.max_n / 2).flat_map(move |c| {
        (2..=opts.max_n / c)
            .map(move |l| c * l)
            .filter(move |&n| !opts.power_of_two_only || n.is_power_of_two())
            .filter_map(move |n| RicPlan::new(n, c).ok())
    })
}

/// Smallest-`C` plan whose rectangular bins hit every target within `tol`.
///
/// ```
/// use ricdft::planner::{plan_for_frequencies, PlannerOptions};
///
/// let opts = PlannerOptions { max_n: 64, power_of_two_only: true, tol: 0.0 };
/// let p = plan_for_frequencies(800.0, &[100.0, 200.0, 300.0], &opts).unwrap();
/// assert_eq!((p.plan.n(), p.plan.c(), p.plan.l()), (16, 8, 2));
/// let bins: Vec<usize> = p.assignments.iter().map(|a| a.bin_index).collect();
/// assert_eq!(bins, vec![2, 4, 6]);
/// ```
pub fn plan_for_frequencies(sample_rate: f64, targets: &[f64], opts: &PlannerOptions) -> Result<PlanProposal> {
    validate(sample_rate, targets, opts)?;
    let mut best_error = f64::INFINITY;
    for plan in candidates(opts) {
        let assignments: Vec<Assignment> = targets
            .iter()
            .map(|&t| nearest_assignment(&plan, sample_rate, t))
            .collect();
        let worst = assignments.iter().map(|a| a.rel_error).fold(0.0, f64::max);
        if worst <= opts.tol {
            return Ok(PlanProposal {
                plan,
                sample_rate,
                bin_width: sample_rate / plan.n() as f64,
                assignments,
            });
        }
        best_error = best_error.min(worst);
    }
    Err(RicError::Infeasible { best_error })
}

/// Nearest rectangular bin for each of `extra_targets` under `proposal`.
pub fn coverage_report(proposal: &PlanProposal, extra_targets: &[f64]) -> Vec<CoverageRow> {
    extra_targets
        .iter()
        .map(|&t| {
            let a = nearest_assignment(&proposal.plan, proposal.sample_rate, t);
            CoverageRow {
                target: t,
                bin_index: a.bin_index,
                achieved: a.achieved,
                rel_error: if t == 0.0 { 0.0 } else { a.rel_error },
            }
        })
        .collect()
}
