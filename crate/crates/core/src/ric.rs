//! The full pipeline: fold to `C` points, transform at `C` points, apply the
//! correction factor, and tag each value with its `N`-point index `k·L`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::counter::OpCounter;
use crate::engine::{root_table, transform};
use crate::error::{Result, RicError};
use crate::fold::{fold, fold_spectrum};
use crate::norm::{Direction, NormalizationMode};
use crate::plan::RicPlan;
use crate::sequence::{ComplexSample, ComplexSequence};

/// Default relative ℓ∞ tolerance for oracle comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// One coefficient of a [`RicSpectrum`].
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RicEntry {
    /// Position in the compressed output, `0 ≤ k < C`.
    pub k: usize,
    /// Index in the `N`-point transform, always `k·L`.
    pub index: usize,
    pub value: ComplexSample,
}

/// The `C` coefficients at indices `0, L, …, (C-1)L` of an `N`-point
/// transform.
#[derive(Clone, Debug, PartialEq)]
pub struct RicSpectrum {
    entries: Vec<RicEntry>,
    plan: RicPlan,
    mode: NormalizationMode,
    direction: Direction,
}

impl RicSpectrum {
    pub fn entries(&self) -> &[RicEntry] {
        &self.entries
    }

    pub fn plan(&self) -> &RicPlan {
        &self.plan
    }

    pub fn mode(&self) -> NormalizationMode {
        self.mode
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn values(&self) -> Vec<ComplexSample> {
        self.entries.iter().map(|e| e.value).collect()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.index).collect()
    }

    /// Value at `N`-point index `index`, if it is a multiple of `L`.
    pub fn at_index(&self, index: usize) -> Option<ComplexSample> {
        index
            .is_multiple_of(self.plan.l())
            .then(|| self.entries.get(index / self.plan.l()).map(|e| e.value))
            .flatten()
    }
}

/// `{0, L, 2L, …, (C-1)L}`.
pub fn ric_index_set(plan: &RicPlan) -> Vec<usize> {
    (0..plan.c()).map(|k| k * plan.l()).collect()
}

/// Forward transform of `x` at the rectangular indices.
///
/// ```
/// use ricdft::{ric_dft, ComplexSequence, NormalizationMode, OpCounter, RicPlan};
///
/// let x = ComplexSequence::from_pairs(&[
///     (1.0, 1.0), (2.0, 2.0), (3.0, 3.0), (-4.0, -4.0),
///     (-5.0, -5.0), (-6.0, 6.0), (7.0, -7.0), (8.0, 8.0),
/// ]).unwrap();
/// let plan = RicPlan::new(8, 4).unwrap();
/// let spec = ric_dft(&x, &plan, NormalizationMode::None, &mut OpCounter::new()).unwrap();
///
/// assert_eq!(spec.indices(), vec![0, 2, 4, 6]);
/// let x2 = spec.at_index(2).unwrap();
/// assert!((x2.re + 10.0).abs() < 1e-12 && (x2.im - 8.0).abs() < 1e-12);
/// ```
pub fn ric_dft(
    x: &ComplexSequence,
    plan: &RicPlan,
    mode: NormalizationMode,
    counter: &mut OpCounter,
) -> Result<RicSpectrum> {
    let folded = fold(x, plan, counter)?;
    Ok(finish(folded.samples(), plan, mode, Direction::Forward, counter))
}

/// Inverse transform of the spectrum `spectrum` at the rectangular indices:
/// the time samples `x[n·L]`, `n = 0, …, C-1`.
pub fn ric_idft(
    spectrum: &ComplexSequence,
    plan: &RicPlan,
    mode: NormalizationMode,
    counter: &mut OpCounter,
) -> Result<RicSpectrum> {
    let folded = fold_spectrum(spectrum, plan, counter)?;
    Ok(finish(folded.samples(), plan, mode, Direction::Inverse, counter))
}

/// Dispatches to [`ric_dft`] or [`ric_idft`].
pub fn ric_transform(
    x: &ComplexSequence,
    plan: &RicPlan,
    mode: NormalizationMode,
    dir: Direction,
    counter: &mut OpCounter,
) -> Result<RicSpectrum> {
    match dir {
        Direction::Forward => ric_dft(x, plan, mode, counter),
        Direction::Inverse => ric_idft(x, plan, mode, counter),
    }
}

fn finish(
    folded: &ComplexSequence,
    plan: &RicPlan,
    mode: NormalizationMode,
    dir: Direction,
    counter: &mut OpCounter,
) -> RicSpectrum {
    let reduced = transform(folded, dir, mode, counter);
    let k_factor = mode.correction(dir).value(plan);
    let entries = reduced
        .iter()
        .enumerate()
        .map(|(k, &v)| RicEntry {
            k,
            index: k * plan.l(),
            value: v * k_factor,
        })
        .collect();
    RicSpectrum {
        entries,
        plan: *plan,
        mode,
        direction: dir,
    }
}

/// Result of comparing the folded path against direct `N`-point evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_abs_error: f64,
    pub max_rel_error: f64,
    pub pass: bool,
    pub tolerance: f64,
}

/// Knobs for [`verify_against_oracle_with`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    pub tolerance: f64,
    /// Relative perturbation added to the first folded-path value before
    /// comparison. Zero for normal runs; non-zero to check that the
    /// comparison actually detects corruption.
    pub perturb: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            tolerance: DEFAULT_TOLERANCE,
            perturb: 0.0,
        }
    }
}

/// Runs the folded path and the `N`-point definition at the same indices
/// and reports the largest discrepancy.
pub fn verify_against_oracle(
    x: &ComplexSequence,
    plan: &RicPlan,
    mode: NormalizationMode,
    dir: Direction,
) -> Result<VerificationReport> {
    verify_against_oracle_with(x, plan, mode, dir, &VerifyOptions::default())
}

pub fn verify_against_oracle_with(
    x: &ComplexSequence,
    plan: &RicPlan,
    mode: NormalizationMode,
    dir: Direction,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    if x.len() != plan.n() {
        return Err(RicError::LengthMismatch {
            expected: plan.n(),
            actual: x.len(),
        });
    }
    let mut values = ric_transform(x, plan, mode, dir, &mut OpCounter::new())?.values();
    let oracle = direct_at_indices(x, &ric_index_set(plan), dir, mode);

    let scale = oracle.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if opts.perturb != 0.0 {
        values[0] += opts.perturb * if scale > 0.0 { scale } else { 1.0 };
    }
    let max_abs_error = values
        .iter()
        .zip(&oracle)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    let max_rel_error = if scale > 0.0 {
        max_abs_error / scale
    } else {
        max_abs_error
    };
    Ok(VerificationReport {
        max_abs_error,
        max_rel_error,
        pass: max_rel_error <= opts.tolerance,
        tolerance: opts.tolerance,
    })
}

/// `N`-point transform evaluated from the definition, only at `indices`.
pub(crate) fn direct_at_indices(
    x: &ComplexSequence,
    indices: &[usize],
    dir: Direction,
    mode: NormalizationMode,
) -> Vec<Complex64> {
    let n = x.len();
    let roots = root_table(n);
    let scale = mode.scale(dir, n);
    indices
        .iter()
        .map(|&m| {
            x.iter()
                .enumerate()
                .map(|(i, &v)| {
                    let e = (m * i) % n;
                    let w = match dir {
                        Direction::Forward => roots[(n - e) % n],
                        Direction::Inverse => roots[e],
                    };
                    v * w
                })
                .sum::<Complex64>()
                * scale
        })
        .collect()
}
