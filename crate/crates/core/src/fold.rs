//! Lossless folding of an `N`-point sequence into `C` points.
//!
//! Arranging the input as an `L × C` rectangle (`n = l·C + c`) and summing
//! each column gives
//!
//! ```text
//! x̂[c] = Σ_{l=0}^{L-1} x[l·C + c],   c = 0, …, C-1
//! ```
//!
//! Because `W_N^{-kL(lC + c)} = W_C^{-kc}`, the `C`-point DFT of `x̂` equals
//! the `N`-point DFT of `x` at indices `0, L, 2L, …, (C-1)L`. The fold costs
//! `C·(L-1)` complex additions and no multiplications.

use crate::counter::OpCounter;
use crate::error::{Result, RicError};
use crate::plan::RicPlan;
use crate::sequence::{ComplexSample, ComplexSequence};

/// The `C` column sums of an `N`-point sequence, with the plan that produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct FoldedSequence {
    samples: ComplexSequence,
    plan: RicPlan,
}

impl FoldedSequence {
    pub fn samples(&self) -> &ComplexSequence {
        &self.samples
    }

    pub fn into_samples(self) -> ComplexSequence {
        self.samples
    }

    pub fn plan(&self) -> &RicPlan {
        &self.plan
    }

    /// Length of the sequence that was folded.
    pub fn source_n(&self) -> usize {
        self.plan.n()
    }
}

/// Folds a time-domain signal (the forward path).
///
/// ```
/// use ricdft::{fold, ComplexSequence, OpCounter, RicPlan};
///
/// let x = ComplexSequence::from_pairs(&[
///     (1.0, 1.0), (2.0, 2.0), (3.0, 3.0), (-4.0, -4.0),
///     (-5.0, -5.0), (-6.0, 6.0), (7.0, -7.0), (8.0, 8.0),
/// ]).unwrap();
/// let plan = RicPlan::new(8, 4).unwrap();
/// let mut ops = OpCounter::new();
/// let folded = fold(&x, &plan, &mut ops).unwrap();
///
/// let expected = ComplexSequence::from_pairs(&[
///     (-4.0, -4.0), (-4.0, 8.0), (10.0, -4.0), (4.0, 4.0),
/// ]).unwrap();
/// assert_eq!(folded.samples(), &expected);
/// assert_eq!((ops.complex_adds, ops.complex_mults), (4, 0));
/// ```
pub fn fold(x: &ComplexSequence, plan: &RicPlan, counter: &mut OpCounter) -> Result<FoldedSequence> {
    fold_columns(x, plan, counter)
}

/// Folds an `N`-point spectrum (the inverse path). Same kernel as [`fold`].
pub fn fold_spectrum(spectrum: &ComplexSequence, plan: &RicPlan, counter: &mut OpCounter) -> Result<FoldedSequence> {
    fold_columns(spectrum, plan, counter)
}

fn fold_columns(x: &ComplexSequence, plan: &RicPlan, counter: &mut OpCounter) -> Result<FoldedSequence> {
    if x.len() != plan.n() {
        return Err(RicError::LengthMismatch {
            expected: plan.n(),
            actual: x.len(),
        });
    }
    let c_len = plan.c();
    let rows = x.as_slice().chunks_exact(c_len);

    // Row 0 seeds the columns; each further row adds once per column, in
    // ascending row order.
    let mut out: Vec<ComplexSample> = x.as_slice()[..c_len].to_vec();
    for row in rows.skip(1) {
        for (acc, &v) in out.iter_mut().zip(row) {
            *acc += v;
        }
    }
    counter.add((c_len * (plan.l() - 1)) as u64);

    Ok(FoldedSequence {
        samples: ComplexSequence::from_vec_unchecked(out),
        plan: *plan,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // Double-loop column sums, straight from the definition.
    fn column_sums(x: &[Complex64], n: usize, c_len: usize) -> Vec<Complex64> {
        let l_len = n / c_len;
        (0..c_len)
            .map(|col| {
                let mut s = c(0.0, 0.0);
                for l in 0..l_len {
                    s += x[l * c_len + col];
                }
                s
            })
            .collect()
    }

    #[test]
    fn zeros_fold_to_zeros() {
        let plan = RicPlan::new(12, 3).unwrap();
        let mut ops = OpCounter::new();
        let out = fold(&ComplexSequence::zeros(12).unwrap(), &plan, &mut ops).unwrap();
        assert!(out.samples().iter().all(|z| *z == c(0.0, 0.0)));
        assert_eq!(out.samples().len(), 3);
        assert_eq!(out.source_n(), 12);
    }

    #[test]
    fn impulse_lands_in_column_zero() {
        let plan = RicPlan::new(16, 4).unwrap();
        let mut x = vec![c(0.0, 0.0); 16];
        x[0] = c(1.0, 0.0);
        let out = fold(&ComplexSequence::new(x).unwrap(), &plan, &mut OpCounter::new()).unwrap();
        assert_eq!(
            out.samples().as_slice(),
            &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]
        );
    }

    #[test]
    fn constant_spectrum_folds_to_l() {
        let plan = RicPlan::new(8, 4).unwrap();
        let x = ComplexSequence::new(vec![c(1.0, 0.0); 8]).unwrap();
        let out = fold_spectrum(&x, &plan, &mut OpCounter::new()).unwrap();
        assert_eq!(out.samples().as_slice(), &[c(2.0, 0.0); 4]);
    }

    #[test]
    fn spectrum_fold_matches_double_loop() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let x: Vec<Complex64> = (0..8)
            .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let plan = RicPlan::new(8, 4).unwrap();
        let out = fold_spectrum(&ComplexSequence::new(x.clone()).unwrap(), &plan, &mut OpCounter::new()).unwrap();
        assert_eq!(out.samples().as_slice(), column_sums(&x, 8, 4).as_slice());
    }

    #[test]
    fn length_mismatch() {
        let plan = RicPlan::new(8, 4).unwrap();
        let err = fold(&ComplexSequence::zeros(9).unwrap(), &plan, &mut OpCounter::new());
        assert!(matches!(err, Err(RicError::LengthMismatch { expected: 8, actual: 9 })));
    }

    #[test]
    fn worked_example_costs_l_minus_one_per_column() {
        // L - 1 additions produce each compressed sample; C(L - 1) in total.
        let plan = RicPlan::new(8, 4).unwrap();
        let mut ops = OpCounter::new();
        fold(&ComplexSequence::zeros(8).unwrap(), &plan, &mut ops).unwrap();
        assert_eq!(ops.complex_adds / plan.c() as u64, (plan.l() - 1) as u64);
        assert_eq!(ops.complex_adds, 4);
    }

    fn arb_signal(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n)
            .prop_map(|v| v.into_iter().map(|(re, im)| c(re, im)).collect())
    }

    fn arb_plan() -> impl Strategy<Value = RicPlan> {
        (4usize..129, any::<prop::sample::Index>()).prop_filter_map("no valid c", |(n, pick)| {
            let plans = RicPlan::all_for_length(n);
            (!plans.is_empty()).then(|| plans[pick.index(plans.len())])
        })
    }

    proptest! {
        #[test]
        fn matches_definition_and_counts_exactly(
            (plan, x) in arb_plan().prop_flat_map(|p| (Just(p), arb_signal(p.n())))
        ) {
            let mut ops = OpCounter { complex_adds: 5, complex_mults: 11 };
            let out = fold(&ComplexSequence::new(x.clone()).unwrap(), &plan, &mut ops).unwrap();
            let want = column_sums(&x, plan.n(), plan.c());
            prop_assert_eq!(out.samples().as_slice(), want.as_slice());
            prop_assert_eq!(ops.complex_adds, 5 + (plan.c() * (plan.l() - 1)) as u64);
            prop_assert_eq!(ops.complex_mults, 11);
        }

        #[test]
        fn linearity(
            (plan, x, y) in arb_plan().prop_flat_map(|p| (Just(p), arb_signal(p.n()), arb_signal(p.n()))),
            a in -1.0f64..1.0,
            b in -1.0f64..1.0,
        ) {
            let combo: Vec<Complex64> = x.iter().zip(&y).map(|(u, v)| u * a + v * b).collect();
            let mut ops = OpCounter::new();
            let fx = fold(&ComplexSequence::new(x).unwrap(), &plan, &mut ops).unwrap();
            let fy = fold(&ComplexSequence::new(y).unwrap(), &plan, &mut ops).unwrap();
            let fc = fold(&ComplexSequence::new(combo).unwrap(), &plan, &mut ops).unwrap();
            for i in 0..plan.c() {
                let expect = fx.samples()[i] * a + fy.samples()[i] * b;
                let got = fc.samples()[i];
                prop_assert!((got.re - expect.re).abs() <= 1e-12 * plan.l() as f64);
                prop_assert!((got.im - expect.im).abs() <= 1e-12 * plan.l() as f64);
            }
        }

        #[test]
        fn composition(q in 3u32..9, p_raw in 0u32..8, p2_raw in 0u32..8, x_seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let p = 1 + p_raw % (q - 1);
            prop_assume!(p >= 2);
            let p2 = 1 + p2_raw % (p - 1);
            let outer = RicPlan::from_exponents(q, p).unwrap();
            let inner = RicPlan::from_exponents(p, p2).unwrap();
            let direct = RicPlan::from_exponents(q, p2).unwrap();
            // Small integers keep every sum exact.
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(x_seed);
            let x: Vec<Complex64> = (0..outer.n())
                .map(|_| c(rng.gen_range(-50i32..50) as f64, rng.gen_range(-50i32..50) as f64))
                .collect();
            let x = ComplexSequence::new(x).unwrap();
            let mut ops = OpCounter::new();
            let twice = fold(fold(&x, &outer, &mut ops).unwrap().samples(), &inner, &mut ops).unwrap();
            let once = fold(&x, &direct, &mut ops).unwrap();
            prop_assert_eq!(twice.samples(), once.samples());
        }

        #[test]
        fn tone_concentrates(q in 2u32..10, p_raw in 0u32..9, m_raw in any::<usize>()) {
            let p = 1 + p_raw % (q - 1);
            let plan = RicPlan::from_exponents(q, p).unwrap();
            let (n, c_len, l) = (plan.n(), plan.c(), plan.l());
            let m = m_raw % c_len;
            let tau = std::f64::consts::TAU;
            let x: Vec<Complex64> = (0..n)
                .map(|i| Complex64::from_polar(1.0, tau * ((m * l * i) % n) as f64 / n as f64))
                .collect();
            let out = fold(&ComplexSequence::new(x).unwrap(), &plan, &mut OpCounter::new()).unwrap();
            for col in 0..c_len {
                let expect = Complex64::from_polar(l as f64, tau * ((m * col) % c_len) as f64 / c_len as f64);
                prop_assert!((out.samples()[col] - expect).norm() <= 1e-10 * l as f64);
            }
        }
    }
}
