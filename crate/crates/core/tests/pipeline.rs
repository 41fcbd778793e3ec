mod common;

use common::{dft_at, dft_full, random_vec, rel_linf};
use proptest::prelude::*;
use ricdft::io::{synthesize_tones, Tone};
use ricdft::{
    ric_dft, ric_idft, ric_index_set, transform, ComplexSequence, Direction, NormalizationMode, OpCounter, RicPlan,
};

#[test]
fn random_64_point_forward() {
    let x = random_vec(64, 640);
    let plan = RicPlan::new(64, 8).unwrap();
    let full = dft_full(&x, -1.0, 1.0);
    let spec = ric_dft(
        &ComplexSequence::new(x).unwrap(),
        &plan,
        NormalizationMode::None,
        &mut OpCounter::new(),
    )
    .unwrap();
    for e in spec.entries() {
        assert_eq!(e.index, 8 * e.k);
        assert!((e.value - full[e.index]).norm() <= 1e-10);
    }
}

#[test]
fn random_32_point_unitary_inverse() {
    let spectrum = random_vec(32, 320);
    let plan = RicPlan::new(32, 4).unwrap();
    let oracle = dft_at(&spectrum, &[0, 8, 16, 24], 1.0, 1.0 / 32f64.sqrt());
    let spec = ric_idft(
        &ComplexSequence::new(spectrum).unwrap(),
        &plan,
        NormalizationMode::Unitary,
        &mut OpCounter::new(),
    )
    .unwrap();
    assert_eq!(spec.indices(), vec![0, 8, 16, 24]);
    for (a, b) in spec.values().iter().zip(&oracle) {
        assert!((a - b).norm() <= 1e-10);
    }
}

#[test]
fn inverse_recovers_decimated_signal() {
    // inverse of the full spectrum at indices nL gives back x[nL]
    let x = random_vec(48, 48);
    let spectrum = ComplexSequence::new(dft_full(&x, -1.0, 1.0)).unwrap();
    for plan in RicPlan::all_for_length(48) {
        let back = ric_idft(&spectrum, &plan, NormalizationMode::ReciprocalN, &mut OpCounter::new()).unwrap();
        let want: Vec<_> = ric_index_set(&plan).iter().map(|&i| x[i]).collect();
        assert!(rel_linf(&back.values(), &want) <= 1e-12, "c = {}", plan.c());
    }
}

#[test]
fn tone_on_ric_bin() {
    let plan = RicPlan::new(64, 16).unwrap();
    let k = 5;
    let x = synthesize_tones(
        64,
        &[Tone {
            bin: k * plan.l(),
            amplitude: 1.0,
            phase: 0.0,
        }],
    )
    .unwrap();
    let spec = ric_dft(&x, &plan, NormalizationMode::None, &mut OpCounter::new()).unwrap();
    for e in spec.entries() {
        let want = if e.k == k { 64.0 } else { 0.0 };
        assert!((e.value.re - want).abs() < 1e-10 && e.value.im.abs() < 1e-10);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn correspondence_any_factorization(n in 4usize..160, pick in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let plans = RicPlan::all_for_length(n);
        prop_assume!(!plans.is_empty());
        let plan = plans[pick.index(plans.len())];
        let x = random_vec(n, seed);
        let oracle = dft_at(&x, &ric_index_set(&plan), -1.0, 1.0);
        let spec = ric_dft(&ComplexSequence::new(x).unwrap(), &plan, NormalizationMode::None, &mut OpCounter::new()).unwrap();
        prop_assert!(rel_linf(&spec.values(), &oracle) <= 1e-9);
    }

    #[test]
    fn engine_round_trip(len in 1usize..300, seed in any::<u64>()) {
        let x = ComplexSequence::new(random_vec(len, seed)).unwrap();
        let y = transform(&x, Direction::Forward, NormalizationMode::None, &mut OpCounter::new());
        let back = transform(&y, Direction::Inverse, NormalizationMode::ReciprocalN, &mut OpCounter::new());
        prop_assert!(rel_linf(back.as_slice(), x.as_slice()) <= 1e-10);
    }
}
