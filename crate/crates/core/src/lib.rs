//! Rectangular-index coefficients of the discrete Fourier transform.
//!
//! For a signal of length `N = L·C`, the `C` DFT coefficients whose indices
//! are multiples of `L`,
//!
//! ```text
//! X[k·L],   k = 0, 1, …, C-1,
//! ```
//!
//! are exactly the `C`-point DFT of the folded signal
//! `x̂[c] = Σ_l x[l·C + c]`. Folding costs `C·(L-1)` complex additions and no
//! multiplications, so all `C` coefficients come out of a `C`-point FFT
//! instead of an `N`-point one. The inverse transform folds the spectrum the
//! same way and corrects the normalization by `1/L` (or `1/√L` for the
//! unitary convention).
//!
//! ```
//! use ricdft::{ric_dft, ComplexSequence, NormalizationMode, OpCounter, RicPlan};
//!
//! let x = ComplexSequence::from_pairs(&[
//!     (1.0, 1.0), (2.0, 2.0), (3.0, 3.0), (-4.0, -4.0),
//!     (-5.0, -5.0), (-6.0, 6.0), (7.0, -7.0), (8.0, 8.0),
//! ]).unwrap();
//! let plan = RicPlan::new(8, 4).unwrap();
//! let mut ops = OpCounter::new();
//! let spectrum = ric_dft(&x, &plan, NormalizationMode::None, &mut ops).unwrap();
//!
//! assert_eq!(spectrum.indices(), vec![0, 2, 4, 6]);
//! let x0 = spectrum.entries()[0].value;
//! assert!((x0.re - 6.0).abs() < 1e-12 && (x0.im - 4.0).abs() < 1e-12);
//! ```
//!
//! The accompanying book (`book/`) walks through the derivation, the
//! normalization rules, and the frequency planner; its code listings are
//! compiled as doctests of this crate.

pub mod bench;
pub mod counter;
pub mod engine;
pub mod error;
pub mod fold;
pub mod io;
pub mod norm;
pub mod plan;
pub mod planner;
pub mod ric;
pub mod sequence;

pub use counter::OpCounter;
pub use engine::{dft_direct, fft_radix2, transform, EngineKind, TwiddleFactor};
pub use error::{Result, RicError};
pub use fold::{fold, fold_spectrum, FoldedSequence};
pub use norm::{Correction, Direction, NormalizationMode};
pub use plan::{flat_to_rect, make_plan, plan_from_exponents, rect_to_flat, RectIndex, RicPlan};
pub use ric::{
    ric_dft, ric_idft, ric_index_set, ric_transform, verify_against_oracle, verify_against_oracle_with, RicEntry,
    RicSpectrum, VerificationReport, VerifyOptions, DEFAULT_TOLERANCE,
};
pub use sequence::{ComplexSample, ComplexSequence};

// Book chapters, compiled so that their listings run under `cargo test --doc`.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/folding.md")]
    pub mod folding {}
    #[doc = include_str!("../../../book/src/normalization.md")]
    pub mod normalization {}
    #[doc = include_str!("../../../book/src/engines.md")]
    pub mod engines {}
    #[doc = include_str!("../../../book/src/planning.md")]
    pub mod planning {}
    #[doc = include_str!("../../../book/src/costs.md")]
    pub mod costs {}
    #[doc = include_str!("../../../book/src/files.md")]
    pub mod files {}
}
