use std::ops::Index;

use num_complex::Complex64;

use crate::error::{Result, RicError};

/// A complex sample. Both parts are plain `f64` amplitudes.
pub type ComplexSample = Complex64;

/// An ordered, non-empty list of finite complex samples.
///
/// Used for time-domain signals and for spectra alike; indices are 0-based.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexSequence(Vec<ComplexSample>);

impl ComplexSequence {
    /// Wraps `samples`, rejecting empty input and any NaN or infinite component.
    pub fn new(samples: Vec<ComplexSample>) -> Result<Self> {
        if samples.is_empty() {
            return Err(RicError::Empty);
        }
        if let Some(i) = samples.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(RicError::NonFinite(i));
        }
        Ok(ComplexSequence(samples))
    }

    /// Builds a sequence from `(re, im)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(re, im)| Complex64::new(re, im)).collect())
    }

    pub fn zeros(len: usize) -> Result<Self> {
        Self::new(vec![Complex64::new(0.0, 0.0); len])
    }

    // Internal constructor for values produced by arithmetic on already
    // validated sequences.
    pub(crate) fn from_vec_unchecked(samples: Vec<ComplexSample>) -> Self {
        debug_assert!(!samples.is_empty());
        ComplexSequence(samples)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[ComplexSample] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ComplexSample> {
        self.0.iter()
    }

    pub fn into_vec(self) -> Vec<ComplexSample> {
        self.0
    }

    /// Largest component-wise modulus, `‖x‖∞`.
    pub fn max_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Euclidean norm `‖x‖₂`.
    pub fn l2_norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

impl Index<usize> for ComplexSequence {
    type Output = ComplexSample;

    fn index(&self, index: usize) -> &ComplexSample {
        &self.0[index]
    }
}

impl<'a> IntoIterator for &'a ComplexSequence {
    type Item = &'a ComplexSample;
    type IntoIter = std::slice::Iter<'a, ComplexSample>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl TryFrom<Vec<ComplexSample>> for ComplexSequence {
    type Error = RicError;

    fn try_from(samples: Vec<ComplexSample>) -> Result<Self> {
        Self::new(samples)
    }
}
