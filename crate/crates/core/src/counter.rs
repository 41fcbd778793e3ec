use std::ops::AddAssign;

use serde::{Deserialize, Serialize};

/// Tally of complex additions and complex multiplications performed by one
/// computation.
///
/// Scaling by a real factor (normalization, correction) is not a complex
/// multiplication and is not counted.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpCounter {
    pub complex_adds: u64,
    pub complex_mults: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, count: u64) {
        self.complex_adds += count;
    }

    pub fn mul(&mut self, count: u64) {
        self.complex_mults += count;
    }

    pub fn reset(&mut self) {
        *self = Self::default();
    }

    /// Counts accumulated since `earlier` was snapshotted from this counter.
    pub fn since(&self, earlier: &OpCounter) -> OpCounter {
        OpCounter {
            complex_adds: self.complex_adds - earlier.complex_adds,
            complex_mults: self.complex_mults - earlier.complex_mults,
        }
    }
}

impl AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: OpCounter) {
        self.complex_adds += rhs.complex_adds;
        self.complex_mults += rhs.complex_mults;
    }
}
