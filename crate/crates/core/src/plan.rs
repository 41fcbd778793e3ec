//! Factorizations `N = L·C` and the rectangular index map `n = l·C + c`.

use serde::{Deserialize, Serialize};

use crate::error::{Result, RicError};

/// A validated factorization of the signal length `n` into a compressed
/// length `c` and a fold depth `l`, with `n = l·c` and `2 ≤ c ≤ n/2`.
///
/// When both `n` and `c` are powers of two the exponent view is populated:
/// `n = 2^q`, `c = 2^p`, `l = 2^(q-p)` with `1 ≤ p ≤ q-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RicPlan {
    n: usize,
    c: usize,
    l: usize,
    q: Option<u32>,
    p: Option<u32>,
}

impl RicPlan {
    /// Validates `(n, c)` and derives `l = n / c`.
    ///
    /// ```
    /// let plan = ricdft::RicPlan::new(8, 4).unwrap();
    /// assert_eq!((plan.n(), plan.c(), plan.l()), (8, 4, 2));
    /// assert_eq!(plan.exponents(), Some((3, 2)));
    /// ```
    pub fn new(n: usize, c: usize) -> Result<Self> {
        if n < 4 {
            return Err(RicError::Range(format!("signal length {n} must be at least 4")));
        }
        if c < 2 || c > n / 2 {
            return Err(RicError::Range(format!(
                "compressed length {c} must lie in [2, {}]",
                n / 2
            )));
        }
        if !n.is_multiple_of(c) {
            return Err(RicError::NonDivisor { n, c });
        }
        let (q, p) = if n.is_power_of_two() && c.is_power_of_two() {
            (Some(n.trailing_zeros()), Some(c.trailing_zeros()))
        } else {
            (None, None)
        };
        Ok(RicPlan { n, c, l: n / c, q, p })
    }

    /// Builds the power-of-two plan `n = 2^q`, `c = 2^p`.
    pub fn from_exponents(q: u32, p: u32) -> Result<Self> {
        if !(2..usize::BITS).contains(&q) {
            return Err(RicError::Range(format!(
                "exponent q = {q} must lie in [2, {}]",
                usize::BITS - 1
            )));
        }
        if p < 1 || p > q - 1 {
            return Err(RicError::Range(format!("exponent p = {p} must lie in [1, {}]", q - 1)));
        }
        Self::new(1usize << q, 1usize << p)
    }

    /// Every valid plan for signal length `n`, ordered by ascending `c`.
    pub fn all_for_length(n: usize) -> Vec<RicPlan> {
        (2..=n / 2).filter_map(|c| RicPlan::new(n, c).ok()).collect()
    }

    /// Signal length `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Compressed length `C` (number of coefficients produced).
    pub fn c(&self) -> usize {
        self.c
    }

    /// Fold depth `L` (rows summed into each compressed sample, and the
    /// stride between consecutive coefficient indices).
    pub fn l(&self) -> usize {
        self.l
    }

    /// `(q, p)` when `N = 2^q` and `C = 2^p`.
    pub fn exponents(&self) -> Option<(u32, u32)> {
        self.q.zip(self.p)
    }

    /// True for the square configuration `L = C = √N`.
    pub fn is_square(&self) -> bool {
        self.l == self.c
    }

    /// Row-major flattening `n = l·C + c`.
    pub fn rect_to_flat(&self, idx: RectIndex) -> Result<usize> {
        if idx.l >= self.l || idx.c >= self.c {
            return Err(RicError::Range(format!(
                "index (l: {}, c: {}) outside {}x{} rectangle",
                idx.l, idx.c, self.l, self.c
            )));
        }
        Ok(idx.l * self.c + idx.c)
    }

    /// Inverse of [`rect_to_flat`](Self::rect_to_flat).
    pub fn flat_to_rect(&self, flat: usize) -> Result<RectIndex> {
        if flat >= self.n {
            return Err(RicError::Range(format!("flat index {flat} outside [0, {})", self.n)));
        }
        Ok(RectIndex {
            l: flat / self.c,
            c: flat % self.c,
        })
    }
}

/// Position of a sample in the `L × C` arrangement of the signal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RectIndex {
    pub l: usize,
    pub c: usize,
}

impl RectIndex {
    pub fn new(l: usize, c: usize) -> Self {
        RectIndex { l, c }
    }
}

pub fn make_plan(n: usize, c: usize) -> Result<RicPlan> {
    RicPlan::new(n, c)
}

pub fn plan_from_exponents(q: u32, p: u32) -> Result<RicPlan> {
    RicPlan::from_exponents(q, p)
}

pub fn rect_to_flat(idx: RectIndex, plan: &RicPlan) -> Result<usize> {
    plan.rect_to_flat(idx)
}

pub fn flat_to_rect(flat: usize, plan: &RicPlan) -> Result<RectIndex> {
    plan.flat_to_rect(flat)
}
