use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;

/// `W_M^e = e^{j2π·e/M}` for an integer exponent `e`.
///
/// The exponent is reduced modulo `M` before evaluation, so
/// `W_M^{e+M}` and `W_M^e` are the same value bit for bit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwiddleFactor {
    order: usize,
    exponent: i64,
    value: Complex64,
}

impl TwiddleFactor {
    pub fn new(order: usize, exponent: i64) -> Self {
        assert!(order > 0, "twiddle order must be positive");
        let reduced = exponent.rem_euclid(order as i64);
        TwiddleFactor {
            order,
            exponent,
            value: unit_root(order, reduced as usize),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }
}

fn unit_root(order: usize, reduced: usize) -> Complex64 {
    // quarter turns are exact
    if (4 * reduced).is_multiple_of(order) {
        return match 4 * reduced / order {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let (sin, cos) = (TAU * reduced as f64 / order as f64).sin_cos();
    Complex64::new(cos, sin)
}

/// Table of `W_M^e` for `e = 0, …, M-1`.
pub(crate) fn root_table(order: usize) -> Arc<Vec<Complex64>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<Complex64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("twiddle cache poisoned").get(&order) {
        return Arc::clone(t);
    }
    let table: Arc<Vec<Complex64>> = Arc::new((0..order).map(|e| unit_root(order, e)).collect());
    cache
        .write()
        .expect("twiddle cache poisoned")
        .entry(order)
        .or_insert(table)
        .clone()
}
