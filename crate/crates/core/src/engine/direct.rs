use num_complex::Complex64;

use super::twiddle::root_table;
use crate::counter::OpCounter;
use crate::norm::{Direction, NormalizationMode};
use crate::sequence::ComplexSequence;

/// `O(M²)` transform evaluated straight from the definition. Valid for any
/// length.
///
/// Every term counts one complex multiplication, including trivial twiddles;
/// each output costs `M - 1` complex additions.
pub fn dft_direct(
    x: &ComplexSequence,
    dir: Direction,
    mode: NormalizationMode,
    counter: &mut OpCounter,
) -> ComplexSequence {
    let len = x.len();
    let roots = root_table(len);
    let scale = mode.scale(dir, len);
    let out = (0..len)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (n, &v) in x.iter().enumerate() {
                let e = (k * n) % len;
                let w = match dir {
                    Direction::Forward => roots[(len - e) % len],
                    Direction::Inverse => roots[e],
                };
                acc += v * w;
            }
            acc * scale
        })
        .collect();
    counter.mul((len * len) as u64);
    counter.add((len * (len - 1)) as u64);
    ComplexSequence::from_vec_unchecked(out)
}
