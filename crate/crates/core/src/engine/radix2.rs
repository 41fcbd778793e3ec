use super::twiddle::root_table;
use crate::counter::OpCounter;
use crate::error::{Result, RicError};
use crate::norm::{Direction, NormalizationMode};
use crate::sequence::ComplexSequence;

/// Iterative decimation-in-time radix-2 FFT.
///
/// Counts one complex multiplication and two complex additions per
/// butterfly, trivial twiddles included: `(M/2)·log₂M` and `M·log₂M`.
pub fn fft_radix2(
    x: &ComplexSequence,
    dir: Direction,
    mode: NormalizationMode,
    counter: &mut OpCounter,
) -> Result<ComplexSequence> {
    let len = x.len();
    if !len.is_power_of_two() {
        return Err(RicError::NotPowerOfTwo(len));
    }
    let mut data = x.as_slice().to_vec();
    let bits = len.trailing_zeros();

    if bits > 0 {
        for i in 0..len {
            let j = i.reverse_bits() >> (usize::BITS - bits);
            if i < j {
                data.swap(i, j);
            }
        }
    }

    let roots = root_table(len);
    let mut span = 2;
    while span <= len {
        let half = span / 2;
        let stride = len / span;
        for block in data.chunks_exact_mut(span) {
            let (lo, hi) = block.split_at_mut(half);
            for (j, (a, b)) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
                let e = j * stride;
                let w = match dir {
                    Direction::Forward => roots[(len - e) % len],
                    Direction::Inverse => roots[e],
                };
                let t = *b * w;
                *b = *a - t;
                *a += t;
            }
        }
        span <<= 1;
    }

    let butterflies = (len / 2) as u64 * bits as u64;
    counter.mul(butterflies);
    counter.add(2 * butterflies);

    let scale = mode.scale(dir, len);
    if scale != 1.0 {
        for v in &mut data {
            *v *= scale;
        }
    }
    Ok(ComplexSequence::from_vec_unchecked(data))
}
