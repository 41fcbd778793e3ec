//! Reduced-length transform engines.
//!
//! Both engines use the kernel `W_M^{∓kn}` with `W_M = e^{j2π/M}` (minus for
//! [`Direction::Forward`]) and apply the scale chosen by
//! [`NormalizationMode::scale`].

mod direct;
mod radix2;
mod twiddle;

pub use direct::dft_direct;
pub use radix2::fft_radix2;
pub(crate) use twiddle::root_table;
pub use twiddle::TwiddleFactor;

use crate::counter::OpCounter;
use crate::norm::{Direction, NormalizationMode};
use crate::sequence::ComplexSequence;

/// Which engine [`transform`] picks for a given length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineKind {
    Radix2,
    Direct,
}

impl EngineKind {
    pub fn for_len(len: usize) -> Self {
        if len.is_power_of_two() {
            EngineKind::Radix2
        } else {
            EngineKind::Direct
        }
    }
}

/// Radix-2 FFT for power-of-two lengths, direct evaluation otherwise.
///
/// ```
/// use ricdft::{transform, ComplexSequence, Direction, NormalizationMode, OpCounter};
///
/// let x = ComplexSequence::from_pairs(&[(1.0, 0.0), (0.0, 0.0), (0.0, 0.0), (0.0, 0.0)]).unwrap();
/// let y = transform(&x, Direction::Forward, NormalizationMode::None, &mut OpCounter::new());
/// assert!(y.iter().all(|z| (z.re - 1.0).abs() < 1e-15 && z.im.abs() < 1e-15));
/// ```
pub fn transform(
    x: &ComplexSequence,
    dir: Direction,
    mode: NormalizationMode,
    counter: &mut OpCounter,
) -> ComplexSequence {
    match EngineKind::for_len(x.len()) {
        EngineKind::Radix2 => fft_radix2(x, dir, mode, counter).expect("length checked"),
        EngineKind::Direct => dft_direct(x, dir, mode, counter),
    }
}
