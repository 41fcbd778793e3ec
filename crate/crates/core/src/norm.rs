//! Transform direction, scaling conventions, and the correction factor that
//! converts a `C`-point normalization into the `N`-point one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::RicError;
use crate::plan::RicPlan;

/// Sign of the exponent in the transform kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Kernel `W^{-kn}`.
    Forward,
    /// Kernel `W^{+kn}`.
    Inverse,
}

impl Direction {
    /// `-1` for forward, `+1` for inverse.
    pub fn sign(self) -> f64 {
        match self {
            Direction::Forward => -1.0,
            Direction::Inverse => 1.0,
        }
    }
}

/// Scaling convention shared by a forward/inverse pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalizationMode {
    /// No scaling in either direction.
    None,
    /// Forward unscaled, inverse scaled by `1/M`.
    ReciprocalN,
    /// Both directions scaled by `1/√M`.
    Unitary,
}

impl NormalizationMode {
    pub const ALL: [NormalizationMode; 3] = [
        NormalizationMode::None,
        NormalizationMode::ReciprocalN,
        NormalizationMode::Unitary,
    ];

    /// Scale applied by an `len`-point transform in direction `dir`.
    pub fn scale(self, dir: Direction, len: usize) -> f64 {
        match (self, dir) {
            (NormalizationMode::None, _) => 1.0,
            (NormalizationMode::ReciprocalN, Direction::Forward) => 1.0,
            (NormalizationMode::ReciprocalN, Direction::Inverse) => 1.0 / len as f64,
            (NormalizationMode::Unitary, _) => 1.0 / (len as f64).sqrt(),
        }
    }

    /// Correction applied after a `C`-point transform so that the result
    /// carries the `N`-point normalization.
    pub fn correction(self, dir: Direction) -> Correction {
        match (self, dir) {
            (NormalizationMode::None, _) => Correction::One,
            (NormalizationMode::ReciprocalN, Direction::Forward) => Correction::One,
            (NormalizationMode::ReciprocalN, Direction::Inverse) => Correction::InvL,
            (NormalizationMode::Unitary, _) => Correction::InvSqrtL,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            NormalizationMode::None => "none",
            NormalizationMode::ReciprocalN => "recip-n",
            NormalizationMode::Unitary => "unitary",
        }
    }
}

impl fmt::Display for NormalizationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NormalizationMode {
    type Err = RicError;

    fn from_str(s: &str) -> Result<Self, RicError> {
        match s {
            "none" => Ok(NormalizationMode::None),
            "recip-n" | "reciprocal-n" => Ok(NormalizationMode::ReciprocalN),
            "unitary" => Ok(NormalizationMode::Unitary),
            other => Err(RicError::Config(format!("unknown normalization mode '{other}'"))),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Inverse => "inverse",
        })
    }
}

impl FromStr for Direction {
    type Err = RicError;

    fn from_str(s: &str) -> Result<Self, RicError> {
        match s {
            "forward" | "fwd" => Ok(Direction::Forward),
            "inverse" | "inv" => Ok(Direction::Inverse),
            other => Err(RicError::Config(format!("unknown direction '{other}'"))),
        }
    }
}

/// The correction factor `K`: one of `1`, `1/L`, `1/√L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Correction {
    One,
    InvL,
    InvSqrtL,
}

impl Correction {
    pub fn value(self, plan: &RicPlan) -> f64 {
        let l = plan.l() as f64;
        match self {
            Correction::One => 1.0,
            Correction::InvL => 1.0 / l,
            Correction::InvSqrtL => 1.0 / l.sqrt(),
        }
    }
}
