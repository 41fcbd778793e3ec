//! Signal and spectrum files, and tone synthesis.
//!
//! Signal files come in two flavours:
//!
//! * CSV: one `re,im` pair per line, with an optional `re,im` header line.
//! * Raw: little-endian `f64`, interleaved `re, im`, no header.
//!
//! Spectra are written as CSV (`k,index,re,im`) or JSON.

use std::f64::consts::TAU;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Result, RicError};
use crate::norm::{Direction, NormalizationMode};
use crate::ric::RicSpectrum;
use crate::sequence::ComplexSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignalFileFormat {
    Csv,
    RawF64,
}

impl FromStr for SignalFileFormat {
    type Err = RicError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(SignalFileFormat::Csv),
            "raw" | "raw-f64" | "f64" => Ok(SignalFileFormat::RawF64),
            other => Err(RicError::Config(format!("unknown signal format '{other}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumFileFormat {
    Csv,
    Json,
}

impl FromStr for SpectrumFileFormat {
    type Err = RicError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(SpectrumFileFormat::Csv),
            "json" => Ok(SpectrumFileFormat::Json),
            other => Err(RicError::Config(format!("unknown spectrum format '{other}'"))),
        }
    }
}

pub fn read_signal(path: impl AsRef<Path>, format: SignalFileFormat) -> Result<ComplexSequence> {
    match format {
        SignalFileFormat::Csv => parse_signal_csv(&fs::read_to_string(path)?),
        SignalFileFormat::RawF64 => decode_raw_f64(&fs::read(path)?),
    }
}

pub fn write_signal(x: &ComplexSequence, path: impl AsRef<Path>, format: SignalFileFormat) -> Result<()> {
    let path = checked_path(path.as_ref())?;
    match format {
        SignalFileFormat::Csv => fs::write(path, render_signal_csv(x))?,
        SignalFileFormat::RawF64 => fs::write(path, encode_raw_f64(x))?,
    }
    Ok(())
}

/// Parses `re,im` lines. Blank lines are skipped; a first line of `re,im`
/// is treated as a header.
pub fn parse_signal_csv(text: &str) -> Result<ComplexSequence> {
    let mut samples = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() || (i == 0 && is_signal_header(line)) {
            continue;
        }
        samples.push(parse_pair(line, line_no)?);
    }
    if samples.is_empty() {
        return Err(RicError::Empty);
    }
    ComplexSequence::new(samples).map_err(|e| match e {
        RicError::NonFinite(i) => RicError::parse_at_line(i + 1, "non-finite value"),
        other => other,
    })
}

fn is_signal_header(line: &str) -> bool {
    let mut cols = line.split(',').map(str::trim);
    matches!((cols.next(), cols.next(), cols.next()), (Some("re"), Some("im"), None))
}

fn parse_pair(line: &str, line_no: usize) -> Result<Complex64> {
    let mut cols = line.split(',');
    let (Some(re), Some(im), None) = (cols.next(), cols.next(), cols.next()) else {
        return Err(RicError::parse_at_line(
            line_no,
            format!("expected 're,im', found '{line}'"),
        ));
    };
    let parse = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|e| RicError::parse_at_line(line_no, format!("'{}': {e}", s.trim())))
    };
    Ok(Complex64::new(parse(re)?, parse(im)?))
}

pub fn render_signal_csv(x: &ComplexSequence) -> String {
    let mut out = String::from("re,im\n");
    for z in x {
        let _ = writeln!(out, "{},{}", fmt_f64(z.re), fmt_f64(z.im));
    }
    out
}

pub fn decode_raw_f64(bytes: &[u8]) -> Result<ComplexSequence> {
    if bytes.is_empty() {
        return Err(RicError::Empty);
    }
    if !bytes.len().is_multiple_of(16) {
        let offset = bytes.len() - bytes.len() % 16;
        return Err(RicError::parse_at_offset(
            offset,
            format!("{} trailing bytes do not form a complete sample", bytes.len() % 16),
        ));
    }
    let samples = bytes
        .chunks_exact(16)
        .map(|chunk| {
            let re = f64::from_le_bytes(chunk[..8].try_into().expect("8 bytes"));
            let im = f64::from_le_bytes(chunk[8..].try_into().expect("8 bytes"));
            Complex64::new(re, im)
        })
        .collect();
    ComplexSequence::new(samples).map_err(|e| match e {
        RicError::NonFinite(i) => RicError::parse_at_offset(i * 16, "non-finite value"),
        other => other,
    })
}

pub fn encode_raw_f64(x: &ComplexSequence) -> Vec<u8> {
    let mut out = Vec::with_capacity(x.len() * 16);
    for z in x {
        out.extend_from_slice(&z.re.to_le_bytes());
        out.extend_from_slice(&z.im.to_le_bytes());
    }
    out
}

/// Shortest decimal that parses back to the same `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:?}")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumHeader {
    pub n: usize,
    pub c: usize,
    pub l: usize,
    pub mode: NormalizationMode,
    pub direction: Direction,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub k: usize,
    pub index: usize,
    pub re: f64,
    pub im: f64,
}

/// JSON layout of a written spectrum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumDocument {
    pub header: SpectrumHeader,
    pub records: Vec<SpectrumRecord>,
}

impl From<&RicSpectrum> for SpectrumDocument {
    fn from(s: &RicSpectrum) -> Self {
        SpectrumDocument {
            header: SpectrumHeader {
                n: s.plan().n(),
                c: s.plan().c(),
                l: s.plan().l(),
                mode: s.mode(),
                direction: s.direction(),
            },
            records: spectrum_records(s),
        }
    }
}

fn spectrum_records(s: &RicSpectrum) -> Vec<SpectrumRecord> {
    s.entries()
        .iter()
        .map(|e| SpectrumRecord {
            k: e.k,
            index: e.index,
            re: e.value.re,
            im: e.value.im,
        })
        .collect()
}

pub fn render_spectrum(spectrum: &RicSpectrum, format: SpectrumFileFormat) -> String {
    match format {
        SpectrumFileFormat::Csv => {
            let mut out = String::from("k,index,re,im\n");
            for r in spectrum_records(spectrum) {
                let _ = writeln!(out, "{},{},{},{}", r.k, r.index, fmt_f64(r.re), fmt_f64(r.im));
            }
            out
        }
        SpectrumFileFormat::Json => {
            let mut s = serde_json::to_string_pretty(&SpectrumDocument::from(spectrum)).expect("spectrum serializes");
            s.push('\n');
            s
        }
    }
}

pub fn write_spectrum(spectrum: &RicSpectrum, path: impl AsRef<Path>, format: SpectrumFileFormat) -> Result<()> {
    let path = checked_path(path.as_ref())?;
    fs::write(path, render_spectrum(spectrum, format))?;
    Ok(())
}

/// Reads the `k,index,re,im` CSV produced by [`write_spectrum`].
pub fn read_spectrum_csv(path: impl AsRef<Path>) -> Result<Vec<SpectrumRecord>> {
    let mut reader = csv::Reader::from_path(path).map_err(csv_error)?;
    let records = reader
        .deserialize()
        .collect::<std::result::Result<Vec<SpectrumRecord>, _>>()
        .map_err(csv_error)?;
    if records.is_empty() {
        return Err(RicError::Empty);
    }
    Ok(records)
}

pub fn read_spectrum_json(path: impl AsRef<Path>) -> Result<SpectrumDocument> {
    let text = fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| RicError::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })
}

pub(crate) fn csv_error(e: csv::Error) -> RicError {
    let location = e
        .position()
        .map(|p| format!("line {}", p.line()))
        .unwrap_or_else(|| "unknown position".into());
    match e.into_kind() {
        csv::ErrorKind::Io(io) => RicError::Io(io),
        kind => RicError::Parse {
            location,
            message: format!("{kind:?}"),
        },
    }
}

pub(crate) fn checked_path(path: &Path) -> Result<&Path> {
    if path.as_os_str().is_empty() {
        return Err(RicError::Io(std::io::Error::new(
            std::io::ErrorKind::InvalidInput,
            "empty output path",
        )));
    }
    Ok(path)
}

/// A complex exponential on bin `bin` of an `n`-point grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tone {
    pub bin: usize,
    pub amplitude: f64,
    /// Radians.
    pub phase: f64,
}

/// `x[m] = Σ a · e^{j(2π·bin·m/n + φ)}` over all tones.
pub fn synthesize_tones(n: usize, tones: &[Tone]) -> Result<ComplexSequence> {
    if n == 0 {
        return Err(RicError::Range("signal length must be positive".into()));
    }
    if let Some(t) = tones.iter().find(|t| t.bin >= n) {
        return Err(RicError::Range(format!("tone bin {} outside [0, {n})", t.bin)));
    }
    let samples = (0..n)
        .map(|m| {
            tones
                .iter()
                .map(|t| {
                    // reduce bin·m mod n before scaling so long signals keep full precision
                    let turn = ((t.bin as u128 * m as u128) % n as u128) as f64 / n as f64;
                    Complex64::from_polar(t.amplitude, TAU * turn + t.phase)
                })
                .sum()
        })
        .collect();
    ComplexSequence::new(samples)
}
