//! Operation counts and timings for three ways of obtaining the
//! rectangular-index coefficients:
//!
//! * `full-direct`: the `N`-point definition, `O(N²)` (small `N` only);
//! * `full-fft`: an `N`-point radix-2 FFT, then picking indices `k·L`;
//! * `ric`: fold to `C` points, then a `C`-point transform.
//!
//! Counts are exact and deterministic. Timings are medians over repeated
//! runs on a monotonic clock, after discarded warm-up runs.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::counter::OpCounter;
use crate::engine::{dft_direct, fft_radix2, EngineKind};
use crate::error::{Result, RicError};
use crate::fold::fold;
use crate::io::{checked_path, csv_error};
use crate::norm::{Direction, NormalizationMode};
use crate::plan::RicPlan;
use crate::ric::{direct_at_indices, ric_dft, ric_index_set};
use crate::sequence::ComplexSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    FullDirect,
    FullFft,
    Ric,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::FullDirect => "full-direct",
            Method::FullFft => "full-fft",
            Method::Ric => "ric",
        }
    }
}

/// Which compressed lengths to benchmark for each `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CPolicy {
    AllDivisors,
    PowersOfTwo,
    Explicit(Vec<usize>),
}

impl CPolicy {
    fn plans_for(&self, n: usize) -> Vec<RicPlan> {
        let all = RicPlan::all_for_length(n);
        match self {
            CPolicy::AllDivisors => all,
            CPolicy::PowersOfTwo => all.into_iter().filter(|p| p.c().is_power_of_two()).collect(),
            CPolicy::Explicit(cs) => all.into_iter().filter(|p| cs.contains(&p.c())).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub n_list: Vec<usize>,
    pub c_policy: CPolicy,
    /// Timed runs per method; the median is reported.
    pub trials: usize,
    /// Untimed runs before the timed ones.
    pub warmup: usize,
    pub seed: u64,
    /// `full-direct` rows are only produced for `n` up to this size.
    pub direct_max_n: usize,
    /// When false, only counts are collected and `wall_time_ns` is 0.
    pub timing: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            n_list: vec![1024],
            c_policy: CPolicy::PowersOfTwo,
            trials: 9,
            warmup: 1,
            seed: 0x5eed,
            direct_max_n: 1024,
            timing: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub c: usize,
    pub l: usize,
    pub method: Method,
    /// `radix2` or `direct`: the engine whose counts appear in this row.
    /// Both count every twiddle multiplication, trivial ones included.
    pub engine: String,
    pub complex_adds: u64,
    pub complex_mults: u64,
    /// Additions contributed by folding (non-zero only for `ric` rows).
    pub fold_adds: u64,
    pub wall_time_ns: u64,
    pub trials: usize,
    pub max_rel_error: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn rows_for(&self, n: usize, c: usize) -> impl Iterator<Item = &BenchRow> {
        self.rows.iter().filter(move |r| r.n == n && r.c == c)
    }

    pub fn row(&self, n: usize, c: usize, method: Method) -> Option<&BenchRow> {
        self.rows_for(n, c).find(|r| r.method == method)
    }
}

/// Pseudorandom input with components uniform in `[-1, 1)`.
pub fn random_signal(n: usize, seed: u64) -> ComplexSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    ComplexSequence::new(samples).expect("finite samples")
}

// Oracle work budget in complex multiply-adds; above it the full FFT
// stands in for direct evaluation.
const DIRECT_ORACLE_BUDGET: usize = 1 << 28;

pub fn run_benchmark(config: &BenchConfig) -> Result<BenchReport> {
    if config.n_list.is_empty() {
        return Err(RicError::Config("n list is empty".into()));
    }
    if config.trials == 0 {
        return Err(RicError::Config("trials must be at least 1".into()));
    }
    let grid: Vec<(usize, Vec<RicPlan>)> = config
        .n_list
        .iter()
        .map(|&n| (n, config.c_policy.plans_for(n)))
        .collect();
    if let Some((n, _)) = grid.iter().find(|(_, plans)| plans.is_empty()) {
        return Err(RicError::Config(format!("no valid compressed length for n = {n}")));
    }

    let mut rows = Vec::new();
    for (n, plans) in grid {
        let x = random_signal(n, config.seed ^ n as u64);
        let full_fft = n.is_power_of_two().then(|| {
            fft_radix2(&x, Direction::Forward, NormalizationMode::None, &mut OpCounter::new()).expect("power of two")
        });
        let full_direct = (n <= config.direct_max_n)
            .then(|| dft_direct(&x, Direction::Forward, NormalizationMode::None, &mut OpCounter::new()));

        for plan in plans {
            let indices = ric_index_set(&plan);
            let oracle: Vec<Complex64> = if n * plan.c() <= DIRECT_ORACLE_BUDGET {
                direct_at_indices(&x, &indices, Direction::Forward, NormalizationMode::None)
            } else if let Some(full) = &full_fft {
                indices.iter().map(|&i| full[i]).collect()
            } else {
                return Err(RicError::Config(format!(
                    "n = {n}, c = {} too large for direct verification",
                    plan.c()
                )));
            };
            let rel = |vals: &[Complex64]| max_rel_error(vals, &oracle);

            // ric
            let mut fold_ops = OpCounter::new();
            fold(&x, &plan, &mut fold_ops)?;
            let fold_adds = fold_ops.complex_adds;
            let mut ops = OpCounter::new();
            let spec = ric_dft(&x, &plan, NormalizationMode::None, &mut ops)?;
            let time = config
                .timed(|| ric_dft(&x, &plan, NormalizationMode::None, &mut OpCounter::new()).expect("validated plan"));
            rows.push(BenchRow {
                n,
                c: plan.c(),
                l: plan.l(),
                method: Method::Ric,
                engine: engine_name(plan.c()),
                complex_adds: ops.complex_adds,
                complex_mults: ops.complex_mults,
                fold_adds,
                wall_time_ns: time,
                trials: config.trials,
                max_rel_error: rel(&spec.values()),
            });

            if let Some(full) = &full_fft {
                let mut ops = OpCounter::new();
                fft_radix2(&x, Direction::Forward, NormalizationMode::None, &mut ops)?;
                let time = config.timed(|| {
                    let y = fft_radix2(&x, Direction::Forward, NormalizationMode::None, &mut OpCounter::new())
                        .expect("power of two");
                    indices.iter().map(|&i| y[i]).collect::<Vec<_>>()
                });
                let picked: Vec<Complex64> = indices.iter().map(|&i| full[i]).collect();
                rows.push(BenchRow {
                    n,
                    c: plan.c(),
                    l: plan.l(),
                    method: Method::FullFft,
                    engine: engine_name(n),
                    complex_adds: ops.complex_adds,
                    complex_mults: ops.complex_mults,
                    fold_adds: 0,
                    wall_time_ns: time,
                    trials: config.trials,
                    max_rel_error: rel(&picked),
                });
            }

            if let Some(full) = &full_direct {
                let mut ops = OpCounter::new();
                dft_direct(&x, Direction::Forward, NormalizationMode::None, &mut ops);
                let time =
                    config.timed(|| dft_direct(&x, Direction::Forward, NormalizationMode::None, &mut OpCounter::new()));
                let picked: Vec<Complex64> = indices.iter().map(|&i| full[i]).collect();
                rows.push(BenchRow {
                    n,
                    c: plan.c(),
                    l: plan.l(),
                    method: Method::FullDirect,
                    engine: "direct".into(),
                    complex_adds: ops.complex_adds,
                    complex_mults: ops.complex_mults,
                    fold_adds: 0,
                    wall_time_ns: time,
                    trials: config.trials,
                    max_rel_error: rel(&picked),
                });
            }
        }
    }
    rows.sort_by_key(|a| (a.n, a.c, a.method));
    Ok(BenchReport { rows })
}

impl BenchConfig {
    fn timed<T>(&self, mut f: impl FnMut() -> T) -> u64 {
        if !self.timing {
            return 0;
        }
        for _ in 0..self.warmup {
            std::hint::black_box(f());
        }
        let mut samples: Vec<u64> = (0..self.trials)
            .map(|_| {
                let start = Instant::now();
                std::hint::black_box(f());
                start.elapsed().as_nanos() as u64
            })
            .collect();
        median(&mut samples)
    }
}

/// Median of `samples`; the lower middle element for even lengths.
pub fn median(samples: &mut [u64]) -> u64 {
    samples.sort_unstable();
    samples[(samples.len() - 1) / 2]
}

fn engine_name(len: usize) -> String {
    match EngineKind::for_len(len) {
        EngineKind::Radix2 => "radix2".into(),
        EngineKind::Direct => "direct".into(),
    }
}

fn max_rel_error(values: &[Complex64], oracle: &[Complex64]) -> f64 {
    let scale = oracle.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let abs = values
        .iter()
        .zip(oracle)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    if scale > 0.0 {
        abs / scale
    } else {
        abs
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = RicError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            other => Err(RicError::Config(format!("unknown report format '{other}'"))),
        }
    }
}

pub fn render_report(report: &BenchReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &report.rows {
                w.serialize(row).map_err(csv_error)?;
            }
            if report.rows.is_empty() {
                w.write_record(HEADER).map_err(csv_error)?;
            }
            let bytes = w.into_inner().map_err(|e| RicError::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            Ok(s)
        }
        ReportFormat::Markdown => {
            let mut out = format!("| {} |\n|{}\n", HEADER.join(" | "), "---:|".repeat(HEADER.len()));
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {:.3e} |",
                    r.n,
                    r.c,
                    r.l,
                    r.method.as_str(),
                    r.engine,
                    r.complex_adds,
                    r.complex_mults,
                    r.fold_adds,
                    r.wall_time_ns,
                    r.trials,
                    r.max_rel_error
                );
            }
            Ok(out)
        }
    }
}

const HEADER: [&str; 11] = [
    "n",
    "c",
    "l",
    "method",
    "engine",
    "complex_adds",
    "complex_mults",
    "fold_adds",
    "wall_time_ns",
    "trials",
    "max_rel_error",
];

pub fn emit_report(report: &BenchReport, path: impl AsRef<Path>, format: ReportFormat) -> Result<()> {
    let path = checked_path(path.as_ref())?;
    fs::write(path, render_report(report, format)?)?;
    Ok(())
}

pub fn read_report_csv(path: impl AsRef<Path>) -> Result<BenchReport> {
    let mut reader = csv::Reader::from_path(path).map_err(csv_error)?;
    let rows = reader
        .deserialize()
        .collect::<std::result::Result<Vec<BenchRow>, _>>()
        .map_err(csv_error)?;
    Ok(BenchReport { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts_only(n_list: Vec<usize>, c_policy: CPolicy) -> BenchConfig {
        BenchConfig {
            n_list,
            c_policy,
            trials: 1,
            timing: false,
            ..Default::default()
        }
    }

    #[test]
    fn small_case_fold_adds() {
        let report = run_benchmark(&counts_only(vec![8], CPolicy::Explicit(vec![4]))).unwrap();
        let ric = report.row(8, 4, Method::Ric).unwrap();
        assert_eq!(ric.fold_adds, 4);
        assert_eq!(ric.l, 2);
        // fold 4 adds + 4-point FFT (4 mults, 8 adds)
        assert_eq!(ric.complex_adds, 12);
        assert_eq!(ric.complex_mults, 4);
        assert_eq!(report.rows.len(), 3);
    }

    #[test]
    fn square_point_uses_fewer_mults() {
        let report = run_benchmark(&counts_only(vec![1024], CPolicy::Explicit(vec![32]))).unwrap();
        let ric = report.row(1024, 32, Method::Ric).unwrap();
        let fft = report.row(1024, 32, Method::FullFft).unwrap();
        assert!(ric.complex_mults <= fft.complex_mults);
        assert_eq!(ric.complex_mults, 16 * 5);
        assert_eq!(fft.complex_mults, 512 * 10);
    }

    #[test]
    fn config_errors() {
        let mut cfg = counts_only(vec![], CPolicy::PowersOfTwo);
        assert!(matches!(run_benchmark(&cfg), Err(RicError::Config(_))));
        cfg.n_list = vec![64];
        cfg.trials = 0;
        assert!(matches!(run_benchmark(&cfg), Err(RicError::Config(_))));
        let cfg = counts_only(vec![7], CPolicy::AllDivisors);
        assert!(matches!(run_benchmark(&cfg), Err(RicError::Config(_))));
        let cfg = counts_only(vec![64], CPolicy::Explicit(vec![3]));
        assert!(matches!(run_benchmark(&cfg), Err(RicError::Config(_))));
    }

    #[test]
    fn rows_sorted_and_agree() {
        let report = run_benchmark(&counts_only(vec![64, 24], CPolicy::AllDivisors)).unwrap();
        let keys: Vec<_> = report.rows.iter().map(|r| (r.n, r.c, r.method)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        for r in &report.rows {
            assert!(r.max_rel_error <= 1e-9, "{r:?}");
            if r.method == Method::Ric {
                assert_eq!(r.fold_adds, (r.c * (r.l - 1)) as u64);
            }
        }
        // 24 is not a power of two: no full-fft rows
        assert!(report.rows.iter().all(|r| r.n != 24 || r.method != Method::FullFft));
    }

    #[test]
    fn counts_are_seed_independent_and_deterministic() {
        let mut cfg = counts_only(vec![256], CPolicy::PowersOfTwo);
        let a = run_benchmark(&cfg).unwrap();
        let b = run_benchmark(&cfg).unwrap();
        assert_eq!(a, b);
        cfg.seed = 99;
        let c = run_benchmark(&cfg).unwrap();
        for (x, y) in a.rows.iter().zip(&c.rows) {
            assert_eq!((x.complex_adds, x.complex_mults), (y.complex_adds, y.complex_mults));
        }
    }

    #[test]
    fn ric_mults_non_decreasing_in_c() {
        let report = run_benchmark(&counts_only(vec![4096], CPolicy::PowersOfTwo)).unwrap();
        let mults: Vec<u64> = report
            .rows
            .iter()
            .filter(|r| r.method == Method::Ric)
            .map(|r| r.complex_mults)
            .collect();
        assert!(mults.windows(2).all(|w| w[0] <= w[1]), "{mults:?}");
    }

    #[test]
    fn median_picks_middle() {
        assert_eq!(median(&mut [5, 1, 3]), 3);
        assert_eq!(median(&mut [4, 1, 3, 2]), 2);
        assert_eq!(median(&mut [7]), 7);
    }

    #[test]
    fn timing_run_fills_times() {
        let cfg = BenchConfig {
            n_list: vec![64],
            c_policy: CPolicy::Explicit(vec![8]),
            trials: 3,
            ..Default::default()
        };
        let report = run_benchmark(&cfg).unwrap();
        assert!(report.rows.iter().all(|r| r.trials == 3));
    }

    #[test]
    fn report_formats() {
        let report = run_benchmark(&counts_only(vec![8], CPolicy::Explicit(vec![4]))).unwrap();
        let one = BenchReport {
            rows: vec![report.rows[0].clone()],
        };
        let md = render_report(&one, ReportFormat::Markdown).unwrap();
        assert_eq!(md.lines().count(), 3);
        let csv = render_report(&one, ReportFormat::Csv).unwrap();
        assert_eq!(csv.lines().count(), 2);
        assert!(csv.starts_with("n,c,l,method,engine,"));
        let json: BenchReport = serde_json::from_str(&render_report(&report, ReportFormat::Json).unwrap()).unwrap();
        assert_eq!(json, report);
        assert!(emit_report(&report, "", ReportFormat::Csv).is_err());
    }
}
