use std::fmt::Write as _;
use std::io::Write as _;

use ricdft::bench::{self, BenchConfig, CPolicy, ReportFormat};
use ricdft::io::{self, SignalFileFormat, SpectrumFileFormat, Tone};
use ricdft::planner::{self, PlannerOptions};
use ricdft::{
    fold, ric_transform, verify_against_oracle_with, ComplexSequence, Direction, NormalizationMode, OpCounter,
    RicError, RicPlan, VerifyOptions,
};

use crate::{
    BenchArgs, CPolicyArg, CompressArgs, Dir, Failure, Mode, PlanArgs, PlanCmdArgs, PlanOutput, ReportFormatArg,
    SignalFormat, SpectrumFormat, SynthArgs, TransformArgs, VerifyArgs,
};

type CmdResult = Result<(), Failure>;

impl PlanArgs {
    /// Resolves the plan, checking it against the input length when known.
    fn resolve(&self, input_len: Option<usize>) -> Result<RicPlan, Failure> {
        let plan = match (self.q, self.p, self.c) {
            (Some(q), Some(p), None) => {
                if self.n.is_some() {
                    return Err(Failure::Usage("--n cannot be combined with --q/--p".into()));
                }
                RicPlan::from_exponents(q, p)?
            }
            (None, None, Some(c)) => {
                let n = self
                    .n
                    .or(input_len)
                    .ok_or_else(|| Failure::Usage("--n is required without an input file".into()))?;
                RicPlan::new(n, c)?
            }
            _ => {
                return Err(Failure::Usage(
                    "give either --c (and optionally --n) or both --q and --p".into(),
                ))
            }
        };
        if let Some(len) = input_len {
            if len != plan.n() {
                return Err(RicError::LengthMismatch {
                    expected: plan.n(),
                    actual: len,
                }
                .into());
            }
        }
        Ok(plan)
    }
}

impl From<SignalFormat> for SignalFileFormat {
    fn from(f: SignalFormat) -> Self {
        match f {
            SignalFormat::Csv => SignalFileFormat::Csv,
            SignalFormat::Raw => SignalFileFormat::RawF64,
        }
    }
}

impl From<Mode> for NormalizationMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::None => NormalizationMode::None,
            Mode::RecipN => NormalizationMode::ReciprocalN,
            Mode::Unitary => NormalizationMode::Unitary,
        }
    }
}

impl From<Dir> for Direction {
    fn from(d: Dir) -> Self {
        match d {
            Dir::Forward => Direction::Forward,
            Dir::Inverse => Direction::Inverse,
        }
    }
}

fn emit(output: Option<&str>, bytes: &[u8]) -> CmdResult {
    match output {
        Some(path) => {
            if path.is_empty() {
                return Err(Failure::Io("empty output path".into()));
            }
            std::fs::write(path, bytes).map_err(|e| Failure::Io(format!("{path}: {e}")))
        }
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| Failure::Io(e.to_string())),
    }
}

fn render_signal(x: &ComplexSequence, format: SignalFileFormat) -> Vec<u8> {
    match format {
        SignalFileFormat::Csv => io::render_signal_csv(x).into_bytes(),
        SignalFileFormat::RawF64 => io::encode_raw_f64(x),
    }
}

pub fn compress(a: CompressArgs) -> CmdResult {
    let x = io::read_signal(&a.input, a.format.into())?;
    let plan = a.plan.resolve(Some(x.len()))?;
    let folded = fold(&x, &plan, &mut OpCounter::new())?;
    let out_format = a.output_format.unwrap_or(a.format).into();
    emit(a.output.as_deref(), &render_signal(folded.samples(), out_format))
}

pub fn transform(a: TransformArgs, dir: Direction) -> CmdResult {
    let x = io::read_signal(&a.input, a.format.into())?;
    let plan = a.plan.resolve(Some(x.len()))?;
    let spectrum = ric_transform(&x, &plan, a.mode.into(), dir, &mut OpCounter::new())?;
    let format = match a.output_format {
        SpectrumFormat::Csv => SpectrumFileFormat::Csv,
        SpectrumFormat::Json => SpectrumFileFormat::Json,
    };
    emit(a.output.as_deref(), io::render_spectrum(&spectrum, format).as_bytes())
}

pub fn plan(a: PlanCmdArgs) -> CmdResult {
    let opts = PlannerOptions {
        max_n: a.max_n,
        power_of_two_only: !a.any_n,
        tol: a.tol,
    };
    let proposal = match planner::plan_for_frequencies(a.sample_rate, &a.targets, &opts) {
        Ok(p) => p,
        Err(RicError::Infeasible { best_error }) => {
            return Err(Failure::Usage(format!(
                "infeasible: no plan with N <= {} meets tol {}; best achievable relative error {best_error:e}",
                a.max_n, a.tol
            )))
        }
        Err(e) => return Err(e.into()),
    };
    let coverage = planner::coverage_report(&proposal, &a.coverage);
    let text = match a.format {
        PlanOutput::Json => {
            let doc = serde_json::json!({ "proposal": proposal, "coverage": coverage });
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        PlanOutput::Table => {
            let p = &proposal.plan;
            let mut s = format!(
                "N = {}  C = {}  L = {}  sample rate = {} Hz  bin width = {} Hz\n\n",
                p.n(),
                p.c(),
                p.l(),
                io::fmt_f64(proposal.sample_rate),
                io::fmt_f64(proposal.bin_width)
            );
            let _ = writeln!(
                s,
                "{:>14} {:>6} {:>6} {:>16} {:>12}",
                "target_hz", "k", "bin", "achieved_hz", "rel_error"
            );
            for r in &proposal.assignments {
                let _ = writeln!(
                    s,
                    "{:>14} {:>6} {:>6} {:>16} {:>12.3e}",
                    io::fmt_f64(r.target),
                    r.k,
                    r.bin_index,
                    io::fmt_f64(r.achieved),
                    r.rel_error
                );
            }
            for r in &coverage {
                let _ = writeln!(
                    s,
                    "{:>14} {:>6} {:>6} {:>16} {:>12.3e}  (coverage)",
                    io::fmt_f64(r.target),
                    "-",
                    r.bin_index,
                    io::fmt_f64(r.achieved),
                    r.rel_error
                );
            }
            s
        }
    };
    emit(None, text.as_bytes())
}

pub fn bench(a: BenchArgs) -> CmdResult {
    let c_policy = match a.c_policy {
        CPolicyArg::All => CPolicy::AllDivisors,
        CPolicyArg::Pow2 => CPolicy::PowersOfTwo,
        CPolicyArg::List if a.c_list.is_empty() => return Err(Failure::Usage("--c-policy list needs --c-list".into())),
        CPolicyArg::List => CPolicy::Explicit(a.c_list.clone()),
    };
    let config = BenchConfig {
        n_list: a.n_list,
        c_policy,
        trials: a.trials,
        warmup: a.warmup,
        seed: a.seed,
        direct_max_n: a.direct_max_n,
        timing: !a.counts_only,
    };
    let report = bench::run_benchmark(&config)?;
    let format = match a.format {
        ReportFormatArg::Csv => ReportFormat::Csv,
        ReportFormatArg::Json => ReportFormat::Json,
        ReportFormatArg::Md => ReportFormat::Markdown,
    };
    emit(a.output.as_deref(), bench::render_report(&report, format)?.as_bytes())
}

pub fn verify(a: VerifyArgs) -> CmdResult {
    let x = match (&a.input, a.random) {
        (Some(path), None) => io::read_signal(path, a.format.into())?,
        (None, Some(n)) => bench::random_signal(n, a.seed),
        _ => return Err(Failure::Usage("give --input or --random".into())),
    };
    let plan = a.plan.resolve(Some(x.len()))?;
    let opts = VerifyOptions {
        tolerance: a.tolerance,
        perturb: a.perturb,
    };
    let report = verify_against_oracle_with(&x, &plan, a.mode.into(), a.dir.into(), &opts)?;
    let line = format!(
        "n={} c={} l={} mode={} dir={} max_abs_error={:e} max_rel_error={:e} tolerance={:e} {}\n",
        plan.n(),
        plan.c(),
        plan.l(),
        NormalizationMode::from(a.mode),
        Direction::from(a.dir),
        report.max_abs_error,
        report.max_rel_error,
        report.tolerance,
        if report.pass { "PASS" } else { "FAIL" }
    );
    emit(None, line.as_bytes())?;
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "max relative error {:e} exceeds {:e}",
            report.max_rel_error, report.tolerance
        )))
    }
}

fn parse_tone(spec: &str) -> Result<Tone, Failure> {
    let bad = || Failure::Usage(format!("tone '{spec}' is not bin:amplitude[:phase]"));
    let parts: Vec<&str> = spec.split(':').collect();
    if !(2..=3).contains(&parts.len()) {
        return Err(bad());
    }
    Ok(Tone {
        bin: parts[0].trim().parse().map_err(|_| bad())?,
        amplitude: parts[1].trim().parse().map_err(|_| bad())?,
        phase: match parts.get(2) {
            Some(p) => p.trim().parse().map_err(|_| bad())?,
            None => 0.0,
        },
    })
}

pub fn synthesize(a: SynthArgs) -> CmdResult {
    let tones = a.tones.iter().map(|t| parse_tone(t)).collect::<Result<Vec<_>, _>>()?;
    let x = io::synthesize_tones(a.n, &tones)?;
    emit(a.output.as_deref(), &render_signal(&x, a.format.into()))
}
