//! The `curvres` command line.
//!
//! Exit codes: 0 on success or PASS, 1 when a verification fails, 2 on invalid input.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use curvres_core::groebner::GroebnerError;
use curvres_core::hilbert::{verify_hilbert, HilbertReport};
use curvres_core::idealgen::{
    ideal_i, verify_colon_lemmas, verify_minimal_generation, verify_phi_vanishing, ColonCheck,
};
use curvres_core::resolution::{
    cm_type, frobenius_formula, gorenstein_duality_check, is_gorenstein, minimal_table,
    periodicity_scan, reg_frobenius_identity, regularity_formula, total_betti, ResolutionError,
    TranslateOutcome, Verdict,
};
use curvres_core::semigroup::{frobenius_bruteforce, gap_list, validate};
use curvres_core::{ArithmeticSequence, RawSequence};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "curvres", version, about = "Resolutions of monomial curves defined by arithmetic sequences")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
struct SeqArgs {
    #[arg(long, allow_negative_numbers = true)]
    m0: i64,
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the derived (a, b) or the violated invariant.
    Validate(SeqArgs),
    /// Print the generators of I_i (default i = n).
    Generators {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Total Betti numbers.
    Betti(SeqArgs),
    /// Graded Betti table of R/I_i (default i = n).
    Resolution {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        i: Option<usize>,
    },
    /// Frobenius number, genus, type, Gorenstein flag, regularity.
    Invariants(SeqArgs),
    /// Run one of the oracle suites.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Compare Betti numbers of the translates m + (j) and m + (j + nd).
    ScanPeriodicity {
        #[arg(long, value_delimiter = ',', required = true)]
        seq: Vec<u64>,
        #[arg(long)]
        jmax: u64,
        #[arg(long, default_value_t = 0)]
        jmin: u64,
    },
    /// Verify every valid sequence in a range.
    Sweep {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        m0_max: u64,
        #[arg(long)]
        d_max: u64,
        #[arg(long, value_enum, default_value_t = Check::Hilbert)]
        check: Check,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    Hilbert {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        bound: Option<u64>,
    },
    Colon(SeqArgs),
    Phi(SeqArgs),
    Mingen(SeqArgs),
    Duality(SeqArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Hilbert,
    Colon,
    All,
}

enum Failure {
    Invalid(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

fn sequence(args: &SeqArgs) -> Result<ArithmeticSequence, Failure> {
    validate(args.m0, args.d, args.n).map_err(|e| Failure::Invalid(e.to_string()))
}

fn groebner(e: GroebnerError) -> Failure {
    Failure::Invalid(format!("Gröbner computation aborted: {e}"))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn exit_for(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> io::Result<()> {
    let text = serde_json::to_string(value).map_err(io::Error::other)?;
    writeln!(out, "{text}")
}

fn header(seq: &ArithmeticSequence) -> serde_json::Value {
    json!({"m0": seq.m0(), "d": seq.d(), "n": seq.n(), "a": seq.a(), "b": seq.b()})
}

fn with_header(seq: &ArithmeticSequence, extra: serde_json::Value) -> serde_json::Value {
    let mut v = header(seq);
    if let (Some(map), serde_json::Value::Object(more)) = (v.as_object_mut(), extra) {
        map.extend(more);
    }
    v
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn execute(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let json = cli.json;
    match &cli.command {
        Command::Validate(args) => {
            let seq = sequence(args)?;
            if json {
                write_json(out, &with_header(&seq, json!({"sequence": seq.terms()})))?;
            } else {
                writeln!(out, "sequence {seq}: a = {}, b = {}", seq.a(), seq.b())?;
            }
            Ok(EXIT_OK)
        }
        Command::Generators { seq: args, i } => {
            let seq = sequence(args)?;
            let i = i.unwrap_or(seq.n());
            let set = ideal_i(&seq, i).map_err(|e| Failure::Invalid(e.to_string()))?;
            if json {
                let gens: Vec<String> = set.generators().iter().map(ToString::to_string).collect();
                write_json(out, &with_header(&seq, json!({"i": i, "generators": gens})))?;
            } else {
                write!(out, "{set}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Betti(args) => {
            let seq = sequence(args)?;
            let betti = total_betti(&seq);
            if json {
                write_json(out, &with_header(&seq, json!({"total": betti})))?;
            } else {
                writeln!(out, "{}", join(&betti))?;
            }
            Ok(EXIT_OK)
        }
        Command::Resolution { seq: args, i } => {
            let seq = sequence(args)?;
            let table = minimal_table(&seq, i.unwrap_or(seq.n()))
                .map_err(|e| Failure::Invalid(e.to_string()))?;
            if json {
                write_json(out, &table)?;
            } else {
                write!(out, "{table}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Invariants(args) => invariants(&sequence(args)?, json, out),
        Command::Verify(v) => verify(v, json, out),
        Command::ScanPeriodicity { seq, jmax, jmin } => scan(seq, *jmin, *jmax, json, out),
        Command::Sweep {
            n_max,
            m0_max,
            d_max,
            check,
        } => sweep(*n_max, *m0_max, *d_max, *check, json, out),
    }
}

fn invariants(seq: &ArithmeticSequence, json: bool, out: &mut dyn Write) -> CmdResult {
    let g_formula = frobenius_formula(seq);
    let g_brute = frobenius_bruteforce(seq);
    let genus = gap_list(seq).len();
    let identity = reg_frobenius_identity(seq);
    let ok = g_formula == g_brute && identity;
    if json {
        write_json(
            out,
            &with_header(
                seq,
                json!({
                    "frobenius_formula": g_formula,
                    "frobenius_bruteforce": g_brute,
                    "genus": genus,
                    "cm_type": cm_type(seq),
                    "gorenstein": is_gorenstein(seq),
                    "regularity": regularity_formula(seq),
                    "reg_frobenius_identity": identity,
                }),
            ),
        )?;
    } else {
        writeln!(out, "frobenius (formula): {g_formula}")?;
        writeln!(out, "frobenius (brute force): {g_brute}")?;
        writeln!(out, "genus: {genus}")?;
        writeln!(out, "cm type: {}", cm_type(seq))?;
        writeln!(out, "gorenstein: {}", is_gorenstein(seq))?;
        writeln!(out, "regularity: {}", regularity_formula(seq))?;
        writeln!(out, "reg - g identity: {}", verdict(identity))?;
    }
    Ok(exit_for(ok))
}

fn colon_label(check: &ColonCheck, seq: &ArithmeticSequence) -> String {
    match check.i {
        None => format!("I2(A) : Delta_{} = I2(A)", seq.b()),
        Some(i) => format!("I_{} : Delta_{i} = (X0..X{})", i - 1, seq.n() - 1),
    }
}

fn verify(cmd: &VerifyCommand, json: bool, out: &mut dyn Write) -> CmdResult {
    match cmd {
        VerifyCommand::Hilbert { seq: args, bound } => {
            let seq = sequence(args)?;
            let report = verify_hilbert(&seq, *bound);
            if json {
                write_json(out, &report)?;
            } else {
                writeln!(out, "{}", hilbert_line(&report))?;
            }
            Ok(exit_for(report.passed()))
        }
        VerifyCommand::Colon(args) => {
            let seq = sequence(args)?;
            let checks = verify_colon_lemmas(&seq).map_err(groebner)?;
            let ok = checks.iter().all(ColonCheck::passed);
            if json {
                let rows: Vec<_> = checks
                    .iter()
                    .map(|c| {
                        json!({
                            "i": c.i,
                            "expected_ideal": c.expected_ideal,
                            "excludes_last_variable": c.excludes_last_variable,
                            "status": verdict(c.passed()),
                        })
                    })
                    .collect();
                write_json(out, &with_header(&seq, json!({"checks": rows, "status": verdict(ok)})))?;
            } else {
                for c in &checks {
                    writeln!(out, "{}: {}", colon_label(c, &seq), verdict(c.passed()))?;
                }
            }
            Ok(exit_for(ok))
        }
        VerifyCommand::Phi(args) => {
            let seq = sequence(args)?;
            let ok = verify_phi_vanishing(&seq, seq.n()).expect("n in range");
            report_simple(&seq, "phi", ok, json, out)
        }
        VerifyCommand::Mingen(args) => {
            let seq = sequence(args)?;
            let ok = verify_minimal_generation(&seq).map_err(groebner)?;
            report_simple(&seq, "mingen", ok, json, out)
        }
        VerifyCommand::Duality(args) => {
            let seq = sequence(args)?;
            let table = minimal_table(&seq, seq.n()).expect("n in range");
            match gorenstein_duality_check(&table) {
                Ok(ok) => report_simple(&seq, "duality", ok, json, out),
                Err(e @ ResolutionError::NotGorenstein { .. }) => {
                    Err(Failure::Invalid(format!("{e} (b = {})", seq.b())))
                }
                Err(e) => Err(Failure::Invalid(e.to_string())),
            }
        }
    }
}

fn report_simple(
    seq: &ArithmeticSequence,
    name: &str,
    ok: bool,
    json: bool,
    out: &mut dyn Write,
) -> CmdResult {
    if json {
        write_json(out, &with_header(seq, json!({"check": name, "status": verdict(ok)})))?;
    } else {
        writeln!(out, "{name} {seq}: {}", verdict(ok))?;
    }
    Ok(exit_for(ok))
}

fn hilbert_line(report: &HilbertReport) -> String {
    let seq = RawSequence::new(report.sequence.clone()).expect("validated sequence");
    match report.first_mismatch {
        None => format!("hilbert {seq} bound={}: PASS", report.bound),
        Some(k) => format!("hilbert {seq} bound={}: FAIL (first mismatch at degree {k})", report.bound),
    }
}

fn outcome_text(o: &TranslateOutcome) -> String {
    match o {
        TranslateOutcome::Betti(b) => join(b),
        TranslateOutcome::Degenerate(_) => "degenerate".to_string(),
    }
}

fn scan(values: &[u64], jmin: u64, jmax: u64, json: bool, out: &mut dyn Write) -> CmdResult {
    let raw = RawSequence::new(values.to_vec()).map_err(|e| Failure::Invalid(e.to_string()))?;
    let report = periodicity_scan(&raw, jmin, jmax).map_err(|e| Failure::Invalid(e.to_string()))?;
    if json {
        write_json(out, &report)?;
    } else {
        writeln!(
            out,
            "sequence {raw}: period {}, threshold {}",
            report.period, report.threshold
        )?;
        for c in &report.comparisons {
            let tag = match c.verdict {
                Verdict::Equal => "equal",
                Verdict::Differ => "DIFFER",
                Verdict::Skipped => "skipped",
            };
            writeln!(
                out,
                "j={}: {} | {}: {tag}",
                c.j,
                outcome_text(&c.at_j),
                outcome_text(&c.at_j_plus_period)
            )?;
        }
        writeln!(
            out,
            "compared {}: {} equal, {} differ, {} skipped; violations past threshold: {}",
            report.comparisons.len(),
            report.count(Verdict::Equal),
            report.count(Verdict::Differ),
            report.count(Verdict::Skipped),
            report.violations().len()
        )?;
    }
    Ok(exit_for(report.holds()))
}

#[derive(Debug, Serialize)]
struct SweepEntry {
    sequence: Vec<u64>,
    checks: Vec<(String, String)>,
    status: &'static str,
}

fn sweep_one(seq: &ArithmeticSequence, check: Check) -> SweepEntry {
    let mut checks: Vec<(String, bool)> = Vec::new();
    if matches!(check, Check::Hilbert | Check::All) {
        checks.push(("hilbert".into(), verify_hilbert(seq, None).passed()));
    }
    if matches!(check, Check::Colon | Check::All) {
        let ok = verify_colon_lemmas(seq)
            .map(|c| c.iter().all(ColonCheck::passed))
            .unwrap_or(false);
        checks.push(("colon".into(), ok));
    }
    if check == Check::All {
        checks.push(("phi".into(), verify_phi_vanishing(seq, seq.n()).unwrap_or(false)));
        checks.push(("mingen".into(), verify_minimal_generation(seq).unwrap_or(false)));
        checks.push((
            "invariants".into(),
            frobenius_formula(seq) == frobenius_bruteforce(seq) && reg_frobenius_identity(seq),
        ));
        if is_gorenstein(seq) {
            let table = minimal_table(seq, seq.n()).expect("n in range");
            checks.push(("duality".into(), gorenstein_duality_check(&table).unwrap_or(false)));
        }
    }
    let ok = checks.iter().all(|(_, ok)| *ok);
    SweepEntry {
        sequence: seq.terms(),
        checks: checks.into_iter().map(|(name, ok)| (name, verdict(ok).to_string())).collect(),
        status: verdict(ok),
    }
}

/// All valid `(m0, d, n)` with `n <= n_max`, `m0 <= m0_max`, `d <= d_max`, ordered by `(n, m0, d)`.
pub fn sweep_range(n_max: usize, m0_max: u64, d_max: u64) -> Vec<ArithmeticSequence> {
    let mut out = Vec::new();
    for n in 1..=n_max as i64 {
        for m0 in 1..=m0_max as i64 {
            for d in 1..=d_max as i64 {
                if let Ok(seq) = validate(m0, d, n) {
                    out.push(seq);
                }
            }
        }
    }
    out
}

fn sweep(n_max: usize, m0_max: u64, d_max: u64, check: Check, json: bool, out: &mut dyn Write) -> CmdResult {
    let entries: Vec<SweepEntry> = sweep_range(n_max, m0_max, d_max)
        .par_iter()
        .map(|seq| sweep_one(seq, check))
        .collect();
    let passed = entries.iter().filter(|e| e.status == "PASS").count();
    let failed = entries.len() - passed;
    if json {
        let results: Vec<_> = entries
            .iter()
            .map(|e| {
                let checks: serde_json::Map<String, serde_json::Value> = e
                    .checks
                    .iter()
                    .map(|(k, v)| (k.clone(), json!(v)))
                    .collect();
                json!({"sequence": e.sequence, "checks": checks, "status": e.status})
            })
            .collect();
        write_json(
            out,
            &json!({"results": results, "total": entries.len(), "passed": passed, "failed": failed}),
        )?;
    } else {
        for e in &entries {
            let checks: Vec<String> = e.checks.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let seq = RawSequence::new(e.sequence.clone()).expect("validated sequence");
            writeln!(out, "{seq} {}", checks.join(" "))?;
        }
        writeln!(out, "sweep: {} sequences, {passed} passed, {failed} failed", entries.len())?;
    }
    Ok(exit_for(failed == 0))
}
