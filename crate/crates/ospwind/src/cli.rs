//! Command-line interface: `enumerate`, `hstar`, and `verify`.
//!
//! Exit codes: 0 on success (for `verify`: every instance matched and no
//! check failed), 1 when `verify` finds a mismatch or failed check, 2 on
//! usage errors (with nothing written to stdout).
//!
//! Formats: `table` streams human-readable rows, `csv` streams RFC-4180
//! rows with a header, `json` emits one document per invocation with
//! `schema_version` "1". Big integers (h* coefficients, counts) appear as
//! decimal strings in JSON so values beyond 2^53 survive consumers that
//! read numbers as floats. Timing goes to stderr only, which keeps stdout
//! byte-identical across `--jobs` settings.

use crate::ehrhart::{hstar_slice, HStarVector};
use crate::partitions::{enumerate, grading_histogram, DecoratedOsp, FamilySpec};
use crate::verify::{self, VerificationReport};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

/// Environment variable supplying the default for `verify --jobs`.
pub const JOBS_ENV: &str = "OSPWIND_JOBS";

pub const SCHEMA_VERSION: &str = "1";

/// Parses `argv` and runs the selected subcommand, returning the process
/// exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Hstar(args) => cmd_hstar(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

#[derive(Parser)]
#[command(
    name = "ospwind",
    version,
    about = "Decorated ordered set partitions, winding numbers, and exact Ehrhart h*-vectors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every admissible canonical partition of one family instance
    Enumerate(EnumerateArgs),
    /// Print the winding histogram and/or the Ehrhart h*-vector
    Hstar(HstarArgs),
    /// Compare winding histograms against h*-vectors over a range
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Hypersimplex,
    Simplex,
    Slice,
}

impl FamilyKind {
    fn as_str(&self) -> &'static str {
        match self {
            FamilyKind::Hypersimplex => "hypersimplex",
            FamilyKind::Simplex => "simplex",
            FamilyKind::Slice => "slice",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Winding,
    Ehrhart,
    Both,
}

#[derive(Args)]
struct FamilyArgs {
    /// Polytope family
    #[arg(long, value_enum)]
    family: FamilyKind,
    /// Ones count a (hypersimplex)
    #[arg(long)]
    a: Option<u32>,
    /// Zeros count b (hypersimplex)
    #[arg(long)]
    b: Option<u32>,
    /// Dilation factor / cube side r (simplex, slice)
    #[arg(long)]
    r: Option<u32>,
    /// Coordinate count n (simplex, slice)
    #[arg(long)]
    n: Option<u32>,
    /// Hyperplane sum s (slice)
    #[arg(long)]
    s: Option<u32>,
}

impl FamilyArgs {
    fn forbid(&self, flags: &[(&str, Option<u32>)]) -> Result<(), String> {
        for (flag, value) in flags {
            if value.is_some() {
                return Err(format!(
                    "--{} does not apply to --family {}",
                    flag,
                    self.family.as_str()
                ));
            }
        }
        Ok(())
    }

    fn require(&self, flag: &str, value: Option<u32>) -> Result<u32, String> {
        value.ok_or_else(|| format!("--family {} requires --{flag}", self.family.as_str()))
    }

    /// Resolves the flags into one exact family instance.
    fn to_spec(&self) -> Result<FamilySpec, String> {
        match self.family {
            FamilyKind::Hypersimplex => {
                self.forbid(&[("r", self.r), ("n", self.n), ("s", self.s)])?;
                let ones = self.require("a", self.a)?;
                let zeros = self.require("b", self.b)?;
                FamilySpec::hypersimplex(ones, zeros).map_err(|e| e.to_string())
            }
            FamilyKind::Simplex => {
                self.forbid(&[("a", self.a), ("b", self.b), ("s", self.s)])?;
                let dilation = self.require("r", self.r)?;
                let coords = self.require("n", self.n)?;
                FamilySpec::dilated_simplex(dilation, coords).map_err(|e| e.to_string())
            }
            FamilyKind::Slice => {
                self.forbid(&[("a", self.a), ("b", self.b)])?;
                let side = self.require("r", self.r)?;
                let coords = self.require("n", self.n)?;
                let plane_sum = self.require("s", self.s)?;
                FamilySpec::cube_slice(side, coords, plane_sum).map_err(|e| e.to_string())
            }
        }
    }
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Also print positions, winding vector, level, and winding number
    #[arg(long)]
    with_winding: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct HstarArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// winding (enumeration side), ehrhart (lattice counting), or both
    #[arg(long, value_enum, default_value = "both")]
    method: Method,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Sweep every instance with n up to this bound
    #[arg(long)]
    max_n: Option<u32>,
    /// Sweep every instance with r up to this bound (simplex, slice)
    #[arg(long)]
    max_r: Option<u32>,
    /// Worker threads (default: $OSPWIND_JOBS, else available cores)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

fn io_err(err: std::io::Error) -> String {
    format!("output failed: {err}")
}

fn csv_err(err: csv::Error) -> String {
    format!("output failed: {err}")
}

fn join_u32(values: &[u32]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn coeff_strings(h: &HStarVector) -> Value {
    Value::Array(
        h.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

fn coeff_csv(h: &HStarVector) -> String {
    h.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn family_json(family: &FamilySpec) -> Value {
    match *family {
        FamilySpec::Hypersimplex { ones, zeros } => {
            json!({"kind": "hypersimplex", "a": ones, "b": zeros})
        }
        FamilySpec::DilatedSimplex { dilation, coords } => {
            json!({"kind": "simplex", "r": dilation, "n": coords})
        }
        FamilySpec::CubeSlice {
            side,
            coords,
            plane_sum,
        } => json!({"kind": "slice", "r": side, "n": coords, "s": plane_sum}),
    }
}

fn partition_json(p: &DecoratedOsp, with_winding: bool) -> Value {
    if with_winding {
        let data = p.winding_data();
        json!({
            "partition": p.to_string(),
            "positions": data.positions,
            "winding_vector": data.winding_vector,
            "level": data.level,
            "winding_number": data.winding_number,
        })
    } else {
        json!({ "partition": p.to_string() })
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<i32, String> {
    let family = args.family.to_spec()?;
    let stream = enumerate(&family).map_err(|e| e.to_string())?;
    match args.format {
        Format::Table => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            if args.with_winding {
                writeln!(
                    out,
                    "partition\tpositions\twinding_vector\tlevel\twinding_number"
                )
                .map_err(io_err)?;
                for p in stream {
                    let data = p.winding_data();
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}",
                        p,
                        join_u32(&data.positions),
                        join_u32(&data.winding_vector),
                        data.level,
                        data.winding_number
                    )
                    .map_err(io_err)?;
                }
            } else {
                for p in stream {
                    writeln!(out, "{p}").map_err(io_err)?;
                }
            }
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout().lock());
            if args.with_winding {
                writer
                    .write_record([
                        "partition",
                        "positions",
                        "winding_vector",
                        "level",
                        "winding_number",
                    ])
                    .map_err(csv_err)?;
                for p in stream {
                    let data = p.winding_data();
                    writer
                        .write_record([
                            p.to_string(),
                            join_u32(&data.positions),
                            join_u32(&data.winding_vector),
                            data.level.to_string(),
                            data.winding_number.to_string(),
                        ])
                        .map_err(csv_err)?;
                }
            } else {
                writer.write_record(["partition"]).map_err(csv_err)?;
                for p in stream {
                    writer.write_record([p.to_string()]).map_err(csv_err)?;
                }
            }
            writer.flush().map_err(io_err)?;
        }
        Format::Json => {
            let partitions: Vec<Value> = stream
                .map(|p| partition_json(&p, args.with_winding))
                .collect();
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "enumerate",
                "family": family_json(&family),
                "with_winding": args.with_winding,
                "partitions": partitions,
            });
            println!("{doc}");
        }
    }
    Ok(0)
}

fn cmd_hstar(args: HstarArgs) -> Result<i32, String> {
    let family = args.family.to_spec()?;
    let winding = match args.method {
        Method::Winding | Method::Both => Some(
            grading_histogram(&family)
                .map_err(|e| e.to_string())?
                .trimmed(),
        ),
        Method::Ehrhart => None,
    };
    let ehrhart = match args.method {
        Method::Ehrhart | Method::Both => {
            let (side, plane_sum, coords) = family.as_slice_params();
            Some(
                hstar_slice(side, plane_sum, coords)
                    .map_err(|e| e.to_string())?
                    .trimmed(),
            )
        }
        Method::Winding => None,
    };
    let matched = match (&winding, &ehrhart) {
        (Some(w), Some(e)) => Some(w == e),
        _ => None,
    };
    match args.format {
        Format::Table => {
            println!("family: {family}");
            if let Some(w) = &winding {
                println!("winding: {w}");
            }
            if let Some(e) = &ehrhart {
                println!("ehrhart: {e}");
            }
            if let Some(m) = matched {
                println!("match: {m}");
            }
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout().lock());
            writer.write_record(["method", "value"]).map_err(csv_err)?;
            if let Some(w) = &winding {
                writer
                    .write_record(["winding", &coeff_csv(w)])
                    .map_err(csv_err)?;
            }
            if let Some(e) = &ehrhart {
                writer
                    .write_record(["ehrhart", &coeff_csv(e)])
                    .map_err(csv_err)?;
            }
            if let Some(m) = matched {
                writer
                    .write_record(["match", &m.to_string()])
                    .map_err(csv_err)?;
            }
            writer.flush().map_err(io_err)?;
        }
        Format::Json => {
            let mut doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "hstar",
                "family": family_json(&family),
                "method": match args.method {
                    Method::Winding => "winding",
                    Method::Ehrhart => "ehrhart",
                    Method::Both => "both",
                },
            });
            if let Some(w) = &winding {
                doc["winding"] = coeff_strings(w);
            }
            if let Some(e) = &ehrhart {
                doc["ehrhart"] = coeff_strings(e);
            }
            if let Some(m) = matched {
                doc["match"] = Value::Bool(m);
            }
            println!("{doc}");
        }
    }
    Ok(0)
}

/// Expands the verify flags into the instance list, in canonical order.
fn verify_instances(args: &VerifyArgs) -> Result<Vec<FamilySpec>, String> {
    let f = &args.family;
    match f.family {
        FamilyKind::Hypersimplex => {
            f.forbid(&[("r", f.r), ("n", f.n), ("s", f.s)])?;
            if args.max_r.is_some() {
                return Err("--max-r does not apply to --family hypersimplex".into());
            }
            match (f.a, f.b, args.max_n) {
                (Some(a), Some(b), None) => Ok(vec![
                    FamilySpec::hypersimplex(a, b).map_err(|e| e.to_string())?
                ]),
                (None, None, Some(max_n)) => Ok(verify::hypersimplex_sweep(max_n)),
                _ => {
                    Err("verify --family hypersimplex takes either --a and --b, or --max-n".into())
                }
            }
        }
        FamilyKind::Simplex => {
            f.forbid(&[("a", f.a), ("b", f.b), ("s", f.s)])?;
            match (f.r, f.n, args.max_r, args.max_n) {
                (Some(r), Some(n), None, None) => Ok(vec![
                    FamilySpec::dilated_simplex(r, n).map_err(|e| e.to_string())?
                ]),
                (None, None, Some(max_r), Some(max_n)) => Ok(verify::simplex_sweep(max_r, max_n)),
                _ => Err(
                    "verify --family simplex takes either --r and --n, or --max-r and --max-n"
                        .into(),
                ),
            }
        }
        FamilyKind::Slice => {
            f.forbid(&[("a", f.a), ("b", f.b)])?;
            match (f.r, f.n, f.s, args.max_r, args.max_n) {
                (Some(r), Some(n), Some(s), None, None) => {
                    Ok(vec![
                        FamilySpec::cube_slice(r, n, s).map_err(|e| e.to_string())?
                    ])
                }
                (Some(r), Some(n), None, None, None) => {
                    verify::slice_sweep_at(r, n).map_err(|e| e.to_string())
                }
                (None, None, None, Some(max_r), Some(max_n)) => {
                    Ok(verify::slice_sweep(max_r, max_n))
                }
                _ => Err(
                    "verify --family slice takes --r/--n/--s, or --r/--n for all plane sums, \
                     or --max-r and --max-n"
                        .into(),
                ),
            }
        }
    }
}

fn resolve_jobs(flag: Option<usize>) -> Result<usize, String> {
    if let Some(jobs) = flag {
        return Ok(jobs.max(1));
    }
    if let Some(value) = std::env::var_os(JOBS_ENV) {
        let text = value.to_string_lossy();
        return text
            .parse::<usize>()
            .map(|jobs| jobs.max(1))
            .map_err(|_| format!("{JOBS_ENV} must be a nonnegative integer, got {text:?}"));
    }
    Ok(std::thread::available_parallelism()
        .map(|cores| cores.get())
        .unwrap_or(1))
}

fn checks_summary(report: &VerificationReport) -> String {
    report
        .checks
        .iter()
        .map(|c| format!("{}:{}", c.name, c.status))
        .collect::<Vec<_>>()
        .join(",")
}

fn report_json(report: &VerificationReport) -> Value {
    let mut doc = json!({
        "family": family_json(&report.family),
        "histogram": coeff_strings(&report.histogram),
        "hstar": coeff_strings(&report.hstar),
        "match": report.matches,
        "total_count": report.total_count.to_string(),
        "expected_count": report.expected_count.as_ref().map(|c| c.to_string()),
        "checks": report
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "status": c.status.as_str(),
                    "detail": c.detail,
                })
            })
            .collect::<Vec<_>>(),
    });
    if let Some(classes) = &report.winding_classes {
        doc["winding_classes"] = Value::Array(
            classes
                .iter()
                .map(|c| {
                    json!({
                        "winding_number": c.winding_number,
                        "partitions": c.partitions,
                    })
                })
                .collect(),
        );
    }
    doc
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, String> {
    let instances = verify_instances(&args)?;
    let jobs = resolve_jobs(args.jobs)?;
    let started = Instant::now();
    let reports = verify::sweep(&instances, jobs).map_err(|e| e.to_string())?;
    let all_passed = reports.iter().all(VerificationReport::passed);
    let matched = reports.iter().filter(|r| r.matches).count();
    match args.format {
        Format::Table => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            for report in &reports {
                let expected = report
                    .expected_count
                    .as_ref()
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "-".to_string());
                writeln!(
                    out,
                    "{}\thistogram={}\thstar={}\tmatch={}\tcount={}\texpected={}\tchecks={}",
                    report.family,
                    report.histogram,
                    report.hstar,
                    report.matches,
                    report.total_count,
                    expected,
                    checks_summary(report)
                )
                .map_err(io_err)?;
                if let Some(classes) = &report.winding_classes {
                    for class in classes {
                        writeln!(
                            out,
                            "  winding {}: {}",
                            class.winding_number,
                            class.partitions.join(" ")
                        )
                        .map_err(io_err)?;
                    }
                }
            }
            writeln!(
                out,
                "verified {} instance(s): {} matched, {} mismatched",
                reports.len(),
                matched,
                reports.len() - matched
            )
            .map_err(io_err)?;
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout().lock());
            writer
                .write_record([
                    "family",
                    "histogram",
                    "hstar",
                    "match",
                    "total_count",
                    "expected_count",
                    "checks",
                ])
                .map_err(csv_err)?;
            for report in &reports {
                writer
                    .write_record([
                        report.family.to_string(),
                        coeff_csv(&report.histogram),
                        coeff_csv(&report.hstar),
                        report.matches.to_string(),
                        report.total_count.to_string(),
                        report
                            .expected_count
                            .as_ref()
                            .map(|c| c.to_string())
                            .unwrap_or_default(),
                        checks_summary(report),
                    ])
                    .map_err(csv_err)?;
            }
            writer.flush().map_err(io_err)?;
        }
        Format::Json => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "verify",
                "all_match": all_passed,
                "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            });
            println!("{doc}");
        }
    }
    eprintln!(
        "verified {} instance(s) with {} job(s) in {:?}",
        reports.len(),
        jobs,
        started.elapsed()
    );
    Ok(if all_passed { 0 } else { 1 })
}
