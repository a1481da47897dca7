//! `qmaps` — command-line driver for the exact dynamics library.
//!
//! Subcommands:
//!
//! * `iterate` — run one of the maps from a rational starting point and print
//!   the orbit records as CSV or JSON.
//! * `verify` — run a seeded exact-identity suite; exits nonzero on the first
//!   failing identity and prints its counterexample.
//! * `classify` — locate a full-space point inside the sheet decomposition
//!   over a plane base point.
//! * `levelset` — enumerate the level-set candidates over a plane base point,
//!   with the Jacobian value and the split/collapse case.
//! * `constants` — print the growth constants attached to a plane base point.
//! * `export-plot` — write orbit data (log10 columns plus exact rationals) to
//!   a CSV file for external plotting.
//!
//! Every rational is printed exactly as `p` or `p/q` and re-parses to the
//! identical value; decimal columns are presentation-only. Exit codes:
//! 0 success, 1 verification failure, 2 parse or arity error, 3 non-positive
//! coordinate, 4 unwritable output path.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use qmaps::closed_form::KConstants;
use qmaps::invariants::{
    integral_jacobian_det, level_set_candidates, periodic_orbit, reflect, sheet_index,
};
use qmaps::orbit::{run_orbit, Orbit};
use qmaps::verify::run_suite;
use qmaps::{Error, MapId, MapKind, Point, Scalar};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command.run() {
        Ok(output) => {
            // A consumer that stops reading (e.g. `... | head`) closes the
            // pipe; treat the truncated write as success, not a panic.
            use std::io::Write;
            let _ = std::io::stdout().write_all(output.as_bytes());
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

#[derive(Parser)]
#[command(name = "qmaps", version, about = "Exact rational dynamics of the two quiver map families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Iterate one of the maps and print the orbit records.
    Iterate(IterateArgs),
    /// Run a seeded exact-identity verification suite.
    Verify(VerifyArgs),
    /// Locate a full-space point inside the sheet decomposition over a base point.
    Classify(ClassifyArgs),
    /// Enumerate the level-set candidates over a plane base point.
    Levelset(LevelsetArgs),
    /// Print the growth constants attached to a plane base point.
    Constants(ConstantsArgs),
    /// Write orbit plot data (log10 columns plus exact rationals) to a CSV file.
    ExportPlot(ExportPlotArgs),
}

impl Command {
    fn run(self) -> Result<String, Failure> {
        match self {
            Command::Iterate(args) => cmd_iterate(args),
            Command::Verify(args) => cmd_verify(args),
            Command::Classify(args) => cmd_classify(args),
            Command::Levelset(args) => cmd_levelset(args),
            Command::Constants(args) => cmd_constants(args),
            Command::ExportPlot(args) => cmd_export_plot(args),
        }
    }
}

/// Map family selector shared by all subcommands.
#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    /// Arity-4 family (plane maps have period 4).
    F0,
    /// Arity-6 family (plane maps have period 6).
    Dp3,
}

impl MapArg {
    fn id(self) -> MapId {
        match self {
            MapArg::F0 => MapId::F0,
            MapArg::Dp3 => MapId::Dp3,
        }
    }
}

/// Which of the three maps of a family to iterate.
#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    /// The full-space map.
    Phi,
    /// The reduced plane map.
    Phihat,
    /// The globally periodic plane map.
    Psi,
}

impl WhichArg {
    fn kind(self) -> MapKind {
        match self {
            WhichArg::Phi => MapKind::Full,
            WhichArg::Phihat => MapKind::Reduced,
            WhichArg::Psi => MapKind::Periodic,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

/// Verification suite selector; mirrors the library's suite names.
#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Periodicity,
    Conjugacy,
    Closedform,
    Integrals,
    Varieties,
    Symplectic,
    All,
}

impl SuiteArg {
    fn suite(self) -> qmaps::verify::Suite {
        use qmaps::verify::Suite;
        match self {
            SuiteArg::Periodicity => Suite::Periodicity,
            SuiteArg::Conjugacy => Suite::Conjugacy,
            SuiteArg::Closedform => Suite::ClosedForm,
            SuiteArg::Integrals => Suite::Integrals,
            SuiteArg::Varieties => Suite::Varieties,
            SuiteArg::Symplectic => Suite::Symplectic,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Args)]
struct IterateArgs {
    /// Map family.
    #[arg(long, value_enum, default_value_t = MapArg::F0)]
    map: MapArg,
    /// Which map to iterate.
    #[arg(long, value_enum, default_value_t = WhichArg::Phi)]
    which: WhichArg,
    /// Starting point as comma-separated rationals, e.g. `1,1,1,2` or `2,3`.
    #[arg(long)]
    point: String,
    /// Number of steps to take (0 prints only the starting point).
    #[arg(long)]
    steps: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity suite to run.
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// RNG seed; the same seed and flags reproduce the run byte for byte.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of sampled points per identity (at least 1).
    #[arg(long, default_value_t = 1000)]
    samples: usize,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Map family.
    #[arg(long, value_enum, default_value_t = MapArg::F0)]
    map: MapArg,
    /// Full-space point to classify (4 coordinates for f0, 6 for dp3).
    #[arg(long)]
    point: String,
    /// Plane base point of the decomposition, as `a,b`.
    #[arg(long = "P")]
    base: String,
}

#[derive(Args)]
struct LevelsetArgs {
    /// Map family.
    #[arg(long, value_enum, default_value_t = MapArg::F0)]
    map: MapArg,
    /// Plane base point, as `a,b`.
    #[arg(long = "P")]
    base: String,
}

#[derive(Args)]
struct ConstantsArgs {
    /// Map family.
    #[arg(long, value_enum, default_value_t = MapArg::F0)]
    map: MapArg,
    /// Plane base point, as `a,b`.
    #[arg(long = "P")]
    base: String,
}

#[derive(Args)]
struct ExportPlotArgs {
    /// Map family.
    #[arg(long, value_enum, default_value_t = MapArg::F0)]
    map: MapArg,
    /// Starting point for the full-space map.
    #[arg(long)]
    point: String,
    /// Number of steps to take.
    #[arg(long)]
    steps: usize,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
}

/// A command failure carrying its process exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: String) -> Self {
        Failure { code, message }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NonPositive { .. } => 3,
            Error::ParseScalar(_) | Error::ZeroDenominator | Error::ArityMismatch { .. } => 2,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

/// Parses a comma-separated point, naming the offending coordinate on error.
/// Exit code 2 for malformed input or wrong arity, 3 for a non-positive value.
fn parse_point(raw: &str, expected: usize) -> Result<Point, Failure> {
    let tokens: Vec<&str> = raw.split(',').map(str::trim).collect();
    if tokens.len() != expected {
        return Err(Failure::new(
            2,
            format!(
                "expected {expected} comma-separated coordinates, got {}",
                tokens.len()
            ),
        ));
    }
    let mut coords = Vec::with_capacity(expected);
    for (i, token) in tokens.iter().enumerate() {
        let value: Scalar = token.parse().map_err(|e: Error| {
            Failure::new(2, format!("coordinate {} (`{token}`) does not parse: {e}", i + 1))
        })?;
        if !value.is_positive() {
            return Err(Failure::new(
                3,
                format!("coordinate {} (`{token}`) must be positive", i + 1),
            ));
        }
        coords.push(value);
    }
    Ok(Point::new(coords).expect("coordinates validated positive"))
}

fn cmd_iterate(args: IterateArgs) -> Result<String, Failure> {
    let id = args.map.id();
    let kind = args.which.kind();
    let x0 = parse_point(&args.point, kind.arity(id))?;
    let orbit = run_orbit(id, kind, &x0, args.steps)?;
    Ok(match args.format {
        FormatArg::Csv => orbit_csv(&orbit),
        FormatArg::Json => format!("{}\n", orbit_json(&orbit)),
    })
}

fn cmd_verify(args: VerifyArgs) -> Result<String, Failure> {
    if args.samples == 0 {
        return Err(Failure::new(2, "--samples must be at least 1".into()));
    }
    let report = run_suite(args.suite.suite(), args.seed, args.samples);
    let mut out = String::new();
    for check in &report.checks {
        let _ = writeln!(out, "{check}");
    }
    if report.all_passed() {
        let _ = writeln!(
            out,
            "ok: {} identities verified across {} checks",
            report.total_passed(),
            report.checks.len()
        );
        Ok(out)
    } else {
        // The per-check lines, including the first counterexample, still
        // belong on stdout before the failing exit.
        use std::io::Write;
        let _ = std::io::stdout().write_all(out.as_bytes());
        Err(Failure::new(
            1,
            format!("{} identities failed", report.total_failed()),
        ))
    }
}

fn cmd_classify(args: ClassifyArgs) -> Result<String, Failure> {
    let id = args.map.id();
    let x = parse_point(&args.point, id.arity())?;
    let base = parse_point(&args.base, 2)?;
    Ok(match sheet_index(id, &x, &base) {
        Some(k) => format!("sheet {k} of {} over {base}\n", id.period()),
        None => format!("not in the sheet decomposition over {base}\n"),
    })
}

fn cmd_levelset(args: LevelsetArgs) -> Result<String, Failure> {
    let id = args.map.id();
    let base = parse_point(&args.base, 2)?;
    let mirrored_base = reflect(&base);
    let det = integral_jacobian_det(id, &base);
    let forward = periodic_orbit(id, &base);
    let mirrored = periodic_orbit(id, &mirrored_base);
    let candidates = level_set_candidates(id, &base[0], &base[1]);
    let mut out = String::new();
    let _ = writeln!(out, "map {id}");
    let _ = writeln!(out, "base {base}");
    let _ = writeln!(out, "jacobian {det}");
    if det.is_zero() {
        let _ = writeln!(out, "case i: the mirrored orbit coincides with the base orbit");
    } else {
        let _ = writeln!(out, "case ii: the level set splits into two disjoint periodic orbits");
    }
    let _ = writeln!(out, "orbit of {base}: {}", join_points(&forward));
    let _ = writeln!(out, "orbit of {mirrored_base}: {}", join_points(&mirrored));
    let _ = writeln!(out, "distinct points ({}):", candidates.len());
    for p in &candidates {
        let _ = writeln!(out, "{p}");
    }
    Ok(out)
}

fn cmd_constants(args: ConstantsArgs) -> Result<String, Failure> {
    let id = args.map.id();
    let base = parse_point(&args.base, 2)?;
    let k = KConstants::new(id, &base[0], &base[1]);
    let mut out = String::new();
    let _ = writeln!(out, "map {id}");
    let _ = writeln!(out, "base {base}");
    let _ = writeln!(out, "k1 = {}", k.k1);
    let _ = writeln!(out, "k2 = {}", k.k2);
    let status = if k.inequalities_hold() { "yes" } else { "no" };
    let _ = writeln!(out, "growth thresholds satisfied: {status}");
    Ok(out)
}

fn cmd_export_plot(args: ExportPlotArgs) -> Result<String, Failure> {
    let id = args.map.id();
    let x0 = parse_point(&args.point, id.arity())?;
    let orbit = run_orbit(id, MapKind::Full, &x0, args.steps)?;
    let names = coord_names(id.arity());
    let mut out = String::new();
    let log_cols: Vec<String> = names.iter().map(|n| format!("log10_{n}")).collect();
    let _ = writeln!(out, "n,{},sheet,{}", log_cols.join(","), names.join(","));
    for rec in &orbit.records {
        let logs: Vec<String> = rec
            .point
            .coords()
            .iter()
            .map(|c| format!("{:.12}", log10_scalar(c)))
            .collect();
        let exact: Vec<String> = rec.point.coords().iter().map(ToString::to_string).collect();
        let sheet = rec.sheet.map(|s| s.to_string()).unwrap_or_default();
        let _ = writeln!(out, "{},{},{},{}", rec.n, logs.join(","), sheet, exact.join(","));
    }
    std::fs::write(&args.out, out)
        .map_err(|e| Failure::new(4, format!("cannot write {}: {e}", args.out.display())))?;
    Ok(format!(
        "wrote {} rows to {}\n",
        orbit.records.len(),
        args.out.display()
    ))
}

/// Column names for orbit output: `x,y` on the plane, `x1..xN` in full space.
fn coord_names(arity: usize) -> Vec<String> {
    if arity == 2 {
        vec!["x".to_string(), "y".to_string()]
    } else {
        (1..=arity).map(|i| format!("x{i}")).collect()
    }
}

fn orbit_csv(orbit: &Orbit) -> String {
    let arity = orbit.records[0].point.arity();
    let names = coord_names(arity);
    let mut out = String::new();
    let _ = writeln!(out, "n,{},sheet,j1,j2", names.join(","));
    for rec in &orbit.records {
        let coords: Vec<String> = rec.point.coords().iter().map(ToString::to_string).collect();
        let sheet = rec.sheet.map(|s| s.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            rec.n,
            coords.join(","),
            sheet,
            rec.integrals.j1,
            rec.integrals.j2
        );
    }
    out
}

fn orbit_json(orbit: &Orbit) -> String {
    let records: Vec<serde_json::Value> = orbit
        .records
        .iter()
        .map(|rec| {
            serde_json::json!({
                "n": rec.n,
                "point": rec.point.coords().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "sheet": rec.sheet,
                "j1": rec.integrals.j1.to_string(),
                "j2": rec.integrals.j2.to_string(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&records).expect("orbit records serialize")
}

fn join_points(points: &[Point]) -> String {
    points
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// Base-10 logarithm of a positive rational, for the decimal plot columns.
fn log10_scalar(s: &Scalar) -> f64 {
    log10_bigint(s.numer()) - log10_bigint(s.denom())
}

/// log10 of a positive big integer via its top 53 bits. Orbit coordinates
/// reach thousands of bits, far beyond f64 range, but the top mantissa plus
/// a bit-shift correction is exact to well past the 12 printed digits.
fn log10_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    let mantissa = u64::from(f64::MANTISSA_DIGITS);
    if bits <= mantissa {
        n.to_f64().expect("small integer fits in f64").log10()
    } else {
        let shift = bits - mantissa;
        let top = (n >> shift).to_f64().expect("top bits fit in f64");
        top.log10() + shift as f64 * std::f64::consts::LOG10_2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_point_accepts_rationals_and_whitespace() {
        let p = parse_point("1, 2/3 ,5,6/4", 4).unwrap();
        assert_eq!(p.to_string(), "(1, 2/3, 5, 3/2)");
    }

    #[test]
    fn parse_point_names_the_offending_coordinate() {
        let err = parse_point("1,x,1,1", 4).unwrap_err();
        assert_eq!(err.code, 2);
        assert!(err.message.contains("coordinate 2"), "{}", err.message);

        let err = parse_point("1,0,1,1", 4).unwrap_err();
        assert_eq!(err.code, 3);
        assert!(err.message.contains("coordinate 2"), "{}", err.message);

        let err = parse_point("1,1,1", 4).unwrap_err();
        assert_eq!(err.code, 2);
        assert!(err.message.contains("expected 4"), "{}", err.message);
    }

    #[test]
    fn log10_matches_known_powers() {
        let small: Scalar = "1000".parse().unwrap();
        assert!((log10_scalar(&small) - 3.0).abs() < 1e-12);

        // 2^200 exercises the top-bits path: log10(2^200) = 200 log10(2).
        let big = Scalar::from_int(2).pow(200);
        let expected = 200.0 * std::f64::consts::LOG10_2;
        assert!((log10_scalar(&big) - expected).abs() < 1e-9);

        let tiny = Scalar::from_int(2).pow(-200);
        assert!((log10_scalar(&tiny) + expected).abs() < 1e-9);
    }

    #[test]
    fn coordinate_headers_follow_the_arity() {
        assert_eq!(coord_names(2).join(","), "x,y");
        assert_eq!(coord_names(4).join(","), "x1,x2,x3,x4");
    }
}
