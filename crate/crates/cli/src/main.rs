//! `latpath`: exact lattice-path tables, series, and verification from the
//! command line.
//!
//! Exit codes: 0 on success (and verification PASS), 1 on verification FAIL,
//! 2 on usage errors. All output is deterministic for identical flags.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use latpath_core::gfengine;
use latpath_core::rational::parse_rational;
use latpath_core::steps::DEFAULT_ENUM_CAP;
use latpath_core::table::{to_json, to_tsv, Mask};
use latpath_core::verify;
use latpath_core::{QGrid, QSeries, QWeights, Rational, Report, StepSet};

#[derive(Parser)]
#[command(
    name = "latpath",
    version,
    about = "Exact lattice-path enumeration: DP tables, power series, and cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one table family in the classic layout
    Table(TableArgs),
    /// Expand one generating function as an exact series
    Series(SeriesArgs),
    /// Run a verification suite (exit 1 on FAIL)
    Verify(VerifyArgs),
    /// Brute-force enumeration against the tables
    Oracle(OracleArgs),
    /// Exploratory computations that assert nothing
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Ballot numbers (strictly below the diagonal)
    Ballot,
    /// Ballot recurrence extended to the whole quadrant
    BallotExt,
    /// Never touching x = p*y
    Cp,
    /// Its whole-quadrant extension
    CpExt,
    /// Never crossing y = p*x
    Dp,
    /// Slope-2 table extended leftward into the wedge
    D2Ext,
    /// Rise/fall paths with no four consecutive rises
    S,
    /// Weighted walks from height h
    Ph,
    /// Walks extended below the axis
    PhExt,
    /// Never crossing y = p*x + h
    Eph,
    /// Kernel-family coefficients for the walk table
    PhRgf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesKind {
    /// Floor-walk return series f
    F,
    /// Kernel series g
    G,
    /// Compositional inverse of t + ... + t^p
    Gamma,
    /// Catalan number generating function
    Catalan,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    /// Square-root family vs the no-four-rises table
    Ns,
    /// Kernel families vs walk tables (full fixture set)
    Thm51,
    /// Big-integer binomial-sum identity
    Lemma31,
    /// Ballot table vs the Catalan substitution
    Eq204,
    /// Bivariate and kernel expansions vs tables
    Rgf,
    /// Path bijection round trips and image counts
    Bijection,
    /// Reflection law below the axis
    Lemma53,
    /// Signed Catalan numbers on the wedge anti-diagonal
    CatalanLine,
    /// Signed Motzkin numbers on the wedge column -2
    MotzkinLine,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    family: Family,
    /// Largest column m
    #[arg(long, default_value_t = 6)]
    max: i64,
    /// Largest row n (family-specific default)
    #[arg(long, allow_hyphen_values = true)]
    nmax: Option<i64>,
    /// Lowest row n for the extended walk table
    #[arg(long, allow_hyphen_values = true)]
    nmin: Option<i64>,
    /// Boundary slope
    #[arg(long, default_value_t = 2)]
    p: i64,
    /// Starting height / line offset
    #[arg(long, default_value_t = 0)]
    h: i64,
    /// Step set as comma-separated rises, e.g. -1,0,1,2
    #[arg(long, allow_hyphen_values = true)]
    steps: Option<String>,
    /// Weight overrides as i=p/q pairs, e.g. 1=2,0=1/2
    #[arg(long)]
    weights: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(value_enum)]
    kind: SeriesKind,
    /// Truncation order
    #[arg(long, default_value_t = 10)]
    order: usize,
    #[arg(long, allow_hyphen_values = true)]
    steps: Option<String>,
    #[arg(long)]
    weights: Option<String>,
    #[arg(long, default_value_t = 2)]
    p: i64,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: Check,
    /// Range bound (check-specific default)
    #[arg(long)]
    max: Option<i64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(subcommand)]
    command: OracleCommand,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exhaustively enumerate paths and compare against the tables
    Compare(CompareArgs),
}

#[derive(Args)]
struct ExperimentArgs {
    #[command(subcommand)]
    command: ExperimentCommand,
}

#[derive(Subcommand)]
enum ExperimentCommand {
    /// Extend the slope-p table leftward and inspect the y = -x line
    WedgeLine(WedgeLineArgs),
}

#[derive(Args)]
struct WedgeLineArgs {
    #[arg(long, default_value_t = 3)]
    p: i64,
    #[arg(long, default_value_t = 12)]
    max: i64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// Step set for a walk-table comparison; omit to sweep the unit-step
    /// families and the built-in walk fixtures
    #[arg(long, allow_hyphen_values = true)]
    steps: Option<String>,
    #[arg(long)]
    weights: Option<String>,
    #[arg(long, default_value_t = 0)]
    h: i64,
    #[arg(long)]
    max: Option<i64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Table(args) => run_table(args),
        Command::Series(args) => run_series(args),
        Command::Verify(args) => run_verify(args),
        Command::Oracle(args) => match args.command {
            OracleCommand::Compare(c) => run_compare(c),
        },
        Command::Experiment(args) => match args.command {
            ExperimentCommand::WedgeLine(w) => run_wedge_line(w),
        },
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {path:?}: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_steps(text: &Option<String>) -> Result<StepSet, String> {
    let text = text
        .as_ref()
        .ok_or_else(|| "this command needs --steps".to_string())?;
    let elems: Result<Vec<i64>, _> = text.split(',').map(|s| s.trim().parse::<i64>()).collect();
    let elems = elems.map_err(|e| format!("invalid --steps {text:?}: {e}"))?;
    StepSet::new(elems).map_err(|e| e.to_string())
}

fn parse_weights(steps: &StepSet, text: &Option<String>) -> Result<QWeights, String> {
    let mut overrides: Vec<(i64, Rational)> = Vec::new();
    if let Some(text) = text {
        for pair in text.split(',') {
            let (rise, value) = pair
                .split_once('=')
                .ok_or_else(|| format!("invalid --weights entry {pair:?}; expected i=p/q"))?;
            let rise: i64 = rise
                .trim()
                .parse()
                .map_err(|e| format!("invalid rise in {pair:?}: {e}"))?;
            overrides.push((rise, parse_rational(value)?));
        }
    }
    QWeights::with_overrides(steps, &overrides).map_err(|e| e.to_string())
}

fn enum_cap() -> u64 {
    std::env::var("LATPATH_ENUM_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

fn check_range(name: &str, value: i64, lo: i64, hi: i64) -> Result<(), String> {
    if (lo..=hi).contains(&value) {
        Ok(())
    } else {
        Err(format!(
            "--{name} must be between {lo} and {hi}, got {value}"
        ))
    }
}

fn run_table(args: TableArgs) -> Result<i32, String> {
    check_range("max", args.max, 0, 500)?;
    check_range("p", args.p, 1, 20)?;
    check_range("h", args.h, 0, 50)?;
    let max = args.max;
    let (grid, m_lo, m_hi, n_lo, n_hi, mask): (QGrid, i64, i64, i64, i64, Mask) = match args.family
    {
        Family::Ballot => {
            let n_hi = args.nmax.unwrap_or(max);
            (
                latpath_core::dp::ballot(max.max(1)),
                0,
                max,
                0,
                n_hi,
                Mask::All,
            )
        }
        Family::BallotExt => {
            let n_hi = args.nmax.unwrap_or(max);
            (
                latpath_core::dp::ballot_extended(max.max(1).max(n_hi)),
                0,
                max,
                0,
                n_hi,
                Mask::All,
            )
        }
        Family::Cp => {
            let n_hi = args.nmax.unwrap_or(max / args.p);
            (
                latpath_core::dp::c_p(args.p, max),
                0,
                max,
                0,
                n_hi,
                Mask::RightOfLine { p: args.p },
            )
        }
        Family::CpExt => {
            let n_hi = args.nmax.unwrap_or(max);
            (
                latpath_core::dp::c_p_extended(args.p, max.max(1).max(n_hi)),
                0,
                max,
                0,
                n_hi,
                Mask::All,
            )
        }
        Family::Dp => {
            let n_hi = args.nmax.unwrap_or(args.p * max + args.p);
            (
                latpath_core::dp::d_p(args.p, max),
                0,
                max,
                0,
                n_hi,
                Mask::BelowLine { p: args.p, h: 0 },
            )
        }
        Family::D2Ext => {
            let n_hi = args.nmax.unwrap_or(max + 2);
            (
                latpath_core::dp::d2_extended(max, n_hi),
                -n_hi,
                max,
                0,
                n_hi,
                Mask::Wedge,
            )
        }
        Family::S => {
            let n_hi = args.nmax.unwrap_or(max / 2);
            (
                latpath_core::dp::s_count(max),
                0,
                max,
                0,
                n_hi,
                Mask::NonzeroOnly,
            )
        }
        Family::Ph | Family::PhExt | Family::PhRgf => {
            let steps = parse_steps(&args.steps)?;
            let weights = parse_weights(&steps, &args.weights)?;
            let k = steps.max_rise();
            match args.family {
                Family::Ph => {
                    let n_hi = args.nmax.unwrap_or(k * max + args.h);
                    (
                        latpath_core::dp::p_h(&steps, &weights, args.h, max),
                        0,
                        max,
                        0,
                        n_hi,
                        Mask::All,
                    )
                }
                Family::PhExt => {
                    let n_lo = args.nmin.unwrap_or(-k - 1);
                    if n_lo >= 0 {
                        return Err("--nmin must be negative for ph-ext".into());
                    }
                    check_range("nmin", n_lo, -400, -1)?;
                    let n_hi = args.nmax.unwrap_or(k * max + args.h);
                    (
                        latpath_core::dp::p_h_extended(&steps, &weights, args.h, max, n_lo),
                        0,
                        max,
                        n_lo,
                        n_hi,
                        Mask::All,
                    )
                }
                _ => {
                    let n_hi = args.nmax.unwrap_or(max);
                    let order = n_hi.max(k * max + args.h) as usize;
                    let family = gfengine::p_h_rgf(&steps, &weights, args.h, max, order)
                        .map_err(|e| e.to_string())?;
                    let cols = family.columns(max);
                    let mut grid = QGrid::zeros(0, max, 0, n_hi);
                    for (m, col) in cols.iter().enumerate() {
                        for n in 0..=n_hi {
                            grid.set(m as i64, n, col.coeff(n as usize).clone());
                        }
                    }
                    (grid, 0, max, 0, n_hi, Mask::All)
                }
            }
        }
        Family::Eph => {
            let n_hi = args.nmax.unwrap_or(args.p * max + args.h + args.p);
            (
                latpath_core::dp::e_ph(args.p, args.h, max),
                0,
                max,
                0,
                n_hi,
                Mask::BelowLine {
                    p: args.p,
                    h: args.h,
                },
            )
        }
    };
    let text = match args.format {
        Format::Tsv => to_tsv(&grid, m_lo..=m_hi, n_lo..=n_hi, &mask),
        Format::Json => {
            let mut s = to_json(&grid, m_lo..=m_hi, n_lo..=n_hi, &mask);
            s.push('\n');
            s
        }
    };
    emit(&text, &args.out)?;
    Ok(0)
}

fn run_series(args: SeriesArgs) -> Result<i32, String> {
    check_range("order", args.order as i64, 0, 2000)?;
    check_range("p", args.p, 1, 20)?;
    let (series, var): (QSeries, &str) = match args.kind {
        SeriesKind::F => {
            let steps = parse_steps(&args.steps)?;
            let weights = parse_weights(&steps, &args.weights)?;
            (
                gfengine::solve_f(&steps, &weights, args.order).map_err(|e| e.to_string())?,
                "x",
            )
        }
        SeriesKind::G => {
            let steps = parse_steps(&args.steps)?;
            let weights = parse_weights(&steps, &args.weights)?;
            (
                gfengine::solve_g(&steps, &weights, args.order).map_err(|e| e.to_string())?,
                "t",
            )
        }
        SeriesKind::Gamma => (
            gfengine::gamma(args.p, args.order).map_err(|e| e.to_string())?,
            "t",
        ),
        SeriesKind::Catalan => (gfengine::catalan_gf(args.order), "x"),
    };
    let text = match args.format {
        Format::Tsv => format!("{}\n", series.to_text(var)),
        Format::Json => format!("{}\n", series.to_json()),
    };
    emit(&text, &args.out)?;
    Ok(0)
}

fn run_verify(args: VerifyArgs) -> Result<i32, String> {
    if let Some(max) = args.max {
        check_range("max", max, 0, 2000)?;
    }
    let report: Report = match args.check {
        Check::Ns => gfengine::ns_conjecture_check(args.max.unwrap_or(15)),
        Check::Thm51 => verify::verify_thm51(args.max.unwrap_or(10)),
        Check::Lemma31 => gfengine::lemma31_check(args.max.unwrap_or(200)),
        Check::Eq204 => gfengine::eq204_check(args.max.unwrap_or(10)),
        Check::Rgf => verify::verify_rgf(args.max.unwrap_or(10)),
        Check::Bijection => verify::verify_bijections(),
        Check::Lemma53 => verify::verify_lemma53(args.max.unwrap_or(10)),
        Check::CatalanLine => verify::verify_catalan_line(args.max.unwrap_or(30)),
        Check::MotzkinLine => verify::verify_motzkin_line(args.max.unwrap_or(20)),
    };
    emit(&report.render(), &args.out)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn run_wedge_line(args: WedgeLineArgs) -> Result<i32, String> {
    check_range("p", args.p, 1, 20)?;
    check_range("max", args.max, 0, 200)?;
    let report = verify::wedge_line_experiment(args.p, args.max);
    emit(&report.render(), &args.out)?;
    Ok(0)
}

fn run_compare(args: CompareArgs) -> Result<i32, String> {
    let report = match &args.steps {
        Some(_) => {
            let steps = parse_steps(&args.steps)?;
            let weights = parse_weights(&steps, &args.weights)?;
            check_range("h", args.h, 0, 50)?;
            let m_max = args.max.unwrap_or(8);
            check_range("max", m_max, 0, 60)?;
            verify::oracle_compare_steps(&steps, &weights, args.h, m_max as usize, enum_cap())
                .map_err(|e| e.to_string())?
        }
        None => {
            let m_max = args.max.unwrap_or(6);
            check_range("max", m_max, 0, 12)?;
            verify::verify_oracle(m_max, m_max as usize)
        }
    };
    emit(&report.render(), &args.out)?;
    Ok(if report.passed() { 0 } else { 1 })
}
