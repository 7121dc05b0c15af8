//! Argument parsing and subcommand dispatch for the `coxmask` binary.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use coxmask_core::oracle::{mobius_oracle, mobius_via_matching};
use coxmask_core::{
    greedy_constant_mask, match_interval, rw_match, CoxeterSystem, Element, ReducedExpression,
    DEFAULT_MAX_LENGTH,
};

use crate::dot::export_dot;
use crate::error::{Error, Result};
use crate::group::GroupSpec;
use crate::render;
use crate::suite::{run_suite, Check, SuiteConfig};
use crate::word::parse_word;

#[derive(Debug, Parser)]
#[command(
    name = "coxmask",
    version,
    about = "Deodhar masks and Bruhat-interval matchings"
)]
pub struct Cli {
    /// Length guard for searches that may not terminate in infinite groups.
    #[arg(long, global = true, env = "COXMASK_MAX_LENGTH", default_value_t = DEFAULT_MAX_LENGTH)]
    pub guard: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct IntervalArgs {
    /// Preset name (A3, B3, H3, I2_5, tA2, ...) or a matrix file.
    #[arg(long, short)]
    pub group: GroupSpec,
    /// Bottom element `y`.
    pub y: String,
    /// Top element `w`; used as the reduced expression when it is reduced.
    pub w: String,
    /// Reduced expression for `w` overriding the default.
    #[arg(long)]
    pub expr: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print whether x ≤ w in Bruhat order.
    Leq {
        #[arg(long, short)]
        group: GroupSpec,
        x: String,
        w: String,
    },
    /// Greedy constant mask for x on a reduced word.
    ConstantMask {
        #[arg(long, short)]
        group: GroupSpec,
        /// Reduced word for w.
        #[arg(long)]
        word: String,
        #[arg(long)]
        x: String,
    },
    /// Relative-mask table of the interval [y, w].
    Interval(IntervalArgs),
    /// Matched pairs of [y, w], rank by rank.
    Match {
        #[command(flatten)]
        args: IntervalArgs,
        /// Write the matched Hasse diagram in DOT syntax.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Möbius value of [y, w] and the survivor-sum cross-check.
    Mobius(IntervalArgs),
    /// Largest-label matching of a finite group, compared with `match`.
    RwMatch(IntervalArgs),
    /// Exhaustive property checks over all pairs up to a length.
    Verify {
        #[arg(long, short)]
        group: GroupSpec,
        #[arg(long)]
        max_length: usize,
        /// Comma-separated subset of masks, relative, matching, mobius,
        /// acyclic, rw, lifting, leq; or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Worker threads; 0 uses every core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn element(sys: &CoxeterSystem, text: &str) -> Result<Element> {
    Ok(sys.product_of_word(&parse_word(text, sys.rank())?)?)
}

fn reduced(sys: &CoxeterSystem, text: &str) -> Result<ReducedExpression> {
    Ok(ReducedExpression::new(sys, parse_word(text, sys.rank())?)?)
}

/// The expression for `w`: `--expr` if given, the typed word if reduced,
/// otherwise the canonical word.
fn expression(sys: &CoxeterSystem, args: &IntervalArgs) -> Result<ReducedExpression> {
    let w = element(sys, &args.w)?;
    if let Some(text) = &args.expr {
        let expr = reduced(sys, text)?;
        if expr.element() != &w {
            return Err(Error::Word {
                text: text.clone(),
                reason: "expression does not evaluate to w".into(),
            });
        }
        return Ok(expr);
    }
    let word = parse_word(&args.w, sys.rank())?;
    match ReducedExpression::new(sys, word) {
        Ok(expr) => Ok(expr),
        Err(_) => Ok(sys.canonical_expression(&w)?),
    }
}

fn setup(guard: usize, args: &IntervalArgs) -> Result<(CoxeterSystem, Element, ReducedExpression)> {
    let sys = args.group.system(guard)?;
    let y = element(&sys, &args.y)?;
    let expr = expression(&sys, args)?;
    Ok((sys, y, expr))
}

/// Runs a parsed command, writing to `out`. Returns the exit status for
/// completed runs: 0, or 1 when a property check fails.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    let guard = cli.guard;
    let io = |source| Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    };
    match cli.command {
        Command::Leq { group, x, w } => {
            let sys = group.system(guard)?;
            let (x, w) = (element(&sys, &x)?, element(&sys, &w)?);
            writeln!(out, "{}", sys.bruhat_leq(&x, &w)?).map_err(io)?;
        }
        Command::ConstantMask { group, word, x } => {
            let sys = group.system(guard)?;
            let expr = reduced(&sys, &word)?;
            let x = element(&sys, &x)?;
            let (mask, trace) = greedy_constant_mask(&sys, &expr, &x)?;
            write!(
                out,
                "{}",
                render::constant_mask(&sys, &expr, &mask, &trace)?
            )
            .map_err(io)?;
        }
        Command::Interval(args) => {
            let (sys, y, expr) = setup(guard, &args)?;
            write!(out, "{}", render::interval_table(&sys, &expr, &y)?).map_err(io)?;
        }
        Command::Match { args, dot } => {
            let (sys, y, expr) = setup(guard, &args)?;
            let m = match_interval(&sys, &y, &expr)?;
            write!(out, "{}", render::matching(&sys, &expr, &y, &m)?).map_err(io)?;
            if let Some(path) = dot {
                let iv = sys.enumerate_interval(&y, expr.element())?;
                export_dot(&sys, &iv, &m, &path)?;
            }
        }
        Command::Mobius(args) => {
            let (sys, y, expr) = setup(guard, &args)?;
            let mu = mobius_oracle(&sys.enumerate_interval(&y, expr.element())?);
            let report = mobius_via_matching(&sys, &y, &expr)?;
            writeln!(out, "mu = {mu}; survivor sum = {}", report.survivor_sum).map_err(io)?;
            let delta = i64::from(&y == expr.element());
            if mu != report.mobius || report.survivor_sum != delta {
                eprintln!("expected mu = {} and survivor sum = {delta}", report.mobius);
                return Ok(1);
            }
        }
        Command::RwMatch(args) => {
            let (sys, y, expr) = setup(guard, &args)?;
            let rw = rw_match(&sys, &y, &expr)?;
            let phi = match_interval(&sys, &y, &expr)?;
            write!(out, "{}", render::matching(&sys, &expr, &y, &rw)?).map_err(io)?;
            let agree = rw.pair_set() == phi.pair_set();
            writeln!(
                out,
                "agrees with match: {}",
                if agree { "yes" } else { "no" }
            )
            .map_err(io)?;
            if !agree {
                return Ok(1);
            }
        }
        Command::Verify {
            group,
            max_length,
            checks,
            jobs,
            json,
        } => {
            if max_length == 0 {
                return Err(Error::Word {
                    text: "0".into(),
                    reason: "--max-length must be at least 1".into(),
                });
            }
            let config = SuiteConfig {
                group,
                max_length,
                checks: Check::parse_list(&checks)?,
                jobs,
            };
            let report = run_suite(&config)?;
            write!(out, "{}", report.to_text()).map_err(io)?;
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&report).expect("report serializes");
                std::fs::write(&path, text + "\n").map_err(|source| Error::Io { path, source })?;
            }
            if !report.is_ok() {
                return Ok(1);
            }
        }
    }
    Ok(0)
}
