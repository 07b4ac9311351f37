//! Command-line front end: `hermite`, `expand`, `verify` and `oracle`.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::hermite::{hermite, HermiteKind};
use crate::identities::{self, Identity, IdentityError, LacunaryFactors};
use crate::oracle::{self, ComponentClass, OracleError};
use crate::rational;
use crate::report::IdentityReport;
use crate::series::{SeriesVars, TruncSeries};
use crate::UPolynomial;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "hermgf", version, about = "Exact checks of lacunary Hermite generating functions")]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print h_n(u) (kind h) or H_n(u) (kind H).
    Hermite {
        #[arg(long, default_value = "h")]
        kind: HermiteKind,
        #[arg(long)]
        n: u32,
    },
    /// Print the coefficients of a named series.
    Expand {
        series: NamedSeries,
        #[arg(long, default_value_t = 12)]
        order: u32,
    },
    /// Compare both sides of an identity (or `all`) up to the given order.
    Verify {
        identity: String,
        #[arg(long, default_value_t = 12)]
        order: u32,
    },
    /// Run a brute-force enumeration.
    Oracle {
        target: OracleTarget,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleTarget {
    Matchings,
    Wtrees,
    Graphs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NamedSeries {
    /// exp(uz + z^2/2)
    HermiteEgf,
    /// w = u C(3uz)
    W,
    /// T = (w-u)(3u-w)/6
    Tree,
    /// exp(T)
    ExpTree,
    /// (1-6wz)^{-1/2}
    OneCycle,
    /// multi-cycle sum
    MultiCycle,
    /// sum h_{3n} z^n / n!
    LhsMain,
    /// three-factor product
    RhsMain,
    /// sum h_{2n} z^n / n!
    LhsDoetsch,
    /// (1-2z)^{-1/2} exp(u^2 z/(1-2z))
    RhsDoetsch,
}

impl NamedSeries {
    /// Parses the kebab-case name used on the command line.
    pub fn from_name(name: &str) -> Option<Self> {
        <Self as ValueEnum>::from_str(name, false).ok()
    }

    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }

    pub fn build(self, order: u32) -> Result<TruncSeries, IdentityError> {
        let factors = || LacunaryFactors::new(order);
        Ok(match self {
            NamedSeries::HermiteEgf => {
                let z = TruncSeries::z(SeriesVars::Z, order);
                (z.mul_poly(&UPolynomial::u()) + (&z * &z).scale(&rational::ratio(1, 2))).exp()?
            }
            NamedSeries::W => identities::w_series(order)?,
            NamedSeries::Tree => factors()?.tree_gf()?,
            NamedSeries::ExpTree => factors()?.tree_gf()?.exp()?,
            NamedSeries::OneCycle => factors()?.one_cycle_factor()?,
            NamedSeries::MultiCycle => factors()?.multi_cycle_factor()?,
            NamedSeries::LhsMain => identities::lhs_lacunary(3, order)?,
            NamedSeries::RhsMain => factors()?.rhs_main()?,
            NamedSeries::LhsDoetsch => identities::lhs_lacunary(2, order)?,
            NamedSeries::RhsDoetsch => identities::rhs_doetsch(order)?,
        })
    }
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self::with_code(EXIT_OK, stdout)
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl ToString) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message.to_string(),
        }
    }

    fn failure(message: impl ToString) -> Self {
        Self {
            code: EXIT_MISMATCH,
            stdout: String::new(),
            stderr: message.to_string(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome::usage(text)
            }
        }
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    let format = config.format;
    match &config.command {
        Command::Hermite { kind, n } => cmd_hermite(*kind, *n, format),
        Command::Expand { series, order } => cmd_expand(*series, *order, format),
        Command::Verify { identity, order } => cmd_verify(identity, *order, format),
        Command::Oracle { target, n } => cmd_oracle(*target, *n, format),
    }
}

fn line(s: String) -> String {
    s + "\n"
}

pub fn cmd_hermite(kind: HermiteKind, n: u32, format: Format) -> Outcome {
    let p = hermite(kind, n);
    Outcome::ok(line(match format {
        Format::Text => p.to_string(),
        Format::Json => json!({"kind": kind.to_string(), "n": n, "polynomial": p.to_string()}).to_string(),
    }))
}

pub fn cmd_expand(series: NamedSeries, order: u32, format: Format) -> Outcome {
    let s = match series.build(order) {
        Ok(s) => s,
        Err(e) => return Outcome::failure(e),
    };
    let coeffs: Vec<String> = (0..=order).map(|n| s.coeff_z(n).to_string()).collect();
    Outcome::ok(match format {
        Format::Text => coeffs
            .iter()
            .enumerate()
            .fold(String::new(), |mut out, (n, c)| {
                let _ = writeln!(out, "z^{n}: {c}");
                out
            }),
        Format::Json => line(json!({"series": series.name(), "order": order, "coefficients": coeffs}).to_string()),
    })
}

pub fn cmd_verify(identity: &str, order: u32, format: Format) -> Outcome {
    let targets: Vec<Identity> = if identity == "all" {
        Identity::ALL.to_vec()
    } else {
        match identity.parse() {
            Ok(id) => vec![id],
            Err(e) => {
                let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
                return Outcome::usage(format!("{e}; expected `all` or one of: {}", names.join(", ")));
            }
        }
    };
    let mut reports: Vec<IdentityReport> = Vec::with_capacity(targets.len());
    for id in targets {
        match identities::verify(id, order) {
            Ok(r) => reports.push(r),
            Err(IdentityError::RouteDisagreement(r)) => reports.push(*r),
            Err(e) => return Outcome::failure(format!("{id}: {e}")),
        }
    }
    let code = if reports.iter().all(IdentityReport::is_verified) {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    };
    let stdout = match format {
        Format::Text => reports.iter().map(|r| line(r.to_string())).collect(),
        Format::Json if reports.len() == 1 => line(reports[0].to_json()),
        Format::Json => line(serde_json::to_string(&reports).expect("reports serialize")),
    };
    Outcome::with_code(code, stdout)
}

pub fn cmd_oracle(target: OracleTarget, n: u32, format: Format) -> Outcome {
    let result = match target {
        OracleTarget::Matchings => oracle::enumerate_matchings(n).map(|p| match format {
            Format::Text => (EXIT_OK, line(p.to_string())),
            Format::Json => (
                EXIT_OK,
                line(json!({"target": "matchings", "n": n, "census": p.to_string()}).to_string()),
            ),
        }),
        OracleTarget::Wtrees => oracle::w_tree_census(n).map(|c| match format {
            Format::Text => (EXIT_OK, line(c.distinct.to_string())),
            Format::Json => (
                EXIT_OK,
                line(json!({"target": "wtrees", "n": n, "count": c.distinct, "drawings": c.drawings}).to_string()),
            ),
        }),
        OracleTarget::Graphs => graph_output(n, format),
    };
    match result {
        Ok((code, stdout)) => Outcome::with_code(code, stdout),
        Err(e @ OracleError::BoundExceeded { .. }) => Outcome::usage(e),
        Err(e) => Outcome::failure(e),
    }
}

fn graph_output(n: u32, format: Format) -> Result<(i32, String), OracleError> {
    let census = oracle::enumerate_marked_graphs(n)?;
    let check = oracle::factor_census_check(n)?;
    let classes = [
        ("acyclic-only", census.only(ComponentClass::Acyclic)),
        ("unicyclic-only", census.only(ComponentClass::Unicyclic)),
        ("multicyclic-only", census.only(ComponentClass::Multicyclic)),
        ("total", census.total()),
    ];
    let code = if check.passed() { EXIT_OK } else { EXIT_MISMATCH };
    let verdict = if check.passed() { "pass" } else { "fail" };
    let out = match format {
        Format::Text => {
            let mut out = String::new();
            for (profile, w) in &census.by_profile {
                let _ = writeln!(out, "{profile}: {w}");
            }
            for (name, w) in &classes {
                let _ = writeln!(out, "{name}: {w}");
            }
            for c in check.checks.iter().filter(|c| !c.pass) {
                let _ = writeln!(out, "mismatch n={} {:?}: census {} vs series {}", c.n, c.slice, c.census, c.series);
            }
            let _ = writeln!(out, "check: {verdict}");
            out
        }
        Format::Json => {
            let by_profile: serde_json::Map<String, serde_json::Value> = census
                .by_profile
                .iter()
                .map(|(p, w)| (p.to_string(), json!(w.to_string())))
                .collect();
            let class_map: serde_json::Map<String, serde_json::Value> = classes
                .iter()
                .map(|(k, w)| (k.to_string(), json!(w.to_string())))
                .collect();
            line(
                json!({
                    "target": "graphs",
                    "n": n,
                    "census": by_profile,
                    "classes": class_map,
                    "check": {"status": verdict, "checks": check.checks},
                })
                .to_string(),
            )
        }
    };
    Ok((code, out))
}
