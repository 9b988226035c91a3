use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use symcone::conegeom::{triangulation_check, ConeSpec};
use symcone::coxeter::{enumerate_group, Kind};
use symcone::genfunc::{
    build_closed_form, build_general, expand_graded, RationalSum, TruncatedSeries,
};
use symcone::identities::{
    verify_almost_constant, verify_comaj_distribution, verify_eulerian_identity,
    verify_joint_chow_gessel, verify_lecture_hall_series, verify_lecture_hall_statistics,
    verify_oracle_equivalence, Verification,
};
use symcone::Error;

#[derive(Parser)]
#[command(
    name = "symcone",
    version,
    about = "Lattice-point generating functions of symmetric cones"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generating function as a list of rational terms.
    Genfunc {
        #[command(flatten)]
        cone: ConeArgs,
        /// Use the closed-form builder for the kind instead of the general one.
        #[arg(long)]
        closed_form: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Expand the generating function along a grading.
    Series {
        #[command(flatten)]
        cone: ConeArgs,
        /// Grading vector; defaults to all ones (A) or e_n (B, D).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weights: Option<Vec<i64>>,
        #[arg(long = "N")]
        truncation: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Tabulate descent statistics over the signed permutations of rank m.
    Stats {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct ConeArgs {
    #[arg(long)]
    kind: Kind,
    #[arg(long)]
    n: usize,
    /// Comma-separated inequality weights.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    a: Vec<i64>,
}

impl ConeArgs {
    fn spec(&self) -> symcone::Result<ConeSpec> {
        ConeSpec::new(self.kind, self.n, self.a.clone())
    }
}

#[derive(Args)]
struct OutArgs {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Suite {
    /// General construction, closed form and brute-force enumeration agree.
    Oracle {
        #[command(flatten)]
        cone: ConeArgs,
        #[arg(long = "N")]
        truncation: usize,
    },
    /// Every lattice point is covered by exactly one half-open cone.
    Triangulation {
        #[command(flatten)]
        cone: ConeArgs,
        #[arg(long, default_value_t = 6)]
        bound: u64,
    },
    Eulerian {
        #[arg(long)]
        m: usize,
        #[arg(long = "N")]
        truncation: usize,
    },
    Comaj {
        #[arg(long)]
        m: usize,
    },
    ChowGessel {
        #[arg(long)]
        m: usize,
        #[arg(long = "N")]
        truncation: usize,
    },
    AlmostConstant {
        #[arg(long = "n-minus-1")]
        n_minus_1: usize,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        c: i64,
        #[arg(long = "N")]
        truncation: usize,
    },
    LectureHall {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long)]
        b: i64,
        #[arg(long = "N")]
        truncation: usize,
    },
    /// Lecture hall statistics against des, comaj and cobin on signed permutations.
    #[command(alias = "eqn-ps")]
    LectureHallStats {
        #[arg(long)]
        n: usize,
        #[arg(long = "N")]
        truncation: usize,
    },
}

enum Failure {
    Spec(Error),
    Verification(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Spec(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn terms_json(sum: &RationalSum) -> Value {
    let vec = |v: &[i64]| Value::from(v.iter().map(ToString::to_string).collect::<Vec<_>>());
    Value::from(
        sum.terms()
            .iter()
            .map(|t| {
                json!({
                    "numerator": vec(&t.numerator),
                    "denominators": t.denominators.iter().map(|d| vec(d)).collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
    )
}

fn terms_text(sum: &RationalSum) -> String {
    let mono = |v: &[i64]| {
        format!(
            "z^({})",
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )
    };
    sum.terms()
        .iter()
        .map(|t| {
            let dens: Vec<String> = t
                .denominators
                .iter()
                .map(|d| format!("(1 - {})", mono(d)))
                .collect();
            format!("{} / {}\n", mono(&t.numerator), dens.join(""))
        })
        .collect()
}

fn genfunc(cone: &ConeArgs, closed_form: bool, format: Format) -> Result<String, Failure> {
    let spec = cone.spec()?;
    let sum = if closed_form {
        build_closed_form(&spec)?
    } else {
        build_general(&spec)?
    };
    Ok(match format {
        Format::Text => terms_text(&sum),
        _ => format!("{}\n", terms_json(&sum)),
    })
}

fn series_output(s: &TruncatedSeries, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(s).expect("series serializes")),
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (d, c) in s.coefficients().iter().enumerate() {
                out.push_str(&format!("{d},{c}\n"));
            }
            out
        }
        Format::Text => {
            let parts: Vec<String> = s.coefficients().iter().map(ToString::to_string).collect();
            format!("{}\n", parts.join(" "))
        }
    }
}

fn series(
    cone: &ConeArgs,
    weights: Option<&[i64]>,
    truncation: usize,
    format: Format,
) -> Result<String, Failure> {
    let spec = cone.spec()?;
    let grading = weights.map_or_else(|| spec.default_grading(), <[i64]>::to_vec);
    let s = expand_graded(&build_general(&spec)?, &grading, truncation)?;
    Ok(series_output(&s, format))
}

fn run_suite(suite: &Suite) -> symcone::Result<Vec<Verification>> {
    let v = match suite {
        Suite::Oracle { cone, truncation } => {
            verify_oracle_equivalence(&cone.spec()?, *truncation)?
        }
        Suite::Triangulation { cone, bound } => {
            let spec = cone.spec()?;
            let report = triangulation_check(&spec, *bound)?;
            let first = report
                .violations
                .iter()
                .map(|v| spec.grade(&v.point) as u64)
                .min();
            let detail = match report.violations.first() {
                None => format!("{} points covered exactly once", report.points_checked),
                Some(v) => format!(
                    "{} violations, e.g. {:?} covered {} times",
                    report.violations.len(),
                    v.point,
                    v.cover_count
                ),
            };
            Verification {
                name: format!(
                    "triangulation {} n={} a={:?} bound={bound}",
                    spec.kind(),
                    spec.dim(),
                    spec.weights()
                ),
                passed: report.is_clean(),
                first_mismatch: first,
                detail,
            }
        }
        Suite::Eulerian { m, truncation } => verify_eulerian_identity(*m, *truncation)?,
        Suite::Comaj { m } => verify_comaj_distribution(*m)?,
        Suite::ChowGessel { m, truncation } => verify_joint_chow_gessel(*m, *truncation)?,
        Suite::AlmostConstant {
            n_minus_1,
            b,
            c,
            truncation,
        } => verify_almost_constant(*n_minus_1, *b, *c, *truncation)?,
        Suite::LectureHall {
            n,
            d,
            c,
            b,
            truncation,
        } => verify_lecture_hall_series(*n, *d, *c, *b, *truncation)?,
        Suite::LectureHallStats { n, truncation } => {
            verify_lecture_hall_statistics(*n, *truncation)?
        }
    };
    Ok(vec![v])
}

fn verify(suite: &Suite, format: Format) -> Result<(String, bool), Failure> {
    let results = run_suite(suite)?;
    let passed = results.iter().all(|v| v.passed);
    let mismatch = |v: &Verification| {
        v.first_mismatch
            .map_or_else(|| "-".to_string(), |d| d.to_string())
    };
    let out = match format {
        Format::Json => {
            let rows: Vec<Value> = results
                .iter()
                .map(|v| {
                    json!({
                        "name": v.name,
                        "passed": v.passed,
                        "first_mismatch": v.first_mismatch.map(|d| d.to_string()),
                        "detail": v.detail,
                    })
                })
                .collect();
            format!("{}\n", Value::from(rows))
        }
        Format::Csv => {
            let mut out = String::from("name,result,first_mismatch\n");
            for v in &results {
                out.push_str(&format!(
                    "\"{}\",{},{}\n",
                    v.name,
                    if v.passed { "pass" } else { "fail" },
                    mismatch(v)
                ));
            }
            out
        }
        Format::Text => {
            let width = results
                .iter()
                .map(|v| v.name.len())
                .max()
                .unwrap_or(0)
                .max(5);
            let mut out = format!("{:<width$}  result  first_mismatch\n", "check");
            for v in &results {
                let result = if v.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "{:<width$}  {result:<6}  {}\n",
                    v.name,
                    mismatch(v)
                ));
                if !v.passed {
                    out.push_str(&format!("  {}\n", v.detail));
                }
            }
            out
        }
    };
    Ok((out, passed))
}

fn stats(m: usize, format: Format) -> Result<String, Failure> {
    let mut rows = Vec::new();
    for g in enumerate_group(Kind::B, m)? {
        rows.push([
            g.to_string(),
            g.descent_set().to_string(),
            g.des()?.to_string(),
            g.maj()?.to_string(),
            g.comaj()?.to_string(),
            g.cobin()?.to_string(),
        ]);
    }
    const HEADER: [&str; 6] = ["element", "descents", "des", "maj", "comaj", "cobin"];
    Ok(match format {
        Format::Csv => {
            let mut out = format!("{}\n", HEADER.join(","));
            for r in &rows {
                out.push_str(&format!("{}\n", r.join(",")));
            }
            out
        }
        Format::Json => {
            let objs: Vec<Value> = rows
                .iter()
                .map(|r| {
                    Value::Object(
                        HEADER
                            .iter()
                            .zip(r)
                            .map(|(k, v)| (k.to_string(), Value::from(v.clone())))
                            .collect(),
                    )
                })
                .collect();
            format!("{}\n", Value::from(objs))
        }
        Format::Text => {
            let mut out = format!("{}\n", HEADER.join("\t"));
            for r in &rows {
                out.push_str(&format!("{}\n", r.join("\t")));
            }
            out
        }
    })
}

fn emit(text: &str, out: &OutArgs) -> io::Result<()> {
    match &out.out {
        Some(path) => fs::write(path, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let (text, passed, out) = match &cli.command {
        Command::Genfunc {
            cone,
            closed_form,
            out,
        } => (genfunc(cone, *closed_form, out.format)?, true, out),
        Command::Series {
            cone,
            weights,
            truncation,
            out,
        } => (
            series(cone, weights.as_deref(), *truncation, out.format)?,
            true,
            out,
        ),
        Command::Verify { suite, out } => {
            let (text, passed) = verify(suite, out.format)?;
            (text, passed, out)
        }
        Command::Stats { m, out } => (stats(*m, out.format)?, true, out),
    };
    emit(&text, out)?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification("verification failed".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("symcone: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Spec(e)) => {
            eprintln!("symcone: {e}");
            match e {
                Error::InvalidSpec(_) | Error::DimensionMismatch { .. } | Error::Unbounded(_) => {
                    ExitCode::from(2)
                }
                Error::NonSalient { .. }
                | Error::NonPositiveDenominator { .. }
                | Error::UncancelledLaurentPart { .. } => ExitCode::from(3),
            }
        }
        Err(Failure::Io(e)) => {
            eprintln!("symcone: {e}");
            ExitCode::from(1)
        }
    }
}
