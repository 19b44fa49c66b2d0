use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use qkernel::catalog::{self, CatalogResolver, LimitFamily, LimitStatus};
use qkernel::dsl::{format, parse_scalar, parse_with, Style};
use qkernel::presentations;
use qkernel::reps::{self, Parity};
use qkernel::suite::{self, Status};
use qkernel::{check_identity, local_confluence_report, normal_form, NCExpr, Presentation};

#[derive(Parser)]
#[command(name = "qkernel", version, about = "Exact normal forms and identity checks for osp_q(1|2) and friends")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an expression.
    Normalize {
        expr: String,
        /// Builtin presentation name or a presentation file.
        #[arg(long, default_value = "ospq")]
        alg: String,
        #[arg(long)]
        latex: bool,
    },
    /// Check `LHS == RHS`; exits 1 when the identity fails.
    Check {
        /// Tokens of `LHS == RHS`; quoting the whole identity also works.
        #[arg(required = true, num_args = 1..)]
        identity: Vec<String>,
        #[arg(long, default_value = "ospq")]
        alg: String,
    },
    /// Run the identity suite.
    Suite {
        /// Glob over record ids, e.g. `equitable.*`.
        #[arg(long)]
        filter: Option<String>,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Extra presentation files; each adds a `fixture.<name>.confluence` record.
        #[arg(long = "presentation")]
        presentations: Vec<PathBuf>,
        #[arg(long)]
        quiet: bool,
    },
    /// Matrix of an ospq expression on the (N+1)-dimensional module, as a JSON grid.
    Rep {
        #[arg(long = "N")]
        n: i64,
        #[arg(long = "e", allow_negative_numbers = true)]
        e: i64,
        #[arg(long)]
        matrix: String,
        /// Numeric value for s instead of the formal symbol.
        #[arg(long = "eval-s", allow_negative_numbers = true)]
        eval_s: Option<String>,
    },
    /// q -> 1 limit reports.
    Limits,
    /// Critical pairs of a presentation.
    Confluence {
        #[arg(long, default_value = "ospq")]
        alg: String,
    },
}

/// A builtin name, or else a path to a presentation file.
fn load_alg(alg: &str) -> anyhow::Result<Arc<Presentation>> {
    match presentations::by_name(alg) {
        Ok(p) => Ok(p),
        Err(_) if Path::new(alg).is_file() => {
            let text = std::fs::read_to_string(alg).with_context(|| format!("reading {alg}"))?;
            Ok(Arc::new(presentations::from_text(&text)?))
        }
        Err(e) => Err(e.into()),
    }
}

fn parse_in(text: &str, p: &Arc<Presentation>) -> anyhow::Result<NCExpr> {
    Ok(parse_with(text, &CatalogResolver::new(p.clone()))?)
}

fn split_identity(tokens: &[String]) -> anyhow::Result<(String, String)> {
    let joined = tokens.join(" ");
    let Some((l, r)) = joined.split_once("==") else {
        bail!("expected `LHS == RHS`");
    };
    if r.contains("==") {
        bail!("more than one `==`");
    }
    Ok((l.trim().to_string(), r.trim().to_string()))
}

fn status_text(s: &LimitStatus) -> String {
    match s {
        LimitStatus::Zero => "zero".into(),
        LimitStatus::Finite => "finite".into(),
        LimitStatus::Residual(r) => format!("residual {r}"),
        LimitStatus::PoleAtOne(words) => format!("pole at q=1 in [{}]", words.join(", ")),
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Normalize { expr, alg, latex } => {
            let p = load_alg(&alg)?;
            let nf = normal_form(&parse_in(&expr, &p)?, &p)?;
            let style = if latex { Style::Latex } else { Style::Canonical };
            println!("{}", format(&nf, style));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { identity, alg } => {
            let p = load_alg(&alg)?;
            let (l, r) = split_identity(&identity)?;
            let res = check_identity(&parse_in(&l, &p)?, &parse_in(&r, &p)?, &p)?;
            if res.holds {
                println!("holds");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("fails: residual {}", res.residual);
                Ok(ExitCode::from(1))
            }
        }
        Command::Suite { filter, json, presentations: files, quiet } => {
            let mut extra = Vec::new();
            for f in &files {
                let text = std::fs::read_to_string(f).with_context(|| format!("reading {}", f.display()))?;
                let p = Arc::new(presentations::from_text(&text)?);
                extra.push(suite::confluence_check(format!("fixture.{}.confluence", p.name()), p));
            }
            let report = suite::run_suite_with(filter.as_deref(), extra)?;
            if !quiet {
                for r in &report.records {
                    let tag = match r.status {
                        Status::Pass => "PASS ",
                        Status::Fail => "FAIL ",
                        Status::Error => "ERROR",
                    };
                    if r.residual.is_empty() {
                        println!("{tag} {} ({:.0} ms)", r.id, r.wall_ms);
                    } else {
                        println!("{tag} {} ({:.0} ms): {}", r.id, r.wall_ms, r.residual);
                    }
                }
            }
            let s = report.summary;
            println!("{} records: {} pass, {} fail, {} error", s.total, s.pass, s.fail, s.error);
            if let Some(path) = json {
                report.write_json(&path)?;
            }
            Ok(ExitCode::from(report.exit_code() as u8))
        }
        Command::Rep { n, e, matrix, eval_s } => {
            let parity = Parity::from_sign(e).with_context(|| format!("--e must be 1 or -1, got {e}"))?;
            let x = catalog::parse(&matrix, "ospq")?;
            let m = match eval_s {
                Some(v) => reps::finite_matrix_at(&x, n, parity, &parse_scalar(&v)?)?,
                None => reps::finite_matrix(&x, n, parity)?,
            };
            println!("{}", serde_json::to_string(&m.to_strings())?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Limits => {
            for family in LimitFamily::ALL {
                let report = catalog::q_limit_check(family)?;
                for entry in &report.entries {
                    println!("{} {}: {}", family.name(), entry.label, status_text(&entry.status));
                }
            }
            let verdict = suite::run_suite(Some("limits.*"))?;
            for r in &verdict.records {
                println!("{} {}", if r.status == Status::Pass { "PASS" } else { "FAIL" }, r.id);
            }
            Ok(ExitCode::from(verdict.exit_code() as u8))
        }
        Command::Confluence { alg } => {
            let p = load_alg(&alg)?;
            let pairs = local_confluence_report(&p)?;
            let mut bad = 0;
            for c in &pairs {
                let w = NCExpr::word(p.alphabet(), c.overlap.clone(), qkernel::Scalar::one());
                if c.joinable {
                    println!("{w}: joinable");
                } else {
                    bad += 1;
                    println!("{w}: NOT joinable: {} vs {}", c.branch1, c.branch2);
                }
            }
            println!("{} critical pairs, {} not joinable", pairs.len(), bad);
            Ok(if bad == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
