use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use linrel::factor::{self, Level, Side};
use linrel::format::{parse_relation, report_text, suite_text, write_relation};
use linrel::harness::{self, RelationSpec, DEFAULT_COEFF_BOUND};
use linrel::LinearRelation;

/// Exact linear relations and operator factorization.
///
/// Relation files hold `dim_x=<n>` and `dim_y=<m>` followed by one
/// generator per line (n + m space-separated rationals `p` or `p/q`).
/// Exit status: 0 success or solvable, 2 unsolvable or failed check,
/// 1 input error.
#[derive(Parser)]
#[command(name = "linrel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions and canonical bases of dom, ran, ker and mul.
    Info { file: PathBuf },
    /// Decide A = BT (right) or A = TB (left) and build a witness T.
    Solve {
        #[arg(long)]
        side: Side,
        #[arg(long, default_value = "operator")]
        level: Level,
        a: PathBuf,
        b: PathBuf,
        /// Write the witness here when one exists.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check BT = A (right) or TB = A (left) exactly.
    Verify {
        #[arg(long)]
        side: Side,
        a: PathBuf,
        b: PathBuf,
        t: PathBuf,
    },
    /// The product LEFT RIGHT, i.e. RIGHT applied first.
    Compose {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Inverse {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Adjoint {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rewrite a relation file in canonical form.
    Canon {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random relation, optionally with prescribed dimensions of
    /// dom, mul and ker (all three or none).
    Gen {
        #[arg(long)]
        dim_x: usize,
        #[arg(long)]
        dim_y: usize,
        #[arg(long)]
        dom: Option<usize>,
        #[arg(long)]
        mul: Option<usize>,
        #[arg(long)]
        ker: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_COEFF_BOUND)]
        bound: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a property suite, or `all` of them.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 500)]
        cases: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

fn read(path: &Path) -> Result<LinearRelation> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_relation(&text).with_context(|| format!("{}", path.display()))
}

fn emit(r: &LinearRelation, out: Option<&Path>) -> Result<()> {
    let text = write_relation(r);
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn info(file: &Path) -> Result<u8> {
    let a = read(file)?;
    let p = a.profile();
    println!(
        "dom={} ran={} ker={} mul={} operator={}",
        p.dom.dim(),
        p.ran.dim(),
        p.ker.dim(),
        p.mul.dim(),
        yes_no(p.is_operator)
    );
    let selfadjoint = if a.is_square() {
        yes_no(a.is_selfadjoint()?)
    } else {
        "n/a"
    };
    println!(
        "dim_x={} dim_y={} graph={}",
        a.dim_x(),
        a.dim_y(),
        a.graph().dim()
    );
    println!(
        "everywhere_defined={} surjective={} selfadjoint={selfadjoint}",
        yes_no(p.is_everywhere_defined),
        yes_no(p.is_surjective)
    );
    println!("dom: {}", p.dom);
    println!("ran: {}", p.ran);
    println!("ker: {}", p.ker);
    println!("mul: {}", p.mul);
    Ok(0)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Info { file } => info(&file),
        Command::Solve {
            side,
            level,
            a,
            b,
            out,
            json,
        } => {
            let (a, b) = (read(&a)?, read(&b)?);
            let report = factor::solve(side, level, &a, &b)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report_text(&report));
            }
            if let (Some(path), Some(t)) = (out, &report.witness) {
                emit(t, Some(&path))?;
            }
            Ok(if report.solvable && report.verified {
                0
            } else {
                2
            })
        }
        Command::Verify { side, a, b, t } => {
            let ok = factor::verify(&read(&a)?, &read(&b)?, &read(&t)?, side)?;
            println!("verified={}", yes_no(ok));
            Ok(if ok { 0 } else { 2 })
        }
        Command::Compose { left, right, out } => {
            emit(&read(&left)?.compose(&read(&right)?)?, out.as_deref())?;
            Ok(0)
        }
        Command::Inverse { file, out } => {
            emit(&read(&file)?.inverse(), out.as_deref())?;
            Ok(0)
        }
        Command::Adjoint { file, out } => {
            emit(&read(&file)?.adjoint()?, out.as_deref())?;
            Ok(0)
        }
        Command::Canon { file, out } => {
            emit(&read(&file)?, out.as_deref())?;
            Ok(0)
        }
        Command::Gen {
            dim_x,
            dim_y,
            dom,
            mul,
            ker,
            bound,
            seed,
            out,
        } => {
            let mut spec = RelationSpec::new(dim_x, dim_y, seed);
            spec.coeff_bound = bound;
            match (dom, mul, ker) {
                (Some(d), Some(m), Some(k)) => spec = spec.with_target(d, m, k),
                (None, None, None) => {}
                _ => bail!("--dom, --mul and --ker must be given together"),
            }
            emit(&harness::random_relation(&spec)?, out.as_deref())?;
            Ok(0)
        }
        Command::Check {
            suite,
            cases,
            seed,
            json,
        } => {
            let results = harness::run_named(&suite, cases, seed)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&results)?);
            } else {
                for (i, r) in results.iter().enumerate() {
                    if i > 0 {
                        println!();
                    }
                    print!("{}", suite_text(r));
                }
            }
            Ok(if results.iter().all(|r| r.ok()) { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
