use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bihankel::bound::{
    theorem_bound, verify_max_structure, Corollary, CorollaryArgs, MaximizerConfig,
};
use bihankel::error::Error;
use bihankel::harness::{
    falsify, falsify_partitioned, sweep, FalsifyConfig, SamplingMode, SweepSpec,
};
use bihankel::minda::{parse_tau, ClassParams, PhiSpec};

const EXIT_VALIDATION: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "bihankel",
    version,
    about = "Second Hankel determinant bounds for bi-univalent classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct ClassArgs {
    /// Complex tau as `re,im`.
    #[arg(long, default_value = "1.0,0.0", allow_hyphen_values = true)]
    tau: String,
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
    #[arg(long, default_value_t = 0.0)]
    delta: f64,
    /// caratheodory | order_beta:B | janowski:A,B | power:ALPHA | custom:B1,B2,B3
    #[arg(long, default_value = "caratheodory", allow_hyphen_values = true)]
    phi: String,
}

impl ClassArgs {
    fn resolve(&self) -> Result<(ClassParams, PhiSpec), Error> {
        let params = ClassParams::new(parse_tau(&self.tau)?, self.lambda, self.delta)?;
        Ok((params, self.phi.parse()?))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the bound and its P, Q, R breakdown.
    Bound {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a named special case next to the general bound.
    Corollary {
        #[arg(long)]
        id: u8,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        lambda: Option<f64>,
        #[arg(long)]
        delta: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Maximize the majorizing surface on a grid of c and compare with the corner.
    VerifyMax {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 51)]
        c_steps: usize,
        #[arg(long, default_value_t = 101)]
        grid: usize,
        #[arg(long, default_value_t = 3)]
        refine: usize,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte-Carlo search for counterexamples to the bound.
    Falsify {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// relaxed | constrained
        #[arg(long, default_value = "relaxed")]
        mode: String,
        #[arg(long)]
        complex_c1: bool,
        #[arg(long)]
        boundary_bias: bool,
        /// Worker partitions; the report is identical for any value.
        #[arg(long)]
        partitions: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a grid of parameter points from a JSON config.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Output path; `.json` writes JSON, anything else CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Outcome {
    Ok,
    Violation,
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    match cli.command {
        Command::Bound { class, json } => {
            let (params, phi) = class.resolve()?;
            let b = theorem_bound(&params, &phi);
            if json {
                println!("{}", to_json(&b));
            } else {
                println!(
                    "phi   = {phi}  (B1={}, B2={}, B3={})",
                    phi.b1(),
                    phi.b2(),
                    phi.b3()
                );
                println!("P     = {}", b.p);
                println!("Q     = {}", b.q);
                println!("R     = {}", b.r);
                println!("bound = {}", b.bound);
            }
        }
        Command::Corollary {
            id,
            alpha,
            beta,
            lambda,
            delta,
            phi,
            json,
        } => {
            let phi = phi.map(|s| s.parse::<PhiSpec>()).transpose()?;
            let c = Corollary::from_args(
                id,
                CorollaryArgs {
                    alpha,
                    beta,
                    lambda,
                    delta,
                    phi,
                },
            )?;
            let (params, spec_phi) = c.specialization()?;
            let value = c.bound()?;
            let printed = c.printed_bound()?;
            let theorem = theorem_bound(&params, &spec_phi).bound;
            if json {
                let body = serde_json::json!({
                    "corollary": c,
                    "value": value,
                    "printed_value": printed,
                    "theorem": theorem,
                    "abs_diff": (value - theorem).abs(),
                });
                println!("{}", to_json(&body));
            } else {
                println!("corollary {id}: {value}");
                if printed != value {
                    println!("as typeset:   {printed}");
                }
                println!(
                    "theorem:      {theorem}  (tau={}, lambda={}, delta={}, phi={spec_phi})",
                    params.tau(),
                    params.lambda(),
                    params.delta()
                );
            }
        }
        Command::VerifyMax {
            class,
            c_steps,
            grid,
            refine,
            tolerance,
            out,
        } => {
            let (params, phi) = class.resolve()?;
            let cfg = MaximizerConfig {
                c_steps,
                grid,
                refine_rounds: refine,
                tolerance,
            };
            let report = verify_max_structure(&params, &phi, &cfg)?;
            write_or_print(out.as_deref(), &to_json(&report))?;
            if out.is_some() {
                println!(
                    "{} c values, {} flagged",
                    report.records.len(),
                    report.flagged_count
                );
            }
        }
        Command::Falsify {
            class,
            samples,
            seed,
            mode,
            complex_c1,
            boundary_bias,
            partitions,
            out,
        } => {
            let (params, phi) = class.resolve()?;
            let mut cfg = FalsifyConfig::new(params, phi, samples, seed);
            cfg.mode = mode.parse::<SamplingMode>()?;
            cfg.complex_c1 = complex_c1;
            cfg.boundary_bias = boundary_bias;
            let report = match partitions {
                Some(k) => falsify_partitioned(&cfg, k)?,
                None => falsify(&cfg)?,
            };
            write_or_print(out.as_deref(), &to_json(&report))?;
            if out.is_some() {
                println!(
                    "bound {} max observed {} ratio {:.6} violations {}",
                    report.bound, report.max_observed, report.ratio, report.violation_count
                );
            }
            if report.has_violations() {
                return Ok(Outcome::Violation);
            }
        }
        Command::Sweep { config, out } => {
            let text = fs::read_to_string(&config)
                .map_err(|e| Error::Validation(format!("cannot read {}: {e}", config.display())))?;
            let table = sweep(&SweepSpec::from_json(&text)?);
            let as_json = out
                .as_deref()
                .and_then(|p| p.extension())
                .is_some_and(|ext| ext.eq_ignore_ascii_case("json"));
            if as_json {
                write_or_print(out.as_deref(), &table.to_json())?;
            } else {
                let mut buf = Vec::new();
                table.write_csv(&mut buf)?;
                write_or_print(out.as_deref(), String::from_utf8_lossy(&buf).trim_end())?;
            }
            if out.is_some() {
                println!("{} rows, {} errors", table.rows.len(), table.error_count());
            }
            if table.any_violation() {
                return Ok(Outcome::Violation);
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(EXIT_VIOLATION),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VALIDATION)
        }
    }
}
