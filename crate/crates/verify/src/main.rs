use std::path::PathBuf;
use std::process::ExitCode;

use biforms::curves::{branch_form, hyperplane_degree, phi_components, span_dim};
use biforms::transvect::{bitransvectant, transvectant, transvectant_matrix};
use biforms::{BiForm, BinaryForm};
use biforms_verify::{checks, emit, run_all, run_check, Format, Report};
use clap::{ArgGroup, Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "biforms", version, about = "Transvectants of binary forms and biforms, with a verification registry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the check registry and print a report.
    Verify {
        /// Run a single check, e.g. C12.
        #[arg(long)]
        check: Option<String>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "json")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report every runtime as 0 ms.
        #[arg(long)]
        no_timings: bool,
    },
    /// Transvectant of two binary forms, or bi-transvectant of two biforms when --s is given.
    Transvect {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: Option<u32>,
    },
    /// Kernel and rank of `G ↦ T^(r,s)(F, G)` on V_{A,B}.
    Kernel {
        #[arg(long)]
        form: String,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
        /// Source bidegree as A,B.
        #[arg(long, value_parser = parse_pair)]
        source: (u32, u32),
    },
    /// Invariants of the curve of a biform.
    Curve(CurveArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("what").required(true).args(["branch", "span", "degree"])))]
struct CurveArgs {
    #[arg(long)]
    form: String,
    /// Branch form of the projection to the first factor.
    #[arg(long)]
    branch: bool,
    /// Dimension of the linear span of the image curve.
    #[arg(long)]
    span: bool,
    /// Degree of the image curve, via a random hyperplane.
    #[arg(long)]
    degree: bool,
    /// Seed for the random hyperplane used by --degree.
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn parse_pair(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected A,B, got `{s}`"))?;
    let p = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("`{t}`: {e}"));
    Ok((p(a)?, p(b)?))
}

enum Failure {
    Usage(String),
    Checks,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Verify { check, seed, format, out, no_timings } => {
            let mut report = match check {
                Some(id) => Report::new(
                    seed,
                    vec![run_check(&id, seed).map_err(|e| {
                        Failure::Usage(format!("{e}; known checks: {}", checks::check_ids().join(", ")))
                    })?],
                ),
                None => run_all(seed),
            };
            if no_timings {
                report = report.without_timings();
            }
            let text = emit(&report, format);
            match out {
                Some(path) => std::fs::write(&path, text).map_err(|e| usage(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Transvect { lhs, rhs, r, s } => {
            let out = match s {
                Some(s) => {
                    let (f, g) = (BiForm::parse(&lhs).map_err(usage)?, BiForm::parse(&rhs).map_err(usage)?);
                    bitransvectant(&f, &g, r, s).map_err(usage)?.to_string()
                }
                None => {
                    let (p, q) = (BinaryForm::parse(&lhs).map_err(usage)?, BinaryForm::parse(&rhs).map_err(usage)?);
                    transvectant(&p, &q, r).map_err(usage)?.to_string()
                }
            };
            println!("{out}");
            Ok(())
        }
        Command::Kernel { form, r, s, source } => {
            let f = BiForm::parse(&form).map_err(usage)?;
            let m = transvectant_matrix(&f, r, s, source).map_err(usage)?;
            let kernel = m.kernel_basis();
            println!("rank {} of {}", m.rank(), m.rows());
            println!("kernel dimension {}", kernel.dim());
            for v in kernel.basis_vectors() {
                println!("{}", BiForm::from_coefficients(source.0, source.1, &v).map_err(usage)?);
            }
            Ok(())
        }
        Command::Curve(c) => {
            let f = BiForm::parse(&c.form).map_err(usage)?;
            if c.branch {
                let br = branch_form(&f).map_err(usage)?;
                println!("{}", br.form);
                println!("expected degree {}, distinct roots {}", br.expected_degree(), br.root_count());
            } else {
                let cm = phi_components(&f).map_err(usage)?;
                if c.span {
                    println!("{}", span_dim(&cm));
                } else {
                    println!("{}", hyperplane_degree(&cm, c.seed));
                }
            }
            Ok(())
        }
    }
}
