use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use prelie_operads::commands;
use prelie_operads::instances::Instance;
use prelie_operads::trees::TreeFamily;
use prelie_operads::verify::{Bounds, Law, VerificationReport};

#[derive(Parser)]
#[command(version, about = "Pre-Lie structures on operads, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List trees of one family and size
    Enumerate {
        #[arg(long)]
        family: TreeFamily,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value = "g")]
        generator: String,
    },
    /// Evaluate an expression in an instance
    Eval {
        #[arg(long)]
        operad: Instance,
        expression: String,
    },
    /// Check one law exhaustively within bounds
    Check {
        #[arg(long)]
        operad: Instance,
        #[arg(long)]
        law: Law,
        #[command(flatten)]
        bounds: BoundFlags,
        #[arg(long)]
        json: bool,
    },
    /// Non-freeness witnesses: vanishing operadic insertion elements
    Theorem {
        /// Defaults to every operad instance
        #[arg(long)]
        operad: Vec<Instance>,
        #[arg(long)]
        json: bool,
    },
    /// Run every applicable law and the theorem witnesses
    Report {
        #[arg(long)]
        operad: Vec<Instance>,
        #[command(flatten)]
        bounds: BoundFlags,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct BoundFlags {
    #[arg(long)]
    max_arity: Option<usize>,
    /// Same as --max-arity for planar instances
    #[arg(long, conflicts_with = "max_arity")]
    max_leaves: Option<usize>,
    #[arg(long)]
    max_vertices: Option<usize>,
    #[arg(long)]
    max_args: Option<usize>,
}

impl BoundFlags {
    fn is_set(&self) -> bool {
        self.max_arity.is_some()
            || self.max_leaves.is_some()
            || self.max_vertices.is_some()
            || self.max_args.is_some()
    }

    fn apply(&self, mut base: Bounds) -> Bounds {
        if let Some(a) = self.max_arity.or(self.max_leaves) {
            base.max_arity = a;
        }
        if let Some(v) = self.max_vertices {
            base.max_vertices = v;
        }
        if let Some(k) = self.max_args {
            base.max_args = k;
        }
        base
    }
}

fn instances_or_all(given: Vec<Instance>) -> Vec<Instance> {
    if given.is_empty() {
        Instance::all_operads()
    } else {
        given
    }
}

fn emit(reports: &[VerificationReport], json: bool) -> ExitCode {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(reports).expect("reports serialize")
        );
    } else {
        for r in reports {
            print!("{}", r.to_text());
        }
    }
    if reports.iter().all(VerificationReport::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> prelie_operads::Result<ExitCode> {
    Ok(match cli.command {
        Command::Enumerate {
            family,
            size,
            count_only,
            generator,
        } => {
            print!(
                "{}",
                commands::enumerate(family, size, count_only, &generator)?
            );
            ExitCode::SUCCESS
        }
        Command::Eval { operad, expression } => {
            println!("{}", commands::eval(&operad, &expression)?);
            ExitCode::SUCCESS
        }
        Command::Check {
            operad,
            law,
            bounds,
            json,
        } => {
            let bounds = bounds.apply(commands::default_bounds(&operad));
            let report = commands::check(&operad, law, &bounds)?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
                if report.passed() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            } else {
                emit(&[report], false)
            }
        }
        Command::Theorem { operad, json } => {
            let mut all_pass = true;
            let mut reports = Vec::new();
            for instance in instances_or_all(operad) {
                let report = commands::theorem(&instance)?;
                all_pass &= report.passed();
                reports.push(report);
            }
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                );
            } else {
                for r in &reports {
                    print!("{}", r.to_text());
                }
            }
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Report {
            operad,
            bounds,
            json,
        } => {
            let instances = instances_or_all(operad);
            let explicit = bounds.is_set().then(|| bounds.apply(Bounds::default()));
            emit(&commands::report(&instances, explicit)?, json)
        }
    })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
