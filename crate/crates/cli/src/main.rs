use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qtbraid_cli::{
    cmd_braid, cmd_check, cmd_compare_gates, cmd_gen_r, parse_orders, Backend, CheckInputs,
    CliError, CliResult, Form, RunReport, Selector, Settings, CONVENTIONS,
};

#[derive(Parser)]
#[command(
    name = "qtbraid",
    version,
    about = "Braided R-matrices from cyclic group algebras, checked exactly",
    after_help = CONVENTIONS
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Arithmetic for matrix-level checks; algebra-level checks are always exact.
    #[arg(long, value_enum, default_value_t = Backend::Exact, global = true)]
    backend: Backend,
    /// Comparison tolerance, float backend only [default: 1e-9].
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Add wall time per check to the report.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Args)]
struct Group {
    /// Cyclic factor orders, comma separated, e.g. 2,3.
    #[arg(long, required = true)]
    orders: String,
    /// Which universal R to use.
    #[arg(long, value_enum, default_value_t = Form::Product)]
    form: Form,
}

#[derive(Subcommand)]
enum Command {
    /// Build R, its regular-representation image, the flip and R'; optionally write them as JSON.
    GenR {
        #[command(flatten)]
        group: Group,
        /// Directory for r_tensor.json, gamma_r.json, flip.json and r_prime.json.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run exact checks of the Hopf, quasitriangular and braid structure.
    #[command(after_help = CONVENTIONS)]
    Check {
        #[command(flatten)]
        group: Group,
        /// Comma list of: hopf, quasitriangular, ybe, braided-ybe, braid[:N], hexagon, bell-actions, all.
        #[arg(long, default_value = "all")]
        which: String,
        /// Strand count for the braid check when no :N is given [default: 3].
        #[arg(long)]
        strands: Option<usize>,
        /// Use this R tensor (as written by gen-r) instead of building one.
        #[arg(long)]
        r_tensor: Option<PathBuf>,
        /// Use this R' matrix (as written by gen-r) for matrix-level checks.
        #[arg(long)]
        r_matrix: Option<PathBuf>,
    },
    /// Evaluate a braid word and optionally apply it to a state.
    #[command(after_help = CONVENTIONS)]
    Braid {
        #[command(flatten)]
        group: Group,
        #[arg(long)]
        strands: usize,
        /// Comma-separated signed generator indices, e.g. 1,2,-1; empty for the identity.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        /// Named state (phi+, phi-, psi+, psi-, 00, 01, ...) or a state JSON file.
        #[arg(long)]
        state: Option<String>,
        /// File for the word matrix as JSON.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare R' over Z/2 with Kauffman-Lomonaco samples and the Bell matrix.
    CompareGates,
}

fn settings(common: &Common, form: Form) -> CliResult<Settings> {
    if common.tolerance.is_some() && common.backend == Backend::Exact {
        return Err(CliError::Usage("--tolerance applies to the float backend only".into()));
    }
    let tolerance = common.tolerance.unwrap_or(qtbraid::scalar::FLOAT_TOLERANCE);
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(CliError::Usage("--tolerance must be a positive number".into()));
    }
    Ok(Settings {
        backend: common.backend,
        tolerance,
        form,
        timings: common.timings,
    })
}

fn run(cli: Cli, echo: &str) -> CliResult<RunReport> {
    let common = &cli.common;
    match cli.command {
        Command::GenR { group, output } => {
            let spec = parse_orders(&group.orders)?;
            cmd_gen_r(echo, &settings(common, group.form)?, &spec, output.as_deref())
        }
        Command::Check {
            group,
            which,
            strands,
            r_tensor,
            r_matrix,
        } => {
            let spec = parse_orders(&group.orders)?;
            let which = which
                .split(',')
                .map(str::parse::<Selector>)
                .collect::<CliResult<Vec<_>>>()?;
            let inputs = CheckInputs {
                strands,
                r_tensor,
                r_matrix,
            };
            cmd_check(echo, &settings(common, group.form)?, &spec, &which, &inputs)
        }
        Command::Braid {
            group,
            strands,
            word,
            state,
            output,
        } => {
            let spec = parse_orders(&group.orders)?;
            cmd_braid(
                echo,
                &settings(common, group.form)?,
                &spec,
                strands,
                &word,
                state.as_deref(),
                output.as_deref(),
            )
        }
        Command::CompareGates => cmd_compare_gates(echo, &settings(common, Form::Product)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let json = cli.common.json;
    match run(cli, &echo) {
        Ok(report) => {
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
