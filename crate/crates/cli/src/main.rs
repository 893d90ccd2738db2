use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use homlab_cli::commands::{self, CountMode, KabArgs};
use homlab_cli::input::Fixtures;
use homlab_cli::verify;
use homlab_cli::{CliError, CliResult};
use homlab_core::compare::Comparator;
use homlab_core::gadget::GadgetParams;

/// Exact homomorphism counts, biclique dominance analysis and gadget checks for bipartite targets.
///
/// Graph arguments are files in the `graph <n>` / `bigraph <l> <r>` edge-list format, or
/// `@name` for a bundled example (case1, case3, coexistence, p4, h_is, toy, k3).
#[derive(Parser)]
#[command(name = "homlab", version)]
struct Cli {
    /// Starting precision in bits for certified comparisons.
    #[arg(long, global = true, default_value_t = 128)]
    precision: u32,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Col,
    Fixcol,
    Inj,
    Bis,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print an exact homomorphism count.
    Count {
        #[arg(long)]
        target: Option<String>,
        #[arg(long)]
        instance: String,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Fullness, exponents, maximal and dominant bicliques, and the refinement by a second graph.
    Analyze {
        #[arg(long)]
        target: String,
        /// Refining graph, or `none`.
        #[arg(long)]
        gamma_graph: Option<String>,
    },
    /// Run the case analysis on a target.
    Classify {
        #[arg(long)]
        target: String,
        /// Largest side of the refining graphs searched.
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Find a distinguishing graph for two targets, or a selector for several.
    Distinguish {
        #[arg(required = true)]
        targets: Vec<String>,
        /// Only return graphs without isolated right vertices.
        #[arg(long)]
        no_isolated_right: bool,
        /// Build a selector even for two targets.
        #[arg(long)]
        selector: bool,
    },
    /// Build a reduction gadget and check its phase decomposition.
    Gadget {
        #[command(subcommand)]
        kind: GadgetCmd,
    },
    /// Run the worked-example and identity checks and print a pass/fail table.
    VerifyPaper {
        /// Only run checks whose name contains this text.
        #[arg(long)]
        filter: Option<String>,
        /// Read example targets from `<dir>/<name>.txt` instead of the bundled copies.
        #[arg(long)]
        fixtures_dir: Option<String>,
        /// Print the results as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Sizes {
    #[arg(long, default_value_t = 1)]
    a: usize,
    #[arg(long, default_value_t = 1)]
    b: usize,
    #[arg(long, default_value_t = 0)]
    copies_gamma: usize,
    #[arg(long, default_value_t = 0)]
    copies_j: usize,
}

impl Sizes {
    fn params(&self) -> GadgetParams {
        GadgetParams { a: self.a, b: self.b, copies_gamma: self.copies_gamma, copies_j: self.copies_j }
    }
}

#[derive(Subcommand)]
enum GadgetCmd {
    /// K_{a,b} with g' and copies of gamma and j below its right side.
    Kab {
        #[arg(long)]
        target: String,
        #[arg(long)]
        gprime: String,
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long)]
        j: Option<String>,
        #[command(flatten)]
        sizes: Sizes,
    },
    /// One K_{a,b} block per vertex of g', checked against its independent sets.
    Bis {
        #[arg(long)]
        target: String,
        #[arg(long)]
        gprime: String,
        #[arg(long)]
        gamma: Option<String>,
        #[command(flatten)]
        sizes: Sizes,
    },
    /// The uncoloured two-hub gadget, for a graph target.
    Col {
        #[arg(long)]
        target: String,
        #[arg(long)]
        gprime: String,
        #[arg(long)]
        j: Option<String>,
        #[arg(long, default_value_t = 0)]
        a_size: usize,
        #[arg(long, default_value_t = 0)]
        b_size: usize,
        #[arg(long, default_value_t = 0)]
        copies_j: usize,
    },
    /// Gadget sizes (Q, a, b) for scale n.
    Params {
        #[arg(long)]
        target: String,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        n: u64,
    },
    /// Per-biclique deviation of the chosen sizes at scale n.
    Bracket {
        #[arg(long)]
        target: String,
        #[arg(long)]
        gamma: String,
        #[arg(long)]
        n: u64,
    },
    /// Ratio of the largest predicted phase to the rest, across scales.
    Gap {
        #[arg(long)]
        target: String,
        #[arg(long)]
        gamma: String,
        #[arg(long, num_args = 1.., default_values_t = [4u64, 6, 8])]
        n: Vec<u64>,
    },
    /// Simultaneous approximation of numbers given as p/q, integers or sqrt(k).
    Dirichlet {
        #[arg(long = "alpha", required = true, allow_hyphen_values = true)]
        alphas: Vec<String>,
        #[arg(long)]
        n: u64,
    },
}

fn run(cli: Cli) -> CliResult<String> {
    if let Some(k) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global().map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let cmp = Comparator::with_start(cli.precision);
    let prec = cli.precision.max(200);
    match cli.cmd {
        Cmd::Count { target, instance, mode } => {
            let mode = match mode {
                Mode::Col => CountMode::Col,
                Mode::Fixcol => CountMode::Fixcol,
                Mode::Inj => CountMode::Inj,
                Mode::Bis => CountMode::Bis,
            };
            commands::count(target.as_deref(), &instance, mode)
        }
        Cmd::Analyze { target, gamma_graph } => commands::analyze(&target, gamma_graph.as_deref(), &cmp),
        Cmd::Classify { target, bound } => commands::classify_target(&target, bound, &cmp),
        Cmd::Distinguish { targets, no_isolated_right, selector } => commands::distinguish(&targets, no_isolated_right, selector),
        Cmd::Gadget { kind } => match kind {
            GadgetCmd::Kab { target, gprime, gamma, j, sizes } => {
                commands::gadget_kab(KabArgs { target: &target, gprime: &gprime, gamma: gamma.as_deref(), j: j.as_deref(), params: sizes.params() })
            }
            GadgetCmd::Bis { target, gprime, gamma, sizes } => commands::gadget_bis(&target, &gprime, gamma.as_deref(), sizes.params()),
            GadgetCmd::Col { target, gprime, j, a_size, b_size, copies_j } => {
                commands::gadget_col(&target, &gprime, j.as_deref(), a_size, b_size, copies_j)
            }
            GadgetCmd::Params { target, gamma, n } => commands::gadget_params(&target, &gamma, n, prec),
            GadgetCmd::Bracket { target, gamma, n } => commands::gadget_bracket(&target, &gamma, n, prec),
            GadgetCmd::Gap { target, gamma, n } => commands::gadget_gap(&target, &gamma, &n, prec),
            GadgetCmd::Dirichlet { alphas, n } => commands::gadget_dirichlet(&alphas, n, prec),
        },
        Cmd::VerifyPaper { filter, fixtures_dir, json } => {
            let fx = fixtures_dir.map_or_else(Fixtures::bundled, Fixtures::from_dir);
            let results = verify::verify(filter.as_deref(), &fx)?;
            let text = if json { commands::to_json(&results) } else { verify::render_table(&results).trim_end().to_string() };
            let failed: Vec<&str> = results.iter().filter(|r| !r.pass).map(|r| r.name).collect();
            if failed.is_empty() {
                Ok(text)
            } else {
                Err(CliError::Verification(format!("{text}\nfailed: {}", failed.join(", "))))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            // a closed pipe is not worth a panic
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            // a failed verification still prints its table on stdout
            match &e {
                CliError::Verification(text) => {
                    let _ = writeln!(std::io::stdout(), "{text}");
                }
                other => eprintln!("error: {other}"),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
