use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use injcolor::reduction::TheoremClass;
use injcolor::Rational;
use injcolor_cli::analyze::cmd_analyze;
use injcolor_cli::color::{cmd_audit, cmd_color, ColorOptions};
use injcolor_cli::generate::{cmd_generate, Construction};
use injcolor_cli::{input_error, resolve_budget, verify, CmdOutput, InputError, VerifyOptions, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "injcolor", version, about = "Injective colouring of sparse graphs: exact, constructive and audited")]
struct Cli {
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Edge-list file.
    input: PathBuf,
    /// Rotation-system file for planar classes.
    #[arg(long)]
    embedding: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Degree, girth, exact mad, thread profile, G23 and auxiliary summaries.
    Analyze {
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Constructive colouring for a class and/or the exact injective chromatic number.
    Color {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_parser = parse_class)]
        class: Option<TheoremClass>,
        #[arg(long)]
        exact: bool,
        /// Node budget for the exact solver (default from INJCOLOR_BUDGET).
        #[arg(long)]
        budget: Option<u64>,
        /// Directory for theorem-violation certificates.
        #[arg(long, default_value = ".")]
        certificates: PathBuf,
    },
    /// Discharging audit of the class.
    Audit {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_parser = parse_class)]
        class: TheoremClass,
        /// Reject inputs containing any configuration instead of excusing them.
        #[arg(long)]
        strict: bool,
    },
    /// Generate a seeded corpus and check every instance.
    Verify {
        #[arg(long, value_parser = parse_class)]
        class: TheoremClass,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        /// Vertex budget per instance.
        #[arg(long, default_value_t = 30)]
        size: usize,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        certificates: Option<PathBuf>,
        /// Generate instances with mad strictly below this "p/q" bound.
        #[arg(long, value_parser = parse_rational)]
        mad_below: Option<Rational>,
        /// Corrupt the constructive colouring of this instance (exercises exit 3).
        #[arg(long, hide = true)]
        corrupt_instance: Option<usize>,
    },
    /// Write constructed or random instances.
    Generate {
        #[command(subcommand)]
        construction: GenerateCmd,
    },
}

#[derive(Subcommand)]
enum GenerateCmd {
    Subdivide {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
    },
    InsertVertex {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long)]
        out: PathBuf,
    },
    Class2 {
        input: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    RandomSparse {
        #[arg(long, value_parser = parse_class)]
        class: TheoremClass,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        size: usize,
        #[arg(long)]
        out: PathBuf,
    },
    RandomPlanar {
        #[arg(long)]
        girth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 40)]
        size: usize,
        #[arg(long, default_value_t = 4)]
        delta_min: usize,
        #[arg(long, default_value_t = 8)]
        delta_max: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Seeded corpus plus manifest.tsv in the directory `out`.
    Corpus {
        #[arg(long, value_parser = parse_class)]
        class: TheoremClass,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 30)]
        size: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_class(s: &str) -> Result<TheoremClass, String> {
    TheoremClass::parse(s).ok_or_else(|| {
        let tags: Vec<&str> = TheoremClass::ALL.iter().map(|c| c.tag()).collect();
        format!("unknown class {s:?}; expected one of {}", tags.join(", "))
    })
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    injcolor::rational::parse(s).ok_or_else(|| format!("{s:?} is not a fraction p/q"))
}

fn run(cli: Cli) -> Result<CmdOutput, InputError> {
    match cli.command {
        Command::Analyze { graph } => cmd_analyze(&graph.input, graph.embedding.as_ref()),
        Command::Color { graph, class, exact, budget, certificates } => {
            let opts = ColorOptions { class, exact, budget: resolve_budget(budget)?, certificate_dir: certificates };
            cmd_color(&graph.input, graph.embedding.as_ref(), &opts)
        }
        Command::Audit { graph, class, strict } => cmd_audit(&graph.input, graph.embedding.as_ref(), class, strict),
        Command::Verify { class, seed, count, size, budget, jobs, certificates, mad_below, corrupt_instance } => {
            let mut opts = VerifyOptions::new(class, seed, count, size, resolve_budget(budget)?);
            opts.jobs = jobs;
            opts.command = std::env::args().collect();
            opts.corrupt_instance = corrupt_instance;
            opts.mad_below = mad_below;
            if let Some(dir) = certificates {
                opts.certificate_dir = dir;
            }
            let report = verify(&opts)?;
            let mut out = CmdOutput::new(&report, report.exit_code());
            out.messages = report
                .falsification_candidates
                .iter()
                .map(|c| format!("instance {} ({}): {}", c.index, c.provenance, c.reasons.join("; ")))
                .collect();
            Ok(out)
        }
        Command::Generate { construction } => {
            let (c, out) = match construction {
                GenerateCmd::Subdivide { graph, k, out } => {
                    (Construction::Subdivide { input: graph.input, embedding: graph.embedding, k }, out)
                }
                GenerateCmd::InsertVertex { graph, u, v, out } => {
                    (Construction::InsertVertex { input: graph.input, embedding: graph.embedding, u, v }, out)
                }
                GenerateCmd::Class2 { input, budget, out } => {
                    (Construction::Class2 { input, budget: resolve_budget(budget)? }, out)
                }
                GenerateCmd::RandomSparse { class, seed, size, out } => {
                    (Construction::RandomSparse { class, seed, size }, out)
                }
                GenerateCmd::RandomPlanar { girth, seed, size, delta_min, delta_max, out } => {
                    if delta_min > delta_max {
                        return Err(input_error("--delta-min exceeds --delta-max"));
                    }
                    (Construction::RandomPlanar { girth, seed, size, delta_min, delta_max }, out)
                }
                GenerateCmd::Corpus { class, seed, count, size, out } => {
                    (Construction::Corpus { class, seed, count, size }, out)
                }
            };
            cmd_generate(&c, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // help and version are not errors
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    let output = cli.output.clone();
    match run(cli) {
        Ok(out) => {
            for m in &out.messages {
                eprintln!("{m}");
            }
            let text = serde_json::to_string_pretty(&out.report).expect("report serializes");
            let written = match &output {
                Some(p) => std::fs::write(p, text + "\n").map_err(|e| format!("{}: {e}", p.display())),
                None => writeln!(std::io::stdout(), "{text}").map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_INPUT);
            }
            ExitCode::from(out.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
