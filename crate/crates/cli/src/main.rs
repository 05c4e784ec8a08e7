//! `hyperkernel`: reduce, compare and check hypergraphs from the command line.
//!
//! Exit codes: 0 success or true, 1 property false, 2 usage, parse or I/O
//! error, 3 capacity limit exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperkernel::format::{self, Format};
use hyperkernel::harness::{self, BatchConfig, Check, GeneratorParams};
use hyperkernel::{
    fixtures, is_minimal, min_hitting_set_bounded, reduce, Canonizer, HittingSetResult, Hypergraph, Strategy,
};

const SIZE_GUARD_VAR: &str = "HYPERKERNEL_SIZE_GUARD";

#[derive(Parser)]
#[command(
    name = "hyperkernel",
    version,
    about = "Edge- and node-domination kernelization for hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a hypergraph to a minimal one.
    Reduce(ReduceArgs),
    /// Exit 0 if no rule applies, 1 otherwise.
    Minimal { file: PathBuf },
    /// Exit 0 if the two hypergraphs are isomorphic, 1 otherwise.
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Print the id map from B onto A.
        #[arg(long)]
        witness: bool,
    },
    /// Print the canonical form `<|V|>x<|E|>:<bits>`.
    Canon { file: PathBuf },
    /// Minimum hitting set.
    Hs {
        file: PathBuf,
        #[arg(long, default_value_t = hyperkernel::hitting::DEFAULT_MAX_NODES)]
        max_nodes: usize,
    },
    /// Generate a seeded random hypergraph.
    Gen(GenArgs),
    /// Emit the alternating chain of the given length.
    Chain {
        #[arg(long)]
        length: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a property on a seeded batch of random instances.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Write the hypergraph here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Emit the incidence graph as Graphviz DOT.
    #[arg(long, conflicts_with = "format")]
    dot: bool,
}

#[derive(Args)]
struct ReduceArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = StrategyArg::LexNodeFirst)]
    strategy: StrategyArg,
    /// Seed for `--strategy random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print one line per rule application.
    #[arg(long)]
    trace: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    max_nodes: usize,
    #[arg(long)]
    max_edges: usize,
    #[arg(long)]
    density: f64,
    #[arg(long)]
    seed: u64,
    /// Planted domination pairs.
    #[arg(long, default_value_t = 0)]
    plant: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    check: CheckArg,
    #[arg(long)]
    count: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    max_nodes: usize,
    #[arg(long, default_value_t = 8)]
    max_edges: usize,
    #[arg(long, default_value_t = 0.35)]
    density: f64,
    #[arg(long, default_value_t = 2)]
    plant: usize,
    /// Random strategies per instance, on top of the two lex ones.
    #[arg(long, default_value_t = 8)]
    strategies: usize,
    /// Where failing instances are written.
    #[arg(long, default_value = "hyperkernel-failures")]
    out_dir: PathBuf,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    LexNodeFirst,
    LexEdgeFirst,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    Diamond,
    Confluence,
    Lifting,
    HittingSet,
}

impl From<CheckArg> for Check {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::Diamond => Check::Diamond,
            CheckArg::Confluence => Check::Confluence,
            CheckArg::Lifting => Check::Lifting,
            CheckArg::HittingSet => Check::HittingSet,
        }
    }
}

/// A failure that ends the run.
enum Failure {
    Usage(String),
    Capacity(String),
}

impl From<hyperkernel::Error> for Failure {
    fn from(e: hyperkernel::Error) -> Self {
        match e {
            hyperkernel::Error::Capacity { .. } => Failure::Capacity(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("hyperkernel: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Capacity(msg)) => {
            eprintln!("hyperkernel: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Reduce(args) => cmd_reduce(args),
        Command::Minimal { file } => {
            let h = load(&file)?;
            let minimal = is_minimal(&h);
            println!("{}", if minimal { "minimal" } else { "not minimal" });
            Ok(truth(minimal))
        }
        Command::Iso { a, b, witness } => cmd_iso(&a, &b, witness),
        Command::Canon { file } => {
            let h = load(&file)?;
            println!("{}", canonizer()?.form(&h)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Hs { file, max_nodes } => {
            let h = load(&file)?;
            match min_hitting_set_bounded(&h, max_nodes)? {
                HittingSetResult::Feasible { size, witness } => {
                    println!("size={size}");
                    println!(
                        "witness: {}",
                        witness.iter().map(|v| v.as_str()).collect::<Vec<_>>().join(" ")
                    );
                }
                HittingSetResult::Infeasible => println!("infeasible"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen(args) => {
            let h = harness::random_hypergraph(&GeneratorParams {
                max_nodes: args.max_nodes,
                max_edges: args.max_edges,
                density: args.density,
                planted_dominations: args.plant,
                seed: args.seed,
            })?;
            emit(&h, &args.output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Chain { length, output } => {
            emit(&fixtures::alternating_chain(length)?, &output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => cmd_verify(args),
    }
}

fn cmd_reduce(args: ReduceArgs) -> Outcome {
    let h = load(&args.file)?;
    let strategy = match args.strategy {
        StrategyArg::LexNodeFirst => Strategy::LexNodeFirst,
        StrategyArg::LexEdgeFirst => Strategy::LexEdgeFirst,
        StrategyArg::Random => Strategy::Random(args.seed),
    };
    let (minimal, trace) = reduce(&h, strategy);
    let out = &args.output;
    if args.trace && out.format == FormatArg::Json && !out.dot {
        // one JSON object carrying both
        let doc = serde_json::json!({
            "hypergraph": format::to_json_value(&minimal),
            "trace": trace,
        });
        let text = serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n";
        return write_out(out.output.as_deref(), &text).map(|_| ExitCode::SUCCESS);
    }
    if args.trace {
        print!("{trace}");
    }
    emit(&minimal, out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_iso(a: &Path, b: &Path, witness: bool) -> Outcome {
    let (ha, hb) = (load(a)?, load(b)?);
    match canonizer()?.isomorphism(&ha, &hb)? {
        Some(w) => {
            println!("isomorphic");
            if witness {
                for (from, to) in &w.node_map {
                    println!("node {from} -> {to}");
                }
                for (from, to) in &w.edge_map {
                    println!("edge {from} -> {to}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("not isomorphic");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Outcome {
    let check = Check::from(args.check);
    let config = BatchConfig {
        max_nodes: args.max_nodes,
        max_edges: args.max_edges,
        density: args.density,
        planted_dominations: args.plant,
        random_strategies: args.strategies,
        canonizer: canonizer()?,
        ..BatchConfig::new(check, args.count, args.seed)
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let outcomes = pool.install(|| harness::run_batch(&config))?;

    let (mut passed, mut failed, mut errors) = (0usize, 0usize, 0usize);
    let stdout = io::stdout();
    let mut stdout = stdout.lock();
    for case in outcomes {
        let line = match &case.verdict {
            Ok(true) if case.traces_within_bound => {
                passed += 1;
                format!("PASS {check} seed={}", case.seed)
            }
            Ok(_) => {
                failed += 1;
                let path = save_failure(&args.out_dir, check, case.seed, &case.instance)?;
                format!("FAIL {check} seed={} instance={}", case.seed, path.display())
            }
            Err(e) => {
                errors += 1;
                format!("ERROR {check} seed={} {e}", case.seed)
            }
        };
        writeln!(stdout, "{line}").map_err(io_failure)?;
    }
    writeln!(stdout, "{check}: {passed} passed, {failed} failed, {errors} errors").map_err(io_failure)?;
    Ok(if failed > 0 {
        ExitCode::from(1)
    } else if errors > 0 {
        ExitCode::from(3)
    } else {
        ExitCode::SUCCESS
    })
}

fn save_failure(dir: &Path, check: Check, seed: u64, h: &Hypergraph) -> Result<PathBuf, Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?;
    let path = dir.join(format!("{check}-seed{seed}.hg"));
    let mut text = format!("# {check} counterexample, seed {seed}\n");
    text.push_str(&format::to_text(h));
    write_out(Some(&path), &text)?;
    Ok(path)
}

fn canonizer() -> Result<Canonizer, Failure> {
    match std::env::var(SIZE_GUARD_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Canonizer::new)
            .map_err(|_| Failure::Usage(format!("{SIZE_GUARD_VAR} must be a non-negative integer, got `{v}`"))),
        Err(_) => Ok(Canonizer::default()),
    }
}

/// Reads a document from a path, or stdin for `-`.
fn load(path: &Path) -> Result<Hypergraph, Failure> {
    let bytes = if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).map_err(io_failure)?;
        buf
    } else {
        fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    format::parse(&bytes).map_err(|e| {
        let sep = if e.position.is_some() { ":" } else { ": " };
        Failure::Usage(format!("{}{sep}{e}", path.display()))
    })
}

fn emit(h: &Hypergraph, out: &OutputArgs) -> Result<(), Failure> {
    let text = if out.dot {
        format::to_dot(h)
    } else {
        format::serialize(h, out.format.into())
    };
    write_out(out.output.as_deref(), &text)
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(io_failure),
    }
}

fn io_failure(e: io::Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn truth(b: bool) -> ExitCode {
    if b {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
