//! Command-line front end: sequence validation, tree construction, index
//! computation, eccentricity-preserving transforms and theorem sweeps.
//!
//! Exit codes: 0 on success, 1 on a semantic failure (invalid sequence,
//! non-tree input, failed verification, inapplicable transform), 2 on a
//! usage or parse error.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ecctree::enumerate::DEFAULT_MAX_N;
use ecctree::indices::{sw_k_formula, wiener_type, IndexSpec, IndexValue, WeightFunction};
use ecctree::seq::{SeqParseError, SequenceSpec};
use ecctree::transform::TransformError;
use ecctree::verify::DEFAULT_SWEEP_CAP;
use ecctree::{
    build_tdn, caterpillarize, counterexample_pair, mate, parse_edge_list, random_labeled_tree,
    verify_by_spec, verify_diameter, EccSequence, EdgeListError, Tree, VerifyReport,
};

#[derive(Parser)]
#[command(
    name = "ecctree",
    version,
    about = "Eccentric sequences of trees, Wiener-type and Steiner-Wiener indices, \
             extremal constructions and exhaustive verification"
)]
struct Cli {
    /// Seed for randomized subcommands (`build --random`).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Test whether a sequence is the eccentric sequence of some tree.
    ///
    /// Accepts the full sorted form `2,2,3,3,3` or the compact form `2;3`.
    /// Prints `VALID <compact>` or `INVALID <reason>`.
    Validate { sequence: String },
    /// Build a tree and print it in edge-list format.
    Build(BuildArgs),
    /// Compute an index of a tree read from a file (`-` for stdin).
    Index {
        /// Edge-list file, or `-` for stdin.
        tree: String,
        /// One of: wiener, hyper, harary, rcw, genw:<lambda>, steiner:<k>.
        spec: String,
        /// Print the Steiner-Wiener index for every k from 1 to n.
        #[arg(long)]
        all_k: bool,
    },
    /// Apply a transform: `transform <tree-file> mate|caterpillarize`
    /// or `transform --seq <sequence> seq-reduce`.
    Transform {
        /// Tree file (or `-`) followed by the operation, or just the
        /// operation when `--seq` is given.
        #[arg(required = true)]
        args: Vec<String>,
        /// Compact or full eccentric sequence (for `seq-reduce`).
        #[arg(long)]
        seq: Option<String>,
    },
    /// Sweep all trees of an order and verify the extremal-tree claims.
    Verify {
        #[arg(long)]
        order: usize,
        /// Index spec, as for `index`.
        #[arg(long)]
        index: String,
        /// Restrict to trees of this diameter and compare against T_{d,n}.
        #[arg(long)]
        diameter: Option<usize>,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Worker threads for per-class verification.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BuildSource {
    /// Eccentric sequence (compact `r;m2,...` or full sorted form).
    sequence: Option<String>,
    /// Build T_{d,n}: the order-(d+1) path with n-d-1 pendants at a centre.
    #[arg(long, num_args = 2, value_names = ["N", "D"])]
    tdn: Option<Vec<usize>>,
    /// Build the pair of non-isomorphic trees with equal eccentric
    /// sequence and equal SW_k above the uniqueness threshold.
    #[arg(long, num_args = 2, value_names = ["N", "D"])]
    counterexample: Option<Vec<usize>>,
    /// Build a uniformly random labelled tree of this order.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    source: BuildSource,
}

/// Semantic failure: exit code 1.
struct Failure(String);

/// Usage or parse problem: exit code 2.
struct Usage(String);

enum CmdError {
    Failure(Failure),
    Usage(Usage),
}

impl From<Failure> for CmdError {
    fn from(f: Failure) -> Self {
        CmdError::Failure(f)
    }
}

impl From<Usage> for CmdError {
    fn from(u: Usage) -> Self {
        CmdError::Usage(u)
    }
}

impl From<SeqParseError> for CmdError {
    fn from(e: SeqParseError) -> Self {
        CmdError::Usage(Usage(e.to_string()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CmdError::Failure(Failure(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CmdError::Usage(Usage(msg))) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CmdError> {
    match cli.command {
        Command::Validate { sequence } => cmd_validate(&sequence),
        Command::Build(args) => cmd_build(args, cli.seed),
        Command::Index { tree, spec, all_k } => cmd_index(&tree, &spec, all_k),
        Command::Transform { args, seq } => cmd_transform(&args, seq.as_deref()),
        Command::Verify {
            order,
            index,
            diameter,
            json,
            jobs,
        } => cmd_verify(order, &index, diameter, json, jobs),
    }
}

fn cmd_validate(sequence: &str) -> Result<ExitCode, CmdError> {
    let spec: SequenceSpec = sequence.parse()?;
    match spec.validate() {
        Ok(seq) => {
            println!("VALID {seq}");
            Ok(ExitCode::SUCCESS)
        }
        Err(ecctree::SeqError::Invalid(reason)) => {
            println!("INVALID {reason}");
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(CmdError::Failure(Failure(e.to_string()))),
    }
}

fn cmd_build(args: BuildArgs, seed: Option<u64>) -> Result<ExitCode, CmdError> {
    let src = args.source;
    if let Some(s) = src.sequence {
        let seq = parse_and_validate(&s)?;
        print!("{}", seq.build_extremal().to_edge_list());
    } else if let Some(nd) = src.tdn {
        let t = build_tdn(nd[0], nd[1]).map_err(|e| Failure(e.to_string()))?;
        print!("{}", t.to_edge_list());
    } else if let Some(nd) = src.counterexample {
        let (t1, t2) = counterexample_pair(nd[0], nd[1]).map_err(|e| Failure(e.to_string()))?;
        println!("# T1");
        print!("{}", t1.to_edge_list());
        println!("# T2");
        print!("{}", t2.to_edge_list());
    } else if let Some(n) = src.random {
        if n < 2 {
            return Err(Usage("--random needs an order of at least 2".into()).into());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or_else(rand::random));
        print!("{}", random_labeled_tree(n, &mut rng).to_edge_list());
    } else {
        unreachable!("clap enforces exactly one build source");
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_and_validate(s: &str) -> Result<EccSequence, CmdError> {
    let spec: SequenceSpec = s.parse()?;
    spec.validate()
        .map_err(|e| CmdError::Failure(Failure(e.to_string())))
}

fn read_tree(path: &str) -> Result<Tree, CmdError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure(format!("reading stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("reading {path}: {e}")))?
    };
    parse_edge_list(&text).map_err(|e| match e {
        EdgeListError::Format { .. } => CmdError::Usage(Usage(e.to_string())),
        EdgeListError::Tree(t) => CmdError::Failure(Failure(t.to_string())),
    })
}

fn cmd_index(tree_path: &str, spec_str: &str, all_k: bool) -> Result<ExitCode, CmdError> {
    let tree = read_tree(tree_path)?;
    if all_k {
        if spec_str != "steiner" && !spec_str.starts_with("steiner:") {
            return Err(Usage("--all-k applies only to steiner indices".into()).into());
        }
        for k in 1..=tree.order() {
            let v = sw_k_formula(&tree, k).map_err(|e| Failure(e.to_string()))?;
            println!("k={k} SW={v}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let spec = IndexSpec::from_str(spec_str).map_err(|e| Usage(e.to_string()))?;
    let value = match spec {
        IndexSpec::WienerType(g) => {
            warn_if_downgraded(spec_str, &g);
            wiener_type(&tree, &g)
        }
        IndexSpec::Steiner(k) => {
            IndexValue::from_bigint(sw_k_formula(&tree, k).map_err(|e| Failure(e.to_string()))?)
        }
    };
    println!("{value}");
    Ok(ExitCode::SUCCESS)
}

/// An integer exponent too large for exact mode silently evaluates in
/// floating point; make that visible.
fn warn_if_downgraded(spec_str: &str, g: &WeightFunction) {
    if let Some(arg) = spec_str.strip_prefix("genw:") {
        if let Ok(lambda) = arg.parse::<f64>() {
            if lambda.fract() == 0.0 && !g.is_exact() {
                eprintln!(
                    "warning: exponent {lambda} exceeds the exact-arithmetic range; \
                     falling back to floating point"
                );
            }
        }
    }
}

fn cmd_transform(args: &[String], seq: Option<&str>) -> Result<ExitCode, CmdError> {
    let (input, op) = match (args, seq) {
        ([op], Some(_)) => (None, op.as_str()),
        ([file, op], None) => (Some(file.as_str()), op.as_str()),
        _ => {
            return Err(Usage(
                "expected `transform <tree-file> <op>` or `transform --seq <sequence> <op>`".into(),
            )
            .into())
        }
    };
    match op {
        "mate" => {
            let t = read_tree(input.ok_or(Usage("mate needs a tree file".into()))?)?;
            let (out, trace) = mate(&t).map_err(|e: TransformError| Failure(e.to_string()))?;
            println!(
                "# mate: path={:?} j={} vj={} vj1={} u={} moved={:?}",
                trace.path,
                trace.j,
                trace.path[trace.j],
                trace.path[trace.j + 1],
                trace.u,
                trace.moved
            );
            print!("{}", out.to_edge_list());
        }
        "caterpillarize" => {
            let t = read_tree(input.ok_or(Usage("caterpillarize needs a tree file".into()))?)?;
            let (out, steps) = caterpillarize(&t);
            println!("# caterpillarize: steps={steps}");
            print!("{}", out.to_edge_list());
        }
        "seq-reduce" => {
            let sequence = match (seq, input) {
                (Some(s), _) => parse_and_validate(s)?,
                (None, Some(path)) => EccSequence::of_tree(&read_tree(path)?),
                (None, None) => unreachable!("argument shape checked above"),
            };
            let reduced = sequence.reduce().map_err(|e| Failure(e.to_string()))?;
            println!("# seq-reduce: {sequence} -> {reduced}");
            println!("{reduced}");
        }
        other => return Err(Usage(format!("unknown transform {other:?}")).into()),
    }
    Ok(ExitCode::SUCCESS)
}

fn enumeration_caps() -> (usize, usize) {
    match std::env::var("ECCTREE_MAX_N")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        Some(n) => (n, n),
        None => (DEFAULT_SWEEP_CAP, DEFAULT_MAX_N),
    }
}

fn cmd_verify(
    order: usize,
    index: &str,
    diameter: Option<usize>,
    json: Option<PathBuf>,
    jobs: Option<usize>,
) -> Result<ExitCode, CmdError> {
    let spec = IndexSpec::from_str(index).map_err(|e| Usage(e.to_string()))?;
    if let Some(j) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| Failure(format!("thread pool: {e}")))?;
    }
    let (sweep_cap, _) = enumeration_caps();
    let report = match diameter {
        Some(d) => verify_diameter(order, d, &spec, sweep_cap),
        None => verify_by_spec(order, &spec, sweep_cap),
    }
    .map_err(|e| Failure(e.to_string()))?;
    print_report(&report);
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&report)
            .map_err(|e| Failure(format!("serializing report: {e}")))?;
        if path.as_os_str() == "-" {
            println!("{text}");
        } else {
            fs::write(&path, text)
                .map_err(|e| Failure(format!("writing {}: {e}", path.display())))?;
        }
    }
    if report.all_pass() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn print_report(report: &VerifyReport) {
    for class in &report.classes {
        let f = &class.flags;
        println!(
            "{} class={} size={} extremal={} attainers={} constructor={} unique={} tie={}",
            if f.passed { "PASS" } else { "FAIL" },
            class.key,
            class.size,
            class.extremal_value,
            class.attainers.len(),
            yn(f.extremal_is_constructor),
            yn(f.unique),
            yn(f.tie_unknown),
        );
    }
    let passed = report.classes.iter().filter(|c| c.flags.passed).count();
    println!(
        "RESULT {} order={} index={} classes={} passed={} trees={}",
        if report.all_pass() { "PASS" } else { "FAIL" },
        report.order,
        report.index_spec,
        report.classes.len(),
        passed,
        report.total_trees()
    );
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
