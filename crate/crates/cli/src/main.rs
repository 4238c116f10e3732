mod output;
mod scan;
mod source;

use std::io::{self, BufRead};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use domgame::graph::{emit_graph6, VertexSet};
use domgame::lemmas::{classify_values, random_instances, run_instance, Instance, LemmaKind, VerdictBatch};
use domgame::solver::{GameConfig, PassRule, Player, Solver};
use domgame::trees::{analyze_with, verify_spider};

use output::{emit, rows, versioned};

#[derive(Parser)]
#[command(name = "domgame", version, about = "Exact domination game solver and checks")]
struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Game value of a (partially dominated) graph.
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = First::Dominator)]
        first: First,
        #[arg(long, value_enum, default_value_t = Pass::None)]
        pass: Pass,
        /// Include an optimal line of play.
        #[arg(long)]
        trace: bool,
    },
    /// D-game and S-game values and the plus/equal/minus class.
    Classify {
        #[command(flatten)]
        graph: GraphArgs,
    },
    /// Criticality report: both game values and every single-vertex predomination.
    Analyze {
        #[arg(long)]
        graph: String,
    },
    /// Evaluate one lemma on given or seeded random instances.
    VerifyLemma {
        #[arg(long)]
        lemma: LemmaKind,
        /// A JSON-lines (or JSON array) file of instances, or `random:SEED:COUNT`.
        #[arg(long)]
        instances: String,
    },
    /// Check the spider criticality formula for T_{p,q,r}.
    Spider {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: usize,
    },
    /// Scan all free trees of one order for critical ones.
    ScanTrees(scan::ScanArgs),
}

#[derive(clap::Args)]
struct GraphArgs {
    /// graph6 string, edge-list or graph6 file, or builtin such as `path:7`,
    /// `spider:1,1,2`, `pprime:3`, `pdprime:3`.
    #[arg(long)]
    graph: String,
    /// Comma-separated ids dominated before the game starts.
    #[arg(long, default_value = "")]
    dominated: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum First {
    Dominator,
    Staller,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pass {
    None,
    Staller,
    Dominator,
}

/// Failure modes, each with its exit code.
pub enum Failure {
    /// Malformed input or an I/O problem.
    Input(String),
    /// A checked statement was false.
    Violation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Violation(_) => 1,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn input<E: ToString>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

struct Loaded {
    source: source::Source,
    dominated: VertexSet,
}

fn load(args: &GraphArgs) -> Result<Loaded, Failure> {
    let source = source::load(&args.graph).map_err(Failure::Input)?;
    let extra = VertexSet::parse_ids(&args.dominated, source.graph.order()).map_err(|e| input(format!("--dominated: {e}")))?;
    for w in &source.warnings {
        eprintln!("warning: {w}");
    }
    Ok(Loaded {
        dominated: source.dominated.union(extra),
        source,
    })
}

#[derive(Serialize)]
struct SolveOutput {
    graph: String,
    dominated: VertexSet,
    first: Player,
    pass: PassRule,
    moves: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<domgame::solver::TraceStep>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    warnings: Vec<String>,
}

fn solve(table: bool, graph: &GraphArgs, first: First, pass: Pass, trace: bool) -> Result<(), Failure> {
    let Loaded { source, dominated } = load(graph)?;
    let cfg = GameConfig::new(
        match first {
            First::Dominator => Player::Dominator,
            First::Staller => Player::Staller,
        },
        match pass {
            Pass::None => PassRule::None,
            Pass::Staller => PassRule::StallerPass,
            Pass::Dominator => PassRule::DominatorPass,
        },
    );
    let mut solver = Solver::new(source.graph.clone());
    let moves = solver.value(dominated, cfg).moves();
    let trace = trace.then(|| solver.trace(dominated, cfg));
    let out = versioned(&SolveOutput {
        graph: emit_graph6(&source.graph),
        dominated,
        first: cfg.first_mover,
        pass: cfg.pass,
        moves,
        trace: trace.clone(),
        warnings: source.warnings,
    });
    if table {
        let mut summary = out.clone();
        summary.as_object_mut().unwrap().remove("trace");
        emit(true, &summary)?;
        if let Some(steps) = trace {
            let steps: Vec<_> = steps.iter().map(|s| serde_json::to_value(s).unwrap()).collect();
            print!("\n{}", rows(&steps));
        }
        Ok(())
    } else {
        Ok(emit(false, &out)?)
    }
}

fn classify(table: bool, graph: &GraphArgs) -> Result<(), Failure> {
    let Loaded { source, dominated } = load(graph)?;
    let mut solver = Solver::new(source.graph.clone());
    let gamma_g = solver.gamma_g(dominated);
    let gamma_g_prime = solver.gamma_g_prime(dominated);
    let class = classify_values(gamma_g, gamma_g_prime).map_err(|e| Failure::Violation(e.to_string()))?;
    let out = versioned(&json!({
        "graph": emit_graph6(&source.graph),
        "dominated": dominated,
        "gamma_g": gamma_g,
        "gamma_g_prime": gamma_g_prime,
        "class": class,
    }));
    Ok(emit(table, &out)?)
}

fn analyze(table: bool, graph: &str) -> Result<(), Failure> {
    let source = source::load(graph).map_err(Failure::Input)?;
    if !source.dominated.is_empty() {
        return Err(Failure::Input(format!(
            "{graph} has predominated vertices; analyze takes a graph with nothing dominated"
        )));
    }
    for w in &source.warnings {
        eprintln!("warning: {w}");
    }
    let report = analyze_with(&mut Solver::new(source.graph)).map_err(|e| Failure::Violation(e.to_string()))?;
    Ok(emit(table, &versioned(&report))?)
}

fn read_instances(path: &str) -> Result<Vec<Instance>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{path}: {e}")))?;
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(&text).map_err(|e| input(format!("{path}: {e}")));
    }
    let mut out = Vec::new();
    for (i, line) in io::Cursor::new(text).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line).map_err(|e| input(format!("{path}:{}: {e}", i + 1)))?);
    }
    Ok(out)
}

fn parse_random(spec: &str) -> Result<Option<(u64, usize)>, Failure> {
    let Some(rest) = spec.strip_prefix("random:") else {
        return Ok(None);
    };
    let (seed, count) = rest
        .split_once(':')
        .ok_or_else(|| input(format!("{spec:?}: expected random:SEED:COUNT; the seed is required")))?;
    let seed = seed.parse().map_err(|_| input(format!("{spec:?}: bad seed {seed:?}")))?;
    let count = count.parse().map_err(|_| input(format!("{spec:?}: bad count {count:?}")))?;
    Ok(Some((seed, count)))
}

fn verify_lemma(table: bool, lemma: LemmaKind, instances: &str) -> Result<(), Failure> {
    let (seed, list) = match parse_random(instances)? {
        Some((seed, count)) => (Some(seed), random_instances(lemma, seed, count)),
        None => (None, read_instances(instances)?),
    };
    let mut batch = VerdictBatch::new(seed);
    for (i, inst) in list.iter().enumerate() {
        batch.extend(run_instance(lemma, inst).map_err(|e| input(format!("instance {i}: {e}")))?);
    }
    let violations = batch.failures().count();
    let summary = versioned(&json!({
        "lemma": lemma,
        "seed": seed,
        "instances": list.len(),
        "verdicts": batch.verdicts.len(),
        "violations": violations,
        "all_hold": violations == 0,
    }));
    if table {
        let lines: Vec<_> = batch
            .verdicts
            .iter()
            .map(|v| json!({"lemma_id": v.lemma_id, "lhs": v.lhs, "rhs": v.rhs, "holds": v.holds, "instance": v.instance}))
            .collect();
        println!("{}", rows(&lines));
        emit(true, &summary)?;
    } else {
        print!("{}", batch.to_json_lines());
        emit(false, &summary)?;
    }
    if violations > 0 {
        return Err(Failure::Violation(format!("{violations} of {} verdicts failed", batch.verdicts.len())));
    }
    Ok(())
}

fn spider(table: bool, p: usize, q: usize, r: usize) -> Result<(), Failure> {
    let verdict = verify_spider(p, q, r).map_err(input)?;
    emit(table, &versioned(&verdict))?;
    if !verdict.holds {
        return Err(Failure::Violation(format!("spider ({p},{q},{r}) fails the criticality formula")));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let t = cli.table;
    let result = match &cli.command {
        Command::Solve {
            graph,
            first,
            pass,
            trace,
        } => solve(t, graph, *first, *pass, *trace),
        Command::Classify { graph } => classify(t, graph),
        Command::Analyze { graph } => analyze(t, graph),
        Command::VerifyLemma { lemma, instances } => verify_lemma(t, *lemma, instances),
        Command::Spider { p, q, r } => spider(t, *p, *q, *r),
        Command::ScanTrees(args) => scan::run(t, args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::Violation(m) => eprintln!("violation: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
