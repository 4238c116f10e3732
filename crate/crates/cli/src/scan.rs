use std::fs::{self, File, OpenOptions};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde_json::json;

use domgame::solver::SolverOptions;
use domgame::trees::{scan_critical_trees, CriticalityReport, ScanCheckpoint, ScanOptions, ScanSink};

use crate::output::{emit, rows, versioned};
use crate::{input, Failure};

/// Directory for checkpoints when `--checkpoint` is not given.
pub const CACHE_DIR_VAR: &str = "DOMGAME_CACHE_DIR";

#[derive(clap::Args)]
pub struct ScanArgs {
    /// Tree order.
    #[arg(long)]
    n: usize,
    /// Continue from a checkpoint file.
    #[arg(long)]
    resume: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Stop after the batch that crosses this many seconds.
    #[arg(long)]
    budget: Option<f64>,
    /// Trees per batch; a checkpoint is written after each.
    #[arg(long, default_value_t = 10_000)]
    batch_size: usize,
    /// Append critical reports here as JSON lines instead of printing them.
    #[arg(long)]
    reports: Option<PathBuf>,
    /// Checkpoint file; defaults to `$DOMGAME_CACHE_DIR/scan-n<N>.checkpoint.json`.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Also write the summary object here.
    #[arg(long)]
    summary: Option<PathBuf>,
    /// Search with alpha-beta cutoffs and dominance pruning; same values,
    /// several times faster.
    #[arg(long)]
    fast: bool,
}

struct Sink {
    reports: Box<dyn Write>,
    table_rows: Option<Vec<serde_json::Value>>,
    checkpoint: Option<PathBuf>,
}

impl ScanSink for Sink {
    fn report(&mut self, report: &CriticalityReport) -> io::Result<()> {
        match &mut self.table_rows {
            Some(rows) => rows.push(json!({
                "graph_g6": report.graph_g6,
                "gamma_g": report.gamma_g,
                "gamma_g_prime": report.gamma_g_prime,
                "class": report.classification,
            })),
            None => writeln!(self.reports, "{}", serde_json::to_string(report)?)?,
        }
        Ok(())
    }

    fn checkpoint(&mut self, cp: &ScanCheckpoint) -> io::Result<()> {
        self.reports.flush()?;
        if let Some(path) = &self.checkpoint {
            write_atomically(path, &serde_json::to_string_pretty(cp)?)?;
        }
        Ok(())
    }
}

fn write_atomically(path: &Path, text: &str) -> io::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)
}

/// Keep the first `keep` lines of a report file so a resumed scan never
/// duplicates reports written after the last checkpoint.
fn truncate_reports(path: &Path, keep: u64) -> Result<(), Failure> {
    if !path.exists() {
        return if keep == 0 {
            Ok(())
        } else {
            Err(input(format!("{}: missing, but the checkpoint records {keep} reports", path.display())))
        };
    }
    let lines: Vec<String> = BufReader::new(File::open(path)?).lines().collect::<Result<_, _>>()?;
    if (lines.len() as u64) < keep {
        return Err(input(format!(
            "{}: has {} reports, but the checkpoint records {keep}",
            path.display(),
            lines.len()
        )));
    }
    let mut text = lines[..keep as usize].join("\n");
    if keep > 0 {
        text.push('\n');
    }
    fs::write(path, text)?;
    Ok(())
}

pub fn run(table: bool, args: &ScanArgs) -> Result<(), Failure> {
    let resume: Option<ScanCheckpoint> = match &args.resume {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
            Some(serde_json::from_str(&text).map_err(|e| input(format!("{}: corrupt checkpoint: {e}", path.display())))?)
        }
        None => None,
    };
    let budget = match args.budget {
        Some(b) if !(b.is_finite() && b >= 0.0) => return Err(input(format!("--budget must be non-negative, got {b}"))),
        b => b.map(Duration::from_secs_f64),
    };
    let jobs = match args.jobs {
        Some(0) => return Err(input("--jobs must be at least 1")),
        Some(j) => j,
        None => std::thread::available_parallelism().map_or(1, usize::from),
    };
    let checkpoint = match (&args.checkpoint, std::env::var_os(CACHE_DIR_VAR)) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(dir)) => {
            let dir = PathBuf::from(dir);
            fs::create_dir_all(&dir).map_err(|e| input(format!("{}: {e}", dir.display())))?;
            Some(dir.join(format!("scan-n{}.checkpoint.json", args.n)))
        }
        (None, None) => None,
    };
    let reports: Box<dyn Write> = match &args.reports {
        Some(path) => {
            let keep = resume.as_ref().map_or(0, |cp| cp.reports_emitted);
            truncate_reports(path, keep)?;
            let file = OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| input(format!("{}: {e}", path.display())))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(io::stdout()),
    };
    let mut sink = Sink {
        reports,
        table_rows: (table && args.reports.is_none()).then(Vec::new),
        checkpoint,
    };
    let options = ScanOptions {
        jobs,
        batch_size: args.batch_size,
        budget,
        solver: if args.fast { SolverOptions::FAST } else { SolverOptions::PLAIN },
    };
    let summary = scan_critical_trees(args.n, resume, &options, &mut sink).map_err(input)?;
    sink.reports.flush()?;
    let mut out = versioned(&summary);
    out["search"] = json!(if args.fast { "fast" } else { "plain" });
    if let Some(path) = &sink.checkpoint {
        out["checkpoint"] = json!(path);
    }
    if let Some(path) = &args.summary {
        fs::write(path, format!("{out}\n")).map_err(|e| input(format!("{}: {e}", path.display())))?;
    }
    if let Some(found) = &sink.table_rows {
        if !found.is_empty() {
            println!("{}", rows(found));
        }
    }
    emit(table, &out)?;
    if summary.invariant_violations > 0 {
        return Err(Failure::Violation(format!(
            "{} trees broke a report invariant",
            summary.invariant_violations
        )));
    }
    Ok(())
}
