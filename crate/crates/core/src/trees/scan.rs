//! Resumable, parallel scans of all free trees of one order for
//! `γ_g`-critical members.
//!
//! Trees are processed in batches of [`ScanOptions::batch_size`]. After each
//! batch the critical reports of that batch are emitted sorted by graph6
//! string, followed by a checkpoint whose cursor is the last tree of the
//! batch. Resuming from any emitted checkpoint therefore continues exactly
//! after the last reported batch.

use std::io;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{analyze_with, CriticalityReport, FreeTrees, LevelSequence};
use crate::graph::{Graph, GraphError, MAX_ORDER};
use crate::lemmas::LemmaError;
use crate::solver::{Solver, SolverOptions};

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("corrupt checkpoint: {0}")]
    CorruptCheckpoint(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Analysis(#[from] LemmaError),
    #[error("report sink failed: {0}")]
    Sink(#[from] io::Error),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCheckpoint {
    pub order: usize,
    /// Last tree already processed; `None` before the first batch.
    pub generator_cursor: Option<LevelSequence>,
    pub reports_emitted: u64,
    pub trees_scanned: u64,
    /// Trees whose report broke one of the invariants in
    /// [`CriticalityReport::invariant_violations`].
    pub invariant_violations: u64,
    pub complete: bool,
}

impl ScanCheckpoint {
    pub fn start(order: usize) -> ScanCheckpoint {
        ScanCheckpoint {
            order,
            generator_cursor: None,
            reports_emitted: 0,
            trees_scanned: 0,
            invariant_violations: 0,
            complete: false,
        }
    }

    fn validate(&self, order: usize) -> Result<(), ScanError> {
        if self.order != order {
            return Err(ScanError::CorruptCheckpoint(format!(
                "checkpoint is for order {}, scan requested order {order}",
                self.order
            )));
        }
        match &self.generator_cursor {
            Some(cursor) if cursor.0.len() != order || !cursor.is_valid() => Err(ScanError::CorruptCheckpoint(format!(
                "cursor [{cursor}] is not a level sequence of order {order}"
            ))),
            None if self.trees_scanned != 0 => Err(ScanError::CorruptCheckpoint(
                "no cursor but trees_scanned is nonzero".into(),
            )),
            _ if self.reports_emitted > self.trees_scanned => Err(ScanError::CorruptCheckpoint(
                "more reports than scanned trees".into(),
            )),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub n: usize,
    pub trees_scanned: u64,
    pub critical_count: u64,
    /// Seconds spent in this invocation.
    pub wall_time: f64,
    pub complete: bool,
    pub invariant_violations: u64,
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    /// Worker threads; 1 runs inline.
    pub jobs: usize,
    /// Trees per batch, which is also the checkpoint interval.
    pub batch_size: usize,
    /// Stop after the first batch that ends past this much wall time.
    pub budget: Option<Duration>,
    pub solver: SolverOptions,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            jobs: 1,
            batch_size: 10_000,
            budget: None,
            solver: SolverOptions::default(),
        }
    }
}

/// Receives critical reports and checkpoints as the scan progresses.
pub trait ScanSink {
    fn report(&mut self, report: &CriticalityReport) -> io::Result<()>;

    fn checkpoint(&mut self, _checkpoint: &ScanCheckpoint) -> io::Result<()> {
        Ok(())
    }
}

impl ScanSink for Vec<CriticalityReport> {
    fn report(&mut self, report: &CriticalityReport) -> io::Result<()> {
        self.push(report.clone());
        Ok(())
    }
}

struct Outcome {
    report: Option<CriticalityReport>,
    violation: bool,
}

fn analyze_tree(
    solver: &mut Option<Solver>,
    options: SolverOptions,
    levels: &LevelSequence,
) -> Result<Outcome, ScanError> {
    let g: Graph = levels.to_graph()?;
    let solver = match solver {
        Some(s) => {
            s.reset(g);
            s
        }
        None => solver.insert(Solver::with_options(g, options)),
    };
    let report = analyze_with(solver)?;
    let violation = !report.invariant_violations(true).is_empty();
    Ok(Outcome {
        report: report.is_critical.then_some(report),
        violation,
    })
}

/// Scan every free tree on `n` vertices, or those after `resume`'s cursor.
pub fn scan_critical_trees(
    n: usize,
    resume: Option<ScanCheckpoint>,
    options: &ScanOptions,
    sink: &mut dyn ScanSink,
) -> Result<ScanSummary, ScanError> {
    let started = Instant::now();
    if n == 0 || n > MAX_ORDER {
        return Err(GraphError::Size { order: n, cap: MAX_ORDER }.into());
    }
    let mut state = match resume {
        Some(cp) => {
            cp.validate(n)?;
            cp
        }
        None => ScanCheckpoint::start(n),
    };
    let mut trees = match (&state.generator_cursor, state.complete) {
        (_, true) => None,
        (Some(cursor), false) => Some(FreeTrees::resume_after(cursor)?),
        (None, false) => Some(FreeTrees::new(n)?),
    };
    let pool = if options.jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(options.jobs)
                .build()
                .map_err(|e| ScanError::Pool(e.to_string()))?,
        )
    } else {
        None
    };
    let mut inline_solver = None;
    let batch_size = options.batch_size.max(1);

    while let Some(gen) = trees.as_mut() {
        let batch: Vec<LevelSequence> = gen.by_ref().take(batch_size).collect();
        if batch.is_empty() {
            state.complete = true;
            sink.checkpoint(&state)?;
            break;
        }
        let outcomes: Vec<Outcome> = match &pool {
            Some(pool) => pool.install(|| {
                batch
                    .par_iter()
                    .map_init(|| None, |s, l| analyze_tree(s, options.solver, l))
                    .collect::<Result<Vec<_>, _>>()
            })?,
            None => batch
                .iter()
                .map(|l| analyze_tree(&mut inline_solver, options.solver, l))
                .collect::<Result<Vec<_>, _>>()?,
        };
        let mut reports = Vec::new();
        for o in outcomes {
            state.invariant_violations += o.violation as u64;
            reports.extend(o.report);
        }
        reports.sort_by(|a, b| a.graph_g6.cmp(&b.graph_g6));
        for r in &reports {
            sink.report(r)?;
        }
        state.reports_emitted += reports.len() as u64;
        state.trees_scanned += batch.len() as u64;
        state.generator_cursor = batch.last().cloned();
        let exhausted = batch.len() < batch_size;
        if exhausted {
            state.complete = true;
            trees = None;
        }
        sink.checkpoint(&state)?;
        if !exhausted && options.budget.is_some_and(|b| started.elapsed() >= b) {
            break;
        }
    }

    Ok(ScanSummary {
        n,
        trees_scanned: state.trees_scanned,
        critical_count: state.reports_emitted,
        wall_time: started.elapsed().as_secs_f64(),
        complete: state.complete,
        invariant_violations: state.invariant_violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Default)]
    struct Recorder {
        reports: Vec<CriticalityReport>,
        checkpoints: Vec<ScanCheckpoint>,
    }

    impl ScanSink for Recorder {
        fn report(&mut self, report: &CriticalityReport) -> io::Result<()> {
            self.reports.push(report.clone());
            Ok(())
        }

        fn checkpoint(&mut self, cp: &ScanCheckpoint) -> io::Result<()> {
            self.checkpoints.push(cp.clone());
            Ok(())
        }
    }

    #[test]
    fn small_orders_have_no_critical_trees_except_k1() {
        let mut out = Vec::new();
        let s = scan_critical_trees(1, None, &ScanOptions::default(), &mut out).unwrap();
        assert_eq!((s.trees_scanned, s.critical_count), (1, 1));
        for n in 2..=10 {
            let mut out = Vec::new();
            let s = scan_critical_trees(n, None, &ScanOptions::default(), &mut out).unwrap();
            assert_eq!(s.critical_count, 0, "n = {n}");
            assert!(s.complete);
            assert_eq!(s.invariant_violations, 0);
        }
    }

    #[test]
    fn resume_from_every_checkpoint() {
        let opts = ScanOptions {
            batch_size: 97,
            ..ScanOptions::default()
        };
        let mut full = Recorder::default();
        let summary = scan_critical_trees(13, None, &opts, &mut full).unwrap();
        assert_eq!(summary.trees_scanned, 1301);
        assert_eq!(summary.critical_count, 2);
        for cp in &full.checkpoints {
            let before = full.reports.len() - (summary.critical_count - cp.reports_emitted) as usize;
            let mut rest = Recorder::default();
            let s = scan_critical_trees(13, Some(cp.clone()), &opts, &mut rest).unwrap();
            assert_eq!(s.trees_scanned, 1301);
            assert_eq!(s.critical_count, 2);
            assert_eq!(rest.reports, full.reports[before..]);
        }
    }

    #[test]
    fn parallel_matches_inline() {
        let mut a = Vec::new();
        let mut b = Vec::new();
        let inline = scan_critical_trees(13, None, &ScanOptions::default(), &mut a).unwrap();
        let par = ScanOptions {
            jobs: 3,
            batch_size: 200,
            ..ScanOptions::default()
        };
        let parallel = scan_critical_trees(13, None, &par, &mut b).unwrap();
        assert_eq!(inline.critical_count, parallel.critical_count);
        let fast = ScanOptions {
            solver: SolverOptions::FAST,
            ..par
        };
        let mut c = Vec::new();
        scan_critical_trees(13, None, &fast, &mut c).unwrap();
        c.sort_by(|x, y| x.graph_g6.cmp(&y.graph_g6));
        assert_eq!(a, c);
        a.sort_by(|x, y| x.graph_g6.cmp(&y.graph_g6));
        b.sort_by(|x, y| x.graph_g6.cmp(&y.graph_g6));
        assert_eq!(a, b);
    }

    #[test]
    fn budget_stops_early() {
        let opts = ScanOptions {
            batch_size: 50,
            budget: Some(Duration::ZERO),
            ..ScanOptions::default()
        };
        let mut rec = Recorder::default();
        let s = scan_critical_trees(12, None, &opts, &mut rec).unwrap();
        assert!(!s.complete);
        assert_eq!(s.trees_scanned, 50);
        let cp = rec.checkpoints.last().unwrap().clone();
        assert!(!cp.complete);
        let s = scan_critical_trees(12, Some(cp), &ScanOptions::default(), &mut rec).unwrap();
        assert!(s.complete);
        assert_eq!(s.trees_scanned, 551);
    }

    #[test]
    fn corrupt_checkpoints() {
        let mut out = Vec::new();
        let opts = ScanOptions::default();
        let wrong_order = ScanCheckpoint::start(9);
        assert!(matches!(
            scan_critical_trees(8, Some(wrong_order), &opts, &mut out),
            Err(ScanError::CorruptCheckpoint(_))
        ));
        let bad_cursor = ScanCheckpoint {
            generator_cursor: Some(LevelSequence(vec![0, 2, 1, 1, 1, 1, 1, 1])),
            trees_scanned: 3,
            ..ScanCheckpoint::start(8)
        };
        assert!(matches!(
            scan_critical_trees(8, Some(bad_cursor), &opts, &mut out),
            Err(ScanError::CorruptCheckpoint(_))
        ));
        let short_cursor = ScanCheckpoint {
            generator_cursor: Some(LevelSequence(vec![0, 1])),
            trees_scanned: 3,
            ..ScanCheckpoint::start(8)
        };
        assert!(scan_critical_trees(8, Some(short_cursor), &opts, &mut out).is_err());
        let done = ScanCheckpoint {
            complete: true,
            trees_scanned: 23,
            generator_cursor: Some(LevelSequence(vec![0, 1, 1, 1, 1, 1, 1, 1])),
            ..ScanCheckpoint::start(8)
        };
        let s = scan_critical_trees(8, Some(done), &opts, &mut out).unwrap();
        assert!(s.complete);
        assert_eq!(s.trees_scanned, 23);
    }
}
