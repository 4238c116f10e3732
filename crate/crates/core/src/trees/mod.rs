//! Free trees: enumeration, canonical forms, criticality scans and the
//! spider family.

mod analyze;
mod canonical;
mod enumerate;
mod scan;
mod spider;

pub use analyze::{analyze, analyze_with, CriticalityReport};
pub use canonical::{tree_canonical_form, tree_centers, tree_vertex_orbits};
pub use enumerate::{enumerate_free_trees, FreeTrees, LevelSequence};
pub use scan::{scan_critical_trees, ScanCheckpoint, ScanError, ScanOptions, ScanSink, ScanSummary};
pub use spider::{verify_spider, SpiderVerdict};
