use serde::{Deserialize, Serialize};

use crate::graph::{emit_graph6, Graph, VertexSet};
use crate::lemmas::{classify_values, Classification, LemmaError};
use crate::solver::{GameValue, Solver};

use super::tree_vertex_orbits;

/// Game values of a graph and of every single-vertex predomination.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub graph_g6: String,
    pub gamma_g: GameValue,
    pub gamma_g_prime: GameValue,
    /// `γ_g(G|v)` for each vertex `v`.
    pub per_vertex: Vec<GameValue>,
    pub classification: Classification,
    /// `γ_g(G|v) < γ_g(G)` for every `v`.
    pub is_critical: bool,
}

impl CriticalityReport {
    /// Bounds every report must satisfy: `γ_g(G|v) ≤ γ_g(G)` always,
    /// `γ_g(G|v) ≥ γ_g(G) - 2` in general (`- 1` when `tree`), and a
    /// critical graph is never a plus graph. Returns the violated ones.
    pub fn invariant_violations(&self, tree: bool) -> Vec<String> {
        let mut out = Vec::new();
        let slack = if tree { 1 } else { 2 };
        for (v, &x) in self.per_vertex.iter().enumerate() {
            if x > self.gamma_g {
                out.push(format!("gamma_g(G|{v}) = {x} exceeds gamma_g = {}", self.gamma_g));
            }
            if x.0 + slack < self.gamma_g.0 {
                out.push(format!("gamma_g(G|{v}) = {x} below gamma_g - {slack}"));
            }
        }
        if self.is_critical && self.classification == Classification::Plus {
            out.push("critical graph classified plus".into());
        }
        if self.is_critical != self.per_vertex.iter().all(|&x| x < self.gamma_g) {
            out.push("is_critical disagrees with per_vertex".into());
        }
        out
    }
}

/// Fill a report using `solver`'s graph; all values share one table. On
/// trees, vertices in one automorphism orbit are solved once.
pub fn analyze_with(solver: &mut Solver) -> Result<CriticalityReport, LemmaError> {
    let gamma_g = solver.gamma_g(VertexSet::EMPTY);
    let gamma_g_prime = solver.gamma_g_prime(VertexSet::EMPTY);
    let n = solver.graph().order();
    let orbit = tree_vertex_orbits(solver.graph()).unwrap_or_else(|| (0..n).collect());
    let mut per_vertex: Vec<GameValue> = Vec::with_capacity(n);
    for (v, &rep) in orbit.iter().enumerate() {
        let value = match rep {
            rep if rep < v => per_vertex[rep],
            _ => solver.gamma_g(VertexSet::singleton(v)),
        };
        per_vertex.push(value);
    }
    let classification = classify_values(gamma_g, gamma_g_prime)?;
    Ok(CriticalityReport {
        graph_g6: emit_graph6(solver.graph()),
        gamma_g,
        gamma_g_prime,
        is_critical: per_vertex.iter().all(|&x| x < gamma_g),
        per_vertex,
        classification,
    })
}

pub fn analyze(g: &Graph) -> Result<CriticalityReport, LemmaError> {
    analyze_with(&mut Solver::new(g.clone()))
}
