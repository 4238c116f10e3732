use serde::{Deserialize, Serialize};

use super::LemmaError;
use crate::graph::{Graph, VertexSet};
use crate::solver::{GameValue, Solver};

/// How `γ_g'` compares with `γ_g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// `γ_g' = γ_g + 1`.
    Plus,
    Equal,
    /// `γ_g' = γ_g - 1`.
    Minus,
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::Plus => "plus",
            Classification::Equal => "equal",
            Classification::Minus => "minus",
        })
    }
}

/// Any other gap is impossible and reported as a solver inconsistency.
pub fn classify_values(gamma_g: GameValue, gamma_g_prime: GameValue) -> Result<Classification, LemmaError> {
    match gamma_g_prime.0 as i64 - gamma_g.0 as i64 {
        1 => Ok(Classification::Plus),
        0 => Ok(Classification::Equal),
        -1 => Ok(Classification::Minus),
        _ => Err(LemmaError::Inconsistent { gamma_g, gamma_g_prime }),
    }
}

pub fn classify(g: &Graph) -> Result<Classification, LemmaError> {
    let mut solver = Solver::new(g.clone());
    classify_values(solver.gamma_g(VertexSet::EMPTY), solver.gamma_g_prime(VertexSet::EMPTY))
}

/// `γ_g(G|S) ≤ γ_g'(G|S)` for every `S`, checked over all `2^n` subsets.
pub fn is_no_minus(solver: &mut Solver) -> bool {
    let order = solver.graph().order();
    assert!(order < 32, "exhaustive subset check is limited to small graphs");
    (0..1u64 << order).all(|bits| {
        let s = VertexSet::from_bits(bits);
        solver.gamma_g(s) <= solver.gamma_g_prime(s)
    })
}
