use serde::{Deserialize, Serialize};

use super::analyze_with;
use crate::graph::{build_spider, emit_graph6};
use crate::lemmas::{Classification, LemmaError};
use crate::solver::{GameValue, Solver};

/// Whether `T_{p,q,r}` is `(2(p+q+r)+1)`-`γ_g`-critical with equal `γ_g'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderVerdict {
    pub legs: [usize; 3],
    pub graph_g6: String,
    pub order: usize,
    pub expected: GameValue,
    pub gamma_g: GameValue,
    pub gamma_g_prime: GameValue,
    pub is_critical: bool,
    pub classification: Classification,
    pub holds: bool,
}

pub fn verify_spider(p: usize, q: usize, r: usize) -> Result<SpiderVerdict, LemmaError> {
    if p == 0 || q == 0 || r == 0 {
        return Err(LemmaError::Precondition(format!(
            "spider legs must all be positive, got ({p}, {q}, {r})"
        )));
    }
    let g = build_spider(p, q, r)?;
    let order = g.order();
    let report = analyze_with(&mut Solver::new(g.clone()))?;
    let expected = GameValue(2 * (p + q + r) as u32 + 1);
    Ok(SpiderVerdict {
        legs: [p, q, r],
        graph_g6: emit_graph6(&g),
        order,
        expected,
        gamma_g: report.gamma_g,
        gamma_g_prime: report.gamma_g_prime,
        is_critical: report.is_critical,
        classification: report.classification,
        holds: report.gamma_g == expected && report.gamma_g_prime == expected && report.is_critical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_spider() {
        let v = verify_spider(1, 1, 1).unwrap();
        assert_eq!(v.gamma_g, GameValue(7));
        assert_eq!(v.gamma_g_prime, GameValue(7));
        assert!(v.is_critical);
        assert!(v.holds);
        assert_eq!(v.order, 13);
    }

    #[test]
    fn needs_positive_legs() {
        assert!(matches!(verify_spider(0, 1, 1), Err(LemmaError::Precondition(_))));
        assert!(verify_spider(6, 5, 5).is_err());
    }
}
