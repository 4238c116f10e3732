use std::iter::Sum;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use super::{Instance, LemmaError, LemmaVerdict};
use crate::graph::{build_path_component, disjoint_union, GraphError, PathComponent, MAX_ORDER};
use crate::solver::{GameValue, Solver};

/// A non-negative multiple of 1/4, stored as the number of quarters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QuarterWeight(pub u32);

impl QuarterWeight {
    pub fn quarters(self) -> u32 {
        self.0
    }

    /// Smallest whole number of moves not below the weight.
    pub fn ceil_to_moves(self) -> GameValue {
        GameValue(self.0.div_ceil(4))
    }
}

impl Add for QuarterWeight {
    type Output = QuarterWeight;

    fn add(self, rhs: QuarterWeight) -> QuarterWeight {
        QuarterWeight(self.0 + rhs.0)
    }
}

impl Sum for QuarterWeight {
    fn sum<I: Iterator<Item = QuarterWeight>>(iter: I) -> QuarterWeight {
        iter.fold(QuarterWeight(0), Add::add)
    }
}

impl std::fmt::Display for QuarterWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.0 % 4 {
            0 => write!(f, "{}", self.0 / 4),
            2 => write!(f, "{}/2", self.0 / 2),
            _ => write!(f, "{}/4", self.0),
        }
    }
}

/// Weight of `P'_{4q+r}` or `P''_{4q+r}`: `2q` plus 0, 1, 3/2 or 7/4 for
/// `r = 0, 1, 2, 3`.
pub fn weight(c: PathComponent) -> QuarterWeight {
    const TAIL: [u32; 4] = [0, 4, 6, 7];
    let q = (c.n / 4) as u32;
    QuarterWeight(8 * q + TAIL[c.n % 4])
}

/// `γ_g'` of the disjoint union against the rounded-up total weight.
pub fn check_union_lemma(components: &[PathComponent]) -> Result<LemmaVerdict, LemmaError> {
    if components.is_empty() {
        return Err(LemmaError::Precondition("at least one component is required".into()));
    }
    if let Some(c) = components.iter().find(|c| c.n == 0) {
        return Err(LemmaError::Precondition(format!("{c} has no undominated vertex; components need n >= 1")));
    }
    let order: usize = components.iter().map(PathComponent::order).sum();
    if order > MAX_ORDER {
        return Err(GraphError::Size { order, cap: MAX_ORDER }.into());
    }
    let mut union = build_path_component(components[0])?;
    for &c in &components[1..] {
        union = disjoint_union(&union, &build_path_component(c)?)?;
    }
    let (graph, dominated) = union.into_parts();
    let lhs = Solver::new(graph).gamma_g_prime(dominated);
    let rhs = components.iter().copied().map(weight).sum::<QuarterWeight>().ceil_to_moves();
    let instance = Instance {
        components: Some(components.to_vec()),
        ..Instance::default()
    };
    Ok(LemmaVerdict::le("union", &instance, lhs, rhs))
}
