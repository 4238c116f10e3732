//! Executable checks of domination-game inequalities.
//!
//! Every check computes both sides with the solver and records the outcome
//! as a [`LemmaVerdict`]; a verdict with `holds == false` is a
//! counterexample.

mod batch;
mod classify;
pub mod corpus;
mod cutting;
mod properties;
mod weight;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{GraphError, PathComponent, VertexSet};
use crate::solver::GameValue;

pub use batch::{random_instances, run_instance, LemmaKind, VerdictBatch};
pub use classify::{classify, classify_values, is_no_minus, Classification};
pub use cutting::{
    check_cutting_lemma, check_extended_cutting, check_inclusion_property, check_pass_lemma, check_predominated_cut,
    EdgeCut, InclusionBranch, InclusionWitness,
};
pub use properties::{
    check_continuation, check_criticality_bound, check_interchange, check_neighbor_bound, check_no_minus_forest,
    check_pass_bound,
};
pub use weight::{check_union_lemma, weight, QuarterWeight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LemmaError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("({b:?}, {c:?}) fails the {{{u},{v}}}-inclusion property: {reason}")]
    Inclusion {
        u: usize,
        v: usize,
        b: VertexSet,
        c: VertexSet,
        reason: String,
    },
    #[error("solver returned gamma_g = {gamma_g}, gamma_g' = {gamma_g_prime}, which differ by more than one")]
    Inconsistent { gamma_g: GameValue, gamma_g_prime: GameValue },
}

/// The inputs a check was evaluated on. Only the fields a lemma uses are set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    /// graph6 encoding of the base graph.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edge: Option<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<VertexSet>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<PathComponent>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Relation {
    Le,
    Eq,
}

/// One evaluated inequality (or identity).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaVerdict {
    pub lemma_id: String,
    /// Seed of the batch that produced the instance, when sampled.
    pub seed: Option<u64>,
    pub instance: Instance,
    pub lhs: GameValue,
    pub rhs: GameValue,
    pub holds: bool,
}

impl LemmaVerdict {
    pub(crate) fn new(lemma_id: &str, instance: &Instance, lhs: GameValue, rel: Relation, rhs: GameValue) -> Self {
        let holds = match rel {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
        };
        LemmaVerdict {
            lemma_id: lemma_id.to_string(),
            seed: None,
            instance: instance.clone(),
            lhs,
            rhs,
            holds,
        }
    }

    pub(crate) fn le(lemma_id: &str, instance: &Instance, lhs: GameValue, rhs: GameValue) -> Self {
        Self::new(lemma_id, instance, lhs, Relation::Le, rhs)
    }

    pub(crate) fn eq(lemma_id: &str, instance: &Instance, lhs: GameValue, rhs: GameValue) -> Self {
        Self::new(lemma_id, instance, lhs, Relation::Eq, rhs)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

pub(crate) fn plus(v: GameValue, k: u32) -> GameValue {
    GameValue(v.0 + k)
}
