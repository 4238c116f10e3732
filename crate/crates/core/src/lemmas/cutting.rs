//! Checks around the cut transform `G_uv`.

use serde::{Deserialize, Serialize};

use super::{plus, Instance, LemmaError, LemmaVerdict};
use crate::graph::{cut_edge, emit_graph6, Graph, GraphError, VertexSet};
use crate::solver::Solver;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InclusionBranch {
    /// `C ⊆ B`.
    CSubsetB,
    /// `{u, v} ⊆ C` and `C \ B = {w}` for some `w ∈ {u, v}`.
    SingletonW,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InclusionWitness {
    pub edge: (usize, usize),
    pub b: VertexSet,
    pub c: VertexSet,
    pub satisfied: bool,
    /// The branch that fired; `None` when neither did.
    pub branch: Option<InclusionBranch>,
}

impl InclusionWitness {
    /// The vertex `w` of the second branch.
    pub fn w(&self) -> Option<usize> {
        (self.branch == Some(InclusionBranch::SingletonW)).then(|| self.c.difference(self.b).first().unwrap())
    }
}

/// Evaluate the `{u,v}`-inclusion property of `(B, C)`.
pub fn check_inclusion_property(u: usize, v: usize, b: VertexSet, c: VertexSet) -> InclusionWitness {
    let uv: VertexSet = [u, v].into_iter().collect();
    let extra = c.difference(b);
    let branch = if c.is_subset(b) {
        Some(InclusionBranch::CSubsetB)
    } else if uv.is_subset(c) && extra.len() == 1 && extra.is_subset(uv) {
        Some(InclusionBranch::SingletonW)
    } else {
        None
    };
    InclusionWitness {
        edge: (u, v),
        b,
        c,
        satisfied: branch.is_some(),
        branch,
    }
}

fn require_subset(inner: VertexSet, outer: VertexSet, what: &str) -> Result<(), LemmaError> {
    if inner.is_subset(outer) {
        Ok(())
    } else {
        Err(LemmaError::Precondition(format!("{what}: {inner:?} is not a subset of {outer:?}")))
    }
}

/// Solvers for a graph `G` and its cut `G_uv` along one edge, shared across
/// many dominated-set samples.
pub struct EdgeCut<'a> {
    base: &'a mut Solver,
    cut: Solver,
    u: usize,
    v: usize,
    pendants: VertexSet,
    graph6: String,
}

impl<'a> EdgeCut<'a> {
    pub fn new(base: &'a mut Solver, u: usize, v: usize) -> Result<EdgeCut<'a>, LemmaError> {
        let cut_state = cut_edge(base.graph(), u, v, VertexSet::EMPTY)?;
        let graph6 = emit_graph6(base.graph());
        let (cut_graph, pendants) = cut_state.into_parts();
        Ok(EdgeCut {
            base,
            cut: Solver::new(cut_graph),
            u,
            v,
            pendants,
            graph6,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.base.graph()
    }

    pub fn cut_graph(&self) -> &Graph {
        self.cut.graph()
    }

    fn instance(&self, a: Option<VertexSet>, b: Option<VertexSet>, c: Option<VertexSet>) -> Instance {
        Instance {
            graph: Some(self.graph6.clone()),
            edge: Some((self.u, self.v)),
            a,
            b,
            c,
            ..Instance::default()
        }
    }

    fn check_in_graph(&self, set: VertexSet, name: &str) -> Result<(), LemmaError> {
        let order = self.base.graph().order();
        match set.difference(VertexSet::full(order)).first() {
            Some(x) => Err(LemmaError::Precondition(format!(
                "{name}: {}",
                GraphError::VertexOutOfRange { vertex: x, order }
            ))),
            None => Ok(()),
        }
    }

    /// `γ_g(G|A) ≤ γ_g(G_uv|B)` and `γ_g'(G|A) ≤ γ_g'(G_uv|B)` for `B ⊆ A`.
    pub fn cutting(&mut self, a: VertexSet, b: VertexSet) -> Result<[LemmaVerdict; 2], LemmaError> {
        self.check_in_graph(a, "A")?;
        require_subset(b, a, "B ⊆ A")?;
        let inst = self.instance(Some(a), Some(b), None);
        let cut_b = b.union(self.pendants);
        Ok([
            LemmaVerdict::le("cutting:d", &inst, self.base.gamma_g(a), self.cut.gamma_g(cut_b)),
            LemmaVerdict::le("cutting:s", &inst, self.base.gamma_g_prime(a), self.cut.gamma_g_prime(cut_b)),
        ])
    }

    /// Both chains for `C ⊆ B ⊆ A`, plus the corollary's `+2` bounds:
    ///
    /// (a) `γ_g(G|A) ≤ γ_g(G_uv|B) ≤ γ_g^sp(G|C) + 1`, and `≤ γ_g(G|C) + 2`;
    /// (b) the same with Staller starting.
    pub fn extended(&mut self, a: VertexSet, b: VertexSet, c: VertexSet) -> Result<Vec<LemmaVerdict>, LemmaError> {
        self.check_in_graph(a, "A")?;
        require_subset(b, a, "B ⊆ A")?;
        require_subset(c, b, "C ⊆ B")?;
        let inst = self.instance(Some(a), Some(b), Some(c));
        let cut_b = b.union(self.pendants);
        let middle_d = self.cut.gamma_g(cut_b);
        let middle_s = self.cut.gamma_g_prime(cut_b);
        Ok(vec![
            LemmaVerdict::le("extended-cutting:a.left", &inst, self.base.gamma_g(a), middle_d),
            LemmaVerdict::le("extended-cutting:a.right", &inst, middle_d, plus(self.base.gamma_g_sp(c), 1)),
            LemmaVerdict::le("extended-cutting:a.corollary", &inst, middle_d, plus(self.base.gamma_g(c), 2)),
            LemmaVerdict::le("extended-cutting:b.left", &inst, self.base.gamma_g_prime(a), middle_s),
            LemmaVerdict::le("extended-cutting:b.right", &inst, middle_s, plus(self.base.gamma_g_sp_prime(c), 1)),
            LemmaVerdict::le("extended-cutting:b.corollary", &inst, middle_s, plus(self.base.gamma_g_prime(c), 2)),
        ])
    }

    /// With `{u, v} ⊆ C ⊆ B`: `γ_g(G_uv|B) ≤ γ_g(G|C)`, and likewise `γ_g'`.
    pub fn predominated(&mut self, b: VertexSet, c: VertexSet) -> Result<[LemmaVerdict; 2], LemmaError> {
        self.check_in_graph(b, "B")?;
        let uv: VertexSet = [self.u, self.v].into_iter().collect();
        require_subset(uv, c, "{u, v} ⊆ C")?;
        require_subset(c, b, "C ⊆ B")?;
        let inst = self.instance(None, Some(b), Some(c));
        let cut_b = b.union(self.pendants);
        Ok([
            LemmaVerdict::le("predominated-cut:d", &inst, self.cut.gamma_g(cut_b), self.base.gamma_g(c)),
            LemmaVerdict::le("predominated-cut:s", &inst, self.cut.gamma_g_prime(cut_b), self.base.gamma_g_prime(c)),
        ])
    }

    /// For `(B, C)` with the `{u,v}`-inclusion property:
    /// `γ_g(G_uv|B) ≤ 1 + γ_g^sp(G|C)` and `γ_g'(G_uv|B) ≤ 1 + γ_g'^sp(G|C)`.
    pub fn pass_lemma(&mut self, b: VertexSet, c: VertexSet) -> Result<[LemmaVerdict; 2], LemmaError> {
        self.check_in_graph(b, "B")?;
        self.check_in_graph(c, "C")?;
        let witness = check_inclusion_property(self.u, self.v, b, c);
        if !witness.satisfied {
            let reason = if c.difference(b).len() != 1 {
                format!("C \\ B = {:?} is neither empty nor a singleton", c.difference(b))
            } else if !c.contains(self.u) || !c.contains(self.v) {
                "C ⊄ B and {u, v} ⊄ C".to_string()
            } else {
                format!("C \\ B = {:?} is not one of u, v", c.difference(b))
            };
            return Err(LemmaError::Inclusion {
                u: self.u,
                v: self.v,
                b,
                c,
                reason,
            });
        }
        let inst = self.instance(None, Some(b), Some(c));
        let cut_b = b.union(self.pendants);
        Ok([
            LemmaVerdict::le("pass:d", &inst, self.cut.gamma_g(cut_b), plus(self.base.gamma_g_sp(c), 1)),
            LemmaVerdict::le("pass:s", &inst, self.cut.gamma_g_prime(cut_b), plus(self.base.gamma_g_sp_prime(c), 1)),
        ])
    }
}

fn with_cut<T>(
    g: &Graph,
    u: usize,
    v: usize,
    f: impl FnOnce(&mut EdgeCut<'_>) -> Result<T, LemmaError>,
) -> Result<T, LemmaError> {
    let mut base = Solver::new(g.clone());
    let mut cut = EdgeCut::new(&mut base, u, v)?;
    f(&mut cut)
}

pub fn check_cutting_lemma(
    g: &Graph,
    u: usize,
    v: usize,
    a: VertexSet,
    b: VertexSet,
) -> Result<[LemmaVerdict; 2], LemmaError> {
    with_cut(g, u, v, |cut| cut.cutting(a, b))
}

pub fn check_extended_cutting(
    g: &Graph,
    u: usize,
    v: usize,
    a: VertexSet,
    b: VertexSet,
    c: VertexSet,
) -> Result<Vec<LemmaVerdict>, LemmaError> {
    with_cut(g, u, v, |cut| cut.extended(a, b, c))
}

pub fn check_predominated_cut(
    g: &Graph,
    u: usize,
    v: usize,
    b: VertexSet,
    c: VertexSet,
) -> Result<[LemmaVerdict; 2], LemmaError> {
    with_cut(g, u, v, |cut| cut.predominated(b, c))
}

pub fn check_pass_lemma(
    g: &Graph,
    u: usize,
    v: usize,
    b: VertexSet,
    c: VertexSet,
) -> Result<[LemmaVerdict; 2], LemmaError> {
    with_cut(g, u, v, |cut| cut.pass_lemma(b, c))
}
