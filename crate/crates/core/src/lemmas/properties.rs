//! General facts about game values: monotonicity in the dominated set, the
//! one-move gap between the D- and S-game, pass games on forests, and
//! lower bounds on `γ_g(G|u)`.

use super::{plus, Instance, LemmaError, LemmaVerdict};
use crate::graph::{build_path_component, disjoint_union, emit_graph6, PartialState, PathComponent, VertexSet};
use crate::solver::{GameValue, Solver};

fn graph_instance(solver: &Solver) -> Instance {
    Instance {
        graph: Some(emit_graph6(solver.graph())),
        ..Instance::default()
    }
}

fn check_in_graph(solver: &Solver, set: VertexSet, name: &str) -> Result<(), LemmaError> {
    if set.is_subset(solver.graph().vertices()) {
        Ok(())
    } else {
        Err(LemmaError::Precondition(format!("{name} = {set:?} reaches past the graph order")))
    }
}

/// For `B ⊆ A`: `γ_g(G|A) ≤ γ_g(G|B)` and `γ_g'(G|A) ≤ γ_g'(G|B)`.
pub fn check_continuation(solver: &mut Solver, a: VertexSet, b: VertexSet) -> Result<[LemmaVerdict; 2], LemmaError> {
    check_in_graph(solver, a, "A")?;
    if !b.is_subset(a) {
        return Err(LemmaError::Precondition(format!("B ⊆ A: {b:?} is not a subset of {a:?}")));
    }
    let inst = Instance {
        a: Some(a),
        b: Some(b),
        ..graph_instance(solver)
    };
    Ok([
        LemmaVerdict::le("continuation:d", &inst, solver.gamma_g(a), solver.gamma_g(b)),
        LemmaVerdict::le("continuation:s", &inst, solver.gamma_g_prime(a), solver.gamma_g_prime(b)),
    ])
}

/// `|γ_g(G|S) - γ_g'(G|S)| ≤ 1`.
pub fn check_neighbor_bound(solver: &mut Solver, s: VertexSet) -> Result<LemmaVerdict, LemmaError> {
    check_in_graph(solver, s, "S")?;
    let inst = Instance {
        s: Some(s),
        ..graph_instance(solver)
    };
    let (d, st) = (solver.gamma_g(s), solver.gamma_g_prime(s));
    Ok(LemmaVerdict::le("neighbor-bound", &inst, GameValue(d.0.abs_diff(st.0)), GameValue(1)))
}

/// `γ_g^sp(G|S) ≤ γ_g(G|S) + 1`, for any graph.
pub fn check_pass_bound(solver: &mut Solver, s: VertexSet) -> Result<LemmaVerdict, LemmaError> {
    check_in_graph(solver, s, "S")?;
    let inst = Instance {
        s: Some(s),
        ..graph_instance(solver)
    };
    Ok(LemmaVerdict::le("pass-bound", &inst, solver.gamma_g_sp(s), plus(solver.gamma_g(s), 1)))
}

/// On a forest `F`: `γ_g(F|S) ≤ γ_g'(F|S)` and
/// `γ_g^sp(F|S) = γ_g^dp(F|S) = γ_g(F|S)`.
pub fn check_no_minus_forest(solver: &mut Solver, s: VertexSet) -> Result<Vec<LemmaVerdict>, LemmaError> {
    if !solver.graph().is_forest() {
        return Err(LemmaError::Precondition("graph is not a forest".into()));
    }
    check_in_graph(solver, s, "S")?;
    let inst = Instance {
        s: Some(s),
        ..graph_instance(solver)
    };
    let d = solver.gamma_g(s);
    Ok(vec![
        LemmaVerdict::le("no-minus", &inst, d, solver.gamma_g_prime(s)),
        LemmaVerdict::eq("no-minus:sp-equals-d", &inst, solver.gamma_g_sp(s), d),
        LemmaVerdict::eq("no-minus:dp-equals-d", &inst, solver.gamma_g_dp(s), d),
    ])
}

/// `γ_g(G) ≤ γ_g(G|u) + 2`, tightened to `+ 1` when the caller has verified
/// that `G` is no-minus.
pub fn check_criticality_bound(solver: &mut Solver, u: usize, no_minus: bool) -> Result<LemmaVerdict, LemmaError> {
    if u >= solver.graph().order() {
        return Err(LemmaError::Precondition(format!("vertex {u} outside the graph")));
    }
    let inst = Instance {
        vertex: Some(u),
        ..graph_instance(solver)
    };
    let (id, slack) = if no_minus {
        ("criticality:no-minus", 1)
    } else {
        ("criticality:general", 2)
    };
    let base = solver.gamma_g(VertexSet::EMPTY);
    let at_u = solver.gamma_g(VertexSet::singleton(u));
    Ok(LemmaVerdict::le(id, &inst, base, plus(at_u, slack)))
}

/// `γ_g(G ∪ P'_n) = γ_g(G ∪ P''_n)`, and the same for `γ_g'`.
pub fn check_interchange(base: &PartialState, n: usize) -> Result<[LemmaVerdict; 2], LemmaError> {
    let with_prime = disjoint_union(base, &build_path_component(PathComponent::prime(n))?)?;
    let with_double = disjoint_union(base, &build_path_component(PathComponent::double_prime(n))?)?;
    let inst = Instance {
        graph: Some(emit_graph6(base.graph())),
        s: Some(base.dominated()),
        components: Some(vec![PathComponent::prime(n), PathComponent::double_prime(n)]),
        ..Instance::default()
    };
    let (gp, dp) = with_prime.into_parts();
    let (gd, dd) = with_double.into_parts();
    let mut sp = Solver::new(gp);
    let mut sd = Solver::new(gd);
    Ok([
        LemmaVerdict::eq("interchange:d", &inst, sp.gamma_g(dp), sd.gamma_g(dd)),
        LemmaVerdict::eq("interchange:s", &inst, sp.gamma_g_prime(dp), sd.gamma_g_prime(dd)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_path, Graph};

    #[test]
    fn small_cases() {
        let mut s = Solver::new(build_path(4).unwrap());
        assert!(check_continuation(&mut s, VertexSet::from_bits(0b11), VertexSet::from_bits(0b1)).unwrap().iter().all(|v| v.holds));
        assert!(check_continuation(&mut s, VertexSet::from_bits(0b1), VertexSet::from_bits(0b11)).is_err());
        assert!(check_neighbor_bound(&mut s, VertexSet::EMPTY).unwrap().holds);
        assert!(check_pass_bound(&mut s, VertexSet::EMPTY).unwrap().holds);
        assert!(check_no_minus_forest(&mut s, VertexSet::EMPTY).unwrap().iter().all(|v| v.holds));
        for u in 0..4 {
            assert!(check_criticality_bound(&mut s, u, true).unwrap().holds);
        }
        assert!(check_criticality_bound(&mut s, 4, false).is_err());
    }

    #[test]
    fn no_minus_needs_a_forest() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(check_no_minus_forest(&mut Solver::new(c4), VertexSet::EMPTY).is_err());
    }

    #[test]
    fn interchange_on_path() {
        let base = PartialState::fresh(build_path(3).unwrap());
        for n in 0..=5 {
            assert!(check_interchange(&base, n).unwrap().iter().all(|v| v.holds));
        }
    }
}
