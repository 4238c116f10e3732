use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, PartialState, VertexSet, MAX_ORDER};

fn check_order(order: usize) -> Result<(), GraphError> {
    if order == 0 || order > MAX_ORDER {
        Err(GraphError::Size { order, cap: MAX_ORDER })
    } else {
        Ok(())
    }
}

/// `P_n` with vertices `0..n` in path order.
pub fn build_path(n: usize) -> Result<Graph, GraphError> {
    check_order(n)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathKind {
    /// `P'_n`: a path on `n + 1` vertices with one leaf dominated.
    Prime,
    /// `P''_n`: a path on `n + 2` vertices with both leaves dominated.
    DoublePrime,
}

/// A path with `n` undominated vertices and one or both ends pre-dominated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathComponent {
    pub kind: PathKind,
    pub n: usize,
}

impl PathComponent {
    pub const fn prime(n: usize) -> Self {
        PathComponent { kind: PathKind::Prime, n }
    }

    pub const fn double_prime(n: usize) -> Self {
        PathComponent {
            kind: PathKind::DoublePrime,
            n,
        }
    }

    /// Number of vertices of the realized path.
    pub const fn order(&self) -> usize {
        match self.kind {
            PathKind::Prime => self.n + 1,
            PathKind::DoublePrime => self.n + 2,
        }
    }
}

impl std::fmt::Display for PathComponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            PathKind::Prime => write!(f, "P'_{}", self.n),
            PathKind::DoublePrime => write!(f, "P''_{}", self.n),
        }
    }
}

/// Realize `P'_n` (vertex 0 dominated) or `P''_n` (vertices 0 and `n + 1`
/// dominated).
pub fn build_path_component(c: PathComponent) -> Result<PartialState, GraphError> {
    let order = c.order();
    let path = build_path(order)?;
    let mut dominated = VertexSet::singleton(0);
    if c.kind == PathKind::DoublePrime {
        dominated.insert(order - 1);
    }
    PartialState::new(path, dominated)
}

/// The spider with legs of `4p`, `4q` and `4r` edges joined at vertex 0.
///
/// Leg vertices are numbered outward from the center, first leg first. Legs
/// of length zero are allowed and simply absent, so `(0, 1, 1)` is `P_9`.
pub fn build_spider(p: usize, q: usize, r: usize) -> Result<Graph, GraphError> {
    let legs = [p, q, r].map(|k| k.saturating_mul(4));
    let order = legs
        .iter()
        .try_fold(1usize, |acc, &l| acc.checked_add(l))
        .unwrap_or(usize::MAX);
    check_order(order)?;
    let mut g = Graph::empty(order)?;
    let mut next = 1;
    for len in legs {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

/// The cut transform `G_uv`: delete `uv`, then attach new dominated pendants
/// `u' = order` to `v` and `v' = order + 1` to `u`.
pub fn cut_edge(g: &Graph, u: usize, v: usize, pre_dominated: VertexSet) -> Result<PartialState, GraphError> {
    if !g.has_edge(u, v) {
        return Err(GraphError::NotAnEdge { u, v });
    }
    let order = g.order();
    check_order(order + 2)?;
    let mut cut = Graph::empty(order + 2)?;
    for (a, b) in g.edges() {
        cut.add_edge(a, b)?;
    }
    cut.remove_edge(u, v);
    let (u_prime, v_prime) = (order, order + 1);
    cut.add_edge(u_prime, v)?;
    cut.add_edge(v_prime, u)?;
    // Validate against the original order so a stray bit cannot land on u'/v'.
    PartialState::new(g.clone(), pre_dominated)?;
    let dominated = pre_dominated.union(VertexSet::from_ids([u_prime, v_prime], order + 2)?);
    PartialState::new(cut, dominated)
}

/// Place `b` after `a`, shifting `b`'s ids by `a`'s order.
pub fn disjoint_union(a: &PartialState, b: &PartialState) -> Result<PartialState, GraphError> {
    let offset = a.graph().order();
    let order = offset + b.graph().order();
    if order > MAX_ORDER {
        return Err(GraphError::Size { order, cap: MAX_ORDER });
    }
    let mut g = Graph::empty(order)?;
    for (x, y) in a.graph().edges() {
        g.add_edge(x, y)?;
    }
    for (x, y) in b.graph().edges() {
        g.add_edge(x + offset, y + offset)?;
    }
    PartialState::new(g, a.dominated().union(b.dominated().shifted(offset)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ids: &[usize]) -> VertexSet {
        ids.iter().copied().collect()
    }

    #[test]
    fn paths() {
        assert_eq!(build_path(1).unwrap().closed_nbhd(0), set(&[0]));
        assert_eq!(build_path(2).unwrap().closed_nbhd(0), set(&[0, 1]));
        assert_eq!(build_path(4).unwrap().closed_nbhd(1), set(&[0, 1, 2]));
        assert!(matches!(build_path(0), Err(GraphError::Size { .. })));
        assert!(matches!(build_path(65), Err(GraphError::Size { .. })));
    }

    #[test]
    fn path_components() {
        let p0 = build_path_component(PathComponent::prime(0)).unwrap();
        assert_eq!(p0.graph().order(), 1);
        assert!(p0.is_game_over());
        let pp0 = build_path_component(PathComponent::double_prime(0)).unwrap();
        assert_eq!(pp0.graph().order(), 2);
        assert!(pp0.is_game_over());
        let p3 = build_path_component(PathComponent::prime(3)).unwrap();
        assert_eq!(p3.graph().order(), 4);
        assert_eq!(p3.dominated(), set(&[0]));
        assert_eq!(p3.undominated().len(), 3);
        assert!(build_path_component(PathComponent::prime(64)).is_err());
        for n in 0..20 {
            for c in [PathComponent::prime(n), PathComponent::double_prime(n)] {
                assert_eq!(build_path_component(c).unwrap().undominated().len(), n);
            }
        }
    }

    #[test]
    fn spiders() {
        let t = build_spider(1, 1, 1).unwrap();
        assert_eq!(t.order(), 13);
        assert!(t.is_tree());
        assert_eq!(t.degree(0), 3);
        assert_eq!(build_spider(0, 0, 0).unwrap().order(), 1);
        let p9 = build_spider(0, 1, 1).unwrap();
        assert_eq!(p9.order(), 9);
        assert!(p9.is_tree());
        assert_eq!((0..9).map(|v| p9.degree(v)).max(), Some(2));
        assert_eq!(build_spider(1, 0, 2).unwrap().degree(0), 2);
        assert!(build_spider(5, 5, 6).is_err());
        assert!(build_spider(usize::MAX, 1, 1).is_err());
    }

    #[test]
    fn cut_smallest() {
        let p2 = build_path(2).unwrap();
        let s = cut_edge(&p2, 0, 1, VertexSet::EMPTY).unwrap();
        let g = s.graph();
        assert_eq!(g.order(), 4);
        // u' = 2 hangs on v = 1, v' = 3 hangs on u = 0.
        assert!(g.has_edge(0, 3));
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(0, 1));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(s.dominated(), set(&[2, 3]));
    }

    #[test]
    fn cut_errors() {
        let p3 = build_path(3).unwrap();
        assert_eq!(
            cut_edge(&p3, 0, 2, VertexSet::EMPTY),
            Err(GraphError::NotAnEdge { u: 0, v: 2 })
        );
        assert!(cut_edge(&p3, 0, 1, set(&[3])).is_err());
        assert!(cut_edge(&build_path(63).unwrap(), 0, 1, VertexSet::EMPTY).is_err());
    }

    #[test]
    fn unions() {
        let pp0 = build_path_component(PathComponent::double_prime(0)).unwrap();
        let u = disjoint_union(&pp0, &pp0).unwrap();
        assert_eq!(u.graph().order(), 4);
        assert!(u.is_game_over());
        let a = build_path_component(PathComponent::prime(2)).unwrap();
        let b = build_path_component(PathComponent::prime(3)).unwrap();
        let u = disjoint_union(&a, &b).unwrap();
        assert_eq!(u.graph().order(), 7);
        assert_eq!(u.undominated().len(), 5);
        assert_eq!(u.dominated(), set(&[0, 3]));
        assert!(u.graph().has_edge(3, 4));
        assert!(!u.graph().has_edge(2, 3));
        let big = build_path_component(PathComponent::prime(40)).unwrap();
        assert!(disjoint_union(&big, &big).is_err());
    }
}
