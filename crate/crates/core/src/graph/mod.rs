//! Simple undirected graphs on at most [`MAX_ORDER`] vertices, stored as one
//! closed-neighborhood bitset per vertex, and partially dominated positions on
//! top of them.

mod build;
mod format;
mod vertex_set;

use thiserror::Error;

pub use build::{build_path, build_path_component, build_spider, cut_edge, disjoint_union, PathComponent, PathKind};
pub use format::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
pub use vertex_set::VertexSet;

/// Hard cap on graph order; a [`VertexSet`] is one `u64`.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order {order} outside 1..={cap}")]
    Size { order: usize, cap: usize },
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{u}-{v} is not an edge")]
    NotAnEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    closed: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `order` vertices. `order` may be 0 here; the
    /// named constructors enforce a positive order where it matters.
    pub fn empty(order: usize) -> Result<Graph, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::Size { order, cap: MAX_ORDER });
        }
        Ok(Graph {
            closed: (0..order).map(VertexSet::singleton).collect(),
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let order = self.order();
        for x in [u, v] {
            if x >= order {
                return Err(GraphError::VertexOutOfRange { vertex: x, order });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.closed[u].insert(v);
        self.closed[v].insert(u);
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.closed[u].remove(v);
        self.closed[v].remove(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.closed.len()
    }

    /// All vertices, `{0, ..., order - 1}`.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// `N[v]`: `v` together with its neighbors.
    #[inline]
    pub fn closed_nbhd(&self, v: usize) -> VertexSet {
        self.closed[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        let mut n = self.closed[v];
        n.remove(v);
        n
    }

    pub fn closed_nbhds(&self) -> &[VertexSet] {
        &self.closed
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.closed[v].len() - 1
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.order() && v < self.order() && self.closed[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        let degree_sum: usize = (0..self.order()).map(|v| self.degree(v)).sum();
        degree_sum / 2
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.closed[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_of(0) == self.vertices()
    }

    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.is_connected() && self.edge_count() == self.order() - 1
    }

    /// Acyclic: every component is a tree.
    pub fn is_forest(&self) -> bool {
        let mut remaining = self.vertices();
        let mut components = 0;
        while let Some(v) = remaining.first() {
            remaining = remaining.difference(self.component_of(v));
            components += 1;
        }
        self.edge_count() + components == self.order()
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(self.order())?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// The adjacency invariants: reflexive, symmetric, nothing past the order.
    pub fn is_well_formed(&self) -> bool {
        let all = self.vertices();
        (0..self.order()).all(|v| {
            let n = self.closed[v];
            n.contains(v) && n.is_subset(all) && n.iter().all(|u| self.closed[u].contains(v))
        })
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, [", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// A graph together with the set of vertices already declared dominated.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialState {
    graph: Graph,
    dominated: VertexSet,
}

impl PartialState {
    pub fn new(graph: Graph, dominated: VertexSet) -> Result<PartialState, GraphError> {
        if let Some(v) = dominated.difference(graph.vertices()).first() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: graph.order(),
            });
        }
        Ok(PartialState { graph, dominated })
    }

    /// Nothing dominated yet.
    pub fn fresh(graph: Graph) -> PartialState {
        PartialState {
            graph,
            dominated: VertexSet::EMPTY,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn dominated(&self) -> VertexSet {
        self.dominated
    }

    pub fn undominated(&self) -> VertexSet {
        self.dominated.complement(self.graph.order())
    }

    pub fn is_game_over(&self) -> bool {
        self.dominated == self.graph.vertices()
    }

    /// The position after additionally dominating `extra`.
    pub fn with_dominated(&self, extra: VertexSet) -> Result<PartialState, GraphError> {
        PartialState::new(self.graph.clone(), self.dominated.union(extra))
    }

    pub fn into_parts(self) -> (Graph, VertexSet) {
        (self.graph, self.dominated)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn tree_tests() {
        assert!(build_path(5).unwrap().is_tree());
        assert!(!cycle(4).is_tree());
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_tree());
        assert!(two_edges.is_forest());
        assert!(!cycle(5).is_forest());
        assert!(Graph::empty(1).unwrap().is_tree());
        assert!(!Graph::empty(0).unwrap().is_tree());
    }

    #[test]
    fn edge_errors() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        ));
        assert!(Graph::empty(65).is_err());
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn partial_state_bounds() {
        let g = build_path(3).unwrap();
        assert!(PartialState::new(g.clone(), VertexSet::singleton(3)).is_err());
        let s = PartialState::new(g, VertexSet::full(3)).unwrap();
        assert!(s.is_game_over());
        assert!(s.undominated().is_empty());
    }

    #[test]
    fn edges_and_counts() {
        let c = cycle(5);
        assert_eq!(c.edge_count(), 5);
        assert_eq!(c.edges().count(), 5);
        assert!(c.is_well_formed());
        assert_eq!(c.degree(0), 2);
        assert!(c.has_edge(4, 0));
        assert!(!c.has_edge(0, 2));
    }
}
