//! Seeded graph corpora and dominated-set samplers for the lemma sweeps.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{disjoint_union, Graph, PartialState, VertexSet};
use crate::trees::enumerate_free_trees;

/// The generator behind every seeded sweep.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected graph on `order` vertices: a random recursive spanning tree
/// plus each remaining pair independently with a random density.
pub fn random_connected_graph<R: Rng>(rng: &mut R, order: usize) -> Graph {
    let mut g = Graph::empty(order).expect("order within cap");
    for v in 1..order {
        let parent = rng.gen_range(0..v);
        g.add_edge(parent, v).unwrap();
    }
    let density: f64 = rng.gen_range(0.0..0.6);
    for v in 1..order {
        for u in 0..v {
            if !g.has_edge(u, v) && rng.gen_bool(density) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    // Shuffle labels so the spanning tree is not always rooted at 0.
    let mut perm: Vec<usize> = (0..order).collect();
    for i in (1..order).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    g.permuted(&perm).unwrap()
}

/// Each element of `within` kept with a per-call random probability, so both
/// sparse and dense subsets show up.
pub fn random_subset<R: Rng>(rng: &mut R, within: VertexSet) -> VertexSet {
    let p: f64 = rng.gen_range(0.0..=1.0);
    within.iter().filter(|_| rng.gen_bool(p)).collect()
}

/// `B ⊆ A ⊆ {0..order}`.
pub fn random_nested_pair<R: Rng>(rng: &mut R, order: usize) -> (VertexSet, VertexSet) {
    let a = random_subset(rng, VertexSet::full(order));
    let b = random_subset(rng, a);
    (a, b)
}

/// `C ⊆ B ⊆ A ⊆ {0..order}`.
pub fn random_chain<R: Rng>(rng: &mut R, order: usize) -> (VertexSet, VertexSet, VertexSet) {
    let (a, b) = random_nested_pair(rng, order);
    let c = random_subset(rng, b);
    (a, b, c)
}

/// A pair `(B, C)` with the `{u,v}`-inclusion property, drawn from either
/// branch with equal probability.
pub fn random_inclusion_pair<R: Rng>(rng: &mut R, order: usize, u: usize, v: usize) -> (VertexSet, VertexSet) {
    let all = VertexSet::full(order);
    if rng.gen_bool(0.5) {
        let b = random_subset(rng, all);
        (b, random_subset(rng, b))
    } else {
        let (w, other) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
        let mut b = random_subset(rng, all);
        b.insert(other);
        b.remove(w);
        let mut c = random_subset(rng, b);
        c.insert(other);
        c.insert(w);
        (b, c)
    }
}

/// `{u, v} ⊆ C ⊆ B`.
pub fn random_predominated_pair<R: Rng>(rng: &mut R, order: usize, u: usize, v: usize) -> (VertexSet, VertexSet) {
    let all = VertexSet::full(order);
    let mut c = random_subset(rng, all);
    c.insert(u);
    c.insert(v);
    let b = c.union(random_subset(rng, all));
    (b, c)
}

/// Every tree with `1..=max_order` vertices, one per isomorphism class.
pub fn all_trees(max_order: usize) -> Vec<Graph> {
    (1..=max_order)
        .flat_map(|n| enumerate_free_trees(n).expect("order within cap"))
        .collect()
}

/// Every forest with `1..=max_order` vertices, one per isomorphism class,
/// as multisets of free trees.
pub fn all_forests(max_order: usize) -> Vec<Graph> {
    let trees: Vec<PartialState> = all_trees(max_order).into_iter().map(PartialState::fresh).collect();
    let mut out = Vec::new();
    for n in 1..=max_order {
        let mut stack = Vec::new();
        extend_forests(&trees, 0, n, &mut stack, &mut out);
    }
    out
}

fn extend_forests(trees: &[PartialState], from: usize, remaining: usize, stack: &mut Vec<usize>, out: &mut Vec<Graph>) {
    if remaining == 0 {
        let mut forest = trees[stack[0]].clone();
        for &i in &stack[1..] {
            forest = disjoint_union(&forest, &trees[i]).unwrap();
        }
        out.push(forest.into_parts().0);
        return;
    }
    for i in from..trees.len() {
        if trees[i].graph().order() <= remaining {
            stack.push(i);
            extend_forests(trees, i, remaining - trees[i].graph().order(), stack, out);
            stack.pop();
        }
    }
}

/// All trees up to `max_order` followed by `random_count` seeded random
/// connected graphs with `2..=max_order` vertices.
pub fn standard_corpus(seed: u64, random_count: usize, max_order: usize) -> Vec<Graph> {
    let mut rng = rng(seed);
    let mut graphs = all_trees(max_order);
    graphs.extend((0..random_count).map(|_| {
        let order = rng.gen_range(2..=max_order);
        random_connected_graph(&mut rng, order)
    }));
    graphs
}
