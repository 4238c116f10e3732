//! Test-only oracles, written without any of the library's search code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use domgame::graph::{Graph, VertexSet};
use domgame::solver::{GameConfig, PassRule, Player};
use rand::Rng;

/// Exhaustive minimax over adjacency lists: no memo, no move merging, no
/// cutoffs. Exponential; keep graphs small.
pub struct Naive {
    adj: Vec<Vec<usize>>,
}

impl Naive {
    pub fn new(g: &Graph) -> Naive {
        let adj = (0..g.order())
            .map(|v| (0..g.order()).filter(|&u| u != v && g.has_edge(u, v)).collect())
            .collect();
        Naive { adj }
    }

    pub fn value(&self, dominated: VertexSet, cfg: GameConfig) -> u32 {
        let mut dom: Vec<bool> = (0..self.adj.len()).map(|v| dominated.contains(v)).collect();
        let dominator_first = cfg.first_mover == Player::Dominator;
        let holder = match cfg.pass {
            PassRule::None => None,
            PassRule::StallerPass => Some(false),
            PassRule::DominatorPass => Some(true),
        };
        self.go(&mut dom, dominator_first, holder)
    }

    fn go(&self, dom: &mut Vec<bool>, dominator: bool, pass_holder: Option<bool>) -> u32 {
        if dom.iter().all(|&d| d) {
            return 0;
        }
        let mut results = Vec::new();
        for v in 0..self.adj.len() {
            let closed: Vec<usize> = std::iter::once(v).chain(self.adj[v].iter().copied()).collect();
            let fresh: Vec<usize> = closed.into_iter().filter(|&x| !dom[x]).collect();
            if fresh.is_empty() {
                continue;
            }
            for &x in &fresh {
                dom[x] = true;
            }
            results.push(1 + self.go(dom, !dominator, pass_holder));
            for &x in &fresh {
                dom[x] = false;
            }
        }
        if pass_holder == Some(dominator) {
            results.push(self.go(dom, !dominator, None));
        }
        if dominator {
            *results.iter().min().unwrap()
        } else {
            *results.iter().max().unwrap()
        }
    }
}

pub const ALL_CONFIGS: [GameConfig; 6] = [
    GameConfig::D_GAME,
    GameConfig::S_GAME,
    GameConfig::D_GAME_STALLER_PASS,
    GameConfig::S_GAME_STALLER_PASS,
    GameConfig::D_GAME_DOMINATOR_PASS,
    GameConfig::S_GAME_DOMINATOR_PASS,
];

/// Erdős–Rényi graph with a random edge probability; may be disconnected.
pub fn random_graph<R: Rng>(rng: &mut R, order: usize) -> Graph {
    let p: f64 = rng.gen_range(0.0..=1.0);
    let mut edges = Vec::new();
    for v in 0..order {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(order, edges).unwrap()
}

pub fn random_set<R: Rng>(rng: &mut R, order: usize) -> VertexSet {
    let p: f64 = rng.gen_range(0.0..=1.0);
    (0..order).filter(|_| rng.gen_bool(p)).collect()
}

/// `⌈n/2⌉`, with the mod-4 corrections for paths with dominated ends.
pub fn path_value(n: usize, first: Player) -> u32 {
    let half = n.div_ceil(2) as u32;
    match first {
        Player::Dominator if n % 4 == 3 => half - 1,
        Player::Staller if n % 4 == 2 => half + 1,
        _ => half,
    }
}

/// Labelled tree from a Prüfer sequence over `0..n`.
pub fn prufer_tree(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&c| c != parent).map(|&c| rooted_code(adj, c, v)).collect();
    kids.sort();
    format!("1{}0", kids.concat())
}

/// The one or two vertices left after repeatedly stripping all leaves.
fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..adj.len()).filter(|&v| degree[v] <= 1).collect();
    let mut left = adj.len();
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &x in &adj[leaf] {
                degree[x] -= 1;
                if degree[x] == 1 {
                    next.push(x);
                }
            }
        }
        layer = next;
    }
    layer
}

/// Isomorphism invariant for trees: the least rooted code over the centers.
pub fn tree_code(order: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); order];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    centers(&adj).into_iter().map(|r| rooted_code(&adj, r, usize::MAX)).min().unwrap()
}

/// Isomorphism classes of labelled trees on `n` vertices, by brute force.
pub fn prufer_classes(n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    if n <= 2 {
        let edges: Vec<(usize, usize)> = if n == 2 { vec![(0, 1)] } else { vec![] };
        out.insert(tree_code(n, &edges));
        return out;
    }
    let mut seq = vec![0usize; n - 2];
    loop {
        out.insert(tree_code(n, &prufer_tree(&seq, n)));
        let mut i = 0;
        while i < seq.len() && seq[i] == n - 1 {
            seq[i] = 0;
            i += 1;
        }
        if i == seq.len() {
            return out;
        }
        seq[i] += 1;
    }
}

/// Free-tree counts from the rooted-tree recurrence and Otter's dissimilarity
/// formula.
pub fn otter_counts(max: usize) -> Vec<u64> {
    let mut rooted = vec![0u64; max + 1];
    rooted[1] = 1;
    for n in 1..max {
        let mut sum = 0u64;
        for k in 1..=n {
            let s: u64 = (1..=k).filter(|d| k % d == 0).map(|d| d as u64 * rooted[d]).sum();
            sum += s * rooted[n - k + 1];
        }
        rooted[n + 1] = sum / n as u64;
    }
    (0..=max)
        .map(|n| {
            if n == 0 {
                return 0;
            }
            let pairs: u64 = (1..n).map(|i| rooted[i] * rooted[n - i]).sum();
            let same = if n % 2 == 0 { rooted[n / 2] } else { 0 };
            rooted[n] - (pairs - same) / 2
        })
        .collect()
}
