//! Free trees, one per isomorphism class, in constant amortized time per tree.
//!
//! Each tree is represented by the level sequence of a canonical rooted
//! version: rooted at its center (the first of the two centers for bicentral
//! trees), children ordered so the sequence is lexicographically largest.
//! Rooted trees are visited in decreasing level-sequence order; those whose
//! rooting is not the canonical free-tree rooting are skipped, usually by
//! jumping over a whole block of them at once.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError, MAX_ORDER};

/// Depths of the vertices of a rooted tree in preorder; the root has depth 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LevelSequence(pub Vec<u8>);

impl LevelSequence {
    /// Whether this is a well-formed preorder depth sequence.
    pub fn is_valid(&self) -> bool {
        let l = &self.0;
        !l.is_empty() && l[0] == 0 && l[1..].iter().all(|&d| d >= 1) && l.windows(2).all(|w| w[1] <= w[0] + 1)
    }

    /// Vertex `i` is the `i`th in preorder; its parent is the closest earlier
    /// vertex one level up.
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let n = self.0.len();
        let mut g = Graph::empty(n)?;
        let mut last_at_depth = [0usize; MAX_ORDER];
        for (i, &d) in self.0.iter().enumerate() {
            let d = d as usize;
            if i > 0 {
                g.add_edge(last_at_depth[d - 1], i)?;
            }
            last_at_depth[d] = i;
        }
        Ok(g)
    }
}

impl std::fmt::Display for LevelSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Next rooted tree in decreasing order, changing positions `p..` only.
/// With `p = None` the last position that is not a child of the root is used.
fn next_rooted(levels: &mut [u8], p: Option<usize>) -> bool {
    let p = match p {
        Some(p) => p,
        None => match levels.iter().rposition(|&d| d > 1) {
            Some(p) => p,
            None => return false,
        },
    };
    if p == 0 {
        return false;
    }
    let mut q = p - 1;
    while levels[q] != levels[p] - 1 {
        q -= 1;
    }
    for i in p..levels.len() {
        levels[i] = levels[i - p + q];
    }
    true
}

/// End of the first subtree of the root (exclusive), i.e. the index of the
/// second depth-1 vertex, or the length if there is none.
fn first_subtree_end(levels: &[u8]) -> usize {
    levels
        .iter()
        .enumerate()
        .skip(2)
        .find(|&(_, &d)| d == 1)
        .map_or(levels.len(), |(i, _)| i)
}

/// Whether the rooting is the canonical one for the underlying free tree: the
/// first root subtree must not be taller than the rest, and on a tie must be
/// no larger and no later in order.
fn is_canonical_free(levels: &[u8]) -> bool {
    let m = first_subtree_end(levels);
    let left = &levels[1..m];
    let rest_len = 1 + levels.len() - m;
    let left_height = left.iter().max().map_or(0, |&d| d - 1);
    let rest_height = levels[m..].iter().copied().max().unwrap_or(0);
    if rest_height != left_height {
        return rest_height > left_height;
    }
    if left.len() != rest_len {
        return left.len() < rest_len;
    }
    // Same height and size: compare left (shifted up one level) with
    // `0` followed by the rest.
    let shifted = left.iter().map(|&d| d - 1);
    let rest = std::iter::once(0).chain(levels[m..].iter().copied());
    shifted.le(rest)
}

/// Advance an invalid candidate past the block of rootings that share its
/// first subtree.
fn jump(levels: &mut [u8]) -> bool {
    let p = first_subtree_end(levels) - 1;
    let tall = levels[p] > 2;
    if !next_rooted(levels, Some(p)) {
        return false;
    }
    if tall {
        let m = first_subtree_end(levels);
        let left_height = levels[1..m].iter().max().map_or(0, |&d| d - 1) as usize;
        let n = levels.len();
        let tail = left_height + 1;
        for (k, slot) in levels[n - tail..].iter_mut().enumerate() {
            *slot = (k + 1) as u8;
        }
    }
    true
}

/// Iterator over the free trees of a given order.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    current: Option<Vec<u8>>,
    fresh: bool,
}

impl FreeTrees {
    pub fn new(order: usize) -> Result<FreeTrees, GraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::Size { order, cap: MAX_ORDER });
        }
        // The path, rooted at its center.
        let start: Vec<u8> = (0..=order / 2).chain(1..order.div_ceil(2)).map(|d| d as u8).collect();
        Ok(FreeTrees {
            current: Some(start),
            fresh: true,
        })
    }

    /// Continue after `last`, a sequence previously produced for this order.
    pub fn resume_after(last: &LevelSequence) -> Result<FreeTrees, GraphError> {
        let n = last.0.len();
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::Size { order: n, cap: MAX_ORDER });
        }
        let mut current = last.0.clone();
        let more = n > 1 && next_rooted(&mut current, None);
        Ok(FreeTrees {
            current: more.then_some(current),
            fresh: true,
        })
    }
}

impl Iterator for FreeTrees {
    type Item = LevelSequence;

    fn next(&mut self) -> Option<LevelSequence> {
        let levels = self.current.as_mut()?;
        if levels.len() == 1 {
            let out = LevelSequence(levels.clone());
            self.current = None;
            return Some(out);
        }
        if !self.fresh && !next_rooted(levels, None) {
            self.current = None;
            return None;
        }
        self.fresh = false;
        while !is_canonical_free(levels) {
            if !jump(levels) {
                self.current = None;
                return None;
            }
        }
        Some(LevelSequence(levels.clone()))
    }
}

/// All free trees of `order` as graphs.
pub fn enumerate_free_trees(order: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    Ok(FreeTrees::new(order)?.map(|l| l.to_graph().expect("level sequences fit the order cap")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| FreeTrees::new(n).unwrap().count()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
    }

    #[test]
    fn four_vertices() {
        let trees: Vec<Graph> = enumerate_free_trees(4).unwrap().collect();
        let mut degrees: Vec<usize> = trees.iter().map(|t| (0..4).map(|v| t.degree(v)).max().unwrap()).collect();
        degrees.sort();
        assert_eq!(degrees, [2, 3]);
        assert!(trees.iter().all(Graph::is_tree));
    }

    #[test]
    fn outputs_are_valid_trees() {
        for n in 1..=10 {
            for l in FreeTrees::new(n).unwrap() {
                assert!(l.is_valid(), "{l}");
                assert_eq!(l.0.len(), n);
                assert!(l.to_graph().unwrap().is_tree());
            }
        }
    }

    #[test]
    fn resume_matches_uninterrupted() {
        let all: Vec<LevelSequence> = FreeTrees::new(9).unwrap().collect();
        for cut in 0..all.len() {
            let rest: Vec<_> = FreeTrees::resume_after(&all[cut]).unwrap().collect();
            assert_eq!(rest, all[cut + 1..]);
        }
        assert_eq!(FreeTrees::resume_after(&LevelSequence(vec![0])).unwrap().count(), 0);
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(FreeTrees::new(0).is_err());
        assert!(FreeTrees::new(65).is_err());
    }
}
