//! Canonical strings for trees (AHU encoding rooted at the center).

use crate::graph::{Graph, VertexSet};

/// The one or two centers of a tree, found by repeatedly stripping leaves.
pub fn tree_centers(g: &Graph) -> Vec<usize> {
    let mut remaining = g.vertices();
    loop {
        if remaining.len() <= 2 {
            return remaining.iter().collect();
        }
        let leaves: VertexSet = remaining
            .iter()
            .filter(|&v| g.neighbors(v).intersection(remaining).len() <= 1)
            .collect();
        remaining = remaining.difference(leaves);
    }
}

fn encode(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut children: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&c| Some(c) != parent)
        .map(|c| encode(g, c, Some(v)))
        .collect();
    children.sort_unstable();
    let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    s.push('(');
    for c in children {
        s.push_str(&c);
    }
    s.push(')');
    s
}

/// A string equal for two trees exactly when they are isomorphic; `None` if
/// `g` is not a tree.
pub fn tree_canonical_form(g: &Graph) -> Option<String> {
    if !g.is_tree() {
        return None;
    }
    let centers = tree_centers(g);
    let form = match centers[..] {
        [c] => encode(g, c, None),
        [a, b] => {
            // Root at the edge: encode both halves and order them.
            let x = encode(g, a, Some(b));
            let y = encode(g, b, Some(a));
            if x <= y {
                format!("[{x}{y}]")
            } else {
                format!("[{y}{x}]")
            }
        }
        _ => unreachable!("a tree has one or two centers"),
    };
    Some(form)
}

/// For each vertex, the smallest vertex an automorphism maps it to; `None`
/// if `g` is not a tree. Two vertices share an orbit exactly when the tree
/// rooted at one is isomorphic to the tree rooted at the other.
pub fn tree_vertex_orbits(g: &Graph) -> Option<Vec<usize>> {
    if !g.is_tree() {
        return None;
    }
    let forms: Vec<String> = (0..g.order()).map(|v| encode(g, v, None)).collect();
    Some(
        (0..g.order())
            .map(|v| (0..=v).find(|&u| forms[u] == forms[v]).unwrap())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_path, build_spider};

    #[test]
    fn isomorphic_relabelings_agree() {
        let t = build_spider(1, 2, 1).unwrap();
        let n = t.order();
        let perm: Vec<usize> = (0..n).map(|i| (i * 7 + 3) % n).collect();
        assert_eq!(tree_canonical_form(&t), tree_canonical_form(&t.permuted(&perm).unwrap()));
        assert_ne!(tree_canonical_form(&t), tree_canonical_form(&build_path(n).unwrap()));
    }

    #[test]
    fn non_trees() {
        let c3 = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tree_canonical_form(&c3), None);
        assert_eq!(tree_centers(&build_path(4).unwrap()), [1, 2]);
        assert_eq!(tree_centers(&build_path(5).unwrap()), [2]);
    }

    #[test]
    fn orbits() {
        assert_eq!(tree_vertex_orbits(&build_path(5).unwrap()).unwrap(), [0, 1, 2, 1, 0]);
        let s = tree_vertex_orbits(&build_spider(1, 1, 2).unwrap()).unwrap();
        // Legs of length 4 and 4 are swapped; the length 8 leg is fixed.
        assert_eq!(&s[..9], &[0, 1, 2, 3, 4, 1, 2, 3, 4]);
        assert!((9..17).all(|v| s[v] == v));
        let c3 = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tree_vertex_orbits(&c3), None);
    }
}
