//! Graph sources accepted by `--graph`.
//!
//! * `path:N`, `spider:P,Q,R`, `pprime:N`, `pdprime:N` build the named graph;
//!   the P′/P″ paths come with their end vertices already dominated.
//! * `file:PATH`, or any existing file, is read as graph6 (a single token,
//!   optionally behind a `>>graph6<<` header) or as an edge list.
//! * Anything else is parsed as a graph6 string.

use std::path::Path;

use domgame::graph::{
    build_path, build_path_component, build_spider, parse_edge_list, parse_graph6, Graph, PathComponent, VertexSet,
};

pub struct Source {
    pub graph: Graph,
    /// Vertices the source itself marks as dominated.
    pub dominated: VertexSet,
    pub warnings: Vec<String>,
}

impl Source {
    fn plain(graph: Graph) -> Source {
        Source {
            graph,
            dominated: VertexSet::EMPTY,
            warnings: Vec::new(),
        }
    }
}

fn count(text: &str, what: &str) -> Result<usize, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("{what}: expected a non-negative integer, got {text:?}"))
}

fn builtin(name: &str, args: &str) -> Result<Source, String> {
    let err = |e: domgame::graph::GraphError| format!("{name}:{args}: {e}");
    match name {
        "path" => Ok(Source::plain(build_path(count(args, "path")?).map_err(err)?)),
        "pprime" | "pdprime" => {
            let n = count(args, name)?;
            let c = if name == "pprime" {
                PathComponent::prime(n)
            } else {
                PathComponent::double_prime(n)
            };
            let (graph, dominated) = build_path_component(c).map_err(err)?.into_parts();
            Ok(Source {
                graph,
                dominated,
                warnings: Vec::new(),
            })
        }
        "spider" => {
            let legs: Vec<usize> = args.split(',').map(|p| count(p, "spider")).collect::<Result<_, _>>()?;
            let [p, q, r] = legs[..] else {
                return Err(format!("spider needs three legs, got {args:?}"));
            };
            let mut s = Source::plain(build_spider(p, q, r).map_err(err)?);
            if legs.contains(&0) {
                s.warnings
                    .push(format!("degenerate spider ({p},{q},{r}): a leg of length 0 is not a three-legged spider"));
            }
            Ok(s)
        }
        _ => Err(format!("unknown builtin graph {name:?}; expected path, spider, pprime or pdprime")),
    }
}

fn from_file(path: &Path) -> Result<Source, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let body = text.trim();
    let body = body.strip_prefix(">>graph6<<").unwrap_or(body);
    let graph = if !body.is_empty() && !body.contains(char::is_whitespace) {
        parse_graph6(body)
    } else {
        parse_edge_list(&text)
    };
    graph.map(Source::plain).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn load(spec: &str) -> Result<Source, String> {
    if let Some(path) = spec.strip_prefix("file:") {
        return from_file(Path::new(path));
    }
    if let Some((name, args)) = spec.split_once(':') {
        return builtin(name, args);
    }
    if Path::new(spec).is_file() {
        return from_file(Path::new(spec));
    }
    parse_graph6(spec)
        .map(Source::plain)
        .map_err(|e| format!("graph6 {spec:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        let s = load("pdprime:3").unwrap();
        assert_eq!(s.graph.order(), 5);
        assert_eq!(s.dominated, [0, 4].into_iter().collect());
        assert_eq!(load("spider:1,1,2").unwrap().graph.order(), 17);
        assert_eq!(load("spider:0,1,1").unwrap().warnings.len(), 1);
        assert!(load("spider:1,1").is_err());
        assert!(load("path:x").is_err());
        assert!(load("path:0").is_err());
        assert!(load("cube:3").is_err());
        assert_eq!(load("Bg").unwrap().graph.edge_count(), 2);
        assert!(load("B!").is_err());
    }

    #[test]
    fn files() {
        let dir = tempfile::tempdir().unwrap();
        let g6 = dir.path().join("g.g6");
        std::fs::write(&g6, ">>graph6<<Bg\n").unwrap();
        assert_eq!(load(g6.to_str().unwrap()).unwrap().graph.edge_count(), 2);
        let el = dir.path().join("g.txt");
        std::fs::write(&el, "# triangle\n3 3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(load(&format!("file:{}", el.display())).unwrap().graph.edge_count(), 3);
        assert!(load("file:/nonexistent/graph").is_err());
    }
}
