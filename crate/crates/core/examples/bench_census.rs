//! Time the phases of a criticality scan: `cargo run --release --example bench_census -- 15`.

use std::time::{Duration, Instant};

use domgame::graph::VertexSet;
use domgame::solver::Solver;
use domgame::trees::FreeTrees;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(14);
    let mut solver: Option<Solver> = None;
    let (mut d, mut s, mut per) = (Duration::ZERO, Duration::ZERO, Duration::ZERO);
    let mut nodes = [0u64; 3];
    for levels in FreeTrees::new(n).unwrap() {
        let g = levels.to_graph().unwrap();
        let solver = match solver.as_mut() {
            Some(x) => {
                x.reset(g);
                x
            }
            None => solver.insert(Solver::new(g)),
        };
        let t = Instant::now();
        let gd = solver.gamma_g(VertexSet::EMPTY);
        d += t.elapsed();
        nodes[0] += solver.nodes();
        let t = Instant::now();
        solver.gamma_g_prime(VertexSet::EMPTY);
        s += t.elapsed();
        nodes[1] += solver.nodes();
        let t = Instant::now();
        for v in 0..n {
            if solver.gamma_g(VertexSet::singleton(v)) == gd {
                break;
            }
        }
        per += t.elapsed();
        nodes[2] += solver.nodes();
    }
    println!("n={n} d={d:?} s={s:?} per_vertex={per:?} cumulative nodes={nodes:?}");
}
