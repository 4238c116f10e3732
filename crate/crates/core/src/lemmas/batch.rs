use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::corpus::{
    random_chain, random_connected_graph, random_inclusion_pair, random_nested_pair, random_predominated_pair,
    random_subset, rng,
};
use super::{check_continuation, check_no_minus_forest, check_union_lemma, EdgeCut, Instance, LemmaError, LemmaVerdict};
use crate::graph::{emit_graph6, parse_graph6, Graph, PathComponent, PathKind, VertexSet};
use crate::solver::Solver;

/// The checks reachable by name from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaKind {
    Cutting,
    ExtendedCutting,
    Union,
    PredominatedCut,
    Pass,
    Continuation,
    NoMinus,
}

impl LemmaKind {
    pub const ALL: [LemmaKind; 7] = [
        LemmaKind::Cutting,
        LemmaKind::ExtendedCutting,
        LemmaKind::Union,
        LemmaKind::PredominatedCut,
        LemmaKind::Pass,
        LemmaKind::Continuation,
        LemmaKind::NoMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaKind::Cutting => "cutting",
            LemmaKind::ExtendedCutting => "extended-cutting",
            LemmaKind::Union => "union",
            LemmaKind::PredominatedCut => "predominated-cut",
            LemmaKind::Pass => "pass",
            LemmaKind::Continuation => "continuation",
            LemmaKind::NoMinus => "no-minus",
        }
    }
}

impl fmt::Display for LemmaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        LemmaKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown lemma {s:?}"))
    }
}

/// Verdicts from one run, with the seed that generated the instances.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerdictBatch {
    pub seed: Option<u64>,
    pub verdicts: Vec<LemmaVerdict>,
}

impl VerdictBatch {
    pub fn new(seed: Option<u64>) -> Self {
        VerdictBatch {
            seed,
            verdicts: Vec::new(),
        }
    }

    pub fn push(&mut self, mut verdict: LemmaVerdict) {
        verdict.seed = self.seed;
        self.verdicts.push(verdict);
    }

    pub fn extend<I: IntoIterator<Item = LemmaVerdict>>(&mut self, verdicts: I) {
        for v in verdicts {
            self.push(v);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &LemmaVerdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            out.push_str(&serde_json::to_string(v).expect("verdicts serialize"));
            out.push('\n');
        }
        out
    }
}

fn random_forest<R: Rng>(rng: &mut R, order: usize) -> Graph {
    let mut g = Graph::empty(order).unwrap();
    for v in 1..order {
        if rng.gen_bool(0.8) {
            g.add_edge(rng.gen_range(0..v), v).unwrap();
        }
    }
    g
}

/// `count` random instances of `kind`, reproducible from `seed`.
pub fn random_instances(kind: LemmaKind, seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            if kind == LemmaKind::Union {
                let k = rng.gen_range(1..=3);
                let components = (0..k)
                    .map(|_| PathComponent {
                        kind: *[PathKind::Prime, PathKind::DoublePrime].choose(&mut rng).unwrap(),
                        n: rng.gen_range(1..=6),
                    })
                    .collect();
                return Instance {
                    components: Some(components),
                    ..Instance::default()
                };
            }
            let order = rng.gen_range(2..=9);
            let g = if kind == LemmaKind::NoMinus {
                random_forest(&mut rng, order)
            } else {
                random_connected_graph(&mut rng, order)
            };
            let mut inst = Instance {
                graph: Some(emit_graph6(&g)),
                ..Instance::default()
            };
            let edges: Vec<_> = g.edges().collect();
            let (u, v) = *edges.choose(&mut rng).unwrap_or(&(0, 1));
            match kind {
                LemmaKind::Cutting => {
                    let (a, b) = random_nested_pair(&mut rng, order);
                    inst.edge = Some((u, v));
                    (inst.a, inst.b) = (Some(a), Some(b));
                }
                LemmaKind::ExtendedCutting => {
                    let (a, b, c) = random_chain(&mut rng, order);
                    inst.edge = Some((u, v));
                    (inst.a, inst.b, inst.c) = (Some(a), Some(b), Some(c));
                }
                LemmaKind::PredominatedCut => {
                    let (b, c) = random_predominated_pair(&mut rng, order, u, v);
                    inst.edge = Some((u, v));
                    (inst.b, inst.c) = (Some(b), Some(c));
                }
                LemmaKind::Pass => {
                    let (b, c) = random_inclusion_pair(&mut rng, order, u, v);
                    inst.edge = Some((u, v));
                    (inst.b, inst.c) = (Some(b), Some(c));
                }
                LemmaKind::Continuation => {
                    let (a, b) = random_nested_pair(&mut rng, order);
                    (inst.a, inst.b) = (Some(a), Some(b));
                }
                LemmaKind::NoMinus => inst.s = Some(random_subset(&mut rng, VertexSet::full(order))),
                LemmaKind::Union => unreachable!(),
            }
            inst
        })
        .collect()
}

fn field<T: Copy>(value: Option<T>, name: &str) -> Result<T, LemmaError> {
    value.ok_or_else(|| LemmaError::Precondition(format!("instance is missing field `{name}`")))
}

/// Evaluate `kind` on one instance.
pub fn run_instance(kind: LemmaKind, inst: &Instance) -> Result<Vec<LemmaVerdict>, LemmaError> {
    if kind == LemmaKind::Union {
        let components = inst
            .components
            .as_deref()
            .ok_or_else(|| LemmaError::Precondition("instance is missing field `components`".into()))?;
        return Ok(vec![check_union_lemma(components)?]);
    }
    let g6 = inst
        .graph
        .as_deref()
        .ok_or_else(|| LemmaError::Precondition("instance is missing field `graph`".into()))?;
    let mut solver = Solver::new(parse_graph6(g6)?);
    let verdicts = match kind {
        LemmaKind::Continuation => check_continuation(&mut solver, field(inst.a, "a")?, field(inst.b, "b")?)?.to_vec(),
        LemmaKind::NoMinus => check_no_minus_forest(&mut solver, inst.s.unwrap_or_default())?,
        _ => {
            let (u, v) = field(inst.edge, "edge")?;
            let mut cut = EdgeCut::new(&mut solver, u, v)?;
            match kind {
                LemmaKind::Cutting => cut.cutting(field(inst.a, "a")?, field(inst.b, "b")?)?.to_vec(),
                LemmaKind::ExtendedCutting => cut.extended(field(inst.a, "a")?, field(inst.b, "b")?, field(inst.c, "c")?)?,
                LemmaKind::PredominatedCut => cut.predominated(field(inst.b, "b")?, field(inst.c, "c")?)?.to_vec(),
                LemmaKind::Pass => cut.pass_lemma(field(inst.b, "b")?, field(inst.c, "c")?)?.to_vec(),
                _ => unreachable!(),
            }
        }
    };
    Ok(verdicts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for k in LemmaKind::ALL {
            assert_eq!(k.name().parse::<LemmaKind>().unwrap(), k);
        }
        assert!("bogus".parse::<LemmaKind>().is_err());
    }

    #[test]
    fn random_batches_hold_and_reproduce() {
        for kind in LemmaKind::ALL {
            let instances = random_instances(kind, 11, 40);
            assert_eq!(instances, random_instances(kind, 11, 40));
            let mut batch = VerdictBatch::new(Some(11));
            for inst in &instances {
                batch.extend(run_instance(kind, inst).unwrap());
            }
            assert!(batch.all_hold(), "{kind}: {:?}", batch.failures().next());
            assert!(batch.verdicts.iter().all(|v| v.seed == Some(11)));
        }
    }

    #[test]
    fn json_lines_shape() {
        let mut batch = VerdictBatch::new(Some(5));
        batch.extend(run_instance(LemmaKind::Cutting, &random_instances(LemmaKind::Cutting, 5, 1)[0]).unwrap());
        let text = batch.to_json_lines();
        assert_eq!(text.lines().count(), 2);
        let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        let keys: Vec<&str> = first.as_object().unwrap().keys().map(String::as_str).collect();
        for k in ["lemma_id", "seed", "instance", "lhs", "rhs", "holds"] {
            assert!(keys.contains(&k), "missing {k}");
        }
        let back: LemmaVerdict = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(back, batch.verdicts[0]);
    }

    #[test]
    fn missing_fields() {
        let inst = Instance {
            graph: Some("A_".into()),
            ..Instance::default()
        };
        assert!(matches!(run_instance(LemmaKind::Cutting, &inst), Err(LemmaError::Precondition(_))));
        assert!(matches!(run_instance(LemmaKind::Union, &inst), Err(LemmaError::Precondition(_))));
        assert!(matches!(
            run_instance(LemmaKind::Continuation, &Instance::default()),
            Err(LemmaError::Precondition(_))
        ));
    }
}
