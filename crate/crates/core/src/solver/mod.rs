//! Exact minimax values of the domination game.
//!
//! A position is the set of dominated vertices, the player to move, and
//! whether a pass entitlement is still unused. Dominator minimizes the number
//! of moves still to be played, Staller maximizes it. A pass flips the turn
//! without counting as a move; only the entitled player may pass, at most
//! once, and only while the game is not over. The entitled player may pass
//! on their very first turn.

mod closed_form;
mod table;

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, PartialState, VertexSet};
use table::{Bounds, Table};

pub use closed_form::closed_form_p_value;
pub use table::DENSE_MAX_ORDER;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Player {
    Dominator,
    Staller,
}

impl Player {
    #[inline]
    pub fn other(self) -> Player {
        match self {
            Player::Dominator => Player::Staller,
            Player::Staller => Player::Dominator,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Dominator => "dominator",
            Player::Staller => "staller",
        })
    }
}

/// Which player, if any, may skip one turn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PassRule {
    None,
    StallerPass,
    DominatorPass,
}

impl PassRule {
    pub fn entitled(self) -> Option<Player> {
        match self {
            PassRule::None => None,
            PassRule::StallerPass => Some(Player::Staller),
            PassRule::DominatorPass => Some(Player::Dominator),
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameConfig {
    pub first_mover: Player,
    pub pass: PassRule,
}

impl GameConfig {
    pub const D_GAME: GameConfig = GameConfig::new(Player::Dominator, PassRule::None);
    pub const S_GAME: GameConfig = GameConfig::new(Player::Staller, PassRule::None);
    pub const D_GAME_STALLER_PASS: GameConfig = GameConfig::new(Player::Dominator, PassRule::StallerPass);
    pub const S_GAME_STALLER_PASS: GameConfig = GameConfig::new(Player::Staller, PassRule::StallerPass);
    pub const D_GAME_DOMINATOR_PASS: GameConfig = GameConfig::new(Player::Dominator, PassRule::DominatorPass);
    pub const S_GAME_DOMINATOR_PASS: GameConfig = GameConfig::new(Player::Staller, PassRule::DominatorPass);

    pub const fn new(first_mover: Player, pass: PassRule) -> GameConfig {
        GameConfig { first_mover, pass }
    }

    /// The search key of the opening position on `dominated`.
    pub fn start(&self, dominated: VertexSet) -> SearchKey {
        SearchKey {
            dominated,
            mover: self.first_mover,
            pass_available: self.pass != PassRule::None,
        }
    }
}

/// A position of the game on a fixed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchKey {
    pub dominated: VertexSet,
    pub mover: Player,
    pub pass_available: bool,
}

/// Number of moves remaining under optimal play.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GameValue(pub u32);

impl GameValue {
    pub const ZERO: GameValue = GameValue(0);

    pub fn moves(self) -> u32 {
        self.0
    }
}

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    Vertex(usize),
    Pass,
}

impl Serialize for Move {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Move::Vertex(v) => serializer.serialize_u64(*v as u64),
            Move::Pass => serializer.serialize_str("pass"),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Vertex(v) => write!(f, "{v}"),
            Move::Pass => f.write_str("pass"),
        }
    }
}

/// One step of an optimal line of play.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub player: Player,
    #[serde(rename = "move")]
    pub action: Move,
    /// Vertices newly dominated by the step.
    pub newly_dominated: VertexSet,
    /// Value of the position after the step.
    pub remaining: GameValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("the game is already over")]
    GameOver,
    #[error("dominated set {0:?} reaches past the graph order")]
    OutOfRange(VertexSet),
}

/// Vertices whose play newly dominates at least one vertex.
pub fn legal_moves(s: &PartialState) -> VertexSet {
    legal_in(s.graph(), s.dominated())
}

fn legal_in(g: &Graph, dominated: VertexSet) -> VertexSet {
    (0..g.order())
        .filter(|&v| !g.closed_nbhd(v).is_subset(dominated))
        .collect()
}

/// Search switches. None of them changes any value.
///
/// The default is plain memoized minimax, which expands every distinct move
/// of every position it reaches. [`SolverOptions::FAST`] adds cutoffs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SolverOptions {
    /// Keep a transposition table.
    pub memoize: bool,
    /// Fail-soft alpha-beta, with the table holding value bounds.
    pub alpha_beta: bool,
    /// Once no pass can happen, let Dominator consider only moves whose newly
    /// dominated set is inclusion-maximal and Staller only inclusion-minimal
    /// ones. Sound because enlarging the dominated set never raises the value.
    pub prune: bool,
}

impl SolverOptions {
    pub const PLAIN: SolverOptions = SolverOptions {
        memoize: true,
        alpha_beta: false,
        prune: false,
    };

    pub const FAST: SolverOptions = SolverOptions {
        memoize: true,
        alpha_beta: true,
        prune: true,
    };
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions::PLAIN
    }
}

/// Minimax engine for one graph, holding one transposition table per pass
/// rule. D-start and S-start queries share a table since the mover is part of
/// the key.
pub struct Solver {
    graph: Graph,
    nbhd: Vec<u64>,
    full: u64,
    tables: [Option<Table>; 3],
    options: SolverOptions,
    nodes: u64,
}

impl Solver {
    pub fn new(graph: Graph) -> Solver {
        Solver::with_options(graph, SolverOptions::default())
    }

    pub fn with_options(graph: Graph, options: SolverOptions) -> Solver {
        let nbhd = graph.closed_nbhds().iter().map(|s| s.bits()).collect();
        Solver {
            full: graph.vertices().bits(),
            graph,
            nbhd,
            tables: [None, None, None],
            options,
            nodes: 0,
        }
    }

    /// A solver that never consults or fills a transposition table.
    pub fn without_memo(graph: Graph) -> Solver {
        Solver::with_options(
            graph,
            SolverOptions {
                memoize: false,
                ..SolverOptions::default()
            },
        )
    }

    pub fn options(&self) -> SolverOptions {
        self.options
    }

    /// Switch to another graph, keeping table allocations when they fit.
    pub fn reset(&mut self, graph: Graph) {
        self.nbhd.clear();
        self.nbhd.extend(graph.closed_nbhds().iter().map(|s| s.bits()));
        self.full = graph.vertices().bits();
        let order = graph.order();
        for slot in self.tables.iter_mut() {
            match slot {
                Some(t) if t.fits(order) => t.clear(),
                _ => *slot = None,
            }
        }
        self.graph = graph;
        self.nodes = 0;
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Positions expanded since construction or the last reset.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Number of memoized positions across all tables.
    pub fn table_len(&self) -> usize {
        self.tables.iter().flatten().map(Table::len).sum()
    }

    pub fn value(&mut self, dominated: VertexSet, cfg: GameConfig) -> GameValue {
        self.value_at(cfg.start(dominated), cfg.pass)
    }

    /// Value of an arbitrary position under `pass` rules.
    pub fn value_at(&mut self, key: SearchKey, pass: PassRule) -> GameValue {
        assert!(
            key.dominated.is_subset(self.graph.vertices()),
            "dominated set {:?} outside graph of order {}",
            key.dominated,
            self.graph.order()
        );
        let order = self.graph.order();
        let table = if self.options.memoize {
            Some(self.tables[pass.slot()].get_or_insert_with(|| Table::new(order, pass != PassRule::None)))
        } else {
            None
        };
        let mut search = Search {
            nbhd: &self.nbhd,
            full: self.full,
            table,
            entitled: pass.entitled(),
            prune: self.options.prune,
            alpha_beta: self.options.alpha_beta,
            nodes: 0,
        };
        let v = search.run(key.dominated.bits(), key.mover, key.pass_available && pass != PassRule::None);
        self.nodes += search.nodes;
        GameValue(v as u32)
    }

    pub fn gamma_g(&mut self, dominated: VertexSet) -> GameValue {
        self.value(dominated, GameConfig::D_GAME)
    }

    pub fn gamma_g_prime(&mut self, dominated: VertexSet) -> GameValue {
        self.value(dominated, GameConfig::S_GAME)
    }

    pub fn gamma_g_sp(&mut self, dominated: VertexSet) -> GameValue {
        self.value(dominated, GameConfig::D_GAME_STALLER_PASS)
    }

    pub fn gamma_g_sp_prime(&mut self, dominated: VertexSet) -> GameValue {
        self.value(dominated, GameConfig::S_GAME_STALLER_PASS)
    }

    pub fn gamma_g_dp(&mut self, dominated: VertexSet) -> GameValue {
        self.value(dominated, GameConfig::D_GAME_DOMINATOR_PASS)
    }

    pub fn gamma_g_dp_prime(&mut self, dominated: VertexSet) -> GameValue {
        self.value(dominated, GameConfig::S_GAME_DOMINATOR_PASS)
    }

    /// Every available action at `key` with the value it leads to, counting
    /// the move itself. Vertices come in ascending order, then the pass.
    pub fn move_values(&mut self, key: SearchKey, pass: PassRule) -> Vec<(Move, GameValue)> {
        let dominated = key.dominated;
        if dominated == self.graph.vertices() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for v in legal_in(&self.graph, dominated) {
            let next = SearchKey {
                dominated: dominated.union(self.graph.closed_nbhd(v)),
                mover: key.mover.other(),
                pass_available: key.pass_available,
            };
            let value = self.value_at(next, pass);
            out.push((Move::Vertex(v), GameValue(value.0 + 1)));
        }
        if key.pass_available && pass.entitled() == Some(key.mover) {
            let next = SearchKey {
                dominated,
                mover: key.mover.other(),
                pass_available: false,
            };
            out.push((Move::Pass, self.value_at(next, pass)));
        }
        out
    }

    /// A value-achieving action at `key`; lowest vertex id wins ties and the
    /// pass is preferred only when no vertex matches.
    pub fn best_move_at(&mut self, key: SearchKey, pass: PassRule) -> Result<Move, SolverError> {
        let target = self.value_at(key, pass);
        self.move_values(key, pass)
            .into_iter()
            .find(|&(_, v)| v == target)
            .map(|(m, _)| m)
            .ok_or(SolverError::GameOver)
    }

    pub fn optimal_move(&mut self, dominated: VertexSet, cfg: GameConfig) -> Result<Move, SolverError> {
        self.best_move_at(cfg.start(dominated), cfg.pass)
    }

    /// A complete line of optimal play from the opening position.
    pub fn trace(&mut self, dominated: VertexSet, cfg: GameConfig) -> Vec<TraceStep> {
        let mut key = cfg.start(dominated);
        let mut steps = Vec::new();
        while key.dominated != self.graph.vertices() {
            let action = self.best_move_at(key, cfg.pass).expect("game not over");
            let before = key.dominated;
            let player = key.mover;
            key = match action {
                Move::Vertex(v) => SearchKey {
                    dominated: before.union(self.graph.closed_nbhd(v)),
                    mover: player.other(),
                    pass_available: key.pass_available,
                },
                Move::Pass => SearchKey {
                    dominated: before,
                    mover: player.other(),
                    pass_available: false,
                },
            };
            steps.push(TraceStep {
                player,
                action,
                newly_dominated: key.dominated.difference(before),
                remaining: self.value_at(key, cfg.pass),
            });
        }
        steps
    }
}

struct Search<'a> {
    nbhd: &'a [u64],
    full: u64,
    table: Option<&'a mut Table>,
    entitled: Option<Player>,
    prune: bool,
    alpha_beta: bool,
    nodes: u64,
}

impl Search<'_> {
    /// Exact value of a position.
    fn run(&mut self, dominated: u64, mover: Player, pass_available: bool) -> u8 {
        if self.alpha_beta {
            self.bounded(dominated, mover, pass_available, -1, i32::from(u8::MAX)) as u8
        } else {
            self.exact(dominated, mover, pass_available)
        }
    }

    /// Distinct newly dominated sets of the moves at `dominated`, in vertex
    /// order: distinct vertices with the same effect lead to the same
    /// position. With pruning on, only the extreme ones are kept.
    fn effects(&self, undominated: u64, mover: Player, pass_available: bool, out: &mut [u64; 64]) -> usize {
        let mut n = 0;
        for &closed in self.nbhd {
            let effect = closed & undominated;
            if effect != 0 && !out[..n].contains(&effect) {
                out[n] = effect;
                n += 1;
            }
        }
        if self.prune && !(pass_available && self.entitled.is_some()) {
            n = keep_extreme(&mut out[..n], mover);
        }
        n
    }

    fn exact(&mut self, dominated: u64, mover: Player, pass_available: bool) -> u8 {
        if dominated == self.full {
            return 0;
        }
        let key = SearchKey {
            dominated: VertexSet::from_bits(dominated),
            mover,
            pass_available,
        };
        if let Some(b) = self.table.as_ref().and_then(|t| t.get(key)) {
            return b.lo;
        }
        self.nodes += 1;
        let next_mover = mover.other();
        let mut effects = [0u64; 64];
        let n_effects = self.effects(self.full & !dominated, mover, pass_available, &mut effects);
        let mut best = match mover {
            Player::Dominator => u8::MAX,
            Player::Staller => 0,
        };
        for &effect in &effects[..n_effects] {
            let value = 1 + self.exact(dominated | effect, next_mover, pass_available);
            match mover {
                Player::Dominator => {
                    best = best.min(value);
                    // No unfinished position is worth less than one move.
                    if best == 1 {
                        break;
                    }
                }
                Player::Staller => best = best.max(value),
            }
        }
        if pass_available && self.entitled == Some(mover) && !(mover == Player::Dominator && best == 1) {
            let value = self.exact(dominated, next_mover, false);
            best = match mover {
                Player::Dominator => best.min(value),
                Player::Staller => best.max(value),
            };
        }
        if let Some(t) = self.table.as_mut() {
            t.insert(key, Bounds::exact(best));
        }
        best
    }

    /// Fail-soft alpha-beta: the result is exact when it lies strictly
    /// inside `(alpha, beta)`, an upper bound when `≤ alpha` and a lower bound
    /// when `≥ beta`.
    fn bounded(&mut self, dominated: u64, mover: Player, pass_available: bool, mut alpha: i32, mut beta: i32) -> i32 {
        if dominated == self.full {
            return 0;
        }
        let key = SearchKey {
            dominated: VertexSet::from_bits(dominated),
            mover,
            pass_available,
        };
        let undominated = self.full & !dominated;
        // Some move is left, and every move dominates a new vertex.
        let known = self.table.as_ref().and_then(|t| t.get(key)).unwrap_or(Bounds {
            lo: 1,
            hi: undominated.count_ones() as u8,
        });
        let (lo, hi) = (i32::from(known.lo), i32::from(known.hi));
        if lo == hi || lo >= beta {
            return lo;
        }
        if hi <= alpha {
            return hi;
        }
        alpha = alpha.max(lo);
        beta = beta.min(hi);
        let (alpha0, beta0) = (alpha, beta);
        self.nodes += 1;
        let next_mover = mover.other();
        let mut effects = [0u64; 64];
        let n_effects = self.effects(undominated, mover, pass_available, &mut effects);
        let effects = &mut effects[..n_effects];
        // Big effects first for Dominator, small ones first for Staller.
        match mover {
            Player::Dominator => effects.sort_unstable_by_key(|e| std::cmp::Reverse(e.count_ones())),
            Player::Staller => effects.sort_unstable_by_key(|e| e.count_ones()),
        }
        let mut best = match mover {
            Player::Dominator => i32::MAX,
            Player::Staller => i32::MIN,
        };
        let pass_move = pass_available && self.entitled == Some(mover);
        let children = effects.iter().map(|&e| Some(e)).chain(pass_move.then_some(None));
        for effect in children {
            let value = match effect {
                Some(e) => 1 + self.bounded(dominated | e, next_mover, pass_available, alpha - 1, beta - 1),
                None => self.bounded(dominated, next_mover, false, alpha, beta),
            };
            match mover {
                Player::Dominator => {
                    best = best.min(value);
                    if best <= alpha {
                        break;
                    }
                    beta = beta.min(best);
                }
                Player::Staller => {
                    best = best.max(value);
                    if best >= beta {
                        break;
                    }
                    alpha = alpha.max(best);
                }
            }
        }
        if let Some(t) = self.table.as_mut() {
            let mut b = known;
            if best <= alpha0 {
                b.hi = best as u8;
            } else if best >= beta0 {
                b.lo = best as u8;
            } else {
                b = Bounds::exact(best as u8);
            }
            t.insert(key, b);
        }
        best
    }
}

/// Move the inclusion-maximal (Dominator) or inclusion-minimal (Staller)
/// sets of a duplicate-free list to its front and return how many there are.
fn keep_extreme(effects: &mut [u64], mover: Player) -> usize {
    let dominated_by = |a: u64, b: u64| match mover {
        Player::Dominator => a & b == a,
        Player::Staller => a & b == b,
    };
    let mut kept = 0;
    for i in 0..effects.len() {
        let e = effects[i];
        if !effects.iter().any(|&f| f != e && dominated_by(e, f)) {
            effects[kept] = e;
            kept += 1;
        }
    }
    kept
}

fn with_solver<T>(s: &PartialState, f: impl FnOnce(&mut Solver, VertexSet) -> T) -> T {
    let mut solver = Solver::new(s.graph().clone());
    f(&mut solver, s.dominated())
}

/// Value of `s` under `cfg`, on a fresh table.
pub fn solve(s: &PartialState, cfg: GameConfig) -> GameValue {
    with_solver(s, |solver, d| solver.value(d, cfg))
}

pub fn optimal_move(s: &PartialState, cfg: GameConfig) -> Result<Move, SolverError> {
    with_solver(s, |solver, d| solver.optimal_move(d, cfg))
}

/// `γ_g(G|S)`: Dominator starts, no passes.
pub fn gamma_g(s: &PartialState) -> GameValue {
    solve(s, GameConfig::D_GAME)
}

/// `γ_g'(G|S)`: Staller starts, no passes.
pub fn gamma_g_prime(s: &PartialState) -> GameValue {
    solve(s, GameConfig::S_GAME)
}

pub fn gamma_g_sp(s: &PartialState) -> GameValue {
    solve(s, GameConfig::D_GAME_STALLER_PASS)
}

pub fn gamma_g_sp_prime(s: &PartialState) -> GameValue {
    solve(s, GameConfig::S_GAME_STALLER_PASS)
}

pub fn gamma_g_dp(s: &PartialState) -> GameValue {
    solve(s, GameConfig::D_GAME_DOMINATOR_PASS)
}

pub fn gamma_g_dp_prime(s: &PartialState) -> GameValue {
    solve(s, GameConfig::S_GAME_DOMINATOR_PASS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_path, build_path_component, PathComponent};

    fn ids(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn legal_moves_examples() {
        let done = PartialState::new(build_path(3).unwrap(), VertexSet::full(3)).unwrap();
        assert!(legal_moves(&done).is_empty());
        let p2 = build_path_component(PathComponent::prime(2)).unwrap();
        assert_eq!(legal_moves(&p2), ids(&[0, 1, 2]));
        let p1 = PartialState::fresh(build_path(1).unwrap());
        assert_eq!(legal_moves(&p1), ids(&[0]));
        // Vertex 0 of P_3 with {0, 1} dominated is no longer legal.
        let s = PartialState::new(build_path(3).unwrap(), ids(&[0, 1])).unwrap();
        assert_eq!(legal_moves(&s), ids(&[1, 2]));
    }

    #[test]
    fn game_over_is_zero_everywhere() {
        let s = PartialState::new(build_path(4).unwrap(), VertexSet::full(4)).unwrap();
        for pass in [PassRule::None, PassRule::StallerPass, PassRule::DominatorPass] {
            for first in [Player::Dominator, Player::Staller] {
                assert_eq!(solve(&s, GameConfig::new(first, pass)), GameValue::ZERO);
            }
        }
        assert_eq!(optimal_move(&s, GameConfig::D_GAME), Err(SolverError::GameOver));
    }

    #[test]
    fn optimal_moves() {
        let p3 = PartialState::fresh(build_path(3).unwrap());
        assert_eq!(optimal_move(&p3, GameConfig::D_GAME), Ok(Move::Vertex(1)));
        let pp3 = build_path_component(PathComponent::prime(3)).unwrap();
        assert_eq!(optimal_move(&pp3, GameConfig::D_GAME), Ok(Move::Vertex(2)));
    }

    #[test]
    fn pass_is_ordered_last() {
        // On a fully undominated K_1 Staller-start, Staller may pass, but
        // playing the vertex achieves the same value 1 and wins the tie.
        let k1 = PartialState::fresh(build_path(1).unwrap());
        let mut solver = Solver::new(k1.graph().clone());
        let key = GameConfig::S_GAME_STALLER_PASS.start(VertexSet::EMPTY);
        let moves = solver.move_values(key, PassRule::StallerPass);
        assert_eq!(moves, vec![(Move::Vertex(0), GameValue(1)), (Move::Pass, GameValue(1))]);
        assert_eq!(solver.best_move_at(key, PassRule::StallerPass), Ok(Move::Vertex(0)));
    }

    #[test]
    fn trace_replays_value() {
        let g = build_path(7).unwrap();
        let mut solver = Solver::new(g);
        for cfg in [GameConfig::D_GAME, GameConfig::S_GAME_STALLER_PASS, GameConfig::D_GAME_DOMINATOR_PASS] {
            let value = solver.value(VertexSet::EMPTY, cfg);
            let trace = solver.trace(VertexSet::EMPTY, cfg);
            let counted = trace.iter().filter(|s| s.action != Move::Pass).count();
            assert_eq!(counted as u32, value.0);
            assert!(trace.iter().filter(|s| s.action == Move::Pass).count() <= 1);
            assert_eq!(trace.last().unwrap().remaining, GameValue::ZERO);
        }
    }

    #[test]
    fn reset_reuses_tables() {
        let mut solver = Solver::new(build_path(5).unwrap());
        let a = solver.gamma_g(VertexSet::EMPTY);
        assert!(solver.table_len() > 0);
        solver.reset(build_path(4).unwrap());
        assert_eq!(solver.table_len(), 0);
        assert_eq!(solver.gamma_g(VertexSet::EMPTY), GameValue(2));
        solver.reset(build_path(5).unwrap());
        assert_eq!(solver.gamma_g(VertexSet::EMPTY), a);
    }

    #[test]
    fn options_keep_values() {
        use crate::lemmas::corpus::{random_connected_graph, random_subset, rng};
        use rand::Rng;
        let mut r = rng(21);
        let configs = [
            GameConfig::D_GAME,
            GameConfig::S_GAME,
            GameConfig::D_GAME_STALLER_PASS,
            GameConfig::S_GAME_STALLER_PASS,
            GameConfig::D_GAME_DOMINATOR_PASS,
            GameConfig::S_GAME_DOMINATOR_PASS,
        ];
        let variants = [
            SolverOptions::FAST,
            SolverOptions { alpha_beta: false, ..SolverOptions::FAST },
            SolverOptions { prune: false, ..SolverOptions::FAST },
            SolverOptions { memoize: false, ..SolverOptions::FAST },
        ];
        for _ in 0..120 {
            let order = r.gen_range(1..=9);
            let g = random_connected_graph(&mut r, order);
            let mut plain = Solver::new(g.clone());
            let mut others: Vec<Solver> = variants.iter().map(|&o| Solver::with_options(g.clone(), o)).collect();
            for _ in 0..4 {
                let d = random_subset(&mut r, g.vertices());
                for cfg in configs {
                    let want = plain.value(d, cfg);
                    for s in others.iter_mut() {
                        assert_eq!(s.value(d, cfg), want, "{g:?} {d:?} {cfg:?} {:?}", s.options());
                    }
                }
            }
        }
    }

    #[test]
    fn keep_extreme_sets() {
        let mut e = [0b011, 0b001, 0b110, 0b100, 0b111];
        assert_eq!(keep_extreme(&mut e.clone(), Player::Dominator), 1);
        let n = keep_extreme(&mut e, Player::Staller);
        let mut kept = e[..n].to_vec();
        kept.sort();
        assert_eq!(kept, vec![0b001, 0b100]);
    }
}
