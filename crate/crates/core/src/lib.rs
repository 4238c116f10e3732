pub mod graph;
pub mod lemmas;
pub mod solver;
pub mod trees;
