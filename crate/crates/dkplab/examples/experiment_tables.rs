//! A miniature run of the experiment tables: random DKPs solved in their
//! original and reformulated shapes, node counts side by side as CSV.
//!
//!     cargo run --example experiment_tables

use dkplab::experiment::{run, ExperimentConfig, Table};

fn main() {
    let mut cfg = ExperimentConfig::new(Table::T1, 8, 3, 42);
    cfg.node_limit = 50_000;
    let csv = run(&cfg).unwrap();
    println!("{csv}");
    println!("columns ending in _R/_N are reformulated runs (LP-feasible node counts);");
    println!("_px is the original plus an explicit z = p.x variable branched first.");
}
