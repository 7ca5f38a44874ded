//! Node-count hardness in action: certified instances force ordinary
//! branch and bound through exponentially many LP-feasible nodes, while
//! constraint branching on the backbone p closes the root.
//!
//!     cargo run --example node_counting

use dkplab::bnb::{prove_by_constraint, solve, BranchStrategy};
use dkplab::instances::{self, node_lower_bound};
use dkplab::mat::big;
use num_bigint::BigInt;

fn main() {
    for n in [5usize, 7, 9] {
        let d = instances::example2(n).unwrap();
        let inst = d.instance();
        let floor = node_lower_bound(&d).unwrap();
        let rep = solve(&inst, &BranchStrategy::default(), None).unwrap();
        println!(
            "parity n={n}: floor 2^ell = {floor}, observed {} LP-feasible nodes",
            rep.nodes_lp_feasible
        );
        let k = prove_by_constraint(&inst, &vec![BigInt::from(1); n]).unwrap();
        println!(
            "  branching on e.x proves infeasibility at the root (k = {:?})",
            k.unwrap()
        );
        let root = solve(
            &inst,
            &BranchStrategy::constraint(vec![BigInt::from(1); n]),
            None,
        )
        .unwrap();
        println!(
            "  constraint branching: {:?} after {} node(s)",
            root.status, root.nodes_total
        );
    }

    // the superexponential family
    let d = instances::nt_family(3, 2).unwrap();
    let rep = solve(&d.instance(), &BranchStrategy::default(), None).unwrap();
    println!(
        "nt(3,2): floor C(11,2) = {}, observed {} LP-feasible nodes",
        node_lower_bound(&d).unwrap(),
        rep.nodes_lp_feasible
    );
    let sorted = solve(
        &d.instance(),
        &BranchStrategy::constraint(vec![big(1), big(1), big(1)]),
        None,
    )
    .unwrap();
    println!(
        "nt(3,2) with constraint branching on e.x: {:?} after {} node(s)",
        sorted.status, sorted.nodes_total
    );
}
