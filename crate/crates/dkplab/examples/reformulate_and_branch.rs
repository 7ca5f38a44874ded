//! The two-variable story end to end: a DKP that ordinary branch and bound
//! finds hard becomes root-solvable after the rangespace reformulation,
//! because the backbone direction p turns into a unit direction.
//!
//!     cargo run --example reformulate_and_branch

use dkplab::bnb::{solve, BranchOrder, BranchStrategy};
use dkplab::instances;
use dkplab::lattice::ReductionProfile;
use dkplab::lp::width;
use dkplab::mat::int_vec;
use dkplab::reformulate::rangespace;

fn main() {
    let d = instances::example1();
    let inst = d.instance();
    println!("instance: 106 <= 21 x1 + 19 x2 <= 113, 0 <= x <= 6");

    let p = int_vec(&[1, 1]);
    let w = width(&inst, &p);
    println!(
        "direction p = (1,1): range [{}, {}], no integer inside (iwidth {:?})",
        w.min,
        w.max,
        w.iwidth()
    );

    for order in [vec![0, 1], vec![1, 0]] {
        let rep = solve(
            &inst,
            &BranchStrategy::variable(BranchOrder::Fixed(order.clone())),
            None,
        )
        .unwrap();
        println!(
            "variable branching, order {order:?}: {:?}, {} LP-feasible nodes",
            rep.status, rep.nodes_lp_feasible
        );
    }

    let reform = rangespace(&inst, &ReductionProfile::lll()).unwrap();
    println!("reduced rows A U:\n{}", reform.inst_new.a);
    println!("p maps to {:?}", reform.map_forward(&p));
    let rep = solve(
        &reform.inst_new,
        &BranchStrategy::variable(BranchOrder::Fixed(vec![1, 0])),
        None,
    )
    .unwrap();
    println!(
        "after reformulation, branching on y2 first: {:?} with {} LP-feasible node(s)",
        rep.status, rep.nodes_lp_feasible
    );
}
