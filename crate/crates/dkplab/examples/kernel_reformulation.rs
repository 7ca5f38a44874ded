//! The kernel (AHL-style) reformulation: parametrize the solutions of the
//! equality block as x = V lambda + x_b with a reduced kernel basis, and
//! watch divisibility failures turn into outright infeasibility proofs.
//!
//!     cargo run --example kernel_reformulation

use dkplab::instance::{Knapsack, UBound};
use dkplab::instances;
use dkplab::lattice::ReductionProfile;
use dkplab::mat::{big, int_vec};
use dkplab::reformulate::{ahl, AhlOutcome};

fn main() {
    // parity instance with a slack: 2 sum x + s = 7, binary x, |s| <= 1/2
    let inst = instances::example3(7).unwrap();
    match ahl(&inst, &[0], &ReductionProfile::lll(), false).unwrap() {
        AhlOutcome::Reform(r) => {
            println!("kernel basis V:\n{}", r.v_mat);
            println!(
                "x_b = {:?}",
                r.x_b.iter().map(|v| v.to_string()).collect::<Vec<_>>()
            );
            let last = r.inst_new.num_rows() - 1;
            println!(
                "slack bound row over lambda: {} <= ({}) . lambda <= {}",
                r.inst_new.lo[last],
                r.inst_new
                    .a
                    .row(last)
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                r.inst_new.hi[last],
            );
            println!("no integer fits that interval: branching there closes the root");
        }
        AhlOutcome::ProvenInfeasible { reason } => println!("infeasible: {reason}"),
    }

    // gcd failure: 18 x1 + 34 x2 = 35 has no integer solutions at all
    let kp = Knapsack::equality(int_vec(&[18, 34]), big(35), vec![UBound::Inf, UBound::Inf]);
    match ahl(&kp.to_instance(), &[0], &ReductionProfile::lll(), true).unwrap() {
        AhlOutcome::ProvenInfeasible { reason } => {
            println!("18 x1 + 34 x2 = 35: {reason}")
        }
        _ => unreachable!(),
    }
}
