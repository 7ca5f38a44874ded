//! Width geometry across reformulations: c and cU span the same range over
//! the original and rangespace-reformulated relaxations, and the kernel
//! reformulation admits an exact reverse map through the dual basis V*.
//!
//!     cargo run --example width_correspondence

use dkplab::instance::{Knapsack, UBound};
use dkplab::lattice::ReductionProfile;
use dkplab::lp::width;
use dkplab::mat::{big, int_vec, IntMat};
use dkplab::reformulate::{ahl, rangespace, AhlOutcome};

fn main() {
    let d = dkplab::instances::example1();
    let inst = d.instance();
    let reform = rangespace(&inst, &ReductionProfile::lll()).unwrap();
    for c in [int_vec(&[1, 1]), int_vec(&[1, 0]), int_vec(&[3, -2])] {
        let cu = reform.map_forward(&c);
        let w1 = width(&inst, &c);
        let w2 = width(&reform.inst_new, &cu);
        println!(
            "c = {:?} -> cU = {:?}: width {} = {}",
            c.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            cu.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            w1.width(),
            w2.width()
        );
        assert_eq!(w1.width(), w2.width());
    }

    // kernel side with the reverse map
    let kp = Knapsack::equality(int_vec(&[7, 11, 29]), big(45), vec![UBound::finite(8); 3]);
    let inst = kp.to_instance();
    if let AhlOutcome::Reform(r) = ahl(&inst, &[0], &ReductionProfile::lll(), true).unwrap() {
        assert_eq!(r.v_star.mul(&r.v_mat), IntMat::identity(2));
        for dvec in [int_vec(&[1, 0]), int_vec(&[0, 1]), int_vec(&[2, -1])] {
            let c = r.map_reverse(&dvec);
            let w_lambda = width(&r.inst_new, &dvec);
            let w_x = width(&inst, &c);
            println!(
                "d = {:?} -> d V* = {:?}: width {} = {}",
                dvec.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                c.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                w_lambda.width(),
                w_x.width()
            );
            assert_eq!(w_lambda.width(), w_x.width());
        }
    }
}
