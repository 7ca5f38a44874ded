//! Reduce a lattice basis with LLL and KZ and inspect the exact quality
//! data: transform unimodularity, lattice preservation, and the reduction
//! conditions checked verbatim in rational arithmetic.
//!
//!     cargo run --example reduce_basis

use dkplab::lattice::{column_hnf, is_lll_reduced, ReductionProfile};
use dkplab::mat::{ratio, IntMat};

fn main() {
    let a = IntMat::from_rows(&[vec![289, 18], vec![466, 29], vec![273, 17]]);
    println!("input basis (columns):\n{a}");

    for profile in [ReductionProfile::lll(), ReductionProfile::kz()] {
        let (reduced, u) = profile.reduce(&a).unwrap();
        println!("--- {} reduction ---", profile.method);
        println!("reduced columns:\n{reduced}");
        println!("transform U (det {}):\n{u}", u.det());
        println!(
            "column squared norms: {} and {}",
            reduced.col_norm_sq(0),
            reduced.col_norm_sq(1)
        );
        assert!(u.is_unimodular());
        assert_eq!(a.mul(&u), reduced);
        assert!(is_lll_reduced(&reduced, &ratio(3, 4)).unwrap());
        let (h1, _, _) = column_hnf(&a);
        let (h2, _, _) = column_hnf(&reduced);
        assert_eq!(h1, h2, "same lattice");
    }
    println!("both reductions preserve the lattice and satisfy the conditions exactly");
}
