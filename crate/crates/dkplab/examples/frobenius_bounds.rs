//! Frobenius numbers from the branching viewpoint: the range of right-hand
//! sides whose infeasibility has a split-disjunction certificate, the
//! p-branching Frobenius number it pins down, and the classic residue-table
//! oracle for the true Frobenius number.
//!
//!     cargo run --example frobenius_bounds

use dkplab::instances::{
    al_frob_lower, f_m_delta, frob_branching_range, frob_p_bounds, frobenius_bruteforce,
};
use dkplab::mat::{big, int_vec};

fn main() {
    let p = int_vec(&[1, 1]);
    let r = int_vec(&[-11, 5]);
    let m = big(29);
    println!("p = (1,1), r = (-11,5), M = 29, a = (18,34)");
    println!("f(M,0) = {}", f_m_delta(&p, &r, &m, 0).unwrap());
    println!("f(M,1) = {}", f_m_delta(&p, &r, &m, 1).unwrap());
    let (lo, hi) = frob_branching_range(&p, &r, &m).unwrap();
    println!("certified rhs interval: ({lo}, {hi})");
    let (lo, hi) = frob_p_bounds(&p, &r, &m).unwrap();
    println!("p-branching Frobenius number in ({lo}, {hi}) -> Frob_p(a) = 35");

    for a in [vec![2i64, 3], vec![3, 5], vec![6, 9, 20]] {
        let ab = int_vec(&a);
        println!("Frob({a:?}) = {}", frobenius_bruteforce(&ab).unwrap());
    }

    // the closed-form lower bound from the extreme ratio pair
    let r2 = int_vec(&[5, -10]);
    let bound = al_frob_lower(&p, &r2, &m, 0, 1).unwrap();
    let a2 = int_vec(&[34, 19]);
    println!(
        "ratio-pair lower bound for a = (34,19): {bound} <= Frob = {}",
        frobenius_bruteforce(&a2).unwrap()
    );
}
