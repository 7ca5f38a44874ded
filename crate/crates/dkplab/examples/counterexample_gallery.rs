//! Two cautionary constructions about reading easiness off a reduced
//! basis: a kernel basis whose p-image has several nonzeros, and an
//! LLL-reduced square basis whose longest column still spans an
//! exponentially wide direction.
//!
//!     cargo run --example counterexample_gallery

use dkplab::instances::{al_ex1, al_ex2};
use dkplab::lattice::is_lll_reduced;
use dkplab::lp::width;
use dkplab::mat::{big, ratio, IntMat};

fn main() {
    let d = al_ex1();
    println!(
        "kernel basis B of a = {:?}:",
        d.a.iter().map(|v| v.to_string()).collect::<Vec<_>>()
    );
    println!("{}", d.b);
    println!(
        "p B = {:?} (two nonzero components)",
        d.b.vec_mul(&d.p)
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
    );
    assert!(is_lll_reduced(&d.b, &ratio(3, 4)).unwrap());
    let mut cols = d.b.col_vecs();
    cols.push(d.v.clone());
    assert!(IntMat::from_cols(&cols).is_unimodular());

    let n = 6;
    let ex = al_ex2(&ratio(9, 10), n, &big(1000)).unwrap();
    println!(
        "\ngeometric basis at rho = 9/10, n = {n} (exact scale {}):",
        ex.exact_scale
    );
    println!("{}", ex.b_exact);
    assert!(is_lll_reduced(&ex.b_exact, &ratio(3, 4)).unwrap());
    let longest: Vec<_> = (0..n).map(|j| ex.b_exact.col_norm_sq(j)).collect();
    println!(
        "column squared norms grow to the last: {:?}",
        longest.iter().map(|v| v.to_string()).collect::<Vec<_>>()
    );
    let mut e_n = vec![big(0); n];
    e_n[n - 1] = big(1);
    let rep = width(&ex.polyhedron(true), &e_n);
    println!(
        "yet width(e_n) over 0 <= B lambda <= e_n is {} = (10/9)^{}",
        rep.width(),
        n - 1
    );
}
