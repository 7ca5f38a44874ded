//! Generate hard knapsack instances: the two recipes and the named
//! families, each with its split-disjunction certificate re-checked.
//!
//!     cargo run --example generate_instances

use dkplab::bnb::check_split_certificate;
use dkplab::instance::UBound;
use dkplab::instances::{self, BetaPolicy};
use dkplab::mat::{big, int_vec};

fn main() {
    // recipe 1: bounded two-sided knapsack
    let d = instances::recipe1(
        &int_vec(&[1, 1]),
        &int_vec(&[1, -1]),
        &[UBound::finite(6), UBound::finite(6)],
        &big(5),
        Some(big(20)),
        BetaPolicy::Widest,
    )
    .unwrap();
    println!(
        "recipe1: a = {:?}, rhs in [{}, {}], certified at k = {}",
        d.a().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        d.beta1,
        d.beta2,
        d.k
    );
    assert!(check_split_certificate(&d.knapsack(), &d.p, &d.k).unwrap());

    // recipe 2: equality knapsack with unbounded variables
    let d = instances::recipe2(
        &int_vec(&[1, 1]),
        &int_vec(&[-11, 5]),
        &big(1),
        Some(big(29)),
        BetaPolicy::Widest,
    )
    .unwrap();
    println!(
        "recipe2: {}x1 + {}x2 = {} proven infeasible by x1+x2 <= 1 or >= 2",
        d.a()[0],
        d.a()[1],
        d.beta1
    );

    // named families
    for (name, d) in [
        ("avis(5)", instances::avis(5).unwrap()),
        ("todd(3)", instances::todd(3).unwrap()),
        ("reverse-avis(8)", instances::reverse_avis(8).unwrap()),
        ("nt(3,2)", instances::nt_family(3, 2).unwrap()),
        ("example2(7)", instances::example2(7).unwrap()),
    ] {
        let lb = instances::node_lower_bound(&d).unwrap();
        println!(
            "{name}: a = {:?}, rhs = {}, node floor {lb}",
            d.a().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            d.beta1
        );
    }
}
