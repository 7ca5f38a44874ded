//! Randomized checks of the construction and easiness theorems: existence
//! of certified right-hand sides under the explicit M bounds, node-count
//! floors for both recipes across branching orders, width domination after
//! reformulation, and the Frobenius inequality for equality knapsacks.

use dkplab::bnb::{check_split_certificate, solve, BranchOrder, BranchStrategy, SolveStatus};
use dkplab::instance::{Knapsack, UBound};
use dkplab::instances::{
    binomial, ell, frobenius_bruteforce, node_lower_bound, recipe1, recipe2, BetaPolicy,
};
use dkplab::lattice::ReductionProfile;
use dkplab::lp::width;
use dkplab::mat::{big, int_vec, isqrt, smallest_int_exceeding, IntVec};
use dkplab::reformulate::{ahl, rangespace, AhlOutcome};
use dkplab::rng::SplitMix64;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Existence part of the first construction theorem: with
/// M > 2 sqrt(n) (||r||+1)^2 ||p|| + 1 there are integers beta1 <= beta2 in
/// the open interval (kM + sqrt(n)||r||, (k+1)M - sqrt(n)||r||), and every
/// such pair gives a certified unit-box DKP.
#[test]
fn construction_theorem_unit_box() {
    let mut g = SplitMix64::new(71);
    for trial in 0..12 {
        let n = 2 + trial % 5; // up to 6
        let p: IntVec = (0..n).map(|_| big(g.range_i64(1, 4))).collect();
        let r: IntVec = (0..n).map(|_| big(g.range_i64(-3, 3))).collect();
        let total: BigInt = p.iter().sum();
        let k = big(g.range_i64(0, 1).max(0)) + big((trial % 2) as i64);
        if k >= total {
            continue;
        }
        let s: BigInt = r.iter().map(|v| v * v).sum();
        let w: BigInt = p.iter().map(|v| v * v).sum();
        // M = smallest integer > 2 sqrt(n)(||r||+1)^2 ||p|| + 1
        let bound_wo_one = {
            // 2 (s+1) sqrt(n w) + 4 sqrt(n w s)
            let x = big(n as i64) * &w;
            let y = &x * &s;
            smallest_int_exceeding(&(big(2) * (&s + 1)), &x, &big(4), &y)
        };
        let m = bound_wo_one + 1;
        // integer endpoints of the open interval
        let ns = big(n as i64) * &s;
        let beta1: BigInt = &k * &m + isqrt(&ns) + 1;
        let beta2: BigInt = (&k + 1) * &m - isqrt(&ns) - 1;
        assert!(beta1 <= beta2, "interval admits integers");
        let a: IntVec = p.iter().zip(&r).map(|(pi, ri)| pi * &m + ri).collect();
        let kp = Knapsack::new(a, beta1, beta2, vec![UBound::Finite(BigInt::one()); n]);
        assert!(check_split_certificate(&kp, &p, &k).unwrap());

        // easiness side: rangespace + KZ closes at the root when branching
        // last-variable-first
        if n <= 5 {
            let inst = kp.to_instance();
            let reform = rangespace(&inst, &ReductionProfile::kz()).unwrap();
            let rep = solve(
                &reform.inst_new,
                &BranchStrategy::variable(BranchOrder::Fixed((0..n).rev().collect())),
                None,
            )
            .unwrap();
            assert_eq!(rep.status, SolveStatus::Infeasible);
            assert_eq!(rep.nodes_lp_feasible, 1);
        }
    }
}

/// Analogue for the equality recipe: under
/// M > max(k q_n - k q_1 - q_1 + 1, 2 sqrt(n) ||r||^2 ||p||^2) a certified
/// rhs exists and the kernel reformulation closes at the root.
#[test]
fn construction_theorem_equality() {
    let mut g = SplitMix64::new(72);
    let mut done = 0;
    while done < 8 {
        let n = 2 + done % 3; // up to 4
        let mut p: Vec<i64> = (0..n).map(|_| g.range_i64(1, 3)).collect();
        let mut r: Vec<i64> = (0..n).map(|_| g.range_i64(-3, 3)).collect();
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&i, &j| (r[i] * p[j]).cmp(&(r[j] * p[i])));
        p = idx.iter().map(|&i| p[i]).collect();
        r = idx.iter().map(|&i| r[i]).collect();
        if r[0] * p[n - 1] == r[n - 1] * p[0] {
            continue;
        }
        done += 1;
        let pb = int_vec(&p);
        let rb = int_vec(&r);
        let k = big(g.range_i64(0, 3));
        let s: BigInt = rb.iter().map(|v| v * v).sum();
        let w: BigInt = pb.iter().map(|v| v * v).sum();
        // 2 sqrt(n) s w as an exact threshold
        let m_geom = smallest_int_exceeding(&(big(2) * &s * &w), &big(n as i64), &big(0), &big(0));
        // ratio side of the bound, in exact rationals
        let q1 = dkplab::mat::Rat::new(rb[0].clone(), pb[0].clone());
        let qn = dkplab::mat::Rat::new(rb[n - 1].clone(), pb[n - 1].clone());
        let kq = dkplab::mat::Rat::from_integer(k.clone()) * (&qn - &q1) - &q1
            + dkplab::mat::Rat::from_integer(big(1));
        let m_ratio: BigInt = kq.ceil().to_integer() + 1;
        let m = m_geom.max(m_ratio).max(big(2));
        let d = recipe2(&pb, &rb, &k, Some(m), BetaPolicy::Widest).unwrap();
        assert!(check_split_certificate(&d.knapsack(), &d.p, &d.k).unwrap());

        let inst = d.instance();
        match ahl(&inst, &[0], &ReductionProfile::kz(), true).unwrap() {
            AhlOutcome::ProvenInfeasible { .. } => {}
            AhlOutcome::Reform(reform) => {
                let lam = reform.inst_new.num_vars();
                let rep = solve(
                    &reform.inst_new,
                    &BranchStrategy::variable(BranchOrder::Fixed((0..lam).rev().collect())),
                    None,
                )
                .unwrap();
                assert_eq!(rep.status, SolveStatus::Infeasible);
                assert_eq!(rep.nodes_lp_feasible, 1, "n={n} k={k}");
            }
        }
    }
}

/// Node-count floor for unit-box recipe outputs across five orders.
#[test]
fn recipe1_node_floor_across_orders() {
    let mut g = SplitMix64::new(73);
    for trial in 0..6 {
        let n = 4 + trial % 5; // up to 8
        let p: IntVec = (0..n).map(|_| big(g.range_i64(1, 3))).collect();
        let r: IntVec = (0..n).map(|_| big(g.range_i64(-2, 2))).collect();
        let total: BigInt = p.iter().sum();
        let k: BigInt = &total / 2;
        if k.is_zero() || k >= total {
            continue;
        }
        let u = vec![UBound::Finite(BigInt::one()); n];
        let d = match recipe1(&p, &r, &u, &k, None, BetaPolicy::Widest) {
            Ok(d) => d,
            Err(_) => continue,
        };
        let floor = node_lower_bound(&d).unwrap();
        let floor_u64: u64 = floor.to_string().parse().unwrap();
        let inst = d.instance();
        let orders = [
            BranchOrder::Fixed((0..n).collect()),
            BranchOrder::Fixed((0..n).rev().collect()),
            BranchOrder::MostFractional,
            BranchOrder::Random(11),
            BranchOrder::Random(12),
        ];
        for order in orders {
            let rep = solve(&inst, &BranchStrategy::variable(order), None).unwrap();
            assert_eq!(rep.status, SolveStatus::Infeasible);
            assert!(
                rep.nodes_lp_feasible >= floor_u64,
                "n={n}: {} < 2^ell = {floor_u64}",
                rep.nodes_lp_feasible
            );
        }
        assert_eq!(floor, BigInt::one() << ell(&d.p, &d.k));
    }
}

/// Binomial floor for equality-knapsack recipe outputs (unbounded x).
#[test]
fn recipe2_node_floor() {
    let mut g = SplitMix64::new(74);
    let mut done = 0;
    while done < 5 {
        let n = 2 + done % 3; // up to 4
        let mut p: Vec<i64> = (0..n).map(|_| g.range_i64(1, 3)).collect();
        let mut r: Vec<i64> = (0..n).map(|_| g.range_i64(-3, 3)).collect();
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&i, &j| (r[i] * p[j]).cmp(&(r[j] * p[i])));
        p = idx.iter().map(|&i| p[i]).collect();
        r = idx.iter().map(|&i| r[i]).collect();
        if r[0] * p[n - 1] == r[n - 1] * p[0] {
            continue;
        }
        let pb = int_vec(&p);
        let rb = int_vec(&r);
        let k = big(g.range_i64(1, 6));
        let d = match recipe2(&pb, &rb, &k, None, BetaPolicy::Widest) {
            Ok(d) => d,
            Err(_) => continue,
        };
        done += 1;
        let pmax = d.p.iter().max().unwrap();
        let floor = binomial(&(d.k.div_floor(pmax) + big((n - 1) as i64)), n - 1);
        assert_eq!(node_lower_bound(&d).unwrap(), floor);
        let floor_u64: u64 = floor.to_string().parse().unwrap();
        let rep = solve(&d.instance(), &BranchStrategy::default(), None).unwrap();
        assert_eq!(rep.status, SolveStatus::Infeasible);
        assert!(
            rep.nodes_lp_feasible >= floor_u64,
            "{} < {floor_u64}",
            rep.nodes_lp_feasible
        );
    }
}

/// The parity direction is pinned to n/2 exactly, and the closed-form
/// equality-knapsack widths agree with the LP on the seventeen-variable
/// instance.
#[test]
fn closed_form_widths_and_parity_direction() {
    // width of e.x over 2 sum x = 7, 0 <= x <= 1 collapses to the point 7/2
    let d = dkplab::instances::example2(7).unwrap();
    let inst = d.instance();
    let rep = width(&inst, &int_vec(&[1, 1, 1, 1, 1, 1, 1]));
    let half7 = dkplab::instance::Bound::Finite(dkplab::mat::ratio(7, 2));
    assert_eq!(rep.max, half7);
    assert_eq!(rep.min, half7);
    assert!(rep.iwidth().is_zero());

    // seventeen-variable equality knapsack: closed forms equal LP widths
    let p: IntVec = vec![BigInt::one(); 17];
    let r: IntVec = (-11..=5i64).map(big).collect();
    let (wp, we) = dkplab::lp::kpeq_width_closed_form(&p, &r, &big(29), &big(35)).unwrap();
    let d = recipe2(&p, &r, &big(1), Some(big(29)), BetaPolicy::Widest).unwrap();
    assert_eq!(d.beta1, big(35));
    let inst = d.instance();
    let rep = width(&inst, &p);
    assert_eq!(rep.width(), dkplab::instance::Bound::Finite(wp));
    for (i, wi) in we.iter().enumerate() {
        let mut e = vec![big(0); 17];
        e[i] = big(1);
        assert_eq!(
            width(&inst, &e).width(),
            dkplab::instance::Bound::Finite(wi.clone())
        );
    }
}

/// Direct optimization reformulation: branch and bound finds the same
/// optimum on both sides of a six-variable bounded DKP.
#[test]
fn direct_opt_equivalent_under_bnb() {
    let mut g = SplitMix64::new(77);
    let n = 6;
    let p: IntVec = (0..n).map(|_| big(g.range_i64(1, 4))).collect();
    let r: IntVec = (0..n).map(|_| big(g.range_i64(-3, 3))).collect();
    let u = vec![UBound::Finite(BigInt::one()); n];
    let k = big(3);
    let d = recipe1(&p, &r, &u, &k, Some(big(60)), BetaPolicy::Widest).unwrap();
    let a = d.a();
    // max a.x subject to a.x <= beta2 and the unit box
    let mut inst = d.instance();
    inst.lo[0] = dkplab::instance::Bound::NegInf;
    let orig = solve(&inst, &BranchStrategy::default(), Some(&a)).unwrap();
    let (c_new, reform) =
        dkplab::reformulate::direct_opt_reform(&a, &inst, &ReductionProfile::lll()).unwrap();
    let new = solve(
        &reform.inst_new,
        &BranchStrategy::variable(BranchOrder::Fixed((0..n).rev().collect())),
        Some(&c_new),
    )
    .unwrap();
    match (&orig.status, &new.status) {
        (SolveStatus::Optimal(x1, v1), SolveStatus::Optimal(y, v2)) => {
            assert_eq!(v1, v2);
            // argmaxes biject via x = U y
            let x2 = reform.point_back(y);
            assert!(inst.contains_int_point(&x2));
            assert!(inst.contains_int_point(x1));
        }
        other => panic!("expected optima on both sides, got {other:?}"),
    }
}

/// Every recipe-2 rhs is a certified lower bound on the Frobenius number.
#[test]
fn recipe2_rhs_below_frobenius() {
    let mut g = SplitMix64::new(75);
    let mut done = 0;
    while done < 8 {
        let n = 2 + done % 2;
        let mut p: Vec<i64> = (0..n).map(|_| g.range_i64(1, 4)).collect();
        let mut r: Vec<i64> = (0..n).map(|_| g.range_i64(-5, 5)).collect();
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&i, &j| (r[i] * p[j]).cmp(&(r[j] * p[i])));
        p = idx.iter().map(|&i| p[i]).collect();
        r = idx.iter().map(|&i| r[i]).collect();
        if r[0] * p[n - 1] == r[n - 1] * p[0] {
            continue;
        }
        let pb = int_vec(&p);
        let rb = int_vec(&r);
        let d = match recipe2(&pb, &rb, &big(g.range_i64(0, 4)), None, BetaPolicy::Widest) {
            Ok(d) => d,
            Err(_) => continue,
        };
        let a = d.a();
        if !dkplab::mat::gcd_vec(&a).is_one() {
            continue;
        }
        done += 1;
        let frob = frobenius_bruteforce(&a).unwrap();
        assert!(d.beta1 <= frob, "beta = {} > Frob = {frob}", d.beta1);
    }
}

/// Width domination after reformulation: with M above the zero-pattern
/// bound, the width along the last unit direction of the reformulated
/// problem is at most the width along p in the original.
#[test]
fn reformulated_unit_width_dominated_by_p_width() {
    let mut g = SplitMix64::new(76);
    let mut done = 0;
    while done < 6 {
        let n = 2 + done % 3; // up to 4
        let p: IntVec = (0..n).map(|_| big(g.range_i64(1, 3))).collect();
        let r: IntVec = (0..n).map(|_| big(g.range_i64(-3, 3))).collect();
        let parallel = (0..n - 1).all(|i| &r[i] * &p[i + 1] == &r[i + 1] * &p[i]);
        if parallel {
            continue;
        }
        done += 1;
        let profile = ReductionProfile::kz();
        let cn_sq = profile.reduction_factor_sq(n);
        let s: BigInt = r.iter().map(|v| v * v).sum();
        let w: BigInt = p.iter().map(|v| v * v).sum();

        // rangespace side: alpha_{n-1} <= ||p||, so use ||p|| directly
        let m = dkplab::reformulate::rangespace_zero_m_bound(&cn_sq, &s, &w);
        let k = big(g.range_i64(0, 4));
        let u = vec![UBound::finite(3); n];
        if let Ok(d) = recipe1(&p, &r, &u, &k, Some(m), BetaPolicy::Widest) {
            let inst = d.instance();
            let reform = rangespace(&inst, &profile).unwrap();
            let mut e_last = vec![big(0); n];
            e_last[n - 1] = big(1);
            let wp = width(&inst, &p);
            let we = width(&reform.inst_new, &e_last);
            assert!(we.width().cmp_bound(&wp.width()) != std::cmp::Ordering::Greater);
            let (iw_e, iw_p) = (we.iwidth(), wp.iwidth());
            if let (dkplab::lp::IWidth::Finite(a), dkplab::lp::IWidth::Finite(b)) = (&iw_e, &iw_p) {
                assert!(a <= b);
            }
        }

        // kernel side on the equality knapsack: alpha_{n-1}^2 <= ||p||^2
        let m2 = dkplab::reformulate::ahl_zero_m_bound(&cn_sq, &s, &w);
        if let Ok(d) = recipe2(&p, &r, &big(1), Some(m2), BetaPolicy::Widest) {
            let inst = d.instance();
            if let AhlOutcome::Reform(reform) = ahl(&inst, &[0], &profile, true).unwrap() {
                let lam = reform.inst_new.num_vars();
                if lam == 0 {
                    continue;
                }
                let mut e_last = vec![big(0); lam];
                e_last[lam - 1] = big(1);
                let wp = width(&inst, &p);
                let we = width(&reform.inst_new, &e_last);
                assert!(we.width().cmp_bound(&wp.width()) != std::cmp::Ordering::Greater);
            }
        }
    }
}
