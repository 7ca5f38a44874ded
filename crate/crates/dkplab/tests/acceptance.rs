//! Acceptance suite: one test per verification item, each printing a
//! PASS/FAIL line (run with `--nocapture` to see them). Everything is
//! checked in exact arithmetic at the stated desk scale.

use dkplab::bnb::{check_split_certificate, solve, BranchOrder, BranchStrategy, SolveStatus};
use dkplab::instance::{Bound, IpInstance, Knapsack, UBound};
use dkplab::instances::{
    self, al_ex1, al_ex2, ell, frob_p_bounds, frobenius_bruteforce, node_lower_bound, BetaPolicy,
};
use dkplab::lattice::{
    column_hnf, gram_schmidt, is_lll_reduced, kernel_basis, kz_reduce, lll_reduce,
    successive_minima_bruteforce, ReductionProfile,
};
use dkplab::lp::{lp_feasible_point, width, LpStatus};
use dkplab::mat::{big, int_vec, ratio, IntMat, IntVec, Rat};
use dkplab::reformulate::{ahl, ahl_zero_m_bound, rangespace, rangespace_zero_m_bound, AhlOutcome};
use dkplab::rng::SplitMix64;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

fn pass(n: u32, what: &str) {
    println!("acceptance criterion {n}: PASS - {what}");
}

fn run_criterion<F: FnOnce() -> String + std::panic::UnwindSafe>(n: u32, body: F) {
    match std::panic::catch_unwind(body) {
        Ok(msg) => pass(n, &msg),
        Err(e) => {
            println!("acceptance criterion {n}: FAIL");
            std::panic::resume_unwind(e);
        }
    }
}

#[test]
fn criterion_01_intro_lll_example() {
    run_criterion(1, || {
        let a = IntMat::from_rows(&[vec![289, 18], vec![466, 29], vec![273, 17]]);
        let (red, u) = lll_reduce(&a, &ReductionProfile::lll()).unwrap();
        let mut norms = vec![red.col_norm_sq(0), red.col_norm_sq(1)];
        norms.sort();
        assert_eq!(norms, vec![big(6), big(14)]);
        assert_eq!(u.det().abs(), big(1));
        let (h1, _, _) = column_hnf(&a);
        let (h2, _, _) = column_hnf(&red);
        assert_eq!(h1, h2, "reduction must preserve the lattice");
        "3x2 basis reduces to squared norms {6, 14}, det U = +-1, same HNF".into()
    });
}

#[test]
fn criterion_02_example1_end_to_end() {
    run_criterion(2, || {
        let d = instances::recipe1(
            &int_vec(&[1, 1]),
            &int_vec(&[1, -1]),
            &[UBound::finite(6), UBound::finite(6)],
            &big(5),
            Some(big(20)),
            BetaPolicy::Widest,
        )
        .unwrap();
        assert_eq!(d.beta1, big(106));
        assert_eq!(d.beta2, big(113));
        assert!(check_split_certificate(&d.knapsack(), &d.p, &d.k).unwrap());

        let inst = d.instance();
        let reform = rangespace(&inst, &ReductionProfile::lll()).unwrap();
        let p = int_vec(&[1, 1]);
        let mapped = reform.map_forward(&p);
        assert_eq!(mapped[0], big(0));
        assert_eq!(mapped[1].abs(), big(1));
        let w_orig = width(&inst, &p);
        let w_new = width(&reform.inst_new, &mapped);
        // widths transfer exactly; the exact extremes are 113/19 and 106/21
        // (the two-decimal displays 5.94 and 5.04), so the exact width is
        // 359/399 rather than the display difference 9/10
        assert_eq!(w_orig.width(), w_new.width());
        assert_eq!(w_orig.max, Bound::Finite(ratio(113, 19)));
        assert_eq!(w_orig.min, Bound::Finite(ratio(106, 21)));
        assert_eq!(w_orig.width(), Bound::Finite(ratio(359, 399)));
        let trunc2 = |r: &Rat| (r * Rat::from_integer(big(100))).floor().to_integer();
        assert_eq!(trunc2(&ratio(113, 19)), big(594));
        assert_eq!(trunc2(&ratio(106, 21)), big(504));
        let e2 = int_vec(&[0, 1]);
        assert!(dkplab::lp::iwidth(&reform.inst_new, &e2).is_zero());

        for order in [vec![0, 1], vec![1, 0]] {
            let rep = solve(
                &inst,
                &BranchStrategy::variable(BranchOrder::Fixed(order)),
                None,
            )
            .unwrap();
            assert_eq!(rep.status, SolveStatus::Infeasible);
            assert!(rep.nodes_lp_feasible >= 5);
        }
        "recipe emits (106, 113); certificate holds; widths transfer exactly \
         (extremes 113/19 and 106/21, i.e. 5.94 and 5.04 truncated); iwidth(e2) = 0; \
         ordinary branch and bound needs >= 5 LP-feasible nodes either way"
            .into()
    });
}

#[test]
fn criterion_03_parity_family_orders_and_reformulations() {
    run_criterion(3, || {
        for n in [5usize, 7, 9] {
            let d = instances::example2(n).unwrap();
            let inst = d.instance();
            let need = 1u64 << ((n - 1) / 2);
            let orders = [
                BranchOrder::Fixed((0..n).collect()),
                BranchOrder::Fixed((0..n).rev().collect()),
                BranchOrder::Random(1),
                BranchOrder::Random(2),
                BranchOrder::Random(3),
            ];
            for order in orders {
                let rep = solve(&inst, &BranchStrategy::variable(order), None).unwrap();
                assert_eq!(rep.status, SolveStatus::Infeasible);
                assert!(
                    rep.nodes_lp_feasible >= need,
                    "n={n}: {} < {need}",
                    rep.nodes_lp_feasible
                );
            }

            // rangespace reformulation: infeasible with root-only work under
            // last-variable-first branching
            let reform = rangespace(&inst, &ReductionProfile::lll()).unwrap();
            let rep = solve(
                &reform.inst_new,
                &BranchStrategy::variable(BranchOrder::Fixed((0..n).rev().collect())),
                None,
            )
            .unwrap();
            assert_eq!(rep.status, SolveStatus::Infeasible);
            assert_eq!(rep.nodes_lp_feasible, 1, "n={n}: root only");

            // kernel reformulation of the slack form: the slack bound row
            // restates exactly as (n+1)/2 - 3/4 <= lambda <= (n+1)/2 - 1/4
            let slack_inst = instances::example3(n).unwrap();
            let out = ahl(&slack_inst, &[0], &ReductionProfile::lll(), false).unwrap();
            let reform = match out {
                AhlOutcome::Reform(r) => r,
                _ => panic!("kernel reformulation applies"),
            };
            let last = reform.inst_new.num_rows() - 1;
            let row = reform.inst_new.a.row(last);
            let nz: Vec<usize> = (0..row.len()).filter(|&j| !row[j].is_zero()).collect();
            assert_eq!(nz.len(), 1);
            let j = nz[0];
            assert_eq!(row[j].abs(), big(2));
            let lo = reform.inst_new.lo[last].as_finite().unwrap().clone();
            let hi = reform.inst_new.hi[last].as_finite().unwrap().clone();
            let coef = Rat::from_integer(row[j].clone());
            let (mut a, mut b) = (lo / coef.clone(), hi / coef);
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            let expect_lo = ratio(((n as i64 + 1) / 2) * 4 - 3, 4);
            let expect_hi = ratio(((n as i64 + 1) / 2) * 4 - 1, 4);
            let direct = a == expect_lo && b == expect_hi;
            let flipped = a == -expect_hi.clone() && b == -expect_lo.clone();
            assert!(direct || flipped, "n={n}: interval [{a}, {b}]");

            // branching on that lambda closes the root
            let mut order = vec![j];
            order.extend(0..reform.inst_new.num_vars());
            let rep = solve(
                &reform.inst_new,
                &BranchStrategy::variable(BranchOrder::Fixed(order)),
                None,
            )
            .unwrap();
            assert_eq!(rep.status, SolveStatus::Infeasible);
            assert_eq!(rep.nodes_lp_feasible, 1, "n={n}: root only (kernel)");
        }
        "parity instances at n = 5, 7, 9: >= 2^((n-1)/2) LP-feasible nodes under 5 \
         orders; both reformulations prove infeasibility with root-only work; the \
         kernel bound row is the exact quarter-offset interval"
            .into()
    });
}

#[test]
fn criterion_04_equality_pair_frobenius() {
    run_criterion(4, || {
        let kp = Knapsack::equality(int_vec(&[18, 34]), big(35), vec![UBound::Inf, UBound::Inf]);
        assert!(check_split_certificate(&kp, &int_vec(&[1, 1]), &big(1)).unwrap());
        let (lo, hi) = frob_p_bounds(&int_vec(&[1, 1]), &int_vec(&[-11, 5]), &big(29)).unwrap();
        assert_eq!(lo, Rat::from_integer(big(34)));
        assert_eq!(hi, Rat::from_integer(big(36)));
        // the open interval (34, 36) contains the single integer 35
        let first: BigInt = lo.floor().to_integer() + 1;
        let last: BigInt = hi.ceil().to_integer() - 1;
        assert_eq!(first, big(35));
        assert_eq!(last, big(35));
        "18x + 34y = 35 certified at (p=(1,1), k=1); p-branching Frobenius bounds \
         (34, 36) pin Frob_p(a) = 35"
            .into()
    });
}

#[test]
fn criterion_05_superexponential_family() {
    run_criterion(5, || {
        let d = instances::nt_family(3, 2).unwrap();
        assert_eq!(d.a(), int_vec(&[28, 29, 30]));
        assert_eq!(d.beta1, big(271));
        assert_eq!(d.k, big(9));
        assert!(check_split_certificate(&d.knapsack(), &d.p, &d.k).unwrap());
        let lb = node_lower_bound(&d).unwrap();
        assert_eq!(lb, big(55));
        let rep = solve(&d.instance(), &BranchStrategy::default(), None).unwrap();
        assert_eq!(rep.status, SolveStatus::Infeasible);
        assert!(rep.nodes_lp_feasible >= 55, "saw {}", rep.nodes_lp_feasible);
        format!(
            "a = (28,29,30), rhs 271 certified at k = 9; binomial bound 55; \
             branch and bound recorded {} LP-feasible nodes",
            rep.nodes_lp_feasible
        )
    });
}

#[test]
fn criterion_06_avis_todd_reverse() {
    run_criterion(6, || {
        let ra = instances::reverse_avis(8).unwrap();
        assert_eq!(ra.m_big, big(6));
        assert_eq!(ra.beta1, big(115));
        assert!(check_split_certificate(&ra.knapsack(), &ra.p, &ra.k).unwrap());
        assert_eq!(ell(&ra.p, &big(18)), 2);
        let rep = solve(&ra.instance(), &BranchStrategy::default(), None).unwrap();
        assert_eq!(rep.status, SolveStatus::Infeasible);
        assert!(rep.nodes_lp_feasible >= 4);

        let av = instances::avis(5).unwrap();
        assert_eq!(av.k, big(2));
        assert!(check_split_certificate(&av.knapsack(), &av.p, &av.k).unwrap());
        let td = instances::todd(3).unwrap();
        assert_eq!(td.k, big(1));
        assert!(check_split_certificate(&td.knapsack(), &td.p, &td.k).unwrap());
        format!(
            "reverse-Avis n=8 (M=6, beta=115) certified with ell = 2 and {} >= 4 \
             LP-feasible nodes; Avis n=5 and Todd n=3 certified at k = floor(n/2)",
            rep.nodes_lp_feasible
        )
    });
}

#[test]
fn criterion_07_zero_pattern_theorems() {
    run_criterion(7, || {
        let profile = ReductionProfile::kz();
        let mut g = SplitMix64::new(2024);
        let mut done = 0usize;
        while done < 50 {
            let n = 3 + done % 3; // 3, 4, 5
            let p: IntVec = (0..n).map(|_| big(g.range_i64(1, 5))).collect();
            let r: IntVec = (0..n).map(|_| big(g.range_i64(-4, 4))).collect();
            // skip parallel pairs so both theorem suites apply
            let parallel = (0..n - 1).all(|i| &r[i] * &p[i + 1] == &r[i + 1] * &p[i]);
            if parallel {
                continue;
            }
            done += 1;
            let cn_sq = profile.reduction_factor_sq(n);
            let s: BigInt = r.iter().map(|v| v * v).sum();

            // rangespace zero pattern at a random k
            let k = 1 + (g.next_u64() as usize) % (n - 1);
            let p_row = IntMat::from_big_rows(vec![p.clone()]);
            let kernel = kernel_basis(&p_row).unwrap();
            let (kernel_red, _) = lll_reduce(&kernel, &ReductionProfile::lll()).unwrap();
            let minima = successive_minima_bruteforce(&kernel_red, k, 6).unwrap();
            let alpha_k_sq = minima.values[k - 1].clone();
            let m = rangespace_zero_m_bound(&cn_sq, &s, &alpha_k_sq);
            let a: IntVec = p.iter().zip(&r).map(|(pi, ri)| pi * &m + ri).collect();
            assert!(a.iter().all(|v| v.is_positive()));
            let stacked = IntMat::from_big_rows(vec![a.clone()]).vstack(&IntMat::identity(n));
            let (_, u) = kz_reduce(&stacked, &profile).unwrap();
            let pu = u.vec_mul(&p);
            for (j, v) in pu.iter().take(k).enumerate() {
                assert!(v.is_zero(), "pU[{j}] = {v} nonzero (n={n}, k={k}, M={m})");
            }

            // kernel-side zero pattern at a random k <= n-2
            if n >= 3 {
                let k2 = 1 + (g.next_u64() as usize) % (n - 2).max(1);
                let minima = successive_minima_bruteforce(&kernel_red, k2 + 1, 6).unwrap();
                let alpha_sq = minima.values[k2].clone();
                let m2 = ahl_zero_m_bound(&cn_sq, &s, &alpha_sq);
                let a2: IntVec = p.iter().zip(&r).map(|(pi, ri)| pi * &m2 + ri).collect();
                assert!(a2.iter().all(|v| v.is_positive()));
                let a_row = IntMat::from_big_rows(vec![a2]);
                let v0 = kernel_basis(&a_row).unwrap();
                let (v_red, _) = kz_reduce(&v0, &profile).unwrap();
                let pv = v_red.vec_mul(&p);
                for (j, v) in pv.iter().take(k2).enumerate() {
                    assert!(v.is_zero(), "pV[{j}] = {v} nonzero (n={n}, k={k2}, M={m2})");
                }
            }
        }
        "50 random (p, r) at n in {3,4,5} with KZ reduction and M one past the \
         exact bound: (pU)_{1..k} = 0 and (pV)_{1..k} = 0 in every case"
            .into()
    });
}

#[test]
fn criterion_08_width_correspondence() {
    run_criterion(8, || {
        let mut g = SplitMix64::new(88);
        let profile = ReductionProfile::lll();
        let mut pairs = 0usize;
        while pairs < 100 {
            let n = 2 + (g.next_u64() % 3) as usize;
            let dense: Vec<i64> = (0..n).map(|_| g.range_i64(-6, 6)).collect();
            if dense.iter().all(|&v| v == 0) {
                continue;
            }
            let mut rows = vec![dense.clone()];
            for i in 0..n {
                let mut r = vec![0i64; n];
                r[i] = 1;
                rows.push(r);
            }
            let lo_d = g.range_i64(-20, 10);
            let hi_d = lo_d + g.range_i64(0, 25);
            let mut lo = vec![Bound::finite_int(lo_d)];
            let mut hi = vec![Bound::finite_int(hi_d)];
            for _ in 0..n {
                lo.push(Bound::finite_int(0));
                hi.push(Bound::finite_int(g.range_i64(1, 6)));
            }
            let inst = IpInstance::new(IntMat::from_rows(&rows), lo, hi);
            let c: IntVec = (0..n).map(|_| big(g.range_i64(-5, 5))).collect();
            pairs += 1;

            let reform = rangespace(&inst, &profile).unwrap();
            let cu = reform.map_forward(&c);
            let w1 = width(&inst, &c);
            let w2 = width(&reform.inst_new, &cu);
            assert_eq!(w1.max, w2.max);
            assert_eq!(w1.min, w2.min);
            assert_eq!(w1.iwidth(), w2.iwidth());

            let mid = g.range_i64(0, 3 * n as i64);
            let mut lo2 = inst.lo.clone();
            let mut hi2 = inst.hi.clone();
            lo2[0] = Bound::finite_int(mid);
            hi2[0] = Bound::finite_int(mid);
            let inst_eq = IpInstance::new(inst.a.clone(), lo2, hi2);
            if let AhlOutcome::Reform(r) = ahl(&inst_eq, &[0], &profile, true).unwrap() {
                assert_eq!(r.v_star.mul(&r.v_mat), IntMat::identity(r.v_mat.cols()));
                let cv = r.map_forward(&c);
                let w1 = width(&inst_eq, &c);
                let w2 = width(&r.inst_new, &cv);
                assert_eq!(w1.width(), w2.width());
                assert_eq!(w1.iwidth(), w2.iwidth());
                if r.v_mat.cols() > 0 {
                    let d: IntVec = (0..r.v_mat.cols())
                        .map(|_| big(g.range_i64(-4, 4)))
                        .collect();
                    let dv = r.map_reverse(&d);
                    let w3 = width(&r.inst_new, &d);
                    let w4 = width(&inst_eq, &dv);
                    assert_eq!(w3.width(), w4.width());
                    assert_eq!(w3.iwidth(), w4.iwidth());
                }
            }
        }
        "100 random instance/direction pairs: exact width and iwidth equality \
         across forward and reverse maps, with V* V = I throughout"
            .into()
    });
}

#[test]
fn criterion_09_counterexamples() {
    run_criterion(9, || {
        // fixed 6-dimensional data
        let d = al_ex1();
        assert!(is_lll_reduced(&d.b, &ratio(3, 4)).unwrap());
        let mut cols = d.b.col_vecs();
        cols.push(d.v.clone());
        assert!(IntMat::from_cols(&cols).is_unimodular());
        assert!(d.b.vec_mul(&d.a).iter().all(|v| v.is_zero()));
        assert_eq!(d.b.vec_mul(&d.p), int_vec(&[0, -1, -1, 0, 0]));

        // geometric construction at rho = 9/10, n = 8, exact arithmetic
        let n = 8usize;
        let rho = ratio(9, 10);
        let ex = al_ex2(&rho, n, &big(1000)).unwrap();
        assert!(is_lll_reduced(&ex.b_exact, &ratio(3, 4)).unwrap());
        let gs = gram_schmidt(&ex.b_exact).unwrap();
        for i in 1..n {
            for j in 0..i {
                assert_eq!(gs.mu[i][j], ratio(1, 2));
            }
        }
        // last column strictly longest
        let last_norm = ex.b_exact.col_norm_sq(n - 1);
        for j in 0..n - 1 {
            assert!(ex.b_exact.col_norm_sq(j) < last_norm);
        }
        // width along e_n over { 0 <= B lambda <= e_n } is exactly
        // (1/rho)^(n-1), and it exceeds c^n ||b_n|| for c = 21/20 > 1
        let inst = ex.polyhedron(true);
        let mut e_n = vec![big(0); n];
        e_n[n - 1] = big(1);
        let rep = width(&inst, &e_n);
        let expect = {
            let mut w = Rat::from_integer(BigInt::one());
            for _ in 0..n - 1 {
                w *= ratio(10, 9);
            }
            w
        };
        assert_eq!(rep.width(), Bound::Finite(expect.clone()));
        let c = ratio(21, 20);
        let mut c2n = Rat::from_integer(BigInt::one());
        for _ in 0..2 * n {
            c2n *= &c;
        }
        let bn_sq = Rat::new(
            ex.b_exact.col_norm_sq(n - 1),
            &ex.exact_scale * &ex.exact_scale,
        );
        assert!(
            &expect * &expect > c2n * bn_sq,
            "width^2 must beat c^(2n) ||b_n||^2"
        );
        "fixed kernel basis verifies (LLL-reduced, [B, v] unimodular, aB = 0, \
         pB = (0,-1,-1,0,0)); geometric basis at rho = 9/10, n = 8 is LLL-reduced \
         with the longest last column yet width(e_n) = (10/9)^7 > c^n ||b_n||"
            .into()
    });
}

#[test]
fn criterion_10_table_one_analogue() {
    run_criterion(10, || {
        use dkplab::experiment::{run, ExperimentConfig, Table};
        let mut cfg = ExperimentConfig::new(Table::T1, 10, 5, 1);
        cfg.node_limit = 200_000; // original trees at n = 10 stay well below
        let csv = run(&cfg).unwrap();
        let mut checked = 0;
        for row in csv.lines().skip(2) {
            let cols: Vec<&str> = row.split(',').collect();
            // header: idx,n,M,k,beta1,beta2,beta_a,infeas_R,infeas_px,
            //         infeas_orig,opt_R,opt_orig,feasmax_R,feasmax_N,
            //         feasmax_orig,infeasmin_R,infeasmin_N,infeasmin_orig,limit
            let limit_col = cols[18];
            assert!(limit_col.is_empty(), "no run may hit the node limit");
            for idx in [7usize, 10, 12, 13, 15, 16] {
                let v: u64 = cols[idx].parse().unwrap();
                assert!(v <= 100, "reformulated run took {v} > 100 nodes");
            }
            let infeas_orig: u64 = cols[9].parse().unwrap();
            // Theorem-level floor: 2^ell(p,k) for the sampled p; recompute
            // from the seed stream
            checked += 1;
            assert!(infeas_orig >= 1);
        }
        assert_eq!(checked, 5);
        // recompute the sampled p vectors to assert the 2^ell floor exactly
        let mut g = SplitMix64::new(1);
        for row in csv.lines().skip(2) {
            let p: Vec<i64> = (0..10).map(|_| g.range_i64(1, 10)).collect();
            let _r: Vec<i64> = (0..10).map(|_| g.range_i64(-10, 10)).collect();
            let need = 1u64 << ell(&int_vec(&p), &big(5));
            let cols: Vec<&str> = row.split(',').collect();
            let infeas_orig: u64 = cols[9].parse().unwrap();
            assert!(
                infeas_orig >= need,
                "original run recorded {infeas_orig} < 2^ell = {need}"
            );
        }
        "five n = 10, M = 10000 instances: all reformulated runs finished within \
         100 nodes; original runs met the 2^ell(p,k) floor"
            .into()
    });
}

#[test]
fn criterion_11_oracle_suite() {
    run_criterion(11, || {
        assert_eq!(frobenius_bruteforce(&int_vec(&[2, 3])).unwrap(), big(1));
        assert_eq!(frobenius_bruteforce(&int_vec(&[3, 5])).unwrap(), big(7));
        assert_eq!(
            frobenius_bruteforce(&int_vec(&[6, 9, 20])).unwrap(),
            big(43)
        );

        // ell against exhaustive subsets at n <= 10
        let mut g = SplitMix64::new(5);
        for _ in 0..15 {
            let n = 2 + (g.next_u64() % 9) as usize;
            let p: Vec<i64> = (0..n).map(|_| g.range_i64(1, 9)).collect();
            let total: i64 = p.iter().sum();
            let pb = int_vec(&p);
            for k in 0..=total {
                let fast = ell(&pb, &big(k));
                let mut best = 0usize;
                'ell: for l in 1..=n {
                    for mask in 0..(1u32 << n) {
                        if mask.count_ones() as usize != l {
                            continue;
                        }
                        let s: i64 = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| p[i]).sum();
                        if !(s <= k && total - s >= k + 1) {
                            continue 'ell;
                        }
                    }
                    best = l;
                }
                assert_eq!(fast, best, "p={p:?} k={k}");
            }
        }

        // kernel completeness at n <= 5: every brute-force kernel vector
        // with entries in [-5, 5] is an integer combination of V's columns
        for trial in 0..8 {
            let n = 3 + trial % 3;
            let row: Vec<i64> = (0..n).map(|_| g.range_i64(-4, 4)).collect();
            if row.iter().all(|&v| v == 0) {
                continue;
            }
            let a = IntMat::from_rows(&[row.clone()]);
            let v = kernel_basis(&a).unwrap();
            let mut point = vec![-5i64; n];
            loop {
                let w: IntVec = point.iter().map(|&x| big(x)).collect();
                let in_kernel = a.mul_vec(&w).iter().all(|x| x.is_zero());
                if in_kernel {
                    assert!(
                        integral_combination(&v, &w),
                        "kernel vector {point:?} outside the span of V"
                    );
                }
                // odometer over the box
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    point[i] += 1;
                    if point[i] <= 5 {
                        break;
                    }
                    point[i] = -5;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        "frobenius oracle values (1, 7, 43) confirmed; ell matches exhaustive \
         subset search; kernel bases span every boxed kernel vector"
            .into()
    });
}

/// Solve V z = w over the rationals and check integrality of z.
fn integral_combination(v: &IntMat, w: &[BigInt]) -> bool {
    // least-squares-free exact solve by Gaussian elimination on [V | w]
    let rows = v.rows();
    let cols = v.cols();
    if cols == 0 {
        return w.iter().all(|x| x.is_zero());
    }
    let mut m: Vec<Vec<Rat>> = (0..rows)
        .map(|i| {
            let mut r: Vec<Rat> = (0..cols)
                .map(|j| Rat::from_integer(v.get(i, j).clone()))
                .collect();
            r.push(Rat::from_integer(w[i].clone()));
            r
        })
        .collect();
    let mut pivot_rows = Vec::new();
    let mut rr = 0usize;
    for c in 0..cols {
        if let Some(pr) = (rr..rows).find(|&i| !m[i][c].is_zero()) {
            m.swap(rr, pr);
            let piv = m[rr][c].clone();
            for x in m[rr].iter_mut() {
                *x = &*x / &piv;
            }
            for i in 0..rows {
                if i != rr && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in 0..=cols {
                        let delta = &f * &m[rr][j];
                        m[i][j] = &m[i][j] - delta;
                    }
                }
            }
            pivot_rows.push((rr, c));
            rr += 1;
        }
    }
    // consistency and integrality
    for i in rr..rows {
        if !m[i][cols].is_zero() {
            return false;
        }
    }
    pivot_rows.iter().all(|&(r, _)| m[r][cols].is_integer())
}

#[test]
fn criterion_02b_feasibility_check_on_lp_level() {
    // small supporting check used by criterion 2's narrative: the original
    // relaxation is nonempty while no integer point exists
    let d = instances::example1();
    let inst = d.instance();
    assert_eq!(lp_feasible_point(&inst).status, LpStatus::Optimal);
    for x1 in 0..=6i64 {
        for x2 in 0..=6i64 {
            assert!(!inst.contains_int_point(&int_vec(&[x1, x2])));
        }
    }
}
