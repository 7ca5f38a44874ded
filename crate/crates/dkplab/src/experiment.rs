//! Desk-scale experiment tables: generate random DKPs the way the
//! computational study prescribes (p uniform in [1,10], r in [-10,10],
//! M = 10000, k = n/2), then record exact branch-and-bound node counts for
//! the original formulation, the rangespace (R) and kernel (N)
//! reformulations, and the px-augmented variant. Output is versioned CSV;
//! the human-readable view is derived from the CSV, never the reverse.

use crate::bnb::{solve, BnbReport, BranchOrder, BranchStrategy, SolveStatus};
use crate::error::{Error, Result};
use crate::instance::{Bound, IpInstance, Knapsack, UBound};
use crate::instances::{frobenius_bruteforce, recipe1, recipe2, BetaPolicy, DkpParams};
use crate::lattice::ReductionProfile;
use crate::lp::{width, IWidth};
use crate::mat::{big, IntVec};
use crate::reformulate::{ahl, direct_opt_reform, rangespace, AhlOutcome};
use crate::rng::SplitMix64;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub const CSV_VERSION: &str = "dkplab-experiment v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Table {
    /// bounded DKPs with u = e
    T1,
    /// bounded DKPs with u = 10e
    T2,
    /// equality knapsacks with unbounded variables, rhs beta* and Frob(a)
    T3,
}

impl std::str::FromStr for Table {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "t1" => Ok(Table::T1),
            "t2" => Ok(Table::T2),
            "t3" => Ok(Table::T3),
            other => Err(format!("unknown table `{other}` (expected t1|t2|t3)")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub table: Table,
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    pub m_big: BigInt,
    pub node_limit: u64,
    /// original-formulation runs are exponential; sizes above this need an
    /// explicit override
    pub allow_large: bool,
    pub profile: ReductionProfile,
}

pub const ORIG_GUARD: usize = 24;

impl ExperimentConfig {
    pub fn new(table: Table, n: usize, count: usize, seed: u64) -> Self {
        ExperimentConfig {
            table,
            n,
            count,
            seed,
            m_big: big(10_000),
            node_limit: 3_000,
            allow_large: false,
            profile: ReductionProfile::lll(),
        }
    }
}

/// One solver run distilled to the theorem-comparable statistic.
#[derive(Debug, Clone)]
pub struct RunStat {
    pub nodes_lp_feasible: u64,
    pub limit_hit: bool,
}

fn stat(rep: &BnbReport) -> RunStat {
    RunStat {
        nodes_lp_feasible: rep.nodes_lp_feasible,
        limit_hit: matches!(rep.status, SolveStatus::NodeLimit),
    }
}

pub fn run(cfg: &ExperimentConfig) -> Result<String> {
    if cfg.n > ORIG_GUARD && !cfg.allow_large {
        return Err(Error::TooLarge(format!(
            "n = {} exceeds the original-formulation guard {ORIG_GUARD}; pass the override to proceed",
            cfg.n
        )));
    }
    match cfg.table {
        Table::T1 => run_bounded(cfg, 1),
        Table::T2 => run_bounded(cfg, 10),
        Table::T3 => run_equality(cfg),
    }
}

fn sample_pair(g: &mut SplitMix64, n: usize) -> (Vec<i64>, Vec<i64>) {
    let p: Vec<i64> = (0..n).map(|_| g.range_i64(1, 10)).collect();
    let r: Vec<i64> = (0..n).map(|_| g.range_i64(-10, 10)).collect();
    (p, r)
}

/// last-variable-first order: branching on the trailing variables is what
/// simulates the backbone split after reformulation
fn reform_order(n: usize) -> BranchStrategy {
    BranchStrategy::variable(BranchOrder::Fixed((0..n).rev().collect()))
}

fn orig_order() -> BranchStrategy {
    BranchStrategy::variable(BranchOrder::Fixed(Vec::new()))
}

/// Append a variable z with the row p.x - z = 0 and branch on z first.
fn augmented(inst: &IpInstance, p: &[BigInt]) -> (IpInstance, BranchStrategy) {
    let n = inst.num_vars();
    let mut rows: Vec<IntVec> = Vec::with_capacity(inst.num_rows() + 1);
    for i in 0..inst.num_rows() {
        let mut row = inst.a.row(i).to_vec();
        row.push(BigInt::zero());
        rows.push(row);
    }
    let mut prow: IntVec = p.to_vec();
    prow.push(-BigInt::one());
    rows.push(prow);
    let mut lo = inst.lo.clone();
    let mut hi = inst.hi.clone();
    lo.push(Bound::finite_int(0));
    hi.push(Bound::finite_int(0));
    let aug = IpInstance::new(crate::mat::IntMat::from_big_rows(rows), lo, hi);
    let mut order = vec![n];
    order.extend(0..n);
    (aug, BranchStrategy::variable(BranchOrder::Fixed(order)))
}

fn fmt_stat(s: &RunStat) -> String {
    format!("{}", s.nodes_lp_feasible)
}

fn run_bounded(cfg: &ExperimentConfig, ubound: i64) -> Result<String> {
    let mut g = SplitMix64::new(cfg.seed);
    let n = cfg.n;
    let k = big((n / 2) as i64);
    let mut out = String::new();
    out.push_str("# ");
    out.push_str(CSV_VERSION);
    out.push('\n');
    out.push_str(
        "idx,n,M,k,beta1,beta2,beta_a,infeas_R,infeas_px,infeas_orig,opt_R,opt_orig,\
         feasmax_R,feasmax_N,feasmax_orig,infeasmin_R,infeasmin_N,infeasmin_orig,limit_hit\n",
    );
    for idx in 0..cfg.count {
        let (p, r) = sample_pair(&mut g, n);
        let u = vec![UBound::finite(ubound); n];
        let params = recipe1(
            &crate::mat::int_vec(&p),
            &crate::mat::int_vec(&r),
            &u,
            &k,
            Some(cfg.m_big.clone()),
            BetaPolicy::Widest,
        )?;
        let pb = crate::mat::int_vec(&p);
        let mut limits: Vec<String> = Vec::new();
        let mut note = |name: &str, s: &RunStat| {
            if s.limit_hit {
                limits.push(name.to_string());
            }
        };

        // DKP-INFEAS: the two-sided instance itself
        let inst = params.instance();
        let limit = cfg.node_limit;
        let with_limit = |mut s: BranchStrategy| {
            s.node_limit = Some(limit);
            s
        };
        let reform = rangespace(&inst, &cfg.profile)?;
        let infeas_r = stat(&solve(
            &reform.inst_new,
            &with_limit(reform_order(n)),
            None,
        )?);
        note("infeas_R", &infeas_r);
        let (aug, aug_strat) = augmented(&inst, &pb);
        let infeas_px = stat(&solve(&aug, &with_limit(aug_strat), None)?);
        note("infeas_px", &infeas_px);
        let infeas_orig = stat(&solve(&inst, &with_limit(orig_order()), None)?);
        note("infeas_orig", &infeas_orig);

        // DKP-OPT: max a.x subject to a.x <= beta2 and the box
        let a = params.a();
        let opt_inst = one_sided_opt_instance(&params);
        let (c_new, opt_reform) = direct_opt_reform(&a, &opt_inst, &cfg.profile)?;
        let opt_r_rep = solve(
            &opt_reform.inst_new,
            &with_limit(reform_order(n)),
            Some(&c_new),
        )?;
        let opt_r = stat(&opt_r_rep);
        note("opt_R", &opt_r);
        let opt_orig_rep = solve(&opt_inst, &with_limit(orig_order()), Some(&a))?;
        let opt_orig = stat(&opt_orig_rep);
        note("opt_orig", &opt_orig);
        let beta_a = match (&opt_r_rep.status, &opt_orig_rep.status) {
            (SolveStatus::Optimal(_, v), _) | (_, SolveStatus::Optimal(_, v)) => v.to_integer(),
            _ => params.beta1.clone() - 1, // both runs hit the limit
        };

        // DKP-FEAS-MAX (a.x = beta_a) and DKP-INFEAS-MIN (a.x = beta_a + 1)
        let feas_kp = Knapsack::equality(a.clone(), beta_a.clone(), params.u.clone());
        let (fm_r, fm_n, fm_orig) = equality_trio(cfg, &feas_kp, n, &mut note, "feasmax")?;
        let infeas_kp = Knapsack::equality(a.clone(), &beta_a + 1, params.u.clone());
        let (im_r, im_n, im_orig) = equality_trio(cfg, &infeas_kp, n, &mut note, "infeasmin")?;

        out.push_str(&format!(
            "{idx},{n},{},{k},{},{},{beta_a},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            cfg.m_big,
            params.beta1,
            params.beta2,
            fmt_stat(&infeas_r),
            fmt_stat(&infeas_px),
            fmt_stat(&infeas_orig),
            fmt_stat(&opt_r),
            fmt_stat(&opt_orig),
            fmt_stat(&fm_r),
            fmt_stat(&fm_n),
            fmt_stat(&fm_orig),
            fmt_stat(&im_r),
            fmt_stat(&im_n),
            fmt_stat(&im_orig),
            limits.join(";"),
        ));
    }
    Ok(out)
}

fn one_sided_opt_instance(params: &DkpParams) -> IpInstance {
    let kp = params.knapsack();
    let mut inst = kp.to_instance();
    // relax the lower side of the knapsack row: a.x <= beta2 only
    inst.lo[0] = Bound::NegInf;
    inst
}

fn equality_trio(
    cfg: &ExperimentConfig,
    kp: &Knapsack,
    n: usize,
    note: &mut dyn FnMut(&str, &RunStat),
    tag: &str,
) -> Result<(RunStat, RunStat, RunStat)> {
    let inst = kp.to_instance();
    let limit = cfg.node_limit;
    let with_limit = |mut s: BranchStrategy| {
        s.node_limit = Some(limit);
        s
    };
    let reform = rangespace(&inst, &cfg.profile)?;
    let r = stat(&solve(
        &reform.inst_new,
        &with_limit(reform_order(n)),
        None,
    )?);
    note(&format!("{tag}_R"), &r);
    let nstat = match ahl(&inst, &[0], &cfg.profile, true)? {
        AhlOutcome::ProvenInfeasible { .. } => RunStat {
            nodes_lp_feasible: 0,
            limit_hit: false,
        },
        AhlOutcome::Reform(a) => {
            let lam = a.inst_new.num_vars();
            stat(&solve(&a.inst_new, &with_limit(reform_order(lam)), None)?)
        }
    };
    note(&format!("{tag}_N"), &nstat);
    let orig = stat(&solve(&inst, &with_limit(orig_order()), None)?);
    note(&format!("{tag}_orig"), &orig);
    Ok((r, nstat, orig))
}

fn run_equality(cfg: &ExperimentConfig) -> Result<String> {
    let mut g = SplitMix64::new(cfg.seed);
    let n = cfg.n;
    let mut out = String::new();
    out.push_str("# ");
    out.push_str(CSV_VERSION);
    out.push('\n');
    out.push_str(
        "idx,n,M,beta_star,frob,gcd_a,iwidth_p,bstar_R,bstar_N,bstar_px,bstar_orig,\
         frob_R,frob_N,frob_px,frob_orig,limit_hit\n",
    );
    let mut idx = 0usize;
    while idx < cfg.count {
        let (mut p, mut r) = sample_pair(&mut g, n);
        // order indices by ratio r_i/p_i so the recipe assumptions hold
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| (r[i] * p[j]).cmp(&(r[j] * p[i])));
        p = order.iter().map(|&i| p[i]).collect();
        r = order.iter().map(|&i| r[i]).collect();
        let pb = crate::mat::int_vec(&p);
        let rb = crate::mat::int_vec(&r);
        // the largest certified rhs: recipe 2 at level f(M,1) with the
        // widest policy; parallel samples are redrawn
        let level = match frob_level(&pb, &rb, &cfg.m_big) {
            Ok(k) => k,
            Err(Error::ParallelVectors) => continue,
            Err(e) => return Err(e),
        };
        let params = match recipe2(
            &pb,
            &rb,
            &level,
            Some(cfg.m_big.clone()),
            BetaPolicy::Widest,
        ) {
            Ok(d) => d,
            Err(Error::ParallelVectors) => continue,
            Err(e) => return Err(e),
        };
        let beta_star = params.beta1.clone();
        let a = params.a();
        let gcd = crate::mat::gcd_vec(&a);
        let frob = if gcd.is_one() {
            Some(frobenius_bruteforce(&a)?)
        } else {
            None
        };

        let mut limits: Vec<String> = Vec::new();
        let mut note = |name: &str, s: &RunStat| {
            if s.limit_hit {
                limits.push(name.to_string());
            }
        };

        let kp_star = Knapsack::equality(a.clone(), beta_star.clone(), vec![UBound::Inf; n]);
        let (bs_r, bs_n, bs_orig) = equality_trio(cfg, &kp_star, n, &mut note, "bstar")?;
        let (aug, aug_strat) = augmented(&kp_star.to_instance(), &pb);
        let mut s = aug_strat;
        s.node_limit = Some(cfg.node_limit);
        let bs_px = stat(&solve(&aug, &s, None)?);
        note("bstar_px", &bs_px);

        let (iw, frob_cols) = match &frob {
            Some(f) => {
                let kp_f = Knapsack::equality(a.clone(), f.clone(), vec![UBound::Inf; n]);
                let rep = width(&kp_f.to_instance(), &pb);
                let iw = match rep.iwidth() {
                    IWidth::Finite(v) => v.to_string(),
                    IWidth::Infinite => "inf".into(),
                };
                let (f_r, f_n, f_orig) = equality_trio(cfg, &kp_f, n, &mut note, "frob")?;
                let (aug, aug_strat) = augmented(&kp_f.to_instance(), &pb);
                let mut s = aug_strat;
                s.node_limit = Some(cfg.node_limit);
                let f_px = stat(&solve(&aug, &s, None)?);
                note("frob_px", &f_px);
                (
                    iw,
                    format!(
                        "{},{},{},{}",
                        fmt_stat(&f_r),
                        fmt_stat(&f_n),
                        fmt_stat(&f_px),
                        fmt_stat(&f_orig)
                    ),
                )
            }
            None => ("".into(), ",,,".into()),
        };

        out.push_str(&format!(
            "{idx},{n},{},{beta_star},{},{gcd},{iw},{},{},{},{},{frob_cols},{}\n",
            cfg.m_big,
            frob.as_ref().map(|f| f.to_string()).unwrap_or_default(),
            fmt_stat(&bs_r),
            fmt_stat(&bs_n),
            fmt_stat(&bs_px),
            fmt_stat(&bs_orig),
            limits.join(";"),
        ));
        idx += 1;
    }
    Ok(out)
}

/// k = f(M,1): the level at which the largest certified rhs lives.
fn frob_level(p: &[BigInt], r: &[BigInt], m: &BigInt) -> Result<BigInt> {
    let f1 = crate::instances::f_m_delta(p, r, m, 1)?;
    if f1.is_negative() {
        return Err(Error::InvalidK(format!("f(M,1) = {f1}")));
    }
    Ok(f1)
}
