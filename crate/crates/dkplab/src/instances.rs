//! Instance generators and closed-form quantities for decomposable
//! knapsack problems: the subset hardness exponent ell(p,k), the two
//! generation recipes, the named hard families, Frobenius-number bounds
//! with split-disjunction certificates, node-count lower bounds, and the
//! reduced-basis counterexamples.

use crate::bnb::check_split_certificate;
use crate::error::{Error, Result};
use crate::instance::{Bound, IpInstance, Knapsack, Provenance, UBound};
use crate::lp::{knapsack_extreme, ExtValue, Sense};
use crate::mat::{big, round_half_up, IntMat, IntVec, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

// ---------------------------------------------------------------------------
// ell(p, k)

/// Largest ell such that every ell-subset F of indices has p(F) <= k and
/// p(complement) >= k+1. Zero when k <= 0 or k >= sum(p). Ordinary
/// branch-and-bound needs at least 2^ell nodes on a certified instance.
pub fn ell(p: &[BigInt], k: &BigInt) -> usize {
    assert!(p.iter().all(|v| v.is_positive()), "p must be positive");
    let total: BigInt = p.iter().sum();
    if !k.is_positive() || k >= &total {
        return 0;
    }
    let mut sorted = p.to_vec();
    sorted.sort();
    sorted.reverse();
    // prefix[l] = sum of the l largest entries
    let mut best = 0usize;
    let mut prefix = BigInt::zero();
    for (l, v) in sorted.iter().enumerate() {
        prefix += v;
        let ell_candidate = l + 1;
        // all F with |F| = ell have p(F) <= prefix and p(N\F) >= total-prefix
        if &prefix <= k && &total - &prefix >= k + 1 {
            best = ell_candidate;
        } else {
            break;
        }
    }
    best
}

// ---------------------------------------------------------------------------
// recipes

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BetaPolicy {
    /// both ends of the open interval: beta1 just above the left end,
    /// beta2 just below the right end
    Widest,
    /// beta1 = beta2 = smallest integer strictly inside
    TightLow,
}

/// A validated decomposable knapsack: a = pM + r with its certificate level
/// k and the right-hand sides.
#[derive(Debug, Clone, PartialEq)]
pub struct DkpParams {
    pub p: IntVec,
    pub r: IntVec,
    pub m_big: BigInt,
    pub k: BigInt,
    pub u: Vec<UBound>,
    pub beta1: BigInt,
    pub beta2: BigInt,
    pub name: String,
}

impl DkpParams {
    pub fn a(&self) -> IntVec {
        self.p
            .iter()
            .zip(&self.r)
            .map(|(pi, ri)| pi * &self.m_big + ri)
            .collect()
    }

    /// Exact ratios q_i = r_i / p_i.
    pub fn q(&self) -> Vec<Rat> {
        self.p
            .iter()
            .zip(&self.r)
            .map(|(pi, ri)| Rat::new(ri.clone(), pi.clone()))
            .collect()
    }

    pub fn knapsack(&self) -> Knapsack {
        Knapsack::new(
            self.a(),
            self.beta1.clone(),
            self.beta2.clone(),
            self.u.clone(),
        )
    }

    pub fn instance(&self) -> IpInstance {
        self.knapsack()
            .to_instance()
            .with_name(&self.name)
            .with_provenance(Provenance {
                p: self.p.clone(),
                r: self.r.clone(),
                m_big: self.m_big.clone(),
                k: self.k.clone(),
            })
    }

    pub fn is_unit_box(&self) -> bool {
        self.u
            .iter()
            .all(|u| matches!(u, UBound::Finite(v) if v.is_one()))
    }

    pub fn is_unbounded(&self) -> bool {
        self.u.iter().all(|u| matches!(u, UBound::Inf))
    }
}

fn validate_positive(a: &IntVec) -> Result<()> {
    if a.iter().any(|v| !v.is_positive()) {
        return Err(Error::AssumptionViolated);
    }
    Ok(())
}

/// The open interval (lo, hi) of admissible right-hand sides, as exact
/// rationals; picks betas according to the policy.
fn pick_betas(lo: &Rat, hi: &Rat, policy: BetaPolicy) -> Result<(BigInt, BigInt)> {
    // smallest integer > lo and largest integer < hi (ceil - 1 covers both
    // the integral and fractional endpoint cases)
    let b1: BigInt = lo.floor().to_integer() + 1;
    let b2: BigInt = hi.ceil().to_integer() - 1;
    if Rat::from_integer(b1.clone()) <= *lo || Rat::from_integer(b2.clone()) >= *hi || b1 > b2 {
        return Err(Error::EmptyInterval {
            lo: lo.to_string(),
            hi: hi.to_string(),
        });
    }
    match policy {
        BetaPolicy::Widest => Ok((b1, b2)),
        BetaPolicy::TightLow => Ok((b1.clone(), b1)),
    }
}

/// Recipe for bounded DKPs: choose M, beta1, beta2 with pM + r > 0 and
/// max(r,p,k,u) + kM < beta1 <= beta2 < min(r,p,k+1,u) + (k+1)M.
/// When M is omitted, the smallest M admitting at least one integer in the
/// open interval (and positivity) is chosen. The output is re-verified
/// against the split-disjunction certificate on a = pM + r.
pub fn recipe1(
    p: &[BigInt],
    r: &[BigInt],
    u: &[UBound],
    k: &BigInt,
    m_opt: Option<BigInt>,
    policy: BetaPolicy,
) -> Result<DkpParams> {
    let n = p.len();
    if r.len() != n || u.len() != n || n == 0 {
        return Err(Error::BadDimension(
            "p, r, u must share a positive length".into(),
        ));
    }
    if p.iter().any(|v| !v.is_positive()) {
        return Err(Error::AssumptionViolated);
    }
    if u.iter()
        .any(|x| matches!(x, UBound::Finite(v) if !v.is_positive()))
    {
        return Err(Error::AssumptionViolated);
    }
    // 0 <= k < p.u
    let mut pu_inf = false;
    let mut pu = BigInt::zero();
    for (pi, ui) in p.iter().zip(u) {
        match ui {
            UBound::Inf => pu_inf = true,
            UBound::Finite(v) => pu += pi * v,
        }
    }
    if k.is_negative() || (!pu_inf && k >= &pu) {
        return Err(Error::InvalidK(k.to_string()));
    }

    let max_r = match knapsack_extreme(r, p, k, u, Sense::Max) {
        ExtValue::Finite(v) => v,
        _ => return Err(Error::InvalidK(k.to_string())),
    };
    let min_r = match knapsack_extreme(r, p, &(k + 1), u, Sense::Min) {
        ExtValue::Finite(v) => v,
        ExtValue::PosInf => return Err(Error::InvalidK(k.to_string())),
        ExtValue::NegInf => {
            return Err(Error::EmptyInterval {
                lo: max_r.to_string(),
                hi: "-inf".into(),
            })
        }
    };

    let interval = |m: &BigInt| -> (Rat, Rat) {
        let mr = Rat::from_integer(m.clone());
        let lo = &max_r + Rat::from_integer(k.clone()) * &mr;
        let hi = &min_r + Rat::from_integer(k + 1) * mr;
        (lo, hi)
    };
    let positivity_ok = |m: &BigInt| p.iter().zip(r).all(|(pi, ri)| (pi * m + ri).is_positive());

    let m_val = match m_opt {
        Some(m) => m,
        None => {
            // an open interval longer than 1 always contains an integer, so
            // the scan below is bounded
            let mut m = BigInt::one();
            loop {
                if positivity_ok(&m) {
                    let (lo, hi) = interval(&m);
                    if Rat::from_integer(lo.floor().to_integer() + 1) < hi {
                        break m;
                    }
                }
                m += 1;
                if m > big(100_000_000) {
                    return Err(Error::TooLarge("no admissible M below 1e8".into()));
                }
            }
        }
    };
    if !positivity_ok(&m_val) {
        return Err(Error::AssumptionViolated);
    }
    let (lo, hi) = interval(&m_val);
    let (beta1, beta2) = pick_betas(&lo, &hi, policy)?;
    let params = DkpParams {
        p: p.to_vec(),
        r: r.to_vec(),
        m_big: m_val,
        k: k.clone(),
        u: u.to_vec(),
        beta1,
        beta2,
        name: "recipe1".into(),
    };
    validate_positive(&params.a())?;
    if !check_split_certificate(&params.knapsack(), p, k)? {
        return Err(Error::NotCertified);
    }
    Ok(params)
}

/// Recipe for equality knapsacks with unbounded variables: choose M, beta
/// with 0 <= k(M + r_n/p_n) < beta < (k+1)(M + r_1/p_1), requiring the
/// ratio ordering r_1/p_1 <= ... <= r_n/p_n and p not parallel to r.
pub fn recipe2(
    p: &[BigInt],
    r: &[BigInt],
    k: &BigInt,
    m_opt: Option<BigInt>,
    policy: BetaPolicy,
) -> Result<DkpParams> {
    let n = p.len();
    if r.len() != n || n == 0 {
        return Err(Error::BadDimension(
            "p and r must share a positive length".into(),
        ));
    }
    if p.iter().any(|v| !v.is_positive()) {
        return Err(Error::AssumptionViolated);
    }
    for i in 0..n - 1 {
        if &r[i] * &p[i + 1] > &r[i + 1] * &p[i] {
            return Err(Error::AssumptionViolated);
        }
    }
    if &r[0] * &p[n - 1] == &r[n - 1] * &p[0] {
        // all ratios equal: p parallel to r
        return Err(Error::ParallelVectors);
    }
    if k.is_negative() {
        return Err(Error::InvalidK(k.to_string()));
    }
    let q1 = Rat::new(r[0].clone(), p[0].clone());
    let qn = Rat::new(r[n - 1].clone(), p[n - 1].clone());
    let interval = |m: &BigInt| -> (Rat, Rat) {
        let mr = Rat::from_integer(m.clone());
        let lo = Rat::from_integer(k.clone()) * (&mr + &qn);
        let hi = Rat::from_integer(k + 1) * (mr + &q1);
        (lo, hi)
    };
    let positivity_ok = |m: &BigInt| p.iter().zip(r).all(|(pi, ri)| (pi * m + ri).is_positive());
    let m_val = match m_opt {
        Some(m) => m,
        None => {
            let mut m = BigInt::one();
            loop {
                if positivity_ok(&m) {
                    let (lo, hi) = interval(&m);
                    if !lo.is_negative() && Rat::from_integer(lo.floor().to_integer() + 1) < hi {
                        break m;
                    }
                }
                m += 1;
                if m > big(100_000_000) {
                    return Err(Error::TooLarge("no admissible M below 1e8".into()));
                }
            }
        }
    };
    if !positivity_ok(&m_val) {
        return Err(Error::AssumptionViolated);
    }
    let (lo, hi) = interval(&m_val);
    if lo.is_negative() {
        return Err(Error::InvalidK(format!("k(M + q_n) = {lo} negative")));
    }
    let (b1, b2) = pick_betas(&lo, &hi, BetaPolicy::Widest)?;
    let beta = match policy {
        BetaPolicy::TightLow => b1,
        // the "widest" choice of a single rhs is the largest certified one
        BetaPolicy::Widest => b2,
    };
    let params = DkpParams {
        p: p.to_vec(),
        r: r.to_vec(),
        m_big: m_val,
        k: k.clone(),
        u: vec![UBound::Inf; n],
        beta1: beta.clone(),
        beta2: beta,
        name: "recipe2".into(),
    };
    validate_positive(&params.a())?;
    if !check_split_certificate(&params.knapsack(), p, k)? {
        return Err(Error::NotCertified);
    }
    Ok(params)
}

// ---------------------------------------------------------------------------
// named families

/// 106 <= 21 x1 + 19 x2 <= 113 over 0 <= x <= 6: the two-variable DKP with
/// p = (1,1), r = (1,-1), M = 20, k = 5.
pub fn example1() -> DkpParams {
    let mut d = recipe1(
        &crate::mat::int_vec(&[1, 1]),
        &crate::mat::int_vec(&[1, -1]),
        &[UBound::finite(6), UBound::finite(6)],
        &big(5),
        Some(big(20)),
        BetaPolicy::Widest,
    )
    .expect("fixed data is valid");
    d.name = "example1".into();
    d
}

/// 2 sum x_i = n, x binary, n odd: integer infeasible with e.x pinned to
/// n/2. A DKP via p = u = e, r = 0, M = 2, k = (n-1)/2.
pub fn example2(n: usize) -> Result<DkpParams> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadDimension(format!("n = {n} must be odd and >= 3")));
    }
    let p = vec![BigInt::one(); n];
    let r = vec![BigInt::zero(); n];
    let u = vec![UBound::Finite(BigInt::one()); n];
    let k = big(((n - 1) / 2) as i64);
    let mut d = recipe1(&p, &r, &u, &k, Some(big(2)), BetaPolicy::TightLow)?;
    debug_assert_eq!(d.beta1, big(n as i64));
    debug_assert_eq!(d.beta2, big(n as i64));
    d.name = format!("example2-{n}");
    Ok(d)
}

/// The original equality-with-slack form: 2 sum_{i<=n} x_i + x_{n+1} = n
/// over binary x (n odd). Feasible; minimizing x_{n+1} is the classic hard
/// optimization problem.
pub fn jeroslow(n: usize) -> Result<IpInstance> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadDimension(format!("n = {n} must be odd and >= 3")));
    }
    let mut first = vec![2i64; n];
    first.push(1);
    let mut rows = vec![first];
    for i in 0..=n {
        let mut r = vec![0i64; n + 1];
        r[i] = 1;
        rows.push(r);
    }
    let mut lo = vec![Bound::finite_int(n as i64)];
    let mut hi = vec![Bound::finite_int(n as i64)];
    for _ in 0..=n {
        lo.push(Bound::finite_int(0));
        hi.push(Bound::finite_int(1));
    }
    Ok(IpInstance::new(IntMat::from_rows(&rows), lo, hi).with_name(&format!("jeroslow-{n}")))
}

/// The slack variant used to run the kernel reformulation on the parity
/// instance: 2 sum x_i + s = n with binary x and -1/2 <= s <= 1/2.
pub fn example3(n: usize) -> Result<IpInstance> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadDimension(format!("n = {n} must be odd and >= 3")));
    }
    let mut first = vec![2i64; n];
    first.push(1);
    let mut rows = vec![first];
    for i in 0..=n {
        let mut r = vec![0i64; n + 1];
        r[i] = 1;
        rows.push(r);
    }
    let mut lo = vec![Bound::finite_int(n as i64)];
    let mut hi = vec![Bound::finite_int(n as i64)];
    for _ in 0..n {
        lo.push(Bound::finite_int(0));
        hi.push(Bound::finite_int(1));
    }
    lo.push(Bound::Finite(crate::mat::ratio(-1, 2)));
    hi.push(Bound::Finite(crate::mat::ratio(1, 2)));
    Ok(IpInstance::new(IntMat::from_rows(&rows), lo, hi).with_name(&format!("example3-{n}")))
}

/// Equality knapsack a.x = floor(sum(a)/2) over binary x with
/// a_i = 2^(n+l+1) + 2^(l+i) + 1, l = floor(log2(2n)); n odd.
pub fn todd(n: usize) -> Result<DkpParams> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadDimension(format!("n = {n} must be odd and >= 3")));
    }
    let l = (2 * n).ilog2() as usize;
    let m = BigInt::one() << (n + l + 1);
    let r: IntVec = (1..=n).map(|i| (BigInt::one() << (l + i)) + 1).collect();
    half_sum_family(n, m, r, "todd")
}

/// Equality knapsack with a_i = n(n+1) + i and rhs floor(sum(a)/2); n odd.
pub fn avis(n: usize) -> Result<DkpParams> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadDimension(format!("n = {n} must be odd and >= 3")));
    }
    let m = big((n * (n + 1)) as i64);
    let r: IntVec = (1..=n).map(|i| big(i as i64)).collect();
    half_sum_family(n, m, r, "avis")
}

/// Common shape of the Todd/Avis families: p = u = e, k = (n-1)/2,
/// beta = floor((1/2) sum (M + r_i)).
fn half_sum_family(n: usize, m: BigInt, r: IntVec, name: &str) -> Result<DkpParams> {
    let p = vec![BigInt::one(); n];
    let u = vec![UBound::Finite(BigInt::one()); n];
    let k = big(((n - 1) / 2) as i64);
    let a: IntVec = r.iter().map(|ri| &m + ri).collect();
    let total: BigInt = a.iter().sum();
    let beta: BigInt = total / 2;
    let params = DkpParams {
        p,
        r,
        m_big: m,
        k: k.clone(),
        u,
        beta1: beta.clone(),
        beta2: beta,
        name: format!("{name}-{n}"),
    };
    if !check_split_certificate(&params.knapsack(), &params.p, &k)? {
        return Err(Error::NotCertified);
    }
    Ok(params)
}

/// Avis data with the roles of p and r swapped: p = (1..n), r = e,
/// k = n(n+1)/4, M = n/2 + 2, beta = 3n/4 + kM + 1; n divisible by 4.
pub fn reverse_avis(n: usize) -> Result<DkpParams> {
    if n < 4 || n % 4 != 0 {
        return Err(Error::BadDimension(format!(
            "n = {n} must be divisible by 4"
        )));
    }
    let p: IntVec = (1..=n).map(|i| big(i as i64)).collect();
    let r = vec![BigInt::one(); n];
    let u = vec![UBound::Finite(BigInt::one()); n];
    let k = big((n * (n + 1) / 4) as i64);
    let m = big((n / 2 + 2) as i64);
    let beta: BigInt = big((3 * n / 4) as i64) + &k * &m + 1;
    let params = DkpParams {
        p,
        r,
        m_big: m,
        k: k.clone(),
        u,
        beta1: beta.clone(),
        beta2: beta,
        name: format!("reverse-avis-{n}"),
    };
    if !check_split_certificate(&params.knapsack(), &params.p, &k)? {
        return Err(Error::NotCertified);
    }
    Ok(params)
}

/// The superexponential family: a_i = n^(t+1) + i, rhs n^(2t+1) + n^(t+1)
/// + 1 over unbounded nonnegative x; certified at k = n^t while ordinary
/// branch and bound needs at least C(n^t + n - 1, n - 1) nodes.
pub fn nt_family(n: usize, t: usize) -> Result<DkpParams> {
    if n < 2 || t < 2 {
        return Err(Error::BadDimension("need n, t >= 2".into()));
    }
    let nb = big(n as i64);
    let m = nb.pow((t + 1) as u32);
    let k = nb.pow(t as u32);
    let beta: BigInt = nb.pow((2 * t + 1) as u32) + &m + 1;
    let p = vec![BigInt::one(); n];
    let r: IntVec = (1..=n).map(|i| big(i as i64)).collect();
    let params = DkpParams {
        p,
        r,
        m_big: m,
        k: k.clone(),
        u: vec![UBound::Inf; n],
        beta1: beta.clone(),
        beta2: beta,
        name: format!("nt-{n}-{t}"),
    };
    if !check_split_certificate(&params.knapsack(), &params.p, &k)? {
        return Err(Error::NotCertified);
    }
    Ok(params)
}

// ---------------------------------------------------------------------------
// Frobenius bounds

fn ratio_extremes(p: &[BigInt], r: &[BigInt]) -> Result<(Rat, Rat)> {
    if p.len() != r.len() || p.is_empty() {
        return Err(Error::BadDimension(
            "p and r must share a positive length".into(),
        ));
    }
    if p.iter().any(|v| !v.is_positive()) {
        return Err(Error::AssumptionViolated);
    }
    let qs: Vec<Rat> = p
        .iter()
        .zip(r)
        .map(|(pi, ri)| Rat::new(ri.clone(), pi.clone()))
        .collect();
    let q1 = qs.iter().min().unwrap().clone();
    let qn = qs.iter().max().unwrap().clone();
    if q1 == qn {
        return Err(Error::ParallelVectors);
    }
    Ok((q1, qn))
}

/// f(M, delta) = ceil((M + q_1 - delta)/(q_n - q_1)) - 1 with
/// q_1 = min r_i/p_i, q_n = max r_i/p_i.
pub fn f_m_delta(p: &[BigInt], r: &[BigInt], m: &BigInt, delta: i64) -> Result<BigInt> {
    let (q1, qn) = ratio_extremes(p, r)?;
    let num = Rat::from_integer(m.clone()) + &q1 - Rat::from_integer(big(delta));
    let den = &qn - &q1;
    Ok((num / den).ceil().to_integer() - 1)
}

/// The open interval ( f(M,1)(M + q_n), (f(M,1)+1)(M + q_1) ): every
/// integer beta inside gives an equality knapsack with a = pM + r whose
/// infeasibility is proven by branching on p.x at level k = f(M,1).
pub fn frob_branching_range(p: &[BigInt], r: &[BigInt], m: &BigInt) -> Result<(Rat, Rat)> {
    let (q1, qn) = ratio_extremes(p, r)?;
    let f1 = f_m_delta(p, r, m, 1)?;
    if f1.is_negative() {
        return Err(Error::InvalidK(format!("f(M,1) = {f1} is negative")));
    }
    if p.iter().zip(r).any(|(pi, ri)| !(pi * m + ri).is_positive()) {
        return Err(Error::AssumptionViolated);
    }
    let mr = Rat::from_integer(m.clone());
    let lo = Rat::from_integer(f1.clone()) * (&mr + &qn);
    let hi = Rat::from_integer(f1 + 1) * (mr + q1);
    Ok((lo, hi))
}

/// Exact bounds on the p-branching Frobenius number:
/// f(M,1)(M + q_n) < Frob_p(a) < (f(M,0)+1)(M + q_1).
pub fn frob_p_bounds(p: &[BigInt], r: &[BigInt], m: &BigInt) -> Result<(Rat, Rat)> {
    let (q1, qn) = ratio_extremes(p, r)?;
    let f1 = f_m_delta(p, r, m, 1)?;
    let f0 = f_m_delta(p, r, m, 0)?;
    if f1.is_negative() {
        return Err(Error::InvalidK(format!("f(M,1) = {f1} is negative")));
    }
    if p.iter().zip(r).any(|(pi, ri)| !(pi * m + ri).is_positive()) {
        return Err(Error::AssumptionViolated);
    }
    let mr = Rat::from_integer(m.clone());
    let lo = Rat::from_integer(f1) * (&mr + &qn);
    let hi = Rat::from_integer(f0 + 1) * (mr + q1);
    Ok((lo, hi))
}

/// The closed-form Frobenius lower bound driven by the extreme-ratio pair
/// (j = argmax r_i/p_i, k = argmin): exact rational evaluation of
/// a_j a_k (1 - 2/(M + q_j)) / (p_k r_j - p_j r_k) - (M + q_j).
pub fn al_frob_lower(
    p: &[BigInt],
    r: &[BigInt],
    m: &BigInt,
    j: usize,
    k_idx: usize,
) -> Result<Rat> {
    if j >= p.len() || k_idx >= p.len() {
        return Err(Error::BadDimension("index out of range".into()));
    }
    let det = &p[k_idx] * &r[j] - &p[j] * &r[k_idx];
    if det.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let aj = &p[j] * m + &r[j];
    let ak = &p[k_idx] * m + &r[k_idx];
    let qj = Rat::new(r[j].clone(), p[j].clone());
    let m_qj = Rat::from_integer(m.clone()) + qj;
    let one = Rat::from_integer(BigInt::one());
    let factor = &one - Rat::from_integer(big(2)) / &m_qj;
    let num = Rat::from_integer(&aj * &ak) * factor;
    Ok(num / Rat::from_integer(det) - m_qj)
}

/// Frobenius number of a (gcd(a) = 1) by shortest paths over the residues
/// modulo min(a): the classic round-robin/Dijkstra table. Guarded to desk
/// scale: min(a) <= 10^6 and all a_i <= 10^12.
pub fn frobenius_bruteforce(a: &[BigInt]) -> Result<BigInt> {
    if a.is_empty() || a.iter().any(|v| !v.is_positive()) {
        return Err(Error::BadDimension("weights must be positive".into()));
    }
    let g = crate::mat::gcd_vec(a);
    if !g.is_one() {
        return Err(Error::GcdNotOne);
    }
    let limit = big(1_000_000_000_000i64);
    if a.iter().any(|v| v > &limit) {
        return Err(Error::TooLarge("weights above 1e12".into()));
    }
    let vals: Vec<u128> = a.iter().map(|v| v.to_string().parse().unwrap()).collect();
    let amin = *vals.iter().min().unwrap();
    if amin > 1_000_000 {
        return Err(Error::TooLarge(format!("min weight {amin} above 1e6")));
    }
    if amin == 1 {
        return Ok(big(-1));
    }
    let modulus = amin as usize;
    // Dijkstra from residue 0; dist[r] = least representable value = r mod amin
    let mut dist: Vec<u128> = vec![u128::MAX; modulus];
    dist[0] = 0;
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let mut heap: BinaryHeap<Reverse<(u128, usize)>> = BinaryHeap::new();
    heap.push(Reverse((0, 0)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for &c in &vals {
            if c == amin {
                continue;
            }
            let nd = d + c;
            let nv = ((v as u128 + c) % amin) as usize;
            if nd < dist[nv] {
                dist[nv] = nd;
                heap.push(Reverse((nd, nv)));
            }
        }
    }
    let worst = dist.iter().max().unwrap();
    debug_assert_ne!(*worst, u128::MAX, "gcd 1 reaches every residue");
    Ok(BigInt::from(*worst) - BigInt::from(amin))
}

// ---------------------------------------------------------------------------
// node lower bounds

/// Theorem-level lower bound on the number of LP-feasible nodes ordinary
/// branch and bound enumerates on a certified instance: 2^ell(p,k) for the
/// unit box, C(floor(k/max p) + n - 1, n - 1) for unbounded variables.
pub fn node_lower_bound(params: &DkpParams) -> Result<BigInt> {
    if !check_split_certificate(&params.knapsack(), &params.p, &params.k)? {
        return Err(Error::NotCertified);
    }
    if params.is_unit_box() {
        let e = ell(&params.p, &params.k);
        Ok(BigInt::one() << e)
    } else if params.is_unbounded() {
        let n = params.p.len();
        let pmax = params.p.iter().max().unwrap();
        let t = params.k.div_floor(pmax);
        Ok(binomial(&(&t + big((n - 1) as i64)), n - 1))
    } else {
        Err(Error::ShapeMismatch(
            "node bounds cover the unit box and the fully unbounded case".into(),
        ))
    }
}

/// C(top, k) for BigInt top and small k.
pub fn binomial(top: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= top - big(i as i64);
        den *= big((i + 1) as i64);
    }
    num / den
}

// ---------------------------------------------------------------------------
// reduced-basis counterexamples

/// Fixed six-dimensional data showing that an LLL-reduced kernel basis of
/// a = pM + r can have more than one column with nonzero p-component:
/// pB = (0, -1, -1, 0, 0).
#[derive(Debug, Clone)]
pub struct AlEx1 {
    pub p: IntVec,
    pub r: IntVec,
    pub m_big: BigInt,
    pub a: IntVec,
    pub b: IntMat,
    pub v: IntVec,
}

pub fn al_ex1() -> AlEx1 {
    let p = crate::mat::int_vec(&[1, 1, 3, 3, 3, 3]);
    let r = crate::mat::int_vec(&[-7, -4, -11, -6, -5, -1]);
    let m_big = big(24);
    let a: IntVec = p.iter().zip(&r).map(|(pi, ri)| pi * &m_big + ri).collect();
    let b = IntMat::from_rows(&[
        vec![1, 0, -3, 1, 0],
        vec![2, -1, -1, -1, 0],
        vec![-1, -2, 0, 0, -1],
        vec![0, 0, 0, 1, 2],
        vec![-1, 0, 0, -2, 0],
        vec![1, 2, 1, 1, -1],
    ]);
    let v = crate::mat::int_vec(&[0, -3, 1, 0, 0, 0]);
    AlEx1 {
        p,
        r,
        m_big,
        a,
        b,
        v,
    }
}

/// The geometric construction with entries rho^(i-1) and half overlaps:
/// an LLL-reduced square basis whose longest column direction still has
/// exponential width over { 0 <= B lambda <= e_n }.
#[derive(Debug, Clone)]
pub struct AlEx2 {
    pub rho: Rat,
    pub n: usize,
    pub scale: BigInt,
    /// rounded integral version at `scale`
    pub b_int: IntMat,
    /// exact denominator-cleared version and its scale
    pub exact_scale: BigInt,
    pub b_exact: IntMat,
}

impl AlEx2 {
    /// 0 <= B lambda <= s e_n with the named version of B; the lambda
    /// geometry matches the unscaled construction when B is exact.
    pub fn polyhedron(&self, exact: bool) -> IpInstance {
        let (mat, s) = if exact {
            (&self.b_exact, &self.exact_scale)
        } else {
            (&self.b_int, &self.scale)
        };
        let n = self.n;
        let mut lo = Vec::with_capacity(n);
        let mut hi = Vec::with_capacity(n);
        for i in 0..n {
            lo.push(Bound::finite_int(0));
            hi.push(if i == n - 1 {
                Bound::finite_big(s.clone())
            } else {
                Bound::finite_int(0)
            });
        }
        IpInstance::new(mat.clone(), lo, hi)
    }
}

/// Build the construction for a rational rho in (sqrt(3)/2, 1).
pub fn al_ex2(rho: &Rat, n: usize, scale: &BigInt) -> Result<AlEx2> {
    if n < 2 {
        return Err(Error::BadDimension("need n >= 2".into()));
    }
    // sqrt(3)/2 < rho < 1, exactly: rho^2 > 3/4 and rho < 1
    let one = Rat::from_integer(BigInt::one());
    if !(rho * rho > crate::mat::ratio(3, 4) && rho < &one && rho.is_positive()) {
        return Err(Error::BadRho);
    }
    // entry (i, j): rho^(j-1)... column j has rho^(i-1)/2 above the
    // diagonal entry rho^(j-1) (1-based)
    let entry = |i: usize, j: usize| -> Rat {
        // 0-based row i, column j
        if i > j {
            Rat::from_integer(BigInt::zero())
        } else if i == j {
            pow_rat(rho, i)
        } else {
            pow_rat(rho, i) / Rat::from_integer(big(2))
        }
    };
    // exact scale: 2 * denom(rho)^(n-1) clears every denominator
    let exact_scale = big(2) * rho.denom().pow((n - 1) as u32);
    let mut b_exact = IntMat::zero(n, n);
    let mut b_int = IntMat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            let e = entry(i, j);
            let ex = &e * Rat::from_integer(exact_scale.clone());
            debug_assert!(ex.is_integer());
            b_exact.set(i, j, ex.to_integer());
            let rounded = round_half_up(&(&e * Rat::from_integer(scale.clone())));
            b_int.set(i, j, rounded);
        }
    }
    Ok(AlEx2 {
        rho: rho.clone(),
        n,
        scale: scale.clone(),
        b_int,
        exact_scale,
        b_exact,
    })
}

fn pow_rat(r: &Rat, e: usize) -> Rat {
    let mut out = Rat::from_integer(BigInt::one());
    for _ in 0..e {
        out *= r;
    }
    out
}
