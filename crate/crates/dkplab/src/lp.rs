//! Exact rational LP over two-sided systems lo <= Ax <= hi with free
//! integer-relaxed variables, via a bounded-variable two-phase simplex with
//! Bland's rule. Termination is guaranteed; every comparison is exact.
//!
//! Rows with a single nonzero coefficient are absorbed as variable bounds,
//! so box-shaped instances (knapsacks with identity blocks, branch bounds)
//! solve with tiny tableaus.

use crate::error::{Error, Result};
use crate::instance::{Bound, IpInstance, UBound};
use crate::mat::{Rat, RatVec};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub value: Option<Rat>,
    pub point: RatVec,
}

impl LpOutcome {
    fn infeasible() -> Self {
        LpOutcome {
            status: LpStatus::Infeasible,
            value: None,
            point: Vec::new(),
        }
    }
}

/// Optimize c.x over the LP relaxation of `inst`.
pub fn lp_optimize(inst: &IpInstance, c: &[BigInt], sense: Sense) -> LpOutcome {
    let obj: RatVec = c.iter().map(|v| Rat::from_integer(v.clone())).collect();
    lp_optimize_rat(inst, &obj, sense)
}

pub fn lp_optimize_rat(inst: &IpInstance, c: &[Rat], sense: Sense) -> LpOutcome {
    assert_eq!(c.len(), inst.num_vars());
    let mut sx = match Simplex::build(inst) {
        Err(out) => return out,
        Ok(sx) => sx,
    };
    if !sx.phase1() {
        return LpOutcome::infeasible();
    }
    let mut obj = vec![Rat::zero(); sx.ncols];
    for (j, cj) in c.iter().enumerate() {
        obj[j] = match sense {
            Sense::Min => cj.clone(),
            Sense::Max => -cj.clone(),
        };
    }
    match sx.optimize(&obj) {
        End::Unbounded => LpOutcome {
            status: LpStatus::Unbounded,
            value: None,
            point: Vec::new(),
        },
        End::Optimal => {
            let point = sx.structural_point();
            let mut value = Rat::zero();
            for (j, cj) in c.iter().enumerate() {
                value += cj * &point[j];
            }
            LpOutcome {
                status: LpStatus::Optimal,
                value: Some(value),
                point,
            }
        }
    }
}

/// Phase-1 feasibility only; on success the point is some exact point of
/// the relaxation.
pub fn lp_feasible_point(inst: &IpInstance) -> LpOutcome {
    let mut sx = match Simplex::build(inst) {
        Err(out) => return out,
        Ok(sx) => sx,
    };
    if !sx.phase1() {
        return LpOutcome::infeasible();
    }
    LpOutcome {
        status: LpStatus::Optimal,
        value: None,
        point: sx.structural_point(),
    }
}

enum End {
    Optimal,
    Unbounded,
}

struct Simplex {
    nstruct: usize,
    ncols: usize,
    lo: Vec<Bound>,
    hi: Vec<Bound>,
    /// rows x ncols, kept as B^-1 * G for the equality system G z = 0
    tab: Vec<RatVec>,
    basis: Vec<usize>,
    val: Vec<Rat>,
    arts: Vec<usize>,
}

impl Simplex {
    /// Classify rows, absorb unit rows into variable bounds, set up slacks
    /// and artificials. Err(outcome) short-circuits proven infeasibility.
    fn build(inst: &IpInstance) -> std::result::Result<Simplex, LpOutcome> {
        let n = inst.num_vars();
        let mut var_lo = vec![Bound::NegInf; n];
        let mut var_hi = vec![Bound::PosInf; n];
        let mut gen_rows: Vec<(RatVec, Bound, Bound)> = Vec::new();

        for i in 0..inst.num_rows() {
            let row = inst.a.row(i);
            let nz: Vec<usize> = (0..n).filter(|&j| !row[j].is_zero()).collect();
            match nz.len() {
                0 => {
                    let zero_ok = match (&inst.lo[i], &inst.hi[i]) {
                        (Bound::Finite(l), _) if l > &Rat::zero() => false,
                        (_, Bound::Finite(h)) if h < &Rat::zero() => false,
                        (Bound::PosInf, _) | (_, Bound::NegInf) => false,
                        _ => true,
                    };
                    if !zero_ok {
                        return Err(LpOutcome::infeasible());
                    }
                }
                1 => {
                    let j = nz[0];
                    let g = Rat::from_integer(row[j].clone());
                    let (mut l, mut h) = (inst.lo[i].clone(), inst.hi[i].clone());
                    if g.is_negative() {
                        std::mem::swap(&mut l, &mut h);
                    }
                    let l = match l {
                        Bound::Finite(v) => Bound::Finite(v / &g),
                        Bound::NegInf | Bound::PosInf => Bound::NegInf,
                    };
                    let h = match h {
                        Bound::Finite(v) => Bound::Finite(v / &g),
                        Bound::NegInf | Bound::PosInf => Bound::PosInf,
                    };
                    var_lo[j] = var_lo[j].max_with(&l);
                    var_hi[j] = var_hi[j].min_with(&h);
                }
                _ => {
                    let coef: RatVec = row.iter().map(|v| Rat::from_integer(v.clone())).collect();
                    gen_rows.push((coef, inst.lo[i].clone(), inst.hi[i].clone()));
                }
            }
        }
        for j in 0..n {
            if let (Bound::Finite(l), Bound::Finite(h)) = (&var_lo[j], &var_hi[j]) {
                if l > h {
                    return Err(LpOutcome::infeasible());
                }
            }
        }

        // initial structural values: 0 when admissible, else nearest bound
        let mut val: Vec<Rat> = (0..n)
            .map(|j| match (&var_lo[j], &var_hi[j]) {
                (Bound::Finite(l), _) if l > &Rat::zero() => l.clone(),
                (_, Bound::Finite(h)) if h < &Rat::zero() => h.clone(),
                _ => Rat::zero(),
            })
            .collect();

        // variable layout: structural 0..n, slacks n..n+m, artificials after
        let m = gen_rows.len();
        let mut lo = var_lo;
        let mut hi = var_hi;
        let mut slack_val: Vec<Rat> = Vec::with_capacity(m);
        // (row, sign, initial value) of each artificial
        let mut art_data: Vec<(usize, Rat, Rat)> = Vec::new();
        for (i, (coef, rl, rh)) in gen_rows.iter().enumerate() {
            let sigma: Rat = coef.iter().zip(&val[..n]).map(|(a, v)| a * v).sum();
            let below = matches!(rl, Bound::Finite(l) if &sigma < l);
            let above = matches!(rh, Bound::Finite(h) if &sigma > h);
            if !below && !above {
                slack_val.push(sigma);
            } else {
                let clamp = if below {
                    rl.as_finite().unwrap().clone()
                } else {
                    rh.as_finite().unwrap().clone()
                };
                let gap = &clamp - &sigma;
                let sign = if gap.is_positive() {
                    Rat::from_integer(BigInt::from(1))
                } else {
                    -Rat::from_integer(BigInt::from(1))
                };
                art_data.push((i, sign, gap.abs()));
                slack_val.push(clamp);
            }
        }
        let ncols = n + m + art_data.len();
        let mut tab: Vec<RatVec> = Vec::with_capacity(m);
        let mut basis = vec![0usize; m];
        let mut arts: Vec<usize> = Vec::new();
        for (i, (coef, rl, rh)) in gen_rows.iter().enumerate() {
            let mut row = vec![Rat::zero(); ncols];
            row[..n].clone_from_slice(coef);
            row[n + i] = -Rat::from_integer(BigInt::from(1));
            tab.push(row);
            lo.push(rl.clone());
            hi.push(rh.clone());
            basis[i] = n + i;
            val.push(slack_val[i].clone());
        }
        for (t, (i, sign, init)) in art_data.iter().enumerate() {
            let art = n + m + t;
            tab[*i][art] = sign.clone();
            lo.push(Bound::Finite(Rat::zero()));
            hi.push(Bound::PosInf);
            val.push(init.clone());
            basis[*i] = art;
            arts.push(art);
        }
        // normalize so each basic column is +1 in its own row
        for (i, r) in tab.iter_mut().enumerate() {
            let piv = r[basis[i]].clone();
            if piv != Rat::from_integer(BigInt::from(1)) {
                for v in r.iter_mut() {
                    if !v.is_zero() {
                        *v = &*v / &piv;
                    }
                }
            }
        }
        Ok(Simplex {
            nstruct: n,
            ncols,
            lo,
            hi,
            tab,
            basis,
            val,
            arts,
        })
    }

    fn phase1(&mut self) -> bool {
        if self.arts.is_empty() {
            return true;
        }
        let mut obj = vec![Rat::zero(); self.ncols];
        for &a in &self.arts {
            obj[a] = Rat::from_integer(BigInt::from(1));
        }
        match self.optimize(&obj) {
            End::Unbounded => unreachable!("phase-1 objective is bounded below"),
            End::Optimal => {}
        }
        let total: Rat = self.arts.iter().map(|&a| self.val[a].clone()).sum();
        if !total.is_zero() {
            return false;
        }
        for &a in &self.arts {
            self.lo[a] = Bound::Finite(Rat::zero());
            self.hi[a] = Bound::Finite(Rat::zero());
        }
        true
    }

    fn is_basic(&self, j: usize) -> bool {
        self.basis.contains(&j)
    }

    fn optimize(&mut self, obj: &[Rat]) -> End {
        loop {
            // reduced costs d_j = obj_j - obj_B . tab[:, j]
            let cb: Vec<Rat> = self.basis.iter().map(|&b| obj[b].clone()).collect();
            let mut entering: Option<(usize, i8)> = None;
            for j in 0..self.ncols {
                if self.is_basic(j) {
                    continue;
                }
                if let (Bound::Finite(l), Bound::Finite(h)) = (&self.lo[j], &self.hi[j]) {
                    if l == h {
                        continue; // fixed
                    }
                }
                let mut d = obj[j].clone();
                for (i, c) in cb.iter().enumerate() {
                    if !c.is_zero() && !self.tab[i][j].is_zero() {
                        d -= c * &self.tab[i][j];
                    }
                }
                if d.is_zero() {
                    continue;
                }
                let at_upper = matches!(&self.hi[j], Bound::Finite(h) if &self.val[j] == h);
                let at_lower = matches!(&self.lo[j], Bound::Finite(l) if &self.val[j] == l);
                let dir: i8 = if d.is_negative() {
                    if at_upper {
                        continue;
                    }
                    1
                } else {
                    if at_lower {
                        continue;
                    }
                    -1
                };
                entering = Some((j, dir));
                break; // Bland: lowest eligible index
            }
            let (e, dir) = match entering {
                None => return End::Optimal,
                Some(x) => x,
            };

            // ratio test
            let own_room = if dir == 1 {
                match &self.hi[e] {
                    Bound::Finite(h) => Some(h - &self.val[e]),
                    _ => None,
                }
            } else {
                match &self.lo[e] {
                    Bound::Finite(l) => Some(&self.val[e] - l),
                    _ => None,
                }
            };
            let mut best_t: Option<Rat> = own_room;
            let mut blocker: Option<usize> = None; // row index
            for i in 0..self.tab.len() {
                let g = &self.tab[i][e];
                if g.is_zero() {
                    continue;
                }
                let b = self.basis[i];
                // val[b] moves at rate = -dir * g per unit step
                let rate = if dir == 1 { -g.clone() } else { g.clone() };
                let limit = if rate.is_positive() {
                    match &self.hi[b] {
                        Bound::Finite(h) => Some((h - &self.val[b]) / &rate),
                        _ => None,
                    }
                } else {
                    match &self.lo[b] {
                        Bound::Finite(l) => Some((&self.val[b] - l) / -&rate),
                        _ => None,
                    }
                };
                if let Some(t) = limit {
                    let better = match &best_t {
                        None => true,
                        Some(bt) => {
                            t < *bt
                                || (t == *bt
                                    && match blocker {
                                        None => true, // prefer a pivot over a flip at ties
                                        Some(r) => b < self.basis[r],
                                    })
                        }
                    };
                    if better {
                        best_t = Some(t);
                        blocker = Some(i);
                    }
                }
            }
            let t = match best_t {
                None => return End::Unbounded,
                Some(t) => t,
            };
            debug_assert!(!t.is_negative());

            // apply the step to all values
            if !t.is_zero() {
                let step = if dir == 1 { t.clone() } else { -t.clone() };
                for i in 0..self.tab.len() {
                    let g = self.tab[i][e].clone();
                    if g.is_zero() {
                        continue;
                    }
                    let b = self.basis[i];
                    let delta = &g * &step;
                    self.val[b] = &self.val[b] - delta;
                }
                self.val[e] = &self.val[e] + step;
            }
            if let Some(r) = blocker {
                self.pivot(r, e);
            }
            // if no blocker, this was a bound flip: values updated, basis kept
        }
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let piv = self.tab[r][e].clone();
        for v in self.tab[r].iter_mut() {
            *v = &*v / &piv;
        }
        for i in 0..self.tab.len() {
            if i == r || self.tab[i][e].is_zero() {
                continue;
            }
            let f = self.tab[i][e].clone();
            for j in 0..self.ncols {
                if self.tab[r][j].is_zero() {
                    continue;
                }
                let delta = &f * &self.tab[r][j];
                self.tab[i][j] = &self.tab[i][j] - delta;
            }
        }
        self.basis[r] = e;
    }

    fn structural_point(&self) -> RatVec {
        self.val[..self.nstruct].to_vec()
    }
}

// ---------------------------------------------------------------------------
// widths

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IWidth {
    Finite(BigInt),
    Infinite,
}

impl IWidth {
    pub fn is_zero(&self) -> bool {
        matches!(self, IWidth::Finite(v) if v.is_zero())
    }

    pub fn as_finite(&self) -> Option<&BigInt> {
        match self {
            IWidth::Finite(v) => Some(v),
            IWidth::Infinite => None,
        }
    }
}

/// Width data of a direction over the LP relaxation: both extremes, their
/// difference, and the integer count floor(max) - ceil(min) + 1 (clamped at
/// zero), all exact. `unbounded` flags an infinite side; `empty` an
/// infeasible relaxation.
#[derive(Debug, Clone)]
pub struct WidthReport {
    pub direction: Vec<BigInt>,
    pub max: Bound,
    pub min: Bound,
    pub empty: bool,
    pub unbounded: bool,
}

impl WidthReport {
    pub fn width(&self) -> Bound {
        if self.empty {
            return Bound::Finite(Rat::zero());
        }
        match (&self.max, &self.min) {
            (Bound::Finite(a), Bound::Finite(b)) => Bound::Finite(a - b),
            _ => Bound::PosInf,
        }
    }

    pub fn iwidth(&self) -> IWidth {
        if self.empty {
            return IWidth::Finite(BigInt::zero());
        }
        match (&self.max, &self.min) {
            (Bound::Finite(mx), Bound::Finite(mn)) => {
                let v: BigInt = mx.floor().to_integer() - mn.ceil().to_integer() + 1;
                IWidth::Finite(if v.is_negative() { BigInt::zero() } else { v })
            }
            _ => IWidth::Infinite,
        }
    }
}

/// Exact max/min of c.x over the relaxation of inst.
pub fn width(inst: &IpInstance, c: &[BigInt]) -> WidthReport {
    let up = lp_optimize(inst, c, Sense::Max);
    if up.status == LpStatus::Infeasible {
        return WidthReport {
            direction: c.to_vec(),
            max: Bound::NegInf,
            min: Bound::PosInf,
            empty: true,
            unbounded: false,
        };
    }
    let dn = lp_optimize(inst, c, Sense::Min);
    let max = match &up.status {
        LpStatus::Unbounded => Bound::PosInf,
        _ => Bound::Finite(up.value.clone().unwrap()),
    };
    let min = match &dn.status {
        LpStatus::Unbounded => Bound::NegInf,
        _ => Bound::Finite(dn.value.clone().unwrap()),
    };
    let unbounded = !max.is_finite() || !min.is_finite();
    WidthReport {
        direction: c.to_vec(),
        max,
        min,
        empty: false,
        unbounded,
    }
}

pub fn iwidth(inst: &IpInstance, c: &[BigInt]) -> IWidth {
    width(inst, c).iwidth()
}

// ---------------------------------------------------------------------------
// closed-form knapsack relaxation values

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtValue {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl ExtValue {
    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            ExtValue::Finite(r) => Some(r),
            _ => None,
        }
    }
}

impl std::fmt::Display for ExtValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtValue::NegInf => write!(f, "-inf"),
            ExtValue::PosInf => write!(f, "inf"),
            ExtValue::Finite(r) => write!(f, "{}", r),
        }
    }
}

/// max(f,p,l,u) = max { f.x : p.x <= l, 0 <= x <= u } and
/// min(f,p,l,u) = min { f.x : p.x >= l, 0 <= x <= u }, by fractional greedy.
/// Requires p > 0 componentwise. The max over an empty region is -inf, the
/// min +inf; the min is -inf when some f_i < 0 has u_i = inf.
pub fn knapsack_extreme(
    f: &[BigInt],
    p: &[BigInt],
    ell: &BigInt,
    u: &[UBound],
    sense: Sense,
) -> ExtValue {
    let n = f.len();
    assert_eq!(p.len(), n);
    assert_eq!(u.len(), n);
    assert!(p.iter().all(|v| v.is_positive()), "p must be positive");
    let ellr = Rat::from_integer(ell.clone());
    match sense {
        Sense::Max => {
            if ell.is_negative() {
                return ExtValue::NegInf; // p.x <= l < 0 impossible for x >= 0
            }
            let mut idx: Vec<usize> = (0..n).filter(|&i| f[i].is_positive()).collect();
            idx.sort_by(|&i, &j| {
                let ri = Rat::new(f[i].clone(), p[i].clone());
                let rj = Rat::new(f[j].clone(), p[j].clone());
                rj.cmp(&ri).then(i.cmp(&j))
            });
            let mut cap = ellr;
            let mut value = Rat::zero();
            for i in idx {
                if cap.is_zero() {
                    break;
                }
                let pi = Rat::from_integer(p[i].clone());
                let by_cap = &cap / &pi;
                let take = match &u[i] {
                    UBound::Inf => by_cap.clone(),
                    UBound::Finite(ui) => {
                        let ur = Rat::from_integer(ui.clone());
                        if ur < by_cap {
                            ur
                        } else {
                            by_cap.clone()
                        }
                    }
                };
                value += Rat::from_integer(f[i].clone()) * &take;
                cap -= pi * take;
            }
            ExtValue::Finite(value)
        }
        Sense::Min => {
            // feasibility: max p.x must reach l
            let mut pu_inf = false;
            let mut pu = Rat::zero();
            for i in 0..n {
                match &u[i] {
                    UBound::Inf => pu_inf = true,
                    UBound::Finite(ui) => pu += Rat::from_integer(p[i].clone() * ui),
                }
            }
            if !pu_inf && pu < ellr {
                return ExtValue::PosInf;
            }
            if (0..n).any(|i| f[i].is_negative() && u[i] == UBound::Inf) {
                return ExtValue::NegInf;
            }
            // take all negative-profit items fully, then cover the rest at
            // the cheapest ratio
            let mut value = Rat::zero();
            let mut req = ellr;
            for i in 0..n {
                if f[i].is_negative() {
                    if let UBound::Finite(ui) = &u[i] {
                        value += Rat::from_integer(&f[i] * ui);
                        req -= Rat::from_integer(&p[i] * ui);
                    }
                }
            }
            let mut idx: Vec<usize> = (0..n).filter(|&i| !f[i].is_negative()).collect();
            idx.sort_by(|&i, &j| {
                let ri = Rat::new(f[i].clone(), p[i].clone());
                let rj = Rat::new(f[j].clone(), p[j].clone());
                ri.cmp(&rj).then(i.cmp(&j))
            });
            for i in idx {
                if !req.is_positive() {
                    break;
                }
                let pi = Rat::from_integer(p[i].clone());
                let by_req = &req / &pi;
                let take = match &u[i] {
                    UBound::Inf => by_req.clone(),
                    UBound::Finite(ui) => {
                        let ur = Rat::from_integer(ui.clone());
                        if ur < by_req {
                            ur
                        } else {
                            by_req.clone()
                        }
                    }
                };
                value += Rat::from_integer(f[i].clone()) * &take;
                req -= pi * take;
            }
            debug_assert!(!req.is_positive());
            ExtValue::Finite(value)
        }
    }
}

/// Closed-form widths of the equality knapsack (pM+r).x = beta, x >= 0
/// under the ratio ordering r_1/p_1 <= ... <= r_n/p_n:
/// width(p) = beta (p_1 r_n - p_n r_1) / (a_1 a_n), width(e_i) = beta / a_i.
pub fn kpeq_width_closed_form(
    p: &[BigInt],
    r: &[BigInt],
    m_big: &BigInt,
    beta: &BigInt,
) -> Result<(Rat, Vec<Rat>)> {
    let n = p.len();
    assert_eq!(r.len(), n);
    if n == 0 {
        return Err(Error::BadDimension("empty vectors".into()));
    }
    for i in 0..n - 1 {
        // r_i/p_i <= r_{i+1}/p_{i+1} with positive p
        if &r[i] * &p[i + 1] > &r[i + 1] * &p[i] {
            return Err(Error::AssumptionViolated);
        }
    }
    let a: Vec<BigInt> = (0..n).map(|i| &p[i] * m_big + &r[i]).collect();
    if a.iter().any(|ai| !ai.is_positive()) {
        return Err(Error::AssumptionViolated);
    }
    let betar = Rat::from_integer(beta.clone());
    let num = &p[0] * &r[n - 1] - &p[n - 1] * &r[0];
    let den = &a[0] * &a[n - 1];
    let width_p = &betar * Rat::new(num, den);
    let width_e: Vec<Rat> = a
        .iter()
        .map(|ai| &betar / Rat::from_integer(ai.clone()))
        .collect();
    Ok((width_p, width_e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::Knapsack;
    use crate::mat::{big, int_vec, rat, ratio, IntMat};

    fn example1() -> IpInstance {
        Knapsack::new(
            int_vec(&[21, 19]),
            big(106),
            big(113),
            vec![UBound::finite(6), UBound::finite(6)],
        )
        .to_instance()
    }

    #[test]
    fn example1_extremes_are_exact() {
        // max/min of x1+x2 over 106 <= 21x1+19x2 <= 113, 0 <= x <= 6.
        // Exact values 113/19 and 106/21; they print as 5.94 and 5.04 when
        // truncated to two decimals.
        let inst = example1();
        let up = lp_optimize(&inst, &int_vec(&[1, 1]), Sense::Max);
        assert_eq!(up.status, LpStatus::Optimal);
        assert_eq!(up.value.unwrap(), ratio(113, 19));
        let dn = lp_optimize(&inst, &int_vec(&[1, 1]), Sense::Min);
        assert_eq!(dn.value.unwrap(), ratio(106, 21));
    }

    #[test]
    fn empty_interior_detected() {
        // 1 <= x1 and x1 <= 0 as two rows
        let a = IntMat::from_rows(&[vec![1], vec![1]]);
        let inst = IpInstance::new(
            a,
            vec![Bound::finite_int(1), Bound::NegInf],
            vec![Bound::PosInf, Bound::finite_int(0)],
        );
        let out = lp_optimize(&inst, &int_vec(&[1]), Sense::Max);
        assert_eq!(out.status, LpStatus::Infeasible);
    }

    #[test]
    fn kpeq_single_direction_ratio() {
        let inst = Knapsack::equality(int_vec(&[18, 34]), big(35), vec![UBound::Inf, UBound::Inf])
            .to_instance();
        let out = lp_optimize(&inst, &int_vec(&[1, 0]), Sense::Max);
        assert_eq!(out.value.unwrap(), ratio(35, 18));
    }

    #[test]
    fn unbounded_direction_detected() {
        // x1 >= 0 only constraint; maximize x1
        let a = IntMat::from_rows(&[vec![1, 0], vec![0, 1]]);
        let inst = IpInstance::new(
            a,
            vec![Bound::finite_int(0), Bound::finite_int(0)],
            vec![Bound::PosInf, Bound::finite_int(3)],
        );
        let out = lp_optimize(&inst, &int_vec(&[1, 0]), Sense::Max);
        assert_eq!(out.status, LpStatus::Unbounded);
    }

    #[test]
    fn optimal_point_satisfies_rows_exactly() {
        let inst = example1();
        for sense in [Sense::Max, Sense::Min] {
            let out = lp_optimize(&inst, &int_vec(&[2, -3]), sense);
            assert_eq!(out.status, LpStatus::Optimal);
            let vals: Vec<Rat> = (0..inst.num_rows())
                .map(|i| {
                    inst.a
                        .row(i)
                        .iter()
                        .zip(&out.point)
                        .map(|(a, x)| Rat::from_integer(a.clone()) * x)
                        .sum()
                })
                .collect();
            for (i, v) in vals.iter().enumerate() {
                if let Bound::Finite(l) = &inst.lo[i] {
                    assert!(l <= v);
                }
                if let Bound::Finite(h) = &inst.hi[i] {
                    assert!(v <= h);
                }
            }
        }
    }

    #[test]
    fn width_of_example1_along_p() {
        let inst = example1();
        let rep = width(&inst, &int_vec(&[1, 1]));
        assert_eq!(rep.max, Bound::Finite(ratio(113, 19)));
        assert_eq!(rep.min, Bound::Finite(ratio(106, 21)));
        assert_eq!(rep.width(), Bound::Finite(ratio(359, 399)));
        assert!(rep.iwidth().is_zero());
    }

    #[test]
    fn width_is_zero_count_iff_no_integer_inside() {
        let inst = example1();
        // direction e1 has range [0, 113/21] which contains integers
        let rep = width(&inst, &int_vec(&[1, 0]));
        assert_eq!(rep.iwidth(), IWidth::Finite(big(6)));
    }

    #[test]
    fn knapsack_extreme_example1_data() {
        // max((1,-1),(1,1),5,(6,6)) = 5 and min((1,-1),(1,1),6,(6,6)) = -6
        let f = int_vec(&[1, -1]);
        let p = int_vec(&[1, 1]);
        let u = vec![UBound::finite(6), UBound::finite(6)];
        assert_eq!(
            knapsack_extreme(&f, &p, &big(5), &u, Sense::Max),
            ExtValue::Finite(rat(5))
        );
        assert_eq!(
            knapsack_extreme(&f, &p, &big(6), &u, Sense::Min),
            ExtValue::Finite(rat(-6))
        );
    }

    #[test]
    fn knapsack_extreme_zero_profile() {
        let f = int_vec(&[0, 0]);
        let p = int_vec(&[1, 1]);
        let u = vec![UBound::finite(1), UBound::finite(1)];
        assert_eq!(
            knapsack_extreme(&f, &p, &big(1), &u, Sense::Max),
            ExtValue::Finite(rat(0))
        );
        assert_eq!(
            knapsack_extreme(&f, &p, &big(2), &u, Sense::Min),
            ExtValue::Finite(rat(0))
        );
    }

    #[test]
    fn knapsack_extreme_unbounded_box_formulas() {
        // with all u_i = inf and the ratio ordering of r = (1,2,3), p = e:
        // max(r,p,k,u) = k r_n/p_n and min(r,p,k+1,u) = (k+1) r_1/p_1
        let r = int_vec(&[1, 2, 3]);
        let p = int_vec(&[1, 1, 1]);
        let u = vec![UBound::Inf, UBound::Inf, UBound::Inf];
        assert_eq!(
            knapsack_extreme(&r, &p, &big(4), &u, Sense::Max),
            ExtValue::Finite(rat(12))
        );
        assert_eq!(
            knapsack_extreme(&r, &p, &big(5), &u, Sense::Min),
            ExtValue::Finite(rat(5))
        );
    }

    #[test]
    fn greedy_agrees_with_simplex_on_random_instances() {
        use crate::rng::SplitMix64;
        let mut g = SplitMix64::new(20240817);
        for _ in 0..200 {
            let n = 1 + (g.next_u64() % 8) as usize;
            let f: Vec<i64> = (0..n).map(|_| g.range_i64(-9, 9)).collect();
            let p: Vec<i64> = (0..n).map(|_| g.range_i64(1, 9)).collect();
            let u: Vec<i64> = (0..n).map(|_| g.range_i64(0, 7)).collect();
            let ell = g.range_i64(0, 30);
            let fb = int_vec(&f);
            let pb = int_vec(&p);
            let ub: Vec<UBound> = u.iter().map(|&x| UBound::finite(x)).collect();
            for sense in [Sense::Max, Sense::Min] {
                let fast = knapsack_extreme(&fb, &pb, &big(ell), &ub, sense);
                // LP route: p.x <= ell (max) or >= ell (min), box rows
                let mut rows = vec![p.clone()];
                let mut lo = vec![match sense {
                    Sense::Max => Bound::NegInf,
                    Sense::Min => Bound::finite_int(ell),
                }];
                let mut hi = vec![match sense {
                    Sense::Max => Bound::finite_int(ell),
                    Sense::Min => Bound::PosInf,
                }];
                for i in 0..n {
                    let mut row = vec![0i64; n];
                    row[i] = 1;
                    rows.push(row);
                    lo.push(Bound::finite_int(0));
                    hi.push(Bound::finite_int(u[i]));
                }
                let inst = IpInstance::new(IntMat::from_rows(&rows), lo, hi);
                let out = lp_optimize(&inst, &fb, sense);
                match (&fast, &out.status) {
                    (ExtValue::Finite(v), LpStatus::Optimal) => {
                        assert_eq!(v, out.value.as_ref().unwrap())
                    }
                    (ExtValue::PosInf, LpStatus::Infeasible) => {}
                    (ExtValue::NegInf, LpStatus::Infeasible) => {}
                    other => panic!("disagreement: {:?}", other),
                }
            }
        }
    }

    #[test]
    fn simplex_matches_vertex_enumeration_in_two_vars() {
        // independent oracle: candidate vertices of a 2-variable system are
        // the pairwise intersections of active row boundaries; the optimum
        // over the feasible candidates must equal the simplex value
        use crate::rng::SplitMix64;
        let mut g = SplitMix64::new(314);
        let mut compared = 0;
        'outer: for _ in 0..150 {
            let m = 3 + (g.next_u64() % 3) as usize;
            let mut rows = Vec::new();
            let mut lo = Vec::new();
            let mut hi = Vec::new();
            // a bounding box keeps every instance bounded
            rows.push(vec![1i64, 0]);
            rows.push(vec![0i64, 1]);
            for _ in 0..2 {
                lo.push(Bound::finite_int(-8));
                hi.push(Bound::finite_int(8));
            }
            for _ in 0..m {
                let a = g.range_i64(-5, 5);
                let b = g.range_i64(-5, 5);
                if a == 0 && b == 0 {
                    continue;
                }
                let l = g.range_i64(-20, 5);
                rows.push(vec![a, b]);
                lo.push(Bound::finite_int(l));
                hi.push(Bound::finite_int(l + g.range_i64(0, 25)));
            }
            let inst = IpInstance::new(IntMat::from_rows(&rows), lo.clone(), hi.clone());
            let c = int_vec(&[g.range_i64(-4, 4), g.range_i64(-4, 4)]);
            let out = lp_optimize(&inst, &c, Sense::Max);

            // enumerate all intersections of boundary lines
            let mut lines: Vec<(Rat, Rat, Rat)> = Vec::new(); // a x + b y = t
            for (i, row) in rows.iter().enumerate() {
                for bnd in [&lo[i], &hi[i]] {
                    if let Bound::Finite(t) = bnd {
                        lines.push((
                            Rat::from_integer(big(row[0])),
                            Rat::from_integer(big(row[1])),
                            t.clone(),
                        ));
                    }
                }
            }
            let mut best: Option<Rat> = None;
            for i in 0..lines.len() {
                for j in i + 1..lines.len() {
                    let (a1, b1, t1) = &lines[i];
                    let (a2, b2, t2) = &lines[j];
                    let det = a1 * b2 - a2 * b1;
                    if det.is_zero() {
                        continue;
                    }
                    let x = (t1 * b2 - t2 * b1) / &det;
                    let y = (a1 * t2 - a2 * t1) / &det;
                    // feasible?
                    let mut ok = true;
                    for (r, row) in rows.iter().enumerate() {
                        let v = Rat::from_integer(big(row[0])) * &x
                            + Rat::from_integer(big(row[1])) * &y;
                        if let Bound::Finite(l) = &lo[r] {
                            if &v < l {
                                ok = false;
                                break;
                            }
                        }
                        if let Bound::Finite(h) = &hi[r] {
                            if &v > h {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if ok {
                        let val = Rat::from_integer(c[0].clone()) * &x
                            + Rat::from_integer(c[1].clone()) * &y;
                        best = Some(match best {
                            None => val,
                            Some(b) if val > b => val,
                            Some(b) => b,
                        });
                    }
                }
            }
            match (&out.status, &best) {
                (LpStatus::Optimal, Some(b)) => {
                    assert_eq!(out.value.as_ref().unwrap(), b);
                    compared += 1;
                }
                (LpStatus::Infeasible, None) => {}
                (LpStatus::Infeasible, Some(_)) => {
                    panic!("simplex says infeasible but a vertex is feasible")
                }
                (LpStatus::Optimal, None) => {
                    // feasible region with no two-line vertex cannot happen
                    // inside a bounding box
                    panic!("optimal without any candidate vertex");
                }
                _ => continue 'outer,
            }
        }
        assert!(compared >= 50, "only {compared} optimal cases compared");
    }

    #[test]
    fn closed_form_widths_match_lp() {
        // a = (18,34), p = (1,1), r = (-11,5), beta = 35
        let p = int_vec(&[1, 1]);
        let r = int_vec(&[-11, 5]);
        let (wp, we) = kpeq_width_closed_form(&p, &r, &big(29), &big(35)).unwrap();
        assert_eq!(wp, ratio(140, 153));
        assert_eq!(we, vec![ratio(35, 18), ratio(35, 34)]);
        let inst = Knapsack::equality(int_vec(&[18, 34]), big(35), vec![UBound::Inf, UBound::Inf])
            .to_instance();
        let rep = width(&inst, &p);
        assert_eq!(rep.width(), Bound::Finite(ratio(140, 153)));
        for (i, wi) in we.iter().enumerate() {
            let mut e = vec![big(0), big(0)];
            e[i] = big(1);
            let re = width(&inst, &e);
            assert_eq!(re.width(), Bound::Finite(wi.clone()));
        }
    }

    #[test]
    fn closed_form_zero_when_parallel() {
        let p = int_vec(&[2, 3]);
        let r = int_vec(&[4, 6]);
        let (wp, _) = kpeq_width_closed_form(&p, &r, &big(10), &big(7)).unwrap();
        assert_eq!(wp, rat(0));
    }

    #[test]
    fn closed_form_rejects_bad_ordering() {
        let p = int_vec(&[1, 1]);
        let r = int_vec(&[5, -11]);
        assert_eq!(
            kpeq_width_closed_form(&p, &r, &big(29), &big(35)).unwrap_err(),
            Error::AssumptionViolated
        );
    }
}
