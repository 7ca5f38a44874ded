//! Preconditioning transforms for integer programs.
//!
//! - rangespace: replace lo <= Ax <= hi by lo <= (AU)y <= hi with U
//!   unimodular from reducing the columns of A; x = Uy bijects the integer
//!   solution sets.
//! - AHL: parametrize the integer solutions of an equality block A1 x = b1
//!   as x = V lambda + x_b with V a reduced kernel basis and restate the
//!   remaining rows over lambda.
//! - right-hand-side reduction: translate by a Babai-rounded lattice point
//!   so the bounds become small.
//! - direct optimization reform: reduce the columns of [c; A] so the
//!   objective row transforms along with the constraints.
//!
//! Each transform carries the direction-correspondence data making widths
//! and integer widths computable on either side.

use crate::error::{Error, Result};
use crate::instance::{Bound, IpInstance};
use crate::lattice::{babai_nearest, hnf, ReductionProfile};
use crate::mat::{dot_int, IntMat, IntVec, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Rangespace reformulation: inst_new has rows A*U with the original bounds.
#[derive(Debug, Clone)]
pub struct RangespaceReform {
    pub u_mat: IntMat,
    pub inst_new: IpInstance,
    pub profile: ReductionProfile,
}

impl RangespaceReform {
    /// c in x-space -> cU in y-space; widths agree along the pair.
    pub fn map_forward(&self, c: &[BigInt]) -> IntVec {
        self.u_mat.vec_mul(c)
    }

    /// Pull a y-space point back to x-space: x = U y.
    pub fn point_back(&self, y: &[BigInt]) -> IntVec {
        self.u_mat.mul_vec(y)
    }
}

/// AHL reformulation data: x = V lambda + x_b.
#[derive(Debug, Clone)]
pub struct AhlReform {
    pub v_mat: IntMat,
    pub x_b: IntVec,
    /// integral dual with v_star * v_mat = I
    pub v_star: IntMat,
    pub inst_new: IpInstance,
    pub eq_rows: Vec<usize>,
    pub profile: ReductionProfile,
}

impl AhlReform {
    /// c in x-space -> cV in lambda-space; widths agree along the pair.
    pub fn map_forward(&self, c: &[BigInt]) -> IntVec {
        self.v_mat.vec_mul(c)
    }

    /// d in lambda-space -> d V* in x-space; widths agree along the pair.
    pub fn map_reverse(&self, d: &[BigInt]) -> IntVec {
        self.v_star.vec_mul(d)
    }

    /// lambda-space point -> x-space point.
    pub fn point_back(&self, lambda: &[BigInt]) -> IntVec {
        let vl = self.v_mat.mul_vec(lambda);
        vl.iter().zip(&self.x_b).map(|(a, b)| a + b).collect()
    }
}

/// Outcome of the AHL transform: either the reformulation, or a proof that
/// the equality block has no integer solution at all (divisibility failure
/// in the HNF solve), which settles the instance outright.
#[derive(Debug, Clone)]
pub enum AhlOutcome {
    Reform(AhlReform),
    ProvenInfeasible { reason: String },
}

/// Translation-only reformulation: same matrix, bounds shifted by A x_r.
#[derive(Debug, Clone)]
pub struct RhsReduced {
    pub inst_new: IpInstance,
    pub x_r: IntVec,
}

#[derive(Debug, Clone)]
pub enum Reformulation {
    Rangespace(RangespaceReform),
    Ahl(AhlReform),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Forward,
    Reverse,
}

/// Compute the rangespace reformulation of `inst`. Requires A to have full
/// column rank (always true once box bounds appear as rows).
pub fn rangespace(inst: &IpInstance, profile: &ReductionProfile) -> Result<RangespaceReform> {
    let (a_red, u) = profile.reduce(&inst.a)?;
    let inst_new = IpInstance::new(a_red, inst.lo.clone(), inst.hi.clone());
    Ok(RangespaceReform {
        u_mat: u,
        inst_new,
        profile: profile.clone(),
    })
}

/// AHL reformulation over the equality rows `eq_rows` of `inst`.
///
/// The kernel basis V of the equality block is reduced by `profile`; when
/// `reduce_xb` is set the particular solution is Babai-reduced against V,
/// which translates the lambda polyhedron by an integer vector (widths and
/// feasibility are unaffected).
pub fn ahl(
    inst: &IpInstance,
    eq_rows: &[usize],
    profile: &ReductionProfile,
    reduce_xb: bool,
) -> Result<AhlOutcome> {
    let n = inst.num_vars();
    if eq_rows.is_empty() {
        return Err(Error::ShapeMismatch("no equality rows selected".into()));
    }
    let mut rhs: Vec<BigInt> = Vec::with_capacity(eq_rows.len());
    for &i in eq_rows {
        if i >= inst.num_rows() {
            return Err(Error::ShapeMismatch(format!("row {i} out of range")));
        }
        match (&inst.lo[i], &inst.hi[i]) {
            (Bound::Finite(l), Bound::Finite(h)) if l == h => {
                if !l.is_integer() {
                    return Ok(AhlOutcome::ProvenInfeasible {
                        reason: format!("equality row {i} has non-integer right-hand side {l}"),
                    });
                }
                rhs.push(l.to_integer());
            }
            _ => {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} is not an equality row"
                )))
            }
        }
    }
    let a1 = inst.a.select_rows(eq_rows);
    let h = hnf(&a1)?;
    let m1 = eq_rows.len();

    // Solve H z = b by forward substitution; failure of exact division is a
    // certificate of integer infeasibility.
    let mut z: IntVec = Vec::with_capacity(m1);
    for i in 0..m1 {
        let mut acc = rhs[i].clone();
        for (j, zj) in z.iter().enumerate() {
            acc -= h.h.get(i, j) * zj;
        }
        let (q, rem) = acc.div_rem(h.h.get(i, i));
        if !rem.is_zero() {
            return Ok(AhlOutcome::ProvenInfeasible {
                reason: format!(
                    "divisibility fails in the equality block: {} does not divide {}",
                    h.h.get(i, i),
                    acc
                ),
            });
        }
        z.push(q);
    }
    let x_part = h.w.mul_vec(&z);
    debug_assert_eq!(a1.mul_vec(&x_part), rhs);

    // Reduce the kernel basis, and keep the dual in sync: if V_red = V0 * T
    // then V*_red = T^-1 * V*_0 still satisfies V*_red V_red = I.
    let v0 = h.v;
    let vs0 = h.u_inv.select_rows(&(m1..n).collect::<Vec<_>>());
    let (v_red, v_star) = if v0.cols() > 0 {
        let (v_red, t) = profile.reduce(&v0)?;
        let t_inv = t.int_inverse().expect("reduction transform is unimodular");
        (v_red, t_inv.mul(&vs0))
    } else {
        (v0, vs0)
    };
    debug_assert_eq!(v_star.mul(&v_red), IntMat::identity(n - m1));

    let x_b = if reduce_xb && v_red.cols() > 0 {
        let coeffs = babai_nearest(&v_red, &x_part)?;
        let shift = v_red.mul_vec(&coeffs);
        x_part.iter().zip(&shift).map(|(a, b)| a - b).collect()
    } else {
        x_part
    };
    debug_assert_eq!(a1.mul_vec(&x_b), rhs);

    let rest: Vec<usize> = (0..inst.num_rows())
        .filter(|i| !eq_rows.contains(i))
        .collect();
    if rest.is_empty() {
        return Err(Error::ShapeMismatch(
            "instance has no rows besides the equality block".into(),
        ));
    }
    let a2 = inst.a.select_rows(&rest);
    let new_a = a2.mul(&v_red);
    let mut lo = Vec::with_capacity(rest.len());
    let mut hi = Vec::with_capacity(rest.len());
    for (t_idx, &i) in rest.iter().enumerate() {
        let shift = Rat::from_integer(dot_int(a2.row(t_idx), &x_b));
        lo.push(inst.lo[i].shift_finite(&-shift.clone()));
        hi.push(inst.hi[i].shift_finite(&-shift));
    }
    let inst_new = IpInstance::new(new_a, lo, hi);
    Ok(AhlOutcome::Reform(AhlReform {
        v_mat: v_red,
        x_b,
        v_star,
        inst_new,
        eq_rows: eq_rows.to_vec(),
        profile: profile.clone(),
    }))
}

/// Right-hand-side reduction: find an integer translation x_r via Babai's
/// nearest plane on the one-sided system (converted internally), and shift
/// the bounds by A x_r. Solution sets biject via y = x - x_r.
pub fn rhs_reduce(inst: &IpInstance, profile: &ReductionProfile) -> Result<RhsReduced> {
    // one-sided stack: finite hi rows as (+a, hi), finite lo rows as (-a, -lo)
    let mut rows: Vec<IntVec> = Vec::new();
    let mut target: Vec<Rat> = Vec::new();
    for i in 0..inst.num_rows() {
        if let Bound::Finite(h) = &inst.hi[i] {
            rows.push(inst.a.row(i).to_vec());
            target.push(h.clone());
        }
        if let Bound::Finite(l) = &inst.lo[i] {
            rows.push(inst.a.row(i).iter().map(|v| -v.clone()).collect());
            target.push(-l.clone());
        }
    }
    let f = IntMat::from_big_rows(rows);
    let (f_red, u) = profile.reduce(&f)?;
    // clear denominators so Babai runs on integers; scaling basis and target
    // together leaves the coefficients unchanged
    let denom: BigInt = target
        .iter()
        .fold(BigInt::from(1), |acc, t| acc.lcm(t.denom()));
    let mut f_scaled = f_red.clone();
    for i in 0..f_scaled.rows() {
        for j in 0..f_scaled.cols() {
            let v = f_scaled.get(i, j) * &denom;
            f_scaled.set(i, j, v);
        }
    }
    let target_scaled: IntVec = target
        .iter()
        .map(|t| (t * Rat::from_integer(denom.clone())).to_integer())
        .collect();
    let coeffs = babai_nearest(&f_scaled, &target_scaled)?;
    let x_r = u.mul_vec(&coeffs);

    let shift = inst.a.mul_vec(&x_r);
    let mut lo = Vec::with_capacity(inst.num_rows());
    let mut hi = Vec::with_capacity(inst.num_rows());
    for i in 0..inst.num_rows() {
        let s = Rat::from_integer(shift[i].clone());
        lo.push(inst.lo[i].shift_finite(&-s.clone()));
        hi.push(inst.hi[i].shift_finite(&-s));
    }
    let inst_new = IpInstance::new(inst.a.clone(), lo, hi);
    Ok(RhsReduced { inst_new, x_r })
}

/// Direct reformulation of max { cx : inst }: reduce the columns of the
/// stacked matrix [c; A] and return (cU, rangespace data over AU). Optimal
/// values coincide; argmaxes biject via x = U y.
pub fn direct_opt_reform(
    c: &[BigInt],
    inst: &IpInstance,
    profile: &ReductionProfile,
) -> Result<(IntVec, RangespaceReform)> {
    let n = inst.num_vars();
    assert_eq!(c.len(), n);
    let c_row = IntMat::from_big_rows(vec![c.to_vec()]);
    let stacked = c_row.vstack(&inst.a);
    let (s_red, u) = profile.reduce(&stacked)?;
    let c_new = s_red.row(0).to_vec();
    let a_new = s_red.select_rows(&(1..=inst.num_rows()).collect::<Vec<_>>());
    let inst_new = IpInstance::new(a_new, inst.lo.clone(), inst.hi.clone());
    Ok((
        c_new,
        RangespaceReform {
            u_mat: u,
            inst_new,
            profile: profile.clone(),
        },
    ))
}

/// Smallest integer M strictly greater than c_n (||r|| + 1)^2 alpha_k,
/// the decomposition size beyond which the rangespace transform U of
/// [pM + r; I] is guaranteed to satisfy (pU)_{1..k} = 0. Takes squared
/// inputs (c_n^2, ||r||^2, alpha_k^2) and decides with integer arithmetic:
/// the bound expands to (s+1) sqrt(C t) + 2 sqrt(C t s).
pub fn rangespace_zero_m_bound(cn_sq: &BigInt, r_norm_sq: &BigInt, alpha_k_sq: &BigInt) -> BigInt {
    let s = r_norm_sq;
    let x = cn_sq * alpha_k_sq;
    let y = &x * s;
    crate::mat::smallest_int_exceeding(&(s + 1), &x, &BigInt::from(2), &y)
}

/// Smallest integer M strictly greater than 2 c_n ||r||^2 alpha_{k+1}^2:
/// beyond it the reduced kernel basis V of a = pM + r satisfies
/// (pV)_{1..k} = 0.
pub fn ahl_zero_m_bound(cn_sq: &BigInt, r_norm_sq: &BigInt, alpha_k1_sq: &BigInt) -> BigInt {
    let coef = BigInt::from(2) * r_norm_sq * alpha_k1_sq;
    crate::mat::smallest_int_exceeding(&coef, cn_sq, &BigInt::zero(), &BigInt::zero())
}

/// Map a direction across a reformulation. Reverse maps exist only for AHL
/// (via the integral dual basis V*).
pub fn map_direction(reform: &Reformulation, dir: &[BigInt], which: MapKind) -> Result<IntVec> {
    match (reform, which) {
        (Reformulation::Rangespace(r), MapKind::Forward) => {
            if dir.len() != r.u_mat.rows() {
                return Err(Error::ShapeMismatch("direction length".into()));
            }
            Ok(r.map_forward(dir))
        }
        (Reformulation::Rangespace(_), MapKind::Reverse) => Err(Error::ShapeMismatch(
            "reverse maps are defined for AHL reformulations only".into(),
        )),
        (Reformulation::Ahl(r), MapKind::Forward) => {
            if dir.len() != r.v_mat.rows() {
                return Err(Error::ShapeMismatch("direction length".into()));
            }
            Ok(r.map_forward(dir))
        }
        (Reformulation::Ahl(r), MapKind::Reverse) => {
            if dir.len() != r.v_mat.cols() {
                return Err(Error::ShapeMismatch("direction length".into()));
            }
            Ok(r.map_reverse(dir))
        }
    }
}
