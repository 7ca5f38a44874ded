//! Two-sided integer-programming instances lo <= Ax <= hi over x in Z^n,
//! plus the single-row knapsack specializations.

use crate::mat::{IntMat, IntVec, Rat};
use num_bigint::BigInt;
use num_traits::Zero;
use std::cmp::Ordering;

/// One side of a row or variable bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl Bound {
    pub fn finite_int(v: i64) -> Self {
        Bound::Finite(Rat::from_integer(BigInt::from(v)))
    }

    pub fn finite_big(v: BigInt) -> Self {
        Bound::Finite(Rat::from_integer(v))
    }

    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            Bound::Finite(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Bound::Finite(_))
    }

    /// Total order with NegInf < every rational < PosInf.
    pub fn cmp_bound(&self, other: &Bound) -> Ordering {
        use Bound::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }

    pub fn max_with(&self, other: &Bound) -> Bound {
        if self.cmp_bound(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn min_with(&self, other: &Bound) -> Bound {
        if self.cmp_bound(other) == Ordering::Greater {
            other.clone()
        } else {
            self.clone()
        }
    }

    /// self - other for width computations (finite minus finite only).
    pub fn sub_finite(&self, other: &Bound) -> Bound {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => Bound::Finite(a - b),
            _ => Bound::PosInf,
        }
    }

    pub fn shift_finite(&self, delta: &Rat) -> Bound {
        match self {
            Bound::Finite(a) => Bound::Finite(a + delta),
            other => other.clone(),
        }
    }
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::NegInf => write!(f, "-inf"),
            Bound::PosInf => write!(f, "inf"),
            Bound::Finite(r) => write!(f, "{}", r),
        }
    }
}

/// Provenance of a DKP-generated instance: the decomposition a = pM + r and
/// the split-disjunction level k, enough to re-derive certificates from a
/// file alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub p: IntVec,
    pub r: IntVec,
    pub m_big: BigInt,
    pub k: BigInt,
}

/// Two-sided system lo <= Ax <= hi over integer x. Variable bounds are
/// folded in as rows (typically unit rows of an identity block).
#[derive(Debug, Clone, PartialEq)]
pub struct IpInstance {
    pub a: IntMat,
    pub lo: Vec<Bound>,
    pub hi: Vec<Bound>,
    pub name: Option<String>,
    pub provenance: Option<Provenance>,
}

impl IpInstance {
    pub fn new(a: IntMat, lo: Vec<Bound>, hi: Vec<Bound>) -> Self {
        assert_eq!(a.rows(), lo.len());
        assert_eq!(a.rows(), hi.len());
        for (l, h) in lo.iter().zip(&hi) {
            if let (Bound::Finite(lv), Bound::Finite(hv)) = (l, h) {
                assert!(lv <= hv, "row with lo > hi");
            }
        }
        IpInstance {
            a,
            lo,
            hi,
            name: None,
            provenance: None,
        }
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = Some(p);
        self
    }

    pub fn num_rows(&self) -> usize {
        self.a.rows()
    }

    pub fn num_vars(&self) -> usize {
        self.a.cols()
    }

    /// Does the integer point x satisfy every row exactly?
    pub fn contains_int_point(&self, x: &[BigInt]) -> bool {
        let vals = self.a.mul_vec(x);
        vals.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(v, (l, h))| {
                let vr = Rat::from_integer(v.clone());
                let lo_ok = match l {
                    Bound::NegInf => true,
                    Bound::Finite(b) => b <= &vr,
                    Bound::PosInf => false,
                };
                let hi_ok = match h {
                    Bound::PosInf => true,
                    Bound::Finite(b) => &vr <= b,
                    Bound::NegInf => false,
                };
                lo_ok && hi_ok
            })
    }

    /// Append a row c.x in [lo, hi].
    pub fn push_row(&mut self, coef: IntVec, lo: Bound, hi: Bound) {
        assert_eq!(coef.len(), self.num_vars());
        let mut rows = self.a.row_vecs();
        rows.push(coef);
        self.a = IntMat::from_big_rows(rows);
        self.lo.push(lo);
        self.hi.push(hi);
    }

    /// Indices of rows that are equalities with finite two sides.
    pub fn equality_rows(&self) -> Vec<usize> {
        (0..self.num_rows())
            .filter(|&i| match (&self.lo[i], &self.hi[i]) {
                (Bound::Finite(l), Bound::Finite(h)) => l == h,
                _ => false,
            })
            .collect()
    }
}

/// Upper bound of a knapsack variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UBound {
    Finite(BigInt),
    Inf,
}

impl UBound {
    pub fn finite(v: i64) -> Self {
        UBound::Finite(BigInt::from(v))
    }
}

/// Knapsack feasibility problem beta1 <= ax <= beta2, 0 <= x <= u
/// (equality knapsack when beta1 = beta2; unbounded when u_i = inf).
#[derive(Debug, Clone, PartialEq)]
pub struct Knapsack {
    pub a: IntVec,
    pub beta1: BigInt,
    pub beta2: BigInt,
    pub u: Vec<UBound>,
}

impl Knapsack {
    pub fn new(a: IntVec, beta1: BigInt, beta2: BigInt, u: Vec<UBound>) -> Self {
        assert_eq!(a.len(), u.len());
        assert!(beta1 <= beta2);
        Knapsack { a, beta1, beta2, u }
    }

    pub fn equality(a: IntVec, beta: BigInt, u: Vec<UBound>) -> Self {
        Knapsack::new(a, beta.clone(), beta, u)
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn is_equality(&self) -> bool {
        self.beta1 == self.beta2
    }

    /// Rows [a; I] with bounds [beta1, 0,...] and [beta2, u...].
    pub fn to_instance(&self) -> IpInstance {
        let n = self.n();
        let a_row = IntMat::from_big_rows(vec![self.a.clone()]);
        let full = a_row.vstack(&IntMat::identity(n));
        let mut lo = vec![Bound::finite_big(self.beta1.clone())];
        let mut hi = vec![Bound::finite_big(self.beta2.clone())];
        for ub in &self.u {
            lo.push(Bound::Finite(Rat::zero()));
            hi.push(match ub {
                UBound::Finite(v) => Bound::finite_big(v.clone()),
                UBound::Inf => Bound::PosInf,
            });
        }
        IpInstance::new(full, lo, hi)
    }

    /// Try to recognize a knapsack shape inside a general instance: one
    /// dense row followed by an identity block.
    pub fn from_instance(inst: &IpInstance) -> Option<Knapsack> {
        let n = inst.num_vars();
        if inst.num_rows() != n + 1 {
            return None;
        }
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { 1 } else { 0 };
                if inst.a.get(i + 1, j) != &BigInt::from(expect) {
                    return None;
                }
            }
            if inst.lo[i + 1] != Bound::Finite(Rat::zero()) {
                return None;
            }
        }
        let beta1 = inst.lo[0].as_finite()?.clone();
        let beta2 = inst.hi[0].as_finite()?.clone();
        if !beta1.is_integer() || !beta2.is_integer() {
            return None;
        }
        let mut u = Vec::new();
        for i in 0..n {
            match &inst.hi[i + 1] {
                Bound::PosInf => u.push(UBound::Inf),
                Bound::Finite(r) if r.is_integer() => u.push(UBound::Finite(r.to_integer())),
                _ => return None,
            }
        }
        Some(Knapsack::new(
            inst.a.row(0).to_vec(),
            beta1.to_integer(),
            beta2.to_integer(),
            u,
        ))
    }
}
