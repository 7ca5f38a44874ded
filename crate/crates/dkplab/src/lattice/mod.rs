//! Exact integer/rational lattice algorithms: Gram-Schmidt, LLL and KZ
//! reduction, shortest-vector enumeration, Babai nearest plane, Hermite
//! normal form, integer kernel and dual bases, and a brute-force
//! successive-minima oracle.
//!
//! Everything runs in exact arithmetic. Reduction quality statements are
//! therefore checkable verbatim, which the rest of the library relies on.

mod babai;
mod enumerate;
mod gram;
mod hnf;
mod lll;
mod minima;

pub use babai::{babai_nearest, babai_residual_coeffs};
pub use enumerate::{kz_reduce, shortest_vector, shortest_vector_with_cap};
pub use gram::{gram_schmidt, GramSchmidtData};
pub use hnf::{column_hnf, dual_basis, hnf, kernel_basis, HnfResult};
pub use lll::{is_lll_reduced, is_size_reduced, lll_reduce};
pub use minima::{successive_minima_bruteforce, SuccessiveMinima};

use crate::error::{Error, Result};
use crate::mat::{ratio, Rat};
use num_bigint::BigInt;
use num_traits::One;

/// Default cap on the dimension fed to exponential-time enumeration
/// (shortest vector, KZ). Overridable per profile or per call; the CLI maps
/// the DKPLAB_ENUM_CAP environment variable onto it.
pub const DEFAULT_ENUM_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionMethod {
    Lll,
    Kz,
}

/// Reduction method plus its exact quality data: the LLL parameter delta and
/// the squared reduction factor c_n^2 (2^(n-1) for LLL, n for KZ), kept in
/// exact form so theorem-side comparisons never round.
#[derive(Debug, Clone)]
pub struct ReductionProfile {
    pub method: ReductionMethod,
    pub delta: Rat,
    pub enum_cap: usize,
}

impl ReductionProfile {
    pub fn lll() -> Self {
        ReductionProfile {
            method: ReductionMethod::Lll,
            delta: ratio(3, 4),
            enum_cap: DEFAULT_ENUM_CAP,
        }
    }

    pub fn kz() -> Self {
        ReductionProfile {
            method: ReductionMethod::Kz,
            delta: ratio(3, 4),
            enum_cap: DEFAULT_ENUM_CAP,
        }
    }

    pub fn with_delta(mut self, delta: Rat) -> Result<Self> {
        if delta <= ratio(1, 4) || delta > ratio(1, 1) {
            return Err(Error::BadDelta);
        }
        self.delta = delta;
        Ok(self)
    }

    pub fn with_enum_cap(mut self, cap: usize) -> Self {
        self.enum_cap = cap;
        self
    }

    /// c_n^2 for basis dimension n.
    pub fn reduction_factor_sq(&self, n: usize) -> BigInt {
        match self.method {
            ReductionMethod::Lll => {
                if n == 0 {
                    BigInt::one()
                } else {
                    BigInt::one() << (n - 1)
                }
            }
            ReductionMethod::Kz => BigInt::from(n.max(1)),
        }
    }

    /// Reduce the columns of `b`, returning (reduced, U) with reduced = b*U.
    pub fn reduce(
        &self,
        b: &crate::mat::IntMat,
    ) -> Result<(crate::mat::IntMat, crate::mat::IntMat)> {
        match self.method {
            ReductionMethod::Lll => lll_reduce(b, self),
            ReductionMethod::Kz => kz_reduce(b, self),
        }
    }
}

impl std::fmt::Display for ReductionMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReductionMethod::Lll => write!(f, "lll"),
            ReductionMethod::Kz => write!(f, "kz"),
        }
    }
}
