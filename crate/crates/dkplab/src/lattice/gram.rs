use crate::error::{Error, Result};
use crate::mat::{dot_int_rat, norm_sq_rat, IntMat, Rat, RatVec};
use num_traits::{One, Zero};

/// Exact Gram-Schmidt data of a column basis: the orthogonalized vectors
/// b_i^*, the coefficients mu_ij with b_i = sum_{j<=i} mu_ij b_j^*, and the
/// squared norms ||b_i^*||^2.
#[derive(Debug, Clone)]
pub struct GramSchmidtData {
    pub bstar: Vec<RatVec>,
    /// Lower-triangular; mu[i][j] defined for j <= i, mu[i][i] = 1.
    pub mu: Vec<Vec<Rat>>,
    pub norms_sq: Vec<Rat>,
}

impl GramSchmidtData {
    pub fn dim(&self) -> usize {
        self.bstar.len()
    }

    /// Reconstruct column i as sum mu_ij b_j^*; used by tests to check the
    /// defining identity exactly.
    pub fn reconstruct(&self, i: usize) -> RatVec {
        let m = self.bstar[0].len();
        let mut v = vec![Rat::zero(); m];
        for j in 0..=i {
            for (t, coord) in v.iter_mut().enumerate() {
                *coord += &self.mu[i][j] * &self.bstar[j][t];
            }
        }
        v
    }
}

/// Gram-Schmidt orthogonalization of the columns of `b`.
///
/// Errors with DependentColumns when the columns are linearly dependent.
pub fn gram_schmidt(b: &IntMat) -> Result<GramSchmidtData> {
    let n = b.cols();
    let mut bstar: Vec<RatVec> = Vec::with_capacity(n);
    let mut mu: Vec<Vec<Rat>> = Vec::with_capacity(n);
    let mut norms: Vec<Rat> = Vec::with_capacity(n);
    for i in 0..n {
        let bi = b.col(i);
        let mut star: RatVec = bi.iter().map(|v| Rat::from_integer(v.clone())).collect();
        let mut row = vec![Rat::zero(); n];
        for j in 0..i {
            let m = dot_int_rat(&bi, &bstar[j]) / &norms[j];
            for (t, coord) in star.iter_mut().enumerate() {
                *coord -= &m * &bstar[j][t];
            }
            row[j] = m;
        }
        row[i] = Rat::one();
        let ns = norm_sq_rat(&star);
        if ns.is_zero() {
            return Err(Error::DependentColumns);
        }
        bstar.push(star);
        mu.push(row);
        norms.push(ns);
    }
    Ok(GramSchmidtData {
        bstar,
        mu,
        norms_sq: norms,
    })
}
