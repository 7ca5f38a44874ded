use super::gram::gram_schmidt;
use super::ReductionProfile;
use crate::error::{Error, Result};
use crate::mat::{ratio, round_half_up, IntMat, Rat};
use num_traits::{Signed, Zero};

/// LLL reduction of the columns of `b` with exact rational Gram-Schmidt
/// bookkeeping. Returns (reduced, U) with reduced = b * U and U unimodular.
///
/// The sweep is the classical one: work at the lowest index k violating the
/// exchange condition, size-reduce, swap, and back up. Output columns are
/// sign-normalized (first nonzero entry positive) so results are canonical.
pub fn lll_reduce(b: &IntMat, profile: &ReductionProfile) -> Result<(IntMat, IntMat)> {
    if profile.delta <= ratio(1, 4) || profile.delta > ratio(1, 1) {
        return Err(Error::BadDelta);
    }
    let n = b.cols();
    let mut basis = b.clone();
    let mut u = IntMat::identity(n);
    if n <= 1 {
        basis.canonicalize_column_signs();
        let mut uu = IntMat::identity(n);
        if n == 1 {
            // mirror a possible sign flip into U
            if !b.is_zero() {
                let i = (0..b.rows()).find(|&i| !b.get(i, 0).is_zero()).unwrap();
                if b.get(i, 0).is_negative() {
                    uu.negate_col(0);
                }
            }
        }
        return Ok((basis, uu));
    }

    // Exact GS state: mu lower-triangular, ns[i] = ||b_i^*||^2.
    let gs = gram_schmidt(&basis)?;
    let mut mu = gs.mu;
    let mut ns = gs.norms_sq;

    let half = ratio(1, 2);
    let mut k = 1usize;
    while k < n {
        // Size-reduce column k against columns k-1 .. 0.
        for j in (0..k).rev() {
            if mu[k][j].abs() > half {
                let q = round_half_up(&mu[k][j]);
                basis.add_col_mult(k, j, &(-q.clone()));
                u.add_col_mult(k, j, &(-q.clone()));
                let qr = Rat::from_integer(q);
                for t in 0..j {
                    let delta = &qr * &mu[j][t];
                    mu[k][t] = &mu[k][t] - delta;
                }
                mu[k][j] = &mu[k][j] - &qr;
            }
        }
        // Lovasz exchange condition in the squared form
        // ns[k] >= (delta - mu[k][k-1]^2) * ns[k-1].
        let lhs = ns[k].clone();
        let rhs = (&profile.delta - &mu[k][k - 1] * &mu[k][k - 1]) * &ns[k - 1];
        if lhs >= rhs {
            k += 1;
        } else {
            basis.swap_cols(k, k - 1);
            u.swap_cols(k, k - 1);
            // Standard swap update of the GS state.
            let mu_old = mu[k][k - 1].clone();
            let b_new = &ns[k] + &mu_old * &mu_old * &ns[k - 1];
            let mu_new = &mu_old * &ns[k - 1] / &b_new;
            ns[k] = &ns[k - 1] * &ns[k] / &b_new;
            ns[k - 1] = b_new;
            mu[k][k - 1] = mu_new.clone();
            for t in 0..k - 1 {
                let tmp = mu[k][t].clone();
                mu[k][t] = mu[k - 1][t].clone();
                mu[k - 1][t] = tmp;
            }
            for i in k + 1..n {
                let t = mu[i][k].clone();
                mu[i][k] = &mu[i][k - 1] - &mu_old * &t;
                mu[i][k - 1] = &t + &mu_new * &mu[i][k];
            }
            k = k.max(2) - 1;
        }
    }

    canonical_signs(&mut basis, &mut u);
    debug_assert!(is_lll_reduced(&basis, &profile.delta).unwrap());
    Ok((basis, u))
}

/// Flip column signs of (basis, u) together so each basis column has a
/// positive leading entry.
pub(crate) fn canonical_signs(basis: &mut IntMat, u: &mut IntMat) {
    for j in 0..basis.cols() {
        if let Some(i) = (0..basis.rows()).find(|&i| !basis.get(i, j).is_zero()) {
            if basis.get(i, j).is_negative() {
                basis.negate_col(j);
                u.negate_col(j);
            }
        }
    }
}

/// Check |mu_ij| <= 1/2 for all j < i, recomputing Gram-Schmidt from scratch.
pub fn is_size_reduced(b: &IntMat) -> Result<bool> {
    let gs = gram_schmidt(b)?;
    let half = ratio(1, 2);
    for i in 0..b.cols() {
        for j in 0..i {
            if gs.mu[i][j].abs() > half {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Verbatim check of the two LLL conditions, by independent recomputation:
/// size reduction and || mu_{i,i-1} b_{i-1}^* + b_i^* ||^2 >= delta ||b_{i-1}^*||^2.
pub fn is_lll_reduced(b: &IntMat, delta: &Rat) -> Result<bool> {
    if !is_size_reduced(b)? {
        return Ok(false);
    }
    let gs = gram_schmidt(b)?;
    for i in 1..b.cols() {
        // ||mu b* + b_i^*||^2 = mu^2 ||b_{i-1}^*||^2 + ||b_i^*||^2 since the
        // two vectors are orthogonal.
        let m = &gs.mu[i][i - 1];
        let lhs = m * m * &gs.norms_sq[i - 1] + &gs.norms_sq[i];
        let rhs = delta * &gs.norms_sq[i - 1];
        if lhs < rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
