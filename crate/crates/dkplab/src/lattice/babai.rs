use super::gram::gram_schmidt;
use crate::error::Result;
use crate::mat::{dot_int_rat, round_half_up, IntMat, IntVec, Rat};

/// Babai's nearest-plane rule: integer coefficients x such that B*x is the
/// lattice point the nearest-plane walk selects for `target`.
///
/// Rounding is to the nearest integer with exact halves sent toward
/// +infinity. Quality is best when B is reduced first; correctness only
/// needs independent columns.
pub fn babai_nearest(b: &IntMat, target: &[BigIntT]) -> Result<IntVec> {
    let gs = gram_schmidt(b)?;
    let n = b.cols();
    let mut residual: Vec<Rat> = target
        .iter()
        .map(|v| Rat::from_integer(v.clone()))
        .collect();
    let mut coeffs = vec![num_bigint::BigInt::from(0); n];
    for i in (0..n).rev() {
        let proj: Rat = residual
            .iter()
            .zip(&gs.bstar[i])
            .map(|(r, s)| r * s)
            .sum::<Rat>()
            / &gs.norms_sq[i];
        let c = round_half_up(&proj);
        if !num_traits::Zero::is_zero(&c) {
            let col = b.col(i);
            for (t, r) in residual.iter_mut().enumerate() {
                *r -= Rat::from_integer(&c * &col[t]);
            }
        }
        coeffs[i] = c;
    }
    Ok(coeffs)
}

type BigIntT = num_bigint::BigInt;

/// Nearest-plane guarantee: the residual's coefficient along each b_i^*
/// direction has magnitude at most 1/2. Exposed for property tests.
pub fn babai_residual_coeffs(
    b: &IntMat,
    target: &[BigIntT],
    coeffs: &[BigIntT],
) -> Result<Vec<Rat>> {
    let gs = gram_schmidt(b)?;
    let point = b.mul_vec(coeffs);
    let residual: IntVec = target.iter().zip(&point).map(|(t, p)| t - p).collect();
    Ok((0..b.cols())
        .map(|i| dot_int_rat(&residual, &gs.bstar[i]) / &gs.norms_sq[i])
        .collect())
}
