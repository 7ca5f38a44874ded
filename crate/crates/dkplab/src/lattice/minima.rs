use crate::error::{Error, Result};
use crate::mat::{IntMat, IntVec, Rat};
use num_bigint::BigInt;
use num_traits::Zero;

/// Successive minima found by exhaustive coefficient enumeration.
///
/// The values are exact squared norms. They are certified minima only
/// relative to the searched coefficient box [-coeff_bound, coeff_bound]^n:
/// the true lattice minima can only be smaller or equal, never larger, so
/// theorem-side bounds computed from these values stay valid.
#[derive(Debug, Clone)]
pub struct SuccessiveMinima {
    pub lattice_basis: IntMat,
    pub values: Vec<BigInt>,
    pub witnesses: Vec<IntVec>,
    pub coeff_bound: i64,
}

const MAX_COLS: usize = 8;
const MAX_BOUND: i64 = 20;
const MAX_POINTS: u128 = 40_000_000;

/// Enumerate every coefficient vector in the box (up to sign) and return the
/// k shortest linearly independent lattice vectors.
pub fn successive_minima_bruteforce(
    b: &IntMat,
    k: usize,
    coeff_bound: i64,
) -> Result<SuccessiveMinima> {
    let n = b.cols();
    if n > MAX_COLS {
        return Err(Error::DimensionCap {
            dim: n,
            cap: MAX_COLS,
        });
    }
    if coeff_bound > MAX_BOUND || coeff_bound < 1 {
        return Err(Error::TooLarge(format!(
            "coeff_bound {coeff_bound} outside 1..={MAX_BOUND}"
        )));
    }
    if k > n {
        return Err(Error::BadDimension(format!(
            "asked for {k} minima from a rank-{n} basis"
        )));
    }
    let width = (2 * coeff_bound + 1) as u128;
    if width.pow(n as u32) > MAX_POINTS {
        return Err(Error::TooLarge("coefficient box too large".into()));
    }

    // Collect (squared norm, coefficients) with the sign symmetry quotiented
    // out: only vectors whose first nonzero coefficient is positive.
    let mut pool: Vec<(u128, Vec<i64>)> = Vec::new();
    let mut z = vec![0i64; n];
    enumerate_box(b, &mut z, 0, coeff_bound, &mut pool)?;
    pool.sort_unstable();

    let mut chosen_vecs: Vec<IntVec> = Vec::new();
    let mut values = Vec::new();
    let mut echelon: Vec<Vec<Rat>> = Vec::new();
    for (norm, zc) in pool {
        if chosen_vecs.len() == k {
            break;
        }
        let zb: IntVec = zc.iter().map(|&c| BigInt::from(c)).collect();
        let v = b.mul_vec(&zb);
        if add_if_independent(&mut echelon, &v) {
            values.push(BigInt::from(norm));
            chosen_vecs.push(v);
        }
    }
    if chosen_vecs.len() < k {
        return Err(Error::TooLarge(format!(
            "coefficient box [-{coeff_bound},{coeff_bound}] yields only {} independent vectors",
            chosen_vecs.len()
        )));
    }
    Ok(SuccessiveMinima {
        lattice_basis: b.clone(),
        values,
        witnesses: chosen_vecs,
        coeff_bound,
    })
}

fn enumerate_box(
    b: &IntMat,
    z: &mut [i64],
    level: usize,
    bound: i64,
    pool: &mut Vec<(u128, Vec<i64>)>,
) -> Result<()> {
    if level == z.len() {
        // skip zero and the negative half-space
        let first = z.iter().find(|&&c| c != 0);
        match first {
            None => return Ok(()),
            Some(&c) if c < 0 => return Ok(()),
            _ => {}
        }
        let zb: IntVec = z.iter().map(|&c| BigInt::from(c)).collect();
        let v = b.mul_vec(&zb);
        let norm: BigInt = v.iter().map(|x| x * x).sum();
        let as128: u128 = norm
            .to_string()
            .parse()
            .map_err(|_| Error::TooLarge("norm exceeds u128 in brute-force oracle".into()))?;
        pool.push((as128, z.to_vec()));
        return Ok(());
    }
    for c in -bound..=bound {
        z[level] = c;
        enumerate_box(b, z, level + 1, bound, pool)?;
    }
    z[level] = 0;
    Ok(())
}

/// Rational row-echelon insertion; returns true when v enlarges the span.
fn add_if_independent(echelon: &mut Vec<Vec<Rat>>, v: &[BigInt]) -> bool {
    let mut row: Vec<Rat> = v.iter().map(|x| Rat::from_integer(x.clone())).collect();
    for e in echelon.iter() {
        if let Some(p) = e.iter().position(|c| !c.is_zero()) {
            if !row[p].is_zero() {
                let f = &row[p] / &e[p];
                for (t, coord) in row.iter_mut().enumerate() {
                    *coord -= &f * &e[t];
                }
            }
        }
    }
    if row.iter().all(|c| c.is_zero()) {
        false
    } else {
        echelon.push(row);
        true
    }
}
