use super::gram::{gram_schmidt, GramSchmidtData};
use super::lll::{canonical_signs, lll_reduce};
use super::{ReductionProfile, DEFAULT_ENUM_CAP};
use crate::error::{Error, Result};
use crate::mat::{gcd_vec, IntMat, IntVec, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Shortest nonzero lattice vector of L(B), by exact depth-first enumeration
/// over the Gram-Schmidt data of an LLL-reduced copy. Ties are broken toward
/// the lexicographically smallest sign-normalized vector.
pub fn shortest_vector(b: &IntMat) -> Result<IntVec> {
    shortest_vector_with_cap(b, DEFAULT_ENUM_CAP)
}

pub fn shortest_vector_with_cap(b: &IntMat, cap: usize) -> Result<IntVec> {
    if b.cols() > cap {
        return Err(Error::DimensionCap { dim: b.cols(), cap });
    }
    let (red, _) = lll_reduce(b, &ReductionProfile::lll())?;
    let gs = gram_schmidt(&red)?;
    let z = enumerate_shortest(&gs, 0).expect("nonzero lattice has a shortest vector");
    let mut v = red.mul_vec(&z);
    normalize_sign(&mut v);
    Ok(v)
}

/// Korkine-Zolotarev reduction: afterwards the projection b_i(i) of each
/// basis vector is a shortest nonzero vector of the projected lattice L_i,
/// and |mu_ij| <= 1/2 throughout. Exponential in the column count, hence the
/// hard cap from the profile.
pub fn kz_reduce(b: &IntMat, profile: &ReductionProfile) -> Result<(IntMat, IntMat)> {
    let n = b.cols();
    if n > profile.enum_cap {
        return Err(Error::DimensionCap {
            dim: n,
            cap: profile.enum_cap,
        });
    }
    // LLL warm start keeps enumeration trees small.
    let (mut basis, mut u) = lll_reduce(b, profile)?;
    for i in 0..n {
        let gs = gram_schmidt(&basis)?;
        let z = enumerate_shortest(&gs, i).expect("projected lattice is nonzero");
        let is_e1 = z[0].abs().is_one() && z[1..].iter().all(|c| c.is_zero());
        if !is_e1 {
            debug_assert!(
                gcd_vec(&z).is_one(),
                "shortest coefficient vector is primitive"
            );
            let t = unimodular_with_first_column(&z);
            apply_block(&mut basis, i, &t);
            apply_block(&mut u, i, &t);
        }
    }
    size_reduce_in_place(&mut basis, &mut u)?;
    canonical_signs(&mut basis, &mut u);
    Ok((basis, u))
}

/// Enumerate coefficients z_start..z_{n-1} (not all zero) minimizing
/// || sum z_j b_j(start) ||^2, i.e. the projection onto the orthogonal
/// complement of b_0..b_{start-1}. Exact rational Schnorr-Euchner walk.
fn enumerate_shortest(gs: &GramSchmidtData, start: usize) -> Option<IntVec> {
    let n = gs.dim();
    if start >= n {
        return None;
    }
    let k = n - start;
    // radius: cost of z = e_start, which is ||b_start^*||^2
    let mut radius = gs.norms_sq[start].clone();
    let mut best: Option<(Rat, IntVec)> = None;
    let mut z = vec![BigInt::zero(); k];
    // cost_suffix[t] for t relative level: sum over levels > t of ns*(c)^2
    walk(
        gs,
        start,
        k,
        (k - 1) as isize,
        &mut z,
        &Rat::zero(),
        &mut radius,
        &mut best,
    );
    best.map(|(_, z)| z)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    gs: &GramSchmidtData,
    start: usize,
    k: usize,
    level: isize,
    z: &mut IntVec,
    cost_above: &Rat,
    radius: &mut Rat,
    best: &mut Option<(Rat, IntVec)>,
) {
    if level < 0 {
        if z.iter().all(|c| c.is_zero()) {
            return;
        }
        let cost = cost_above.clone();
        let candidate = || {
            let mut zz = z.clone();
            normalize_sign(&mut zz);
            zz
        };
        match best {
            None => {
                *best = Some((cost.clone(), candidate()));
                *radius = cost;
            }
            Some((bc, bz)) => {
                if cost < *bc {
                    *best = Some((cost.clone(), candidate()));
                    *radius = cost;
                } else if cost == *bc {
                    let c = candidate();
                    if c < *bz {
                        *bz = c;
                    }
                }
            }
        }
        return;
    }
    let l = start + level as usize; // absolute column index
                                    // c_l = z_l + sum_{j > l} mu_{j,l} z_j ; center is the real value making
                                    // the level cost zero.
    let mut center = Rat::zero();
    for j in l + 1..start + k {
        let zj = &z[j - start];
        if !zj.is_zero() {
            center -= &gs.mu[j][l] * Rat::from_integer(zj.clone());
        }
    }
    let ns = &gs.norms_sq[l];
    let budget = &*radius - cost_above;
    if budget.is_negative() {
        return;
    }
    // zig-zag outward from round(center)
    let c0 = crate::mat::round_half_up(&center);
    let mut offsets: Vec<BigInt> = Vec::new();
    {
        // enumerate candidate values c0, c0+1, c0-1, c0+2, ... until both
        // directions exceed the budget
        let mut up = c0.clone();
        let mut down = c0.clone() - 1;
        let fits = |v: &BigInt, radius: &Rat, cost_above: &Rat| -> bool {
            let d = Rat::from_integer(v.clone()) - &center;
            let cost = ns * &d * &d;
            &(cost + cost_above) <= radius
        };
        loop {
            let mut progressed = false;
            if fits(&up, radius, cost_above) {
                offsets.push(up.clone());
                up += 1;
                progressed = true;
            }
            if fits(&down, radius, cost_above) {
                offsets.push(down.clone());
                down -= 1;
                progressed = true;
            }
            if !progressed {
                break;
            }
        }
    }
    // deterministic order: by distance from center, then smaller value first
    offsets.sort_by(|a, b| {
        let da = (Rat::from_integer(a.clone()) - &center).abs();
        let db = (Rat::from_integer(b.clone()) - &center).abs();
        da.cmp(&db).then(a.cmp(b))
    });
    for v in offsets {
        let d = Rat::from_integer(v.clone()) - &center;
        let cost = ns * &d * &d + cost_above;
        if &cost > radius {
            continue; // radius may have shrunk since the list was built
        }
        z[level as usize] = v;
        walk(gs, start, k, level - 1, z, &cost, radius, best);
    }
    z[level as usize] = BigInt::zero();
}

fn normalize_sign(v: &mut IntVec) {
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            for c in v.iter_mut() {
                *c = -c.clone();
            }
        }
    }
}

/// Unimodular T with first column equal to z (gcd(z) = 1), built by tracking
/// the inverse of the row reduction that maps z to e_1.
fn unimodular_with_first_column(z: &IntVec) -> IntMat {
    let k = z.len();
    let mut w = z.clone();
    let mut t = IntMat::identity(k);
    for j in 1..k {
        while !w[j].is_zero() {
            let q = w[0].div_floor(&w[j]);
            // row op: w[0] -= q*w[j]  <->  T: col_j += q*col_0
            w[0] = &w[0] - &q * &w[j];
            t.add_col_mult(j, 0, &q);
            // swap rows 0 and j <-> swap cols 0 and j
            w.swap(0, j);
            t.swap_cols(0, j);
        }
    }
    if w[0].is_negative() {
        t.negate_col(0);
        w[0] = -w[0].clone();
    }
    debug_assert!(w[0].is_one());
    debug_assert_eq!(t.col(0), *z);
    t
}

/// Right-multiply the trailing block of columns [i..n) by T.
fn apply_block(m: &mut IntMat, i: usize, t: &IntMat) {
    let n = m.cols();
    let idx: Vec<usize> = (i..n).collect();
    let block = m.select_cols(&idx);
    let new_block = block.mul(t);
    for (jj, _) in idx.iter().enumerate() {
        for r in 0..m.rows() {
            m.set(r, i + jj, new_block.get(r, jj).clone());
        }
    }
}

/// Make |mu_ij| <= 1/2 everywhere by integer column operations, keeping the
/// transform matrix in sync. Does not alter the Gram-Schmidt vectors.
fn size_reduce_in_place(basis: &mut IntMat, u: &mut IntMat) -> Result<()> {
    let gs = gram_schmidt(basis)?;
    let mut mu = gs.mu;
    let half = crate::mat::ratio(1, 2);
    for i in 1..basis.cols() {
        for j in (0..i).rev() {
            if mu[i][j].abs() > half {
                let q = crate::mat::round_half_up(&mu[i][j]);
                basis.add_col_mult(i, j, &(-q.clone()));
                u.add_col_mult(i, j, &(-q.clone()));
                let qr = Rat::from_integer(q);
                for t in 0..=j {
                    let delta = &qr * &mu[j][t];
                    mu[i][t] = &mu[i][t] - delta;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{big, int_vec, norm_sq_int};

    #[test]
    fn axis_lattice() {
        let b = IntMat::from_rows(&[vec![3, 0], vec![0, 5]]);
        let v = shortest_vector(&b).unwrap();
        assert_eq!(norm_sq_int(&v), big(9));
        assert_eq!(v, int_vec(&[3, 0]));
    }

    #[test]
    fn unit_lattice() {
        let b = IntMat::identity(2);
        let v = shortest_vector(&b).unwrap();
        assert_eq!(norm_sq_int(&v), big(1));
    }

    #[test]
    fn skewed_two_dim() {
        // columns (2,0), (1,2): shortest has squared norm 4
        let b = IntMat::from_rows(&[vec![2, 1], vec![0, 2]]);
        let v = shortest_vector(&b).unwrap();
        assert_eq!(norm_sq_int(&v), big(4));
        assert_eq!(v, int_vec(&[2, 0]));
    }

    #[test]
    fn cap_enforced() {
        let b = IntMat::identity(3);
        assert!(matches!(
            shortest_vector_with_cap(&b, 2),
            Err(Error::DimensionCap { dim: 3, cap: 2 })
        ));
    }

    #[test]
    fn kz_single_column() {
        let b = IntMat::from_rows(&[vec![-4], vec![2]]);
        let (red, u) = kz_reduce(&b, &ReductionProfile::kz()).unwrap();
        assert_eq!(red.col(0), int_vec(&[4, -2]));
        assert!(u.is_unimodular());
    }

    #[test]
    fn kz_sorts_shortest_first() {
        let b = IntMat::from_rows(&[vec![5, 0], vec![0, 3]]);
        let (red, u) = kz_reduce(&b, &ReductionProfile::kz()).unwrap();
        assert_eq!(red.col_norm_sq(0), big(9));
        assert!(u.is_unimodular());
        assert_eq!(b.mul(&u), red);
    }

    #[test]
    fn unimodular_completion() {
        let z = int_vec(&[3, 5, 7]);
        let t = unimodular_with_first_column(&z);
        assert_eq!(t.col(0), z);
        assert!(t.is_unimodular());
    }
}
