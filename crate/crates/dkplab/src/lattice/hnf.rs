use crate::error::{Error, Result};
use crate::mat::IntMat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Hermite normal form data of a full-row-rank A:
/// A * U = [H, 0] with U unimodular, H lower triangular with positive
/// diagonal and entries left of the diagonal reduced modulo the diagonal.
/// W holds the first m columns of U, V the last n-m (an integer kernel
/// basis of A), and `u_inv` the exact inverse of U.
#[derive(Debug, Clone)]
pub struct HnfResult {
    pub h: IntMat,
    pub u: IntMat,
    pub u_inv: IntMat,
    pub w: IntMat,
    pub v: IntMat,
}

/// Column-style HNF of a full-row-rank matrix (m rows <= n columns).
pub fn hnf(a: &IntMat) -> Result<HnfResult> {
    let (m, n) = (a.rows(), a.cols());
    if m > n {
        return Err(Error::RankDeficient);
    }
    let (h_full, u, u_inv, pivots) = column_echelon(a);
    if pivots.len() < m {
        return Err(Error::RankDeficient);
    }
    // Full row rank: pivot i sits at row i, column i.
    let h = h_full.select_cols(&(0..m).collect::<Vec<_>>());
    let w = u.select_cols(&(0..m).collect::<Vec<_>>());
    let v = u.select_cols(&(m..n).collect::<Vec<_>>());
    Ok(HnfResult { h, u, u_inv, w, v })
}

/// Integer basis of { x in Z^n : A x = 0 } for full-row-rank A.
pub fn kernel_basis(a: &IntMat) -> Result<IntMat> {
    Ok(hnf(a)?.v)
}

/// Integral V* with V* V = I_{n-m}, where V = kernel_basis(A): the last
/// n-m rows of U^{-1}.
pub fn dual_basis(a: &IntMat) -> Result<IntMat> {
    let res = hnf(a)?;
    let (m, n) = (a.rows(), a.cols());
    Ok(res.u_inv.select_rows(&(m..n).collect::<Vec<_>>()))
}

/// Canonical column HNF of an arbitrary matrix. Returns (H, U, U^-1, pivot
/// rows). H = A*U is in column echelon form: pivot rows strictly increase,
/// pivots are positive, entries left of each pivot in its row lie in
/// [0, pivot), and non-pivot columns (at the right) are zero. H with the
/// zero columns dropped is the unique such basis of the column lattice, so
/// two matrices generate the same lattice iff their trimmed H agree.
pub fn column_hnf(a: &IntMat) -> (IntMat, IntMat, Vec<usize>) {
    let (h, u, _, pivots) = column_echelon(a);
    (h, u, pivots)
}

fn column_echelon(a: &IntMat) -> (IntMat, IntMat, IntMat, Vec<usize>) {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMat::identity(n);
    let mut u_inv = IntMat::identity(n);

    // Column op wrappers keeping u and u_inv in sync: a column operation on
    // (h, u) corresponds to the inverse row operation on u_inv.
    macro_rules! add_col {
        ($dst:expr, $src:expr, $q:expr) => {{
            let q: BigInt = $q;
            h.add_col_mult($dst, $src, &q);
            u.add_col_mult($dst, $src, &q);
            u_inv.add_row_mult($src, $dst, &(-q));
        }};
    }
    macro_rules! swap_col {
        ($x:expr, $y:expr) => {{
            h.swap_cols($x, $y);
            u.swap_cols($x, $y);
            u_inv.swap_rows($x, $y);
        }};
    }
    macro_rules! neg_col {
        ($x:expr) => {{
            h.negate_col($x);
            u.negate_col($x);
            u_inv.negate_row($x);
        }};
    }

    let mut pivots: Vec<usize> = Vec::new();
    let mut c = 0usize; // next pivot column
    for i in 0..m {
        if c == n {
            break;
        }
        // Eliminate row i across columns c..n by gcd steps.
        loop {
            // smallest nonzero |entry| among columns c..n in row i
            let mut best: Option<(usize, BigInt)> = None;
            for j in c..n {
                let v = h.get(i, j);
                if v.is_zero() {
                    continue;
                }
                match &best {
                    Some((_, bv)) if bv.abs() <= v.abs() => {}
                    _ => best = Some((j, v.clone())),
                }
            }
            let (jmin, _) = match best {
                None => break, // row i is zero on the working columns: no pivot here
                Some(x) => x,
            };
            swap_col!(c, jmin);
            let mut done = true;
            for j in c + 1..n {
                if h.get(i, j).is_zero() {
                    continue;
                }
                let q = h.get(i, j).div_floor(h.get(i, c));
                add_col!(j, c, -q);
                if !h.get(i, j).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(i, c).is_zero() {
            continue; // move to next row, same column
        }
        if h.get(i, c).is_negative() {
            neg_col!(c);
        }
        // Reduce entries left of the pivot in row i into [0, pivot).
        for j in 0..c {
            let q = h.get(i, j).div_floor(h.get(i, c));
            add_col!(j, c, -q);
        }
        pivots.push(i);
        c += 1;
    }
    (h, u, u_inv, pivots)
}
