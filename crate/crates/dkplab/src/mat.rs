//! Dense arbitrary-precision integer matrices and the small amount of
//! rational vector arithmetic the lattice and LP code shares.
//!
//! Matrices are row-major. Entries are exact `BigInt`s; nothing in the
//! library ever rounds silently.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type IntVec = Vec<BigInt>;
pub type RatVec = Vec<Rat>;

pub fn big(i: i64) -> BigInt {
    BigInt::from(i)
}

pub fn rat(i: i64) -> Rat {
    Rat::from_integer(big(i))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(big(n), big(d))
}

pub fn int_vec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| big(x)).collect()
}

/// Round to the nearest integer; exact halves round toward +infinity.
pub fn round_half_up(x: &Rat) -> BigInt {
    (x + ratio(1, 2)).floor().to_integer()
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm_sq_int(a: &[BigInt]) -> BigInt {
    a.iter().map(|x| x * x).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm_sq_rat(a: &[Rat]) -> Rat {
    a.iter().map(|x| x * x).sum()
}

pub fn dot_int_rat(a: &[BigInt], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| Rat::from_integer(x.clone()) * y)
        .sum()
}

/// Floor of sqrt for nonnegative integers.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    n.sqrt()
}

pub fn gcd_vec(v: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Smallest integer strictly greater than alpha*sqrt(x) + beta*sqrt(y),
/// for nonnegative integer inputs, decided with integer arithmetic only:
/// m > a*sqrt(X) + b*sqrt(Y)  iff  m^2 > a^2 X  and  (with  P = m^2 - a^2 X
/// - b^2 Y)  P > 0 and P^2 > 4 a^2 b^2 X Y.
pub fn smallest_int_exceeding(alpha: &BigInt, x: &BigInt, beta: &BigInt, y: &BigInt) -> BigInt {
    assert!(!alpha.is_negative() && !x.is_negative() && !beta.is_negative() && !y.is_negative());
    let a2x = alpha * alpha * x;
    let b2y = beta * beta * y;
    let cross = BigInt::from(4) * &a2x * &b2y;
    let exceeds = |m: &BigInt| -> bool {
        if m.is_negative() || m.is_zero() {
            return a2x.is_zero() && b2y.is_zero() && !m.is_negative() && false;
        }
        let p = m * m - &a2x - &b2y;
        if !p.is_positive() {
            return a2x.is_zero() && b2y.is_zero();
        }
        &p * &p > cross
    };
    if a2x.is_zero() && b2y.is_zero() {
        return BigInt::one();
    }
    // binary search on the monotone predicate
    let mut hi = BigInt::one();
    while !exceeds(&hi) {
        hi = &hi * 2;
    }
    let mut lo = BigInt::zero();
    while &lo + 1 < hi {
        let mid: BigInt = (&lo + &hi) / 2;
        if exceeds(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = IntMat::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, big(v));
            }
        }
        m
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = IntMat::zero(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<BigInt>]) -> Self {
        let c = cols.len();
        let r = if c == 0 { 0 } else { cols[0].len() };
        let mut m = IntMat::zero(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col_vecs(&self) -> Vec<IntVec> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> IntVec {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot_int(self.row(i), v)).collect()
    }

    /// Row vector times matrix: v^T A.
    pub fn vec_mul(&self, v: &[BigInt]) -> IntVec {
        assert_eq!(self.rows, v.len());
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| &v[i] * self.get(i, j)).sum())
            .collect()
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let x = i * self.cols;
            self.data.swap(x + a, x + b);
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    /// Column operation C_dst += q * C_src.
    pub fn add_col_mult(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, dst) + q * self.get(i, src);
            self.set(i, dst, v);
        }
    }

    /// Row operation R_dst += q * R_src.
    pub fn add_row_mult(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(dst, j) + q * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j).clone();
            self.set(i, j, v);
        }
    }

    /// Keep only the listed columns, in order.
    pub fn select_cols(&self, idx: &[usize]) -> IntMat {
        let mut m = IntMat::zero(self.rows, idx.len());
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                m.set(i, jj, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> IntMat {
        let mut m = IntMat::zero(idx.len(), self.cols);
        for (ii, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                m.set(ii, j, self.get(i, j).clone());
            }
        }
        m
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.cols);
        let mut m = IntMat::zero(self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..self.cols {
                m.set(self.rows + i, j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = self.row_vecs();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = &num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }

    /// Exact inverse of a unimodular matrix. Returns None if the matrix is
    /// not square or not unimodular.
    pub fn int_inverse(&self) -> Option<IntMat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        // Rational Gauss-Jordan; the result must come out integral.
        let mut a: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rat::from_integer(self.get(i, j).clone()))
                    .collect()
            })
            .collect();
        let mut inv: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { rat(1) } else { rat(0) })
                    .collect()
            })
            .collect();
        for k in 0..n {
            let piv = (k..n).find(|&i| !a[i][k].is_zero())?;
            a.swap(k, piv);
            inv.swap(k, piv);
            let p = a[k][k].clone();
            for j in 0..n {
                a[k][j] = &a[k][j] / &p;
                inv[k][j] = &inv[k][j] / &p;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..n {
                    a[i][j] = &a[i][j] - &f * &a[k][j];
                    inv[i][j] = &inv[i][j] - &f * &inv[k][j];
                }
            }
        }
        let mut out = IntMat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                if !inv[i][j].is_integer() {
                    return None;
                }
                out.set(i, j, inv[i][j].to_integer());
            }
        }
        Some(out)
    }

    /// Flip column signs so the first nonzero entry of each column is
    /// positive. Canonical form for test comparisons.
    pub fn canonicalize_column_signs(&mut self) {
        for j in 0..self.cols {
            if let Some(i) = (0..self.rows).find(|&i| !self.get(i, j).is_zero()) {
                if self.get(i, j).is_negative() {
                    self.negate_col(j);
                }
            }
        }
    }

    pub fn col_norm_sq(&self, j: usize) -> BigInt {
        (0..self.rows)
            .map(|i| self.get(i, j) * self.get(i, j))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }
}

impl std::fmt::Display for IntMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
