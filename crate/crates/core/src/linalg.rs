//! Dense exact linear algebra over the scalar field.
//!
//! Everything here is plain Gaussian elimination with first-nonzero pivoting,
//! which keeps results deterministic for golden files.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::QScalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<QScalar>,
}

pub type Vector = Vec<QScalar>;

pub fn vec_zero(n: usize) -> Vector {
    vec![QScalar::zero(); n]
}

pub fn vec_unit(n: usize, k: usize) -> Vector {
    let mut v = vec_zero(n);
    v[k] = QScalar::one();
    v
}

pub fn vec_is_zero(v: &Vector) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn vec_add(a: &Vector, b: &Vector) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn vec_sub(a: &Vector, b: &Vector) -> Vector {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn vec_scale(a: &Vector, c: &QScalar) -> Vector {
    a.iter().map(|x| x.mul(c)).collect()
}

/// Kronecker product of coordinate vectors, index `(a, b) -> a*dim_b + b`.
pub fn vec_kron(a: &Vector, b: &Vector) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.mul(y));
        }
    }
    out
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![QScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for k in 0..n {
            m.set(k, k, QScalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> QScalar) -> Self {
        let mut m = Self::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn diagonal(entries: &[QScalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (k, x) in entries.iter().enumerate() {
            m.set(k, k, x.clone());
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zero(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
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

    pub fn get(&self, r: usize, c: usize) -> &QScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: QScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    if r == c {
                        self.get(r, c).is_one()
                    } else {
                        self.get(r, c).is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &QScalar) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product shape mismatch {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = Mat::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = vec_zero(self.rows);
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                out[r] = out[r].add(&a.mul(x));
            }
        }
        out
    }

    pub fn kron(&self, rhs: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows * rhs.rows, self.cols * rhs.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..rhs.rows {
                    for c2 in 0..rhs.cols {
                        let b = rhs.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * rhs.rows + r2, c1 * rhs.cols + c2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut out = Mat::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row >= m.rows {
                break;
            }
            let mut pivot_row = None;
            for r in row..m.rows {
                if !m.get(r, col).is_zero() {
                    pivot_row = Some(r);
                    break;
                }
            }
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for c in 0..m.cols {
                    let a = m.get(row, c).clone();
                    let b = m.get(pr, c).clone();
                    m.set(row, c, b);
                    m.set(pr, c, a);
                }
            }
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in 0..m.cols {
                let v = m.get(row, c).mul(&inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in 0..m.cols {
                    let v = m.get(r, c).sub(&factor.mul(m.get(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn invert(&self) -> Result<Mat> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot invert {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, QScalar::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(k, &p)| p != k) {
            return Err(Error::Singular);
        }
        Ok(Mat::from_fn(n, n, |r, c| red.get(r, n + c).clone()))
    }

    /// Solve `self * x = rhs` for each column of `rhs`. Requires a unique
    /// solution to exist (checked); works for rectangular systems with full
    /// column-rank coefficient matrices.
    pub fn solve(&self, rhs: &Mat) -> Result<Mat> {
        assert_eq!(self.rows, rhs.rows, "solve shape mismatch");
        let n = self.cols;
        let mut aug = Mat::zero(self.rows, n + rhs.cols);
        for r in 0..self.rows {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            for c in 0..rhs.cols {
                aug.set(r, n + c, rhs.get(r, c).clone());
            }
        }
        let (red, pivots) = aug.rref();
        let coeff_pivots: Vec<usize> = pivots.iter().copied().filter(|&p| p < n).collect();
        if coeff_pivots.len() < n {
            return Err(Error::Singular);
        }
        // consistency: no pivot may fall in the rhs block
        if pivots.iter().any(|&p| p >= n) {
            return Err(Error::Internal(
                "inconsistent linear system in solve".to_string(),
            ));
        }
        Ok(Mat::from_fn(n, rhs.cols, |r, c| red.get(r, n + c).clone()))
    }

    pub fn solve_vec(&self, rhs: &Vector) -> Result<Vector> {
        let m = Mat::from_columns(rhs.len(), std::slice::from_ref(rhs));
        Ok(self.solve(&m)?.column(0))
    }

    /// Basis of the right kernel, each vector normalized so its first nonzero
    /// coordinate is 1. Deterministic given the column order.
    pub fn kernel(&self) -> Vec<Vector> {
        let (red, pivots) = self.rref();
        let mut out = Vec::new();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = Some(k);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec_zero(self.cols);
            v[free] = QScalar::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = red.get(k, free).neg();
            }
            // normalize: first nonzero coordinate 1
            if let Some(first) = v.iter().position(|x| !x.is_zero()) {
                let inv = v[first].inv().expect("nonzero");
                for x in v.iter_mut() {
                    *x = x.mul(&inv);
                }
            }
            out.push(v);
        }
        out
    }
}

/// The flip `V (x) W -> W (x) V` on coordinates, `e_(a,b) -> e_(b,a)`.
pub fn flip_matrix(dim_a: usize, dim_b: usize) -> Mat {
    let mut m = Mat::zero(dim_a * dim_b, dim_a * dim_b);
    for a in 0..dim_a {
        for b in 0..dim_b {
            m.set(b * dim_a + a, a * dim_b + b, QScalar::one());
        }
    }
    m
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{qexp, QScalar};

    fn q() -> QScalar {
        QScalar::q_pow(qexp(1, 1))
    }

    #[test]
    fn invert_small() {
        // [[q, 1], [0, q^-1]] has exact inverse [[q^-1, -1], [0, q]]
        let mut m = Mat::zero(2, 2);
        m.set(0, 0, q());
        m.set(0, 1, QScalar::one());
        m.set(1, 1, QScalar::q_pow(qexp(-1, 1)));
        let inv = m.invert().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn singular_detected() {
        let mut m = Mat::zero(2, 2);
        m.set(0, 0, q());
        m.set(1, 0, q());
        assert!(matches!(m.invert(), Err(Error::Singular)));
    }

    #[test]
    fn kernel_normalized() {
        // x + q y = 0 has kernel spanned by (1, -q^-1)
        let mut m = Mat::zero(1, 2);
        m.set(0, 0, QScalar::one());
        m.set(0, 1, q());
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(ker[0][0].is_one());
        assert_eq!(ker[0][1], QScalar::q_pow(qexp(-1, 1)).neg());
    }

    #[test]
    fn flip_is_involutive_on_square_factors() {
        let f = flip_matrix(2, 2);
        assert!(f.mul(&f).is_identity());
        let g = flip_matrix(2, 3);
        let h = flip_matrix(3, 2);
        assert!(h.mul(&g).is_identity());
    }

    #[test]
    fn kron_mixed_product() {
        let a = Mat::diagonal(&[q(), QScalar::one()]);
        let b = Mat::diagonal(&[QScalar::one(), q()]);
        let ab = a.kron(&b);
        assert_eq!(ab.get(0, 0), &q());
        assert_eq!(ab.get(1, 1), &q().mul(&q()));
        assert_eq!(ab.get(3, 3), &q());
    }
}
