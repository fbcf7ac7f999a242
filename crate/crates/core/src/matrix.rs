//! Dense matrices over a ring, exact determinants and Pfaffians.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> DenseMatrix<R> {
    pub fn new(rows: usize, cols: usize, data: Vec<R>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> DenseMatrix<S> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<DenseMatrix<S>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(DenseMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(R::zero(), |acc, l| acc + self.get(i, l).clone() * other.get(l, j).clone())
        }))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Skew-symmetric with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero() && (0..i).all(|j| *self.get(i, j) == -self.get(j, i).clone())
            })
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::Dimension(format!("{}x{} matrix is not square", self.rows, self.cols)))
        }
    }

    /// Determinant: Bareiss elimination when the ring has exact division,
    /// cofactor expansion for order at most 4 otherwise.
    pub fn det(&self) -> Result<R> {
        self.require_square()?;
        if R::has_exact_division() {
            self.det_bareiss()
        } else if self.rows <= 4 {
            self.det_cofactor()
        } else {
            Err(Error::Unsupported(format!(
                "determinant of order {} over a ring without exact division",
                self.rows
            )))
        }
    }

    /// Single-step fraction-free Gaussian elimination.
    pub fn det_bareiss(&self) -> Result<R> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(R::one());
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(R::zero()),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = pivot.clone() * m.get(i, j).clone() - m.get(i, k).clone() * m.get(k, j).clone();
                    let q = num.exact_div(&prev).ok_or_else(|| {
                        Error::Invariant("Bareiss step produced a non-exact quotient".into())
                    })?;
                    m.set(i, j, q);
                }
                m.set(i, k, R::zero());
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if sign_flip { -d } else { d })
    }

    /// Laplace expansion along the first row. Exponential; meant for small
    /// orders and as an independent check on elimination.
    pub fn det_cofactor(&self) -> Result<R> {
        self.require_square()?;
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.cofactor_rec(&idx, &idx))
    }

    fn cofactor_rec(&self, rows: &[usize], cols: &[usize]) -> R {
        match rows.len() {
            0 => R::one(),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => {
                self.get(rows[0], cols[0]).clone() * self.get(rows[1], cols[1]).clone()
                    - self.get(rows[0], cols[1]).clone() * self.get(rows[1], cols[0]).clone()
            }
            _ => {
                let mut acc = R::zero();
                for (t, &c) in cols.iter().enumerate() {
                    let a = self.get(rows[0], c);
                    if a.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let minor = a.clone() * self.cofactor_rec(&rows[1..], &rest);
                    acc = if t % 2 == 0 { acc + minor } else { acc - minor };
                }
                acc
            }
        }
    }

    /// Pfaffian by expansion along the first row. Requires a skew-symmetric
    /// matrix with zero diagonal; the empty matrix has Pfaffian 1.
    pub fn pfaffian(&self) -> Result<R> {
        self.require_square()?;
        if self.rows % 2 == 1 {
            return Err(Error::Dimension(format!("Pfaffian of odd order {}", self.rows)));
        }
        if !self.is_alternating() {
            return Err(Error::NotSkew(format!("{}x{} input", self.rows, self.cols)));
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.pfaffian_rec(&idx))
    }

    fn pfaffian_rec(&self, idx: &[usize]) -> R {
        if idx.is_empty() {
            return R::one();
        }
        let first = idx[0];
        let mut acc = R::zero();
        // Pf(A) = sum_{j>=2} (-1)^j a_{1j} Pf(A minus rows/cols 1, j), 1-indexed
        for (pos, &j) in idx.iter().enumerate().skip(1) {
            let a = self.get(first, j);
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = idx.iter().copied().filter(|&x| x != first && x != j).collect();
            let term = a.clone() * self.pfaffian_rec(&rest);
            acc = if pos % 2 == 1 { acc + term } else { acc - term };
        }
        acc
    }
}

impl<R: Ring> fmt::Display for DenseMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for DenseMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DenseMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::SparsePoly;
    use crate::ring::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn qm(rows: &[&[i64]]) -> DenseMatrix<Rational> {
        DenseMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn det_examples() {
        assert_eq!(DenseMatrix::<Rational>::identity(3).det().unwrap(), q(1));
        assert_eq!(qm(&[&[0, 1], &[1, 0]]).det().unwrap(), q(-1));
        let x = SparsePoly::<Rational>::var(2, 0);
        let y = SparsePoly::<Rational>::var(2, 1);
        let m = DenseMatrix::from_rows(vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]]).unwrap();
        assert_eq!(m.det().unwrap(), x.clone() * x - y.clone() * y);
        assert_eq!(DenseMatrix::<Rational>::zeros(0, 0).det().unwrap(), q(1));
    }

    #[test]
    fn det_rejects_non_square() {
        assert!(matches!(DenseMatrix::<Rational>::zeros(2, 3).det(), Err(Error::Dimension(_))));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m = qm(&[&[0, 2, 1], &[1, 0, 0], &[0, 0, 3]]);
        assert_eq!(m.det_bareiss().unwrap(), m.det_cofactor().unwrap());
        assert_eq!(m.det_bareiss().unwrap(), q(-6));
        let singular = qm(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det().unwrap(), q(0));
    }

    #[test]
    fn pfaffian_examples() {
        assert_eq!(DenseMatrix::<Rational>::zeros(0, 0).pfaffian().unwrap(), q(1));
        let a = SparsePoly::<Rational>::var(1, 0);
        let m = DenseMatrix::from_rows(vec![vec![SparsePoly::zero_in(1), a.clone()], vec![-a.clone(), SparsePoly::zero_in(1)]])
            .unwrap();
        assert_eq!(m.pfaffian().unwrap(), a);

        // generic 4x4: variables a12 a13 a14 a23 a24 a34
        let v = |i| SparsePoly::<Rational>::var(6, i);
        let z = SparsePoly::zero_in(6);
        let upper = [[None, Some(0), Some(1), Some(2)], [None, None, Some(3), Some(4)], [None, None, None, Some(5)], [None; 4]];
        let m = DenseMatrix::from_fn(4, 4, |i, j| {
            if i < j {
                v(upper[i][j].unwrap())
            } else if i > j {
                -v(upper[j][i].unwrap())
            } else {
                z.clone()
            }
        });
        let expected = v(0) * v(5) - v(1) * v(4) + v(2) * v(3);
        assert_eq!(m.pfaffian().unwrap(), expected);
    }

    #[test]
    fn pfaffian_errors() {
        assert!(matches!(DenseMatrix::<Rational>::zeros(3, 3).pfaffian(), Err(Error::Dimension(_))));
        let not_skew = qm(&[&[0, 1], &[1, 0]]);
        assert!(matches!(not_skew.pfaffian(), Err(Error::NotSkew(_))));
        let diag = qm(&[&[1, 1], &[-1, 0]]);
        assert!(matches!(diag.pfaffian(), Err(Error::NotSkew(_))));
    }
}
