//! Resultants of two binary forms of equal degree.
//!
//! Three matrices compute the same resultant: the classical Sylvester matrix
//! in the coefficients, the symmetric `d × d` Bézout matrix linear in the
//! brackets `[p,q]` of the `2 × (d+1)` coefficient matrix, and (as a kernel
//! certificate) the exterior Sylvester-type matrix `B` with `B · A = 0`.

use crate::error::{Error, Result};
use crate::exterior::{ext_mat_mul, ExtElement, ExtMatrix};
use crate::grassmann::{eval_bracket_matrix, BracketMatrix, BracketPoly, StiefelMatrix};
use crate::matrix::DenseMatrix;
use crate::poly::{gcd_univariate, SparsePoly};
use crate::ring::{Field, Rational, Ring};

/// `f_0 s^d + f_1 s^{d-1} t + ... + f_d t^d`.
#[derive(Clone, PartialEq, Debug)]
pub struct BinaryForm<S> {
    coeffs: Vec<S>,
}

impl<S: Field> BinaryForm<S> {
    /// Coefficients `f_0, ..., f_d`; the degree is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<S>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("a binary form needs at least one coefficient".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, s: &S, t: &S) -> S {
        let d = self.degree() as u32;
        self.coeffs
            .iter()
            .enumerate()
            .fold(S::zero(), |acc, (i, c)| acc + c.clone() * s.pow(d - i as u32) * t.pow(i as u32))
    }

    /// The univariate polynomial `f(s, 1)`.
    pub fn dehomogenize(&self) -> SparsePoly<S> {
        let rev: Vec<S> = self.coeffs.iter().rev().cloned().collect();
        SparsePoly::from_coeffs(&rev)
    }

    /// Product of binary forms.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs: out }
    }

    pub fn scale(&self, c: &S) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect() }
    }
}

fn check_same_degree<S: Field>(f: &BinaryForm<S>, g: &BinaryForm<S>) -> Result<usize> {
    if f.degree() != g.degree() {
        return Err(Error::Dimension(format!("forms of degree {} and {}", f.degree(), g.degree())));
    }
    if f.degree() == 0 {
        return Err(Error::InvalidInput("forms must have degree at least 1".into()));
    }
    Ok(f.degree())
}

/// The classical `2d × 2d` Sylvester matrix: `d` shifted rows of `f`, then `d` of `g`.
pub fn sylvester_matrix<S: Field>(f: &BinaryForm<S>, g: &BinaryForm<S>) -> Result<DenseMatrix<S>> {
    let d = check_same_degree(f, g)?;
    Ok(DenseMatrix::from_fn(2 * d, 2 * d, |r, c| {
        let (form, shift) = if r < d { (f, r) } else { (g, r - d) };
        if c >= shift && c - shift <= d {
            form.coeffs[c - shift].clone()
        } else {
            S::zero()
        }
    }))
}

/// `det(sylvester_matrix(f, g))`.
pub fn resultant_sylvester<S: Field>(f: &BinaryForm<S>, g: &BinaryForm<S>) -> Result<S> {
    sylvester_matrix(f, g)?.det()
}

/// Index pairs `(p, q)` of the bracket sum in entry `(i, j)` (1-based):
/// `p < min(i, j)`, `p + q = i + j - 1`, `q ≤ d`.
pub fn bezout_pairs(d: usize, i: usize, j: usize) -> Vec<(usize, usize)> {
    (0..i.min(j))
        .filter_map(|p| {
            let q = i + j - 1 - p;
            (q <= d).then_some((p, q))
        })
        .collect()
}

/// The symmetric `d × d` matrix `a_ij = Σ [p,q]` over [`bezout_pairs`].
pub fn bezout_bracket_matrix<R: Ring>(d: usize) -> Result<BracketMatrix<R>> {
    if d < 1 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    let mut m = DenseMatrix::zeros(d, d);
    for i in 1..=d {
        for j in 1..=d {
            let mut e = BracketPoly::zero_in(1, d);
            for (p, q) in bezout_pairs(d, i, j) {
                e = e + BracketPoly::bracket(1, d, &[p, q])?;
            }
            m.set(i - 1, j - 1, e);
        }
    }
    Ok(m)
}

/// The Stiefel matrix with rows `f` and `g`.
pub fn stiefel_of<S: Field>(f: &BinaryForm<S>, g: &BinaryForm<S>) -> Result<StiefelMatrix<S>> {
    check_same_degree(f, g)?;
    StiefelMatrix::from_rows(vec![f.coeffs.clone(), g.coeffs.clone()])
}

/// Determinant of the bracket Bézout matrix evaluated at the rows `f, g`.
pub fn resultant_bezout<S: Field>(f: &BinaryForm<S>, g: &BinaryForm<S>) -> Result<S> {
    let d = check_same_degree(f, g)?;
    eval_bracket_matrix(&bezout_bracket_matrix(d)?, &stiefel_of(f, g)?)?.det()
}

/// The `2d × d` matrix `b_kl = y_{k-l}` over `V` with generators `y_0..y_d`.
pub fn exterior_b(d: usize) -> Result<ExtMatrix<Rational>> {
    if d < 1 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    ExtMatrix::from_fn(2 * d, d, d + 1, |k, l| {
        if k >= l && k - l <= d {
            ExtElement::generator(d + 1, k - l)
        } else {
            ExtElement::zero(d + 1)
        }
    })
}

/// The Bézout matrix with `[p,q]` replaced by `y_p ∧ y_q`.
pub fn exterior_a(d: usize) -> Result<ExtMatrix<Rational>> {
    if d < 1 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    let mut err = None;
    let m = ExtMatrix::from_fn(d, d, d + 1, |i, j| {
        let mut e = ExtElement::zero(d + 1);
        for (p, q) in bezout_pairs(d, i + 1, j + 1) {
            match ExtElement::basis(d + 1, &[p, q]).and_then(|b| e.add(&b)) {
                Ok(sum) => e = sum,
                Err(x) => err = Some(x),
            }
        }
        e
    })?;
    match err {
        Some(e) => Err(e),
        None => Ok(m),
    }
}

/// Whether `exterior_b(d) · exterior_a(d)` vanishes identically in `Λ³V`.
pub fn verify_ba_zero_binary(d: usize) -> Result<bool> {
    Ok(ext_mat_mul(&exterior_b(d)?, &exterior_a(d)?)?.is_zero())
}

/// Whether `f` and `g` share a projective root over the algebraic closure.
pub fn common_root_binary<S: Field>(f: &BinaryForm<S>, g: &BinaryForm<S>) -> Result<bool> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::InvalidInput("both forms are zero".into()));
    }
    // the point (1:0) is a root exactly when f_0 vanishes
    if f.coeffs[0].is_zero() && g.coeffs[0].is_zero() {
        return Ok(true);
    }
    let h = gcd_univariate(&f.dehomogenize(), &g.dehomogenize())?;
    Ok(h.total_degree().is_some_and(|deg| deg > 0))
}
