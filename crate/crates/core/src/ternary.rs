//! Resultant of three ternary quadrics.
//!
//! Two matrices are available: an alternating `8 × 8` matrix linear in the
//! brackets `[ijk]` of the net, whose Pfaffian is the resultant, and a
//! `6 × 6` matrix with three coefficient columns and three bracket columns,
//! whose determinant is the resultant. Both come verbatim from fixtures.

use rand::Rng;

use crate::error::{Error, Result};
use crate::fixtures::load_bracket;
use crate::grassmann::{eval_bracket_matrix, pluecker_coords, BracketMatrix, StiefelMatrix};
use crate::matrix::DenseMatrix;
use crate::ring::{Field, Ring, Scalar};
use crate::sample::ScalarSource;

/// `d_0 x² + d_1 xy + d_2 xz + d_3 y² + d_4 yz + d_5 z²`.
#[derive(Clone, PartialEq, Debug)]
pub struct TernaryQuadric<S> {
    coeffs: [S; 6],
}

impl<S: Field> TernaryQuadric<S> {
    pub fn new(coeffs: Vec<S>) -> Result<Self> {
        let coeffs: [S; 6] = coeffs
            .try_into()
            .map_err(|v: Vec<S>| Error::Dimension(format!("a ternary quadric has 6 coefficients, got {}", v.len())))?;
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[S; 6] {
        &self.coeffs
    }

    /// Monomials `x², xy, xz, y², yz, z²` at a point.
    pub fn monomials(p: &[S; 3]) -> [S; 6] {
        let [x, y, z] = p.clone();
        [
            x.clone() * x.clone(),
            x.clone() * y.clone(),
            x * z.clone(),
            y.clone() * y.clone(),
            y * z.clone(),
            z.clone() * z,
        ]
    }

    pub fn eval(&self, p: &[S; 3]) -> S {
        Self::monomials(p)
            .into_iter()
            .zip(self.coeffs.iter())
            .fold(S::zero(), |acc, (m, c)| acc + m * c.clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self { coeffs: self.coeffs.clone().map(|x| x * c.clone()) }
    }
}

/// The alternating `8 × 8` bracket matrix.
pub fn pfaffian_matrix_quadrics<R: Ring>() -> Result<BracketMatrix<R>> {
    load_bracket("pfaffian8")?.bracket_matrix(&[])
}

/// The three bracket columns of the `6 × 6` Stiefel matrix.
pub fn stiefel_bracket_columns<R: Ring>() -> Result<BracketMatrix<R>> {
    load_bracket("stiefel6")?.bracket_matrix(&[])
}

/// The `3 × 6` coefficient matrix with rows `a, b, c`.
pub fn net_stiefel<S: Field>(a: &TernaryQuadric<S>, b: &TernaryQuadric<S>, c: &TernaryQuadric<S>) -> StiefelMatrix<S> {
    StiefelMatrix::from_rows(vec![a.coeffs.to_vec(), b.coeffs.to_vec(), c.coeffs.to_vec()])
        .expect("3 x 6 is a valid Stiefel shape")
}

/// The `6 × 6` matrix: coefficient columns `a, b, c`, then the bracket columns
/// evaluated at the net.
pub fn stiefel_matrix_quadrics<S: Field>(
    a: &TernaryQuadric<S>,
    b: &TernaryQuadric<S>,
    c: &TernaryQuadric<S>,
) -> Result<DenseMatrix<S>> {
    let brackets = stiefel_bracket_columns::<S>()?;
    let p = pluecker_coords(&net_stiefel(a, b, c));
    let evaluated = brackets.try_map(|e| e.eval_pluecker(&p))?;
    let forms = [a, b, c];
    Ok(DenseMatrix::from_fn(6, 6, |i, j| {
        if j < 3 {
            forms[j].coeffs[i].clone()
        } else {
            evaluated.get(i, j - 3).clone()
        }
    }))
}

/// Determinant of [`stiefel_matrix_quadrics`], the reference normalization.
pub fn resultant_quadrics<S: Field>(a: &TernaryQuadric<S>, b: &TernaryQuadric<S>, c: &TernaryQuadric<S>) -> Result<S> {
    stiefel_matrix_quadrics(a, b, c)?.det()
}

/// Pfaffian of the `8 × 8` matrix evaluated at the net.
pub fn pfaffian_quadrics<S: Field>(a: &TernaryQuadric<S>, b: &TernaryQuadric<S>, c: &TernaryQuadric<S>) -> Result<S> {
    eval_bracket_matrix(&pfaffian_matrix_quadrics()?, &net_stiefel(a, b, c))?.pfaffian()
}

/// Three random quadrics vanishing at `p`, each drawn uniformly from the
/// kernel of evaluation at `p`.
pub fn planted_common_zero_quadrics<S: Scalar, Src: ScalarSource<S>, G: Rng>(
    p: &[S; 3],
    src: &Src,
    rng: &mut G,
) -> Result<[TernaryQuadric<S>; 3]> {
    let m = TernaryQuadric::monomials(p);
    let pivot = m
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::InvalidInput("the zero vector is not a projective point".into()))?;
    let inv = m[pivot].inv().expect("nonzero pivot");
    let mut one = || {
        let mut v = src.sample_vec(6, rng);
        let rest = (0..6)
            .filter(|&j| j != pivot)
            .fold(S::zero(), |acc, j| acc + m[j].clone() * v[j].clone());
        v[pivot] = -(rest * inv.clone());
        TernaryQuadric::new(v).expect("six coefficients")
    };
    Ok([one(), one(), one()])
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::fixtures::load_bracket;
    use crate::grassmann::BracketPoly;
    use crate::ring::{PrimeField, Rational};
    use crate::sample::job_rng;

    fn tq(c: [i64; 6]) -> TernaryQuadric<Rational> {
        TernaryQuadric::new(c.iter().map(|&x| Rational::from_i64(x)).collect()).unwrap()
    }

    #[test]
    fn pfaffian_fixture_shape() {
        let m = pfaffian_matrix_quadrics::<Rational>().unwrap();
        assert_eq!((m.rows(), m.cols()), (8, 8));
        assert!(m.is_alternating());
        assert_eq!(m.get(0, 1), &BracketPoly::bracket(2, 5, &[2, 4, 5]).unwrap());
        let fx = load_bracket("pfaffian8").unwrap();
        assert_eq!(fx.cell(1, 7).unwrap(), "-[125]+[045]");
        assert_eq!(fx.cell(0, 1).unwrap(), "[245]");
    }

    #[test]
    fn stiefel_fixture_cells() {
        let fx = load_bracket("stiefel6").unwrap();
        assert_eq!(fx.cell(0, 3).unwrap(), "[015]");
        assert_eq!(fx.cell(2, 3).unwrap(), "[045]-[125]");
        assert_eq!(fx.cell(5, 5).unwrap(), "0");
        assert_eq!(fx.cell(0, 0).unwrap(), "a_0");
    }

    #[test]
    fn coordinate_quadrics() {
        let (a, b, c) = (tq([1, 0, 0, 0, 0, 0]), tq([0, 0, 0, 1, 0, 0]), tq([0, 0, 0, 0, 0, 1]));
        assert!(!resultant_quadrics(&a, &b, &c).unwrap().is_zero());
        assert!(!pfaffian_quadrics(&a, &b, &c).unwrap().is_zero());
        // x², xy, y² all vanish at (0:0:1)
        let (a, b, c) = (tq([1, 0, 0, 0, 0, 0]), tq([0, 1, 0, 0, 0, 0]), tq([0, 0, 0, 1, 0, 0]));
        assert!(resultant_quadrics(&a, &b, &c).unwrap().is_zero());
        assert!(pfaffian_quadrics(&a, &b, &c).unwrap().is_zero());
    }

    #[test]
    fn planted_kernel() {
        let f = PrimeField::default_field();
        let mut rng = job_rng(1, 0);
        let [a, ..] = planted_common_zero_quadrics(&[f.elem(1), f.elem(0), f.elem(0)], &f, &mut rng).unwrap();
        assert!(a.coeffs()[0].is_zero());
        let [a, ..] = planted_common_zero_quadrics(&[f.elem(0), f.elem(0), f.elem(1)], &f, &mut rng).unwrap();
        assert!(a.coeffs()[5].is_zero());
        let p = [f.elem(3), f.elem(-7), f.elem(11)];
        let [a, b, c] = planted_common_zero_quadrics(&p, &f, &mut rng).unwrap();
        assert!(a.eval(&p).is_zero() && b.eval(&p).is_zero() && c.eval(&p).is_zero());
        assert!(resultant_quadrics(&a, &b, &c).unwrap().is_zero());
        assert!(pfaffian_quadrics(&a, &b, &c).unwrap().is_zero());
        assert!(planted_common_zero_quadrics(&[f.elem(0), f.elem(0), f.elem(0)], &f, &mut rng).is_err());
    }
}
