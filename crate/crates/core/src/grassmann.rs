//! Stiefel and Plücker coordinates, bracket polynomials.
//!
//! A point of the Grassmannian is given by a `(k+1) × (n+1)` Stiefel matrix
//! whose rows are vectors of `W`; its brackets `[i0 ... ik]` are the maximal
//! minors. Linear forms in the brackets are identified with `Λ^{n-k}W` through
//! `ω ↦ (S ↦ top_coefficient(ω ∧ row_0(S) ∧ ... ∧ row_k(S)))`, using the fixed
//! orientation `e_0 ∧ ... ∧ e_n ↦ 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::exterior::{subsets, ExtElement};
use crate::matrix::DenseMatrix;
use crate::poly::SparsePoly;
use crate::ring::{Field, Ring, Scalar};
use crate::sample::ScalarSource;

/// Sorts a bracket tuple, returning the permutation sign, or `None` if an index repeats.
pub fn normalize_bracket(tuple: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut v = tuple.to_vec();
    let mut neg = false;
    // insertion sort counts transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            neg = !neg;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((neg, v))
}

/// Position of a sorted `size`-subset of `0..universe` in lexicographic order.
pub fn subset_rank(universe: usize, subset: &[usize]) -> usize {
    // count subsets lexicographically smaller
    let k = subset.len();
    let mut rank = 0;
    let mut prev = 0;
    for (pos, &x) in subset.iter().enumerate() {
        for y in prev..x {
            rank += binomial(universe - y - 1, k - pos - 1);
        }
        prev = x + 1;
    }
    rank
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// A `(k+1) × (n+1)` matrix of scalars whose rows span a point of the Grassmannian.
#[derive(Clone, PartialEq)]
pub struct StiefelMatrix<S> {
    m: DenseMatrix<S>,
}

impl<S: Ring> fmt::Debug for StiefelMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StiefelMatrix({:?})", self.m)
    }
}

impl<S: Field> StiefelMatrix<S> {
    pub fn new(m: DenseMatrix<S>) -> Result<Self> {
        if m.rows() > m.cols() {
            return Err(Error::Dimension(format!(
                "Stiefel matrix with {} rows and {} columns",
                m.rows(),
                m.cols()
            )));
        }
        Ok(Self { m })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        Self::new(DenseMatrix::from_rows(rows)?)
    }

    pub fn random<Src: ScalarSource<S>, G: Rng>(k_plus_1: usize, n_plus_1: usize, src: &Src, rng: &mut G) -> Self
    where
        S: Scalar,
    {
        Self { m: DenseMatrix::from_fn(k_plus_1, n_plus_1, |_, _| src.sample(rng)) }
    }

    /// `k`, so that brackets have `k + 1` entries.
    pub fn k(&self) -> usize {
        self.m.rows() - 1
    }

    /// `n`, the largest column index.
    pub fn n(&self) -> usize {
        self.m.cols() - 1
    }

    pub fn matrix(&self) -> &DenseMatrix<S> {
        &self.m
    }

    pub fn row(&self, i: usize) -> &[S] {
        self.m.row(i)
    }

    pub fn rank(&self) -> usize {
        let mut a = self.m.clone();
        let (rows, cols) = (a.rows(), a.cols());
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
            a.swap_rows(r, p);
            let inv = a.get(r, c).inv().expect("nonzero pivot");
            for i in r + 1..rows {
                let f = a.get(i, c).clone() * inv.clone();
                for j in c..cols {
                    let v = a.get(i, j).clone() - f.clone() * a.get(r, j).clone();
                    a.set(i, j, v);
                }
            }
            r += 1;
        }
        r
    }

    pub fn has_full_row_rank(&self) -> bool {
        self.rank() == self.m.rows()
    }

    /// Left multiplication by a `(k+1) × (k+1)` matrix.
    pub fn left_mul(&self, g: &DenseMatrix<S>) -> Result<Self> {
        Self::new(g.mul(&self.m)?)
    }

    /// Rows as elements of `ΛW`.
    pub fn row_vectors(&self) -> Vec<ExtElement<S>> {
        (0..self.m.rows()).map(|i| ExtElement::linear(self.m.row(i))).collect()
    }
}

/// The maximal minors of a Stiefel matrix, indexed by sorted column tuples.
#[derive(Clone, PartialEq, Debug)]
pub struct Pluecker<S> {
    k: usize,
    n: usize,
    values: Vec<S>,
}

impl<S: Field> Pluecker<S> {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Value of `[t0 ... tk]` for any ordering of the tuple.
    pub fn get(&self, tuple: &[usize]) -> Result<S> {
        if tuple.len() != self.k + 1 || tuple.iter().any(|&i| i > self.n) {
            return Err(Error::Dimension(format!("bracket {tuple:?} outside G({}, {})", self.k + 1, self.n + 1)));
        }
        Ok(match normalize_bracket(tuple) {
            None => S::zero(),
            Some((neg, sorted)) => {
                let v = self.values[subset_rank(self.n + 1, &sorted)].clone();
                if neg {
                    -v
                } else {
                    v
                }
            }
        })
    }

    /// Values in lexicographic order of the sorted tuples.
    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &S)> {
        subsets(self.n + 1, self.k + 1).into_iter().zip(self.values.iter())
    }
}

/// All maximal minors of `s`.
pub fn pluecker_coords<S: Field>(s: &StiefelMatrix<S>) -> Pluecker<S> {
    let rows: Vec<usize> = (0..s.m.rows()).collect();
    let values = subsets(s.m.cols(), s.m.rows())
        .iter()
        .map(|cols| s.m.select(&rows, cols).det().expect("square minor"))
        .collect();
    Pluecker { k: s.k(), n: s.n(), values }
}

/// Checks the quadratic Plücker relations
/// `Σ_l (-1)^l [I, j_l][J \ j_l] = 0` for all `k`-subsets `I` and
/// `(k+2)`-subsets `J`. For `G(2,4)` this is `p01 p23 - p02 p13 + p03 p12 = 0`.
pub fn plucker_relations_check<S: Field>(s: &StiefelMatrix<S>) -> bool {
    let p = pluecker_coords(s);
    let (k, n) = (p.k, p.n);
    for i_set in subsets(n + 1, k) {
        for j_set in subsets(n + 1, k + 2) {
            let mut acc = S::zero();
            for l in 0..j_set.len() {
                let mut first = i_set.clone();
                first.push(j_set[l]);
                let rest: Vec<usize> = j_set.iter().enumerate().filter(|&(t, _)| t != l).map(|(_, &x)| x).collect();
                let term = p.get(&first).expect("in range") * p.get(&rest).expect("in range");
                acc = if l % 2 == 0 { acc + term } else { acc - term };
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// A polynomial in the brackets of `G(k+1, n+1)`.
///
/// Stored as a [`SparsePoly`] whose variables are the sorted bracket tuples in
/// lexicographic order. Constants built by `Zero`/`One` carry no shape and
/// adopt the shape of whatever they are combined with.
#[derive(Clone)]
pub struct BracketPoly<R> {
    shape: Option<(usize, usize)>,
    poly: SparsePoly<R>,
}

impl<R: Ring> BracketPoly<R> {
    pub fn zero_in(k: usize, n: usize) -> Self {
        Self { shape: Some((k, n)), poly: SparsePoly::zero_in(binomial(n + 1, k + 1)) }
    }

    pub fn constant(k: usize, n: usize, c: R) -> Self {
        Self { shape: Some((k, n)), poly: SparsePoly::constant(binomial(n + 1, k + 1), c) }
    }

    /// The bracket `[tuple]`, normalized: unsorted input picks up the
    /// permutation sign, a repeated index gives 0.
    pub fn bracket(k: usize, n: usize, tuple: &[usize]) -> Result<Self> {
        Self::bracket_scaled(k, n, tuple, R::one())
    }

    pub fn bracket_scaled(k: usize, n: usize, tuple: &[usize], c: R) -> Result<Self> {
        if tuple.len() != k + 1 {
            return Err(Error::Dimension(format!("bracket {tuple:?} should have {} entries", k + 1)));
        }
        if let Some(&bad) = tuple.iter().find(|&&i| i > n) {
            return Err(Error::Dimension(format!("bracket index {bad} exceeds n = {n}")));
        }
        let nvars = binomial(n + 1, k + 1);
        Ok(match normalize_bracket(tuple) {
            None => Self::zero_in(k, n),
            Some((neg, sorted)) => {
                let mut e = vec![0u32; nvars];
                e[subset_rank(n + 1, &sorted)] = 1;
                Self { shape: Some((k, n)), poly: SparsePoly::monomial(e, if neg { -c } else { c }) }
            }
        })
    }

    /// Linear combination `Σ c_t [tuple_t]`.
    pub fn linear(k: usize, n: usize, terms: &[(R, Vec<usize>)]) -> Result<Self> {
        let mut acc = Self::zero_in(k, n);
        for (c, t) in terms {
            acc = acc + Self::bracket_scaled(k, n, t, c.clone())?;
        }
        Ok(acc)
    }

    pub fn shape(&self) -> Option<(usize, usize)> {
        self.shape
    }

    pub fn poly(&self) -> &SparsePoly<R> {
        &self.poly
    }

    pub fn degree(&self) -> Option<u32> {
        self.poly.total_degree()
    }

    /// Terms as `(list of bracket tuples with multiplicity, coefficient)`.
    pub fn terms(&self) -> Vec<(Vec<Vec<usize>>, R)> {
        let Some((k, n)) = self.shape else {
            return self.poly.terms().map(|(_, c)| (Vec::new(), c.clone())).collect();
        };
        let names = subsets(n + 1, k + 1);
        self.poly
            .terms()
            .map(|(e, c)| {
                let mut mono = Vec::new();
                for (v, &m) in e.iter().enumerate() {
                    for _ in 0..m {
                        mono.push(names[v].clone());
                    }
                }
                (mono, c.clone())
            })
            .collect()
    }

    /// Coefficients of a linear bracket form, as `(tuple, coefficient)`.
    /// Errors when the polynomial is not homogeneous linear.
    pub fn linear_terms(&self) -> Result<Vec<(Vec<usize>, R)>> {
        self.terms()
            .into_iter()
            .map(|(mono, c)| match mono.len() {
                1 => Ok((mono.into_iter().next().expect("one bracket"), c)),
                _ => Err(Error::InvalidInput(format!("{self} is not linear in the brackets"))),
            })
            .collect()
    }

    pub fn map_coeffs<T: Ring>(&self, f: impl Fn(&R) -> T) -> BracketPoly<T> {
        BracketPoly { shape: self.shape, poly: self.poly.map_coeffs(f) }
    }

    fn unify(a: Option<(usize, usize)>, b: Option<(usize, usize)>) -> Option<(usize, usize)> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "bracket polynomials on different Grassmannians");
                Some(x)
            }
            (x, None) => x,
            (None, y) => y,
        }
    }

    /// Compact display: `[015]` when every index is a single digit.
    pub fn to_compact_string(&self) -> String {
        self.render(true)
    }

    fn render(&self, compact: bool) -> String {
        let terms = self.terms();
        if terms.is_empty() {
            return "0".into();
        }
        let digits = self.shape.is_some_and(|(_, n)| n < 10) && compact;
        let mut out = String::new();
        for (idx, (mono, c)) in terms.iter().rev().enumerate() {
            let brackets: Vec<String> = mono
                .iter()
                .map(|t| {
                    let parts: Vec<String> = t.iter().map(|i| i.to_string()).collect();
                    format!("[{}]", parts.join(if digits { "" } else { " " }))
                })
                .collect();
            let c_str = c.to_string();
            let (neg, mag) = match c_str.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-', ' ']) => (true, rest.to_string()),
                _ => (false, c_str.clone()),
            };
            let body = if brackets.is_empty() {
                mag.clone()
            } else if mag == "1" {
                brackets.join("*")
            } else if mag.contains(['+', '-', ' ']) {
                format!("({mag})*{}", brackets.join("*"))
            } else {
                format!("{mag}*{}", brackets.join("*"))
            };
            if idx == 0 {
                out.push_str(if neg { "-" } else { "" });
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl<S: Field> BracketPoly<S> {
    /// Substitutes precomputed Plücker coordinates.
    pub fn eval_pluecker(&self, p: &Pluecker<S>) -> Result<S> {
        if let Some((k, n)) = self.shape {
            if (k, n) != (p.k, p.n) {
                return Err(Error::Dimension(format!(
                    "bracket polynomial on G({}, {}) evaluated at a point of G({}, {})",
                    k + 1,
                    n + 1,
                    p.k + 1,
                    p.n + 1
                )));
            }
        } else {
            return Ok(self.poly.coeff(&[]));
        }
        self.poly.eval(&p.values)
    }
}

/// Substitutes `pluecker_coords(s)` into `p`.
pub fn eval_bracket<S: Field>(p: &BracketPoly<S>, s: &StiefelMatrix<S>) -> Result<S> {
    p.eval_pluecker(&pluecker_coords(s))
}

/// Identifies `ω ∈ Λ^{n-k}W` with the bracket-linear form
/// `S ↦ top_coefficient(ω ∧ rows(S))`: `e_J ↦ sign(J, Jᶜ) [Jᶜ]`.
pub fn wedge_to_bracket<R: Ring>(omega: &ExtElement<R>, k: usize) -> Result<BracketPoly<R>> {
    let generators = omega.generators();
    if generators == 0 || k + 1 > generators {
        return Err(Error::Dimension(format!("no brackets of width {} on {generators} generators", k + 1)));
    }
    let n = generators - 1;
    let mut acc = BracketPoly::zero_in(k, n);
    for (j, c) in omega.terms() {
        if j.len() != n - k {
            return Err(Error::InvalidInput(format!(
                "element of degree {} where degree {} = n - k was expected",
                j.len(),
                n - k
            )));
        }
        let complement: Vec<usize> = (0..=n).filter(|i| !j.contains(i)).collect();
        let mut order = j.clone();
        order.extend(&complement);
        let sign = ExtElement::<R>::basis(generators, &order)?.top_coefficient();
        acc = acc + BracketPoly::bracket_scaled(k, n, &complement, c.clone() * sign)?;
    }
    Ok(acc)
}

/// `top_coefficient(ω ∧ row_0 ∧ ... ∧ row_k)`, the direct route that
/// [`wedge_to_bracket`] must agree with.
pub fn wedge_pairing<S: Field>(omega: &ExtElement<S>, s: &StiefelMatrix<S>) -> Result<S> {
    let mut acc = omega.clone();
    for r in s.row_vectors() {
        acc = acc.wedge(&r)?;
    }
    Ok(acc.top_coefficient())
}

/// A matrix of bracket polynomials.
pub type BracketMatrix<R> = DenseMatrix<BracketPoly<R>>;

/// Evaluates every entry at the Plücker coordinates of `s`.
pub fn eval_bracket_matrix<S: Field>(m: &BracketMatrix<S>, s: &StiefelMatrix<S>) -> Result<DenseMatrix<S>> {
    let p = pluecker_coords(s);
    m.try_map(|e| e.eval_pluecker(&p))
}

impl<R: Ring> PartialEq for BracketPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        if let (Some(a), Some(b)) = (self.shape, other.shape) {
            if a != b {
                return false;
            }
        }
        self.poly == other.poly
    }
}

impl<R: Ring> Zero for BracketPoly<R> {
    fn zero() -> Self {
        Self { shape: None, poly: SparsePoly::zero() }
    }
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl<R: Ring> One for BracketPoly<R> {
    fn one() -> Self {
        Self { shape: None, poly: SparsePoly::one() }
    }
}

impl<R: Ring> Add for BracketPoly<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { shape: Self::unify(self.shape, rhs.shape), poly: self.poly + rhs.poly }
    }
}

impl<R: Ring> Sub for BracketPoly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { shape: Self::unify(self.shape, rhs.shape), poly: self.poly - rhs.poly }
    }
}

impl<R: Ring> Mul for BracketPoly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self { shape: Self::unify(self.shape, rhs.shape), poly: self.poly * rhs.poly }
    }
}

impl<R: Ring> Neg for BracketPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { shape: self.shape, poly: -self.poly }
    }
}

impl<R: Ring> Ring for BracketPoly<R> {
    fn from_i64(n: i64) -> Self {
        Self { shape: None, poly: SparsePoly::from_i64(n) }
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        Some(Self { shape: Self::unify(self.shape, other.shape), poly: self.poly.div_exact(&other.poly)? })
    }

    fn has_exact_division() -> bool {
        R::has_exact_division()
    }
}

impl<R: Ring> fmt::Display for BracketPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(false))
    }
}

impl<R: Ring> fmt::Debug for BracketPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BracketPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Rational};
    use crate::sample::job_rng;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn st(rows: &[&[i64]]) -> StiefelMatrix<Rational> {
        StiefelMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn subset_rank_matches_enumeration() {
        for (n, k) in [(5, 2), (6, 3), (4, 1), (7, 4)] {
            for (i, s) in subsets(n, k).iter().enumerate() {
                assert_eq!(subset_rank(n, s), i);
            }
        }
    }

    #[test]
    fn pluecker_examples() {
        let p = pluecker_coords(&st(&[&[1, 0, 0], &[0, 1, 0]]));
        assert_eq!(p.get(&[0, 1]).unwrap(), q(1));
        assert_eq!(p.get(&[0, 2]).unwrap(), q(0));
        assert_eq!(p.get(&[1, 2]).unwrap(), q(0));
        let p = pluecker_coords(&st(&[&[1, 0, 1], &[0, 1, 1]]));
        assert_eq!(p.get(&[0, 1]).unwrap(), q(1));
        assert_eq!(p.get(&[0, 2]).unwrap(), q(1));
        assert_eq!(p.get(&[1, 2]).unwrap(), q(-1));
        assert_eq!(p.get(&[2, 1]).unwrap(), q(1));
        assert_eq!(p.get(&[1, 1]).unwrap(), q(0));
    }

    #[test]
    fn scaling_a_row_scales_brackets() {
        let s = st(&[&[1, 2, 3, 4], &[0, 1, -1, 5]]);
        let t = st(&[&[3, 6, 9, 12], &[0, 1, -1, 5]]);
        let (p, pt) = (pluecker_coords(&s), pluecker_coords(&t));
        for (a, b) in p.values().iter().zip(pt.values()) {
            assert_eq!(a.clone() * q(3), b.clone());
        }
    }

    #[test]
    fn eval_bracket_examples() {
        let b01 = BracketPoly::<Rational>::bracket(1, 1, &[0, 1]).unwrap();
        assert_eq!(eval_bracket(&b01, &st(&[&[1, 0], &[0, 1]])).unwrap(), q(1));
        let b = |t: &[usize]| BracketPoly::<Rational>::bracket(1, 2, t).unwrap();
        let p = b(&[0, 1]) * b(&[1, 2]) - b(&[0, 2]) * b(&[0, 2]);
        assert_eq!(eval_bracket(&p, &st(&[&[-1, 0, 1], &[-4, 0, 1]])).unwrap(), q(-9));
        assert_eq!(eval_bracket(&BracketPoly::zero_in(1, 2), &st(&[&[1, 0, 0], &[0, 1, 0]])).unwrap(), q(0));
        assert!(eval_bracket(&b01, &st(&[&[1, 0, 0], &[0, 1, 0]])).is_err());
    }

    #[test]
    fn bracket_normalization() {
        let a = BracketPoly::<Rational>::bracket(2, 5, &[2, 0, 1]).unwrap();
        let b = BracketPoly::<Rational>::bracket(2, 5, &[0, 1, 2]).unwrap();
        assert_eq!(a, b);
        let c = BracketPoly::<Rational>::bracket(2, 5, &[1, 0, 2]).unwrap();
        assert_eq!(c, -b);
        assert!(BracketPoly::<Rational>::bracket(2, 5, &[1, 1, 2]).unwrap().is_zero());
        assert!(BracketPoly::<Rational>::bracket(2, 5, &[1, 2]).is_err());
        assert!(BracketPoly::<Rational>::bracket(2, 5, &[1, 2, 6]).is_err());
    }

    #[test]
    fn wedge_to_bracket_examples() {
        let e = |i| ExtElement::<Rational>::generator(3, i);
        let br = |t: &[usize]| BracketPoly::<Rational>::bracket(1, 2, t).unwrap();
        assert_eq!(wedge_to_bracket(&e(2), 1).unwrap(), br(&[0, 1]));
        assert_eq!(wedge_to_bracket(&e(1), 1).unwrap(), -br(&[0, 2]));
        assert_eq!(wedge_to_bracket(&e(0), 1).unwrap(), br(&[1, 2]));
        let two = ExtElement::<Rational>::basis(3, &[0, 1]).unwrap();
        assert!(wedge_to_bracket(&two, 1).is_err());
    }

    #[test]
    fn plucker_relations_examples() {
        assert!(plucker_relations_check(&st(&[&[1, 2, 3, 4], &[5, 6, 7, 9]])));
        assert!(plucker_relations_check(&st(&[&[1, 0, 2, 3], &[0, 1, -1, 7]])));
        let f = PrimeField::default_field();
        let mut rng = job_rng(3, 0);
        for _ in 0..10 {
            assert!(plucker_relations_check(&StiefelMatrix::random(2, 4, &f, &mut rng)));
            assert!(plucker_relations_check(&StiefelMatrix::random(3, 6, &f, &mut rng)));
        }
    }

    #[test]
    fn rank_of_stiefel() {
        assert_eq!(st(&[&[1, 2, 3], &[2, 4, 6]]).rank(), 1);
        assert!(st(&[&[1, 2, 3], &[2, 4, 7]]).has_full_row_rank());
        assert!(StiefelMatrix::<Rational>::from_rows(vec![vec![q(1)], vec![q(2)]]).is_err());
    }

    #[test]
    fn display_forms() {
        let p = BracketPoly::<Rational>::linear(2, 5, &[(q(-1), vec![1, 2, 5]), (q(1), vec![0, 4, 5])]).unwrap();
        assert_eq!(p.to_compact_string(), "[045] - [125]");
        assert_eq!(p.to_string(), "[0 4 5] - [1 2 5]");
    }
}
