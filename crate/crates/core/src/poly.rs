//! Sparse multivariate polynomials keyed by exponent vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{Field, Ring};

/// A polynomial in `nvars` variables over `R`.
///
/// Exponent vectors always have length `nvars` and no stored coefficient is
/// zero. Keys are ordered lexicographically with `x0` most significant, so the
/// last entry of `terms` is the leading term.
///
/// Polynomials with different variable counts combine by padding the shorter
/// exponent vectors with zeros (`K[x0..x(m-1)]` is a subring of
/// `K[x0..x(n-1)]` for `m <= n`). This lets `Zero::zero()` and `One::one()`,
/// which have no variable count, act as constants of any ring.
#[derive(Clone)]
pub struct SparsePoly<R> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, R>,
}

impl<R: Ring> SparsePoly<R> {
    pub fn zero_in(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: R) -> Self {
        let mut p = Self::zero_in(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    /// The variable `x_i` in `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, R::one())
    }

    pub fn monomial(exps: Vec<u32>, c: R) -> Self {
        let mut p = Self::zero_in(exps.len());
        p.add_term(exps, c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, R)>) -> Result<Self> {
        let mut p = Self::zero_in(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Dimension(format!(
                    "exponent vector of length {} in a ring of {nvars} variables",
                    e.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Univariate polynomial from coefficients listed from degree 0 upwards.
    pub fn from_coeffs(coeffs: &[R]) -> Self {
        let mut p = Self::zero_in(1);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(vec![i as u32], c.clone());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> R {
        let key = self.pad_key(exps);
        self.terms.get(&key).cloned().unwrap_or_else(R::zero)
    }

    fn pad_key(&self, exps: &[u32]) -> Vec<u32> {
        let mut k = exps.to_vec();
        k.resize(self.nvars.max(exps.len()), 0);
        k
    }

    fn add_term(&mut self, exps: Vec<u32>, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Re-embeds into a ring with at least `nvars` variables.
    pub fn with_nvars(mut self, nvars: usize) -> Self {
        if nvars <= self.nvars {
            return self;
        }
        let terms = std::mem::take(&mut self.terms);
        self.terms = terms
            .into_iter()
            .map(|(mut e, c)| {
                e.resize(nvars, 0);
                (e, c)
            })
            .collect();
        self.nvars = nvars;
        self
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in variable `i`; `None` for the zero polynomial.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e.get(i).copied().unwrap_or(0)).max()
    }

    pub fn leading_term(&self) -> Option<(&Vec<u32>, &R)> {
        self.terms.iter().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero_in(self.nvars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.clone() * c.clone());
        }
        out
    }

    /// Exact evaluation at a point of length `nvars`.
    pub fn eval(&self, point: &[R]) -> Result<R> {
        if point.len() != self.nvars {
            return Err(Error::Dimension(format!(
                "point of length {} for a polynomial in {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = t * x.pow(k);
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Maps every coefficient through `f`, dropping those that become zero.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> SparsePoly<S> {
        let mut out = SparsePoly::zero_in(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Exact division: `Some(q)` with `q * divisor == self`, else `None`.
    ///
    /// Single-divisor division algorithm in lex order; for one divisor the
    /// remainder is unique, so a nonzero remainder proves non-divisibility
    /// whenever coefficient division is exact.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lt_e, lt_c) = divisor.leading_term()?;
        let n = self.nvars.max(divisor.nvars);
        let divisor = divisor.clone().with_nvars(n);
        let lt_e = {
            let mut e = lt_e.clone();
            e.resize(n, 0);
            e
        };
        let lt_c = lt_c.clone();
        let mut rem = self.clone().with_nvars(n);
        let mut quot = Self::zero_in(n);
        while let Some((e, c)) = rem.leading_term() {
            if !e.iter().zip(&lt_e).all(|(a, b)| a >= b) {
                return None;
            }
            let qc = c.exact_div(&lt_c)?;
            let qe: Vec<u32> = e.iter().zip(&lt_e).map(|(a, b)| a - b).collect();
            let t = Self::monomial(qe, qc);
            rem = rem - t.clone() * divisor.clone();
            quot = quot + t;
        }
        Some(quot)
    }
}

impl<F: Field> SparsePoly<F> {
    /// Formal derivative in variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero_in(self.nvars);
        for (e, c) in &self.terms {
            let k = e.get(i).copied().unwrap_or(0);
            if k == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            out.add_term(ne, c.clone() * F::from_i64(k as i64));
        }
        out
    }

    /// Univariate coefficient list, degree 0 first. Requires at most one variable.
    pub fn univariate_coeffs(&self) -> Result<Vec<F>> {
        if self.nvars > 1 {
            return Err(Error::Dimension(format!("expected a univariate polynomial, got {} variables", self.nvars)));
        }
        let deg = self.degree_in(0).unwrap_or(0) as usize;
        let mut out = vec![F::zero(); deg + 1];
        for (e, c) in &self.terms {
            let k = e.first().copied().unwrap_or(0) as usize;
            out[k] = c.clone();
        }
        Ok(out)
    }
}

/// Monic gcd of two univariate polynomials over a field.
///
/// Errors when both inputs are zero or either has more than one variable.
pub fn gcd_univariate<F: Field>(f: &SparsePoly<F>, g: &SparsePoly<F>) -> Result<SparsePoly<F>> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::InvalidInput("gcd of two zero polynomials".into()));
    }
    let mut a = trim(f.univariate_coeffs()?);
    let mut b = trim(g.univariate_coeffs()?);
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    let lc = a.last().expect("nonzero").inv().expect("field");
    let monic: Vec<F> = a.into_iter().map(|c| c * lc.clone()).collect();
    Ok(SparsePoly::from_coeffs(&monic))
}

fn trim<F: Field>(mut v: Vec<F>) -> Vec<F> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_rem<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = b[db].inv().expect("nonzero leading coefficient");
    while r.len() > db {
        let lead = r.last().unwrap().clone() * inv.clone();
        let shift = r.len() - 1 - db;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].clone() - lead.clone() * bc.clone();
        }
        r.pop();
        r = trim(r);
    }
    trim(r)
}

impl<R: Ring> PartialEq for SparsePoly<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.nvars == other.nvars {
            return self.terms == other.terms;
        }
        let n = self.nvars.max(other.nvars);
        self.terms.len() == other.terms.len()
            && self.clone().with_nvars(n).terms == other.clone().with_nvars(n).terms
    }
}

impl<R: Ring> Zero for SparsePoly<R> {
    fn zero() -> Self {
        Self::zero_in(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Ring> One for SparsePoly<R> {
    fn one() -> Self {
        Self::constant(0, R::one())
    }
}

impl<R: Ring> Add for SparsePoly<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.nvars.max(rhs.nvars);
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        big = big.with_nvars(n);
        for (mut e, c) in small.terms {
            e.resize(n, 0);
            big.add_term(e, c);
        }
        big
    }
}

impl<R: Ring> Neg for SparsePoly<R> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<R: Ring> Sub for SparsePoly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Mul for SparsePoly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let n = self.nvars.max(rhs.nvars);
        let mut out = Self::zero_in(n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = vec![0u32; n];
                for (i, x) in ea.iter().enumerate() {
                    e[i] += x;
                }
                for (i, x) in eb.iter().enumerate() {
                    e[i] += x;
                }
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<R: Ring> Ring for SparsePoly<R> {
    fn from_i64(n: i64) -> Self {
        Self::constant(0, R::from_i64(n))
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.div_exact(other)
    }

    fn has_exact_division() -> bool {
        R::has_exact_division()
    }
}

impl<R: Ring> fmt::Display for SparsePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for SparsePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly[{}]({self})", self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_rational, Rational};

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn x() -> SparsePoly<Rational> {
        SparsePoly::var(2, 0)
    }
    fn y() -> SparsePoly<Rational> {
        SparsePoly::var(2, 1)
    }

    #[test]
    fn eval_examples() {
        let p = x() * x() - y() * y();
        assert_eq!(p.eval(&[q(3), q(2)]).unwrap(), q(5));
        let c = SparsePoly::constant(2, q(7));
        assert_eq!(c.eval(&[q(11), q(-4)]).unwrap(), q(7));
        let x1 = SparsePoly::<Rational>::var(1, 0);
        assert_eq!(x1.eval(&[q(0)]).unwrap(), q(0));
        assert!(p.eval(&[q(1)]).is_err());
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let p = x() + y() - x();
        assert_eq!(p.num_terms(), 1);
        assert!((x() - x()).is_zero());
        assert!(SparsePoly::from_terms(2, vec![(vec![1, 0], q(0))]).unwrap().is_zero());
        assert!(SparsePoly::from_terms(2, vec![(vec![1], q(1))]).is_err());
    }

    #[test]
    fn mixed_variable_counts() {
        let one = SparsePoly::<Rational>::one();
        let p = x() + one.clone();
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.coeff(&[0, 0]), q(1));
        assert_eq!((p.clone() * one).nvars(), 2);
    }

    #[test]
    fn exact_division() {
        let a = x() + y();
        let b = x() - y() + SparsePoly::constant(2, q(3));
        let prod = a.clone() * b.clone();
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!((prod + SparsePoly::constant(2, q(1))).div_exact(&a).is_none());
        assert!(a.div_exact(&SparsePoly::zero()).is_none());
    }

    fn t() -> SparsePoly<Rational> {
        SparsePoly::var(1, 0)
    }
    fn c1(n: i64) -> SparsePoly<Rational> {
        SparsePoly::constant(1, q(n))
    }

    #[test]
    fn gcd_examples() {
        let g = gcd_univariate(&(t() * t() - c1(1)), &(t() - c1(1))).unwrap();
        assert_eq!(g, t() - c1(1));
        let g = gcd_univariate(&(t() * t() - c1(1)), &(t() * t() - c1(4))).unwrap();
        assert_eq!(g, c1(1));
        let g = gcd_univariate(&SparsePoly::zero_in(1), &t()).unwrap();
        assert_eq!(g, t());
        assert!(gcd_univariate(&SparsePoly::<Rational>::zero_in(1), &SparsePoly::zero_in(1)).is_err());
    }

    #[test]
    fn gcd_is_monic() {
        let half = parse_rational("1/2").unwrap();
        let f = (t() - c1(3)).scale(&q(6));
        let g = (t() - c1(3)) * (t() + c1(1)).scale(&half);
        assert_eq!(gcd_univariate(&f, &g).unwrap(), t() - c1(3));
    }

    #[test]
    fn derivative_univariate() {
        let f = t() * t() * t() - t().scale(&q(2));
        assert_eq!(f.derivative(0), (t() * t()).scale(&q(3)) - c1(2));
    }
}
