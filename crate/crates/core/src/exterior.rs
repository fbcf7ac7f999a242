//! Exterior algebras on indexed generators.
//!
//! Basis monomials `e_J` are stored as bitmasks of the index set `J`, so at
//! most 64 generators are supported. Any product written in a non-increasing
//! order is normalized at insertion and the permutation sign is folded into
//! the coefficient.
//!
//! The same type serves for `ΛW` and for `ΛV = Λ(W*)`; which one an element
//! lives in is a matter of interpretation. [`contract`] lets `ΛV` act on `ΛW`
//! through iterated interior products.

use std::collections::BTreeMap;
use std::fmt;


use crate::error::{Error, Result};
use crate::ring::{Rational, Ring};

pub const MAX_GENERATORS: usize = 64;

/// Sign of `e_a ∧ e_b` relative to `e_{a ∪ b}` for disjoint masks.
#[inline]
fn merge_sign(a: u64, b: u64) -> bool {
    // count pairs (i in a, j in b) with i > j
    let mut parity = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        parity ^= (a.checked_shr(j + 1).unwrap_or(0)).count_ones() & 1;
    }
    parity == 1
}

/// Sign and remainder of `y_J ⌟ e_K`, or `None` when `J ⊄ K`.
///
/// `y_J = y_{j1} ∧ ... ∧ y_{jm}` acts by contracting `y_{jm}` first. Each
/// `y_j` removes `e_j` from `e_K` with sign `(-1)^{#{k in K : k < j}}`; larger
/// indices are gone before smaller ones are processed, so the positions of the
/// smaller ones are unaffected.
#[inline]
fn contract_mask(j: u64, k: u64) -> Option<(bool, u64)> {
    if j & !k != 0 {
        return None;
    }
    let mut parity = 0u32;
    let mut rest = j;
    while rest != 0 {
        let i = rest.trailing_zeros();
        rest &= rest - 1;
        parity ^= (k & ((1u64 << i) - 1)).count_ones() & 1;
    }
    Some((parity == 1, k & !j))
}

/// Element of an exterior algebra on `generators` generators.
#[derive(Clone, PartialEq)]
pub struct ExtElement<R> {
    generators: usize,
    terms: BTreeMap<u64, R>,
}

impl<R: Ring> ExtElement<R> {
    pub fn zero(generators: usize) -> Self {
        assert!(generators <= MAX_GENERATORS, "at most {MAX_GENERATORS} generators supported");
        Self { generators, terms: BTreeMap::new() }
    }

    pub fn scalar(generators: usize, c: R) -> Self {
        let mut out = Self::zero(generators);
        out.add_term(0, c);
        out
    }

    /// The generator `e_i`.
    pub fn generator(generators: usize, i: usize) -> Self {
        Self::basis(generators, &[i]).expect("index in range")
    }

    /// `e_{i1} ∧ e_{i2} ∧ ...` in the order given; zero on a repeated index.
    pub fn basis(generators: usize, indices: &[usize]) -> Result<Self> {
        Self::monomial(generators, indices, R::one())
    }

    pub fn monomial(generators: usize, indices: &[usize], c: R) -> Result<Self> {
        let mut out = Self::zero(generators);
        if let Some(&bad) = indices.iter().find(|&&i| i >= generators) {
            return Err(Error::Dimension(format!("generator index {bad} >= {generators}")));
        }
        let mut mask = 0u64;
        let mut neg = false;
        for &i in indices {
            let bit = 1u64 << i;
            if mask & bit != 0 {
                return Ok(out);
            }
            // appending e_i on the right: passes every index in mask greater than i
            neg ^= mask.checked_shr(i as u32 + 1).unwrap_or(0).count_ones() & 1 == 1;
            mask |= bit;
        }
        out.add_term(mask, if neg { -c } else { c });
        Ok(out)
    }

    /// Linear element `Σ coeffs[i] e_i`.
    pub fn linear(coeffs: &[R]) -> Self {
        let mut out = Self::zero(coeffs.len());
        for (i, c) in coeffs.iter().enumerate() {
            out.add_term(1u64 << i, c.clone());
        }
        out
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(sorted index list, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &R)> + '_ {
        self.terms.iter().map(|(&m, c)| (indices_of(m), c))
    }

    /// Coefficient of `e_{i1} ∧ ... ∧ e_{im}` (indices in any order).
    pub fn coeff(&self, indices: &[usize]) -> R {
        let probe = match Self::basis(self.generators, indices) {
            Ok(p) => p,
            Err(_) => return R::zero(),
        };
        match probe.terms.iter().next() {
            Some((m, sign)) => self.terms.get(m).cloned().map_or_else(R::zero, |c| c * sign.clone()),
            None => R::zero(),
        }
    }

    fn add_term(&mut self, mask: u64, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
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

    /// `Some(d)` when every term has degree `d`; `Some(0)` for zero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|m| m.count_ones() as usize);
        match degs.next() {
            None => Some(0),
            Some(d) => degs.all(|e| e == d).then_some(d),
        }
    }

    pub fn component(&self, degree: usize) -> Self {
        Self {
            generators: self.generators,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() as usize == degree)
                .map(|(&m, c)| (m, c.clone()))
                .collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.generators != other.generators {
            return Err(Error::Dimension(format!(
                "exterior algebras on {} and {} generators",
                self.generators, other.generators
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-R::one())
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(self.generators);
        for (&m, a) in &self.terms {
            out.add_term(m, a.clone() * c.clone());
        }
        out
    }

    /// In-place `self += other ∧ rhs`, skipping allocation of the product.
    pub(crate) fn add_wedge(&mut self, lhs: &Self, rhs: &Self) {
        for (&a, ca) in &lhs.terms {
            for (&b, cb) in &rhs.terms {
                if a & b != 0 {
                    continue;
                }
                let c = ca.clone() * cb.clone();
                self.add_term(a | b, if merge_sign(a, b) { -c } else { c });
            }
        }
    }

    /// Exterior product.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(self.generators);
        out.add_wedge(self, other);
        Ok(out)
    }

    /// Coefficient of `e_0 ∧ ... ∧ e_{n-1}` (orientation `e_0∧...∧e_n ↦ 1`).
    pub fn top_coefficient(&self) -> R {
        let full = if self.generators == 64 { u64::MAX } else { (1u64 << self.generators) - 1 };
        self.terms.get(&full).cloned().unwrap_or_else(R::zero)
    }

    /// Maps coefficients into another ring.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> ExtElement<S> {
        let mut out = ExtElement::zero(self.generators);
        for (&m, c) in &self.terms {
            out.add_term(m, f(c));
        }
        out
    }
}

fn indices_of(mut m: u64) -> Vec<usize> {
    let mut v = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        v.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    v
}

/// Action of `a ∈ ΛV` on `w ∈ ΛW` by iterated interior products, contracting
/// the last generator of each monomial of `a` first.
///
/// `deg(result) = deg(w) - deg(a)` on homogeneous inputs.
pub fn contract<R: Ring>(a: &ExtElement<R>, w: &ExtElement<R>) -> Result<ExtElement<R>> {
    a.check_same(w)?;
    let mut out = ExtElement::zero(w.generators);
    for (&j, ca) in &a.terms {
        for (&k, cw) in &w.terms {
            if let Some((neg, rest)) = contract_mask(j, k) {
                let c = ca.clone() * cw.clone();
                out.add_term(rest, if neg { -c } else { c });
            }
        }
    }
    Ok(out)
}

pub fn wedge<R: Ring>(u: &ExtElement<R>, v: &ExtElement<R>) -> Result<ExtElement<R>> {
    u.wedge(v)
}

pub fn top_coefficient<R: Ring>(w: &ExtElement<R>) -> R {
    w.top_coefficient()
}

impl<R: Ring> fmt::Display for ExtElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&m, c)| {
                let idx = indices_of(m);
                if idx.is_empty() {
                    format!("{c}")
                } else {
                    let mono = idx.iter().map(|i| format!("e{i}")).collect::<Vec<_>>().join("^");
                    format!("({c})*{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Ring> fmt::Debug for ExtElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ext[{}]({self})", self.generators)
    }
}

/// Matrix with exterior-algebra entries over a common generator count.
#[derive(Clone, PartialEq)]
pub struct ExtMatrix<R> {
    rows: usize,
    cols: usize,
    generators: usize,
    entries: Vec<ExtElement<R>>,
}

impl<R: Ring> fmt::Debug for ExtMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtMatrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("entries", &self.entries)
            .finish()
    }
}

impl<R: Ring> ExtMatrix<R> {
    pub fn zeros(rows: usize, cols: usize, generators: usize) -> Self {
        Self { rows, cols, generators, entries: vec![ExtElement::zero(generators); rows * cols] }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        generators: usize,
        mut f: impl FnMut(usize, usize) -> ExtElement<R>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                if e.generators != generators {
                    return Err(Error::Dimension(format!(
                        "entry ({i},{j}) has {} generators, expected {generators}",
                        e.generators
                    )));
                }
                entries.push(e);
            }
        }
        Ok(Self { rows, cols, generators, entries })
    }

    /// Scalar identity matrix.
    pub fn identity(n: usize, generators: usize) -> Self {
        Self::from_fn(n, n, generators, |i, j| {
            if i == j {
                ExtElement::scalar(generators, R::one())
            } else {
                ExtElement::zero(generators)
            }
        })
        .expect("consistent generators")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn get(&self, i: usize, j: usize) -> &ExtElement<R> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExtElement<R>) {
        assert_eq!(v.generators, self.generators);
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.generators, |i, j| self.get(j, i).clone()).expect("same generators")
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_fn(self.rows, self.cols, self.generators, |i, j| self.get(i, j).scale(c)).expect("same generators")
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> ExtMatrix<S> {
        ExtMatrix {
            rows: self.rows,
            cols: self.cols,
            generators: self.generators,
            entries: self.entries.iter().map(|e| e.map_coeffs(&f)).collect(),
        }
    }
}

/// `(A·B)[k,j] = Σ_l A[k,l] ∧ B[l,j]`.
pub fn ext_mat_mul<R: Ring>(a: &ExtMatrix<R>, b: &ExtMatrix<R>) -> Result<ExtMatrix<R>> {
    if a.cols != b.rows {
        return Err(Error::Dimension(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    if a.generators != b.generators {
        return Err(Error::Dimension(format!(
            "exterior matrices on {} and {} generators",
            a.generators, b.generators
        )));
    }
    let mut out = ExtMatrix::zeros(a.rows, b.cols, a.generators);
    for i in 0..a.rows {
        for l in 0..a.cols {
            let lhs = a.get(i, l);
            if lhs.is_zero() {
                continue;
            }
            for j in 0..b.cols {
                let rhs = b.get(l, j);
                if rhs.is_zero() {
                    continue;
                }
                out.entries[i * b.cols + j].add_wedge(lhs, rhs);
            }
        }
    }
    Ok(out)
}

/// All `degree`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, degree: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - left {
            cur.push(i);
            rec(i + 1, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if degree <= n {
        rec(0, n, degree, &mut Vec::new(), &mut out);
    }
    out
}

/// Random homogeneous element of degree `degree` with integer coefficients in
/// `[-bound, bound]`.
pub fn random_homogeneous<G: rand::Rng>(generators: usize, degree: usize, bound: i64, rng: &mut G) -> ExtElement<Rational> {
    let mut out = ExtElement::zero(generators);
    for s in subsets(generators, degree) {
        let c = Rational::from_i64(rng.gen_range(-bound..=bound));
        out = out.add(&ExtElement::monomial(generators, &s, c).expect("in range")).expect("same algebra");
    }
    out
}

/// Sign `(-1)^{k(i+j)+ij}` relating the two sides of the duality identity.
pub fn gr_sign(k: usize, i: usize, j: usize) -> i64 {
    if (k * (i + j) + i * j).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Checks `a(γ) ∧ β = (-1)^{k(i+j)+ij} · a(β) ∧ γ` on random homogeneous
/// `a ∈ Λ^{k+1-i-j}V`, `β ∈ Λ^{k+1-i}W`, `γ ∈ Λ^{k+1-j}W` with `dim W = k+1`,
/// comparing both sides through [`top_coefficient`].
///
/// `v` is the dimension of the ambient space before passing to a fiber; it
/// only enters the precondition `k + 1 <= v`.
pub fn check_gr_signs<G: rand::Rng>(v: usize, k: usize, i: usize, j: usize, trials: usize, rng: &mut G) -> Result<bool> {
    if k + 1 > v || i > k + 1 || j > k + 1 || i + j > k + 1 {
        return Err(Error::InvalidInput(format!(
            "degree constraints violated for v={v}, k={k}, i={i}, j={j}"
        )));
    }
    let n = k + 1;
    let sign = Rational::from_i64(gr_sign(k, i, j));
    for _ in 0..trials {
        let a = random_homogeneous(n, n - i - j, 5, rng);
        let beta = random_homogeneous(n, n - i, 5, rng);
        let gamma = random_homogeneous(n, n - j, 5, rng);
        let lhs = contract(&a, &gamma)?.wedge(&beta)?.top_coefficient();
        let rhs = contract(&a, &beta)?.wedge(&gamma)?.top_coefficient();
        if lhs != sign.clone() * rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type E = ExtElement<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn wedge_examples() {
        let e0 = E::generator(2, 0);
        let e1 = E::generator(2, 1);
        assert_eq!(e0.wedge(&e1).unwrap(), E::basis(2, &[0, 1]).unwrap());
        assert_eq!(e1.wedge(&e0).unwrap(), E::basis(2, &[0, 1]).unwrap().neg());
        assert!(e0.wedge(&e0).unwrap().is_zero());
        assert!(e0.wedge(&E::generator(3, 0)).is_err());
    }

    #[test]
    fn basis_sign_normalization() {
        assert_eq!(E::basis(3, &[2, 0, 1]).unwrap().coeff(&[0, 1, 2]), q(1));
        assert_eq!(E::basis(3, &[1, 0, 2]).unwrap().coeff(&[0, 1, 2]), q(-1));
        assert!(E::basis(3, &[1, 1]).unwrap().is_zero());
        assert!(E::basis(3, &[3]).is_err());
    }

    #[test]
    fn contract_examples() {
        let y0 = E::generator(2, 0);
        let y1 = E::generator(2, 1);
        assert_eq!(contract(&y0, &E::generator(2, 0)).unwrap(), E::scalar(2, q(1)));
        assert!(contract(&y0, &E::generator(2, 1)).unwrap().is_zero());
        let e01 = E::basis(2, &[0, 1]).unwrap();
        assert_eq!(contract(&y1, &e01).unwrap(), E::generator(2, 0).neg());
        assert_eq!(contract(&y0, &e01).unwrap(), E::generator(2, 1));
    }

    #[test]
    fn contract_last_generator_first() {
        // y_{01} = y0 ∧ y1 acts as y0 ⌟ (y1 ⌟ ·)
        let y01 = E::basis(3, &[0, 1]).unwrap();
        let w = E::basis(3, &[0, 1, 2]).unwrap();
        let step = contract(&E::generator(3, 0), &contract(&E::generator(3, 1), &w).unwrap()).unwrap();
        assert_eq!(contract(&y01, &w).unwrap(), step);
    }

    #[test]
    fn top_coefficient_examples() {
        assert_eq!(E::basis(3, &[0, 1, 2]).unwrap().top_coefficient(), q(1));
        assert_eq!(E::basis(3, &[0, 2, 1]).unwrap().top_coefficient(), q(-1));
        assert_eq!(E::basis(3, &[0, 1]).unwrap().top_coefficient(), q(0));
    }

    #[test]
    fn ext_mat_mul_examples() {
        let y0 = ExtMatrix::from_fn(1, 1, 2, |_, _| E::generator(2, 0)).unwrap();
        assert!(ext_mat_mul(&y0, &y0).unwrap().is_zero());
        let m = ExtMatrix::from_fn(2, 3, 4, |i, j| E::generator(4, i + j)).unwrap();
        assert_eq!(ext_mat_mul(&ExtMatrix::identity(2, 4), &m).unwrap(), m);
        assert!(ext_mat_mul(&m, &m).is_err());
    }

    #[test]
    fn gr_signs_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(gr_sign(1, 0, 0), 1);
        assert_eq!(gr_sign(1, 1, 0), -1);
        assert_eq!(gr_sign(2, 1, 1), -1);
        assert!(check_gr_signs(2, 1, 0, 0, 10, &mut rng).unwrap());
        assert!(check_gr_signs(2, 1, 1, 0, 10, &mut rng).unwrap());
        assert!(check_gr_signs(3, 2, 1, 1, 10, &mut rng).unwrap());
        assert!(check_gr_signs(1, 1, 0, 0, 1, &mut rng).is_err());
        assert!(check_gr_signs(4, 2, 2, 2, 1, &mut rng).is_err());
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }
}
