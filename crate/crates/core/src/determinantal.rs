//! Chow forms of linear determinantal varieties.
//!
//! A `g × f` matrix `φ` of linear forms (`f ≥ g`) has an Eagon-Northcott type
//! linear complex with terms `P_i = Λ^{g-1+i}F ⊗ D_i(G*)`, `i = 0..c`,
//! `c = f - g + 1`. Composing all differentials in the exterior algebra gives
//! `Ψ = (1/c!) φ_1 ∧ ... ∧ φ_c`, a square matrix over `Λ^c W`; read as a
//! matrix of bracket-linear forms, its determinant is the Chow form.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;

use crate::error::{Error, Result};
use crate::exterior::{ext_mat_mul, subsets, ExtElement, ExtMatrix};
use crate::grassmann::{eval_bracket_matrix, wedge_to_bracket, BracketMatrix, StiefelMatrix};
use crate::matrix::DenseMatrix;
use crate::poly::SparsePoly;
use crate::ring::Scalar;
use crate::sample::ScalarSource;

/// A `g × f` matrix whose entries are linear forms on `n + 1` variables,
/// each given by its coefficient vector.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearMatrix<S> {
    g: usize,
    f: usize,
    n: usize,
    entries: Vec<Vec<Vec<S>>>,
}

impl<S: Scalar> LinearMatrix<S> {
    pub fn new(entries: Vec<Vec<Vec<S>>>) -> Result<Self> {
        let g = entries.len();
        if g == 0 {
            return Err(Error::Dimension("a linear matrix needs at least one row".into()));
        }
        let f = entries[0].len();
        if f < g {
            return Err(Error::Dimension(format!("{g} x {f} matrix; need f >= g")));
        }
        let n1 = entries[0].first().map_or(0, Vec::len);
        if n1 == 0 {
            return Err(Error::Dimension("entries need at least one coefficient".into()));
        }
        for row in &entries {
            if row.len() != f || row.iter().any(|e| e.len() != n1) {
                return Err(Error::Dimension("ragged linear matrix".into()));
            }
        }
        Ok(Self { g, f, n: n1 - 1, entries })
    }

    /// Entry `(b, a)` is the variable `x_{vars[b][a]}`.
    pub fn from_variables(n: usize, vars: &[Vec<usize>]) -> Result<Self> {
        let entries = vars
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| (0..=n).map(|i| S::from_i64(i64::from(i == v))).collect())
                    .collect()
            })
            .collect();
        Self::new(entries)
    }

    pub fn random<Src: ScalarSource<S>, G: Rng>(g: usize, f: usize, n: usize, src: &Src, rng: &mut G) -> Result<Self> {
        let entries = (0..g)
            .map(|_| (0..f).map(|_| src.sample_vec(n + 1, rng)).collect())
            .collect();
        Self::new(entries)
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn f(&self) -> usize {
        self.f
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Codimension `f - g + 1` of the generic rank-drop locus.
    pub fn codim(&self) -> usize {
        self.f - self.g + 1
    }

    pub fn entry(&self, b: usize, a: usize) -> &[S] {
        &self.entries[b][a]
    }

    /// Rank of `φ` evaluated at a point of `W*`.
    pub fn rank_at(&self, point: &[S]) -> Result<usize> {
        if point.len() != self.n + 1 {
            return Err(Error::Dimension(format!("point of length {}, expected {}", point.len(), self.n + 1)));
        }
        let m = DenseMatrix::from_fn(self.g, self.f, |b, a| {
            self.entries[b][a].iter().zip(point).fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
        });
        Ok(crate::grassmann::StiefelMatrix::new(m)?.rank())
    }

}

/// A basis element `e_A ⊗ γ^{(μ)}` of `Λ^{g-1+i}F ⊗ D_i(G*)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EnBasis {
    pub wedge: Vec<usize>,
    pub divided: Vec<usize>,
}

/// A linear complex `P_0 ← P_1 ← ... ← P_c` with differentials given as
/// `P_{i-1} × P_i` matrices of linear forms.
#[derive(Clone)]
pub struct LinearComplex<S> {
    n: usize,
    bases: Vec<Vec<EnBasis>>,
    differentials: Vec<DenseMatrix<SparsePoly<S>>>,
}

impl<S: Scalar> std::fmt::Debug for LinearComplex<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LinearComplex").field("n", &self.n).field("ranks", &self.ranks()).finish()
    }
}

impl<S: Scalar> LinearComplex<S> {
    pub fn ranks(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// Length `c`.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self, i: usize) -> &[EnBasis] {
        &self.bases[i]
    }

    /// `φ_i : P_i → W ⊗ P_{i-1}` for `i = 1..=c`.
    pub fn differential(&self, i: usize) -> &DenseMatrix<SparsePoly<S>> {
        &self.differentials[i - 1]
    }

    /// Whether every `φ_{i-1} φ_i` vanishes in the polynomial ring.
    pub fn composites_vanish(&self) -> Result<bool> {
        for w in self.differentials.windows(2) {
            if !w[0].mul(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Differential `i` with entries read in `Λ¹W`.
    pub fn exterior_differential(&self, i: usize) -> ExtMatrix<S> {
        let d = self.differential(i);
        let gens = self.n + 1;
        ExtMatrix::from_fn(d.rows(), d.cols(), gens, |r, c| linear_to_ext(d.get(r, c), gens))
            .expect("consistent generator count")
    }
}

fn linear_to_ext<S: Scalar>(p: &SparsePoly<S>, gens: usize) -> ExtElement<S> {
    let coeffs: Vec<S> = (0..gens)
        .map(|v| {
            let mut e = vec![0u32; gens];
            e[v] = 1;
            p.coeff(&e)
        })
        .collect();
    ExtElement::linear(&coeffs)
}

/// Multi-indices of total size `i` over `g` slots, in lexicographic order.
fn compositions(g: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(slot: usize, g: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slot + 1 == g {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(slot + 1, g, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, g, i, &mut Vec::new(), &mut out);
    out
}

/// The Eagon-Northcott type complex of `φ`, with differential
/// `d(e_A ⊗ γ^{(μ)}) = Σ_b Σ_t (-1)^t φ_{b,a_t} e_{A∖a_t} ⊗ γ^{(μ-e_b)}`.
pub fn eagon_northcott<S: Scalar>(phi: &LinearMatrix<S>) -> Result<LinearComplex<S>> {
    let (g, f, n) = (phi.g, phi.f, phi.n);
    let c = phi.codim();
    let bases: Vec<Vec<EnBasis>> = (0..=c)
        .map(|i| {
            let mut b = Vec::new();
            for wedge in subsets(f, g - 1 + i) {
                for divided in compositions(g, i) {
                    b.push(EnBasis { wedge: wedge.clone(), divided });
                }
            }
            b
        })
        .collect();
    let linear: Vec<Vec<SparsePoly<S>>> = phi
        .entries
        .iter()
        .map(|row| {
            row.iter()
                .map(|coeffs| {
                    (0..=n).fold(SparsePoly::zero_in(n + 1), |acc, v| {
                        acc + SparsePoly::var(n + 1, v).scale(&coeffs[v])
                    })
                })
                .collect()
        })
        .collect();
    let mut differentials = Vec::with_capacity(c);
    for i in 1..=c {
        let target: HashMap<&EnBasis, usize> = bases[i - 1].iter().enumerate().map(|(k, b)| (b, k)).collect();
        let mut m = DenseMatrix::from_fn(bases[i - 1].len(), bases[i].len(), |_, _| SparsePoly::zero_in(n + 1));
        for (col, src) in bases[i].iter().enumerate() {
            for b in 0..g {
                if src.divided[b] == 0 {
                    continue;
                }
                let mut mu = src.divided.clone();
                mu[b] -= 1;
                for (t, &a) in src.wedge.iter().enumerate() {
                    let mut rest = src.wedge.clone();
                    rest.remove(t);
                    let key = EnBasis { wedge: rest, divided: mu.clone() };
                    let row = target[&key];
                    let term = if t % 2 == 0 { linear[b][a].clone() } else { -linear[b][a].clone() };
                    let v = m.get(row, col).clone() + term;
                    m.set(row, col, v);
                }
            }
        }
        differentials.push(m);
    }
    Ok(LinearComplex { n, bases, differentials })
}

fn factorial(c: usize) -> i64 {
    (1..=c as i64).product()
}

/// `Ψ = (1/c!) φ_1 ∧ φ_2 ∧ ... ∧ φ_c`, a `P_0 × P_c` matrix over `Λ^c W`.
pub fn wedge_compose<S: Scalar>(l: &LinearComplex<S>) -> Result<ExtMatrix<S>> {
    let c = l.length();
    if c == 0 {
        return Err(Error::InvalidInput("complex of length 0".into()));
    }
    let char_p = l
        .differentials
        .iter()
        .flat_map(|d| (0..d.rows()).flat_map(move |r| (0..d.cols()).map(move |k| (r, k))).map(move |(r, k)| d.get(r, k)))
        .flat_map(|p| p.terms().map(|(_, x)| x.characteristic()).collect::<Vec<_>>())
        .max()
        .unwrap_or(0);
    if char_p != 0 && char_p as usize <= c {
        return Err(Error::Unsupported(format!("characteristic {char_p} divides {c}!")));
    }
    let mut acc = l.exterior_differential(1);
    for i in 2..=c {
        acc = ext_mat_mul(&acc, &l.exterior_differential(i))?;
    }
    let fact = S::from_i64(factorial(c));
    let failed = std::cell::Cell::new(false);
    let psi = acc.map_coeffs(|x| {
        x.div(&fact).unwrap_or_else(|| {
            failed.set(true);
            S::zero()
        })
    });
    if failed.get() {
        return Err(Error::Invariant(format!("wedge composite not divisible by {c}!")));
    }
    Ok(psi)
}

/// A `P_0 × P_c` matrix over `W^{⊗c}`: entry `(r, s)` maps an index word
/// `(w_1, ..., w_c)` to its coefficient.
pub type TensorMatrix<S> = Vec<Vec<BTreeMap<Vec<usize>, S>>>;

/// The composite `φ_1 ⊗ φ_2 ⊗ ... ⊗ φ_c` before projecting to `Λ^c W`.
pub fn tensor_composite<S: Scalar>(l: &LinearComplex<S>) -> TensorMatrix<S> {
    let gens = l.n + 1;
    let lin = |p: &SparsePoly<S>| -> Vec<(usize, S)> {
        (0..gens)
            .filter_map(|v| {
                let mut e = vec![0u32; gens];
                e[v] = 1;
                let x = p.coeff(&e);
                (!x.is_zero()).then_some((v, x))
            })
            .collect()
    };
    let d1 = l.differential(1);
    let mut acc: TensorMatrix<S> = (0..d1.rows())
        .map(|r| {
            (0..d1.cols())
                .map(|s| lin(d1.get(r, s)).into_iter().map(|(v, x)| (vec![v], x)).collect())
                .collect()
        })
        .collect();
    for i in 2..=l.length() {
        let d = l.differential(i);
        let mut next: TensorMatrix<S> = vec![vec![BTreeMap::new(); d.cols()]; acc.len()];
        for (r, row) in acc.iter().enumerate() {
            for (mid, word_map) in row.iter().enumerate() {
                if word_map.is_empty() {
                    continue;
                }
                for (s, target) in next[r].iter_mut().enumerate() {
                    let l2 = lin(d.get(mid, s));
                    for (word, x) in word_map {
                        for (v, y) in &l2 {
                            let mut w = word.clone();
                            w.push(*v);
                            let e = target.entry(w).or_insert_with(S::zero);
                            *e = e.clone() + x.clone() * y.clone();
                        }
                    }
                }
            }
        }
        for row in next.iter_mut() {
            for m in row.iter_mut() {
                m.retain(|_, x| !x.is_zero());
            }
        }
        acc = next;
    }
    acc
}

fn permutations(c: usize) -> Vec<(Vec<usize>, bool)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, bool)>) {
        if cur.len() == used.len() {
            let inversions = (0..cur.len())
                .flat_map(|i| (i + 1..cur.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| cur[i] > cur[j])
                .count();
            out.push((cur.clone(), inversions % 2 == 1));
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; c], &mut out);
    out
}

/// Checks that the tensor composite is alternating, `Alt(T) = T`, and that
/// its image in `Λ^c W` is `c! Ψ`. Supported for `c ≤ 3`.
pub fn check_alternating<S: Scalar>(l: &LinearComplex<S>) -> Result<bool> {
    let c = l.length();
    if c > 3 {
        return Err(Error::Unsupported(format!("tensor alternation check for c = {c} > 3")));
    }
    let t = tensor_composite(l);
    let psi = wedge_compose(l)?;
    let perms = permutations(c);
    let fact = S::from_i64(factorial(c));
    let gens = l.n + 1;
    for (r, row) in t.iter().enumerate() {
        for (s, words) in row.iter().enumerate() {
            let mut alt: BTreeMap<Vec<usize>, S> = BTreeMap::new();
            for (word, x) in words {
                for (perm, odd) in &perms {
                    let w: Vec<usize> = perm.iter().map(|&p| word[p]).collect();
                    let y = if *odd { -x.clone() } else { x.clone() };
                    let e = alt.entry(w).or_insert_with(S::zero);
                    *e = e.clone() + y;
                }
            }
            alt.retain(|_, x| !x.is_zero());
            let scaled: BTreeMap<Vec<usize>, S> = words.iter().map(|(w, x)| (w.clone(), x.clone() * fact.clone())).collect();
            if alt != scaled {
                return Ok(false);
            }
            let mut projected = ExtElement::zero(gens);
            for (word, x) in words {
                projected = projected.add(&ExtElement::monomial(gens, word, x.clone())?)?;
            }
            if projected != psi.get(r, s).scale(&fact) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Ψ` read as a matrix of bracket-linear forms on `G(n-c+1, n+1)`.
pub fn chow_bracket_matrix<S: Scalar>(phi: &LinearMatrix<S>) -> Result<BracketMatrix<S>> {
    let l = eagon_northcott(phi)?;
    let psi = wedge_compose(&l)?;
    let k = phi.n - phi.codim();
    let mut out = DenseMatrix::zeros(psi.rows(), psi.cols());
    for r in 0..psi.rows() {
        for s in 0..psi.cols() {
            out.set(r, s, wedge_to_bracket(psi.get(r, s), k)?);
        }
    }
    Ok(out)
}

/// `det(chow_bracket_matrix(φ))` as a polynomial in the brackets.
pub fn chow_form_determinantal<S: Scalar>(phi: &LinearMatrix<S>) -> Result<crate::grassmann::BracketPoly<S>> {
    chow_bracket_matrix(phi)?.det()
}

/// The Chow form evaluated at a Stiefel matrix.
pub fn chow_form_at<S: Scalar>(m: &BracketMatrix<S>, s: &StiefelMatrix<S>) -> Result<S> {
    eval_bracket_matrix(m, s)?.det()
}

/// A rational normal scroll `S(d_1, ..., d_r)`; a single part is a rational
/// normal curve.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scroll {
    parts: Vec<usize>,
}

impl Scroll {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidInput(format!("scroll parts {parts:?} must be positive")));
        }
        Ok(Self { parts })
    }

    pub fn rational_normal_curve(d: usize) -> Result<Self> {
        Self::new(vec![d])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `n` with the scroll in `P^n`.
    pub fn n(&self) -> usize {
        self.parts.iter().map(|d| d + 1).sum::<usize>() - 1
    }

    /// The `2 × Σd_i` matrix of variables whose minors cut out the scroll.
    pub fn linear_matrix<S: Scalar>(&self) -> LinearMatrix<S> {
        let (mut top, mut bottom, mut offset) = (Vec::new(), Vec::new(), 0);
        for &d in &self.parts {
            for j in 0..d {
                top.push(offset + j);
                bottom.push(offset + j + 1);
            }
            offset += d + 1;
        }
        LinearMatrix::from_variables(self.n(), &[top, bottom]).expect("well-formed scroll matrix")
    }

    /// The point `λ_i (s^{d_i}, s^{d_i-1} t, ..., t^{d_i})` block by block.
    pub fn point<S: Scalar>(&self, s: &S, t: &S, lambdas: &[S]) -> Result<Vec<S>> {
        if lambdas.len() != self.parts.len() {
            return Err(Error::Dimension(format!("{} scale factors for {} parts", lambdas.len(), self.parts.len())));
        }
        let mut out = Vec::with_capacity(self.n() + 1);
        for (&d, l) in self.parts.iter().zip(lambdas) {
            for j in 0..=d {
                out.push(l.clone() * s.pow((d - j) as u32) * t.pow(j as u32));
            }
        }
        Ok(out)
    }

    pub fn random_point<S: Scalar, Src: ScalarSource<S>, G: Rng>(&self, src: &Src, rng: &mut G) -> Vec<S> {
        let s = src.sample(rng);
        let t = src.sample(rng);
        let lambdas: Vec<S> = (0..self.parts.len()).map(|_| src.sample_nonzero(rng)).collect();
        self.point(&s, &t, &lambdas).expect("matching scale factors")
    }
}

/// A random `rows × len(point)` Stiefel matrix whose rows annihilate `point`.
pub fn plane_through<S: Scalar, Src: ScalarSource<S>, G: Rng>(
    point: &[S],
    rows: usize,
    src: &Src,
    rng: &mut G,
) -> Result<StiefelMatrix<S>> {
    let pivot = point
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::InvalidInput("the zero vector is not a projective point".into()))?;
    let inv = point[pivot].inv().expect("nonzero pivot");
    let data = (0..rows)
        .map(|_| {
            let mut v = src.sample_vec(point.len(), rng);
            let rest = (0..point.len())
                .filter(|&j| j != pivot)
                .fold(S::zero(), |acc, j| acc + point[j].clone() * v[j].clone());
            v[pivot] = -(rest * inv.clone());
            v
        })
        .collect();
    StiefelMatrix::from_rows(data)
}

/// A random Stiefel matrix for the Chow form of `x` whose rows annihilate a
/// random point of `x`.
pub fn incident_plane<S: Scalar, Src: ScalarSource<S>, G: Rng>(x: &Scroll, src: &Src, rng: &mut G) -> Result<StiefelMatrix<S>> {
    let p = x.random_point(src, rng);
    // dim X = number of parts, so planes of codimension dim X + 1
    plane_through(&p, x.parts.len() + 1, src, rng)
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;
    use crate::ring::{PrimeField, Rational, Ring};
    use crate::sample::{job_rng, SmallRationals};

    #[test]
    fn en_ranks() {
        let scroll = Scroll::new(vec![2, 1]).unwrap();
        let l = eagon_northcott(&scroll.linear_matrix::<Rational>()).unwrap();
        assert_eq!(l.ranks(), vec![3, 6, 3]);
        for d in 2..=6 {
            let l = eagon_northcott(&Scroll::rational_normal_curve(d).unwrap().linear_matrix::<Rational>()).unwrap();
            assert_eq!(l.ranks()[0], d);
            assert_eq!(l.ranks()[d - 1], d);
        }
        let koszul = LinearMatrix::<Rational>::from_variables(3, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(eagon_northcott(&koszul).unwrap().ranks(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn composites_vanish_on_random_input() {
        let src = SmallRationals { bound: 4 };
        let mut rng = job_rng(5, 0);
        for (g, f) in [(1, 3), (2, 3), (2, 4), (3, 4), (3, 5)] {
            let phi = LinearMatrix::random(g, f, 3, &src, &mut rng).unwrap();
            let l = eagon_northcott(&phi).unwrap();
            assert!(l.composites_vanish().unwrap(), "g={g} f={f}");
            let r = l.ranks();
            assert_eq!(r[0], *r.last().unwrap());
        }
    }

    #[test]
    fn psi_shapes_and_alternation() {
        let conic = Scroll::rational_normal_curve(2).unwrap().linear_matrix::<Rational>();
        let l = eagon_northcott(&conic).unwrap();
        let psi = wedge_compose(&l).unwrap();
        assert_eq!((psi.rows(), psi.cols(), psi.generators()), (2, 2, 3));
        assert_eq!(psi.get(0, 0).homogeneous_degree(), Some(1));
        let scroll = Scroll::new(vec![2, 1]).unwrap().linear_matrix::<Rational>();
        let l = eagon_northcott(&scroll).unwrap();
        let psi = wedge_compose(&l).unwrap();
        assert_eq!((psi.rows(), psi.cols(), psi.generators()), (3, 3, 5));
        assert!(check_alternating(&l).unwrap());
        let cubic = Scroll::rational_normal_curve(3).unwrap().linear_matrix::<Rational>();
        assert!(check_alternating(&eagon_northcott(&cubic).unwrap()).unwrap());
    }

    #[test]
    fn incidence_kernel() {
        let rnc = Scroll::rational_normal_curve(3).unwrap();
        let q = |n| Rational::from_i64(n);
        assert_eq!(rnc.point(&q(1), &q(2), &[q(1)]).unwrap(), vec![q(1), q(2), q(4), q(8)]);
        let p = rnc.point(&q(1), &q(2), &[q(1)]).unwrap();
        let m = plane_through(&p, 2, &SmallRationals { bound: 9 }, &mut job_rng(0, 0)).unwrap();
        for r in 0..2 {
            let dot = m.row(r).iter().zip(&p).fold(q(0), |acc, (a, b)| acc + a.clone() * b.clone());
            assert_eq!(dot, q(0));
        }
    }

    #[test]
    fn chow_form_vanishes_on_incident_planes() {
        let f = PrimeField::default_field();
        let mut rng = job_rng(9, 0);
        for x in [Scroll::rational_normal_curve(3).unwrap(), Scroll::new(vec![2, 1]).unwrap()] {
            let m = chow_bracket_matrix(&x.linear_matrix()).unwrap();
            for _ in 0..5 {
                let s = incident_plane(&x, &f, &mut rng).unwrap();
                assert!(chow_form_at(&m, &s).unwrap().is_zero());
                let generic = StiefelMatrix::random(x.parts().len() + 1, x.n() + 1, &f, &mut rng);
                assert!(!chow_form_at(&m, &generic).unwrap().is_zero());
            }
        }
    }
}
