//! Resultants of two functions `a + b√f` and `c + d√f` on a hyperelliptic curve.
//!
//! The curve `s² = f(t)` of genus `g` is embedded by
//! `t ↦ (1 : t : … : t^k : √f : … : t^{k-g-1}√f)`. A factorization
//! `f = f⁽¹⁾ f⁽²⁾` into two factors of degree at most `g + 1` gives
//!
//! * a `4k × 4k` Stiefel (Sylvester-type) matrix built from [`syl_block`]s, and
//! * a symmetric `2k × 2k` Bézout matrix linear in the `2 × 2` minors of
//!   `[[a_0 … a_k b_0 … b_{k-g-1}], [c_0 … c_k d_0 … d_{k-g-1}]]`.
//!
//! Both determinants vanish exactly when the two functions share a zero. The
//! Bézout matrix is the kernel of an exterior matrix `B`, and
//! [`verify_ba_zero_hyper`] checks `B · A = 0` with the coefficients of
//! `f⁽¹⁾` and `f⁽²⁾` left as indeterminates.
//!
//! Big brackets `[P, Q]` refer to columns of the wider `2 × 3(k+1)` matrix
//! whose column blocks hold the coefficients of `(a, c)`, `(b f⁽¹⁾, d f⁽¹⁾)`
//! and `(b f⁽²⁾, d f⁽²⁾)`. Each wide column is a fixed linear combination of
//! narrow columns, so big brackets expand into narrow ones.

use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exterior::{ExtElement, ExtMatrix};
use crate::fixtures::load_bracket;
use crate::grassmann::{eval_bracket_matrix, BracketMatrix, BracketPoly, StiefelMatrix};
use crate::matrix::DenseMatrix;
use crate::poly::{gcd_univariate, SparsePoly};
use crate::ring::{Field, Fp, PrimeField, Rational, Ring, Scalar};
use crate::sample::ScalarSource;

/// Largest `k` for which the symbolic `B · A = 0` check is expected to finish
/// in desk time. Larger values run but emit a warning from the CLI.
pub const VERIFIED_K_MAX: usize = 12;

/// Two curve functions `a + b√f`, `c + d√f` with `f = f⁽¹⁾ f⁽²⁾`.
#[derive(Clone, PartialEq, Debug)]
pub struct HyperellipticInstance<S> {
    g: usize,
    k: usize,
    f1: Vec<S>,
    f2: Vec<S>,
    a: Vec<S>,
    b: Vec<S>,
    c: Vec<S>,
    d: Vec<S>,
}

fn padded<S: Field>(name: &str, p: &SparsePoly<S>, len: usize) -> Result<Vec<S>> {
    let mut v = p.univariate_coeffs()?;
    while v.len() > len {
        if !v.last().expect("nonempty").is_zero() {
            return Err(Error::InvalidInput(format!(
                "{name} has degree {}, at most {} allowed",
                v.len() - 1,
                len as i64 - 1
            )));
        }
        v.pop();
    }
    v.resize(len, S::zero());
    Ok(v)
}

fn poly_mul<R: Ring>(x: &[R], y: &[R]) -> Vec<R> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![R::zero(); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] = out[i + j].clone() + a.clone() * b.clone();
        }
    }
    out
}

fn horner<S: Field>(coeffs: &[S], t: &S) -> S {
    coeffs.iter().rev().fold(S::zero(), |acc, c| acc * t.clone() + c.clone())
}

impl<S: Field> HyperellipticInstance<S> {
    /// Validates degree bounds, `k ≥ g + 1`, and that `f = f⁽¹⁾ f⁽²⁾` is
    /// squarefree of degree `2g+1` or `2g+2` (a degree drop means one branch
    /// point sits at infinity).
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        g: usize,
        k: usize,
        f1: &SparsePoly<S>,
        f2: &SparsePoly<S>,
        a: &SparsePoly<S>,
        b: &SparsePoly<S>,
        c: &SparsePoly<S>,
        d: &SparsePoly<S>,
    ) -> Result<Self> {
        if k < g + 1 {
            return Err(Error::InvalidInput(format!("need k >= g + 1, got g = {g}, k = {k}")));
        }
        let inst = Self {
            g,
            k,
            f1: padded("f1", f1, g + 2)?,
            f2: padded("f2", f2, g + 2)?,
            a: padded("a", a, k + 1)?,
            b: padded("b", b, k - g)?,
            c: padded("c", c, k + 1)?,
            d: padded("d", d, k - g)?,
        };
        inst.check_f()?;
        Ok(inst)
    }

    /// Same as [`new`](Self::new) from coefficient lists, degree 0 first.
    #[allow(clippy::too_many_arguments)]
    pub fn from_coeffs(g: usize, k: usize, f1: &[S], f2: &[S], a: &[S], b: &[S], c: &[S], d: &[S]) -> Result<Self> {
        let p = SparsePoly::from_coeffs;
        Self::new(g, k, &p(f1), &p(f2), &p(a), &p(b), &p(c), &p(d))
    }

    fn check_f(&self) -> Result<()> {
        let f = self.f();
        let deg = f.iter().rposition(|x| !x.is_zero());
        match deg {
            Some(deg) if deg + 1 >= 2 * self.g + 2 => {}
            _ => {
                return Err(Error::InvalidInput(format!(
                    "f = f1*f2 must have degree {} or {}",
                    2 * self.g + 1,
                    2 * self.g + 2
                )))
            }
        }
        let fp = SparsePoly::from_coeffs(&f);
        let h = gcd_univariate(&fp, &fp.derivative(0))?;
        if h.total_degree().unwrap_or(0) > 0 {
            return Err(Error::InvalidInput("f = f1*f2 is not squarefree".into()));
        }
        Ok(())
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Coefficients of `f = f⁽¹⁾ f⁽²⁾`, length `2g + 3`.
    pub fn f(&self) -> Vec<S> {
        poly_mul(&self.f1, &self.f2)
    }

    pub fn f1(&self) -> &[S] {
        &self.f1
    }

    pub fn f2(&self) -> &[S] {
        &self.f2
    }

    pub fn a(&self) -> &[S] {
        &self.a
    }

    pub fn b(&self) -> &[S] {
        &self.b
    }

    pub fn c(&self) -> &[S] {
        &self.c
    }

    pub fn d(&self) -> &[S] {
        &self.d
    }

    /// The `2 × (2k + 1 - g)` matrix `[[a, b], [c, d]]`.
    pub fn stiefel(&self) -> Result<StiefelMatrix<S>> {
        StiefelMatrix::from_rows(vec![
            self.a.iter().chain(&self.b).cloned().collect(),
            self.c.iter().chain(&self.d).cloned().collect(),
        ])
    }
}

/// The `2k × k` block whose column `l` holds the coefficients of `t^l · r`.
pub fn syl_block<R: Ring>(k: usize, r: &[R]) -> Result<DenseMatrix<R>> {
    if r.iter().skip(k + 1).any(|x| !x.is_zero()) {
        return Err(Error::InvalidInput(format!("polynomial of degree > {k} in a Sylvester block")));
    }
    Ok(DenseMatrix::from_fn(2 * k, k, |row, col| {
        row.checked_sub(col)
            .and_then(|i| if i <= k { r.get(i).cloned() } else { None })
            .unwrap_or_else(R::zero)
    }))
}

fn place<R: Ring>(out: &mut DenseMatrix<R>, block: &DenseMatrix<R>, r0: usize, c0: usize) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            out.set(r0 + i, c0 + j, block.get(i, j).clone());
        }
    }
}

/// `[[syl a, syl bf⁽²⁾, syl c, syl df⁽²⁾], [syl bf⁽¹⁾, syl a, syl df⁽¹⁾, syl c]]`.
pub fn hyperelliptic_sylvester<S: Field>(inst: &HyperellipticInstance<S>) -> Result<DenseMatrix<S>> {
    let k = inst.k;
    let top = [
        inst.a.clone(),
        poly_mul(&inst.b, &inst.f2),
        inst.c.clone(),
        poly_mul(&inst.d, &inst.f2),
    ];
    let bottom = [
        poly_mul(&inst.b, &inst.f1),
        inst.a.clone(),
        poly_mul(&inst.d, &inst.f1),
        inst.c.clone(),
    ];
    let mut m = DenseMatrix::zeros(4 * k, 4 * k);
    for (j, (t, b)) in top.iter().zip(&bottom).enumerate() {
        place(&mut m, &syl_block(k, t)?, 0, j * k);
        place(&mut m, &syl_block(k, b)?, 2 * k, j * k);
    }
    Ok(m)
}

/// Determinant of [`hyperelliptic_sylvester`].
pub fn hyperelliptic_sylvester_det<S: Field>(inst: &HyperellipticInstance<S>) -> Result<S> {
    hyperelliptic_sylvester(inst)?.det()
}

/// A column of the wide `2 × 3(k+1)` matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BigColumn {
    /// `p`: column `p` of `(a, c)`.
    Plain(usize),
    /// `p⁽¹⁾`: column `p` of `(b f⁽¹⁾, d f⁽¹⁾)`, wide index `p + (k+1)`.
    First(usize),
    /// `p⁽²⁾`: column `p` of `(b f⁽²⁾, d f⁽²⁾)`, wide index `p + 2(k+1)`.
    Second(usize),
}

impl BigColumn {
    pub fn wide_index(self, k: usize) -> usize {
        match self {
            BigColumn::Plain(p) => p,
            BigColumn::First(p) => p + k + 1,
            BigColumn::Second(p) => p + 2 * (k + 1),
        }
    }

    /// Coefficients of this wide column in the narrow columns `0 ..= 2k - g`.
    pub fn functional<R: Ring>(self, g: usize, k: usize, f1: &[R], f2: &[R]) -> Vec<R> {
        let mut v = vec![R::zero(); 2 * k + 1 - g];
        let (p, f) = match self {
            BigColumn::Plain(p) => {
                v[p] = R::one();
                return v;
            }
            BigColumn::First(p) => (p, f1),
            BigColumn::Second(p) => (p, f2),
        };
        for j in 0..k - g {
            if let Some(c) = p.checked_sub(j).and_then(|i| f.get(i)) {
                v[k + 1 + j] = c.clone();
            }
        }
        v
    }
}

/// A big bracket `[P, Q]`.
pub type BigBracket = (BigColumn, BigColumn);

/// The big brackets summed in entry `(i, j)` (1-based) of the `2k × 2k`
/// Bézout matrix.
pub fn bezout_terms(k: usize, i: usize, j: usize) -> Vec<BigBracket> {
    use BigColumn::{First, Plain, Second};
    let (bi, ii) = ((i - 1) / k, (i - 1) % k + 1);
    let (bj, jj) = ((j - 1) / k, (j - 1) % k + 1);
    let s = ii + jj - 1;
    let sym: Vec<(usize, usize)> = (0..ii.min(jj)).map(|p| (p, s - p)).filter(|&(_, q)| q <= k).collect();
    let cross: Vec<(usize, usize)> = (0..jj).filter(|&p| p <= s && s - p <= k).map(|p| (p, s - p)).collect();
    let mut out = Vec::new();
    match (bi, bj) {
        (0, 0) => {
            for &(p, q) in &sym {
                out.push((Second(p), Plain(q)));
                out.push((Plain(p), Second(q)));
            }
        }
        (0, 1) => {
            out.extend(sym.iter().map(|&(p, q)| (Plain(p), Plain(q))));
            out.extend(cross.iter().map(|&(p, q)| (First(p), Second(q))));
        }
        (1, 0) => {
            out.extend(sym.iter().map(|&(p, q)| (Plain(p), Plain(q))));
            out.extend(cross.iter().map(|&(p, q)| (Second(p), First(q))));
        }
        _ => {
            for &(p, q) in &sym {
                out.push((First(p), Plain(q)));
                out.push((Plain(p), First(q)));
            }
        }
    }
    out
}

/// The Bézout matrix over `Λ²V`: each big bracket `[P, Q]` becomes `v_P ∧ v_Q`.
pub fn exterior_a_hyper<R: Ring>(g: usize, k: usize, f1: &[R], f2: &[R]) -> Result<ExtMatrix<R>> {
    check_gk(g, k)?;
    let n = 2 * k + 1 - g;
    let mut m = ExtMatrix::zeros(2 * k, 2 * k, n);
    for i in 0..2 * k {
        for j in 0..2 * k {
            let mut e = ExtElement::zero(n);
            for (p, q) in bezout_terms(k, i + 1, j + 1) {
                let vp = ExtElement::linear(&p.functional(g, k, f1, f2));
                let vq = ExtElement::linear(&q.functional(g, k, f1, f2));
                e.add_wedge(&vp, &vq);
            }
            m.set(i, j, e);
        }
    }
    Ok(m)
}

/// The `4k × 2k` exterior matrix `B` on generators `e_0 … e_{2k-g}`.
pub fn exterior_b_hyper<R: Ring>(g: usize, k: usize, f1: &[R], f2: &[R]) -> Result<ExtMatrix<R>> {
    check_gk(g, k)?;
    let n = 2 * k + 1 - g;
    let plain: Vec<ExtElement<R>> = (0..=k).map(|p| ExtElement::generator(n, p)).collect();
    let twisted = |f: &[R]| -> Vec<ExtElement<R>> {
        (0..=k)
            .map(|p| ExtElement::linear(&BigColumn::First(p).functional(g, k, f, f)))
            .collect()
    };
    let (t1, t2) = (twisted(f1), twisted(f2));
    let blocks = [[&plain, &t2], [&t1, &plain]];
    let mut m = ExtMatrix::zeros(4 * k, 2 * k, n);
    for (bi, row) in blocks.iter().enumerate() {
        for (bj, r) in row.iter().enumerate() {
            for kappa in 0..2 * k {
                for l in 0..k {
                    if kappa >= l && kappa - l <= k {
                        m.set(bi * 2 * k + kappa, bj * k + l, r[kappa - l].clone());
                    }
                }
            }
        }
    }
    Ok(m)
}

fn check_gk(g: usize, k: usize) -> Result<()> {
    if k < g + 1 {
        return Err(Error::InvalidInput(format!("need 1 <= g + 1 <= k, got g = {g}, k = {k}")));
    }
    Ok(())
}

/// Whether `B · A` vanishes in `Λ³V` with `f⁽¹⁾, f⁽²⁾` symbolic.
///
/// The coefficient ring is `ℚ[f⁽¹⁾_0 … f⁽¹⁾_{g+1}, f⁽²⁾_0 … f⁽²⁾_{g+1}]`.
/// Rows of the product are computed in parallel.
pub fn verify_ba_zero_hyper(g: usize, k: usize) -> Result<bool> {
    check_gk(g, k)?;
    let nv = 2 * g + 4;
    let var = |i| SparsePoly::<Rational>::var(nv, i);
    let f1: Vec<_> = (0..g + 2).map(var).collect();
    let f2: Vec<_> = (0..g + 2).map(|i| var(g + 2 + i)).collect();
    let b = exterior_b_hyper(g, k, &f1, &f2)?;
    let a = exterior_a_hyper(g, k, &f1, &f2)?;
    Ok(ext_product_vanishes(&b, &a))
}

fn ext_product_vanishes<R: Ring + Send + Sync>(b: &ExtMatrix<R>, a: &ExtMatrix<R>) -> bool {
    (0..b.rows()).into_par_iter().all(|i| {
        (0..a.cols()).all(|j| {
            let mut acc = ExtElement::zero(b.generators());
            for l in 0..b.cols() {
                acc.add_wedge(b.get(i, l), a.get(l, j));
            }
            acc.is_zero()
        })
    })
}

/// The Bézout matrix as brackets `[u, w]` of the narrow `2 × (2k+1-g)` matrix,
/// for given numeric factors `f⁽¹⁾, f⁽²⁾`.
pub fn hyperelliptic_bezout_brackets<S: Field>(g: usize, k: usize, f1: &[S], f2: &[S]) -> Result<BracketMatrix<S>> {
    let ext = exterior_a_hyper(g, k, f1, f2)?;
    let n = 2 * k - g;
    let mut m = DenseMatrix::zeros(2 * k, 2 * k);
    for i in 0..2 * k {
        for j in 0..2 * k {
            let mut e = BracketPoly::zero_in(1, n);
            for (idx, c) in ext.get(i, j).terms() {
                e = e + BracketPoly::bracket_scaled(1, n, &idx, c.clone())?;
            }
            m.set(i, j, e);
        }
    }
    Ok(m)
}

/// The numeric `2k × 2k` Bézout matrix of an instance.
pub fn hyperelliptic_bezout<S: Field>(inst: &HyperellipticInstance<S>) -> Result<DenseMatrix<S>> {
    let brackets = hyperelliptic_bezout_brackets(inst.g, inst.k, &inst.f1, &inst.f2)?;
    eval_bracket_matrix(&brackets, &inst.stiefel()?)
}

/// Determinant of [`hyperelliptic_bezout`].
pub fn hyperelliptic_bezout_det<S: Field>(inst: &HyperellipticInstance<S>) -> Result<S> {
    hyperelliptic_bezout(inst)?.det()
}

/// Random instance with generic coefficients. Retries until `f` is squarefree.
pub fn random_instance<S: Scalar, Src: ScalarSource<S>, G: Rng>(
    g: usize,
    k: usize,
    src: &Src,
    rng: &mut G,
) -> Result<HyperellipticInstance<S>> {
    check_gk(g, k)?;
    for _ in 0..100 {
        let inst = HyperellipticInstance::from_coeffs(
            g,
            k,
            &src.sample_vec(g + 2, rng),
            &src.sample_vec(g + 2, rng),
            &src.sample_vec(k + 1, rng),
            &src.sample_vec(k - g, rng),
            &src.sample_vec(k + 1, rng),
            &src.sample_vec(k - g, rng),
        );
        if let Ok(inst) = inst {
            return Ok(inst);
        }
    }
    Err(Error::Invariant("no squarefree f found in 100 draws".into()))
}

/// Random instance whose two functions share the affine point `(t₀, s₀)`.
///
/// `f⁽²⁾_0` is adjusted so that `f(t₀) = s₀²`, then `a_0` and `c_0` so that
/// `a(t₀) + b(t₀)s₀ = c(t₀) + d(t₀)s₀ = 0`. Returns the instance and the point.
pub fn planted_instance<S: Scalar, Src: ScalarSource<S>, G: Rng>(
    g: usize,
    k: usize,
    src: &Src,
    rng: &mut G,
) -> Result<(HyperellipticInstance<S>, S, S)> {
    check_gk(g, k)?;
    for _ in 0..100 {
        let t0 = src.sample(rng);
        let s0 = src.sample(rng);
        let f1 = src.sample_vec(g + 2, rng);
        let mut f2 = src.sample_vec(g + 2, rng);
        let v1 = horner(&f1, &t0);
        let Some(inv) = v1.inv() else { continue };
        let rest = horner(&f2, &t0) - f2[0].clone();
        f2[0] = s0.clone() * s0.clone() * inv - rest;
        let plant = |x: &mut Vec<S>, y: &[S]| {
            let v = horner(x, &t0) + horner(y, &t0) * s0.clone();
            x[0] = x[0].clone() - v;
        };
        let (mut a, b) = (src.sample_vec(k + 1, rng), src.sample_vec(k - g, rng));
        let (mut c, d) = (src.sample_vec(k + 1, rng), src.sample_vec(k - g, rng));
        plant(&mut a, &b);
        plant(&mut c, &d);
        if let Ok(inst) = HyperellipticInstance::from_coeffs(g, k, &f1, &f2, &a, &b, &c, &d) {
            return Ok((inst, t0, s0));
        }
    }
    Err(Error::Invariant("could not plant a common zero in 100 draws".into()))
}

/// At a single `t`: whether some `s` with `s² = fv` kills both `a + bs` and `c + ds`.
fn common_at<S: Field>(a: &S, b: &S, c: &S, d: &S, fv: &S) -> bool {
    let n1 = a.clone() * a.clone() - b.clone() * b.clone() * fv.clone();
    let n2 = c.clone() * c.clone() - d.clone() * d.clone() * fv.clone();
    n1.is_zero() && n2.is_zero() && (b.is_zero() || d.is_zero() || (c.clone() * b.clone() - d.clone() * a.clone()).is_zero())
}

/// Exact common-zero test over the algebraic closure.
///
/// Affine points: a common zero lies over a root `t₀` of
/// `gcd(a² - b²f, c² - d²f)` at which `b d (cb - da)` also vanishes. The
/// points over `t = ∞` are checked through the leading coefficients.
pub fn curve_common_zero<S: Field>(inst: &HyperellipticInstance<S>) -> Result<bool> {
    let f = inst.f();
    let norm = |x: &[S], y: &[S]| -> Vec<S> {
        let xx = poly_mul(x, x);
        let yyf = poly_mul(&poly_mul(y, y), &f);
        let len = xx.len().max(yyf.len());
        (0..len)
            .map(|i| xx.get(i).cloned().unwrap_or_else(S::zero) - yyf.get(i).cloned().unwrap_or_else(S::zero))
            .collect()
    };
    let (n1, n2) = (norm(&inst.a, &inst.b), norm(&inst.c, &inst.d));
    if n1.iter().all(|x| x.is_zero()) || n2.iter().all(|x| x.is_zero()) {
        return Err(Error::InvalidInput("one of the functions is identically zero".into()));
    }
    let h = gcd_univariate(&SparsePoly::from_coeffs(&n1), &SparsePoly::from_coeffs(&n2))?;
    let cb = poly_mul(&inst.c, &inst.b);
    let da = poly_mul(&inst.d, &inst.a);
    let cross: Vec<S> = (0..cb.len().max(da.len()))
        .map(|i| cb.get(i).cloned().unwrap_or_else(S::zero) - da.get(i).cloned().unwrap_or_else(S::zero))
        .collect();
    let w = poly_mul(&poly_mul(&inst.b, &inst.d), &cross);
    let affine = if w.iter().all(|x| x.is_zero()) {
        h.total_degree().is_some_and(|d| d > 0)
    } else {
        gcd_univariate(&h, &SparsePoly::from_coeffs(&w))?.total_degree().is_some_and(|d| d > 0)
    };
    let top = |v: &[S]| v.last().cloned().unwrap_or_else(S::zero);
    let at_infinity = common_at(&top(&inst.a), &top(&inst.b), &top(&inst.c), &top(&inst.d), &top(&f));
    Ok(affine || at_infinity)
}

/// Largest prime accepted by [`curve_common_zero_oracle`].
pub const SCAN_PRIME_MAX: u64 = 1 << 20;

/// Exhaustive scan over `t ∈ F_p ∪ {∞}` and the two square roots of `f(t)`
/// in `F_{p²}`. Only points with `t` rational over `F_p` are seen.
pub fn curve_common_zero_oracle(inst: &HyperellipticInstance<Fp>, field: &PrimeField) -> Result<bool> {
    let p = field.modulus();
    if p == 2 {
        return Err(Error::InvalidInput("the scan needs an odd prime".into()));
    }
    if p > SCAN_PRIME_MAX {
        return Err(Error::Unsupported(format!("exhaustive scan limited to p <= {SCAN_PRIME_MAX}, got {p}")));
    }
    let f = inst.f();
    for t in 0..p {
        let t = field.elem(t as i64);
        let ev = |x: &[Fp]| horner(x, &t);
        let (a, b, c, d, fv) = (ev(&inst.a), ev(&inst.b), ev(&inst.c), ev(&inst.d), ev(&f));
        let hit = match field.sqrt(fv) {
            Some(s) => [s, -s].iter().any(|s| (a + b * *s).is_zero() && (c + d * *s).is_zero()),
            // s ∉ F_p: a + bs = 0 forces a = b = 0
            None => a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(),
        };
        if hit {
            return Ok(true);
        }
    }
    let top = |v: &[Fp]| v.last().copied().unwrap_or_else(|| field.zero());
    Ok(common_at(&top(&inst.a), &top(&inst.b), &top(&inst.c), &top(&inst.d), &top(&f)))
}

/// Reduces a rational instance modulo the field's prime.
pub fn reduce_instance(inst: &HyperellipticInstance<Rational>, field: &PrimeField) -> Result<HyperellipticInstance<Fp>> {
    let r = |v: &[Rational]| -> Result<Vec<Fp>> { v.iter().map(|x| field.reduce(x)).collect() };
    HyperellipticInstance::from_coeffs(
        inst.g,
        inst.k,
        &r(&inst.f1)?,
        &r(&inst.f2)?,
        &r(&inst.a)?,
        &r(&inst.b)?,
        &r(&inst.c)?,
        &r(&inst.d)?,
    )
}

/// Coefficients of one elliptic function `x_0 + x_1 ℘ + x_2 ℘² + y ℘'/2`.
#[derive(Clone, PartialEq, Debug)]
pub struct EllipticFunction<S> {
    pub x: [S; 3],
    pub y: S,
}

/// The 4 × 4 elliptic bracket matrix with the half-period values substituted.
pub fn elliptic_bracket_matrix<S: Field>(rho: &[S; 3]) -> Result<BracketMatrix<S>> {
    check_rho(rho)?;
    load_bracket("elliptic4")?.bracket_matrix(rho)
}

fn check_rho<S: Field>(rho: &[S; 3]) -> Result<()> {
    for i in 0..3 {
        for j in i + 1..3 {
            if rho[i] == rho[j] {
                return Err(Error::InvalidInput(format!("rho{} = rho{} is a repeated root", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

/// Determinant of the elliptic fixture matrix at the brackets of
/// `[[a_0, a_1, a_2, b_0], [c_0, c_1, c_2, d_0]]`.
pub fn elliptic_resultant<S: Field>(f: &EllipticFunction<S>, g: &EllipticFunction<S>, rho: &[S; 3]) -> Result<S> {
    let m = elliptic_bracket_matrix(rho)?;
    let row = |e: &EllipticFunction<S>| e.x.iter().cloned().chain([e.y.clone()]).collect::<Vec<_>>();
    eval_bracket_matrix(&m, &StiefelMatrix::from_rows(vec![row(f), row(g)])?)?.det()
}

/// The `(g, k) = (1, 2)` instance of the same pair: `f⁽¹⁾ = (t-ρ₁)(t-ρ₂)`,
/// `f⁽²⁾ = 4(t-ρ₃)`, `b = b_0/2`, `d = d_0/2`.
pub fn elliptic_instance<S: Field>(
    f: &EllipticFunction<S>,
    g: &EllipticFunction<S>,
    rho: &[S; 3],
) -> Result<HyperellipticInstance<S>> {
    check_rho(rho)?;
    let [r1, r2, r3] = rho.clone();
    let two = S::from_i64(2);
    let half = |y: &S| y.div(&two).ok_or_else(|| Error::InvalidInput("characteristic 2".into()));
    let f1 = [r1.clone() * r2.clone(), -(r1 + r2), S::one()];
    let f2 = [-(S::from_i64(4) * r3), S::from_i64(4)];
    HyperellipticInstance::from_coeffs(1, 2, &f1, &f2, &f.x, &[half(&f.y)?], &g.x, &[half(&g.y)?])
}

/// Random pair sharing a zero `(t₀, s₀)` with `s₀² = 4∏(t₀ - ρᵢ)`, obtained by
/// solving for `ρ₃`. Returns the functions and the adjusted `ρ`.
pub fn planted_elliptic<S: Scalar, Src: ScalarSource<S>, G: Rng>(
    src: &Src,
    rng: &mut G,
) -> Result<(EllipticFunction<S>, EllipticFunction<S>, [S; 3])> {
    for _ in 0..100 {
        let (t0, s0, r1, r2) = (src.sample(rng), src.sample_nonzero(rng), src.sample(rng), src.sample(rng));
        let denom = S::from_i64(4) * (t0.clone() - r1.clone()) * (t0.clone() - r2.clone());
        let Some(q) = (s0.clone() * s0.clone()).div(&denom) else { continue };
        let rho = [r1, r2, t0.clone() - q];
        if check_rho(&rho).is_err() {
            continue;
        }
        let half_s = s0.div(&S::from_i64(2)).expect("odd characteristic");
        let mut one = || {
            let x: Vec<S> = src.sample_vec(3, rng);
            let y = src.sample(rng);
            let v = horner(&x, &t0) + y.clone() * half_s.clone();
            EllipticFunction { x: [x[0].clone() - v, x[1].clone(), x[2].clone()], y }
        };
        let (f, g) = (one(), one());
        return Ok((f, g, rho));
    }
    Err(Error::Invariant("could not plant an elliptic common zero".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary::{bezout_bracket_matrix, resultant_sylvester, BinaryForm};
    use crate::sample::{job_rng, SmallRationals};

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn qs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn syl_block_pattern() {
        let b = syl_block(1, &qs(&[2, 3])).unwrap();
        assert_eq!((b.rows(), b.cols()), (2, 1));
        assert_eq!((b.get(0, 0), b.get(1, 0)), (&q(2), &q(3)));
        let b = syl_block(3, &qs(&[1, 2, 3, 4])).unwrap();
        assert_eq!(b.get(4, 2), &q(3));
        assert!(b.get(0, 1).is_zero());
        assert!(syl_block(1, &qs(&[1, 2, 3])).is_err());
        assert!(syl_block(2, &qs(&[0, 0, 0])).unwrap().is_zero());
    }

    #[test]
    fn instance_validation() {
        let ok = HyperellipticInstance::from_coeffs(
            1,
            2,
            &qs(&[2, 0, 1]),
            &qs(&[-4, 4]),
            &qs(&[1, 2, 3]),
            &qs(&[1]),
            &qs(&[0, 1]),
            &qs(&[2]),
        );
        assert!(ok.is_ok());
        // f1 = f2 gives a square
        let sq = HyperellipticInstance::from_coeffs(0, 1, &qs(&[1, 1]), &qs(&[1, 1]), &qs(&[1]), &qs(&[1]), &qs(&[1]), &qs(&[1]));
        assert!(sq.is_err());
        let big_b = HyperellipticInstance::from_coeffs(0, 1, &qs(&[1, 1]), &qs(&[2, 1]), &qs(&[1]), &qs(&[1, 1]), &qs(&[1]), &qs(&[1]));
        assert!(big_b.is_err());
        let small_k = HyperellipticInstance::from_coeffs(1, 1, &qs(&[1, 1]), &qs(&[2, 1]), &qs(&[1]), &qs(&[]), &qs(&[1]), &qs(&[]));
        assert!(small_k.is_err());
    }

    #[test]
    fn ba_small_cases() {
        for (g, k) in [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (1, 4), (3, 4)] {
            assert!(verify_ba_zero_hyper(g, k).unwrap(), "g = {g}, k = {k}");
        }
        assert!(verify_ba_zero_hyper(2, 2).is_err());
    }

    #[test]
    fn bezout_is_symmetric_in_narrow_brackets() {
        let mut rng = job_rng(5, 0);
        let src = SmallRationals { bound: 5 };
        for (g, k) in [(0, 1), (1, 2), (1, 3), (2, 4)] {
            let f1 = src.sample_vec(g + 2, &mut rng);
            let f2 = src.sample_vec(g + 2, &mut rng);
            assert!(hyperelliptic_bezout_brackets(g, k, &f1, &f2).unwrap().is_symmetric());
        }
    }

    #[test]
    fn b_d_zero_reduces_to_binary() {
        let mut rng = job_rng(6, 0);
        let src = SmallRationals { bound: 4 };
        for k in 1..=4 {
            let g = 0;
            let mut inst = random_instance::<Rational, _, _>(g, k, &src, &mut rng).unwrap();
            inst.b = vec![q(0); k - g];
            inst.d = vec![q(0); k - g];
            let a = hyperelliptic_bezout(&inst).unwrap();
            let bin = eval_bracket_matrix(
                &bezout_bracket_matrix::<Rational>(k).unwrap(),
                &StiefelMatrix::from_rows(vec![inst.a.clone(), inst.c.clone()]).unwrap(),
            )
            .unwrap();
            for i in 0..k {
                for j in 0..k {
                    assert!(a.get(i, j).is_zero() && a.get(k + i, k + j).is_zero());
                    assert_eq!(a.get(i, k + j), bin.get(i, j));
                    assert_eq!(a.get(k + i, j), bin.get(i, j));
                }
            }
            let fa = BinaryForm::new(inst.a.iter().rev().cloned().collect()).unwrap();
            let fc = BinaryForm::new(inst.c.iter().rev().cloned().collect()).unwrap();
            let res = resultant_sylvester(&fa, &fc).unwrap();
            let det = hyperelliptic_sylvester_det(&inst).unwrap();
            let sq = res.clone() * res;
            assert!(det == sq || det == -sq);
        }
    }

    #[test]
    fn planted_and_generic() {
        let f = PrimeField::default_field();
        let mut rng = job_rng(7, 0);
        for (g, k) in [(0, 1), (1, 2), (1, 3), (2, 3)] {
            let (inst, _, _) = planted_instance(g, k, &f, &mut rng).unwrap();
            assert!(hyperelliptic_sylvester_det(&inst).unwrap().is_zero());
            assert!(hyperelliptic_bezout_det(&inst).unwrap().is_zero());
            assert!(curve_common_zero(&inst).unwrap());
            let inst = random_instance(g, k, &f, &mut rng).unwrap();
            assert!(!hyperelliptic_sylvester_det(&inst).unwrap().is_zero());
            assert!(!hyperelliptic_bezout_det(&inst).unwrap().is_zero());
            assert!(!curve_common_zero(&inst).unwrap());
        }
    }

    #[test]
    fn scan_oracle_small_prime() {
        let field = PrimeField::new(101).unwrap();
        let e = |v: &[i64]| v.iter().map(|&x| field.elem(x)).collect::<Vec<_>>();
        // a = c = t, b = d = 0: shared point over t = 0
        let inst = HyperellipticInstance::from_coeffs(0, 1, &e(&[1, 1]), &e(&[2, 1]), &e(&[0, 1]), &e(&[0]), &e(&[0, 1]), &e(&[0]))
            .unwrap();
        assert!(curve_common_zero_oracle(&inst, &field).unwrap());
        assert!(curve_common_zero(&inst).unwrap());
        let mut rng = job_rng(8, 0);
        let (inst, _, _) = planted_instance(1, 2, &field, &mut rng).unwrap();
        assert!(curve_common_zero_oracle(&inst, &field).unwrap());
        assert!(curve_common_zero_oracle(&inst, &PrimeField::new(2).unwrap()).is_err());
    }

    #[test]
    fn elliptic_fixture_entries() {
        let fx = load_bracket("elliptic4").unwrap();
        assert_eq!(fx.cell(0, 2).unwrap(), "[01]");
        assert_eq!(fx.cell(3, 3).unwrap(), "-[23]");
        let rho = [q(1), q(2), q(3)];
        assert!(elliptic_bracket_matrix(&rho).unwrap().is_symmetric());
        assert!(elliptic_bracket_matrix(&[q(1), q(1), q(3)]).is_err());
    }

    #[test]
    fn elliptic_planted() {
        let f = PrimeField::default_field();
        let mut rng = job_rng(9, 0);
        for _ in 0..10 {
            let (a, b, rho) = planted_elliptic(&f, &mut rng).unwrap();
            assert!(elliptic_resultant(&a, &b, &rho).unwrap().is_zero());
            let inst = elliptic_instance(&a, &b, &rho).unwrap();
            assert!(hyperelliptic_bezout_det(&inst).unwrap().is_zero());
        }
    }
}
