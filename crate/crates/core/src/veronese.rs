//! Closed formulas for Ulrich sheaves of Veronese embeddings.
//!
//! For a sheaf `F` on `P^k` that is Ulrich for the `d`-uple embedding,
//! `χ(F(e)) = h⁰(F) · binom(e/d + k, k)`. The rest of the module derives
//! rank bounds from that polynomial, computes the rank of the homogeneous
//! Ulrich bundle by the hook-content formula, and reads Tate betti tables.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fixtures::{load_betti, parse_cell, BettiFixture};
use crate::ring::{Rational, Ring};

/// `h0 · ∏_{i=1}^{k} (e/d + i) / k!`, exactly.
pub fn ulrich_chi(h0: i64, k: u32, d: i64, e: i64) -> Result<Rational> {
    if d < 1 {
        return Err(Error::InvalidInput(format!("d must be positive, got {d}")));
    }
    let ed = Rational::new(BigInt::from(e), BigInt::from(d));
    let mut acc = Rational::from_i64(h0);
    for i in 1..=k as i64 {
        acc = acc * (ed.clone() + Rational::from_i64(i)) / Rational::from_i64(i);
    }
    Ok(acc)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Exponent of the prime `p` in `k!` (Legendre).
fn legendre(k: u64, p: u64) -> u32 {
    let mut e = 0;
    let mut q = k / p;
    while q > 0 {
        e += q as u32;
        q /= p;
    }
    e
}

/// `∏_{p | d} p^{v_p(k!)}`: every Ulrich sheaf for the `d`-uple embedding of
/// `P^k` has rank divisible by this number.
pub fn min_rank_divisor(k: u64, d: u64) -> Result<BigUint> {
    if k < 1 || d < 1 {
        return Err(Error::InvalidInput(format!("need k, d >= 1, got k = {k}, d = {d}")));
    }
    Ok(prime_factors(d)
        .into_iter()
        .map(|p| BigUint::from(p).pow(legendre(k, p)))
        .product())
}

/// A weakly decreasing sequence of non-negative integers. Trailing zeros are kept.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&x| x > 0).count()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Column lengths `λ'_j` for `j = 1 ..= λ_1`.
    pub fn conjugate(&self) -> Vec<u64> {
        let width = self.parts.first().copied().unwrap_or(0);
        (1..=width)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count() as u64)
            .collect()
    }

    /// Boxes `(row, col)`, 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i as u64 + 1, j)))
    }

    /// Hook length of the box `(row, col)`.
    pub fn hook(&self, row: u64, col: u64) -> u64 {
        let conj = self.conjugate();
        self.parts[row as usize - 1] - col + conj[col as usize - 1] - row + 1
    }

    /// The largest hook length `h(1, 1)`, or 0 for the empty partition.
    pub fn largest_hook(&self) -> u64 {
        if self.length() == 0 {
            0
        } else {
            self.hook(1, 1)
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Sign convention for the content of a box in the hook-content product.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Content {
    /// `n + col - row`: the dimension of the Schur functor `S_λ` on `K^n`.
    Standard,
    /// `n + row - col`: the transposed convention.
    Transposed,
}

/// `∏_{boxes} (n + content) / hook` with the standard content.
pub fn schur_rank(lambda: &Partition, n: u64) -> Result<BigUint> {
    schur_rank_with(lambda, n, Content::Standard)
}

/// Hook-content product under a chosen convention; errors if the product
/// is negative or not an integer.
pub fn schur_rank_with(lambda: &Partition, n: u64, content: Content) -> Result<BigUint> {
    let mut acc = Rational::one();
    for (row, col) in lambda.boxes() {
        let (i, j) = (row as i64, col as i64);
        let num = match content {
            Content::Standard => n as i64 + j - i,
            Content::Transposed => n as i64 + i - j,
        };
        acc *= Rational::new(BigInt::from(num), BigInt::from(lambda.hook(row, col)));
    }
    if !acc.is_integer() {
        return Err(Error::Invariant(format!("hook-content product for {lambda} is {acc}, not an integer")));
    }
    acc.to_integer()
        .to_biguint()
        .ok_or_else(|| Error::Invariant(format!("hook-content product for {lambda} is negative")))
}

/// `((d-1)(n-1), (d-1)(n-2), …, (d-1), 0)`.
pub fn ulrich_partition(n: u64, d: u64) -> Result<Partition> {
    if n < 1 || d < 1 {
        return Err(Error::InvalidInput(format!("need n, d >= 1, got n = {n}, d = {d}")));
    }
    Partition::new((0..n).rev().map(|i| (d - 1) * i).collect())
}

/// Twists `j` with `(k-2)d - k ≤ j ≤ d - 1`, or `None` when that interval is empty.
pub fn weakly_ulrich_line_range(k: i64, d: i64) -> Result<Option<RangeInclusive<i64>>> {
    if k < 1 || d < 1 {
        return Err(Error::InvalidInput(format!("need k, d >= 1, got k = {k}, d = {d}")));
    }
    let (lo, hi) = ((k - 2) * d - k, d - 1);
    Ok((lo <= hi).then_some(lo..=hi))
}

/// `c₂ = (d² - 1)/3` of a rank 2 Ulrich bundle for the `d`-uple embedding of `P³`.
pub fn instanton_c2(d: u64) -> Result<u64> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("need d >= 2, got {d}")));
    }
    if d.is_multiple_of(3) {
        return Err(Error::InvalidInput(format!(
            "no rank 2 Ulrich bundle exists for d = {d}: 3 divides every rank"
        )));
    }
    Ok((d * d - 1) / 3)
}

/// A Tate betti table. Row 0 is `h^{ambient_dim}`, the last row is `h⁰`;
/// column `c` of the row for `h^i` holds `h^i(F(c + first_column - i))`.
/// `None` marks an entry the source leaves unspecified.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BettiTable {
    pub ambient_dim: usize,
    pub first_column: i64,
    pub rows: Vec<Vec<Option<u64>>>,
}

impl BettiTable {
    pub fn from_fixture(fx: &BettiFixture) -> Result<Self> {
        let rows = fx
            .rows
            .iter()
            .map(|r| r.iter().map(|c| parse_cell(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { ambient_dim: fx.ambient_dim, first_column: fx.first_column, rows })
    }

    pub fn load(id: &str) -> Result<Self> {
        Self::from_fixture(&load_betti(id)?)
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// `h^i(F(t))`: `None` if unknown or outside the window.
    pub fn h(&self, i: usize, t: i64) -> Option<u64> {
        let row = self.rows.get(self.ambient_dim.checked_sub(i)?)?;
        let col = t + i as i64 - self.first_column;
        usize::try_from(col).ok().and_then(|c| row.get(c).copied().flatten())
    }

    /// `Σ (-1)^i h^i(F(t))` when every term is known.
    pub fn euler_characteristic(&self, t: i64) -> Option<i64> {
        (0..=self.ambient_dim).try_fold(0i64, |acc, i| {
            let h = self.h(i, t)? as i64;
            Some(if i % 2 == 0 { acc + h } else { acc - h })
        })
    }

    /// Twists whose Euler characteristic is fully determined by the table.
    pub fn known_twists(&self) -> Vec<i64> {
        let lo = self.first_column - self.ambient_dim as i64;
        let hi = self.first_column + self.width() as i64;
        (lo..=hi).filter(|&t| self.euler_characteristic(t).is_some()).collect()
    }

    /// Compares the table against `chi` at every determined twist and returns
    /// how many twists were checked.
    pub fn check_chi(&self, chi: impl Fn(i64) -> Rational) -> Result<usize> {
        let twists = self.known_twists();
        for &t in &twists {
            let got = self.euler_characteristic(t).expect("known twist");
            let want = chi(t);
            if Rational::from_i64(got) != want {
                return Err(Error::Invariant(format!("chi(F({t})) = {got} in the table, {want} expected")));
            }
        }
        Ok(twists.len())
    }

    pub fn render_text(&self) -> String {
        let cell = |c: &Option<u64>| match c {
            Some(0) => ".".to_string(),
            Some(n) => n.to_string(),
            None => "...".to_string(),
        };
        let w = self.rows.iter().flatten().map(|c| cell(c).len()).max().unwrap_or(1);
        let mut out = String::new();
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|c| format!("{:>w$}", cell(c))).collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// The table of a rank 2 bundle on `P²` that is Ulrich for the `d`-uple
/// embedding, over twists `-2d - 2 ..= 0` of the three strands.
pub fn rank2_p2_tate_table(d: u64) -> Result<BettiTable> {
    if d < 2 {
        return Err(Error::InvalidInput(format!("need d >= 2, got {d}")));
    }
    let d = d as i64;
    let width = (2 * d + 1) as usize;
    let mut rows = vec![vec![Some(0); width]; 3];
    let first_column = -2 * d;
    let mut put = |i: usize, e: i64, v: i64| {
        let col = (e + i as i64 - first_column) as usize;
        rows[2 - i][col] = Some(v as u64);
    };
    for j in 1..=2 {
        put(2, -2 * d - j, j * (d + j));
    }
    for j in 1..d {
        put(1, -2 * d + j, j * (d - j));
    }
    for i in 1..=d {
        put(0, i - d, i * (d + i));
    }
    Ok(BettiTable { ambient_dim: 2, first_column, rows })
}

/// `χ(F(t))` of the Horrocks–Mumford bundle, `((t+5)² - 1)((t+5)² - 24)/12`.
pub fn horrocks_mumford_chi(t: i64) -> Rational {
    let s = Rational::from_i64((t + 5) * (t + 5));
    (s.clone() - Rational::from_i64(1)) * (s - Rational::from_i64(24)) / Rational::from_i64(12)
}

/// Integer value of an exact rational, if it is one.
pub fn as_integer(q: &Rational) -> Option<i64> {
    q.is_integer().then(|| q.to_integer().to_i64()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn chi_examples() {
        assert_eq!(ulrich_chi(7, 3, 2, 0).unwrap(), q(7));
        assert!(ulrich_chi(7, 3, 2, -2).unwrap().is_zero());
        for d in 1..6 {
            for e in -3 * d..=d {
                assert_eq!(ulrich_chi(2 * d * d, 2, d, e).unwrap(), q((e + d) * (e + 2 * d)));
            }
        }
        assert!(ulrich_chi(1, 1, 0, 0).is_err());
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(min_rank_divisor(3, 3).unwrap(), BigUint::from(3u32));
        assert_eq!(min_rank_divisor(2, 5).unwrap(), BigUint::from(1u32));
        for k in 1..=6u64 {
            let kf: u64 = (1..=k).product();
            assert_eq!(min_rank_divisor(k, kf).unwrap(), BigUint::from(kf));
        }
    }

    #[test]
    fn partitions_and_ranks() {
        assert!(Partition::new(vec![1, 2]).is_err());
        let l = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(l.conjugate(), vec![2, 1, 1]);
        assert_eq!(l.hook(1, 1), 4);
        assert_eq!(schur_rank(&Partition::new(vec![1]).unwrap(), 5).unwrap(), BigUint::from(5u32));
        assert_eq!(ulrich_partition(2, 3).unwrap().parts(), &[2, 0]);
        assert_eq!(ulrich_partition(3, 2).unwrap().parts(), &[2, 1, 0]);
        assert_eq!(ulrich_partition(1, 4).unwrap().length(), 0);
        for d in 1..=6u64 {
            let sym = Partition::new(vec![d - 1]).unwrap();
            assert_eq!(schur_rank(&sym, 2).unwrap(), BigUint::from(d));
        }
        // the transposed content kills Sym^{d-1} of a rank 2 space for d >= 4
        let sym = Partition::new(vec![3]).unwrap();
        assert!(schur_rank_with(&sym, 2, Content::Transposed).unwrap().is_zero());
    }

    #[test]
    fn line_range_examples() {
        assert_eq!(weakly_ulrich_line_range(4, 4).unwrap(), None);
        assert_eq!(weakly_ulrich_line_range(5, 2).unwrap(), Some(1..=1));
        assert_eq!(weakly_ulrich_line_range(3, 10).unwrap(), Some(7..=9));
    }

    #[test]
    fn instanton_examples() {
        assert_eq!(instanton_c2(2).unwrap(), 1);
        assert_eq!(instanton_c2(4).unwrap(), 5);
        assert!(instanton_c2(3).is_err());
        assert!(instanton_c2(1).is_err());
    }

    #[test]
    fn rank2_table() {
        for d in 2..=7u64 {
            let t = rank2_p2_tate_table(d).unwrap();
            let di = d as i64;
            assert_eq!(t.h(0, 0), Some(2 * d * d));
            assert_eq!(t.rows[1].iter().filter(|c| **c != Some(0)).count(), (d - 1) as usize);
            let n = t.check_chi(|e| ulrich_chi(2 * di * di, 2, di, e).unwrap()).unwrap();
            assert_eq!(n, (2 * d - 1) as usize);
        }
        let t = rank2_p2_tate_table(3).unwrap();
        assert_eq!(t.render_text(), "10  4  .  .  .  .  .\n .  .  2  2  .  .  .\n .  .  .  .  4 10 18\n");
    }

    #[test]
    fn fixture_tables() {
        let hm = BettiTable::load("hm-betti").unwrap();
        assert_eq!(hm.check_chi(horrocks_mumford_chi).unwrap(), 9);
        let nc = BettiTable::load("nullcorr-betti").unwrap();
        let n = nc.check_chi(|t| ulrich_chi(16, 3, 2, t).unwrap()).unwrap();
        assert_eq!(n, 7);
    }
}
