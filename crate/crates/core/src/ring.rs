//! Coefficient rings.
//!
//! Everything in the crate is generic over [`Ring`], a thin extension of the
//! `num-traits` identities with exact division. Base scalars additionally
//! implement [`Field`] and [`Scalar`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    /// Image of an integer under the canonical map `Z -> R`.
    fn from_i64(n: i64) -> Self;

    /// Returns `q` with `q * other == self` when such a `q` exists and the ring
    /// can find it. `None` for division by zero or a non-exact quotient.
    fn exact_div(&self, other: &Self) -> Option<Self>;

    /// Whether [`Ring::exact_div`] is a complete algorithm for exact quotients,
    /// so that fraction-free elimination is available.
    fn has_exact_division() -> bool {
        true
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

/// Base scalars: exact rationals or prime-field residues.
pub trait Scalar: Field {
    /// 0 for the rationals, `p` for a bound prime-field element.
    fn characteristic(&self) -> u64;

    /// Exact string form: `"p/q"` (or `"p"`) for rationals, `"r mod p"` for residues.
    fn to_exact_string(&self) -> String {
        self.to_string()
    }
}

/// Exact rationals with arbitrary-precision parts.
pub type Rational = BigRational;

impl Ring for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self / other)
        }
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for BigRational {
    fn characteristic(&self) -> u64 {
        0
    }
}

/// Parses `"p/q"`, `"p"` or a decimal-free integer into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parsed: std::result::Result<BigRational, _> = t.parse();
    match parsed {
        Ok(q) => Ok(q),
        Err(_) => Err(Error::Parse(format!("not an exact rational: {s:?}"))),
    }
}

/// Integers, exact. Used for symbolic coefficients where no division occurs.
impl Ring for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, other);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// The default modulus, 2^31 - 1.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// A prime field `Z/p`, the factory for [`Fp`] elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p > (1u64 << 62) {
            return Err(Error::InvalidInput(format!("modulus {p} too large (max 2^62)")));
        }
        if !is_prime_u64(p) {
            return Err(Error::InvalidInput(format!("modulus {p} is not prime")));
        }
        Ok(Self { p })
    }

    /// `Z/(2^31 - 1)`.
    pub fn default_field() -> Self {
        Self { p: DEFAULT_PRIME }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, n: i64) -> Fp {
        Fp {
            v: (n as i128).rem_euclid(self.p as i128) as u64,
            p: self.p,
        }
    }

    pub fn zero(&self) -> Fp {
        self.elem(0)
    }

    pub fn one(&self) -> Fp {
        self.elem(1)
    }

    /// Reduces a rational; fails when the denominator vanishes mod p.
    pub fn reduce(&self, q: &Rational) -> Result<Fp> {
        let p = BigInt::from(self.p);
        let num = (q.numer() % &p + &p) % &p;
        let den = (q.denom() % &p + &p) % &p;
        let den = self.elem_big(&den);
        let inv = den
            .inv()
            .ok_or_else(|| Error::BadReduction(format!("denominator of {q} vanishes mod {}", self.p)))?;
        Ok(self.elem_big(&num) * inv)
    }

    fn elem_big(&self, n: &BigInt) -> Fp {
        let p = BigInt::from(self.p);
        let r = ((n % &p) + &p) % &p;
        let v: u64 = r.try_into().expect("residue fits in u64");
        Fp { v, p: self.p }
    }

    /// Square root of `a` in the field (Tonelli-Shanks), if one exists.
    pub fn sqrt(&self, a: Fp) -> Option<Fp> {
        let a = a.bind(self.p);
        if a.v == 0 {
            return Some(a);
        }
        let p = self.p;
        if p == 2 {
            return Some(a);
        }
        if pow_mod(a.v, (p - 1) / 2, p) != 1 {
            return None;
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let mut z = 2u64;
        while pow_mod(z, (p - 1) / 2, p) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(a.v, q, p);
        let mut r = pow_mod(a.v, q.div_ceil(2), p);
        while t != 1 {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mul_mod(t2, t2, p);
                i += 1;
            }
            let b = pow_mod(c, 1u64 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        Some(Fp { v: r, p })
    }
}

/// An element of `Z/p`.
///
/// Elements carry their modulus. Values produced by [`Zero::zero`],
/// [`One::one`] and [`Ring::from_i64`] have no modulus yet (`p == 0`, value
/// held as a signed integer) and adopt the modulus of the first bound operand
/// they meet.
#[derive(Clone, Copy)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    /// Residue in `[0, p)`; for an unbound integer, the integer itself reinterpreted.
    pub fn residue(&self) -> u64 {
        self.v
    }

    /// Modulus, or 0 for an unbound integer constant.
    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn unbound(n: i64) -> Self {
        Fp { v: n as u64, p: 0 }
    }

    fn bind(self, p: u64) -> Self {
        if self.p == p || p == 0 {
            return self;
        }
        assert_eq!(self.p, 0, "mixing residues modulo {} and {}", self.p, p);
        Fp {
            v: ((self.v as i64) as i128).rem_euclid(p as i128) as u64,
            p,
        }
    }

    fn common(a: Self, b: Self) -> (Self, Self, u64) {
        let p = if a.p != 0 { a.p } else { b.p };
        if a.p != 0 && b.p != 0 {
            assert_eq!(a.p, b.p, "mixing residues modulo {} and {}", a.p, b.p);
        }
        (a.bind(p), b.bind(p), p)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p == 0 {
            write!(f, "{}", self.v as i64)
        } else {
            write!(f, "{} mod {}", self.v, self.p)
        }
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = Fp::common(*self, *other);
        a.v == b.v
    }
}

impl Eq for Fp {}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::common(self, rhs);
        if p == 0 {
            let s = (a.v as i64).checked_add(b.v as i64).expect("unbound integer overflow");
            return Fp::unbound(s);
        }
        let s = a.v + b.v;
        Fp { v: if s >= p { s - p } else { s }, p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.p == 0 {
            return Fp::unbound((self.v as i64).checked_neg().expect("unbound integer overflow"));
        }
        Fp {
            v: if self.v == 0 { 0 } else { self.p - self.v },
            p: self.p,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let (a, b, p) = Fp::common(self, rhs);
        if p == 0 {
            let s = (a.v as i64).checked_mul(b.v as i64).expect("unbound integer overflow");
            return Fp::unbound(s);
        }
        Fp { v: mul_mod(a.v, b.v, p), p }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp::unbound(0)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp::unbound(1)
    }
}

impl Ring for Fp {
    fn from_i64(n: i64) -> Self {
        Fp::unbound(n)
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        if self.p == 0 && other.p == 0 {
            let (a, b) = (self.v as i64, other.v as i64);
            return if b != 0 && a % b == 0 { Some(Fp::unbound(a / b)) } else { None };
        }
        Field::div(self, other)
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        if self.p == 0 {
            return match self.v as i64 {
                1 => Some(*self),
                -1 => Some(*self),
                _ => None,
            };
        }
        if self.v == 0 {
            return None;
        }
        Some(Fp { v: pow_mod(self.v, self.p - 2, self.p), p: self.p })
    }

    fn div(&self, other: &Self) -> Option<Self> {
        let (a, b, p) = Fp::common(*self, *other);
        if p == 0 {
            return a.exact_div(&b);
        }
        b.inv().map(|i| a * i)
    }
}

impl Scalar for Fp {
    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// Parses `"r mod p"`; a bare integer is reduced into `field`.
pub fn parse_fp(s: &str, field: PrimeField) -> Result<Fp> {
    let t = s.trim();
    if let Some((r, p)) = t.split_once("mod") {
        let p: u64 = p
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus in {s:?}")))?;
        let f = PrimeField::new(p)?;
        if p != field.modulus() {
            return Err(Error::InvalidInput(format!(
                "residue modulo {p} given where modulus {} is in use",
                field.modulus()
            )));
        }
        let r: i64 = r.trim().parse().map_err(|_| Error::Parse(format!("bad residue in {s:?}")))?;
        return Ok(f.elem(r));
    }
    let q = parse_rational(t)?;
    field.reduce(&q)
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(DEFAULT_PRIME));
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(10007));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561));
        assert!(!is_prime_u64(DEFAULT_PRIME - 2));
        assert!(PrimeField::new(15).is_err());
    }

    #[test]
    fn unbound_constants_adopt_modulus() {
        let f = PrimeField::new(7).unwrap();
        let x = f.elem(5);
        assert_eq!(x + Fp::one(), f.elem(6));
        assert_eq!(x * Fp::from_i64(3), f.elem(1));
        assert_eq!(Fp::from_i64(-1), f.elem(6));
        assert_eq!((x + Fp::zero()).modulus(), 7);
    }

    #[test]
    fn inverse_and_sqrt() {
        let f = PrimeField::new(10007).unwrap();
        for n in 1..50 {
            let x = f.elem(n);
            assert_eq!(x * x.inv().unwrap(), f.one());
            let sq = x * x;
            let r = f.sqrt(sq).unwrap();
            assert_eq!(r * r, sq);
        }
        // 10007 = 3 mod 4, so -1 is a non-residue
        assert!(f.sqrt(f.elem(-1)).is_none());
        let big = PrimeField::default_field();
        let r = big.sqrt(big.elem(2)).unwrap();
        assert_eq!(r * r, big.elem(2));
    }

    #[test]
    fn scalar_strings() {
        let q = parse_rational("-6/4").unwrap();
        assert_eq!(q.to_exact_string(), "-3/2");
        assert_eq!(parse_rational("5").unwrap().to_exact_string(), "5");
        assert!(parse_rational("1.5").is_err());
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.elem(-1).to_exact_string(), "6 mod 7");
        assert_eq!(parse_fp("6 mod 7", f).unwrap(), f.elem(6));
        assert_eq!(parse_fp("1/2", f).unwrap(), f.elem(4));
        assert!(f.reduce(&parse_rational("1/7").unwrap()).is_err());
    }
}
