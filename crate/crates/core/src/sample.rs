//! Reproducible randomness and scalar samplers.
//!
//! Every random choice descends from one 64-bit seed. A job with index `i`
//! draws from its own ChaCha stream `i`, so results do not depend on how jobs
//! are scheduled across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring::{Fp, PrimeField, Rational, Ring, Scalar};

/// Generator for job `stream` under `seed`.
pub fn job_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// A source of random scalars together with integer embedding.
pub trait ScalarSource<S: Scalar>: Sync {
    fn sample<G: Rng>(&self, rng: &mut G) -> S;

    fn elem(&self, n: i64) -> S;

    fn sample_nonzero<G: Rng>(&self, rng: &mut G) -> S {
        loop {
            let x = self.sample(rng);
            if !x.is_zero() {
                return x;
            }
        }
    }

    fn sample_vec<G: Rng>(&self, len: usize, rng: &mut G) -> Vec<S> {
        (0..len).map(|_| self.sample(rng)).collect()
    }
}

impl ScalarSource<Fp> for PrimeField {
    fn sample<G: Rng>(&self, rng: &mut G) -> Fp {
        self.elem(rng.gen_range(0..self.modulus()) as i64)
    }

    fn elem(&self, n: i64) -> Fp {
        PrimeField::elem(self, n)
    }
}

/// Integers drawn uniformly from `[-bound, bound]`, as rationals.
#[derive(Clone, Copy, Debug)]
pub struct SmallRationals {
    pub bound: i64,
}

impl ScalarSource<Rational> for SmallRationals {
    fn sample<G: Rng>(&self, rng: &mut G) -> Rational {
        Rational::from_i64(rng.gen_range(-self.bound..=self.bound))
    }

    fn elem(&self, n: i64) -> Rational {
        Rational::from_i64(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<u64> = (0..4).map(|_| job_rng(7, 3).gen()).collect();
        let b: Vec<u64> = (0..4).map(|_| job_rng(7, 3).gen()).collect();
        assert_eq!(a, b);
        assert_ne!(job_rng(7, 3).gen::<u64>(), job_rng(7, 4).gen::<u64>());
    }

    #[test]
    fn samplers_stay_in_range() {
        let mut rng = job_rng(0, 0);
        let s = SmallRationals { bound: 3 };
        for _ in 0..100 {
            let x = s.sample(&mut rng);
            assert!(x >= Rational::from_i64(-3) && x <= Rational::from_i64(3));
        }
        let f = PrimeField::new(101).unwrap();
        assert_eq!(f.sample(&mut rng).modulus(), 101);
    }
}
