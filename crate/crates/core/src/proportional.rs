//! Ratio-constancy checks for formulas that agree only up to a scalar.

use crate::error::{Error, Result};
use crate::ring::Field;

/// Tracks the ratio `lhs / rhs` across evaluation points.
///
/// The ratio is fixed at the first point where both sides are nonzero; every
/// later point must reproduce it, and a point where exactly one side vanishes
/// is a mismatch.
#[derive(Clone, Debug)]
pub struct RatioTracker<S> {
    ratio: Option<S>,
    points: usize,
    mismatches: usize,
    both_zero: usize,
}

impl<S: Field> Default for RatioTracker<S> {
    fn default() -> Self {
        Self { ratio: None, points: 0, mismatches: 0, both_zero: 0 }
    }
}

impl<S: Field> RatioTracker<S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one point; returns whether it agrees with the ratio so far.
    pub fn observe(&mut self, lhs: &S, rhs: &S) -> bool {
        self.points += 1;
        let ok = match (lhs.is_zero(), rhs.is_zero()) {
            (true, true) => {
                self.both_zero += 1;
                true
            }
            (false, false) => {
                let r = lhs.div(rhs).expect("nonzero denominator");
                match &self.ratio {
                    None => {
                        self.ratio = Some(r);
                        true
                    }
                    Some(prev) => *prev == r,
                }
            }
            _ => false,
        };
        if !ok {
            self.mismatches += 1;
        }
        ok
    }

    pub fn ratio(&self) -> Option<&S> {
        self.ratio.as_ref()
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn mismatches(&self) -> usize {
        self.mismatches
    }

    pub fn both_zero(&self) -> usize {
        self.both_zero
    }

    pub fn is_consistent(&self) -> bool {
        self.mismatches == 0
    }

    /// Errors unless every point agreed and at least one fixed the ratio.
    pub fn finish(&self, what: &str) -> Result<S> {
        if self.mismatches > 0 {
            return Err(Error::Invariant(format!(
                "{what}: {} of {} points disagree with the measured ratio",
                self.mismatches, self.points
            )));
        }
        self.ratio
            .clone()
            .ok_or_else(|| Error::Invariant(format!("{what}: no point with both sides nonzero")))
    }
}
