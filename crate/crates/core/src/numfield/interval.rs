//! Exact rational interval arithmetic used for sign determination under
//! the real embedding. Intervals carry exact `BigRational` endpoints, so
//! enclosures are never subject to rounding.

use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(v: BigRational) -> Self {
        Interval {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if c < &lo {
                lo = c.clone();
            }
            if c > &hi {
                hi = c.clone();
            }
        }
        Interval { lo, hi }
    }
}

/// Evaluates a polynomial (ascending coefficients) over an interval by
/// Horner's rule. The result encloses `p(x)` for every `x` in the input.
pub fn eval_poly(coeffs: &[BigRational], x: &Interval) -> Interval {
    let mut acc = Interval::point(BigRational::zero());
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(&Interval::point(c.clone()));
    }
    acc
}
