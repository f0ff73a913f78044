//! Exact arithmetic in a fixed real algebraic number field `Q(a)`.
//!
//! A [`FieldSpec`] fixes the field once: the degree `d`, the monic minimal
//! polynomial `A(X)` of the generator `a`, and a rational interval that
//! isolates one real root of `A`. Every [`FieldElement`] is a coordinate
//! vector `(x_0, …, x_{d-1})` representing `x_0 + x_1 a + … + x_{d-1}
//! a^{d-1}` with arbitrary-precision rational coordinates.
//!
//! Because `A` is minimal, two elements are equal exactly when their
//! coordinate vectors are equal, so equality and the zero test never touch
//! the embedding. Order comparisons (`sign`, `floor`, `approx`) go through
//! the real embedding: the isolating interval is refined by bisection and
//! the representing polynomial is evaluated with exact interval arithmetic
//! until the sign is unambiguous.
//!
//! Irreducibility of `A` is *not* verified up front; it is the caller's
//! contract. A reducible polynomial is detected lazily — by [`FieldElement::inv`]
//! when the extended Euclidean algorithm finds a nontrivial factor, or by
//! the bisection when a midpoint turns out to be a rational root — and
//! reported as [`NumFieldError::ReducibleMinimalPolynomial`]. Uniqueness of
//! the root inside the isolating interval is likewise the caller's
//! responsibility; only the endpoint sign change is validated.

mod interval;
mod poly;
pub mod rational;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use rational::{format_rational, parse_rational};

use interval::{eval_poly, Interval};

/// Hard cap on bisection steps; legitimate inputs converge in a handful.
/// Hitting the cap means the "minimal" polynomial has a root of its own
/// inside the isolating interval, i.e. it is reducible.
const MAX_REFINE: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NumFieldError {
    #[error("invalid rational literal {0:?}")]
    BadRationalLiteral(String),
    #[error("minimal polynomial must be monic")]
    NotMonic,
    #[error("field degree must be at least 1")]
    BadDegree,
    #[error("root interval must satisfy lo < hi with a sign change of the minimal polynomial")]
    NoSignChange,
    #[error("element must have exactly {expected} coordinates, got {got}")]
    WrongCoordinateCount { expected: usize, got: usize },
    #[error("division by zero field element")]
    DivisionByZero,
    #[error("minimal polynomial is reducible")]
    ReducibleMinimalPolynomial,
}

#[derive(Debug)]
struct SpecInner {
    degree: usize,
    /// Monic, ascending coefficients, length `degree + 1`.
    minpoly: Vec<BigRational>,
    root_lo: BigRational,
    root_hi: BigRational,
    /// Sign of `A(root_lo)`, fixed at construction.
    sign_lo: i8,
}

/// A real algebraic number field `Q(a)`, cheap to clone and share.
#[derive(Debug, Clone)]
pub struct FieldSpec(Arc<SpecInner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.degree == other.0.degree
                && self.0.minpoly == other.0.minpoly
                && self.0.root_lo == other.0.root_lo
                && self.0.root_hi == other.0.root_hi)
    }
}

impl Eq for FieldSpec {}

impl FieldSpec {
    /// Builds a field from the monic minimal polynomial of `a` (ascending
    /// coefficients) and a rational interval isolating one real root.
    pub fn new(
        minpoly: Vec<BigRational>,
        root_lo: BigRational,
        root_hi: BigRational,
    ) -> Result<FieldSpec, NumFieldError> {
        if minpoly.len() < 2 {
            return Err(NumFieldError::BadDegree);
        }
        if minpoly.last().map(One::is_one) != Some(true) {
            return Err(NumFieldError::NotMonic);
        }
        let degree = minpoly.len() - 1;
        if root_lo >= root_hi {
            return Err(NumFieldError::NoSignChange);
        }
        let at_lo = poly::eval(&minpoly, &root_lo);
        let at_hi = poly::eval(&minpoly, &root_hi);
        if at_lo.is_zero() || at_hi.is_zero() || at_lo.is_positive() == at_hi.is_positive() {
            return Err(NumFieldError::NoSignChange);
        }
        let sign_lo = if at_lo.is_positive() { 1 } else { -1 };
        Ok(FieldSpec(Arc::new(SpecInner {
            degree,
            minpoly,
            root_lo,
            root_hi,
            sign_lo,
        })))
    }

    /// The rational field `Q` itself, as the degree-1 case `A(X) = X`.
    pub fn rationals() -> FieldSpec {
        FieldSpec::new(
            vec![BigRational::zero(), BigRational::one()],
            BigRational::from_integer((-1).into()),
            BigRational::one(),
        )
        .expect("Q spec is valid")
    }

    /// `Q(sqrt(n))` for a positive non-square integer `n`, with the
    /// positive root isolated in `(0, n)`.
    pub fn real_quadratic(n: i64) -> FieldSpec {
        assert!(n > 1, "real_quadratic needs n > 1");
        FieldSpec::new(
            vec![
                BigRational::from_integer((-n).into()),
                BigRational::zero(),
                BigRational::one(),
            ],
            BigRational::zero(),
            BigRational::from_integer(n.into()),
        )
        .expect("quadratic spec is valid")
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn minpoly(&self) -> &[BigRational] {
        &self.0.minpoly
    }

    pub fn root_interval(&self) -> (&BigRational, &BigRational) {
        (&self.0.root_lo, &self.0.root_hi)
    }

    /// An element from its coordinate vector `(x_0, …, x_{d-1})`.
    pub fn element(&self, coords: Vec<BigRational>) -> Result<FieldElement, NumFieldError> {
        if coords.len() != self.0.degree {
            return Err(NumFieldError::WrongCoordinateCount {
                expected: self.0.degree,
                got: coords.len(),
            });
        }
        Ok(FieldElement {
            spec: self.clone(),
            coords,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            spec: self.clone(),
            coords: vec![BigRational::zero(); self.0.degree],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, q: BigRational) -> FieldElement {
        let mut coords = vec![BigRational::zero(); self.0.degree];
        coords[0] = q;
        FieldElement {
            spec: self.clone(),
            coords,
        }
    }

    pub fn from_integer(&self, n: i64) -> FieldElement {
        self.from_rational(BigRational::from_integer(n.into()))
    }

    /// The generator `a` (for degree 1 this is the rational root of `A`).
    pub fn generator(&self) -> FieldElement {
        if self.0.degree == 1 {
            // A(X) = X + c0, so a = -c0.
            return self.from_rational(-self.0.minpoly[0].clone());
        }
        let mut coords = vec![BigRational::zero(); self.0.degree];
        coords[1] = BigRational::one();
        FieldElement {
            spec: self.clone(),
            coords,
        }
    }

    fn root_window(&self) -> RootWindow {
        RootWindow {
            lo: self.0.root_lo.clone(),
            hi: self.0.root_hi.clone(),
            sign_lo: self.0.sign_lo,
        }
    }
}

/// A private, per-call bisection window around the root `a`.
struct RootWindow {
    lo: BigRational,
    hi: BigRational,
    sign_lo: i8,
}

impl RootWindow {
    fn interval(&self) -> Interval {
        Interval::new(self.lo.clone(), self.hi.clone())
    }

    /// Halves the window, keeping the half where `A` changes sign.
    fn refine(&mut self, spec: &FieldSpec) -> Result<(), NumFieldError> {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        let at_mid = poly::eval(spec.minpoly(), &mid);
        if at_mid.is_zero() {
            // A rational root inside the window contradicts minimality
            // (degree 1 never refines: all its elements are rational).
            return Err(NumFieldError::ReducibleMinimalPolynomial);
        }
        let sign_mid = if at_mid.is_positive() { 1 } else { -1 };
        if sign_mid == self.sign_lo {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
        Ok(())
    }
}

/// An element of `Q(a)`: `d` rational coordinates plus its field handle.
#[derive(Debug, Clone)]
pub struct FieldElement {
    spec: FieldSpec,
    coords: Vec<BigRational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec && self.coords == other.coords
    }
}

impl Eq for FieldElement {}

impl FieldElement {
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// True iff every coordinate above `x_0` vanishes. Exact: no interval
    /// refinement is ever used for this test.
    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<&BigRational> {
        self.is_rational().then(|| &self.coords[0])
    }

    /// True iff the element is a rational integer.
    pub fn is_integer(&self) -> bool {
        self.to_rational().is_some_and(|q| q.denom().is_one())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|q| q.denom().is_one())
            .map(|q| q.numer().clone())
    }

    fn assert_same_spec(&self, other: &FieldElement) {
        assert!(
            self.spec == other.spec,
            "field spec mismatch: operands belong to different fields"
        );
    }

    pub fn mul_rational(&self, q: &BigRational) -> FieldElement {
        FieldElement {
            spec: self.spec.clone(),
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn div_rational(&self, q: &BigRational) -> FieldElement {
        assert!(!q.is_zero(), "division by zero rational");
        FieldElement {
            spec: self.spec.clone(),
            coords: self.coords.iter().map(|c| c / q).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// representing polynomial and `A(X)`; quadratic fields use the closed
    /// form from the norm.
    pub fn inv(&self) -> Result<FieldElement, NumFieldError> {
        if self.is_zero() {
            return Err(NumFieldError::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(self.spec.from_rational(q.recip()));
        }
        if self.spec.degree() == 2 {
            // A = X^2 + pX + q; solving (x0 + x1 a)(c + d a) = 1 gives
            // c = (x0 - p x1)/N, d = -x1/N with N = x0^2 - p x0 x1 + q x1^2.
            let p = &self.spec.0.minpoly[1];
            let q = &self.spec.0.minpoly[0];
            let (x0, x1) = (&self.coords[0], &self.coords[1]);
            let norm = x0 * x0 - p * (x0 * x1) + q * (x1 * x1);
            if norm.is_zero() {
                // A nonzero element of zero norm means A splits over Q.
                return Err(NumFieldError::ReducibleMinimalPolynomial);
            }
            return self
                .spec
                .element(vec![(x0 - p * x1) / &norm, -x1 / norm]);
        }
        let (g, u) = poly::ext_gcd_mod(&self.coords, self.spec.minpoly());
        if poly::degree(&g) != Some(0) {
            // A nonzero representative sharing a factor with A means A is
            // not minimal after all.
            return Err(NumFieldError::ReducibleMinimalPolynomial);
        }
        let mut coords = poly::rem(&u, self.spec.minpoly());
        coords.resize(self.spec.degree(), BigRational::zero());
        self.spec.element(coords)
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement, NumFieldError> {
        self.assert_same_spec(other);
        Ok(self * &other.inv()?)
    }

    /// The sign of the element under the real embedding: `0` exactly when
    /// the coordinate vector is zero, otherwise `±1` determined by interval
    /// refinement. Terminates for every element of a genuine field.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if let Some(q) = self.to_rational() {
            return if q.is_positive() { 1 } else { -1 };
        }
        let mut window = self.spec.root_window();
        for _ in 0..MAX_REFINE {
            let enclosure = eval_poly(&self.coords, &window.interval());
            if enclosure.lo.is_positive() {
                return 1;
            }
            if enclosure.hi.is_negative() {
                return -1;
            }
            window
                .refine(&self.spec)
                .expect("minimal polynomial is reducible");
        }
        panic!("sign determination did not converge; minimal polynomial is not minimal");
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn abs(&self) -> FieldElement {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// The unique integer `m` with `m <= x < m + 1` under the embedding.
    pub fn floor(&self) -> BigInt {
        if let Some(q) = self.to_rational() {
            return q.floor().to_integer();
        }
        let mut window = self.spec.root_window();
        for _ in 0..MAX_REFINE {
            let enclosure = eval_poly(&self.coords, &window.interval());
            let flo = enclosure.lo.floor().to_integer();
            let fhi = enclosure.hi.floor().to_integer();
            if flo == fhi {
                // An irrational value never sits on an integer, so a window
                // whose endpoints share a floor pins it down.
                return flo;
            }
            window
                .refine(&self.spec)
                .expect("minimal polynomial is reducible");
        }
        panic!("floor did not converge; minimal polynomial is not minimal");
    }

    pub fn ceil(&self) -> BigInt {
        -((-self).floor())
    }

    /// A rational within `eps` of the element under the embedding.
    pub fn approx(&self, eps: &BigRational) -> BigRational {
        assert!(eps.is_positive(), "approx needs eps > 0");
        if let Some(q) = self.to_rational() {
            return q.clone();
        }
        let mut window = self.spec.root_window();
        loop {
            let enclosure = eval_poly(&self.coords, &window.interval());
            if &enclosure.width() <= eps {
                return (enclosure.lo + enclosure.hi) / BigRational::from_integer(2.into());
            }
            window
                .refine(&self.spec)
                .expect("minimal polynomial is reducible");
        }
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.assert_same_spec(other);
        (self - other).sign().cmp(&0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{}", format_rational(&mag))?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", format_rational(&mag))?;
                    }
                    write!(f, "a")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_spec(rhs);
        FieldElement {
            spec: self.spec.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_spec(rhs);
        FieldElement {
            spec: self.spec.clone(),
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            spec: self.spec.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.assert_same_spec(rhs);
        match self.spec.degree() {
            1 => FieldElement {
                spec: self.spec.clone(),
                coords: vec![&self.coords[0] * &rhs.coords[0]],
            },
            2 => {
                // a^2 = -p a - q with A = X^2 + pX + q.
                let p = &self.spec.0.minpoly[1];
                let q = &self.spec.0.minpoly[0];
                let (x0, x1) = (&self.coords[0], &self.coords[1]);
                let (y0, y1) = (&rhs.coords[0], &rhs.coords[1]);
                let high = x1 * y1;
                FieldElement {
                    spec: self.spec.clone(),
                    coords: vec![x0 * y0 - q * &high, x0 * y1 + x1 * y0 - p * &high],
                }
            }
            _ => {
                let product = poly::mul(&self.coords, &rhs.coords);
                let mut coords = poly::rem(&product, self.spec.minpoly());
                coords.resize(self.spec.degree(), BigRational::zero());
                FieldElement {
                    spec: self.spec.clone(),
                    coords,
                }
            }
        }
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                std::ops::$trait::$method(&self, &rhs)
            }
        }
    )*};
}

owned_ops!(Add::add, Sub::sub, Mul::mul);

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn sqrt2_field() -> FieldSpec {
        FieldSpec::real_quadratic(2)
    }

    fn el(spec: &FieldSpec, coords: &[&str]) -> FieldElement {
        spec.element(coords.iter().map(|s| q(s)).collect()).unwrap()
    }

    #[test]
    fn spec_validation() {
        // non-monic
        assert_eq!(
            FieldSpec::new(vec![q("-2"), q("0"), q("2")], q("1"), q("2")).unwrap_err(),
            NumFieldError::NotMonic
        );
        // no sign change
        assert_eq!(
            FieldSpec::new(vec![q("-2"), q("0"), q("1")], q("2"), q("3")).unwrap_err(),
            NumFieldError::NoSignChange
        );
        // constant polynomial
        assert_eq!(
            FieldSpec::new(vec![q("1")], q("0"), q("1")).unwrap_err(),
            NumFieldError::BadDegree
        );
    }

    #[test]
    fn addition_is_componentwise() {
        let f = sqrt2_field();
        // (1 + sqrt2) + (2 - 3 sqrt2) = 3 - 2 sqrt2
        let sum = &el(&f, &["1", "1"]) + &el(&f, &["2", "-3"]);
        assert_eq!(sum, el(&f, &["3", "-2"]));
        // x + 0 = x
        let x = el(&f, &["1/3", "2/5"]);
        assert_eq!(&x + &f.zero(), x);
        // (1/3 + (2/5)a) + (2/3 + (3/5)a) = 1 + a
        let s = &el(&f, &["1/3", "2/5"]) + &el(&f, &["2/3", "3/5"]);
        assert_eq!(s, el(&f, &["1", "1"]));
    }

    #[test]
    fn multiplication_reduces_mod_minpoly() {
        let f = sqrt2_field();
        // (1 + sqrt2)(1 - sqrt2) = -1
        let p = &el(&f, &["1", "1"]) * &el(&f, &["1", "-1"]);
        assert_eq!(p, f.from_integer(-1));
        // sqrt2 * sqrt2 = 2
        let a = f.generator();
        assert_eq!(&a * &a, f.from_integer(2));
        // x * 1 = x
        let x = el(&f, &["7/2", "-5"]);
        assert_eq!(&x * &f.one(), x);
    }

    #[test]
    fn inverses() {
        let f = sqrt2_field();
        // inv(sqrt2) = sqrt2 / 2
        assert_eq!(f.generator().inv().unwrap(), el(&f, &["0", "1/2"]));
        // inv(3) = 1/3
        assert_eq!(f.from_integer(3).inv().unwrap(), el(&f, &["1/3", "0"]));
        // inv(1 + sqrt2) = -1 + sqrt2
        assert_eq!(el(&f, &["1", "1"]).inv().unwrap(), el(&f, &["-1", "1"]));
        assert_eq!(f.zero().inv().unwrap_err(), NumFieldError::DivisionByZero);
    }

    #[test]
    fn inv_detects_reducible_minpoly() {
        // X^2 - 1 is reducible; (X - 1) shares the factor.
        let bogus = FieldSpec::new(vec![q("-1"), q("0"), q("1")], q("1/2"), q("2")).unwrap();
        let x = el(&bogus, &["-1", "1"]);
        assert_eq!(
            x.inv().unwrap_err(),
            NumFieldError::ReducibleMinimalPolynomial
        );
    }

    #[test]
    fn rationality_tests() {
        let f = sqrt2_field();
        assert!(el(&f, &["3", "0"]).is_rational());
        assert!(!f.generator().is_rational());
        assert!(f.zero().is_rational());
        assert_eq!(el(&f, &["3", "0"]).to_rational(), Some(&q("3")));
    }

    #[test]
    fn sign_under_embedding() {
        let f = sqrt2_field();
        // 1 - sqrt2 < 0
        assert_eq!(el(&f, &["1", "-1"]).sign(), -1);
        assert_eq!(f.zero().sign(), 0);
        // 3 - 2 sqrt2 > 0 (2 sqrt2 ~ 2.828)
        assert_eq!(el(&f, &["3", "-2"]).sign(), 1);
    }

    #[test]
    fn floors() {
        let f = sqrt2_field();
        assert_eq!(f.generator().floor(), BigInt::from(1));
        assert_eq!((-f.generator()).floor(), BigInt::from(-2));
        assert_eq!(f.from_rational(q("7/2")).floor(), BigInt::from(3));
        assert_eq!(f.from_rational(q("-7/2")).floor(), BigInt::from(-4));
        assert_eq!(f.from_integer(5).floor(), BigInt::from(5));
    }

    #[test]
    fn approx_is_within_eps() {
        let f = sqrt2_field();
        let eps = q("1/100");
        let approx = f.generator().approx(&eps);
        // |approx - sqrt2| <= 1/100, checked exactly in the field
        let diff = &f.from_rational(approx) - &f.generator();
        assert!((&diff.abs() - &f.from_rational(eps)).sign() <= 0);
        assert_eq!(f.from_integer(3).approx(&q("5")), q("3"));
        let near_zero = f.zero().approx(&q("1"));
        assert!(near_zero.abs() <= q("1"));
    }

    #[test]
    fn cubic_field_uses_generic_paths() {
        // Q(cbrt 2): A = X^3 - 2, root isolated in (1, 2).
        let f = FieldSpec::new(
            vec![q("-2"), q("0"), q("0"), q("1")],
            q("1"),
            q("2"),
        )
        .unwrap();
        let a = f.generator();
        let a2 = &a * &a;
        assert_eq!(&a * &a2, f.from_integer(2));
        assert!(!a2.is_rational());

        // cbrt2 ~ 1.26, so a - 5/4 > 0 and floor(a^2) = 1.
        assert_eq!((&a - &f.from_rational(q("5/4"))).sign(), 1);
        assert_eq!(a2.floor(), BigInt::from(1));

        // Generic extended-Euclid inversion.
        let x = &a2 + &(&a - &f.from_integer(3));
        assert_eq!(&x * &x.inv().unwrap(), f.one());
        assert_eq!(f.zero().inv().unwrap_err(), NumFieldError::DivisionByZero);

        // Distributivity spot check away from the quadratic fast path.
        let u = el(&f, &["1/2", "-1", "2"]);
        let v = el(&f, &["3", "1/3", "0"]);
        let w = el(&f, &["-1", "0", "1/5"]);
        assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
    }

    #[test]
    fn degree_one_field_is_q() {
        let f = FieldSpec::rationals();
        let x = el(&f, &["22/7"]);
        assert!(x.is_rational());
        assert_eq!(x.sign(), 1);
        assert_eq!(x.floor(), BigInt::from(3));
        assert_eq!(&x * &x.inv().unwrap(), f.one());
        assert_eq!(f.generator(), f.zero());
    }

    #[test]
    fn ordering_matches_embedding() {
        let f = sqrt2_field();
        let a = f.generator();
        let one = f.one();
        assert!(a > one);
        assert!(el(&f, &["3", "-2"]) > f.zero());
        let mut xs = [a.clone(), one.clone(), f.zero(), el(&f, &["1", "-1"])];
        xs.sort();
        assert_eq!(xs[0], el(&f, &["1", "-1"]));
        assert_eq!(xs[3], a);
    }

    #[test]
    fn display_is_readable() {
        let f = sqrt2_field();
        assert_eq!(el(&f, &["3", "-2"]).to_string(), "3 - 2*a");
        assert_eq!(el(&f, &["0", "1"]).to_string(), "a");
        assert_eq!(f.zero().to_string(), "0");
        assert_eq!(el(&f, &["-1/2", "0"]).to_string(), "-1/2");
    }
}
