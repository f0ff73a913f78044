//! Dense univariate polynomials over `Q`, just enough for arithmetic
//! modulo the minimal polynomial: evaluation, division with remainder and
//! the extended Euclidean algorithm.

use num_rational::BigRational;
use num_traits::Zero;

/// Coefficients in ascending degree order with no trailing zeros.
pub type Poly = Vec<BigRational>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn degree(p: &[BigRational]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigRational::zero());
    }
    for (o, bj) in out.iter_mut().zip(b.iter()) {
        *o -= bj;
    }
    trim(out)
}

/// Remainder of `a` divided by a nonzero `b`.
pub fn rem(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut r = trim(a.to_vec());
    let db = degree(b).expect("division by zero polynomial");
    let lead = &b[db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let factor = &r[dr] / lead;
        let shift = dr - db;
        for (i, bi) in b.iter().enumerate() {
            let delta = &factor * bi;
            r[i + shift] -= delta;
        }
        r = trim(r);
    }
    r
}

/// Extended gcd: returns `(g, u)` with `g = gcd(a, m)` monic and
/// `u * a ≡ g (mod m)`.
pub fn ext_gcd_mod(a: &[BigRational], m: &[BigRational]) -> (Poly, Poly) {
    // Invariant: r0 = u0 * a (mod m), r1 = u1 * a (mod m).
    let mut r0 = trim(m.to_vec());
    let mut r1 = trim(a.to_vec());
    let mut u0: Poly = Vec::new();
    let mut u1: Poly = vec![BigRational::from_integer(1.into())];
    while !r1.is_empty() {
        let q = quotient(&r0, &r1);
        let r2 = sub(&r0, &mul(&q, &r1));
        let u2 = sub(&u0, &mul(&q, &u1));
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
    }
    match degree(&r0) {
        None => (r0, u0),
        Some(d) => {
            let lead = r0[d].clone();
            let g = r0.iter().map(|c| c / &lead).collect();
            let u = u0.iter().map(|c| c / &lead).collect();
            (g, u)
        }
    }
}

fn quotient(a: &[BigRational], b: &[BigRational]) -> Poly {
    let mut r = trim(a.to_vec());
    let db = degree(b).expect("division by zero polynomial");
    let lead = &b[db];
    let mut q = vec![
        BigRational::zero();
        degree(&r).map_or(0, |da| da.saturating_sub(db) + 1)
    ];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let factor = &r[dr] / lead;
        let shift = dr - db;
        for (i, bi) in b.iter().enumerate() {
            let delta = &factor * bi;
            r[i + shift] -= delta;
        }
        q[shift] = factor;
        r = trim(r);
    }
    trim(q)
}
