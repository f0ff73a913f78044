//! Discreteness of finitely generated subgroups of the plane.
//!
//! The running primitive of the whole engine: a finite set of generators
//! spans a discrete subgroup exactly when, after fixing one or two of them
//! as an `R`-basis of the span, every other generator has *rational*
//! coefficients with respect to that basis. The certificate is turned into
//! an explicit lattice basis by clearing denominators and reducing the
//! integer coordinate matrix to Hermite form; the returned basis generates
//! the same group exactly.
//!
//! Commensurability of a point `p` with a lattice `L` (`Zp + L` discrete)
//! reduces to the same rationality test, and the question whether a line
//! `tau + R e` with `e` in `L` contains a commensurable point reduces, in
//! lattice coordinates, to rationality of the cross product
//! `c = u * tau'_y - v * tau'_x` where `(u, v)` are the integer
//! coordinates of `e`. The cross-product form subsumes the slope form
//! `y = ax + b` of the same test and needs no vertical-line case split:
//! `b = c / u` whenever `u != 0`. When the offset `c` is rational an
//! explicit point is produced from an extended gcd.

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numfield::rational::{denominator_lcm, rational_gcd};
use crate::numfield::FieldElement;
use crate::planar::{coords_in_basis, cross, PlanarVector};

/// Global count of discreteness decisions, for work-bound instrumentation.
static DISCRETENESS_TESTS: AtomicU64 = AtomicU64::new(0);

pub fn discreteness_test_count() -> u64 {
    DISCRETENESS_TESTS.load(Ordering::Relaxed)
}

pub fn reset_discreteness_test_count() {
    DISCRETENESS_TESTS.store(0, Ordering::Relaxed);
}

/// Two independent vectors generating a rank-2 discrete subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeBasis {
    b1: PlanarVector,
    b2: PlanarVector,
}

impl LatticeBasis {
    pub fn new(b1: PlanarVector, b2: PlanarVector) -> LatticeBasis {
        assert!(
            !cross(&b1, &b2).is_zero(),
            "lattice basis vectors must be independent"
        );
        LatticeBasis { b1, b2 }
    }

    pub fn b1(&self) -> &PlanarVector {
        &self.b1
    }

    pub fn b2(&self) -> &PlanarVector {
        &self.b2
    }

    /// Coordinates of a point in this basis.
    pub fn coords_of(&self, p: &PlanarVector) -> (FieldElement, FieldElement) {
        coords_in_basis(p, &self.b1, &self.b2)
    }

    /// Maps lattice coordinates back to the plane.
    pub fn point_at(&self, alpha: &FieldElement, beta: &FieldElement) -> PlanarVector {
        self.b1.scale(alpha).add(&self.b2.scale(beta))
    }

    /// The absolute determinant `|cross(b1, b2)|`.
    pub fn covolume(&self) -> FieldElement {
        cross(&self.b1, &self.b2).abs()
    }

    /// True iff `p` is a member of the lattice (integer coordinates).
    pub fn contains(&self, p: &PlanarVector) -> bool {
        let (alpha, beta) = self.coords_of(p);
        alpha.is_integer() && beta.is_integer()
    }

    /// Integer coordinates of a lattice member.
    pub fn integer_coords_of(&self, p: &PlanarVector) -> Option<(BigInt, BigInt)> {
        let (alpha, beta) = self.coords_of(p);
        Some((alpha.to_integer()?, beta.to_integer()?))
    }

    /// True iff `Zp + L` is discrete, i.e. `p` has rational coordinates.
    pub fn is_commensurable(&self, p: &PlanarVector) -> bool {
        let (alpha, beta) = self.coords_of(p);
        alpha.is_rational() && beta.is_rational()
    }

    /// A Lagrange-reduced basis of the same lattice: `b1` is a shortest
    /// vector and `b2` is nearly orthogonal to it. Covering scans use this
    /// to keep their bounding boxes proportional to the covered area.
    pub fn reduced(&self) -> LatticeBasis {
        let spec = self.b1.spec().clone();
        let half = spec.from_rational(BigRational::new(1.into(), 2.into()));
        let norm = |v: &PlanarVector| &(&v.x * &v.x) + &(&v.y * &v.y);
        let mut b1 = self.b1.clone();
        let mut b2 = self.b2.clone();
        if norm(&b2) < norm(&b1) {
            std::mem::swap(&mut b1, &mut b2);
        }
        loop {
            let dot = &(&b1.x * &b2.x) + &(&b1.y * &b2.y);
            let mu = (&dot.div(&norm(&b1)).expect("basis vector is nonzero") + &half).floor();
            if !mu.is_zero() {
                let shift = spec.from_rational(BigRational::from_integer(mu));
                b2 = b2.sub(&b1.scale(&shift));
            }
            if norm(&b2) >= norm(&b1) {
                return LatticeBasis { b1, b2 };
            }
            std::mem::swap(&mut b1, &mut b2);
        }
    }
}

/// Outcome of a discreteness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiscretenessResult {
    /// All generators were zero.
    Trivial,
    /// Rank 1: the group is `Z g` for the returned gcd generator.
    Line { generator: PlanarVector },
    /// Rank 2: a genuine lattice with the returned basis.
    Lattice(LatticeBasis),
    /// Not discrete; `witness` is the first irrational coefficient found.
    Dense { witness: FieldElement },
}

impl DiscretenessResult {
    pub fn is_discrete(&self) -> bool {
        !matches!(self, DiscretenessResult::Dense { .. })
    }

    pub fn rank(&self) -> Option<u8> {
        match self {
            DiscretenessResult::Trivial => Some(0),
            DiscretenessResult::Line { .. } => Some(1),
            DiscretenessResult::Lattice(_) => Some(2),
            DiscretenessResult::Dense { .. } => None,
        }
    }

    pub fn lattice(&self) -> Option<&LatticeBasis> {
        match self {
            DiscretenessResult::Lattice(basis) => Some(basis),
            _ => None,
        }
    }
}

/// Decides whether the generators span a discrete subgroup of the plane.
///
/// Zero generators are dropped. The certificate frame is deterministic:
/// the first nonzero generator, then the first generator not parallel to
/// it. In the rank-1 case the group is discrete iff every ratio against
/// the frame vector is rational, and the returned generator is the gcd of
/// those ratios times the frame vector. In the rank-2 case every other
/// generator must have rational coordinates in the frame; the basis is
/// then reduced to Hermite form, so equal groups get equal bases.
pub fn is_discrete(generators: &[PlanarVector]) -> DiscretenessResult {
    DISCRETENESS_TESTS.fetch_add(1, Ordering::Relaxed);

    let nonzero: Vec<&PlanarVector> = generators.iter().filter(|g| !g.is_zero()).collect();
    let Some(&v1) = nonzero.first() else {
        return DiscretenessResult::Trivial;
    };
    let frame2 = nonzero
        .iter()
        .enumerate()
        .find(|(_, g)| !g.is_parallel(v1));

    match frame2 {
        None => {
            // Rank 1: every generator is r * v1 for some field ratio r.
            let mut ratios = Vec::with_capacity(nonzero.len());
            for g in &nonzero {
                let ratio = parallel_ratio(g, v1);
                match ratio.to_rational() {
                    Some(q) => ratios.push(q.clone()),
                    None => return DiscretenessResult::Dense { witness: ratio },
                }
            }
            let g = rational_gcd(&ratios);
            DiscretenessResult::Line {
                generator: v1.scale(&v1.spec().from_rational(g)),
            }
        }
        Some((i2, &v2)) => {
            let one = BigRational::one();
            let zero = BigRational::zero();
            let det_inv = cross(v1, v2).inv().expect("nonzero determinant");
            let mut coords = Vec::with_capacity(nonzero.len());
            for (i, g) in nonzero.iter().enumerate() {
                // The frame members have coordinates (1, 0) and (0, 1).
                if i == 0 {
                    coords.push((one.clone(), zero.clone()));
                    continue;
                }
                if i == i2 {
                    coords.push((zero.clone(), one.clone()));
                    continue;
                }
                let alpha = &cross(g, v2) * &det_inv;
                let Some(qa) = alpha.to_rational().cloned() else {
                    return DiscretenessResult::Dense { witness: alpha };
                };
                let beta = &cross(v1, g) * &det_inv;
                let Some(qb) = beta.to_rational().cloned() else {
                    return DiscretenessResult::Dense { witness: beta };
                };
                coords.push((qa, qb));
            }
            DiscretenessResult::Lattice(basis_from_rational_coords(v1, v2, &coords))
        }
    }
}

/// A fixed two-vector frame for repeated single-vector rationality tests.
///
/// Appending `w` to a discrete rank-2 group with this frame keeps it
/// discrete exactly when `w` has rational coordinates here, so each
/// [`admits`](RationalityFrame::admits) call is one discreteness decision
/// and is counted as such.
pub struct RationalityFrame {
    v1: PlanarVector,
    v2: PlanarVector,
    det_inv: FieldElement,
}

impl RationalityFrame {
    pub fn new(v1: &PlanarVector, v2: &PlanarVector) -> RationalityFrame {
        let det_inv = cross(v1, v2)
            .inv()
            .expect("frame vectors must be independent");
        RationalityFrame {
            v1: v1.clone(),
            v2: v2.clone(),
            det_inv,
        }
    }

    pub fn admits(&self, w: &PlanarVector) -> bool {
        DISCRETENESS_TESTS.fetch_add(1, Ordering::Relaxed);
        (&cross(w, &self.v2) * &self.det_inv).is_rational()
            && (&cross(&self.v1, w) * &self.det_inv).is_rational()
    }
}

/// The ratio `g / v1` for parallel vectors, taken from whichever component
/// of `v1` is nonzero.
fn parallel_ratio(g: &PlanarVector, v1: &PlanarVector) -> FieldElement {
    if !v1.x.is_zero() {
        g.x.div(&v1.x).expect("nonzero divisor")
    } else {
        g.y.div(&v1.y).expect("nonzero divisor")
    }
}

/// Lattice basis for the span of generators given by rational coordinates
/// in the frame `(v1, v2)`.
///
/// Denominators are cleared by the common lcm `D`, the integer rows
/// (including `(D, 0)` and `(0, D)` for the frame itself) are reduced to a
/// 2x2 Hermite form by unimodular row operations, and the result is mapped
/// back to the plane over `D`. The integer span of the output equals the
/// integer span of the input exactly.
fn basis_from_rational_coords(
    v1: &PlanarVector,
    v2: &PlanarVector,
    coords: &[(BigRational, BigRational)],
) -> LatticeBasis {
    let mut all: Vec<BigRational> = Vec::with_capacity(coords.len() * 2);
    for (a, b) in coords {
        all.push(a.clone());
        all.push(b.clone());
    }
    let d = denominator_lcm(&all);
    let to_int = |q: &BigRational| -> BigInt {
        let scaled = q * BigRational::from_integer(d.clone());
        debug_assert!(scaled.denom().is_one());
        scaled.to_integer()
    };
    let mut rows: Vec<(BigInt, BigInt)> = coords
        .iter()
        .map(|(a, b)| (to_int(a), to_int(b)))
        .collect();
    rows.push((d.clone(), BigInt::zero()));
    rows.push((BigInt::zero(), d.clone()));

    let ((h11, h12), h22) = hermite_2col(rows);

    let spec = v1.spec();
    let over_d = |n: &BigInt| spec.from_rational(BigRational::new(n.clone(), d.clone()));
    let b1 = v1.scale(&over_d(&h11)).add(&v2.scale(&over_d(&h12)));
    let b2 = v2.scale(&over_d(&h22));
    LatticeBasis::new(b1, b2)
}

/// Reduces integer rows to the Hermite form `[[h11, h12], [0, h22]]` with
/// `h11, h22 > 0` and `0 <= h12 < h22`, preserving the row lattice.
fn hermite_2col(rows: Vec<(BigInt, BigInt)>) -> ((BigInt, BigInt), BigInt) {
    let mut pivot: Option<(BigInt, BigInt)> = None;
    let mut seconds: Vec<BigInt> = Vec::new();
    for (a, b) in rows {
        if a.is_zero() {
            if !b.is_zero() {
                seconds.push(b);
            }
            continue;
        }
        match pivot.take() {
            None => pivot = Some((a, b)),
            Some((p1, p2)) => {
                // Unimodular: [x, y; a/g, -p1/g] has determinant -1.
                let egcd = p1.extended_gcd(&a);
                let (g, x, y) = (egcd.gcd, egcd.x, egcd.y);
                let new_second = &x * &p2 + &y * &b;
                let elim = (&a / &g) * &p2 - (&p1 / &g) * &b;
                if !elim.is_zero() {
                    seconds.push(elim);
                }
                pivot = Some((g, new_second));
            }
        }
    }
    let (mut h11, mut p2) = pivot.expect("rank-2 input has a nonzero first column");
    if h11.is_negative() {
        h11 = -h11;
        p2 = -p2;
    }
    let mut h22 = BigInt::zero();
    for s in seconds {
        h22 = h22.gcd(&s);
    }
    assert!(!h22.is_zero(), "rank-2 input has a second independent row");
    let h12 = p2.mod_floor(&h22);
    ((h11, h12), h22)
}

/// Explicit lattice basis for a rank-2 discrete generator set.
///
/// Panics if the span is not a rank-2 discrete group; run [`is_discrete`]
/// first when that is not already known.
pub fn lattice_basis(generators: &[PlanarVector]) -> LatticeBasis {
    match is_discrete(generators) {
        DiscretenessResult::Lattice(basis) => basis,
        other => panic!("lattice_basis needs a rank-2 discrete span, got {other:?}"),
    }
}

/// A commensurable point on the line `tau + R e`, if one exists.
///
/// Requires `e` to be a member of `L` (asserted). In lattice coordinates,
/// with `(u, v)` the integer coordinates of `e` and `tau'` those of `tau`,
/// the line contains a point commensurable with `L` iff
/// `c = u * tau'_y - v * tau'_x` is rational; when it is, integers `(s, t)`
/// with `u*t - v*s = gcd(u, v)` yield the explicit point
/// `(c / gcd) * (s, t)`, mapped back to the plane.
pub fn line_commensurable_point(
    tau: &PlanarVector,
    e: &PlanarVector,
    lattice: &LatticeBasis,
) -> Option<PlanarVector> {
    let (u, v) = lattice
        .integer_coords_of(e)
        .expect("line direction must belong to the lattice");
    assert!(
        !u.is_zero() || !v.is_zero(),
        "line direction must be nonzero"
    );
    let (tau_x, tau_y) = lattice.coords_of(tau);

    let c = &tau_y.mul_rational(&BigRational::from_integer(u.clone()))
        - &tau_x.mul_rational(&BigRational::from_integer(v.clone()));
    let c = c.to_rational()?.clone();

    // u*t - v*s = g with (s, t) = (-y, x) from x*u + y*v = g.
    let egcd = u.extended_gcd(&v);
    let (g, s, t) = (egcd.gcd, -egcd.y, egcd.x);
    debug_assert_eq!(&u * &t - &v * &s, g);

    let factor = c / BigRational::from_integer(g);
    let spec = tau.x.spec();
    let alpha = spec.from_rational(&factor * BigRational::from_integer(s));
    let beta = spec.from_rational(&factor * BigRational::from_integer(t));
    let point = lattice.point_at(&alpha, &beta);

    debug_assert!(lattice.is_commensurable(&point));
    debug_assert!(
        cross(&point.sub(tau), e).is_zero(),
        "point must lie on the line"
    );
    Some(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{parse_rational, FieldSpec};

    fn f() -> FieldSpec {
        FieldSpec::real_quadratic(2)
    }

    fn el(spec: &FieldSpec, r: &str, i: &str) -> FieldElement {
        spec.element(vec![parse_rational(r).unwrap(), parse_rational(i).unwrap()])
            .unwrap()
    }

    fn v(spec: &FieldSpec, x: (&str, &str), y: (&str, &str)) -> PlanarVector {
        PlanarVector::new(el(spec, x.0, x.1), el(spec, y.0, y.1))
    }

    fn rv(spec: &FieldSpec, x: &str, y: &str) -> PlanarVector {
        v(spec, (x, "0"), (y, "0"))
    }

    #[test]
    fn rational_generators_are_discrete() {
        let f = f();
        let gens = [rv(&f, "1", "0"), rv(&f, "0", "1"), rv(&f, "1/2", "1/2")];
        let result = is_discrete(&gens);
        assert_eq!(result.rank(), Some(2));
        let basis = result.lattice().unwrap();
        // Index-2 superlattice of Z^2.
        assert_eq!(
            basis.covolume(),
            f.from_rational(parse_rational("1/2").unwrap())
        );
        for g in &gens {
            assert!(basis.contains(g));
        }
    }

    #[test]
    fn irrational_ratio_on_a_line_is_dense() {
        let f = f();
        let result = is_discrete(&[rv(&f, "1", "0"), v(&f, ("0", "1"), ("0", "0"))]);
        assert!(!result.is_discrete());
        match result {
            DiscretenessResult::Dense { witness } => assert_eq!(witness, f.generator()),
            other => panic!("expected dense, got {other:?}"),
        }
    }

    #[test]
    fn two_independent_vectors_always_span_a_lattice() {
        let f = f();
        let result = is_discrete(&[rv(&f, "1", "0"), v(&f, ("0", "1"), ("1", "0"))]);
        assert_eq!(result.rank(), Some(2));
    }

    #[test]
    fn mixing_irrational_translate_is_dense() {
        let f = f();
        let result = is_discrete(&[
            rv(&f, "1", "0"),
            rv(&f, "0", "1"),
            v(&f, ("0", "1"), ("0", "0")),
        ]);
        assert!(!result.is_discrete());
    }

    #[test]
    fn empty_and_zero_generators() {
        let f = f();
        assert_eq!(is_discrete(&[]), DiscretenessResult::Trivial);
        assert_eq!(
            is_discrete(&[PlanarVector::zero(&f)]),
            DiscretenessResult::Trivial
        );
    }

    #[test]
    fn rank_one_gcd_generator() {
        let f = f();
        let result = is_discrete(&[rv(&f, "1/2", "0"), rv(&f, "1/3", "0")]);
        match result {
            DiscretenessResult::Line { generator } => {
                assert_eq!(generator, rv(&f, "1/6", "0"));
            }
            other => panic!("expected line, got {other:?}"),
        }
    }

    #[test]
    fn covolumes() {
        let f = f();
        let z2 = LatticeBasis::new(rv(&f, "1", "0"), rv(&f, "0", "1"));
        assert_eq!(z2.covolume(), f.one());
        let stretched = LatticeBasis::new(v(&f, ("0", "1"), ("0", "0")), rv(&f, "0", "1"));
        assert_eq!(stretched.covolume(), f.generator());
        let skewed = LatticeBasis::new(rv(&f, "1", "2"), rv(&f, "3", "4"));
        assert_eq!(skewed.covolume(), f.from_integer(2));
        let doubled = lattice_basis(&[rv(&f, "2", "0"), rv(&f, "0", "2")]);
        assert_eq!(doubled.covolume(), f.from_integer(4));
    }

    #[test]
    fn irrational_lattice_basis() {
        // {(sqrt2, 1 + sqrt2), (0, 1)} spans a lattice of covolume sqrt2.
        let f = f();
        let basis = lattice_basis(&[v(&f, ("0", "1"), ("1", "1")), rv(&f, "0", "1")]);
        assert_eq!(basis.covolume(), f.generator());
    }

    #[test]
    fn commensurability() {
        let f = f();
        let z2 = LatticeBasis::new(rv(&f, "1", "0"), rv(&f, "0", "1"));
        assert!(z2.is_commensurable(&rv(&f, "1/3", "2/5")));
        assert!(!z2.is_commensurable(&v(&f, ("0", "1"), ("0", "0"))));
        assert!(z2.is_commensurable(&PlanarVector::zero(&f)));
    }

    #[test]
    fn line_points_on_rational_offsets() {
        let f = f();
        let z2 = LatticeBasis::new(rv(&f, "1", "0"), rv(&f, "0", "1"));

        // Horizontal line at irrational height: no rational point.
        let tau = v(&f, ("0", "0"), ("0", "1"));
        assert_eq!(line_commensurable_point(&tau, &rv(&f, "1", "0"), &z2), None);

        // Horizontal line at height 1/3: a rational point exists.
        let tau = rv(&f, "1/2", "1/3");
        let p = line_commensurable_point(&tau, &rv(&f, "1", "0"), &z2).unwrap();
        assert!(z2.is_commensurable(&p));
        assert!(cross(&p.sub(&tau), &rv(&f, "1", "0")).is_zero());
    }

    #[test]
    fn line_point_in_irrational_lattice() {
        // Basis (sqrt2, 1 + sqrt2), (0, 1); e with coordinates (1, -1);
        // tau' = (-sqrt2/2, 2 + sqrt2/2) gives c = 2, so a point exists.
        let f = f();
        let basis = LatticeBasis::new(v(&f, ("0", "1"), ("1", "1")), rv(&f, "0", "1"));
        let e = basis.point_at(&f.one(), &f.from_integer(-1));
        let tau = basis.point_at(&el(&f, "0", "-1/2"), &el(&f, "2", "1/2"));
        let p = line_commensurable_point(&tau, &e, &basis).unwrap();
        assert!(basis.is_commensurable(&p));
        assert!(cross(&p.sub(&tau), &e).is_zero());
    }

    #[test]
    fn counter_increments() {
        let f = f();
        reset_discreteness_test_count();
        let _ = is_discrete(&[rv(&f, "1", "0")]);
        let _ = is_discrete(&[rv(&f, "0", "1")]);
        assert_eq!(discreteness_test_count(), 2);
    }
}
