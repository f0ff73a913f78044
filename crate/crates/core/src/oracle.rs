//! Independent verification of tiling verdicts.
//!
//! Two oracles, both deliberately separate from the decision path:
//!
//! * [`brute_force_decide`] tries *every* subset `J` of the edge-pair
//!   indices instead of only the maximal ones — the exponential procedure
//!   the polynomial search replaces. It shares only the discreteness
//!   primitive with the decider.
//! * [`sample_verify`] checks a claimed tiling level directly against the
//!   definition: it counts, at exactly sampled points, how many lattice
//!   translates of the polygon cover the point. Samples are drawn in
//!   lattice coordinates of the fundamental domain, so for a genuine
//!   tiling every non-boundary sample must be covered exactly `level`
//!   times; a single deviating sample falsifies the claim.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::One;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decider::{build_witness, level, RejectionRecord, TilingClass};
use crate::decider::{ClassBFailure, TilingWitness, Verdict};
use crate::numfield::FieldElement;
use crate::planar::{self, cross, PlanarVector, Polygon, PolygonError};
use crate::selector::IndexSet;
use crate::subgroup::{is_discrete, line_commensurable_point, LatticeBasis};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("brute force is limited to {max} edge pairs, got {n}")]
    TooManyPairs { n: usize, max: usize },
    #[error("sampling hit {hits} consecutive boundary points; input is degenerate")]
    DegenerateSampling { hits: u64 },
    #[error(transparent)]
    Polygon(#[from] PolygonError),
}

const BRUTE_FORCE_MAX_PAIRS: usize = 12;

/// Exhaustive tiling decision over all `2^n` index subsets.
///
/// For each subset `J`: the mixed span `T(J) + E([n] \ J)` must be a
/// lattice and every unselected translation line must carry a
/// commensurable point; the first success builds a witness exactly like
/// the decider does. Guarded to `n <= 12`.
pub fn brute_force_decide(polygon: &Polygon) -> Result<Verdict, OracleError> {
    let pairing = planar::edge_pairs(polygon)?;
    let n = pairing.n;
    if n > BRUTE_FORCE_MAX_PAIRS {
        return Err(OracleError::TooManyPairs {
            n,
            max: BRUTE_FORCE_MAX_PAIRS,
        });
    }

    let mut rejections = RejectionRecord::default();
    'subsets: for mask in 0u32..(1 << n) {
        let selected =
            IndexSet::from_indices((0..n).filter(|j| mask & (1 << j) != 0).collect());
        let mut generators: Vec<PlanarVector> =
            selected.iter().map(|j| pairing.tau[j].clone()).collect();
        for j in selected.complement(n).iter() {
            generators.push(pairing.e[j].clone());
        }
        let result = is_discrete(&generators);
        let Some(lattice) = result.lattice() else {
            rejections
                .class_b
                .push((selected, ClassBFailure::SpanNotLattice));
            continue;
        };
        for j in selected.complement(n).iter() {
            if line_commensurable_point(&pairing.tau[j], &pairing.e[j], lattice).is_none() {
                rejections.class_b.push((
                    selected,
                    ClassBFailure::LineWithoutCommensurablePoint { index: j },
                ));
                continue 'subsets;
            }
        }
        let (witness, pairs) = build_witness(&pairing, lattice, &selected);
        let lvl = level(polygon, &witness);
        // The subset search is the Class B construction; a tiling polygon
        // always admits a witness with at least two member translations.
        return Ok(Verdict::Tiles(TilingWitness {
            lattice: witness,
            level: lvl,
            class: TilingClass::B,
            index_set: selected,
            pairs,
        }));
    }
    Ok(Verdict::DoesNotTile { rejections })
}

/// Covering multiplicity of a point, or `Boundary` when the point lies on
/// the edge of some translate (where the count is ambiguous).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multiplicity {
    Count(u64),
    Boundary,
}

/// Counts the lattice translates of `P` whose interior strictly contains
/// `q`, by scanning the integer box of lattice coordinates covering
/// `q - P` and running the exact interior test against every edge.
pub fn multiplicity_at(
    polygon: &Polygon,
    lattice: &LatticeBasis,
    q: &PlanarVector,
) -> Multiplicity {
    let reduced = lattice.reduced();
    let prepared = PreparedCover::new(polygon, &reduced);
    let (qx, qy) = reduced.coords_of(q);
    prepared.multiplicity(&qx, &qy)
}

/// Polygon data transformed once into lattice coordinates, so repeated
/// multiplicity queries share the setup. When every vertex coordinate is
/// rational the scan runs on denominator-cleared integers; otherwise it
/// falls back to full field arithmetic.
struct PreparedCover {
    exact: ExactCover,
    integer: Option<IntegerCover>,
}

impl PreparedCover {
    fn new(polygon: &Polygon, lattice: &LatticeBasis) -> PreparedCover {
        let vertices: Vec<(FieldElement, FieldElement)> = polygon
            .vertices()
            .iter()
            .map(|v| lattice.coords_of(v))
            .collect();
        let orientation = cross(lattice.b1(), lattice.b2()).sign();
        debug_assert!(orientation != 0);
        let integer = IntegerCover::try_new(&vertices, orientation);
        PreparedCover {
            exact: ExactCover::new(vertices, orientation),
            integer,
        }
    }

    fn multiplicity(&self, qx: &FieldElement, qy: &FieldElement) -> Multiplicity {
        if let (Some(cover), Some(qx), Some(qy)) =
            (&self.integer, qx.to_rational(), qy.to_rational())
        {
            return cover.multiplicity(qx, qy);
        }
        self.exact.multiplicity(qx, qy)
    }
}

struct ExactCover {
    /// Vertex coordinates in the lattice basis.
    vertices: Vec<(FieldElement, FieldElement)>,
    /// Interior test sign: +1 if the basis is positively oriented.
    orientation: i8,
    min_x: FieldElement,
    max_x: FieldElement,
    min_y: FieldElement,
    max_y: FieldElement,
}

impl ExactCover {
    fn new(vertices: Vec<(FieldElement, FieldElement)>, orientation: i8) -> ExactCover {
        let mut min_x = vertices[0].0.clone();
        let mut max_x = vertices[0].0.clone();
        let mut min_y = vertices[0].1.clone();
        let mut max_y = vertices[0].1.clone();
        for (x, y) in &vertices[1..] {
            if x < &min_x {
                min_x = x.clone();
            }
            if x > &max_x {
                max_x = x.clone();
            }
            if y < &min_y {
                min_y = y.clone();
            }
            if y > &max_y {
                max_y = y.clone();
            }
        }
        ExactCover {
            vertices,
            orientation,
            min_x,
            max_x,
            min_y,
            max_y,
        }
    }

    /// Multiplicity at the point with lattice coordinates `(qx, qy)`.
    fn multiplicity(&self, qx: &FieldElement, qy: &FieldElement) -> Multiplicity {
        // Translates at m cover q iff q - m lies inside P, so m ranges over
        // the box of q - [bounding box of P].
        let spec = qx.spec();
        let range = |q: &FieldElement, lo: &FieldElement, hi: &FieldElement| {
            let start = (q - hi).ceil();
            let end = (q - lo).floor();
            (start, end)
        };
        let (mx_lo, mx_hi) = range(qx, &self.min_x, &self.max_x);
        let (my_lo, my_hi) = range(qy, &self.min_y, &self.max_y);

        let mut count = 0u64;
        let mut mx = mx_lo;
        while mx <= mx_hi {
            let px = q_minus_int(spec, qx, &mx);
            let mut my = my_lo.clone();
            while my <= my_hi {
                let py = q_minus_int(spec, qy, &my);
                match self.contains(&px, &py) {
                    Containment::Inside => count += 1,
                    Containment::Boundary => return Multiplicity::Boundary,
                    Containment::Outside => {}
                }
                my += BigInt::one();
            }
            mx += BigInt::one();
        }
        Multiplicity::Count(count)
    }

    /// Strict interior test of `(px, py)` against every edge.
    fn contains(&self, px: &FieldElement, py: &FieldElement) -> Containment {
        let count = self.vertices.len();
        for i in 0..count {
            let (ax, ay) = &self.vertices[i];
            let (bx, by) = &self.vertices[(i + 1) % count];
            // cross(b - a, p - a), with the orientation sign folded in.
            let ex = bx - ax;
            let ey = by - ay;
            let wx = px - ax;
            let wy = py - ay;
            let turn = (&(&ex * &wy) - &(&ey * &wx)).sign();
            if turn == 0 {
                // On the supporting line: boundary if within the edge
                // segment, otherwise outside the convex polygon.
                if on_segment(ax, ay, bx, by, px, py) {
                    return Containment::Boundary;
                }
                return Containment::Outside;
            }
            if turn != self.orientation {
                return Containment::Outside;
            }
        }
        Containment::Inside
    }
}

fn on_segment<T: Ord>(ax: &T, ay: &T, bx: &T, by: &T, px: &T, py: &T) -> bool {
    let within = |a: &T, b: &T, p: &T| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        lo <= p && p <= hi
    };
    within(ax, bx, px) && within(ay, by, py)
}

/// Denominator-cleared copy of the cover data: vertex coordinates times
/// `denom` are integers, so the interior test is plain integer arithmetic.
struct IntegerCover {
    denom: BigInt,
    /// Vertex coordinates scaled by `denom`.
    vertices: Vec<(BigInt, BigInt)>,
    orientation: i8,
    min_x: BigInt,
    max_x: BigInt,
    min_y: BigInt,
    max_y: BigInt,
}

impl IntegerCover {
    fn try_new(vertices: &[(FieldElement, FieldElement)], orientation: i8) -> Option<IntegerCover> {
        let mut rationals = Vec::with_capacity(vertices.len());
        for (x, y) in vertices {
            rationals.push((x.to_rational()?.clone(), y.to_rational()?.clone()));
        }
        let mut denom = BigInt::one();
        for (x, y) in &rationals {
            denom = denom.lcm(x.denom()).lcm(y.denom());
        }
        let scale = |q: &BigRational| (q * BigRational::from_integer(denom.clone())).to_integer();
        let scaled: Vec<(BigInt, BigInt)> =
            rationals.iter().map(|(x, y)| (scale(x), scale(y))).collect();
        let mut min_x = scaled[0].0.clone();
        let mut max_x = scaled[0].0.clone();
        let mut min_y = scaled[0].1.clone();
        let mut max_y = scaled[0].1.clone();
        for (x, y) in &scaled[1..] {
            if x < &min_x {
                min_x = x.clone();
            }
            if x > &max_x {
                max_x = x.clone();
            }
            if y < &min_y {
                min_y = y.clone();
            }
            if y > &max_y {
                max_y = y.clone();
            }
        }
        Some(IntegerCover {
            denom,
            vertices: scaled,
            orientation,
            min_x,
            max_x,
            min_y,
            max_y,
        })
    }

    fn multiplicity(&self, qx: &BigRational, qy: &BigRational) -> Multiplicity {
        // Common scale S: vertex data needs denom, the query its own.
        let s = self.denom.lcm(qx.denom()).lcm(qy.denom());
        let f = &s / &self.denom;
        let verts: Vec<(BigInt, BigInt)> = self
            .vertices
            .iter()
            .map(|(x, y)| (x * &f, y * &f))
            .collect();
        let qx_s = qx.numer() * (&s / qx.denom());
        let qy_s = qy.numer() * (&s / qy.denom());

        // m ranges over integers with q - max <= m*S <= q - min.
        let lo_x = ceil_div(&(&qx_s - &(&self.max_x * &f)), &s);
        let hi_x = (&qx_s - &(&self.min_x * &f)).div_floor(&s);
        let lo_y = ceil_div(&(&qy_s - &(&self.max_y * &f)), &s);
        let hi_y = (&qy_s - &(&self.min_y * &f)).div_floor(&s);

        let count_v = verts.len();
        let mut count = 0u64;
        let mut mx = lo_x;
        while mx <= hi_x {
            let px = &qx_s - &mx * &s;
            let mut my = lo_y.clone();
            'cells: while my <= hi_y {
                let py = &qy_s - &my * &s;
                for i in 0..count_v {
                    let (ax, ay) = &verts[i];
                    let (bx, by) = &verts[(i + 1) % count_v];
                    let turn = ((bx - ax) * (&py - ay) - (by - ay) * (&px - ax)).sign();
                    if turn == num_bigint::Sign::NoSign {
                        if on_segment(ax, ay, bx, by, &px, &py) {
                            return Multiplicity::Boundary;
                        }
                        my += BigInt::one();
                        continue 'cells;
                    }
                    let turn_matches = match turn {
                        num_bigint::Sign::Plus => self.orientation > 0,
                        num_bigint::Sign::Minus => self.orientation < 0,
                        num_bigint::Sign::NoSign => unreachable!(),
                    };
                    if !turn_matches {
                        my += BigInt::one();
                        continue 'cells;
                    }
                }
                count += 1;
                my += BigInt::one();
            }
            mx += BigInt::one();
        }
        Multiplicity::Count(count)
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -(-a).div_floor(b)
}

enum Containment {
    Inside,
    Boundary,
    Outside,
}

fn q_minus_int(
    spec: &crate::numfield::FieldSpec,
    q: &FieldElement,
    m: &BigInt,
) -> FieldElement {
    q - &spec.from_rational(BigRational::from_integer(m.clone()))
}

/// Result of a multiplicity sampling run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub samples: u64,
    pub expected_level: u64,
    pub multiplicities: Vec<u64>,
    pub boundary_resamples: u64,
    pub seed: u64,
    pub pass: bool,
}

/// Samples `n` points uniformly in the fundamental domain of the lattice
/// (coordinates `s, t` with denominator `2^32`, from a seeded ChaCha
/// stream) and checks that every sample is covered exactly
/// `expected_level` times. Boundary hits are counted and resampled; more
/// than `10 * n` consecutive boundary hits aborts as degenerate.
pub fn sample_verify(
    polygon: &Polygon,
    lattice: &LatticeBasis,
    expected_level: u64,
    samples: u64,
    seed: u64,
) -> Result<MultiplicityReport, OracleError> {
    let reduced = lattice.reduced();
    let prepared = PreparedCover::new(polygon, &reduced);
    let spec = polygon.spec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let denom = BigInt::from(1u64 << 32);
    let draw = |rng: &mut ChaCha8Rng| {
        spec.from_rational(BigRational::new(BigInt::from(rng.next_u32()), denom.clone()))
    };

    let mut multiplicities = Vec::with_capacity(samples as usize);
    let mut boundary_resamples = 0u64;
    let mut consecutive_boundary = 0u64;
    let mut pass = true;
    while multiplicities.len() < samples as usize {
        let s = draw(&mut rng);
        let t = draw(&mut rng);
        match prepared.multiplicity(&s, &t) {
            Multiplicity::Boundary => {
                boundary_resamples += 1;
                consecutive_boundary += 1;
                if consecutive_boundary > 10 * samples {
                    return Err(OracleError::DegenerateSampling {
                        hits: consecutive_boundary,
                    });
                }
            }
            Multiplicity::Count(k) => {
                consecutive_boundary = 0;
                if k != expected_level {
                    pass = false;
                }
                multiplicities.push(k);
            }
        }
    }
    Ok(MultiplicityReport {
        samples,
        expected_level,
        multiplicities,
        boundary_resamples,
        seed,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{parse_rational, FieldSpec};
    use crate::planar::validate_polygon;

    fn f() -> FieldSpec {
        FieldSpec::real_quadratic(2)
    }

    fn rv(spec: &FieldSpec, x: &str, y: &str) -> PlanarVector {
        PlanarVector::new(
            spec.from_rational(parse_rational(x).unwrap()),
            spec.from_rational(parse_rational(y).unwrap()),
        )
    }

    fn rational_polygon(spec: &FieldSpec, pts: &[(&str, &str)]) -> Polygon {
        validate_polygon(pts.iter().map(|(x, y)| rv(spec, x, y)).collect()).unwrap()
    }

    fn z2(spec: &FieldSpec) -> LatticeBasis {
        LatticeBasis::new(rv(spec, "1", "0"), rv(spec, "0", "1"))
    }

    fn unit_square(spec: &FieldSpec) -> Polygon {
        rational_polygon(spec, &[("0", "0"), ("1", "0"), ("1", "1"), ("0", "1")])
    }

    #[test]
    fn unit_square_multiplicities() {
        let f = f();
        let square = unit_square(&f);
        let lattice = z2(&f);
        assert_eq!(
            multiplicity_at(&square, &lattice, &rv(&f, "1/2", "1/2")),
            Multiplicity::Count(1)
        );
        assert_eq!(
            multiplicity_at(&square, &lattice, &rv(&f, "1/2", "0")),
            Multiplicity::Boundary
        );
        // Translation invariance.
        assert_eq!(
            multiplicity_at(&square, &lattice, &rv(&f, "7/2", "-5/2")),
            Multiplicity::Count(1)
        );
    }

    #[test]
    fn negatively_oriented_basis_counts_the_same() {
        let f = f();
        let square = unit_square(&f);
        // (0,1),(1,0) spans Z^2 with negative orientation.
        let flipped = LatticeBasis::new(rv(&f, "0", "1"), rv(&f, "1", "0"));
        assert_eq!(
            multiplicity_at(&square, &flipped, &rv(&f, "1/2", "1/2")),
            Multiplicity::Count(1)
        );
        let report = sample_verify(&square, &flipped, 1, 32, 3).unwrap();
        assert!(report.pass);
    }

    #[test]
    fn side_two_square_covers_four_times() {
        let f = f();
        let big = rational_polygon(
            &f,
            &[("-1", "-1"), ("1", "-1"), ("1", "1"), ("-1", "1")],
        );
        assert_eq!(
            multiplicity_at(&big, &z2(&f), &rv(&f, "1/2", "1/2")),
            Multiplicity::Count(4)
        );
    }

    #[test]
    fn integer_and_exact_scan_paths_agree() {
        let f = f();
        let octagon = rational_polygon(
            &f,
            &[
                ("0", "0"), ("1", "0"), ("2", "1"), ("2", "2"),
                ("1", "3"), ("0", "3"), ("-1", "2"), ("-1", "1"),
            ],
        );
        let skewed = LatticeBasis::new(rv(&f, "1", "0"), rv(&f, "1/2", "1/2"));
        let prepared = PreparedCover::new(&octagon, &skewed);
        assert!(prepared.integer.is_some());
        for (x, y) in [("1/3", "2/7"), ("-5/4", "9/2"), ("0", "1/9"), ("11/3", "-1/6")] {
            let (qx, qy) = skewed.coords_of(&rv(&f, x, y));
            assert_eq!(
                prepared.multiplicity(&qx, &qy),
                prepared.exact.multiplicity(&qx, &qy),
                "paths disagreed at ({x}, {y})"
            );
        }
    }

    #[test]
    fn sampler_passes_true_levels() {
        let f = f();
        let square = unit_square(&f);
        let report = sample_verify(&square, &z2(&f), 1, 64, 0).unwrap();
        assert!(report.pass);
        assert!(report.multiplicities.iter().all(|&k| k == 1));

        let wrong = sample_verify(&square, &z2(&f), 2, 8, 0).unwrap();
        assert!(!wrong.pass);
    }

    #[test]
    fn sampler_is_deterministic() {
        let f = f();
        let square = unit_square(&f);
        let a = sample_verify(&square, &z2(&f), 1, 16, 42).unwrap();
        let b = sample_verify(&square, &z2(&f), 1, 16, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn brute_force_agrees_on_goldens() {
        let f = f();
        assert!(brute_force_decide(&unit_square(&f)).unwrap().tiles());

        let octagon = rational_polygon(
            &f,
            &[
                ("0", "0"), ("1", "0"), ("2", "1"), ("2", "2"),
                ("1", "3"), ("0", "3"), ("-1", "2"), ("-1", "1"),
            ],
        );
        let verdict = brute_force_decide(&octagon).unwrap();
        let witness = verdict.witness().expect("octagon tiles");
        assert_eq!(witness.level, 7);
    }

    #[test]
    fn brute_force_guard() {
        let f = f();
        // A 26-gon (n = 13) exceeds the guard; build one from small edges.
        let mut edges = Vec::new();
        for k in 0..13i64 {
            edges.push(rv(&f, &format!("{}", 100 - k), &format!("{}", 1 + k)));
        }
        let mut vertices = vec![rv(&f, "0", "0")];
        for e in &edges {
            vertices.push(vertices.last().unwrap().add(e));
        }
        for e in &edges[..12] {
            vertices.push(vertices.last().unwrap().sub(e));
        }
        let polygon = validate_polygon(vertices).unwrap();
        assert_eq!(
            brute_force_decide(&polygon).unwrap_err(),
            OracleError::TooManyPairs { n: 13, max: 12 }
        );
    }
}
