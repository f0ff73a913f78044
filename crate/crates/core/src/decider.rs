//! The end-to-end tiling decision.
//!
//! A centrally symmetric convex polygon `P` tiles the plane multiply with
//! a lattice `L` iff every edge pair `j` satisfies one of two conditions:
//! (A1) the translation vector `tau_j` belongs to `L`, or (B1) the edge
//! vector `e_j` belongs to `L` together with (B2) some `t` strictly
//! between 0 and 1 putting `t*e_j + tau_j` in `L`. [`bolle_check`]
//! evaluates these conditions exactly for a given lattice.
//!
//! To decide tiling with *some* lattice, candidate lattices are tried in
//! two rounds. The Class A round fixes one index `j` whose translation
//! vector is provided for free by the summation identity and demands that
//! the remaining edges span a lattice, that every remaining translation
//! line carries a commensurable point, and that no remaining translation
//! vector itself is commensurable. The Class B round runs over the maximal
//! index sets of the selector, keeps those whose mixed span is discrete,
//! and demands a commensurable point on every unselected translation line.
//! Either way the candidate lattice is enlarged by the found points and
//! the final witness is re-verified by [`bolle_check`] before it is
//! reported, so a `Tiles` verdict is always certified.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numfield::FieldElement;
use crate::planar::{self, EdgePairing, PlanarVector, Polygon, PolygonError};
use crate::selector::{enumerate_maximal_sets, IndexSet, SelectorInstance};
use crate::subgroup::{is_discrete, lattice_basis, line_commensurable_point, LatticeBasis};

/// Status of one edge pair against a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairStatus {
    /// (A1): the translation vector is a lattice member.
    A1,
    /// (B1) + (B2): the edge is a lattice member and `t*e + tau` hits the
    /// lattice for this `t` in `(0, 1)`.
    B { t: FieldElement },
    /// Neither condition holds; `P + L` is not a multiple tiling.
    Fail,
}

/// Per-pair condition record for a polygon/lattice pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCondition {
    /// Zero-based pair index.
    pub index: usize,
    pub status: PairStatus,
}

/// Why a Class A candidate index was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassAFailure {
    /// (I): the other edges do not span a lattice.
    SpanNotLattice,
    /// (II): the translation line of `index` has no commensurable point.
    LineWithoutCommensurablePoint { index: usize },
    /// (III): the translation vector of `index` is commensurable.
    TranslationCommensurable { index: usize },
}

/// Why a Class B maximal set was rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassBFailure {
    /// The mixed span `T(J) + E([n] \ J)` is dense or rank-deficient.
    SpanNotLattice,
    /// The translation line of `index` has no commensurable point.
    LineWithoutCommensurablePoint { index: usize },
}

/// Audit trail for a negative verdict: every candidate examined and the
/// first sub-condition that failed it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RejectionRecord {
    pub class_a: Vec<(usize, ClassAFailure)>,
    pub class_b: Vec<(IndexSet, ClassBFailure)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TilingClass {
    A,
    B,
}

/// A certified positive answer.
#[derive(Debug, Clone)]
pub struct TilingWitness {
    /// The witness lattice `L*`.
    pub lattice: LatticeBasis,
    /// Tiling level: `area(P) / covolume(L*)`, an exact positive integer.
    pub level: u64,
    pub class: TilingClass,
    /// The index set whose translation vectors are lattice members.
    pub index_set: IndexSet,
    /// Condition satisfied by each edge pair; never contains `Fail`.
    pub pairs: Vec<PairCondition>,
}

/// Outcome of the tiling decision.
#[derive(Debug, Clone)]
pub enum Verdict {
    Tiles(TilingWitness),
    DoesNotTile { rejections: RejectionRecord },
}

impl Verdict {
    pub fn tiles(&self) -> bool {
        matches!(self, Verdict::Tiles(_))
    }

    pub fn witness(&self) -> Option<&TilingWitness> {
        match self {
            Verdict::Tiles(witness) => Some(witness),
            Verdict::DoesNotTile { .. } => None,
        }
    }
}

/// Evaluates the per-pair tiling conditions of `P` against `L`.
///
/// For each pair: (A1) iff `tau_j` has integer coordinates; otherwise
/// (B1) requires integer coordinates `(u, v)` for `e_j`, and (B2) is
/// decided exactly by enumerating the finitely many integers `m` that put
/// `t = (m - tau'_x) / u` in the open interval `(0, 1)` (the symmetric
/// form in `v` when `u = 0`) and testing whether the other coordinate
/// `v*t + tau'_y` lands on an integer. `P + L` tiles multiply at some
/// level iff no pair fails.
pub fn bolle_check(polygon: &Polygon, lattice: &LatticeBasis) -> Vec<PairCondition> {
    let pairing = planar::edge_pairs(polygon).expect("validated polygon");
    bolle_check_pairing(&pairing, lattice)
}

fn bolle_check_pairing(pairing: &EdgePairing, lattice: &LatticeBasis) -> Vec<PairCondition> {
    (0..pairing.n)
        .map(|index| PairCondition {
            index,
            status: pair_status(&pairing.e[index], &pairing.tau[index], lattice),
        })
        .collect()
}

fn pair_status(e: &PlanarVector, tau: &PlanarVector, lattice: &LatticeBasis) -> PairStatus {
    if lattice.contains(tau) {
        return PairStatus::A1;
    }
    let Some((u, v)) = lattice.integer_coords_of(e) else {
        return PairStatus::Fail;
    };
    let (tau_x, tau_y) = lattice.coords_of(tau);

    // Swap roles so the coordinate we sweep has a nonzero edge component.
    let (sweep, fixed, sweep_tau, fixed_tau) = if u.is_zero() {
        (v, u, tau_y, tau_x)
    } else {
        (u, v, tau_x, tau_y)
    };

    let spec = sweep_tau.spec().clone();
    let sweep_rat = BigRational::from_integer(sweep.clone());
    let fixed_rat = BigRational::from_integer(fixed.clone());

    // t in (0, 1) means m strictly between tau'_sweep and tau'_sweep + u.
    let end = &sweep_tau + &spec.from_rational(sweep_rat.clone());
    let (lo, hi) = if sweep.is_positive() {
        (sweep_tau.clone(), end)
    } else {
        (end, sweep_tau.clone())
    };
    let m_lo = &lo.floor() + BigInt::one();
    let m_hi = if hi.is_integer() {
        hi.to_integer().unwrap() - BigInt::one()
    } else {
        hi.floor()
    };

    let mut m = m_lo;
    while m <= m_hi {
        let t = (&spec.from_rational(BigRational::from_integer(m.clone())) - &sweep_tau)
            .div_rational(&sweep_rat);
        debug_assert!(t.sign() > 0 && (&spec.one() - &t).sign() > 0);
        let other = &t.mul_rational(&fixed_rat) + &fixed_tau;
        if other.is_integer() {
            return PairStatus::B { t };
        }
        m += BigInt::one();
    }
    PairStatus::Fail
}

/// Constructs the witness lattice for a candidate `(L, J)` that passed the
/// line checks: `L` is enlarged by one commensurable point per unselected
/// index, the basis is recomputed, and the result is re-verified with
/// [`bolle_check`]. A failed re-verification would be an internal bug and
/// panics.
pub fn build_witness(
    pairing: &EdgePairing,
    lattice: &LatticeBasis,
    selected: &IndexSet,
) -> (LatticeBasis, Vec<PairCondition>) {
    let mut generators = vec![lattice.b1().clone(), lattice.b2().clone()];
    for j in selected.complement(pairing.n).iter() {
        let point = line_commensurable_point(&pairing.tau[j], &pairing.e[j], lattice)
            .expect("line condition was verified for every unselected index");
        generators.push(point);
    }
    let witness = if generators.len() == 2 {
        lattice.clone()
    } else {
        // Every added point is commensurable, so the span stays discrete.
        lattice_basis(&generators)
    };
    let pairs = bolle_check_pairing(pairing, &witness);
    assert!(
        pairs.iter().all(|p| p.status != PairStatus::Fail),
        "witness lattice failed re-verification: implementation bug"
    );
    (witness, pairs)
}

/// The tiling level `area(P) / covolume(L)`, asserted to be an exact
/// positive integer. Call only after [`bolle_check`] reports no failure;
/// a non-integer quotient would contradict the tiling criterion and
/// panics.
pub fn level(polygon: &Polygon, lattice: &LatticeBasis) -> u64 {
    let quotient = planar::area(polygon)
        .div(&lattice.covolume())
        .expect("covolume is nonzero");
    let as_int = quotient
        .to_integer()
        .expect("tiling level must be an integer");
    assert!(as_int.is_positive(), "tiling level must be positive");
    u64::try_from(as_int).expect("tiling level exceeds u64")
}

/// The Class A round: for each index `j`, the span of the other edges must
/// be a lattice (I), every other translation line must carry a
/// commensurable point (II), and every other translation vector must be
/// incommensurable (III). The first index passing all three yields the
/// witness.
pub fn class_a(
    polygon: &Polygon,
    pairing: &EdgePairing,
) -> (Option<TilingWitness>, Vec<(usize, ClassAFailure)>) {
    let n = pairing.n;
    let mut rejections = Vec::new();
    'candidates: for j in 0..n {
        let others: Vec<_> = (0..n).filter(|&i| i != j).map(|i| pairing.e[i].clone()).collect();
        let result = is_discrete(&others);
        let Some(lattice) = result.lattice() else {
            rejections.push((j, ClassAFailure::SpanNotLattice));
            continue;
        };
        for i in (0..n).filter(|&i| i != j) {
            if line_commensurable_point(&pairing.tau[i], &pairing.e[i], lattice).is_none() {
                rejections.push((j, ClassAFailure::LineWithoutCommensurablePoint { index: i }));
                continue 'candidates;
            }
        }
        for i in (0..n).filter(|&i| i != j) {
            if lattice.is_commensurable(&pairing.tau[i]) {
                rejections.push((j, ClassAFailure::TranslationCommensurable { index: i }));
                continue 'candidates;
            }
        }
        let selected = IndexSet::from_indices(vec![j]);
        let (witness, pairs) = build_witness(pairing, lattice, &selected);
        let lvl = level(polygon, &witness);
        return (
            Some(TilingWitness {
                lattice: witness,
                level: lvl,
                class: TilingClass::A,
                index_set: selected,
                pairs,
            }),
            rejections,
        );
    }
    (None, rejections)
}

/// The Class B round: every maximal set `J` of the selector is tried in
/// lexicographic order; `J` qualifies when the mixed span
/// `T(J) + E([n] \ J)` is discrete and every unselected translation line
/// carries a commensurable point.
pub fn class_b(
    polygon: &Polygon,
    pairing: &EdgePairing,
) -> (Option<TilingWitness>, Vec<(IndexSet, ClassBFailure)>) {
    let n = pairing.n;
    let instance = SelectorInstance::new(pairing.e.clone(), pairing.tau.clone())
        .expect("edge pairing yields a valid selector instance");
    let mut rejections = Vec::new();
    'sets: for selected in enumerate_maximal_sets(&instance) {
        let generators = instance.mixed_generators(&selected);
        let result = is_discrete(&generators);
        let Some(lattice) = result.lattice() else {
            rejections.push((selected, ClassBFailure::SpanNotLattice));
            continue;
        };
        for j in selected.complement(n).iter() {
            if line_commensurable_point(&pairing.tau[j], &pairing.e[j], lattice).is_none() {
                rejections.push((
                    selected,
                    ClassBFailure::LineWithoutCommensurablePoint { index: j },
                ));
                continue 'sets;
            }
        }
        let (witness, pairs) = build_witness(pairing, lattice, &selected);
        let lvl = level(polygon, &witness);
        return (
            Some(TilingWitness {
                lattice: witness,
                level: lvl,
                class: TilingClass::B,
                index_set: selected,
                pairs,
            }),
            rejections,
        );
    }
    (None, rejections)
}

/// Decides whether the polygon tiles the plane multiply by translations
/// along some lattice: the Class A round first, then Class B. A positive
/// verdict carries the certified witness; a negative one records every
/// rejected candidate.
pub fn decide(polygon: &Polygon) -> Result<Verdict, PolygonError> {
    let pairing = planar::edge_pairs(polygon)?;

    let (witness, class_a_rejections) = class_a(polygon, &pairing);
    if let Some(witness) = witness {
        return Ok(Verdict::Tiles(witness));
    }

    let (witness, class_b_rejections) = class_b(polygon, &pairing);
    if let Some(witness) = witness {
        return Ok(Verdict::Tiles(witness));
    }

    Ok(Verdict::DoesNotTile {
        rejections: RejectionRecord {
            class_a: class_a_rejections,
            class_b: class_b_rejections,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::{parse_rational, FieldSpec};
    use crate::planar::{validate_polygon, PlanarVector};

    fn f() -> FieldSpec {
        FieldSpec::real_quadratic(2)
    }

    fn el(spec: &FieldSpec, r: &str, i: &str) -> FieldElement {
        spec.element(vec![parse_rational(r).unwrap(), parse_rational(i).unwrap()])
            .unwrap()
    }

    fn rv(spec: &FieldSpec, x: &str, y: &str) -> PlanarVector {
        PlanarVector::new(el(spec, x, "0"), el(spec, y, "0"))
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

    fn rational_octagon(spec: &FieldSpec) -> Polygon {
        rational_polygon(
            spec,
            &[
                ("0", "0"), ("1", "0"), ("2", "1"), ("2", "2"),
                ("1", "3"), ("0", "3"), ("-1", "2"), ("-1", "1"),
            ],
        )
    }

    /// Vertices (±1, ±(1+sqrt2)), (±(1+sqrt2), ±1) in ccw order.
    fn regular_octagon(spec: &FieldSpec) -> Polygon {
        let one_plus = |sgn: &str| el(spec, sgn, if sgn == "1" { "1" } else { "-1" });
        let plus = one_plus("1");
        let minus = one_plus("-1");
        let one = spec.one();
        let neg_one = spec.from_integer(-1);
        let pts = vec![
            PlanarVector::new(plus.clone(), one.clone()),
            PlanarVector::new(one.clone(), plus.clone()),
            PlanarVector::new(neg_one.clone(), plus.clone()),
            PlanarVector::new(minus.clone(), one.clone()),
            PlanarVector::new(minus.clone(), neg_one.clone()),
            PlanarVector::new(neg_one.clone(), minus.clone()),
            PlanarVector::new(one.clone(), minus.clone()),
            PlanarVector::new(plus.clone(), neg_one.clone()),
        ];
        validate_polygon(pts).unwrap()
    }

    #[test]
    fn bolle_all_a1_for_rational_octagon_on_z2() {
        let f = f();
        let conditions = bolle_check(&rational_octagon(&f), &z2(&f));
        assert_eq!(conditions.len(), 4);
        assert!(conditions.iter().all(|c| c.status == PairStatus::A1));
    }

    #[test]
    fn bolle_square_pair_is_a1() {
        let f = f();
        let conditions = bolle_check(&unit_square(&f), &z2(&f));
        assert_eq!(conditions[0].status, PairStatus::A1);
        assert_eq!(conditions[1].status, PairStatus::A1);
    }

    #[test]
    fn bolle_fails_when_edge_outside_lattice() {
        let f = f();
        // Stretch the x-axis by sqrt2: tau_1 = (0,1) is still a member, so
        // pair 1 is A1, but pair 2 fails: tau_2 = (-1,0) is not a member
        // and t*(0,1) + (-1,0) has irrational x-coordinate for every t.
        let stretched = LatticeBasis::new(
            PlanarVector::new(f.generator(), f.zero()),
            rv(&f, "0", "1"),
        );
        let conditions = bolle_check(&unit_square(&f), &stretched);
        assert_eq!(conditions[0].status, PairStatus::A1);
        assert_eq!(conditions[1].status, PairStatus::Fail);
    }

    #[test]
    fn bolle_finds_b_condition() {
        let f = f();
        // Side-2 square against Z^2: tau_1 = (0, 2) is in Z^2 -> A1;
        // but against the lattice spanned by (2, 0), (1, 2), tau_1 = (0,2)
        // has coordinates (-1/2, 1): not integer. e_1 = (2,0) = 1*(2,0):
        // B2 with t = 1/2 puts (1, 2) in the lattice.
        let square2 = rational_polygon(&f, &[("0", "0"), ("2", "0"), ("2", "2"), ("0", "2")]);
        let lattice = LatticeBasis::new(rv(&f, "2", "0"), rv(&f, "1", "2"));
        let conditions = bolle_check(&square2, &lattice);
        match &conditions[0].status {
            PairStatus::B { t } => {
                assert_eq!(t, &f.from_rational(parse_rational("1/2").unwrap()))
            }
            other => panic!("expected B, got {other:?}"),
        }
    }

    #[test]
    fn unit_square_tiles_at_level_one() {
        let f = f();
        let verdict = decide(&unit_square(&f)).unwrap();
        let witness = verdict.witness().expect("square tiles");
        assert_eq!(witness.level, 1);
        assert_eq!(witness.lattice.covolume(), f.one());
        assert!(witness.lattice.contains(&rv(&f, "1", "0")));
        assert!(witness.lattice.contains(&rv(&f, "0", "1")));
    }

    #[test]
    fn rational_octagon_tiles_at_level_seven() {
        let f = f();
        let octagon = rational_octagon(&f);
        let verdict = decide(&octagon).unwrap();
        let witness = verdict.witness().expect("rational octagon tiles");
        assert_eq!(witness.level, 7);
        // Witness is exactly Z^2.
        assert_eq!(witness.lattice.covolume(), f.one());
        assert!(witness.lattice.contains(&rv(&f, "1", "0")));
        assert!(witness.lattice.contains(&rv(&f, "0", "1")));
        assert_eq!(level(&octagon, &witness.lattice), 7);
    }

    #[test]
    fn regular_octagon_does_not_tile() {
        let f = f();
        let verdict = decide(&regular_octagon(&f)).unwrap();
        assert!(!verdict.tiles());
        match verdict {
            Verdict::DoesNotTile { rejections } => {
                // All four Class A candidates and every maximal set examined.
                assert_eq!(rejections.class_a.len(), 4);
                assert!(!rejections.class_b.is_empty());
            }
            Verdict::Tiles(_) => unreachable!(),
        }
    }

    #[test]
    fn hexagons_tile_via_class_b() {
        let f = f();
        let hexagon = rational_polygon(
            &f,
            &[("0", "0"), ("1", "0"), ("2", "1"), ("2", "2"), ("1", "2"), ("0", "1")],
        );
        let verdict = decide(&hexagon).unwrap();
        let witness = verdict.witness().expect("hexagons tile");
        assert_eq!(witness.class, TilingClass::B);
        assert_eq!(witness.level, 1);
        // T([3]) = span{(1,2), (-1,1)} has covolume 3 = area.
        assert_eq!(witness.index_set, IndexSet::from_indices(vec![0, 1, 2]));
    }

    #[test]
    fn irrational_hexagon_tiles() {
        let f = f();
        // Edges (1, 0), (sqrt2, sqrt2), (0, 1), mirrored.
        let v0 = rv(&f, "0", "0");
        let v1 = v0.add(&rv(&f, "1", "0"));
        let v2 = v1.add(&PlanarVector::new(f.generator(), f.generator()));
        let v3 = v2.add(&rv(&f, "0", "1"));
        let v4 = v3.add(&rv(&f, "-1", "0"));
        let v5 = v4.add(&PlanarVector::new(-&f.generator(), -&f.generator()));
        let hexagon = validate_polygon(vec![v0, v1, v2, v3, v4, v5]).unwrap();
        let verdict = decide(&hexagon).unwrap();
        assert!(verdict.tiles());
    }

    #[test]
    fn scale_invariance_of_the_verdict() {
        let f = f();
        let half = f.from_rational(parse_rational("1/2").unwrap());
        let octagon = rational_octagon(&f).scale(&half);
        let verdict = decide(&octagon).unwrap();
        let witness = verdict.witness().expect("scaled octagon still tiles");
        assert_eq!(witness.level, 7);

        let scaled_bad = regular_octagon(&f).scale(&f.from_integer(3));
        assert!(!decide(&scaled_bad).unwrap().tiles());
    }

    #[test]
    fn decision_works_over_a_cubic_field() {
        let f = FieldSpec::new(
            vec![
                parse_rational("-2").unwrap(),
                parse_rational("0").unwrap(),
                parse_rational("0").unwrap(),
                parse_rational("1").unwrap(),
            ],
            parse_rational("1").unwrap(),
            parse_rational("2").unwrap(),
        )
        .unwrap();
        let a = f.generator();
        // Hexagon with one edge stretched by cbrt2: edges (1,0), (a,a), (0,1).
        let v0 = PlanarVector::zero(&f);
        let v1 = v0.add(&PlanarVector::new(f.one(), f.zero()));
        let v2 = v1.add(&PlanarVector::new(a.clone(), a.clone()));
        let v3 = v2.add(&PlanarVector::new(f.zero(), f.one()));
        let v4 = v3.sub(&PlanarVector::new(f.one(), f.zero()));
        let v5 = v4.sub(&PlanarVector::new(a.clone(), a));
        let hexagon = validate_polygon(vec![v0, v1, v2, v3, v4, v5]).unwrap();
        let verdict = decide(&hexagon).unwrap();
        assert!(verdict.tiles(), "hexagons tile over any real field");
    }

    #[test]
    fn level_identity_examples() {
        let f = f();
        assert_eq!(level(&unit_square(&f), &z2(&f)), 1);
        assert_eq!(level(&rational_octagon(&f), &z2(&f)), 7);
        let hexagon = rational_polygon(
            &f,
            &[("0", "0"), ("1", "0"), ("2", "1"), ("2", "2"), ("1", "2"), ("0", "1")],
        );
        let lattice = LatticeBasis::new(rv(&f, "1", "2"), rv(&f, "-1", "1"));
        assert_eq!(level(&hexagon, &lattice), 1);
    }
}
