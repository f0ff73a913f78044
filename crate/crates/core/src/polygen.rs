//! Random generation of valid inputs: centrally symmetric convex polygons
//! and selector instances with exact coordinates.
//!
//! Polygons are built edge-first: sample `n` nonzero, pairwise
//! non-parallel edge vectors in the open upper half-plane (plus the
//! positive x-axis), sort them by direction, walk them from the origin and
//! then walk their negations back. Consecutive cross products are positive
//! by construction, so the result always validates.

use num_rational::BigRational;
use rand::Rng;

use crate::numfield::{FieldElement, FieldSpec};
use crate::planar::{cross, validate_polygon, PlanarVector, Polygon};
use crate::selector::SelectorInstance;

/// Coordinate sampling parameters.
#[derive(Debug, Clone)]
pub struct CoordSampler {
    pub spec: FieldSpec,
    /// Numerators are drawn from `-max_numer ..= max_numer`.
    pub max_numer: i64,
    /// Denominators are drawn from `1 ..= max_denom`.
    pub max_denom: i64,
    /// Probability (0..=1) that the generator coordinate is nonzero; 0
    /// produces purely rational values.
    pub irrational_share: f64,
}

impl CoordSampler {
    pub fn rational(spec: FieldSpec, max_numer: i64, max_denom: i64) -> CoordSampler {
        CoordSampler {
            spec,
            max_numer,
            max_denom,
            irrational_share: 0.0,
        }
    }

    pub fn mixed(spec: FieldSpec, max_numer: i64, max_denom: i64, share: f64) -> CoordSampler {
        CoordSampler {
            spec,
            max_numer,
            max_denom,
            irrational_share: share,
        }
    }

    fn rational_part(&self, rng: &mut impl Rng) -> BigRational {
        let numer = rng.gen_range(-self.max_numer..=self.max_numer);
        let denom = rng.gen_range(1..=self.max_denom);
        BigRational::new(numer.into(), denom.into())
    }

    /// One field element; higher coordinates are zero unless the draw is
    /// chosen irrational.
    pub fn element(&self, rng: &mut impl Rng) -> FieldElement {
        let degree = self.spec.degree();
        let mut coords = vec![BigRational::from_integer(0.into()); degree];
        coords[0] = self.rational_part(rng);
        if degree > 1 && rng.gen_bool(self.irrational_share) {
            coords[1] = self.rational_part(rng);
        }
        self.spec.element(coords).expect("degree matches")
    }

    pub fn vector(&self, rng: &mut impl Rng) -> PlanarVector {
        PlanarVector::new(self.element(rng), self.element(rng))
    }
}

/// A random centrally symmetric strictly convex polygon with `2n` vertices.
pub fn random_symmetric_polygon(
    rng: &mut impl Rng,
    sampler: &CoordSampler,
    n: usize,
) -> Polygon {
    assert!(n >= 2, "polygons need at least two edge pairs");
    let mut edges: Vec<PlanarVector> = Vec::with_capacity(n);
    while edges.len() < n {
        let candidate = upper_half_vector(rng, sampler);
        if edges.iter().any(|e| e.is_parallel(&candidate)) {
            continue;
        }
        edges.push(candidate);
    }
    // Ascending direction within the half-plane: cross(a, b) > 0 puts a
    // first.
    edges.sort_by(|a, b| match cross(a, b).sign() {
        1 => std::cmp::Ordering::Less,
        -1 => std::cmp::Ordering::Greater,
        _ => unreachable!("parallel edges were filtered"),
    });

    let spec = &sampler.spec;
    let mut vertices = Vec::with_capacity(2 * n);
    let mut cursor = PlanarVector::zero(spec);
    vertices.push(cursor.clone());
    for e in &edges {
        cursor = cursor.add(e);
        vertices.push(cursor.clone());
    }
    for e in &edges[..n - 1] {
        cursor = cursor.sub(e);
        vertices.push(cursor.clone());
    }
    validate_polygon(vertices).expect("construction yields a valid polygon")
}

/// A nonzero vector with `y > 0`, or `y = 0` and `x > 0`.
fn upper_half_vector(rng: &mut impl Rng, sampler: &CoordSampler) -> PlanarVector {
    loop {
        let v = sampler.vector(rng);
        match v.y.sign() {
            1 => return v,
            -1 => return v.neg(),
            _ => {
                if v.x.sign() > 0 {
                    return v;
                }
                if v.x.sign() < 0 {
                    return v.neg();
                }
            }
        }
    }
}

/// A random selector instance: `n` edges and `n` translations, each family
/// nonzero and pairwise non-parallel.
pub fn random_selector_instance(
    rng: &mut impl Rng,
    sampler: &CoordSampler,
    n: usize,
) -> SelectorInstance {
    let family = |rng: &mut _| {
        let mut list: Vec<PlanarVector> = Vec::with_capacity(n);
        while list.len() < n {
            let candidate = sampler.vector(rng);
            if candidate.is_zero() || list.iter().any(|v| v.is_parallel(&candidate)) {
                continue;
            }
            list.push(candidate);
        }
        list
    };
    let e = family(rng);
    let tau = family(rng);
    SelectorInstance::new(e, tau).expect("families are nonzero and non-parallel")
}

/// A random rational lattice basis with entries from the sampler.
pub fn random_lattice(rng: &mut impl Rng, sampler: &CoordSampler) -> crate::subgroup::LatticeBasis {
    loop {
        let b1 = sampler.vector(rng);
        let b2 = sampler.vector(rng);
        if !b1.is_zero() && !b2.is_zero() && !b1.is_parallel(&b2) {
            return crate::subgroup::LatticeBasis::new(b1, b2);
        }
    }
}
