//! Exact 2D geometry over the field: vectors, validated centrally
//! symmetric convex polygons, and the edge/translation-vector pairing.
//!
//! A polygon with `2n` vertices in counterclockwise order has edges
//! `e_1, …, e_n, e_1', …, e_n'` where central symmetry forces
//! `e_j' = -e_j`. The translation vector `tau_j` carries edge `e_j` onto
//! its opposite: `e_j' = e_j + tau_j`. With edges indexed so that `e_j`
//! runs from vertex `v_{j-1}` to `v_j`, the pairing satisfies the exact
//! identity `tau_j = sum_{i>j} e_i - sum_{i<j} e_i`.

use std::fmt;

use crate::numfield::{FieldElement, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolygonError {
    #[error("polygon needs at least 4 vertices, got {count}")]
    TooFewVertices { count: usize },
    #[error("polygon must have an even number of vertices, got {count}")]
    OddVertexCount { count: usize },
    #[error("degenerate edge at index {index} (consecutive vertices coincide)")]
    DegenerateEdge { index: usize },
    #[error("polygon is not strictly convex at vertex index {index}")]
    NotConvex { index: usize },
    #[error("polygon is not centrally symmetric: edge {index} is not the negation of its opposite")]
    NotSymmetric { index: usize },
    #[error("vertex {index} does not belong to the same field as vertex 0")]
    MixedFieldSpec { index: usize },
    #[error("translation vectors {first} and {second} are parallel")]
    ParallelTaus { first: usize, second: usize },
}

/// A 2D vector with coordinates in the working field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarVector {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl PlanarVector {
    pub fn new(x: FieldElement, y: FieldElement) -> PlanarVector {
        assert!(x.spec() == y.spec(), "vector components from different fields");
        PlanarVector { x, y }
    }

    pub fn spec(&self) -> &FieldSpec {
        self.x.spec()
    }

    pub fn zero(spec: &FieldSpec) -> PlanarVector {
        PlanarVector {
            x: spec.zero(),
            y: spec.zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn add(&self, other: &PlanarVector) -> PlanarVector {
        PlanarVector {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub fn sub(&self, other: &PlanarVector) -> PlanarVector {
        PlanarVector {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn neg(&self) -> PlanarVector {
        PlanarVector {
            x: -&self.x,
            y: -&self.y,
        }
    }

    pub fn scale(&self, factor: &FieldElement) -> PlanarVector {
        PlanarVector {
            x: &self.x * factor,
            y: &self.y * factor,
        }
    }

    /// True iff the vectors span a line or less, i.e. `cross == 0`.
    pub fn is_parallel(&self, other: &PlanarVector) -> bool {
        cross(self, other).is_zero()
    }
}

impl fmt::Display for PlanarVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The 2D cross product `u.x * v.y - u.y * v.x`; zero iff `u` and `v` are
/// parallel (or one is zero).
pub fn cross(u: &PlanarVector, v: &PlanarVector) -> FieldElement {
    &(&u.x * &v.y) - &(&u.y * &v.x)
}

/// Solves `w = alpha * b1 + beta * b2` exactly by Cramer's rule.
///
/// Panics if the basis is singular (`cross(b1, b2) == 0`); callers check
/// independence before choosing a basis.
pub fn coords_in_basis(
    w: &PlanarVector,
    b1: &PlanarVector,
    b2: &PlanarVector,
) -> (FieldElement, FieldElement) {
    let det = cross(b1, b2);
    assert!(!det.is_zero(), "coords_in_basis: singular basis");
    let det_inv = det.inv().expect("nonzero determinant");
    let alpha = &cross(w, b2) * &det_inv;
    let beta = &cross(b1, w) * &det_inv;
    (alpha, beta)
}

/// A validated centrally symmetric, strictly convex polygon with `2n`
/// vertices in counterclockwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<PlanarVector>,
    /// Set when the input was clockwise and has been reversed.
    reversed: bool,
}

impl Polygon {
    pub fn vertices(&self) -> &[PlanarVector] {
        &self.vertices
    }

    /// Number of edge pairs `n` (half the vertex count).
    pub fn pair_count(&self) -> usize {
        self.vertices.len() / 2
    }

    pub fn spec(&self) -> &FieldSpec {
        self.vertices[0].spec()
    }

    /// True when the input ran clockwise and was reversed during validation.
    pub fn was_reversed(&self) -> bool {
        self.reversed
    }

    /// Translates every vertex by `offset`; validity is preserved.
    pub fn translate(&self, offset: &PlanarVector) -> Polygon {
        Polygon {
            vertices: self.vertices.iter().map(|v| v.add(offset)).collect(),
            reversed: self.reversed,
        }
    }

    /// Scales every vertex by a nonzero field element. A negative factor
    /// is a point reflection, which keeps orientation and symmetry.
    pub fn scale(&self, factor: &FieldElement) -> Polygon {
        assert!(!factor.is_zero(), "scale factor must be nonzero");
        Polygon {
            vertices: self.vertices.iter().map(|v| v.scale(factor)).collect(),
            reversed: self.reversed,
        }
    }
}

/// Validates a vertex list into a [`Polygon`], reversing clockwise input.
///
/// Rejections name the first offending index: odd or insufficient vertex
/// counts, zero-length edges, non-convex corners (including collinear
/// triples) and violations of central symmetry.
pub fn validate_polygon(vertices: Vec<PlanarVector>) -> Result<Polygon, PolygonError> {
    let count = vertices.len();
    if !count.is_multiple_of(2) {
        return Err(PolygonError::OddVertexCount { count });
    }
    if count < 4 {
        return Err(PolygonError::TooFewVertices { count });
    }
    let spec = vertices[0].spec().clone();
    for (index, v) in vertices.iter().enumerate() {
        if v.spec() != &spec {
            return Err(PolygonError::MixedFieldSpec { index });
        }
    }

    let orientation = validate_oriented(&vertices)?;
    if orientation < 0 {
        let mut reversed: Vec<PlanarVector> = vertices;
        reversed.reverse();
        validate_oriented(&reversed).map(|o| {
            debug_assert!(o > 0);
            Polygon {
                vertices: reversed,
                reversed: true,
            }
        })
    } else {
        Ok(Polygon {
            vertices,
            reversed: false,
        })
    }
}

/// Checks edges and symmetry; returns +1 for counterclockwise input and
/// -1 for clockwise (uniformly winding) input.
fn validate_oriented(vertices: &[PlanarVector]) -> Result<i8, PolygonError> {
    let count = vertices.len();
    let n = count / 2;
    let edges: Vec<PlanarVector> = (0..count)
        .map(|i| vertices[(i + 1) % count].sub(&vertices[i]))
        .collect();
    for (index, e) in edges.iter().enumerate() {
        if e.is_zero() {
            return Err(PolygonError::DegenerateEdge { index });
        }
    }
    let mut orientation = 0i8;
    for i in 0..count {
        let turn = cross(&edges[i], &edges[(i + 1) % count]).sign();
        if turn == 0 {
            return Err(PolygonError::NotConvex { index: (i + 1) % count });
        }
        if orientation == 0 {
            orientation = turn;
        } else if turn != orientation {
            return Err(PolygonError::NotConvex { index: (i + 1) % count });
        }
    }
    if orientation > 0 {
        // All-positive turns alone admit star polygons that wind several
        // times (e.g. the octagram); a convex boundary makes exactly one
        // full revolution, i.e. the cyclic direction sequence has exactly
        // one wrap-around descent.
        let mut descents = Vec::new();
        for i in 0..count {
            let j = (i + 1) % count;
            if direction_precedes(&edges[j], &edges[i]) {
                descents.push(j);
            }
        }
        if descents.len() != 1 {
            return Err(PolygonError::NotConvex {
                index: descents.get(1).copied().unwrap_or(0),
            });
        }
    }
    for index in 0..n {
        if edges[index + n] != edges[index].neg() {
            return Err(PolygonError::NotSymmetric { index });
        }
    }
    Ok(orientation)
}

/// Strict direction-angle order on nonzero, non-parallel vectors over
/// `[0, 2pi)`, with 0 at the positive x-axis.
fn direction_precedes(u: &PlanarVector, v: &PlanarVector) -> bool {
    let upper = |w: &PlanarVector| match w.y.sign() {
        1 => true,
        -1 => false,
        _ => w.x.sign() > 0,
    };
    match (upper(u), upper(v)) {
        (true, false) => true,
        (false, true) => false,
        _ => cross(u, v).sign() > 0,
    }
}

/// The edge vectors `e_1..e_n` and translation vectors `tau_1..tau_n` of a
/// validated polygon, together with its vertices.
#[derive(Debug, Clone)]
pub struct EdgePairing {
    pub n: usize,
    pub e: Vec<PlanarVector>,
    pub tau: Vec<PlanarVector>,
    pub vertices: Vec<PlanarVector>,
}

/// Derives the edge pairing of a polygon: `e_j = v_j - v_{j-1}` and
/// `tau_j = v_{j+n-1} - v_j` (the start of the opposite edge minus the end
/// of `e_j`), for `j = 1..n` with zero-based storage.
///
/// Asserts the summation identity for every `tau_j` and the pairwise
/// non-parallelism of the `e` family (a consequence of strict convexity).
/// Pairwise-parallel translation vectors are reported as
/// [`PolygonError::ParallelTaus`].
pub fn edge_pairs(polygon: &Polygon) -> Result<EdgePairing, PolygonError> {
    let vertices = polygon.vertices();
    let count = vertices.len();
    let n = count / 2;
    let e: Vec<PlanarVector> = (0..n).map(|i| vertices[i + 1].sub(&vertices[i])).collect();
    let tau: Vec<PlanarVector> = (0..n)
        .map(|i| vertices[(i + n) % count].sub(&vertices[(i + 1) % count]))
        .collect();

    // tau_j = sum_{i>j} e_i - sum_{i<j} e_i, exactly.
    for (j, tau_j) in tau.iter().enumerate() {
        let mut expected = PlanarVector::zero(polygon.spec());
        for (i, ei) in e.iter().enumerate() {
            if i > j {
                expected = expected.add(ei);
            } else if i < j {
                expected = expected.sub(ei);
            }
        }
        debug_assert!(&expected == tau_j, "translation identity violated at {j}");
    }

    for i in 0..n {
        for j in (i + 1)..n {
            assert!(
                !e[i].is_parallel(&e[j]),
                "strictly convex polygon produced parallel edges {i} and {j}"
            );
            if tau[i].is_parallel(&tau[j]) {
                return Err(PolygonError::ParallelTaus { first: i, second: j });
            }
        }
    }

    Ok(EdgePairing {
        n,
        e,
        tau,
        vertices: vertices.to_vec(),
    })
}

/// Exact shoelace area of a validated (counterclockwise) polygon.
pub fn area(polygon: &Polygon) -> FieldElement {
    let vertices = polygon.vertices();
    let spec = polygon.spec();
    let mut twice = spec.zero();
    for i in 0..vertices.len() {
        let j = (i + 1) % vertices.len();
        twice = &twice + &cross(&vertices[i], &vertices[j]);
    }
    let half = twice.div_rational(&num_rational::BigRational::from_integer(2.into()));
    debug_assert!(half.sign() > 0, "area of a valid polygon is positive");
    half
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::parse_rational;

    fn f() -> FieldSpec {
        FieldSpec::real_quadratic(2)
    }

    fn vec2(spec: &FieldSpec, x: &str, y: &str) -> PlanarVector {
        let parse = |s: &str| {
            let (rat, irr) = match s.split_once('+') {
                Some((r, i)) => (r, i.strip_suffix('a').unwrap()),
                None => (s, "0"),
            };
            spec.element(vec![
                parse_rational(rat).unwrap(),
                parse_rational(if irr.is_empty() { "1" } else { irr }).unwrap(),
            ])
            .unwrap()
        };
        PlanarVector::new(parse(x), parse(y))
    }

    fn polygon(spec: &FieldSpec, pts: &[(&str, &str)]) -> Result<Polygon, PolygonError> {
        validate_polygon(pts.iter().map(|(x, y)| vec2(spec, x, y)).collect())
    }

    #[test]
    fn cross_products() {
        let f = f();
        assert_eq!(cross(&vec2(&f, "1", "0"), &vec2(&f, "0", "1")), f.one());
        // (sqrt2, 1) x (2, sqrt2) = 0: proportional
        assert!(cross(&vec2(&f, "0+1a", "1"), &vec2(&f, "2", "0+1a")).is_zero());
        let v = vec2(&f, "1", "1");
        assert!(cross(&v, &v).is_zero());
    }

    #[test]
    fn basis_coordinates() {
        let f = f();
        let b1 = vec2(&f, "1", "0");
        let b2 = vec2(&f, "0", "1");
        let (a, b) = coords_in_basis(&vec2(&f, "1/2", "1/2"), &b1, &b2);
        assert_eq!(a, f.from_rational(parse_rational("1/2").unwrap()));
        assert_eq!(b, f.from_rational(parse_rational("1/2").unwrap()));

        // (sqrt2, 1 + sqrt2) in basis (sqrt2, 1), (0, 1) is (1, sqrt2);
        // oracle: substitute back.
        let c1 = vec2(&f, "0+1a", "1");
        let c2 = vec2(&f, "0", "1");
        let w = vec2(&f, "0+1a", "1+1a");
        let (alpha, beta) = coords_in_basis(&w, &c1, &c2);
        assert_eq!(alpha, f.one());
        assert_eq!(beta, f.generator());
        let back = c1.scale(&alpha).add(&c2.scale(&beta));
        assert_eq!(back, w);

        // b1 in basis (b1, b2) is (1, 0)
        let (a1, a0) = coords_in_basis(&b1, &b1, &b2);
        assert_eq!((a1, a0), (f.one(), f.zero()));
    }

    #[test]
    fn validates_unit_square() {
        let f = f();
        let p = polygon(&f, &[("0", "0"), ("1", "0"), ("1", "1"), ("0", "1")]).unwrap();
        assert_eq!(p.pair_count(), 2);
        assert!(!p.was_reversed());
    }

    #[test]
    fn validates_hexagon_and_derives_pairing() {
        let f = f();
        let p = polygon(
            &f,
            &[("0", "0"), ("1", "0"), ("2", "1"), ("2", "2"), ("1", "2"), ("0", "1")],
        )
        .unwrap();
        assert_eq!(p.pair_count(), 3);
        let pairing = edge_pairs(&p).unwrap();
        let expect = [("1", "0"), ("1", "1"), ("0", "1")];
        for (i, (x, y)) in expect.iter().enumerate() {
            assert_eq!(pairing.e[i], vec2(&f, x, y));
        }
        let expect_tau = [("1", "2"), ("-1", "1"), ("-2", "-1")];
        for (i, (x, y)) in expect_tau.iter().enumerate() {
            assert_eq!(pairing.tau[i], vec2(&f, x, y));
        }
    }

    #[test]
    fn rejects_invalid_inputs() {
        let f = f();
        assert_eq!(
            polygon(&f, &[("0", "0"), ("1", "0"), ("2", "1"), ("0", "1")]).unwrap_err(),
            PolygonError::NotSymmetric { index: 0 }
        );
        assert_eq!(
            polygon(&f, &[("0", "0"), ("1", "0"), ("1", "1")]).unwrap_err(),
            PolygonError::OddVertexCount { count: 3 }
        );
        assert_eq!(
            polygon(&f, &[("0", "0"), ("1", "0")]).unwrap_err(),
            PolygonError::TooFewVertices { count: 2 }
        );
        // repeated vertex -> degenerate edge
        assert_eq!(
            polygon(&f, &[("0", "0"), ("0", "0"), ("1", "1"), ("1", "1")]).unwrap_err(),
            PolygonError::DegenerateEdge { index: 0 }
        );
        // collinear triple -> not strictly convex at the middle vertex
        assert_eq!(
            polygon(
                &f,
                &[("0", "0"), ("1", "0"), ("2", "0"), ("3", "1"), ("2", "1"), ("1", "1")],
            )
            .unwrap_err(),
            PolygonError::NotConvex { index: 1 }
        );
    }

    #[test]
    fn rejects_winding_star_polygons() {
        let f = f();
        // Octagram {8/3}: regular octagon vertices visited in steps of
        // three. Every consecutive turn is a left turn and opposite edges
        // negate, but the boundary winds three times around the center.
        let star = polygon(
            &f,
            &[
                ("1+1a", "1"),
                ("-1+-1a", "1"),
                ("1", "-1+-1a"),
                ("1", "1+1a"),
                ("-1+-1a", "-1"),
                ("1+1a", "-1"),
                ("-1", "1+1a"),
                ("-1", "-1+-1a"),
            ],
        );
        assert!(matches!(star.unwrap_err(), PolygonError::NotConvex { .. }));
    }

    #[test]
    fn clockwise_input_is_reversed_with_flag() {
        let f = f();
        let p = polygon(&f, &[("0", "1"), ("1", "1"), ("1", "0"), ("0", "0")]).unwrap();
        assert!(p.was_reversed());
        assert_eq!(area(&p), f.one());
    }

    #[test]
    fn unit_square_pairing() {
        let f = f();
        let p = polygon(&f, &[("0", "0"), ("1", "0"), ("1", "1"), ("0", "1")]).unwrap();
        let pairing = edge_pairs(&p).unwrap();
        assert_eq!(pairing.e, vec![vec2(&f, "1", "0"), vec2(&f, "0", "1")]);
        assert_eq!(pairing.tau, vec![vec2(&f, "0", "1"), vec2(&f, "-1", "0")]);
    }

    #[test]
    fn shoelace_areas() {
        let f = f();
        let square = polygon(&f, &[("0", "0"), ("1", "0"), ("1", "1"), ("0", "1")]).unwrap();
        assert_eq!(area(&square), f.one());

        let octagon = polygon(
            &f,
            &[
                ("0", "0"), ("1", "0"), ("2", "1"), ("2", "2"),
                ("1", "3"), ("0", "3"), ("-1", "2"), ("-1", "1"),
            ],
        )
        .unwrap();
        assert_eq!(area(&octagon), f.from_integer(7));

        let hexagon = polygon(
            &f,
            &[("0", "0"), ("1", "0"), ("2", "1"), ("2", "2"), ("1", "2"), ("0", "1")],
        )
        .unwrap();
        assert_eq!(area(&hexagon), f.from_integer(3));

        let shifted = hexagon.translate(&vec2(&f, "5", "-7/3"));
        assert_eq!(area(&shifted), f.from_integer(3));
    }
}
