//! Deterministic SVG rendering of polygons, edge/translation vectors and
//! lattice tilings.
//!
//! All coordinates are approximated to within 1e-7 and printed with a
//! fixed six-decimal format, so output is byte-identical across runs for
//! identical input. The y-axis is flipped at the coordinate level (SVG y
//! grows downward).

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use multitile::numfield::FieldElement;
use multitile::planar::{EdgePairing, PlanarVector, Polygon};
use multitile::subgroup::LatticeBasis;

/// A rational axis-aligned view window `[x0, x1] x [y0, y1]`.
#[derive(Debug, Clone)]
pub struct Window {
    pub x0: BigRational,
    pub y0: BigRational,
    pub x1: BigRational,
    pub y1: BigRational,
}

impl Window {
    /// The polygon's bounding box blown up to three times its size about
    /// its center.
    pub fn around(polygon: &Polygon) -> Window {
        let eps = BigRational::new(BigInt::one(), BigInt::from(10_000_000u64));
        let xs: Vec<BigRational> = polygon.vertices().iter().map(|v| v.x.approx(&eps)).collect();
        let ys: Vec<BigRational> = polygon.vertices().iter().map(|v| v.y.approx(&eps)).collect();
        let min = |vals: &[BigRational]| vals.iter().min().unwrap().clone();
        let max = |vals: &[BigRational]| vals.iter().max().unwrap().clone();
        let (x_lo, x_hi, y_lo, y_hi) = (min(&xs), max(&xs), min(&ys), max(&ys));
        let two = BigRational::from_integer(2.into());
        let cx = (&x_lo + &x_hi) / &two;
        let cy = (&y_lo + &y_hi) / &two;
        let three_halves = BigRational::new(3.into(), 2.into());
        let rx = (&x_hi - &x_lo) * &three_halves;
        let ry = (&y_hi - &y_lo) * &three_halves;
        Window {
            x0: &cx - &rx,
            y0: &cy - &ry,
            x1: &cx + &rx,
            y1: &cy + &ry,
        }
    }
}

/// Fixed six-decimal rendering of a rational.
fn fmt6_rational(q: &BigRational) -> String {
    let million = BigInt::from(1_000_000u64);
    let scaled = q * BigRational::from_integer(million.clone())
        + BigRational::new(BigInt::one(), BigInt::from(2));
    let rounded = scaled.floor().to_integer();
    let negative = rounded.is_negative();
    let magnitude = rounded.abs();
    let whole = &magnitude / &million;
    let frac = &magnitude % &million;
    format!(
        "{}{}.{:06}",
        if negative { "-" } else { "" },
        whole,
        frac
    )
}

/// Six-decimal rendering of a field element under the real embedding.
fn fmt6(x: &FieldElement) -> String {
    let eps = BigRational::new(BigInt::one(), BigInt::from(10_000_000u64));
    fmt6_rational(&x.approx(&eps))
}

/// An (x, y) pair with the y-axis flipped for SVG.
fn point(v: &PlanarVector) -> String {
    let y = -&v.y;
    format!("{},{}", fmt6(&v.x), fmt6(&y))
}

fn polygon_points(polygon: &Polygon, offset: Option<&PlanarVector>) -> String {
    polygon
        .vertices()
        .iter()
        .map(|v| match offset {
            Some(shift) => point(&v.add(shift)),
            None => point(v),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn header(window: &Window) -> String {
    let width = &window.x1 - &window.x0;
    let height = &window.y1 - &window.y0;
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        fmt6_rational(&window.x0),
        fmt6_rational(&(-&window.y1)),
        fmt6_rational(&width),
        fmt6_rational(&height),
    )
}

/// Renders all lattice translates of the polygon that meet the window,
/// overlap-shaded so the covering level is visible. The `level` caption is
/// printed when supplied.
pub fn render_tiling(
    polygon: &Polygon,
    lattice: &LatticeBasis,
    level: Option<u64>,
    window: &Window,
) -> String {
    let spec = polygon.spec();
    let reduced = lattice.reduced();
    let eps = BigRational::new(BigInt::one(), BigInt::from(10_000_000u64));

    // Polygon bounding box (rational outer bounds).
    let approx_all = |pick: &dyn Fn(&PlanarVector) -> &FieldElement| -> Vec<BigRational> {
        polygon.vertices().iter().map(|v| pick(v).approx(&eps)).collect()
    };
    let xs = approx_all(&|v| &v.x);
    let ys = approx_all(&|v| &v.y);
    let pad = &eps * BigRational::from_integer(2.into());
    let px_lo = xs.iter().min().unwrap() - &pad;
    let px_hi = xs.iter().max().unwrap() + &pad;
    let py_lo = ys.iter().min().unwrap() - &pad;
    let py_hi = ys.iter().max().unwrap() + &pad;

    // Offsets l must satisfy: bbox(P) + l meets the window. In lattice
    // coordinates that rectangle's corners bound an integer box.
    let rect = [
        (&window.x0 - &px_hi, &window.y0 - &py_hi),
        (&window.x0 - &px_hi, &window.y1 - &py_lo),
        (&window.x1 - &px_lo, &window.y0 - &py_hi),
        (&window.x1 - &px_lo, &window.y1 - &py_lo),
    ];
    let mut m1_lo: Option<BigInt> = None;
    let mut m1_hi: Option<BigInt> = None;
    let mut m2_lo: Option<BigInt> = None;
    let mut m2_hi: Option<BigInt> = None;
    for (x, y) in &rect {
        let corner = PlanarVector::new(
            spec.from_rational(x.clone()),
            spec.from_rational(y.clone()),
        );
        let (a, b) = reduced.coords_of(&corner);
        let (fa, fb) = (a.floor(), b.floor());
        let widen = |lo: &mut Option<BigInt>, hi: &mut Option<BigInt>, v: BigInt| {
            if lo.as_ref().is_none_or(|cur| &v < cur) {
                *lo = Some(v.clone());
            }
            let v1 = v + BigInt::one();
            if hi.as_ref().is_none_or(|cur| &v1 > cur) {
                *hi = Some(v1);
            }
        };
        widen(&mut m1_lo, &mut m1_hi, fa);
        widen(&mut m2_lo, &mut m2_hi, fb);
    }
    let (m1_lo, m1_hi) = (m1_lo.unwrap(), m1_hi.unwrap());
    let (m2_lo, m2_hi) = (m2_lo.unwrap(), m2_hi.unwrap());

    let overlaps = |shift: &PlanarVector| -> bool {
        let sx = shift.x.approx(&eps);
        let sy = shift.y.approx(&eps);
        &px_lo + &sx <= window.x1
            && &px_hi + &sx >= window.x0
            && &py_lo + &sy <= window.y1
            && &py_hi + &sy >= window.y0
    };

    let mut body = String::new();
    let mut translates = 0usize;
    let mut m1 = m1_lo;
    while m1 <= m1_hi {
        let mut m2 = m2_lo.clone();
        while m2 <= m2_hi {
            let shift = reduced.point_at(
                &spec.from_rational(BigRational::from_integer(m1.clone())),
                &spec.from_rational(BigRational::from_integer(m2.clone())),
            );
            if overlaps(&shift) {
                let _ = writeln!(
                    body,
                    "<polygon points=\"{}\" fill=\"#4a90d9\" fill-opacity=\"0.18\" \
                     stroke=\"#1f3b57\" stroke-width=\"0.03\"/>",
                    polygon_points(polygon, Some(&shift)),
                );
                translates += 1;
            }
            m2 += BigInt::one();
        }
        m1 += BigInt::one();
    }

    let mut out = header(window);
    let _ = writeln!(
        out,
        "<desc>{} lattice translates</desc>",
        translates
    );
    out.push_str(&body);
    let _ = writeln!(
        out,
        "<polygon points=\"{}\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"0.06\"/>",
        polygon_points(polygon, None),
    );
    if let Some(level) = level {
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"0.6\" fill=\"#1f3b57\">level {}</text>",
            fmt6_rational(&(&window.x0 + &BigRational::new(1.into(), 4.into()))),
            fmt6_rational(&(-&window.y1 + BigRational::new(3.into(), 4.into()))),
            level,
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Renders the polygon outline with its edge vectors `e_j` and translation
/// vectors `tau_j` drawn as labeled arrows.
pub fn render_outline(polygon: &Polygon, pairing: &EdgePairing, window: &Window) -> String {
    let mut out = header(window);
    out.push_str(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" \
         markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">\
         <path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"context-stroke\"/></marker></defs>\n",
    );
    let _ = writeln!(
        out,
        "<polygon points=\"{}\" fill=\"#f4f6f8\" stroke=\"#1f3b57\" stroke-width=\"0.04\"/>",
        polygon_points(polygon, None),
    );
    let half = BigRational::new(1.into(), 2.into());
    let spec = polygon.spec();
    let half_el = spec.from_rational(half);
    for j in 0..pairing.n {
        let start = &pairing.vertices[j];
        let end = &pairing.vertices[j + 1];
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#c0392b\" \
             stroke-width=\"0.05\" marker-end=\"url(#arrow)\"/>",
            fmt6(&start.x),
            fmt6(&-&start.y),
            fmt6(&end.x),
            fmt6(&-&end.y),
        );
        let mid = start.add(&end.sub(start).scale(&half_el));
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"0.35\" fill=\"#c0392b\">e{}</text>",
            fmt6(&mid.x),
            fmt6(&-&mid.y),
            j + 1,
        );

        let tau_start = end;
        let tau_end = end.add(&pairing.tau[j]);
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#2e7d32\" \
             stroke-width=\"0.035\" stroke-dasharray=\"0.12,0.08\" marker-end=\"url(#arrow)\"/>",
            fmt6(&tau_start.x),
            fmt6(&-&tau_start.y),
            fmt6(&tau_end.x),
            fmt6(&-&tau_end.y),
        );
        let tau_mid = tau_start.add(&tau_end.sub(tau_start).scale(&half_el));
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"0.35\" fill=\"#2e7d32\">\u{3c4}{}</text>",
            fmt6(&tau_mid.x),
            fmt6(&-&tau_mid.y),
            j + 1,
        );
    }
    out.push_str("</svg>\n");
    out
}
