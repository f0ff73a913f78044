//! Decides whether a centrally symmetric convex polygon tiles the plane
//! multiply by translations along some lattice.
//!
//! All computation is exact: vertex coordinates live in a fixed real
//! algebraic number field `Q(a)` and every geometric predicate reduces to
//! rational arithmetic plus sign determination through a real embedding of
//! `a`. A positive answer comes with a witness lattice and the integer
//! tiling level; every verdict can be cross-checked against brute-force
//! oracles in [`oracle`].

pub mod decider;
pub mod json;
pub mod numfield;
pub mod oracle;
pub mod planar;
pub mod polygen;
pub mod selector;
pub mod subgroup;

pub use decider::{decide, Verdict};
pub use numfield::{FieldElement, FieldSpec};
pub use planar::{PlanarVector, Polygon};
pub use subgroup::LatticeBasis;

// Every code block in the guide compiles and runs as a doc-test, so the
// book cannot drift from the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(readme, "../../../README.md");
    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(number_field, "../../../book/src/number-field.md");
    chapter!(polygons, "../../../book/src/polygons.md");
    chapter!(subgroups, "../../../book/src/subgroups.md");
    chapter!(selection, "../../../book/src/selection.md");
    chapter!(deciding, "../../../book/src/deciding.md");
    chapter!(verification, "../../../book/src/verification.md");
    chapter!(cli, "../../../book/src/cli.md");
}
