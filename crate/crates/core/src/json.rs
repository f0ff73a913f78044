//! JSON wire formats for every externally visible object.
//!
//! Rationals travel as strings `"p"` or `"p/q"`; a field element is an
//! array of `degree` rational strings; a vector is a two-element array of
//! elements. Encoding uses `serde_json`'s sorted-key objects, so output is
//! deterministic. Decoding reports the path of the offending field.

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::decider::{
    ClassAFailure, ClassBFailure, PairCondition, PairStatus, RejectionRecord, TilingClass,
    TilingWitness, Verdict,
};
use crate::numfield::{format_rational, parse_rational, FieldElement, FieldSpec};
use crate::oracle::MultiplicityReport;
use crate::planar::PlanarVector;
use crate::selector::IndexSet;
use crate::subgroup::{DiscretenessResult, LatticeBasis};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid input at {path}: {message}")]
pub struct JsonError {
    pub path: String,
    pub message: String,
}

fn err<T>(path: &str, message: impl Into<String>) -> Result<T, JsonError> {
    Err(JsonError {
        path: path.to_string(),
        message: message.into(),
    })
}

fn get<'v>(value: &'v Value, path: &str, key: &str) -> Result<&'v Value, JsonError> {
    value
        .get(key)
        .ok_or_else(|| JsonError {
            path: format!("{path}.{key}"),
            message: "missing field".into(),
        })
}

fn as_array<'v>(value: &'v Value, path: &str) -> Result<&'v Vec<Value>, JsonError> {
    value
        .as_array()
        .ok_or_else(|| JsonError {
            path: path.to_string(),
            message: "expected an array".into(),
        })
}

fn as_str<'v>(value: &'v Value, path: &str) -> Result<&'v str, JsonError> {
    value.as_str().ok_or_else(|| JsonError {
        path: path.to_string(),
        message: "expected a string".into(),
    })
}

fn as_u64(value: &Value, path: &str) -> Result<u64, JsonError> {
    value.as_u64().ok_or_else(|| JsonError {
        path: path.to_string(),
        message: "expected a non-negative integer".into(),
    })
}

pub fn rational_from_json(value: &Value, path: &str) -> Result<BigRational, JsonError> {
    let s = as_str(value, path)?;
    parse_rational(s).map_err(|e| JsonError {
        path: path.to_string(),
        message: e.to_string(),
    })
}

pub fn field_spec_to_json(spec: &FieldSpec) -> Value {
    let (lo, hi) = spec.root_interval();
    json!({
        "degree": spec.degree() as u64,
        "minpoly": spec.minpoly().iter().map(format_rational).collect::<Vec<_>>(),
        "root_interval": [format_rational(lo), format_rational(hi)],
    })
}

pub fn field_spec_from_json(value: &Value) -> Result<FieldSpec, JsonError> {
    let path = "field";
    let degree = as_u64(get(value, path, "degree")?, &format!("{path}.degree"))? as usize;
    let coeffs_v = as_array(get(value, path, "minpoly")?, &format!("{path}.minpoly"))?;
    let mut minpoly = Vec::with_capacity(coeffs_v.len());
    for (i, c) in coeffs_v.iter().enumerate() {
        minpoly.push(rational_from_json(c, &format!("{path}.minpoly[{i}]"))?);
    }
    let interval = as_array(
        get(value, path, "root_interval")?,
        &format!("{path}.root_interval"),
    )?;
    if interval.len() != 2 {
        return err(&format!("{path}.root_interval"), "expected [lo, hi]");
    }
    let lo = rational_from_json(&interval[0], &format!("{path}.root_interval[0]"))?;
    let hi = rational_from_json(&interval[1], &format!("{path}.root_interval[1]"))?;
    let spec = FieldSpec::new(minpoly, lo, hi).map_err(|e| JsonError {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    if spec.degree() != degree {
        return err(
            &format!("{path}.degree"),
            format!("degree {} does not match minpoly of degree {}", degree, spec.degree()),
        );
    }
    Ok(spec)
}

pub fn element_to_json(element: &FieldElement) -> Value {
    Value::Array(
        element
            .coords()
            .iter()
            .map(|c| Value::String(format_rational(c)))
            .collect(),
    )
}

pub fn element_from_json(
    spec: &FieldSpec,
    value: &Value,
    path: &str,
) -> Result<FieldElement, JsonError> {
    let coords_v = as_array(value, path)?;
    let mut coords = Vec::with_capacity(coords_v.len());
    for (i, c) in coords_v.iter().enumerate() {
        coords.push(rational_from_json(c, &format!("{path}[{i}]"))?);
    }
    spec.element(coords).map_err(|e| JsonError {
        path: path.to_string(),
        message: e.to_string(),
    })
}

pub fn vector_to_json(vector: &PlanarVector) -> Value {
    Value::Array(vec![element_to_json(&vector.x), element_to_json(&vector.y)])
}

pub fn vector_from_json(
    spec: &FieldSpec,
    value: &Value,
    path: &str,
) -> Result<PlanarVector, JsonError> {
    let pair = as_array(value, path)?;
    if pair.len() != 2 {
        return err(path, "expected [x, y]");
    }
    Ok(PlanarVector::new(
        element_from_json(spec, &pair[0], &format!("{path}[0]"))?,
        element_from_json(spec, &pair[1], &format!("{path}[1]"))?,
    ))
}

pub fn vectors_from_json(
    spec: &FieldSpec,
    value: &Value,
    path: &str,
) -> Result<Vec<PlanarVector>, JsonError> {
    let list = as_array(value, path)?;
    let mut out = Vec::with_capacity(list.len());
    for (i, v) in list.iter().enumerate() {
        out.push(vector_from_json(spec, v, &format!("{path}[{i}]"))?);
    }
    Ok(out)
}

pub fn polygon_to_json(vertices: &[PlanarVector]) -> Value {
    json!({
        "vertices": vertices.iter().map(vector_to_json).collect::<Vec<_>>(),
    })
}

pub fn lattice_to_json(lattice: &LatticeBasis) -> Value {
    Value::Array(vec![
        vector_to_json(lattice.b1()),
        vector_to_json(lattice.b2()),
    ])
}

pub fn lattice_from_json(
    spec: &FieldSpec,
    value: &Value,
    path: &str,
) -> Result<LatticeBasis, JsonError> {
    let pair = as_array(value, path)?;
    if pair.len() != 2 {
        return err(path, "expected [b1, b2]");
    }
    let b1 = vector_from_json(spec, &pair[0], &format!("{path}[0]"))?;
    let b2 = vector_from_json(spec, &pair[1], &format!("{path}[1]"))?;
    if b1.is_parallel(&b2) {
        return err(path, "basis vectors must be linearly independent");
    }
    Ok(LatticeBasis::new(b1, b2))
}

/// One-based index array.
pub fn index_set_to_json(set: &IndexSet) -> Value {
    Value::Array(set.iter().map(|i| Value::from(i as u64 + 1)).collect())
}

pub fn index_set_from_json(value: &Value, path: &str) -> Result<IndexSet, JsonError> {
    let list = as_array(value, path)?;
    let mut indices = Vec::with_capacity(list.len());
    for (i, v) in list.iter().enumerate() {
        let one_based = as_u64(v, &format!("{path}[{i}]"))?;
        if one_based == 0 {
            return err(&format!("{path}[{i}]"), "indices are one-based");
        }
        indices.push(one_based as usize - 1);
    }
    Ok(IndexSet::from_indices(indices))
}

fn pair_to_json(pair: &PairCondition) -> Value {
    let mut object = Map::new();
    object.insert("j".into(), Value::from(pair.index as u64 + 1));
    match &pair.status {
        PairStatus::A1 => {
            object.insert("status".into(), "A1".into());
        }
        PairStatus::B { t } => {
            object.insert("status".into(), "B".into());
            object.insert("t".into(), element_to_json(t));
        }
        PairStatus::Fail => {
            object.insert("status".into(), "Fail".into());
        }
    }
    Value::Object(object)
}

fn pair_from_json(spec: &FieldSpec, value: &Value, path: &str) -> Result<PairCondition, JsonError> {
    let j = as_u64(get(value, path, "j")?, &format!("{path}.j"))?;
    if j == 0 {
        return err(&format!("{path}.j"), "indices are one-based");
    }
    let status = match as_str(get(value, path, "status")?, &format!("{path}.status"))? {
        "A1" => PairStatus::A1,
        "B" => PairStatus::B {
            t: element_from_json(spec, get(value, path, "t")?, &format!("{path}.t"))?,
        },
        "Fail" => PairStatus::Fail,
        other => return err(&format!("{path}.status"), format!("unknown status {other:?}")),
    };
    Ok(PairCondition {
        index: j as usize - 1,
        status,
    })
}

fn rejections_to_json(record: &RejectionRecord) -> Value {
    let mut out = Vec::new();
    for (index, failure) in &record.class_a {
        let mut object = Map::new();
        object.insert("kind".into(), "class_a".into());
        object.insert("j".into(), Value::from(*index as u64 + 1));
        let (reason, at) = match failure {
            ClassAFailure::SpanNotLattice => ("span-not-lattice", None),
            ClassAFailure::LineWithoutCommensurablePoint { index } => {
                ("line-without-commensurable-point", Some(*index))
            }
            ClassAFailure::TranslationCommensurable { index } => {
                ("translation-commensurable", Some(*index))
            }
        };
        object.insert("reason".into(), reason.into());
        if let Some(at) = at {
            object.insert("at".into(), Value::from(at as u64 + 1));
        }
        out.push(Value::Object(object));
    }
    for (set, failure) in &record.class_b {
        let mut object = Map::new();
        object.insert("kind".into(), "class_b".into());
        object.insert("J".into(), index_set_to_json(set));
        let (reason, at) = match failure {
            ClassBFailure::SpanNotLattice => ("span-not-lattice", None),
            ClassBFailure::LineWithoutCommensurablePoint { index } => {
                ("line-without-commensurable-point", Some(*index))
            }
        };
        object.insert("reason".into(), reason.into());
        if let Some(at) = at {
            object.insert("at".into(), Value::from(at as u64 + 1));
        }
        out.push(Value::Object(object));
    }
    Value::Array(out)
}

fn rejections_from_json(value: &Value, path: &str) -> Result<RejectionRecord, JsonError> {
    let list = as_array(value, path)?;
    let mut record = RejectionRecord::default();
    for (i, item) in list.iter().enumerate() {
        let item_path = format!("{path}[{i}]");
        let kind = as_str(get(item, &item_path, "kind")?, &format!("{item_path}.kind"))?;
        let reason = as_str(get(item, &item_path, "reason")?, &format!("{item_path}.reason"))?;
        let at = match item.get("at") {
            Some(v) => Some(as_u64(v, &format!("{item_path}.at"))? as usize - 1),
            None => None,
        };
        match kind {
            "class_a" => {
                let j = as_u64(get(item, &item_path, "j")?, &format!("{item_path}.j"))? as usize - 1;
                let failure = match (reason, at) {
                    ("span-not-lattice", _) => ClassAFailure::SpanNotLattice,
                    ("line-without-commensurable-point", Some(index)) => {
                        ClassAFailure::LineWithoutCommensurablePoint { index }
                    }
                    ("translation-commensurable", Some(index)) => {
                        ClassAFailure::TranslationCommensurable { index }
                    }
                    _ => return err(&item_path, "malformed class_a rejection"),
                };
                record.class_a.push((j, failure));
            }
            "class_b" => {
                let set = index_set_from_json(get(item, &item_path, "J")?, &format!("{item_path}.J"))?;
                let failure = match (reason, at) {
                    ("span-not-lattice", _) => ClassBFailure::SpanNotLattice,
                    ("line-without-commensurable-point", Some(index)) => {
                        ClassBFailure::LineWithoutCommensurablePoint { index }
                    }
                    _ => return err(&item_path, "malformed class_b rejection"),
                };
                record.class_b.push((set, failure));
            }
            other => return err(&format!("{item_path}.kind"), format!("unknown kind {other:?}")),
        }
    }
    Ok(record)
}

pub fn verdict_to_json(verdict: &Verdict) -> Value {
    match verdict {
        Verdict::Tiles(witness) => json!({
            "tiles": true,
            "class": match witness.class {
                TilingClass::A => "A",
                TilingClass::B => "B",
            },
            "J": index_set_to_json(&witness.index_set),
            "lattice": lattice_to_json(&witness.lattice),
            "level": witness.level,
            "pairs": witness.pairs.iter().map(pair_to_json).collect::<Vec<_>>(),
            "rejections": Value::Null,
        }),
        Verdict::DoesNotTile { rejections } => json!({
            "tiles": false,
            "class": Value::Null,
            "J": Value::Null,
            "lattice": Value::Null,
            "level": Value::Null,
            "pairs": Value::Null,
            "rejections": rejections_to_json(rejections),
        }),
    }
}

pub fn verdict_from_json(spec: &FieldSpec, value: &Value) -> Result<Verdict, JsonError> {
    let path = "verdict";
    let tiles = get(value, path, "tiles")?
        .as_bool()
        .ok_or_else(|| JsonError {
            path: format!("{path}.tiles"),
            message: "expected a boolean".into(),
        })?;
    if !tiles {
        return Ok(Verdict::DoesNotTile {
            rejections: rejections_from_json(
                get(value, path, "rejections")?,
                &format!("{path}.rejections"),
            )?,
        });
    }
    let class = match as_str(get(value, path, "class")?, &format!("{path}.class"))? {
        "A" => TilingClass::A,
        "B" => TilingClass::B,
        other => return err(&format!("{path}.class"), format!("unknown class {other:?}")),
    };
    let index_set = index_set_from_json(get(value, path, "J")?, &format!("{path}.J"))?;
    let lattice = lattice_from_json(spec, get(value, path, "lattice")?, &format!("{path}.lattice"))?;
    let level = as_u64(get(value, path, "level")?, &format!("{path}.level"))?;
    let pairs_v = as_array(get(value, path, "pairs")?, &format!("{path}.pairs"))?;
    let mut pairs = Vec::with_capacity(pairs_v.len());
    for (i, p) in pairs_v.iter().enumerate() {
        pairs.push(pair_from_json(spec, p, &format!("{path}.pairs[{i}]"))?);
    }
    Ok(Verdict::Tiles(TilingWitness {
        lattice,
        level,
        class,
        index_set,
        pairs,
    }))
}

pub fn discreteness_to_json(result: &DiscretenessResult) -> Value {
    match result {
        DiscretenessResult::Trivial => json!({
            "verdict": "discrete",
            "rank": 0,
            "basis": Value::Null,
            "witness": Value::Null,
        }),
        DiscretenessResult::Line { generator } => json!({
            "verdict": "discrete",
            "rank": 1,
            "basis": [vector_to_json(generator)],
            "witness": Value::Null,
        }),
        DiscretenessResult::Lattice(basis) => json!({
            "verdict": "discrete",
            "rank": 2,
            "basis": [vector_to_json(basis.b1()), vector_to_json(basis.b2())],
            "witness": Value::Null,
        }),
        DiscretenessResult::Dense { witness } => json!({
            "verdict": "dense",
            "rank": Value::Null,
            "basis": Value::Null,
            "witness": element_to_json(witness),
        }),
    }
}

pub fn discreteness_from_json(
    spec: &FieldSpec,
    value: &Value,
) -> Result<DiscretenessResult, JsonError> {
    let path = "discreteness";
    match as_str(get(value, path, "verdict")?, &format!("{path}.verdict"))? {
        "dense" => Ok(DiscretenessResult::Dense {
            witness: element_from_json(spec, get(value, path, "witness")?, &format!("{path}.witness"))?,
        }),
        "discrete" => {
            let rank = as_u64(get(value, path, "rank")?, &format!("{path}.rank"))?;
            match rank {
                0 => Ok(DiscretenessResult::Trivial),
                1 => {
                    let basis = as_array(get(value, path, "basis")?, &format!("{path}.basis"))?;
                    if basis.len() != 1 {
                        return err(&format!("{path}.basis"), "rank 1 needs one generator");
                    }
                    Ok(DiscretenessResult::Line {
                        generator: vector_from_json(spec, &basis[0], &format!("{path}.basis[0]"))?,
                    })
                }
                2 => {
                    let basis = lattice_from_json(spec, get(value, path, "basis")?, &format!("{path}.basis"))?;
                    Ok(DiscretenessResult::Lattice(basis))
                }
                other => err(&format!("{path}.rank"), format!("invalid rank {other}")),
            }
        }
        other => err(&format!("{path}.verdict"), format!("unknown verdict {other:?}")),
    }
}

pub fn report_to_json(report: &MultiplicityReport) -> Value {
    json!({
        "samples": report.samples,
        "level": report.expected_level,
        "pass": report.pass,
        "boundary_resamples": report.boundary_resamples,
        "seed": report.seed,
        "multiplicities": report.multiplicities,
    })
}

pub fn report_from_json(value: &Value) -> Result<MultiplicityReport, JsonError> {
    let path = "report";
    let multiplicities_v = as_array(
        get(value, path, "multiplicities")?,
        &format!("{path}.multiplicities"),
    )?;
    let mut multiplicities = Vec::with_capacity(multiplicities_v.len());
    for (i, m) in multiplicities_v.iter().enumerate() {
        multiplicities.push(as_u64(m, &format!("{path}.multiplicities[{i}]"))?);
    }
    Ok(MultiplicityReport {
        samples: as_u64(get(value, path, "samples")?, &format!("{path}.samples"))?,
        expected_level: as_u64(get(value, path, "level")?, &format!("{path}.level"))?,
        pass: get(value, path, "pass")?
            .as_bool()
            .ok_or_else(|| JsonError {
                path: format!("{path}.pass"),
                message: "expected a boolean".into(),
            })?,
        boundary_resamples: as_u64(
            get(value, path, "boundary_resamples")?,
            &format!("{path}.boundary_resamples"),
        )?,
        seed: as_u64(get(value, path, "seed")?, &format!("{path}.seed"))?,
        multiplicities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decider::decide;
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

    #[test]
    fn field_spec_round_trip() {
        let spec = f();
        let encoded = field_spec_to_json(&spec);
        assert_eq!(
            encoded,
            json!({"degree": 2, "minpoly": ["-2", "0", "1"], "root_interval": ["0", "2"]})
        );
        assert_eq!(field_spec_from_json(&encoded).unwrap(), spec);
    }

    #[test]
    fn element_round_trip() {
        let spec = f();
        let x = spec
            .element(vec![
                parse_rational("-7/3").unwrap(),
                parse_rational("1/2").unwrap(),
            ])
            .unwrap();
        let encoded = element_to_json(&x);
        assert_eq!(encoded, json!(["-7/3", "1/2"]));
        assert_eq!(element_from_json(&spec, &encoded, "x").unwrap(), x);
        assert!(element_from_json(&spec, &json!(["1"]), "x").is_err());
        assert!(element_from_json(&spec, &json!(["1", "nope"]), "x").is_err());
    }

    #[test]
    fn verdict_round_trip() {
        let spec = f();
        let square = validate_polygon(vec![
            rv(&spec, "0", "0"),
            rv(&spec, "1", "0"),
            rv(&spec, "1", "1"),
            rv(&spec, "0", "1"),
        ])
        .unwrap();
        let verdict = decide(&square).unwrap();
        let encoded = verdict_to_json(&verdict);
        let parsed = verdict_from_json(&spec, &encoded).unwrap();
        assert_eq!(encoded, verdict_to_json(&parsed));
        assert!(parsed.tiles());
    }

    #[test]
    fn discreteness_round_trip() {
        let spec = f();
        let dense = crate::subgroup::is_discrete(&[
            rv(&spec, "1", "0"),
            PlanarVector::new(spec.generator(), spec.zero()),
        ]);
        let lattice = crate::subgroup::is_discrete(&[rv(&spec, "2", "1"), rv(&spec, "0", "3")]);
        for result in [dense, lattice] {
            let encoded = discreteness_to_json(&result);
            assert_eq!(discreteness_from_json(&spec, &encoded).unwrap(), result);
        }
    }

    #[test]
    fn error_paths_are_precise() {
        let bad = json!({"degree": 2, "minpoly": ["-2", "0", "1"], "root_interval": ["2", "x"]});
        let e = field_spec_from_json(&bad).unwrap_err();
        assert_eq!(e.path, "field.root_interval[1]");
    }
}
