//! JSON polytope documents and exact JSON encodings of results.
//!
//! A document gives either vertices or inequalities `<a, x> >= b`:
//!
//! ```json
//! { "name": "triangle", "ambient_dim": 2,
//!   "vertices": [["-2", "0"], ["2", "0"], ["0", "1"]] }
//! { "ambient_dim": 1, "inequalities": [{ "a": [1], "b": "0" }, { "a": [-1], "b": "-3/2" }] }
//! ```
//!
//! Rationals are strings such as `"4/3"`; plain JSON integers are accepted,
//! floats are rejected.

use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::exactla::{parse_rational, IntVector, Rational};
use crate::polytope::{HalfSpace, Polytope};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InequalityEntry {
    pub a: Vec<Value>,
    pub b: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub ambient_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<Value>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inequalities: Option<Vec<InequalityEntry>>,
}

fn field_error(field: &str, msg: impl std::fmt::Display) -> Error {
    Error::Document(format!("{field}: {msg}"))
}

fn rational_field(value: &Value, field: &str) -> Result<Rational> {
    match value {
        Value::String(s) => parse_rational(s).map_err(|_| field_error(field, format!("invalid rational {s:?}"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(Rational::from_integer(
            n.to_string().parse().expect("integral JSON number"),
        )),
        Value::Number(n) => Err(field_error(field, format!("{n} is a float; write rationals as \"p/q\" strings"))),
        other => Err(field_error(field, format!("expected a rational string, found {other}"))),
    }
}

fn integer_field(value: &Value, field: &str) -> Result<BigInt> {
    let text = match value {
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        other => return Err(field_error(field, format!("expected an integer, found {other}"))),
    };
    text.parse().map_err(|_| field_error(field, format!("invalid integer {text:?}")))
}

impl PolytopeDocument {
    /// Parses JSON text; syntax errors carry line and column.
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Canonical vertex document of a polytope.
    pub fn from_polytope(p: &Polytope, name: Option<String>) -> Self {
        PolytopeDocument {
            name,
            ambient_dim: p.ambient_dim(),
            vertices: Some(
                p.vertices().iter().map(|v| v.iter().map(|x| Value::String(x.to_string())).collect()).collect(),
            ),
            inequalities: None,
        }
    }

    pub fn to_polytope(&self) -> Result<Polytope> {
        let n = self.ambient_dim;
        match (&self.vertices, &self.inequalities) {
            (Some(_), Some(_)) => Err(Error::Document("give either vertices or inequalities, not both".into())),
            (None, None) => Err(Error::Document("missing field `vertices` or `inequalities`".into())),
            (Some(vertices), None) => {
                if vertices.is_empty() {
                    return Err(Error::EmptyPolytope);
                }
                let points = vertices
                    .iter()
                    .enumerate()
                    .map(|(i, v)| {
                        if v.len() != n {
                            return Err(field_error(
                                &format!("vertices[{i}]"),
                                format!("has {} entries, ambient_dim is {n}", v.len()),
                            ));
                        }
                        v.iter()
                            .enumerate()
                            .map(|(j, x)| rational_field(x, &format!("vertices[{i}][{j}]")))
                            .collect()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Polytope::from_vertices(&points)
            }
            (None, Some(inequalities)) => {
                let halfspaces = inequalities
                    .iter()
                    .enumerate()
                    .map(|(i, entry)| {
                        if entry.a.len() != n {
                            return Err(field_error(
                                &format!("inequalities[{i}].a"),
                                format!("has {} entries, ambient_dim is {n}", entry.a.len()),
                            ));
                        }
                        let a: IntVector = entry
                            .a
                            .iter()
                            .enumerate()
                            .map(|(j, x)| integer_field(x, &format!("inequalities[{i}].a[{j}]")))
                            .collect::<Result<_>>()?;
                        let b = rational_field(&entry.b, &format!("inequalities[{i}].b"))?;
                        HalfSpace::new(a, b).map_err(|e| field_error(&format!("inequalities[{i}].a"), e))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let p = Polytope::from_halfspaces(n, &halfspaces)?;
                if p.is_empty() {
                    return Err(Error::EmptyPolytope);
                }
                Ok(p)
            }
        }
    }
}

pub fn rational_json(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn rat_vec_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

pub fn int_vec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

pub fn halfspace_json(h: &HalfSpace) -> Value {
    json!({ "a": int_vec_json(&h.normal), "b": rational_json(&h.offset) })
}

/// Dimension, vertices, facets and affine hull of a polytope.
pub fn polytope_json(p: &Polytope) -> Value {
    json!({
        "dim": p.dim(),
        "vertices": p.vertices().iter().map(|v| rat_vec_json(v)).collect::<Vec<_>>(),
        "facets": p.facets().iter().map(halfspace_json).collect::<Vec<_>>(),
        "equations": p.equations().iter().map(halfspace_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, rat_vec};
    use crate::harness::corpus;

    #[test]
    fn vertex_document() {
        let doc = PolytopeDocument::parse(
            r#"{"name": "triangle", "ambient_dim": 2, "vertices": [["-2", "0"], ["2", "0"], [0, "1"]]}"#,
        )
        .unwrap();
        assert_eq!(doc.to_polytope().unwrap(), corpus::wide_triangle());
    }

    #[test]
    fn inequality_document() {
        let doc = PolytopeDocument::parse(
            r#"{"ambient_dim": 1, "inequalities": [{"a": [1], "b": "0"}, {"a": [-2], "b": "-3"}]}"#,
        )
        .unwrap();
        let p = doc.to_polytope().unwrap();
        assert_eq!(p.vertices(), &[vec![rat(0, 1)], vec![rat(3, 2)]]);
    }

    #[test]
    fn diagnostics_name_the_field() {
        let bad = |text: &str| PolytopeDocument::parse(text).and_then(|d| d.to_polytope()).unwrap_err().to_string();
        assert!(bad(r#"{"ambient_dim": 2, "vertices": [["1", "x"]]}"#).contains("vertices[0][1]"));
        assert!(bad(r#"{"ambient_dim": 2, "vertices": [["1", 0.5]]}"#).contains("float"));
        assert!(bad(r#"{"ambient_dim": 2, "vertices": [["1"]]}"#).contains("vertices[0]"));
        assert!(bad(r#"{"ambient_dim": 1, "inequalities": [{"a": [0], "b": "1"}]}"#).contains("inequalities[0].a"));
        assert!(bad("{\n\"ambient_dim\": 2,\n\"vertices\": [}").contains("line 3"));
        assert!(bad(r#"{"ambient_dim": 2}"#).contains("missing"));
        assert!(bad(r#"{"ambient_dim": 2, "vertex": []}"#).contains("unknown field"));
    }

    #[test]
    fn unbounded_and_empty_inputs() {
        let doc = PolytopeDocument::parse(r#"{"ambient_dim": 2, "inequalities": [{"a": [1, 0], "b": "0"}]}"#).unwrap();
        assert!(matches!(doc.to_polytope(), Err(Error::Unbounded)));
        let doc = PolytopeDocument::parse(
            r#"{"ambient_dim": 1, "inequalities": [{"a": [1], "b": "1"}, {"a": [-1], "b": "0"}]}"#,
        )
        .unwrap();
        assert!(matches!(doc.to_polytope(), Err(Error::EmptyPolytope)));
    }

    #[test]
    fn canonical_round_trip() {
        for (name, p) in corpus::named_2d().into_iter().chain(corpus::named_3d()) {
            let doc = PolytopeDocument::from_polytope(&p, Some(name));
            let text = doc.to_json_string();
            let again = PolytopeDocument::parse(&text).unwrap();
            assert_eq!(again, doc);
            assert_eq!(again.to_json_string(), text);
            assert_eq!(again.to_polytope().unwrap(), p);
        }
        let half = Polytope::from_vertices(&[vec![rat(1, 3), rat(-4, 3)], rat_vec(&[2, 2])]).unwrap();
        let doc = PolytopeDocument::from_polytope(&half, None);
        assert!(doc.to_json_string().contains("\"-4/3\""));
        assert_eq!(doc.to_polytope().unwrap(), half);
    }
}
