//! Wire forms keyed by vertex id.
//!
//! Colorings are `{"values": {"id": "p/q", ...}}`, index vectors use the same
//! shape with integers, measures are `{"weights": [...], "colorings": [...]}`.
//! Objects list vertices in graph order.

use crate::curvature::{CurvatureVector, Measure};
use crate::graph::Graph;
use crate::morse::{Coloring, IndexVector};
use crate::rational::{format_rational, parse_rational, Rational};
use serde_json::{json, Map, Value};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JsonError {
    #[error("unknown vertex id {0:?}")]
    UnknownVertex(String),
    #[error("no value for vertex {0:?}")]
    MissingVertex(String),
    #[error("vertex id {0:?} is ambiguous")]
    AmbiguousLabel(String),
    #[error("bad value for {key:?}: {reason}")]
    BadValue { key: String, reason: String },
    #[error("expected {0}")]
    Shape(&'static str),
    #[error(transparent)]
    Measure(#[from] crate::curvature::CurvatureError),
}

fn vertex_lookup(g: &Graph) -> Result<HashMap<String, usize>, JsonError> {
    let mut out = HashMap::with_capacity(g.vertex_count());
    for (v, l) in g.labels().iter().enumerate() {
        let key = l.to_string();
        if out.insert(key.clone(), v).is_some() {
            return Err(JsonError::AmbiguousLabel(key));
        }
    }
    Ok(out)
}

fn keyed(g: &Graph, values: impl Iterator<Item = Value>) -> Value {
    let map: Map<String, Value> = g.labels().iter().map(|l| l.to_string()).zip(values).collect();
    json!({ "values": map })
}

pub fn rational_value(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rational_from_value(key: &str, v: &Value) -> Result<Rational, JsonError> {
    let bad = |reason: String| JsonError::BadValue { key: key.to_string(), reason };
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| bad(e.to_string())),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(|| bad("numbers must be integers; write fractions as \"p/q\"".into())),
        _ => Err(bad("expected a \"p/q\" string".into())),
    }
}

pub fn coloring_to_value(g: &Graph, f: &Coloring) -> Value {
    keyed(g, f.values().iter().map(rational_value))
}

/// Accepts `{"values": {...}}` or the bare id map.
pub fn coloring_from_value(g: &Graph, v: &Value) -> Result<Coloring, JsonError> {
    let map = match v.get("values") {
        Some(inner) => inner,
        None => v,
    }
    .as_object()
    .ok_or(JsonError::Shape("a coloring object {\"values\": {id: \"p/q\"}}"))?;
    let lookup = vertex_lookup(g)?;
    let mut values: Vec<Option<Rational>> = vec![None; g.vertex_count()];
    for (key, value) in map {
        let &vertex = lookup.get(key).ok_or_else(|| JsonError::UnknownVertex(key.clone()))?;
        values[vertex] = Some(rational_from_value(key, value)?);
    }
    let values = values
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| JsonError::MissingVertex(g.label(v).to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Coloring::new(values))
}

pub fn index_vector_to_value(g: &Graph, iv: &IndexVector) -> Value {
    keyed(g, iv.indices.iter().map(|&i| Value::from(i)))
}

pub fn curvature_to_value(g: &Graph, k: &CurvatureVector) -> Value {
    keyed(g, k.values.iter().map(rational_value))
}

pub fn measure_to_value(g: &Graph, mu: &Measure) -> Value {
    json!({
        "weights": mu.weights().iter().map(rational_value).collect::<Vec<_>>(),
        "colorings": mu.support().iter().map(|f| coloring_to_value(g, f)).collect::<Vec<_>>(),
    })
}

pub fn measure_from_value(g: &Graph, v: &Value) -> Result<Measure, JsonError> {
    let weights = v
        .get("weights")
        .and_then(Value::as_array)
        .ok_or(JsonError::Shape("a \"weights\" array"))?
        .iter()
        .enumerate()
        .map(|(i, w)| rational_from_value(&format!("weights[{i}]"), w))
        .collect::<Result<Vec<_>, _>>()?;
    let colorings = v
        .get("colorings")
        .and_then(Value::as_array)
        .ok_or(JsonError::Shape("a \"colorings\" array"))?
        .iter()
        .map(|c| coloring_from_value(g, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Measure::new(g, colorings, weights)?)
}
