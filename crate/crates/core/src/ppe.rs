//! PPE files: JSON interchange for plane-projecting embeddings with exact
//! rational coordinates.
//!
//! ```json
//! {"dimension": 3,
//!  "vertices": [{"id": 0, "coords": [[1, 2], [0, 1], [3, 1]]}],
//!  "edges": [{"u": 0, "v": 1, "planes": [[0, 1]]}]}
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::geometry::Rational;
use crate::graph::{edge, Graph};
use crate::projection::{Embedding, PlanePair, PlaneProjection};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str, ctx: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| perr(format!("{ctx}: missing \"{key}\"")))
}

fn as_index(v: &Value, ctx: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| perr(format!("{ctx}: expected a non-negative integer, got {v}")))
}

fn as_bigint(v: &Value, ctx: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => {
            BigInt::from_str(&n.to_string()).map_err(|_| perr(format!("{ctx}: expected an integer, got {n}")))
        }
        _ => Err(perr(format!("{ctx}: expected an integer, got {v}"))),
    }
}

fn as_array<'a>(v: &'a Value, ctx: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| perr(format!("{ctx}: expected an array")))
}

/// Reads a `[num, den]` pair in lowest terms with a positive denominator.
pub fn parse_rational(v: &Value, ctx: &str) -> Result<Rational> {
    let pair = as_array(v, ctx)?;
    if pair.len() != 2 {
        return Err(perr(format!("{ctx}: rational must be a [num, den] pair")));
    }
    let num = as_bigint(&pair[0], ctx)?;
    let den = as_bigint(&pair[1], ctx)?;
    if !den.is_positive() {
        return Err(perr(format!("{ctx}: denominator must be positive")));
    }
    if !num.gcd(&den).is_one() {
        return Err(perr(format!("{ctx}: rational {num}/{den} is not in lowest terms")));
    }
    Ok(Rational::new_raw(num, den))
}

pub fn read_ppe(text: &str) -> Result<PlaneProjection> {
    let root: Value = serde_json::from_str(text).map_err(|e| perr(format!("invalid JSON: {e}")))?;
    let root = root.as_object().ok_or_else(|| perr("top level must be an object"))?;
    let dimension = as_index(field(root, "dimension", "file")?, "dimension")?;

    let vertices = as_array(field(root, "vertices", "file")?, "vertices")?;
    let mut coords: Vec<Option<Vec<Rational>>> = vec![None; vertices.len()];
    for (k, v) in vertices.iter().enumerate() {
        let ctx = format!("vertex #{k}");
        let obj = v.as_object().ok_or_else(|| perr(format!("{ctx}: expected an object")))?;
        let id = as_index(field(obj, "id", &ctx)?, &ctx)?;
        if id >= vertices.len() {
            return Err(perr(format!("{ctx}: id {id} is not dense in 0..{}", vertices.len())));
        }
        if coords[id].is_some() {
            return Err(perr(format!("{ctx}: duplicate id {id}")));
        }
        let cs = as_array(field(obj, "coords", &ctx)?, &ctx)?;
        if cs.len() != dimension {
            return Err(perr(format!("{ctx}: expected {dimension} coordinates, got {}", cs.len())));
        }
        coords[id] = Some(cs.iter().map(|c| parse_rational(c, &ctx)).collect::<Result<_>>()?);
    }
    let coords: Vec<Vec<Rational>> = coords.into_iter().map(|c| c.expect("ids are dense")).collect();
    let n = coords.len();
    let embedding = Embedding::new(dimension, coords).map_err(|e| perr(e.to_string()))?;

    let mut graph = Graph::new(n);
    let mut assignment = BTreeMap::new();
    for (k, e) in as_array(field(root, "edges", "file")?, "edges")?.iter().enumerate() {
        let ctx = format!("edge #{k}");
        let obj = e.as_object().ok_or_else(|| perr(format!("{ctx}: expected an object")))?;
        let u = as_index(field(obj, "u", &ctx)?, &ctx)?;
        let v = as_index(field(obj, "v", &ctx)?, &ctx)?;
        if u == v || u >= n || v >= n {
            return Err(perr(format!("{ctx}: bad endpoints {u}, {v}")));
        }
        if !graph.add_edge(u, v).map_err(|e| perr(e.to_string()))? {
            return Err(perr(format!("{ctx}: duplicate edge {{{u}, {v}}}")));
        }
        let mut planes = BTreeSet::new();
        for p in as_array(field(obj, "planes", &ctx)?, &ctx)? {
            let pair = as_array(p, &ctx)?;
            if pair.len() != 2 {
                return Err(perr(format!("{ctx}: plane must be an [i, j] pair")));
            }
            let (i, j) = (as_index(&pair[0], &ctx)?, as_index(&pair[1], &ctx)?);
            let plane = PlanePair::new(i, j).map_err(|e| perr(format!("{ctx}: {e}")))?;
            if !plane.is_valid_for(dimension) {
                return Err(perr(format!("{ctx}: plane {plane} out of range for dimension {dimension}")));
            }
            planes.insert(plane);
        }
        if !planes.is_empty() {
            assignment.insert(edge(u, v), planes);
        }
    }
    PlaneProjection::new(graph, embedding, assignment).map_err(|e| perr(e.to_string()))
}

fn number(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

pub fn ppe_value(pp: &PlaneProjection) -> Value {
    let vertices: Vec<Value> = pp
        .embedding()
        .coords()
        .iter()
        .enumerate()
        .map(|(id, cs)| {
            let coords: Vec<Value> = cs.iter().map(|c| json!([number(c.numer()), number(c.denom())])).collect();
            json!({"id": id, "coords": coords})
        })
        .collect();
    let edges: Vec<Value> = pp
        .graph()
        .edges()
        .map(|(u, v)| {
            let planes: Vec<Value> = pp.planes_of(u, v).into_iter().flatten().map(|p| json!([p.i, p.j])).collect();
            json!({"u": u, "v": v, "planes": planes})
        })
        .collect();
    json!({"dimension": pp.dimension(), "vertices": vertices, "edges": edges})
}

/// Serializes with vertices sorted by id and edges by `(u, v)`.
pub fn write_ppe(pp: &PlaneProjection) -> String {
    let mut s = serde_json::to_string_pretty(&ppe_value(pp)).expect("JSON values serialize");
    s.push('\n');
    s
}
