//! JSON text format for ingredient lists.

use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};

use super::{c_from_pairs, canonicalize, IngredientList};
use crate::error::{Error, Result};
use crate::linalg::{format_rational, kernel_basis, parse_rational, Int, Matrix, Rational};
use crate::polytope::DelzantPolytope;
use crate::torus::TorusElement;

/// A rational read from `"p/q"`, `"n"` or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QText(pub Rational);

/// An integer read from a JSON integer or a decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZText(pub Int);

struct QVisitor;

impl Visitor<'_> for QVisitor {
    type Value = QText;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational as \"p/q\", \"n\" or an integer")
    }

    fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<QText, E> {
        parse_rational(s)
            .map(QText)
            .ok_or_else(|| E::custom(format!("invalid rational {s:?}")))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<QText, E> {
        Ok(QText(Rational::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<QText, E> {
        Ok(QText(Rational::from_integer(v.into())))
    }
}

impl<'de> Deserialize<'de> for QText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(QVisitor)
    }
}

impl Serialize for QText {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

struct ZVisitor;

impl Visitor<'_> for ZVisitor {
    type Value = ZText;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer")
    }

    fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<ZText, E> {
        s.trim()
            .parse::<Int>()
            .map(ZText)
            .map_err(|_| E::custom(format!("invalid integer {s:?}")))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ZText, E> {
        Ok(ZText(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ZText, E> {
        Ok(ZText(v.into()))
    }
}

impl<'de> Deserialize<'de> for ZText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(ZVisitor)
    }
}

impl Serialize for ZText {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

pub(crate) fn unq(v: &[QText]) -> Vec<Rational> {
    v.iter().map(|q| q.0.clone()).collect()
}

pub(crate) fn q(v: &[Rational]) -> Vec<QText> {
    v.iter().cloned().map(QText).collect()
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct CEntry {
    i: usize,
    j: usize,
    value: Vec<QText>,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct Document {
    torus_dim: usize,
    sigma_t: Vec<Vec<QText>>,
    t_h_lattice: Vec<Vec<ZText>>,
    delta_vertices: Vec<Vec<QText>>,
    p_basis: Vec<Vec<QText>>,
    c: Vec<CEntry>,
    tau: Vec<Vec<QText>>,
}

/// Deserializes `text` with a diagnostic naming the offending field and line.
pub(crate) fn from_text<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    let mut de = serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        Error::Schema(format!("field `{path}`: {inner}"))
    })
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

/// Parses the JSON ingredient format.
pub fn parse(text: &str) -> Result<IngredientList> {
    let doc: Document = from_text(text)?;
    let d = doc.torus_dim;
    if doc.sigma_t.len() != d || doc.sigma_t.iter().any(|r| r.len() != d) {
        return Err(schema(format!(
            "field `sigma_t`: expected a {d}x{d} matrix"
        )));
    }
    let sigma_t = Matrix::from_rows(d, doc.sigma_t.iter().map(|r| unq(r)).collect());
    if sigma_t.transpose() != sigma_t.map(|x| -x) {
        return Err(schema("field `sigma_t`: matrix is not antisymmetric"));
    }
    if doc.t_h_lattice.iter().any(|c| c.len() != d) {
        return Err(schema(format!(
            "field `t_h_lattice`: columns need length {d}"
        )));
    }
    let cols: Vec<Vec<Int>> = doc
        .t_h_lattice
        .iter()
        .map(|c| c.iter().map(|z| z.0.clone()).collect())
        .collect();
    let dh = cols.len();
    let y = Matrix::from_cols(d, cols);
    let verts: Vec<Vec<Rational>> = doc.delta_vertices.iter().map(|v| unq(v)).collect();
    let delta = DelzantPolytope::from_vertices(dh, &verts)
        .map_err(|e| schema(format!("field `delta_vertices`: {e}")))?;
    let dim_l = kernel_basis(&sigma_t).len();
    let n = doc.p_basis.len();
    let pairs: Vec<(usize, usize, Vec<Rational>)> =
        doc.c.iter().map(|e| (e.i, e.j, unq(&e.value))).collect();
    let c = c_from_pairs(n, dim_l, &pairs).map_err(|e| match e {
        Error::Schema(m) => schema(format!("field `c`: {m}")),
        other => other,
    })?;
    let tau = doc.tau.iter().map(|v| TorusElement::new(unq(v))).collect();
    let p_basis = doc.p_basis.iter().map(|v| unq(v)).collect();
    IngredientList::new(d, sigma_t, y, delta, p_basis, c, tau).map_err(|e| match e {
        Error::ShapeMismatch(m) | Error::Schema(m) => schema(m),
        Error::NotSaturated => schema("field `t_h_lattice`: lattice is not saturated"),
        other => other,
    })
}

fn document(list: &IngredientList) -> Document {
    let n = list.d_n();
    let mut c = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if list.c_l(i, j).iter().any(|x| !num_traits::Zero::is_zero(x)) {
                c.push(CEntry {
                    i: i + 1,
                    j: j + 1,
                    value: q(list.c_l(i, j)),
                });
            }
        }
    }
    let delta_vertices = if list.delta().dim() == 0 {
        vec![vec![]]
    } else {
        list.delta().vertices().iter().map(|v| q(v)).collect()
    };
    Document {
        torus_dim: list.torus_dim(),
        sigma_t: list.sigma_t().rows_vec().iter().map(|r| q(r)).collect(),
        t_h_lattice: list
            .t_h_basis()
            .cols_vec()
            .into_iter()
            .map(|c| c.into_iter().map(ZText).collect())
            .collect(),
        delta_vertices,
        p_basis: list.p_basis().iter().map(|v| q(v)).collect(),
        c,
        tau: list.tau().values().iter().map(|t| q(t.coords())).collect(),
    }
}

/// The list as a JSON value in the input schema, without canonicalizing.
pub fn to_json_value(list: &IngredientList) -> serde_json::Value {
    serde_json::to_value(document(list)).expect("document serializes")
}

/// Canonical JSON text; `parse(serialize(l))` reproduces the canonical form.
pub fn serialize(list: &IngredientList) -> Result<String> {
    let canon = canonicalize(list)?;
    Ok(serde_json::to_string_pretty(&document(&canon)).expect("document serializes") + "\n")
}
