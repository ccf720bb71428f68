//! Polyhedral `V`-parallel spaces `D = {v : v*_i(v) ≥ c_i}` with a period
//! lattice, and their splitting `D = Δ + span P`.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ingredients::format::{from_text, q, unq, QText};
use crate::ingredients::IngredientList;
use crate::linalg::{
    dot, kernel_basis, kernel_q, rank, solve, vec_scale, Matrix, QSubspace, Rational,
};
use crate::polytope::{combinations, DelzantPolytope};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralParallelSpace {
    ambient_dim: usize,
    forms: Vec<Vec<Rational>>,
    offsets: Vec<Rational>,
    periods: Vec<Vec<Rational>>,
}

impl PolyhedralParallelSpace {
    pub fn new(
        ambient_dim: usize,
        forms: Vec<Vec<Rational>>,
        offsets: Vec<Rational>,
        periods: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        if forms.len() != offsets.len() {
            return Err(Error::ShapeMismatch("one offset per form".into()));
        }
        if forms.iter().chain(&periods).any(|v| v.len() != ambient_dim) {
            return Err(Error::ShapeMismatch(format!(
                "vectors need length {ambient_dim}"
            )));
        }
        if forms.iter().any(|f| f.iter().all(Zero::is_zero)) {
            return Err(Error::Precondition(
                "constraint forms must be nonzero".into(),
            ));
        }
        if !periods.is_empty()
            && rank(&Matrix::from_rows(ambient_dim, periods.clone())) < periods.len()
        {
            return Err(Error::Precondition(
                "period vectors are linearly dependent".into(),
            ));
        }
        Ok(PolyhedralParallelSpace {
            ambient_dim,
            forms,
            offsets,
            periods,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn forms(&self) -> &[Vec<Rational>] {
        &self.forms
    }

    pub fn offsets(&self) -> &[Rational] {
        &self.offsets
    }

    pub fn periods(&self) -> &[Vec<Rational>] {
        &self.periods
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.forms
            .iter()
            .zip(&self.offsets)
            .all(|(f, c)| dot(f, v) >= *c)
    }
}

/// Common kernel of the constraint forms.
pub fn lineality(space: &PolyhedralParallelSpace) -> QSubspace {
    if space.forms.is_empty() {
        return QSubspace::full(space.ambient_dim);
    }
    kernel_q(&Matrix::from_rows(space.ambient_dim, space.forms.clone()))
}

/// Whether every period vector lies in the lineality space.
pub fn verify_periods(space: &PolyhedralParallelSpace) -> bool {
    let lin = lineality(space);
    space.periods.iter().all(|p| lin.contains(p))
}

/// `D ∩ C` for the coordinate complement `C` of the lineality space, written
/// in the coordinates of `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    /// Indices of the coordinates spanning the complement.
    pub coordinates: Vec<usize>,
    pub complement: QSubspace,
    pub lineality: QSubspace,
    pub forms: Vec<Vec<Rational>>,
    pub offsets: Vec<Rational>,
    pub compact: bool,
    /// A recession direction of `Δ` when it is unbounded.
    pub unbounded_direction: Option<Vec<Rational>>,
    /// Vertices of `Δ` when it is compact.
    pub vertices: Vec<Vec<Rational>>,
    /// Whether the periods span the whole lineality space.
    pub cocompact: bool,
}

impl Decomposition {
    /// Whether `x ∈ Δ + lineality`.
    pub fn contains(&self, x: &[Rational]) -> bool {
        let y = self.project(x);
        self.forms
            .iter()
            .zip(&self.offsets)
            .all(|(f, c)| dot(f, &y) >= *c)
    }

    /// Coordinates in the complement of the component of `x` along it.
    pub fn project(&self, x: &[Rational]) -> Vec<Rational> {
        let mut y = x.to_vec();
        for (b, p) in self
            .lineality
            .basis_vectors()
            .iter()
            .zip(self.lineality.pivot_columns())
        {
            let k = y[p].clone();
            for (yi, bi) in y.iter_mut().zip(b) {
                *yi -= &k * bi;
            }
        }
        self.coordinates.iter().map(|&i| y[i].clone()).collect()
    }
}

fn recession_direction(dim: usize, forms: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    if dim == 0 {
        return None;
    }
    if forms.is_empty() || rank(&Matrix::from_rows(dim, forms.to_vec())) < dim {
        let k = if forms.is_empty() {
            vec![crate::linalg::unit_vec(dim, 0)]
        } else {
            kernel_basis(&Matrix::from_rows(dim, forms.to_vec()))
        };
        return Some(k[0].clone());
    }
    // The cone is pointed: it is nonzero iff it has an extreme ray.
    for subset in combinations(forms.len(), dim - 1) {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| forms[i].clone()).collect();
        let k = kernel_basis(&Matrix::from_rows(dim, rows));
        if k.len() != 1 {
            continue;
        }
        for sign in [Rational::one(), -Rational::one()] {
            let r = vec_scale(&k[0], &sign);
            if forms.iter().all(|f| !dot(f, &r).is_negative()) {
                return Some(r);
            }
        }
    }
    None
}

fn vertices(dim: usize, forms: &[Vec<Rational>], offsets: &[Rational]) -> Vec<Vec<Rational>> {
    if dim == 0 {
        return vec![vec![]];
    }
    let mut out = BTreeSet::new();
    for subset in combinations(forms.len(), dim) {
        let a = Matrix::from_rows(dim, subset.iter().map(|&i| forms[i].clone()).collect());
        let b: Vec<Rational> = subset.iter().map(|&i| offsets[i].clone()).collect();
        if let Some(x) = solve(&a, &b) {
            if rank(&a) == dim && forms.iter().zip(offsets).all(|(f, c)| dot(f, &x) >= *c) {
                out.insert(x);
            }
        }
    }
    out.into_iter().collect()
}

/// Splits `D` as `Δ + lineality` with `Δ` in the canonical coordinate complement.
pub fn decompose(space: &PolyhedralParallelSpace) -> Result<Decomposition> {
    if !verify_periods(space) {
        return Err(Error::PeriodsNotInLineality);
    }
    let lin = lineality(space);
    let pivots: BTreeSet<usize> = lin.pivot_columns().into_iter().collect();
    let coordinates: Vec<usize> = (0..space.ambient_dim)
        .filter(|i| !pivots.contains(i))
        .collect();
    let k = coordinates.len();
    let forms: Vec<Vec<Rational>> = space
        .forms
        .iter()
        .map(|f| coordinates.iter().map(|&i| f[i].clone()).collect())
        .collect();
    let unbounded_direction = recession_direction(k, &forms);
    let compact = unbounded_direction.is_none();
    let vertices = if compact {
        vertices(k, &forms, &space.offsets)
    } else {
        vec![]
    };
    let complement = QSubspace::span(
        space.ambient_dim,
        &coordinates
            .iter()
            .map(|&i| crate::linalg::unit_vec(space.ambient_dim, i))
            .collect::<Vec<_>>(),
    );
    let cocompact = QSubspace::span(space.ambient_dim, &space.periods) == lin;
    if !cocompact {
        log::warn!("periods span a proper subspace of the lineality space");
    }
    Ok(Decomposition {
        coordinates,
        complement,
        lineality: lin,
        forms,
        offsets: space.offsets.clone(),
        compact,
        unbounded_direction,
        vertices,
        cocompact,
    })
}

/// `M/T ≅ Δ × (N/P)`: the polytope and the rank of the torus factor.
pub fn orbit_space_of(list: &IngredientList) -> (DelzantPolytope, usize) {
    (list.delta().clone(), list.d_n())
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct SpaceDocument {
    ambient_dim: usize,
    forms: Vec<Vec<QText>>,
    offsets: Vec<QText>,
    periods: Vec<Vec<QText>>,
}

/// Parses `{ambient_dim, forms, offsets, periods}`.
pub fn parse_space(text: &str) -> Result<PolyhedralParallelSpace> {
    let doc: SpaceDocument = from_text(text)?;
    PolyhedralParallelSpace::new(
        doc.ambient_dim,
        doc.forms.iter().map(|v| unq(v)).collect(),
        unq(&doc.offsets),
        doc.periods.iter().map(|v| unq(v)).collect(),
    )
    .map_err(|e| match e {
        Error::ShapeMismatch(m) | Error::Precondition(m) => Error::Schema(m),
        other => other,
    })
}

pub fn space_to_json(space: &PolyhedralParallelSpace) -> String {
    let doc = SpaceDocument {
        ambient_dim: space.ambient_dim,
        forms: space.forms.iter().map(|v| q(v)).collect(),
        offsets: q(&space.offsets),
        periods: space.periods.iter().map(|v| q(v)).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("document serializes") + "\n"
}
