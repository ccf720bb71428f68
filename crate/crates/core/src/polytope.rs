//! Exact convex polytopes with integral facet normals.
//!
//! Both representations are computed by brute force over `dim`-subsets, which
//! is adequate for the small polytopes (dimension ≤ 4, a few dozen vertices)
//! that occur as momentum images here.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{
    determinant, dot, format_rational, kernel_basis, primitive_integer, rank, rat_int, solve,
    to_rational_vec, vec_add, vec_scale, vec_sub, Int, Matrix, QMatrix, Rational,
};

/// Half-space `normal · x ≥ offset` with a primitive integral normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: Vec<Int>,
    pub offset: Rational,
}

impl Facet {
    pub fn slack(&self, x: &[Rational]) -> Rational {
        dot(&to_rational_vec(&self.normal), x) - &self.offset
    }
}

/// A full-dimensional bounded polytope with both representations stored in
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DelzantPolytope {
    dim: usize,
    vertices: Vec<Vec<Rational>>,
    facets: Vec<Facet>,
}

/// Per-vertex data from [`is_delzant`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexReport {
    pub vertex: Vec<Rational>,
    /// Indices into the facet list, ascending.
    pub incident_facets: Vec<usize>,
    /// Determinant of the incident normals as columns, in facet order.
    pub normal_determinant: Option<Int>,
    /// Determinant of the primitive edge directions as columns, ordered by
    /// the lexicographic order of the neighbouring vertices.
    pub edge_determinant: Option<Int>,
}

impl VertexReport {
    pub fn is_unimodular(&self) -> bool {
        self.normal_determinant
            .as_ref()
            .is_some_and(|d| d.abs().is_one())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelzantCertificate {
    pub accepted: bool,
    pub vertices: Vec<VertexReport>,
}

impl DelzantCertificate {
    /// First vertex that fails the test.
    pub fn offending_vertex(&self) -> Option<&VertexReport> {
        self.vertices.iter().find(|v| !v.is_unimodular())
    }
}

impl DelzantPolytope {
    /// The single point of `(t_h)^*` when `dim = 0`.
    pub fn point() -> Self {
        DelzantPolytope {
            dim: 0,
            vertices: vec![vec![]],
            facets: vec![],
        }
    }

    /// Convex hull of `points`; points that are not vertices are dropped.
    pub fn from_vertices(dim: usize, points: &[Vec<Rational>]) -> Result<Self> {
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::ShapeMismatch(
                "vertex length differs from dimension".into(),
            ));
        }
        if dim == 0 {
            return if points.is_empty() {
                Err(Error::NotFullDimensional)
            } else {
                Ok(Self::point())
            };
        }
        let facets = vrep_to_hrep(dim, points)?;
        let mut vertices: Vec<Vec<Rational>> = points
            .iter()
            .filter(|p| {
                let tight: Vec<Vec<Rational>> = facets
                    .iter()
                    .filter(|f| f.slack(p).is_zero())
                    .map(|f| to_rational_vec(&f.normal))
                    .collect();
                !tight.is_empty() && rank(&Matrix::from_rows(dim, tight)) == dim
            })
            .cloned()
            .collect();
        vertices.sort();
        vertices.dedup();
        Ok(DelzantPolytope {
            dim,
            vertices,
            facets,
        })
    }

    /// Polytope `{x : normal·x ≥ offset}`; redundant inequalities are dropped.
    pub fn from_facets(dim: usize, facets: &[Facet]) -> Result<Self> {
        if dim == 0 {
            return Ok(Self::point());
        }
        let vertices = hrep_to_vrep(dim, facets)?;
        Self::from_vertices(dim, &vertices)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.facets.iter().all(|f| !f.slack(x).is_negative())
    }

    pub fn translate(&self, v: &[Rational]) -> Self {
        let vertices = self.vertices.iter().map(|p| vec_add(p, v)).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| Facet {
                normal: f.normal.clone(),
                offset: &f.offset + dot(&to_rational_vec(&f.normal), v),
            })
            .collect();
        DelzantPolytope {
            dim: self.dim,
            vertices,
            facets,
        }
    }

    /// Image under the invertible linear map `x ↦ m·x`.
    pub fn map_linear(&self, m: &QMatrix) -> Result<Self> {
        if m.shape() != (self.dim, self.dim) {
            return Err(Error::ShapeMismatch(
                "linear map must be square of polytope dimension".into(),
            ));
        }
        if self.dim == 0 {
            return Ok(self.clone());
        }
        let pts: Vec<Vec<Rational>> = self.vertices.iter().map(|p| m.mul_vec(p)).collect();
        Self::from_vertices(self.dim, &pts)
    }

    pub fn to_text(&self) -> String {
        let vs: Vec<String> = self
            .vertices
            .iter()
            .map(|v| {
                format!(
                    "({})",
                    v.iter().map(format_rational).collect::<Vec<_>>().join(", ")
                )
            })
            .collect();
        format!("conv{{{}}}", vs.join(", "))
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

fn affine_rank(points: &[&Vec<Rational>], dim: usize) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| vec_sub(p, first)).collect();
    if diffs.is_empty() {
        return 0;
    }
    rank(&Matrix::from_rows(dim, diffs))
}

/// Facet inequalities of the convex hull of `points`, lexicographically sorted.
pub fn vrep_to_hrep(dim: usize, points: &[Vec<Rational>]) -> Result<Vec<Facet>> {
    let refs: Vec<&Vec<Rational>> = points.iter().collect();
    if dim == 0 {
        return Ok(vec![]);
    }
    if affine_rank(&refs, dim) < dim {
        return Err(Error::NotFullDimensional);
    }
    let mut pts: Vec<Vec<Rational>> = points.to_vec();
    pts.sort();
    pts.dedup();
    let mut facets = BTreeSet::new();
    for subset in combinations(pts.len(), dim) {
        let base = &pts[subset[0]];
        let diffs: Vec<Vec<Rational>> = subset[1..]
            .iter()
            .map(|&i| vec_sub(&pts[i], base))
            .collect();
        let k = kernel_basis(&Matrix::from_rows(dim, diffs));
        if k.len() != 1 {
            continue;
        }
        let mut normal = primitive_integer(&k[0]);
        let qn = to_rational_vec(&normal);
        let mut offset = dot(&qn, base);
        let slacks: Vec<Rational> = pts.iter().map(|p| dot(&qn, p) - &offset).collect();
        let nonneg = slacks.iter().all(|s| !s.is_negative());
        let nonpos = slacks.iter().all(|s| !s.is_positive());
        if nonpos && !nonneg {
            normal = normal.iter().map(|x| -x).collect();
            offset = -offset;
        } else if !nonneg {
            continue;
        }
        facets.insert(Facet { normal, offset });
    }
    Ok(facets.into_iter().collect())
}

/// Vertices of `{x : normal·x ≥ offset}`, lexicographically sorted.
pub fn hrep_to_vrep(dim: usize, facets: &[Facet]) -> Result<Vec<Vec<Rational>>> {
    if dim == 0 {
        return Ok(vec![vec![]]);
    }
    if facets.iter().any(|f| f.normal.len() != dim) {
        return Err(Error::ShapeMismatch(
            "facet normal length differs from dimension".into(),
        ));
    }
    let normals: Vec<Vec<Rational>> = facets.iter().map(|f| to_rational_vec(&f.normal)).collect();
    if normals.is_empty() || rank(&Matrix::from_rows(dim, normals.clone())) < dim {
        return Err(Error::Unbounded);
    }
    // A pointed cone {r : n_i·r ≥ 0} is nonzero iff one of its extreme rays is.
    for subset in combinations(facets.len(), dim - 1) {
        let rows: Vec<Vec<Rational>> = subset.iter().map(|&i| normals[i].clone()).collect();
        let k = kernel_basis(&Matrix::from_rows(dim, rows));
        if k.len() != 1 {
            continue;
        }
        for sign in [Rational::one(), -Rational::one()] {
            let r = vec_scale(&k[0], &sign);
            if normals.iter().all(|n| !dot(n, &r).is_negative()) {
                return Err(Error::Unbounded);
            }
        }
    }
    let mut vertices = BTreeSet::new();
    for subset in combinations(facets.len(), dim) {
        let a = Matrix::from_rows(dim, subset.iter().map(|&i| normals[i].clone()).collect());
        if determinant(&a).is_zero() {
            continue;
        }
        let b: Vec<Rational> = subset.iter().map(|&i| facets[i].offset.clone()).collect();
        let x = solve(&a, &b).expect("nonsingular system");
        if facets.iter().all(|f| !f.slack(&x).is_negative()) {
            vertices.insert(x);
        }
    }
    let vertices: Vec<Vec<Rational>> = vertices.into_iter().collect();
    let refs: Vec<&Vec<Rational>> = vertices.iter().collect();
    if vertices.is_empty() || affine_rank(&refs, dim) < dim {
        return Err(Error::NotFullDimensional);
    }
    Ok(vertices)
}

/// Delzant test with a per-vertex determinant certificate.
pub fn is_delzant(p: &DelzantPolytope) -> DelzantCertificate {
    let dim = p.dim;
    if dim == 0 {
        return DelzantCertificate {
            accepted: true,
            vertices: vec![VertexReport {
                vertex: vec![],
                incident_facets: vec![],
                normal_determinant: Some(Int::one()),
                edge_determinant: Some(Int::one()),
            }],
        };
    }
    let reports: Vec<VertexReport> = p
        .vertices
        .iter()
        .map(|v| {
            let incident: Vec<usize> = (0..p.facets.len())
                .filter(|&i| p.facets[i].slack(v).is_zero())
                .collect();
            if incident.len() != dim {
                return VertexReport {
                    vertex: v.clone(),
                    incident_facets: incident,
                    normal_determinant: None,
                    edge_determinant: None,
                };
            }
            let normals: Vec<Vec<Rational>> = incident
                .iter()
                .map(|&i| to_rational_vec(&p.facets[i].normal))
                .collect();
            let nd = determinant(&Matrix::from_cols(dim, normals.clone())).to_integer();
            let mut edges: Vec<(Vec<Rational>, Vec<Rational>)> = (0..dim)
                .map(|skip| {
                    let rows: Vec<Vec<Rational>> = (0..dim)
                        .filter(|&j| j != skip)
                        .map(|j| normals[j].clone())
                        .collect();
                    let k = kernel_basis(&Matrix::from_rows(dim, rows));
                    let mut e = to_rational_vec(&primitive_integer(&k[0]));
                    if dot(&normals[skip], &e).is_negative() {
                        e = e.iter().map(|x| -x).collect();
                    }
                    (neighbour(p, v, &e), e)
                })
                .collect();
            edges.sort();
            let ed = determinant(&Matrix::from_cols(
                dim,
                edges.into_iter().map(|(_, e)| e).collect(),
            ))
            .to_integer();
            VertexReport {
                vertex: v.clone(),
                incident_facets: incident,
                normal_determinant: Some(nd),
                edge_determinant: Some(ed),
            }
        })
        .collect();
    DelzantCertificate {
        accepted: reports.iter().all(VertexReport::is_unimodular),
        vertices: reports,
    }
}

/// Far end of the edge leaving `v` in direction `e`.
fn neighbour(p: &DelzantPolytope, v: &[Rational], e: &[Rational]) -> Vec<Rational> {
    let t = p
        .facets
        .iter()
        .filter_map(|f| {
            let rate = dot(&to_rational_vec(&f.normal), e);
            rate.is_negative().then(|| f.slack(v) / -rate)
        })
        .min()
        .expect("bounded polytope");
    vec_add(v, &vec_scale(e, &t))
}

/// Triangulation of the face spanned by `face` (vertex indices, affine
/// dimension `k`) by coning from its smallest vertex.
fn triangulate(p: &DelzantPolytope, face: &[usize], k: usize) -> Vec<Vec<usize>> {
    let apex = face[0];
    if k == 0 {
        return vec![vec![apex]];
    }
    let mut subfaces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in &p.facets {
        let sub: Vec<usize> = face
            .iter()
            .copied()
            .filter(|&i| f.slack(&p.vertices[i]).is_zero())
            .collect();
        if sub.contains(&apex) || sub.is_empty() {
            continue;
        }
        let refs: Vec<&Vec<Rational>> = sub.iter().map(|&i| &p.vertices[i]).collect();
        if affine_rank(&refs, p.dim) == k - 1 {
            subfaces.insert(sub);
        }
    }
    subfaces
        .iter()
        .flat_map(|s| triangulate(p, s, k - 1))
        .map(|mut simplex| {
            simplex.insert(0, apex);
            simplex
        })
        .collect()
}

/// Exact center of mass.
pub fn centroid(p: &DelzantPolytope) -> Result<Vec<Rational>> {
    let dim = p.dim;
    if dim == 0 {
        return Ok(vec![]);
    }
    let all: Vec<usize> = (0..p.vertices.len()).collect();
    let refs: Vec<&Vec<Rational>> = p.vertices.iter().collect();
    if affine_rank(&refs, dim) < dim {
        return Err(Error::NotFullDimensional);
    }
    let mut total = Rational::zero();
    let mut acc = vec![Rational::zero(); dim];
    for simplex in triangulate(p, &all, dim) {
        let base = &p.vertices[simplex[0]];
        let diffs: Vec<Vec<Rational>> = simplex[1..]
            .iter()
            .map(|&i| vec_sub(&p.vertices[i], base))
            .collect();
        let w = determinant(&Matrix::from_cols(dim, diffs)).abs();
        let mut sum = vec![Rational::zero(); dim];
        for &i in &simplex {
            sum = vec_add(&sum, &p.vertices[i]);
        }
        let avg = vec_scale(&sum, &(Rational::one() / rat_int(&Int::from(dim + 1))));
        acc = vec_add(&acc, &vec_scale(&avg, &w));
        total += w;
    }
    Ok(vec_scale(&acc, &(Rational::one() / total)))
}

/// Translate so that the centroid is the origin.
pub fn translate_to_centered(p: &DelzantPolytope) -> DelzantPolytope {
    let c = centroid(p).expect("stored polytopes are full-dimensional");
    p.translate(&c.iter().map(|x| -x).collect::<Vec<_>>())
}

pub fn vertex_count(p: &DelzantPolytope) -> usize {
    p.vertices.len()
}
