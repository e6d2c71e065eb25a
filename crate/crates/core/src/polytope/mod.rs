//! Rational polytopes with exact vertex/facet duality.
//!
//! A [`Polytope`] is always in canonical form: vertices are the extreme
//! points sorted lexicographically, facets are sorted by primitive normal
//! then offset, and the affine hull is given by equations in reduced
//! echelon form. Structural equality is therefore set equality.

mod dd;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactla::{
    self, ceil, clear_denominators, dot_int_rat, dot_rat, floor, int_rat, primitive_multiple,
    rref, IntMatrix, IntVector, RatVector, Rational,
};
use crate::{Error, Result};

/// A valid inequality `<normal, x> >= offset` with a primitive normal.
///
/// Also used for affine-hull equations, where it means `<normal, x> = offset`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfSpace {
    pub normal: IntVector,
    pub offset: Rational,
}

impl HalfSpace {
    /// Normalizes `normal` to be primitive, dividing the offset by the same
    /// factor so the set described is unchanged.
    pub fn new(normal: IntVector, offset: Rational) -> Result<Self> {
        let g = exactla::gcd_of(&normal);
        if g.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(HalfSpace {
            normal: normal.iter().map(|x| x / &g).collect(),
            offset: offset / Rational::from_integer(g),
        })
    }

    /// Lattice distance `<a, x> - b` (negative outside).
    pub fn slack(&self, x: &[Rational]) -> Rational {
        dot_int_rat(&self.normal, x) - &self.offset
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        !self.slack(x).is_negative()
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.slack(x).is_zero()
    }

    pub fn shifted(&self, by: &Rational) -> HalfSpace {
        HalfSpace { normal: self.normal.clone(), offset: &self.offset + by }
    }
}

impl fmt::Display for HalfSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, x> >= {}", exactla::format_int_vec(&self.normal), self.offset)
    }
}

/// The normal cone at a vertex, spanned by the inward facet normals tight
/// there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCone {
    pub vertex: RatVector,
    pub generators: Vec<IntVector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polytope {
    ambient_dim: usize,
    dim: isize,
    vertices: Vec<RatVector>,
    facets: Vec<HalfSpace>,
    /// Sorted vertex indices tight at each facet.
    incidence: Vec<Vec<usize>>,
    /// Affine hull equations, empty iff full-dimensional.
    equations: Vec<HalfSpace>,
}

impl Polytope {
    /// The empty subset of `R^n`.
    pub fn empty(ambient_dim: usize) -> Self {
        Polytope {
            ambient_dim,
            dim: -1,
            vertices: Vec::new(),
            facets: Vec::new(),
            incidence: Vec::new(),
            equations: Vec::new(),
        }
    }

    /// Convex hull of a finite point set.
    pub fn from_vertices(points: &[RatVector]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let n = first.len();
        if points.iter().any(|p| p.len() != n) {
            return Err(Error::DimensionMismatch("points of different lengths".into()));
        }
        let mut pts: Vec<RatVector> = points.to_vec();
        pts.sort();
        pts.dedup();

        let base = pts[0].clone();
        let diffs: Vec<RatVector> = pts[1..].iter().map(|p| exactla::sub_rat(p, &base)).collect();
        let (direction, pivots) = rref(&diffs);
        let d = pivots.len();
        let equations = affine_hull_equations(&pts, n);

        if d == 0 {
            return Ok(Polytope {
                ambient_dim: n,
                dim: 0,
                vertices: vec![base],
                facets: Vec::new(),
                incidence: Vec::new(),
                equations,
            });
        }

        // Coordinates at the pivot columns are injective on the affine hull.
        let local: Vec<RatVector> =
            pts.iter().map(|p| pivots.iter().map(|&c| p[c].clone()).collect()).collect();
        let local_facets = hull_facets(&local, d);

        let facets_ambient: Vec<(HalfSpace, IntVector)> = local_facets
            .into_iter()
            .map(|(c, _)| {
                let ambient = if d == n {
                    c.clone()
                } else {
                    let mut lifted = vec![Rational::zero(); n];
                    for (&col, ci) in pivots.iter().zip(&c) {
                        lifted[col] = int_rat(ci);
                    }
                    let projected = project_onto_span(&lifted, &direction);
                    primitive_multiple(&projected).expect("facet functional is nonconstant")
                };
                let offset = pts
                    .iter()
                    .map(|p| dot_int_rat(&ambient, p))
                    .min()
                    .expect("nonempty");
                (HalfSpace { normal: ambient, offset }, c)
            })
            .collect();

        let local_normals: Vec<RatVector> =
            facets_ambient.iter().map(|(_, c)| exactla::to_rat_vec(c)).collect();
        let vertices: Vec<RatVector> = pts
            .into_iter()
            .zip(&local)
            .filter(|(p, _)| {
                let tight: Vec<RatVector> = facets_ambient
                    .iter()
                    .zip(&local_normals)
                    .filter(|((h, _), _)| h.is_tight(p))
                    .map(|(_, c)| c.clone())
                    .collect();
                exactla::rank(&tight) == d
            })
            .map(|(p, _)| p)
            .collect();

        let mut facets: Vec<HalfSpace> = facets_ambient.into_iter().map(|(h, _)| h).collect();
        facets.sort();
        facets.dedup();
        Ok(Self::assemble(n, d as isize, vertices, facets, equations))
    }

    fn assemble(
        ambient_dim: usize,
        dim: isize,
        vertices: Vec<RatVector>,
        facets: Vec<HalfSpace>,
        equations: Vec<HalfSpace>,
    ) -> Self {
        let incidence = facets
            .iter()
            .map(|h| (0..vertices.len()).filter(|&i| h.is_tight(&vertices[i])).collect())
            .collect();
        Polytope { ambient_dim, dim, vertices, facets, incidence, equations }
    }

    pub fn from_int_vertices(points: &[IntVector]) -> Result<Self> {
        let pts: Vec<RatVector> = points.iter().map(|p| exactla::to_rat_vec(p)).collect();
        Self::from_vertices(&pts)
    }

    /// Intersection of halfspaces in `R^n`. Returns the empty polytope for
    /// an infeasible system and an error for an unbounded one.
    pub fn from_halfspaces(ambient_dim: usize, halfspaces: &[HalfSpace]) -> Result<Self> {
        let n = ambient_dim;
        if let Some(bad) = halfspaces.iter().find(|h| h.normal.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "halfspace normal of length {} in R^{n}",
                bad.normal.len()
            )));
        }
        // Homogenize: <a, x> - b t >= 0 together with t >= 0.
        let mut rows: Vec<IntVector> = Vec::with_capacity(halfspaces.len() + 1);
        let mut t_row = vec![BigInt::zero(); n + 1];
        t_row[n] = BigInt::one();
        rows.push(t_row);
        for h in halfspaces {
            let denom = h.offset.denom();
            let mut row: IntVector = h.normal.iter().map(|a| a * denom).collect();
            row.push(-h.offset.numer());
            rows.push(row);
        }
        let cone = dd::double_description(&rows, n + 1);
        let vertices: Vec<RatVector> = cone
            .rays
            .iter()
            .filter(|r| r[n].is_positive())
            .map(|r| {
                let t = int_rat(&r[n]);
                r[..n].iter().map(|x| int_rat(x) / &t).collect()
            })
            .collect();
        if vertices.is_empty() {
            return Ok(Self::empty(n));
        }
        if !cone.lineality.is_empty() || cone.rays.iter().any(|r| r[n].is_zero()) {
            return Err(Error::Unbounded);
        }
        let p = Self::from_vertices(&vertices)?;
        debug_assert!(p.vertices.iter().all(|v| halfspaces.iter().all(|h| h.contains(v))));
        Ok(p)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the affine hull, `-1` for the empty polytope.
    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim as isize
    }

    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[HalfSpace] {
        &self.facets
    }

    pub fn incidence(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    pub fn equations(&self) -> &[HalfSpace] {
        &self.equations
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(|v| v.iter().all(|x| x.is_integer()))
    }

    pub fn int_vertices(&self) -> Result<Vec<IntVector>> {
        self.vertices.iter().map(|v| exactla::to_int_vec(v).ok_or(Error::NotLattice)).collect()
    }

    pub(crate) fn require_full_dimensional(&self) -> Result<()> {
        if self.is_full_dimensional() {
            Ok(())
        } else {
            Err(Error::NotFullDimensional { dim: self.dim, ambient: self.ambient_dim })
        }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        !self.is_empty()
            && self.equations.iter().all(|e| e.is_tight(x))
            && self.facets.iter().all(|h| h.contains(x))
    }

    /// `self ⊆ other`
    pub fn is_subset_of(&self, other: &Polytope) -> bool {
        self.vertices.iter().all(|v| other.contains(v))
    }

    /// Exact minimum of `<a, x>` over the polytope.
    pub fn min_of(&self, a: &[BigInt]) -> Option<Rational> {
        self.vertices.iter().map(|v| dot_int_rat(a, v)).min()
    }

    pub fn max_of(&self, a: &[BigInt]) -> Option<Rational> {
        self.vertices.iter().map(|v| dot_int_rat(a, v)).max()
    }

    pub fn dilate(&self, factor: &Rational) -> Result<Polytope> {
        let pts: Vec<RatVector> =
            self.vertices.iter().map(|v| exactla::scale_rat(v, factor)).collect();
        Polytope::from_vertices(&pts)
    }

    pub fn translate(&self, by: &[Rational]) -> Result<Polytope> {
        let pts: Vec<RatVector> = self.vertices.iter().map(|v| exactla::add_rat(v, by)).collect();
        Polytope::from_vertices(&pts)
    }

    /// Image under the linear map `x -> M x`.
    pub fn map_linear(&self, matrix: &IntMatrix) -> Result<Polytope> {
        if self.is_empty() {
            return Ok(Polytope::empty(matrix.len()));
        }
        let pts: Vec<RatVector> = self.vertices.iter().map(|v| exactla::mat_vec(matrix, v)).collect();
        Polytope::from_vertices(&pts)
    }

    /// Barycenter of the vertices, a relative interior point.
    pub fn vertex_barycenter(&self) -> Option<RatVector> {
        let count = Rational::from_integer(BigInt::from(self.vertices.len()));
        let first = self.vertices.first()?;
        let mut sum = vec![Rational::zero(); first.len()];
        for v in &self.vertices {
            sum = exactla::add_rat(&sum, v);
        }
        Some(sum.iter().map(|x| x / &count).collect())
    }

    /// Integer points of the polytope in lexicographic order. With `strict`
    /// only points strictly inside every facet are returned, which is the
    /// relative interior.
    pub fn lattice_points(&self, strict: bool) -> Vec<IntVector> {
        let Some(first) = self.vertices.first() else {
            return Vec::new();
        };
        let n = self.ambient_dim;
        let lo: Vec<BigInt> = (0..n)
            .map(|i| ceil(self.vertices.iter().map(|v| &v[i]).min().unwrap_or(&first[i])))
            .collect();
        let hi: Vec<BigInt> = (0..n)
            .map(|i| floor(self.vertices.iter().map(|v| &v[i]).max().unwrap_or(&first[i])))
            .collect();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            let x = exactla::to_rat_vec(&cur);
            let inside = self.equations.iter().all(|e| e.is_tight(&x))
                && self.facets.iter().all(|h| {
                    let s = h.slack(&x);
                    if strict {
                        s.is_positive()
                    } else {
                        !s.is_negative()
                    }
                });
            if inside {
                out.push(cur.clone());
            }
            // odometer, last coordinate fastest
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = lo[i].clone();
            }
        }
    }

    /// One cone per vertex, generated by the facet normals tight there.
    pub fn normal_fan(&self) -> Result<Vec<VertexCone>> {
        self.require_full_dimensional()?;
        Ok(self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| VertexCone {
                vertex: v.clone(),
                generators: self
                    .facets
                    .iter()
                    .zip(&self.incidence)
                    .filter(|(_, inc)| inc.binary_search(&i).is_ok())
                    .map(|(h, _)| h.normal.clone())
                    .collect(),
            })
            .collect())
    }

    /// The vertex cone at `vertex`, if it is a vertex.
    pub fn vertex_cone(&self, vertex: &[Rational]) -> Result<VertexCone> {
        self.require_full_dimensional()?;
        let i = self
            .vertices
            .binary_search_by(|v| v.as_slice().cmp(vertex))
            .map_err(|_| Error::NotAVertex(exactla::format_vec(vertex)))?;
        Ok(VertexCone {
            vertex: vertex.to_vec(),
            generators: self
                .facets
                .iter()
                .zip(&self.incidence)
                .filter(|(_, inc)| inc.binary_search(&i).is_ok())
                .map(|(h, _)| h.normal.clone())
                .collect(),
        })
    }

    /// Maximal cones as sets of primitive generators, independent of where
    /// the vertices sit.
    fn fan_signature(&self) -> BTreeSet<Vec<IntVector>> {
        self.incidence_by_vertex()
            .into_iter()
            .map(|facet_ids| facet_ids.into_iter().map(|f| self.facets[f].normal.clone()).collect())
            .collect()
    }

    fn incidence_by_vertex(&self) -> Vec<Vec<usize>> {
        let mut by_vertex = vec![Vec::new(); self.vertices.len()];
        for (f, inc) in self.incidence.iter().enumerate() {
            for &v in inc {
                by_vertex[v].push(f);
            }
        }
        by_vertex
    }

    /// Lattice width `max <u, x> - min <u, x>`.
    pub fn lattice_width(&self, u: &[BigInt]) -> Result<Rational> {
        if u.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        if u.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch("direction length".into()));
        }
        match (self.max_of(u), self.min_of(u)) {
            (Some(max), Some(min)) => Ok(max - min),
            _ => Err(Error::EmptyPolytope),
        }
    }

    /// Primitive directions with entries in `[-bound, bound]` along which
    /// the polytope has lattice width exactly one, in lexicographic order.
    pub fn min_width_directions(&self, bound: i64) -> Vec<IntVector> {
        let one = Rational::one();
        primitive_directions(self.ambient_dim, bound)
            .into_iter()
            .filter(|u| self.lattice_width(u).map(|w| w == one).unwrap_or(false))
            .collect()
    }
}

/// Whether two full-dimensional polytopes have the same normal fan.
/// Lower-dimensional arguments never share the fan of a full-dimensional one.
pub fn fans_equal(p: &Polytope, q: &Polytope) -> Result<bool> {
    if p.ambient_dim != q.ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "R^{} versus R^{}",
            p.ambient_dim, q.ambient_dim
        )));
    }
    match (p.is_full_dimensional(), q.is_full_dimensional()) {
        (true, true) => Ok(p.vertices.len() == q.vertices.len()
            && p.facets.len() == q.facets.len()
            && p.fan_signature() == q.fan_signature()),
        (false, false) => p.require_full_dimensional().map(|_| false),
        _ => Ok(false),
    }
}

/// All primitive integer vectors with entries in `[-bound, bound]`.
pub fn primitive_directions(n: usize, bound: i64) -> Vec<IntVector> {
    let mut out = Vec::new();
    let mut cur = vec![-bound; n];
    loop {
        if cur.iter().any(|&x| x != 0) {
            let v: IntVector = cur.iter().map(|&x| BigInt::from(x)).collect();
            if exactla::gcd_of(&v).is_one() {
                out.push(v);
            }
        }
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < bound {
                cur[i] += 1;
                break;
            }
            cur[i] = -bound;
        }
    }
}

/// Facets of the full-dimensional hull of `points` in `R^d`, as primitive
/// integer functionals `c` with offset `beta`: `<c, x> >= beta`.
fn hull_facets(points: &[RatVector], d: usize) -> Vec<(IntVector, Rational)> {
    // Polar cone in (c, beta): <c, p> - beta >= 0 for all p.
    let rows: Vec<IntVector> = points
        .iter()
        .map(|p| {
            let mut row: RatVector = p.clone();
            row.push(-Rational::one());
            clear_denominators(&row)
        })
        .collect();
    let cone = dd::double_description(&rows, d + 1);
    debug_assert!(cone.lineality.is_empty());
    cone.rays
        .into_iter()
        .filter(|r| r[..d].iter().any(|x| !x.is_zero()))
        .map(|r| {
            let g = exactla::gcd_of(&r[..d]);
            let c: IntVector = r[..d].iter().map(|x| x / &g).collect();
            let beta = Rational::new(r[d].clone(), g);
            (c, beta)
        })
        .collect()
}

/// Canonical equations of the affine hull of `points`.
fn affine_hull_equations(points: &[RatVector], n: usize) -> Vec<HalfSpace> {
    // Null space of the rows (p, -1): vectors (a, beta) with <a, p> = beta.
    let rows: Vec<RatVector> = points
        .iter()
        .map(|p| {
            let mut r = p.clone();
            r.push(-Rational::one());
            r
        })
        .collect();
    let (reduced, pivots) = rref(&rows);
    let free: Vec<usize> = (0..=n).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<RatVector> = free
        .iter()
        .map(|&f| {
            let mut z = vec![Rational::zero(); n + 1];
            z[f] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                z[p] = -&row[f];
            }
            z
        })
        .collect();
    let (canon, _) = rref(&basis);
    canon
        .into_iter()
        .map(|z| {
            let a = primitive_multiple(&z[..n]).expect("affine equation has a nonzero normal");
            let offset = dot_int_rat(&a, &points[0]);
            HalfSpace { normal: a, offset }
        })
        .collect()
}

/// Orthogonal projection of `v` onto the row span of `basis`.
fn project_onto_span(v: &[Rational], basis: &[RatVector]) -> RatVector {
    let gram: Vec<RatVector> =
        basis.iter().map(|b| basis.iter().map(|c| dot_rat(b, c)).collect()).collect();
    let rhs: RatVector = basis.iter().map(|b| dot_rat(b, v)).collect();
    let coeffs = exactla::solve_linear_system(&gram, &rhs).expect("Gram matrix is invertible");
    let mut out = vec![Rational::zero(); v.len()];
    for (c, b) in coeffs.iter().zip(basis) {
        for (o, x) in out.iter_mut().zip(b) {
            *o += c * x;
        }
    }
    out
}

/// Normalized volume `|det(v_1 - v_0, ..., v_n - v_0)|` of a full-dimensional
/// simplex; `None` if the polytope is not a full-dimensional simplex.
pub fn simplex_normalized_volume(p: &Polytope) -> Option<Rational> {
    if !p.is_full_dimensional() || p.vertices.len() != p.ambient_dim + 1 {
        return None;
    }
    let base = &p.vertices[0];
    let rows: Vec<RatVector> = p.vertices[1..].iter().map(|v| exactla::sub_rat(v, base)).collect();
    Some(determinant(&rows).abs())
}

pub(crate) fn determinant(rows: &[RatVector]) -> Rational {
    let mut m = rows.to_vec();
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let pivot = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x -= &f * y;
            }
        }
    }
    det
}
