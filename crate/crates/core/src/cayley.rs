//! Cayley sums, the codegree, the bound `d^F(P)` and a bounded search for
//! Cayley structures `P ≅ P_0 ⋆ ⋯ ⋆ P_t`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::adjunction::mu_fine;
use crate::exactla::{
    self, int_rat, smith_invariants, unimodular_completion, IntMatrix, IntVector, RatVector, Rational,
};
use crate::polytope::{simplex_normalized_volume, Polytope};
use crate::{Error, Result};

/// `conv((P_0 x 0) ∪ (P_1 x e_1) ∪ ... ∪ (P_t x e_t))` in `R^{k + t}`.
pub fn cayley_sum(parts: &[Polytope]) -> Result<Polytope> {
    if parts.len() < 2 {
        return Err(Error::OutOfRange(format!("a Cayley sum needs at least 2 summands, got {}", parts.len())));
    }
    let k = parts[0].ambient_dim();
    if parts.iter().any(|q| q.ambient_dim() != k) {
        return Err(Error::DimensionMismatch("summands live in different spaces".into()));
    }
    if parts.iter().any(|q| q.is_empty()) {
        return Err(Error::EmptyPolytope);
    }
    if !parts.iter().all(Polytope::is_lattice) {
        return Err(Error::NotLattice);
    }
    let t = parts.len() - 1;
    let mut points = Vec::new();
    for (i, q) in parts.iter().enumerate() {
        for v in q.vertices() {
            let mut w = v.clone();
            w.extend((1..=t).map(|j| if j == i { Rational::one() } else { Rational::zero() }));
            points.push(w);
        }
    }
    Polytope::from_vertices(&points)
}

/// Smallest `k >= 1` such that the interior of `kP` contains a lattice point.
pub fn codegree(p: &Polytope) -> Result<usize> {
    p.require_full_dimensional()?;
    if !p.is_lattice() {
        return Err(Error::NotLattice);
    }
    let n = p.ambient_dim();
    for k in 1..=n + 1 {
        let scaled = p.dilate(&Rational::from_integer(BigInt::from(k)))?;
        if !scaled.lattice_points(true).is_empty() {
            return Ok(k);
        }
    }
    Err(Error::invariant(format!("no interior lattice point in {}P", n + 1)))
}

/// `2(n - floor(mu))` for non-integral `mu`, `2(n - mu) + 1` otherwise.
pub fn df_bound(n: usize, mu_fine: &Rational) -> i64 {
    let n = i64::try_from(n).expect("dimension fits");
    let floor = mu_fine.floor().to_integer().to_i64().expect("mu^F is at most n + 1");
    if mu_fine.is_integer() {
        2 * (n - floor) + 1
    } else {
        2 * (n - floor)
    }
}

pub fn d_f(p: &Polytope) -> Result<i64> {
    Ok(df_bound(p.ambient_dim(), &mu_fine(p)?))
}

/// Lattice simplex of normalized volume one.
pub fn is_unimodular_simplex(p: &Polytope) -> bool {
    p.is_lattice() && simplex_normalized_volume(p).is_some_and(|v| v.is_one())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyStructure {
    pub t: usize,
    /// `t x n` rows mapping `P` onto `Δ_t` after subtracting `offset`.
    pub projection: IntMatrix,
    pub offset: IntVector,
    /// Unimodular `n x n` matrix whose first `t` rows are `projection`.
    pub unimodular: IntMatrix,
    /// Fibers over `0, e_1, ..., e_t` in the coordinates given by the last
    /// `n - t` rows of `unimodular`.
    pub summands: Vec<Polytope>,
    pub fiber_dim: isize,
}

impl CayleyStructure {
    /// Dimension `n - t` of the space the summands live in.
    pub fn summand_space_dim(&self) -> usize {
        self.summands[0].ambient_dim()
    }

    /// `P` in the coordinates `(fiber, simplex)` where it is literally the
    /// Cayley sum of the summands.
    pub fn straightened(&self, p: &Polytope) -> Result<Polytope> {
        let t = self.t;
        let reordered: IntMatrix =
            self.unimodular[t..].iter().chain(&self.unimodular[..t]).cloned().collect();
        let mut shift: RatVector = vec![Rational::zero(); p.ambient_dim() - t];
        shift.extend(self.offset.iter().map(|c| -int_rat(c)));
        p.map_linear(&reordered)?.translate(&shift)
    }

    pub fn verify(&self, p: &Polytope) -> Result<bool> {
        Ok(self.straightened(p)? == cayley_sum(&self.summands)?)
    }
}

/// Searches `t`-tuples of lattice-width-one directions, in lexicographic
/// order, for a lattice projection of `P` onto `Δ_t`. Directions are bounded
/// by the largest facet-normal coordinate, so a `None` is conclusive only
/// within that bound.
pub fn find_cayley_structure(p: &Polytope, t: usize) -> Result<Option<CayleyStructure>> {
    Ok(search(p, t, true)?.pop())
}

/// Every structure the search of [`find_cayley_structure`] can see, in the
/// same order.
pub fn cayley_structures(p: &Polytope, t: usize) -> Result<Vec<CayleyStructure>> {
    search(p, t, false)
}

fn search(p: &Polytope, t: usize, first_only: bool) -> Result<Vec<CayleyStructure>> {
    p.require_full_dimensional()?;
    if !p.is_lattice() {
        return Err(Error::NotLattice);
    }
    let n = p.ambient_dim();
    if t == 0 || t >= n {
        return Err(Error::OutOfRange(format!("t = {t} must satisfy 1 <= t < {n}")));
    }
    let bound = p
        .facets()
        .iter()
        .flat_map(|h| h.normal.iter())
        .map(|x| x.abs().to_i64().unwrap_or(i64::MAX))
        .max()
        .unwrap_or(1)
        .max(1);
    let directions = p.min_width_directions(bound);
    let vertices = p.int_vertices()?;
    let mut found = Vec::new();
    for combo in index_combinations(directions.len(), t) {
        let rows: IntMatrix = combo.iter().map(|&i| directions[i].clone()).collect();
        if let Some(structure) = try_projection(p, &vertices, rows)? {
            found.push(structure);
            if first_only {
                break;
            }
        }
    }
    Ok(found)
}

fn try_projection(p: &Polytope, vertices: &[IntVector], rows: IntMatrix) -> Result<Option<CayleyStructure>> {
    let t = rows.len();
    let offset: IntVector = rows
        .iter()
        .map(|u| vertices.iter().map(|v| exactla::dot_int(u, v)).min().expect("nonempty"))
        .collect();
    // label 0 for the origin of Δ_t, label j for e_j
    let mut labels = Vec::with_capacity(vertices.len());
    for v in vertices {
        let image: Vec<BigInt> = rows.iter().zip(&offset).map(|(u, c)| exactla::dot_int(u, v) - c).collect();
        let ones: Vec<usize> = (0..t).filter(|&i| image[i].is_one()).collect();
        if image.iter().any(|x| !x.is_zero() && !x.is_one()) || ones.len() > 1 {
            return Ok(None);
        }
        labels.push(ones.first().map_or(0, |&i| i + 1));
    }
    if (0..=t).any(|j| !labels.contains(&j)) {
        return Ok(None);
    }
    if smith_invariants(&rows).iter().any(|d| !d.is_one()) {
        return Ok(None);
    }
    let unimodular = unimodular_completion(&rows, p.ambient_dim())?;
    let section = &unimodular[t..];
    let summands = (0..=t)
        .map(|j| {
            let fiber: Vec<RatVector> = vertices
                .iter()
                .zip(&labels)
                .filter(|&(_, &l)| l == j)
                .map(|(v, _)| section.iter().map(|r| int_rat(&exactla::dot_int(r, v))).collect())
                .collect();
            Polytope::from_vertices(&fiber)
        })
        .collect::<Result<Vec<_>>>()?;
    let fiber_dim = summands.iter().map(Polytope::dim).max().expect("t >= 1");
    let structure = CayleyStructure { t, projection: rows, offset, unimodular, summands, fiber_dim };
    if !structure.verify(p)? {
        return Err(Error::invariant("Cayley structure does not reconstruct the polytope"));
    }
    Ok(Some(structure))
}

fn index_combinations(len: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, len: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..len {
            current.push(i);
            rec(i + 1, len, k, current, out);
            current.pop();
        }
    }
    rec(0, len, k, &mut current, &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionOutcome {
    /// `n <= d^F(P)`: nothing is claimed.
    HypothesisNotMet,
    /// `P` is a unimodular simplex, which the statement excludes.
    UnimodularSimplex,
    Verified {
        structure: CayleyStructure,
        /// The summands live in dimension `n - t <= d^F(P)`.
        fits_in_dimension: bool,
    },
    /// No structure with fibers of dimension at most `d^F(P)` was found.
    NotFound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub n: usize,
    pub mu_fine: Rational,
    pub d_f: i64,
    pub outcome: DecompositionOutcome,
}

impl DecompositionReport {
    /// True unless the hypothesis holds and no structure was found.
    pub fn holds(&self) -> bool {
        !matches!(self.outcome, DecompositionOutcome::NotFound)
    }
}

/// If `n > d^F(P)`, searches `t = n-1, ..., 1` for a verified Cayley
/// structure whose fibers have dimension at most `d^F(P)`.
pub fn verify_decomposition_theorem(p: &Polytope) -> Result<DecompositionReport> {
    let n = p.ambient_dim();
    let mu = mu_fine(p)?;
    let d = df_bound(n, &mu);
    let outcome = if i64::try_from(n).expect("small") <= d {
        DecompositionOutcome::HypothesisNotMet
    } else if is_unimodular_simplex(p) {
        DecompositionOutcome::UnimodularSimplex
    } else {
        let mut found = DecompositionOutcome::NotFound;
        for t in (1..n).rev() {
            let small = |s: &CayleyStructure| i64::try_from(s.fiber_dim).expect("small") <= d;
            if let Some(structure) = cayley_structures(p, t)?.into_iter().find(small) {
                let fits_in_dimension = i64::try_from(n - t).expect("small") <= d;
                found = DecompositionOutcome::Verified { structure, fits_in_dimension };
                break;
            }
        }
        found
    };
    Ok(DecompositionReport { n, mu_fine: mu, d_f: d, outcome })
}

#[cfg(test)]
mod tests;
