//! Q-Gorenstein and canonical tests on vertex cones, the vertex path
//! `v(s) = v + (s / r) u`, and the Fine nef value `τ^F`.
//!
//! `τ^F(P)` is finite exactly when every vertex cone of the normal fan is
//! Q-Gorenstein and canonical. In that case it is computed from candidate
//! breakpoints of the vertex paths, and every candidate is confirmed by
//! comparing normal fans of actual Fine adjoints.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::adjunction::FineAdjunction;
use crate::exactla::{
    self, dot_int_rat, int_rat, solve_linear_system, IntVector, LinearProgram, RatVector, Rational,
    Relation, Sense,
};
use crate::polytope::{fans_equal, Polytope, VertexCone};
use crate::{Error, Result};

/// `max sum(l)` over `y = sum l_i a_i`, `l >= 0`.
pub fn height(cone: &VertexCone, y: &[BigInt]) -> Result<Rational> {
    if y.iter().all(Zero::is_zero) {
        return Err(Error::ZeroPoint);
    }
    let k = cone.generators.len();
    let mut lp = LinearProgram::new(k).all_nonnegative();
    for (coord, target) in y.iter().enumerate() {
        lp.add_constraint(
            cone.generators.iter().map(|a| int_rat(&a[coord])).collect(),
            Relation::Eq,
            int_rat(target),
        );
    }
    lp.set_objective(vec![Rational::one(); k], Sense::Maximize);
    let result = lp.solve();
    match result.optimum {
        Some(h) => Ok(h),
        None if !result.is_feasible() => Err(Error::NotInCone),
        None => Err(Error::invariant("height LP unbounded on a pointed cone")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GorensteinStatus {
    /// Every generator satisfies `<a_i, u> = r` with `u` primitive.
    Gorenstein { r: BigInt, u: IntVector },
    NotQGorenstein,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinData {
    pub cone: VertexCone,
    pub status: GorensteinStatus,
}

impl GorensteinData {
    pub fn is_q_gorenstein(&self) -> bool {
        matches!(self.status, GorensteinStatus::Gorenstein { .. })
    }

    /// `u / r`, the rational functional taking value 1 on every generator.
    pub fn unit_functional(&self) -> Option<RatVector> {
        match &self.status {
            GorensteinStatus::Gorenstein { r, u } => {
                let r = int_rat(r);
                Some(u.iter().map(|x| int_rat(x) / &r).collect())
            }
            GorensteinStatus::NotQGorenstein => None,
        }
    }
}

pub fn gorenstein_index(cone: &VertexCone) -> GorensteinData {
    let rows: Vec<RatVector> = cone.generators.iter().map(|a| exactla::to_rat_vec(a)).collect();
    let ones = vec![Rational::one(); rows.len()];
    let status = solve_linear_system(&rows, &ones)
        .and_then(|u| exactla::primitive_multiple(&u))
        .map(|u| {
            let r = exactla::dot_int(&cone.generators[0], &u);
            GorensteinStatus::Gorenstein { r, u }
        })
        .unwrap_or(GorensteinStatus::NotQGorenstein);
    GorensteinData { cone: cone.clone(), status }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalReport {
    pub cone: VertexCone,
    pub alpha: Rational,
    /// Minimum height over the nonzero lattice points of the test region.
    pub min_height: Rational,
    /// Lattice points of height below `alpha`, with their heights.
    pub violators: Vec<(IntVector, Rational)>,
}

impl CanonicalReport {
    pub fn is_canonical(&self) -> bool {
        self.violators.is_empty()
    }
}

/// Checks `height >= alpha` on every nonzero lattice point of the cone. Points
/// of smaller height lie in `conv(0, m a_1, ..., m a_k)` with
/// `m = max(1, alpha)`, so only that region is scanned.
pub fn is_canonical(cone: &VertexCone, alpha: &Rational) -> Result<CanonicalReport> {
    if !alpha.is_positive() {
        return Err(Error::NegativeParameter(alpha.to_string()));
    }
    let n = cone.vertex.len();
    let scale = if alpha > &Rational::one() { alpha.clone() } else { Rational::one() };
    let mut region = vec![vec![Rational::zero(); n]];
    region.extend(
        cone.generators.iter().map(|a| a.iter().map(|x| int_rat(x) * &scale).collect::<RatVector>()),
    );
    let region = Polytope::from_vertices(&region)?;
    let mut min_height: Option<Rational> = None;
    let mut violators = Vec::new();
    for y in region.lattice_points(false) {
        if y.iter().all(Zero::is_zero) {
            continue;
        }
        let h = height(cone, &y)?;
        if &h < alpha {
            violators.push((y, h.clone()));
        }
        if min_height.as_ref().is_none_or(|m| &h < m) {
            min_height = Some(h);
        }
    }
    let min_height = min_height.ok_or_else(|| Error::invariant("test region has no lattice point"))?;
    Ok(CanonicalReport { cone: cone.clone(), alpha: alpha.clone(), min_height, violators })
}

/// `v(s) = v + (s / r) u` for a vertex with Q-Gorenstein cone.
pub fn vertex_path(p: &Polytope, v: &[Rational], s: &Rational) -> Result<RatVector> {
    let data = gorenstein_index(&p.vertex_cone(v)?);
    let step = data.unit_functional().ok_or(Error::NotGorenstein)?;
    Ok(exactla::add_rat(v, &exactla::scale_rat(&step, s)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NefObstruction {
    NotQGorenstein { vertex: RatVector },
    NotCanonical { vertex: RatVector, violator: IntVector, height: Rational },
}

impl fmt::Display for NefObstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NefObstruction::NotQGorenstein { vertex } => {
                write!(f, "vertex cone at {} is not Q-Gorenstein", exactla::format_vec(vertex))
            }
            NefObstruction::NotCanonical { vertex, violator, height } => write!(
                f,
                "vertex cone at {} is not canonical: {} has height {}",
                exactla::format_vec(vertex),
                exactla::format_int_vec(violator),
                height
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NefValue {
    /// `tau = 1 / s_sup`; `attained` when the fan is still that of `P` at
    /// `s_sup` itself.
    Finite { tau: Rational, s_sup: Rational, attained: bool },
    Infinite { reason: NefObstruction },
}

impl NefValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, NefValue::Finite { .. })
    }

    pub fn tau(&self) -> Option<&Rational> {
        match self {
            NefValue::Finite { tau, .. } => Some(tau),
            NefValue::Infinite { .. } => None,
        }
    }
}

impl fmt::Display for NefValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NefValue::Finite { tau, s_sup, attained } => {
                write!(f, "{tau} (sup s = {s_sup}, {})", if *attained { "attained" } else { "not attained" })
            }
            NefValue::Infinite { reason } => write!(f, "infinity ({reason})"),
        }
    }
}

/// Gorenstein and canonical data of every vertex cone, in vertex order.
pub fn fan_report(p: &Polytope) -> Result<Vec<(GorensteinData, CanonicalReport)>> {
    p.normal_fan()?
        .iter()
        .map(|cone| Ok((gorenstein_index(cone), is_canonical(cone, &Rational::one())?)))
        .collect()
}

/// The first vertex cone failing Q-Gorenstein or canonicity, if any.
pub fn nef_obstruction(p: &Polytope) -> Result<Option<NefObstruction>> {
    for cone in p.normal_fan()? {
        if !gorenstein_index(&cone).is_q_gorenstein() {
            return Ok(Some(NefObstruction::NotQGorenstein { vertex: cone.vertex }));
        }
        let report = is_canonical(&cone, &Rational::one())?;
        if let Some((violator, height)) = report.violators.into_iter().next() {
            return Ok(Some(NefObstruction::NotCanonical { vertex: cone.vertex, violator, height }));
        }
    }
    Ok(None)
}

pub fn nef_value_fine(p: &Polytope) -> Result<NefValue> {
    nef_value_with(&FineAdjunction::compute(p)?)
}

pub fn nef_value_with(adj: &FineAdjunction) -> Result<NefValue> {
    let p = adj.polytope();
    if let Some(reason) = nef_obstruction(p)? {
        return Ok(NefValue::Infinite { reason });
    }
    let candidates = breakpoints(adj)?;

    // Probe 1/2 (0 + c_1), c_1, 1/2 (c_1 + c_2), c_2, ... and keep the last
    // probe whose adjoint still has the fan of P.
    let mut probes: Vec<(Rational, Option<usize>)> = Vec::new();
    let mut prev = Rational::zero();
    for (i, c) in candidates.iter().enumerate() {
        probes.push(((&prev + c) / Rational::from_integer(2.into()), None));
        probes.push((c.clone(), Some(i)));
        prev = c.clone();
    }
    let mut last_equal: Option<usize> = None;
    for (j, (s, _)) in probes.iter().enumerate() {
        if fans_equal(p, &adj.adjoint(s)?)? {
            last_equal = Some(j);
        } else {
            break;
        }
    }
    let j = last_equal.ok_or_else(|| Error::invariant("fan changes before the first breakpoint"))?;
    let (s_sup, attained) = match probes[j].1 {
        Some(_) if j + 1 == probes.len() => {
            return Err(Error::invariant("fan of P survives at the Fine core"));
        }
        Some(i) => (candidates[i].clone(), true),
        // every midpoint is followed by its candidate
        None => (probes[j + 1].0.clone(), false),
    };
    Ok(NefValue::Finite { tau: s_sup.recip(), s_sup, attained })
}

/// Candidate values of `s` at which the combinatorics of
/// `conv{v(s)}` can change, sorted, ending with `s*`.
fn breakpoints(adj: &FineAdjunction) -> Result<Vec<Rational>> {
    let p = adj.polytope();
    let paths: Vec<(RatVector, RatVector)> = p
        .vertices()
        .iter()
        .map(|v| {
            let step = gorenstein_index(&p.vertex_cone(v)?)
                .unit_functional()
                .ok_or(Error::NotGorenstein)?;
            Ok((v.clone(), step))
        })
        .collect::<Result<_>>()?;
    let mut out: BTreeSet<Rational> = BTreeSet::new();
    for h in adj.system.halfspaces() {
        for (v, step) in &paths {
            // <a, v + s w> - b - s = (<a,v> - b) - s (1 - <a,w>)
            let slack = dot_int_rat(&h.normal, v) - &h.offset;
            let rate = Rational::one() - dot_int_rat(&h.normal, step);
            if slack.is_positive() && rate.is_positive() {
                out.insert(slack / rate);
            }
        }
    }
    for (i, (v, w)) in paths.iter().enumerate() {
        for (v2, w2) in &paths[i + 1..] {
            if let Some(s) = collision(v, w, v2, w2) {
                out.insert(s);
            }
        }
    }
    out.insert(adj.s_star.clone());
    Ok(out.into_iter().filter(|s| s.is_positive() && s <= &adj.s_star).collect())
}

/// Positive `s` with `v + s w = v2 + s w2`, if any.
fn collision(v: &[Rational], w: &[Rational], v2: &[Rational], w2: &[Rational]) -> Option<Rational> {
    let mut s: Option<Rational> = None;
    for i in 0..v.len() {
        let dv = &v2[i] - &v[i];
        let dw = &w[i] - &w2[i];
        if dw.is_zero() {
            if !dv.is_zero() {
                return None;
            }
            continue;
        }
        let si = dv / dw;
        match &s {
            Some(prev) if prev != &si => return None,
            _ => s = Some(si),
        }
    }
    s.filter(Signed::is_positive)
}

#[cfg(test)]
mod tests;
