//! Sampled surveys of Fine Q-codegree values over all lattice polytopes
//! with vertices in a box.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::adjunction::{mu_classical, FineAdjunction};
use crate::cayley::codegree;
use crate::exactla::{int_vec, IntVector, Rational};
use crate::harness::corpus;
use crate::harness::io::int_vec_json;
use crate::polytope::Polytope;
use crate::{Error, Result};

/// Largest box, counted in grid points, that is surveyed. Only dimensions
/// one and two are enumerated.
pub const MAX_GRID_POINTS: usize = 49;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dedup {
    /// Distinct vertex sets.
    VertexSet,
    /// Distinct vertex sets up to lattice translation.
    Translation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumSurvey {
    pub dim: usize,
    pub bound: i64,
    pub epsilon: Rational,
    pub dedup: Dedup,
    pub sample_size: usize,
    /// Fine Q-codegree values at least `epsilon`, with multiplicities.
    pub values: BTreeMap<Rational, usize>,
    pub below_epsilon: usize,
    /// Distinct sets of Fine core normals met along the way.
    pub core_normal_sets: BTreeSet<Vec<IntVector>>,
}

struct Sample {
    mu_fine: Rational,
    core_normals: Vec<IntVector>,
}

/// Computes one sample and rechecks the codegree chain and the `A_core^F`
/// facts; any failure is an invariant violation naming the polytope.
fn sample(vertices: &[Vec<i64>]) -> Result<Sample> {
    let pts: Vec<IntVector> = vertices.iter().map(|v| int_vec(v)).collect();
    let p = Polytope::from_int_vertices(&pts)?;
    let n = p.ambient_dim();
    let adj = FineAdjunction::compute(&p)?;
    let mu = mu_classical(&p)?;
    let mu_f = adj.mu_fine();
    let cd = Rational::from_integer(codegree(&p)?.into());
    let top = Rational::from_integer((n + 1).into());
    let describe = || format!("{vertices:?}");
    if !(mu <= mu_f && mu_f <= cd && cd <= top) {
        return Err(Error::invariant(format!("chain mu <= mu^F <= cd <= n+1 fails on {}", describe())));
    }
    if !adj.a_core_check()?.holds() {
        return Err(Error::invariant(format!("A_core^F facts fail on {}", describe())));
    }
    Ok(Sample { mu_fine: mu_f, core_normals: adj.core_normals })
}

pub fn spectrum_survey(n: usize, bound: i64, epsilon: &Rational, dedup: Dedup) -> Result<SpectrumSurvey> {
    if n == 0 || bound < 1 {
        return Err(Error::OutOfRange(format!("need dim >= 1 and bound >= 1, got dim {n}, bound {bound}")));
    }
    let side = 2 * bound + 1;
    let grid = u32::try_from(n).ok().and_then(|e| side.checked_pow(e)).unwrap_or(i64::MAX);
    if grid > MAX_GRID_POINTS as i64 || n > 2 {
        return Err(Error::InfeasibleScale(format!(
            "[-{bound},{bound}]^{n} has {grid} lattice points, so up to 2^{grid} vertex subsets; \
             surveys are limited to {MAX_GRID_POINTS} grid points"
        )));
    }
    let polytopes = corpus::lattice_polytopes(n, bound, dedup == Dedup::Translation);
    let samples: Vec<Sample> = polytopes.par_iter().map(|vs| sample(vs)).collect::<Result<_>>()?;
    let mut values = BTreeMap::new();
    let mut below_epsilon = 0;
    let mut core_normal_sets = BTreeSet::new();
    for s in samples {
        if &s.mu_fine >= epsilon {
            *values.entry(s.mu_fine).or_insert(0) += 1;
        } else {
            below_epsilon += 1;
        }
        core_normal_sets.insert(s.core_normals);
    }
    Ok(SpectrumSurvey {
        dim: n,
        bound,
        epsilon: epsilon.clone(),
        dedup,
        sample_size: polytopes.len(),
        values,
        below_epsilon,
        core_normal_sets,
    })
}

impl SpectrumSurvey {
    pub fn to_json(&self) -> Value {
        json!({
            "dimension": self.dim,
            "bound": self.bound,
            "epsilon": self.epsilon.to_string(),
            "dedup": match self.dedup { Dedup::VertexSet => "vertex-set", Dedup::Translation => "translation" },
            "sample_size": self.sample_size,
            "values": self.values.iter().map(|(v, c)| json!({ "mu_fine": v.to_string(), "count": c })).collect::<Vec<_>>(),
            "below_epsilon": self.below_epsilon,
            "core_normal_sets": self.core_normal_sets.iter()
                .map(|set| set.iter().map(|a| int_vec_json(a)).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "survey of {} lattice polytopes in [-{b},{b}]^{}, epsilon = {}\n",
            self.sample_size,
            self.dim,
            self.epsilon,
            b = self.bound
        );
        for (v, c) in &self.values {
            out.push_str(&format!("  mu^F = {v}: {c}\n"));
        }
        out.push_str(&format!("  below epsilon: {}\n", self.below_epsilon));
        out.push_str(&format!("  distinct Fine core normal sets: {}\n", self.core_normal_sets.len()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn segments() {
        let s = spectrum_survey(1, 2, &rat(1, 10), Dedup::VertexSet).unwrap();
        let values: Vec<Rational> = s.values.keys().cloned().collect();
        assert_eq!(values, vec![rat(1, 2), rat(2, 3), rat(1, 1), rat(2, 1)]);
        assert_eq!(s.sample_size, 10);
        assert_eq!(s.values[&rat(2, 1)], 4);
    }

    #[test]
    fn unit_box_polygons() {
        let s = spectrum_survey(2, 1, &rat(1, 2), Dedup::VertexSet).unwrap();
        assert!(s.values.contains_key(&rat(3, 1)));
        assert!(s.values.contains_key(&rat(2, 1)));
        let t = spectrum_survey(2, 1, &rat(1, 2), Dedup::Translation).unwrap();
        assert!(t.sample_size < s.sample_size);
        assert_eq!(t.values.keys().collect::<Vec<_>>(), s.values.keys().collect::<Vec<_>>());
        assert_eq!(s.to_json().to_string(), spectrum_survey(2, 1, &rat(1, 2), Dedup::VertexSet).unwrap().to_json().to_string());
    }

    #[test]
    fn refuses_large_boxes() {
        assert!(matches!(spectrum_survey(3, 1, &rat(1, 2), Dedup::VertexSet), Err(Error::InfeasibleScale(_))));
        let err = spectrum_survey(2, 4, &rat(1, 2), Dedup::VertexSet).unwrap_err();
        assert!(matches!(err, Error::InfeasibleScale(_)));
        assert!(err.to_string().contains("81 lattice points"));
    }
}
