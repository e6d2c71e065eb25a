//! The full per-polytope report behind `fineadj report`.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::adjunction::{
    classical_core, mu_classical, ACoreCheck, CoreNormalSpanning, FineAdjunction, NaturalProjection,
    Provenance,
};
use crate::cayley::{codegree, CayleyStructure, df_bound, verify_decomposition_theorem, DecompositionOutcome, DecompositionReport};
use crate::exactla::{format_int_vec, format_vec, Rational};
use crate::harness::io::{halfspace_json, int_vec_json, polytope_json, rat_vec_json, rational_json};
use crate::nef::{fan_report, nef_value_with, CanonicalReport, GorensteinData, GorensteinStatus, NefValue};
use crate::polytope::Polytope;
use crate::Result;

#[derive(Debug, Clone)]
pub struct FullReport {
    pub name: Option<String>,
    pub mu_classical: Rational,
    pub classical_core: Polytope,
    pub adjunction: FineAdjunction,
    pub a_core: Polytope,
    pub a_core_check: ACoreCheck,
    pub spanning: CoreNormalSpanning,
    pub projection: NaturalProjection,
    pub fan: Vec<(GorensteinData, CanonicalReport)>,
    pub nef: NefValue,
    pub d_f: i64,
    /// Present for lattice polytopes only.
    pub codegree: Option<usize>,
    pub decomposition: Option<DecompositionReport>,
}

pub fn full_report(p: &Polytope, name: Option<String>) -> Result<FullReport> {
    let adjunction = FineAdjunction::compute(p)?;
    let lattice = p.is_lattice();
    Ok(FullReport {
        name,
        mu_classical: mu_classical(p)?,
        classical_core: classical_core(p)?,
        a_core: adjunction.a_core()?,
        a_core_check: adjunction.a_core_check()?,
        spanning: adjunction.check_core_normal_spanning()?,
        projection: adjunction.natural_projection()?,
        fan: fan_report(p)?,
        nef: nef_value_with(&adjunction)?,
        d_f: df_bound(p.ambient_dim(), &adjunction.mu_fine()),
        codegree: if lattice { Some(codegree(p)?) } else { None },
        decomposition: if lattice { Some(verify_decomposition_theorem(p)?) } else { None },
        adjunction,
    })
}

/// `conv{...}` over the vertices.
pub fn hull(p: &Polytope) -> String {
    let parts: Vec<String> = p.vertices().iter().map(|v| format_vec(v)).collect();
    format!("conv{{{}}}", parts.join(", "))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Facet => "facet",
        Provenance::Extra => "extra",
    }
}

pub fn nef_json(nef: &NefValue) -> Value {
    match nef {
        NefValue::Finite { tau, s_sup, attained } => json!({
            "finite": true,
            "tau": rational_json(tau),
            "s_sup": rational_json(s_sup),
            "attained": attained,
        }),
        NefValue::Infinite { reason } => json!({ "finite": false, "reason": reason.to_string() }),
    }
}

pub fn structure_json(structure: &CayleyStructure) -> Value {
    json!({
        "t": structure.t,
        "projection": structure.projection.iter().map(|r| int_vec_json(r)).collect::<Vec<_>>(),
        "offset": int_vec_json(&structure.offset),
        "summands": structure.summands.iter().map(polytope_json).collect::<Vec<_>>(),
        "fiber_dim": structure.fiber_dim,
    })
}

pub fn decomposition_json(d: &DecompositionReport) -> Value {
    let outcome = match &d.outcome {
        DecompositionOutcome::HypothesisNotMet => json!({ "status": "hypothesis not met" }),
        DecompositionOutcome::UnimodularSimplex => json!({ "status": "unimodular simplex" }),
        DecompositionOutcome::NotFound => json!({ "status": "not found" }),
        DecompositionOutcome::Verified { structure, fits_in_dimension } => {
            let mut v = structure_json(structure);
            v["status"] = json!("verified");
            v["fits_in_dimension"] = json!(fits_in_dimension);
            v
        }
    };
    json!({ "n": d.n, "mu_fine": rational_json(&d.mu_fine), "d_f": d.d_f, "outcome": outcome })
}

impl FullReport {
    pub fn polytope(&self) -> &Polytope {
        self.adjunction.polytope()
    }

    pub fn to_json(&self) -> Value {
        let p = self.polytope();
        let adj = &self.adjunction;
        let relevant: Vec<Value> = adj
            .system
            .inequalities()
            .iter()
            .map(|i| {
                let mut v = halfspace_json(&i.halfspace);
                v["provenance"] = json!(provenance_name(i.provenance));
                v
            })
            .collect();
        let cones: Vec<Value> = self
            .fan
            .iter()
            .map(|(g, c)| {
                let gorenstein = match &g.status {
                    GorensteinStatus::Gorenstein { r, u } => json!({ "r": r.to_string(), "u": int_vec_json(u) }),
                    GorensteinStatus::NotQGorenstein => Value::Null,
                };
                json!({
                    "vertex": rat_vec_json(&g.cone.vertex),
                    "generators": g.cone.generators.iter().map(|a| int_vec_json(a)).collect::<Vec<_>>(),
                    "gorenstein": gorenstein,
                    "min_height": rational_json(&c.min_height),
                    "violators": c.violators.iter().map(|(y, h)| json!({ "point": int_vec_json(y), "height": rational_json(h) })).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "name": self.name,
            "ambient_dim": p.ambient_dim(),
            "polytope": polytope_json(p),
            "relevant_system": relevant,
            "mu": rational_json(&self.mu_classical),
            "mu_fine": rational_json(&adj.mu_fine()),
            "s_star": rational_json(&adj.s_star),
            "codegree": self.codegree,
            "core": polytope_json(&self.classical_core),
            "fine_core": polytope_json(&adj.core),
            "fine_core_normals": adj.core_normals.iter().map(|a| int_vec_json(a)).collect::<Vec<_>>(),
            "a_core": polytope_json(&self.a_core),
            "a_core_check": {
                "origin_in_relint": self.a_core_check.origin_in_relint,
                "vertices_are_core_normals": self.a_core_check.vertices_are_core_normals,
                "relint_lattice_points": self.a_core_check.relint_lattice_points.iter().map(|y| int_vec_json(y)).collect::<Vec<_>>(),
            },
            "core_normal_spanning": {
                "positively_spans": self.spanning.positively_spans,
                "bounded_cover": self.spanning.bounded_cover,
            },
            "natural_projection": {
                "matrix": self.projection.matrix.iter().map(|r| int_vec_json(r)).collect::<Vec<_>>(),
                "image": polytope_json(&self.projection.projected),
                "image_fine_core": polytope_json(&self.projection.projected_core),
                "mu_fine_preserved": self.projection.mu_preserved,
                "point_core": self.projection.core_is_point,
            },
            "vertex_cones": cones,
            "tau_fine": nef_json(&self.nef),
            "d_f": self.d_f,
            "cayley": self.decomposition.as_ref().map(decomposition_json),
        })
    }

    pub fn to_text(&self) -> String {
        let p = self.polytope();
        let adj = &self.adjunction;
        let mut out = String::new();
        let w = &mut out;
        if let Some(name) = &self.name {
            let _ = writeln!(w, "name: {name}");
        }
        let _ = writeln!(w, "dimension: {} in R^{}", p.dim(), p.ambient_dim());
        let _ = writeln!(w, "vertices: {}", hull(p));
        let _ = writeln!(w, "facets:");
        for h in p.facets() {
            let _ = writeln!(w, "  {h}");
        }
        let extras = adj.system.inequalities().iter().filter(|i| i.provenance == Provenance::Extra).count();
        let _ = writeln!(w, "relevant inequalities: {} ({} extra)", adj.system.inequalities().len(), extras);
        for i in adj.system.inequalities() {
            if i.provenance == Provenance::Extra {
                let _ = writeln!(w, "  {} [extra]", i.halfspace);
            }
        }
        let _ = writeln!(w, "mu: {}", self.mu_classical);
        let _ = writeln!(w, "mu^F: {} (s* = {})", adj.mu_fine(), adj.s_star);
        if let Some(cd) = self.codegree {
            let _ = writeln!(w, "cd: {cd}");
        }
        let _ = writeln!(w, "core: {}", hull(&self.classical_core));
        let _ = writeln!(w, "core^F: {}", hull(&adj.core));
        let normals: Vec<String> = adj.core_normals.iter().map(|a| format_int_vec(a)).collect();
        let _ = writeln!(w, "Fine core normals: {}", normals.join(" "));
        let _ = writeln!(
            w,
            "A_core^F: {} (origin interior: {}, only interior lattice point: {})",
            hull(&self.a_core),
            yes_no(self.a_core_check.origin_in_relint),
            yes_no(self.a_core_check.holds())
        );
        let rows: Vec<String> = self.projection.matrix.iter().map(|r| format_int_vec(r)).collect();
        let _ = writeln!(
            w,
            "natural projection: [{}] -> {} (mu^F preserved: {}, point core: {})",
            rows.join(" "),
            hull(&self.projection.projected),
            yes_no(self.projection.mu_preserved),
            yes_no(self.projection.core_is_point)
        );
        let _ = writeln!(w, "vertex cones:");
        for (g, c) in &self.fan {
            let status = match &g.status {
                GorensteinStatus::Gorenstein { r, u } => format!("Q-Gorenstein r = {r}, u = {}", format_int_vec(u)),
                GorensteinStatus::NotQGorenstein => "not Q-Gorenstein".to_string(),
            };
            let canon = match c.violators.first() {
                None => "canonical".to_string(),
                Some((y, h)) => format!("not canonical, {} has height {h}", format_int_vec(y)),
            };
            let _ = writeln!(w, "  {}: {status}; {canon}", format_vec(&g.cone.vertex));
        }
        let _ = writeln!(w, "tau^F: {}", self.nef);
        let _ = writeln!(w, "d^F: {}", self.d_f);
        if let Some(d) = &self.decomposition {
            let line = match &d.outcome {
                DecompositionOutcome::HypothesisNotMet => format!("n = {} <= d^F, no claim", d.n),
                DecompositionOutcome::UnimodularSimplex => "unimodular simplex".to_string(),
                DecompositionOutcome::NotFound => "no Cayley structure found".to_string(),
                DecompositionOutcome::Verified { structure, .. } => {
                    let parts: Vec<String> = structure.summands.iter().map(hull).collect();
                    format!("Cayley sum of {} polytopes: {}", structure.t + 1, parts.join(" * "))
                }
            };
            let _ = writeln!(w, "Cayley: {line}");
        }
        out
    }
}
