//! Builds Cayley sums, finds them again, and runs the decomposition check
//! for polytopes with large Fine Q-codegree.

use fine_adjunction::cayley::{cayley_sum, find_cayley_structure, verify_decomposition_theorem};
use fine_adjunction::exactla::rat_vec;
use fine_adjunction::harness::corpus;
use fine_adjunction::harness::report::hull;
use fine_adjunction::polytope::Polytope;

fn main() -> fine_adjunction::Result<()> {
    let segment = Polytope::from_vertices(&[rat_vec(&[0]), rat_vec(&[2])])?;
    let point = Polytope::from_vertices(&[rat_vec(&[1])])?;
    let sum = cayley_sum(&[segment, point])?;
    println!("[0,2] * {{1}} = {}", hull(&sum));

    let found = find_cayley_structure(&sum, 1)?.expect("a Cayley sum of two polytopes");
    let parts: Vec<String> = found.summands.iter().map(hull).collect();
    println!("found again: {} (verified: {})", parts.join(" * "), found.verify(&sum)?);

    for (name, p) in corpus::named_3d() {
        let report = verify_decomposition_theorem(&p)?;
        println!("{name}: mu^F = {}, d^F = {}, {:?}", report.mu_fine, report.d_f, outcome_name(&report.outcome));
    }
    Ok(())
}

fn outcome_name(o: &fine_adjunction::cayley::DecompositionOutcome) -> &'static str {
    use fine_adjunction::cayley::DecompositionOutcome::*;
    match o {
        HypothesisNotMet => "no claim",
        UnimodularSimplex => "unimodular simplex",
        Verified { .. } => "Cayley structure verified",
        NotFound => "not found",
    }
}
