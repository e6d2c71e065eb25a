//! Fine and classical adjoints of the hexagon conv{(±2,0),(±1,±2)} at a
//! few levels. The Fine ones shrink to a point, the classical ones to a
//! segment.

use fine_adjunction::adjunction::{classical_adjoint, FineAdjunction};
use fine_adjunction::exactla::rat;
use fine_adjunction::harness::corpus;
use fine_adjunction::harness::report::hull;

fn main() -> fine_adjunction::Result<()> {
    let hexagon = corpus::hexagon();
    let adj = FineAdjunction::compute(&hexagon)?;
    println!("P = {}", hull(&hexagon));
    for s in [rat(1, 2), rat(1, 1), rat(3, 2), rat(2, 1)] {
        let fine = adj.adjoint(&s)?;
        let classical = classical_adjoint(&hexagon, &s)?;
        let show = |q: &fine_adjunction::polytope::Polytope| if q.is_empty() { "empty".to_string() } else { hull(q) };
        println!("s = {s}");
        println!("  Fine:      {}", show(&fine));
        println!("  classical: {}", show(&classical));
    }
    Ok(())
}
