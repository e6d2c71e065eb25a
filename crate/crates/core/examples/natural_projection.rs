//! Projects a polytope along its Fine core. The image keeps the Fine
//! Q-codegree and its Fine core is a single point.

use fine_adjunction::adjunction::FineAdjunction;
use fine_adjunction::exactla::format_int_vec;
use fine_adjunction::harness::corpus;
use fine_adjunction::harness::report::hull;

fn main() -> fine_adjunction::Result<()> {
    for p in [corpus::tall_wedge(), corpus::wide_triangle(), corpus::delta(3, 2)] {
        let adj = FineAdjunction::compute(&p)?;
        let proj = adj.natural_projection()?;
        let rows: Vec<String> = proj.matrix.iter().map(|r| format_int_vec(r)).collect();
        println!("P = {}", hull(&p));
        println!("  core^F = {}", hull(&adj.core));
        println!("  project by [{}] onto {}", rows.join(" "), hull(&proj.projected));
        println!(
            "  image core^F = {}, mu^F kept: {}",
            hull(&proj.projected_core),
            proj.mu_preserved
        );
    }
    Ok(())
}
