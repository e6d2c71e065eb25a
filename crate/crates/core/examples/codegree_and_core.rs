//! Q-codegrees and cores of the named polygons and 3-polytopes, with the
//! Fine core normals and their hull A_core^F.

use fine_adjunction::adjunction::{classical_core, mu_classical, FineAdjunction};
use fine_adjunction::cayley::codegree;
use fine_adjunction::harness::corpus;
use fine_adjunction::harness::report::hull;
use fine_adjunction::exactla::format_int_vec;

fn main() -> fine_adjunction::Result<()> {
    for (name, p) in corpus::named_2d().into_iter().chain(corpus::named_3d()) {
        let adj = FineAdjunction::compute(&p)?;
        let check = adj.a_core_check()?;
        println!(
            "{name}: mu = {}, mu^F = {}, cd = {}",
            mu_classical(&p)?,
            adj.mu_fine(),
            codegree(&p)?
        );
        println!("  core   = {}", hull(&classical_core(&p)?));
        println!("  core^F = {}", hull(&adj.core));
        let normals: Vec<String> = adj.core_normals.iter().map(|a| format_int_vec(a)).collect();
        println!("  Fine core normals {} (A_core^F facts hold: {})", normals.join(" "), check.holds());
    }
    Ok(())
}
