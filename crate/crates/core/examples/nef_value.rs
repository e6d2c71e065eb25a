//! Fine nef values, and the vertex cone that makes the value infinite when
//! one is not Q-Gorenstein or not canonical.

use fine_adjunction::harness::corpus;
use fine_adjunction::nef::{fan_report, nef_value_fine, GorensteinStatus};

fn main() -> fine_adjunction::Result<()> {
    for (name, p) in corpus::named_2d() {
        println!("{name}: tau^F = {}", nef_value_fine(&p)?);
    }

    // the hexagon fails at its vertices (±2, 0)
    let hexagon = corpus::hexagon();
    for (g, c) in fan_report(&hexagon)? {
        let r = match g.status {
            GorensteinStatus::Gorenstein { r, .. } => r.to_string(),
            GorensteinStatus::NotQGorenstein => "-".into(),
        };
        println!(
            "  hexagon vertex {:?}: index {r}, min height {}",
            g.cone.vertex.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            c.min_height
        );
    }
    Ok(())
}
