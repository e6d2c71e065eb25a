//! The full text report for a polytope, as printed by `fineadj report`.
//! Pass a JSON polytope document to report on it instead of the default.

use fine_adjunction::harness::corpus;
use fine_adjunction::harness::io::PolytopeDocument;
use fine_adjunction::harness::report::full_report;

fn main() -> fine_adjunction::Result<()> {
    let (p, name) = match std::env::args().nth(1) {
        Some(path) => {
            let doc = PolytopeDocument::load(path)?;
            (doc.to_polytope()?, doc.name)
        }
        None => (corpus::tall_wedge(), Some("tall wedge".to_string())),
    };
    print!("{}", full_report(&p, name)?.to_text());
    Ok(())
}
