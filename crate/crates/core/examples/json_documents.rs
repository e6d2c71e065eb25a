//! Reading polytopes from JSON documents, by vertices or by inequalities,
//! and what a malformed document reports.

use fine_adjunction::harness::io::{polytope_json, PolytopeDocument};
use fine_adjunction::harness::corpus;

fn main() -> fine_adjunction::Result<()> {
    let by_inequalities = r#"{
        "name": "half-integral square",
        "ambient_dim": 2,
        "inequalities": [
            {"a": [1, 0], "b": "0"}, {"a": [-1, 0], "b": "-5/2"},
            {"a": [0, 1], "b": "0"}, {"a": [0, -1], "b": "-5/2"}
        ]
    }"#;
    let p = PolytopeDocument::parse(by_inequalities)?.to_polytope()?;
    println!("{}", serde_json::to_string_pretty(&polytope_json(&p))?);

    let canonical = PolytopeDocument::from_polytope(&corpus::wide_triangle(), Some("triangle".into()));
    println!("{}", canonical.to_json_string());

    let bad = r#"{"ambient_dim": 2, "vertices": [["0", "0"], ["1", 0.5]]}"#;
    match PolytopeDocument::parse(bad).and_then(|d| d.to_polytope()) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
