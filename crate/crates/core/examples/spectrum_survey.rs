//! Fine Q-codegree values of all lattice polygons with vertices in
//! [-1,1]^2, and of all lattice segments in [-2,2].

use fine_adjunction::exactla::rat;
use fine_adjunction::harness::survey::{spectrum_survey, Dedup};

fn main() -> fine_adjunction::Result<()> {
    print!("{}", spectrum_survey(1, 2, &rat(1, 10), Dedup::VertexSet)?.to_text());
    print!("{}", spectrum_survey(2, 1, &rat(1, 2), Dedup::Translation)?.to_text());
    Ok(())
}
