//! Exact Fine polyhedral adjunction for rational and lattice polytopes.
//!
//! The crate computes Fine adjoint polytopes `P^{F(s)}` (the points of `P`
//! at lattice distance at least `s` from every valid inequality), the Fine
//! Q-codegree and Fine core, Fine core normals, natural projections, the
//! Fine nef value together with its Q-Gorenstein/canonical test on the
//! normal fan, Cayley decompositions, and sampled surveys of the Fine
//! spectrum. Classical (facet-only) adjoint polytopes are provided for
//! comparison.
//!
//! All arithmetic is exact; see [`exactla`].

pub mod adjunction;
pub mod cayley;
pub mod exactla;
pub mod harness;
pub mod nef;
pub mod polytope;

mod error;

pub use error::{Error, Result};
