//! CLI-facing layer: polytope documents, reports, SVG figures, spectrum
//! surveys and the named corpus.

pub mod corpus;
pub mod io;
pub mod report;
pub mod survey;
pub mod svg;
