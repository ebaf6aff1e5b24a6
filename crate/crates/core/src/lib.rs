//! Strongly regular graphs as exactly verified ball packings.
//!
//! The crate turns SRG parameters and explicit constructions into spherical
//! two-distance ball-packing certificates, Hoffman chromatic lower bounds,
//! spread-based colorings of generalized-quadrangle complements, and the
//! one-dimension lift that raises the chromatic number by two. All
//! verification is exact rational arithmetic.

pub mod arith;
pub mod chroma;
pub mod exact_cover;
pub mod field;
pub mod graph;
pub mod packing;
pub mod quadrangle;
pub mod srg;

pub use arith::{Rational, RationalMatrix};
pub use chroma::{ChromaError, ChromaticResult, Coloring};
pub use graph::{Graph, GraphError, SrgCheck, Subconstituent};
pub use packing::{PackingCertificate, PackingError, Representation};
pub use quadrangle::{IncidenceStructure, QuadrangleError, Spread, SpreadCertificate};
pub use srg::{SrgError, SrgParams, Spectrum};
