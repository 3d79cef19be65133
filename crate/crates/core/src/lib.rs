//! Plane-projecting embeddings of graphs: exact geometry, verification,
//! constructions and dimension bounds.

pub mod bounds;
pub mod constructors;
pub mod error;
pub mod forests;
pub mod geometry;
pub mod graph;
pub mod ppe;
pub mod projection;
pub mod svg;

pub use error::{Error, Result};
pub use geometry::{Point2, Rational};
pub use graph::{Edge, Graph};
pub use projection::{Embedding, PlanePair, PlaneProjection, VerificationReport};
