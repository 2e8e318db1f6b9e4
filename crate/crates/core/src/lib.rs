//! Exact computations on finite simplicial complexes: exterior algebraic
//! shifting, reduced homology and depth over prime fields, independence
//! complexes of graphs, and exact maximum intersecting families of faces.

pub mod clique;
pub mod complex;
pub mod ekr;
pub mod error;
pub mod face;
pub mod graphs;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod shifting;

pub use complex::{FVector, SimplicialComplex};
pub use error::{Error, Result};
pub use face::{Face, VertexId};
pub use graphs::Graph;
pub use linalg::{PrimeField, PrimeMatrix};
