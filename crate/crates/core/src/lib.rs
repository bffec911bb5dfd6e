//! Tutte polynomial specializations `T(1, y)` of cones over graphs, the
//! generalized tree shift, and the poset it induces on unlabeled trees.
//!
//! The central quantity is `f(G) = T_{Cone(G)}(1, y)`. For trees, `f` is
//! coefficientwise non-increasing along generalized tree shifts; the
//! [`verify`] module checks this, together with the identities behind it,
//! exhaustively for small trees.

pub mod canon;
pub mod cone;
pub mod corpus;
pub mod graph;
pub mod poly;
pub mod poset;
pub mod trees;
pub mod tutte;
pub mod verify;

pub use graph::{EdgeClass, GraphError, Multigraph};
pub use poly::{BivarPolynomial, IntPolynomial, PolyError};
pub use poset::HasseDiagram;
pub use trees::{CanonicalTree, ShiftSite};
