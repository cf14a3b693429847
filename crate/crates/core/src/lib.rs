//! Exact zero forcing and maximum-nullity certification for circulant graphs.
//!
//! The crate computes the zero forcing number `Z(G)` of small graphs by
//! pruned exact search, builds the graph families where closed-form values
//! are known (circulants, Cartesian and torus products), certifies lower
//! bounds on the maximum nullity `M(G)` with explicit rational witness
//! matrices, and cross-checks every closed-form claim against the search.
//!
//! Modules:
//! - [`graph`]: plain undirected graphs, products, girth, bipartitions.
//! - [`circulant`]: connection-set specs `C_n(s_1,...,s_t)` and their
//!   structure theory (decomposition, multiplier isomorphism).
//! - [`forcing`]: the filling rule, closure, certificates, exact search.
//! - [`linalg`]: exact rational / quadratic-extension matrices and the
//!   witness matrix builders.
//! - [`families`]: closed-form predictions for circulant specs.
//! - [`verify`]: prediction-vs-search verification reports and the
//!   exhaustive consistency sweep.

pub mod bitset;
pub mod circulant;
pub mod error;
pub mod families;
pub mod forcing;
pub mod graph;
pub mod linalg;
pub mod verify;

pub use bitset::VertexSet;
pub use circulant::{CirculantSpec, ComponentDecomposition};
pub use error::Error;
pub use graph::Graph;
