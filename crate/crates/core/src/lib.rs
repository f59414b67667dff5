//! Exact domination toolkit for small graphs.
//!
//! Bit-row graphs of order up to 128, minimal dominating set and maximal
//! independent set enumeration, well-dominated / well-covered recognition
//! with witnesses, Cartesian products, graph6 corpora, and sweep verifiers
//! for the structure theory of well-dominated Cartesian products.

pub mod canon;
pub mod corpus;
pub mod domination;
pub mod error;
pub mod families;
pub mod graph;
pub mod harness;
pub mod product;
pub mod set;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use error::{Error, Result};
pub use graph::{Graph, VertexMap};
pub use product::{cartesian_product, Axis, ProductMap};
pub use set::{VertexId, VertexSet, CAPACITY};
