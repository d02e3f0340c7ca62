//! Graph families, their complements, and exact independence, vertex cover
//! and matching numbers, together with a registry of closed-form claims about
//! `beta(G) + beta(complement)` and `beta(G) * beta(complement)` that can be
//! swept and checked against exact solvers.

pub mod claims;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod invariants;
pub mod oracle;

pub use error::{ClaimError, FamilyError, GraphError, ParseError, SolverError};
pub use families::{Family, FamilySpec};
pub use graph::{EdgeIndexMap, Graph};
