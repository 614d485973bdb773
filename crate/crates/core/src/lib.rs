//! Generalized Asanuma varieties `alpha(X)*Y = F(X, Z, T)` over finite
//! fields: presentations, exponential maps, filtrations and associated
//! graded rings, and isomorphism invariants.

pub mod citations;
pub mod classify;
pub mod error;
pub mod expmap;
pub mod filtration;
pub mod io;
pub mod lines;
pub mod sampling;
pub mod variety;

pub use error::{CoreError, Result};
