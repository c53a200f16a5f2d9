pub mod bijection;
pub mod checks;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod labelled;
pub mod perm;
pub mod scheme;
pub mod stats;
pub mod surgery;
pub mod trees;

pub use error::{Error, Result};
pub use perm::{CombMap, HalfEdge, Permutation, RootedMap, VertexId};
