pub mod bitset;
pub mod bounds;
pub mod chromatic;
pub mod constructions;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod report;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
