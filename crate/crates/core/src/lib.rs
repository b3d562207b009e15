pub mod budget;
pub mod census;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod matching;
pub mod stability;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, FormatError, Result};
pub use graph::{DegreeProfile, Edge, Graph, InducedSubgraph};
