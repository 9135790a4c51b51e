//! Prime distance and 2-odd labelings of graphs: number-theoretic oracles,
//! graph families, red/blue edge colorings, explicit labeling constructions,
//! and bounded exact search.

pub mod coloring;
pub mod error;
pub mod graph;
pub mod labeling;
pub mod numtheory;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Color, EdgeColoring, FamilySpec, Graph, Labeling};
