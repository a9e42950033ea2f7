pub mod build;
pub mod decomp;
pub mod dot;
pub mod error;
pub mod generate;
pub mod graph;
pub mod median;
pub mod oracle;
pub mod solve;

pub use error::{Error, Result};
pub use graph::{cartesian_product, laminar, Graph, MedianOf, Separation, VertexSet};
pub use solve::{chromatic_number, clique_number, Coloring};
