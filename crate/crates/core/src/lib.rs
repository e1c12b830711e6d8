//! One-sided (X-interval) edge colorings of bipartite graphs.
//!
//! Every constructive method returns a positional [`EdgeColoring`] together
//! with a [`BoundCertificate`] recording the promised color bound, the colors
//! actually used and whether the output passed [`verify_coloring`].

pub mod degree_six;
pub mod dispatch;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hypergraph;
pub mod interval;
pub mod io;
pub mod konig;
pub mod oracle;
pub mod palette;

pub use dispatch::{best_method, color_with, guarantee, MethodOutput};
pub use error::{Error, Result};
pub use graph::{
    verify_coloring, BipartiteGraph, DegreeProfile, EdgeColoring, LoopedMultigraph, SubgraphMap,
    VerificationReport,
};
pub use interval::{BoundCertificate, Decomposition, Method};
