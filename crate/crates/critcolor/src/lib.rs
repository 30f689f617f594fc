//! Exact graph-coloring analysis built around degree-constrained critical
//! graphs: chromatic and clique solvers, structural predicates (the high
//! subgraph, Ore-degree, low/high classes), partitioned colorings with the
//! internal-edge objective and its move operations, and a verification
//! harness with corpus loading, exhaustive small-graph scans, and a CLI.

pub mod budget;
pub mod coloring;
pub mod formats;
pub mod graph;
pub mod harness;
pub mod mozhan;
pub mod structure;

pub use budget::Budget;
pub use graph::{Graph, VertexSet};
