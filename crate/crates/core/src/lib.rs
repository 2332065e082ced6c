//! Proximinal and path-proximinal graphs over finite semimetric spaces.
//!
//! The crate decides path-bipartiteness and path-completeness of graphs with
//! a fixed vertex partition, computes best proximity structure in finite
//! spaces with exact rational distances, and builds witness metrics and
//! ultrametrics that realize graphs as (path-)proximinal. The [`sweep`]
//! module checks each equivalence against brute-force oracles over
//! exhaustive and seeded random instance families.

pub mod error;
pub mod graph;
pub mod instances;
pub mod io;
pub mod metric;
pub mod path_proximinal;
pub mod paths;
pub mod proximinal;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{Bipartition, Edge, PathSeq, Side, SimpleGraph, VertexId, VertexSet};
pub use metric::{FiniteSemimetricSpace, ProximityReport, Rational, SpaceClass};
pub use path_proximinal::{PathProximinalCertificate, UltrametricConnectivity};
pub use paths::{BePathWitness, QuotientGraph};
pub use proximinal::ProximinalGraphCertificate;
