//! Maximal clique enumeration with graph reductions.
//!
//! The pipeline is: parse or generate an [`EditableGraph`], optionally peel
//! it with [`global_reduce`], freeze it into a [`CompactGraph`] and run one of
//! the recursion kernels ([`Algorithm`]) with optional in-recursion and
//! forbidden-set reductions. [`run`] does all of that in one call.
//!
//! ```
//! use rmce::{run, CollectingSink, EditableGraph, EnumConfig};
//!
//! let g = EditableGraph::from_edges([(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
//! let mut sink = CollectingSink::new();
//! let report = run(g, &EnumConfig::default(), &mut sink);
//! assert_eq!(report.cliques_total, 2);
//! ```

pub mod cli;
pub mod dynamic;
pub mod engine;
pub mod error;
pub mod forbidden;
pub mod global;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod oracle;
pub mod sink;
pub mod subproblem;

pub use engine::{enumerate, enumerate_subproblem, run, Algorithm, EnumConfig, Reductions};
pub use error::{GraphError, IngestError, OracleError};
pub use global::{global_reduce, GlobalConfig, ReductionLedger};
pub use graph::{compact, degeneracy_order, CompactGraph, DeadVertices, EditableGraph};
pub use metrics::RunReport;
pub use sink::{CliqueSink, CollectingSink, CountingSink, WriterSink};
pub use subproblem::Subproblem;
