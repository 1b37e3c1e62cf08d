//! Total list-coloring of loopless multigraphs: given lists of size
//! `2 * max_degree - 1` on every vertex and edge instance (max degree at
//! least 3), [`color::total_color`] builds a proper coloring of the total
//! graph in time linear in the graph size for fixed degree, and
//! [`verify::verify_total_coloring`] checks any coloring independently.
//! An exhaustive [`oracle`] provides exact ground truth at desk scale.
//!
//! Start with the runnable examples, one per capability:
//!
//! ```bash
//! cargo run --example color_petersen      # the whole pipeline, verified
//! cargo run --example tightness_k4        # 2*max_degree - 1 is needed: K4
//! cargo run --example special_cycle       # the induced-cycle finder
//! cargo run --example gadget_solvers      # ring and fixed-shape solvers
//! cargo run --example instance_files      # generate, save, reload
//! cargo run --example bench_scaling       # per-element cost across sizes
//! ```
//!
//! The `totalchoose` binary wraps the same entry points as subcommands
//! (`color`, `verify`, `oracle`, `gen`, `bench`, `gadget-test`).

pub mod bench;
pub mod cli;
pub mod color;
pub mod cycle;
pub mod error;
pub mod format;
pub mod gadget;
pub mod generate;
pub mod graph;
pub mod greedy;
pub mod oracle;
pub mod plan;
pub mod verify;

pub use color::{total_color, total_color_with_stats, Branch, RunStats};
pub use error::{Error, Result};
pub use graph::{ColorSet, ElementId, ListAssignment, Multigraph, PartialTotalColoring};
pub use oracle::{oracle_total_color, OracleOutcome};
pub use verify::{verify_total_coloring, Violation};
