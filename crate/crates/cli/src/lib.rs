//! Library half of the command-line harness: seeded experiment sweeps over
//! random point sets and the point/coloring file formats.

pub mod experiment;
pub mod io;

pub use experiment::{run_experiment, ExperimentConfig, Mode, ResultRow, ResultTable};
pub use io::CliError;

/// Seed used by `table` runs when none is given; fixed so reported numbers
/// are reproducible byte for byte.
pub const DEFAULT_SEED: u64 = 20080;
