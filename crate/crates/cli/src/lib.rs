//! Library side of the `surfel` command: scenario files, figure data,
//! CSV output and the verification driver.

pub mod checks;
pub mod error;
pub mod figures;
pub mod scenario;
pub mod solve;
pub mod table;

pub use error::{CliError, CliResult};
