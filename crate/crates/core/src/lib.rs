pub mod classifier;
pub mod error;
pub mod io;
pub mod numeric;
pub mod partitions;
pub mod posets_graphs;
pub mod schur_engine;
pub mod oracle;
pub mod sequences;
pub mod symfunc;
pub mod tabloids;

pub use error::{Error, Result};
pub use partitions::{Composition, Partition};
