pub mod cli;
pub mod clifford;
pub mod error;
pub mod io;
pub mod lattice;
pub mod levi;
pub mod isotypy;
pub mod root_datum;
pub mod weyl;

pub use error::{Error, Result};
