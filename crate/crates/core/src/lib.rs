pub mod cli;
pub mod error;
pub mod gcf;
pub mod geodesic;
pub mod halfspace;
pub mod linalg;
pub mod numberfield;
pub mod pcf;
pub mod poly;
pub mod realalg;

pub use error::{Error, Result};
