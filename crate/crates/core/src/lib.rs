pub mod endset;
pub mod error;
pub mod geometry;
pub mod instance;
pub mod oracle;
pub mod cones;
pub mod corpus;
pub mod cq;
pub mod plfunc;
pub mod report;
pub mod subdiff;

pub use error::{Error, Result};
