pub mod algcore;
pub mod cli;
pub mod autograde;
pub mod corresp;
pub mod cyclo;
pub mod error;
pub mod format;
pub mod lattice;
pub mod linalg;
pub mod loopcore;
pub mod multiplicative;
pub mod poly;
pub mod suite;

pub use algcore::FinGradedAlgebra;
pub use cyclo::CycloNumber;
pub use error::{Error, Result};
