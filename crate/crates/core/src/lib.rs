pub mod catalog;
pub mod error;
pub mod exterior;
pub mod frt;
pub mod gtensor;
pub mod hopfcore;
pub mod linalg;
pub mod ncalg;
pub mod par;
pub mod report;
pub mod reps;
pub mod rmatlab;
pub mod scalars;
pub mod stats;
pub mod suite;

pub use error::{QgwError, Result};
pub use scalars::Scalar;
