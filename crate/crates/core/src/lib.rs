pub mod cli;
pub mod coxeter;
pub mod error;
pub mod exactalg;
pub mod milnor;
pub mod openext;
pub mod report;
pub mod saito;

pub use error::{Error, Result};
pub use report::{Failure, Report};
