pub mod contours;
pub mod converge;
pub mod error;
pub mod expr;
pub mod funcalc;
pub mod io;
pub mod numkernel;
pub mod opdisc;
pub mod samples;
pub mod symbolcalc;
pub mod verify;
pub mod cli;

pub use error::{Error, Result};
pub use numkernel::{CMatrix, C64};
