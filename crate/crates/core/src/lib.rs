pub mod braided;
pub mod char0;
pub mod cli;
pub mod comodule;
pub mod error;
pub mod fixtures;
pub mod gf2;
pub mod group;
pub mod ver4;
pub mod verify;

pub use error::{Error, Result};
