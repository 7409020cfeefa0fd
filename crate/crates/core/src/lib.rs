pub mod bijections;
pub mod counting;
pub mod error;
pub mod objects;
pub mod parallel;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
