pub mod cayley;
pub mod cca;
pub mod error;
pub mod gfp;
pub mod graph;
pub mod homcore;
pub mod verify;

pub use error::{Error, Result};
