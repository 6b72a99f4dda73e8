//! Littlewood–Richardson polynomials for double Schur functions, computed
//! exactly by several independent methods.

pub mod apoly;
pub mod double_sym;
pub mod error;
pub mod formal_ring;
pub mod involutions;
pub mod lr;
pub mod shapes;
pub mod stable_ring;
pub mod tableaux;
pub mod verify;

pub use apoly::{AMonomial, APoly};
pub use error::{Error, Result};
pub use shapes::{Cell, IntegerVector, Partition};
pub use stable_ring::SchurSum;
