//! Equivariant degree computations for bifurcation in symmetric systems of
//! elliptic equations on the unit disc.

pub mod bifurcation;
pub mod burnside;
pub mod degrees;
pub mod error;
pub mod finite_group;
pub mod model_io;
pub mod orbit_types;
pub mod spectrum;

pub use burnside::BurnsideElement;
pub use error::{Error, Result};
