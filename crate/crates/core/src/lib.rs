//! Exact-arithmetic engine for simple highest-weight gl(m)-modules,
//! generalized Verma modules over sl(m+1) and Witt-algebra tensor modules.

pub mod checks;
pub mod error;
pub mod gl;
pub mod gvm;
pub mod linalg;
pub mod lincomb;
pub mod multi_index;
pub mod rational;
pub mod weight;
pub mod witt;

pub use error::{Error, Result};
pub use linalg::RationalMatrix;
pub use lincomb::LinComb;
pub use multi_index::{grlex_less, MultiIndex};
pub use rational::{falling_factorial, Rational};
pub use weight::{BlockProfile, Weight, WeightDrop};
