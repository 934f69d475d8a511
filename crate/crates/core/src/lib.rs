//! Exact computations with normalized character values of symmetric groups.
#![no_std]
extern crate alloc;

pub mod algebra;
pub mod connection;
pub mod cover;
pub mod defect_zero;
pub mod error;
pub mod groebner;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod relation;

pub use error::{Error, Result};
pub use partition::Partition;

pub type BigRational = num_rational::BigRational;
