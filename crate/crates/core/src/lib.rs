//! Computational group theory for families of finite groups indexed by primes.

pub mod arithmetic;
pub mod catalog;
pub mod chain;
pub mod classes;
pub mod classical;
pub mod config;
pub mod element;
pub mod error;
pub mod field;
pub mod group;
pub mod homomorphism;
pub mod independence;
pub mod io;
pub mod matrix;
pub mod perm;
pub mod structure;
pub mod taxonomy;

pub use config::Config;
pub use element::{element_order, GroupElement};
pub use error::{GroupError, Result};
pub use group::{Domain, FiniteGroup};
pub use perm::Perm;
