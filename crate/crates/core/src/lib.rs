//! Schubert and Grothendieck polynomials of classical types.

pub mod error;
pub mod involution;
pub mod permgroup;
pub mod polyring;
pub mod nilhecke;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
