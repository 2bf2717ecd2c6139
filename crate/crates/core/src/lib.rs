//! Deciding and counting coefficients of Schubert polynomials.
//!
//! A coefficient `c_{alpha,w}` of `x^alpha` in the Schubert polynomial of `w`
//! is nonzero exactly when `alpha` is a lattice point of the Schubitope of the
//! Rothe diagram `D(w)`. This crate decides that membership exactly, produces
//! witness tableaux, and counts coefficients through the transition recursion.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod lp;
pub mod oracle;
pub mod perm;
pub mod schubitope;
pub mod tableaux;
pub mod transition;

pub use error::{Error, Result};
pub use perm::{Cell, Code, Diagram, Flag, OneLine, Partition};
