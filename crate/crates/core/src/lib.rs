//! Graded components of local cohomology of bigraded modules.
//!
//! For `S = K[x1..xm, y1..yn]` with `deg x = (1,0)`, `deg y = (0,1)` and `Q = (y)`, the
//! y-degree `j` piece of `H^s_Q(S/I)` is a finitely generated graded module over
//! `S0 = K[x]`. This crate computes explicit presentations of these modules and the
//! invariants attached to them (Hilbert series, Krull dimension, minimal resolutions,
//! regularity), together with an independent Koszul-cohomology oracle.

pub mod cli;
pub mod cohomology;
pub mod error;
pub mod field;
pub mod groebner;
pub mod poly;
pub mod resolution;
pub mod selfcheck;

pub use error::{Error, Result};
