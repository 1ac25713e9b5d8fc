//! Semisimplicity engines for endomorphism algebras of tilting modules and for
//! Hecke, Brauer and walled Brauer algebras.
//!
//! Two independent routes are provided. The first evaluates Jantzen sum
//! formulas for the Weyl factors of tensor powers of the vector
//! representation of a classical group ([`jsf`], [`tilting`]). The second
//! computes the trace-form Gram determinant of a diagram or Hecke algebra
//! over an exact field ([`diagalg`]). [`criteria`] holds the closed-form
//! criteria and drives both routes over parameter grids.

pub mod charwts;
pub mod criteria;
pub mod diagalg;
pub mod error;
pub mod jsf;
pub mod linalg;
pub mod rootdata;
pub mod scalars;
pub mod tilting;

pub use error::{Error, Result};
