//! Exact-arithmetic workbench for curves on the smooth quadric P¹×P¹ and on
//! the quadric cone in P³: linear systems with imposed tangency and cusp
//! schemes, injectivity of linear projections, hyperelliptic Riemann–Roch
//! spaces and the accompanying genus numerology.

pub mod error;
pub mod exactalg;
pub mod formulas;
pub mod hyperell;
pub mod linsys;
pub mod parse;
pub mod projection;
pub mod surface;
pub mod zeroschemes;

pub use error::{Error, ErrorKind, Result};
