//! Exact arithmetic: fields, univariate and bivariate polynomials, binary
//! forms, truncated series, dynamic evaluation and linear algebra.

pub mod binary;
pub mod bipoly;
pub mod closure;
pub mod field;
pub mod matrix;
pub mod series;
pub mod upoly;

pub use binary::{distinct_root_count, rational_roots, substitute, vanishing_order, BinaryForm, RootProfile};
pub use bipoly::{resultant, BiPoly, Var};
pub use field::{ExtensionField, Field, FieldSpec, PrimeField, Rationals};
pub use matrix::Matrix;
pub use series::{hensel_sqrt, TruncatedSeries};
pub use upoly::gcd as gcd_univariate;
