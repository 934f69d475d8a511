//! Exact arithmetic: univariate polynomials and rational functions over Q in
//! the variable `N`, and polynomials in class variables over `Q(N)`.

mod interpolate;
mod parse;
mod ratfun;
mod relpoly;
mod unipoly;

pub use interpolate::{interpolate_from, lagrange_interpolate};
pub use parse::parse_relation;
pub use ratfun::RationalFunction;
pub use relpoly::{Monomial, RelationPoly};
pub use unipoly::UniPoly;
