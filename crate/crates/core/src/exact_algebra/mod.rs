//! Exact scalars, sparse commutative polynomials, dense matrices and
//! rational functions, plus the Leibniz machinery for Poisson brackets.

pub mod bracket;
pub mod gen;
pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod ring;
pub mod scalar;

pub use bracket::{BracketTable, GeneratorBracket};
pub use gen::{Ctx, Family, Gen};
pub use matrix::Matrix;
pub use poly::{Monomial, PolyW};
pub use ratfun::{BiPoly, RationalFunction, UniPoly};
pub use ring::Ring;
pub use scalar::{fmt_frac, parse_frac, q, qi, Scalar};
