//! Finite fields `F_{p^d}`, sparse multivariate polynomials, univariate
//! squarefree decomposition and factorization, and Gröbner bases with
//! cofactor witnesses.

pub mod error;
pub mod factor;
pub mod field;
pub mod groebner;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod univariate;
pub mod upoly;

pub use error::{AlgebraError, Result};
pub use field::{Embedding, Fe, Field};
pub use groebner::{default_order, div_exact, elimination_order, ideal_equal, poly_gcd, IdealHandle};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_field, parse_poly, parse_poly_in};
pub use poly::{MultiPoly, PolyRing};
pub use univariate::{
    factor_univariate, root_multiplicity_profile, roots_in_field, squarefree_decomposition, SquarefreeDecomposition,
};
pub use upoly::UPoly;
