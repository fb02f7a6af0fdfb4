//! Cyclic resultants of univariate polynomials.
//!
//! `r_m = Res(f, x^m − 1)` is computed exactly over the Gaussian rationals.
//! On top of that the crate enumerates every polynomial sharing a resultant
//! sequence, reconstructs polynomials from sequence prefixes, builds the
//! associated rational generating functions, counts periodic points of toral
//! endomorphisms, and checks binomial factorizations in group rings of
//! finitely generated abelian groups.

pub mod dynamics;
pub mod equivalence;
pub mod error;
pub mod genfun;
pub mod groupring;
pub mod json;
pub mod linalg;
pub mod number;
pub mod poly;
pub mod reconstruct;
pub mod resultant;

pub use error::{Error, Result};
pub use number::{GaussianRational, Rational};
pub use poly::Poly;
