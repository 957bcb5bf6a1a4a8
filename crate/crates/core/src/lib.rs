//! Schur-type functions attached to polynomial sequences of binomial type.
//!
//! A normalized delta operator `Q = D + a2 D^2 + ...` determines basic
//! polynomials `p_n` and their conjugates `p*_n = p_{n+1}/x`. Replacing the
//! monomials of the bialternant formula by these sequences yields symmetric
//! functions `s_λ`, `s*_λ` with factorial Schur functions as the `Q = Δ+`
//! case. This crate builds all of these objects over the rationals and checks
//! their expansion, duality, generating-function and Cauchy-type identities
//! exactly, together with the Capelli eigenvalue formulas for `gl`, `o` and
//! `sp`.

pub mod capelli;
pub mod delta;
pub mod error;
pub mod exact;
pub mod partition;
pub mod report;
pub mod schur;
pub mod verify;

pub use error::{Error, Result};
