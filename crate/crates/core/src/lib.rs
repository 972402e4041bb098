//! Exact Ratliff-Rush closures in two decidable universes.
//!
//! * [`monomial`]: monomial ideals of a polynomial ring, with the closure
//!   chain `(I^{n+1} : I^n)`, integral closure in two variables, stability
//!   tests and a brute-force membership oracle.
//! * [`valuation`]: ideals of a valuation domain whose value group is a
//!   lexicographic product of copies of ℤ and ℚ, represented as cuts, with
//!   the closed-form closure, the generalized closure and the v-operation.
//! * [`harness`]: seeded generators and the property suite that checks the
//!   closure theorems against both universes.

pub mod error;
pub mod exact;
pub mod harness;
pub mod monomial;
pub mod valuation;

pub use error::{Error, Result};
pub use exact::{lex_compare, vec_add, vec_scale, vec_sub, LexVector, Rational};
pub use monomial::{
    endomorphism_ring, integral_closure_2v, ChainReport, ClosureConfig, ExponentVector,
    FractionalMonomialIdeal, MonomialIdeal,
};
pub use valuation::{
    Component, CutIdeal, CutKind, GroupElement, PrimeSpec, StarAxiomReport, ValueGroup,
};
