//! Exact linear and homological algebra for graded modules over quotients
//! of polynomial rings with prime-field coefficients.

pub mod error;
pub mod field;
pub mod free;
pub mod groebner;
pub mod hilbert;
pub mod homology;
pub mod invariants;
pub mod module;
pub mod monomial;
pub mod operators;
pub mod oracle;
pub mod poly;
pub mod ring;
pub mod runner;
pub mod session;
pub mod theorems;
