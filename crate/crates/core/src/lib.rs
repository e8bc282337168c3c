//! Alexander polynomials of oriented links and multilinks.
//!
//! The crate computes the multivariable Alexander polynomial of an
//! oriented ordered link from diagram data (PD codes or braid closures)
//! through the free differential calculus, computes one-variable
//! multilink polynomials both by specializing variables to powers of `t`
//! and by determinants of generalized Seifert matrix pairs, and verifies
//! the classical consistency conditions that tie the two routes together
//! (the Torres formula, the symmetry of the polynomial under inverting
//! all variables, deletion of zero-multiplicity components, and the
//! symmetric normalization of the specialized polynomial).
//!
//! All values are immutable after construction and every operation is
//! pure, so everything here is safe to share across threads.

pub mod error;
pub mod fox;
pub mod laurent;
pub mod linkdiag;
pub mod multilink;
pub mod polymat;
pub mod seifert;
pub mod torres;

pub use error::{Error, Result};
pub use fox::AlexanderMatrix;
pub use laurent::{LaurentPoly, UnitClass};
pub use linkdiag::{Crossing, GroupPresentation, LinkDiagram, LinkingMatrix};
pub use multilink::MultilinkSpec;
pub use seifert::SeifertPair;
