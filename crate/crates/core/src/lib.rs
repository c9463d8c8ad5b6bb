//! Finite monoids given by Cayley tables, with exhaustive tools for
//! factorizations `M = A·B`, descent cocycles, monoid actions, semidirect
//! products and non-abelian first cohomology.
//!
//! Elements are dense indices `0..n`. Submonoids, maps and cocycles refer to
//! elements by their index in the parent monoid.

pub mod action;
pub mod catalog;
pub mod cohomology;
pub mod conical;
pub mod convolution;
pub mod descent;
pub mod endomorphism;
pub mod enumerate;
pub mod error;
pub mod factorization;
pub mod groupoid;
pub mod map;
pub mod monoid;
pub mod normality;
pub mod semidirect;
pub mod submonoid;

pub use action::MonoidAction;
pub use cohomology::Cocycle1;
pub use descent::{DescentCocycle, Side};
pub use error::{AlgebraError, Result};
pub use factorization::Factorization;
pub use map::{ElementMap, MonoidIso};
pub use monoid::FiniteMonoid;
pub use semidirect::SemidirectProduct;
pub use submonoid::SubMonoid;
