//! Exact computation and verification engine for depth and Stanley
//! depth of squarefree monomial ideals and their quotients.
//!
//! The crate has four layers:
//!
//! * exact monomial/ideal arithmetic ([`ideal`], [`monomial`]),
//! * two independent depth engines: multigraded Koszul homology
//!   ([`koszul`]) cross-validated by Stanley-Reisner simplicial
//!   homology ([`hochster`]),
//! * Stanley decompositions with a degreewise verifier and exact
//!   Stanley depth by branch-and-bound over interval partitions of the
//!   characteristic poset ([`stanley`]), plus the constructive
//!   transforms and the certifying recursion ([`construct`]),
//! * exhaustive enumeration of all squarefree ideals of a small ring
//!   and batch verification of the named checks ([`enumerate`],
//!   [`harness`]).
//!
//! Batch loops are data-parallel through rayon when the default
//! `parallel` feature is enabled and degrade to sequential execution
//! otherwise.

pub mod betti;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod exec;
pub mod harness;
pub mod hochster;
pub mod ideal;
pub mod json;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod stanley;

pub use betti::{BettiTable, DepthValue};
pub use error::{Error, Result};
pub use ideal::{Dimension, Ideal, QuotientPresentation};
pub use monomial::{Monomial, VarSet};
