//! Exact computations with the pre-Lie structure carried by operads.
//!
//! The crate provides
//!
//! - canonical rooted trees, labeled trees and planar terms ([`trees`]),
//! - formal sums with exact rational coefficients ([`formalsum`]),
//! - the free pre-Lie algebra on one generator and its insertion elements
//!   ([`prelie`]),
//! - a generic [`operad::Operad`] trait with partial compositions, the
//!   induced pre-Lie product, simultaneous compositions and axiom checks,
//! - concrete operads ([`instances`]): non-symmetric associative, free
//!   non-symmetric operads such as `Mag₂`, the pre-Lie and NAP operads,
//! - exhaustive verification sweeps and reports ([`verify`]), and an
//!   expression language for the command-line front end ([`expr`]).

pub mod commands;
pub mod error;
pub mod expr;
pub mod formalsum;
pub mod instances;
pub mod operad;
pub mod prelie;
pub mod trees;
pub mod verify;

pub use error::{Error, ParseError, Result};
pub use formalsum::{FormalSum, Rational};
