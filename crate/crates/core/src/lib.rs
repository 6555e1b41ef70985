//! Generating functions for reciprocal binomial coefficients.
//!
//! The crate is organised around two independent routes to the same numbers:
//!
//! * [`series`] and [`closed_forms`] expand the closed-form generating
//!   functions (`A`, `I`, `J`, `K`, their parity variants and the derived
//!   sum generating functions) as exact truncated power series;
//! * [`triangles`] evaluates every coefficient directly from factorials.
//!
//! [`identities`] and [`riordan`] compare the two exactly, [`numeric`]
//! evaluates the closed forms and the infinite sums in floating point, and
//! [`report`] / [`cli`] expose everything on the command line.

pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod identities;
pub mod numeric;
pub mod rational;
pub mod report;
pub mod riordan;
pub mod series;
pub mod triangles;

pub use error::{Error, Result};
pub use rational::Rational;
pub use series::{Axis, Parity, Series1, Series2};
