//! Exact weight-distribution toolkit for linear codes over finite fields:
//! closed-form family formulas, brute-force and Tutte-polynomial oracles,
//! the MacWilliams transform, and log-concavity analysis.

pub mod analysis;
pub mod code;
pub mod doc;
pub mod families;
pub mod field;
mod limbs;
pub mod macwilliams;
pub mod tutte;
pub mod verify;
