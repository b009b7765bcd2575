//! Certified computation of the Perron-vector balance ratio
//! `Γ_G = (Σ x_v)² / Σ x_v²` and machine-checkable certificates that
//! `K4 + P_{n-4}` and `S5 + P_{n-5}` minimize it among connected graphs and trees.

pub mod algebra;
pub mod beta;
pub mod bounds;
pub mod error;
pub mod graphs;
pub mod kernels;
pub mod report;
pub mod spectral;
pub mod tails;

pub use beta::Beta;
pub use error::{Error, Result};
