//! Level-`l` quivers of every finite Dynkin type, the exponents of their Y-system
//! cluster transformations, Neumann-Zagier matrices, and partition q-series.

#![allow(clippy::needless_range_loop)]

pub mod asympt;
pub mod cli;
pub mod dynkin;
pub mod error;
pub mod exact;
pub mod family;
pub mod network;
pub mod qseries;
pub mod quiver;
pub mod rootpoly;
pub mod spectral;
pub mod yseed;

pub use error::{Error, Result};
