//! Isometries of even unimodular lattices with prescribed characteristic
//! polynomial and signature: local conditions, the obstruction group, the
//! realizability decision and its application to knot indices.

pub mod arith;
pub mod decision;
pub mod error;
pub mod fppoly;
pub mod intpoly;
pub mod knots;
pub mod obstruction;
pub mod realroots;

pub use error::{Error, Result};
pub use intpoly::IntPoly;
pub use obstruction::{FactoredCharPoly, ParityVector, ShGroup};
