//! Exact manipulation of Riordan arrays over the rationals.

pub mod alpha_beta;
pub mod bcomp;
pub mod combinat;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod flow;
pub mod format;
pub mod matrix;
pub mod poly;
pub mod pseudo;
pub mod rational;
pub mod riordan;
pub mod ring;
pub mod series;

pub use error::{Error, Result};
pub use exec::Execution;
pub use matrix::TriMatrix;
pub use poly::{Poly, Render};
pub use rational::Rational;
pub use riordan::RiordanPair;
pub use ring::Ring;
pub use series::Series;
