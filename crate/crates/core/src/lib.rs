//! Exact invariant theory of binary forms and biforms.
//!
//! Everything here computes over `Q` with arbitrary-precision rationals:
//! sparse homogeneous polynomials, transvectants of binary forms and biforms,
//! exact linear algebra with canonical subspaces, the (S)L2 x (S)L2 actions and
//! their Lie algebra, and the biform/rational-curve dictionary.

pub mod actions;
pub mod curves;
pub mod error;
pub mod forms;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod sample;
pub mod transvect;
mod univariate;

pub use actions::{G3Element, GroupPair, LiePair, Torus};
pub use curves::{BranchForm, CurveMap};
pub use error::{Error, Result};
pub use forms::{BiForm, BinaryForm, TernaryForm};
pub use linalg::{QMat, Rref, Subspace};
pub use parse::{parse_form, ParseError};
pub use poly::{MPoly, Ring};
pub use rat::Rat;
