//! Exact computations around the center of quantum groups at roots of unity:
//! coefficient rings, root data, characters, Weyl modules, the Drinfeld
//! pairing, and truncated induction checks.

pub mod center;
pub mod charring;
pub mod drinfeld;
pub mod error;
pub mod induction;
pub mod lattice;
pub mod matrix;
pub mod ring;
pub mod repchar;
pub mod rootdata;
pub mod springer;
pub mod verma;

pub use error::{Error, ParseError, Result};
