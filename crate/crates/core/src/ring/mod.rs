//! Exact coefficient rings: `Z[q, q^-1]`, `Q(q)`, `Z[x]/(Phi_n)` and the
//! multivariate ring used for symbolic torus points.

mod cyclotomic;
mod laurent;
mod multi;
mod parse;
mod quantum;
mod ratfunc;
mod scalar;

pub use cyclotomic::{cyclotomic, prime_power, totient, CycCtx, CycScalar};
pub use laurent::LaurentPoly;
pub use multi::{Exponents, MultiLaurent};
pub use parse::{parse_laurent, parse_laurent_in, parse_multi, MAX_EXPONENT};
pub use quantum::{q_minus_qinv, quantum_binomial, quantum_factorial, quantum_int};
pub use ratfunc::RatFunc;
pub use scalar::Scalar;
