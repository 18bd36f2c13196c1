//! Exact arithmetic substrate: rationals, cyclotomic fields, finite fields,
//! integer and field matrices, Smith normal form.

pub mod cyclotomic;
pub mod ff;
pub mod fmat;
pub mod intmat;
pub mod poly;
pub mod rational;

pub use cyclotomic::Cyclotomic;
pub use ff::FiniteField;
pub use fmat::FMat;
pub use intmat::{IntMatrix, SmithNormalForm};
pub use rational::Rational;
