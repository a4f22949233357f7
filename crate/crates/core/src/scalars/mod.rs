//! Exact scalars: rationals and cyclotomic field elements, plus the certified
//! numerics used to find roots in cyclotomic fields.

pub mod cyclotomic;
pub mod interval;
pub mod rational;
pub mod roots;

pub use cyclotomic::{CycScalar, MAX_CONDUCTOR};
pub use interval::{embed, embed_at, ComplexInterval, Interval};
pub use rational::Rat;
pub use roots::{reconstruct, roots_in_field};
