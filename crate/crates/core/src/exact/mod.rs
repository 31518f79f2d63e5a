//! Exact cyclotomic arithmetic.

mod cyclo;
mod numeric;

pub(crate) use cyclo::parse_rational;
pub use cyclo::{
    precision_bits, set_precision_bits, CycNum, CONDUCTOR, DEFAULT_PRECISION_BITS, DEGREE,
};
