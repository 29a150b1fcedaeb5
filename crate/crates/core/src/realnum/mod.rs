//! Outward-rounded interval arithmetic over dyadic endpoints, plus a
//! certified natural logarithm.

mod decimal;
mod dyadic;
mod interval;
mod ln;

pub use decimal::{decimal_down, decimal_up, matches_printed, DEFAULT_DIGITS};
pub use dyadic::Dyadic;
pub use interval::{interval_arith, ArithOp, Interval, IntervalRepr};
pub use ln::ln_enclosure;

use crate::exact::Rational;

/// Free-function form of [`Interval::from_rational`].
pub fn from_rational(r: &Rational, precision_bits: u32) -> Interval {
    Interval::from_rational(r, precision_bits)
}
