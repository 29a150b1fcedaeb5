//! Certified bounds for the harmonic sequence.
//!
//! This crate encloses `H_n - ln n - gamma` and the sharpness witness
//! `phi(x) = 1/(psi(x+1) - ln x) - 2x` with exact rationals and outward
//! rounded intervals, and machine-checks the sharp double inequality
//!
//! ```text
//! 1/(2n + 1/(1-gamma) - 2) <= H_n - ln n - gamma < 1/(2n + 1/3)
//! ```
//!
//! over finite ranges of `n`, together with the digamma and trigamma brackets
//! it rests on.
//!
//! Modules, bottom to top:
//!
//! * [`exact`]: rationals, harmonic numbers, Bernoulli numbers.
//! * [`realnum`]: dyadic intervals and `ln`.
//! * [`psi`]: digamma/trigamma residual enclosures and Euler's constant.
//! * [`bounds`]: the Franel, Tóth–Mare and sharp bound families, the
//!   residual and `phi`.
//! * [`verify`]: sweeps that certify every inequality on a range.
//!
//! The guide under `book/` walks through the same material; its code samples
//! are compiled as doc-tests of this crate.

pub mod bounds;
pub mod error;
pub mod exact;
pub mod psi;
pub mod realnum;
pub mod verify;

pub use error::{Error, Result};
pub use exact::Rational;
pub use realnum::Interval;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/intervals.md")]
    mod intervals {}
    #[doc = include_str!("../../../book/src/psi.md")]
    mod psi {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
