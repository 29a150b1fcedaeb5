use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use super::decimal::{decimal_down, decimal_up, DEFAULT_DIGITS};
use super::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Closed interval `[lo, hi]` with dyadic endpoints.
///
/// Every operation rounds its result outward to `bits` significant bits (the
/// larger of the operands' precisions), so the exact image of the operands
/// is always enclosed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Dyadic,
    hi: Dyadic,
    bits: u32,
}

/// Selector for [`interval_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Recip,
}

/// Applies `op` to `a` (and `b` for binary operations).
pub fn interval_arith(a: &Interval, b: &Interval, op: ArithOp) -> Result<Interval> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.div(b),
        ArithOp::Neg => Ok(-a),
        ArithOp::Recip => a.recip(),
    }
}

impl Interval {
    pub fn new(lo: Dyadic, hi: Dyadic, bits: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: {lo:?} > {hi:?}");
        Interval { lo, hi, bits }
    }

    pub fn point(d: Dyadic, bits: u32) -> Self {
        Interval {
            lo: d.clone(),
            hi: d,
            bits,
        }
    }

    pub fn zero(bits: u32) -> Self {
        Self::point(Dyadic::zero(), bits)
    }

    pub fn from_int(n: impl Into<BigInt>, bits: u32) -> Self {
        Self::point(Dyadic::from_int(n), bits)
    }

    /// Tightest outward enclosure of `r` at `bits` significant bits; exact
    /// (width zero) whenever `r` is dyadic.
    ///
    /// ```
    /// use harmonic_bounds::exact::rat;
    /// use harmonic_bounds::realnum::Interval;
    /// let third = Interval::from_rational(&rat(1, 3), 8);
    /// assert!(third.contains_rational(&rat(1, 3)));
    /// assert!(Interval::from_rational(&rat(1, 2), 64).is_point());
    /// ```
    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        if let Some(d) = Dyadic::from_rational_exact(r) {
            return Self::point(d, bits);
        }
        let n = Dyadic::from_int(r.numer().clone());
        let d = Dyadic::from_int(r.denom().clone());
        Interval {
            lo: Dyadic::div_down(&n, &d, bits),
            hi: Dyadic::div_up(&n, &d, bits),
            bits,
        }
    }

    /// Outward enclosure of the rational range `[lo, hi]`.
    pub fn from_rational_bounds(lo: &Rational, hi: &Rational, bits: u32) -> Self {
        assert!(lo <= hi);
        Interval::new(
            Self::from_rational(lo, bits).lo,
            Self::from_rational(hi, bits).hi,
            bits,
        )
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn with_bits(mut self, bits: u32) -> Self {
        self.bits = bits;
        self
    }

    pub fn lo_rational(&self) -> Rational {
        self.lo.to_rational()
    }

    pub fn hi_rational(&self) -> Rational {
        self.hi.to_rational()
    }

    /// Exact width `hi - lo`.
    pub fn width(&self) -> Rational {
        self.hi.sub(&self.lo).to_rational()
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn mid_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.sign() != num_bigint::Sign::Plus && self.hi.sign() != num_bigint::Sign::Minus
    }

    pub fn contains_rational(&self, r: &Rational) -> bool {
        self.lo.cmp_rational(r) != Ordering::Greater && self.hi.cmp_rational(r) != Ordering::Less
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then(|| Interval::new(lo, hi, self.bits.max(other.bits)))
    }

    /// Every point of `self` is strictly below every point of `other`.
    pub fn certainly_lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &Interval) -> bool {
        self.hi <= other.lo
    }

    pub fn certainly_lt_rational(&self, r: &Rational) -> bool {
        self.hi.cmp_rational(r) == Ordering::Less
    }

    pub fn certainly_gt_rational(&self, r: &Rational) -> bool {
        self.lo.cmp_rational(r) == Ordering::Greater
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo.sign() == num_bigint::Sign::Plus
    }

    pub fn certainly_negative(&self) -> bool {
        self.hi.sign() == num_bigint::Sign::Minus
    }

    fn excludes_zero(&self) -> bool {
        self.certainly_positive() || self.certainly_negative()
    }

    pub fn abs_upper(&self) -> Dyadic {
        self.lo.abs().max(self.hi.abs())
    }

    /// Outward-rounded quotient; errors if `other` contains zero.
    pub fn div(&self, other: &Interval) -> Result<Interval> {
        if !other.excludes_zero() {
            return Err(Error::DivisionByZero);
        }
        let bits = self.bits.max(other.bits);
        let pairs = [
            (&self.lo, &other.lo),
            (&self.lo, &other.hi),
            (&self.hi, &other.lo),
            (&self.hi, &other.hi),
        ];
        let lo = pairs
            .iter()
            .map(|(a, b)| Dyadic::div_down(a, b, bits))
            .min()
            .expect("four candidates");
        let hi = pairs
            .iter()
            .map(|(a, b)| Dyadic::div_up(a, b, bits))
            .max()
            .expect("four candidates");
        Ok(Interval::new(lo, hi, bits))
    }

    pub fn recip(&self) -> Result<Interval> {
        Interval::from_int(1, self.bits).div(self)
    }

    pub fn div_rational(&self, r: &Rational) -> Result<Interval> {
        self.div(&Interval::from_rational(r, self.bits))
    }

    pub fn add_rational(&self, r: &Rational) -> Interval {
        self + &Interval::from_rational(r, self.bits)
    }

    pub fn sub_rational(&self, r: &Rational) -> Interval {
        self - &Interval::from_rational(r, self.bits)
    }

    pub fn mul_rational(&self, r: &Rational) -> Interval {
        self * &Interval::from_rational(r, self.bits)
    }

    pub fn square(&self) -> Interval {
        let sq = self * self;
        if self.contains_zero() {
            // the product rule is loose when the interval straddles zero
            let hi = sq.hi.clone();
            Interval::new(Dyadic::zero(), hi, sq.bits)
        } else {
            sq
        }
    }

    pub fn powu(&self, mut e: u32) -> Interval {
        let mut base = self.clone();
        let mut acc = Interval::from_int(1, self.bits);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    /// Widens by `[-r, r]` where `r >= 0` is given as an upper bound.
    pub fn widen(&self, r: &Dyadic) -> Interval {
        let bits = self.bits;
        Interval::new(
            self.lo.sub(r).round_down(bits),
            self.hi.add(r).round_up(bits),
            bits,
        )
    }

    /// Decimal endpoints: `lo` rounded down, `hi` rounded up.
    pub fn repr(&self, digits: usize) -> IntervalRepr {
        IntervalRepr {
            lo: decimal_down(&self.lo_rational(), digits),
            hi: decimal_up(&self.hi_rational(), digits),
            bits: self.bits,
        }
    }
}

/// Serialized form of an [`Interval`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalRepr {
    pub lo: String,
    pub hi: String,
    pub bits: u32,
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.repr(DEFAULT_DIGITS).serialize(s)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.repr(DEFAULT_DIGITS);
        write!(f, "[{}, {}]@{}", r.lo, r.hi, self.bits)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.repr(DEFAULT_DIGITS);
        write!(f, "[{}, {}]", r.lo, r.hi)
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        let bits = self.bits.max(rhs.bits);
        Interval::new(
            self.lo.add(&rhs.lo).round_down(bits),
            self.hi.add(&rhs.hi).round_up(bits),
            bits,
        )
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        let bits = self.bits.max(rhs.bits);
        Interval::new(
            self.lo.sub(&rhs.hi).round_down(bits),
            self.hi.sub(&rhs.lo).round_up(bits),
            bits,
        )
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        let bits = self.bits.max(rhs.bits);
        let products = [
            self.lo.mul(&rhs.lo),
            self.lo.mul(&rhs.hi),
            self.hi.mul(&rhs.lo),
            self.hi.mul(&rhs.hi),
        ];
        let lo = products.iter().min().expect("four products").round_down(bits);
        let hi = products.iter().max().expect("four products").round_up(bits);
        Interval::new(lo, hi, bits)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::new(self.hi.neg(), self.lo.neg(), self.bits)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Interval {
            type Output = Interval;
            fn $m(self, rhs: Interval) -> Interval {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Interval> for Interval {
            type Output = Interval;
            fn $m(self, rhs: &Interval) -> Interval {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn ri(a: i64, b: i64) -> Interval {
        Interval::new(Dyadic::from_int(a), Dyadic::from_int(b), 64)
    }

    #[test]
    fn exact_integer_sum() {
        let s = &ri(1, 1) + &ri(2, 2);
        assert!(s.contains_rational(&rat(3, 1)));
        assert!(s.is_point());
    }

    #[test]
    fn reciprocal_of_positive() {
        let r = ri(2, 4).recip().unwrap();
        assert!(r.contains_rational(&rat(1, 4)) && r.contains_rational(&rat(1, 2)));
        assert_eq!(r.lo_rational(), rat(1, 4));
        assert_eq!(r.hi_rational(), rat(1, 2));
    }

    #[test]
    fn mixed_sign_product() {
        let p = &ri(1, 2) * &ri(-1, 1);
        assert_eq!(p.lo_rational(), rat(-2, 1));
        assert_eq!(p.hi_rational(), rat(2, 1));
    }

    #[test]
    fn zero_divisor_rejected() {
        assert_eq!(ri(1, 2).div(&ri(-1, 1)), Err(Error::DivisionByZero));
        assert_eq!(ri(0, 1).recip(), Err(Error::DivisionByZero));
        assert_eq!(ri(-1, 0).recip(), Err(Error::DivisionByZero));
        assert!(interval_arith(&ri(1, 1), &ri(0, 0), ArithOp::Div).is_err());
    }

    #[test]
    fn from_rational_widths() {
        let half = Interval::from_rational(&rat(1, 2), 64);
        assert!(half.is_point());
        let third = Interval::from_rational(&rat(1, 3), 8);
        assert!(third.contains_rational(&rat(1, 3)));
        assert!(third.width() <= rat(1, 256));
        let big = Interval::from_rational(&rat(137, 60), 128);
        assert!(big.contains_rational(&rat(137, 60)));
        assert!(!big.is_point());
    }

    #[test]
    fn square_straddling_zero() {
        let s = ri(-1, 2).square();
        assert_eq!(s.lo_rational(), rat(0, 1));
        assert_eq!(s.hi_rational(), rat(4, 1));
        let p = Interval::from_rational(&rat(1, 3), 80).powu(5);
        assert!(p.contains_rational(&rat(1, 243)));
    }

    #[test]
    fn dispatcher() {
        let a = ri(3, 3);
        let b = ri(4, 4);
        assert!(interval_arith(&a, &b, ArithOp::Sub).unwrap().contains_rational(&rat(-1, 1)));
        assert!(interval_arith(&a, &b, ArithOp::Neg).unwrap().contains_rational(&rat(-3, 1)));
        assert!(interval_arith(&a, &b, ArithOp::Recip).unwrap().contains_rational(&rat(1, 3)));
        assert!(interval_arith(&a, &b, ArithOp::Div).unwrap().contains_rational(&rat(3, 4)));
    }
}
