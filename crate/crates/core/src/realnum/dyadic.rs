use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{is_power_of_two, Rational};

/// `mantissa * 2^exponent`, normalized so the mantissa is odd (or zero with
/// exponent zero). Normalization makes structural equality value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        let mut d = Dyadic { mantissa, exponent };
        d.normalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic {
            mantissa: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n.into(), 0)
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return;
        }
        let tz = self.mantissa.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mantissa >>= tz;
            self.exponent += tz as i64;
        }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn sign(&self) -> Sign {
        self.mantissa.sign()
    }

    /// Significant bits of the mantissa.
    pub fn bit_len(&self) -> u64 {
        self.mantissa.bits()
    }

    /// Exact rational value when `r` has a power-of-two denominator.
    pub fn from_rational_exact(r: &Rational) -> Option<Self> {
        let d = r.denom();
        if !is_power_of_two(d) {
            return None;
        }
        let shift = d.bits() as i64 - 1;
        Some(Dyadic::new(r.numer().clone(), -shift))
    }

    pub fn to_rational(&self) -> Rational {
        if self.exponent >= 0 {
            Rational::from_integer(&self.mantissa << self.exponent as usize)
        } else {
            Rational::new(
                self.mantissa.clone(),
                BigInt::one() << (-self.exponent) as usize,
            )
        }
    }

    pub fn to_f64(&self) -> f64 {
        // good enough for diagnostics; never used on certified paths
        let bits = self.mantissa.bits() as i64;
        let drop = (bits - 60).max(0);
        let m: i64 = (&self.mantissa >> drop as usize).try_into().unwrap_or(0);
        (m as f64) * 2f64.powi((self.exponent + drop) as i32)
    }

    pub fn neg(&self) -> Self {
        Dyadic {
            mantissa: -&self.mantissa,
            exponent: self.exponent,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            mantissa: self.mantissa.abs(),
            exponent: self.exponent,
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &other.mantissa << (other.exponent - e) as usize;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(
            &self.mantissa * &other.mantissa,
            self.exponent + other.exponent,
        )
    }

    /// Largest value with at most `bits` significant bits that is `<= self`.
    pub fn round_down(&self, bits: u32) -> Dyadic {
        let len = self.mantissa.bits();
        if len <= bits as u64 {
            return self.clone();
        }
        let shift = len - bits as u64;
        // arithmetic shift on BigInt floors toward negative infinity
        Dyadic::new(&self.mantissa >> shift as usize, self.exponent + shift as i64)
    }

    /// Smallest value with at most `bits` significant bits that is `>= self`.
    pub fn round_up(&self, bits: u32) -> Dyadic {
        self.neg().round_down(bits).neg()
    }

    /// `floor` of `a / b` at `bits` significant bits. `b` must be nonzero.
    pub fn div_down(a: &Dyadic, b: &Dyadic, bits: u32) -> Dyadic {
        let (num, den, e) = Self::div_setup(a, b, bits);
        Dyadic::new(num.div_floor(&den), e).round_down(bits)
    }

    /// `ceil` of `a / b` at `bits` significant bits. `b` must be nonzero.
    pub fn div_up(a: &Dyadic, b: &Dyadic, bits: u32) -> Dyadic {
        let (num, den, e) = Self::div_setup(a, b, bits);
        Dyadic::new(-((-num).div_floor(&den)), e).round_up(bits)
    }

    fn div_setup(a: &Dyadic, b: &Dyadic, bits: u32) -> (BigInt, BigInt, i64) {
        assert!(!b.is_zero(), "dyadic division by zero");
        let s = (bits as i64 + 2 + b.mantissa.bits() as i64 - a.mantissa.bits() as i64).max(0);
        let num = &a.mantissa << s as usize;
        (num, b.mantissa.clone(), a.exponent - b.exponent - s)
    }

    pub fn cmp_rational(&self, r: &Rational) -> Ordering {
        self.to_rational().cmp(r)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.mantissa.sign(), other.mantissa.sign());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == Sign::NoSign {
            return Ordering::Equal;
        }
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &other.mantissa << (other.exponent - e) as usize;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}
