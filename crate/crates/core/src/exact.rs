//! Exact rational arithmetic: harmonic numbers, Bernoulli numbers and
//! Bernoulli polynomials.
//!
//! All values are [`Rational`]s in canonical form (reduced, positive
//! denominator). Bernoulli numbers follow the `B_1 = -1/2` convention.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction, always kept in lowest terms.
pub type Rational = BigRational;

/// Ranges shorter than this are summed with a plain left fold.
const FOLD_CUTOFF: u64 = 16;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `H_n = 1 + 1/2 + ... + 1/n`.
///
/// ```
/// use harmonic_bounds::exact::{harmonic_exact, rat};
/// assert_eq!(harmonic_exact(3).unwrap(), rat(11, 6));
/// ```
pub fn harmonic_exact(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("harmonic number needs n >= 1"));
    }
    Ok(balanced_sum(1, n + 1, &|i| Rational::new(BigInt::one(), BigInt::from(i))))
}

/// Same value as [`harmonic_exact`], accumulated term by term.
pub fn harmonic_exact_fold(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("harmonic number needs n >= 1"));
    }
    Ok((1..=n).fold(Rational::zero(), |acc, i| {
        acc + Rational::new(BigInt::one(), BigInt::from(i))
    }))
}

/// `sum_{j=1..k} 1/(x+j)`, exact. Zero when `k == 0`.
pub fn shifted_reciprocal_sum(x: &Rational, k: u64) -> Rational {
    let (p, q) = (x.numer().clone(), x.denom().clone());
    balanced_sum(1, k + 1, &|j| {
        Rational::new(q.clone(), &p + &q * BigInt::from(j))
    })
}

/// `sum_{j=1..k} 1/(x+j)^2`, exact. Zero when `k == 0`.
pub fn shifted_reciprocal_square_sum(x: &Rational, k: u64) -> Rational {
    let (p, q) = (x.numer().clone(), x.denom().clone());
    balanced_sum(1, k + 1, &|j| {
        let d = &p + &q * BigInt::from(j);
        Rational::new(&q * &q, &d * &d)
    })
}

/// Divide-and-conquer sum of `term(i)` for `i` in `lo..hi`.
///
/// Pairing partial sums of similar size keeps the gcd work near-linear in
/// the size of the result instead of quadratic.
pub fn balanced_sum<F>(lo: u64, hi: u64, term: &F) -> Rational
where
    F: Fn(u64) -> Rational,
{
    if hi <= lo {
        return Rational::zero();
    }
    if hi - lo <= FOLD_CUTOFF {
        return (lo..hi).fold(Rational::zero(), |acc, i| acc + term(i));
    }
    let mid = lo + (hi - lo) / 2;
    balanced_sum(lo, mid, term) + balanced_sum(mid, hi, term)
}

/// `B_0 ..= B_m` via `sum_{k=0..m} C(m+1, k) B_k = 0`.
pub fn bernoulli_numbers(m: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(m + 1);
    out.push(Rational::one());
    for j in 1..=m {
        // binomial row C(j+1, k) built incrementally
        let mut binom = BigInt::one();
        let mut acc = Rational::zero();
        for (k, b) in out.iter().enumerate() {
            if !b.is_zero() {
                acc += b * Rational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(j + 1 - k) / BigInt::from(k + 1);
        }
        out.push(-acc / Rational::from_integer(BigInt::from(j + 1)));
    }
    out
}

/// `B_m` with `B_1 = -1/2`; odd indices above 1 give zero.
pub fn bernoulli_number(m: usize) -> Rational {
    if m >= 3 && m % 2 == 1 {
        return Rational::zero();
    }
    bernoulli_numbers(m).pop().expect("nonempty")
}

/// Largest even index held by the shared table used by the enclosure code.
pub(crate) const BERNOULLI_TABLE_MAX: usize = 240;

/// `B_0 ..= B_240`, computed once per process.
pub(crate) fn bernoulli_table() -> &'static [Rational] {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| bernoulli_numbers(BERNOULLI_TABLE_MAX))
}

/// `B_m(x) = sum_{k=0..m} C(m,k) B_k x^(m-k)`.
pub fn bernoulli_polynomial(m: usize, x: &Rational) -> Rational {
    let b = bernoulli_numbers(m);
    // Horner over descending powers of x: coefficients C(m,k) B_k for k = 0..m
    let mut binom = BigInt::one();
    let mut coeffs = Vec::with_capacity(m + 1);
    for (k, bk) in b.iter().enumerate() {
        coeffs.push(bk * Rational::from_integer(binom.clone()));
        binom = binom * BigInt::from(m - k) / BigInt::from(k + 1);
    }
    coeffs
        .iter()
        .fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Renders as `p/q`, including `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q`, integers, decimals and scientific notation exactly.
///
/// ```
/// use harmonic_bounds::exact::{parse_rational, rat};
/// assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
/// assert_eq!(parse_rational("-2.5").unwrap(), rat(-5, 2));
/// assert_eq!(parse_rational("12/5").unwrap(), rat(12, 5));
/// ```
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::invalid(format!("cannot parse '{s}' as an exact number"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: String = format!("{whole}{frac}");
    let mut num: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().map_err(|_| bad())? };
    if neg {
        num = -num;
    }
    let scale = exp - frac.len() as i64;
    let ten = BigInt::from(10);
    let exp_abs = u32::try_from(scale.unsigned_abs()).map_err(|_| bad())?;
    Ok(if scale >= 0 {
        Rational::from_integer(num * num_traits::pow(ten, exp_abs as usize))
    } else {
        Rational::new(num, num_traits::pow(ten, exp_abs as usize))
    })
}

/// Exact `floor(log2 |r|)` for nonzero `r`.
pub(crate) fn floor_log2(r: &Rational) -> i64 {
    let n = r.numer().abs();
    let d = r.denom();
    let mut e = n.bits() as i64 - d.bits() as i64;
    // 2^e <= |r| < 2^(e+1) after at most one correction
    let two_e = pow2(e);
    if r.abs() < two_e {
        e -= 1;
    }
    e
}

pub(crate) fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::one() << e as usize)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

pub(crate) fn is_power_of_two(n: &BigInt) -> bool {
    n.is_positive() && (n & (n - BigInt::one())).is_zero()
}

#[cfg(test)]
fn gcd_check(r: &Rational) -> bool {
    use num_integer::Integer;
    r.numer().gcd(r.denom()).is_one() && r.denom().is_positive()
}
