use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Dyadic, Interval};
use crate::error::{Error, Result};
use crate::exact::{floor_log2, pow2, rat, Rational};

/// Extra working bits carried through the series before handing back.
const GUARD_BITS: u32 = 32;

/// Enclosure of `ln x` for rational `x > 0`.
///
/// `x` is split as `2^k * m` with `m` in `(2/3, 4/3]`; `ln m` is
/// `2 atanh((m-1)/(m+1))` summed with a geometric tail bound and `ln 2` is
/// `2 atanh(1/3)`. The width is at most `4 * 2^-bits * max(1, |ln x|)`.
///
/// ```
/// use harmonic_bounds::exact::rat;
/// use harmonic_bounds::realnum::ln_enclosure;
/// let ln2 = ln_enclosure(&rat(2, 1), 128).unwrap();
/// assert!(ln2.mid_f64() - std::f64::consts::LN_2 < 1e-15);
/// ```
pub fn ln_enclosure(x: &Rational, bits: u32) -> Result<Interval> {
    if !x.is_positive() {
        return Err(Error::NonPositiveLog(x.to_string()));
    }
    if x.is_one() {
        return Ok(Interval::zero(bits));
    }
    let work = bits + GUARD_BITS;
    let mut k = floor_log2(x);
    let mut m = x / pow2(k);
    if m > rat(4, 3) {
        k += 1;
        m /= rat(2, 1);
    }
    let s = (&m - Rational::one()) / (&m + Rational::one());
    let ln_m = atanh_enclosure(&s, work)?.mul_rational(&rat(2, 1));
    let out = if k == 0 {
        ln_m
    } else {
        let k_ln2 = &ln2(work) * &Interval::from_int(BigInt::from(k), work);
        &ln_m + &k_ln2
    };
    Ok(out.with_bits(bits))
}

/// `ln 2`, cached per working precision. The cached value is a pure function
/// of `work`, so lookups never change results.
fn ln2(work: u32) -> Interval {
    static CACHE: OnceLock<Mutex<HashMap<u32, Interval>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().expect("ln2 cache poisoned").get(&work) {
        return v.clone();
    }
    let v = atanh_enclosure(&rat(1, 3), work)
        .expect("atanh(1/3) converges")
        .mul_rational(&rat(2, 1));
    cache
        .lock()
        .expect("ln2 cache poisoned")
        .entry(work)
        .or_insert(v)
        .clone()
}

/// `atanh s = sum s^(2i+1)/(2i+1)` for `|s| <= 1/2`, with the tail after the
/// last included term bounded by `|s|^(2N+3) / ((2N+3)(1 - s^2))`.
pub(crate) fn atanh_enclosure(s: &Rational, work: u32) -> Result<Interval> {
    if s.is_zero() {
        return Ok(Interval::zero(work));
    }
    if s.abs() > rat(1, 2) {
        return Err(Error::Internal(format!("atanh argument {s} outside reduced range")));
    }
    // |s| < 2^(fl+1), so each power of s gains at least -(fl+1) >= 1 bits
    let gain = (-(floor_log2(s) + 1)).max(1) as u64;
    let terms = ((work as u64 + 4).div_ceil(gain)).div_ceil(2) + 1;

    let sv = Interval::from_rational(s, work);
    let s2 = sv.square();
    let mut power = sv.clone();
    let mut sum = sv.clone();
    for i in 1..=terms {
        power = &power * &s2;
        sum = &sum + &power.div_rational(&Rational::from_integer(BigInt::from(2 * i + 1)))?;
    }
    // tail from index terms+1 onwards
    let a = Interval::point(sv.abs_upper(), work);
    let lead = a.powu((2 * terms + 3) as u32);
    let denom = Interval::from_int(BigInt::from(2 * terms + 3), work)
        * (Interval::from_int(1, work) - a.square());
    let tail: Dyadic = lead.div(&denom)?.hi().clone();
    Ok(sum.widen(&tail))
}
