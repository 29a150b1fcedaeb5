//! Directed decimal rendering of exact values.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exact::{floor_log2, Rational};

/// Significant digits used when no explicit count is requested.
pub const DEFAULT_DIGITS: usize = 25;

/// Largest decimal with `digits` significant digits that is `<= r`.
pub fn decimal_down(r: &Rational, digits: usize) -> String {
    render(r, digits, false)
}

/// Smallest decimal with `digits` significant digits that is `>= r`.
pub fn decimal_up(r: &Rational, digits: usize) -> String {
    render(r, digits, true)
}

/// Whether `value` is consistent with the printed decimal `printed`, read as
/// correct to its last digit: the enclosure meets `[d - u, d + u]` where `u`
/// is one unit in the last printed place. This accepts both rounded and
/// truncated printings. Plain fixed-point notation only.
pub fn matches_printed(value: &super::Interval, printed: &str) -> Option<bool> {
    let d = crate::exact::parse_rational(printed).ok()?;
    let places = match printed.split_once('.') {
        Some((_, frac)) if frac.chars().all(|c| c.is_ascii_digit()) => frac.len() as u64,
        None if printed.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()) => 0,
        _ => return None,
    };
    let u = Rational::new(BigInt::from(1), pow10(places));
    Some(value.lo_rational() <= &d + &u && value.hi_rational() >= &d - &u)
}

fn pow10(e: u64) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

fn scale10(r: &Rational, e: i64) -> Rational {
    if e >= 0 {
        r * Rational::from_integer(pow10(e as u64))
    } else {
        r / Rational::from_integer(pow10((-e) as u64))
    }
}

/// `floor(log10 |r|)` for nonzero `r`.
fn floor_log10(r: &Rational) -> i64 {
    let a = r.abs();
    let mut e = (floor_log2(&a) as f64 * std::f64::consts::LOG10_2).floor() as i64;
    let one = Rational::from_integer(BigInt::from(1));
    while scale10(&a, -e) < one {
        e -= 1;
    }
    while scale10(&a, -(e + 1)) >= one {
        e += 1;
    }
    e
}

fn render(r: &Rational, digits: usize, up: bool) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let digits = digits.max(1) as i64;
    let scale = digits - 1 - floor_log10(r);
    let scaled = scale10(r, scale);
    let (n, d) = (scaled.numer(), scaled.denom());
    let q = if up {
        -((-n).div_floor(d))
    } else {
        n.div_floor(d)
    };
    format_scaled(&q, scale)
}

/// Formats `n * 10^(-scale)`.
pub(crate) fn format_scaled(n: &BigInt, scale: i64) -> String {
    if n.is_zero() {
        return "0".to_string();
    }
    let sign = if n.is_negative() { "-" } else { "" };
    let s = n.abs().to_string();
    let len = s.len() as i64;
    let lead = len - 1 - scale;
    if (-5..21).contains(&lead) {
        let body = if scale <= 0 {
            format!("{s}{}", "0".repeat((-scale) as usize))
        } else if len > scale {
            let cut = (len - scale) as usize;
            trim_fraction(format!("{}.{}", &s[..cut], &s[cut..]))
        } else {
            trim_fraction(format!("0.{}{s}", "0".repeat((scale - len) as usize)))
        };
        format!("{sign}{body}")
    } else {
        let mant = trim_fraction(format!("{}.{}", &s[..1], &s[1..]));
        format!("{sign}{mant}e{lead}")
    }
}

fn trim_fraction(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0');
    t.trim_end_matches('.').to_string()
}
