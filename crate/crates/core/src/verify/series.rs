use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Finding, VerifyReport};
use crate::error::{Error, Result};
use crate::exact::{factorial, Rational};

/// Up to this index the coefficients are also evaluated as reduced rationals
/// with explicit factorials, as a second route next to the scaled integers.
const RATIONAL_CROSSCHECK_MAX: u64 = 200;

/// `-(120 + 218m + 119m^2 + 22m^3 + m^4)` with `m = n - 7`.
fn quartic_numerator(n: u64) -> BigInt {
    let m = BigInt::from(n) - 7u32;
    let m2 = &m * &m;
    let sum: BigInt = BigInt::from(120) + &m * 218u32 + &m2 * 119u32 + &m2 * &m * 22u32 + &m2 * &m2;
    -sum
}

/// `n! * (720/n! - 360/(n-1)! + 60/(n-2)! - 1/(n-4)!)`.
fn combination_scaled(n: u64) -> BigInt {
    let n = BigInt::from(n);
    let falling = |k: u64| (0..k).fold(BigInt::one(), |acc, i| acc * (&n - i));
    BigInt::from(720) - falling(1) * 360u32 + falling(2) * 60u32 - falling(4)
}

/// Exact certification of the series coefficients behind the two
/// integral-sign arguments, for every index up to `n_max`:
///
/// * `(n-3)(n-4)/n! >= 0`, vanishing exactly at `n = 3, 4`;
/// * `(n-2)/n! > 0` for `n >= 3`;
/// * for `n >= 7`, `720/n! - 360/(n-1)! + 60/(n-2)! - 1/(n-4)!` equals
///   `-(120 + 218m + 119m^2 + 22m^3 + m^4)/n!` with `m = n - 7`, hence is
///   negative.
///
/// Every term shares the positive denominator `n!`, so the relations are
/// decided on the integer numerators; no floating point is involved.
pub fn verify_series_coefficients(n_max: u64) -> Result<VerifyReport> {
    if n_max < 7 {
        return Err(Error::invalid("n_max must be at least 7"));
    }
    let mut report = VerifyReport::new("series_coefficients", (3, n_max), true);
    for n in 3..=n_max {
        let at = n.to_string();
        let nb = BigInt::from(n);

        let a: BigInt = (&nb - 3u32) * (&nb - 4u32);
        report.checked += 1;
        let zero_expected = n == 3 || n == 4;
        if a.is_negative() || a.is_zero() != zero_expected {
            report.fail(Finding::new(n, &at, "(n-3)(n-4)/n! >= 0, zero iff n in {3,4}").with("numerator", &a));
        }

        let b: BigInt = &nb - 2u32;
        report.checked += 1;
        if !b.is_positive() {
            report.fail(Finding::new(n, &at, "(n-2)/n! > 0").with("numerator", &b));
        }

        if n >= 7 {
            report.checked += 1;
            let lhs = combination_scaled(n);
            let rhs = quartic_numerator(n);
            if lhs != rhs || !lhs.is_negative() {
                report.fail(
                    Finding::new(n, &at, "720/n! - 360/(n-1)! + 60/(n-2)! - 1/(n-4)! == quartic form < 0")
                        .with("lhs_times_n!", &lhs)
                        .with("rhs_times_n!", &rhs),
                );
            }
        }

        if n <= RATIONAL_CROSSCHECK_MAX {
            report.checked += 1;
            if let Some(f) = rational_crosscheck(n) {
                report.fail(f);
            }
        }
    }
    Ok(report)
}

fn rational_crosscheck(n: u64) -> Option<Finding> {
    let inv_fact = |k: u64| Rational::new(BigInt::one(), factorial(k));
    let nf = inv_fact(n);
    let nb = BigInt::from(n);
    let a = Rational::from_integer((&nb - 3u32) * (&nb - 4u32)) * &nf;
    let b = Rational::from_integer(&nb - 2u32) * &nf;
    let mut bad = a.is_negative() || !b.is_positive();
    if n >= 7 {
        let lhs = Rational::from_integer(720.into()) * &nf - Rational::from_integer(360.into()) * inv_fact(n - 1)
            + Rational::from_integer(60.into()) * inv_fact(n - 2)
            - inv_fact(n - 4);
        let rhs = Rational::from_integer(quartic_numerator(n)) * &nf;
        bad |= lhs != rhs || !lhs.is_negative();
    }
    bad.then(|| Finding::new(n, n.to_string(), "rational cross-check of series coefficients"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn worked_values() {
        // n = 7: 720/5040 - 360/720 + 60/120 - 1/6 = -1/42 = -120/7!
        assert_eq!(combination_scaled(7), BigInt::from(-120));
        assert_eq!(Rational::new(combination_scaled(7), factorial(7)), rat(-1, 42));
        // n = 8: quartic at m = 1 is 120 + 218 + 119 + 22 + 1 = 480
        assert_eq!(quartic_numerator(8), BigInt::from(-480));
        assert_eq!(Rational::new(quartic_numerator(8), factorial(8)), rat(-1, 84));
        // n = 5: (n-3)(n-4)/n! = 2/120
        assert_eq!(Rational::new(BigInt::from(2), factorial(5)), rat(1, 60));
    }

    #[test]
    fn small_suite_passes() {
        let r = verify_series_coefficients(50).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.certified && !r.uses_float);
        assert!(verify_series_coefficients(6).is_err());
    }
}
