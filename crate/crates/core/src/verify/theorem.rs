use num_traits::{One, Signed};

use super::{check_range, sweep, Finding, SweepOptions, VerifyReport};
use crate::bounds::{
    franel_lower, franel_upper, phi_from_residual, sharp_lower_constant,
    sharp_lower_equality_at_one, sharp_lower_from_constant, sharp_upper, toth_mare_lower,
};
use crate::error::{Error, Result};
use crate::exact::{format_rational, harmonic_exact, int, rat, Rational};
use crate::psi::euler_gamma_auto;
use crate::realnum::{ln_enclosure, Interval};

const BLOCK: u64 = 4096;

/// Certifies, for every `n` in `[from, to]`,
///
/// ```text
/// 1/(2n + 1/(1-gamma) - 2) <= H_n - ln n - gamma < 1/(2n + 1/3)
/// ```
///
/// with equality at `n = 1` checked as an identity in `gamma`, strict lower
/// separation for `n >= 2`, both older families bracketing the residual,
/// and the best-constant evidence `1/3 < phi(n) <= phi(1)`.
///
/// The residual is `H_n - ln n - gamma` with `H_n` accumulated in interval
/// arithmetic from an exact value at each block start and `gamma` from the
/// Euler–Maclaurin enclosure.
pub fn verify_theorem(from: u64, to: u64, target_width: &Rational, opts: &SweepOptions) -> Result<VerifyReport> {
    check_range(from, to)?;
    if !target_width.is_positive() {
        return Err(Error::invalid("target width must be positive"));
    }
    let bits = opts.bits;
    let gamma = euler_gamma_auto(&(target_width / rat(8, 1)), bits)?.value;
    let c = sharp_lower_constant(&gamma)?;
    let third = rat(1, 3);

    sweep(from, to, BLOCK, opts, |a, b| {
        let mut report = VerifyReport::new("theorem", (a, b), true);
        let mut h = if a == 1 {
            Interval::zero(bits)
        } else {
            Interval::from_rational(&harmonic_exact(a - 1)?, bits)
        };
        for n in a..=b {
            h = &h + &Interval::from_rational(&int(n).recip(), bits);
            let r = &(&h - &ln_enclosure(&int(n), bits)?) - &gamma;
            if r.width() > *target_width {
                return Err(Error::InsufficientPrecision {
                    bits,
                    target: format_rational(target_width),
                    achieved: format_rational(&r.width()),
                }
                .at(n));
            }
            report.checked += 1;
            let at = n.to_string();

            let upper = sharp_upper(n);
            if !r.certainly_lt_rational(&upper) {
                let f = Finding::new(n, &at, "residual < 1/(2n+1/3)")
                    .with("residual", &r)
                    .with("upper", format_rational(&upper));
                if r.certainly_gt_rational(&upper) || r.lo_rational() == upper {
                    report.fail(f);
                } else {
                    report.undecided(f);
                }
            }

            let lower = sharp_lower_from_constant(n, &c)?;
            if n == 1 {
                if !sharp_lower_equality_at_one() {
                    report.fail(Finding::new(n, &at, "sharp lower == 1 - gamma (identity)"));
                }
                if !lower.overlaps(&r) {
                    report.fail(
                        Finding::new(n, &at, "sharp lower encloses residual at n = 1")
                            .with("residual", &r)
                            .with("lower", &lower),
                    );
                }
            } else if !lower.certainly_lt(&r) {
                let f = Finding::new(n, &at, "1/(2n + 1/(1-gamma) - 2) < residual")
                    .with("residual", &r)
                    .with("lower", &lower);
                if r.certainly_lt(&lower) {
                    report.fail(f);
                } else {
                    report.undecided(f);
                }
            }

            for (name, lo, hi) in [
                ("franel", franel_lower(n), franel_upper(n)),
                ("toth_mare", toth_mare_lower(n), upper.clone()),
            ] {
                if !(r.certainly_gt_rational(&lo) && r.certainly_lt_rational(&hi)) {
                    report.fail(
                        Finding::new(n, &at, format!("{name} lower < residual < {name} upper"))
                            .with("residual", &r)
                            .with("lower", format_rational(&lo))
                            .with("upper", format_rational(&hi)),
                    );
                }
            }

            let phi = phi_from_residual(n, &r)?;
            if !phi.certainly_gt_rational(&third) {
                report.fail(Finding::new(n, &at, "phi(n) > 1/3").with("phi", &phi));
            }
            if n > 1 && !phi.certainly_le(&c) {
                report.fail(
                    Finding::new(n, &at, "phi(n) <= phi(1)")
                        .with("phi", &phi)
                        .with("phi(1)", &c),
                );
            }
        }
        Ok(report)
    })
}

/// Certifies the ordering of the three families at every `n` in
/// `[from, to]`: the sharp upper bound is below Franel's, and the sharp lower
/// bound is above both the Franel and the Tóth–Mare lower bounds.
pub fn verify_family_ordering(from: u64, to: u64, opts: &SweepOptions) -> Result<VerifyReport> {
    check_range(from, to)?;
    let bits = opts.bits;
    let gamma = euler_gamma_auto(&Rational::new(One::one(), num_traits::pow(num_bigint::BigInt::from(10), 30)), bits)?.value;
    let c = sharp_lower_constant(&gamma)?;
    let mut head = VerifyReport::new("family_ordering", (from, to), true);
    // 1/(1-gamma) - 2 < 2/5 makes the sharp lower bound beat Tóth–Mare for all n
    if !c.certainly_lt_rational(&rat(2, 5)) {
        head.fail(Finding::new(0, "constant", "1/(1-gamma) - 2 < 2/5").with("constant", &c));
    }
    let body = sweep(from, to, BLOCK, opts, |a, b| {
        let mut report = VerifyReport::new("family_ordering", (a, b), true);
        for n in a..=b {
            report.checked += 1;
            let at = n.to_string();
            let lower = sharp_lower_from_constant(n, &c)?;
            if sharp_upper(n) >= franel_upper(n) {
                report.fail(Finding::new(n, &at, "1/(2n+1/3) < 1/(2n)"));
            }
            let fl = franel_lower(n);
            if !lower.certainly_gt_rational(&fl) {
                report.fail(
                    Finding::new(n, &at, "sharp lower > franel lower")
                        .with("sharp_lower", &lower)
                        .with("franel_lower", format_rational(&fl)),
                );
            }
            let tl = toth_mare_lower(n);
            if !lower.certainly_gt_rational(&tl) {
                report.fail(
                    Finding::new(n, &at, "sharp lower > toth_mare lower")
                        .with("sharp_lower", &lower)
                        .with("toth_mare_lower", format_rational(&tl)),
                );
            }
        }
        Ok(report)
    })?;
    Ok(head.merge(body))
}
