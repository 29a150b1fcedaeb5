use num_traits::Signed;

use super::{check_range, sweep, Finding, SweepOptions, VerifyReport};
use crate::bounds::phi_with;
use crate::error::{Error, Result};
use crate::exact::{format_rational, int, rat, Rational};
use crate::psi::{digamma_residual_enclosure, trigamma_residual_enclosure, Strategy};
use crate::realnum::Interval;

const BLOCK: u64 = 256;
/// Width shrink factor per near-tie retry.
const RETRY_SHRINK: i64 = 16;
const MAX_RETRIES: u32 = 6;

/// Certifies `phi(n+1) < phi(n)` for every `n` in `[from, to - 1]` with
/// interval separation `phi(n+1).hi < phi(n).lo`.
pub fn verify_phi_monotone(from: u64, to: u64, target_width: &Rational, opts: &SweepOptions) -> Result<VerifyReport> {
    verify_phi_monotone_with(from, to, target_width, opts, &Strategy::Auto)
}

/// [`verify_phi_monotone`] with an explicit bracket strategy for `phi`.
pub fn verify_phi_monotone_with(
    from: u64,
    to: u64,
    target_width: &Rational,
    opts: &SweepOptions,
    strategy: &Strategy,
) -> Result<VerifyReport> {
    check_range(from, to)?;
    if !target_width.is_positive() {
        return Err(Error::invalid("target width must be positive"));
    }
    if from == to {
        return Ok(VerifyReport::new("phi_monotone", (from, to), true));
    }
    let bits = opts.bits;
    let eval = |n: u64, w: &Rational, b: u32| phi_with(&int(n), w, b, strategy).map_err(|e| e.at(n));

    sweep(from, to - 1, BLOCK, opts, |a, b| {
        let mut report = VerifyReport::new("phi_monotone", (a, b), true);
        let values: Vec<Interval> = (a..=b + 1).map(|n| eval(n, target_width, bits)).collect::<Result<_>>()?;
        for n in a..=b {
            report.checked += 1;
            let i = (n - a) as usize;
            let (mut cur, mut next) = (values[i].clone(), values[i + 1].clone());
            let mut w = target_width.clone();
            let mut retries = 0;
            let mut capped = false;
            while !next.certainly_lt(&cur) && !cur.certainly_le(&next) && retries < MAX_RETRIES {
                retries += 1;
                w /= rat(RETRY_SHRINK, 1);
                let b2 = bits + 4 * retries;
                match (eval(n, &w, b2), eval(n + 1, &w, b2)) {
                    (Ok(c), Ok(x)) => {
                        cur = c;
                        next = x;
                    }
                    _ => {
                        capped = true;
                        break;
                    }
                }
            }
            if next.certainly_lt(&cur) {
                continue;
            }
            let f = Finding::new(n, n.to_string(), "phi(n+1) < phi(n)")
                .with("phi(n)", &cur)
                .with("phi(n+1)", &next)
                .with("retries", retries);
            if cur.certainly_le(&next) {
                report.fail(f);
            } else {
                report.undecided(if capped { f.with("precision_cap", "exceeded") } else { f });
            }
        }
        Ok(report)
    })
}

/// For each sample `x > 12/5`, certifies
/// `1/x - psi'(x+1) - 2 (psi(x+1) - ln x)^2 < 0` with residual enclosures,
/// and checks exactly that the bracket-assembled upper bound
/// `1/(2x^2) - 1/(6x^3) + 1/(30x^5) - 2 (1/(2x) - 1/(12x^2))^2` equals
/// `(12 - 5x) / (360 x^5)` and is negative.
pub fn verify_phi_derivative_sign(samples: &[Rational], target_width: &Rational, opts: &SweepOptions) -> Result<VerifyReport> {
    let threshold = rat(12, 5);
    if let Some(bad) = samples.iter().find(|x| **x <= threshold) {
        return Err(Error::invalid(format!("derivative-sign samples must exceed 12/5, got {bad}")));
    }
    if !target_width.is_positive() {
        return Err(Error::invalid("target width must be positive"));
    }
    let n = samples.len() as u64;
    let mut report = VerifyReport::new("phi_derivative_sign", (0, n.saturating_sub(1)), true);
    if samples.is_empty() {
        return Ok(report);
    }
    let partial = sweep(1, n, 64, opts, |a, b| {
        let mut report = VerifyReport::new("phi_derivative_sign", (a - 1, b - 1), true);
        for idx in a..=b {
            let x = &samples[(idx - 1) as usize];
            report.checked += 1;
            let at = format_rational(x);

            let closed = closed_form(x);
            let assembled = assembled_bound(x);
            if assembled != closed || !closed.is_negative() {
                report.fail(
                    Finding::new(idx - 1, &at, "bracket bound == (12-5x)/(360x^5) < 0")
                        .with("assembled", format_rational(&assembled))
                        .with("closed_form", format_rational(&closed)),
                );
            }

            let mut w = target_width.clone();
            let mut outcome = None;
            for retry in 0..=MAX_RETRIES {
                let bits = opts.bits + 4 * retry;
                let d = digamma_residual_enclosure(x, &w, bits);
                let t = trigamma_residual_enclosure(x, &w, bits);
                let (Ok(d), Ok(t)) = (d, t) else {
                    break;
                };
                let expr = &t.value - &(&d.value.square() * &Interval::from_int(2, bits));
                let done = expr.certainly_negative() || expr.certainly_positive();
                outcome = Some(expr);
                if done {
                    break;
                }
                w /= rat(RETRY_SHRINK, 1);
            }
            match outcome {
                Some(e) if e.certainly_negative() => {}
                Some(e) if e.certainly_positive() => report.fail(
                    Finding::new(idx - 1, &at, "1/x - psi'(x+1) - 2(psi(x+1) - ln x)^2 < 0").with("value", &e),
                ),
                Some(e) => report.undecided(
                    Finding::new(idx - 1, &at, "1/x - psi'(x+1) - 2(psi(x+1) - ln x)^2 < 0").with("value", &e),
                ),
                None => report.undecided(
                    Finding::new(idx - 1, &at, "1/x - psi'(x+1) - 2(psi(x+1) - ln x)^2 < 0")
                        .with("precision_cap", "exceeded"),
                ),
            }
        }
        Ok(report)
    })?;
    report = report.merge(partial);
    report.range = (0, n - 1);
    Ok(report)
}

/// `(12 - 5x) / (360 x^5)`.
pub(crate) fn closed_form(x: &Rational) -> Rational {
    (rat(12, 1) - rat(5, 1) * x) / (rat(360, 1) * num_traits::pow(x.clone(), 5))
}

/// Upper trigamma bracket minus twice the squared lower digamma bracket.
pub(crate) fn assembled_bound(x: &Rational) -> Rational {
    let inv = x.recip();
    let p = |k: usize| num_traits::pow(inv.clone(), k);
    let d_lo = &inv / rat(2, 1) - p(2) / rat(12, 1);
    p(2) / rat(2, 1) - p(3) / rat(6, 1) + p(5) / rat(30, 1) - rat(2, 1) * &d_lo * &d_lo
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn closed_form_values() {
        assert!(closed_form(&rat(12, 5)).is_zero());
        assert_eq!(closed_form(&rat(3, 1)), rat(-3, 87480));
        for x in [rat(5, 2), rat(3, 1), rat(7, 1), rat(1001, 10)] {
            assert_eq!(assembled_bound(&x), closed_form(&x));
        }
    }
}
