use super::{sweep, Finding, SweepOptions, VerifyReport};
use crate::error::{Error, Result};
use crate::exact::{format_rational, Rational};
use crate::psi::{
    digamma_bracket_width, digamma_residual_enclosure, digamma_residual_shifted, trigamma_bracket_width,
    trigamma_residual_enclosure, trigamma_residual_shifted, Bracket, LemmaBracket,
};
use crate::realnum::Interval;

/// Shift used for the refined enclosures.
const REFINED_SHIFT: u64 = 20;

/// Checks the order-one brackets described by `bracket` at each sample:
///
/// * containment: the raw bracket at `x` contains the enclosure obtained by
///   shifting to `x + 20` and applying the same bracket there;
/// * tightness: a high-order reference enclosure lies above the raw lower
///   endpoint by less than the next series term (`1/(120x^4)` for digamma)
///   and, for trigamma, below the raw upper endpoint by less than
///   `1/(42x^7)`.
///
/// Sound coefficients pass both; loosened or dropped coefficients fail.
pub fn verify_lemma_brackets(samples: &[Rational], bracket: &LemmaBracket, opts: &SweepOptions) -> Result<VerifyReport> {
    if samples.iter().any(|x| *x <= Rational::from_integer(0.into())) {
        return Err(Error::invalid("bracket samples must be positive"));
    }
    let n = samples.len() as u64;
    if n == 0 {
        return Ok(VerifyReport::new("lemma_brackets", (0, 0), true));
    }
    let bits = opts.bits;
    let reference_width = crate::exact::parse_rational("1e-40").expect("constant");
    let shifted = Bracket::Lemma(bracket.clone());

    let mut report = sweep(1, n, 64, opts, |a, b| {
        let mut report = VerifyReport::new("lemma_brackets", (a - 1, b - 1), true);
        for idx in a..=b {
            let i = idx - 1;
            let x = &samples[i as usize];
            let at = format_rational(x);

            let (dlo, dhi) = bracket.digamma(x);
            let raw = Interval::from_rational_bounds(&dlo, &dhi, bits);
            let refined = digamma_residual_shifted(x, REFINED_SHIFT, &shifted, bits)?.value;
            report.checked += 1;
            if !raw.contains(&refined) {
                report.fail(
                    Finding::new(i, &at, "digamma raw bracket contains k=20 enclosure")
                        .with("raw", &raw)
                        .with("refined", &refined),
                );
            }
            let reference = digamma_residual_enclosure(x, &reference_width, bits + 64)?.value;
            let next = digamma_bracket_width(x, 2);
            report.checked += 1;
            if !(reference.certainly_gt_rational(&dlo) && reference.certainly_lt_rational(&(&dlo + &next))) {
                report.fail(
                    Finding::new(i, &at, "digamma lower endpoint within 1/(120x^4) of the value")
                        .with("lower", format_rational(&dlo))
                        .with("reference", &reference),
                );
            }

            let (tlo, thi) = bracket.trigamma(x);
            let raw = Interval::from_rational_bounds(&tlo, &thi, bits);
            let refined = trigamma_residual_shifted(x, REFINED_SHIFT, &shifted, bits)?.value;
            report.checked += 1;
            if !raw.contains(&refined) {
                report.fail(
                    Finding::new(i, &at, "trigamma raw bracket contains k=20 enclosure")
                        .with("raw", &raw)
                        .with("refined", &refined),
                );
            }
            let reference = trigamma_residual_enclosure(x, &reference_width, bits + 64)?.value;
            let next = trigamma_bracket_width(x, 2);
            report.checked += 1;
            if !(reference.certainly_gt_rational(&tlo)
                && reference.certainly_lt_rational(&thi)
                && reference.certainly_gt_rational(&(&thi - &next)))
            {
                report.fail(
                    Finding::new(i, &at, "trigamma bracket tight to within 1/(42x^7)")
                        .with("raw", &raw)
                        .with("reference", &reference),
                );
            }
        }
        Ok(report)
    })?;
    report.range = (0, n - 1);
    Ok(report)
}
