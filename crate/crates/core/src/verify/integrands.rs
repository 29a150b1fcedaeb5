use num_traits::ToPrimitive;

use super::{Finding, VerifyReport};
use crate::error::{Error, Result};
use crate::exact::bernoulli_numbers;

/// Below this `t` the integrands are summed from their Bernoulli series to
/// avoid cancellation.
const SERIES_CUTOFF: f64 = 2.0;
const SERIES_TERMS: usize = 40;

/// `(f1, f2, f3, f4)` at `t > 0`, in hardware floating point:
///
/// ```text
/// f1 = 1/t - 1/(e^t - 1) - 1/2 + t/12          (>= 0)
/// f2 = 1/t - 1/(e^t - 1) - 1/2                 (<= 0)
/// f3 = 1 - t/(e^t - 1) - t/2 + t^2/12          (>= 0)
/// f4 = f3 - t^4/720                            (<= 0)
/// ```
pub fn integrand_values(t: f64) -> [f64; 4] {
    if t < SERIES_CUTOFF {
        return series_values(t);
    }
    let em1 = t.exp_m1();
    let f2 = 1.0 / t - 1.0 / em1 - 0.5;
    let f1 = f2 + t / 12.0;
    let f3 = 1.0 - t / em1 - t / 2.0 + t * t / 12.0;
    let f4 = f3 - t.powi(4) / 720.0;
    [f1, f2, f3, f4]
}

/// From `t/(e^t - 1) = sum B_k t^k / k!`.
fn series_values(t: f64) -> [f64; 4] {
    use std::sync::OnceLock;
    static COEFFS: OnceLock<Vec<f64>> = OnceLock::new();
    // c_k = B_k / k!
    let c = COEFFS.get_or_init(|| {
        let b = bernoulli_numbers(SERIES_TERMS);
        let mut fact = 1.0f64;
        b.iter()
            .enumerate()
            .map(|(k, bk)| {
                if k > 0 {
                    fact *= k as f64;
                }
                bk.to_f64().unwrap_or(0.0) / fact
            })
            .collect()
    });
    // tail sums over even k, highest first
    let tail = |from: usize, shift: i32| -> f64 {
        (from..=SERIES_TERMS)
            .rev()
            .filter(|k| k % 2 == 0)
            .map(|k| c[k] * t.powi(k as i32 + shift))
            .sum::<f64>()
    };
    let f2 = -tail(2, -1);
    let f1 = -tail(4, -1);
    let f3 = -tail(4, 0);
    let f4 = -tail(6, 0);
    [f1, f2, f3, f4]
}

/// Sampled sign checks of the four integrands. Not certified: this uses
/// hardware `exp`.
pub fn verify_integrand_signs(t_samples: &[f64]) -> Result<VerifyReport> {
    if let Some(bad) = t_samples.iter().find(|t| !(t.is_finite() && **t > 0.0 && **t <= 50.0)) {
        return Err(Error::invalid(format!("integrand samples must lie in (0, 50], got {bad}")));
    }
    let n = t_samples.len() as u64;
    let mut report = VerifyReport::new("integrand_signs", (0, n.saturating_sub(1)), false);
    let names = ["f1 >= 0", "f2 <= 0", "f3 >= 0", "f4 <= 0"];
    for (i, &t) in t_samples.iter().enumerate() {
        let v = integrand_values(t);
        let ok = [v[0] >= 0.0, v[1] <= 0.0, v[2] >= 0.0, v[3] <= 0.0];
        for (j, good) in ok.iter().enumerate() {
            report.checked += 1;
            if !good {
                report.fail(Finding::new(i as u64, t.to_string(), names[j]).with("value", v[j]));
            }
        }
    }
    Ok(report)
}
