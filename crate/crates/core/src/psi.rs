//! Certified enclosures of the digamma residual `psi(x+1) - ln x`, the
//! trigamma residual `1/x - psi'(x+1)`, and Euler's constant.
//!
//! Both residuals are enveloped by consecutive partial sums of their
//! asymptotic series. Writing
//!
//! ```text
//! S_q(x) = 1/(2x)   - sum_{i=1..q} B_{2i} / (2i x^{2i})
//! T_q(x) = 1/(2x^2) - sum_{i=1..q} B_{2i} / x^{2i+1}
//! ```
//!
//! the value `psi(x+1) - ln x` lies strictly between `S_{q-1}(x)` and
//! `S_q(x)`, and `1/x - psi'(x+1)` strictly between `T_q(x)` and
//! `T_{q+1}(x)`, for every `x > 0` and `q >= 1`. Order one is the classical
//! pair of brackets
//!
//! ```text
//! 1/(2x) - 1/(12x^2)   < psi(x+1) - ln x  < 1/(2x)
//! 1/(2x^2) - 1/(6x^3)  < 1/x - psi'(x+1)  < 1/(2x^2) - 1/(6x^3) + 1/(30x^5)
//! ```
//!
//! which [`LemmaBracket`] carries with adjustable coefficients so test suites
//! can check that weakened brackets are detected.
//!
//! Small arguments are first shifted to `X = x + k` with
//! `psi(y+1) = psi(y) + 1/y`; the shift terms are summed exactly.

use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{
    bernoulli_table, harmonic_exact, int, rat, shifted_reciprocal_square_sum,
    shifted_reciprocal_sum, Rational, BERNOULLI_TABLE_MAX,
};
use crate::realnum::{ln_enclosure, Interval};

/// Largest argument shift whose reciprocal sum is evaluated exactly.
pub const MAX_SHIFT: u64 = 1 << 16;

/// Largest series order available from the shared Bernoulli table.
pub const MAX_ORDER: u32 = (BERNOULLI_TABLE_MAX / 2 - 1) as u32;

/// Published digits of Euler's constant, used by tests and acceptance checks.
pub const GAMMA_DIGITS: &str = "0.57721566490153286";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    LemmaBracket,
    EulerMaclaurin,
}

/// An enclosure with the provenance needed to audit it.
#[derive(Debug, Clone, Serialize)]
pub struct PsiEnclosure {
    pub value: Interval,
    pub shift_k: u64,
    pub method: Method,
    pub order_q: Option<u32>,
    /// Point where the bracket was evaluated (`x + k`, or `n` for gamma).
    #[serde(serialize_with = "ser_rational")]
    pub anchor: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::exact::format_rational(r))
}

/// Order-one brackets with explicit coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaBracket {
    /// `c` in `1/(2x) - c/x^2 < psi(x+1) - ln x`; `1/12` when sound.
    pub digamma_quadratic: Rational,
    /// `c` in `1/(2x^2) - c/x^3 < 1/x - psi'(x+1)`; `1/6` when sound.
    pub trigamma_cubic: Rational,
    /// `c` in the upper trigamma term `+ c/x^5`; `1/30` when sound.
    pub trigamma_quintic: Rational,
}

impl Default for LemmaBracket {
    fn default() -> Self {
        Self::standard()
    }
}

impl LemmaBracket {
    pub fn standard() -> Self {
        LemmaBracket {
            digamma_quadratic: rat(1, 12),
            trigamma_cubic: rat(1, 6),
            trigamma_quintic: rat(1, 30),
        }
    }

    /// `(lower, upper)` for `psi(x+1) - ln x`.
    pub fn digamma(&self, x: &Rational) -> (Rational, Rational) {
        let inv = x.recip();
        let hi = &inv / rat(2, 1);
        let lo = &hi - &self.digamma_quadratic * &inv * &inv;
        (lo, hi)
    }

    /// `(lower, upper)` for `1/x - psi'(x+1)`.
    pub fn trigamma(&self, x: &Rational) -> (Rational, Rational) {
        let inv = x.recip();
        let inv2 = &inv * &inv;
        let inv3 = &inv2 * &inv;
        let lo = &inv2 / rat(2, 1) - &self.trigamma_cubic * &inv3;
        let hi = &lo + &self.trigamma_quintic * &inv3 * &inv2;
        (lo, hi)
    }

    fn digamma_width(&self, x: &Rational) -> Rational {
        let (lo, hi) = self.digamma(x);
        (hi - lo).abs()
    }

    fn trigamma_width(&self, x: &Rational) -> Rational {
        let (lo, hi) = self.trigamma(x);
        (hi - lo).abs()
    }
}

/// How the raw bracket at the shifted point is chosen.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Pick shift and series order to minimize work for the target width.
    #[default]
    Auto,
    /// Use only the given order-one bracket, shifting as far as needed.
    Lemma(LemmaBracket),
}

fn even_bernoulli(i: u32) -> &'static Rational {
    &bernoulli_table()[2 * i as usize]
}

/// `S_q(x) = 1/(2x) - sum_{i=1..q} B_{2i} / (2i x^{2i})`.
pub fn digamma_partial_sum(x: &Rational, q: u32) -> Rational {
    let inv = x.recip();
    let inv2 = &inv * &inv;
    let mut pow = Rational::one();
    let mut acc = &inv / rat(2, 1);
    for i in 1..=q {
        pow *= &inv2;
        acc -= even_bernoulli(i) * &pow / int(2 * i as u64);
    }
    acc
}

/// `T_q(x) = 1/(2x^2) - sum_{i=1..q} B_{2i} / x^{2i+1}`.
pub fn trigamma_partial_sum(x: &Rational, q: u32) -> Rational {
    let inv = x.recip();
    let inv2 = &inv * &inv;
    let mut pow = inv.clone();
    let mut acc = &inv2 / rat(2, 1);
    for i in 1..=q {
        pow *= &inv2;
        acc -= even_bernoulli(i) * &pow;
    }
    acc
}

fn ordered(a: Rational, b: Rational) -> (Rational, Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Order-`q` bracket `[S_q, S_{q-1}]` (in increasing order) for the digamma
/// residual. Order one is the classical bracket.
pub fn digamma_bracket(x: &Rational, q: u32) -> (Rational, Rational) {
    assert!((1..=MAX_ORDER).contains(&q));
    ordered(digamma_partial_sum(x, q - 1), digamma_partial_sum(x, q))
}

/// Order-`q` bracket `[T_q, T_{q+1}]` (in increasing order) for the trigamma
/// residual.
pub fn trigamma_bracket(x: &Rational, q: u32) -> (Rational, Rational) {
    assert!((1..MAX_ORDER).contains(&q));
    ordered(trigamma_partial_sum(x, q), trigamma_partial_sum(x, q + 1))
}

/// `|B_{2q}| / (2q x^{2q})`.
pub fn digamma_bracket_width(x: &Rational, q: u32) -> Rational {
    even_bernoulli(q).abs() / (int(2 * q as u64) * num_traits::pow(x.clone(), 2 * q as usize))
}

/// `|B_{2q+2}| / x^{2q+3}`.
pub fn trigamma_bracket_width(x: &Rational, q: u32) -> Rational {
    even_bernoulli(q + 1).abs() / num_traits::pow(x.clone(), 2 * q as usize + 3)
}

#[derive(Clone, Copy)]
enum Kind {
    Digamma,
    Trigamma,
}

/// Raw bracket at a given point.
#[derive(Debug, Clone)]
pub enum Bracket {
    Lemma(LemmaBracket),
    Series(u32),
}

impl Bracket {
    fn eval(&self, kind: Kind, x: &Rational) -> (Rational, Rational) {
        match (self, kind) {
            (Bracket::Lemma(b), Kind::Digamma) => b.digamma(x),
            (Bracket::Lemma(b), Kind::Trigamma) => b.trigamma(x),
            (Bracket::Series(q), Kind::Digamma) => digamma_bracket(x, *q),
            (Bracket::Series(q), Kind::Trigamma) => trigamma_bracket(x, *q),
        }
    }

    fn width(&self, kind: Kind, x: &Rational) -> Rational {
        match (self, kind) {
            (Bracket::Lemma(b), Kind::Digamma) => b.digamma_width(x),
            (Bracket::Lemma(b), Kind::Trigamma) => b.trigamma_width(x),
            (Bracket::Series(q), Kind::Digamma) => digamma_bracket_width(x, *q),
            (Bracket::Series(q), Kind::Trigamma) => trigamma_bracket_width(x, *q),
        }
    }

    fn provenance(&self) -> (Method, Option<u32>) {
        match self {
            Bracket::Lemma(_) | Bracket::Series(1) => (Method::LemmaBracket, None),
            Bracket::Series(q) => (Method::EulerMaclaurin, Some(*q)),
        }
    }
}

fn validate(x: &Rational, target: &Rational) -> Result<()> {
    if !x.is_positive() {
        return Err(Error::invalid(format!("argument must be positive, got {x}")));
    }
    if !target.is_positive() {
        return Err(Error::invalid("target width must be positive"));
    }
    Ok(())
}

/// Smallest `k <= MAX_SHIFT` with `bracket.width(x + k) <= target`, assuming
/// the width is nonincreasing in the argument.
fn smallest_shift(kind: Kind, bracket: &Bracket, x: &Rational, target: &Rational, guess: u64) -> Option<u64> {
    let fits = |k: u64| bracket.width(kind, &(x + int(k))) <= *target;
    let mut k = guess.min(MAX_SHIFT);
    if fits(k) {
        while k > 0 && fits(k - 1) {
            k -= 1;
        }
        return Some(k);
    }
    // exponential search then bisection on (lo, hi]
    let mut lo = k;
    let mut step = 1u64;
    let mut hi = loop {
        let cand = (lo + step).min(MAX_SHIFT);
        if fits(cand) {
            break cand;
        }
        if cand == MAX_SHIFT {
            return None;
        }
        lo = cand;
        step *= 2;
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

/// Natural log of a positive rational as `f64`, from bit lengths.
fn approx_ln(r: &Rational) -> f64 {
    let ln_int = |v: &num_bigint::BigInt| {
        let shift = v.bits().saturating_sub(60);
        (v >> shift as usize).to_f64().unwrap_or(f64::MAX).ln() + shift as f64 * std::f64::consts::LN_2
    };
    ln_int(&r.numer().abs()) - ln_int(r.denom())
}

/// Chooses `(bracket, k)` for the automatic strategy.
fn plan_auto(kind: Kind, x: &Rational, target: &Rational) -> Result<(Bracket, u64)> {
    let ln_t = approx_ln(target);
    let x_f = x.to_f64().unwrap_or(f64::MAX);
    let mut best: Option<(u64, u32, u64)> = None;
    let max_q = match kind {
        Kind::Digamma => MAX_ORDER,
        Kind::Trigamma => MAX_ORDER - 1,
    };
    for q in 1..=max_q {
        // width ~ |B| / X^p: solve for X
        let (b, p, scale) = match kind {
            Kind::Digamma => (even_bernoulli(q), 2 * q, 2.0 * q as f64),
            Kind::Trigamma => (even_bernoulli(q + 1), 2 * q + 3, 1.0),
        };
        let ln_b = approx_ln(&b.abs());
        let ln_x = (ln_b - scale.ln() - ln_t) / p as f64;
        let need = ln_x.exp() - x_f;
        if !need.is_finite() || need > MAX_SHIFT as f64 {
            continue;
        }
        let guess = need.max(0.0).ceil() as u64;
        let cost = guess + 3 * q as u64;
        if best.is_some_and(|(c, _, _)| cost >= c) {
            continue;
        }
        best = Some((cost, q, guess));
    }
    let (_, q, guess) = best.ok_or(Error::ShiftTooLarge(MAX_SHIFT + 1))?;
    let bracket = Bracket::Series(q);
    let k = smallest_shift(kind, &bracket, x, target, guess)
        .ok_or(Error::ShiftTooLarge(MAX_SHIFT + 1))?;
    Ok((bracket, k))
}

fn plan(kind: Kind, x: &Rational, target: &Rational, strategy: &Strategy) -> Result<(Bracket, u64)> {
    match strategy {
        Strategy::Auto => plan_auto(kind, x, target),
        Strategy::Lemma(b) => {
            let bracket = Bracket::Lemma(b.clone());
            let k = smallest_shift(kind, &bracket, x, target, 0)
                .ok_or(Error::ShiftTooLarge(MAX_SHIFT + 1))?;
            Ok((bracket, k))
        }
    }
}

fn check_width(value: &Interval, target: &Rational, bits: u32) -> Result<()> {
    let limit = target * rat(11, 10);
    let w = value.width();
    if w > limit {
        return Err(Error::InsufficientPrecision {
            bits,
            target: crate::realnum::decimal_up(target, 6),
            achieved: crate::realnum::decimal_up(&w, 6),
        });
    }
    Ok(())
}

/// Digamma residual enclosure from an explicit bracket and shift.
pub fn digamma_residual_shifted(x: &Rational, k: u64, bracket: &Bracket, bits: u32) -> Result<PsiEnclosure> {
    if !x.is_positive() {
        return Err(Error::invalid(format!("argument must be positive, got {x}")));
    }
    if k > MAX_SHIFT {
        return Err(Error::ShiftTooLarge(k));
    }
    let anchor = x + int(k);
    let (lo, hi) = bracket.eval(Kind::Digamma, &anchor);
    let sum = shifted_reciprocal_sum(x, k);
    let exact = Interval::from_rational_bounds(&(lo - &sum), &(hi - &sum), bits);
    let value = if k == 0 {
        exact
    } else {
        &exact + &ln_enclosure(&(&anchor / x), bits)?
    };
    let (method, order_q) = bracket.provenance();
    Ok(PsiEnclosure {
        value,
        shift_k: k,
        method,
        order_q,
        anchor,
    })
}

/// Trigamma residual enclosure from an explicit bracket and shift.
pub fn trigamma_residual_shifted(x: &Rational, k: u64, bracket: &Bracket, bits: u32) -> Result<PsiEnclosure> {
    if !x.is_positive() {
        return Err(Error::invalid(format!("argument must be positive, got {x}")));
    }
    if k > MAX_SHIFT {
        return Err(Error::ShiftTooLarge(k));
    }
    let anchor = x + int(k);
    let (lo, hi) = bracket.eval(Kind::Trigamma, &anchor);
    // 1/x - psi'(x+1) = [1/X - psi'(X+1)] + (1/x - 1/X) - sum 1/(x+j)^2
    let shift = x.recip() - anchor.recip() - shifted_reciprocal_square_sum(x, k);
    let value = Interval::from_rational_bounds(&(lo + &shift), &(hi + &shift), bits);
    let (method, order_q) = bracket.provenance();
    Ok(PsiEnclosure {
        value,
        shift_k: k,
        method,
        order_q,
        anchor,
    })
}

/// Encloses `psi(x+1) - ln x` to within `target_width` (plus at most 10%
/// rounding slack).
///
/// ```
/// use harmonic_bounds::exact::{rat, parse_rational};
/// use harmonic_bounds::psi::digamma_residual_enclosure;
/// let e = digamma_residual_enclosure(&rat(1, 1), &parse_rational("1e-10").unwrap(), 128).unwrap();
/// // psi(2) - ln 1 = 1 - gamma
/// assert!(e.value.contains_rational(&parse_rational("0.42278433509846713").unwrap()));
/// ```
pub fn digamma_residual_enclosure(x: &Rational, target_width: &Rational, bits: u32) -> Result<PsiEnclosure> {
    digamma_residual_enclosure_with(x, target_width, bits, &Strategy::Auto)
}

pub fn digamma_residual_enclosure_with(
    x: &Rational,
    target_width: &Rational,
    bits: u32,
    strategy: &Strategy,
) -> Result<PsiEnclosure> {
    validate(x, target_width)?;
    let (bracket, k) = plan(Kind::Digamma, x, target_width, strategy)?;
    let e = digamma_residual_shifted(x, k, &bracket, bits)?;
    check_width(&e.value, target_width, bits)?;
    Ok(e)
}

/// Encloses `1/x - psi'(x+1)` to within `target_width`.
pub fn trigamma_residual_enclosure(x: &Rational, target_width: &Rational, bits: u32) -> Result<PsiEnclosure> {
    trigamma_residual_enclosure_with(x, target_width, bits, &Strategy::Auto)
}

pub fn trigamma_residual_enclosure_with(
    x: &Rational,
    target_width: &Rational,
    bits: u32,
    strategy: &Strategy,
) -> Result<PsiEnclosure> {
    validate(x, target_width)?;
    let (bracket, k) = plan(Kind::Trigamma, x, target_width, strategy)?;
    let e = trigamma_residual_shifted(x, k, &bracket, bits)?;
    check_width(&e.value, target_width, bits)?;
    Ok(e)
}

/// Euler's constant from the Euler–Maclaurin expansion of `H_n`:
///
/// ```text
/// gamma = H_n - ln n - 1/(2n) + sum_{i=1..q-1} B_{2i}/(2i n^{2i}) + R,
/// |R| <= |B_{2q}| / (2q n^{2q})
/// ```
///
/// ```
/// use harmonic_bounds::exact::rat;
/// use harmonic_bounds::psi::euler_gamma_enclosure;
/// let g = euler_gamma_enclosure(1, 1, 64).unwrap();
/// assert!(g.value.contains_rational(&rat(5, 12)) && g.value.contains_rational(&rat(7, 12)));
/// ```
pub fn euler_gamma_enclosure(n: u64, q: u32, bits: u32) -> Result<PsiEnclosure> {
    if n == 0 || q == 0 {
        return Err(Error::invalid("euler_gamma_enclosure needs n >= 1 and q >= 1"));
    }
    if q > MAX_ORDER {
        return Err(Error::invalid(format!("order q must be at most {MAX_ORDER}")));
    }
    let nr = int(n);
    let h = harmonic_exact(n)?;
    let inv2 = (&nr * &nr).recip();
    let mut centre = h - (&nr * rat(2, 1)).recip();
    let mut pow = Rational::one();
    for i in 1..q {
        pow *= &inv2;
        centre += even_bernoulli(i) * &pow / int(2 * i as u64);
    }
    let rem = digamma_bracket_width(&nr, q);
    let exact = Interval::from_rational_bounds(&(&centre - &rem), &(&centre + &rem), bits);
    let value = &exact - &ln_enclosure(&nr, bits)?;
    Ok(PsiEnclosure {
        value,
        shift_k: 0,
        method: Method::EulerMaclaurin,
        order_q: Some(q),
        anchor: nr,
    })
}

/// Base index used when `gamma` is needed at a caller-chosen width.
const GAMMA_BASE_N: u64 = 100;

/// Chooses `(n, q)` so the Euler–Maclaurin enclosure of `gamma` has width
/// at most `target_width`.
pub fn euler_gamma_auto(target_width: &Rational, bits: u32) -> Result<PsiEnclosure> {
    if !target_width.is_positive() {
        return Err(Error::invalid("target width must be positive"));
    }
    let budget = target_width / rat(4, 1);
    let mut n = GAMMA_BASE_N;
    loop {
        let nr = int(n);
        if let Some(q) = (1..=MAX_ORDER).find(|&q| digamma_bracket_width(&nr, q) * rat(2, 1) <= budget) {
            let g = euler_gamma_enclosure(n, q, bits)?;
            check_width(&g.value, target_width, bits)?;
            return Ok(g);
        }
        n *= 2;
        if n > 1 << 20 {
            return Err(Error::invalid("target width too small for the gamma enclosure"));
        }
    }
}

pub fn gamma_digits() -> Rational {
    crate::exact::parse_rational(GAMMA_DIGITS).expect("constant parses")
}
