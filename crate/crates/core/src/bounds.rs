//! Bound families for `H_n - ln n - gamma`, the residual itself, and the
//! sharpness witness `phi`.
//!
//! | family      | lower                     | upper            |
//! |-------------|---------------------------|------------------|
//! | Franel      | `1/(2n) - 1/(8n^2)`       | `1/(2n)`         |
//! | Tóth–Mare   | `1/(2n + 2/5)`            | `1/(2n + 1/3)`   |
//! | sharp       | `1/(2n + 1/(1-gamma) - 2)`| `1/(2n + 1/3)`   |
//!
//! The sharp lower bound depends on `gamma` and is therefore an interval;
//! the other bounds are exact rationals.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{harmonic_exact, int, rat, Rational};
use crate::psi::{digamma_residual_enclosure, digamma_residual_enclosure_with, euler_gamma_auto, Strategy};
use crate::realnum::{ln_enclosure, Interval};

/// Precision for intervals built from exact bound rationals.
pub const BOUND_BITS: u32 = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Franel,
    TothMare,
    Sharp,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "franel" => Ok(Family::Franel),
            "toth_mare" | "toth-mare" | "tm" => Ok(Family::TothMare),
            "sharp" => Ok(Family::Sharp),
            _ => Err(Error::invalid(format!("unknown bound family '{s}'"))),
        }
    }
}

/// Lower and upper bound of one family at one `n`.
#[derive(Debug, Clone, Serialize)]
pub struct BoundPair {
    pub family: Family,
    pub n: u64,
    pub lower: Interval,
    pub upper: Interval,
    /// Exact value of the lower bound when it does not depend on `gamma`.
    #[serde(skip)]
    pub lower_exact: Option<Rational>,
    #[serde(skip)]
    pub upper_exact: Option<Rational>,
    pub lower_strict: bool,
    pub upper_strict: bool,
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    Ok(())
}

fn exact_pair(family: Family, n: u64, lower: Rational, upper: Rational, strict: (bool, bool)) -> BoundPair {
    BoundPair {
        family,
        n,
        lower: Interval::from_rational(&lower, BOUND_BITS),
        upper: Interval::from_rational(&upper, BOUND_BITS),
        lower_exact: Some(lower),
        upper_exact: Some(upper),
        lower_strict: strict.0,
        upper_strict: strict.1,
    }
}

pub fn franel_lower(n: u64) -> Rational {
    let n = int(n);
    (&n * rat(2, 1)).recip() - (&n * &n * rat(8, 1)).recip()
}

pub fn franel_upper(n: u64) -> Rational {
    (int(n) * rat(2, 1)).recip()
}

/// `1/(2n + 2/5)`.
pub fn toth_mare_lower(n: u64) -> Rational {
    (int(n) * rat(2, 1) + rat(2, 5)).recip()
}

/// `1/(2n + 1/3)`, shared by the Tóth–Mare and sharp families.
pub fn sharp_upper(n: u64) -> Rational {
    (int(n) * rat(2, 1) + rat(1, 3)).recip()
}

/// `1/(2n) - 1/(8n^2) < H_n - ln n - gamma < 1/(2n)`.
///
/// ```
/// use harmonic_bounds::bounds::franel_bounds;
/// use harmonic_bounds::exact::rat;
/// let b = franel_bounds(2).unwrap();
/// assert_eq!(b.lower_exact, Some(rat(7, 32)));
/// assert_eq!(b.upper_exact, Some(rat(1, 4)));
/// ```
pub fn franel_bounds(n: u64) -> Result<BoundPair> {
    check_n(n)?;
    Ok(exact_pair(Family::Franel, n, franel_lower(n), franel_upper(n), (true, true)))
}

pub fn toth_mare_bounds(n: u64) -> Result<BoundPair> {
    check_n(n)?;
    Ok(exact_pair(Family::TothMare, n, toth_mare_lower(n), sharp_upper(n), (true, true)))
}

/// The best lower constant `1/(1-gamma) - 2`, enclosed from a `gamma`
/// enclosure.
pub fn sharp_lower_constant(gamma: &Interval) -> Result<Interval> {
    validate_gamma(gamma)?;
    let one = Interval::from_int(1, gamma.bits());
    Ok((&one - gamma).recip()? - Interval::from_int(2, gamma.bits()))
}

fn validate_gamma(gamma: &Interval) -> Result<()> {
    if !gamma.certainly_lt_rational(&Rational::one()) {
        return Err(Error::BadGamma("enclosure must lie below 1".into()));
    }
    if gamma.width() > rat(1, 1000) {
        return Err(Error::BadGamma("enclosure wider than 1e-3".into()));
    }
    Ok(())
}

/// `1/(2n + 1/(1-gamma) - 2) <= H_n - ln n - gamma < 1/(2n + 1/3)`.
pub fn sharp_bounds(n: u64, gamma: &Interval) -> Result<BoundPair> {
    check_n(n)?;
    let c = sharp_lower_constant(gamma)?;
    let lower = sharp_lower_from_constant(n, &c)?;
    let upper = sharp_upper(n);
    Ok(BoundPair {
        family: Family::Sharp,
        n,
        lower,
        upper: Interval::from_rational(&upper, gamma.bits()),
        lower_exact: None,
        upper_exact: Some(upper),
        lower_strict: false,
        upper_strict: true,
    })
}

/// `1/(2n + c)` for an enclosure `c` of the sharp constant.
pub fn sharp_lower_from_constant(n: u64, c: &Interval) -> Result<Interval> {
    (Interval::from_int(2 * n, c.bits()) + c).recip()
}

pub fn bounds_for(family: Family, n: u64, gamma: &Interval) -> Result<BoundPair> {
    match family {
        Family::Franel => franel_bounds(n),
        Family::TothMare => toth_mare_bounds(n),
        Family::Sharp => sharp_bounds(n, gamma),
    }
}

/// Polynomial in `gamma` with rational coefficients, lowest degree first.
type Poly = Vec<Rational>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// The sharp lower bound as a rational function of a symbolic `g`:
/// `1/(2n + 1/(1-g) - 2) = (1 - g) / ((2n-1) - (2n-2) g)`.
pub fn sharp_lower_symbolic(n: u64) -> (Poly, Poly) {
    let num = vec![Rational::one(), -Rational::one()];
    let den = trim(vec![int(2 * n) - int(1), -(int(2 * n) - int(2))]);
    (num, den)
}

/// Checks, as an identity of rational functions in `gamma`, that the sharp
/// lower bound at `n = 1` equals the residual `H_1 - ln 1 - gamma = 1 - gamma`.
pub fn sharp_lower_equality_at_one() -> bool {
    let (num, den) = sharp_lower_symbolic(1);
    let residual: Poly = vec![Rational::one(), -Rational::one()];
    // num/den == residual/1  <=>  num * 1 == residual * den
    trim(num) == poly_mul(&residual, &den)
}

/// `H_n - ln n - gamma` with `gamma` supplied by the caller.
pub fn residual_with_gamma(n: u64, gamma: &Interval, bits: u32) -> Result<Interval> {
    check_n(n)?;
    let h = Interval::from_rational(&harmonic_exact(n)?, bits);
    Ok(&(&h - &ln_enclosure(&int(n), bits)?) - gamma)
}

/// Encloses `H_n - ln n - gamma` with width at most `target_width`.
///
/// ```
/// use harmonic_bounds::bounds::residual;
/// use harmonic_bounds::exact::parse_rational;
/// let r = residual(1, &parse_rational("1e-30").unwrap(), 192).unwrap();
/// // 1 - gamma
/// assert!(r.contains_rational(&parse_rational("0.422784335098467139393487909917597").unwrap()));
/// ```
pub fn residual(n: u64, target_width: &Rational, bits: u32) -> Result<Interval> {
    check_n(n)?;
    if !target_width.is_positive() {
        return Err(Error::invalid("target width must be positive"));
    }
    let gamma = euler_gamma_auto(&(target_width / rat(2, 1)), bits)?;
    let r = residual_with_gamma(n, &gamma.value, bits)?;
    if r.width() > *target_width {
        return Err(Error::InsufficientPrecision {
            bits,
            target: crate::realnum::decimal_up(target_width, 6),
            achieved: crate::realnum::decimal_up(&r.width(), 6),
        });
    }
    Ok(r)
}

/// `phi(x) = 1/(psi(x+1) - ln x) - 2x`.
///
/// ```
/// use harmonic_bounds::bounds::phi;
/// use harmonic_bounds::exact::{parse_rational, rat};
/// use harmonic_bounds::realnum::matches_printed;
/// let p = phi(&rat(2, 1), &parse_rational("1e-18").unwrap(), 128).unwrap();
/// assert_eq!(matches_printed(&p, "0.35469600731465752"), Some(true));
/// ```
pub fn phi(x: &Rational, target_width: &Rational, bits: u32) -> Result<Interval> {
    phi_with(x, target_width, bits, &Strategy::Auto)
}

/// [`phi`] with an explicit bracket strategy.
pub fn phi_with(x: &Rational, target_width: &Rational, bits: u32, strategy: &Strategy) -> Result<Interval> {
    if !x.is_positive() {
        return Err(Error::invalid(format!("phi needs x > 0, got {x}")));
    }
    if !target_width.is_positive() {
        return Err(Error::invalid("target width must be positive"));
    }
    // coarse pass to size the reciprocal's sensitivity
    let mut coarse_w = rat(1, 1 << 12) * x.recip().min(Rational::one());
    let coarse = loop {
        let d = digamma_residual_enclosure_with(x, &coarse_w, bits, strategy)?;
        if d.value.certainly_positive() {
            break d.value;
        }
        if !d.value.hi_rational().is_positive() {
            return Err(Error::Internal(format!("digamma residual at {x} is not positive")));
        }
        coarse_w /= rat(16, 1);
    };
    let d_lo = coarse.lo_rational();
    let mut inner_w = target_width * &d_lo * &d_lo / rat(2, 1);
    for _ in 0..4 {
        let d = digamma_residual_enclosure_with(x, &inner_w, bits, strategy)?.value;
        let p = &d.recip()? - &Interval::from_rational(&(x * rat(2, 1)), bits);
        if p.width() <= *target_width {
            return Ok(p);
        }
        inner_w /= rat(4, 1);
    }
    Err(Error::InsufficientPrecision {
        bits,
        target: crate::realnum::decimal_up(target_width, 6),
        achieved: "unreached after 4 refinements".into(),
    })
}

/// `phi` at a positive integer via the standard strategy.
pub fn phi_at(n: u64, target_width: &Rational, bits: u32) -> Result<Interval> {
    phi(&int(n), target_width, bits)
}

/// `phi(n)` from an enclosure of the residual at `n`.
pub fn phi_from_residual(n: u64, residual: &Interval) -> Result<Interval> {
    Ok(&residual.recip()? - &Interval::from_int(2 * n, residual.bits()))
}

/// The digamma residual at an integer equals `H_n - ln n - gamma`; this route
/// needs no enclosure of `gamma`.
pub fn residual_via_digamma(n: u64, target_width: &Rational, bits: u32) -> Result<Interval> {
    check_n(n)?;
    Ok(digamma_residual_enclosure(&int(n), target_width, bits)?.value)
}

/// One row of a bounds table.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub n: u64,
    pub residual: Interval,
    pub franel: BoundPair,
    pub toth_mare: BoundPair,
    pub sharp: BoundPair,
    pub phi: Interval,
}

pub fn table_row(n: u64, gamma: &Interval, bits: u32) -> Result<TableRow> {
    let residual = residual_with_gamma(n, gamma, bits)?;
    let phi = phi_from_residual(n, &residual)?;
    Ok(TableRow {
        n,
        franel: franel_bounds(n)?,
        toth_mare: toth_mare_bounds(n)?,
        sharp: sharp_bounds(n, gamma)?,
        residual,
        phi,
    })
}
