use harmonic_bounds::bounds::{phi_with, residual, residual_via_digamma};
use harmonic_bounds::exact::{int, parse_rational, rat, Rational};
use harmonic_bounds::psi::{
    digamma_bracket, digamma_partial_sum, digamma_residual_enclosure, digamma_residual_enclosure_with, euler_gamma_enclosure,
    trigamma_bracket, trigamma_residual_enclosure, LemmaBracket, Method, Strategy,
};
use harmonic_bounds::realnum::matches_printed;
use harmonic_bounds::Interval;
use harmonic_bounds::verify::{verify_phi_derivative_sign, verify_phi_monotone_with, SweepOptions};
use proptest::prelude::*;

fn w(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

#[test]
fn digamma_route_agrees_with_gamma_route() {
    // psi(n+1) - ln n with no gamma, against H_n - ln n - gamma with gamma enclosed separately
    let width = w("1e-25");
    for n in 1..200 {
        let a = residual_via_digamma(n, &width, 160).unwrap();
        let b = residual(n, &width, 160).unwrap();
        assert!(a.overlaps(&b), "n = {n}: {a} vs {b}");
    }
}

#[test]
fn trigamma_at_one() {
    // 1 - psi'(2) = 2 - pi^2/6
    let t = trigamma_residual_enclosure(&int(1), &w("1e-24"), 160).unwrap();
    assert_eq!(matches_printed(&t.value, "0.355065933151773563527584"), Some(true), "{}", t.value);
}

#[test]
fn digamma_at_half() {
    // psi(3/2) - ln(1/2) = 2 - gamma - ln 2
    let d = digamma_residual_enclosure(&rat(1, 2), &w("1e-24"), 160).unwrap();
    assert_eq!(matches_printed(&d.value, "0.729637154538521829976255"), Some(true), "{}", d.value);
}

#[test]
fn gamma_widths_shrink_and_all_intersect() {
    let mut all = Vec::new();
    for q in 1..=6u32 {
        let mut prev: Option<Rational> = None;
        for n in [1u64, 2, 5, 10, 20, 50, 100] {
            let g = euler_gamma_enclosure(n, q, 256).unwrap();
            assert_eq!(g.method, Method::EulerMaclaurin);
            let width = g.value.width();
            if let Some(p) = &prev {
                assert!(width < *p, "n = {n}, q = {q}");
            }
            prev = Some(width);
            assert_eq!(matches_printed(&g.value, "0.57721566490153286"), Some(true));
            all.push(g.value);
        }
    }
    for a in &all {
        for b in &all {
            assert!(a.overlaps(b));
        }
    }
}

#[test]
fn lemma_mutation_removing_quadratic_term_breaks_monotonicity() {
    let mutant = LemmaBracket {
        digamma_quadratic: rat(0, 1),
        ..LemmaBracket::standard()
    };
    let r = verify_phi_monotone_with(1, 20, &w("1e-6"), &SweepOptions::default(), &Strategy::Lemma(mutant));
    let failed = match r {
        Ok(r) => !r.passed(),
        Err(_) => true,
    };
    assert!(failed);
    let sound = verify_phi_monotone_with(1, 20, &w("1e-6"), &SweepOptions::default(), &Strategy::Lemma(LemmaBracket::standard()))
        .unwrap();
    assert!(sound.passed(), "{}", sound.summary());
}

#[test]
fn derivative_sign_suite() {
    let xs: Vec<Rational> = (0..30).map(|i| rat(49 + 7 * i, 20)).collect();
    let r = verify_phi_derivative_sign(&xs, &w("1e-30"), &SweepOptions::default()).unwrap();
    assert!(r.passed(), "{}", r.summary());
    assert!(verify_phi_derivative_sign(&[rat(12, 5)], &w("1e-30"), &SweepOptions::default()).is_err());
}

fn positive() -> impl proptest::strategy::Strategy<Value = Rational> {
    use proptest::strategy::Strategy as _;
    (1i64..200_000, 1i64..1000).prop_map(|(p, q)| rat(p, q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_order_brackets_the_value(x in positive(), q in 1u32..12) {
        // consecutive orders sit on alternating sides and share an endpoint
        let d = digamma_residual_enclosure(&x, &w("1e-40"), 256).unwrap().value;
        // the value can be closer to an endpoint than the reference width
        let inside = |v: &Interval, lo: &Rational, hi: &Rational| {
            let s = v.width();
            v.lo_rational() <= *hi && v.hi_rational() >= *lo && v.lo_rational() >= lo - &s && v.hi_rational() <= hi + &s
        };
        let (lo, hi) = digamma_bracket(&x, q);
        prop_assert!(inside(&d, &lo, &hi));
        let (lo2, hi2) = digamma_bracket(&x, q + 1);
        let shared = digamma_partial_sum(&x, q);
        prop_assert!((lo == shared || hi == shared) && (lo2 == shared || hi2 == shared));
        let t = trigamma_residual_enclosure(&x, &w("1e-40"), 256).unwrap().value;
        let (lo, hi) = trigamma_bracket(&x, q);
        prop_assert!(inside(&t, &lo, &hi));
    }

    #[test]
    fn enclosures_sit_in_raw_brackets(x in positive()) {
        let target = w("1e-22");
        let slack = &target * rat(11, 10);
        let d = digamma_residual_enclosure(&x, &target, 160).unwrap();
        prop_assert!(d.value.width() <= slack);
        let t = trigamma_residual_enclosure(&x, &target, 160).unwrap();
        for (v, (lo, hi)) in [
            (&d.value, LemmaBracket::standard().digamma(&x)),
            (&t.value, LemmaBracket::standard().trigamma(&x)),
        ] {
            // the enclosure may stick out of a bracket narrower than itself
            prop_assert!(v.lo_rational() >= &lo - &slack && v.hi_rational() <= &hi + &slack);
        }
    }

    #[test]
    fn strategies_agree(x in positive()) {
        let auto = digamma_residual_enclosure(&x, &w("1e-9"), 128).unwrap();
        let lemma = digamma_residual_enclosure_with(&x, &w("1e-9"), 128, &Strategy::Lemma(LemmaBracket::standard()));
        if let Ok(lemma) = lemma {
            prop_assert!(auto.value.overlaps(&lemma.value));
        }
    }

    #[test]
    fn phi_between_third_and_phi_one(p in 1i64..100_000, q in 1i64..50) {
        let x = rat(p, q);
        let v = phi_with(&x, &w("1e-12"), 128, &Strategy::Auto).unwrap();
        prop_assert!(v.certainly_gt_rational(&rat(1, 3)));
        if x >= int(1) {
            prop_assert!(v.certainly_lt_rational(&w("0.3652721186254416")));
        }
    }
}
