use harmonic_bounds::exact::{parse_rational, rat, Rational};
use harmonic_bounds::psi::LemmaBracket;
use harmonic_bounds::verify::{
    integrand_values, verify_family_ordering, verify_integrand_signs, verify_lemma_brackets, verify_phi_monotone,
    verify_theorem, SweepOptions, Status,
};
use proptest::prelude::*;

fn w(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn jobs(n: usize) -> SweepOptions {
    SweepOptions { bits: 192, jobs: n }
}

#[test]
fn theorem_report_independent_of_jobs() {
    let a = verify_theorem(1, 9000, &w("1e-20"), &jobs(1)).unwrap();
    let b = verify_theorem(1, 9000, &w("1e-20"), &jobs(3)).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.status(), Status::Pass);
    assert_eq!(a.checked, 9000);
}

#[test]
fn monotone_report_independent_of_jobs() {
    let a = verify_phi_monotone(100, 900, &w("1e-20"), &jobs(1)).unwrap();
    let b = verify_phi_monotone(100, 900, &w("1e-20"), &jobs(4)).unwrap();
    assert_eq!(a, b);
    assert!(a.passed());
}

#[test]
fn bad_ranges_are_rejected() {
    let opts = SweepOptions::default();
    assert!(verify_theorem(0, 5, &w("1e-20"), &opts).is_err());
    assert!(verify_theorem(6, 5, &w("1e-20"), &opts).is_err());
    assert!(verify_theorem(1, 5, &rat(0, 1), &opts).is_err());
    assert!(verify_phi_monotone(3, 2, &w("1e-20"), &opts).is_err());
    assert!(verify_family_ordering(0, 1, &opts).is_err());
}

#[test]
fn too_coarse_precision_is_an_error_not_a_pass() {
    assert!(verify_theorem(1, 100, &w("1e-20"), &SweepOptions { bits: 40, jobs: 1 }).is_err());
}

#[test]
fn trigamma_mutations_are_caught() {
    let xs: Vec<Rational> = (1..=40).map(|i| rat(5 * i, 2)).collect();
    let opts = SweepOptions::default();
    assert!(verify_lemma_brackets(&xs, &LemmaBracket::standard(), &opts).unwrap().passed());
    for mutant in [
        LemmaBracket { trigamma_cubic: rat(1, 5), ..LemmaBracket::standard() },
        LemmaBracket { trigamma_quintic: rat(1, 20), ..LemmaBracket::standard() },
        LemmaBracket { trigamma_quintic: rat(1, 60), ..LemmaBracket::standard() },
        LemmaBracket { digamma_quadratic: rat(1, 14), ..LemmaBracket::standard() },
    ] {
        let r = verify_lemma_brackets(&xs, &mutant, &opts).unwrap();
        assert_eq!(r.status(), Status::Fail, "{mutant:?}");
    }
}

#[test]
fn integrand_grid() {
    let ts: Vec<f64> = (1..=500).map(|i| i as f64 / 10.0).collect();
    let r = verify_integrand_signs(&ts).unwrap();
    assert!(r.passed());
    assert!(!r.certified && r.uses_float);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn theorem_holds_on_random_windows(start in 1u64..40_000, len in 0u64..50) {
        let r = verify_theorem(start, start + len, &w("1e-20"), &jobs(1)).unwrap();
        prop_assert!(r.passed(), "{}", r.summary());
        prop_assert_eq!(r.checked, len + 1);
    }

    #[test]
    fn split_sweeps_merge_to_whole(a in 1u64..3000, mid in 0u64..300, len in 1u64..300) {
        let whole = verify_theorem(a, a + mid + len, &w("1e-20"), &jobs(1)).unwrap();
        let left = verify_theorem(a, a + mid, &w("1e-20"), &jobs(1)).unwrap();
        let right = verify_theorem(a + mid + 1, a + mid + len, &w("1e-20"), &jobs(1)).unwrap();
        prop_assert_eq!(whole.checked, left.checked + right.checked);
        prop_assert_eq!(whole.passed(), left.passed() && right.passed());
    }

    #[test]
    fn integrand_signs_hold(t in 1e-6f64..50.0) {
        let v = integrand_values(t);
        prop_assert!(v[0] >= 0.0 && v[1] <= 0.0 && v[2] >= 0.0 && v[3] <= 0.0, "{:?}", v);
    }
}
