use harmonic_bounds::exact::{
    bernoulli_number, bernoulli_numbers, bernoulli_polynomial, format_rational, harmonic_exact, harmonic_exact_fold,
    int, parse_rational, rat, shifted_reciprocal_sum, Rational,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Akiyama–Tanigawa; yields B_1 = +1/2.
fn akiyama_tanigawa(m: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(m + 1);
    let mut a: Vec<Rational> = Vec::with_capacity(m + 1);
    for i in 0..=m {
        a.push(Rational::new(BigInt::one(), BigInt::from(i + 1)));
        for j in (1..=i).rev() {
            a[j - 1] = Rational::from_integer(BigInt::from(j)) * (&a[j - 1] - &a[j]);
        }
        out.push(a[0].clone());
    }
    out
}

#[test]
fn bernoulli_matches_akiyama_tanigawa() {
    let ours = bernoulli_numbers(60);
    let oracle = akiyama_tanigawa(60);
    for (m, (b, o)) in ours.iter().zip(&oracle).enumerate() {
        let expected = if m == 1 { -o.clone() } else { o.clone() };
        assert_eq!(*b, expected, "B_{m}");
    }
}

#[test]
fn bernoulli_reference_values() {
    assert_eq!(bernoulli_number(12), rat(-691, 2730));
    assert_eq!(bernoulli_number(20), rat(-174611, 330));
    assert!(bernoulli_number(31).is_zero());
}

#[test]
fn harmonic_reference_values() {
    assert_eq!(harmonic_exact(10).unwrap(), rat(7381, 2520));
    assert!(harmonic_exact(0).is_err());
    let h30 = parse_rational("9304682830147/2329089562800").unwrap();
    assert_eq!(harmonic_exact(30).unwrap(), h30);
}

proptest! {
    #[test]
    fn harmonic_routes_agree(n in 1u64..600) {
        prop_assert_eq!(harmonic_exact(n).unwrap(), harmonic_exact_fold(n).unwrap());
    }

    #[test]
    fn harmonic_step(n in 2u64..2000) {
        prop_assert_eq!(harmonic_exact(n).unwrap() - harmonic_exact(n - 1).unwrap(), int(n).recip());
    }

    #[test]
    fn shifted_sum_at_one_is_harmonic(k in 1u64..300) {
        // sum_{j=1..k} 1/(1+j) = H_{k+1} - 1
        prop_assert_eq!(shifted_reciprocal_sum(&int(1), k), harmonic_exact(k + 1).unwrap() - int(1));
    }

    #[test]
    fn bernoulli_polynomial_difference(m in 1usize..25, p in -50i64..50, q in 1i64..20) {
        // B_m(x + 1) - B_m(x) = m x^(m-1)
        let x = rat(p, q);
        let lhs = bernoulli_polynomial(m, &(&x + rat(1, 1))) - bernoulli_polynomial(m, &x);
        prop_assert_eq!(lhs, int(m as u64) * num_traits::pow(x, m - 1));
    }

    #[test]
    fn rational_round_trip(p in any::<i64>(), q in 1i64..i64::MAX) {
        let r = rat(p, q);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn decimal_parse_is_exact(int_part in 0u32..100000, frac in 0u32..1000000) {
        let s = format!("{int_part}.{frac:06}");
        let expected = rat(int_part as i64 * 1_000_000 + frac as i64, 1_000_000);
        prop_assert_eq!(parse_rational(&s).unwrap(), expected);
    }
}
