use num_bigint::BigInt;
use proptest::prelude::*;
use supercong_core::exact::{
    binomial, central_half_ratio, central_half_ratios, congruent_mod_power, factorial, harmonic2, harmonic2_table,
    is_prime, odd_harmonic2, padic_valuation, primes_in, rising_factorial,
};
use supercong_core::hypergeometric::{gamma_ratio_value, GammaRatioExpr};
use supercong_core::series::{ps_invert, ps_mul};
use supercong_core::{Rational, TruncSeries, Valuation};

const SMALL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

fn rational() -> impl Strategy<Value = Rational> {
    (-2000i64..2000, 1i64..2000).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |x| !x.is_zero())
}

fn series(order: usize) -> impl Strategy<Value = TruncSeries> {
    proptest::collection::vec(rational(), order + 1).prop_map(move |c| TruncSeries::new(c, order))
}

proptest! {
    #[test]
    fn valuation_is_additive(a in nonzero_rational(), b in nonzero_rational(), i in 0usize..6) {
        let p = SMALL_PRIMES[i];
        let va = padic_valuation(&a, p).unwrap();
        let vb = padic_valuation(&b, p).unwrap();
        prop_assert_eq!(padic_valuation(&(&a * &b), p).unwrap(), va + vb);
    }

    #[test]
    fn valuation_is_ultrametric(a in rational(), b in rational(), i in 0usize..6) {
        let p = SMALL_PRIMES[i];
        let va = padic_valuation(&a, p).unwrap();
        let vb = padic_valuation(&b, p).unwrap();
        let vs = padic_valuation(&(&a + &b), p).unwrap();
        prop_assert!(vs >= va.min(vb));
        if va != vb {
            prop_assert_eq!(vs, va.min(vb));
        }
    }

    #[test]
    fn congruence_is_an_equivalence(a in rational(), b in rational(), c in rational(), i in 0usize..6, n in 0u32..5) {
        let p = SMALL_PRIMES[i];
        prop_assert!(congruent_mod_power(&a, &a, p, n).unwrap());
        prop_assert_eq!(congruent_mod_power(&a, &b, p, n).unwrap(), congruent_mod_power(&b, &a, p, n).unwrap());
        if congruent_mod_power(&a, &b, p, n).unwrap() && congruent_mod_power(&b, &c, p, n).unwrap() {
            prop_assert!(congruent_mod_power(&a, &c, p, n).unwrap());
        }
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn series_product_is_commutative_and_associative(a in series(4), b in series(4), c in series(4)) {
        prop_assert_eq!(ps_mul(&a, &b), ps_mul(&b, &a));
        prop_assert_eq!(ps_mul(&ps_mul(&a, &b), &c), ps_mul(&a, &ps_mul(&b, &c)));
    }

    #[test]
    fn series_inverse_is_an_involution(a in series(4)) {
        prop_assume!(!a.constant_term().is_zero());
        let inv = ps_invert(&a).unwrap();
        prop_assert_eq!(ps_invert(&inv).unwrap(), a.clone());
        prop_assert_eq!(ps_mul(&a, &inv), TruncSeries::one(4));
    }

    #[test]
    fn linear_factor_division_undoes_multiplication(a in series(4), b in nonzero_rational(), s in rational()) {
        let mut t = a.clone();
        t.mul_linear(&b, &s);
        t.div_linear(&b, &s).unwrap();
        prop_assert_eq!(t, a);
    }

    #[test]
    fn gamma_shift_is_pochhammer(num in 1i64..60, den in 2i64..12, n in 0u64..12) {
        let a = Rational::new(num, den);
        prop_assume!(!a.is_integer());
        let g = GammaRatioExpr::new(vec![&a + Rational::from(n)], vec![a.clone()]);
        prop_assert_eq!(gamma_ratio_value(&g).unwrap(), rising_factorial(&a, n));
    }
}

#[test]
fn central_half_ratio_three_routes() {
    let table = central_half_ratios(200);
    let half = Rational::new(1, 2);
    for k in 0..=200u64 {
        let by_binomial = Rational::new(binomial(2 * k, k), BigInt::from(4).pow(k as u32));
        let by_pochhammer = rising_factorial(&half, k) / Rational::from(factorial(k));
        assert_eq!(table[k as usize], by_binomial, "k={k}");
        assert_eq!(by_pochhammer, by_binomial, "k={k}");
        if k <= 40 {
            assert_eq!(central_half_ratio(k), by_binomial);
        }
    }
}

#[test]
fn second_order_harmonic_lemmas_below_200() {
    for p in primes_in(5, 199) {
        let h = harmonic2_table(p - 1);
        let n = ((p - 1) / 2) as usize;
        assert!(padic_valuation(&h[n], p).unwrap().at_least(1), "p={p}");
        assert!(padic_valuation(&odd_harmonic2(n as u64), p).unwrap().at_least(1), "p={p}");
        for k in 1..(p - 1) as usize {
            let s = &h[k] + &h[(p - 1) as usize - k];
            assert!(padic_valuation(&s, p).unwrap().at_least(1), "p={p} k={k}");
        }
        // full sum H_(p-1) vanishes modulo p^1 as well
        assert!(padic_valuation(&h[(p - 1) as usize], p).unwrap().at_least(1));
    }
}

#[test]
fn odd_and_even_harmonic_split() {
    // H_(2k) = O_k + H_k / 4
    for k in 0..=60u64 {
        assert_eq!(harmonic2(2 * k), odd_harmonic2(k) + harmonic2(k) / Rational::from(4));
    }
}

#[test]
fn zero_has_infinite_valuation_and_primes_are_primes() {
    assert_eq!(padic_valuation(&Rational::zero(), 7).unwrap(), Valuation::Infinite);
    assert!(padic_valuation(&Rational::one(), 4).is_err());
    let ps = primes_in(1, 100);
    assert_eq!(ps.len(), 25);
    assert!(ps.iter().all(|&p| is_prime(p)));
}
