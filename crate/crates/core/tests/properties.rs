use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use modinv::exact::{
    poly_exact_div, poly_from_json, poly_to_json, ratfun_from_json, ratfun_to_json, series_expand,
    BigRat, MPoly, RatFun, Ring, TruncSeries,
};
use modinv::grassmann::{
    grassmann_e, grassmann_poincare, pp_pair_e_split, projective_e, GrassmannSpec,
};

fn coeff() -> impl Strategy<Value = BigRat> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn uv_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0u32..4, 0u32..4), coeff()), 0..5)
        .prop_map(|ts| MPoly::from_terms(Ring::Uv, ts.into_iter().map(|((a, b), c)| ([a, b], c))))
}

fn nonzero_uv_poly() -> impl Strategy<Value = MPoly> {
    uv_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn t_poly(max_deg: u32) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0u32..=max_deg, coeff()), 0..5)
        .prop_map(|ts| MPoly::from_terms(Ring::T, ts.into_iter().map(|(a, c)| ([a, 0], c))))
}

/// Univariate fraction with a nonzero constant term in the denominator.
fn t_fraction() -> impl Strategy<Value = RatFun> {
    let tail = prop::collection::vec((1u32..=3, coeff()), 0..4)
        .prop_map(|ts| MPoly::from_terms(Ring::T, ts.into_iter().map(|(a, c)| ([a, 0], c))));
    (t_poly(4), tail, 1i64..=3)
        .prop_map(|(num, tail, c)| RatFun::new(num, &tail + &MPoly::from_int(Ring::T, c)))
}

fn uv_fraction() -> impl Strategy<Value = RatFun> {
    (uv_poly(), nonzero_uv_poly()).prop_map(|(n, d)| RatFun::new(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(a in uv_poly(), b in uv_poly(), c in uv_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &MPoly::one(Ring::Uv), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_product(a in uv_poly(), b in nonzero_uv_poly()) {
        prop_assert_eq!(poly_exact_div(&(&a * &b), &b).unwrap(), a);
    }

    #[test]
    fn fraction_equality_is_an_equivalence(
        f in uv_fraction(), k in nonzero_uv_poly(), m in nonzero_uv_poly()
    ) {
        let g = RatFun::new(f.num() * &k, f.den() * &k);
        let h = RatFun::new(g.num() * &m, g.den() * &m);
        prop_assert!(f.equals(&f));
        prop_assert!(f.equals(&g) && g.equals(&f));
        prop_assert!(g.equals(&h) && f.equals(&h));
    }

    #[test]
    fn fraction_addition_laws(f in uv_fraction(), g in uv_fraction(), h in uv_fraction()) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
    }

    #[test]
    fn series_of_product_is_convolution(f in t_fraction(), g in t_fraction(), n in 0usize..12) {
        let prod = &f * &g;
        let lhs = series_expand(&prod, n).unwrap();
        let rhs: TruncSeries = &series_expand(&f, n).unwrap() * &series_expand(&g, n).unwrap();
        prop_assert_eq!(lhs.coeffs(), rhs.coeffs());
    }

    #[test]
    fn diagonal_limit_ignores_common_factors(f in uv_fraction(), k in nonzero_uv_poly()) {
        prop_assume!(!k.diagonal().is_zero());
        let Ok(base) = f.substitute_diagonal() else {
            return Ok(());
        };
        let base = base.limit_at_one().ok();
        let g = RatFun::new(f.num() * &k, f.den() * &k);
        // a common factor vanishing at the limit point must cancel as well
        let z = &MPoly::u() - &MPoly::one(Ring::Uv);
        let h = RatFun::new(f.num() * &z, f.den() * &z);
        for other in [g, h] {
            prop_assert_eq!(&other.substitute_diagonal().unwrap().limit_at_one().ok(), &base);
        }
    }

    #[test]
    fn json_round_trip(p in uv_poly(), f in uv_fraction()) {
        prop_assert_eq!(poly_from_json(&poly_to_json(&p), Ring::Uv).unwrap(), p);
        prop_assert!(ratfun_from_json(&ratfun_to_json(&f), Ring::Uv).unwrap().equals(&f));
    }
}

fn binomial(n: u32, k: u32) -> BigRat {
    let mut acc = BigRat::one();
    for i in 0..k {
        acc = acc * BigRat::from_integer(BigInt::from(n - i))
            / BigRat::from_integer(BigInt::from(i + 1));
    }
    acc
}

#[test]
fn grassmann_duality_and_euler_characteristic() {
    for n in 1..=12 {
        for k in 1..=n {
            let spec = GrassmannSpec::new(k, n).unwrap();
            let p = grassmann_poincare(spec).unwrap();
            if k < n {
                let dual = grassmann_poincare(GrassmannSpec::new(n - k, n).unwrap()).unwrap();
                assert_eq!(p, dual, "Gr({k},{n})");
            }
            assert_eq!(
                p.eval1(&BigRat::one()),
                binomial(n, k),
                "Gr({k},{n}) at t=1"
            );
            assert_eq!(p.degree(), Some(2 * spec.dim()));
            assert_eq!(
                p.even_t_to_uv(),
                Some(grassmann_e(spec).unwrap()),
                "Gr({k},{n})"
            );
        }
    }
}

#[test]
fn symmetric_square_split() {
    for g in 3..=12u32 {
        let (plus, minus) = pp_pair_e_split(g).unwrap();
        let p = projective_e(g as i64 - 2);
        assert_eq!(&plus + &minus, RatFun::from_poly(&p * &p), "g={g}");
        assert!(minus.to_poly().unwrap().constant_term().is_zero());
    }
}
