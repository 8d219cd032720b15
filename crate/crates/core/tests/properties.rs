use proptest::prelude::*;
use yzq_core::rational::{frac, int, is_normalized, parse_canonical, to_canonical, Rational};
use yzq_core::PowerSeries;

const CASES: u32 = 1000;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=8).prop_map(|(n, d)| frac(n, d))
}

fn series_of(order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(rational(), order + 1).prop_map(PowerSeries::new)
}

fn pair() -> impl Strategy<Value = (PowerSeries, PowerSeries)> {
    (0usize..=32).prop_flat_map(|n| (series_of(n), series_of(n)))
}

fn triple() -> impl Strategy<Value = (PowerSeries, PowerSeries, PowerSeries)> {
    (0usize..=32).prop_flat_map(|n| (series_of(n), series_of(n), series_of(n)))
}

fn unit_pair() -> impl Strategy<Value = (PowerSeries, PowerSeries)> {
    (0usize..=32).prop_flat_map(|n| {
        let unit = (rational().prop_filter("nonzero", |c| *c != int(0)), series_of(n)).prop_map(|(c, mut s)| {
            let mut v = s.clone().into_coefficients();
            v[0] = c;
            s = PowerSeries::new(v);
            s
        });
        (series_of(n), unit)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn addition_is_an_abelian_group((a, b, c) in triple()) {
        let n = a.order();
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &PowerSeries::zero(n), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &(-&a), PowerSeries::zero(n));
    }

    #[test]
    fn multiplication_is_commutative_associative_distributive((a, b, c) in triple()) {
        let n = a.order();
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &PowerSeries::one(n), a.clone());
    }

    #[test]
    fn theta_is_a_derivation((a, b) in pair()) {
        let lhs = (&a * &b).theta();
        let rhs = &(&a.theta() * &b) + &(&a * &b.theta());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!((&a + &b).theta(), &a.theta() + &b.theta());
    }

    #[test]
    fn composition_is_a_ring_homomorphism((a, b) in pair(), m in 1usize..=4) {
        let am = a.compose_monomial(m);
        let bm = b.compose_monomial(m);
        prop_assert_eq!(am.order(), m * a.order());
        prop_assert_eq!((&a * &b).compose_monomial(m), &am * &bm);
        prop_assert_eq!((&a + &b).compose_monomial(m), &am + &bm);
        // theta(f(t^m)) = m (theta f)(t^m)
        prop_assert_eq!(am.theta(), a.theta().compose_monomial(m).scale(&int(m as i64)));
    }

    #[test]
    fn even_odd_split_laws((a, b) in pair()) {
        let (e, o) = a.even_odd_split();
        prop_assert_eq!(&e + &o, a.clone());
        prop_assert_eq!(e.negate_variable(), e.clone());
        prop_assert_eq!(o.negate_variable(), -&o);
        for k in 0..=a.order() {
            prop_assert!(k % 2 == 1 || o.coeff(k) == &int(0));
            prop_assert!(k % 2 == 0 || e.coeff(k) == &int(0));
        }
        let (be, bo) = b.even_odd_split();
        let (pe, po) = (&a * &b).even_odd_split();
        prop_assert_eq!(pe, &(&e * &be) + &(&o * &bo));
        prop_assert_eq!(po, &(&e * &bo) + &(&o * &be));
    }

    #[test]
    fn division_inverts_multiplication((a, u) in unit_pair()) {
        prop_assert_eq!((&a * &u).div(&u).unwrap(), a.clone());
        let q = a.div(&u).unwrap();
        prop_assert_eq!(&q * &u, a.clone());
        let inv = u.pow(-1).unwrap();
        prop_assert_eq!(&inv * &u, PowerSeries::one(u.order()));
    }

    #[test]
    fn powers_add_exponents(a in (0usize..=16).prop_flat_map(series_of), m in 0i64..=4, k in 0i64..=4) {
        let lhs = a.pow(m + k).unwrap();
        let rhs = &a.pow(m).unwrap() * &a.pow(k).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coefficients_stay_normalized((a, b) in pair()) {
        for s in [&a * &b, &a - &b, a.theta(), a.compose_monomial(2)] {
            for c in s.coefficients() {
                prop_assert!(is_normalized(c));
                prop_assert_eq!(parse_canonical(&to_canonical(c)).unwrap(), c.clone());
            }
        }
    }
}
