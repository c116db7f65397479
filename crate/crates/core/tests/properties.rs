use modrecip::gaussian::{gaussian_divides, gaussian_divmod, gaussian_inverse};
use modrecip::parse::parse_integer;
use modrecip::recip::{inverse_via_reciprocity_counted, solve_diophantine};
use modrecip::{
    extended_gcd, floor_div, floor_mod, mod_inverse, reciprocity_check, Error, GaussianInteger,
    Integer,
};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn big() -> impl Strategy<Value = Integer> {
    prop::collection::vec(any::<u32>(), 1..8).prop_flat_map(|digits| {
        any::<bool>().prop_map(move |negative| {
            let magnitude = Integer::from(num_bigint::BigUint::new(digits.clone()));
            if negative {
                -magnitude
            } else {
                magnitude
            }
        })
    })
}

fn nonzero_big() -> impl Strategy<Value = Integer> {
    big().prop_filter("nonzero", |v| !v.is_zero())
}

fn small_gaussian() -> impl Strategy<Value = GaussianInteger> {
    (-1000i64..=1000, -1000i64..=1000).prop_map(|(re, im)| GaussianInteger::new(re, im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn division_law(a in big(), m in nonzero_big()) {
        let q = floor_div(&a, &m).unwrap();
        let r = floor_mod(&a, &m).unwrap();
        prop_assert_eq!(&m * &q + &r, a);
        if m.is_positive() {
            prop_assert!(!r.is_negative() && r < m);
        } else {
            prop_assert!(!r.is_positive() && r > m);
        }
    }

    #[test]
    fn bezout_certificate(a in big(), b in nonzero_big()) {
        let (g, x, y) = extended_gcd(&a, &b).unwrap();
        prop_assert!(g.is_positive());
        prop_assert_eq!(&a * &x + &b * &y, g.clone());
        prop_assert_eq!(g, a.gcd(&b));
    }

    #[test]
    fn inverse_window_and_congruence(a in nonzero_big(), m in nonzero_big()) {
        prop_assume!(m.abs() > Integer::one());
        match mod_inverse(&a, &m) {
            Ok(x) => {
                prop_assert!(a.gcd(&m).is_one());
                if m.is_positive() {
                    prop_assert!(x.is_positive() && x < m);
                } else {
                    prop_assert!(x.is_negative() && x > m);
                }
                prop_assert!((&a * &x - Integer::one()).is_multiple_of(&m));
                let (x2, k) = solve_diophantine(&a, &m).unwrap();
                prop_assert_eq!(&a * &x2 - &k * &m, Integer::one());
            }
            Err(e) => {
                prop_assert_eq!(e, Error::NotCoprime);
                prop_assert!(!a.gcd(&m).is_one());
            }
        }
    }

    #[test]
    fn reciprocity_route_matches(a in nonzero_big(), m in nonzero_big()) {
        prop_assume!(a.gcd(&m).is_one());
        let (x, steps) = inverse_via_reciprocity_counted(&a, &m).unwrap();
        prop_assert_eq!(x, mod_inverse(&a, &m).unwrap());
        let bits = a.abs().min(m.abs()).bits() as usize;
        prop_assert!(steps <= 3 * bits.max(1));
    }

    #[test]
    fn reciprocity_identity(a in nonzero_big(), b in nonzero_big()) {
        prop_assume!(a.gcd(&b).is_one());
        let r = reciprocity_check(&a, &b).unwrap();
        prop_assert!(r.holds);
        prop_assert_eq!(r.lhs, Integer::one() + &a * &b);
        prop_assert_eq!(r.k, Integer::one());
    }

    #[test]
    fn gaussian_division(n in small_gaussian(), d in small_gaussian()) {
        prop_assume!(!d.is_zero());
        let dm = gaussian_divmod(&n, &d).unwrap();
        prop_assert_eq!(&(&d * &dm.quotient) + &dm.remainder, n.clone());
        prop_assert!(dm.remainder.norm() * 2 <= d.norm());
        let shifted = &n + &(&d * &GaussianInteger::new(3, -2));
        prop_assert_eq!(gaussian_divmod(&shifted, &d).unwrap().remainder, dm.remainder);
    }

    #[test]
    fn gaussian_inverse_is_inverse(z in small_gaussian(), w in small_gaussian()) {
        if let Ok(inv) = gaussian_inverse(&z, &w) {
            let product = &z * &inv.representative;
            prop_assert!(gaussian_divides(&w, &(&product - &GaussianInteger::one())).unwrap());
            prop_assert_eq!(gaussian_divmod(&inv.representative, &w).unwrap().remainder, inv.canonical);
        }
    }

    #[test]
    fn gaussian_text_round_trip(z in small_gaussian()) {
        let text = z.to_string();
        prop_assert_eq!(text.parse::<GaussianInteger>().unwrap(), z);
    }

    #[test]
    fn integer_text_round_trip(v in big()) {
        prop_assert_eq!(parse_integer(&v.to_string()).unwrap(), v.clone());
        let hex = if v.is_negative() {
            format!("-0x{:x}", -&v)
        } else {
            format!("0x{v:x}")
        };
        prop_assert_eq!(parse_integer(&hex).unwrap(), v);
    }
}
