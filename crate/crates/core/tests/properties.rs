mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use seifert_tight::seifert::{euler_number, is_equivalent, normalize, SeifertInvariants};
use seifert_tight::slope::{canonical, cf_eval, neg_cf, Mat2, Slope};

fn mat() -> impl Strategy<Value = Mat2> {
    (-50i64..=50, -50i64..=50, any::<u64>())
        .prop_filter_map("primitive first column", |(a, c, k)| {
            common::det_one(a, c, k, 50)
        })
}

fn slope() -> impl Strategy<Value = Slope> {
    prop_oneof![
        9 => (-500i64..=500, -500i64..=500)
            .prop_filter("nonzero pair", |&(p, q)| p != 0 || q != 0)
            .prop_map(|(p, q)| Slope::new(p, q).unwrap()),
        1 => Just(Slope::infinity()),
    ]
}

fn ratio() -> impl Strategy<Value = Slope> {
    (-60i64..=60, 1i64..=40).prop_map(|(p, q)| Slope::new(p, q).unwrap())
}

fn presentation() -> impl Strategy<Value = SeifertInvariants> {
    (-5i64..=5, prop::collection::vec(ratio(), 0..5))
        .prop_map(|(e0, rs)| SeifertInvariants::new(e0, rs).unwrap())
}

proptest! {
    #[test]
    fn action_is_a_group_action(m1 in mat(), m2 in mat(), s in slope()) {
        prop_assert_eq!(m1.mul(&m2).act(&s), m1.act(&m2.act(&s)));
        prop_assert_eq!(m1.invert().act(&m1.act(&s)), s.clone());
        prop_assert_eq!(m1.mul(&m1.invert()), Mat2::identity());
    }

    #[test]
    fn canonical_is_idempotent_and_projective(p in -10_000i64..10_000, q in -10_000i64..10_000) {
        prop_assume!(p != 0 || q != 0);
        let s = canonical(p, q).unwrap();
        prop_assert_eq!(canonical(s.numer().clone(), s.denom().clone()).unwrap(), s.clone());
        prop_assert_eq!(canonical(-p, -q).unwrap(), s);
    }

    #[test]
    fn cf_roundtrip_and_digit_bounds(p in 1i64..5_000, q in 1i64..400) {
        let s = Slope::new(-p - q, q).unwrap();
        let cf = neg_cf(&s).unwrap();
        prop_assert_eq!(cf_eval(&cf), s.clone());
        prop_assert!(cf.digits().len() as u64 <= s.denom().try_into().unwrap_or(u64::MAX));
        prop_assert!(cf.digits().iter().all(|d| *d <= BigInt::from(-2)));
    }

    #[test]
    fn normalize_idempotent_and_euler_preserving(x in presentation()) {
        let n = normalize(&x);
        prop_assert_eq!(normalize(&n), n.clone());
        prop_assert_eq!(euler_number(&n), euler_number(&x));
        prop_assert!(n.ratios().iter().all(|r| *r > Slope::zero() && *r < Slope::integer(1)));
        prop_assert!(is_equivalent(&x, &n));
    }

    #[test]
    fn equivalence_is_symmetric_and_transitive(
        x in presentation(),
        shifts in prop::collection::vec(-3i64..=3, 5),
        other in presentation(),
    ) {
        // y: x with integers moved between legs and e0, legs reversed
        let mut e0 = x.e0().clone();
        let mut rs: Vec<Slope> = x.ratios().to_vec();
        for (r, k) in rs.iter_mut().zip(&shifts) {
            *r = r.add_integer(&BigInt::from(*k));
            e0 -= *k;
        }
        rs.reverse();
        let y = SeifertInvariants::new(e0, rs).unwrap();
        prop_assert!(is_equivalent(&x, &y));
        prop_assert!(is_equivalent(&y, &x));
        prop_assert_eq!(is_equivalent(&x, &other), is_equivalent(&y, &other));
    }
}
