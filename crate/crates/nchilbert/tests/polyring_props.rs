//! Randomized algebraic properties of the exact polynomial layer.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use nchilbert::polyring::{gcd, MPoly, Mono, RatFun};

fn arb_poly(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = MPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, nvars), -4i64..=4),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        let mut p = MPoly::zero(nvars);
        for (exps, c) in terms {
            p.add_term(Mono(exps), BigRational::from_integer(BigInt::from(c)));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in arb_poly(3, 3, 4), b in arb_poly(3, 3, 4), c in arb_poly(3, 3, 4)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), MPoly::zero(3));
    }

    #[test]
    fn gcd_divides_both_and_is_primitive(a in arb_poly(2, 3, 3), b in arb_poly(2, 3, 3)) {
        let g = gcd(&a, &b);
        if a.is_zero() && b.is_zero() {
            prop_assert!(g.is_zero());
        } else {
            prop_assert!(!g.is_zero());
            if !a.is_zero() {
                prop_assert!(a.div_exact(&g).is_some());
            }
            if !b.is_zero() {
                prop_assert!(b.div_exact(&g).is_some());
            }
            prop_assert_eq!(g.content(), BigRational::from_integer(1.into()));
        }
    }

    #[test]
    fn taylor_remultiplication(num in arb_poly(2, 3, 4), den_tail in arb_poly(2, 3, 3), d in 0u32..6) {
        // denominator with constant term 1 so the expansion exists
        let den = MPoly::one(2).add(&den_tail.mul_var(0));
        let f = RatFun::new(num.clone(), den.clone()).unwrap();
        let p = f.taylor_truncate(d).unwrap();
        prop_assert_eq!(
            den.mul(&p).truncate_total_degree(d),
            num.truncate_total_degree(d)
        );
    }

    #[test]
    fn specialization_commutes(a in arb_poly(3, 3, 4), b in arb_poly(3, 3, 4)) {
        prop_assert_eq!(
            a.mul(&b).specialize_graded(),
            a.specialize_graded().mul(&b.specialize_graded())
        );
        prop_assert_eq!(
            a.add(&b).specialize_graded(),
            a.specialize_graded().add(&b.specialize_graded())
        );
    }

    #[test]
    fn ratfun_field_identities(a in arb_poly(2, 2, 3), b in arb_poly(2, 2, 3)) {
        let den = MPoly::one(2).add(&MPoly::var(2, 0)).add(&MPoly::var(2, 1));
        let x = RatFun::new(a, den.clone()).unwrap();
        let y = RatFun::new(b, den).unwrap();
        prop_assert_eq!(x.add(&y).sub(&y), x.clone());
        if !y.is_zero() {
            prop_assert_eq!(x.mul(&y).div(&y).unwrap(), x);
        }
    }
}
