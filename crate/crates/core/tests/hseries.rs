use proptest::prelude::*;
use reflectq::hseries::{lift, yangian_bindings, HSeries};
use reflectq::scalars::{sym, Bindings};
use reflectq::Scalar;

const TRUNC: i32 = 3;

fn atom() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        (-3i64..=3).prop_map(Scalar::int),
        Just(Scalar::var("q")),
        Just(Scalar::var("z")),
        Just(Scalar::var("c")),
        Just(Scalar::parse("1/q").unwrap()),
        Just(Scalar::parse("1/(q - 1/q)").unwrap()),
        Just(Scalar::parse("(z - 1)/(q - 1)").unwrap()),
    ]
}

/// Small rational functions of q, z and a coefficient symbol c.
fn scalar() -> impl Strategy<Value = Scalar> {
    (atom(), atom(), atom(), -2i64..=2).prop_map(|(a, b, c, k)| a.mul(&b).add(&c.mul(&Scalar::int(k))))
}

fn agree(x: &HSeries, y: &HSeries) -> bool {
    let t = x.trunc().min(y.trunc());
    x.truncate(t) == y.truncate(t)
}

fn at_unit(a: &Scalar) -> Option<Scalar> {
    let b: Bindings = [(sym::q(), Scalar::one()), (sym::z(), Scalar::one())].into_iter().collect();
    a.substitute(&b).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lift_is_a_ring_homomorphism(a in scalar(), b in scalar()) {
        let bind = yangian_bindings();
        let (la, lb) = (lift(&a, &bind, TRUNC).unwrap(), lift(&b, &bind, TRUNC).unwrap());
        prop_assert!(agree(&lift(&a.add(&b), &bind, TRUNC).unwrap(), &la.add(&lb)));
        prop_assert!(agree(&lift(&a.mul(&b), &bind, TRUNC).unwrap(), &la.mul(&lb)));
    }

    #[test]
    fn constant_term_is_the_classical_value(a in scalar()) {
        let Some(classical) = at_unit(&a) else { return Ok(()) };
        let la = lift(&a, &yangian_bindings(), TRUNC).unwrap();
        prop_assert!(la.valuation().is_none_or(|v| v >= 0));
        prop_assert_eq!(la.coeff(0).unwrap(), classical);
    }
}

#[test]
fn inverse_of_q_minus_inverse_has_a_simple_pole() {
    let s = lift(&Scalar::parse("1/(q - 1/q)").unwrap(), &yangian_bindings(), TRUNC).unwrap();
    assert_eq!(s.valuation(), Some(-1));
    assert_eq!(s.coeff(-1).unwrap(), Scalar::parse("1/(2*alpha)").unwrap());
    assert_eq!(s.coeff(0).unwrap(), Scalar::zero());
}

#[test]
fn truncation_is_respected() {
    let s = lift(&Scalar::var("q"), &yangian_bindings(), 2).unwrap();
    assert!(s.coeff(3).is_err());
    assert_eq!(s.coeff(2).unwrap(), Scalar::parse("alpha^2/2").unwrap());
}
