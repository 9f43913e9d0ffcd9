mod common;

use reflectq::algebra::{eval_table, Algebra, Boundary};
use reflectq::scalars::sym;
use reflectq::uqaff;

fn failures(checks: Vec<(String, bool)>) -> Vec<String> {
    checks.into_iter().filter(|(_, ok)| !ok).map(|(l, _)| l).collect()
}

#[test]
fn relations_hold_in_every_module() {
    let checks = common::relations();
    assert!(checks.len() > 30);
    assert_eq!(failures(checks), Vec::<String>::new());
}

#[test]
fn coproducts_are_coassociative() {
    for alg in Algebra::ALL {
        let checks = common::coassociativity(alg);
        assert!(!checks.is_empty(), "{}", alg.key());
        assert_eq!(failures(checks), Vec::<String>::new());
    }
}

#[test]
fn tensor_evaluation_is_multiplicative() {
    for alg in Algebra::ALL {
        assert_eq!(failures(common::homomorphism(alg)), Vec::<String>::new());
    }
}

#[test]
fn lie_level_tensor_displays() {
    for (alg, shown) in [(Algebra::UqSl2, uqaff::printed::sl2_lie()), (Algebra::UqGl11, uqaff::printed::gl11_lie())] {
        let (z, s) = (common::rep(alg, sym::z()), common::rep(alg, sym::s()));
        for (g, m) in shown {
            let d = eval_table(&uqaff::coproduct(alg, g).unwrap(), &z, Boundary::Rep(&s)).unwrap();
            assert_eq!(d, m, "{} {g}", alg.key());
        }
    }
}

#[test]
fn twisted_tensor_displays() {
    let mut off = Vec::new();
    for d in common::displays() {
        if !d.matches() {
            off.push((d.label.clone(), common::differing_entries(&d)));
        }
    }
    // The gl(1|1) displays disagree with the coproducts in these entries;
    // the computed forms are the ones that reproduce the K-matrices.
    let expected = vec![
        ("uq-gl11 vector B0-".to_string(), vec![(1, 2), (2, 4), (3, 4)]),
        ("y-gl11 type II Ett+".to_string(), vec![(1, 2), (1, 3), (2, 4), (3, 4)]),
        ("y-gl11 type II Ett-".to_string(), vec![(2, 1), (3, 1), (4, 2), (4, 3)]),
    ];
    assert_eq!(off, expected);
}
