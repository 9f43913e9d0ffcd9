use reflectq::algebra::Algebra;
use reflectq::boundary::{
    derive, fuse_all, kmatrices as km, mismatch, r_matrix, spin_singlet, verify_re, verify_unitarity, verify_ybe,
    CaseId, Expectation, Family,
};
use reflectq::glinalg::ScalarMatrix;
use reflectq::scalars::sym;
use reflectq::Scalar;

fn sym_of(name: fn() -> reflectq::Symbol) -> Scalar {
    Scalar::sym(name())
}

fn re_zero(alg: Algebra, k: &ScalarMatrix, vector: bool) -> bool {
    let g = alg.fundamental_grading();
    let r = |x: &Scalar| r_matrix(alg, x);
    verify_re(Family::of(alg), &r, k, &g, vector.then_some(&g)).unwrap().is_zero()
}

#[test]
fn yang_baxter_holds_for_all_r_matrices() {
    for alg in Algebra::ALL {
        let g = alg.fundamental_grading();
        let r = |x: &Scalar| r_matrix(alg, x);
        assert!(verify_ybe(Family::of(alg), &r, &g).unwrap().is_zero(), "{alg:?}");
    }
}

#[test]
fn reflection_equation_holds_for_printed_solutions() {
    let (a, b, c) = (sym_of(sym::a), sym_of(sym::b), sym_of(sym::c));
    assert!(re_zero(Algebra::UqSl2, &km::sl2q_singlet(&a, &b, &c), false));
    assert!(re_zero(Algebra::UqSl2, &km::sl2q_vector(&c), true));
    assert!(re_zero(Algebra::UqGl11, &km::gl11q_singlet(&c), false));
    assert!(re_zero(Algebra::UqGl11, &km::gl11q_vector(&c), true));
    assert!(re_zero(Algebra::YSl2, &km::sl2_singlet(&a, &b, &c), false));
    assert!(re_zero(Algebra::YSl2, &km::sl2_vector(&c), true));
    assert!(re_zero(Algebra::YGl11, &km::gl11_singlet(&c), false));
    assert!(re_zero(Algebra::YGl11, &km::gl11_vector(&c), true));
}

#[test]
fn singlet_solutions_are_unitary() {
    let (zero, c) = (Scalar::zero(), sym_of(sym::c));
    let cases = [
        (Family::Trigonometric, km::sl2q_singlet(&zero, &zero, &c)),
        (Family::Trigonometric, km::gl11q_singlet(&c)),
        (Family::Rational, km::sl2_singlet(&zero, &zero, &c)),
        (Family::Rational, km::gl11_singlet(&c)),
    ];
    for (family, k) in cases {
        assert!(verify_unitarity(family, &k).unwrap().is_zero());
    }
}

#[test]
fn native_derivations_reproduce_printed_solutions() {
    for case in CaseId::ALL {
        let d = derive(case).unwrap();
        assert!(d.matches, "{}: {:?}", case.key(), d.report.k);
        for (claim, holds) in &d.claims {
            assert!(holds, "{}: {claim} with c = {:?}", case.key(), d.c_value);
        }
    }
}

#[test]
fn mismatched_boundaries_follow_the_remarks() {
    for case in CaseId::ALL {
        let d = mismatch(case).unwrap();
        assert!(d.matches, "{}: nullity {} {:?}", case.key(), d.report.nullity, d.report.k);
        let expected_nullity = if d.expectation == Expectation::OneFunction { 2 } else { 1 };
        assert_eq!(d.report.nullity, expected_nullity);
    }
}

#[test]
fn spin_one_singlet_is_unique() {
    assert_eq!(spin_singlet(2).unwrap().nullity, 1);
}

#[test]
fn fusion_recovers_vector_solution() {
    let alg = Algebra::UqSl2;
    let c = sym_of(sym::c);
    let g = alg.fundamental_grading();
    let r = |x: &Scalar| r_matrix(alg, x);
    let k = km::sl2q_singlet(&Scalar::zero(), &Scalar::zero(), &c);
    let target = km::sl2q_singlet_coideal_vector(&c);
    let reports = fuse_all(Family::Trigonometric, &k, &r, &g, sym::s(), &target).unwrap();
    for rep in &reports {
        eprintln!("{}: matches={} re={:?}", rep.choice.key(), rep.matches, rep.re_zero);
    }
    assert!(reports.iter().any(|r| r.matches && r.re_zero == Some(true)));
}
