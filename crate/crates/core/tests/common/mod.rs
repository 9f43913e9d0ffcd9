//! Representation-level algebra checks shared by the module tests and the
//! acceptance report.
#![allow(dead_code)]

use reflectq::algebra::{eval_table, eval_triple, iterate_coproduct, Algebra, Boundary, CoproductTable, Gen, RepData};
use reflectq::glinalg::ScalarMatrix;
use reflectq::scalars::{sym, Bindings, Symbol};
use reflectq::uqaff::{self, AffineCase};
use reflectq::yang::{self, TyCase};
use reflectq::Scalar;

const GENERATORS: &[&str] = &[
    "xi0+", "xi0-", "xi1+", "xi1-", "k0", "k0^-1", "k1", "k1^-1", "k2", "k2^-1", "h2+", "E+", "E-", "H", "H2",
    "Ehat+", "Ehat-", "Hhat", "Hhat2",
];

fn delta(alg: Algebra, g: Gen) -> Option<CoproductTable> {
    if alg.is_yangian() {
        yang::y_coproduct(alg, g).ok()
    } else {
        uqaff::coproduct(alg, g).ok()
    }
}

/// Every catalog generator with a stored coproduct.
pub fn catalog(alg: Algebra) -> Vec<(Gen, CoproductTable)> {
    GENERATORS
        .iter()
        .map(|n| Gen::parse(n).unwrap())
        .filter(|g| g.in_catalog(alg))
        .filter_map(|g| delta(alg, g).map(|t| (g, t)))
        .collect()
}

pub fn rep(alg: Algebra, spectral: Symbol) -> RepData {
    if alg.is_yangian() {
        yang::rep_y(alg, spectral).unwrap()
    } else {
        uqaff::rep_fund(alg, spectral).unwrap()
    }
}

/// `(Δ⊗id)Δ(g) = (id⊗Δ)Δ(g)` on three evaluation modules.
pub fn coassociativity(alg: Algebra) -> Vec<(String, bool)> {
    let (a, b, c) = (rep(alg, sym::z()), rep(alg, sym::w()), rep(alg, sym::s()));
    catalog(alg)
        .into_iter()
        .map(|(g, t)| {
            let d = |x: Gen| delta(alg, x).ok_or(reflectq::algebra::AlgebraError::NoCoproduct(x.name().into()));
            let left = eval_triple(alg, &iterate_coproduct(&t, true, d).unwrap(), &a, &b, &c).unwrap();
            let right = eval_triple(alg, &iterate_coproduct(&t, false, d).unwrap(), &a, &b, &c).unwrap();
            (format!("{} {g}", alg.key()), left == right)
        })
        .collect()
}

/// `ρ(Δ(g)Δ(h)) = ρ(Δ(g))ρ(Δ(h))` on a pair of modules.
pub fn homomorphism(alg: Algebra) -> Vec<(String, bool)> {
    let (a, b) = (rep(alg, sym::z()), rep(alg, sym::s()));
    let ev = |t: &CoproductTable| eval_table(t, &a, Boundary::Rep(&b)).unwrap();
    let cat = catalog(alg);
    let mut out = Vec::new();
    for (g, tg) in &cat {
        for (h, th) in &cat {
            out.push((format!("{} {g}*{h}", alg.key()), ev(&tg.mul(th)) == ev(tg).mul(&ev(th))));
        }
    }
    out
}

/// Defining relations in every module built by the library.
pub fn relations() -> Vec<(String, bool)> {
    let mut out = Vec::new();
    for l2 in 1..=3 {
        for (label, r) in uqaff::relation_residuals(&uqaff::rep_sl2_spin(l2, sym::z())).unwrap() {
            out.push((format!("uq-sl2 spin {l2}/2 {label}"), r.is_zero()));
        }
    }
    for (label, r) in uqaff::relation_residuals(&uqaff::rep_gl11_fund(sym::z())).unwrap() {
        out.push((format!("uq-gl11 {label}"), r.is_zero()));
    }
    for alg in [Algebra::YSl2, Algebra::YGl11] {
        for (label, r) in yang::relation_residuals_y(&rep(alg, sym::u())).unwrap() {
            out.push((format!("{} {label}", alg.key()), r.is_zero()));
        }
    }
    out
}

fn affine_twisted(case: AffineCase, g: Gen) -> ScalarMatrix {
    let alg = case.algebra();
    let t = uqaff::coproduct_of(alg, &uqaff::twisted_element(case, g).unwrap()).unwrap();
    eval_table(&t, &rep(alg, sym::z()), Boundary::Rep(&rep(alg, sym::s()))).unwrap()
}

fn yangian_twisted(case: TyCase, g: Gen) -> ScalarMatrix {
    let alg = case.algebra();
    let t = yang::y_coproduct_of(alg, &yang::twisted_y_element(case, g).unwrap()).unwrap();
    let u = yang::twisted_y_rep(case, &rep(alg, sym::u())).unwrap();
    let s = yang::twisted_y_rep(case, &rep(alg, sym::s())).unwrap();
    eval_table(&t.substitute(&yang::unit_alpha()).unwrap(), &u, Boundary::Rep(&s)).unwrap()
}

/// A displayed tensor matrix next to the one computed from the coproduct.
pub struct Display {
    pub label: String,
    pub derived: ScalarMatrix,
    pub printed: ScalarMatrix,
}

impl Display {
    pub fn matches(&self) -> bool {
        self.derived == self.printed
    }
}

/// The displayed twisted-generator tensor matrices with parameters symbolic.
pub fn displays() -> Vec<Display> {
    let mut out = Vec::new();
    for g in [Gen::B0Plus, Gen::B0Minus] {
        out.push(Display {
            label: format!("uq-sl2 vector {g}"),
            derived: affine_twisted(AffineCase::B2, g),
            printed: uqaff::printed::sl2_twisted(g),
        });
    }
    out.push(Display {
        label: "uq-gl11 vector B0-".into(),
        derived: affine_twisted(AffineCase::B6, Gen::B0Minus),
        printed: uqaff::printed::gl11_twisted(),
    });
    // The sl(2) display writes the boundary spectral parameter as c.
    let c_as_s: Bindings = [(sym::c(), Scalar::sym(sym::s()))].into_iter().collect();
    for (g, m) in yang::printed::sl2_type_two() {
        out.push(Display {
            label: format!("y-sl2 type II {g}"),
            derived: yangian_twisted(TyCase::Sl2II, g),
            printed: m.substitute(&c_as_s).unwrap(),
        });
    }
    for (g, m) in yang::printed::gl11_type_two() {
        out.push(Display { label: format!("y-gl11 type II {g}"), derived: yangian_twisted(TyCase::Gl11II, g), printed: m });
    }
    out
}

/// Nonzero positions (1-based) of `derived − printed`.
pub fn differing_entries(d: &Display) -> Vec<(usize, usize)> {
    let diff = d.derived.sub(&d.printed);
    (0..diff.rows())
        .flat_map(|i| (0..diff.cols()).map(move |j| (i, j)))
        .filter(|&(i, j)| !diff.get(i, j).is_zero())
        .map(|(i, j)| (i + 1, j + 1))
        .collect()
}
