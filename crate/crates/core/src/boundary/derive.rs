//! Per-case derivations: solve each intertwining problem, identify the
//! printed free constant `c`, and check the stated parameter relations.

use num_traits::Signed;

use crate::glinalg::{rank, ScalarMatrix};
use crate::scalars::{sym, Bindings, Mono, Poly, Scalar, Symbol};
use crate::uqaff::{self, AffineCase};
use crate::yang::TyCase;

use super::kmatrices as km;
use super::{normalize, solve_k, solve_params, BoundaryError, BoundaryKind, BoundaryProblem, CaseId, SolveReport};

/// What the displayed solution says about a pairing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    /// A unique K of the printed form.
    Unique,
    /// The identity matrix.
    Trivial,
    /// Nullity two: the printed form with one unknown function.
    OneFunction,
}

impl Expectation {
    pub fn key(self) -> &'static str {
        match self {
            Expectation::Unique => "unique",
            Expectation::Trivial => "trivial",
            Expectation::OneFunction => "one-function",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Derivation {
    pub case: CaseId,
    pub kind: BoundaryKind,
    pub expectation: Expectation,
    pub report: SolveReport,
    /// The printed constant `c` expressed through the solution.
    pub c_value: Option<Scalar>,
    /// The printed matrix at `c_value` (unique case).
    pub printed: Option<ScalarMatrix>,
    pub matches: bool,
    /// Printed parameter relations and whether each holds.
    pub claims: Vec<(String, bool)>,
}

fn c() -> Scalar {
    Scalar::sym(sym::c())
}

fn p(text: &str) -> Scalar {
    Scalar::parse(text).expect("catalog scalar")
}

fn bind(pairs: &[(Symbol, &str)]) -> Bindings {
    pairs.iter().map(|(s, v)| (*s, p(v))).collect()
}

type Printed = fn(&Scalar) -> ScalarMatrix;

/// Printed solution and relations for each case against its own boundary.
fn native_spec(case: CaseId) -> (Printed, &'static [&'static str]) {
    match case {
        CaseId::Affine(AffineCase::B1) => (|c| km::sl2q_singlet(&Scalar::zero(), &Scalar::zero(), c), &["q*dp - c", "dm/q - c"]),
        CaseId::Affine(AffineCase::B2) => (
            km::sl2q_vector,
            &["q^2*dp - 1/(q + 1/q)", "q^-2*dm - 1/(q + 1/q)", "c - (s + 1/s)"],
        ),
        CaseId::Affine(AffineCase::B5) => (km::gl11q_singlet, &["dp - q*c", "dm + q*c"]),
        CaseId::Affine(AffineCase::B6) => (km::gl11q_vector, &["dm - (1/q - q)/2", "c - (s + 1/s)"]),
        CaseId::Yangian(TyCase::Sl2I) => (|c| km::sl2_singlet(&Scalar::zero(), &Scalar::zero(), c), &["t - c"]),
        CaseId::Yangian(TyCase::Sl2II) => (km::sl2_vector, &["t + 2", "c - s"]),
        CaseId::Yangian(TyCase::Gl11I) => (km::gl11_singlet, &["t - (c + 1/2)"]),
        CaseId::Yangian(TyCase::Gl11II) => (km::gl11_vector, &["t", "c - s"]),
    }
}

/// Square root of a Laurent monomial with square rational coefficient.
fn monomial_sqrt(v: &Scalar) -> Option<Scalar> {
    let root = |poly: &Poly| -> Option<Poly> {
        if !poly.is_monomial() {
            return None;
        }
        let (m, k) = &poly.terms()[0];
        if k.is_negative() {
            return None;
        }
        let r = k.sqrt();
        if &(&r * &r) != k || m.exps().iter().any(|e| e % 2 == 1) {
            return None;
        }
        let mut half = Mono::ONE;
        for (i, e) in m.exps().iter().enumerate() {
            if *e > 0 {
                half = half.mul(&Mono::var(Symbol(i as u16), e / 2));
            }
        }
        Some(Poly::term(half, r))
    };
    Scalar::from_parts(root(v.num())?, root(v.den())?).ok()
}

/// Solves `printed(c) = k` for `c` from one entry, verifying the whole matrix.
pub(super) fn identify_c(printed: Printed, k: &ScalarMatrix) -> Option<Scalar> {
    let generic = printed(&c());
    let ci = sym::c().index();
    for (pe, ke) in generic.entries().iter().zip(k.entries()) {
        if !pe.depends_on(sym::c()) {
            continue;
        }
        let eq = pe.sub(ke);
        let uni = eq.num().to_uni(ci);
        let s = |x: &Poly| Scalar::from_parts(x.clone(), Poly::one()).expect("unit denominator");
        let candidate = match uni.len() {
            2 => s(&uni[0]).neg().checked_div(&s(&uni[1])).ok(),
            3 if uni[1].is_zero() => s(&uni[0]).neg().checked_div(&s(&uni[2])).ok().and_then(|v| monomial_sqrt(&v)),
            _ => None,
        };
        if let Some(v) = candidate {
            if printed(&v) == *k {
                return Some(v);
            }
        }
    }
    None
}

fn check_claims(claims: &[&str], bindings: &Bindings, c_value: Option<&Scalar>) -> Vec<(String, bool)> {
    claims
        .iter()
        .map(|claim| {
            let mut b = bindings.clone();
            if let Some(v) = c_value {
                b.insert(sym::c(), v.clone());
            }
            let holds = p(claim).substitute(&b).map(|x| x.is_zero()).unwrap_or(false);
            (format!("{claim} = 0"), holds)
        })
        .collect()
}

/// Solves a case against the boundary it was built for.
pub fn derive(case: CaseId) -> Result<Derivation, BoundaryError> {
    let kind = case.native_kind();
    let problem = BoundaryProblem::new(case, kind)?;
    let mut report = solve_k(&problem, &Bindings::new())?;
    if report.nullity != 1 {
        report = solve_params(&problem, &case.params())?;
    }
    let (printed, claims) = native_spec(case);
    let (c_value, shown) = match &report.k {
        Some(k) => match identify_c(printed, k) {
            Some(v) => (Some(v.clone()), Some(printed(&v))),
            None => (None, None),
        },
        None => (None, None),
    };
    let matches = shown.is_some() && report.nullity == 1 && report.residual_zero;
    let claims = check_claims(claims, &report.bindings, c_value.as_ref());
    Ok(Derivation { case, kind, expectation: Expectation::Unique, report, c_value, printed: shown, matches, claims })
}

/// Parameter values fixed by each case's own derivation, written in `c`.
fn native_values(case: CaseId) -> Bindings {
    match case {
        CaseId::Affine(AffineCase::B1) => bind(&[(sym::dp(), "c/q"), (sym::dm(), "c*q")]),
        CaseId::Affine(AffineCase::B2) => bind(&[(sym::dp(), "q^-2/(q + 1/q)"), (sym::dm(), "q^2/(q + 1/q)")]),
        CaseId::Affine(AffineCase::B5) => bind(&[(sym::dp(), "q*c"), (sym::dm(), "-q*c")]),
        CaseId::Affine(AffineCase::B6) => bind(&[(sym::dm(), "(1/q - q)/2")]),
        CaseId::Yangian(TyCase::Sl2I) => bind(&[(sym::t(), "c")]),
        CaseId::Yangian(TyCase::Sl2II) => bind(&[(sym::t(), "-2")]),
        CaseId::Yangian(TyCase::Gl11I) => bind(&[(sym::t(), "c + 1/2")]),
        CaseId::Yangian(TyCase::Gl11II) => bind(&[(sym::t(), "0")]),
    }
}

/// Solves a case against the other boundary kind, with its own parameter
/// values, and compares with the remarks.
pub fn mismatch(case: CaseId) -> Result<Derivation, BoundaryError> {
    let kind = match case.native_kind() {
        BoundaryKind::Singlet => BoundaryKind::Vector,
        BoundaryKind::Vector => BoundaryKind::Singlet,
    };
    let problem = BoundaryProblem::new(case, kind)?;
    let values = native_values(case);
    let report = solve_k(&problem, &values)?;
    let kp = Scalar::sym(Symbol::named("kp"));
    let (expectation, printed, matches) = match case {
        CaseId::Affine(AffineCase::B1) | CaseId::Yangian(TyCase::Sl2I) => {
            let shown = if case == CaseId::Affine(AffineCase::B1) {
                km::sl2q_singlet_coideal_vector(&c())
            } else {
                km::sl2_singlet_coideal_vector(&c())
            };
            let ok = report.nullity == 1 && report.k.as_ref() == Some(&normalize(&shown)?);
            (Expectation::Unique, Some(shown), ok)
        }
        CaseId::Affine(AffineCase::B5) | CaseId::Yangian(TyCase::Gl11I) => {
            let fam = |x: &Scalar| {
                if case == CaseId::Affine(AffineCase::B5) {
                    km::gl11q_singlet_coideal_vector(&c(), x)
                } else {
                    km::gl11_singlet_coideal_vector(&c(), x)
                }
            };
            let ok = report.nullity == 2 && spans(&report.basis, &[fam(&Scalar::zero()), fam(&Scalar::one())]);
            (Expectation::OneFunction, Some(fam(&kp)), ok)
        }
        _ => {
            let ok = report.nullity == 1 && report.k.as_ref().is_some_and(ScalarMatrix::is_identity);
            (Expectation::Trivial, Some(ScalarMatrix::identity(problem.dim())), ok)
        }
    };
    let matches = matches && report.residual_zero;
    Ok(Derivation { case, kind, expectation, report, c_value: None, printed, matches, claims: vec![] })
}

/// Whether `members` lie in the span of `basis` and together span it.
fn spans(basis: &[ScalarMatrix], members: &[ScalarMatrix]) -> bool {
    let rows = |ms: &[ScalarMatrix]| ms.iter().map(|m| m.vec_col_major()).collect::<Vec<_>>();
    let mut all = rows(basis);
    all.extend(rows(members));
    let Ok(stacked) = ScalarMatrix::from_rows(all) else { return false };
    let Ok(own) = ScalarMatrix::from_rows(rows(members)) else { return false };
    rank(&stacked) == basis.len() && rank(&own) == basis.len()
}

/// The singlet problem of the U_q(ŝl(2)) singlet coideal on the spin-l
/// module, with d± = c/q, cq.
pub fn spin_singlet(l2: u32) -> Result<SolveReport, BoundaryError> {
    let case = CaseId::Affine(AffineCase::B1);
    let problem = BoundaryProblem::new(case, BoundaryKind::Singlet)?.with_bulk(uqaff::rep_sl2_spin(l2, sym::z()));
    solve_k(&problem, &native_values(case))
}

impl Derivation {
    /// The report rewritten in terms of the printed constant `c`: `k` is the
    /// printed matrix and the bindings express the case parameters through
    /// `c` (or bind `c` itself when the boundary fixes it).
    pub fn in_printed_form(&self) -> SolveReport {
        let (Some(cv), Some(_)) = (&self.c_value, &self.printed) else {
            return self.report.clone();
        };
        let (printed, _) = native_spec(self.case);
        let mut out = self.report.clone();
        out.k = Some(printed(&c()));
        out.basis = vec![printed(&c())];
        let params = self.case.params();
        let inverted = params.iter().find_map(|&p| {
            let uni = cv.sub(&c()).num().to_uni(p.index());
            if uni.len() != 2 {
                return None;
            }
            let s = |x: &Poly| Scalar::from_parts(x.clone(), Poly::one()).expect("unit denominator");
            Some((p, s(&uni[0]).neg().checked_div(&s(&uni[1])).ok()?))
        });
        match inverted {
            Some((p, value)) => {
                let sub: Bindings = [(p, value.clone())].into_iter().collect();
                for v in out.bindings.values_mut() {
                    *v = v.substitute(&sub).unwrap_or_else(|_| v.clone());
                }
                out.bindings.insert(p, value);
            }
            None => {
                out.bindings.insert(sym::c(), cv.clone());
            }
        }
        out
    }
}
