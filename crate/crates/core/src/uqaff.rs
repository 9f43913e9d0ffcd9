//! Quantum affine data for U_q(ŝl(2)) and U_q(ĝl(1|1)): evaluation
//! representations, coproducts, right adjoint action, twisted affine
//! generators and trigonometric R-matrices.

use crate::algebra::{delta_element, AlgebraError, Algebra, CoproductTable, Element, Gen, RepData};
use crate::glinalg::ScalarMatrix;
use crate::scalars::{qnum, sym, Bindings, Scalar, Symbol};

use Gen::*;

fn q() -> Scalar {
    Scalar::sym(sym::q())
}

fn qi() -> Scalar {
    q().pow(-1)
}

fn e(n: usize, i: usize, j: usize) -> ScalarMatrix {
    ScalarMatrix::unit(n, i, j)
}

/// The 2-dimensional evaluation representation of U_q(ŝl(2)).
pub fn rep_sl2_fund(spectral: Symbol) -> RepData {
    rep_sl2_spin(1, spectral)
}

/// The (l2+1)-dimensional evaluation representation in the square-root-free
/// gauge. Basis vector `i` (0-based) has weight `m = l2/2 - i`.
pub fn rep_sl2_spin(l2: u32, spectral: Symbol) -> RepData {
    let n = l2 as usize + 1;
    let z = Scalar::sym(spectral);
    let mut up = ScalarMatrix::zeros(n, n);
    let mut down = ScalarMatrix::zeros(n, n);
    for i in 1..n {
        up.set(i - 1, i, qnum(i as i64));
    }
    for i in 0..n - 1 {
        down.set(i + 1, i, qnum(l2 as i64 - i as i64));
    }
    let weights: Vec<i32> = (0..n).map(|i| l2 as i32 - 2 * i as i32).collect();
    let k1 = ScalarMatrix::diag(&weights.iter().map(|&m| q().pow(m)).collect::<Vec<_>>());
    let k1i = ScalarMatrix::diag(&weights.iter().map(|&m| q().pow(-m)).collect::<Vec<_>>());
    RepData::new(Algebra::UqSl2, spectral, vec![0; n])
        .with(Xi1Plus, up.clone())
        .with(Xi1Minus, down.clone())
        .with(K1, k1.clone())
        .with(K1Inv, k1i.clone())
        .with(K0, k1i)
        .with(K0Inv, k1)
        .with(Xi0Plus, down.scale(&z))
        .with(Xi0Minus, up.scale(&z.pow(-1)))
}

/// The 2-dimensional graded evaluation representation of U_q(ĝl(1|1)).
pub fn rep_gl11_fund(spectral: Symbol) -> RepData {
    let z = Scalar::sym(spectral);
    let id = ScalarMatrix::identity(2);
    let h2 = ScalarMatrix::diag(&[Scalar::one(), Scalar::int(-1)]);
    let h2p = z.mul(&q()).checked_div(&qi().sub(&q())).expect("q - 1/q is nonzero");
    RepData::new(Algebra::UqGl11, spectral, vec![0, 1])
        .with(Xi1Plus, e(2, 1, 2))
        .with(Xi1Minus, e(2, 2, 1))
        .with(Xi0Plus, e(2, 2, 1).scale(&z))
        .with(Xi0Minus, e(2, 1, 2).scale(&z.pow(-1).neg()))
        .with(K1, id.scale(&q()))
        .with(K1Inv, id.scale(&qi()))
        .with(K0, id.scale(&qi()))
        .with(K0Inv, id.scale(&q()))
        .with(K2, ScalarMatrix::diag(&[q(), qi()]))
        .with(K2Inv, ScalarMatrix::diag(&[qi(), q()]))
        .with(H2Plus, h2.scale(&h2p))
}

/// The fundamental representation of either affine algebra.
pub fn rep_fund(alg: Algebra, spectral: Symbol) -> Result<RepData, AlgebraError> {
    match alg {
        Algebra::UqSl2 => Ok(rep_sl2_fund(spectral)),
        Algebra::UqGl11 => Ok(rep_gl11_fund(spectral)),
        other => Err(AlgebraError::Undefined(format!("{} is not quantum affine", other.key()))),
    }
}

fn cartan_of(g: Gen) -> (Gen, Gen) {
    match g {
        Xi0Plus | Xi0Minus => (K0, K0Inv),
        _ => (K1, K1Inv),
    }
}

/// Coproduct of a catalog generator.
pub fn coproduct(alg: Algebra, g: Gen) -> Result<CoproductTable, AlgebraError> {
    if !g.in_catalog(alg) || alg.is_yangian() {
        return Err(AlgebraError::NotInCatalog { gen: g.name().into(), algebra: alg.key().into() });
    }
    let one = Scalar::one();
    let t = |a: &[Gen], b: &[Gen]| CoproductTable::term(alg, a, b, one.clone());
    Ok(match g {
        K0 | K0Inv | K1 | K1Inv | K2 | K2Inv => t(&[g], &[g]),
        Xi0Plus | Xi1Plus => t(&[g], &[]).add(&t(&[cartan_of(g).0], &[g])),
        Xi0Minus | Xi1Minus => t(&[g], &[cartan_of(g).1]).add(&t(&[], &[g])),
        H2Plus => t(&[H2Plus], &[])
            .add(&t(&[], &[H2Plus]))
            .add(&CoproductTable::term(alg, &[Xi0Plus, K1], &[Xi1Plus], Scalar::int(2))),
        B0Plus | B0Minus => return Err(AlgebraError::NoCoproduct(g.name().into())),
        _ => unreachable!("catalog check"),
    })
}

/// Coproduct of an element over the basic generators.
pub fn coproduct_of(alg: Algebra, e: &Element) -> Result<CoproductTable, AlgebraError> {
    delta_element(alg, e, |g| coproduct(alg, g))
}

/// Right adjoint action of a Chevalley generator on an element.
pub fn ad_r(alg: Algebra, g: Gen, a: &Element) -> Result<Element, AlgebraError> {
    let sign = if g.parity(alg) * a.parity(alg) == 1 { Scalar::int(-1) } else { Scalar::one() };
    let (k, ki) = cartan_of(g);
    let x = Element::gen(g);
    let (k, ki) = (Element::gen(k), Element::gen(ki));
    match g {
        Xi0Plus | Xi1Plus => Ok(ki.mul(a).mul(&x).scale(&sign).sub(&ki.mul(&x).mul(a))),
        Xi0Minus | Xi1Minus => Ok(a.mul(&x).scale(&sign).sub(&x.mul(&k).mul(a).mul(&ki))),
        _ => Err(AlgebraError::Undefined(format!("ad_r of {g}"))),
    }
}

/// The right adjoint action evaluated on a represented operator `a` of
/// parity `pa`.
pub fn adjoint_action(g: Gen, a: &ScalarMatrix, pa: u8, rep: &RepData) -> Result<ScalarMatrix, AlgebraError> {
    if a.rows() != rep.dim() || !a.is_square() {
        return Err(crate::glinalg::LinalgError::Dimension(format!(
            "operand is {}x{}, representation has dimension {}",
            a.rows(),
            a.cols(),
            rep.dim()
        ))
        .into());
    }
    let sign = if g.parity(rep.algebra) * pa == 1 { Scalar::int(-1) } else { Scalar::one() };
    let (k, ki) = cartan_of(g);
    let (x, k, ki) = (rep.get(g)?, rep.get(k)?, rep.get(ki)?);
    match g {
        Xi0Plus | Xi1Plus => Ok(ScalarMatrix::product([ki, a, x]).scale(&sign).sub(&ScalarMatrix::product([ki, x, a]))),
        Xi0Minus | Xi1Minus => Ok(a.mul(x).scale(&sign).sub(&ScalarMatrix::product([x, k, a, ki]))),
        _ => Err(AlgebraError::Undefined(format!("ad_r of {g}"))),
    }
}

/// The four quantum affine coideal subalgebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineCase {
    /// Singlet boundary, U_q(ŝl(2)).
    B1,
    /// Vector boundary, U_q(ŝl(2)).
    B2,
    /// Singlet boundary, U_q(ĝl(1|1)).
    B5,
    /// Vector boundary, U_q(ĝl(1|1)).
    B6,
}

impl AffineCase {
    pub const ALL: [AffineCase; 4] = [AffineCase::B1, AffineCase::B2, AffineCase::B5, AffineCase::B6];

    pub fn algebra(self) -> Algebra {
        match self {
            AffineCase::B1 | AffineCase::B2 => Algebra::UqSl2,
            AffineCase::B5 | AffineCase::B6 => Algebra::UqGl11,
        }
    }

    pub fn key(self) -> &'static str {
        match self {
            AffineCase::B1 => "uq-sl2-B1",
            AffineCase::B2 => "uq-sl2-B2",
            AffineCase::B5 => "uq-gl11-B5",
            AffineCase::B6 => "uq-gl11-B6",
        }
    }

    /// Twisted generators defined for the case.
    pub fn twisted(self) -> &'static [Gen] {
        match self {
            AffineCase::B6 => &[B0Minus],
            _ => &[B0Plus, B0Minus],
        }
    }
}

fn dp() -> Scalar {
    Scalar::sym(sym::dp())
}

fn dm() -> Scalar {
    Scalar::sym(sym::dm())
}

/// `(ad_r x x) a = ad_r x (ad_r x a)`.
fn ad_r_twice(alg: Algebra, x: Gen, a: &Element) -> Result<Element, AlgebraError> {
    ad_r(alg, x, &ad_r(alg, x, a)?)
}

/// The twisted affine generator as an element, with `dp`, `dm` symbolic.
pub fn twisted_element(case: AffineCase, which: Gen) -> Result<Element, AlgebraError> {
    let alg = case.algebra();
    let undefined = || AlgebraError::Undefined(format!("{} has no generator {which}", case.key()));
    let k0 = Element::gen(K0);
    match (case, which) {
        (AffineCase::B1 | AffineCase::B5, B0Plus) => {
            Ok(Element::prod(&[K0Inv, Xi0Plus, K0]).sub(&Element::prod(&[Xi1Minus, K0]).scale(&dp())))
        }
        (AffineCase::B1 | AffineCase::B5, B0Minus) => {
            Ok(Element::prod(&[Xi0Minus, K0]).sub(&Element::prod(&[K1Inv, Xi1Plus, K0]).scale(&dm())))
        }
        (AffineCase::B2, B0Minus) => {
            let inner = ad_r_twice(alg, Xi1Plus, &Element::prod(&[K0Inv, Xi0Plus]))?;
            Ok(Element::prod(&[Xi0Minus, K0]).sub(&inner.mul(&k0).scale(&dm())))
        }
        (AffineCase::B2, B0Plus) => {
            let inner = ad_r_twice(alg, Xi1Minus, &Element::gen(Xi0Minus))?;
            Ok(Element::prod(&[K0Inv, Xi0Plus, K0]).sub(&inner.mul(&k0).scale(&dp())))
        }
        (AffineCase::B6, B0Minus) => {
            let br = Element::gen(H2Plus).commutator(&Element::prod(&[K1Inv, Xi1Plus]));
            Ok(Element::gen(Xi0Minus).sub(&br.scale(&dm())))
        }
        _ => Err(undefined()),
    }
}

/// The represented twisted generator with the given parameter bindings.
pub fn twisted_generator(
    case: AffineCase,
    which: Gen,
    rep: &RepData,
    params: &Bindings,
) -> Result<ScalarMatrix, AlgebraError> {
    Ok(rep.eval(&twisted_element(case, which)?)?.substitute(params)?)
}

/// Adds the case's twisted generators (parameters symbolic) to a rep.
pub fn twisted_rep(case: AffineCase, rep: &RepData) -> Result<RepData, AlgebraError> {
    let mut r = rep.clone();
    for &g in case.twisted() {
        r.insert(g, rep.eval(&twisted_element(case, g)?)?);
    }
    Ok(r)
}

/// Generators of the coideal subalgebra in block order: Cartan elements,
/// then Lie Chevalley generators, then twisted generators.
pub fn coideal_generators(case: AffineCase) -> Result<Vec<(String, Element)>, AlgebraError> {
    let mut out: Vec<(String, Element)> = match case {
        AffineCase::B1 => vec![("k0*k1^-1".into(), Element::prod(&[K0, K1Inv]))],
        AffineCase::B5 => vec![("k2".into(), Element::gen(K2)), ("k0*k1^-1".into(), Element::prod(&[K0, K1Inv]))],
        AffineCase::B2 => vec![
            ("k1".into(), Element::gen(K1)),
            ("xi1+".into(), Element::gen(Xi1Plus)),
            ("xi1-".into(), Element::gen(Xi1Minus)),
        ],
        AffineCase::B6 => vec![
            ("k0".into(), Element::gen(K0)),
            ("k1".into(), Element::gen(K1)),
            ("k2".into(), Element::gen(K2)),
            ("xi1+".into(), Element::gen(Xi1Plus)),
            ("xi1-".into(), Element::gen(Xi1Minus)),
        ],
    };
    for &g in case.twisted() {
        out.push((g.name().to_string(), twisted_element(case, g)?));
    }
    Ok(out)
}

/// The expanded coproduct displays of the twisted generators, stored term by
/// term. The B1/B5 tables place `k0 ⊗ B0±` on the matching generator.
pub fn twisted_coproduct(case: AffineCase, which: Gen) -> Result<CoproductTable, AlgebraError> {
    let alg = case.algebra();
    let t = |a: &Element, b: &Element| CoproductTable::tensor(alg, a, b);
    let one = Element::one();
    let k0 = Element::gen(K0);
    match (case, which) {
        (AffineCase::B1 | AffineCase::B5, B0Plus) => Ok(t(&Element::prod(&[K0Inv, Xi0Plus, K0]), &one)
            .sub(&t(&Element::prod(&[Xi1Minus, K0]), &Element::prod(&[K0, K1Inv])).scale(&dp()))
            .add(&t(&k0, &Element::gen(B0Plus)))),
        (AffineCase::B1 | AffineCase::B5, B0Minus) => Ok(t(&Element::prod(&[Xi0Minus, K0]), &one)
            .sub(&t(&Element::prod(&[K1Inv, Xi1Plus, K0]), &Element::prod(&[K0, K1Inv])).scale(&dm()))
            .add(&t(&k0, &Element::gen(B0Minus)))),
        (AffineCase::B2, B0Minus) => {
            let x = ad_r_twice(alg, Xi1Plus, &Element::prod(&[K0Inv, Xi0Plus]))?;
            let pre = dm().mul(&q().pow(2)).mul(&q().pow(2).sub(&q().pow(-2)));
            let a1 = ad_r(alg, Xi1Plus, &Element::prod(&[K1Inv, Xi1Plus]))?;
            let a0 = ad_r(alg, Xi1Plus, &Element::prod(&[K0Inv, Xi0Plus]))?;
            let cross = t(&Element::gen(Xi0Plus), &a1).sub(&t(&k0.mul(&a0), &Element::prod(&[K1Inv, K1Inv, Xi1Plus])));
            Ok(t(&Element::prod(&[Xi0Minus, K0]), &one)
                .sub(&t(&x.mul(&k0), &Element::prod(&[K1Inv, K1Inv])).scale(&dm()))
                .add(&t(&k0, &Element::gen(B0Minus)))
                .add(&cross.scale(&pre)))
        }
        (AffineCase::B2, B0Plus) => {
            let y = ad_r_twice(alg, Xi1Minus, &Element::gen(Xi0Minus))?;
            let pre = dp().mul(&q().pow(2).sub(&q().pow(-2)));
            let a1 = ad_r(alg, Xi1Minus, &Element::gen(Xi1Minus))?;
            let a0 = ad_r(alg, Xi1Minus, &Element::gen(Xi0Minus))?;
            let cross = t(&Element::prod(&[Xi0Minus, K0]), &a1)
                .sub(&t(&k0.mul(&a0), &Element::prod(&[K1Inv, Xi1Minus])).scale(&q().pow(-2)));
            Ok(t(&Element::prod(&[K0Inv, Xi0Plus, K0]), &one)
                .sub(&t(&y.mul(&k0), &Element::prod(&[K1Inv, K1Inv])).scale(&dp()))
                .add(&t(&k0, &Element::gen(B0Plus)))
                .sub(&cross.scale(&pre)))
        }
        (AffineCase::B6, B0Minus) => {
            let br = Element::gen(H2Plus).commutator(&Element::prod(&[K1Inv, Xi1Plus]));
            let anti = Element::gen(Xi0Plus).anticommutator(&Element::gen(Xi1Plus));
            Ok(t(&Element::gen(Xi0Minus), &Element::gen(K0Inv))
                .sub(&t(&br, &Element::gen(K1Inv)).scale(&dm()))
                .add(&t(&one, &Element::gen(B0Minus)))
                .add(&t(&anti, &Element::prod(&[K1Inv, Xi1Plus])).scale(&dm().mul(&Scalar::int(2)))))
        }
        _ => Err(AlgebraError::Undefined(format!("{} has no generator {which}", case.key()))),
    }
}

/// The trigonometric R-matrix at the given argument.
pub fn r_matrix(alg: Algebra, arg: &Scalar) -> Result<ScalarMatrix, AlgebraError> {
    let num = arg.sub(&Scalar::one());
    let den = q().mul(arg).sub(&qi());
    let r = num.checked_div(&den)?;
    let last = match alg {
        Algebra::UqSl2 => Scalar::one(),
        Algebra::UqGl11 => Scalar::int(-1).add(&q().add(&qi()).mul(&r)),
        other => return Err(AlgebraError::Undefined(format!("no trigonometric R-matrix for {}", other.key()))),
    };
    let z = Scalar::zero;
    let one = Scalar::one;
    Ok(ScalarMatrix::from_rows(vec![
        vec![one(), z(), z(), z()],
        vec![z(), r.clone(), one().sub(&q().mul(&r)), z()],
        vec![z(), one().sub(&r.mul(&qi())), r, z()],
        vec![z(), z(), z(), last],
    ])?)
}

/// Extended Cartan matrix entry `a_ij` (i over Cartans 0..=2, j over roots).
fn cartan_entry(alg: Algebra, i: usize, j: usize) -> i32 {
    match alg {
        Algebra::UqSl2 => [[2, -2], [-2, 2]][i][j],
        _ => [[0, 0], [0, 0], [-2, 2]][i][j],
    }
}

/// Residuals of the defining relations in a representation; all must be zero.
pub fn relation_residuals(rep: &RepData) -> Result<Vec<(String, ScalarMatrix)>, AlgebraError> {
    let alg = rep.algebra;
    let cartans: &[(Gen, Gen)] = if alg == Algebra::UqSl2 { &[(K0, K0Inv), (K1, K1Inv)] } else { &[(K0, K0Inv), (K1, K1Inv), (K2, K2Inv)] };
    let roots = [(Xi0Plus, Xi0Minus), (Xi1Plus, Xi1Minus)];
    let n = rep.dim();
    let id = ScalarMatrix::identity(n);
    let mut out = Vec::new();
    for (i, &(k, ki)) in cartans.iter().enumerate() {
        out.push((format!("{k}*{ki}"), rep.get(k)?.mul(rep.get(ki)?).sub(&id)));
        for (j, &(xp, xm)) in roots.iter().enumerate() {
            let a = cartan_entry(alg, i, j);
            for (x, sgn) in [(xp, 1), (xm, -1)] {
                let lhs = ScalarMatrix::product([rep.get(k)?, rep.get(x)?, rep.get(ki)?]);
                let rhs = rep.get(x)?.scale(&q().pow(sgn * a));
                out.push((format!("{k}*{x}*{ki}"), lhs.sub(&rhs)));
            }
        }
    }
    for (i, &(xp, _)) in roots.iter().enumerate() {
        for (j, &(_, xm)) in roots.iter().enumerate() {
            let p = xp.parity(alg);
            let br = rep.get(xp)?.supercommutator(p, rep.get(xm)?, p);
            let expect = if i == j {
                let (k, ki) = cartans[i];
                rep.get(k)?.sub(rep.get(ki)?).scale(&q().sub(&qi()).inv()?)
            } else {
                ScalarMatrix::zeros(n, n)
            };
            out.push((format!("[{xp},{xm}]"), br.sub(&expect)));
        }
    }
    Ok(out)
}

pub mod printed {
    //! Tensor-product matrices displayed for the vector-boundary proofs,
    //! transcribed entry by entry.

    use super::*;

    fn p(text: &str) -> Scalar {
        Scalar::parse(text).expect("transcribed scalar")
    }

    fn from(entries: &[(usize, usize, Scalar)]) -> ScalarMatrix {
        ScalarMatrix::from_entries(4, entries)
    }

    /// (T_z ⊗ T_s)[Δ(k1)], [Δ(ξ1+)], [Δ(ξ1-)] for U_q(ŝl(2)).
    pub fn sl2_lie() -> Vec<(Gen, ScalarMatrix)> {
        vec![
            (K1, from(&[(1, 1, p("q^2")), (2, 2, p("1")), (3, 3, p("1")), (4, 4, p("q^-2"))])),
            (Xi1Plus, from(&[(1, 2, p("q")), (1, 3, p("1")), (2, 4, p("1")), (3, 4, p("q^-1"))])),
            (Xi1Minus, from(&[(2, 1, p("1")), (3, 1, p("q^-1")), (4, 2, p("q")), (4, 3, p("1"))])),
        ]
    }

    /// (T_z ⊗ T_s)[Δ(B0±)] for the vector coideal of U_q(ŝl(2)), with the
    /// second B0- entry placed at (1,3).
    pub fn sl2_twisted(which: Gen) -> ScalarMatrix {
        match which {
            B0Plus => from(&[
                (2, 1, p("q^-3*s + dp*(s^-1*(q^-2 + 1) - z^-1*(q^-4 - 1))")),
                (3, 1, p("q^-2*(z + dp*z^-1*(q + q^-1))")),
                (4, 2, p("q^-2*z + dp*q^2*z^-1*(q + q^-1)")),
                (4, 3, p("q^-1*s + dp*(s^-1*(q^2 + 1) - z^-1*(q^4 - 1))")),
            ]),
            _ => from(&[
                (1, 2, p("s^-1 + q^-1*dm*(s*(q^-2 + 1) - z*(q^-4 - 1))")),
                (1, 3, p("q*z^-1 + dm*z*(q^-4 + q^-2)")),
                (2, 4, p("q*z^-1 + dm*z*(q^2 + 1)")),
                (3, 4, p("q^2*s^-1 + q^-1*dm*(s*(q^2 + 1) - z*(q^4 - 1))")),
            ]),
        }
    }

    /// (T_z ⊗ T_s) of the Lie generators of U_q(ĝl(1|1)).
    pub fn gl11_lie() -> Vec<(Gen, ScalarMatrix)> {
        let all = |c: &str| from(&[(1, 1, p(c)), (2, 2, p(c)), (3, 3, p(c)), (4, 4, p(c))]);
        vec![
            (Xi1Plus, from(&[(1, 2, p("q")), (1, 3, p("1")), (2, 4, p("1")), (3, 4, p("-q"))])),
            (Xi1Minus, from(&[(2, 1, p("1")), (3, 1, p("q^-1")), (4, 2, p("q^-1")), (4, 3, p("-1"))])),
            (K0, all("q^-2")),
            (K1, all("q^2")),
            (K2, from(&[(1, 1, p("q^2")), (2, 2, p("1")), (3, 3, p("1")), (4, 4, p("q^-2"))])),
        ]
    }

    /// (T_z ⊗ T_s)[Δ(B0-)] for the vector coideal of U_q(ĝl(1|1)).
    pub fn gl11_twisted() -> ScalarMatrix {
        let a = p("-q^-1*(q*s^-1 + 2*dm*((q^-2 - 1)*s - z))");
        let b = p("-(q*z^-1 - 2*dm*(q^2 - 1)^-1*z)");
        from(&[(1, 2, a.clone()), (1, 3, b), (2, 4, a.clone()), (3, 4, a.neg())])
    }
}
