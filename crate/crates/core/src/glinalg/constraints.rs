//! Parameter constraints from parametric homogeneous systems.
//!
//! The unknowns of `M x = 0` are solved in two stages. Rows free of the
//! parameters fix a subspace `N`; the remaining rows restricted to `N` must
//! drop rank for the expected nullity to survive. The vanishing minors give
//! polynomial conditions whose coefficients in the generic symbols (spectral
//! parameters) must vanish identically. Those are solved by successive linear
//! elimination, falling back to univariate gcds.

use crate::scalars::{poly_gcd, sym, Bindings, Poly, Scalar, Symbol};

use super::{nullspace, primitive_vector, LinalgError, ScalarMatrix};

const MAX_MINORS: usize = 4096;

#[derive(Clone, Debug)]
pub struct ConstraintReport {
    pub bindings: Bindings,
    pub residual: Vec<Scalar>,
    pub nullity: usize,
    pub nullspace: Vec<ScalarMatrix>,
}

/// Determinant by fraction-field elimination.
pub fn determinant(m: &ScalarMatrix) -> Scalar {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows();
    match n {
        0 => return Scalar::one(),
        1 => return m.get(0, 0).clone(),
        2 => return m.get(0, 0).mul(m.get(1, 1)).sub(&m.get(0, 1).mul(m.get(1, 0))),
        _ => {}
    }
    let mut a = m.to_rows();
    let mut det = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).filter(|&r| !a[r][c].is_zero()).min_by_key(|&r| super::complexity(&a[r][c])) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            det = det.neg();
        }
        let piv = a[c][c].clone();
        det = det.mul(&piv);
        let inv = piv.inv().expect("nonzero pivot");
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].mul(&inv);
            for j in c..n {
                let d = f.mul(&a[c][j]);
                a[r][j] = a[r][j].sub(&d);
            }
        }
    }
    det
}

fn mask_of(syms: &[Symbol]) -> u32 {
    syms.iter().fold(0, |m, s| m | (1 << s.index()))
}

fn row_mask(row: &[Scalar]) -> u32 {
    row.iter().fold(0, |m, x| m | x.support())
}

fn combinations(n: usize, k: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize) {
    if out.len() >= MAX_MINORS {
        return;
    }
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        combinations(n, k, out, cur, i + 1);
        cur.pop();
    }
}

/// Primitive, sign-normalized numerator.
fn normalize_eq(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let c = p.content();
    let mut r = p.div_int(&c);
    r.normalize_sign();
    r
}

/// Denominator-cleared row, divided by its content only when that content
/// is free of the parameters: a parameter factor marks where the row
/// vanishes and must survive into the minors.
fn parameter_safe_row(r: Vec<Scalar>, pmask: u32) -> Vec<Scalar> {
    let p = primitive_vector(r.clone());
    let i = r.iter().position(|x| !x.is_zero()).expect("nonzero row");
    let factor = r[i].checked_div(&p[i]).expect("nonzero entry");
    if (factor.num().support() | factor.den().support()) & pmask == 0 {
        return p;
    }
    let den_free = Scalar::from_parts(factor.num().clone(), Poly::one()).expect("unit denominator");
    p.iter().map(|x| x.mul(&den_free)).collect()
}

fn push_unique(eqs: &mut Vec<Poly>, e: Poly) {
    if !e.is_zero() && !eqs.contains(&e) {
        eqs.push(e);
    }
}

fn as_scalar(p: Poly) -> Scalar {
    Scalar::from_parts(p, Poly::one()).expect("unit denominator")
}

/// Conditions on `params` under which `m` has nullity `expected`.
pub fn param_constraints(
    m: &ScalarMatrix,
    params: &[Symbol],
    expected: usize,
) -> Result<ConstraintReport, LinalgError> {
    let pmask = mask_of(params);
    let rows = m.to_rows();
    let (free, bound): (Vec<_>, Vec<_>) = rows.into_iter().partition(|r| row_mask(r) & pmask == 0);
    let basis = if free.is_empty() {
        (0..m.cols())
            .map(|i| {
                let mut v = vec![Scalar::zero(); m.cols()];
                v[i] = Scalar::one();
                ScalarMatrix::column(v)
            })
            .collect()
    } else {
        nullspace(&ScalarMatrix::from_rows(free)?)
    };
    let dim = basis.len();
    if dim < expected {
        return Err(LinalgError::Underdetermined(format!(
            "parameter-free rows already leave nullity {dim} < {expected}"
        )));
    }
    let mut eqs: Vec<Poly> = Vec::new();
    if !bound.is_empty() && dim > 0 {
        let nmat = ScalarMatrix::from_rows(
            (0..m.cols()).map(|r| basis.iter().map(|b| b.get(r, 0).clone()).collect()).collect(),
        )?;
        let restricted = ScalarMatrix::from_rows(bound)?.mul(&nmat);
        let mut distinct: Vec<Vec<Scalar>> = Vec::new();
        for r in restricted.to_rows() {
            if r.iter().all(Scalar::is_zero) {
                continue;
            }
            let p = parameter_safe_row(r, pmask);
            let neg: Vec<Scalar> = p.iter().map(Scalar::neg).collect();
            if !distinct.contains(&p) && !distinct.contains(&neg) {
                distinct.push(p);
            }
        }
        let k = dim - expected + 1;
        if distinct.len() >= k {
            let mut row_sets = Vec::new();
            combinations(distinct.len(), k, &mut row_sets, &mut Vec::new(), 0);
            let mut col_sets = Vec::new();
            combinations(dim, k, &mut col_sets, &mut Vec::new(), 0);
            let generic = !(pmask | (1 << sym::q().index()));
            for rs in &row_sets {
                for cs in &col_sets {
                    let sub = ScalarMatrix::from_rows(
                        rs.iter().map(|&r| cs.iter().map(|&c| distinct[r][c].clone()).collect()).collect(),
                    )?;
                    let d = determinant(&sub);
                    for (_, coeff) in d.num().coefficients_in(generic) {
                        let e = normalize_eq(&coeff);
                        push_unique(&mut eqs, e);
                    }
                }
            }
        }
    }
    let (bindings, residual) = solve_system(eqs, params)?;
    let reduced = m.substitute(&bindings)?;
    let ns = nullspace(&reduced);
    if ns.len() < expected {
        return Err(LinalgError::Underdetermined(format!(
            "solved parameters give nullity {} < {expected}",
            ns.len()
        )));
    }
    Ok(ConstraintReport { bindings, residual: residual.into_iter().map(as_scalar).collect(), nullity: ns.len(), nullspace: ns })
}

/// Chooses the next linear elimination step: an equation of degree one in a
/// parameter. Parameter-free coefficients are preferred over generic ones.
fn pick_linear(eqs: &[Poly], params: &[Symbol], pmask: u32) -> Option<(usize, Symbol)> {
    let mut best: Option<(usize, usize, usize, Symbol)> = None;
    for (i, e) in eqs.iter().enumerate() {
        for &p in params {
            if e.degree_in(p.index()) != 1 {
                continue;
            }
            let coef = &e.to_uni(p.index())[1];
            let rank = usize::from(coef.support() & pmask != 0);
            let key = (rank, e.len() + coef.len(), i, p);
            if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                best = Some(key);
            }
        }
    }
    best.map(|(_, _, i, p)| (i, p))
}

fn substitute_all(eqs: &[Poly], p: Symbol, v: &Scalar) -> Result<Vec<Poly>, LinalgError> {
    let mut out = Vec::new();
    for e in eqs {
        let s = as_scalar(e.clone()).subst(p, v)?;
        push_unique(&mut out, normalize_eq(s.num()));
    }
    Ok(out)
}

fn solve_system(mut eqs: Vec<Poly>, params: &[Symbol]) -> Result<(Bindings, Vec<Poly>), LinalgError> {
    let pmask = mask_of(params);
    let mut bindings = Bindings::new();
    loop {
        if let Some(bad) = eqs.iter().find(|e| e.support() & pmask == 0) {
            return Err(LinalgError::Inconsistent(format!(
                "condition {} = 0 does not involve the parameters",
                crate::scalars::poly_to_string(bad)
            )));
        }
        if eqs.is_empty() {
            break;
        }
        let step = if let Some((i, p)) = pick_linear(&eqs, params, pmask) {
            let uni = eqs[i].to_uni(p.index());
            Some((p, as_scalar(uni[0].neg()).checked_div(&as_scalar(uni[1].clone()))?))
        } else {
            univariate_root(&eqs, params)
        };
        let Some((p, v)) = step else { break };
        for b in bindings.values_mut() {
            *b = b.subst(p, &v)?;
        }
        bindings.insert(p, v.clone());
        eqs = substitute_all(&eqs, p, &v)?;
    }
    Ok((bindings, eqs))
}

/// The gcd of all equations involving only one parameter, when linear.
fn univariate_root(eqs: &[Poly], params: &[Symbol]) -> Option<(Symbol, Scalar)> {
    for &p in params {
        let others = mask_of(params) & !(1 << p.index());
        let mut g = Poly::zero();
        for e in eqs.iter().filter(|e| e.support() & others == 0 && e.degree_in(p.index()) > 0) {
            g = poly_gcd(&g, e);
        }
        if !g.is_zero() && g.degree_in(p.index()) == 1 {
            let uni = g.to_uni(p.index());
            let v = as_scalar(uni[0].neg()).checked_div(&as_scalar(uni[1].clone())).ok()?;
            return Some((p, v));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Scalar {
        Scalar::parse(s).unwrap()
    }

    #[test]
    fn determinant_small() {
        let m = ScalarMatrix::from_rows(vec![
            vec![p("1"), p("q"), p("0")],
            vec![p("0"), p("1"), p("z")],
            vec![p("z"), p("0"), p("1")],
        ])
        .unwrap();
        assert_eq!(determinant(&m), p("1 + q*z^2"));
    }

    #[test]
    fn linear_parameter_is_solved() {
        // Nullity one requires x - y*t proportional: t = z-free constant.
        let m = ScalarMatrix::from_rows(vec![
            vec![p("1"), p("-1"), p("0")],
            vec![p("t*z - 2*z"), p("0"), p("1")],
            vec![p("0"), p("z*t - 2*z"), p("2")],
        ])
        .unwrap();
        let rep = param_constraints(&m, &[sym::t()], 1).unwrap();
        assert_eq!(rep.bindings.get(&sym::t()), Some(&p("2")));
        assert_eq!(rep.nullity, 1);
    }

    #[test]
    fn contradiction_is_reported() {
        let m = ScalarMatrix::from_rows(vec![vec![p("1"), p("t")], vec![p("0"), p("1")]]).unwrap();
        let rep = param_constraints(&m, &[sym::t()], 1);
        assert!(matches!(rep, Err(LinalgError::Inconsistent(_)) | Err(LinalgError::Underdetermined(_))));
    }
}
