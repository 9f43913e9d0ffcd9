use crate::glinalg::{graded_permutation, Grading, ScalarMatrix};
use crate::scalars::{Bindings, Scalar, Symbol};

use super::{normalize, BoundaryError, Family};

/// An R-matrix as a function of its argument.
pub type RFn<'a> = &'a dyn Fn(&Scalar) -> Result<ScalarMatrix, BoundaryError>;

fn at(m: &ScalarMatrix, from: Symbol, to: &Scalar) -> Result<ScalarMatrix, BoundaryError> {
    let b: Bindings = [(from, to.clone())].into_iter().collect();
    Ok(m.substitute(&b)?)
}

/// `R12`, `R13`, `R23` on `V ⊗ V ⊗ V`.
pub fn embed_r(r: &ScalarMatrix, g: &Grading, slots: (usize, usize)) -> ScalarMatrix {
    let n = g.len();
    let id = ScalarMatrix::identity(n);
    match slots {
        (1, 2) => r.kron(&id),
        (2, 3) => id.kron(r),
        _ => {
            let p23 = id.kron(&graded_permutation(g, g));
            ScalarMatrix::product([&p23, &r.kron(&id), &p23])
        }
    }
}

/// `R12(x∘y⁻¹) R13(x) R23(y) − R23(y) R13(x) R12(x∘y⁻¹)` with symbolic x, y.
pub fn verify_ybe(family: Family, r: RFn<'_>, g: &Grading) -> Result<ScalarMatrix, BoundaryError> {
    let (x, y) = (Scalar::sym(family.spectral()), Scalar::sym(family.second()));
    let r12 = embed_r(&r(&family.ratio(&x, &y))?, g, (1, 2));
    let r13 = embed_r(&r(&x)?, g, (1, 3));
    let r23 = embed_r(&r(&y)?, g, (2, 3));
    Ok(ScalarMatrix::product([&r12, &r13, &r23]).sub(&ScalarMatrix::product([&r23, &r13, &r12])))
}

/// Reflection-equation residual
/// `R21(x∘y⁻¹) K13(x) R12(x∘y) K23(y) − K23(y) R21(x∘y) K13(x) R12(x∘y⁻¹)`.
/// The displayed R intertwines the coproduct in the opposite order, so the
/// outer factors carry R21; for the P-symmetric rational R this is moot.
/// `k` is written in the family's spectral symbol and acts on `V` (singlet)
/// or `V ⊗ W` (vector, `boundary` given).
pub fn verify_re(
    family: Family,
    r: RFn<'_>,
    k: &ScalarMatrix,
    g: &Grading,
    boundary: Option<&Grading>,
) -> Result<ScalarMatrix, BoundaryError> {
    let n = g.len();
    let wdim = boundary.map_or(1, Grading::len);
    if k.rows() != n * wdim || !k.is_square() {
        return Err(crate::glinalg::LinalgError::Dimension(format!(
            "K is {}x{}, expected {}",
            k.rows(),
            k.cols(),
            n * wdim
        ))
        .into());
    }
    let spec = family.spectral();
    let (x, y) = (Scalar::sym(spec), Scalar::sym(family.second()));
    let (kx, ky) = (at(k, spec, &x)?, at(k, spec, &y)?);
    let idv = ScalarMatrix::identity(n);
    let idw = ScalarMatrix::identity(wdim);
    let p = graded_permutation(g, g).kron(&idw);
    let k13 = ScalarMatrix::product([&p, &idv.kron(&kx), &p]);
    let k23 = idv.kron(&ky);
    let r_minus = r(&family.ratio(&x, &y))?.kron(&idw);
    let r_plus = r(&family.product(&x, &y))?.kron(&idw);
    let flip = |m: &ScalarMatrix| ScalarMatrix::product([&p, m, &p]);
    let lhs = ScalarMatrix::product([&flip(&r_minus), &k13, &r_plus, &k23]);
    let rhs = ScalarMatrix::product([&k23, &flip(&r_plus), &k13, &r_minus]);
    Ok(lhs.sub(&rhs))
}

/// `K(reflected) K − I`.
pub fn verify_unitarity(family: Family, k: &ScalarMatrix) -> Result<ScalarMatrix, BoundaryError> {
    let spec = family.spectral();
    let kr = at(k, spec, &family.reflect(&Scalar::sym(spec)))?;
    Ok(kr.mul(k).sub(&ScalarMatrix::identity(k.rows())))
}

/// `P R(z s) (1 ⊗ K_S(z)) P R(z/s)` for a 2×2 singlet solution in `z`.
pub fn fuse(k_singlet: &ScalarMatrix, r: RFn<'_>, p: &ScalarMatrix, s: Symbol) -> Result<ScalarMatrix, BoundaryError> {
    let z = Scalar::sym(crate::scalars::sym::z());
    let s = Scalar::sym(s);
    let n = k_singlet.rows();
    let one_k = ScalarMatrix::identity(n).kron(k_singlet);
    let zs = z.mul(&s);
    let z_s = z.checked_div(&s)?;
    Ok(ScalarMatrix::product([p, &r(&zs)?, &one_k, p, &r(&z_s)?]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PChoice {
    /// The graded permutation.
    Permutation,
    /// The R-matrix at argument 0.
    RAtZero,
}

impl PChoice {
    pub fn key(self) -> &'static str {
        match self {
            PChoice::Permutation => "permutation",
            PChoice::RAtZero => "R(0)",
        }
    }
}

#[derive(Clone, Debug)]
pub struct FusionReport {
    pub choice: PChoice,
    /// Fused matrix scaled to unit (1,1) entry.
    pub fused: ScalarMatrix,
    /// Equal to the target after (1,1) normalization.
    pub matches: bool,
    /// Reflection equation for the fused matrix, checked only on a match.
    pub re_zero: Option<bool>,
}

/// Fuses with both choices of `P` and compares with `target`.
pub fn fuse_all(
    family: Family,
    k_singlet: &ScalarMatrix,
    r: RFn<'_>,
    g: &Grading,
    s: Symbol,
    target: &ScalarMatrix,
) -> Result<Vec<FusionReport>, BoundaryError> {
    let mut out = Vec::new();
    let target = normalize(target)?;
    for choice in [PChoice::Permutation, PChoice::RAtZero] {
        let p = match choice {
            PChoice::Permutation => graded_permutation(g, g),
            PChoice::RAtZero => r(&Scalar::zero())?,
        };
        let fused = normalize(&fuse(k_singlet, r, &p, s)?)?;
        let matches = fused == target;
        let re_zero = if matches { Some(verify_re(family, r, &fused, g, Some(g))?.is_zero()) } else { None };
        out.push(FusionReport { choice, fused, matches, re_zero });
    }
    Ok(out)
}
