//! Boundary intertwining systems: assembly, solution, and verification of
//! the Yang-Baxter, reflection and unitarity relations.

mod derive;
pub mod kmatrices;
mod verify;

pub use derive::{derive, mismatch, spin_singlet, Derivation, Expectation};
pub use verify::{embed_r, fuse, fuse_all, verify_re, verify_unitarity, verify_ybe, FusionReport, PChoice};

use serde_json::{json, Value};

use crate::algebra::{eval_table, AlgebraError, Algebra, Boundary, CoproductTable, RepData};
use crate::glinalg::{nullspace, param_constraints, LinalgError, ScalarMatrix};
use crate::scalars::{sym, Bindings, Scalar, ScalarError, Symbol};
use crate::uqaff::{self, AffineCase};
use crate::yang::{self, TyCase};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundaryError {
    #[error("unknown case {0:?}")]
    UnknownCase(String),
    #[error("no printed solution matches: {0}")]
    NoMatch(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

impl From<serde_json::Error> for BoundaryError {
    fn from(e: serde_json::Error) -> Self {
        BoundaryError::Linalg(LinalgError::Json(e.to_string()))
    }
}

/// Trigonometric reflection is z ↦ 1/z, rational is u ↦ −u.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Trigonometric,
    Rational,
}

impl Family {
    pub fn spectral(self) -> Symbol {
        match self {
            Family::Trigonometric => sym::z(),
            Family::Rational => sym::u(),
        }
    }

    /// The second bulk spectral symbol used in two-site relations.
    pub fn second(self) -> Symbol {
        match self {
            Family::Trigonometric => sym::w(),
            Family::Rational => sym::v(),
        }
    }

    pub fn reflect(self, x: &Scalar) -> Scalar {
        match self {
            Family::Trigonometric => x.pow(-1),
            Family::Rational => x.neg(),
        }
    }

    /// `x/y` or `x - y`.
    pub fn ratio(self, x: &Scalar, y: &Scalar) -> Scalar {
        match self {
            Family::Trigonometric => x.checked_div(y).expect("nonzero spectral symbol"),
            Family::Rational => x.sub(y),
        }
    }

    /// `x y` or `x + y`.
    pub fn product(self, x: &Scalar, y: &Scalar) -> Scalar {
        match self {
            Family::Trigonometric => x.mul(y),
            Family::Rational => x.add(y),
        }
    }

    pub fn of(alg: Algebra) -> Family {
        if alg.is_yangian() {
            Family::Rational
        } else {
            Family::Trigonometric
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundaryKind {
    Singlet,
    Vector,
}

impl BoundaryKind {
    pub fn key(self) -> &'static str {
        match self {
            BoundaryKind::Singlet => "singlet",
            BoundaryKind::Vector => "vector",
        }
    }

    pub fn parse(s: &str) -> Option<BoundaryKind> {
        match s {
            "singlet" => Some(BoundaryKind::Singlet),
            "vector" => Some(BoundaryKind::Vector),
            _ => None,
        }
    }
}

/// A coideal subalgebra from either catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    Affine(AffineCase),
    Yangian(TyCase),
}

impl CaseId {
    pub const ALL: [CaseId; 8] = [
        CaseId::Affine(AffineCase::B1),
        CaseId::Affine(AffineCase::B2),
        CaseId::Affine(AffineCase::B5),
        CaseId::Affine(AffineCase::B6),
        CaseId::Yangian(TyCase::Sl2I),
        CaseId::Yangian(TyCase::Sl2II),
        CaseId::Yangian(TyCase::Gl11I),
        CaseId::Yangian(TyCase::Gl11II),
    ];

    pub fn key(self) -> &'static str {
        match self {
            CaseId::Affine(c) => c.key(),
            CaseId::Yangian(c) => c.key(),
        }
    }

    pub fn parse(key: &str) -> Result<CaseId, BoundaryError> {
        CaseId::ALL.into_iter().find(|c| c.key() == key).ok_or_else(|| BoundaryError::UnknownCase(key.into()))
    }

    pub fn algebra(self) -> Algebra {
        match self {
            CaseId::Affine(c) => c.algebra(),
            CaseId::Yangian(c) => c.algebra(),
        }
    }

    pub fn family(self) -> Family {
        Family::of(self.algebra())
    }

    /// The boundary the coideal was built for.
    pub fn native_kind(self) -> BoundaryKind {
        match self {
            CaseId::Affine(AffineCase::B1 | AffineCase::B5) | CaseId::Yangian(TyCase::Sl2I | TyCase::Gl11I) => {
                BoundaryKind::Singlet
            }
            _ => BoundaryKind::Vector,
        }
    }

    /// Free parameters of the twisted generators.
    pub fn params(self) -> Vec<Symbol> {
        match self {
            CaseId::Affine(AffineCase::B6) => vec![sym::dm()],
            CaseId::Affine(_) => vec![sym::dp(), sym::dm()],
            CaseId::Yangian(_) => vec![sym::t()],
        }
    }

    /// Named generators in block order with their coproduct tables.
    pub fn generator_tables(self) -> Result<Vec<(String, CoproductTable)>, BoundaryError> {
        let alg = self.algebra();
        let mut out = Vec::new();
        match self {
            CaseId::Affine(c) => {
                for (name, e) in uqaff::coideal_generators(c)? {
                    out.push((name, uqaff::coproduct_of(alg, &e)?));
                }
            }
            CaseId::Yangian(c) => {
                for (name, e) in yang::coideal_y_generators(c)? {
                    out.push((name, yang::y_coproduct_of(alg, &e)?.substitute(&yang::unit_alpha())?));
                }
            }
        }
        Ok(out)
    }

    /// The fundamental representation at the given spectral symbol.
    pub fn fundamental(self, spectral: Symbol) -> Result<RepData, BoundaryError> {
        Ok(match self {
            CaseId::Affine(_) => uqaff::rep_fund(self.algebra(), spectral)?,
            CaseId::Yangian(_) => yang::rep_y(self.algebra(), spectral)?,
        })
    }
}

/// A boundary intertwining problem.
#[derive(Clone, Debug)]
pub struct BoundaryProblem {
    pub case: CaseId,
    pub kind: BoundaryKind,
    pub family: Family,
    pub generators: Vec<(String, CoproductTable)>,
    pub bulk: RepData,
    pub boundary: Option<RepData>,
}

impl BoundaryProblem {
    /// Fundamental bulk representation; vector boundaries carry spectral `s`.
    pub fn new(case: CaseId, kind: BoundaryKind) -> Result<BoundaryProblem, BoundaryError> {
        let family = case.family();
        let bulk = case.fundamental(family.spectral())?;
        let boundary = match kind {
            BoundaryKind::Singlet => None,
            BoundaryKind::Vector => Some(case.fundamental(sym::s())?),
        };
        Ok(BoundaryProblem { case, kind, family, generators: case.generator_tables()?, bulk, boundary })
    }

    /// Replaces the bulk representation (e.g. a higher-spin module).
    pub fn with_bulk(mut self, bulk: RepData) -> BoundaryProblem {
        self.bulk = bulk;
        self
    }

    /// Dimension of the space K acts on.
    pub fn dim(&self) -> usize {
        self.bulk.dim() * self.boundary.as_ref().map_or(1, RepData::dim)
    }

    fn right(&self) -> Boundary<'_> {
        self.boundary.as_ref().map_or(Boundary::Counit, Boundary::Rep)
    }

    /// Direct and reflected coproduct matrices of one generator.
    pub fn generator_matrices(&self, table: &CoproductTable) -> Result<(ScalarMatrix, ScalarMatrix), BoundaryError> {
        let direct = eval_table(table, &self.bulk, self.right())?;
        let x = Scalar::sym(self.bulk.spectral);
        let flip: Bindings = [(self.bulk.spectral, self.family.reflect(&x))].into_iter().collect();
        let reflected = direct.substitute(&flip)?;
        Ok((direct, reflected))
    }

    /// Stacked system `M vec(K) = 0`, one block `I⊗D' − Dᵀ⊗I` per generator
    /// (column-major vectorization).
    pub fn build_system(&self) -> Result<ScalarMatrix, BoundaryError> {
        let n = self.dim();
        let id = ScalarMatrix::identity(n);
        let mut blocks = Vec::new();
        for (_, table) in &self.generators {
            let (d, dr) = self.generator_matrices(table)?;
            blocks.push(id.kron(&dr).sub(&d.transpose().kron(&id)));
        }
        Ok(ScalarMatrix::vstack(&blocks)?)
    }

    /// Whether `K` intertwines every generator.
    pub fn residual_zero(&self, k: &ScalarMatrix, bindings: &Bindings) -> Result<bool, BoundaryError> {
        for (_, table) in &self.generators {
            let (d, dr) = self.generator_matrices(table)?;
            let r = dr.mul(k).sub(&k.mul(&d)).substitute(bindings)?;
            if !r.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Outcome of solving an intertwining system.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub nullity: usize,
    /// Normalized solution when the nullspace is one-dimensional.
    pub k: Option<ScalarMatrix>,
    /// Nullspace basis reshaped to matrices.
    pub basis: Vec<ScalarMatrix>,
    pub bindings: Bindings,
    pub residual: Vec<Scalar>,
    pub residual_zero: bool,
}

impl SolveReport {
    pub fn free_symbols(&self, exclude: &[Symbol]) -> Vec<String> {
        let mut mask = 0u32;
        for m in self.k.iter().chain(if self.k.is_none() { self.basis.iter() } else { [].iter() }) {
            for x in m.entries() {
                mask |= x.support();
            }
        }
        let mut out: Vec<String> = (0..Symbol::count())
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| Symbol(i as u16))
            .filter(|s| !exclude.contains(s))
            .map(Symbol::name)
            .collect();
        out.sort();
        out
    }

    pub fn to_json(&self, exclude: &[Symbol]) -> Value {
        let k = match &self.k {
            Some(k) => k.to_json(),
            None => Value::Null,
        };
        let bindings: serde_json::Map<String, Value> =
            self.bindings.iter().map(|(s, v)| (s.name(), Value::String(v.to_string()))).collect();
        json!({
            "nullity": self.nullity,
            "k_matrix": k,
            "basis": self.basis.iter().map(ScalarMatrix::to_json).collect::<Vec<_>>(),
            "bindings": bindings,
            "residual": self.residual.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "residual_zero": self.residual_zero,
            "free_symbols": self.free_symbols(exclude),
        })
    }
}

/// Scales `k` so that its first nonzero diagonal (else any) entry is 1.
pub fn normalize(k: &ScalarMatrix) -> Result<ScalarMatrix, BoundaryError> {
    let n = k.rows();
    let pivot = (0..n)
        .map(|i| k.get(i, i))
        .find(|x| !x.is_zero())
        .or_else(|| k.entries().iter().find(|x| !x.is_zero()))
        .cloned();
    match pivot {
        Some(p) => Ok(k.scale(&p.inv()?)),
        None => Ok(k.clone()),
    }
}

fn reshape(v: &ScalarMatrix, n: usize) -> ScalarMatrix {
    ScalarMatrix::from_col_major(n, n, v.entries())
}

fn report_from(
    p: &BoundaryProblem,
    ns: &[ScalarMatrix],
    bindings: Bindings,
    residual: Vec<Scalar>,
) -> Result<SolveReport, BoundaryError> {
    let n = p.dim();
    let basis: Vec<ScalarMatrix> = ns.iter().map(|v| normalize(&reshape(v, n))).collect::<Result<_, _>>()?;
    let k = if basis.len() == 1 { Some(basis[0].clone()) } else { None };
    let mut residual_zero = true;
    for b in &basis {
        residual_zero &= p.residual_zero(b, &bindings)?;
    }
    Ok(SolveReport { nullity: basis.len(), k, basis, bindings, residual, residual_zero })
}

/// Solves the system with the given parameter values (others symbolic).
/// With a trivial nullspace the report carries the rank-drop conditions on
/// the case parameters, when they can be found.
pub fn solve_k(p: &BoundaryProblem, params: &Bindings) -> Result<SolveReport, BoundaryError> {
    let m = p.build_system()?.substitute(params)?;
    let ns = nullspace(&m);
    if ns.is_empty() {
        let free: Vec<Symbol> = p.case.params().into_iter().filter(|s| !params.contains_key(s)).collect();
        if !free.is_empty() {
            if let Ok(c) = param_constraints(&m, &free, 1) {
                let mut b = params.clone();
                b.extend(c.bindings.clone());
                let ns: Vec<ScalarMatrix> = c.nullspace.clone();
                let mut rep = report_from(p, &ns, b, c.residual)?;
                rep.nullity = 0;
                rep.k = None;
                return Ok(rep);
            }
        }
        return Ok(SolveReport {
            nullity: 0,
            k: None,
            basis: vec![],
            bindings: params.clone(),
            residual: vec![],
            residual_zero: true,
        });
    }
    report_from(p, &ns, params.clone(), vec![])
}

/// Solves for the parameters giving a one-dimensional nullspace.
pub fn solve_params(p: &BoundaryProblem, params: &[Symbol]) -> Result<SolveReport, BoundaryError> {
    let m = p.build_system()?;
    let c = param_constraints(&m, params, 1)?;
    report_from(p, &c.nullspace, c.bindings, c.residual)
}

/// The fundamental R-matrix of `alg` at `arg`.
pub fn r_matrix(alg: Algebra, arg: &Scalar) -> Result<ScalarMatrix, BoundaryError> {
    Ok(match Family::of(alg) {
        Family::Trigonometric => uqaff::r_matrix(alg, arg)?,
        Family::Rational => yang::r_matrix_rational(alg, arg)?,
    })
}

/// The displayed closed-form K for a case against a boundary kind, in the
/// constant `c` (and `a`, `b` for the general sl(2) singlet when `general`).
/// `None` for the one-function families, which have no closed form.
pub fn printed_k(case: CaseId, kind: BoundaryKind, general: bool) -> Option<ScalarMatrix> {
    let c = Scalar::sym(sym::c());
    let (a, b) = if general {
        (Scalar::sym(sym::a()), Scalar::sym(sym::b()))
    } else {
        (Scalar::zero(), Scalar::zero())
    };
    if kind == case.native_kind() {
        return Some(match case {
            CaseId::Affine(AffineCase::B1) => kmatrices::sl2q_singlet(&a, &b, &c),
            CaseId::Affine(AffineCase::B2) => kmatrices::sl2q_vector(&c),
            CaseId::Affine(AffineCase::B5) => kmatrices::gl11q_singlet(&c),
            CaseId::Affine(AffineCase::B6) => kmatrices::gl11q_vector(&c),
            CaseId::Yangian(TyCase::Sl2I) => kmatrices::sl2_singlet(&a, &b, &c),
            CaseId::Yangian(TyCase::Sl2II) => kmatrices::sl2_vector(&c),
            CaseId::Yangian(TyCase::Gl11I) => kmatrices::gl11_singlet(&c),
            CaseId::Yangian(TyCase::Gl11II) => kmatrices::gl11_vector(&c),
        });
    }
    match case {
        CaseId::Affine(AffineCase::B1) => Some(kmatrices::sl2q_singlet_coideal_vector(&c)),
        CaseId::Yangian(TyCase::Sl2I) => Some(kmatrices::sl2_singlet_coideal_vector(&c)),
        CaseId::Affine(AffineCase::B5) | CaseId::Yangian(TyCase::Gl11I) => None,
        _ => Some(ScalarMatrix::identity(2)),
    }
}
