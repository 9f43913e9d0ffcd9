use std::fmt;

use serde_json::{json, Value};

use reflectq::algebra::Algebra;
use reflectq::boundary::{
    self, derive, fuse_all, kmatrices, mismatch, printed_k, r_matrix, solve_params as solve_case_params,
    spin_singlet, BoundaryError, BoundaryKind, BoundaryProblem, CaseId, Derivation, Family,
};
use reflectq::glinalg::ScalarMatrix;
use reflectq::limits::{self, LimitError};
use reflectq::scalars::{sym, Bindings, STANDARD_SYMBOLS};
use reflectq::{Scalar, Symbol};

/// One line of a report.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: String,
    pub pass: bool,
    pub summary: String,
    pub payload: Value,
}

impl Outcome {
    pub fn to_json(&self) -> Value {
        let mut v = json!({ "id": self.id, "pass": self.pass });
        if let (Value::Object(dst), Value::Object(src)) = (&mut v, &self.payload) {
            for (k, x) in src {
                dst.insert(k.clone(), x.clone());
            }
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mark = if self.pass { "PASS" } else { "FAIL" };
        format!("{mark}  {}  {}\n", self.id, self.summary)
    }
}

#[derive(Debug)]
pub enum JobError {
    BadInput(String),
    Internal(String),
}

impl JobError {
    pub fn exit_code(&self) -> u8 {
        match self {
            JobError::BadInput(_) => 2,
            JobError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for JobError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JobError::BadInput(m) | JobError::Internal(m) => f.write_str(m),
        }
    }
}

impl From<BoundaryError> for JobError {
    fn from(e: BoundaryError) -> Self {
        match e {
            BoundaryError::UnknownCase(key) => JobError::BadInput(format!(
                "unknown case {key:?}; valid cases: {}",
                CaseId::ALL.iter().map(|c| c.key()).collect::<Vec<_>>().join(", ")
            )),
            other => JobError::Internal(other.to_string()),
        }
    }
}

impl From<LimitError> for JobError {
    fn from(e: LimitError) -> Self {
        match e {
            LimitError::UnknownCheck(..) => JobError::BadInput(e.to_string()),
            other => JobError::Internal(other.to_string()),
        }
    }
}

fn internal(e: impl fmt::Display) -> JobError {
    JobError::Internal(e.to_string())
}

/// Symbols that are coordinates rather than free constants.
fn coordinates() -> Vec<Symbol> {
    vec![sym::z(), sym::w(), sym::u(), sym::v(), sym::s(), sym::q(), sym::alpha()]
}

pub fn parse_set(items: &[String]) -> Result<Bindings, JobError> {
    let mut out = Bindings::new();
    for item in items {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| JobError::BadInput(format!("--set expects SYMBOL=SCALAR, got {item:?}")))?;
        let symbol = Symbol::lookup(name.trim()).ok_or_else(|| {
            JobError::BadInput(format!("unknown symbol {name:?}; valid symbols: {}", STANDARD_SYMBOLS.join(", ")))
        })?;
        let scalar = Scalar::parse(value.trim())
            .map_err(|e| JobError::BadInput(format!("cannot parse {value:?}: {e}")))?;
        out.insert(symbol, scalar);
    }
    Ok(out)
}

fn parse_algebra(key: &str) -> Result<Algebra, JobError> {
    Algebra::from_key(key).ok_or_else(|| {
        JobError::BadInput(format!(
            "unknown algebra {key:?}; valid algebras: {}",
            Algebra::ALL.iter().map(|a| a.key()).collect::<Vec<_>>().join(", ")
        ))
    })
}

fn parse_kind(case: CaseId, kind: Option<&str>) -> Result<BoundaryKind, JobError> {
    match kind {
        None => Ok(case.native_kind()),
        Some(k) => BoundaryKind::parse(k)
            .ok_or_else(|| JobError::BadInput(format!("unknown boundary kind {k:?}; valid kinds: singlet, vector"))),
    }
}

fn grading(case: CaseId) -> Vec<u8> {
    case.algebra().fundamental_grading()
}

pub fn verify_ybe(key: &str) -> Result<Outcome, JobError> {
    let alg = parse_algebra(key)?;
    let r = |x: &Scalar| r_matrix(alg, x);
    let zero = boundary::verify_ybe(Family::of(alg), &r, &alg.fundamental_grading())?.is_zero();
    Ok(Outcome {
        id: format!("ybe/{}", alg.key()),
        pass: zero,
        summary: format!("Yang-Baxter residual zero: {zero}"),
        payload: json!({ "algebra": alg.key(), "residual_zero": zero }),
    })
}

fn derivation_outcome(id: String, d: &Derivation) -> Outcome {
    let report = if d.kind == d.case.native_kind() { d.in_printed_form() } else { d.report.clone() };
    let mut payload = report.to_json(&coordinates());
    payload["case"] = json!(d.case.key());
    payload["kind"] = json!(d.kind.key());
    payload["expectation"] = json!(d.expectation.key());
    payload["matches_printed"] = json!(d.matches);
    if let Some(c) = &d.c_value {
        payload["c_identified"] = json!(c.to_string());
    }
    if !d.claims.is_empty() {
        payload["claims"] = d.claims.iter().map(|(c, ok)| json!({ "relation": c, "holds": ok })).collect();
    }
    let claims_ok = d.claims.iter().all(|(_, ok)| *ok);
    let pass = d.matches && claims_ok;
    let summary = format!(
        "{} boundary, nullity {}, matches printed: {}{}",
        d.kind.key(),
        d.report.nullity,
        d.matches,
        d.c_value.as_ref().map(|c| format!(", c = {c}")).unwrap_or_default()
    );
    Outcome { id, pass, summary, payload }
}

pub fn derive_k(key: &str, kind: Option<&str>, set: &Bindings) -> Result<Outcome, JobError> {
    let case = CaseId::parse(key)?;
    let kind = parse_kind(case, kind)?;
    if set.is_empty() {
        let d = if kind == case.native_kind() { derive(case)? } else { mismatch(case)? };
        let prefix = if kind == case.native_kind() { "derive" } else { "mismatch" };
        return Ok(derivation_outcome(format!("{prefix}/{}", case.key()), &d));
    }
    let problem = BoundaryProblem::new(case, kind)?;
    let report = boundary::solve_k(&problem, set)?;
    let pass = report.nullity > 0 && report.residual_zero;
    let mut payload = report.to_json(&coordinates());
    payload["case"] = json!(case.key());
    payload["kind"] = json!(kind.key());
    Ok(Outcome {
        id: format!("derive/{}/{}", case.key(), kind.key()),
        pass,
        summary: format!("{} boundary with overrides, nullity {}", kind.key(), report.nullity),
        payload,
    })
}

pub fn solve_params(key: &str, set: &Bindings) -> Result<Outcome, JobError> {
    let case = CaseId::parse(key)?;
    let problem = BoundaryProblem::new(case, case.native_kind())?;
    let params: Vec<Symbol> = case.params().into_iter().filter(|p| !set.contains_key(p)).collect();
    let problem = if set.is_empty() {
        problem
    } else {
        let mut p = problem;
        p.bulk = p.bulk.substitute(set).map_err(internal)?;
        p
    };
    let report = solve_case_params(&problem, &params)?;
    let d = derive(case)?;
    let mut payload = report.to_json(&coordinates());
    payload["case"] = json!(case.key());
    payload["claims"] = d.claims.iter().map(|(c, ok)| json!({ "relation": c, "holds": ok })).collect();
    let pass = report.nullity == 1 && report.residual_zero && d.claims.iter().all(|(_, ok)| *ok);
    let bindings: Vec<String> = report.bindings.iter().map(|(s, v)| format!("{} = {v}", s.name())).collect();
    Ok(Outcome {
        id: format!("params/{}", case.key()),
        pass,
        summary: if bindings.is_empty() { "no constraint on the parameters".into() } else { bindings.join(", ") },
        payload,
    })
}

pub fn verify_re(key: &str, kind: Option<&str>, set: &Bindings) -> Result<Outcome, JobError> {
    let case = CaseId::parse(key)?;
    let kind = parse_kind(case, kind)?;
    let k = printed_k(case, kind, true).ok_or_else(|| {
        JobError::BadInput(format!("{} against a {} boundary has no closed-form K", case.key(), kind.key()))
    })?;
    let k = k.substitute(set).map_err(internal)?;
    let zero = re_zero(case, &k, kind)?;
    let suffix = if kind == case.native_kind() { String::new() } else { format!("/{}", kind.key()) };
    Ok(Outcome {
        id: format!("re/{}{suffix}", case.key()),
        pass: zero,
        summary: format!("reflection residual zero: {zero}"),
        payload: json!({ "case": case.key(), "kind": kind.key(), "residual_zero": zero }),
    })
}

fn re_zero(case: CaseId, k: &ScalarMatrix, kind: BoundaryKind) -> Result<bool, JobError> {
    let alg = case.algebra();
    let g = grading(case);
    let r = |x: &Scalar| r_matrix(alg, x);
    let bg = (kind == BoundaryKind::Vector).then_some(&g);
    Ok(boundary::verify_re(case.family(), &r, k, &g, bg)?.is_zero())
}

pub fn verify_unitarity(key: &str, set: &Bindings) -> Result<Outcome, JobError> {
    let case = CaseId::parse(key)?;
    if case.native_kind() != BoundaryKind::Singlet {
        return Err(JobError::BadInput(format!(
            "unitarity is checked for singlet cases; valid cases: {}",
            CaseId::ALL.iter().filter(|c| c.native_kind() == BoundaryKind::Singlet).map(|c| c.key()).collect::<Vec<_>>().join(", ")
        )));
    }
    let k = printed_k(case, BoundaryKind::Singlet, false).expect("singlet closed form");
    let k = k.substitute(set).map_err(internal)?;
    let zero = boundary::verify_unitarity(case.family(), &k)?.is_zero();
    Ok(Outcome {
        id: format!("unitarity/{}", case.key()),
        pass: zero,
        summary: format!("K(reflected) K = 1: {zero}"),
        payload: json!({ "case": case.key(), "residual_zero": zero }),
    })
}

pub fn fuse(key: &str) -> Result<Outcome, JobError> {
    let case = CaseId::parse(key)?;
    if case != CaseId::parse("uq-sl2-B1")? {
        return Err(JobError::BadInput(format!("fusion is available for: uq-sl2-B1; got {key:?}")));
    }
    let alg = case.algebra();
    let c = Scalar::sym(sym::c());
    let k = kmatrices::sl2q_singlet(&Scalar::zero(), &Scalar::zero(), &c);
    let target = kmatrices::sl2q_singlet_coideal_vector(&c);
    let r = |x: &Scalar| r_matrix(alg, x);
    let reports = fuse_all(case.family(), &k, &r, &grading(case), sym::s(), &target)?;
    let pass = reports.iter().any(|f| f.matches && f.re_zero == Some(true));
    let choices: Vec<Value> = reports
        .iter()
        .map(|f| json!({ "p": f.choice.key(), "matches": f.matches, "re_zero": f.re_zero }))
        .collect();
    let worked: Vec<&str> = reports.iter().filter(|f| f.matches).map(|f| f.choice.key()).collect();
    Ok(Outcome {
        id: format!("fuse/{}", case.key()),
        pass,
        summary: format!("reproduces the vector solution with P = {}", if worked.is_empty() { "none".into() } else { worked.join(", ") }),
        payload: json!({ "case": case.key(), "choices": choices }),
    })
}

pub fn limit_check(id: &str, trunc: i32) -> Result<Outcome, JobError> {
    let r = limits::limit_check(id, trunc)?;
    let mut summary = format!("h^0 match: {}", r.matches);
    if let Some(p) = &r.pole {
        summary.push_str(&format!(", pole: {p}"));
    }
    for n in &r.notes {
        summary.push_str(&format!("; {n}"));
    }
    Ok(Outcome { id: format!("limit/{}", r.id), pass: r.matches, summary, payload: r.to_json() })
}

fn spin_one() -> Result<Outcome, JobError> {
    let r = spin_singlet(2)?;
    Ok(Outcome {
        id: "spin/uq-sl2-B1/l=1".into(),
        pass: r.nullity == 1 && r.residual_zero,
        summary: format!("spin-1 singlet nullity {}", r.nullity),
        payload: json!({ "nullity": r.nullity, "residual_zero": r.residual_zero }),
    })
}

/// Every acceptance-level check, sorted by id.
pub fn suite(trunc: i32) -> Result<Vec<Outcome>, JobError> {
    let none = Bindings::new();
    let mut out = Vec::new();
    for alg in Algebra::ALL {
        out.push(verify_ybe(alg.key())?);
    }
    for case in CaseId::ALL {
        out.push(derive_k(case.key(), None, &none)?);
        let other = match case.native_kind() {
            BoundaryKind::Singlet => "vector",
            BoundaryKind::Vector => "singlet",
        };
        out.push(derive_k(case.key(), Some(other), &none)?);
        out.push(solve_params(case.key(), &none)?);
        out.push(verify_re(case.key(), None, &none)?);
        if case.native_kind() == BoundaryKind::Singlet {
            out.push(verify_unitarity(case.key(), &none)?);
        }
    }
    for key in ["uq-sl2-B1", "y-sl2-I"] {
        out.push(verify_re(key, Some("vector"), &none)?);
    }
    out.push(fuse("uq-sl2-B1")?);
    out.push(spin_one()?);
    for id in limits::check_ids() {
        out.push(limit_check(id, trunc)?);
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}
