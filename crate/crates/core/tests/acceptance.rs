//! Acceptance report: one line per criterion. Every exact check is repeated
//! in floating point at random rational points as a guard against
//! canonical-form bugs; the floating side rebuilds tensor embeddings,
//! products and fusion independently of the exact code paths.

mod common;

use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use reflectq::algebra::Algebra;
use reflectq::boundary::{
    self, derive, fuse_all, kmatrices, mismatch, printed_k, r_matrix, spin_singlet, BoundaryKind, BoundaryProblem,
    CaseId, Derivation, Expectation, Family,
};
use reflectq::glinalg::ScalarMatrix;
use reflectq::hseries::DEFAULT_TRUNC;
use reflectq::limits;
use reflectq::scalars::{sym, Bindings, Symbol, MAX_SYMBOLS};
use reflectq::Scalar;

const POINTS: usize = 25;
const TOL: f64 = 1e-9;

/// Dense floating matrix.
#[derive(Clone, Debug)]
struct Num {
    rows: usize,
    cols: usize,
    a: Vec<f64>,
}

impl Num {
    fn of(m: &ScalarMatrix, p: &[f64]) -> Num {
        Num { rows: m.rows(), cols: m.cols(), a: m.eval_f64(p) }
    }

    fn identity(n: usize) -> Num {
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + i] = 1.0;
        }
        Num { rows: n, cols: n, a }
    }

    /// `P(v_i ⊗ v_j) = (−1)^{|i||j|} v_j ⊗ v_i`.
    fn flip(g: &[u8]) -> Num {
        let n = g.len();
        let mut p = Num { rows: n * n, cols: n * n, a: vec![0.0; n * n * n * n] };
        for i in 0..n {
            for j in 0..n {
                let sign = if g[i] & g[j] == 1 { -1.0 } else { 1.0 };
                p.a[(j * n + i) * n * n + i * n + j] = sign;
            }
        }
        p
    }

    fn get(&self, r: usize, c: usize) -> f64 {
        self.a[r * self.cols + c]
    }

    fn mul(&self, o: &Num) -> Num {
        let mut a = vec![0.0; self.rows * o.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x != 0.0 {
                    for j in 0..o.cols {
                        a[i * o.cols + j] += x * o.get(k, j);
                    }
                }
            }
        }
        Num { rows: self.rows, cols: o.cols, a }
    }

    fn kron(&self, o: &Num) -> Num {
        let (rows, cols) = (self.rows * o.rows, self.cols * o.cols);
        let mut a = vec![0.0; rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        a[(i * o.rows + k) * cols + j * o.cols + l] = self.get(i, j) * o.get(k, l);
                    }
                }
            }
        }
        Num { rows, cols, a }
    }

    fn scaled(&self, s: f64) -> Num {
        Num { rows: self.rows, cols: self.cols, a: self.a.iter().map(|x| x * s).collect() }
    }

    fn product(ms: &[&Num]) -> Num {
        ms[1..].iter().fold(ms[0].clone(), |acc, m| acc.mul(m))
    }

    fn tame(&self) -> bool {
        self.a.iter().all(|x| x.is_finite() && x.abs() < 1e8)
    }

    /// `None` near a pole, otherwise agreement within the relative tolerance.
    fn agrees(&self, o: &Num) -> Option<bool> {
        if !self.tame() || !o.tame() {
            return None;
        }
        let scale = self.a.iter().chain(&o.a).fold(1.0f64, |m, x| m.max(x.abs()));
        Some(self.a.iter().zip(&o.a).all(|(x, y)| (x - y).abs() <= TOL * scale))
    }
}

struct Sampler(ChaCha8Rng);

impl Sampler {
    fn point(&mut self) -> Vec<f64> {
        (0..MAX_SYMBOLS).map(|_| self.0.gen_range(1..=40) as f64 / self.0.gen_range(1..=13) as f64).collect()
    }

    /// Runs `check` at `POINTS` pole-free points.
    fn all(&mut self, check: impl Fn(&[f64]) -> Option<bool>) -> bool {
        let (mut good, mut tries) = (0, 0);
        while good < POINTS {
            tries += 1;
            if tries > 40 * POINTS {
                return false;
            }
            match check(&self.point()) {
                Some(true) => good += 1,
                Some(false) => return false,
                None => {}
            }
        }
        true
    }
}

fn with(p: &[f64], s: Symbol, v: f64) -> Vec<f64> {
    let mut q = p.to_vec();
    q[s.index()] = v;
    q
}

/// Sets bound parameters to their values at `p`.
fn pin(p: &[f64], b: &Bindings) -> Vec<f64> {
    let mut q = p.to_vec();
    for (s, v) in b {
        q[s.index()] = v.eval_f64(p);
    }
    q
}

fn ratio(f: Family, x: f64, y: f64) -> f64 {
    match f {
        Family::Trigonometric => x / y,
        Family::Rational => x - y,
    }
}

fn product(f: Family, x: f64, y: f64) -> f64 {
    match f {
        Family::Trigonometric => x * y,
        Family::Rational => x + y,
    }
}

fn reflect(f: Family, x: f64) -> f64 {
    match f {
        Family::Trigonometric => 1.0 / x,
        Family::Rational => -x,
    }
}

/// The R-matrix of `alg` written in the family's spectral symbol.
struct RNum {
    family: Family,
    r: ScalarMatrix,
    g: Vec<u8>,
}

impl RNum {
    fn new(alg: Algebra) -> RNum {
        let family = Family::of(alg);
        let r = r_matrix(alg, &Scalar::sym(family.spectral())).unwrap();
        RNum { family, r, g: alg.fundamental_grading() }
    }

    fn at(&self, p: &[f64], arg: f64) -> Num {
        Num::of(&self.r, &with(p, self.family.spectral(), arg))
    }

    fn ybe(&self, p: &[f64]) -> Option<bool> {
        let f = self.family;
        let (x, y) = (p[f.spectral().index()], p[f.second().index()]);
        let id = Num::identity(self.g.len());
        let p23 = id.kron(&Num::flip(&self.g));
        let r12 = self.at(p, ratio(f, x, y)).kron(&id);
        let r13 = Num::product(&[&p23, &self.at(p, x).kron(&id), &p23]);
        let r23 = id.kron(&self.at(p, y));
        Num::product(&[&r12, &r13, &r23]).agrees(&Num::product(&[&r23, &r13, &r12]))
    }

    /// Reflection equation for `k` (in the spectral symbol) on `V` or `V ⊗ W`.
    fn re(&self, k: &ScalarMatrix, p: &[f64]) -> Option<bool> {
        let f = self.family;
        let spec = f.spectral();
        let (x, y) = (p[spec.index()], p[f.second().index()]);
        let n = self.g.len();
        let (idv, idw) = (Num::identity(n), Num::identity(k.rows() / n));
        let kx = Num::of(k, &with(p, spec, x));
        let ky = Num::of(k, &with(p, spec, y));
        let pp = Num::flip(&self.g).kron(&idw);
        let k13 = Num::product(&[&pp, &idv.kron(&kx), &pp]);
        let k23 = idv.kron(&ky);
        let rm = self.at(p, ratio(f, x, y)).kron(&idw);
        let rp = self.at(p, product(f, x, y)).kron(&idw);
        let flip = |m: &Num| Num::product(&[&pp, m, &pp]);
        Num::product(&[&flip(&rm), &k13, &rp, &k23]).agrees(&Num::product(&[&k23, &flip(&rp), &k13, &rm]))
    }

    fn unitary(&self, k: &ScalarMatrix, p: &[f64]) -> Option<bool> {
        let spec = self.family.spectral();
        let kr = Num::of(k, &with(p, spec, reflect(self.family, p[spec.index()])));
        kr.mul(&Num::of(k, p)).agrees(&Num::identity(k.rows()))
    }
}

/// `D(x̄) K = K D(x)` for every generator of the problem.
fn intertwines(problem: &BoundaryProblem, gens: &[ScalarMatrix], k: &ScalarMatrix, p: &[f64]) -> Option<bool> {
    let spec = problem.bulk.spectral;
    let pr = with(p, spec, reflect(problem.family, p[spec.index()]));
    let kn = Num::of(k, p);
    let mut all = true;
    for d in gens {
        all &= Num::of(d, &pr).mul(&kn).agrees(&kn.mul(&Num::of(d, p)))?;
    }
    Some(all)
}

fn generator_mats(problem: &BoundaryProblem) -> Vec<ScalarMatrix> {
    problem.generators.iter().map(|(_, t)| problem.generator_matrices(t).unwrap().0).collect()
}

fn normalized(m: &Num) -> Num {
    m.scaled(1.0 / m.get(0, 0))
}

/// The printed parameter relations as `(lhs, rhs)`, at a point where `c` is set.
fn relations(case: CaseId, p: &[f64]) -> Vec<(f64, f64)> {
    let v = |s: Symbol| p[s.index()];
    let (q, c, s, t, dp, dm) = (v(sym::q()), v(sym::c()), v(sym::s()), v(sym::t()), v(sym::dp()), v(sym::dm()));
    let inv_qsum = 1.0 / (q + 1.0 / q);
    match case.key() {
        "uq-sl2-B1" => vec![(q * dp, c), (dm / q, c)],
        "uq-sl2-B2" => vec![(q * q * dp, inv_qsum), (dm / (q * q), inv_qsum), (c, s + 1.0 / s)],
        "uq-gl11-B5" => vec![(dp, q * c), (-dm, q * c)],
        "uq-gl11-B6" => vec![(dm, (1.0 / q - q) / 2.0), (c, s + 1.0 / s)],
        "y-sl2-I" => vec![(t, c)],
        "y-sl2-II" => vec![(t, -2.0), (c, s)],
        "y-gl11-I" => vec![(t, c + 0.5)],
        _ => vec![(t, 0.0), (c, s)],
    }
}

struct Line {
    ok: bool,
    numeric: bool,
    text: String,
}

fn line(ok: bool, numeric: bool, text: impl Into<String>) -> Line {
    Line { ok, numeric, text: text.into() }
}

fn r_fn(alg: Algebra) -> impl Fn(&Scalar) -> Result<ScalarMatrix, boundary::BoundaryError> {
    move |x| r_matrix(alg, x)
}

fn criterion_1(s: &mut Sampler) -> Line {
    let (mut ok, mut num) = (true, true);
    for alg in Algebra::ALL {
        let r = r_fn(alg);
        ok &= boundary::verify_ybe(Family::of(alg), &r, &alg.fundamental_grading()).unwrap().is_zero();
        let rn = RNum::new(alg);
        num &= s.all(|p| rn.ybe(p));
    }
    line(ok, num, "Yang-Baxter residual is exactly zero for all four R-matrices")
}

fn native_k(case: CaseId) -> ScalarMatrix {
    printed_k(case, case.native_kind(), true).unwrap()
}

fn criterion_2(s: &mut Sampler) -> Line {
    let (mut ok, mut num) = (true, true);
    for case in CaseId::ALL {
        let alg = case.algebra();
        let g = alg.fundamental_grading();
        let k = native_k(case);
        let bg = (case.native_kind() == BoundaryKind::Vector).then_some(&g);
        ok &= boundary::verify_re(case.family(), &r_fn(alg), &k, &g, bg).unwrap().is_zero();
        let rn = RNum::new(alg);
        num &= s.all(|p| rn.re(&k, p));
    }
    line(ok, num, "reflection residual is exactly zero for all eight displayed K-matrices")
}

fn expected_c(case: CaseId) -> Option<Scalar> {
    match case.key() {
        "uq-sl2-B2" | "uq-gl11-B6" => Some(Scalar::parse("s + 1/s").unwrap()),
        "y-sl2-II" | "y-gl11-II" => Some(Scalar::var("s")),
        _ => None,
    }
}

fn criterion_3(s: &mut Sampler, ds: &[Derivation]) -> Line {
    let (mut ok, mut num) = (true, true);
    let mut shown = Vec::new();
    for d in ds {
        let case = d.case;
        ok &= d.matches && d.report.nullity == 1 && d.report.residual_zero;
        if let Some(c) = expected_c(case) {
            ok &= d.c_value.as_ref() == Some(&c);
        }
        shown.push(format!("{} c = {}", case.key(), d.c_value.as_ref().map_or("?".into(), |c| c.to_string())));
        let (Some(k), Some(cv)) = (d.report.k.as_ref(), d.c_value.as_ref()) else {
            num = false;
            continue;
        };
        let problem = BoundaryProblem::new(case, case.native_kind()).unwrap();
        let gens = generator_mats(&problem);
        let printed = printed_k(case, case.native_kind(), false).unwrap();
        num &= s.all(|p| {
            let p = pin(p, &d.report.bindings);
            let pc = with(&p, sym::c(), cv.eval_f64(&p));
            let same = Num::of(k, &p).agrees(&Num::of(&printed, &pc))?;
            Some(same && intertwines(&problem, &gens, k, &p)?)
        });
    }
    line(ok, num, format!("derived K equals the displayed K in all eight cases ({})", shown.join(", ")))
}

fn criterion_4(s: &mut Sampler, ds: &[Derivation]) -> Line {
    let (mut ok, mut num) = (true, true);
    for d in ds {
        ok &= !d.claims.is_empty() && d.claims.iter().all(|(_, h)| *h);
        let Some(cv) = d.c_value.as_ref() else {
            num = false;
            continue;
        };
        num &= s.all(|p| {
            let p = pin(p, &d.report.bindings);
            let pc = with(&p, sym::c(), cv.eval_f64(&p));
            if !pc.iter().all(|x| x.is_finite()) {
                return None;
            }
            Some(relations(d.case, &pc).iter().all(|(l, r)| (l - r).abs() <= TOL * l.abs().max(r.abs()).max(1.0)))
        });
    }
    line(ok, num, "solved parameters satisfy every displayed constraint")
}

fn criterion_5(s: &mut Sampler) -> Line {
    let (mut ok, mut num) = (true, true);
    let mut shown = Vec::new();
    for case in CaseId::ALL {
        let m = mismatch(case).unwrap();
        let want = match case.key() {
            "uq-sl2-B1" | "y-sl2-I" => Expectation::Unique,
            "uq-gl11-B5" | "y-gl11-I" => Expectation::OneFunction,
            _ => Expectation::Trivial,
        };
        ok &= m.matches && m.expectation == want;
        shown.push(format!("{} {} (nullity {})", case.key(), m.expectation.key(), m.report.nullity));
        let problem = BoundaryProblem::new(case, m.kind).unwrap();
        let gens = generator_mats(&problem);
        let b = &m.report.bindings;
        num &= s.all(|p| {
            let p = pin(p, b);
            let mut all = true;
            for k in &m.report.basis {
                all &= intertwines(&problem, &gens, k, &p)?;
            }
            match want {
                Expectation::Unique => {
                    let shown = normalized(&Num::of(&printed_k(case, m.kind, false).unwrap(), &p));
                    all &= Num::of(m.report.k.as_ref()?, &p).agrees(&shown)?;
                }
                Expectation::Trivial => all &= Num::of(m.report.k.as_ref()?, &p).agrees(&Num::identity(2))?,
                Expectation::OneFunction => all &= intertwines(&problem, &gens, m.printed.as_ref()?, &p)?,
            }
            Some(all)
        });
    }
    line(ok, num, format!("mismatched pairings behave as remarked: {}", shown.join(", ")))
}

fn criterion_6(s: &mut Sampler) -> Line {
    let alg = Algebra::UqSl2;
    let g = alg.fundamental_grading();
    let c = Scalar::sym(sym::c());
    let ks = kmatrices::sl2q_singlet(&Scalar::zero(), &Scalar::zero(), &c);
    let target = kmatrices::sl2q_singlet_coideal_vector(&c);
    let reports = fuse_all(Family::Trigonometric, &ks, &r_fn(alg), &g, sym::s(), &target).unwrap();
    let winners: Vec<_> = reports.iter().filter(|f| f.matches && f.re_zero == Some(true)).collect();
    let ok = !winners.is_empty();
    let rn = RNum::new(alg);
    let z = sym::z();
    let num = winners.iter().all(|w| s.all(|p| rn.re(&w.fused, p)))
        && s.all(|p| {
            let (zv, sv) = (p[z.index()], p[sym::s().index()]);
            let pp = Num::flip(&g);
            let one_k = Num::identity(2).kron(&Num::of(&ks, p));
            let fused = Num::product(&[&pp, &rn.at(p, zv * sv), &one_k, &pp, &rn.at(p, zv / sv)]);
            normalized(&fused).agrees(&normalized(&Num::of(&target, p)))
        });
    let names: Vec<&str> = winners.iter().map(|w| w.choice.key()).collect();
    line(ok, num, format!("fusion reproduces the vector solution and passes the reflection equation with P = {}", names.join(", ")))
}

fn criterion_7(s: &mut Sampler) -> Line {
    let (mut ok, mut num) = (true, true);
    for case in CaseId::ALL.into_iter().filter(|c| c.native_kind() == BoundaryKind::Singlet) {
        let k = printed_k(case, BoundaryKind::Singlet, false).unwrap();
        ok &= boundary::verify_unitarity(case.family(), &k).unwrap().is_zero();
        let rn = RNum::new(case.algebra());
        num &= s.all(|p| rn.unitary(&k, p));
    }
    line(ok, num, "K(reflected) K = 1 for the four singlet K-matrices")
}

fn criterion_8(s: &mut Sampler) -> Line {
    let results = limits::run_all(DEFAULT_TRUNC).unwrap();
    let ok = results.iter().all(|r| r.matches && r.negative_orders_zero);
    let num = results.iter().all(|r| {
        r.lhs_at_h0.iter().zip(&r.rhs).all(|(l, rhs)| s.all(|p| Num::of(l, p).agrees(&Num::of(rhs, p))))
    });
    line(ok, num, format!("{} limit checks match at order zero with no negative-order terms", results.len()))
}

/// Returns the line and whether the only failures are the known display
/// discrepancies.
fn criterion_9() -> (Line, bool) {
    let count = |v: Vec<(String, bool)>| (v.iter().filter(|(_, ok)| *ok).count(), v.len());
    let (rel_ok, rel_n) = count(common::relations());
    let coassoc: Vec<(String, bool)> = Algebra::ALL.into_iter().flat_map(common::coassociativity).collect();
    let (co_ok, co_n) = count(coassoc);
    let displays = common::displays();
    let off: Vec<String> = displays.iter().filter(|d| !d.matches()).map(|d| d.label.clone()).collect();
    let spin = spin_singlet(2).unwrap();
    let spin_ok = spin.nullity == 1 && spin.residual_zero;
    let structural = rel_ok == rel_n && co_ok == co_n && spin_ok;
    let known = ["uq-gl11 vector B0-", "y-gl11 type II Ett+", "y-gl11 type II Ett-"];
    let expected_only = structural && off.iter().map(String::as_str).eq(known);
    let text = format!(
        "relations {rel_ok}/{rel_n}, coassociativity {co_ok}/{co_n}, spin-1 nullity {}, displayed tensor matrices {}/{}{}",
        spin.nullity,
        displays.len() - off.len(),
        displays.len(),
        if off.is_empty() { String::new() } else { format!("; differing from the coproduct: {}", off.join(", ")) }
    );
    (line(structural && off.is_empty(), true, text), expected_only)
}

/// The floating check must notice a K that is off in one entry.
fn oracle_rejects_perturbation(s: &mut Sampler) -> bool {
    let case = CaseId::ALL[0];
    let mut k = native_k(case);
    k.set(0, 1, Scalar::parse("z/1000").unwrap());
    let rn = RNum::new(case.algebra());
    !s.all(|p| rn.re(&k, p))
}

fn main() -> ExitCode {
    let mut s = Sampler(ChaCha8Rng::seed_from_u64(0x5eed));
    let ds: Vec<Derivation> = CaseId::ALL.into_iter().map(|c| derive(c).unwrap()).collect();
    let mut lines = vec![
        criterion_1(&mut s),
        criterion_2(&mut s),
        criterion_3(&mut s, &ds),
        criterion_4(&mut s, &ds),
        criterion_5(&mut s),
        criterion_6(&mut s),
        criterion_7(&mut s),
        criterion_8(&mut s),
    ];
    let (nine, nine_as_known) = criterion_9();
    lines.push(nine);
    let numeric = lines.iter().all(|l| l.numeric) && oracle_rejects_perturbation(&mut s);
    lines.push(line(numeric, true, format!("floating re-check of criteria 1-8 at {POINTS} random rational points within {TOL:e}, rejecting a perturbed K")));
    for (i, l) in lines.iter().enumerate() {
        println!("criterion {:>2}: {}  {}", i + 1, if l.ok { "PASS" } else { "FAIL" }, l.text);
    }
    let passed = lines.iter().filter(|l| l.ok).count();
    println!("{passed}/{} criteria pass", lines.len());
    // Criterion 9 fails on displayed matrices that disagree with their own
    // coproducts; any other failure is a regression.
    let regressions = lines.iter().enumerate().any(|(i, l)| !l.ok && i != 8) || !(lines[8].ok || nine_as_known);
    if regressions {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
