//! Words, elements, coproduct tables and representations shared by the
//! quantum affine and Yangian catalogs.
//!
//! An [`Element`] is a finite linear combination of words in the generators.
//! A [`CoproductTable`] is a finite linear combination of pure tensors of
//! words. Products of tensors carry the Koszul sign
//! `(a ⊗ b)(c ⊗ d) = (-1)^{|b||c|} ac ⊗ bd`.

use std::collections::BTreeMap;
use std::fmt;

use crate::glinalg::{grading_tensor, kron_graded, Grading, LinalgError, ScalarMatrix};
use crate::scalars::{Bindings, Scalar, ScalarError, Symbol};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator {gen} is not in the {algebra} catalog")]
    NotInCatalog { gen: String, algebra: String },
    #[error("representation has no matrix for {0}")]
    MissingMatrix(String),
    #[error("no coproduct table for {0}")]
    NoCoproduct(String),
    #[error("undefined combination: {0}")]
    Undefined(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    UqSl2,
    UqGl11,
    YSl2,
    YGl11,
}

impl Algebra {
    pub const ALL: [Algebra; 4] = [Algebra::UqSl2, Algebra::UqGl11, Algebra::YSl2, Algebra::YGl11];

    pub fn key(self) -> &'static str {
        match self {
            Algebra::UqSl2 => "uq-sl2-affine",
            Algebra::UqGl11 => "uq-gl11-affine",
            Algebra::YSl2 => "y-sl2",
            Algebra::YGl11 => "y-gl11",
        }
    }

    pub fn from_key(key: &str) -> Option<Algebra> {
        Algebra::ALL.into_iter().find(|a| a.key() == key)
    }

    pub fn is_super(self) -> bool {
        matches!(self, Algebra::UqGl11 | Algebra::YGl11)
    }

    pub fn is_yangian(self) -> bool {
        matches!(self, Algebra::YSl2 | Algebra::YGl11)
    }

    /// Parity of the 2-dimensional fundamental module basis.
    pub fn fundamental_grading(self) -> Grading {
        if self.is_super() {
            vec![0, 1]
        } else {
            vec![0, 0]
        }
    }
}

/// Generator identifiers for both catalogs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Xi0Plus,
    Xi0Minus,
    Xi1Plus,
    Xi1Minus,
    K0,
    K0Inv,
    K1,
    K1Inv,
    K2,
    K2Inv,
    H2Plus,
    B0Plus,
    B0Minus,
    EPlus,
    EMinus,
    H,
    H2,
    EHatPlus,
    EHatMinus,
    HHat,
    HHat2,
    ETildePlus,
    ETildeMinus,
    ETwoPlus,
    ETwoMinus,
    HTwo,
}

const NAMES: &[(Gen, &str)] = &[
    (Gen::Xi0Plus, "xi0+"),
    (Gen::Xi0Minus, "xi0-"),
    (Gen::Xi1Plus, "xi1+"),
    (Gen::Xi1Minus, "xi1-"),
    (Gen::K0, "k0"),
    (Gen::K0Inv, "k0^-1"),
    (Gen::K1, "k1"),
    (Gen::K1Inv, "k1^-1"),
    (Gen::K2, "k2"),
    (Gen::K2Inv, "k2^-1"),
    (Gen::H2Plus, "h2+"),
    (Gen::B0Plus, "B0+"),
    (Gen::B0Minus, "B0-"),
    (Gen::EPlus, "E+"),
    (Gen::EMinus, "E-"),
    (Gen::H, "H"),
    (Gen::H2, "H2"),
    (Gen::EHatPlus, "Ehat+"),
    (Gen::EHatMinus, "Ehat-"),
    (Gen::HHat, "Hhat"),
    (Gen::HHat2, "Hhat2"),
    (Gen::ETildePlus, "Et+"),
    (Gen::ETildeMinus, "Et-"),
    (Gen::ETwoPlus, "Ett+"),
    (Gen::ETwoMinus, "Ett-"),
    (Gen::HTwo, "Htt"),
];

impl Gen {
    pub fn name(self) -> &'static str {
        NAMES.iter().find(|(g, _)| *g == self).map(|(_, n)| *n).expect("every generator is named")
    }

    pub fn parse(name: &str) -> Result<Gen, AlgebraError> {
        NAMES
            .iter()
            .find(|(_, n)| *n == name)
            .map(|(g, _)| *g)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    pub fn is_affine(self) -> bool {
        (self as u8) <= (Gen::B0Minus as u8)
    }

    /// Whether the generator belongs to the given algebra's catalog.
    pub fn in_catalog(self, alg: Algebra) -> bool {
        use Gen::*;
        match alg {
            Algebra::UqSl2 => self.is_affine() && !matches!(self, K2 | K2Inv | H2Plus),
            Algebra::UqGl11 => self.is_affine(),
            Algebra::YSl2 => !self.is_affine() && !matches!(self, H2 | HHat2),
            Algebra::YGl11 => !self.is_affine(),
        }
    }

    /// Fermionic generators of the super cases: all root vectors.
    pub fn parity(self, alg: Algebra) -> u8 {
        use Gen::*;
        let odd = matches!(
            self,
            Xi0Plus
                | Xi0Minus
                | Xi1Plus
                | Xi1Minus
                | B0Plus
                | B0Minus
                | EPlus
                | EMinus
                | EHatPlus
                | EHatMinus
                | ETildePlus
                | ETildeMinus
                | ETwoPlus
                | ETwoMinus
        );
        u8::from(alg.is_super() && odd)
    }

    fn inverse(self) -> Option<Gen> {
        use Gen::*;
        Some(match self {
            K0 => K0Inv,
            K0Inv => K0,
            K1 => K1Inv,
            K1Inv => K1,
            K2 => K2Inv,
            K2Inv => K2,
            _ => return None,
        })
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type Word = Vec<Gen>;

pub fn word_parity(w: &[Gen], alg: Algebra) -> u8 {
    w.iter().map(|g| g.parity(alg)).sum::<u8>() % 2
}

fn word_to_string(w: &[Gen]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|g| g.name()).collect::<Vec<_>>().join("*")
    }
}

/// Cancels adjacent Cartan pairs `k k^-1`.
fn reduce_word(w: Word) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for g in w {
        if let (Some(&last), Some(inv)) = (out.last(), g.inverse()) {
            if last == inv {
                out.pop();
                continue;
            }
        }
        out.push(g);
    }
    out
}

/// A linear combination of words.
#[derive(Clone, PartialEq, Default)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn one() -> Element {
        Element::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Element {
        Element::word(Vec::new(), c)
    }

    pub fn gen(g: Gen) -> Element {
        Element::word(vec![g], Scalar::one())
    }

    /// Product of generators, e.g. `Element::prod(&[K0Inv, Xi0Plus, K0])`.
    pub fn prod(gs: &[Gen]) -> Element {
        Element::word(gs.to_vec(), Scalar::one())
    }

    pub fn word(w: Word, c: Scalar) -> Element {
        let mut e = Element::zero();
        e.push(w, c);
        e
    }

    fn push(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let w = reduce_word(w);
        let v = match self.terms.remove(&w) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(w, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Element) -> Element {
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.push(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Element) -> Element {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Element {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut r = Element::zero();
        for (w, x) in &self.terms {
            r.push(w.clone(), x.mul(c));
        }
        r
    }

    pub fn mul(&self, o: &Element) -> Element {
        let mut r = Element::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                r.push(w, c1.mul(c2));
            }
        }
        r
    }

    /// Parity of a homogeneous element (0 for zero).
    pub fn parity(&self, alg: Algebra) -> u8 {
        self.terms.keys().next().map_or(0, |w| word_parity(w, alg))
    }

    /// Graded commutator `ab - (-1)^{|a||b|} ba`.
    pub fn bracket(&self, o: &Element, alg: Algebra) -> Element {
        let sign = if self.parity(alg) * o.parity(alg) == 1 { -1 } else { 1 };
        self.mul(o).sub(&o.mul(self).scale(&Scalar::int(sign)))
    }

    /// Ordinary commutator regardless of grading.
    pub fn commutator(&self, o: &Element) -> Element {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn anticommutator(&self, o: &Element) -> Element {
        self.mul(o).add(&o.mul(self))
    }

    pub fn substitute(&self, b: &Bindings) -> Result<Element, ScalarError> {
        let mut r = Element::zero();
        for (w, c) in &self.terms {
            r.push(w.clone(), c.substitute(b)?);
        }
        Ok(r)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(w, c)| format!("({c})*{}", word_to_string(w))).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

/// A coproduct as a finite sum of `coeff · (left word ⊗ right word)`.
#[derive(Clone, PartialEq, Default)]
pub struct CoproductTable {
    algebra: Option<Algebra>,
    terms: BTreeMap<(Word, Word), Scalar>,
}

impl CoproductTable {
    pub fn zero(alg: Algebra) -> CoproductTable {
        CoproductTable { algebra: Some(alg), terms: BTreeMap::new() }
    }

    pub fn one(alg: Algebra) -> CoproductTable {
        CoproductTable::tensor(alg, &Element::one(), &Element::one())
    }

    /// Bilinear tensor product of two elements.
    pub fn tensor(alg: Algebra, a: &Element, b: &Element) -> CoproductTable {
        let mut t = CoproductTable::zero(alg);
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                t.push(wa.clone(), wb.clone(), ca.mul(cb));
            }
        }
        t
    }

    /// Convenience: `c · (a ⊗ b)` on generator words.
    pub fn term(alg: Algebra, a: &[Gen], b: &[Gen], c: Scalar) -> CoproductTable {
        let mut t = CoproductTable::zero(alg);
        t.push(a.to_vec(), b.to_vec(), c);
        t
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra.expect("table carries its algebra")
    }

    fn push(&mut self, a: Word, b: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (reduce_word(a), reduce_word(b));
        let v = match self.terms.remove(&key) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    /// Triples `(left, right, coeff)` in a stable order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &Scalar)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, a: &[Gen], b: &[Gen]) -> Option<&Scalar> {
        self.terms.get(&(a.to_vec(), b.to_vec()))
    }

    pub fn add(&self, o: &CoproductTable) -> CoproductTable {
        let mut r = self.clone();
        for ((a, b), c) in &o.terms {
            r.push(a.clone(), b.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &CoproductTable) -> CoproductTable {
        self.add(&o.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> CoproductTable {
        let mut r = CoproductTable::zero(self.algebra());
        for ((a, b), c) in &self.terms {
            r.push(a.clone(), b.clone(), c.mul(s));
        }
        r
    }

    /// Product in the graded tensor square.
    pub fn mul(&self, o: &CoproductTable) -> CoproductTable {
        let alg = self.algebra();
        let mut r = CoproductTable::zero(alg);
        for ((a, b), x) in &self.terms {
            let pb = word_parity(b, alg);
            for ((c, d), y) in &o.terms {
                let sign = if pb * word_parity(c, alg) == 1 { -1 } else { 1 };
                let mut ac = a.clone();
                ac.extend_from_slice(c);
                let mut bd = b.clone();
                bd.extend_from_slice(d);
                r.push(ac, bd, x.mul(y).mul(&Scalar::int(sign)));
            }
        }
        r
    }

    /// The opposite coproduct `a ⊗ b ↦ (-1)^{|a||b|} b ⊗ a`.
    pub fn op(&self) -> CoproductTable {
        let alg = self.algebra();
        let mut r = CoproductTable::zero(alg);
        for ((a, b), c) in &self.terms {
            let sign = if word_parity(a, alg) * word_parity(b, alg) == 1 { -1 } else { 1 };
            r.push(b.clone(), a.clone(), c.mul(&Scalar::int(sign)));
        }
        r
    }

    pub fn substitute(&self, bind: &Bindings) -> Result<CoproductTable, ScalarError> {
        let mut r = CoproductTable::zero(self.algebra());
        for ((a, b), c) in &self.terms {
            r.push(a.clone(), b.clone(), c.substitute(bind)?);
        }
        Ok(r)
    }
}

impl fmt::Display for CoproductTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((a, b), c)| format!("({c})*{} ⊗ {}", word_to_string(a), word_to_string(b)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for CoproductTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoproductTable({self})")
    }
}

/// Extends generator coproducts multiplicatively to an element.
pub fn delta_element(
    alg: Algebra,
    e: &Element,
    gen_delta: impl Fn(Gen) -> Result<CoproductTable, AlgebraError>,
) -> Result<CoproductTable, AlgebraError> {
    let mut total = CoproductTable::zero(alg);
    for (w, c) in e.terms() {
        let mut acc = CoproductTable::one(alg);
        for &g in w {
            acc = acc.mul(&gen_delta(g)?);
        }
        total = total.add(&acc.scale(c));
    }
    Ok(total)
}

/// A triple tensor term list used for coassociativity checks.
pub type TripleTable = Vec<(Word, Word, Word, Scalar)>;

/// `(Δ ⊗ id) Δ` or `(id ⊗ Δ) Δ` depending on `left`.
pub fn iterate_coproduct(
    t: &CoproductTable,
    left: bool,
    gen_delta: impl Fn(Gen) -> Result<CoproductTable, AlgebraError>,
) -> Result<TripleTable, AlgebraError> {
    let alg = t.algebra();
    let mut out = Vec::new();
    for (a, b, c) in t.terms() {
        let split = if left { a } else { b };
        let d = delta_element(alg, &Element::word(split.clone(), Scalar::one()), &gen_delta)?;
        for (x, y, k) in d.terms() {
            let coeff = c.mul(k);
            if left {
                out.push((x.clone(), y.clone(), b.clone(), coeff));
            } else {
                out.push((a.clone(), x.clone(), y.clone(), coeff));
            }
        }
    }
    Ok(out)
}

/// A named representation: generator matrices, basis grading and spectral
/// symbol.
#[derive(Clone, Debug)]
pub struct RepData {
    pub algebra: Algebra,
    pub spectral: Symbol,
    pub grading: Grading,
    mats: BTreeMap<Gen, ScalarMatrix>,
}

impl RepData {
    pub fn new(algebra: Algebra, spectral: Symbol, grading: Grading) -> RepData {
        RepData { algebra, spectral, grading, mats: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.grading.len()
    }

    pub fn with(mut self, g: Gen, m: ScalarMatrix) -> RepData {
        self.insert(g, m);
        self
    }

    pub fn insert(&mut self, g: Gen, m: ScalarMatrix) {
        assert_eq!(m.rows(), self.dim(), "generator matrix size");
        self.mats.insert(g, m);
    }

    pub fn get(&self, g: Gen) -> Result<&ScalarMatrix, AlgebraError> {
        self.mats.get(&g).ok_or_else(|| AlgebraError::MissingMatrix(g.name().into()))
    }

    pub fn generators(&self) -> impl Iterator<Item = (&Gen, &ScalarMatrix)> {
        self.mats.iter()
    }

    pub fn eval_word(&self, w: &[Gen]) -> Result<ScalarMatrix, AlgebraError> {
        let mut acc = ScalarMatrix::identity(self.dim());
        for &g in w {
            acc = acc.mul(self.get(g)?);
        }
        Ok(acc)
    }

    pub fn eval(&self, e: &Element) -> Result<ScalarMatrix, AlgebraError> {
        let mut acc = ScalarMatrix::zeros(self.dim(), self.dim());
        for (w, c) in e.terms() {
            acc = acc.add(&self.eval_word(w)?.scale(c));
        }
        Ok(acc)
    }

    /// Substitutes into every generator matrix; the spectral symbol is kept
    /// as a label.
    pub fn substitute(&self, b: &Bindings) -> Result<RepData, ScalarError> {
        let mut r = RepData::new(self.algebra, self.spectral, self.grading.clone());
        for (g, m) in &self.mats {
            r.mats.insert(*g, m.substitute(b)?);
        }
        Ok(r)
    }

    /// The same representation at another spectral parameter value.
    pub fn at(&self, value: &Scalar) -> Result<RepData, ScalarError> {
        self.substitute(&[(self.spectral, value.clone())].into_iter().collect())
    }

    /// Same matrices relabelled to a new spectral symbol.
    pub fn relabel(&self, spectral: Symbol) -> Result<RepData, ScalarError> {
        let mut r = self.at(&Scalar::sym(spectral))?;
        r.spectral = spectral;
        Ok(r)
    }
}

/// Counit on generators: 1 on group-like Cartans, 0 elsewhere.
pub fn counit(g: Gen) -> Scalar {
    use Gen::*;
    match g {
        K0 | K0Inv | K1 | K1Inv | K2 | K2Inv => Scalar::one(),
        _ => Scalar::zero(),
    }
}

pub fn counit_word(w: &[Gen]) -> Scalar {
    w.iter().fold(Scalar::one(), |acc, &g| acc.mul(&counit(g)))
}

/// Right tensor factor: another representation or the counit.
#[derive(Clone, Copy, Debug)]
pub enum Boundary<'a> {
    Rep(&'a RepData),
    Counit,
}

/// Evaluates a coproduct table in `left ⊗ right` with Koszul signs.
pub fn eval_table(t: &CoproductTable, left: &RepData, right: Boundary<'_>) -> Result<ScalarMatrix, AlgebraError> {
    let alg = t.algebra();
    match right {
        Boundary::Counit => {
            let mut acc = ScalarMatrix::zeros(left.dim(), left.dim());
            for (a, b, c) in t.terms() {
                let e = counit_word(b);
                if e.is_zero() {
                    continue;
                }
                acc = acc.add(&left.eval_word(a)?.scale(&c.mul(&e)));
            }
            Ok(acc)
        }
        Boundary::Rep(r) => {
            let n = left.dim() * r.dim();
            let mut acc = ScalarMatrix::zeros(n, n);
            for (a, b, c) in t.terms() {
                let m = kron_graded(
                    &left.eval_word(a)?,
                    word_parity(a, alg),
                    &r.eval_word(b)?,
                    word_parity(b, alg),
                    &left.grading,
                    &r.grading,
                )?;
                acc = acc.add(&m.scale(c));
            }
            Ok(acc)
        }
    }
}

/// Evaluates a triple table in `r1 ⊗ r2 ⊗ r3`.
pub fn eval_triple(
    alg: Algebra,
    t: &TripleTable,
    r1: &RepData,
    r2: &RepData,
    r3: &RepData,
) -> Result<ScalarMatrix, AlgebraError> {
    let g12 = grading_tensor(&r1.grading, &r2.grading);
    let n = g12.len() * r3.dim();
    let mut acc = ScalarMatrix::zeros(n, n);
    for (a, b, c, k) in t {
        let (pa, pb) = (word_parity(a, alg), word_parity(b, alg));
        let ab = kron_graded(&r1.eval_word(a)?, pa, &r2.eval_word(b)?, pb, &r1.grading, &r2.grading)?;
        let m = kron_graded(&ab, (pa + pb) % 2, &r3.eval_word(c)?, word_parity(c, alg), &g12, &r3.grading)?;
        acc = acc.add(&m.scale(k));
    }
    Ok(acc)
}
