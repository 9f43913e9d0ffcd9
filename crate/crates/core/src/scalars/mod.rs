//! Exact rational functions over Q in the session symbols.
//!
//! A [`Scalar`] is stored as `num/den` with integer polynomial numerator and
//! denominator. Laurent monomials are absorbed into the denominator. The
//! canonical form is:
//!
//! * `gcd(num, den) = 1`, including integer content and monomial content;
//! * the leading coefficient of `den` (graded order) is positive;
//! * zero is `0/1`.
//!
//! Every rational function has exactly one such representative, so derived
//! `PartialEq` is mathematical equality.

mod gcd;
mod parse;
pub mod poly;
pub mod symbol;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use gcd::gcd as poly_gcd;
pub use poly::{Mono, Poly};
pub use symbol::{sym, Symbol, MAX_SYMBOLS, STANDARD_SYMBOLS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution hits a pole: {0}")]
    PoleOnSubstitution(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid symbol name {0:?}")]
    InvalidSymbol(String),
    #[error("symbol table full ({0} symbols)")]
    TooManySymbols(usize),
}

/// Symbol-to-value map used by [`Scalar::substitute`].
pub type Bindings = BTreeMap<Symbol, Scalar>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Scalar {
        Scalar { num: Poly::one(), den: Poly::one() }
    }

    pub fn int(n: i64) -> Scalar {
        Scalar { num: Poly::constant(BigInt::from(n)), den: Poly::one() }
    }

    pub fn from_bigint(n: BigInt) -> Scalar {
        Scalar { num: Poly::constant(n), den: Poly::one() }
    }

    /// `n/d`. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        Scalar::from_parts(Poly::constant(BigInt::from(n)), Poly::constant(BigInt::from(d)))
            .expect("nonzero denominator")
    }

    pub fn sym(s: Symbol) -> Scalar {
        Scalar { num: Poly::var(s), den: Poly::one() }
    }

    /// Shorthand for `Scalar::sym(Symbol::named(name))`.
    pub fn var(name: &str) -> Scalar {
        Scalar::sym(Symbol::named(name))
    }

    /// Canonical form of `num/den`.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        let g = gcd::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.normalize_sign() {
            num = num.neg();
        }
        Scalar { num, den }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// True when no symbol occurs.
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Bitmask of occurring symbols.
    pub fn support(&self) -> u32 {
        self.num.support() | self.den.support()
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let m = self.support();
        (0..MAX_SYMBOLS).filter(|i| m & (1 << i) != 0).map(|i| Symbol(i as u16)).collect()
    }

    pub fn depends_on(&self, s: Symbol) -> bool {
        self.support() & (1 << s.index()) != 0
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = self.num.add(&o.num);
            if self.den.is_one() {
                return Scalar { num, den: Poly::one() };
            }
            return Self::canonical(num, self.den.clone());
        }
        let g = gcd::gcd(&self.den, &o.den);
        if g.is_one() {
            let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            if num.is_zero() {
                return Scalar::zero();
            }
            return Scalar { num, den: self.den.mul(&o.den) };
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let t = self.num.mul(&d1).add(&o.num.mul(&b1));
        if t.is_zero() {
            return Scalar::zero();
        }
        let h = gcd::gcd(&t, &g);
        let (t, g1) = if h.is_one() {
            (t, g)
        } else {
            (t.div_exact(&h).expect("gcd divides"), g.div_exact(&h).expect("gcd divides"))
        };
        let mut den = b1.mul(&d1).mul(&g1);
        let mut num = t;
        if den.normalize_sign() {
            num = num.neg();
        }
        Scalar { num, den }
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        let g1 = gcd::gcd(&self.num, &o.den);
        let g2 = gcd::gcd(&o.num, &self.den);
        let a = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1).expect("gcd divides") };
        let d = if g1.is_one() { o.den.clone() } else { o.den.div_exact(&g1).expect("gcd divides") };
        let c = if g2.is_one() { o.num.clone() } else { o.num.div_exact(&g2).expect("gcd divides") };
        let b = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2).expect("gcd divides") };
        let mut num = a.mul(&c);
        let mut den = b.mul(&d);
        if den.normalize_sign() {
            num = num.neg();
        }
        Scalar { num, den }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let mut num = self.den.clone();
        let mut den = self.num.clone();
        if den.normalize_sign() {
            num = num.neg();
        }
        Ok(Scalar { num, den })
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&o.inv()?))
    }

    /// Integer power; negative exponents of zero are a division by zero.
    pub fn checked_pow(&self, e: i32) -> Result<Scalar, ScalarError> {
        if e < 0 {
            return self.inv()?.checked_pow(-e);
        }
        let e = e as u32;
        // powers of coprime polynomials stay coprime
        let mut num = self.num.pow(e);
        let mut den = self.den.pow(e);
        if den.normalize_sign() {
            num = num.neg();
        }
        Ok(Scalar { num, den })
    }

    /// Integer power. Panics on a negative power of zero.
    pub fn pow(&self, e: i32) -> Scalar {
        self.checked_pow(e).expect("negative power of zero")
    }

    /// Replaces symbols by values and returns the canonical composite.
    ///
    /// Numerator and denominator are expanded over a common denominator of
    /// the bound values so that only one gcd is taken at the end.
    pub fn substitute(&self, bindings: &Bindings) -> Result<Scalar, ScalarError> {
        let support = self.support();
        let active: Vec<(usize, &Scalar)> = bindings
            .iter()
            .filter(|(s, _)| support & (1 << s.index()) != 0)
            .map(|(s, v)| (s.index(), v))
            .collect();
        if active.is_empty() {
            return Ok(self.clone());
        }
        let mut mask = 0u32;
        for (i, _) in &active {
            mask |= 1 << i;
        }
        let mut cache = PowerCache::new(&active);
        let (n_top, n_deg) = expand(&self.num, mask, &active, &mut cache);
        let (d_top, d_deg) = expand(&self.den, mask, &active, &mut cache);
        if d_top.is_zero() {
            return Err(ScalarError::PoleOnSubstitution(format!(
                "denominator {} vanishes",
                poly_to_string(&self.den)
            )));
        }
        // self = (n_top / prod den_i^n_deg_i) / (d_top / prod den_i^d_deg_i)
        let mut num = n_top;
        let mut den = d_top;
        for (k, &(_, v)) in active.iter().enumerate() {
            let diff = d_deg[k] as i64 - n_deg[k] as i64;
            if diff > 0 {
                num = num.mul(&v.den.pow(diff as u32));
            } else if diff < 0 {
                den = den.mul(&v.den.pow((-diff) as u32));
            }
        }
        Ok(Self::canonical(num, den))
    }

    /// Substitutes a single symbol.
    pub fn subst(&self, s: Symbol, v: &Scalar) -> Result<Scalar, ScalarError> {
        let mut b = Bindings::new();
        b.insert(s, v.clone());
        self.substitute(&b)
    }

    /// Floating evaluation with symbol `i` set to `point[i]` (missing entries
    /// are NaN). Only meant as a test oracle.
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let mut p = [f64::NAN; MAX_SYMBOLS];
        for (i, v) in point.iter().enumerate().take(MAX_SYMBOLS) {
            p[i] = *v;
        }
        self.num.eval_f64(&p) / self.den.eval_f64(&p)
    }

    /// Constant value as an `f64`, if the scalar is constant.
    pub fn to_f64(&self) -> Option<f64> {
        if !self.is_constant() {
            return None;
        }
        let n = self.num.constant_value()?.to_f64()?;
        let d = self.den.constant_value()?.to_f64()?;
        Some(n / d)
    }

    /// Constant value as an exact rational `(n, d)` with `d > 0`.
    pub fn to_rational(&self) -> Option<(BigInt, BigInt)> {
        if !self.is_constant() {
            return None;
        }
        Some((self.num.constant_value()?, self.den.constant_value()?))
    }

    pub fn parse(text: &str) -> Result<Scalar, ScalarError> {
        parse::parse(text)
    }
}

struct PowerCache {
    nums: Vec<Vec<Poly>>,
    dens: Vec<Vec<Poly>>,
    values: Vec<(Poly, Poly)>,
}

impl PowerCache {
    fn new(active: &[(usize, &Scalar)]) -> PowerCache {
        PowerCache {
            nums: vec![vec![Poly::one()]; active.len()],
            dens: vec![vec![Poly::one()]; active.len()],
            values: active.iter().map(|(_, v)| (v.num.clone(), v.den.clone())).collect(),
        }
    }

    fn num(&mut self, k: usize, e: usize) -> &Poly {
        while self.nums[k].len() <= e {
            let next = self.nums[k].last().unwrap().mul(&self.values[k].0);
            self.nums[k].push(next);
        }
        &self.nums[k][e]
    }

    fn den(&mut self, k: usize, e: usize) -> &Poly {
        while self.dens[k].len() <= e {
            let next = self.dens[k].last().unwrap().mul(&self.values[k].1);
            self.dens[k].push(next);
        }
        &self.dens[k][e]
    }
}

/// Returns `p(values) * prod den_k^deg_k` as a polynomial, with the degrees.
fn expand(p: &Poly, mask: u32, active: &[(usize, &Scalar)], cache: &mut PowerCache) -> (Poly, Vec<u16>) {
    let degs: Vec<u16> = active.iter().map(|(i, _)| p.degree_in(*i)).collect();
    let mut acc = Poly::zero();
    for (pattern, coeff) in p.coefficients_in(mask) {
        let mut term = coeff;
        for (k, (i, _)) in active.iter().enumerate() {
            let e = pattern.exp(*i) as usize;
            let f = cache.num(k, e).clone();
            term = term.mul(&f);
            let g = cache.den(k, degs[k] as usize - e).clone();
            term = term.mul(&g);
        }
        acc = acc.add(&term);
    }
    (acc, degs)
}

/// q-integer `[n]_q = (q^n - q^-n)/(q - q^-1)`.
pub fn qnum(n: i64) -> Scalar {
    if n == 0 {
        return Scalar::zero();
    }
    if n < 0 {
        return qnum(-n).neg();
    }
    let q = sym::q();
    let n = n as u16;
    let num = Poly::from_terms((0..n).map(|k| (Mono::var(q, 2 * k), BigInt::one())));
    let den = Poly::term(Mono::var(q, n - 1), BigInt::one());
    Scalar::canonical(num, den)
}

/// q-factorial `[n]_q!`.
pub fn qfactorial(n: i64) -> Result<Scalar, ScalarError> {
    if n < 0 {
        return Err(ScalarError::Domain(format!("q-factorial of negative integer {n}")));
    }
    Ok((1..=n).fold(Scalar::one(), |acc, k| acc.mul(&qnum(k))))
}

/// q-binomial coefficient; requires `0 <= m <= n`.
pub fn qbinom(n: i64, m: i64) -> Result<Scalar, ScalarError> {
    if m < 0 || n < 0 || m > n {
        return Err(ScalarError::Domain(format!("q-binomial needs 0 <= m <= n, got n={n}, m={m}")));
    }
    let top = qfactorial(n)?;
    let bottom = qfactorial(m)?.mul(&qfactorial(n - m)?);
    top.checked_div(&bottom)
}

// Operators are implemented on references only, so that method-call syntax
// on an owned value resolves to the borrowing inherent methods.
macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, o: &Scalar) -> Scalar {
                Scalar::$inner(self, o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, o: Scalar) -> Scalar {
                Scalar::$inner(self, &o)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);
forward_binop!(Div, div, div_or_panic);

impl Scalar {
    fn div_or_panic(&self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::int(n)
    }
}

impl From<Symbol> for Scalar {
    fn from(s: Symbol) -> Scalar {
        Scalar::sym(s)
    }
}

impl Default for Scalar {
    fn default() -> Scalar {
        Scalar::zero()
    }
}

impl FromStr for Scalar {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Scalar, ScalarError> {
        parse::parse(s)
    }
}

/// How a printed polynomial binds.
#[derive(PartialEq, Eq, PartialOrd, Ord, Clone, Copy)]
enum Shape {
    /// integer, symbol or symbol power
    Atom,
    /// product of factors, possibly with a leading minus
    Product,
    /// top-level sum
    Sum,
}

/// Factors are printed in alphabetical order of symbol names.
fn mono_to_string(m: &Mono) -> String {
    let mut parts: Vec<(String, u16)> = (0..MAX_SYMBOLS)
        .filter(|&i| m.exp(i) > 0)
        .map(|i| (Symbol(i as u16).name(), m.exp(i)))
        .collect();
    parts.sort();
    parts
        .into_iter()
        .map(|(name, e)| if e == 1 { name } else { format!("{name}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn term_to_string(m: &Mono, c: &BigInt) -> (String, bool) {
    let neg = c.is_negative();
    let a = c.abs();
    let body = if m.is_one() {
        a.to_string()
    } else if a.is_one() {
        mono_to_string(m)
    } else {
        format!("{}*{}", a, mono_to_string(m))
    };
    (body, neg)
}

fn sum_to_string(p: &Poly) -> String {
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let (body, neg) = term_to_string(m, c);
        match (k, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

fn render_poly(p: &Poly) -> (String, Shape) {
    if p.is_zero() {
        return ("0".into(), Shape::Atom);
    }
    if p.len() == 1 {
        let (m, c) = &p.terms()[0];
        let (body, neg) = term_to_string(m, c);
        let atom = !neg && (m.is_one() || (c.is_one() && m.support().count_ones() == 1));
        let s = if neg { format!("-{body}") } else { body };
        return (s, if atom { Shape::Atom } else { Shape::Product });
    }
    let content = p.content();
    let mono = p.mono_content();
    let mut rest = p.div_int(&content).div_mono(&mono);
    let mut sign = false;
    if !content.is_one() || !mono.is_one() {
        // pull the sign out with the common factor
        if rest.lc().is_negative() {
            rest = rest.neg();
            sign = true;
        }
    }
    if content.is_one() && mono.is_one() {
        return (sum_to_string(&rest), Shape::Sum);
    }
    let factor = if content.is_one() { mono_to_string(&mono) } else { term_to_string(&mono, &content).0 };
    let s = format!("{}*({})", factor, sum_to_string(&rest));
    (if sign { format!("-{s}") } else { s }, Shape::Product)
}

pub(crate) fn poly_to_string(p: &Poly) -> String {
    render_poly(p).0
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, nshape) = render_poly(&self.num);
        if self.den.is_one() {
            return f.write_str(&n);
        }
        let (d, dshape) = render_poly(&self.den);
        if nshape == Shape::Sum {
            write!(f, "({n})")?;
        } else {
            f.write_str(&n)?;
        }
        if dshape == Shape::Atom {
            write!(f, "/{d}")
        } else {
            write!(f, "/({d})")
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let text = String::deserialize(d)?;
        Scalar::parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Scalar {
        Scalar::parse(s).unwrap()
    }

    #[test]
    fn self_division_and_factorization() {
        let a = p("q - q^-1");
        assert!(a.checked_div(&a).unwrap().is_one());
        let b = p("q^2 - q^-2");
        assert_eq!(b.checked_div(&a).unwrap(), p("q + 1/q"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::one().checked_div(&Scalar::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn canonical_printing() {
        let k = p("(c*z - 1)/(z*(c - z))");
        assert_eq!(k.to_string(), "(c*z - 1)/(z*(c - z))");
        assert_eq!(p("(z-1)/(q*z - 1/q)").to_string(), "q*(z - 1)/(q^2*z - 1)");
        assert_eq!(p("1/2").to_string(), "1/2");
        assert_eq!(p("-3*q^2").to_string(), "-3*q^2");
        assert_eq!(p("q/(2*z)").to_string(), "q/(2*z)");
    }

    #[test]
    fn zero_test_on_identity() {
        let lhs = qnum(2).mul(&p("q - 1/q"));
        assert!(lhs.sub(&p("q^2 - q^-2")).is_zero());
        let k = p("(c*z - 1)/(z*(c - z))");
        assert!(k.sub(&k).is_zero());
    }

    #[test]
    fn substitution_examples() {
        let r = p("(z - 1)/(q*z - 1/q)");
        assert!(r.subst(sym::z(), &Scalar::one()).unwrap().is_zero());
        let k = p("(c*z - 1)/(z*(c - z))");
        let kinv = k.subst(sym::z(), &p("1/z")).unwrap();
        assert!(kinv.mul(&k).is_one());
        let kv = p("(q - q^-1)*(z^2 - 1)/(q^-2 - c*z + q^2*z^2)");
        let sub = kv.subst(sym::c(), &p("s + 1/s")).unwrap();
        let expect = p("(q - q^-1)*(z^2 - 1)*s/(s*q^-2 - (s^2 + 1)*z + s*q^2*z^2)");
        assert_eq!(sub, expect);
    }

    #[test]
    fn pole_on_substitution() {
        let r = p("1/(z - 1)");
        assert!(matches!(r.subst(sym::z(), &Scalar::one()), Err(ScalarError::PoleOnSubstitution(_))));
    }

    #[test]
    fn q_numbers() {
        assert!(qnum(1).is_one());
        assert_eq!(qnum(2), p("q + 1/q"));
        assert_eq!(qbinom(2, 1).unwrap(), p("q + 1/q"));
        assert_eq!(qbinom(4, 2).unwrap(), p("q^4 + q^2 + 2 + q^-2 + q^-4"));
        assert!(matches!(qbinom(1, 2), Err(ScalarError::Domain(_))));
        for n in 1..=10 {
            let lhs = qnum(n).mul(&p("q - 1/q"));
            assert_eq!(lhs, p(&format!("q^{n} - q^-{n}")));
        }
    }
}
