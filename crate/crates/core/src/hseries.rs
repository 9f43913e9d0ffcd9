//! Truncated Laurent series in a formal parameter `h` with [`Scalar`]
//! coefficients.
//!
//! A series stores exact coefficients for exponents up to `trunc`; anything
//! above is unknown and printed as `O(h^(trunc+1))`. Arithmetic propagates
//! the tightest truncation that is sound for the inputs.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalars::{sym, Poly, Scalar, Symbol, MAX_SYMBOLS};

/// Default highest retained exponent.
pub const DEFAULT_TRUNC: i32 = 3;

/// Working precision beyond which `lift` gives up looking for a nonzero
/// denominator coefficient.
const MAX_WORKING_ORDER: i32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has no invertible leading term up to order {0}")]
    NotInvertible(i32),
    #[error("coefficient of h^{k} is beyond the truncation order {trunc}")]
    BeyondTruncation { k: i32, trunc: i32 },
}

#[derive(Clone, PartialEq, Eq)]
pub struct HSeries {
    coeffs: BTreeMap<i32, Scalar>,
    trunc: i32,
}

impl HSeries {
    /// The zero series known up to `trunc`.
    pub fn zero(trunc: i32) -> HSeries {
        HSeries { coeffs: BTreeMap::new(), trunc }
    }

    /// A constant, known exactly up to `trunc`.
    pub fn constant(c: Scalar, trunc: i32) -> HSeries {
        Self::from_coeffs([(0, c)], trunc)
    }

    /// `h` itself.
    pub fn h(trunc: i32) -> HSeries {
        Self::from_coeffs([(1, Scalar::one())], trunc)
    }

    /// Builds a series, dropping zeros and anything above `trunc`.
    pub fn from_coeffs(it: impl IntoIterator<Item = (i32, Scalar)>, trunc: i32) -> HSeries {
        let mut coeffs = BTreeMap::new();
        for (k, c) in it {
            if k <= trunc && !c.is_zero() {
                let e: &mut Scalar = coeffs.entry(k).or_insert_with(Scalar::zero);
                *e = e.add(&c);
                if e.is_zero() {
                    coeffs.remove(&k);
                }
            }
        }
        HSeries { coeffs, trunc }
    }

    /// `exp(rate * h)` up to `trunc`.
    pub fn exp(rate: &Scalar, trunc: i32) -> HSeries {
        let mut coeffs = Vec::new();
        let mut term = Scalar::one();
        for k in 0..=trunc.max(-1) {
            if k > 0 {
                term = term.mul(rate).mul(&Scalar::ratio(1, k as i64));
            }
            coeffs.push((k, term.clone()));
        }
        Self::from_coeffs(coeffs, trunc)
    }

    pub fn trunc(&self) -> i32 {
        self.trunc
    }

    /// Lowest exponent with a nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    /// True when every known coefficient vanishes.
    pub fn is_truncated_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i32) -> Result<Scalar, SeriesError> {
        if k > self.trunc {
            return Err(SeriesError::BeyondTruncation { k, trunc: self.trunc });
        }
        Ok(self.coeffs.get(&k).cloned().unwrap_or_else(Scalar::zero))
    }

    /// Nonzero coefficients in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &Scalar)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    /// Lowers the truncation order.
    pub fn truncate(&self, trunc: i32) -> HSeries {
        let t = trunc.min(self.trunc);
        HSeries { coeffs: self.coeffs.range(..=t).map(|(k, c)| (*k, c.clone())).collect(), trunc: t }
    }

    pub fn neg(&self) -> HSeries {
        HSeries { coeffs: self.coeffs.iter().map(|(k, c)| (*k, c.neg())).collect(), trunc: self.trunc }
    }

    pub fn add(&self, o: &HSeries) -> HSeries {
        let t = self.trunc.min(o.trunc);
        Self::from_coeffs(self.coeffs.iter().chain(o.coeffs.iter()).map(|(k, c)| (*k, c.clone())), t)
    }

    pub fn sub(&self, o: &HSeries) -> HSeries {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Scalar) -> HSeries {
        Self::from_coeffs(self.coeffs.iter().map(|(k, v)| (*k, v.mul(c))), self.trunc)
    }

    /// Multiplies by `h^k`.
    pub fn shift(&self, k: i32) -> HSeries {
        HSeries { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(), trunc: self.trunc + k }
    }

    fn effective_valuation(&self) -> i32 {
        self.valuation().unwrap_or(self.trunc + 1)
    }

    pub fn mul(&self, o: &HSeries) -> HSeries {
        let t = (self.trunc + o.effective_valuation()).min(o.trunc + self.effective_valuation());
        let mut acc: BTreeMap<i32, Scalar> = BTreeMap::new();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &o.coeffs {
                let k = ka + kb;
                if k > t {
                    break;
                }
                let e = acc.entry(k).or_insert_with(Scalar::zero);
                *e = e.add(&ca.mul(cb));
            }
        }
        acc.retain(|_, c| !c.is_zero());
        HSeries { coeffs: acc, trunc: t }
    }

    pub fn inv(&self) -> Result<HSeries, SeriesError> {
        let v = self.valuation().ok_or(SeriesError::NotInvertible(self.trunc))?;
        let rel = self.trunc - v;
        let b: Vec<Scalar> = (0..=rel).map(|i| self.coeffs.get(&(v + i)).cloned().unwrap_or_default()).collect();
        let b0inv = b[0].inv().expect("leading coefficient is nonzero");
        let mut c: Vec<Scalar> = vec![b0inv.clone()];
        for n in 1..=rel as usize {
            let mut s = Scalar::zero();
            for k in 1..=n {
                if !b[k].is_zero() {
                    s = s.add(&b[k].mul(&c[n - k]));
                }
            }
            c.push(s.mul(&b0inv).neg());
        }
        Ok(Self::from_coeffs(c.into_iter().enumerate().map(|(i, x)| (i as i32 - v, x)), self.trunc - 2 * v))
    }

    pub fn div(&self, o: &HSeries) -> Result<HSeries, SeriesError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> HSeries {
        let mut acc = HSeries::constant(Scalar::one(), i32::MAX / 4);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in &self.coeffs {
            let text = c.to_string();
            let coef = if text.contains(' ') { format!("({text})") } else { text };
            parts.push(match k {
                0 => coef,
                1 => format!("{coef}*h"),
                _ => format!("{coef}*h^{k}"),
            });
        }
        let n = self.trunc + 1;
        parts.push(if n == 1 { "O(h)".to_string() } else { format!("O(h^{n})") });
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HSeries({self})")
    }
}

/// How a symbol is replaced when lifting a scalar to a series.
#[derive(Clone, Debug)]
pub enum SeriesBinding {
    /// `exp(rate * h)`, known to any order.
    Exp(Scalar),
    /// An explicit series.
    Fixed(HSeries),
}

pub type SeriesBindings = BTreeMap<Symbol, SeriesBinding>;

/// `q = e^{alpha h}`.
pub fn q_binding() -> (Symbol, SeriesBinding) {
    (sym::q(), SeriesBinding::Exp(Scalar::sym(sym::alpha())))
}

/// `spectral = e^{-2 rate h}`, e.g. `z = e^{-2uh}`.
pub fn spectral_binding(spectral: Symbol, rate: Symbol) -> (Symbol, SeriesBinding) {
    (spectral, SeriesBinding::Exp(Scalar::int(-2).mul(&Scalar::sym(rate))))
}

/// `q = e^{alpha h}`, `z = e^{-2uh}`, `w = e^{-2vh}`.
pub fn yangian_bindings() -> SeriesBindings {
    [q_binding(), spectral_binding(sym::z(), sym::u()), spectral_binding(sym::w(), sym::v())]
        .into_iter()
        .collect()
}

/// Expands `p` under the bindings, exactly up to `order`, when the only
/// series bindings are exponentials. Fixed bindings limit the precision.
fn lift_poly(p: &Poly, bindings: &SeriesBindings, order: i32) -> HSeries {
    let mut exp_mask = 0u32;
    let mut fixed_mask = 0u32;
    for (s, b) in bindings {
        match b {
            SeriesBinding::Exp(_) => exp_mask |= 1 << s.index(),
            SeriesBinding::Fixed(_) => fixed_mask |= 1 << s.index(),
        }
    }
    let bound = exp_mask | fixed_mask;
    // group terms by their bound-symbol pattern
    let mut acc = HSeries::zero(order);
    for (pattern, rest) in p.coefficients_in(bound) {
        let coeff = Scalar::from_parts(rest, Poly::one()).expect("unit denominator");
        let mut rate = Scalar::zero();
        let mut fixed_part = HSeries::constant(Scalar::one(), order);
        for i in 0..MAX_SYMBOLS {
            let e = pattern.exp(i);
            if e == 0 {
                continue;
            }
            let s = Symbol(i as u16);
            match &bindings[&s] {
                SeriesBinding::Exp(r) => rate = rate.add(&r.mul(&Scalar::int(e as i64))),
                SeriesBinding::Fixed(f) => fixed_part = fixed_part.mul(&f.pow(e as u32)),
            }
        }
        let term = HSeries::exp(&rate, order).mul(&fixed_part).scale(&coeff);
        acc = acc.add(&term);
    }
    acc
}

/// Substitutes series for symbols and expands up to `h^trunc`.
///
/// The working precision is raised until the denominator's leading term is
/// found and the quotient is known through `trunc`.
pub fn lift(a: &Scalar, bindings: &SeriesBindings, trunc: i32) -> Result<HSeries, SeriesError> {
    if a.is_zero() {
        return Ok(HSeries::zero(trunc));
    }
    let mut work = trunc.max(0) + 2;
    loop {
        let n = lift_poly(a.num(), bindings, work);
        let d = lift_poly(a.den(), bindings, work);
        if let Some(vd) = d.valuation() {
            let vn = n.effective_valuation();
            let achievable = (n.trunc - vd).min(d.trunc - 2 * vd + vn);
            if achievable >= trunc {
                return Ok(n.div(&d)?.truncate(trunc));
            }
            if n.trunc < work || d.trunc < work {
                // fixed bindings cap the precision
                return n.div(&d);
            }
            work += (trunc - achievable).max(1);
        } else if d.trunc < work {
            return Err(SeriesError::NotInvertible(d.trunc));
        } else {
            work *= 2;
        }
        if work > MAX_WORKING_ORDER + trunc.max(0) {
            return Err(SeriesError::NotInvertible(work));
        }
    }
}
