//! Sparse multivariate polynomials with integer coefficients.
//!
//! Terms are kept sorted in descending graded order: total degree first,
//! ties broken by comparing exponents from the most recently registered
//! symbol downwards. Zero coefficients are never stored.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::symbol::{Symbol, MAX_SYMBOLS};

/// Exponent vector with non-negative entries.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono {
    deg: u32,
    e: [u16; MAX_SYMBOLS],
}

impl Mono {
    pub const ONE: Mono = Mono { deg: 0, e: [0; MAX_SYMBOLS] };

    pub fn var(s: Symbol, exp: u16) -> Mono {
        let mut m = Mono::ONE;
        m.e[s.index()] = exp;
        m.deg = exp as u32;
        m
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, var: usize) -> u16 {
        self.e[var]
    }

    pub fn exps(&self) -> &[u16; MAX_SYMBOLS] {
        &self.e
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut e = [0u16; MAX_SYMBOLS];
        for i in 0..MAX_SYMBOLS {
            e[i] = self.e[i]
                .checked_add(o.e[i])
                .expect("exponent overflow in monomial product");
        }
        Mono { deg: self.deg + o.deg, e }
    }

    /// `self / o` if `o` divides `self`.
    pub fn div(&self, o: &Mono) -> Option<Mono> {
        if o.deg > self.deg {
            return None;
        }
        let mut e = [0u16; MAX_SYMBOLS];
        for i in 0..MAX_SYMBOLS {
            e[i] = self.e[i].checked_sub(o.e[i])?;
        }
        Some(Mono { deg: self.deg - o.deg, e })
    }

    pub fn gcd(&self, o: &Mono) -> Mono {
        let mut e = [0u16; MAX_SYMBOLS];
        let mut deg = 0;
        for i in 0..MAX_SYMBOLS {
            e[i] = self.e[i].min(o.e[i]);
            deg += e[i] as u32;
        }
        Mono { deg, e }
    }

    /// Bitmask of symbols with a positive exponent.
    pub fn support(&self) -> u32 {
        let mut m = 0u32;
        for i in 0..MAX_SYMBOLS {
            if self.e[i] != 0 {
                m |= 1 << i;
            }
        }
        m
    }

    fn with_exp(&self, var: usize, exp: u16) -> Mono {
        let mut m = *self;
        m.deg = m.deg - m.e[var] as u32 + exp as u32;
        m.e[var] = exp;
        m
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.deg.cmp(&o.deg).then_with(|| {
            for i in (0..MAX_SYMBOLS).rev() {
                match self.e[i].cmp(&o.e[i]) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..MAX_SYMBOLS).rev() {
            if self.e[i] > 0 {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "{:?}", Symbol(i as u16))?;
                if self.e[i] > 1 {
                    write!(f, "^{}", self.e[i])?;
                }
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Polynomial over the integers in the session symbols.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, BigInt)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(Mono::ONE, c)] }
        }
    }

    pub fn var(s: Symbol) -> Poly {
        Poly { terms: vec![(Mono::var(s, 1), BigInt::one())] }
    }

    pub fn term(m: Mono, c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(it: impl IntoIterator<Item = (Mono, BigInt)>) -> Poly {
        let mut acc: HashMap<Mono, BigInt> = HashMap::new();
        for (m, c) in it {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Mono, BigInt>) -> Poly {
        let mut terms: Vec<(Mono, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading monomial. Panics on the zero polynomial.
    pub fn lm(&self) -> &Mono {
        &self.terms[0].0
    }

    /// Leading coefficient. Panics on the zero polynomial.
    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Bitmask of symbols that occur.
    pub fn support(&self) -> u32 {
        self.terms.iter().fold(0, |acc, (m, _)| acc | m.support())
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.merge(o, true)
    }

    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        let mut acc: HashMap<Mono, BigInt> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(mb);
                match acc.get_mut(&m) {
                    Some(c) => *c += ca * cb,
                    None => {
                        acc.insert(m, ca * cb);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    /// Multiplication by a single term; order is preserved.
    pub fn mul_term(&self, m: &Mono, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        self.mul_term(&Mono::ONE, c)
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Non-negative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    pub fn div_int(&self, d: &BigInt) -> Poly {
        if d.is_one() {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c / d)).collect() }
    }

    /// Largest monomial dividing every term.
    pub fn mono_content(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Mono::ONE;
        };
        let mut g = *first;
        for (m, _) in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    /// Divides every term by `m`, which must divide all of them.
    pub fn div_mono(&self, m: &Mono) -> Poly {
        if m.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.div(m).expect("monomial does not divide"), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "exact division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                let (qc, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((m.div(dm)?, qc));
            }
            return Some(Poly { terms });
        }
        if self.lm().degree() < d.lm().degree() {
            return None;
        }
        let (dlm, dlc) = (&d.terms[0].0, &d.terms[0].1);
        let mut rem: BTreeMap<std::cmp::Reverse<Mono>, BigInt> =
            self.terms.iter().map(|(m, c)| (std::cmp::Reverse(*m), c.clone())).collect();
        let mut quot = Vec::new();
        while let Some((std::cmp::Reverse(m), c)) = rem.pop_first() {
            let qm = m.div(dlm)?;
            let (qc, r) = c.div_rem(dlc);
            if !r.is_zero() {
                return None;
            }
            for (tm, tc) in &d.terms[1..] {
                let key = std::cmp::Reverse(tm.mul(&qm));
                let delta = tc * &qc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Coefficients with respect to `var`, indexed by degree.
    pub fn to_uni(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Mono, BigInt)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exp(var) as usize;
            buckets[k].push((m.with_exp(var, 0), c.clone()));
        }
        // removing one variable's exponent keeps relative order within a bucket
        buckets.into_iter().map(|terms| Poly { terms }).collect()
    }

    pub fn from_uni(var: usize, coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, cc) in &c.terms {
                terms.push((m.with_exp(var, k as u16), cc.clone()));
            }
        }
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    /// Coefficients with respect to the symbols in `mask`: maps each exponent
    /// pattern over those symbols to its coefficient polynomial in the rest.
    pub fn coefficients_in(&self, mask: u32) -> Vec<(Mono, Poly)> {
        let mut groups: BTreeMap<std::cmp::Reverse<Mono>, Vec<(Mono, BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut key = Mono::ONE;
            let mut rest = *m;
            for i in 0..MAX_SYMBOLS {
                if mask & (1 << i) != 0 && m.e[i] != 0 {
                    key = key.with_exp(i, m.e[i]);
                    rest = rest.with_exp(i, 0);
                }
            }
            groups.entry(std::cmp::Reverse(key)).or_default().push((rest, c.clone()));
        }
        groups
            .into_iter()
            .map(|(k, mut terms)| {
                terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                (k.0, Poly { terms })
            })
            .collect()
    }

    /// Evaluates modulo the prime `p` with symbol `i` set to `point[i]`.
    pub fn eval_mod(&self, p: u64, point: &[u64; MAX_SYMBOLS]) -> u64 {
        let mut acc = 0u64;
        for (m, c) in &self.terms {
            let mut t = bigint_mod(c, p);
            for i in 0..MAX_SYMBOLS {
                let e = m.e[i];
                if e != 0 {
                    t = mulmod(t, powmod(point[i], e as u64, p), p);
                }
            }
            acc = (acc + t) % p;
        }
        acc
    }

    /// Univariate image in `var` modulo `p`, other symbols taken from `point`.
    pub fn eval_mod_uni(&self, var: usize, p: u64, point: &[u64; MAX_SYMBOLS]) -> Vec<u64> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![0u64; deg + 1];
        for (m, c) in &self.terms {
            let mut t = bigint_mod(c, p);
            for i in 0..MAX_SYMBOLS {
                let e = m.e[i];
                if e != 0 && i != var {
                    t = mulmod(t, powmod(point[i], e as u64, p), p);
                }
            }
            let k = m.e[var] as usize;
            out[k] = (out[k] + t) % p;
        }
        out
    }

    pub fn eval_f64(&self, point: &[f64; MAX_SYMBOLS]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = c.to_f64().unwrap_or(f64::NAN);
                for i in 0..MAX_SYMBOLS {
                    if m.e[i] != 0 {
                        t *= point[i].powi(m.e[i] as i32);
                    }
                }
                t
            })
            .sum()
    }

    /// Makes the leading coefficient positive, returning whether it flipped.
    pub fn normalize_sign(&mut self) -> bool {
        if !self.is_zero() && self.lc().is_negative() {
            for t in &mut self.terms {
                t.1 = -&t.1;
            }
            true
        } else {
            false
        }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*{:?}", c, m)?;
        }
        Ok(())
    }
}

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn bigint_mod(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}
