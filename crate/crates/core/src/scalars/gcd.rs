//! Multivariate polynomial gcd over the integers.
//!
//! Strategy, cheapest first: strip integer and monomial contents, split off
//! variables that occur in only one argument, try trial division, then prove
//! coprimality with a single modular image. Only when that fails is a
//! subresultant remainder sequence run in the variable of least degree.

use std::sync::atomic::{AtomicU64, Ordering};

use num_integer::Integer;
use super::poly::{mulmod, powmod, Poly};
use super::symbol::MAX_SYMBOLS;

/// 2^61 - 1.
const PRIME: u64 = 2_305_843_009_213_693_951;

/// Gcd with non-negative content and positive leading coefficient.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalized(b.clone());
    }
    if b.is_zero() {
        return normalized(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        let c = a.content().gcd(&b.content());
        return Poly::constant(c);
    }
    let (ca, cb) = (a.content(), b.content());
    let (ma, mb) = (a.mono_content(), b.mono_content());
    let c = ca.gcd(&cb);
    let m = ma.gcd(&mb);
    let pa = a.div_int(&ca).div_mono(&ma);
    let pb = b.div_int(&cb).div_mono(&mb);
    let g = gcd_primitive(&pa, &pb);
    g.mul_term(&m, &c)
}

fn normalized(mut p: Poly) -> Poly {
    p.normalize_sign();
    p
}

/// Both inputs have unit integer content and no monomial factor.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return normalized(a.clone());
    }
    let (sa, sb) = (a.support(), b.support());
    if sa != sb {
        // the gcd cannot involve variables missing from either side
        let extra_a = sa & !sb;
        let extra_b = sb & !sa;
        let mut g = if extra_a != 0 { b.clone() } else { a.clone() };
        let fold = |p: &Poly, mask: u32, g: &mut Poly| {
            for (_, coeff) in p.coefficients_in(mask) {
                *g = gcd(g, &coeff);
                if g.is_constant() {
                    break;
                }
            }
        };
        if extra_a != 0 {
            fold(a, extra_a, &mut g);
        }
        if extra_b != 0 && !g.is_constant() {
            fold(b, extra_b, &mut g);
        }
        return normalized_primitive(g);
    }
    if let Some(g) = trial_divisor(a, b) {
        return g;
    }
    let var = main_variable(a, b);
    let ua = a.to_uni(var);
    let ub = b.to_uni(var);
    if modular_coprime(a, b, var, &ua, &ub) {
        let ca = uni_content(&ua);
        let cb = uni_content(&ub);
        return normalized_primitive(gcd(&ca, &cb));
    }
    let ca = uni_content(&ua);
    let cb = uni_content(&ub);
    let cont = gcd(&ca, &cb);
    let pa: Vec<Poly> = ua.iter().map(|c| c.div_exact(&ca).expect("content divides")).collect();
    let pb: Vec<Poly> = ub.iter().map(|c| c.div_exact(&cb).expect("content divides")).collect();
    let g = subresultant(pa, pb);
    let g = Poly::from_uni(var, &uni_primitive(g));
    normalized_primitive(cont.mul(&g))
}

fn normalized_primitive(g: Poly) -> Poly {
    let c = g.content();
    normalized(g.div_int(&c))
}

fn trial_divisor(a: &Poly, b: &Poly) -> Option<Poly> {
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if big.lm().div(small.lm()).is_some() && big.div_exact(small).is_some() {
        return Some(normalized(small.clone()));
    }
    if small.lm().div(big.lm()).is_some() && small.div_exact(big).is_some() {
        return Some(normalized(big.clone()));
    }
    None
}

fn main_variable(a: &Poly, b: &Poly) -> usize {
    let support = a.support() | b.support();
    (0..MAX_SYMBOLS)
        .filter(|i| support & (1 << i) != 0)
        .min_by_key(|&i| (a.degree_in(i).max(b.degree_in(i)), a.len() + b.len(), i))
        .expect("non-constant polynomial has a variable")
}

fn next_random() -> u64 {
    static STATE: AtomicU64 = AtomicU64::new(0x9E37_79B9_7F4A_7C15);
    let mut z = STATE.fetch_add(0x9E37_79B9_7F4A_7C15, Ordering::Relaxed);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Proves that the primitive parts in `var` are coprime by exhibiting a
/// modular image with non-vanishing leading coefficients and trivial gcd.
/// A `false` answer is inconclusive.
fn modular_coprime(a: &Poly, b: &Poly, var: usize, ua: &[Poly], ub: &[Poly]) -> bool {
    for _ in 0..2 {
        let mut point = [0u64; MAX_SYMBOLS];
        for p in point.iter_mut() {
            *p = 2 + next_random() % (PRIME - 3);
        }
        let la = ua.last().expect("nonempty").eval_mod(PRIME, &point);
        let lb = ub.last().expect("nonempty").eval_mod(PRIME, &point);
        if la == 0 || lb == 0 {
            continue;
        }
        let ia = a.eval_mod_uni(var, PRIME, &point);
        let ib = b.eval_mod_uni(var, PRIME, &point);
        return uni_gcd_degree_mod(ia, ib, PRIME) == 0;
    }
    false
}

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn uni_gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.len() == 1 && b[0] == 0 {
            return a.len() - 1;
        }
        // a <- a mod b
        let inv = powmod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() && !(a.len() == 1 && a[0] == 0) {
            let shift = a.len() - b.len();
            let f = mulmod(*a.last().unwrap(), inv, p);
            for (i, &bc) in b.iter().enumerate() {
                let t = mulmod(f, bc, p);
                a[i + shift] = (a[i + shift] + p - t) % p;
            }
            a.pop();
            if a.is_empty() {
                a.push(0);
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
}

fn uni_content(u: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in u {
        if c.is_zero() {
            continue;
        }
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn uni_primitive(u: Vec<Poly>) -> Vec<Poly> {
    let c = uni_content(&u);
    if c.is_one() {
        return u;
    }
    u.iter().map(|x| x.div_exact(&c).expect("content divides")).collect()
}

fn uni_trim(u: &mut Vec<Poly>) {
    while u.len() > 1 && u.last().unwrap().is_zero() {
        u.pop();
    }
}

fn uni_is_zero(u: &[Poly]) -> bool {
    u.iter().all(Poly::is_zero)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<Poly> = a.to_vec();
    let mut e = (a.len() - b.len() + 1) as u32;
    while r.len() > db && !uni_is_zero(&r) {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let shift = top - db;
        for (i, x) in r.iter_mut().enumerate() {
            *x = x.mul(lb);
            if i >= shift && i - shift < db {
                *x = x.sub(&lr.mul(&b[i - shift]));
            }
        }
        r.pop();
        uni_trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e);
        for x in r.iter_mut() {
            *x = x.mul(&f);
        }
    }
    r
}

/// Gcd of primitive univariate polynomials over the coefficient ring, up to
/// a coefficient-ring factor.
fn subresultant(mut a: Vec<Poly>, mut b: Vec<Poly>) -> Vec<Poly> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = (a.len() - b.len()) as u32;
        let r = pseudo_rem(&a, &b);
        if uni_is_zero(&r) {
            return b;
        }
        if r.len() == 1 {
            return vec![Poly::one()];
        }
        let div = g.mul(&h.pow(delta));
        a = b;
        b = r.iter().map(|x| x.div_exact(&div).expect("subresultant division is exact")).collect();
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant division is exact")
        };
    }
}
