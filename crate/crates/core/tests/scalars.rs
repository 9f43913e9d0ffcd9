use proptest::prelude::*;
use reflectq::scalars::{qnum, sym, MAX_SYMBOLS};
use reflectq::Scalar;

/// A small expression tree, evaluated both exactly and in floating point.
#[derive(Clone, Debug)]
enum Expr {
    Int(i64),
    Sym(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

const SYMS: [&str; 3] = ["q", "z", "c"];

fn symbol_index(i: usize) -> usize {
    [sym::q(), sym::z(), sym::c()][i].index()
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![(-4i64..=4).prop_map(Expr::Int), (0usize..3).prop_map(Expr::Sym)];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(a.into(), b.into())),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(a.into(), b.into())),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(a.into(), b.into())),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::Div(a.into(), b.into())),
        ]
    })
}

impl Expr {
    fn exact(&self) -> Option<Scalar> {
        Some(match self {
            Expr::Int(n) => Scalar::int(*n),
            Expr::Sym(i) => Scalar::var(SYMS[*i]),
            Expr::Add(a, b) => a.exact()?.add(&b.exact()?),
            Expr::Sub(a, b) => a.exact()?.sub(&b.exact()?),
            Expr::Mul(a, b) => a.exact()?.mul(&b.exact()?),
            Expr::Div(a, b) => a.exact()?.checked_div(&b.exact()?).ok()?,
        })
    }

    /// Floating value, `None` near a pole of any subexpression.
    fn float(&self, p: &[f64]) -> Option<f64> {
        Some(match self {
            Expr::Int(n) => *n as f64,
            Expr::Sym(i) => p[symbol_index(*i)],
            Expr::Add(a, b) => a.float(p)? + b.float(p)?,
            Expr::Sub(a, b) => a.float(p)? - b.float(p)?,
            Expr::Mul(a, b) => a.float(p)? * b.float(p)?,
            Expr::Div(a, b) => {
                let d = b.float(p)?;
                if d.abs() < 1e-3 {
                    return None;
                }
                a.float(p)? / d
            }
        })
    }
}

fn scalar() -> impl Strategy<Value = Scalar> {
    expr().prop_filter_map("division by zero", |e| e.exact())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn multiplication_distributes(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn construction_order_is_irrelevant(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b).add(&c), c.add(&a).add(&b));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).checked_div(&b).unwrap(), a.clone());
        }
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn printing_round_trips(a in scalar()) {
        prop_assert_eq!(Scalar::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn exact_and_floating_evaluation_agree(e in expr(), pts in prop::collection::vec(prop::collection::vec((1i64..40, 1i64..13), 3), 50)) {
        let Some(exact) = e.exact() else { return Ok(()) };
        for pt in pts {
            let mut p = vec![0.0; MAX_SYMBOLS];
            for (i, (n, d)) in pt.iter().enumerate() {
                p[symbol_index(i)] = *n as f64 / *d as f64;
            }
            let Some(want) = e.float(&p) else { continue };
            let got = exact.eval_f64(&p);
            prop_assert!((got - want).abs() <= 1e-9 * want.abs().max(1.0), "{} at {:?}: {} vs {}", exact, p, got, want);
        }
    }
}

#[test]
fn q_numbers() {
    let q = Scalar::sym(sym::q());
    let qq = q.sub(&q.pow(-1));
    for n in 1..=10 {
        assert_eq!(qnum(n).mul(&qq), q.pow(n as i32).sub(&q.pow(-(n as i32))), "n = {n}");
    }
}

#[test]
fn symbols_are_reused() {
    assert_eq!(Scalar::var("z"), Scalar::sym(sym::z()));
    assert_eq!(Scalar::parse("(z^2 - 1)/(z - 1)").unwrap(), Scalar::parse("z + 1").unwrap());
}
