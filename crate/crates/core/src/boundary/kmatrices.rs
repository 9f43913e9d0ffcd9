//! Reflection matrices in closed form, transcribed from the displayed
//! solutions. Spectral symbols are `z` (trigonometric) and `u` (rational).

use crate::glinalg::ScalarMatrix;
use crate::scalars::{sym, Scalar};

fn z() -> Scalar {
    Scalar::sym(sym::z())
}

fn u() -> Scalar {
    Scalar::sym(sym::u())
}

fn q() -> Scalar {
    Scalar::sym(sym::q())
}

fn one() -> Scalar {
    Scalar::one()
}

fn div(a: &Scalar, b: &Scalar) -> Scalar {
    a.checked_div(b).expect("generic denominator")
}

fn two_by_two(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> ScalarMatrix {
    ScalarMatrix::from_rows(vec![vec![a, b], vec![c, d]]).expect("square")
}

/// The four-by-four shape shared by the vector solutions.
fn vector_shape(m22: Scalar, m23: Scalar, m32: Scalar, m33: Scalar, m44: Scalar) -> ScalarMatrix {
    let o = Scalar::zero;
    ScalarMatrix::from_rows(vec![
        vec![one(), o(), o(), o()],
        vec![o(), m22, m23, o()],
        vec![o(), m32, m33, o()],
        vec![o(), o(), o(), m44],
    ])
    .expect("square")
}

/// `(c z - 1)/(z (c - z))`.
pub fn trig_diagonal(c: &Scalar) -> Scalar {
    div(&c.mul(&z()).sub(&one()), &z().mul(&c.sub(&z())))
}

/// General singlet solution for U_q(ŝl(2)).
pub fn sl2q_singlet(a: &Scalar, b: &Scalar, c: &Scalar) -> ScalarMatrix {
    let kp = div(&one().sub(&z().pow(2)), &z().mul(&c.sub(&z())));
    two_by_two(one(), a.mul(&kp), b.mul(&kp), trig_diagonal(c))
}

/// `(q - 1/q)(z^2 - 1)/(q^-2 - c z + q^2 z^2)`.
fn trig_vector_k(c: &Scalar) -> Scalar {
    let num = q().sub(&q().pow(-1)).mul(&z().pow(2).sub(&one()));
    div(&num, &q().pow(-2).sub(&c.mul(&z())).add(&q().pow(2).mul(&z().pow(2))))
}

/// Vector solution for U_q(ŝl(2)).
pub fn sl2q_vector(c: &Scalar) -> ScalarMatrix {
    let k = trig_vector_k(c);
    vector_shape(one().sub(&div(&k, &q())), k.clone(), k.clone(), one().sub(&q().mul(&k)), one())
}

/// Singlet solution for U_q(ĝl(1|1)).
pub fn gl11q_singlet(c: &Scalar) -> ScalarMatrix {
    ScalarMatrix::diag(&[one(), trig_diagonal(c)])
}

/// Vector solution for U_q(ĝl(1|1)).
pub fn gl11q_vector(c: &Scalar) -> ScalarMatrix {
    let k = trig_vector_k(c);
    let last = one().sub(&q().add(&q().pow(-1)).mul(&k));
    vector_shape(one().sub(&div(&k, &q())), k.clone(), k.clone(), one().sub(&q().mul(&k)), last)
}

/// `(c + u)/(c - u)`.
pub fn rat_diagonal(c: &Scalar) -> Scalar {
    div(&c.add(&u()), &c.sub(&u()))
}

/// General singlet solution for Y(sl(2)).
pub fn sl2_singlet(a: &Scalar, b: &Scalar, c: &Scalar) -> ScalarMatrix {
    let kp = div(&u(), &c.sub(&u()));
    two_by_two(one(), a.mul(&kp), b.mul(&kp), rat_diagonal(c))
}

/// Vector solution for Y(sl(2)).
pub fn sl2_vector(c: &Scalar) -> ScalarMatrix {
    let k = div(&u().mul(&Scalar::int(2)), &c.pow(2).sub(&u().sub(&one()).pow(2)));
    vector_shape(one().sub(&k), k.clone(), k.clone(), one().sub(&k), one())
}

/// Singlet solution for Y(gl(1|1)).
pub fn gl11_singlet(c: &Scalar) -> ScalarMatrix {
    ScalarMatrix::diag(&[one(), rat_diagonal(c)])
}

/// Vector solution for Y(gl(1|1)).
pub fn gl11_vector(c: &Scalar) -> ScalarMatrix {
    let k = div(&u().mul(&Scalar::int(2)), &u().add(&one()).pow(2).sub(&c.pow(2)));
    let last = one().sub(&k.mul(&Scalar::int(2)));
    vector_shape(one().sub(&k), k.clone(), k.clone(), one().sub(&k), last)
}

/// Vector-boundary solution of the U_q(ŝl(2)) singlet coideal; `s` is the
/// boundary spectral symbol.
pub fn sl2q_singlet_coideal_vector(c: &Scalar) -> ScalarMatrix {
    let (s, z, q2) = (Scalar::sym(sym::s()), z(), q().pow(2));
    let den = c.sub(&z).mul(&q2.mul(&z).sub(&s)).mul(&q2.mul(&s).mul(&z).sub(&one()));
    let k = div(&q2.sub(&one()).mul(&z.pow(2).sub(&one())), &den);
    let kp = trig_diagonal(c);
    vector_shape(
        one().add(&s.mul(&q2.mul(&z).sub(c)).mul(&k)),
        q().mul(&s).mul(&c.sub(&s)).mul(&k),
        q().mul(&c.mul(&s).sub(&one())).mul(&k),
        kp.add(&s.mul(&z.pow(-1).sub(&q2.mul(c))).mul(&k)),
        kp,
    )
}

/// Vector-boundary solution of the Y(sl(2)) type-I twisted Yangian.
pub fn sl2_singlet_coideal_vector(c: &Scalar) -> ScalarMatrix {
    let (s, u) = (Scalar::sym(sym::s()), u());
    let den = c.sub(&u).mul(&one().add(&s).sub(&u)).mul(&u.add(&s).sub(&one()));
    let k = div(&u.mul(&Scalar::int(2)), &den);
    let kp = rat_diagonal(c);
    vector_shape(
        one().add(&u.sub(&one()).sub(c).mul(&k)),
        c.sub(&s).mul(&k),
        c.add(&s).mul(&k),
        kp.add(&one().sub(c).sub(&u).mul(&k)),
        kp,
    )
}

/// One-function family for the U_q(ĝl(1|1)) singlet coideal against a
/// vector boundary, affine in the unknown `kp`.
pub fn gl11q_singlet_coideal_vector(c: &Scalar, kp: &Scalar) -> ScalarMatrix {
    let (s, z, q2) = (Scalar::sym(sym::s()), z(), q().pow(2));
    let q2z = q2.mul(&z);
    let inner = s.add(&z.mul(&c.sub(&s)).mul(&c.mul(&s).sub(&one())).mul(kp)).sub(&s.mul(&z.pow(2)));
    let k = div(&q2.mul(&inner), &s.mul(&z).mul(&q2z.sub(c)));
    vector_shape(
        one().add(&q2z.sub(c).mul(kp)),
        q().mul(&c.sub(&s)).mul(kp),
        q().mul(&c.sub(&s.pow(-1))).mul(kp),
        one().add(&k),
        one().add(&k).add(&q2.mul(&z.pow(-1)).sub(c).mul(kp)),
    )
}

/// One-function family for the Y(gl(1|1)) type-I twisted Yangian against a
/// vector boundary, affine in the unknown `kp`.
pub fn gl11_singlet_coideal_vector(c: &Scalar, kp: &Scalar) -> ScalarMatrix {
    let (s, u) = (Scalar::sym(sym::s()), u());
    let k = div(&c.pow(2).sub(&s.pow(2)).mul(kp).sub(&u.mul(&Scalar::int(2))), &one().sub(c).add(&u));
    vector_shape(
        one().add(&one().sub(c).add(&u).mul(kp)),
        c.sub(&s).mul(kp),
        c.add(&s).mul(kp),
        one().add(&k),
        one().add(&k).add(&one().sub(c).sub(&u).mul(kp)),
    )
}
