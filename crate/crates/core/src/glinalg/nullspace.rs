use crate::scalars::{poly_gcd, Poly, Scalar};

use super::ScalarMatrix;

/// Reduced row echelon form with pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.cols).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// Size heuristic used to pick pivots that limit expression swell.
pub fn complexity(s: &Scalar) -> usize {
    s.num().len() + s.den().len() + (s.num().total_degree() + s.den().total_degree()) as usize
}

/// Gauss-Jordan elimination over the fraction field.
pub fn row_reduce(m: &ScalarMatrix) -> Echelon {
    let cols = m.cols();
    let mut rows: Vec<Vec<Scalar>> =
        m.to_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(best) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| (complexity(&rows[i][c]), i))
        else {
            continue;
        };
        rows.swap(r, best);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        let pivot_row: Vec<Scalar> =
            rows[r].iter().enumerate().map(|(j, x)| if j < c { Scalar::zero() } else { x.mul(&inv) }).collect();
        rows[r] = pivot_row;
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..cols {
                if rows[r][j].is_zero() {
                    continue;
                }
                rows[i][j] = rows[i][j].sub(&f.mul(&rows[r][j]));
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Echelon { rows, pivots, cols }
}

pub fn rank(m: &ScalarMatrix) -> usize {
    row_reduce(m).rank()
}

/// Basis of the right nullspace, one column vector per free column. Each
/// vector is scaled to polynomial entries with trivial common factor.
pub fn nullspace(m: &ScalarMatrix) -> Vec<ScalarMatrix> {
    nullspace_from_echelon(&row_reduce(m))
}

pub fn nullspace_from_echelon(e: &Echelon) -> Vec<ScalarMatrix> {
    e.free_columns()
        .into_iter()
        .map(|f| {
            let mut v = vec![Scalar::zero(); e.cols];
            v[f] = Scalar::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                v[p] = row[f].neg();
            }
            ScalarMatrix::column(primitive_vector(v))
        })
        .collect()
}

/// Clears denominators and removes the common polynomial factor.
pub fn primitive_vector(v: Vec<Scalar>) -> Vec<Scalar> {
    let mut lcm = Poly::one();
    for x in &v {
        if x.is_zero() {
            continue;
        }
        let g = poly_gcd(&lcm, x.den());
        lcm = lcm.mul(&x.den().div_exact(&g).expect("gcd divides"));
    }
    let l = Scalar::from_parts(lcm, Poly::one()).expect("unit denominator");
    let cleared: Vec<Scalar> = v.iter().map(|x| x.mul(&l)).collect();
    let mut g = Poly::zero();
    for x in &cleared {
        if !x.is_zero() {
            g = poly_gcd(&g, x.num());
        }
    }
    if g.is_zero() {
        return cleared;
    }
    let mut gs = Scalar::from_parts(g, Poly::one()).expect("unit denominator");
    if let Some(first) = cleared.iter().find(|x| !x.is_zero()) {
        if first.num().lc().sign() == num_bigint::Sign::Minus {
            gs = gs.neg();
        }
    }
    let ginv = gs.inv().expect("gcd of nonzero entries");
    cleared.iter().map(|x| x.mul(&ginv)).collect()
}
