use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::scalars::{Bindings, Scalar, ScalarError};

use super::LinalgError;

/// Parity of each basis vector: 0 even, 1 odd.
pub type Grading = Vec<u8>;

/// Dense matrix of scalars. Entry `(r, c)` is the coefficient of basis
/// vector `r` in the image of basis vector `c`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ScalarMatrix {
        ScalarMatrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> ScalarMatrix {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    /// Matrix unit with a one at 1-based position `(i, j)`, as in `e_{i,j}`.
    pub fn unit(n: usize, i: usize, j: usize) -> ScalarMatrix {
        let mut m = Self::zeros(n, n);
        m.set(i - 1, j - 1, Scalar::one());
        m
    }

    pub fn diag(entries: &[Scalar]) -> ScalarMatrix {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<ScalarMatrix, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Ragged);
        }
        Ok(ScalarMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Column vector.
    pub fn column(entries: Vec<Scalar>) -> ScalarMatrix {
        ScalarMatrix { rows: entries.len(), cols: 1, data: entries }
    }

    /// Builds an `n x n` matrix from a sparse list of 1-based entries.
    pub fn from_entries(n: usize, entries: &[(usize, usize, Scalar)]) -> ScalarMatrix {
        let mut m = Self::zeros(n, n);
        for (i, j, v) in entries {
            let cur = m.get(i - 1, j - 1).add(v);
            m.set(i - 1, j - 1, cur);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| {
                let v = self.get(r, c);
                if r == c { v.is_one() } else { v.is_zero() }
            }))
    }

    fn check_same_shape(&self, o: &ScalarMatrix) -> Result<(), LinalgError> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(LinalgError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &ScalarMatrix) -> Result<ScalarMatrix, LinalgError> {
        self.check_same_shape(o)?;
        Ok(self.zip(o, Scalar::add))
    }

    pub fn try_sub(&self, o: &ScalarMatrix) -> Result<ScalarMatrix, LinalgError> {
        self.check_same_shape(o)?;
        Ok(self.zip(o, Scalar::sub))
    }

    /// Panics on shape mismatch.
    pub fn add(&self, o: &ScalarMatrix) -> ScalarMatrix {
        self.try_add(o).expect("matrix shapes agree")
    }

    /// Panics on shape mismatch.
    pub fn sub(&self, o: &ScalarMatrix) -> ScalarMatrix {
        self.try_sub(o).expect("matrix shapes agree")
    }

    fn zip(&self, o: &ScalarMatrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> ScalarMatrix {
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn neg(&self) -> ScalarMatrix {
        self.map(Scalar::neg)
    }

    pub fn scale(&self, s: &Scalar) -> ScalarMatrix {
        if s.is_one() {
            return self.clone();
        }
        self.map(|x| x.mul(s))
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> ScalarMatrix {
        ScalarMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<E>(&self, f: impl Fn(&Scalar) -> Result<Scalar, E>) -> Result<ScalarMatrix, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(ScalarMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_mul(&self, o: &ScalarMatrix) -> Result<ScalarMatrix, LinalgError> {
        if self.cols != o.rows {
            return Err(LinalgError::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    /// Panics on shape mismatch.
    pub fn mul(&self, o: &ScalarMatrix) -> ScalarMatrix {
        self.try_mul(o).expect("matrix shapes agree")
    }

    /// Product of a list of matrices, left to right.
    pub fn product<'a>(ms: impl IntoIterator<Item = &'a ScalarMatrix>) -> ScalarMatrix {
        let mut it = ms.into_iter();
        let first = it.next().expect("nonempty product").clone();
        it.fold(first, |acc, m| acc.mul(m))
    }

    pub fn pow(&self, e: u32) -> ScalarMatrix {
        (0..e).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, o: &ScalarMatrix) -> ScalarMatrix {
        self.mul(o).sub(&o.mul(self))
    }

    /// `{a, b} = ab + ba`.
    pub fn anticommutator(&self, o: &ScalarMatrix) -> ScalarMatrix {
        self.mul(o).add(&o.mul(self))
    }

    /// Graded bracket `ab - (-1)^(pa pb) ba`.
    pub fn supercommutator(&self, pa: u8, o: &ScalarMatrix, pb: u8) -> ScalarMatrix {
        if pa & pb & 1 == 1 {
            self.anticommutator(o)
        } else {
            self.commutator(o)
        }
    }

    pub fn substitute(&self, b: &Bindings) -> Result<ScalarMatrix, ScalarError> {
        self.try_map(|x| x.substitute(b))
    }

    /// Column-major vectorization.
    pub fn vec_col_major(&self) -> Vec<Scalar> {
        let mut out = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                out.push(self.get(r, c).clone());
            }
        }
        out
    }

    /// Inverse of [`ScalarMatrix::vec_col_major`].
    pub fn from_col_major(rows: usize, cols: usize, v: &[Scalar]) -> ScalarMatrix {
        let mut m = Self::zeros(rows, cols);
        for c in 0..cols {
            for r in 0..rows {
                m.set(r, c, v[c * rows + r].clone());
            }
        }
        m
    }

    /// Stacks matrices with equal column counts.
    pub fn vstack(blocks: &[ScalarMatrix]) -> Result<ScalarMatrix, LinalgError> {
        let cols = blocks.first().map_or(0, |b| b.cols);
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(LinalgError::Dimension("vstack column counts differ".into()));
        }
        Ok(ScalarMatrix {
            rows: blocks.iter().map(|b| b.rows).sum(),
            cols,
            data: blocks.iter().flat_map(|b| b.data.iter().cloned()).collect(),
        })
    }

    /// Ordinary Kronecker product in the basis order `(v_i, w_j) -> i*dim_w + j`.
    pub fn kron(&self, o: &ScalarMatrix) -> ScalarMatrix {
        let mut out = Self::zeros(self.rows * o.rows, self.cols * o.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..o.rows {
                    for c2 in 0..o.cols {
                        let b = o.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * o.rows + r2, c1 * o.cols + c2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Matrix JSON: `{"rows":n,"cols":m,"entries":[[...],...]}`.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Vec<String>> =
            (0..self.rows).map(|r| self.row(r).iter().map(Scalar::to_string).collect()).collect();
        json!({"rows": self.rows, "cols": self.cols, "entries": entries})
    }

    pub fn from_json(v: &Value) -> Result<ScalarMatrix, LinalgError> {
        let raw: MatrixJson =
            serde_json::from_value(v.clone()).map_err(|e| LinalgError::Json(e.to_string()))?;
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(LinalgError::Json("entries do not match rows/cols".into()));
        }
        let rows = raw
            .entries
            .iter()
            .map(|r| r.iter().map(|s| Scalar::parse(s).map_err(LinalgError::Scalar)).collect())
            .collect::<Result<Vec<Vec<Scalar>>, _>>()?;
        let mut m = Self::from_rows(rows)?;
        if raw.rows == 0 {
            m.cols = raw.cols;
        }
        Ok(m)
    }

    /// Floating evaluation of every entry; test oracle only.
    pub fn eval_f64(&self, point: &[f64]) -> Vec<f64> {
        self.data.iter().map(|x| x.eval_f64(point)).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

/// Graded tensor product of operators:
/// `(A (x) B)(v (x) w) = (-1)^(pB |v|) (A v) (x) (B w)`.
pub fn kron_graded(
    a: &ScalarMatrix,
    _pa: u8,
    b: &ScalarMatrix,
    pb: u8,
    g1: &[u8],
    g2: &[u8],
) -> Result<ScalarMatrix, LinalgError> {
    if g1.len() != a.cols || g1.len() != a.rows || g2.len() != b.cols || g2.len() != b.rows {
        return Err(LinalgError::Dimension(format!(
            "gradings of length {} and {} do not match {}x{} and {}x{}",
            g1.len(),
            g2.len(),
            a.rows,
            a.cols,
            b.rows,
            b.cols
        )));
    }
    let mut out = a.kron(b);
    if pb & 1 == 1 {
        for c1 in 0..a.cols {
            if g1[c1] & 1 == 1 {
                for c2 in 0..b.cols {
                    let c = c1 * b.cols + c2;
                    for r in 0..out.rows {
                        let v = out.get(r, c).neg();
                        out.set(r, c, v);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Tensor product grading, in the same basis order as [`ScalarMatrix::kron`].
pub fn grading_tensor(g1: &[u8], g2: &[u8]) -> Grading {
    g1.iter().flat_map(|a| g2.iter().map(move |b| (a + b) & 1)).collect()
}

/// Graded flip `P(v_i (x) w_j) = (-1)^(|i||j|) w_j (x) v_i` from `V (x) W`
/// to `W (x) V`.
pub fn graded_permutation(g1: &[u8], g2: &[u8]) -> ScalarMatrix {
    let (n1, n2) = (g1.len(), g2.len());
    let mut p = ScalarMatrix::zeros(n1 * n2, n1 * n2);
    for i in 0..n1 {
        for j in 0..n2 {
            let sign = if g1[i] & g2[j] & 1 == 1 { Scalar::int(-1) } else { Scalar::one() };
            p.set(j * n1 + i, i * n2 + j, sign);
        }
    }
    p
}

impl fmt::Display for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(Scalar::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ScalarMatrix {}x{}\n{}", self.rows, self.cols, self)
    }
}
