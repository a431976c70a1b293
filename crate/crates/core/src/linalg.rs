//! Dense complex vectors and matrices.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type ComplexVec = Vec<C64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMat {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Exchange matrix: ones on the anti-diagonal.
    pub fn exchange(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, n - 1 - i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Shape(format!(
                "ragged rows: {} vs {}",
                bad.len(),
                cols
            )));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    /// Builds the matrix of a linear map by evaluating it on the standard basis.
    pub fn from_linear_map(
        dim_in: usize,
        dim_out: usize,
        f: impl Fn(&[C64]) -> ComplexVec,
    ) -> Self {
        let mut m = Self::zeros(dim_out, dim_in);
        let mut basis = vec![ZERO; dim_in];
        for j in 0..dim_in {
            basis[j] = ONE;
            let col = f(&basis);
            assert_eq!(col.len(), dim_out, "linear map returned wrong length");
            for (i, x) in col.into_iter().enumerate() {
                m[(i, j)] = x;
            }
            basis[j] = ZERO;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, r: usize) -> &[C64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [C64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn row_max_abs(&self, r: usize) -> f64 {
        self.row(r).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn matvec(&self, x: &[C64]) -> Result<ComplexVec> {
        if x.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                got: x.len(),
            });
        }
        Ok((0..self.rows).map(|r| dot(self.row(r), x)).collect())
    }

    pub fn matmul(&self, rhs: &ComplexMat) -> Result<ComplexMat> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        // rows of rhs as (column, value) lists; embeddings and selections are very sparse
        let rhs_nonzeros: Vec<Vec<(usize, C64)>> = (0..rhs.rows)
            .map(|k| {
                rhs.row(k)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| **x != ZERO)
                    .map(|(j, x)| (j, *x))
                    .collect()
            })
            .collect();
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for (k, nonzeros) in rhs_nonzeros.iter().enumerate() {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                for &(j, b) in nonzeros {
                    dst[j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `(a_ij * rhs)`.
    pub fn kron(&self, rhs: &ComplexMat) -> ComplexMat {
        let (r2, c2) = rhs.shape();
        Self::from_fn(self.rows * r2, self.cols * c2, |r, c| {
            self[(r / r2, c / c2)] * rhs[(r % r2, c % c2)]
        })
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[ComplexMat]) -> Result<ComplexMat> {
        let cols = parts.first().map_or(0, |m| m.cols);
        if parts.iter().any(|m| m.cols != cols) {
            return Err(Error::Shape("vstack column counts differ".into()));
        }
        Ok(Self {
            rows: parts.iter().map(|m| m.rows).sum(),
            cols,
            data: parts.iter().flat_map(|m| m.data.iter().copied()).collect(),
        })
    }

    /// Places matrices with equal row counts side by side.
    pub fn hstack(parts: &[ComplexMat]) -> Result<ComplexMat> {
        let rows = parts.first().map_or(0, |m| m.rows);
        if parts.iter().any(|m| m.rows != rows) {
            return Err(Error::Shape("hstack row counts differ".into()));
        }
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut offset = 0;
        for m in parts {
            for r in 0..rows {
                out.row_mut(r)[offset..offset + m.cols].copy_from_slice(m.row(r));
            }
            offset += m.cols;
        }
        Ok(out)
    }

    /// Keeps the listed rows, in order.
    pub fn select_rows(&self, keep: &[usize]) -> ComplexMat {
        Self {
            rows: keep.len(),
            cols: self.cols,
            data: keep.iter().flat_map(|&r| self.row(r).iter().copied()).collect(),
        }
    }

    /// Keeps the listed columns, in order.
    pub fn select_cols(&self, keep: &[usize]) -> ComplexMat {
        Self::from_fn(self.rows, keep.len(), |r, c| self[(r, keep[c])])
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMat {
    type Output = C64;

    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

pub fn dot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Norm-wise relative error `||x - reference|| / ||reference||`.
///
/// Falls back to the absolute error when the reference is exactly zero.
pub fn rel_err(x: &[C64], reference: &[C64]) -> f64 {
    assert_eq!(x.len(), reference.len(), "rel_err length mismatch");
    let diff: f64 = x
        .iter()
        .zip(reference)
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        .sqrt();
    let scale = norm2(reference);
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// Flattened outer product `a ⊗ b`, index `i * b.len() + j`.
pub fn kron_vec(a: &[C64], b: &[C64]) -> ComplexVec {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

pub fn real_vec(xs: &[f64]) -> ComplexVec {
    xs.iter().map(|&x| C64::new(x, 0.0)).collect()
}
