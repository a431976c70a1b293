//! Brute-force ground truth: expand to a dense matrix, multiply naively.

use crate::error::{Error, Result};
use crate::linalg::{ComplexMat, ComplexVec, C64, ZERO};
use crate::structures::StructuredMatrix;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    pub order: usize,
    pub entries: ComplexMat,
}

/// Entrywise expansion of any structured matrix.
pub fn dense(m: &StructuredMatrix) -> DenseMatrix {
    let entries = match m {
        StructuredMatrix::Circulant(r) => {
            let n = r.n;
            ComplexMat::from_fn(n, n, |i, j| r.param[(j + n - i) % n])
        }
        StructuredMatrix::Toeplitz(r) => ComplexMat::from_fn(r.n, r.n, |i, j| r.entry(i, j)),
        StructuredMatrix::Hankel(r) => ComplexMat::from_fn(r.n, r.n, |i, j| r.entry(i, j)),
        StructuredMatrix::Symmetric(r) => ComplexMat::from_fn(r.n, r.n, |i, j| r.entry(i, j)),
        StructuredMatrix::ToeplitzPlusHankel(r) => {
            ComplexMat::from_fn(r.n, r.n, |i, j| r.entry(i, j))
        }
        StructuredMatrix::Sparse(r) => {
            let n = r.pattern.n;
            let mut d = ComplexMat::zeros(n, n);
            for (&(i, j), &x) in r.pattern.support.iter().zip(&r.values) {
                d[(i, j)] = x;
            }
            d
        }
        StructuredMatrix::Multilevel(r) => r
            .levels
            .iter()
            .map(|l| dense(l).entries)
            .reduce(|acc, d| acc.kron(&d))
            .expect("multilevel has at least one level"),
    };
    DenseMatrix {
        order: entries.rows(),
        entries,
    }
}

/// Row-by-row inner products.
pub fn naive_matvec(d: &DenseMatrix, v: &[C64]) -> Result<ComplexVec> {
    if v.len() != d.order {
        return Err(Error::Dimension {
            expected: d.order,
            got: v.len(),
        });
    }
    Ok((0..d.order)
        .map(|i| {
            d.entries
                .row(i)
                .iter()
                .zip(v)
                .fold(ZERO, |acc, (a, x)| acc + a * x)
        })
        .collect())
}

/// Multiplications spent by [`naive_matvec`] on an order-`n` matrix.
pub fn naive_mult_count(n: usize) -> usize {
    n * n
}

/// `dense(m) · v`.
pub fn oracle_matvec(m: &StructuredMatrix, v: &[C64]) -> Result<ComplexVec> {
    naive_matvec(&dense(m), v)
}
