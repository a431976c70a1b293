//! Hankel shell decomposition of a symmetric matrix.
//!
//! Shell `k` is the Hankel matrix of order `n - 2k` agreeing with the
//! current residual on its first row and last column. Subtracting it zeroes
//! the residual's border (the residual stays symmetric), and the inner block
//! becomes the next residual.

use crate::linalg::{ComplexMat, C64};
use crate::structures::{packed_index, HankelRep};

/// Dense symmetric matrix from packed upper-triangular parameters.
pub fn symmetric_dense(n: usize, params: &[C64]) -> ComplexMat {
    ComplexMat::from_fn(n, n, |i, j| {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        params[packed_index(n, lo, hi)]
    })
}

/// The Hankel matrix of order `m` taking its first row and last column from `s`.
pub fn border_hankel(s: &ComplexMat) -> HankelRep {
    let m = s.rows();
    // entry(i, j) = param[2m - 2 - i - j]
    let param = (0..2 * m - 1)
        .map(|q| {
            if q < m {
                s[(m - 1 - q, m - 1)]
            } else {
                s[(0, 2 * m - 2 - q)]
            }
        })
        .collect();
    HankelRep { n: m, param }
}

/// Residual after removing the shell: inner block of `s - h`.
pub fn inner_residual(s: &ComplexMat, h: &HankelRep) -> ComplexMat {
    let m = s.rows();
    if m <= 2 {
        return ComplexMat::zeros(0, 0);
    }
    ComplexMat::from_fn(m - 2, m - 2, |i, j| s[(i + 1, j + 1)] - h.entry(i + 1, j + 1))
}

/// All `⌈n/2⌉` shells of the symmetric matrix with packed parameters `params`.
pub fn peel_hankel_shells(n: usize, params: &[C64]) -> Vec<HankelRep> {
    let mut residual = symmetric_dense(n, params);
    let mut shells = Vec::with_capacity(n.div_ceil(2));
    while residual.rows() > 0 {
        let h = border_hankel(&residual);
        residual = inner_residual(&residual, &h);
        shells.push(h);
    }
    shells
}
