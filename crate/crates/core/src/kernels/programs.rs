//! Builders producing a [`BilinearProgram`] for each structure class.

use crate::bilinear::BilinearProgram;
use crate::linalg::{ComplexMat, ComplexVec, C64, ONE, ZERO};
use crate::structures::{gauge_unfix, SparsityPattern};
use crate::transform::{fourier_matrix, root_of_unity};

use super::embedding::EmbeddingSpec;
use super::shells::peel_hankel_shells;

/// `n` slots, all active: `enc_param = W`, `enc_vec = conj(W) = nW⁻¹`,
/// `dec = W / n`.
pub fn circulant_program(n: usize) -> BilinearProgram {
    let w = fourier_matrix(n).entries;
    let dec = w.scale(C64::new(1.0 / n as f64, 0.0));
    BilinearProgram::new(w.clone(), w.conj(), dec, vec![true; n])
        .expect("fourier shapes are consistent")
}

/// Circulant embedding of order `2n`: zero-pad `v`, keep the first `n`
/// outputs. Slot 0 (frequency zero) is inactive.
pub fn toeplitz_program(n: usize) -> BilinearProgram {
    let spec = EmbeddingSpec::new(n);
    let m = spec.target_order();
    let pad = ComplexMat::from_fn(m, n, |r, c| if r == c { ONE } else { ZERO });
    let take = pad.transpose();
    let mut p = circulant_program(m)
        .conjugate_by(&spec.matrix(), &pad, &take)
        .expect("embedding shapes compose");
    p.declare_inactive(&[0]);
    p
}

/// `H v = J · T(rev h) v`: reversed parameters through the Toeplitz program,
/// then the output reversed.
pub fn hankel_program(n: usize) -> BilinearProgram {
    let reverse_params = ComplexMat::exchange(2 * n - 1);
    toeplitz_program(n)
        .conjugate_by(
            &reverse_params,
            &ComplexMat::identity(n),
            &ComplexMat::exchange(n),
        )
        .expect("reversal shapes compose")
}

/// Sum over the Hankel shells of `S`: shell `k` has order `n - 2k`, reads
/// `v[k..n-k]` and writes `z[k..n-k]`.
pub fn symmetric_program(n: usize) -> BilinearProgram {
    assert!(n >= 1, "symmetric order must be positive");
    let dim = n * (n + 1) / 2;
    let shells = n.div_ceil(2);
    let parts: Vec<BilinearProgram> = (0..shells)
        .map(|k| {
            let m = n - 2 * k;
            let to_shell = ComplexMat::from_linear_map(dim, 2 * m - 1, |s| {
                peel_hankel_shells(n, s)[k].param.clone()
            });
            let select = ComplexMat::from_fn(m, n, |r, c| if c == r + k { ONE } else { ZERO });
            let place = select.transpose();
            hankel_program(m)
                .compact()
                .conjugate_by(&to_shell, &select, &place)
                .expect("shell shapes compose")
        })
        .collect();
    BilinearProgram::sum(&parts).expect("shells share dimensions")
}

/// The gauge shift `a` that cancels the frequency-one coefficient of the
/// circulant embedding of `T - aE`, with `ω = e^{πi/n}`:
///
/// `a = (Σ_{j<n} ω^j t_{n-1+j} + ω^n b + Σ_{1≤j<n} ω^{n+j} t_{j-1}) / 2n`,
/// `b = -Σ t` (0-based `t`).
pub fn tph_shift(t: &[C64]) -> C64 {
    let n = t.len().div_ceil(2);
    let omega = |k: usize| root_of_unity(k, 2 * n);
    let b = EmbeddingSpec::balancing_b(t);
    let head: C64 = (0..n).map(|j| omega(j) * t[n - 1 + j]).sum();
    let tail: C64 = (1..n).map(|j| omega(n + j) * t[j - 1]).sum();
    (head + omega(n) * b + tail) / (2 * n) as f64
}

/// Hankel part `H + aE` plus Toeplitz part `T - aE`, on the `4n - 3`
/// gauge-fixed parameters. The Toeplitz part loses frequencies 0 and 1.
pub fn tph_program(n: usize) -> BilinearProgram {
    assert!(n >= 1, "toeplitz-plus-hankel order must be positive");
    let dim = 4 * n - 3;
    let shifted = |sign: f64, pick_hankel: bool| {
        move |p: &[C64]| -> ComplexVec {
            let (t, h) = gauge_unfix(n, p);
            let a = tph_shift(&t) * sign;
            let base = if pick_hankel { h } else { t };
            base.iter().map(|x| x + a).collect()
        }
    };
    let hankel_map = ComplexMat::from_linear_map(dim, 2 * n - 1, shifted(1.0, true));
    let toeplitz_map = ComplexMat::from_linear_map(dim, 2 * n - 1, shifted(-1.0, false));
    let id = ComplexMat::identity(n);
    let hankel_part = hankel_program(n)
        .conjugate_by(&hankel_map, &id, &id)
        .expect("hankel map composes");
    let mut toeplitz_part = toeplitz_program(n)
        .conjugate_by(&toeplitz_map, &id, &id)
        .expect("toeplitz map composes");
    toeplitz_part.declare_inactive(&[1]);
    BilinearProgram::sum(&[hankel_part, toeplitz_part]).expect("parts share dimensions")
}

/// One slot per support entry `(i, j)`: value times `v_j`, added to `z_i`.
pub fn sparse_program(pattern: &SparsityPattern) -> BilinearProgram {
    let r = pattern.len();
    let n = pattern.n;
    let enc_vec = ComplexMat::from_fn(r, n, |e, c| if pattern.support[e].1 == c { ONE } else { ZERO });
    let dec = ComplexMat::from_fn(n, r, |row, e| if pattern.support[e].0 == row { ONE } else { ZERO });
    BilinearProgram::new(ComplexMat::identity(r), enc_vec, dec, vec![true; r])
        .expect("support shapes are consistent")
}
