//! Products with `A_1 ⊛ A_2 ⊛ … ⊛ A_p`.
//!
//! The program route folds Kronecker products of the per-level programs.
//! The direct route treats `A_1` as the head and `B = A_2 ⊛ … ⊛ A_p` as the
//! tail: the tail contributes its program `(φ, ψ, ϑ)` and the head runs its
//! own algorithm on blocks of `N₁ = N / n₁` entries. Parameters are the
//! flattened outer product `a_1 ⊗ … ⊗ a_p`, viewed here as a `dim(A_1) ×
//! dim(B)` matrix whose rows the head algorithm manipulates; every such
//! manipulation is linear in the inputs and costs no multiplication.

use crate::bilinear::BilinearProgram;
use crate::error::{Error, Result};
use crate::kernels::{direct_matvec_with, peel_hankel_shells, program_for, tph_shift, EmbeddingSpec};
use crate::linalg::{dot, ComplexMat, ComplexVec, C64, ZERO};
use crate::structures::{gauge_unfix, MultilevelRep, SparsityPattern, StructuredMatrix};
use crate::transform::{dft_with, idft_with, TransformMode};

/// Flattened outer product of the per-level effective parameters.
pub fn param_vector(m: &MultilevelRep) -> ComplexVec {
    m.param_vector()
}

/// Left fold of [`BilinearProgram::kron`] over the level programs.
pub fn multilevel_program(m: &MultilevelRep) -> BilinearProgram {
    let mut levels = m.levels.iter().map(program_for);
    let first = levels.next().expect("multilevel has at least one level");
    levels.fold((*first).clone(), |acc, p| acc.kron(&p))
}

fn tail_rep(m: &MultilevelRep) -> MultilevelRep {
    MultilevelRep {
        levels: m.levels[1..].to_vec(),
    }
}

/// Direct route with reference transforms.
pub fn multilevel_matvec_direct(m: &MultilevelRep, v: &[C64]) -> Result<(ComplexVec, usize)> {
    multilevel_matvec_direct_with(m, v, TransformMode::Reference)
}

pub fn multilevel_matvec_direct_with(
    m: &MultilevelRep,
    v: &[C64],
    mode: TransformMode,
) -> Result<(ComplexVec, usize)> {
    m.validate()?;
    let order: usize = m.levels.iter().map(StructuredMatrix::order).product();
    if v.len() != order {
        return Err(Error::Dimension {
            expected: order,
            got: v.len(),
        });
    }
    if m.levels.len() == 1 {
        return direct_matvec_with(&m.levels[0], v, mode);
    }
    let head = &m.levels[0];
    let tail_program = multilevel_program(&tail_rep(m));
    let tail = Tail {
        prog: &tail_program,
        block: order / head.order(),
        mode,
    };
    let params = ComplexMat::from_fn(head.param_dim(), tail_program.d_param(), {
        let flat = m.param_vector();
        let d_tail = tail_program.d_param();
        move |i, j| flat[i * d_tail + j]
    });
    Ok(match head {
        StructuredMatrix::Circulant(_) => tail.circulant_head(&params, v, &[]),
        StructuredMatrix::Toeplitz(_) => tail.toeplitz_head(&params, v, &[]),
        StructuredMatrix::Hankel(_) => tail.hankel_head(&params, v),
        StructuredMatrix::Symmetric(r) => tail.symmetric_head(r.n, &params, v),
        StructuredMatrix::ToeplitzPlusHankel(r) => tail.tph_head(r.n, &params, v),
        StructuredMatrix::Sparse(r) => tail.sparse_head(&r.pattern, &params, v),
        StructuredMatrix::Multilevel(_) => return Err(Error::NestedMultilevel),
    })
}

/// Top-level pointwise products of the program route, as a
/// `head slots × tail slots` matrix (zero on inactive slots).
pub fn intermediate_w_values(m: &MultilevelRep, v: &[C64]) -> Result<ComplexMat> {
    m.validate()?;
    if m.levels.len() < 2 {
        return Err(Error::SingleLevel);
    }
    let program = multilevel_program(m);
    let (w, _) = program.products(&m.param_vector(), v)?;
    let head_slots = program_for(&m.levels[0]).slots();
    let tail_slots = program.slots() / head_slots;
    Ok(ComplexMat::from_fn(head_slots, tail_slots, |s, t| {
        w[s * tail_slots + t]
    }))
}

/// Applies `f` to every column of `m`.
fn map_columns(m: &ComplexMat, rows_out: usize, f: impl Fn(&[C64]) -> ComplexVec) -> ComplexMat {
    let mut out = ComplexMat::zeros(rows_out, m.cols());
    let mut col = vec![ZERO; m.rows()];
    for j in 0..m.cols() {
        for (i, x) in col.iter_mut().enumerate() {
            *x = m[(i, j)];
        }
        for (i, y) in f(&col).into_iter().enumerate() {
            out[(i, j)] = y;
        }
    }
    out
}

fn reverse_blocks(v: &[C64], block: usize) -> ComplexVec {
    v.chunks(block).rev().flatten().copied().collect()
}

struct Tail<'a> {
    prog: &'a BilinearProgram,
    /// Entries per block, the order of the tail matrix.
    block: usize,
    mode: TransformMode,
}

impl Tail<'_> {
    /// `coef[s][t] = φ_t` applied to row `s` of the parameter matrix.
    fn encode_params(&self, params: &ComplexMat) -> ComplexMat {
        params
            .matmul(&self.prog.enc_param().transpose())
            .expect("parameter matrix width equals tail dimension")
    }

    /// `Ψ[k][t] = ψ_t(v_k)` for each block `v_k`.
    fn encode_blocks(&self, v: &[C64]) -> ComplexMat {
        let psi = self.prog.enc_vec();
        let blocks: Vec<ComplexVec> = v
            .chunks(self.block)
            .map(|vk| (0..psi.rows()).map(|t| dot(psi.row(t), vk)).collect())
            .collect();
        ComplexMat::from_rows(&blocks).expect("blocks have equal width")
    }

    fn decode(&self, w: &[C64]) -> ComplexVec {
        self.prog.dec().matvec(w).expect("slot count matches decoder")
    }

    /// Circulant head with first-row parameters `c` (one row per entry):
    /// `w_st = (Wc)_s φ_t · Σ_k conj(ω)^{sk} ψ_t(v_k)`, decoded by `(W/n) ⊗ ϑ`.
    fn circulant_head(&self, c: &ComplexMat, v: &[C64], skip: &[usize]) -> (ComplexVec, usize) {
        let n = c.rows();
        let active = self.prog.active();
        let r = active.len();
        let c_hat = map_columns(c, n, |col| dft_with(col, self.mode));
        let coef = self.encode_params(&c_hat);
        let v_hat = map_columns(&self.encode_blocks(v), n, |col| {
            idft_with(col, self.mode).into_iter().map(|x| x * n as f64).collect()
        });
        let mut mults = 0;
        let mut w = ComplexMat::zeros(n, r);
        for s in (0..n).filter(|s| !skip.contains(s)) {
            for t in (0..r).filter(|&t| active[t]) {
                w[(s, t)] = coef[(s, t)] * v_hat[(s, t)];
                mults += 1;
            }
        }
        let decoded: Vec<ComplexVec> = (0..n).map(|s| self.decode(w.row(s))).collect();
        let decoded = ComplexMat::from_rows(&decoded).expect("equal block widths");
        let scale = 1.0 / n as f64;
        let z = map_columns(&decoded, n, |col| {
            dft_with(col, self.mode).into_iter().map(|x| x * scale).collect()
        });
        (z.as_slice().to_vec(), mults)
    }

    fn toeplitz_head(&self, t: &ComplexMat, v: &[C64], extra_skip: &[usize]) -> (ComplexVec, usize) {
        let n = t.rows().div_ceil(2);
        let spec = EmbeddingSpec::new(n);
        let c = map_columns(t, 2 * n, |col| spec.embed(col));
        let mut padded = v.to_vec();
        padded.resize(2 * v.len(), ZERO);
        let mut skip = vec![0];
        skip.extend_from_slice(extra_skip);
        let (mut z, mults) = self.circulant_head(&c, &padded, &skip);
        z.truncate(v.len());
        (z, mults)
    }

    fn hankel_head(&self, h: &ComplexMat, v: &[C64]) -> (ComplexVec, usize) {
        let rows: Vec<usize> = (0..h.rows()).rev().collect();
        let (z, mults) = self.toeplitz_head(&h.select_rows(&rows), v, &[]);
        (reverse_blocks(&z, self.block), mults)
    }

    fn symmetric_head(&self, n: usize, s: &ComplexMat, v: &[C64]) -> (ComplexVec, usize) {
        let per_column: Vec<_> = (0..s.cols())
            .map(|j| {
                let col: ComplexVec = (0..s.rows()).map(|i| s[(i, j)]).collect();
                peel_hankel_shells(n, &col)
            })
            .collect();
        let nb = self.block;
        let mut z = vec![ZERO; v.len()];
        let mut mults = 0;
        for k in 0..n.div_ceil(2) {
            let m = n - 2 * k;
            let hk = ComplexMat::from_fn(2 * m - 1, s.cols(), |i, j| per_column[j][k].param[i]);
            let (wk, c) = self.hankel_head(&hk, &v[k * nb..(n - k) * nb]);
            mults += c;
            for (dst, x) in z[k * nb..(n - k) * nb].iter_mut().zip(wk) {
                *dst += x;
            }
        }
        (z, mults)
    }

    fn tph_head(&self, n: usize, x: &ComplexMat, v: &[C64]) -> (ComplexVec, usize) {
        let mut h = ComplexMat::zeros(2 * n - 1, x.cols());
        let mut t = ComplexMat::zeros(2 * n - 1, x.cols());
        for j in 0..x.cols() {
            let col: ComplexVec = (0..x.rows()).map(|i| x[(i, j)]).collect();
            let (tj, hj) = gauge_unfix(n, &col);
            let a = tph_shift(&tj);
            for i in 0..2 * n - 1 {
                h[(i, j)] = hj[i] + a;
                t[(i, j)] = tj[i] - a;
            }
        }
        let (zh, ch) = self.hankel_head(&h, v);
        let (zt, ct) = self.toeplitz_head(&t, v, &[1]);
        (zh.iter().zip(zt).map(|(p, q)| p + q).collect(), ch + ct)
    }

    /// One product per (support entry, active tail slot).
    fn sparse_head(&self, pattern: &SparsityPattern, a: &ComplexMat, v: &[C64]) -> (ComplexVec, usize) {
        let active = self.prog.active();
        let r = active.len();
        let coef = self.encode_params(a);
        let psi = self.encode_blocks(v);
        let mut acc = ComplexMat::zeros(pattern.n, r);
        let mut mults = 0;
        for (e, &(i, j)) in pattern.support.iter().enumerate() {
            for t in (0..r).filter(|&t| active[t]) {
                acc[(i, t)] += coef[(e, t)] * psi[(j, t)];
                mults += 1;
            }
        }
        let z = (0..pattern.n).flat_map(|i| self.decode(acc.row(i))).collect();
        (z, mults)
    }
}
