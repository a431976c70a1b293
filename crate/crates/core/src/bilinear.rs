//! Bilinear programs: `(a, v) ↦ dec · ((enc_param · a) ∘ (enc_vec · v))`.
//!
//! Each program is a concrete rank decomposition of a structured
//! matrix-vector product. The parameter encoding, vector encoding and decoding
//! are dense linear maps and cost no genuine multiplications. Only the
//! pointwise products of *active* slots do, so the bilinear complexity of a
//! program is its number of active slots.
//!
//! A slot is inactive when its parameter-side functional vanishes
//! identically. Builders declare this analytically through the mask;
//! [`prune_check`] only confirms the declaration numerically.

use crate::error::{Error, Result};
use crate::linalg::{dot, ComplexMat, ComplexVec, C64, ONE, ZERO};

/// Relative threshold below which an encoder row counts as structurally zero.
pub const STRUCTURAL_ZERO_RTOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct BilinearProgram {
    enc_param: ComplexMat,
    enc_vec: ComplexMat,
    dec: ComplexMat,
    active: Vec<bool>,
}

impl BilinearProgram {
    /// `enc_param` is `r × d_param`, `enc_vec` is `r × n_in`, `dec` is
    /// `n_out × r` and `active` has length `r`.
    pub fn new(
        enc_param: ComplexMat,
        enc_vec: ComplexMat,
        dec: ComplexMat,
        active: Vec<bool>,
    ) -> Result<Self> {
        let r = active.len();
        if enc_param.rows() != r || enc_vec.rows() != r || dec.cols() != r {
            return Err(Error::Shape(format!(
                "slot counts disagree: enc_param {}, enc_vec {}, dec {}, mask {}",
                enc_param.rows(),
                enc_vec.rows(),
                dec.cols(),
                r
            )));
        }
        Ok(Self {
            enc_param,
            enc_vec,
            dec,
            active,
        })
    }

    /// The scalar program `(a, v) ↦ a·v`.
    pub fn identity() -> Self {
        let one = ComplexMat::identity(1);
        Self {
            enc_param: one.clone(),
            enc_vec: one.clone(),
            dec: one,
            active: vec![true],
        }
    }

    /// Number of pointwise product slots, active or not.
    pub fn slots(&self) -> usize {
        self.active.len()
    }

    pub fn d_param(&self) -> usize {
        self.enc_param.cols()
    }

    pub fn n_in(&self) -> usize {
        self.enc_vec.cols()
    }

    pub fn n_out(&self) -> usize {
        self.dec.rows()
    }

    /// Bilinear complexity: the number of active slots.
    pub fn count(&self) -> usize {
        self.active.iter().filter(|&&a| a).count()
    }

    pub fn enc_param(&self) -> &ComplexMat {
        &self.enc_param
    }

    pub fn enc_vec(&self) -> &ComplexMat {
        &self.enc_vec
    }

    pub fn dec(&self) -> &ComplexMat {
        &self.dec
    }

    pub fn active(&self) -> &[bool] {
        &self.active
    }

    fn check_inputs(&self, a: &[C64], v: &[C64]) -> Result<()> {
        if a.len() != self.d_param() {
            return Err(Error::Dimension {
                expected: self.d_param(),
                got: a.len(),
            });
        }
        if v.len() != self.n_in() {
            return Err(Error::Dimension {
                expected: self.n_in(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// The pointwise products `w_t` (zero on inactive slots) and the number
    /// of multiplications spent computing them.
    pub fn products(&self, a: &[C64], v: &[C64]) -> Result<(ComplexVec, usize)> {
        self.check_inputs(a, v)?;
        let mut mults = 0;
        let w = (0..self.slots())
            .map(|t| {
                if !self.active[t] {
                    return ZERO;
                }
                let lhs = dot(self.enc_param.row(t), a);
                let rhs = dot(self.enc_vec.row(t), v);
                mults += 1;
                lhs * rhs
            })
            .collect();
        Ok((w, mults))
    }

    /// Evaluates the program. Returns the output and the measured number of
    /// genuine multiplications.
    pub fn apply(&self, a: &[C64], v: &[C64]) -> Result<(ComplexVec, usize)> {
        let (w, mults) = self.products(a, v)?;
        Ok((self.dec.matvec(&w)?, mults))
    }

    /// Program for `A ⊛ B` from programs for `A` and `B`.
    pub fn kron(&self, other: &BilinearProgram) -> BilinearProgram {
        let active = self
            .active
            .iter()
            .flat_map(|&x| other.active.iter().map(move |&y| x && y))
            .collect();
        BilinearProgram {
            enc_param: self.enc_param.kron(&other.enc_param),
            enc_vec: self.enc_vec.kron(&other.enc_vec),
            dec: self.dec.kron(&other.dec),
            active,
        }
    }

    /// Pre-composes the encoders and post-composes the decoder with fixed
    /// linear maps. Slot count and mask are unchanged.
    pub fn conjugate_by(
        &self,
        pre_param: &ComplexMat,
        pre_vec: &ComplexMat,
        post: &ComplexMat,
    ) -> Result<BilinearProgram> {
        Ok(BilinearProgram {
            enc_param: self.enc_param.matmul(pre_param)?,
            enc_vec: self.enc_vec.matmul(pre_vec)?,
            dec: post.matmul(&self.dec)?,
            active: self.active.clone(),
        })
    }

    /// Concatenates the slots of programs sharing all dimensions; the result
    /// computes the sum of their outputs.
    pub fn sum(parts: &[BilinearProgram]) -> Result<BilinearProgram> {
        let first = parts
            .first()
            .ok_or_else(|| Error::Shape("sum of zero programs".into()))?;
        let dims = (first.d_param(), first.n_in(), first.n_out());
        if let Some(p) = parts
            .iter()
            .find(|p| (p.d_param(), p.n_in(), p.n_out()) != dims)
        {
            return Err(Error::Shape(format!(
                "cannot sum programs with dimensions {:?} and {:?}",
                dims,
                (p.d_param(), p.n_in(), p.n_out())
            )));
        }
        let enc_param: Vec<_> = parts.iter().map(|p| p.enc_param.clone()).collect();
        let enc_vec: Vec<_> = parts.iter().map(|p| p.enc_vec.clone()).collect();
        let dec: Vec<_> = parts.iter().map(|p| p.dec.clone()).collect();
        Ok(BilinearProgram {
            enc_param: ComplexMat::vstack(&enc_param)?,
            enc_vec: ComplexMat::vstack(&enc_vec)?,
            dec: ComplexMat::hstack(&dec)?,
            active: parts.iter().flat_map(|p| p.active.iter().copied()).collect(),
        })
    }

    /// Drops inactive slots.
    pub fn compact(&self) -> BilinearProgram {
        let keep: Vec<usize> = (0..self.slots()).filter(|&t| self.active[t]).collect();
        BilinearProgram {
            enc_param: self.enc_param.select_rows(&keep),
            enc_vec: self.enc_vec.select_rows(&keep),
            dec: self.dec.select_cols(&keep),
            active: vec![true; keep.len()],
        }
    }

    /// Marks slots whose parameter functional is known to vanish.
    pub(crate) fn declare_inactive(&mut self, slots: &[usize]) {
        for &t in slots {
            self.active[t] = false;
        }
    }

    /// Scales the decoder by a constant.
    pub fn scaled(&self, s: C64) -> BilinearProgram {
        BilinearProgram {
            dec: self.dec.scale(s),
            ..self.clone()
        }
    }

    /// The dense matrix this program represents for a given parameter vector.
    pub fn matrix_for(&self, a: &[C64]) -> Result<ComplexMat> {
        if a.len() != self.d_param() {
            return Err(Error::Dimension {
                expected: self.d_param(),
                got: a.len(),
            });
        }
        let mut basis = vec![ZERO; self.n_in()];
        let mut out = ComplexMat::zeros(self.n_out(), self.n_in());
        for j in 0..self.n_in() {
            basis[j] = ONE;
            let (col, _) = self.apply(a, &basis)?;
            for (i, x) in col.into_iter().enumerate() {
                out[(i, j)] = x;
            }
            basis[j] = ZERO;
        }
        Ok(out)
    }
}

/// Theoretical versus measured multiplication counts for one program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    /// Count predicted by the closed-form formula.
    pub theoretical: usize,
    /// Active slots declared by the builder's mask.
    pub declared: usize,
    /// Slots whose parameter encoder row is numerically nonzero.
    pub measured: usize,
    /// Whether the mask agrees with the numeric check slot by slot.
    pub mask_consistent: bool,
}

impl CountReport {
    pub fn matches(&self) -> bool {
        self.mask_consistent && self.declared == self.theoretical && self.measured == self.theoretical
    }
}

/// Numerically confirms the active mask and compares the count against
/// `theoretical`.
pub fn prune_check(p: &BilinearProgram, theoretical: usize) -> CountReport {
    let threshold = STRUCTURAL_ZERO_RTOL * p.enc_param.max_abs();
    let numeric: Vec<bool> = (0..p.slots())
        .map(|t| p.enc_param.row_max_abs(t) > threshold)
        .collect();
    CountReport {
        theoretical,
        declared: p.count(),
        measured: numeric.iter().filter(|&&x| x).count(),
        mask_consistent: numeric == p.active,
    }
}
