//! Step-by-step matvec routines that follow the classical algorithms
//! literally, counting genuine multiplications as they go. They share no
//! code with the program builders beyond the transforms, and exist to be
//! checked against them.

use crate::error::{Error, Result};
use crate::linalg::{ComplexVec, C64, ZERO};
use crate::structures::{
    CirculantRep, HankelRep, SparseRep, SymmetricRep, ToeplitzPlusHankelRep, ToeplitzRep,
};
use crate::transform::{dft_with, exchange_apply, idft_with, TransformMode};

use super::embedding::EmbeddingSpec;
use super::programs::tph_shift;
use super::shells::{border_hankel, inner_residual, symmetric_dense};

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::Dimension { expected, got })
    }
}

/// Circulant product with first row `c`; frequencies in `skip` are known to
/// have a zero coefficient and are neither multiplied nor counted.
pub(crate) fn circulant_core(
    c: &[C64],
    v: &[C64],
    skip: &[usize],
    mode: TransformMode,
) -> (ComplexVec, usize) {
    let n = c.len();
    let a_hat = dft_with(c, mode);
    // n·W⁻¹ v
    let v_hat: ComplexVec = idft_with(v, mode).into_iter().map(|x| x * n as f64).collect();
    let mut mults = 0;
    let z_hat: ComplexVec = (0..n)
        .map(|s| {
            if skip.contains(&s) {
                ZERO
            } else {
                mults += 1;
                a_hat[s] * v_hat[s]
            }
        })
        .collect();
    let scale = 1.0 / n as f64;
    let z = dft_with(&z_hat, mode).into_iter().map(|x| x * scale).collect();
    (z, mults)
}

/// The same steps with the decode stage left unscaled: returns `n · (A v)`.
pub fn circulant_matvec_unnormalized(a: &CirculantRep, v: &[C64]) -> Result<ComplexVec> {
    check_len(a.n, v.len())?;
    let (z, _) = circulant_core(&a.param, v, &[], TransformMode::Reference);
    Ok(z.into_iter().map(|x| x * a.n as f64).collect())
}

pub(crate) fn toeplitz_core(
    t: &[C64],
    v: &[C64],
    extra_skip: &[usize],
    mode: TransformMode,
) -> (ComplexVec, usize) {
    let n = v.len();
    let c = EmbeddingSpec::new(n).embed(t);
    let mut padded = v.to_vec();
    padded.resize(2 * n, ZERO);
    let mut skip = vec![0];
    skip.extend_from_slice(extra_skip);
    let (mut z, mults) = circulant_core(&c, &padded, &skip, mode);
    z.truncate(n);
    (z, mults)
}

pub(crate) fn hankel_core(h: &[C64], v: &[C64], mode: TransformMode) -> (ComplexVec, usize) {
    let t = exchange_apply(h);
    let (z, mults) = toeplitz_core(&t, v, &[], mode);
    (exchange_apply(&z), mults)
}

pub(crate) fn symmetric_core(s: &SymmetricRep, v: &[C64], mode: TransformMode) -> (ComplexVec, usize) {
    let n = s.n;
    let mut residual = symmetric_dense(n, &s.param);
    let mut z = vec![ZERO; n];
    let mut mults = 0;
    let mut k = 0;
    while residual.rows() > 0 {
        let m = residual.rows();
        let h = border_hankel(&residual);
        let (w, c) = hankel_core(&h.param, &v[k..k + m], mode);
        mults += c;
        for (dst, x) in z[k..k + m].iter_mut().zip(w) {
            *dst += x;
        }
        residual = inner_residual(&residual, &h);
        k += 1;
    }
    (z, mults)
}

pub(crate) fn tph_core(x: &ToeplitzPlusHankelRep, v: &[C64], mode: TransformMode) -> (ComplexVec, usize) {
    let a = tph_shift(&x.toeplitz.param);
    let h: ComplexVec = x.hankel.param.iter().map(|h| h + a).collect();
    let t: ComplexVec = x.toeplitz.param.iter().map(|t| t - a).collect();
    let (zh, ch) = hankel_core(&h, v, mode);
    // frequency 1 of the shifted Toeplitz embedding vanishes by the choice of a
    let (zt, ct) = toeplitz_core(&t, v, &[1], mode);
    (zh.iter().zip(zt).map(|(p, q)| p + q).collect(), ch + ct)
}

pub fn direct_circulant_matvec(a: &CirculantRep, v: &[C64]) -> Result<(ComplexVec, usize)> {
    check_len(a.n, v.len())?;
    Ok(circulant_core(&a.param, v, &[], TransformMode::Reference))
}

pub fn direct_toeplitz_matvec(t: &ToeplitzRep, v: &[C64]) -> Result<(ComplexVec, usize)> {
    check_len(t.n, v.len())?;
    Ok(toeplitz_core(&t.param, v, &[], TransformMode::Reference))
}

pub fn direct_hankel_matvec(h: &HankelRep, v: &[C64]) -> Result<(ComplexVec, usize)> {
    check_len(h.n, v.len())?;
    Ok(hankel_core(&h.param, v, TransformMode::Reference))
}

pub fn direct_symmetric_matvec(s: &SymmetricRep, v: &[C64]) -> Result<(ComplexVec, usize)> {
    check_len(s.n, v.len())?;
    Ok(symmetric_core(s, v, TransformMode::Reference))
}

pub fn direct_tph_matvec(x: &ToeplitzPlusHankelRep, v: &[C64]) -> Result<(ComplexVec, usize)> {
    check_len(x.n, v.len())?;
    Ok(tph_core(x, v, TransformMode::Reference))
}

pub fn direct_sparse_matvec(a: &SparseRep, v: &[C64]) -> Result<(ComplexVec, usize)> {
    check_len(a.pattern.n, v.len())?;
    let mut z = vec![ZERO; a.pattern.n];
    for (&(i, j), &x) in a.pattern.support.iter().zip(&a.values) {
        z[i] += x * v[j];
    }
    Ok((z, a.values.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{real_vec, rel_err};
    use crate::structures::SparsityPattern;

    fn assert_close(got: &[C64], want: &[C64]) {
        assert!(rel_err(got, want) < 1e-13, "got {got:?}, want {want:?}");
    }

    #[test]
    fn circulant_examples() {
        let a = CirculantRep::real(&[1.0, 0.0, 0.0]).unwrap();
        let (z, k) = direct_circulant_matvec(&a, &real_vec(&[5.0, 6.0, 7.0])).unwrap();
        assert_close(&z, &real_vec(&[5.0, 6.0, 7.0]));
        assert_eq!(k, 3);
        let a = CirculantRep::real(&[0.0, 1.0, 0.0, 0.0]).unwrap();
        let (z, _) = direct_circulant_matvec(&a, &real_vec(&[1.0, 2.0, 3.0, 4.0])).unwrap();
        assert_close(&z, &real_vec(&[2.0, 3.0, 4.0, 1.0]));
        let a = CirculantRep::real(&[1.0, 2.0, 3.0]).unwrap();
        let (z, _) = direct_circulant_matvec(&a, &real_vec(&[1.0; 3])).unwrap();
        assert_close(&z, &real_vec(&[6.0; 3]));
        assert!(direct_circulant_matvec(&a, &real_vec(&[1.0; 2])).is_err());
    }

    #[test]
    fn unnormalized_circulant_is_off_by_n() {
        let a = CirculantRep::real(&[1.0, 2.0, 3.0]).unwrap();
        let z = circulant_matvec_unnormalized(&a, &real_vec(&[1.0; 3])).unwrap();
        assert_close(&z, &real_vec(&[18.0; 3]));
    }

    #[test]
    fn toeplitz_and_hankel_examples() {
        let t = ToeplitzRep::real(2, &[1.0, 2.0, 3.0]).unwrap();
        let (z, k) = direct_toeplitz_matvec(&t, &real_vec(&[1.0, 1.0])).unwrap();
        assert_close(&z, &real_vec(&[5.0, 3.0]));
        assert_eq!(k, 3);
        let h = HankelRep::real(2, &[1.0, 2.0, 3.0]).unwrap();
        let (z, k) = direct_hankel_matvec(&h, &real_vec(&[1.0, 0.0])).unwrap();
        assert_close(&z, &real_vec(&[3.0, 2.0]));
        assert_eq!(k, 3);
        let h = HankelRep::real(2, &[0.0, 1.0, 0.0]).unwrap();
        let (z, _) = direct_hankel_matvec(&h, &real_vec(&[5.0, 7.0])).unwrap();
        assert_close(&z, &real_vec(&[7.0, 5.0]));
    }

    #[test]
    fn symmetric_identity() {
        let mut p = vec![ZERO; 10];
        for i in 0..4 {
            p[crate::structures::packed_index(4, i, i)] = C64::new(1.0, 0.0);
        }
        let s = SymmetricRep::new(4, p).unwrap();
        let v = real_vec(&[1.0, -2.0, 3.5, 4.0]);
        let (z, k) = direct_symmetric_matvec(&s, &v).unwrap();
        assert_close(&z, &v);
        assert_eq!(k, 10);
    }

    #[test]
    fn tph_cancelling_parts_give_zero() {
        // all-ones is both Toeplitz and Hankel, so H = -T is expressible
        let h = HankelRep::real(3, &[-1.0; 5]).unwrap();
        let t_ones = ToeplitzRep::real(3, &[1.0; 5]).unwrap();
        let x = ToeplitzPlusHankelRep::new(t_ones, h).unwrap();
        let (z, k) = direct_tph_matvec(&x, &real_vec(&[1.0, 2.0, 3.0])).unwrap();
        assert!(z.iter().all(|x| x.norm() < 1e-13));
        assert_eq!(k, 9);
    }

    #[test]
    fn sparse_examples() {
        let a = SparseRep::new(SparsityPattern::upper_triangular(2), real_vec(&[1.0, 2.0, 3.0])).unwrap();
        let (z, k) = direct_sparse_matvec(&a, &real_vec(&[1.0, 1.0])).unwrap();
        assert_eq!(z, real_vec(&[3.0, 3.0]));
        assert_eq!(k, 3);
    }
}
