//! Structure-specific kernels.
//!
//! Two independent routes compute every product: the *program* route builds
//! a [`BilinearProgram`] and applies it, the *direct* route follows the
//! classical algorithm step by step. Both report the number of genuine
//! multiplications they spend.

mod cache;
mod direct;
mod embedding;
mod programs;
mod shells;

use std::sync::Arc;

pub use cache::cached_program;
pub use direct::{
    circulant_matvec_unnormalized, direct_circulant_matvec, direct_hankel_matvec,
    direct_sparse_matvec, direct_symmetric_matvec, direct_toeplitz_matvec, direct_tph_matvec,
};
pub(crate) use direct::{circulant_core, hankel_core, symmetric_core, toeplitz_core, tph_core};
pub use embedding::EmbeddingSpec;
pub use programs::{
    circulant_program, hankel_program, sparse_program, symmetric_program, toeplitz_program,
    tph_program, tph_shift,
};
pub use shells::{peel_hankel_shells, symmetric_dense};

use crate::bilinear::{prune_check, BilinearProgram, CountReport};
use crate::error::{Error, Result};
use crate::linalg::{ComplexVec, C64};
use crate::multilevel::{multilevel_matvec_direct_with, multilevel_program};
use crate::structures::{StructureKind, StructuredMatrix};
use crate::transform::TransformMode;

/// Program for any structured matrix. Dense-structured single levels come
/// from the shared cache.
pub fn program_for(m: &StructuredMatrix) -> Arc<BilinearProgram> {
    match m {
        StructuredMatrix::Sparse(r) => Arc::new(sparse_program(&r.pattern)),
        StructuredMatrix::Multilevel(r) => Arc::new(multilevel_program(r)),
        other => cached_program(other.kind(), other.order()),
    }
}

/// Builds the program for a dense-structured class without caching.
pub fn build_program(kind: StructureKind, n: usize) -> Option<BilinearProgram> {
    Some(match kind {
        StructureKind::Circulant => circulant_program(n),
        StructureKind::Toeplitz => toeplitz_program(n),
        StructureKind::Hankel => hankel_program(n),
        StructureKind::Symmetric => symmetric_program(n),
        StructureKind::ToeplitzPlusHankel => tph_program(n),
        StructureKind::Sparse | StructureKind::Multilevel => return None,
    })
}

/// Multiplication count predicted by the closed-form formulas.
pub fn theoretical_count(m: &StructuredMatrix) -> usize {
    match m {
        StructuredMatrix::Circulant(r) => r.n,
        StructuredMatrix::Toeplitz(r) => 2 * r.n - 1,
        StructuredMatrix::Hankel(r) => 2 * r.n - 1,
        StructuredMatrix::Symmetric(r) => r.n * (r.n + 1) / 2,
        StructuredMatrix::ToeplitzPlusHankel(r) => 4 * r.n - 3,
        StructuredMatrix::Sparse(r) => r.pattern.len(),
        StructuredMatrix::Multilevel(r) => r.levels.iter().map(theoretical_count).product(),
    }
}

/// Program count for `m` checked against the closed-form count.
pub fn count_report(m: &StructuredMatrix) -> CountReport {
    prune_check(&program_for(m), theoretical_count(m))
}

fn check_input(m: &StructuredMatrix, v: &[C64]) -> Result<()> {
    m.validate()?;
    if v.len() != m.order() {
        return Err(Error::Dimension {
            expected: m.order(),
            got: v.len(),
        });
    }
    Ok(())
}

/// Program route: `program_for(m)` applied to `m.params()` and `v`.
pub fn program_matvec(m: &StructuredMatrix, v: &[C64]) -> Result<(ComplexVec, usize)> {
    check_input(m, v)?;
    program_for(m).apply(&m.params(), v)
}

/// Direct route with reference transforms.
pub fn direct_matvec(m: &StructuredMatrix, v: &[C64]) -> Result<(ComplexVec, usize)> {
    direct_matvec_with(m, v, TransformMode::Reference)
}

/// Direct route with a selectable transform evaluation.
pub fn direct_matvec_with(
    m: &StructuredMatrix,
    v: &[C64],
    mode: TransformMode,
) -> Result<(ComplexVec, usize)> {
    check_input(m, v)?;
    Ok(match m {
        StructuredMatrix::Circulant(r) => circulant_core(&r.param, v, &[], mode),
        StructuredMatrix::Toeplitz(r) => toeplitz_core(&r.param, v, &[], mode),
        StructuredMatrix::Hankel(r) => hankel_core(&r.param, v, mode),
        StructuredMatrix::Symmetric(r) => symmetric_core(r, v, mode),
        StructuredMatrix::ToeplitzPlusHankel(r) => tph_core(r, v, mode),
        StructuredMatrix::Sparse(r) => direct_sparse_matvec(r, v)?,
        StructuredMatrix::Multilevel(r) => multilevel_matvec_direct_with(r, v, mode)?,
    })
}
