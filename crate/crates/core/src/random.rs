//! Deterministic pseudorandom instances.
//!
//! Parameters and vectors are standard complex Gaussian: real and imaginary
//! parts independent `N(0, 1/2)`, so `E|z|² = 1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{ComplexVec, C64};
use crate::structures::{
    CirculantRep, HankelRep, MultilevelRep, SparseRep, SparsityPattern, StructureKind,
    StructuredMatrix, SymmetricRep, ToeplitzPlusHankelRep, ToeplitzRep,
};

/// Default inclusion probability for generated sparse patterns.
pub const DEFAULT_DENSITY: f64 = 0.3;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn complex_gaussian_vec<R: Rng + ?Sized>(rng: &mut R, len: usize) -> ComplexVec {
    (0..len).map(|_| complex_gaussian(rng)).collect()
}

/// Each of the `n²` positions is kept independently with probability `density`.
pub fn random_pattern<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> SparsityPattern {
    let support = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|_| rng.random_bool(density.clamp(0.0, 1.0)))
        .collect();
    SparsityPattern { n, support }
}

/// Random instance of a single-level structure of order `n`.
pub fn random_structure<R: Rng + ?Sized>(
    rng: &mut R,
    kind: StructureKind,
    n: usize,
    density: f64,
) -> Result<StructuredMatrix> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let m = match kind {
        StructureKind::Circulant => CirculantRep::new(complex_gaussian_vec(rng, n))?.into(),
        StructureKind::Toeplitz => ToeplitzRep::new(n, complex_gaussian_vec(rng, 2 * n - 1))?.into(),
        StructureKind::Hankel => HankelRep::new(n, complex_gaussian_vec(rng, 2 * n - 1))?.into(),
        StructureKind::Symmetric => {
            SymmetricRep::new(n, complex_gaussian_vec(rng, n * (n + 1) / 2))?.into()
        }
        StructureKind::ToeplitzPlusHankel => {
            let t = ToeplitzRep::new(n, complex_gaussian_vec(rng, 2 * n - 1))?;
            let h = HankelRep::new(n, complex_gaussian_vec(rng, 2 * n - 1))?;
            ToeplitzPlusHankelRep::new(t, h)?.into()
        }
        StructureKind::Sparse => {
            let pattern = random_pattern(rng, n, density);
            let values = complex_gaussian_vec(rng, pattern.len());
            SparseRep::new(pattern, values)?.into()
        }
        StructureKind::Multilevel => return Err(Error::NestedMultilevel),
    };
    Ok(m)
}

/// Random multilevel instance with the given `(kind, order)` levels.
pub fn random_multilevel<R: Rng + ?Sized>(
    rng: &mut R,
    levels: &[(StructureKind, usize)],
    density: f64,
) -> Result<MultilevelRep> {
    let levels = levels
        .iter()
        .map(|&(k, n)| random_structure(rng, k, n, density))
        .collect::<Result<Vec<_>>>()?;
    MultilevelRep::new(levels)
}
