//! Shared fixtures for the criterion benchmarks.

use structmv::random::{complex_gaussian_vec, random_structure, seeded, DEFAULT_DENSITY};
use structmv::{ComplexVec, StructureKind, StructuredMatrix};

/// A reproducible `(matrix, vector)` pair of the given class and order.
pub fn fixture(kind: StructureKind, n: usize) -> (StructuredMatrix, ComplexVec) {
    let mut rng = seeded(0x5eed ^ n as u64);
    let m = random_structure(&mut rng, kind, n, DEFAULT_DENSITY).expect("valid fixture");
    let v = complex_gaussian_vec(&mut rng, n);
    (m, v)
}
