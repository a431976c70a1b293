use crate::linalg::{ComplexMat, ComplexVec, C64, ONE, ZERO};

/// Layout of an order-`n` Toeplitz matrix as the top-left block of an
/// order-`2n` circulant matrix with first row
/// `c = (a_{n-1}, …, a_{2n-2}, b, a_0, …, a_{n-2})` (0-based `a`).
///
/// Any `b` works; `b = -Σ a` makes `Σ c = 0`, so the zero-frequency DFT
/// coefficient of `c` vanishes and that slot costs nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingSpec {
    pub n: usize,
}

impl EmbeddingSpec {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "embedding order must be positive");
        Self { n }
    }

    pub fn target_order(&self) -> usize {
        2 * self.n
    }

    /// The balancing choice `b = -Σ a`.
    pub fn balancing_b(a: &[C64]) -> C64 {
        -a.iter().sum::<C64>()
    }

    pub fn embed_with_b(&self, a: &[C64], b: C64) -> ComplexVec {
        let n = self.n;
        assert_eq!(a.len(), 2 * n - 1, "toeplitz parameter length");
        let mut c = Vec::with_capacity(2 * n);
        c.extend_from_slice(&a[n - 1..]);
        c.push(b);
        c.extend_from_slice(&a[..n - 1]);
        c
    }

    pub fn embed(&self, a: &[C64]) -> ComplexVec {
        self.embed_with_b(a, Self::balancing_b(a))
    }

    /// `2n × (2n-1)` matrix of `a ↦ c` with the balancing `b`.
    pub fn matrix(&self) -> ComplexMat {
        let n = self.n;
        ComplexMat::from_fn(2 * n, 2 * n - 1, |row, col| match row {
            r if r < n => {
                if col == n - 1 + r {
                    ONE
                } else {
                    ZERO
                }
            }
            r if r == n => -ONE,
            r => {
                if col == r - n - 1 {
                    ONE
                } else {
                    ZERO
                }
            }
        })
    }
}
