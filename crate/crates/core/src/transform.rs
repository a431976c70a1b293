//! Fourier matrix, forward/inverse DFT and the exchange (reversal) map.
//!
//! Sign convention: `W[r][c] = ω^(r·c)` with `ω = e^{+2πi/n}`, so
//! [`dft`] computes `W x` and [`idft`] computes `W⁻¹ x = conj(W) x / n`.
//! Note this is the opposite sign of the usual "forward FFT".

use std::cell::RefCell;
use std::f64::consts::PI;

use rustfft::FftPlanner;

use crate::linalg::{ComplexMat, ComplexVec, C64, ZERO};

/// How transforms are evaluated.
///
/// `Reference` is the direct `O(n²)` matrix application and is what every
/// kernel uses by default. `Fast` switches to a radix-2 FFT for power-of-two
/// lengths and is meant for benchmarking only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TransformMode {
    #[default]
    Reference,
    Fast,
}

/// `e^{2πik/n}`, with `k` reduced mod `n` first so large exponents stay exact.
pub fn root_of_unity(k: usize, n: usize) -> C64 {
    let k = k % n;
    C64::from_polar(1.0, 2.0 * PI * k as f64 / n as f64)
}

fn roots(n: usize) -> Vec<C64> {
    (0..n).map(|k| root_of_unity(k, n)).collect()
}

/// The `n × n` Fourier matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierMatrix {
    pub n: usize,
    pub entries: ComplexMat,
}

pub fn fourier_matrix(n: usize) -> FourierMatrix {
    assert!(n >= 1, "fourier matrix order must be positive");
    let w = roots(n);
    FourierMatrix {
        n,
        entries: ComplexMat::from_fn(n, n, |r, c| w[(r * c) % n]),
    }
}

impl FourierMatrix {
    /// `W⁻¹ = conj(W) / n`.
    pub fn inverse(&self) -> ComplexMat {
        self.entries.conj().scale(C64::new(1.0 / self.n as f64, 0.0))
    }
}

fn apply_roots(x: &[C64], conjugate: bool) -> ComplexVec {
    let n = x.len();
    let w = roots(n);
    (0..n)
        .map(|r| {
            let mut acc = ZERO;
            for (c, xc) in x.iter().enumerate() {
                let z = w[(r * c) % n];
                acc += if conjugate { z.conj() } else { z } * xc;
            }
            acc
        })
        .collect()
}

/// `W x`.
pub fn dft(x: &[C64]) -> ComplexVec {
    assert!(!x.is_empty(), "dft of empty vector");
    apply_roots(x, false)
}

/// `W⁻¹ x`.
pub fn idft(x: &[C64]) -> ComplexVec {
    assert!(!x.is_empty(), "idft of empty vector");
    let scale = 1.0 / x.len() as f64;
    apply_roots(x, true).into_iter().map(|z| z * scale).collect()
}

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// Unnormalized `Σ_c e^{±2πi rc/n} x_c` via FFT; `positive` selects `+`.
fn fft_unnormalized(x: &[C64], positive: bool) -> ComplexVec {
    let mut buf = x.to_vec();
    PLANNER.with(|p| {
        let mut p = p.borrow_mut();
        // rustfft's forward transform uses e^{-2πi rc/n}
        let plan = if positive {
            p.plan_fft_inverse(x.len())
        } else {
            p.plan_fft_forward(x.len())
        };
        plan.process(&mut buf);
    });
    buf
}

pub fn dft_with(x: &[C64], mode: TransformMode) -> ComplexVec {
    match mode {
        TransformMode::Fast if x.len().is_power_of_two() => fft_unnormalized(x, true),
        _ => dft(x),
    }
}

pub fn idft_with(x: &[C64], mode: TransformMode) -> ComplexVec {
    match mode {
        TransformMode::Fast if x.len().is_power_of_two() => {
            let scale = 1.0 / x.len() as f64;
            fft_unnormalized(x, false)
                .into_iter()
                .map(|z| z * scale)
                .collect()
        }
        _ => idft(x),
    }
}

/// `J x`: reverses the vector.
pub fn exchange_apply(x: &[C64]) -> ComplexVec {
    x.iter().rev().copied().collect()
}
