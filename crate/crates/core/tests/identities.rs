//! Algebraic identities behind the kernel constructions.

mod common;

use common::assert_rel;
use structmv::kernels::{
    circulant_matvec_unnormalized, direct_circulant_matvec, direct_hankel_matvec,
    direct_toeplitz_matvec, hankel_program, peel_hankel_shells, symmetric_dense, toeplitz_program,
    tph_shift, EmbeddingSpec,
};
use structmv::linalg::{norm2, ComplexMat, ComplexVec, ZERO};
use structmv::random::{complex_gaussian_vec, seeded};
use structmv::transform::dft;
use structmv::{
    dense, naive_matvec, oracle_matvec, CirculantRep, HankelRep, StructuredMatrix,
    ToeplitzPlusHankelRep, ToeplitzRep, C64,
};

#[test]
fn toeplitz_embedding_ignores_b() {
    let mut rng = seeded(101);
    for n in 1..=16 {
        let a = complex_gaussian_vec(&mut rng, 2 * n - 1);
        let v = complex_gaussian_vec(&mut rng, n);
        let spec = EmbeddingSpec::new(n);
        let mut padded = v.clone();
        padded.resize(2 * n, ZERO);
        let run = |b: C64| {
            let c = CirculantRep::new(spec.embed_with_b(&a, b)).unwrap();
            let (z, _) = direct_circulant_matvec(&c, &padded).unwrap();
            z[..n].to_vec()
        };
        let balanced = run(EmbeddingSpec::balancing_b(&a));
        assert_rel(&balanced, &run(ZERO), 1e-9, "b = 0 vs b = -sum");
        let t: StructuredMatrix = ToeplitzRep::new(n, a).unwrap().into();
        assert_rel(&balanced, &oracle_matvec(&t, &v).unwrap(), 1e-9, "embedding vs oracle");
    }
}

#[test]
fn balanced_embedding_has_zero_mean() {
    let mut rng = seeded(5);
    for n in 1..=16 {
        let a = complex_gaussian_vec(&mut rng, 2 * n - 1);
        let c = EmbeddingSpec::new(n).embed(&a);
        let total: f64 = c.iter().map(|z| z.norm()).sum();
        assert!(c.iter().sum::<C64>().norm() <= 1e-12 * total);
    }
}

#[test]
fn hankel_is_reversed_toeplitz() {
    let mut rng = seeded(102);
    for n in 1..=10 {
        let h = complex_gaussian_vec(&mut rng, 2 * n - 1);
        let v = complex_gaussian_vec(&mut rng, n);
        let rev: ComplexVec = h.iter().rev().copied().collect();

        // the direct route is built as J · T(rev h) · v, so equality is exact
        let (zt, _) = direct_toeplitz_matvec(&ToeplitzRep::new(n, rev.clone()).unwrap(), &v).unwrap();
        let via_toeplitz: ComplexVec = zt.into_iter().rev().collect();
        let (zh, _) = direct_hankel_matvec(&HankelRep::new(n, h.clone()).unwrap(), &v).unwrap();
        assert_eq!(zh, via_toeplitz, "n={n}");

        // the program route folds the reversals into its matrices
        let (zt, _) = toeplitz_program(n).apply(&rev, &v).unwrap();
        let via_toeplitz: ComplexVec = zt.into_iter().rev().collect();
        let (zh, _) = hankel_program(n).apply(&h, &v).unwrap();
        assert_rel(&zh, &via_toeplitz, 1e-13, "program route");
    }
}

#[test]
fn symmetric_shells_rebuild_the_matrix() {
    let mut rng = seeded(103);
    for n in 1..=16 {
        let params = complex_gaussian_vec(&mut rng, n * (n + 1) / 2);
        let s = symmetric_dense(n, &params);
        let shells = peel_hankel_shells(n, &params);
        let mut sum = ComplexMat::zeros(n, n);
        let mut residual = s.clone();
        for (k, h) in shells.iter().enumerate() {
            let m = h.n;
            for i in 0..m {
                for j in 0..m {
                    sum[(k + i, k + j)] += h.entry(i, j);
                }
            }
            // residual minus shell has a zero border
            for i in 0..m {
                for (r, c) in [(0, i), (m - 1, i), (i, 0), (i, m - 1)] {
                    let x = residual[(r, c)] - h.entry(r, c);
                    assert!(x.norm() <= 1e-12 * s.max_abs(), "n={n} k={k}");
                }
            }
            residual = ComplexMat::from_fn(m.saturating_sub(2), m.saturating_sub(2), |i, j| {
                residual[(i + 1, j + 1)] - h.entry(i + 1, j + 1)
            });
        }
        let tol = 1e-12 * s.max_abs();
        for (x, y) in sum.as_slice().iter().zip(s.as_slice()) {
            assert!((x - y).norm() <= tol, "n={n}");
        }
    }
}

#[test]
fn tph_gauge_shift_is_exact_and_kills_two_frequencies() {
    let mut rng = seeded(104);
    for n in 1..=16 {
        let t = complex_gaussian_vec(&mut rng, 2 * n - 1);
        let h = complex_gaussian_vec(&mut rng, 2 * n - 1);
        let a = tph_shift(&t);
        let t2: ComplexVec = t.iter().map(|x| x - a).collect();
        let h2: ComplexVec = h.iter().map(|x| x + a).collect();
        let x = ToeplitzPlusHankelRep::new(
            ToeplitzRep::new(n, t.clone()).unwrap(),
            HankelRep::new(n, h.clone()).unwrap(),
        )
        .unwrap();
        let y = ToeplitzPlusHankelRep::new(
            ToeplitzRep::new(n, t2.clone()).unwrap(),
            HankelRep::new(n, h2).unwrap(),
        )
        .unwrap();
        let dx = dense(&x.into()).entries;
        let dy = dense(&y.into()).entries;
        for (p, q) in dx.as_slice().iter().zip(dy.as_slice()) {
            assert!((p - q).norm() <= 1e-14 * dx.max_abs());
        }
        let coeffs = dft(&EmbeddingSpec::new(n).embed(&t2));
        let scale = norm2(&t) + norm2(&h);
        assert!(coeffs[0].norm() <= 1e-9 * scale);
        assert!(coeffs[1].norm() <= 1e-9 * scale);
    }
}

#[test]
fn unscaled_circulant_decode_is_n_times_too_large() {
    let mut rng = seeded(105);
    for n in 1..=16 {
        let a = CirculantRep::new(complex_gaussian_vec(&mut rng, n)).unwrap();
        let v = complex_gaussian_vec(&mut rng, n);
        let want = naive_matvec(&dense(&a.clone().into()), &v).unwrap();
        let (z, _) = direct_circulant_matvec(&a, &v).unwrap();
        assert_rel(&z, &want, 1e-9, "corrected");
        let scaled: ComplexVec = want.iter().map(|x| x * n as f64).collect();
        assert_rel(&circulant_matvec_unnormalized(&a, &v).unwrap(), &scaled, 1e-9, "literal");
    }
}
