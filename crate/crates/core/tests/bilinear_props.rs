mod common;

use common::assert_rel;
use proptest::prelude::*;
use structmv::kernels::{build_program, hankel_program, toeplitz_program};
use structmv::linalg::{kron_vec, ComplexMat};
use structmv::random::{complex_gaussian, complex_gaussian_vec, random_structure, seeded};
use structmv::{dense, naive_matvec, program_for, BilinearProgram, DenseMatrix, StructureKind, C64};

fn kind() -> impl Strategy<Value = StructureKind> {
    prop::sample::select(StructureKind::SINGLE_LEVEL.to_vec())
}

fn dense_kind() -> impl Strategy<Value = StructureKind> {
    prop::sample::select(vec![
        StructureKind::Circulant,
        StructureKind::Toeplitz,
        StructureKind::Hankel,
        StructureKind::Symmetric,
        StructureKind::ToeplitzPlusHankel,
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn apply_is_bilinear(k in dense_kind(), n in 1usize..9, seed in any::<u64>()) {
        let p = build_program(k, n).unwrap();
        let mut rng = seeded(seed);
        let a1 = complex_gaussian_vec(&mut rng, p.d_param());
        let a2 = complex_gaussian_vec(&mut rng, p.d_param());
        let v1 = complex_gaussian_vec(&mut rng, n);
        let v2 = complex_gaussian_vec(&mut rng, n);
        let (x, y) = (complex_gaussian(&mut rng), complex_gaussian(&mut rng));
        let mix = |u: &[C64], w: &[C64]| -> Vec<C64> { u.iter().zip(w).map(|(p, q)| x * p + y * q).collect() };

        let lhs = p.apply(&mix(&a1, &a2), &v1).unwrap().0;
        let rhs = mix(&p.apply(&a1, &v1).unwrap().0, &p.apply(&a2, &v1).unwrap().0);
        assert_rel(&lhs, &rhs, 1e-9, "linear in parameters");

        let lhs = p.apply(&a1, &mix(&v1, &v2)).unwrap().0;
        let rhs = mix(&p.apply(&a1, &v1).unwrap().0, &p.apply(&a1, &v2).unwrap().0);
        assert_rel(&lhs, &rhs, 1e-9, "linear in vector");
    }

    #[test]
    fn kron_matches_dense_kronecker(k1 in kind(), k2 in kind(), n1 in 1usize..5, n2 in 1usize..5, seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let m1 = random_structure(&mut rng, k1, n1, 0.5).unwrap();
        let m2 = random_structure(&mut rng, k2, n2, 0.5).unwrap();
        let (p1, p2) = (program_for(&m1), program_for(&m2));
        let p = p1.kron(&p2);
        prop_assert_eq!(p.count(), p1.count() * p2.count());

        let v1 = complex_gaussian_vec(&mut rng, n1);
        let v2 = complex_gaussian_vec(&mut rng, n2);
        let (z, mults) = p.apply(&kron_vec(&m1.params(), &m2.params()), &kron_vec(&v1, &v2)).unwrap();
        prop_assert_eq!(mults, p.count());
        let kron_dense = DenseMatrix {
            order: n1 * n2,
            entries: dense(&m1).entries.kron(&dense(&m2).entries),
        };
        let want = naive_matvec(&kron_dense, &kron_vec(&v1, &v2)).unwrap();
        assert_rel(&z, &want, 1e-9, "kron apply");
    }

    #[test]
    fn inactive_slots_never_contribute(k in dense_kind(), n in 1usize..9, seed in any::<u64>()) {
        let p = build_program(k, n).unwrap();
        let mut enc_vec = p.enc_vec().clone();
        for t in (0..p.slots()).filter(|&t| !p.active()[t]) {
            for x in enc_vec.row_mut(t) {
                *x = C64::new(0.0, 0.0);
            }
        }
        let q = BilinearProgram::new(p.enc_param().clone(), enc_vec, p.dec().clone(), p.active().to_vec()).unwrap();
        let mut rng = seeded(seed);
        let a = complex_gaussian_vec(&mut rng, p.d_param());
        let v = complex_gaussian_vec(&mut rng, n);
        prop_assert_eq!(p.apply(&a, &v).unwrap(), q.apply(&a, &v).unwrap());
    }
}

#[test]
fn hankel_is_toeplitz_conjugated_by_reversals() {
    let mut rng = seeded(77);
    for n in 1..=8 {
        let built = toeplitz_program(n)
            .conjugate_by(
                &ComplexMat::exchange(2 * n - 1),
                &ComplexMat::identity(n),
                &ComplexMat::exchange(n),
            )
            .unwrap();
        assert_eq!(built.count(), toeplitz_program(n).count());
        assert_eq!(built, hankel_program(n));
        let m = random_structure(&mut rng, StructureKind::Hankel, n, 0.0).unwrap();
        let v = complex_gaussian_vec(&mut rng, n);
        let want = naive_matvec(&dense(&m), &v).unwrap();
        assert_rel(&built.apply(&m.params(), &v).unwrap().0, &want, 1e-9, "hankel via conjugation");
    }
}

#[test]
fn kron_example_counts() {
    use structmv::kernels::circulant_program;
    assert_eq!(circulant_program(2).kron(&circulant_program(2)).count(), 4);
    assert_eq!(toeplitz_program(2).kron(&hankel_program(2)).count(), 9);
}
