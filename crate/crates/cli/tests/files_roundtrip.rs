use proptest::prelude::*;
use structmv::random::{complex_gaussian_vec, random_multilevel, random_structure, seeded};
use structmv::StructureKind;
use structmv_cli::files::{MatrixFile, VectorFile};

fn kind() -> impl Strategy<Value = StructureKind> {
    prop::sample::select(StructureKind::SINGLE_LEVEL.to_vec())
}

proptest! {
    #[test]
    fn matrix_files_round_trip(kind in kind(), n in 1usize..9, seed in any::<u64>()) {
        let m = random_structure(&mut seeded(seed), kind, n, 0.4).unwrap();
        let text = MatrixFile::render(&m);
        let back = MatrixFile::parse(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(MatrixFile::render(&back), text);
    }

    #[test]
    fn multilevel_files_round_trip(a in kind(), b in kind(), n1 in 1usize..4, n2 in 1usize..4, seed in any::<u64>()) {
        let m = random_multilevel(&mut seeded(seed), &[(a, n1), (b, n2)], 0.5).unwrap().into();
        let back = MatrixFile::parse(&MatrixFile::render(&m)).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn vector_files_round_trip(n in 0usize..20, seed in any::<u64>()) {
        let v = complex_gaussian_vec(&mut seeded(seed), n);
        prop_assert_eq!(VectorFile::parse(&VectorFile::render(&v)).unwrap(), v);
    }
}
