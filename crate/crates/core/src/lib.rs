//! Structured matrix-vector products with counted bilinear complexity.
//!
//! Every kernel is available as an explicit [`BilinearProgram`] (three
//! linear maps around a pointwise product) and as a direct step-by-step
//! routine. Both report how many genuine multiplications they spend, and
//! both are checked against a dense brute-force [`oracle`].
//!
//! ```
//! use structmv::{program_matvec, direct_matvec, CirculantRep, StructuredMatrix};
//! use structmv::linalg::real_vec;
//!
//! let a: StructuredMatrix = CirculantRep::real(&[1.0, 2.0, 3.0]).unwrap().into();
//! let v = real_vec(&[1.0, 1.0, 1.0]);
//! let (z, mults) = program_matvec(&a, &v).unwrap();
//! assert_eq!(mults, 3);
//! assert!((z[0].re - 6.0).abs() < 1e-12);
//! let (_, direct_mults) = direct_matvec(&a, &v).unwrap();
//! assert_eq!(direct_mults, 3);
//! ```

pub mod bilinear;
pub mod error;
pub mod kernels;
pub mod linalg;
pub mod multilevel;
pub mod oracle;
pub mod random;
pub mod structures;
pub mod transform;

pub use bilinear::{prune_check, BilinearProgram, CountReport};
pub use error::{Error, Result};
pub use kernels::{
    count_report, direct_matvec, direct_matvec_with, program_for, program_matvec,
    theoretical_count,
};
pub use linalg::{ComplexMat, ComplexVec, C64};
pub use multilevel::{
    intermediate_w_values, multilevel_matvec_direct, multilevel_program, param_vector,
};
pub use oracle::{dense, naive_matvec, oracle_matvec, DenseMatrix};
pub use structures::{
    CirculantRep, HankelRep, MultilevelRep, SparseRep, SparsityPattern, StructureKind,
    StructuredMatrix, SymmetricRep, ToeplitzPlusHankelRep, ToeplitzRep,
};
pub use transform::TransformMode;
