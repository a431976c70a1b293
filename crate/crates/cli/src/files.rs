//! JSON instance files.
//!
//! Complex numbers are `[re, im]` pairs. Matrix files carry a `"structure"`
//! tag; sparse entries use 0-based `i`, `j`.
//!
//! ```json
//! {"structure": "toeplitz", "n": 2, "param": [[1.0, 0.0], [2.0, 0.0], [3.0, 0.0]]}
//! {"n": 2, "v": [[1.0, 0.0], [0.0, -1.0]]}
//! ```

use serde::{Deserialize, Serialize};
use structmv::{
    CirculantRep, ComplexVec, HankelRep, MultilevelRep, SparseRep, SparsityPattern,
    StructuredMatrix, SymmetricRep, ToeplitzPlusHankelRep, ToeplitzRep, C64,
};

use crate::error::CliError;

/// A complex number on disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Complex(pub f64, pub f64);

impl From<C64> for Complex {
    fn from(z: C64) -> Self {
        Complex(z.re, z.im)
    }
}

impl From<Complex> for C64 {
    fn from(z: Complex) -> Self {
        C64::new(z.0, z.1)
    }
}

fn to_file(xs: &[C64]) -> Vec<Complex> {
    xs.iter().copied().map(Complex::from).collect()
}

fn from_file(xs: &[Complex]) -> ComplexVec {
    xs.iter().copied().map(C64::from).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparseEntry {
    pub i: usize,
    pub j: usize,
    pub v: Complex,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "structure", rename_all = "snake_case")]
pub enum MatrixFile {
    Circulant {
        n: usize,
        param: Vec<Complex>,
    },
    Toeplitz {
        n: usize,
        param: Vec<Complex>,
    },
    Hankel {
        n: usize,
        param: Vec<Complex>,
    },
    Symmetric {
        n: usize,
        param: Vec<Complex>,
    },
    ToeplitzPlusHankel {
        n: usize,
        toeplitz: Vec<Complex>,
        hankel: Vec<Complex>,
    },
    Sparse {
        n: usize,
        entries: Vec<SparseEntry>,
    },
    Multilevel {
        levels: Vec<MatrixFile>,
    },
}

impl MatrixFile {
    pub fn from_structured(m: &StructuredMatrix) -> Self {
        match m {
            StructuredMatrix::Circulant(r) => MatrixFile::Circulant {
                n: r.n,
                param: to_file(&r.param),
            },
            StructuredMatrix::Toeplitz(r) => MatrixFile::Toeplitz {
                n: r.n,
                param: to_file(&r.param),
            },
            StructuredMatrix::Hankel(r) => MatrixFile::Hankel {
                n: r.n,
                param: to_file(&r.param),
            },
            StructuredMatrix::Symmetric(r) => MatrixFile::Symmetric {
                n: r.n,
                param: to_file(&r.param),
            },
            StructuredMatrix::ToeplitzPlusHankel(r) => MatrixFile::ToeplitzPlusHankel {
                n: r.n,
                toeplitz: to_file(&r.toeplitz.param),
                hankel: to_file(&r.hankel.param),
            },
            StructuredMatrix::Sparse(r) => MatrixFile::Sparse {
                n: r.pattern.n,
                entries: r
                    .pattern
                    .support
                    .iter()
                    .zip(&r.values)
                    .map(|(&(i, j), &v)| SparseEntry { i, j, v: v.into() })
                    .collect(),
            },
            StructuredMatrix::Multilevel(r) => MatrixFile::Multilevel {
                levels: r.levels.iter().map(Self::from_structured).collect(),
            },
        }
    }

    /// Converts and validates.
    pub fn to_structured(&self) -> Result<StructuredMatrix, CliError> {
        let m: StructuredMatrix = match self {
            MatrixFile::Circulant { n, param } => CirculantRep {
                n: *n,
                param: from_file(param),
            }
            .into(),
            MatrixFile::Toeplitz { n, param } => ToeplitzRep {
                n: *n,
                param: from_file(param),
            }
            .into(),
            MatrixFile::Hankel { n, param } => HankelRep {
                n: *n,
                param: from_file(param),
            }
            .into(),
            MatrixFile::Symmetric { n, param } => SymmetricRep {
                n: *n,
                param: from_file(param),
            }
            .into(),
            MatrixFile::ToeplitzPlusHankel {
                n,
                toeplitz,
                hankel,
            } => ToeplitzPlusHankelRep {
                n: *n,
                toeplitz: ToeplitzRep {
                    n: *n,
                    param: from_file(toeplitz),
                },
                hankel: HankelRep {
                    n: *n,
                    param: from_file(hankel),
                },
            }
            .into(),
            MatrixFile::Sparse { n, entries } => SparseRep {
                pattern: SparsityPattern {
                    n: *n,
                    support: entries.iter().map(|e| (e.i, e.j)).collect(),
                },
                values: entries.iter().map(|e| e.v.into()).collect(),
            }
            .into(),
            MatrixFile::Multilevel { levels } => MultilevelRep {
                levels: levels
                    .iter()
                    .map(Self::to_structured)
                    .collect::<Result<_, _>>()?,
            }
            .into(),
        };
        m.validate()?;
        Ok(m)
    }

    pub fn parse(text: &str) -> Result<StructuredMatrix, CliError> {
        let file: MatrixFile = serde_json::from_str(text)?;
        file.to_structured()
    }

    /// Canonical text form: pretty JSON with a trailing newline.
    pub fn render(m: &StructuredMatrix) -> String {
        render(&Self::from_structured(m))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VectorFile {
    pub n: usize,
    pub v: Vec<Complex>,
}

impl VectorFile {
    pub fn from_vec(v: &[C64]) -> Self {
        Self {
            n: v.len(),
            v: to_file(v),
        }
    }

    pub fn to_vec(&self) -> Result<ComplexVec, CliError> {
        if self.v.len() != self.n {
            return Err(structmv::Error::Length {
                what: "vector",
                expected: self.n,
                got: self.v.len(),
            }
            .into());
        }
        if self.v.iter().any(|z| !z.0.is_finite() || !z.1.is_finite()) {
            return Err(structmv::Error::NonFinite("vector").into());
        }
        Ok(from_file(&self.v))
    }

    pub fn parse(text: &str) -> Result<ComplexVec, CliError> {
        let file: VectorFile = serde_json::from_str(text)?;
        file.to_vec()
    }

    pub fn render(v: &[C64]) -> String {
        render(&Self::from_vec(v))
    }
}

fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("instance files always serialize");
    s.push('\n');
    s
}
