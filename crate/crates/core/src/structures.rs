//! Parameter representations of the supported structured matrix classes.
//!
//! All indices are 0-based. The 1-based entry formulas map as follows
//! (`i`, `j` 0-based row/column, `n` the order):
//!
//! | structure | parameter length | entry `(i, j)`                       |
//! |-----------|------------------|--------------------------------------|
//! | circulant | `n`              | `param[(j - i) mod n]`               |
//! | Toeplitz  | `2n - 1`         | `param[j - i + n - 1]`               |
//! | Hankel    | `2n - 1`         | `param[2n - 2 - i - j]`              |
//! | symmetric | `n(n+1)/2`       | packed upper triangle, row-major     |
//!
//! A Toeplitz-plus-Hankel matrix stores both raw parts (`4n - 2` values) but
//! its effective parameter vector has `4n - 3` entries: the decomposition is
//! only defined up to `H + aE`, `T - aE`, which is fixed by shifting so that
//! the first Hankel parameter is zero.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{kron_vec, real_vec, C64, ComplexVec};

/// Tag for each structure class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    Circulant,
    Toeplitz,
    Hankel,
    Symmetric,
    ToeplitzPlusHankel,
    Sparse,
    Multilevel,
}

impl StructureKind {
    /// Every single-level class.
    pub const SINGLE_LEVEL: [StructureKind; 6] = [
        StructureKind::Circulant,
        StructureKind::Toeplitz,
        StructureKind::Hankel,
        StructureKind::Symmetric,
        StructureKind::ToeplitzPlusHankel,
        StructureKind::Sparse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureKind::Circulant => "circulant",
            StructureKind::Toeplitz => "toeplitz",
            StructureKind::Hankel => "hankel",
            StructureKind::Symmetric => "symmetric",
            StructureKind::ToeplitzPlusHankel => "toeplitz_plus_hankel",
            StructureKind::Sparse => "sparse",
            StructureKind::Multilevel => "multilevel",
        }
    }

    /// Parses a structure name; `tph` is accepted as shorthand.
    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "circulant" => StructureKind::Circulant,
            "toeplitz" => StructureKind::Toeplitz,
            "hankel" => StructureKind::Hankel,
            "symmetric" => StructureKind::Symmetric,
            "toeplitz_plus_hankel" | "tph" => StructureKind::ToeplitzPlusHankel,
            "sparse" => StructureKind::Sparse,
            "multilevel" => StructureKind::Multilevel,
            _ => return None,
        })
    }

    /// Length of the effective parameter vector for a dense-structured class
    /// of order `n`. `None` for sparse and multilevel, whose dimension
    /// depends on more than the order.
    pub fn param_dim_for(self, n: usize) -> Option<usize> {
        match self {
            StructureKind::Circulant => Some(n),
            StructureKind::Toeplitz | StructureKind::Hankel => Some(2 * n - 1),
            StructureKind::Symmetric => Some(n * (n + 1) / 2),
            StructureKind::ToeplitzPlusHankel => Some(4 * n - 3),
            StructureKind::Sparse | StructureKind::Multilevel => None,
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroOrder)
    } else {
        Ok(())
    }
}

fn check_len(what: &'static str, expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::Length {
            what,
            expected,
            got,
        })
    }
}

fn check_finite(what: &'static str, xs: &[C64]) -> Result<()> {
    if xs.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Circulant matrix given by its first row.
#[derive(Debug, Clone, PartialEq)]
pub struct CirculantRep {
    pub n: usize,
    pub param: ComplexVec,
}

impl CirculantRep {
    pub fn new(param: ComplexVec) -> Result<Self> {
        let rep = Self {
            n: param.len(),
            param,
        };
        rep.validate()?;
        Ok(rep)
    }

    pub fn real(param: &[f64]) -> Result<Self> {
        Self::new(real_vec(param))
    }

    pub fn validate(&self) -> Result<()> {
        check_order(self.n)?;
        check_len("circulant param", self.n, self.param.len())?;
        check_finite("circulant param", &self.param)
    }
}

/// Toeplitz matrix, `entry(i, j) = param[j - i + n - 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzRep {
    pub n: usize,
    pub param: ComplexVec,
}

impl ToeplitzRep {
    pub fn new(n: usize, param: ComplexVec) -> Result<Self> {
        let rep = Self { n, param };
        rep.validate()?;
        Ok(rep)
    }

    pub fn real(n: usize, param: &[f64]) -> Result<Self> {
        Self::new(n, real_vec(param))
    }

    pub fn validate(&self) -> Result<()> {
        check_order(self.n)?;
        check_len("toeplitz param", 2 * self.n - 1, self.param.len())?;
        check_finite("toeplitz param", &self.param)
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.param[j + self.n - 1 - i]
    }
}

/// Hankel matrix, `entry(i, j) = param[2n - 2 - i - j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelRep {
    pub n: usize,
    pub param: ComplexVec,
}

impl HankelRep {
    pub fn new(n: usize, param: ComplexVec) -> Result<Self> {
        let rep = Self { n, param };
        rep.validate()?;
        Ok(rep)
    }

    pub fn real(n: usize, param: &[f64]) -> Result<Self> {
        Self::new(n, real_vec(param))
    }

    pub fn validate(&self) -> Result<()> {
        check_order(self.n)?;
        check_len("hankel param", 2 * self.n - 1, self.param.len())?;
        check_finite("hankel param", &self.param)
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.param[2 * self.n - 2 - i - j]
    }
}

/// Position of `(i, j)`, `i <= j`, in the row-major packed upper triangle.
pub fn packed_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    // rows 0..i hold n + (n - 1) + ... + (n - i + 1) entries
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

/// Symmetric matrix stored as its packed upper triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricRep {
    pub n: usize,
    pub param: ComplexVec,
}

impl SymmetricRep {
    pub fn new(n: usize, param: ComplexVec) -> Result<Self> {
        let rep = Self { n, param };
        rep.validate()?;
        Ok(rep)
    }

    pub fn real(n: usize, param: &[f64]) -> Result<Self> {
        Self::new(n, real_vec(param))
    }

    pub fn validate(&self) -> Result<()> {
        check_order(self.n)?;
        check_len("symmetric param", self.n * (self.n + 1) / 2, self.param.len())?;
        check_finite("symmetric param", &self.param)
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        self.param[packed_index(self.n, lo, hi)]
    }
}

/// Sum of a Toeplitz and a Hankel matrix of the same order.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzPlusHankelRep {
    pub n: usize,
    pub toeplitz: ToeplitzRep,
    pub hankel: HankelRep,
}

impl ToeplitzPlusHankelRep {
    pub fn new(toeplitz: ToeplitzRep, hankel: HankelRep) -> Result<Self> {
        let rep = Self {
            n: toeplitz.n,
            toeplitz,
            hankel,
        };
        rep.validate()?;
        Ok(rep)
    }

    pub fn validate(&self) -> Result<()> {
        self.toeplitz.validate()?;
        self.hankel.validate()?;
        if self.toeplitz.n != self.hankel.n || self.n != self.toeplitz.n {
            return Err(Error::OrderMismatch {
                toeplitz: self.toeplitz.n,
                hankel: self.hankel.n,
            });
        }
        Ok(())
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.toeplitz.entry(i, j) + self.hankel.entry(i, j)
    }

    /// Effective `4n - 3` parameters: Toeplitz part shifted by `h_0`,
    /// followed by Hankel parameters `1..` shifted by `-h_0`.
    pub fn gauge_fixed(&self) -> ComplexVec {
        gauge_fix(&self.toeplitz.param, &self.hankel.param)
    }

    /// Inverse of [`gauge_fixed`](Self::gauge_fixed): the representative
    /// whose first Hankel parameter is zero.
    pub fn from_gauge_fixed(n: usize, effective: &[C64]) -> Result<Self> {
        check_order(n)?;
        check_len("toeplitz_plus_hankel effective param", 4 * n - 3, effective.len())?;
        let (t, h) = gauge_unfix(n, effective);
        Self::new(ToeplitzRep::new(n, t)?, HankelRep::new(n, h)?)
    }
}

/// `(t, h) -> (t + h_0, h_1 - h_0, ..., h_{2n-2} - h_0)`.
pub fn gauge_fix(t: &[C64], h: &[C64]) -> ComplexVec {
    let shift = h[0];
    t.iter()
        .map(|x| x + shift)
        .chain(h[1..].iter().map(|x| x - shift))
        .collect()
}

/// Splits an effective vector back into `(t, h)` with `h_0 = 0`.
pub fn gauge_unfix(n: usize, effective: &[C64]) -> (ComplexVec, ComplexVec) {
    let m = 2 * n - 1;
    let t = effective[..m].to_vec();
    let mut h = Vec::with_capacity(m);
    h.push(C64::new(0.0, 0.0));
    h.extend_from_slice(&effective[m..]);
    (t, h)
}

/// Support set of a sparse matrix: entries that may be nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsityPattern {
    pub n: usize,
    pub support: Vec<(usize, usize)>,
}

impl SparsityPattern {
    pub fn new(n: usize, support: Vec<(usize, usize)>) -> Result<Self> {
        let p = Self { n, support };
        p.validate()?;
        Ok(p)
    }

    pub fn diagonal(n: usize) -> Self {
        Self {
            n,
            support: (0..n).map(|i| (i, i)).collect(),
        }
    }

    pub fn upper_triangular(n: usize) -> Self {
        Self {
            n,
            support: (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        check_order(self.n)?;
        let mut seen = HashSet::with_capacity(self.support.len());
        for &(row, col) in &self.support {
            if row >= self.n || col >= self.n {
                return Err(Error::IndexOutOfRange { row, col, n: self.n });
            }
            if !seen.insert((row, col)) {
                return Err(Error::Duplicate { row, col });
            }
        }
        Ok(())
    }
}

/// Sparse matrix: one value per support entry, in support order.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseRep {
    pub pattern: SparsityPattern,
    pub values: ComplexVec,
}

impl SparseRep {
    pub fn new(pattern: SparsityPattern, values: ComplexVec) -> Result<Self> {
        let rep = Self { pattern, values };
        rep.validate()?;
        Ok(rep)
    }

    pub fn validate(&self) -> Result<()> {
        self.pattern.validate()?;
        check_len("sparse values", self.pattern.len(), self.values.len())?;
        check_finite("sparse values", &self.values)
    }
}

/// Kronecker product `A_1 ⊛ A_2 ⊛ ... ⊛ A_p` of single-level structures.
#[derive(Debug, Clone, PartialEq)]
pub struct MultilevelRep {
    pub levels: Vec<StructuredMatrix>,
}

impl MultilevelRep {
    pub fn new(levels: Vec<StructuredMatrix>) -> Result<Self> {
        let rep = Self { levels };
        rep.validate()?;
        Ok(rep)
    }

    pub fn validate(&self) -> Result<()> {
        if self.levels.is_empty() {
            return Err(Error::NoLevels);
        }
        for level in &self.levels {
            if matches!(level, StructuredMatrix::Multilevel(_)) {
                return Err(Error::NestedMultilevel);
            }
            level.validate()?;
        }
        Ok(())
    }

    /// Flattened outer product of the per-level effective parameters.
    pub fn param_vector(&self) -> ComplexVec {
        self.levels
            .iter()
            .map(StructuredMatrix::params)
            .reduce(|acc, p| kron_vec(&acc, &p))
            .unwrap_or_default()
    }
}

/// One structured matrix of any supported class.
#[derive(Debug, Clone, PartialEq)]
pub enum StructuredMatrix {
    Circulant(CirculantRep),
    Toeplitz(ToeplitzRep),
    Hankel(HankelRep),
    Symmetric(SymmetricRep),
    ToeplitzPlusHankel(ToeplitzPlusHankelRep),
    Sparse(SparseRep),
    Multilevel(MultilevelRep),
}

impl StructuredMatrix {
    pub fn kind(&self) -> StructureKind {
        match self {
            StructuredMatrix::Circulant(_) => StructureKind::Circulant,
            StructuredMatrix::Toeplitz(_) => StructureKind::Toeplitz,
            StructuredMatrix::Hankel(_) => StructureKind::Hankel,
            StructuredMatrix::Symmetric(_) => StructureKind::Symmetric,
            StructuredMatrix::ToeplitzPlusHankel(_) => StructureKind::ToeplitzPlusHankel,
            StructuredMatrix::Sparse(_) => StructureKind::Sparse,
            StructuredMatrix::Multilevel(_) => StructureKind::Multilevel,
        }
    }

    /// Order of the represented square matrix.
    pub fn order(&self) -> usize {
        match self {
            StructuredMatrix::Circulant(r) => r.n,
            StructuredMatrix::Toeplitz(r) => r.n,
            StructuredMatrix::Hankel(r) => r.n,
            StructuredMatrix::Symmetric(r) => r.n,
            StructuredMatrix::ToeplitzPlusHankel(r) => r.n,
            StructuredMatrix::Sparse(r) => r.pattern.n,
            StructuredMatrix::Multilevel(r) => r.levels.iter().map(Self::order).product(),
        }
    }

    /// Dimension of the structure's parameter space.
    pub fn param_dim(&self) -> usize {
        match self {
            StructuredMatrix::Sparse(r) => r.pattern.len(),
            StructuredMatrix::Multilevel(r) => r.levels.iter().map(Self::param_dim).product(),
            other => other
                .kind()
                .param_dim_for(other.order())
                .expect("dense-structured kinds have a closed-form dimension"),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            StructuredMatrix::Circulant(r) => r.validate(),
            StructuredMatrix::Toeplitz(r) => r.validate(),
            StructuredMatrix::Hankel(r) => r.validate(),
            StructuredMatrix::Symmetric(r) => r.validate(),
            StructuredMatrix::ToeplitzPlusHankel(r) => r.validate(),
            StructuredMatrix::Sparse(r) => r.validate(),
            StructuredMatrix::Multilevel(r) => r.validate(),
        }
    }

    /// Effective parameter vector, of length [`param_dim`](Self::param_dim).
    pub fn params(&self) -> ComplexVec {
        match self {
            StructuredMatrix::Circulant(r) => r.param.clone(),
            StructuredMatrix::Toeplitz(r) => r.param.clone(),
            StructuredMatrix::Hankel(r) => r.param.clone(),
            StructuredMatrix::Symmetric(r) => r.param.clone(),
            StructuredMatrix::ToeplitzPlusHankel(r) => r.gauge_fixed(),
            StructuredMatrix::Sparse(r) => r.values.clone(),
            StructuredMatrix::Multilevel(r) => r.param_vector(),
        }
    }
}

macro_rules! impl_from_rep {
    ($($rep:ident => $variant:ident),* $(,)?) => {
        $(impl From<$rep> for StructuredMatrix {
            fn from(r: $rep) -> Self {
                StructuredMatrix::$variant(r)
            }
        })*
    };
}

impl_from_rep!(
    CirculantRep => Circulant,
    ToeplitzRep => Toeplitz,
    HankelRep => Hankel,
    SymmetricRep => Symmetric,
    ToeplitzPlusHankelRep => ToeplitzPlusHankel,
    SparseRep => Sparse,
    MultilevelRep => Multilevel,
);
