//! Implementations of the `gen`, `apply`, `verify`, `count` and `bench` verbs.

use std::fmt;
use std::io::Write;
use std::time::Instant;

use clap::ValueEnum;
use structmv::kernels::build_program;
use structmv::linalg::rel_err;
use structmv::oracle::naive_mult_count;
use structmv::random::{complex_gaussian_vec, random_multilevel, random_structure, seeded};
use structmv::transform::TransformMode;
use structmv::{
    count_report, dense, direct_matvec, direct_matvec_with, naive_matvec, oracle_matvec,
    program_for, program_matvec, theoretical_count, BilinearProgram, ComplexVec, StructureKind,
    StructuredMatrix,
};

use crate::error::CliError;
use crate::files::{MatrixFile, VectorFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Program,
    Direct,
}

pub fn parse_kind(name: &str) -> Result<StructureKind, CliError> {
    StructureKind::from_name(name)
        .ok_or_else(|| CliError::Usage(format!("unknown structure '{name}'")))
}

/// Parses `kind:n[,kind:n...]`, e.g. `circulant:2,toeplitz:3`.
pub fn parse_levels(spec: &str) -> Result<Vec<(StructureKind, usize)>, CliError> {
    spec.split(',')
        .map(|part| {
            let (name, n) = part
                .trim()
                .split_once(':')
                .ok_or_else(|| CliError::Usage(format!("level '{part}' is not kind:n")))?;
            let kind = parse_kind(name.trim())?;
            if kind == StructureKind::Multilevel {
                return Err(CliError::Usage("levels cannot be multilevel".into()));
            }
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad order in level '{part}'")))?;
            if n == 0 {
                return Err(CliError::Usage(format!("zero order in level '{part}'")));
            }
            Ok((kind, n))
        })
        .collect()
}

/// What to generate.
#[derive(Debug, Clone)]
pub struct GenRequest {
    /// A structure name, or `vector` for a vector file.
    pub structure: String,
    pub n: Option<usize>,
    pub levels: Option<String>,
    pub density: f64,
    pub seed: u64,
}

/// Generates a matrix (or vector) file; same request, same bytes.
pub fn gen(req: &GenRequest) -> Result<String, CliError> {
    let mut rng = seeded(req.seed);
    if req.structure == "vector" {
        let n = require_n(req.n)?;
        return Ok(VectorFile::render(&complex_gaussian_vec(&mut rng, n)));
    }
    let m = random_instance(&req.structure, req.n, req.levels.as_deref(), req.density, &mut rng)?;
    Ok(MatrixFile::render(&m))
}

fn require_n(n: Option<usize>) -> Result<usize, CliError> {
    match n {
        Some(0) => Err(CliError::Usage("--n must be positive".into())),
        Some(n) => Ok(n),
        None => Err(CliError::Usage("--n is required".into())),
    }
}

fn random_instance(
    structure: &str,
    n: Option<usize>,
    levels: Option<&str>,
    density: f64,
    rng: &mut impl rand::Rng,
) -> Result<StructuredMatrix, CliError> {
    let kind = parse_kind(structure)?;
    if !(0.0..=1.0).contains(&density) {
        return Err(CliError::Usage("--density must lie in [0, 1]".into()));
    }
    if kind == StructureKind::Multilevel {
        let levels = levels.ok_or_else(|| CliError::Usage("multilevel needs --levels".into()))?;
        return Ok(random_multilevel(rng, &parse_levels(levels)?, density)?.into());
    }
    Ok(random_structure(rng, kind, require_n(n)?, density)?)
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn write_text(path: &str, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

/// Result vector and the number of genuine multiplications spent.
pub fn apply(
    m: &StructuredMatrix,
    v: &[structmv::C64],
    method: Method,
) -> Result<(ComplexVec, usize), CliError> {
    Ok(match method {
        Method::Program => program_matvec(m, v)?,
        Method::Direct => direct_matvec(m, v)?,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub structure: StructureKind,
    pub order: usize,
    pub tol: f64,
    pub program_error: f64,
    pub direct_error: f64,
    /// Relative difference between the two routes.
    pub route_difference: f64,
    pub theoretical: usize,
    pub program_count: usize,
    pub direct_count: usize,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.program_error <= self.tol
            && self.direct_error <= self.tol
            && self.program_count == self.theoretical
            && self.direct_count == self.theoretical
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "structure        {}", self.structure)?;
        writeln!(f, "order            {}", self.order)?;
        writeln!(f, "tolerance        {:e}", self.tol)?;
        writeln!(f, "program error    {:e}", self.program_error)?;
        writeln!(f, "direct error     {:e}", self.direct_error)?;
        writeln!(f, "route difference {:e}", self.route_difference)?;
        writeln!(
            f,
            "multiplications  theoretical {} program {} direct {}",
            self.theoretical, self.program_count, self.direct_count
        )?;
        write!(f, "result           {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Compares both routes against the dense oracle.
pub fn verify(m: &StructuredMatrix, v: &[structmv::C64], tol: f64) -> Result<VerifyReport, CliError> {
    let want = oracle_matvec(m, v)?;
    let (zp, kp) = program_matvec(m, v)?;
    let (zd, kd) = direct_matvec(m, v)?;
    Ok(VerifyReport {
        structure: m.kind(),
        order: m.order(),
        tol,
        program_error: rel_err(&zp, &want),
        direct_error: rel_err(&zd, &want),
        route_difference: rel_err(&zd, &zp),
        theoretical: theoretical_count(m),
        program_count: kp,
        direct_count: kd,
    })
}

/// Random vector matching `m`'s order.
pub fn random_vector(m: &StructuredMatrix, seed: u64) -> ComplexVec {
    complex_gaussian_vec(&mut seeded(seed), m.order())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub structure: String,
    pub n: usize,
    pub theoretical: usize,
    pub measured: usize,
    pub matches: bool,
}

#[derive(Debug, Clone)]
pub struct CountRequest {
    pub structure: String,
    pub n_min: usize,
    pub n_max: Option<usize>,
    pub levels: Option<String>,
    pub density: f64,
    pub seed: u64,
}

fn count_row(m: &StructuredMatrix, label: String, seed: u64) -> Result<CountRow, CliError> {
    let report = count_report(m);
    let (_, measured) = program_matvec(m, &random_vector(m, seed))?;
    Ok(CountRow {
        structure: label,
        n: m.order(),
        theoretical: report.theoretical,
        measured,
        matches: report.matches() && measured == report.theoretical,
    })
}

/// Theoretical versus measured counts over a range of orders.
pub fn count(req: &CountRequest) -> Result<Vec<CountRow>, CliError> {
    let kind = parse_kind(&req.structure)?;
    let mut rng = seeded(req.seed);
    if kind == StructureKind::Multilevel {
        let spec = req
            .levels
            .as_deref()
            .ok_or_else(|| CliError::Usage("multilevel needs --levels".into()))?;
        let m: StructuredMatrix = random_multilevel(&mut rng, &parse_levels(spec)?, req.density)?.into();
        return Ok(vec![count_row(&m, format!("multilevel[{spec}]"), req.seed)?]);
    }
    let hi = req.n_max.unwrap_or(req.n_min);
    if req.n_min == 0 || hi < req.n_min {
        return Err(CliError::Usage(format!("empty order range {}..={hi}", req.n_min)));
    }
    (req.n_min..=hi)
        .map(|n| {
            let m = random_structure(&mut rng, kind, n, req.density)?;
            count_row(&m, kind.name().to_string(), req.seed)
        })
        .collect()
}

pub fn render_count_table(rows: &[CountRow]) -> String {
    let width = rows
        .iter()
        .map(|r| r.structure.len())
        .chain(["structure".len()])
        .max()
        .unwrap_or(9);
    let mut out = format!(
        "{:<width$}  {:>6}  {:>11}  {:>8}  match\n",
        "structure", "n", "theoretical", "measured"
    );
    for r in rows {
        out += &format!(
            "{:<width$}  {:>6}  {:>11}  {:>8}  {}\n",
            r.structure,
            r.n,
            r.theoretical,
            r.measured,
            if r.matches { "yes" } else { "no" }
        );
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchMethod {
    StructuredProgram,
    StructuredDirect,
    DenseNaive,
}

impl BenchMethod {
    pub fn name(self) -> &'static str {
        match self {
            BenchMethod::StructuredProgram => "structured-program",
            BenchMethod::StructuredDirect => "structured-direct",
            BenchMethod::DenseNaive => "dense-naive",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub structure: String,
    pub n: usize,
    pub method: BenchMethod,
    pub nanos: u128,
    pub mults: usize,
}

#[derive(Debug, Clone)]
pub struct BenchRequest {
    pub structure: String,
    pub n_max: usize,
    pub levels: Option<String>,
    pub reps: usize,
    pub density: f64,
    pub seed: u64,
}

/// Dense-naive rows are only produced up to this order.
pub const DENSE_NAIVE_MAX_ORDER: usize = 4096;

/// Program rows are skipped once the three dense maps would hold more
/// entries than this.
pub const PROGRAM_ENTRY_CAP: usize = 1 << 24;

/// `2, 4, 8, …` up to `n_max`, ending at `n_max` itself.
pub fn bench_orders(n_max: usize) -> Vec<usize> {
    let mut ns: Vec<usize> = std::iter::successors(Some(2usize), |n| n.checked_mul(2))
        .take_while(|&n| n <= n_max)
        .collect();
    if n_max >= 1 && ns.last() != Some(&n_max) {
        ns.push(n_max);
    }
    ns
}

fn program_entries(kind: StructureKind, n: usize, support: usize) -> usize {
    let (slots, d) = match kind {
        StructureKind::Circulant => (n, n),
        StructureKind::Toeplitz | StructureKind::Hankel => (2 * n, 2 * n - 1),
        StructureKind::Symmetric => (n * (n + 1) / 2, n * (n + 1) / 2),
        StructureKind::ToeplitzPlusHankel => (4 * n, 4 * n - 3),
        StructureKind::Sparse => (support, support),
        StructureKind::Multilevel => (0, 0),
    };
    slots.saturating_mul(d + 2 * n)
}

fn median_nanos(reps: usize, mut f: impl FnMut()) -> u128 {
    let mut times: Vec<u128> = (0..reps.max(1))
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed().as_nanos()
        })
        .collect();
    times.sort_unstable();
    times[times.len() / 2]
}

fn bench_instance(
    m: &StructuredMatrix,
    label: &str,
    reps: usize,
    program: Option<&BilinearProgram>,
    seed: u64,
) -> Result<Vec<BenchRow>, CliError> {
    let n = m.order();
    let v = random_vector(m, seed);
    let params = m.params();
    let mut rows = Vec::new();
    let row = |method, nanos, mults| BenchRow {
        structure: label.to_string(),
        n,
        method,
        nanos,
        mults,
    };
    if let Some(p) = program {
        let mults = p.apply(&params, &v)?.1;
        let nanos = median_nanos(reps, || {
            std::hint::black_box(p.apply(&params, &v).expect("checked above"));
        });
        rows.push(row(BenchMethod::StructuredProgram, nanos, mults));
    }
    let mults = direct_matvec_with(m, &v, TransformMode::Fast)?.1;
    let nanos = median_nanos(reps, || {
        std::hint::black_box(direct_matvec_with(m, &v, TransformMode::Fast).expect("checked above"));
    });
    rows.push(row(BenchMethod::StructuredDirect, nanos, mults));
    if n <= DENSE_NAIVE_MAX_ORDER {
        let d = dense(m);
        let nanos = median_nanos(reps, || {
            std::hint::black_box(naive_matvec(&d, &v).expect("orders match"));
        });
        rows.push(row(BenchMethod::DenseNaive, nanos, naive_mult_count(n)));
    }
    Ok(rows)
}

/// Times the program route, the direct route (fast transforms) and the
/// naive dense product.
pub fn bench(req: &BenchRequest) -> Result<Vec<BenchRow>, CliError> {
    let kind = parse_kind(&req.structure)?;
    let mut rng = seeded(req.seed);
    if kind == StructureKind::Multilevel {
        let spec = req
            .levels
            .as_deref()
            .ok_or_else(|| CliError::Usage("multilevel needs --levels".into()))?;
        let m: StructuredMatrix = random_multilevel(&mut rng, &parse_levels(spec)?, req.density)?.into();
        let p = program_for(&m);
        return bench_instance(&m, &format!("multilevel[{spec}]"), req.reps, Some(&p), req.seed);
    }
    let mut rows = Vec::new();
    for n in bench_orders(req.n_max) {
        let m = random_structure(&mut rng, kind, n, req.density)?;
        let support = if let StructuredMatrix::Sparse(s) = &m { s.pattern.len() } else { 0 };
        // built per order and dropped afterwards; large programs are not cached
        let program = if program_entries(kind, n, support) <= PROGRAM_ENTRY_CAP {
            Some(match &m {
                StructuredMatrix::Sparse(_) => (*program_for(&m)).clone(),
                _ => build_program(kind, n).expect("dense-structured kind"),
            })
        } else {
            None
        };
        rows.extend(bench_instance(&m, kind.name(), req.reps, program.as_ref(), req.seed)?);
    }
    Ok(rows)
}

pub fn write_bench_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["structure", "N", "method", "wall_time_ns", "mult_count"])?;
    for r in rows {
        w.write_record([
            r.structure.clone(),
            r.n.to_string(),
            r.method.name().to_string(),
            r.nanos.to_string(),
            r.mults.to_string(),
        ])?;
    }
    w.flush().map_err(|e| CliError::io("csv output", e))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen_req(structure: &str, n: Option<usize>, levels: Option<&str>) -> GenRequest {
        GenRequest {
            structure: structure.into(),
            n,
            levels: levels.map(Into::into),
            density: 0.25,
            seed: 1,
        }
    }

    #[test]
    fn gen_is_deterministic() {
        let a = gen(&gen_req("circulant", Some(4), None)).unwrap();
        let b = gen(&gen_req("circulant", Some(4), None)).unwrap();
        assert_eq!(a, b);
        let mut other = gen_req("circulant", Some(4), None);
        other.seed = 2;
        assert_ne!(gen(&other).unwrap(), a);
    }

    #[test]
    fn gen_multilevel_order() {
        let text = gen(&gen_req("multilevel", None, Some("circulant:2,toeplitz:3"))).unwrap();
        assert_eq!(MatrixFile::parse(&text).unwrap().order(), 6);
    }

    #[test]
    fn gen_sparse_density() {
        let mut req = gen_req("sparse", Some(4), None);
        req.seed = 7;
        let m = MatrixFile::parse(&gen(&req).unwrap()).unwrap();
        let StructuredMatrix::Sparse(s) = m else { panic!("not sparse") };
        // 16 positions at density 0.25: expect about 4
        assert!(s.pattern.len() <= 10, "support {}", s.pattern.len());
        assert!(s.pattern.support.iter().all(|&(i, j)| i < 4 && j < 4));
    }

    #[test]
    fn gen_errors() {
        assert!(matches!(gen(&gen_req("banded", Some(3), None)), Err(CliError::Usage(_))));
        assert!(matches!(gen(&gen_req("toeplitz", None, None)), Err(CliError::Usage(_))));
        assert!(matches!(gen(&gen_req("toeplitz", Some(0), None)), Err(CliError::Usage(_))));
        assert!(parse_levels("circulant:2,multilevel:2").is_err());
        assert!(parse_levels("circulant2").is_err());
    }

    #[test]
    fn count_tables() {
        let req = |s: &str, lo, hi| CountRequest {
            structure: s.into(),
            n_min: lo,
            n_max: Some(hi),
            levels: None,
            density: 0.5,
            seed: 3,
        };
        let col = |rows: Vec<CountRow>| rows.iter().map(|r| r.measured).collect::<Vec<_>>();
        let rows = count(&req("toeplitz", 1, 8)).unwrap();
        assert!(rows.iter().all(|r| r.matches));
        assert_eq!(col(rows), vec![1, 3, 5, 7, 9, 11, 13, 15]);
        assert_eq!(col(count(&req("symmetric", 1, 5)).unwrap()), vec![1, 3, 6, 10, 15]);
        assert_eq!(col(count(&req("tph", 2, 5)).unwrap()), vec![5, 9, 13, 17]);
    }

    #[test]
    fn bench_orders_are_increasing() {
        assert_eq!(bench_orders(16), vec![2, 4, 8, 16]);
        assert_eq!(bench_orders(12), vec![2, 4, 8, 12]);
        assert_eq!(bench_orders(1), vec![1]);
    }

    #[test]
    fn bench_rows_and_counts() {
        let rows = bench(&BenchRequest {
            structure: "circulant".into(),
            n_max: 16,
            levels: None,
            reps: 2,
            density: 0.3,
            seed: 1,
        })
        .unwrap();
        for r in &rows {
            match r.method {
                BenchMethod::DenseNaive => assert_eq!(r.mults, r.n * r.n),
                _ => assert_eq!(r.mults, r.n),
            }
        }
        assert_eq!(rows.len(), 4 * 3);
        let mut buf = Vec::new();
        write_bench_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("structure,N,method,wall_time_ns,mult_count\n"));
        assert_eq!(text.lines().count(), 13);
    }

    #[test]
    fn verify_passes_on_generated_instance() {
        let m = MatrixFile::parse(&gen(&gen_req("hankel", Some(6), None)).unwrap()).unwrap();
        let report = verify(&m, &random_vector(&m, 4), 1e-9).unwrap();
        assert!(report.passed(), "{report}");
    }
}
