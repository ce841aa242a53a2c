//! Matrices of linear forms: random general matrices with a Fitting-ideal
//! certificate, named fixtures and a small text format.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::matrix::{minors, MinorTable, PolyMatrix};
use crate::error::{AlgebraError, Result};
use crate::groebner::{krull_dimension, Budget, Ideal};
use crate::ring::{parse_poly, Field, FieldSpec, Polynomial, RingRef, RingSpec};

/// Where a matrix came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Random { seed: u64, retries: u32 },
    Fixture(String),
    Derived(String),
    File,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Random { seed, retries } => write!(f, "random(seed={seed}, retries={retries})"),
            Provenance::Fixture(name) => write!(f, "fixture({name})"),
            Provenance::Derived(what) => write!(f, "derived({what})"),
            Provenance::File => write!(f, "file"),
        }
    }
}

/// An `m × c` matrix whose entries are linear forms in `X1..Xn`, stored as the
/// coefficient tensor `coeff(ℓ_{rj}, X_k)`.
#[derive(Clone, Debug)]
pub struct LinearFormMatrix<K: Field> {
    ring: RingRef,
    rows: usize,
    cols: usize,
    coeffs: Vec<K>,
    provenance: Provenance,
}

impl<K: Field> PartialEq for LinearFormMatrix<K> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.coeffs == other.coeffs
    }
}

impl<K: Field> LinearFormMatrix<K> {
    /// Builds from a coefficient function `(r, j, k) ↦ coeff(ℓ_{rj}, X_k)`.
    pub fn from_coefficients(
        ring: &RingRef,
        rows: usize,
        cols: usize,
        provenance: Provenance,
        f: impl Fn(usize, usize, usize) -> K,
    ) -> Self {
        let n = ring.nvars();
        let mut coeffs = Vec::with_capacity(rows * cols * n);
        for r in 0..rows {
            for j in 0..cols {
                for k in 0..n {
                    coeffs.push(f(r, j, k));
                }
            }
        }
        LinearFormMatrix { ring: ring.clone(), rows, cols, coeffs, provenance }
    }

    /// Reads linear forms off a polynomial matrix; every entry must be a
    /// homogeneous linear form (or zero).
    pub fn from_poly_matrix(m: &PolyMatrix<K>, provenance: Provenance) -> Result<Self> {
        let ring = m.ring();
        for e in m.entries() {
            if !e.is_zero() && (e.degree() != Some(1) || !e.is_homogeneous_wrt(&vec![1; ring.nvars()])) {
                return Err(AlgebraError::ShapeMismatch(format!("entry {e} is not a linear form")));
            }
        }
        Ok(Self::from_coefficients(ring, m.rows(), m.cols(), provenance, |r, j, k| m.get(r, j).linear_coefficient(k)))
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_provenance(mut self, p: Provenance) -> Self {
        self.provenance = p;
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    /// `coeff(ℓ_{rj}, X_k)`.
    pub fn coefficient(&self, r: usize, j: usize, k: usize) -> &K {
        &self.coeffs[(r * self.cols + j) * self.nvars() + k]
    }

    /// The entry `ℓ_{rj}` as a polynomial.
    pub fn entry(&self, r: usize, j: usize) -> Polynomial<K> {
        self.entry_in(r, j, &self.ring, &(0..self.nvars()).collect::<Vec<_>>())
    }

    /// `ℓ_{rj}` with `X_k` replaced by variable `vars[k]` of `target`.
    pub fn entry_in(&self, r: usize, j: usize, target: &RingRef, vars: &[usize]) -> Polynomial<K> {
        let mut p = Polynomial::zero(target);
        for (k, &v) in vars.iter().enumerate() {
            let c = self.coefficient(r, j, k);
            if !c.is_zero() {
                p = &p + &Polynomial::var(target, v).scale(c);
            }
        }
        p
    }

    pub fn to_poly_matrix(&self) -> PolyMatrix<K> {
        PolyMatrix::from_fn(&self.ring, self.rows, self.cols, |r, j| self.entry(r, j))
    }

    /// The same linear forms written in the variables of `block` in `target`.
    pub fn in_block(&self, target: &RingRef, block: &str) -> Result<PolyMatrix<K>> {
        let vars = target.block_vars(block);
        if vars.len() != self.nvars() {
            return Err(AlgebraError::ShapeMismatch(format!(
                "block {block} has {} variables, matrix uses {}",
                vars.len(),
                self.nvars()
            )));
        }
        Ok(PolyMatrix::from_fn(target, self.rows, self.cols, |r, j| self.entry_in(r, j, target, &vars)))
    }

    /// Swaps two rows.
    pub fn swap_rows(&self, a: usize, b: usize) -> Self {
        let perm = |r: usize| {
            if r == a {
                b
            } else if r == b {
                a
            } else {
                r
            }
        };
        Self::from_coefficients(&self.ring, self.rows, self.cols, self.provenance.clone(), |r, j, k| {
            self.coefficient(perm(r), j, k).clone()
        })
    }

    /// Swaps two columns.
    pub fn swap_cols(&self, a: usize, b: usize) -> Self {
        let perm = |c: usize| {
            if c == a {
                b
            } else if c == b {
                a
            } else {
                c
            }
        };
        Self::from_coefficients(&self.ring, self.rows, self.cols, self.provenance.clone(), |r, j, k| {
            self.coefficient(r, perm(j), k).clone()
        })
    }

    /// Text form: a header line then one comma-separated row per line.
    pub fn serialize(&self) -> String {
        let mut s = format!("matrix m={} cols={} block=x\n", self.rows, self.cols);
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.entry(r, j).to_string()).collect();
            s.push_str(&row.join(", "));
            s.push('\n');
        }
        s
    }

    /// Parses the text form in the ring `k[x1..xn]`.
    pub fn parse(text: &str, n: usize, field: FieldSpec) -> Result<Self> {
        let ring = RingSpec::affine(n, field);
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or(AlgebraError::Parse { offset: 0, message: "empty matrix file".into() })?;
        let mut m = None;
        let mut cols = None;
        let mut words = header.split_whitespace();
        if words.next() != Some("matrix") {
            return Err(AlgebraError::Parse { offset: 0, message: "expected `matrix` header".into() });
        }
        for w in words {
            let (k, v) =
                w.split_once('=').ok_or(AlgebraError::Parse { offset: 0, message: format!("bad field {w}") })?;
            match k {
                "m" => m = v.parse::<usize>().ok(),
                "cols" => cols = v.parse::<usize>().ok(),
                "block" if v == "x" => {}
                _ => return Err(AlgebraError::Parse { offset: 0, message: format!("unsupported header field {w}") }),
            }
        }
        let (m, cols) = match (m, cols) {
            (Some(m), Some(c)) => (m, c),
            _ => return Err(AlgebraError::Parse { offset: 0, message: "header needs m and cols".into() }),
        };
        let mut entries = Vec::with_capacity(m * cols);
        for line in lines {
            for e in line.split(',') {
                entries.push(parse_poly(e.trim(), &ring)?);
            }
        }
        let pm = PolyMatrix::new(&ring, m, cols, entries)?;
        Self::from_poly_matrix(&pm, Provenance::File)
    }
}

/// Parameters of a random matrix of size `m × (m−1)` in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixSpec {
    pub m: usize,
    pub n: usize,
    pub field: FieldSpec,
    pub seed: u64,
    pub bound: i64,
}

impl MatrixSpec {
    pub fn new(m: usize, n: usize, field: FieldSpec, seed: u64) -> Self {
        MatrixSpec { m, n, field, seed, bound: 50 }
    }

    /// `m(m−1) − n`.
    pub fn s(&self) -> i64 {
        (self.m * (self.m - 1)) as i64 - self.n as i64
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 2 || self.n < 3 || self.m * (self.m - 1) < self.n {
            return Err(AlgebraError::Config(format!("invalid matrix shape m={} n={}", self.m, self.n)));
        }
        if self.bound < 1 {
            return Err(AlgebraError::Config("coefficient bound must be positive".into()));
        }
        if let FieldSpec::Prime(p) = self.field {
            if (p as i64) <= 2 * self.bound {
                return Err(AlgebraError::InvalidField(format!("prime {p} too small for bound {}", self.bound)));
            }
        }
        Ok(())
    }
}

/// Codimension of one Fitting ideal against its expected value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FittingCheck {
    pub t: usize,
    pub codim: i32,
    pub expected: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericityCertificate {
    pub checks: Vec<FittingCheck>,
    pub pass: bool,
    pub retries: u32,
}

/// `min{n, (m−t+1)(m−t)}`.
pub fn expected_fitting_codim(m: usize, n: usize, t: usize) -> i32 {
    n.min((m - t + 1) * (m - t)) as i32
}

/// Codimensions of `I_t(L)` for `1 ≤ t ≤ cols`.
pub fn fitting_certificate<K: Field>(l: &LinearFormMatrix<K>, budget: &Budget) -> Result<GenericityCertificate> {
    let pm = l.to_poly_matrix();
    let tmax = l.rows().min(l.cols());
    let table = MinorTable::build(&pm, tmax);
    let mut checks = Vec::with_capacity(tmax);
    for t in 1..=tmax {
        let gens: Vec<Polynomial<K>> = table.of_size(t).into_iter().map(|(_, p)| p).filter(|p| !p.is_zero()).collect();
        let ideal = Ideal::new(l.ring(), gens)?;
        let dim = krull_dimension(&ideal, budget)?;
        checks.push(FittingCheck { t, codim: dim.codim, expected: expected_fitting_codim(l.rows(), l.nvars(), t) });
    }
    let pass = checks.iter().all(|c| c.codim == c.expected);
    Ok(GenericityCertificate { checks, pass, retries: 0 })
}

/// Retry cap for [`random_general_matrix`].
pub const MAX_RETRIES: u32 = 16;

fn random_coefficient<K: Field>(rng: &mut ChaCha8Rng, spec: &MatrixSpec) -> K {
    match spec.field {
        FieldSpec::Rationals => {
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-spec.bound..=spec.bound);
            }
            K::from_i64(&spec.field, c)
        }
        FieldSpec::Prime(p) => K::from_i64(&spec.field, rng.gen_range(1..p as i64)),
    }
}

/// The matrix for one seed, without a certificate.
pub fn random_matrix<K: Field>(spec: &MatrixSpec, seed: u64) -> LinearFormMatrix<K> {
    let ring = RingSpec::affine(spec.n, spec.field);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cols = spec.m - 1;
    let mut coeffs = Vec::with_capacity(spec.m * cols * spec.n);
    for _ in 0..spec.m * cols * spec.n {
        coeffs.push(random_coefficient::<K>(&mut rng, spec));
    }
    LinearFormMatrix { ring, rows: spec.m, cols, coeffs, provenance: Provenance::Random { seed, retries: 0 } }
}

/// Seeded random `m × (m−1)` linear matrix that passes the Fitting
/// certificate; on failure the seed is bumped by one, up to [`MAX_RETRIES`].
pub fn random_general_matrix<K: Field>(
    spec: &MatrixSpec,
    budget: &Budget,
) -> Result<(LinearFormMatrix<K>, GenericityCertificate)> {
    spec.validate()?;
    if !K::accepts(&spec.field) {
        return Err(AlgebraError::InvalidField(format!("coefficient type does not match {}", spec.field)));
    }
    for retry in 0..=MAX_RETRIES {
        let seed = spec.seed.wrapping_add(retry as u64);
        let l = random_matrix::<K>(spec, seed);
        let mut cert = fitting_certificate(&l, budget)?;
        cert.retries = retry;
        if cert.pass {
            let l = l.with_provenance(Provenance::Random { seed: spec.seed, retries: retry });
            return Ok((l, cert));
        }
    }
    Err(AlgebraError::Genericity(format!("no general matrix after {MAX_RETRIES} retries from seed {}", spec.seed)))
}

/// Names accepted by [`fixture`].
pub const FIXTURES: [&str; 4] = ["fix-c3", "tchernev", "tchernev-perturbed-1", "tchernev-perturbed-2"];

fn fixture_rows(name: &str) -> Option<(usize, Vec<Vec<&'static str>>)> {
    let rows = match name {
        "fix-c3" => vec![vec!["x1", "x2"], vec!["x2", "x3"], vec!["x3", "x1"]],
        "tchernev" => vec![vec!["x1", "x2", "x3"], vec!["x2", "x3", "0"], vec!["x3", "0", "x1"], vec!["0", "x1", "x2"]],
        "tchernev-perturbed-1" => vec![
            vec!["x1", "x2", "x3"],
            vec!["x2", "x3", "0"],
            vec!["x3", "0", "x1 - x2"],
            vec!["0", "x1 - x3", "x2 - x3"],
        ],
        "tchernev-perturbed-2" => vec![
            vec!["x1", "x2", "x3"],
            vec!["x2", "x3", "x1 - x2"],
            vec!["x3", "x1 - x3", "x2 - x3"],
            vec!["x1 + x2", "x2 + x3", "x1 + x3"],
        ],
        _ => return None,
    };
    Some((3, rows))
}

/// A named fixture matrix over the requested field.
pub fn fixture<K: Field>(name: &str, field: FieldSpec) -> Result<LinearFormMatrix<K>> {
    let key = name.to_ascii_lowercase();
    let (n, rows) = fixture_rows(&key).ok_or_else(|| AlgebraError::Config(format!("unknown fixture {name}")))?;
    let ring = RingSpec::affine(n, field);
    let entries = rows.iter().flatten().map(|s| parse_poly(s, &ring)).collect::<Result<Vec<_>>>()?;
    let pm = PolyMatrix::new(&ring, rows.len(), rows[0].len(), entries)?;
    LinearFormMatrix::from_poly_matrix(&pm, Provenance::Fixture(key))
}

/// The matrix of the counter-example with rows `(X1,X2,X3), (X2,X3,0), (X3,0,X1), (0,X1,X2)`.
pub fn tchernev_matrix<K: Field>(field: FieldSpec) -> LinearFormMatrix<K> {
    fixture("tchernev", field).expect("built-in fixture")
}

/// `I_t(L)`: all `t × t` minors, deduplicated.
pub fn minors_ideal<K: Field>(l: &LinearFormMatrix<K>, t: usize) -> Result<Ideal<K>> {
    Ideal::new(l.ring(), minors(&l.to_poly_matrix(), t)?)
}

/// `Δ_i = (−1)^{i+1} det(L without row i)` (rows counted from 1), so that
/// `Δ · L = 0`.
pub fn signed_maximal_minors<K: Field>(l: &LinearFormMatrix<K>) -> Result<Vec<Polynomial<K>>> {
    signed_maximal_minors_of(&l.to_poly_matrix())
}

pub fn signed_maximal_minors_of<K: Field>(m: &PolyMatrix<K>) -> Result<Vec<Polynomial<K>>> {
    if m.rows() != m.cols() + 1 {
        return Err(AlgebraError::ShapeMismatch(format!(
            "expected an m x (m-1) matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let c = m.cols();
    let table = MinorTable::build(m, c);
    let all_rows = (1u32 << m.rows()) - 1;
    let all_cols = if c == 0 { 0 } else { (1u32 << c) - 1 };
    Ok((0..m.rows())
        .map(|i| {
            let d = table.get(all_rows & !(1 << i), all_cols);
            if i % 2 == 0 {
                d.clone()
            } else {
                d.neg()
            }
        })
        .collect())
}
