//! Dense matrices of polynomials, minors and adjugates.

use std::collections::HashMap;
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::ring::{Field, Polynomial, RingRef};

/// Row-major matrix with polynomial entries in one ring.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix<K: Field> {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<K>>,
}

impl<K: Field> fmt::Debug for PolyMatrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|p| p.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<K: Field> PolyMatrix<K> {
    pub fn new(ring: &RingRef, rows: usize, cols: usize, entries: Vec<Polynomial<K>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(AlgebraError::ShapeMismatch(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        let entries = entries.iter().map(|e| e.to_ring(ring)).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    pub fn from_fn(ring: &RingRef, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial<K>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn zeros(ring: &RingRef, rows: usize, cols: usize) -> Self {
        Self::from_fn(ring, rows, cols, |_, _| Polynomial::zero(ring))
    }

    pub fn identity(ring: &RingRef, n: usize) -> Self {
        Self::from_fn(ring, n, n, |i, j| if i == j { Polynomial::one(ring) } else { Polynomial::zero(ring) })
    }

    /// A single row `1 × len`.
    pub fn row_vector(ring: &RingRef, v: &[Polynomial<K>]) -> Self {
        Self::from_fn(ring, 1, v.len(), |_, j| v[j].clone())
    }

    /// A single column `len × 1`.
    pub fn column_vector(ring: &RingRef, v: &[Polynomial<K>]) -> Self {
        Self::from_fn(ring, v.len(), 1, |i, _| v[i].clone())
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

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<K> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<K>) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Polynomial<K>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial<K>> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Polynomial<K>] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(AlgebraError::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let other = other.to_ring(&self.ring)?;
        Ok(Self::from_fn(&self.ring, self.rows, other.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.ring);
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = other.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    pub fn scale(&self, c: &Polynomial<K>) -> Self {
        Self::from_fn(&self.ring, self.rows, self.cols, |i, j| self.get(i, j) * c)
    }

    pub fn to_ring(&self, target: &RingRef) -> Result<Self> {
        let entries = self.entries.iter().map(|e| e.to_ring(target)).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { ring: target.clone(), rows: self.rows, cols: self.cols, entries })
    }

    /// Entrywise map, e.g. a substitution.
    pub fn try_map(&self, target: &RingRef, f: impl Fn(&Polynomial<K>) -> Result<Polynomial<K>>) -> Result<Self> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        Self::new(target, self.rows, self.cols, entries)
    }

    /// Submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.ring, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Determinant of a square matrix.
    pub fn determinant(&self) -> Result<Polynomial<K>> {
        if self.rows != self.cols {
            return Err(AlgebraError::ShapeMismatch(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let table = MinorTable::build(self, n);
        Ok(table.get(full_mask(n), full_mask(n)).clone())
    }
}

fn full_mask(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        u32::MAX >> (32 - n)
    }
}

fn mask_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask & (1 << i) != 0).collect()
}

/// All `t × t` minors up to a given size, built level by level with Laplace
/// expansion along the first row of each row set.
pub struct MinorTable<K: Field> {
    levels: Vec<HashMap<(u32, u32), Polynomial<K>>>,
    ring: RingRef,
}

impl<K: Field> MinorTable<K> {
    pub fn build(m: &PolyMatrix<K>, tmax: usize) -> Self {
        assert!(m.rows <= 32 && m.cols <= 32, "matrix too large for minor masks");
        let ring = m.ring.clone();
        let mut levels: Vec<HashMap<(u32, u32), Polynomial<K>>> = Vec::with_capacity(tmax + 1);
        let mut zero = HashMap::new();
        zero.insert((0u32, 0u32), Polynomial::one(&ring));
        levels.push(zero);
        let row_sets: Vec<Vec<u32>> = (0..=tmax).map(|t| subsets(m.rows, t)).collect();
        let col_sets: Vec<Vec<u32>> = (0..=tmax).map(|t| subsets(m.cols, t)).collect();
        for t in 1..=tmax.min(m.rows).min(m.cols) {
            let prev = &levels[t - 1];
            let mut cur = HashMap::with_capacity(row_sets[t].len() * col_sets[t].len());
            for &rs in &row_sets[t] {
                let r0 = rs.trailing_zeros() as usize;
                let rest = rs & !(1 << r0);
                for &cs in &col_sets[t] {
                    let mut acc = Polynomial::zero(&ring);
                    for (pos, c) in mask_indices(cs).into_iter().enumerate() {
                        let e = m.get(r0, c);
                        if e.is_zero() {
                            continue;
                        }
                        let sub = &prev[&(rest, cs & !(1 << c))];
                        if sub.is_zero() {
                            continue;
                        }
                        let term = e * sub;
                        acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
                    }
                    cur.insert((rs, cs), acc);
                }
            }
            levels.push(cur);
        }
        MinorTable { levels, ring }
    }

    /// The minor on row set `rows` and column set `cols` (bit masks).
    pub fn get(&self, rows: u32, cols: u32) -> &Polynomial<K> {
        let t = rows.count_ones() as usize;
        &self.levels[t][&(rows, cols)]
    }

    /// All minors of size `t`, ordered by row mask then column mask.
    pub fn of_size(&self, t: usize) -> Vec<((u32, u32), Polynomial<K>)> {
        let mut v: Vec<_> = self.levels[t].iter().map(|(k, p)| (*k, p.clone())).collect();
        v.sort_by_key(|(k, _)| *k);
        v
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }
}

/// Bit masks of all `t`-subsets of `0..n`, in increasing numeric order.
pub fn subsets(n: usize, t: usize) -> Vec<u32> {
    let mut out = Vec::new();
    if t > n {
        return out;
    }
    for m in 0u32..(1u32 << n) {
        if m.count_ones() as usize == t {
            out.push(m);
        }
    }
    out
}

/// The nonzero `t × t` minors, keeping one of each pair that agrees up to sign.
pub fn minors<K: Field>(m: &PolyMatrix<K>, t: usize) -> Result<Vec<Polynomial<K>>> {
    if t == 0 || t > m.rows.min(m.cols) {
        return Err(AlgebraError::ShapeMismatch(format!("no {t}x{t} minors in a {}x{} matrix", m.rows, m.cols)));
    }
    let table = MinorTable::build(m, t);
    let mut out: Vec<Polynomial<K>> = Vec::new();
    for (_, p) in table.of_size(t) {
        if !p.is_zero() && !out.contains(&p) && !out.contains(&p.neg()) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Determinant and adjugate of a square matrix: `adj_{ij} = (−1)^{i+j}` times
/// the minor with row `j` and column `i` removed.
pub fn adjugate_det<K: Field>(m: &PolyMatrix<K>) -> Result<(Polynomial<K>, PolyMatrix<K>)> {
    let n = m.rows;
    if n != m.cols {
        return Err(AlgebraError::ShapeMismatch(format!("adjugate of a {}x{} matrix", m.rows, m.cols)));
    }
    let ring = m.ring.clone();
    if n == 0 {
        return Ok((Polynomial::one(&ring), PolyMatrix::zeros(&ring, 0, 0)));
    }
    let table = MinorTable::build(m, n);
    let full = full_mask(n);
    let det = table.get(full, full).clone();
    let adj = PolyMatrix::from_fn(&ring, n, n, |i, j| {
        let minor = table.get(full & !(1 << j), full & !(1 << i));
        if (i + j) % 2 == 0 {
            minor.clone()
        } else {
            minor.neg()
        }
    });
    Ok((det, adj))
}

/// Rank over the field of a list of coefficient vectors.
pub fn vector_rank<K: Field>(mut rows: Vec<Vec<K>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv();
        let pivot: Vec<K> = rows[rank].iter().map(|c| c.mul(&inv)).collect();
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for (c, pc) in rows[r].iter_mut().zip(&pivot) {
                    *c = c.sub(&f.mul(pc));
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}
