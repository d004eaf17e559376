//! Sparse integer matrices and their Smith normal form.
//!
//! Elimination runs over `BigInt`; entries of the input are `i64`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer matrix, stored by rows. Each row lists its nonzero
/// entries in increasing column order.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].push((i, 1));
        }
        m
    }

    /// Builds a matrix from dense rows, all of length `ncols`.
    pub fn from_dense(ncols: usize, dense: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(dense.len(), ncols);
        for (i, row) in dense.iter().enumerate() {
            assert_eq!(row.len(), ncols, "row {i} has the wrong length");
            m.rows[i] = row
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, &v)| (j, v))
                .collect();
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triples; later triples
    /// overwrite earlier ones at the same position.
    pub fn from_entries<I>(nrows: usize, ncols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut by_row: Vec<BTreeMap<usize, i64>> = vec![BTreeMap::new(); nrows];
        for (i, j, v) in entries {
            assert!(i < nrows && j < ncols, "entry ({i}, {j}) out of bounds");
            by_row[i].insert(j, v);
        }
        IntMatrix {
            nrows,
            ncols,
            rows: by_row
                .into_iter()
                .map(|r| r.into_iter().filter(|&(_, v)| v != 0).collect())
                .collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        match self.rows[i].binary_search_by_key(&j, |&(c, _)| c) {
            Ok(k) => self.rows[i][k].1,
            Err(_) => 0,
        }
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.ncols, self.nrows);
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, v) in row {
                t.rows[j].push((i, v));
            }
        }
        t
    }

    /// Matrix product. Panics on a shape mismatch or `i64` overflow.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, other.nrows, "shape mismatch in product");
        let mut out = Self::zeros(self.nrows, other.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(k, a) in row {
                for &(j, b) in &other.rows[k] {
                    let e = acc.entry(j).or_insert(0);
                    *e = a
                        .checked_mul(b)
                        .and_then(|ab| e.checked_add(ab))
                        .expect("integer overflow in matrix product");
                }
            }
            out.rows[i] = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IntMatrix({}x{}, {:?})",
            self.nrows,
            self.ncols,
            self.to_dense()
        )
    }
}

/// Invariant factors `d_1 | d_2 | .. | d_r`, all positive, `r` the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub invariant_factors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// The factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }

    /// Checks positivity, the divisibility chain and agreement of the rank
    /// with the rank over the rationals of `m`.
    pub fn check_against(&self, m: &IntMatrix) -> Result<(), String> {
        if let Some(d) = self.invariant_factors.iter().find(|d| !d.is_positive()) {
            return Err(format!("non-positive invariant factor {d}"));
        }
        for w in self.invariant_factors.windows(2) {
            if !(&w[1] % &w[0]).is_zero() {
                return Err(format!("{} does not divide {}", w[0], w[1]));
            }
        }
        let q_rank = rational_rank(m);
        if q_rank != self.rank() {
            return Err(format!(
                "SNF rank {} differs from rational rank {q_rank}",
                self.rank()
            ));
        }
        Ok(())
    }
}

type SparseRow = Vec<(usize, BigInt)>;

struct Eliminator {
    rows: Vec<SparseRow>,
    col_rows: Vec<BTreeSet<usize>>,
}

impl Eliminator {
    fn new(m: &IntMatrix) -> Self {
        let mut col_rows = vec![BTreeSet::new(); m.ncols];
        let rows = m
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.iter()
                    .map(|&(j, v)| {
                        col_rows[j].insert(i);
                        (j, BigInt::from(v))
                    })
                    .collect()
            })
            .collect();
        Eliminator { rows, col_rows }
    }

    /// Position of a nonzero entry of least absolute value, ties broken by
    /// `(row, col)`.
    fn pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &BigInt)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                let smaller = best.is_none_or(|(_, _, b)| v.magnitude() < b.magnitude());
                if smaller {
                    if v.magnitude().is_one() {
                        return Some((i, *j));
                    }
                    best = Some((i, *j, v));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn entry(&self, i: usize, j: usize) -> Option<&BigInt> {
        let row = &self.rows[i];
        row.binary_search_by_key(&j, |(c, _)| *c)
            .ok()
            .map(|k| &row[k].1)
    }

    /// `row[target] -= q * src`
    fn subtract_multiple(&mut self, target: usize, q: &BigInt, src: &[(usize, BigInt)]) {
        let old = std::mem::take(&mut self.rows[target]);
        let mut merged = Vec::with_capacity(old.len() + src.len());
        let (mut a, mut b) = (old.into_iter().peekable(), src.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ja, _)), Some((jb, _))) if ja < jb => merged.push(a.next().unwrap()),
                (Some((ja, _)), Some((jb, _))) if ja == jb => {
                    let (j, va) = a.next().unwrap();
                    let (_, vb) = b.next().unwrap();
                    let v = va - q * vb;
                    if v.is_zero() {
                        self.col_rows[j].remove(&target);
                    } else {
                        merged.push((j, v));
                    }
                }
                (_, Some(_)) => {
                    let (j, vb) = b.next().unwrap();
                    self.col_rows[*j].insert(target);
                    merged.push((*j, -(q * vb)));
                }
                (Some(_), None) => merged.push(a.next().unwrap()),
                (None, None) => break,
            }
        }
        self.rows[target] = merged;
    }

    fn run(mut self) -> Vec<BigInt> {
        let mut diagonal = Vec::new();
        while let Some((pr, pc)) = self.pivot() {
            let p = self.entry(pr, pc).unwrap().clone();
            let pivot_row = self.rows[pr].clone();

            let others: Vec<usize> = self.col_rows[pc]
                .iter()
                .copied()
                .filter(|&r| r != pr)
                .collect();
            let mut column_clear = true;
            for r in others {
                let q = self.entry(r, pc).unwrap() / &p;
                self.subtract_multiple(r, &q, &pivot_row);
                column_clear &= self.entry(r, pc).is_none();
            }
            if !column_clear {
                continue;
            }

            // Column pc now holds only the pivot, so column operations
            // reduce the rest of the pivot row without touching other rows.
            let mut row_clear = true;
            let mut reduced = Vec::with_capacity(pivot_row.len());
            for (j, v) in pivot_row {
                if j == pc {
                    reduced.push((j, v));
                    continue;
                }
                let rem = v % &p;
                if rem.is_zero() {
                    self.col_rows[j].remove(&pr);
                } else {
                    row_clear = false;
                    reduced.push((j, rem));
                }
            }
            self.rows[pr] = reduced;
            if row_clear {
                self.rows[pr].clear();
                self.col_rows[pc].clear();
                diagonal.push(p.abs());
            }
        }
        normalize_diagonal(diagonal)
    }
}

/// Turns a diagonal into a divisibility chain by replacing pairs with
/// `(gcd, lcm)`.
fn normalize_diagonal(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in (i + 1)..d.len() {
            if (&d[j] % &d[i]).is_zero() {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Smith normal form by sparse elimination. The pivot at each step is a
/// nonzero entry of least absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    SmithForm {
        invariant_factors: Eliminator::new(m).run(),
    }
}

/// Rank over the rationals, by fraction-free row echelon reduction.
pub fn rational_rank(m: &IntMatrix) -> usize {
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for row in &m.rows {
        let mut v: SparseRow = row.iter().map(|&(j, x)| (j, BigInt::from(x))).collect();
        while let Some((lead, a)) = v.first().cloned() {
            let Some(p) = pivots.get(&lead) else {
                pivots.insert(lead, v);
                break;
            };
            let b = p[0].1.clone();
            v = combine(&b, &v, &a, p);
            let content = v.iter().fold(BigInt::zero(), |g, (_, x)| g.gcd(x));
            if !content.is_zero() && !content.is_one() {
                for (_, x) in &mut v {
                    *x /= &content;
                }
            }
        }
    }
    pivots.len()
}

/// `b * v - a * p`
fn combine(b: &BigInt, v: &[(usize, BigInt)], a: &BigInt, p: &[(usize, BigInt)]) -> SparseRow {
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut x, mut y) = (v.iter().peekable(), p.iter().peekable());
    loop {
        let next = match (x.peek(), y.peek()) {
            (Some((i, _)), Some((j, _))) if i < j => {
                let (i, xv) = x.next().unwrap();
                (*i, b * xv)
            }
            (Some((i, _)), Some((j, _))) if i == j => {
                let (i, xv) = x.next().unwrap();
                let (_, yv) = y.next().unwrap();
                (*i, b * xv - a * yv)
            }
            (_, Some(_)) => {
                let (j, yv) = y.next().unwrap();
                (*j, -(a * yv))
            }
            (Some(_), None) => {
                let (i, xv) = x.next().unwrap();
                (*i, b * xv)
            }
            (None, None) => break,
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    out
}
