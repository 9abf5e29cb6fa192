//! Exact integer linear algebra: row-style Hermite normal form and integer
//! solutions of `A x = b`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn row_mut(&mut self, i: usize) -> &mut [BigInt] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.cols {
            return Err(Error::Dimension(format!("{}x{} times vector of length {}", self.rows, self.cols, x.len())));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    /// row[target] -= q * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let cols = self.cols;
        for c in 0..cols {
            let s = &self.data[source * cols + c];
            if !s.is_zero() {
                let d = q * s;
                self.data[target * cols + c] -= d;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.row_mut(i) {
            *x = -std::mem::take(x);
        }
    }

    /// Leading column of each nonzero row, for a matrix in echelon form.
    pub fn pivots(&self) -> Vec<(usize, usize)> {
        (0..self.rows)
            .filter_map(|i| self.row(i).iter().position(|x| !x.is_zero()).map(|c| (i, c)))
            .collect()
    }

    pub fn is_echelon(&self) -> bool {
        let mut last: Option<usize> = None;
        let mut seen_zero = false;
        for i in 0..self.rows {
            match self.row(i).iter().position(|x| !x.is_zero()) {
                None => seen_zero = true,
                Some(c) => {
                    if seen_zero || last.map_or(false, |l| c <= l) {
                        return false;
                    }
                    last = Some(c);
                }
            }
        }
        true
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `H = U * A`, `U`
/// unimodular, `H` in row echelon form with positive pivots and the entries
/// above each pivot reduced into `[0, pivot)`. Zero rows come last.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    hnf_impl(a, true)
}

/// Like [`hnf`] without accumulating the transform.
pub fn hnf_only(a: &IntMatrix) -> IntMatrix {
    hnf_impl(a, false).0
}

fn hnf_impl(a: &IntMatrix, track: bool) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = if track { IntMatrix::identity(a.rows) } else { IntMatrix::zeros(0, 0) };
    let mut r = 0;
    for c in 0..h.cols {
        if r == h.rows {
            break;
        }
        // Euclid on column c among rows r.. until a single nonzero remains.
        loop {
            let pivot = (r..h.rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&i, &j| h[(i, c)].abs().cmp(&h[(j, c)].abs()));
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            if track {
                u.swap_rows(r, p);
            }
            let mut done = true;
            for i in r + 1..h.rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                h.sub_row_multiple(i, r, &q);
                if track {
                    u.sub_row_multiple(i, r, &q);
                }
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            if track {
                u.negate_row(r);
            }
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            h.sub_row_multiple(i, r, &q);
            if track {
                u.sub_row_multiple(i, r, &q);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Coefficients `y` with `y^T H = b^T` for an echelon `H`, if they exist.
fn solve_echelon(h: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut residual = b.to_vec();
    let mut y = vec![BigInt::zero(); h.rows];
    for (i, c) in h.pivots() {
        // columns before this pivot are final
        if residual[..c].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let (q, rem) = residual[c].div_rem(&h[(i, c)]);
        if !rem.is_zero() {
            return None;
        }
        for (res, hv) in residual.iter_mut().zip(h.row(i)).skip(c) {
            if !hv.is_zero() {
                *res -= &q * hv;
            }
        }
        y[i] = q;
    }
    residual.iter().all(Zero::is_zero).then_some(y)
}

/// An integer `x` with `A x = b`, or `None` if no integer solution exists.
pub fn solve_diophantine(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
    if b.len() != a.rows {
        return Err(Error::Dimension(format!("{}x{} system with right side of length {}", a.rows, a.cols, b.len())));
    }
    let (h, u) = hnf(&a.transpose());
    Ok(solve_echelon(&h, b).map(|y| u.transpose().mul_vec(&y).expect("square transform")))
}

/// Nonzero entries `(column, value)` in increasing column order.
pub type SparseRow = Vec<(usize, BigInt)>;

/// `a * x + b * y` for sparse rows sorted by column.
fn sparse_combine(a: &BigInt, x: &SparseRow, b: &BigInt, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len().max(y.len()));
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (col, val) = match (x.get(i), y.get(j)) {
            (Some((cx, vx)), Some((cy, _))) if cx < cy => {
                i += 1;
                (*cx, a * vx)
            }
            (Some((cx, _)), Some((cy, vy))) if cy < cx => {
                j += 1;
                (*cy, b * vy)
            }
            (Some((cx, vx)), Some((_, vy))) => {
                i += 1;
                j += 1;
                (*cx, a * vx + b * vy)
            }
            (Some((cx, vx)), None) => {
                i += 1;
                (*cx, a * vx)
            }
            (None, Some((cy, vy))) => {
                j += 1;
                (*cy, b * vy)
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    out
}

/// The integer lattice spanned by a set of vectors, kept as an echelon basis
/// of sparse rows (one per pivot column) so that insertion and membership
/// queries stay cheap for sparse generators.
#[derive(Clone, Debug)]
pub struct Lattice {
    dim: usize,
    /// pivot column -> row whose first nonzero entry (positive) is there
    rows: std::collections::BTreeMap<usize, SparseRow>,
}

impl Lattice {
    pub fn new(dim: usize) -> Self {
        Lattice { dim, rows: Default::default() }
    }

    /// Lattice spanned by the rows of `generators`.
    pub fn from_rows(generators: &IntMatrix) -> Self {
        let mut l = Lattice::new(generators.cols);
        for i in 0..generators.rows {
            l.insert(generators.row(i));
        }
        l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The echelon basis as a dense matrix, rows ordered by pivot.
    pub fn basis(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows.len(), self.dim);
        for (i, row) in self.rows.values().enumerate() {
            for (c, v) in row {
                m[(i, *c)] = v.clone();
            }
        }
        m
    }

    fn sparse(v: &[BigInt]) -> SparseRow {
        v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
    }

    /// Adds a generator.
    pub fn insert(&mut self, v: &[BigInt]) {
        assert_eq!(v.len(), self.dim, "vector length");
        self.insert_sparse(Self::sparse(v));
    }

    pub fn insert_sparse(&mut self, mut v: SparseRow) {
        while let Some((pivot, lead)) = v.first().cloned() {
            let Some(row) = self.rows.get_mut(&pivot) else {
                if lead.is_negative() {
                    v.iter_mut().for_each(|(_, x)| *x = -std::mem::take(x));
                }
                self.rows.insert(pivot, v);
                return;
            };
            let a = row[0].1.clone();
            if lead.is_multiple_of(&a) {
                let q = &lead / &a;
                v = sparse_combine(&BigInt::one(), &v, &-q, row);
                continue;
            }
            // replace the row by the gcd combination, keep eliminating the rest
            let e = a.extended_gcd(&lead);
            let mut new_row = sparse_combine(&e.x, row, &e.y, &v);
            if new_row[0].1.is_negative() {
                new_row.iter_mut().for_each(|(_, x)| *x = -std::mem::take(x));
            }
            let rest = sparse_combine(&(&a / &e.gcd), &v, &-(&lead / &e.gcd), row);
            *row = new_row;
            v = rest;
        }
    }

    fn reduce(&self, v: &[BigInt]) -> (SparseRow, bool) {
        let mut v = Self::sparse(v);
        while let Some((pivot, lead)) = v.first().cloned() {
            let Some(row) = self.rows.get(&pivot) else { return (v, false) };
            let (q, r) = lead.div_rem(&row[0].1);
            if !r.is_zero() {
                return (v, false);
            }
            v = sparse_combine(&BigInt::one(), &v, &-q, row);
        }
        (v, true)
    }

    /// Membership over the integers.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        self.reduce(v).1
    }

    /// Membership in the rational span.
    pub fn spans_rationally(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let mut v = Self::sparse(v);
        while let Some((pivot, lead)) = v.first().cloned() {
            let Some(row) = self.rows.get(&pivot) else { return false };
            let a = row[0].1.clone();
            let g = a.gcd(&lead);
            v = sparse_combine(&(&a / &g), &v, &-(&lead / &g), row);
        }
        true
    }
}
