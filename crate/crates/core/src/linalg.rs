//! Exact dense linear algebra over the rationals: reduced row echelon form,
//! rank, kernel bases and span membership.
//!
//! Pivots are always the first nonzero entry in column order, so every result
//! is deterministic. [`RowSpan`] is the incremental workhorse used by the
//! degree-slice computations: it keeps an echelonized basis of a growing
//! subspace and answers membership queries without re-eliminating from
//! scratch.

use num_traits::{One, Zero};

use crate::poly::Scalar;

/// A dense row-major matrix of rational numbers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Build a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = RatMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                *m.at_mut(i, j) = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn multiply(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.at(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(l, j);
                    if !b.is_zero() {
                        let prod = a * b;
                        *out.at_mut(i, j) += prod;
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            // first nonzero entry in column order
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    let a = m.at(p, j).clone();
                    let b = m.at(r, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(r, j) = a;
                }
            }
            let inv = {
                let piv = m.at(r, c).clone();
                Scalar::one() / piv
            };
            for j in c..m.cols {
                let v = m.at(r, j).clone() * &inv;
                *m.at_mut(r, j) = v;
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone();
                for j in c..m.cols {
                    let sub = m.at(r, j) * &f;
                    *m.at_mut(i, j) -= sub;
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel `{x : m·x = 0}`.
    ///
    /// One basis vector per free column, in ascending column order; the free
    /// coordinate is 1 and the pivot coordinates are read off the reduced
    /// form.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let (red, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                let coeff = red.at(row, free);
                if !coeff.is_zero() {
                    v[pc] = -coeff.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Nullity, `cols − rank`.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

/// Solve `m·c = v` for each target, treating the columns of `m` as a spanning
/// set. Returns `None` for targets outside the column span; free coordinates
/// are set to zero, so solutions are deterministic.
pub fn solve_many(m: &RatMatrix, targets: &[Vec<Scalar>]) -> Vec<Option<Vec<Scalar>>> {
    let mut aug = RatMatrix::zeros(m.rows(), m.cols() + targets.len());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            *aug.at_mut(i, j) = m.at(i, j).clone();
        }
    }
    for (t, v) in targets.iter().enumerate() {
        assert_eq!(v.len(), m.rows(), "dimension mismatch");
        for (i, x) in v.iter().enumerate() {
            *aug.at_mut(i, m.cols() + t) = x.clone();
        }
    }
    let (red, pivots) = aug.rref();
    targets
        .iter()
        .enumerate()
        .map(|(t, _)| {
            let col = m.cols() + t;
            // solvable iff the reduced target column is supported on rows
            // whose pivot lies in the base columns
            for (row, &pc) in pivots.iter().enumerate() {
                if pc >= m.cols() && !red.at(row, col).is_zero() {
                    return None;
                }
            }
            let mut c = vec![Scalar::zero(); m.cols()];
            for (row, &pc) in pivots.iter().enumerate() {
                if pc < m.cols() {
                    c[pc] = red.at(row, col).clone();
                }
            }
            Some(c)
        })
        .collect()
}

/// Coordinates of `v` in the column span of `m`, if any.
pub fn in_span(v: &[Scalar], m: &RatMatrix) -> Option<Vec<Scalar>> {
    solve_many(m, &[v.to_vec()]).pop().unwrap()
}

/// An incrementally built row space in echelon form.
///
/// Rows are kept with pivot entry 1 and strictly increasing pivot columns;
/// insertion order determines which input vectors become basis rows.
#[derive(Clone, Debug)]
pub struct RowSpan {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RowSpan {
    pub fn new(cols: usize) -> Self {
        RowSpan {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    /// Eliminate `v` against the stored rows.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut v[p], Scalar::zero());
            for (j, r) in row.iter().enumerate().skip(p + 1) {
                if !r.is_zero() {
                    let sub = r * &f;
                    v[j] -= sub;
                }
            }
        }
        v
    }

    /// Insert a vector; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        if self.is_full() {
            return false;
        }
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Scalar::one() / v[p].clone();
        for x in v.iter_mut().skip(p) {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if self.is_full() {
            return true;
        }
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }
}
