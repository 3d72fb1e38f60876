//! Sparse matrices over Q(q) in row-major form.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::{CoeffError, RatFunc, Rational};

/// Row-major sparse matrix; each row holds `(column, value)` pairs sorted by
/// column with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, RatFunc)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| RatFunc::one()).collect())
    }

    pub fn diagonal(d: Vec<RatFunc>) -> Self {
        let n = d.len();
        let data = d
            .into_iter()
            .enumerate()
            .map(|(i, v)| if v.is_zero() { vec![] } else { vec![(i, v)] })
            .collect();
        SparseMatrix {
            rows: n,
            cols: n,
            data,
        }
    }

    /// Builds from triplets; repeated positions are summed.
    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, RatFunc)>>(
        rows: usize,
        cols: usize,
        entries: I,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, RatFunc>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of bounds");
            let slot = acc[r].entry(c).or_default();
            *slot = &*slot + &v;
        }
        Self::from_row_maps(cols, acc)
    }

    fn from_row_maps(cols: usize, acc: Vec<BTreeMap<usize, RatFunc>>) -> Self {
        let rows = acc.len();
        let data = acc
            .into_iter()
            .map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix { rows, cols, data }
    }

    pub fn from_dense(rows: &[Vec<RatFunc>], cols: usize) -> Self {
        let data = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<RatFunc>]) -> Self {
        Self::from_triplets(
            rows,
            columns.len(),
            columns
                .iter()
                .enumerate()
                .flat_map(|(j, col)| {
                    col.iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(move |(i, v)| (i, j, v.clone()))
                }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, RatFunc)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> RatFunc {
        self.data[i]
            .binary_search_by_key(&j, |e| e.0)
            .map(|k| self.data[i][k].1.clone())
            .unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RatFunc)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, j, _)| i == j)
    }

    /// Transforms every entry; zero results are dropped.
    pub fn map(&self, mut f: impl FnMut(usize, usize, &RatFunc) -> RatFunc) -> Self {
        let data = self
            .data
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.iter()
                    .map(|(j, v)| (*j, f(i, *j, v)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        self.map(|_, _, v| v * c)
    }

    pub fn neg(&self) -> Self {
        self.map(|_, _, v| -v)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| merge_rows(a, b))
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: BTreeMap<usize, RatFunc> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.data[*k] {
                    let t = a * b;
                    match acc.get_mut(j) {
                        Some(s) => *s = &*s + &t,
                        None => {
                            acc.insert(*j, t);
                        }
                    }
                }
            }
            data.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
        SparseMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_triplets(
            self.cols,
            self.rows,
            self.entries().map(|(i, j, v)| (j, i, v.clone())),
        )
    }

    pub fn apply(&self, v: &[RatFunc]) -> Vec<RatFunc> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|r| {
                let mut acc = RatFunc::zero();
                for (j, a) in r {
                    if !v[*j].is_zero() {
                        acc = &acc + &(a * &v[*j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product with a sign per (column of `self`) block:
    /// entry `(i*r2+k, j*c2+l) = sign(j) * a_ij * b_kl`.
    pub fn kron_signed(&self, other: &Self, negate_col: impl Fn(usize) -> bool) -> Self {
        let r2 = other.rows;
        let c2 = other.cols;
        let mut data = vec![Vec::new(); self.rows * r2];
        for (i, row) in self.data.iter().enumerate() {
            for k in 0..r2 {
                let out = &mut data[i * r2 + k];
                for (j, a) in row {
                    let a = if negate_col(*j) { -a } else { a.clone() };
                    for (l, b) in &other.data[k] {
                        out.push((j * c2 + l, &a * b));
                    }
                }
            }
        }
        SparseMatrix {
            rows: self.rows * r2,
            cols: self.cols * c2,
            data,
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        self.kron_signed(other, |_| false)
    }

    pub fn to_dense(&self) -> Vec<Vec<RatFunc>> {
        let mut out = vec![vec![RatFunc::zero(); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }

    /// Submatrix on the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut col_pos = vec![usize::MAX; self.cols];
        for (k, &c) in cols.iter().enumerate() {
            col_pos[c] = k;
        }
        let data = rows
            .iter()
            .map(|&r| {
                let mut row: Vec<(usize, RatFunc)> = self.data[r]
                    .iter()
                    .filter(|(j, _)| col_pos[*j] != usize::MAX)
                    .map(|(j, v)| (col_pos[*j], v.clone()))
                    .collect();
                row.sort_by_key(|e| e.0);
                row
            })
            .collect();
        SparseMatrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Entrywise specialization at a rational point.
    pub fn specialize(&self, q0: &Rational) -> Result<Vec<Vec<Rational>>, CoeffError> {
        let mut out = vec![vec![Rational::from_integer(0.into()); self.cols]; self.rows];
        for (i, j, v) in self.entries() {
            out[i][j] = v.eval_at(q0)?;
        }
        Ok(out)
    }

    /// The first nonzero entry, for failure witnesses.
    pub fn first_nonzero(&self) -> Option<(usize, usize, RatFunc)> {
        self.entries().next().map(|(i, j, v)| (i, j, v.clone()))
    }
}

fn merge_rows(a: &[(usize, RatFunc)], b: &[(usize, RatFunc)]) -> Vec<(usize, RatFunc)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push(b[j].clone());
            j += 1;
        } else {
            let s = &a[i].1 + &b[j].1;
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl fmt::Display for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j, v) in self.entries() {
            writeln!(f, "({i},{j}) {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn product_and_transpose() {
        let a = SparseMatrix::from_triplets(2, 2, [(0, 1, r("q")), (1, 0, r("1"))]);
        let b = a.mul(&a);
        assert_eq!(b, SparseMatrix::diagonal(vec![r("q"), r("q")]));
        assert_eq!(a.transpose().get(1, 0), r("q"));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn kronecker_layout() {
        let a = SparseMatrix::from_triplets(2, 2, [(0, 1, r("1"))]);
        let b = SparseMatrix::identity(2);
        let k = a.kron_signed(&b, |j| j == 1);
        assert_eq!(k.get(0, 2), r("-1"));
        assert_eq!(k.get(1, 3), r("-1"));
        assert_eq!(k.nnz(), 2);
    }
}
