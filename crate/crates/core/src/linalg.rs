//! Exact dense elimination over Q(q): ranks, kernels, inverses.
//!
//! Pivots are chosen per column as the candidate entry of smallest size,
//! which keeps intermediate rational functions small.

use num_traits::{One, Zero};

use crate::coeff::{RatFunc, Rational};
use crate::sparse::SparseMatrix;

pub type Vector = Vec<RatFunc>;

/// Reduced row echelon form with the pivot column of every row.
pub struct Echelon {
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
}

pub fn rref(mut rows: Vec<Vector>, ncols: usize) -> Echelon {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let best = (top..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].size());
        let Some(best) = best else { continue };
        rows.swap(top, best);
        let inv = rows[top][col].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[top].iter_mut().skip(col) {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    Echelon { rows, pivots }
}

pub fn rank(rows: Vec<Vector>, ncols: usize) -> usize {
    rref(rows, ncols).pivots.len()
}

/// Basis of the right kernel of the matrix with the given rows.
pub fn kernel_of_rows(rows: Vec<Vector>, ncols: usize) -> Vec<Vector> {
    let ech = rref(rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![RatFunc::zero(); ncols];
        v[free] = RatFunc::one();
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            v[p] = -&row[free];
        }
        basis.push(v);
    }
    basis
}

pub fn kernel(m: &SparseMatrix) -> Vec<Vector> {
    kernel_of_rows(m.to_dense(), m.cols())
}

/// Basis of the common kernel of maps sharing a domain of dimension `dim`.
pub fn joint_kernel(maps: &[&SparseMatrix], dim: usize) -> Vec<Vector> {
    let mut rows = Vec::new();
    for m in maps {
        assert_eq!(m.cols(), dim, "maps must share the domain");
        rows.extend(m.to_dense().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())));
    }
    kernel_of_rows(rows, dim)
}

/// Incrementally maintained echelon basis used for span membership tests.
#[derive(Default, Clone)]
pub struct IncrementalBasis {
    rows: Vec<(usize, Vector)>,
}

impl IncrementalBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn reduce(&self, mut v: Vector) -> Vector {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x = &*x - &(&f * b);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[RatFunc]) -> bool {
        self.reduce(v.to_vec()).iter().all(RatFunc::is_zero)
    }

    /// Adds `v` if it is independent of the current span; returns whether
    /// the span grew.
    pub fn insert(&mut self, v: &[RatFunc]) -> bool {
        let r = self.reduce(v.to_vec());
        let pivot = (0..r.len())
            .filter(|&i| !r[i].is_zero())
            .min_by_key(|&i| r[i].size());
        let Some(p) = pivot else { return false };
        let inv = r[p].inv().expect("nonzero pivot");
        let r: Vector = r.iter().map(|x| x * &inv).collect();
        self.rows.push((p, r));
        true
    }
}

/// Inverse of a square matrix, or `None` if singular.
pub fn invert(m: &[Vector]) -> Option<Vec<Vector>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let aug: Vec<Vector> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }));
            r
        })
        .collect();
    let ech = rref(aug, 2 * n);
    if ech.pivots.len() < n || ech.pivots[n - 1] >= n {
        return None;
    }
    Some(ech.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(m: &[Vector]) -> RatFunc {
    let n = m.len();
    let mut a: Vec<Vector> = m.to_vec();
    let mut det = RatFunc::one();
    for col in 0..n {
        let Some(p) = (col..n).filter(|&r| !a[r][col].is_zero()).min_by_key(|&r| a[r][col].size())
        else {
            return RatFunc::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det = &det * &piv;
        let inv = piv.inv().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] * &inv;
            let pivot_row = a[col].clone();
            for (x, pv) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                if !pv.is_zero() {
                    *x = &*x - &(&f * pv);
                }
            }
        }
    }
    det
}

/// A left inverse `P` (with `P * B = I`) of a matrix `B` given by linearly
/// independent columns.
pub fn left_inverse(dim: usize, columns: &[Vector]) -> Option<SparseMatrix> {
    let d = columns.len();
    let mut chosen = Vec::new();
    let mut basis = IncrementalBasis::new();
    for r in 0..dim {
        let row: Vector = columns.iter().map(|c| c[r].clone()).collect();
        if basis.insert(&row) {
            chosen.push(r);
            if chosen.len() == d {
                break;
            }
        }
    }
    if chosen.len() < d {
        return None;
    }
    let square: Vec<Vector> = chosen
        .iter()
        .map(|&r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let inv = invert(&square)?;
    Some(SparseMatrix::from_triplets(
        d,
        dim,
        inv.iter().enumerate().flat_map(|(i, row)| {
            let chosen = &chosen;
            row.iter()
                .enumerate()
                .map(move |(k, v)| (i, chosen[k], v.clone()))
        }),
    ))
}

/// Leading principal minors of a rational matrix.
pub fn leading_minors(m: &[Vec<Rational>]) -> Vec<Rational> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<Rational>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
            rational_det(sub)
        })
        .collect()
}

fn rational_det(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det *= &piv;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &piv;
            let pivot_row = a[col].clone();
            for (x, pv) in a[r].iter_mut().zip(&pivot_row) {
                *x -= &f * pv;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let rows = vec![
            vec![r("1"), r("q"), r("q^2")],
            vec![r("q"), r("q^2"), r("q^3")],
        ];
        let m = SparseMatrix::from_dense(&rows, 3);
        let k = kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).iter().all(RatFunc::is_zero));
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let m = vec![vec![r("q"), r("1")], vec![r("1"), r("q^-1 + 1")]];
        let inv = invert(&m).unwrap();
        let a = SparseMatrix::from_dense(&m, 2);
        let b = SparseMatrix::from_dense(&inv, 2);
        assert_eq!(a.mul(&b), SparseMatrix::identity(2));
        assert_eq!(determinant(&m), r("q"));
        assert!(invert(&[vec![r("q"), r("q")], vec![r("1"), r("1")]]).is_none());
    }

    #[test]
    fn left_inverse_recovers_identity() {
        let cols = vec![
            vec![r("1"), r("q"), r("0")],
            vec![r("0"), r("1"), r("q - 1")],
        ];
        let p = left_inverse(3, &cols).unwrap();
        let b = SparseMatrix::from_columns(3, &cols);
        assert_eq!(p.mul(&b), SparseMatrix::identity(2));
    }

    #[test]
    fn incremental_basis_membership() {
        let mut b = IncrementalBasis::new();
        assert!(b.insert(&[r("1"), r("q")]));
        assert!(!b.insert(&[r("q"), r("q^2")]));
        assert!(b.contains(&[r("2"), r("2*q")]));
        assert!(b.insert(&[r("0"), r("1")]));
        assert_eq!(b.len(), 2);
    }
}
