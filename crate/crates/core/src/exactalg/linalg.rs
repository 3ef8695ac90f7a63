//! Exact linear algebra on sparse rows.
//!
//! A [`SpanBasis`] keeps a subspace of `K^n` in fully reduced row echelon
//! form. The pivot of a row is its least column; pivot entries are 1 and
//! every other row is zero in that column.

use super::scalar::Scalar;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Sorted `(column, value)` pairs with nonzero values.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

pub fn dense_from_sparse(v: &SparseVec, n: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); n];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

pub fn sparse_dot(a: &SparseVec, b: &SparseVec) -> Scalar {
    let (mut i, mut j) = (0, 0);
    let mut s = Scalar::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                s += &a[i].1 * &b[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    s
}

fn entry(v: &SparseVec, col: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&col, |e| e.0).ok().map(|k| &v[k].1)
}

/// `a - c * b`.
fn axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(c * &b[j].1)));
            j += 1;
        } else {
            let v = &a[i].1 - c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct SpanBasis {
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl SpanBasis {
    pub fn new(ncols: usize) -> Self {
        SpanBasis { ncols, rows: BTreeMap::new() }
    }

    pub fn from_rows(ncols: usize, rows: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut s = Self::new(ncols);
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in increasing pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn row_with_pivot(&self, p: usize) -> Option<&SparseVec> {
        self.rows.get(&p)
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.rows.contains_key(&c)
    }

    /// Number of pivots in columns `< c`, i.e. the rank of the projection
    /// onto the first `c` coordinates.
    pub fn pivots_below(&self, c: usize) -> usize {
        self.rows.range(..c).count()
    }

    /// Remainder of `v` modulo the span; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(&SparseVec, &Scalar)> =
            v.iter().filter_map(|(c, a)| self.rows.get(c).map(|r| (r, a))).collect();
        if hits.is_empty() {
            return v.clone();
        }
        if hits.len() == 1 {
            return axpy(v, hits[0].1, hits[0].0);
        }
        let mut acc: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        for (row, a) in hits {
            for (col, val) in row {
                let e = acc.entry(*col).or_insert_with(Scalar::zero);
                *e -= a * val;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        debug_assert!(v.iter().all(|(c, _)| *c < self.ncols));
        let r = self.reduce(&v);
        if r.is_empty() {
            return false;
        }
        let (p, lead) = (r[0].0, r[0].1.clone());
        let r: SparseVec = if lead.is_one() {
            r
        } else {
            let inv = Scalar::one() / lead;
            r.into_iter().map(|(c, x)| (c, x * &inv)).collect()
        };
        for row in self.rows.values_mut() {
            if let Some(c) = entry(row, p).cloned() {
                *row = axpy(row, &c, &r);
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn is_subspace_of(&self, other: &SpanBasis) -> bool {
        self.rows().all(|r| other.contains(r))
    }

    pub fn same_span(&self, other: &SpanBasis) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    pub fn sum(&self, other: &SpanBasis) -> SpanBasis {
        let mut s = self.clone();
        for r in other.rows() {
            s.insert(r.clone());
        }
        s
    }

    /// Orthogonal complement under the standard dot product.
    pub fn complement(&self) -> SpanBasis {
        let mut cols: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        for (&p, row) in &self.rows {
            for (c, v) in row.iter().skip(1) {
                cols.entry(*c).or_default().push((p, -v.clone()));
            }
        }
        let mut out = SpanBasis::new(self.ncols);
        for c in 0..self.ncols {
            if self.rows.contains_key(&c) {
                continue;
            }
            let mut v = cols.remove(&c).unwrap_or_default();
            v.push((c, Scalar::one()));
            v.sort_by_key(|e| e.0);
            out.insert(v);
        }
        out
    }

    /// Intersection via the Zassenhaus block construction.
    pub fn intersect(&self, other: &SpanBasis) -> SpanBasis {
        assert_eq!(self.ncols, other.ncols);
        let n = self.ncols;
        let mut z = SpanBasis::new(2 * n);
        for r in self.rows() {
            let mut v = r.clone();
            v.extend(r.iter().map(|(c, x)| (c + n, x.clone())));
            z.insert(v);
        }
        for r in other.rows() {
            z.insert(r.clone());
        }
        SpanBasis::from_rows(
            n,
            z.rows.range(n..).map(|(_, r)| r.iter().map(|(c, x)| (c - n, x.clone())).collect()),
        )
    }
}

/// Dense reduced row echelon form; zero rows dropped.
pub fn rref(rows: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = rows.first().map_or(0, Vec::len);
    let s = SpanBasis::from_rows(n, rows.iter().map(|r| sparse_from_dense(r)));
    s.rows().map(|r| dense_from_sparse(r, n)).collect()
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    rref(rows).len()
}

/// Basis of `{v : A v = 0}` for the `ncols`-column matrix `A`.
pub fn kernel_basis(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let s = SpanBasis::from_rows(ncols, rows.iter().map(|r| sparse_from_dense(r)));
    s.complement().rows().map(|r| dense_from_sparse(r, ncols)).collect()
}

pub fn span_intersect(a: &[Vec<Scalar>], b: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let sa = SpanBasis::from_rows(ncols, a.iter().map(|r| sparse_from_dense(r)));
    let sb = SpanBasis::from_rows(ncols, b.iter().map(|r| sparse_from_dense(r)));
    sa.intersect(&sb).rows().map(|r| dense_from_sparse(r, ncols)).collect()
}

pub fn span_contains(rows: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let s = SpanBasis::from_rows(v.len(), rows.iter().map(|r| sparse_from_dense(r)));
    s.contains(&sparse_from_dense(v))
}

pub fn determinant(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Scalar::zero();
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
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

pub fn inverse(m: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = m.len();
    let aug: Vec<Vec<Scalar>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            v
        })
        .collect();
    let red = rref(&aug);
    if red.len() < n || (0..n).any(|i| !red[i][i].is_one()) {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::{int, ratio};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rref_shape() {
        let a = m(&[&[2, 4, 6], &[1, 2, 4], &[3, 6, 10]]);
        let r = rref(&a);
        assert_eq!(r, m(&[&[1, 2, 0], &[0, 0, 1]]));
        assert_eq!(rref(&r), r);
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let k = kernel_basis(&a, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            for r in &a {
                let s: Scalar = r.iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn intersection_dimension() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = m(&[&[0, 1, 0], &[0, 0, 1]]);
        let i = span_intersect(&a, &b, 3);
        assert_eq!(i, m(&[&[0, 1, 0]]));
        assert!(span_contains(&a, &[int(3), int(-1), int(0)]));
        assert!(!span_contains(&a, &[int(0), int(0), int(1)]));
    }

    #[test]
    fn det_and_inverse() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(determinant(&a), int(1));
        assert_eq!(inverse(&a).unwrap(), m(&[&[4, -1], &[-7, 2]]));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
        let b = vec![vec![ratio(1, 2), int(0)], vec![int(0), int(3)]];
        assert_eq!(determinant(&b), ratio(3, 2));
    }

    #[test]
    fn prefix_rank() {
        let s = SpanBasis::from_rows(4, [vec![(1, int(1)), (3, int(1))], vec![(3, int(2))]]);
        assert_eq!(s.pivots_below(2), 1);
        assert_eq!(s.pivots_below(4), 2);
    }
}
