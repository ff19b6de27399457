use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::SparseVec;

/// A sparse matrix stored as sorted rows.
///
/// No stored entry is zero, and entries iterate row-major then by column.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec<T>>,
}

impl<T: fmt::Debug> fmt::Debug for SparseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{}, ", self.nrows, self.ncols)?;
        f.debug_list().entries(self.entries()).finish()?;
        write!(f, ")")
    }
}

fn push_summed<T>(row: &mut SparseVec<T>, col: usize, v: T)
where
    T: Clone + Zero,
{
    match row.last_mut() {
        Some((c, acc)) if *c == col => {
            *acc = acc.clone() + v;
            if acc.is_zero() {
                row.pop();
            }
        }
        _ if !v.is_zero() => row.push((col, v)),
        _ => {}
    }
}

impl<T> SparseMatrix<T> {
    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[SparseVec<T>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<SparseVec<T>> {
        self.rows
    }

    /// Entries `(i, j, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        let r = &self.rows[i];
        r.binary_search_by_key(&j, |(c, _)| *c).ok().map(|k| &r[k].1)
    }

    /// Apply `f` to every stored entry; results that are zero are dropped.
    pub fn map<U: Zero>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows: self
                .rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|(c, v)| (*c, f(v)))
                        .filter(|(_, v)| !v.is_zero())
                        .collect()
                })
                .collect(),
        }
    }
}

impl<T: Clone + Zero> SparseMatrix<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    /// Build from `(row, col, value)` triplets; duplicates are summed and zeros dropped.
    ///
    /// Panics if an index is out of bounds.
    pub fn from_triplets<I>(nrows: usize, ncols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, T)>,
    {
        let mut buckets: Vec<Vec<(usize, T)>> = vec![Vec::new(); nrows];
        for (i, j, v) in triplets {
            assert!(i < nrows && j < ncols, "entry ({i}, {j}) outside {nrows}x{ncols}");
            buckets[i].push((j, v));
        }
        let rows = buckets
            .into_iter()
            .map(|mut b| {
                b.sort_by_key(|(c, _)| *c);
                let mut row = Vec::with_capacity(b.len());
                for (c, v) in b {
                    push_summed(&mut row, c, v);
                }
                row
            })
            .collect();
        SparseMatrix { nrows, ncols, rows }
    }

    /// Build from sparse rows; each row must be sorted with no zero entries.
    pub fn from_rows(ncols: usize, rows: Vec<SparseVec<T>>) -> Self {
        for r in &rows {
            assert!(r.windows(2).all(|w| w[0].0 < w[1].0), "row not sorted");
            assert!(r.iter().all(|(c, v)| *c < ncols && !v.is_zero()));
        }
        SparseMatrix {
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    /// Matrix whose columns are the given sparse vectors.
    pub fn from_columns(nrows: usize, cols: &[SparseVec<T>]) -> Self {
        Self::from_triplets(
            nrows,
            cols.len(),
            cols.iter()
                .enumerate()
                .flat_map(|(j, col)| col.iter().map(move |(i, v)| (*i, j, v.clone()))),
        )
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<SparseVec<T>> = vec![Vec::new(); self.ncols];
        for (i, j, v) in self.entries() {
            rows[j].push((i, v.clone()));
        }
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            rows,
        }
    }

    pub fn column(&self, j: usize) -> SparseVec<T> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                r.binary_search_by_key(&j, |(c, _)| *c)
                    .ok()
                    .map(|k| (i, r[k].1.clone()))
            })
            .collect()
    }

    /// Keep the listed rows and columns, renumbered in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut col_map = vec![usize::MAX; self.ncols];
        for (new, &old) in cols.iter().enumerate() {
            col_map[old] = new;
        }
        let out = rows
            .iter()
            .map(|&i| {
                let mut r: SparseVec<T> = self.rows[i]
                    .iter()
                    .filter(|(c, _)| col_map[*c] != usize::MAX)
                    .map(|(c, v)| (col_map[*c], v.clone()))
                    .collect();
                r.sort_by_key(|(c, _)| *c);
                r
            })
            .collect();
        SparseMatrix {
            nrows: rows.len(),
            ncols: cols.len(),
            rows: out,
        }
    }
}

impl<T: Clone + Zero + One> SparseMatrix<T> {
    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            nrows: n,
            ncols: n,
            rows: (0..n).map(|i| vec![(i, T::one())]).collect(),
        }
    }
}

impl<T> SparseMatrix<T>
where
    T: Clone + Zero + Mul<Output = T> + Send + Sync,
{
    pub fn scale(&self, s: &T) -> Self {
        self.map(|v| s.clone() * v.clone())
    }

    /// Sparse product `self * other`.
    pub fn mul_matrix(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in product");
        let width = other.ncols;
        let rows = self
            .rows
            .par_iter()
            .map(|r| {
                let mut acc: Vec<Option<T>> = vec![None; width];
                let mut touched = Vec::new();
                for (k, a) in r {
                    for (j, b) in &other.rows[*k] {
                        let term = a.clone() * b.clone();
                        match &mut acc[*j] {
                            Some(x) => *x = x.clone() + term,
                            slot @ None => {
                                *slot = Some(term);
                                touched.push(*j);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                touched
                    .into_iter()
                    .filter_map(|j| acc[j].take().filter(|v| !v.is_zero()).map(|v| (j, v)))
                    .collect()
            })
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            ncols: width,
            rows,
        }
    }

    pub fn mul_vec(&self, x: &SparseVec<T>) -> SparseVec<T> {
        let mut dense: Vec<Option<T>> = vec![None; self.ncols];
        for (i, v) in x {
            dense[*i] = Some(v.clone());
        }
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let mut acc = T::zero();
                for (c, a) in r {
                    if let Some(b) = &dense[*c] {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                (!acc.is_zero()).then_some((i, acc))
            })
            .collect()
    }
}

fn merge_rows<T, F>(a: &SparseVec<T>, b: &SparseVec<T>, f: F) -> SparseVec<T>
where
    T: Clone + Zero,
    F: Fn(Option<&T>, Option<&T>) -> T,
{
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ci = a.get(i).map_or(usize::MAX, |e| e.0);
        let cj = b.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, f(Some(&a[i - 1].1), None))
        } else if cj < ci {
            j += 1;
            (cj, f(None, Some(&b[j - 1].1)))
        } else {
            i += 1;
            j += 1;
            (ci, f(Some(&a[i - 1].1), Some(&b[j - 1].1)))
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

impl<T> Add for &SparseMatrix<T>
where
    T: Clone + Zero,
{
    type Output = SparseMatrix<T>;

    fn add(self, rhs: Self) -> SparseMatrix<T> {
        assert_eq!(self.shape(), rhs.shape(), "dimension mismatch in sum");
        let rows = self
            .rows
            .iter()
            .zip(&rhs.rows)
            .map(|(a, b)| {
                merge_rows(a, b, |x, y| match (x, y) {
                    (Some(x), Some(y)) => x.clone() + y.clone(),
                    (Some(x), None) | (None, Some(x)) => x.clone(),
                    (None, None) => T::zero(),
                })
            })
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows,
        }
    }
}

impl<T> Sub for &SparseMatrix<T>
where
    T: Clone + Zero + Neg<Output = T> + Sub<Output = T>,
{
    type Output = SparseMatrix<T>;

    fn sub(self, rhs: Self) -> SparseMatrix<T> {
        assert_eq!(self.shape(), rhs.shape(), "dimension mismatch in difference");
        let rows = self
            .rows
            .iter()
            .zip(&rhs.rows)
            .map(|(a, b)| {
                merge_rows(a, b, |x, y| match (x, y) {
                    (Some(x), Some(y)) => x.clone() - y.clone(),
                    (Some(x), None) => x.clone(),
                    (None, Some(y)) => -y.clone(),
                    (None, None) => T::zero(),
                })
            })
            .collect();
        SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            rows,
        }
    }
}

impl<T> Mul for &SparseMatrix<T>
where
    T: Clone + Zero + Mul<Output = T> + Send + Sync,
{
    type Output = SparseMatrix<T>;

    fn mul(self, rhs: Self) -> SparseMatrix<T> {
        self.mul_matrix(rhs)
    }
}

impl<T> Neg for &SparseMatrix<T>
where
    T: Clone + Zero + Neg<Output = T>,
{
    type Output = SparseMatrix<T>;

    fn neg(self) -> SparseMatrix<T> {
        self.map(|v| -v.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SparseMatrix<i64> {
        let ncols = rows.first().map_or(0, |r| r.len());
        SparseMatrix::from_triplets(
            rows.len(),
            ncols,
            rows.iter()
                .enumerate()
                .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (i, j, *v))),
        )
    }

    #[test]
    fn triplets_are_summed_and_zeros_dropped() {
        let a = SparseMatrix::from_triplets(2, 2, [(0, 1, 3), (0, 1, -3), (1, 0, 2), (1, 0, 5)]);
        assert_eq!(a.nnz(), 1);
        assert_eq!(a.get(1, 0), Some(&7));
        assert_eq!(a.get(0, 1), None);
    }

    #[test]
    fn product_transpose_and_sum() {
        let a = m(&[&[1, 2, 0], &[0, 1, -1]]);
        let b = m(&[&[1, 0], &[0, 1], &[2, 3]]);
        assert_eq!(&a * &b, m(&[&[1, 2], &[-2, -2]]));
        assert_eq!(a.transpose().transpose(), a);
        assert!((&a - &a).is_zero());
        assert_eq!(&a + &a, a.scale(&2));
        assert_eq!(a.mul_vec(&vec![(0, 1), (2, 1)]), vec![(0, 1), (1, -1)]);
    }

    #[test]
    fn submatrix_renumbers() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(a.submatrix(&[2, 0], &[2, 1]), m(&[&[9, 8], &[3, 2]]));
        assert_eq!(a.column(1), vec![(0, 2), (1, 5), (2, 8)]);
    }
}
