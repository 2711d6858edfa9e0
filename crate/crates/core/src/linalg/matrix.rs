//! Sparse exact matrices stored column by column.

use std::fmt;

use super::field::Field;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// A sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

/// `a*x + b*y` for sparse vectors.
pub fn combine<F: Field>(a: &F, x: &[(usize, F)], b: &F, y: &[(usize, F)]) -> SparseVec<F> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (idx, val) = if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            let r = (x[i].0, a.clone() * x[i].1.clone());
            i += 1;
            r
        } else if i >= x.len() || y[j].0 < x[i].0 {
            let r = (y[j].0, b.clone() * y[j].1.clone());
            j += 1;
            r
        } else {
            let r = (
                x[i].0,
                a.clone() * x[i].1.clone() + b.clone() * y[j].1.clone(),
            );
            i += 1;
            j += 1;
            r
        };
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    out
}

/// Builds a sparse vector from unsorted, possibly repeated, entries.
pub fn collect_sparse<F: Field>(mut entries: Vec<(usize, F)>) -> SparseVec<F> {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec<F> = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, w)) if *j == i => *w = w.clone() + v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

pub fn scale<F: Field>(a: &F, x: &[(usize, F)]) -> SparseVec<F> {
    if a.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(i, v)| (*i, a.clone() * v.clone())).collect()
}

pub fn dense_to_sparse<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn sparse_to_dense<F: Field>(v: &[(usize, F)], len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Inner product of a sparse covector with a sparse vector.
pub fn dot<F: Field>(x: &[(usize, F)], y: &[(usize, F)]) -> F {
    let (mut i, mut j) = (0, 0);
    let mut acc = F::zero();
    while i < x.len() && j < y.len() {
        match x[i].0.cmp(&y[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc = acc + x[i].1.clone() * y[j].1.clone();
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// A `rows x cols` matrix over `F`, stored as sparse columns.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec<F>>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        if self.rows * self.cols <= 256 {
            for r in 0..self.rows {
                let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
                writeln!(f, "  [{}]", row.join(", "))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, F::one())]).collect(),
        }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec<F>>) -> Self {
        debug_assert!(columns
            .iter()
            .all(|c| c.iter().all(|(i, v)| *i < rows && !v.is_zero())
                && c.windows(2).all(|w| w[0].0 < w[1].0)));
        Matrix { rows, cols: columns.len(), columns }
    }

    pub fn from_dense(rows: usize, cols: usize, entries: &[F]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let columns = (0..cols)
            .map(|c| {
                (0..rows)
                    .filter(|r| !entries[r * cols + c].is_zero())
                    .map(|r| (r, entries[r * cols + c].clone()))
                    .collect()
            })
            .collect();
        Matrix { rows, cols, columns }
    }

    pub fn from_triplets(rows: usize, cols: usize, entries: Vec<(usize, usize, F)>) -> Self {
        let mut per_col: Vec<Vec<(usize, F)>> = vec![Vec::new(); cols];
        for (r, c, v) in entries {
            assert!(r < rows && c < cols, "triplet out of bounds");
            per_col[c].push((r, v));
        }
        Matrix { rows, cols, columns: per_col.into_iter().map(collect_sparse).collect() }
    }

    /// Builds a matrix from the image of every source basis vector.
    pub fn from_fn(rows: usize, cols: usize, mut image: impl FnMut(usize) -> Vec<(usize, F)>) -> Self {
        let columns = (0..cols)
            .map(|c| {
                let col = collect_sparse(image(c));
                debug_assert!(col.iter().all(|(r, _)| *r < rows));
                col
            })
            .collect();
        Matrix { rows, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, c: usize) -> &[(usize, F)] {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec<F>] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.len()).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        match self.columns[c].binary_search_by_key(&r, |e| e.0) {
            Ok(k) => self.columns[c][k].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .columns
                .iter()
                .enumerate()
                .all(|(i, c)| c.len() == 1 && c[0].0 == i && c[0].1.is_one())
    }

    pub fn triplets(&self) -> Vec<(usize, usize, F)> {
        let mut out = Vec::with_capacity(self.nnz());
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out.push((*r, c, v.clone()));
            }
        }
        out.sort_by_key(|t| (t.0, t.1));
        out
    }

    /// Applies the matrix to a sparse vector.
    pub fn apply(&self, v: &[(usize, F)]) -> SparseVec<F> {
        let mut acc: Vec<(usize, F)> = Vec::new();
        for (c, x) in v {
            for (r, a) in &self.columns[*c] {
                acc.push((*r, a.clone() * x.clone()));
            }
        }
        collect_sparse(acc)
    }

    pub fn apply_dense(&self, v: &[F]) -> Vec<F> {
        sparse_to_dense(&self.apply(&dense_to_sparse(v)), self.rows)
    }

    /// `covector * self`, the pullback of a covector on the target.
    pub fn pull_back(&self, covector: &[(usize, F)]) -> SparseVec<F> {
        self.columns
            .iter()
            .enumerate()
            .filter_map(|(c, col)| {
                let v = dot(covector, col);
                (!v.is_zero()).then_some((c, v))
            })
            .collect()
    }

    pub fn try_mul(&self, rhs: &Matrix<F>) -> Result<Matrix<F>> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(self.mul(rhs))
    }

    /// Matrix product `self * rhs`; panics on shape mismatch.
    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let columns = rhs.columns.iter().map(|c| self.apply(c)).collect();
        Matrix { rows: self.rows, cols: rhs.cols, columns }
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        self.lin(&F::one(), rhs, &F::one())
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Matrix<F> {
        self.lin(&F::one(), rhs, &-F::one())
    }

    /// `a*self + b*rhs`.
    pub fn lin(&self, a: &F, rhs: &Matrix<F>, b: &F) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(x, y)| combine(a, x, b, y))
            .collect();
        Matrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn scaled(&self, a: &F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|c| scale(a, c)).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix<F> {
        let mut per_row: Vec<SparseVec<F>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                per_row[*r].push((c, v.clone()));
            }
        }
        Matrix { rows: self.cols, cols: self.rows, columns: per_row }
    }

    pub fn pow(&self, e: usize) -> Matrix<F> {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = self.mul(&acc);
        }
        acc
    }

    /// Kronecker product; basis `(i, j)` of the product is `i * other_dim + j`.
    pub fn kron(&self, rhs: &Matrix<F>) -> Matrix<F> {
        let rows = self.rows * rhs.rows;
        let mut columns = Vec::with_capacity(self.cols * rhs.cols);
        for ca in &self.columns {
            for cb in &rhs.columns {
                let mut col = Vec::with_capacity(ca.len() * cb.len());
                for (ra, va) in ca {
                    for (rb, vb) in cb {
                        col.push((ra * rhs.rows + rb, va.clone() * vb.clone()));
                    }
                }
                columns.push(col);
            }
        }
        Matrix { rows, cols: self.cols * rhs.cols, columns }
    }

    /// Horizontal block concatenation `[self | rhs]`.
    pub fn hcat(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, rhs.rows);
        let mut columns = self.columns.clone();
        columns.extend(rhs.columns.iter().cloned());
        Matrix { rows: self.rows, cols: self.cols + rhs.cols, columns }
    }

    /// Vertical block concatenation.
    pub fn vcat(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.cols);
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.extend(b.iter().map(|(r, v)| (r + self.rows, v.clone())));
                c
            })
            .collect();
        Matrix { rows: self.rows + rhs.rows, cols: self.cols, columns }
    }

    /// Block matrix with block rows of sizes `row_dims` and block columns of
    /// sizes `col_dims`; `blocks` lists `(block_row, block_col, matrix)`,
    /// summing repeated positions.
    pub fn from_blocks(row_dims: &[usize], col_dims: &[usize], blocks: &[(usize, usize, &Matrix<F>)]) -> Matrix<F> {
        let offsets = |d: &[usize]| {
            let mut o = vec![0];
            for x in d {
                o.push(o.last().unwrap() + x);
            }
            o
        };
        let (ro, co) = (offsets(row_dims), offsets(col_dims));
        let mut columns: Vec<Vec<(usize, F)>> = vec![Vec::new(); co[col_dims.len()]];
        for (i, j, m) in blocks {
            assert_eq!((m.rows, m.cols), (row_dims[*i], col_dims[*j]), "block ({i}, {j}) has wrong shape");
            for (c, col) in m.columns.iter().enumerate() {
                columns[co[*j] + c].extend(col.iter().map(|(r, v)| (ro[*i] + r, v.clone())));
            }
        }
        let columns = columns.into_iter().map(collect_sparse).collect();
        Matrix { rows: ro[row_dims.len()], cols: co[col_dims.len()], columns }
    }

    pub fn rank(&self) -> usize {
        // work on whichever side is shorter
        if self.rows < self.cols {
            F::column_rank(&self.transpose().columns, self.cols)
        } else {
            F::column_rank(&self.columns, self.rows)
        }
    }

    pub fn column_space(&self) -> Subspace<F> {
        Subspace::spanned_by(self.rows, self.columns.iter().cloned())
    }

    /// The null space of the matrix as a subspace of the source.
    pub fn kernel(&self) -> Subspace<F> {
        let rows = self.transpose();
        let echelon = Subspace::spanned_by(self.cols, rows.columns);
        echelon.orthogonal_complement()
    }

    /// Exact inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        // eliminate on [A^T | I] row-wise: rows of A^T are columns of A
        let mut aug: Vec<SparseVec<F>> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut v = c.clone();
                v.push((n + i, F::one()));
                v
            })
            .collect();
        let sub = Subspace::spanned_by(2 * n, aug.drain(..));
        if sub.dim() != n || sub.pivots().iter().any(|&p| p >= n) {
            return None;
        }
        // rows are now [I | X] with X = (A^T)^{-1}
        let mut triplets = Vec::new();
        for row in sub.basis() {
            let k = row[0].0;
            for (c, v) in row {
                if *c >= n {
                    triplets.push((k, c - n, v.clone()));
                }
            }
        }
        // X = (A^T)^{-1} = (A^{-1})^T
        Some(Matrix::from_triplets(n, n, triplets).transpose())
    }

    /// Matrix of `self` from `source` into `target`, in their bases.
    pub fn restrict(&self, source: &Subspace<F>, target: &Subspace<F>) -> Result<Matrix<F>> {
        let mut columns = Vec::with_capacity(source.dim());
        for v in source.basis() {
            let image = self.apply(v);
            let coords = target.coordinates(&image).ok_or_else(|| {
                Error::IdentityFailure("operator does not preserve the subspace".into())
            })?;
            columns.push(coords);
        }
        Ok(Matrix::from_columns(target.dim(), columns))
    }

    pub fn to_dense(&self) -> Vec<Vec<F>> {
        let mut out = vec![vec![F::zero(); self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                out[*r][c] = v.clone();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn identity_and_zero_rank() {
        assert_eq!(Matrix::<Rational>::identity(2).rank(), 2);
        assert_eq!(Matrix::<Rational>::zeros(3, 3).rank(), 0);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert_eq!(Matrix::<Rational>::identity(3).kernel().dim(), 0);
        assert_eq!(Matrix::<Rational>::zeros(2, 3).kernel().dim(), 3);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_dense(2, 2, &[q(1), q(2), q(3), q(4)]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let singular = Matrix::from_dense(2, 2, &[q(1), q(2), q(2), q(4)]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn kron_shapes() {
        let a = Matrix::from_dense(1, 2, &[q(1), q(2)]);
        let b = Matrix::from_dense(2, 1, &[q(3), q(5)]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 2));
        assert_eq!(k.get(1, 1), q(10));
    }

    #[test]
    fn restrict_to_invariant_line() {
        let swap = Matrix::from_dense(2, 2, &[q(0), q(1), q(1), q(0)]);
        let diag = Subspace::spanned_by(2, vec![vec![(0, q(1)), (1, q(1))]]);
        let r = swap.restrict(&diag, &diag).unwrap();
        assert!(r.is_identity());
    }
}
