//! Subspaces in reduced row echelon form.

use super::field::Field;
use super::matrix::{collect_sparse, combine, Matrix, SparseVec};

const NO_ROW: usize = usize::MAX;

/// A subspace of `F^ambient`, held as a fully reduced echelon basis.
///
/// Every basis vector has a pivot entry equal to one, and every other basis
/// vector vanishes at that pivot. Basis order is insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    rows: Vec<SparseVec<F>>,
    pivot_row: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivot_row: vec![NO_ROW; ambient] }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Subspace::zero(ambient);
        for i in 0..ambient {
            s.pivot_row[i] = i;
            s.rows.push(vec![(i, F::one())]);
        }
        s
    }

    pub fn spanned_by(ambient: usize, vectors: impl IntoIterator<Item = SparseVec<F>>) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivot_row[i] != NO_ROW
    }

    /// Splits `v` into basis coordinates and the reduced remainder.
    fn split(&self, v: &[(usize, F)]) -> (SparseVec<F>, SparseVec<F>) {
        let mut coords = Vec::new();
        for (i, x) in v {
            let r = self.pivot_row[*i];
            if r != NO_ROW {
                coords.push((r, x.clone()));
            }
        }
        if coords.is_empty() {
            return (coords, v.to_vec());
        }
        let mut acc: Vec<(usize, F)> = v.to_vec();
        for (r, c) in &coords {
            acc.extend(self.rows[*r].iter().map(|(i, y)| (*i, -(c.clone() * y.clone()))));
        }
        (collect_sparse(coords), collect_sparse(acc))
    }

    /// The normal form of `v` modulo the subspace.
    pub fn reduce(&self, v: &[(usize, F)]) -> SparseVec<F> {
        self.split(v).1
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` in the current basis, or `None` if `v` lies outside.
    pub fn coordinates(&self, v: &[(usize, F)]) -> Option<SparseVec<F>> {
        let (coords, rest) = self.split(v);
        rest.is_empty().then_some(coords)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        debug_assert!(v.iter().all(|(i, _)| *i < self.ambient));
        let rest = self.reduce(&v);
        let Some((p, lead)) = rest.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading entry");
        let new_row: SparseVec<F> = rest.iter().map(|(i, x)| (*i, x.clone() * inv.clone())).collect();
        for row in self.rows.iter_mut() {
            if let Ok(k) = row.binary_search_by_key(&p, |e| e.0) {
                let c = row[k].1.clone();
                *row = combine(&F::one(), row, &-c, &new_row);
            }
        }
        // rows only gain entries above their own pivot, so pivots stay leading
        self.pivot_row[p] = self.rows.len();
        self.rows.push(new_row);
        true
    }

    pub fn extend(&mut self, vectors: impl IntoIterator<Item = SparseVec<F>>) -> usize {
        vectors.into_iter().filter(|v| self.insert(v.clone())).count()
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn same_as(&self, other: &Subspace<F>) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }

    pub fn basis_vectors(&self) -> Vec<SparseVec<F>> {
        self.rows.clone()
    }

    /// `{v : <row, v> = 0 for every basis row}`.
    pub fn orthogonal_complement(&self) -> Subspace<F> {
        let mut out = Subspace::zero(self.ambient);
        for f in self.free_indices() {
            let mut v = vec![(f, F::one())];
            for row in &self.rows {
                if let Some((_, x)) = row.iter().find(|(i, _)| *i == f) {
                    v.push((row[0].0, -x.clone()));
                }
            }
            // each vector has a distinct free index and no other free entries
            out.insert(collect_sparse(v));
        }
        out
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut s = self.clone();
        s.extend(other.basis_vectors());
        s
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Subspace<F> {
        self.orthogonal_complement()
            .sum(&other.orthogonal_complement())
            .orthogonal_complement()
    }

    pub fn free_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|&i| self.pivot_row[i] == NO_ROW).collect()
    }

    /// The quotient `F^ambient / self` with its projection and a section.
    pub fn quotient(&self) -> Quotient<F> {
        let free = self.free_indices();
        let mut position = vec![NO_ROW; self.ambient];
        for (k, &f) in free.iter().enumerate() {
            position[f] = k;
        }
        let projection = Matrix::from_fn(free.len(), self.ambient, |j| {
            if position[j] != NO_ROW {
                vec![(position[j], F::one())]
            } else {
                let row = &self.rows[self.pivot_row[j]];
                row[1..].iter().map(|(i, x)| (position[*i], -x.clone())).collect()
            }
        });
        let section = Matrix::from_fn(self.ambient, free.len(), |k| vec![(free[k], F::one())]);
        Quotient { projection, section }
    }

    /// Matrix whose columns are the basis vectors.
    pub fn inclusion(&self) -> Matrix<F> {
        Matrix::from_columns(self.ambient, self.basis_vectors())
    }
}

/// A quotient space given by a projection and a right inverse of it.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    pub projection: Matrix<F>,
    pub section: Matrix<F>,
}

impl<F: Field> Quotient<F> {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    /// `P * op * S`, the operator induced on quotients.
    pub fn induce(&self, op: &Matrix<F>, target: &Quotient<F>) -> Matrix<F> {
        target.projection.mul(&op.mul(&self.section))
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
    fn insert_and_coordinates() {
        let mut s = Subspace::zero(3);
        assert!(s.insert(vec![(0, q(1)), (1, q(2))]));
        assert!(s.insert(vec![(1, q(1)), (2, q(1))]));
        assert!(!s.insert(vec![(0, q(1)), (1, q(3)), (2, q(1))]));
        let v = vec![(0, q(2)), (1, q(5)), (2, q(1))];
        let c = s.coordinates(&v).unwrap();
        let mut back = Vec::new();
        for (k, x) in &c {
            back.push(scale_row(&s.basis_vectors()[*k], x));
        }
        let sum = collect_sparse(back.concat());
        assert_eq!(sum, v);
    }

    fn scale_row(r: &SparseVec<Rational>, x: &Rational) -> SparseVec<Rational> {
        r.iter().map(|(i, y)| (*i, x.clone() * y.clone())).collect()
    }

    #[test]
    fn quotient_kills_subspace() {
        let s = Subspace::spanned_by(3, vec![vec![(0, q(1)), (2, q(-1))]]);
        let qt = s.quotient();
        assert_eq!(qt.dim(), 2);
        assert!(qt.projection.apply(&[(0, q(1)), (2, q(-1))]).is_empty());
        assert!(qt.projection.mul(&qt.section).is_identity());
    }

    #[test]
    fn complement_and_intersection() {
        let a = Subspace::spanned_by(3, vec![vec![(0, q(1))], vec![(1, q(1))]]);
        let b = Subspace::spanned_by(3, vec![vec![(1, q(1))], vec![(2, q(1))]]);
        assert_eq!(a.orthogonal_complement().dim(), 1);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[(1, q(7))]));
    }
}
