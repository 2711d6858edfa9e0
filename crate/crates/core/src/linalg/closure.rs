//! Smallest graded subspace containing given seeds and stable under a set of
//! graded linear operators.

use rayon::prelude::*;

use super::field::Field;
use super::matrix::{Matrix, SparseVec};
use super::subspace::Subspace;

/// A linear operator from degree `from` to degree `to`.
#[derive(Clone, Debug)]
pub struct GradedOperator<F: Field> {
    pub from: usize,
    pub to: usize,
    pub matrix: Matrix<F>,
}

/// Graded vector spaces with an operator family acting between degrees.
#[derive(Clone, Debug)]
pub struct GradedOperatorSystem<F: Field> {
    dims: Vec<usize>,
    operators: Vec<GradedOperator<F>>,
}

impl<F: Field> GradedOperatorSystem<F> {
    pub fn new(dims: Vec<usize>) -> Self {
        GradedOperatorSystem { dims, operators: Vec::new() }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn operators(&self) -> &[GradedOperator<F>] {
        &self.operators
    }

    pub fn add(&mut self, from: usize, to: usize, matrix: Matrix<F>) {
        assert!(from < self.dims.len() && to < self.dims.len());
        assert_eq!(matrix.cols(), self.dims[from], "operator source dimension");
        assert_eq!(matrix.rows(), self.dims[to], "operator target dimension");
        self.operators.push(GradedOperator { from, to, matrix });
    }

    /// Closes `seeds` (one list per degree) under every operator.
    pub fn closure(&self, seeds: Vec<Vec<SparseVec<F>>>, parallel: bool) -> Vec<Subspace<F>> {
        assert_eq!(seeds.len(), self.dims.len());
        let mut spaces: Vec<Subspace<F>> = self.dims.iter().map(|&d| Subspace::zero(d)).collect();
        let mut pending: Vec<Vec<SparseVec<F>>> = vec![Vec::new(); self.dims.len()];
        for (deg, list) in seeds.into_iter().enumerate() {
            for v in list {
                if spaces[deg].insert(v.clone()) {
                    pending[deg].push(v);
                }
            }
        }
        while pending.iter().any(|p| !p.is_empty()) {
            let batch = std::mem::replace(&mut pending, vec![Vec::new(); self.dims.len()]);
            let images: Vec<(usize, SparseVec<F>)> = if parallel {
                self.operators
                    .par_iter()
                    .flat_map_iter(|op| {
                        batch[op.from].iter().map(move |v| (op.to, op.matrix.apply(v)))
                    })
                    .collect()
            } else {
                self.operators
                    .iter()
                    .flat_map(|op| batch[op.from].iter().map(move |v| (op.to, op.matrix.apply(v))))
                    .collect()
            };
            for (deg, w) in images {
                if !w.is_empty() && spaces[deg].insert(w.clone()) {
                    pending[deg].push(w);
                }
            }
        }
        spaces
    }

    /// Whether every operator maps `spaces[from]` into `spaces[to]`.
    pub fn is_invariant(&self, spaces: &[Subspace<F>]) -> bool {
        self.operators.iter().all(|op| {
            spaces[op.from]
                .basis()
                .iter()
                .all(|v| spaces[op.to].contains(&op.matrix.apply(v)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::Rational;

    #[test]
    fn shift_operator_closure() {
        let q = Rational::from_i64;
        let shift = Matrix::from_fn(3, 3, |c| if c + 1 < 3 { vec![(c + 1, q(1))] } else { vec![] });
        let mut sys = GradedOperatorSystem::new(vec![3]);
        sys.add(0, 0, shift);
        let spaces = sys.closure(vec![vec![vec![(1, q(1))]]], false);
        assert_eq!(spaces[0].dim(), 2);
        assert!(sys.is_invariant(&spaces));
        let again = sys.closure(vec![spaces[0].basis_vectors()], true);
        assert!(again[0].same_as(&spaces[0]));
    }
}
