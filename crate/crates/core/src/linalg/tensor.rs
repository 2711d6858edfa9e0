//! Mixed-radix indexing for tensor products of based spaces.

use super::field::Field;
use super::matrix::{collect_sparse, SparseVec};

/// Shape of `V_0 ⊗ ... ⊗ V_k`; the last factor varies fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorShape {
    dims: Vec<usize>,
}

impl TensorShape {
    pub fn new(dims: Vec<usize>) -> Self {
        TensorShape { dims }
    }

    /// `d` copies of a factor of dimension `base`, then one of dimension `last`.
    pub fn power_with(base: usize, copies: usize, last: usize) -> Self {
        let mut dims = vec![base; copies];
        dims.push(last);
        TensorShape { dims }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn factors(&self) -> usize {
        self.dims.len()
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn encode(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        idx.iter().zip(&self.dims).fold(0, |acc, (i, d)| {
            debug_assert!(i < d);
            acc * d + i
        })
    }

    pub fn decode(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            out[k] = flat % self.dims[k];
            flat /= self.dims[k];
        }
        out
    }

    /// Iterates all multi-indices in flat order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.total()).map(move |f| self.decode(f))
    }
}

/// The tensor product of sparse vectors, one per factor of `shape`.
pub fn tensor_vectors<F: Field>(shape: &TensorShape, parts: &[SparseVec<F>]) -> SparseVec<F> {
    assert_eq!(parts.len(), shape.factors());
    let mut acc: Vec<(Vec<usize>, F)> = vec![(Vec::new(), F::one())];
    for part in parts {
        let mut next = Vec::with_capacity(acc.len() * part.len());
        for (idx, c) in &acc {
            for (i, x) in part {
                let mut j = idx.clone();
                j.push(*i);
                next.push((j, c.clone() * x.clone()));
            }
        }
        acc = next;
        if acc.is_empty() {
            return Vec::new();
        }
    }
    collect_sparse(acc.into_iter().map(|(idx, c)| (shape.encode(&idx), c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::Rational;

    #[test]
    fn encode_decode_roundtrip() {
        let s = TensorShape::new(vec![2, 3, 4]);
        for f in 0..s.total() {
            assert_eq!(s.encode(&s.decode(f)), f);
        }
        assert_eq!(s.encode(&[1, 0, 0]), 12);
    }

    #[test]
    fn tensor_of_units() {
        let s = TensorShape::new(vec![2, 2]);
        let one = Rational::from_i64(1);
        let v = tensor_vectors(&s, &[vec![(1, one.clone())], vec![(0, one.clone())]]);
        assert_eq!(v, vec![(2, one)]);
    }
}
