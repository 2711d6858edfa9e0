//! Linear combinations of basis tensors, manipulated factor by factor.
//!
//! A structure map is an [`Op`]: a matrix together with the factor
//! dimensions of its source and target. Sweedler-notation formulas become
//! sequences of `apply` and `permute` steps on [`Terms`].

use crate::linalg::matrix::SparseVec;
use crate::linalg::{Field, Matrix, TensorShape};

/// A linear map `V_1 ⊗ ... ⊗ V_r → W_1 ⊗ ... ⊗ W_s` between based spaces.
#[derive(Clone, Debug)]
pub struct Op<F: Field> {
    pub matrix: Matrix<F>,
    pub input: Vec<usize>,
    pub output: Vec<usize>,
}

impl<F: Field> Op<F> {
    pub fn new(matrix: Matrix<F>, input: Vec<usize>, output: Vec<usize>) -> Self {
        assert_eq!(matrix.cols(), input.iter().product::<usize>(), "op source dimension");
        assert_eq!(matrix.rows(), output.iter().product::<usize>(), "op target dimension");
        Op { matrix, input, output }
    }

    /// An endomorphism of a single factor.
    pub fn linear(matrix: Matrix<F>) -> Self {
        let (r, c) = (matrix.rows(), matrix.cols());
        Op::new(matrix, vec![c], vec![r])
    }

    /// A covector `V → k`.
    pub fn covector(v: &[F]) -> Self {
        let m = Matrix::from_dense(1, v.len(), v);
        Op::new(m, vec![v.len()], vec![])
    }

    /// A vector `k → V`.
    pub fn vector(v: &[F]) -> Self {
        let m = Matrix::from_dense(v.len(), 1, v);
        Op::new(m, vec![], vec![v.len()])
    }
}

/// A finite linear combination of basis tensors `e_{i_1} ⊗ ... ⊗ e_{i_r}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Terms<F> {
    terms: Vec<(Vec<usize>, F)>,
}

impl<F: Field> Terms<F> {
    pub fn zero() -> Self {
        Terms { terms: Vec::new() }
    }

    pub fn basis(idx: Vec<usize>) -> Self {
        Terms { terms: vec![(idx, F::one())] }
    }

    pub fn from_terms(terms: Vec<(Vec<usize>, F)>) -> Self {
        Terms { terms }.normalized()
    }

    /// The tensor in `shape` with flat coordinates `v`.
    pub fn from_flat(shape: &TensorShape, v: &[(usize, F)]) -> Self {
        Terms { terms: v.iter().map(|(i, x)| (shape.decode(*i), x.clone())).collect() }
    }

    pub fn terms(&self) -> &[(Vec<usize>, F)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.normalized_ref().terms.is_empty()
    }

    fn normalized_ref(&self) -> Terms<F> {
        self.clone().normalized()
    }

    /// Merges equal index tuples, drops zeros and sorts.
    pub fn normalized(mut self) -> Self {
        self.terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Vec<usize>, F)> = Vec::with_capacity(self.terms.len());
        for (idx, v) in self.terms {
            match out.last_mut() {
                Some((j, w)) if *j == idx => *w = w.clone() + v,
                _ => out.push((idx, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        Terms { terms: out }
    }

    /// Replaces the factors `pos .. pos + op.input.len()` by the image under `op`.
    pub fn apply(&self, pos: usize, op: &Op<F>) -> Self {
        let arity = op.input.len();
        let in_shape = TensorShape::new(op.input.clone());
        let out_shape = TensorShape::new(op.output.clone());
        let mut out = Vec::new();
        for (idx, c) in &self.terms {
            assert!(pos + arity <= idx.len(), "op applied past the last factor");
            let flat = in_shape.encode(&idx[pos..pos + arity]);
            for (r, v) in op.matrix.column(flat) {
                let mut j = Vec::with_capacity(idx.len() - arity + op.output.len());
                j.extend_from_slice(&idx[..pos]);
                j.extend(out_shape.decode(*r));
                j.extend_from_slice(&idx[pos + arity..]);
                out.push((j, c.clone() * v.clone()));
            }
        }
        Terms { terms: out }.normalized()
    }

    /// Reorders factors: new factor `k` is old factor `perm[k]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(idx, c)| (perm.iter().map(|&p| idx[p]).collect(), c.clone()))
            .collect();
        Terms { terms }.normalized()
    }

    /// Moves factor `from` to position `to`, shifting the others.
    pub fn move_factor(&self, from: usize, to: usize) -> Self {
        let Some((first, _)) = self.terms.first() else {
            return self.clone();
        };
        let mut perm: Vec<usize> = (0..first.len()).collect();
        let f = perm.remove(from);
        perm.insert(to, f);
        self.permute(&perm)
    }

    pub fn scale(&self, a: &F) -> Self {
        Terms { terms: self.terms.iter().map(|(i, v)| (i.clone(), a.clone() * v.clone())).collect() }
            .normalized()
    }

    pub fn add(&self, other: &Terms<F>) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Terms { terms }.normalized()
    }

    pub fn sub(&self, other: &Terms<F>) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    /// Tensor product of two combinations, factors of `self` first.
    pub fn tensor(&self, other: &Terms<F>) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut j = a.clone();
                j.extend_from_slice(b);
                out.push((j, x.clone() * y.clone()));
            }
        }
        Terms { terms: out }.normalized()
    }

    /// Flat sparse coordinates in `shape`.
    pub fn flatten(&self, shape: &TensorShape) -> SparseVec<F> {
        crate::linalg::matrix::collect_sparse(
            self.terms.iter().map(|(idx, c)| (shape.encode(idx), c.clone())).collect(),
        )
    }

    /// The scalar value of a combination with no factors left.
    pub fn scalar(&self) -> F {
        self.terms
            .iter()
            .filter(|(i, _)| i.is_empty())
            .fold(F::zero(), |acc, (_, v)| acc + v.clone())
    }
}

/// The matrix of the linear map sending every basis tensor of `input` to
/// `f(index)`, expressed in `output`.
pub fn matrix_of<F: Field>(
    input: &TensorShape,
    output: &TensorShape,
    f: impl Fn(Vec<usize>) -> Terms<F>,
) -> Matrix<F> {
    Matrix::from_fn(output.total(), input.total(), |c| f(input.decode(c)).flatten(output))
}

/// Like [`matrix_of`], with columns computed in parallel.
pub fn matrix_of_par<F: Field>(
    input: &TensorShape,
    output: &TensorShape,
    f: impl Fn(Vec<usize>) -> Terms<F> + Sync,
) -> Matrix<F> {
    use rayon::prelude::*;
    let columns: Vec<_> = (0..input.total())
        .into_par_iter()
        .map(|c| f(input.decode(c)).flatten(output))
        .collect();
    Matrix::from_columns(output.total(), columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;

    #[test]
    fn apply_and_permute() {
        let q = Rational::from_i64;
        // swap on a 2-dim space, applied to the middle factor
        let swap = Op::linear(Matrix::from_dense(2, 2, &[q(0), q(1), q(1), q(0)]));
        let t = Terms::basis(vec![0, 0, 1]).apply(1, &swap);
        assert_eq!(t, Terms::basis(vec![0, 1, 1]));
        assert_eq!(t.permute(&[2, 0, 1]), Terms::basis(vec![1, 0, 1]));
        let eps = Op::covector(&[q(1), q(3)]);
        assert_eq!(Terms::basis(vec![1]).apply(0, &eps).scalar(), q(3));
    }
}
