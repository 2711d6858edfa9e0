//! Finite cochain complexes and their cohomology with representatives.

use rayon::prelude::*;

use crate::linalg::{Field, Matrix, SparseVec, Subspace};
use crate::report::Report;

/// `d[n]: degree n → degree n + 1` for `n < top`.
#[derive(Clone, Debug)]
pub struct CochainComplex<F: Field> {
    pub dims: Vec<usize>,
    pub d: Vec<Matrix<F>>,
}

/// `H^n` as cocycles modulo coboundaries, with a fixed basis of
/// representatives complementing the coboundaries.
#[derive(Clone, Debug)]
pub struct CohomologyGroup<F: Field> {
    pub degree: usize,
    pub cocycles: Subspace<F>,
    pub coboundaries: Subspace<F>,
    pub representatives: Vec<SparseVec<F>>,
}

impl<F: Field> CohomologyGroup<F> {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_cocycle(&self, v: &[(usize, F)]) -> bool {
        self.cocycles.contains(v)
    }

    pub fn is_coboundary(&self, v: &[(usize, F)]) -> bool {
        self.coboundaries.contains(v)
    }

    /// Coordinates of the class of a cocycle in the representative basis.
    pub fn class_of(&self, v: &[(usize, F)]) -> Option<Vec<F>> {
        if !self.is_cocycle(v) {
            return None;
        }
        let mut s = self.coboundaries.clone();
        let first = s.dim();
        s.extend(self.representatives.iter().cloned());
        let coords = s.coordinates(v)?;
        let mut out = vec![F::zero(); self.dim()];
        for (i, c) in coords {
            if i >= first {
                out[i - first] = c;
            }
        }
        Some(out)
    }

    /// Whether two cocycles define the same class.
    pub fn cohomologous(&self, a: &[(usize, F)], b: &[(usize, F)]) -> bool {
        let diff = crate::linalg::matrix::combine(&F::one(), a, &-F::one(), b);
        self.is_coboundary(&diff)
    }
}

impl<F: Field> CochainComplex<F> {
    pub fn new(dims: Vec<usize>, d: Vec<Matrix<F>>) -> Self {
        assert_eq!(d.len() + 1, dims.len().max(1));
        for (n, m) in d.iter().enumerate() {
            assert_eq!((m.rows(), m.cols()), (dims[n + 1], dims[n]), "differential {n} has wrong shape");
        }
        CochainComplex { dims, d }
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new();
        for n in 1..self.d.len() {
            r.require(self.d[n].mul(&self.d[n - 1]).is_zero(), "d^2 = 0", || format!("degree {}", n - 1));
        }
        r
    }

    fn incoming(&self, n: usize) -> Matrix<F> {
        if n == 0 {
            Matrix::zeros(self.dims[0], 0)
        } else {
            self.d[n - 1].clone()
        }
    }

    /// `dim H^n` for `n < top`, by ranks.
    pub fn cohomology_dim(&self, n: usize) -> usize {
        let out_rank = self.d[n].rank();
        let in_rank = if n == 0 { 0 } else { self.d[n - 1].rank() };
        self.dims[n] - out_rank - in_rank
    }

    /// `dim H^n` for all `n < top`.
    pub fn cohomology_dims(&self, parallel: bool) -> Vec<usize> {
        let ranks: Vec<usize> = if parallel {
            self.d.par_iter().map(|m| m.rank()).collect()
        } else {
            self.d.iter().map(|m| m.rank()).collect()
        };
        (0..self.d.len())
            .map(|n| self.dims[n] - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
            .collect()
    }

    pub fn cohomology(&self, n: usize) -> CohomologyGroup<F> {
        let cocycles = self.d[n].kernel();
        let coboundaries = self.incoming(n).column_space();
        let mut s = coboundaries.clone();
        let mut representatives = Vec::new();
        for v in cocycles.basis() {
            if s.insert(v.clone()) {
                representatives.push(v.clone());
            }
        }
        CohomologyGroup { degree: n, cocycles, coboundaries, representatives }
    }

    /// `d v` for a cochain of degree `n`; zero at the top degree.
    pub fn differential(&self, n: usize, v: &[(usize, F)]) -> SparseVec<F> {
        self.d.get(n).map(|m| m.apply(v)).unwrap_or_default()
    }
}
