//! The cyclic bicomplex `CC(X)` in chain orientation.

use super::complex::CochainComplex;
use super::mixed::{hochschild_b, norm, one_minus_lambda};
use crate::cyclic::ParaCyclicModule;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::report::Report;

/// Column `p` is a copy of `X`; even columns carry `b`, odd ones `-b'`;
/// the horizontal map out of column `p` is `1 - λ` for odd `p` and `N`
/// for even `p ≥ 2`.
#[derive(Clone, Debug)]
pub struct Bicomplex<F: Field> {
    pub dims: Vec<usize>,
    pub width: usize,
    b: Vec<Matrix<F>>,
    minus_b_prime: Vec<Matrix<F>>,
    one_minus_lambda: Vec<Matrix<F>>,
    norm: Vec<Matrix<F>>,
}

impl<F: Field> Bicomplex<F> {
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn space(&self, _p: usize, q: usize) -> usize {
        self.dims[q]
    }

    /// `(p, q) → (p, q - 1)`, for `q ≥ 1`.
    pub fn vertical(&self, p: usize, q: usize) -> &Matrix<F> {
        if p.is_multiple_of(2) {
            &self.b[q]
        } else {
            &self.minus_b_prime[q]
        }
    }

    /// `(p, q) → (p - 1, q)`, for `p ≥ 1`.
    pub fn horizontal(&self, p: usize, q: usize) -> &Matrix<F> {
        if p % 2 == 1 {
            &self.one_minus_lambda[q]
        } else {
            &self.norm[q]
        }
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new();
        for p in 0..2.min(self.width) {
            for q in 2..=self.top() {
                r.require(self.vertical(p, q - 1).mul(self.vertical(p, q)).is_zero(), "vertical^2 = 0", || {
                    format!("column {p}, row {q}")
                });
            }
        }
        for p in 2..self.width.min(4) {
            for q in 0..=self.top() {
                r.require(self.horizontal(p - 1, q).mul(self.horizontal(p, q)).is_zero(), "horizontal^2 = 0", || {
                    format!("column {p}, row {q}")
                });
            }
        }
        for p in 1..self.width.min(3) {
            for q in 1..=self.top() {
                let s = self.vertical(p - 1, q).mul(self.horizontal(p, q)).add(&self.horizontal(p, q - 1).mul(self.vertical(p, q)));
                r.require(s.is_zero(), "horizontal and vertical anticommute", || format!("column {p}, row {q}"));
            }
        }
        r
    }

    fn blocks(&self, n: usize) -> Vec<usize> {
        (0..=n.min(self.width - 1)).map(|p| self.dims[n - p]).collect()
    }

    /// `Tot_n → Tot_{n-1}`; block `p` of `Tot_n` is `(p, n - p)`.
    pub fn total_differential(&self, n: usize) -> Matrix<F> {
        let cols = self.blocks(n);
        let rows = self.blocks(n - 1);
        let mut blocks = Vec::new();
        for p in 0..cols.len() {
            let q = n - p;
            if q >= 1 {
                blocks.push((p, p, self.vertical(p, q)));
            }
            if p >= 1 {
                blocks.push((p - 1, p, self.horizontal(p, q)));
            }
        }
        Matrix::from_blocks(&rows, &cols, &blocks)
    }

    pub fn total_dims(&self) -> Vec<usize> {
        (0..=self.top()).map(|n| self.blocks(n).iter().sum()).collect()
    }

    /// The dual of the total complex.
    pub fn total_cochains(&self) -> CochainComplex<F> {
        let d = (1..=self.top()).map(|n| self.total_differential(n).transpose()).collect();
        CochainComplex::new(self.total_dims(), d)
    }
}

/// The cyclic bicomplex of a cyclic module (cochain modules are dualized
/// first), with `2(N + 1)` columns for top degree `N`.
pub fn cyclic_bicomplex<F: Field>(x: &ParaCyclicModule<F>) -> Result<Bicomplex<F>> {
    if let Some(n) = x.first_non_cyclic_degree() {
        return Err(Error::NotCyclic(format!("{}: tau^(n+1) != id at degree {n}", x.name)));
    }
    let chain = x.as_chain();
    let top = chain.top();
    let zero_rows = Matrix::zeros(0, chain.dims[0]);
    let mut b = vec![zero_rows.clone()];
    let mut minus_b_prime = vec![zero_rows];
    for n in 1..=top {
        b.push(hochschild_b(&chain, n, false));
        minus_b_prime.push(hochschild_b(&chain, n, true).scaled(&-F::one()));
    }
    let bc = Bicomplex {
        dims: chain.dims.clone(),
        width: 2 * (top + 1),
        b,
        minus_b_prime,
        one_minus_lambda: (0..=top).map(|n| one_minus_lambda(&chain, n)).collect(),
        norm: (0..=top).map(|n| norm(&chain, n)).collect(),
    };
    let r = bc.check();
    if !r.is_empty() {
        return Err(Error::IdentityFailure(format!("{}: {}", x.name, r.to_string().trim())));
    }
    Ok(bc)
}
