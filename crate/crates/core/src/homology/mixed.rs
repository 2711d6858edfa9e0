//! Mixed complexes `(X, b, B)`, the functor from cyclic modules, and mixed
//! double complexes of linear maps.
//!
//! Everything is stored in chain orientation: `b` lowers and `B` raises the
//! degree. Cohomology is that of the linear dual, so the cochain complexes
//! handed out are built from transposes.

use super::complex::CochainComplex;
use crate::cyclic::ParaCyclicModule;
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Subspace};
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct MixedComplex<F: Field> {
    pub dims: Vec<usize>,
    /// `b[n]: X_n → X_{n-1}`; `b[0]` has no rows.
    pub b: Vec<Matrix<F>>,
    /// `big_b[n]: X_n → X_{n+1}` for `n < top`.
    pub big_b: Vec<Matrix<F>>,
}

impl<F: Field> MixedComplex<F> {
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn check(&self) -> Report {
        let mut r = Report::new();
        let top = self.top();
        for n in 2..=top {
            r.require(self.b[n - 1].mul(&self.b[n]).is_zero(), "b^2 = 0", || format!("degree {n}"));
        }
        for n in 0..top.saturating_sub(1) {
            r.require(self.big_b[n + 1].mul(&self.big_b[n]).is_zero(), "B^2 = 0", || format!("degree {n}"));
        }
        for n in 0..top {
            let mut s = self.b[n + 1].mul(&self.big_b[n]);
            if n >= 1 {
                s = s.add(&self.big_b[n - 1].mul(&self.b[n]));
            }
            r.require(s.is_zero(), "bB + Bb = 0", || format!("degree {n}"));
        }
        r
    }

    /// The dual of `(X, b)`.
    pub fn hochschild_cochains(&self) -> CochainComplex<F> {
        let d = (1..=self.top()).map(|n| self.b[n].transpose()).collect();
        CochainComplex::new(self.dims.clone(), d)
    }

    /// Dimensions of `Tot_n = ⊕_k X_{n-2k}`.
    pub fn total_dims(&self) -> Vec<usize> {
        (0..=self.top()).map(|n| (0..=n / 2).map(|k| self.dims[n - 2 * k]).sum()).collect()
    }

    /// `b + B: Tot_n → Tot_{n-1}` for `1 ≤ n ≤ top`; block `k` of `Tot_n` is `X_{n-2k}`.
    pub fn total_differential(&self, n: usize) -> Matrix<F> {
        let rows: Vec<usize> = (0..=(n - 1) / 2).map(|k| self.dims[n - 1 - 2 * k]).collect();
        let cols: Vec<usize> = (0..=n / 2).map(|k| self.dims[n - 2 * k]).collect();
        let mut blocks: Vec<(usize, usize, &Matrix<F>)> = Vec::new();
        for k in 0..cols.len() {
            let p = n - 2 * k;
            if p >= 1 {
                blocks.push((k, k, &self.b[p]));
            }
            if k >= 1 {
                // B moves X_p into X_{p+1}, one block lower
                blocks.push((k - 1, k, &self.big_b[p]));
            }
        }
        Matrix::from_blocks(&rows, &cols, &blocks)
    }

    /// The dual of the total complex; its cohomology is cyclic cohomology.
    pub fn total_cochains(&self) -> CochainComplex<F> {
        let d = (1..=self.top()).map(|n| self.total_differential(n).transpose()).collect();
        CochainComplex::new(self.total_dims(), d)
    }

    /// The induced mixed complex on `X_n / sub_n`; fails if `b` or `B` does
    /// not preserve the subspaces.
    pub fn quotient(&self, sub: &[Subspace<F>]) -> Result<MixedComplex<F>> {
        let qs: Vec<_> = sub.iter().map(|s| s.quotient()).collect();
        let keep = |m: &Matrix<F>, a: usize, b: usize, what: &str| -> Result<Matrix<F>> {
            if !sub[a].basis().iter().all(|v| sub[b].contains(&m.apply(v))) {
                return Err(Error::IdentityFailure(format!("{what} does not preserve the subcomplex at degree {a}")));
            }
            Ok(qs[a].induce(m, &qs[b]))
        };
        let mut b = vec![Matrix::zeros(0, qs[0].dim())];
        for n in 1..=self.top() {
            b.push(keep(&self.b[n], n, n - 1, "b")?);
        }
        let mut big_b = Vec::new();
        for n in 0..self.top() {
            big_b.push(keep(&self.big_b[n], n, n + 1, "B")?);
        }
        let x = MixedComplex { dims: qs.iter().map(|q| q.dim()).collect(), b, big_b };
        let r = x.check();
        if !r.is_empty() {
            return Err(Error::IdentityFailure(r.to_string()));
        }
        Ok(x)
    }
}

/// `λ_n = (-1)^n τ_n` on the chain form.
fn lambda<F: Field>(x: &ParaCyclicModule<F>, n: usize) -> Matrix<F> {
    if n.is_multiple_of(2) {
        x.cyclic[n].clone()
    } else {
        x.cyclic[n].scaled(&-F::one())
    }
}

/// `N_n = Σ_i λ_n^i`.
pub(crate) fn norm<F: Field>(x: &ParaCyclicModule<F>, n: usize) -> Matrix<F> {
    let l = lambda(x, n);
    let mut acc = Matrix::identity(x.dims[n]);
    let mut p = Matrix::identity(x.dims[n]);
    for _ in 0..n {
        p = p.mul(&l);
        acc = acc.add(&p);
    }
    acc
}

/// `1 - λ_n`.
pub(crate) fn one_minus_lambda<F: Field>(x: &ParaCyclicModule<F>, n: usize) -> Matrix<F> {
    Matrix::identity(x.dims[n]).sub(&lambda(x, n))
}

/// `b = Σ (-1)^i d_i` on the chain form; `prime` drops the last face.
pub(crate) fn hochschild_b<F: Field>(x: &ParaCyclicModule<F>, n: usize, prime: bool) -> Matrix<F> {
    let last = if prime { n - 1 } else { n };
    let mut acc = Matrix::zeros(x.dims[n - 1], x.dims[n]);
    for i in 0..=last {
        let s = if i % 2 == 0 { F::one() } else { -F::one() };
        acc = acc.lin(&F::one(), &x.faces[n][i], &s);
    }
    acc
}

/// `B_n = (1 - λ_{n+1}) t_{n+1} s_n N_n` on the chain form.
pub(crate) fn connes_b<F: Field>(x: &ParaCyclicModule<F>, n: usize) -> Matrix<F> {
    let extra = x.cyclic[n + 1].mul(&x.degens[n][n]);
    one_minus_lambda(x, n + 1).mul(&extra).mul(&norm(x, n))
}

/// The mixed complex of a cyclic module (of either orientation; cochain
/// modules are dualized first).
pub fn mixed_of_cyclic<F: Field>(x: &ParaCyclicModule<F>) -> Result<MixedComplex<F>> {
    if let Some(n) = x.first_non_cyclic_degree() {
        return Err(Error::NotCyclic(format!("{}: tau^(n+1) != id at degree {n}", x.name)));
    }
    let chain = x.as_chain();
    let top = chain.top();
    let mut b = vec![Matrix::zeros(0, chain.dims[0])];
    b.extend((1..=top).map(|n| hochschild_b(&chain, n, false)));
    let big_b = (0..top).map(|n| connes_b(&chain, n)).collect();
    let m = MixedComplex { dims: chain.dims.clone(), b, big_b };
    let r = m.check();
    if !r.is_empty() {
        return Err(Error::IdentityFailure(format!("{}: {}", x.name, r.to_string().trim())));
    }
    Ok(m)
}

/// Checks that chain maps `maps[n]: X_n → Y_n` commute with `b` and `B`.
pub fn check_mixed_morphism<F: Field>(maps: &[Matrix<F>], x: &MixedComplex<F>, y: &MixedComplex<F>) -> Report {
    let mut r = Report::new();
    let top = x.top().min(y.top()).min(maps.len().saturating_sub(1));
    for n in 1..=top {
        r.require(y.b[n].mul(&maps[n]) == maps[n - 1].mul(&x.b[n]), "commutes with b", || format!("degree {n}"));
    }
    for n in 0..top {
        r.require(y.big_b[n].mul(&maps[n]) == maps[n + 1].mul(&x.big_b[n]), "commutes with B", || format!("degree {n}"));
    }
    r
}

/// Images of all degeneracies of the chain form, per degree.
pub fn degenerate_subspaces<F: Field>(x: &ParaCyclicModule<F>) -> Vec<Subspace<F>> {
    let chain = x.as_chain();
    (0..=chain.top())
        .map(|n| {
            let mut s = Subspace::zero(chain.dims[n]);
            if n >= 1 {
                for m in &chain.degens[n - 1] {
                    s.extend(m.columns().iter().cloned());
                }
            }
            s
        })
        .collect()
}

/// The normalized mixed complex: the quotient by degenerate chains.
pub fn normalized_mixed_of_cyclic<F: Field>(x: &ParaCyclicModule<F>) -> Result<MixedComplex<F>> {
    mixed_of_cyclic(x)?.quotient(&degenerate_subspaces(x))
}

/// A mixed double complex in chain orientation: `b_1`, `b_2` lower the
/// first and second degree, `B_1`, `B_2` raise them.
#[derive(Clone, Debug)]
pub struct MixedDoubleComplex<F: Field> {
    /// `dims[p][q]` for `p + q ≤ top`.
    pub dims: Vec<Vec<usize>>,
    pub top: usize,
    pub b1: Vec<Vec<Option<Matrix<F>>>>,
    pub b2: Vec<Vec<Option<Matrix<F>>>>,
    pub big_b1: Vec<Vec<Option<Matrix<F>>>>,
    pub big_b2: Vec<Vec<Option<Matrix<F>>>>,
}

type Grid<F> = Vec<Vec<Option<Matrix<F>>>>;

fn at<F: Field>(g: &Grid<F>, p: usize, q: usize) -> Option<&Matrix<F>> {
    g.get(p).and_then(|r| r.get(q)).and_then(|m| m.as_ref())
}

impl<F: Field> MixedDoubleComplex<F> {
    fn dim(&self, p: usize, q: usize) -> usize {
        self.dims[p][q]
    }

    fn family(&self, f: usize) -> &Grid<F> {
        [&self.b1, &self.b2, &self.big_b1, &self.big_b2][f]
    }

    /// Applies family `f` at `(p, q)`: `None` past the truncation,
    /// `Some(None)` when the map is zero for degree reasons.
    fn apply(&self, f: usize, p: usize, q: usize) -> Option<Option<(&Matrix<F>, usize, usize)>> {
        match f {
            0 if p == 0 => Some(None),
            1 if q == 0 => Some(None),
            2 | 3 if p + q >= self.top => None,
            0 => Some(Some((at(&self.b1, p, q)?, p - 1, q))),
            1 => Some(Some((at(&self.b2, p, q)?, p, q - 1))),
            _ => {
                let (p1, q1) = if f == 2 { (p + 1, q) } else { (p, q + 1) };
                Some(Some((at(self.family(f), p, q)?, p1, q1)))
            }
        }
    }

    /// `second ∘ first` from `(p, q)`, or `Some(None)` if it vanishes.
    fn route(&self, first: usize, second: usize, p: usize, q: usize) -> Option<Option<Matrix<F>>> {
        let Some((a, p1, q1)) = self.apply(first, p, q)? else {
            return Some(None);
        };
        let Some((b, _, _)) = self.apply(second, p1, q1)? else {
            return Some(None);
        };
        Some(Some(b.mul(a)))
    }

    pub fn check(&self) -> Report {
        let names = ["b1", "b2", "B1", "B2"];
        let mut r = Report::new();
        for p in 0..=self.top {
            for q in 0..=self.top - p {
                for x in 0..4 {
                    for y in x..4 {
                        let total = if x == y {
                            self.route(x, x, p, q)
                        } else {
                            match (self.route(x, y, p, q), self.route(y, x, p, q)) {
                                (Some(a), Some(b)) => Some(match (a, b) {
                                    (Some(a), Some(b)) => Some(a.add(&b)),
                                    (a, b) => a.or(b),
                                }),
                                _ => None,
                            }
                        };
                        let Some(Some(m)) = total else { continue };
                        let identity = if x == y {
                            format!("{}^2 = 0", names[x])
                        } else {
                            format!("[{}, {}] = 0", names[x], names[y])
                        };
                        r.require(m.is_zero(), identity, || format!("bidegree ({p}, {q})"));
                    }
                }
            }
        }
        r
    }
}

/// `Hom(X^p, Y_q)` for a cocyclic `X` and cyclic `Y` given by their mixed
/// complexes `x` (of the dual of `X`) and `y`. Row-major vectorization
/// identifies it with `Y_q ⊗ X^*_p`, differentials carry the sign `(-1)^q` on
/// the first factor.
pub fn hom_mixed_double<F: Field>(x: &MixedComplex<F>, y: &MixedComplex<F>) -> MixedDoubleComplex<F> {
    let top = x.top().min(y.top());
    let dims: Vec<Vec<usize>> = (0..=top).map(|p| (0..=top - p).map(|q| x.dims[p] * y.dims[q]).collect()).collect();
    let sign = |q: usize| if q.is_multiple_of(2) { F::one() } else { -F::one() };
    let grid = |f: &dyn Fn(usize, usize) -> Option<Matrix<F>>| -> Grid<F> {
        (0..=top).map(|p| (0..=top - p).map(|q| f(p, q)).collect()).collect()
    };
    let ix = |p: usize| Matrix::<F>::identity(x.dims[p]);
    let iy = |q: usize| Matrix::<F>::identity(y.dims[q]);
    let b1 = grid(&|p, q| (p >= 1).then(|| iy(q).kron(&x.b[p]).scaled(&sign(q))));
    let b2 = grid(&|p, q| (q >= 1).then(|| y.b[q].kron(&ix(p))));
    let big_b1 = grid(&|p, q| (p + q < top).then(|| iy(q).kron(&x.big_b[p]).scaled(&sign(q))));
    let big_b2 = grid(&|p, q| (p + q < top).then(|| y.big_b[q].kron(&ix(p))));
    MixedDoubleComplex { dims, top, b1, b2, big_b1, big_b2 }
}

/// The total mixed complex: `Tot_n = ⊕_{p+q=n} X_{p,q}` (block `p`),
/// `b = b_1 + b_2`, `B = B_1 + B_2`.
pub fn total_mixed<F: Field>(d: &MixedDoubleComplex<F>) -> Result<MixedComplex<F>> {
    let top = d.top;
    let block_dims = |n: usize| (0..=n).map(|p| d.dim(p, n - p)).collect::<Vec<_>>();
    let dims = (0..=top).map(|n| block_dims(n).iter().sum()).collect();
    let mut b = vec![Matrix::zeros(0, d.dim(0, 0))];
    for n in 1..=top {
        let mut blocks = Vec::new();
        for p in 0..=n {
            let q = n - p;
            if let Some(m) = at(&d.b1, p, q) {
                blocks.push((p - 1, p, m));
            }
            if let Some(m) = at(&d.b2, p, q) {
                blocks.push((p, p, m));
            }
        }
        b.push(Matrix::from_blocks(&block_dims(n - 1), &block_dims(n), &blocks));
    }
    let mut big_b = Vec::new();
    for n in 0..top {
        let mut blocks = Vec::new();
        for p in 0..=n {
            let q = n - p;
            if let Some(m) = at(&d.big_b1, p, q) {
                blocks.push((p + 1, p, m));
            }
            if let Some(m) = at(&d.big_b2, p, q) {
                blocks.push((p, p, m));
            }
        }
        big_b.push(Matrix::from_blocks(&block_dims(n + 1), &block_dims(n), &blocks));
    }
    let m = MixedComplex { dims, b, big_b };
    let r = m.check();
    if !r.is_empty() {
        return Err(Error::IdentityFailure(r.to_string()));
    }
    Ok(m)
}
