//! Truncated para-(co)cyclic modules as families of matrices.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebraData;
use crate::linalg::{Field, Matrix};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Faces lower the degree (a cyclic module).
    Chain,
    /// Faces raise the degree (a cocyclic module).
    Cochain,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Chain => Orientation::Cochain,
            Orientation::Cochain => Orientation::Chain,
        }
    }
}

/// A para-(co)cyclic module on degrees `0..=top`.
///
/// `faces[n][j]` connects degrees `n` and `n - 1` (`n ≥ 1`, `j ≤ n`) and
/// `degens[n][i]` connects degrees `n` and `n + 1` (`n < top`, `i ≤ n`),
/// in the direction given by the orientation.
#[derive(Clone, Debug)]
pub struct ParaCyclicModule<F: Field> {
    pub name: String,
    pub orientation: Orientation,
    /// Degrees ≤ `truncation` are the ones results are reported for.
    pub truncation: usize,
    pub dims: Vec<usize>,
    pub faces: Vec<Vec<Matrix<F>>>,
    pub degens: Vec<Vec<Matrix<F>>>,
    pub cyclic: Vec<Matrix<F>>,
    pub cyclic_inv: Vec<Matrix<F>>,
    /// `h_action[n][h]` is `L_h` on degree `n` for basis element `h`.
    pub h_action: Option<Vec<Vec<Matrix<F>>>>,
    pub hopf: Option<HopfAlgebraData<F>>,
}

/// The operator generators from which the whole structure is conjugated.
pub struct Generators<F: Field> {
    pub first_face: Vec<Option<Matrix<F>>>,
    pub first_degen: Vec<Option<Matrix<F>>>,
    pub cyclic: Vec<Matrix<F>>,
    pub cyclic_inv: Vec<Matrix<F>>,
}

impl<F: Field> ParaCyclicModule<F> {
    /// Conjugates `∂_0`, `σ_0` by the cyclic operator to get all faces and
    /// degeneracies: `∂_j = τ ∂_{j-1} τ^{-1}` for chains and
    /// `∂_j = τ^{-1} ∂_{j-1} τ` for cochains, likewise for `σ_j`.
    pub fn from_generators(
        name: impl Into<String>,
        orientation: Orientation,
        truncation: usize,
        dims: Vec<usize>,
        g: Generators<F>,
    ) -> Self {
        let top = dims.len() - 1;
        let mut faces = vec![Vec::new(); top + 1];
        let mut degens = vec![Vec::new(); top + 1];
        let conj = |prev: &Matrix<F>, from: usize, to: usize| -> Matrix<F> {
            match orientation {
                Orientation::Chain => g.cyclic[to].mul(prev).mul(&g.cyclic_inv[from]),
                Orientation::Cochain => g.cyclic_inv[to].mul(prev).mul(&g.cyclic[from]),
            }
        };
        for n in 1..=top {
            let d0 = g.first_face[n].clone().expect("first face");
            let (from, to) = face_degrees(orientation, n);
            let mut fs = vec![d0];
            for j in 1..=n {
                let next = conj(&fs[j - 1], from, to);
                fs.push(next);
            }
            faces[n] = fs;
        }
        for n in 0..top {
            let s0 = g.first_degen[n].clone().expect("first degeneracy");
            let (from, to) = degen_degrees(orientation, n);
            let mut ss = vec![s0];
            for i in 1..=n {
                let next = conj(&ss[i - 1], from, to);
                ss.push(next);
            }
            degens[n] = ss;
        }
        ParaCyclicModule {
            name: name.into(),
            orientation,
            truncation,
            dims,
            faces,
            degens,
            cyclic: g.cyclic,
            cyclic_inv: g.cyclic_inv,
            h_action: None,
            hopf: None,
        }
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn is_chain(&self) -> bool {
        self.orientation == Orientation::Chain
    }

    pub fn face(&self, n: usize, j: usize) -> &Matrix<F> {
        &self.faces[n][j]
    }

    pub fn degen(&self, n: usize, i: usize) -> &Matrix<F> {
        &self.degens[n][i]
    }

    /// `(source, target)` degrees of `faces[n][*]`.
    pub fn face_degrees(&self, n: usize) -> (usize, usize) {
        face_degrees(self.orientation, n)
    }

    /// `(source, target)` degrees of `degens[n][*]`.
    pub fn degen_degrees(&self, n: usize) -> (usize, usize) {
        degen_degrees(self.orientation, n)
    }

    /// Restriction to degrees `0..=top`.
    pub fn truncated(&self, top: usize) -> Self {
        assert!(top <= self.top());
        ParaCyclicModule {
            name: self.name.clone(),
            orientation: self.orientation,
            truncation: self.truncation.min(top),
            dims: self.dims[..=top].to_vec(),
            faces: self.faces[..=top].to_vec(),
            degens: {
                let mut d = self.degens[..=top].to_vec();
                d[top] = Vec::new();
                d
            },
            cyclic: self.cyclic[..=top].to_vec(),
            cyclic_inv: self.cyclic_inv[..=top].to_vec(),
            h_action: self.h_action.as_ref().map(|h| h[..=top].to_vec()),
            hopf: self.hopf.clone(),
        }
    }

    /// The degreewise linear dual, with transposed operators and flipped
    /// orientation.
    pub fn linear_dual(&self) -> Self {
        let t = |v: &Vec<Matrix<F>>| v.iter().map(|m| m.transpose()).collect::<Vec<_>>();
        ParaCyclicModule {
            name: format!("{}*", self.name),
            orientation: self.orientation.flipped(),
            truncation: self.truncation,
            dims: self.dims.clone(),
            faces: self.faces.iter().map(t).collect(),
            degens: self.degens.iter().map(t).collect(),
            cyclic: t(&self.cyclic),
            cyclic_inv: t(&self.cyclic_inv),
            h_action: self.h_action.as_ref().map(|h| h.iter().map(t).collect()),
            hopf: self.hopf.clone(),
        }
    }

    /// The chain-oriented module with the same identities: itself, or the
    /// transpose of a cochain module.
    pub fn as_chain(&self) -> std::borrow::Cow<'_, Self> {
        match self.orientation {
            Orientation::Chain => std::borrow::Cow::Borrowed(self),
            Orientation::Cochain => std::borrow::Cow::Owned(self.linear_dual()),
        }
    }

    /// `τ_n^{n+1} = id` in every degree `n ≤ upto`.
    pub fn is_cyclic_upto(&self, upto: usize) -> bool {
        (0..=upto.min(self.top())).all(|n| self.cyclic[n].pow(n + 1).is_identity())
    }

    pub fn is_cyclic(&self) -> bool {
        self.is_cyclic_upto(self.top())
    }

    /// First degree where `τ_n^{n+1} ≠ id`.
    pub fn first_non_cyclic_degree(&self) -> Option<usize> {
        (0..=self.top()).find(|&n| !self.cyclic[n].pow(n + 1).is_identity())
    }

    /// Replaces `τ_n`, recomputing the inverse.
    pub fn set_cyclic(&mut self, n: usize, m: Matrix<F>) -> Result<()> {
        let inv = m
            .inverse()
            .ok_or_else(|| Error::InvertibilityFailure(format!("{} degree {n}", self.name)))?;
        self.cyclic[n] = m;
        self.cyclic_inv[n] = inv;
        Ok(())
    }

    /// Every simplicial and cyclic identity on degrees `0..=top`, plus
    /// H-linearity of faces and degeneracies when an action is present.
    pub fn check_axioms(&self, parallel: bool) -> Report {
        let chain = self.as_chain();
        let x: &ParaCyclicModule<F> = &chain;
        let degrees: Vec<usize> = (0..=x.top()).collect();
        let per_degree = |n: usize| check_degree(x, n);
        let reports: Vec<Report> = if parallel {
            degrees.par_iter().map(|&n| per_degree(n)).collect()
        } else {
            degrees.iter().map(|&n| per_degree(n)).collect()
        };
        let mut r = Report::new();
        for rep in reports {
            r.merge(rep);
        }
        if let Some(h) = &x.h_action {
            for n in 1..=x.top() {
                for (hi, _) in h[n].iter().enumerate() {
                    for j in 0..=n {
                        r.require(
                            x.faces[n][j].mul(&h[n][hi]) == h[n - 1][hi].mul(&x.faces[n][j]),
                            "face is H-linear",
                            || format!("degree {n}, face {j}, h = e{hi}"),
                        );
                    }
                }
            }
            for n in 0..x.top() {
                for hi in 0..h[n].len() {
                    for i in 0..=n {
                        r.require(
                            x.degens[n][i].mul(&h[n][hi]) == h[n + 1][hi].mul(&x.degens[n][i]),
                            "degeneracy is H-linear",
                            || format!("degree {n}, degeneracy {i}, h = e{hi}"),
                        );
                    }
                }
            }
        }
        r
    }

    /// Per-degree dimensions up to the reported truncation.
    pub fn reported_dims(&self) -> Vec<usize> {
        self.dims[..=self.truncation.min(self.top())].to_vec()
    }
}

pub fn face_degrees(o: Orientation, n: usize) -> (usize, usize) {
    match o {
        Orientation::Chain => (n, n - 1),
        Orientation::Cochain => (n - 1, n),
    }
}

pub fn degen_degrees(o: Orientation, n: usize) -> (usize, usize) {
    match o {
        Orientation::Chain => (n, n + 1),
        Orientation::Cochain => (n + 1, n),
    }
}

/// Identities whose source is degree `n` of a chain-oriented module.
fn check_degree<F: Field>(x: &ParaCyclicModule<F>, n: usize) -> Report {
    let mut r = Report::new();
    let top = x.top();
    let d = |m: usize, i: usize| &x.faces[m][i];
    let s = |m: usize, i: usize| &x.degens[m][i];
    let t = |m: usize| &x.cyclic[m];
    let id = Matrix::<F>::identity(x.dims[n]);
    r.require(
        t(n).mul(&x.cyclic_inv[n]).is_identity() && x.cyclic_inv[n].mul(t(n)).is_identity(),
        "invertibility",
        || format!("degree {n}"),
    );
    if n >= 2 {
        for j in 1..=n {
            for i in 0..j {
                r.require(d(n - 1, i).mul(d(n, j)) == d(n - 1, j - 1).mul(d(n, i)), "d_i d_j = d_{j-1} d_i", || {
                    format!("degree {n}, i = {i}, j = {j}")
                });
            }
        }
    }
    if n + 2 <= top {
        for j in 0..=n {
            for i in 0..=j {
                r.require(s(n + 1, i).mul(s(n, j)) == s(n + 1, j + 1).mul(s(n, i)), "s_i s_j = s_{j+1} s_i", || {
                    format!("degree {n}, i = {i}, j = {j}")
                });
            }
        }
    }
    if n < top {
        // d_i s_j on degree n, both faces from degree n + 1
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = d(n + 1, i).mul(s(n, j));
                let ok = if i < j {
                    lhs == s(n - 1, j - 1).mul(d(n, i))
                } else if i == j || i == j + 1 {
                    lhs == id
                } else {
                    lhs == s(n - 1, j).mul(d(n, i - 1))
                };
                r.require(ok, "d_i s_j", || format!("degree {n}, i = {i}, j = {j}"));
            }
        }
    }
    if n >= 1 {
        for i in 1..=n {
            r.require(d(n, i).mul(t(n)) == t(n - 1).mul(d(n, i - 1)), "d_i t = t d_{i-1}", || {
                format!("degree {n}, i = {i}")
            });
        }
        r.require(d(n, 0).mul(t(n)) == *d(n, n), "d_0 t = d_n", || format!("degree {n}"));
    }
    if n < top {
        for i in 1..=n {
            r.require(s(n, i).mul(t(n)) == t(n + 1).mul(s(n, i - 1)), "s_i t = t s_{i-1}", || {
                format!("degree {n}, i = {i}")
            });
        }
        r.require(s(n, 0).mul(t(n)) == t(n + 1).pow(2).mul(s(n, n)), "s_0 t = t^2 s_n", || {
            format!("degree {n}")
        });
    }
    r
}

/// A degreewise family of matrices between two modules of equal orientation.
#[derive(Clone, Debug)]
pub struct ModuleMorphism<F: Field> {
    pub name: String,
    pub maps: Vec<Matrix<F>>,
}

impl<F: Field> ModuleMorphism<F> {
    pub fn identity(x: &ParaCyclicModule<F>) -> Self {
        ModuleMorphism {
            name: "id".into(),
            maps: x.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    /// Commutation with every face, degeneracy and cyclic operator on
    /// degrees `0..=upto`.
    pub fn check(&self, source: &ParaCyclicModule<F>, target: &ParaCyclicModule<F>, upto: usize) -> Result<Report> {
        if source.orientation != target.orientation {
            return Err(Error::ShapeMismatch("morphism between modules of opposite orientation".into()));
        }
        let top = upto.min(source.top()).min(target.top()).min(self.maps.len() - 1);
        let mut r = Report::new();
        for n in 0..=top {
            let f = &self.maps[n];
            if f.cols() != source.dims[n] || f.rows() != target.dims[n] {
                return Err(Error::ShapeMismatch(format!("{} degree {n}", self.name)));
            }
            r.require(f.mul(&source.cyclic[n]) == target.cyclic[n].mul(f), "commutes with tau", || {
                format!("degree {n}")
            });
        }
        for n in 1..=top {
            let (a, b) = source.face_degrees(n);
            for j in 0..=n {
                r.require(
                    self.maps[b].mul(&source.faces[n][j]) == target.faces[n][j].mul(&self.maps[a]),
                    "commutes with faces",
                    || format!("degree {n}, face {j}"),
                );
            }
        }
        for n in 0..top {
            let (a, b) = source.degen_degrees(n);
            for i in 0..=n {
                r.require(
                    self.maps[b].mul(&source.degens[n][i]) == target.degens[n][i].mul(&self.maps[a]),
                    "commutes with degeneracies",
                    || format!("degree {n}, degeneracy {i}"),
                );
            }
        }
        Ok(r)
    }

    pub fn compose(&self, after: &ModuleMorphism<F>) -> ModuleMorphism<F> {
        ModuleMorphism {
            name: format!("{} . {}", after.name, self.name),
            maps: self.maps.iter().zip(&after.maps).map(|(f, g)| g.mul(f)).collect(),
        }
    }
}
