//! Cocycle representatives in either model and their transport along
//! morphisms.

use serde::Serialize;

use crate::cyclic::{ModuleMorphism, Orientation, ParaCyclicModule};
use crate::error::{Error, Result};
use crate::homology::mixed::{hochschild_b, one_minus_lambda};
use crate::homology::{CyclicCohomology, Model};
use crate::linalg::matrix::{collect_sparse, SparseVec};
use crate::linalg::{Field, Matrix, Subspace};

/// A cocycle of the total complex of one model. For a chain module the
/// representative is a covector, for a cochain module a vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CochainClass<F: Field> {
    pub module: String,
    pub degree: usize,
    #[serde(serialize_with = "serialize_vec")]
    pub representative: SparseVec<F>,
    pub model: Model,
}

fn serialize_vec<F: Field, S: serde::Serializer>(v: &SparseVec<F>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (i, c) in v {
        seq.serialize_element(&(i, c.to_string()))?;
    }
    seq.end()
}

/// Degrees of the blocks of `Tot_n`, in block order.
pub fn block_degrees(model: Model, n: usize) -> Vec<usize> {
    match model {
        Model::Bicomplex => (0..=n).rev().collect(),
        Model::Mixed => (0..=n / 2).map(|k| n - 2 * k).collect(),
    }
}

fn offsets(dims: &[usize], degrees: &[usize]) -> Vec<usize> {
    let mut out = vec![0];
    for &d in degrees {
        out.push(out.last().unwrap() + dims[d]);
    }
    out
}

/// Splits a total cochain into its blocks.
pub fn split_blocks<F: Field>(dims: &[usize], model: Model, n: usize, v: &[(usize, F)]) -> Vec<SparseVec<F>> {
    let degrees = block_degrees(model, n);
    let off = offsets(dims, &degrees);
    (0..degrees.len())
        .map(|k| v.iter().filter(|(i, _)| *i >= off[k] && *i < off[k + 1]).map(|(i, c)| (i - off[k], c.clone())).collect())
        .collect()
}

pub fn join_blocks<F: Field>(dims: &[usize], model: Model, n: usize, blocks: &[SparseVec<F>]) -> SparseVec<F> {
    let degrees = block_degrees(model, n);
    let off = offsets(dims, &degrees);
    collect_sparse(
        blocks.iter().enumerate().flat_map(|(k, b)| { let o = off[k]; b.iter().map(move |(i, c)| (o + i, c.clone())) }).collect(),
    )
}

impl<F: Field> CochainClass<F> {
    /// Checks the cocycle condition and the stable range.
    pub fn new(x: &ParaCyclicModule<F>, model: Model, degree: usize, representative: SparseVec<F>) -> Result<Self> {
        let c = CyclicCohomology::new(x, model)?;
        let g = c.group(degree)?;
        if !g.is_cocycle(&representative) {
            return Err(Error::NotCocycle(format!("{} in degree {degree} ({model})", x.name)));
        }
        Ok(CochainClass { module: x.name.clone(), degree, representative, model })
    }

    /// A cyclic cocycle on `X_n` placed in block 0.
    pub fn from_cyclic_cocycle(x: &ParaCyclicModule<F>, model: Model, degree: usize, v: SparseVec<F>) -> Result<Self> {
        Self::new(x, model, degree, v)
    }

    pub fn blocks(&self, dims: &[usize]) -> Vec<SparseVec<F>> {
        split_blocks(dims, self.model, self.degree, &self.representative)
    }

    pub fn scaled(&self, a: &F) -> Self {
        CochainClass { representative: crate::linalg::matrix::scale(a, &self.representative), ..self.clone() }
    }

    /// The same cochain read in the mixed model; only defined when it is
    /// concentrated in block 0 (a cyclic cocycle).
    pub fn column_zero_to_mixed(&self, x: &ParaCyclicModule<F>) -> Result<Self> {
        if self.model == Model::Mixed {
            return Ok(self.clone());
        }
        let blocks = self.blocks(&x.dims);
        if blocks.iter().skip(1).any(|b| !b.is_empty()) {
            return Err(Error::Validation("cochain is not concentrated in column 0".into()));
        }
        let mixed = join_blocks(&x.dims, Model::Mixed, self.degree, &[blocks[0].clone()]);
        Self::new(x, Model::Mixed, self.degree, mixed)
    }

    pub fn cohomologous(&self, other: &Self, x: &ParaCyclicModule<F>) -> Result<bool> {
        if self.model != other.model || self.degree != other.degree {
            return Ok(false);
        }
        let g = CyclicCohomology::new(x, self.model)?.group(self.degree)?;
        Ok(g.cohomologous(&self.representative, &other.representative))
    }
}

/// Applies `maps(n)` to every block of a total cochain of degree `n`.
fn transport<F: Field>(
    class: &CochainClass<F>,
    source_dims: &[usize],
    target: &ParaCyclicModule<F>,
    maps: impl Fn(usize) -> Matrix<F>,
) -> Result<CochainClass<F>> {
    let degrees = block_degrees(class.model, class.degree);
    let blocks = split_blocks(source_dims, class.model, class.degree, &class.representative);
    let out: Vec<SparseVec<F>> = degrees.iter().zip(&blocks).map(|(&d, b)| maps(d).apply(b)).collect();
    let v = join_blocks(&target.dims, class.model, class.degree, &out);
    CochainClass::new(target, class.model, class.degree, v)
        .map_err(|e| match e {
            Error::NotCocycle(s) => Error::IdentityFailure(format!("transported cochain is not a cocycle: {s}")),
            other => other,
        })
}

fn check_input<F: Field>(x: &ParaCyclicModule<F>, class: &CochainClass<F>) -> Result<()> {
    CochainClass::new(x, class.model, class.degree, class.representative.clone()).map(|_| ())
}

/// Pullback of a class on the target of a chain-oriented morphism.
pub fn pullback<F: Field>(
    f: &ModuleMorphism<F>,
    source: &ParaCyclicModule<F>,
    target: &ParaCyclicModule<F>,
    class: &CochainClass<F>,
) -> Result<CochainClass<F>> {
    if source.orientation != Orientation::Chain || target.orientation != Orientation::Chain {
        return Err(Error::ShapeMismatch("pullback needs chain modules; push cochain classes forward".into()));
    }
    check_input(target, class)?;
    transport(class, &target.dims, source, |d| f.maps[d].transpose())
}

/// Pushforward of a class on the source of a cochain-oriented morphism.
pub fn pushforward<F: Field>(
    f: &ModuleMorphism<F>,
    source: &ParaCyclicModule<F>,
    target: &ParaCyclicModule<F>,
    class: &CochainClass<F>,
) -> Result<CochainClass<F>> {
    if source.orientation != Orientation::Cochain || target.orientation != Orientation::Cochain {
        return Err(Error::ShapeMismatch("pushforward needs cochain modules".into()));
    }
    check_input(source, class)?;
    transport(class, &source.dims, target, |d| f.maps[d].clone())
}

/// Applies a degreewise map to a class, for maps that are not stored as
/// a [`ModuleMorphism`].
pub fn transport_with<F: Field>(
    class: &CochainClass<F>,
    source: &ParaCyclicModule<F>,
    target: &ParaCyclicModule<F>,
    maps: impl Fn(usize) -> Matrix<F>,
) -> Result<CochainClass<F>> {
    check_input(source, class)?;
    transport(class, &source.dims, target, maps)
}

/// Cyclic cocycles of degree `n` modulo cyclic coboundaries, as cochains on
/// the chain form `X_n`. Over `Q` these represent `HC^n`.
pub fn cyclic_cocycles<F: Field>(x: &ParaCyclicModule<F>, n: usize) -> Result<Vec<SparseVec<F>>> {
    if let Some(d) = x.first_non_cyclic_degree() {
        return Err(Error::NotCyclic(format!("{}: degree {d}", x.name)));
    }
    if n >= x.top() {
        return Err(Error::OutOfStableRange { degree: n, stable: x.top() as i64 - 1 });
    }
    let chain = x.as_chain();
    let invariant = |m: usize| one_minus_lambda(&chain, m).transpose().kernel();
    let b_next = hochschild_b(&chain, n + 1, false).transpose();
    let closed = invariant(n).intersection(&b_next.kernel());
    let exact = if n == 0 {
        Subspace::zero(chain.dims[0])
    } else {
        let b = hochschild_b(&chain, n, false).transpose();
        Subspace::spanned_by(chain.dims[n], invariant(n - 1).basis().iter().map(|v| b.apply(v)))
    };
    let mut s = exact;
    Ok(closed.basis().iter().filter(|v| s.insert((*v).clone())).cloned().collect())
}
