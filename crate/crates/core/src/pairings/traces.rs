//! Invariant traces and the cup products with a degree-0 second argument.

use serde::Serialize;

use super::classes::{block_degrees, join_blocks, pullback, pushforward, transport_with, CochainClass};
use super::morphisms::{Alpha, CheckedMorphism};
use crate::cyclic::{HopfCyclicTower, ModuleMorphism, Orientation, ParaCyclicModule};
use crate::error::{Error, Result};
use crate::hopf::{EquivariantPairing, ModComodule, ModuleAlgebra};
use crate::linalg::matrix::{collect_sparse, dense_to_sparse, dot, SparseVec};
use crate::linalg::{Field, Matrix, TensorShape};
use crate::report::Report;

/// A covector on `A ⊗ M` that descends to a cyclic 0-cocycle of `C(A, M)`.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantTrace<F: Field> {
    #[serde(skip)]
    pub alg: ModuleAlgebra<F>,
    #[serde(skip)]
    pub m: ModComodule<F>,
    #[serde(serialize_with = "serialize_dense")]
    pub tau: Vec<F>,
}

fn serialize_dense<F: Field, S: serde::Serializer>(v: &[F], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

/// Vectors `w` in `T_0(A, M)` such that a lawful trace satisfies `τ(w) = 0`.
fn trace_constraints<F: Field>(ta: &HopfCyclicTower<F>) -> Vec<SparseVec<F>> {
    let t = &ta.cover;
    let mut out: Vec<SparseVec<F>> = ta.projection(0).kernel().basis_vectors();
    let b = t.faces[1][0].sub(&t.faces[1][1]);
    out.extend(b.columns().iter().cloned());
    let c = t.cyclic[0].sub(&Matrix::identity(t.dims[0]));
    out.extend(c.columns().iter().cloned());
    out
}

impl<F: Field> InvariantTrace<F> {
    /// A basis of all invariant traces.
    pub fn solve(alg: &ModuleAlgebra<F>, m: &ModComodule<F>, ta: &HopfCyclicTower<F>) -> Vec<InvariantTrace<F>> {
        let dim = ta.cover.dims[0];
        let w = Matrix::from_columns(dim, trace_constraints(ta));
        w.transpose()
            .kernel()
            .basis()
            .iter()
            .map(|v| InvariantTrace {
                alg: alg.clone(),
                m: m.clone(),
                tau: crate::linalg::matrix::sparse_to_dense(v, dim),
            })
            .collect()
    }

    pub fn new(alg: &ModuleAlgebra<F>, m: &ModComodule<F>, tau: Vec<F>, ta: &HopfCyclicTower<F>) -> Result<Self> {
        let t = InvariantTrace { alg: alg.clone(), m: m.clone(), tau };
        let r = t.check(ta);
        if !r.is_empty() {
            return Err(Error::NotCocycle(format!("trace: {}", r.to_string().trim())));
        }
        Ok(t)
    }

    /// Descends to `C_0(A, M)` and is a cyclic 0-cocycle there.
    pub fn check(&self, ta: &HopfCyclicTower<F>) -> Report {
        let mut r = Report::new();
        let tau = dense_to_sparse(&self.tau);
        for w in trace_constraints(ta) {
            r.require(dot(&tau, &w).is_zero(), "trace is a cyclic 0-cocycle on C(A,M)", || format!("{w:?}"));
        }
        r
    }

    /// `τ(h(a)a') = τ(a S(h_(1))(a') δ(h_(2)))` and `τ(h(a)) = ε(h)τ(a)`
    /// for coefficients `k_(σ,δ)`, with `δ` read off the action.
    pub fn check_identities(&self) -> Report {
        self.identities(false)
    }

    /// `τ(h(a)a') = τ(a δ(h_(1))S(h_(2))(a'))` and `τ(h(a)) = δ(h)τ(a)`.
    /// These agree with [`Self::check_identities`] when `δ = ε` and the
    /// Hopf algebra is cocommutative.
    pub fn check_modular_identities(&self) -> Report {
        self.identities(true)
    }

    fn identities(&self, modular: bool) -> Report {
        let mut r = Report::new();
        if self.m.dim != 1 {
            r.fail("trace identities need one-dimensional coefficients", format!("dim M = {}", self.m.dim));
            return r;
        }
        let hopf = &self.alg.hopf;
        let (dh, da) = (hopf.dim(), self.alg.algebra.dim);
        let delta: Vec<F> = (0..dh).map(|h| self.m.action.get(0, h)).collect();
        let tau = |v: &[(usize, F)]| dot(v, &dense_to_sparse(&self.tau));
        let act = |h: usize, a: &[(usize, F)]| -> SparseVec<F> {
            collect_sparse(
                a.iter()
                    .flat_map(|(i, c)| self.alg.action.column(h * da + i).iter().map(move |(k, v)| (*k, v.clone() * c.clone())))
                    .collect(),
            )
        };
        let mul = |x: &[(usize, F)], y: &[(usize, F)]| -> SparseVec<F> {
            let mut acc = Vec::new();
            for (i, a) in x {
                for (j, b) in y {
                    let c = a.clone() * b.clone();
                    acc.extend(self.alg.algebra.mul.column(i * da + j).iter().map(|(k, v)| (*k, v.clone() * c.clone())));
                }
            }
            collect_sparse(acc)
        };
        for h in 0..dh {
            for a in 0..da {
                let e = vec![(a, F::one())];
                let lhs = tau(&act(h, &e));
                let rhs = if modular { delta[h].clone() } else { hopf.counit()[h].clone() } * tau(&e);
                let inv = if modular { "trace is δ-invariant" } else { "trace is H-invariant" };
                r.require(lhs == rhs, inv, || format!("h = {h}, a = {a}"));
                for a2 in 0..da {
                    let e2 = vec![(a2, F::one())];
                    let lhs = tau(&mul(&act(h, &e), &e2));
                    let mut rhs = F::zero();
                    for (k, c) in hopf.coalgebra.comul.column(h) {
                        let (h1, h2) = (k / dh, k % dh);
                        let (hs, hd) = if modular { (h2, h1) } else { (h1, h2) };
                        for (s, sv) in hopf.antipode.column(hs) {
                            let x = mul(&e, &act(*s, &e2));
                            rhs = rhs + tau(&x) * c.clone() * sv.clone() * delta[hd].clone();
                        }
                    }
                    let twisted = if modular { "trace satisfies the δ-twisted trace property" } else { "trace satisfies the twisted trace property" };
                    r.require(lhs == rhs, twisted, || {
                        format!("h = {h}, a = {a}, a' = {a2}")
                    });
                }
            }
        }
        r
    }

    /// The trace on `C_0(A, M)`.
    pub fn on_coinvariants(&self, ta: &HopfCyclicTower<F>) -> SparseVec<F> {
        ta.section(0).pull_back(&dense_to_sparse(&self.tau))
    }

    pub fn scaled(&self, a: &F) -> Self {
        InvariantTrace { tau: self.tau.iter().map(|x| x.clone() * a.clone()).collect(), ..self.clone() }
    }
}

/// The cocycle `f ↦ τ(d_0^m f(c_m))` on `Hom(X, Y)` for a class `c` on the
/// cochain module `x` and a cyclic 0-cocycle `tau` on the chain module `y`.
pub fn evaluation_cocycle<F: Field>(
    x: &ParaCyclicModule<F>,
    y: &ParaCyclicModule<F>,
    hom: &ParaCyclicModule<F>,
    tau: &[(usize, F)],
    class: &CochainClass<F>,
) -> Result<CochainClass<F>> {
    if x.orientation != Orientation::Cochain || y.orientation != Orientation::Chain {
        return Err(Error::ShapeMismatch("evaluation needs a cochain module against a chain module".into()));
    }
    let degrees = block_degrees(class.model, class.degree);
    let c_blocks = class.blocks(&x.dims);
    let mut powers = vec![tau.to_vec()];
    for m in 1..=class.degree {
        let prev = powers[m - 1].clone();
        powers.push(y.faces[m][0].pull_back(&prev));
    }
    let blocks: Vec<SparseVec<F>> = degrees
        .iter()
        .zip(&c_blocks)
        .map(|(&m, c)| {
            let dx = x.dims[m];
            let mut out = Vec::new();
            for (yi, a) in &powers[m] {
                for (xi, b) in c {
                    out.push((yi * dx + xi, a.clone() * b.clone()));
                }
            }
            collect_sparse(out)
        })
        .collect();
    let v = join_blocks(&hom.dims, class.model, class.degree, &blocks);
    CochainClass::new(hom, class.model, class.degree, v)
}

/// `HC^p_Hopf(C, M) → HC^p(A)`: pull the evaluation cocycle back along `α`.
pub fn cup_with_trace<F: Field>(
    alpha: &Alpha<F>,
    tc: &HopfCyclicTower<F>,
    ta: &HopfCyclicTower<F>,
    class: &CochainClass<F>,
    trace: &InvariantTrace<F>,
) -> Result<CochainClass<F>> {
    let a = &alpha.coinvariant;
    let x = tc.c.truncated(a.target.top());
    let y = ta.c.truncated(a.target.top());
    let tau = trace.on_coinvariants(ta);
    let e = evaluation_cocycle(&x, &y, &a.target, &tau, class)?;
    pullback(&a.morphism, &a.source, &a.target, &e)
}

/// The two computations of the characteristic map for `C = H`.
#[derive(Clone, Debug)]
pub struct CharMap<F: Field> {
    pub direct: CochainClass<F>,
    pub pullback: CochainClass<F>,
}

/// `γ(c)(a_0 … a_n) = τ(h^0(a_0) ⋯ h^n(a_n) ⊗ m)` evaluated on a lift of `c`,
/// without using the matrices of `α`.
pub fn direct_char_map<F: Field>(
    p: &EquivariantPairing<F>,
    tc: &HopfCyclicTower<F>,
    trace: &InvariantTrace<F>,
    source: &ParaCyclicModule<F>,
    class: &CochainClass<F>,
) -> Result<CochainClass<F>> {
    let (dc, da, dm) = (p.coalg.coalgebra.dim, p.alg.algebra.dim, trace.m.dim);
    let degrees = block_degrees(class.model, class.degree);
    let blocks = class.blocks(&tc.c.dims);
    let mul = &p.alg.algebra;
    let out: Vec<SparseVec<F>> = degrees
        .iter()
        .zip(&blocks)
        .map(|(&n, c)| {
            let lift = tc.section(n).apply(c);
            let cs = TensorShape::new(vec![dc; n + 1]);
            let at = TensorShape::new(vec![da; n + 1]);
            let mut value = Vec::new();
            for col in 0..at.total() {
                let a = at.decode(col);
                let mut total = F::zero();
                for (t, coef) in &lift {
                    let (ci, mi) = (t / dm, t % dm);
                    let h = cs.decode(ci);
                    let mut prod = dense_to_sparse(&mul.unit);
                    for i in 0..=n {
                        let img = p.phi.column(h[i] * da + a[i]);
                        let mut acc = Vec::new();
                        for (u, x) in &prod {
                            for (w, y) in img {
                                let s = x.clone() * y.clone();
                                acc.extend(mul.mul.column(u * da + w).iter().map(|(k, v)| (*k, v.clone() * s.clone())));
                            }
                        }
                        prod = collect_sparse(acc);
                    }
                    for (k, v) in prod {
                        total = total + trace.tau[k * dm + mi].clone() * v * coef.clone();
                    }
                }
                if !total.is_zero() {
                    value.push((col, total));
                }
            }
            value
        })
        .collect();
    let v = join_blocks(&source.dims, class.model, class.degree, &out);
    CochainClass::new(source, class.model, class.degree, v)
}

/// Both routes of the characteristic map, required to agree exactly.
pub fn cm_char_map<F: Field>(
    trace: &InvariantTrace<F>,
    p: &EquivariantPairing<F>,
    alpha: &Alpha<F>,
    tc: &HopfCyclicTower<F>,
    ta: &HopfCyclicTower<F>,
    class: &CochainClass<F>,
) -> Result<CharMap<F>> {
    if p.coalg.coalgebra != p.alg.hopf.coalgebra {
        return Err(Error::Validation("characteristic map needs C = H".into()));
    }
    let pulled = cup_with_trace(alpha, tc, ta, class, trace)?;
    let direct = direct_char_map(p, tc, trace, &alpha.coinvariant.source, class)?;
    if direct.representative != pulled.representative {
        return Err(Error::AgreementFailure(format!("characteristic map in degree {}", class.degree)));
    }
    Ok(CharMap { direct, pullback: pulled })
}

/// `HC^q_Hopf(B, M) → HC^q(A ⋊ B)` through `β`.
pub fn crossed_cup_with_trace<F: Field>(
    beta: &CheckedMorphism<F>,
    cb: &ParaCyclicModule<F>,
    ta: &HopfCyclicTower<F>,
    class: &CochainClass<F>,
    trace: &InvariantTrace<F>,
) -> Result<CochainClass<F>> {
    let top = beta.target.top();
    let y = ta.c.truncated(top);
    let tau = trace.on_coinvariants(ta);
    let e = evaluation_cocycle(&cb.truncated(top), &y, &beta.target, &tau, class)?;
    pullback(&beta.morphism, &beta.source, &beta.target, &e)
}

/// `y_n = s_0^n y` as a morphism `k^∨ → X` for `y ∈ X_0` of a chain module.
pub fn point_morphism<F: Field>(x: &ParaCyclicModule<F>, y: &[(usize, F)]) -> Result<(ParaCyclicModule<F>, ModuleMorphism<F>)> {
    let top = x.top();
    let (_, point) = crate::cyclic::constant_modules::<F>(x.truncation, top);
    let mut vs = vec![y.to_vec()];
    for n in 0..top {
        let next = x.degens[n][0].apply(&vs[n]);
        vs.push(next);
    }
    let maps = vs.iter().enumerate().map(|(n, v)| Matrix::from_columns(x.dims[n], vec![v.clone()])).collect();
    let f = ModuleMorphism { name: "point".into(), maps };
    let r = f.check(&point, x, top)?;
    if !r.is_empty() {
        return Err(Error::NotCocycle(format!("degree-0 element of {}: {}", x.name, r.to_string().trim())));
    }
    Ok((point, f))
}

/// `HC^p(Z ⋉ C) → HC^p_Hopf(C, M)`: push forward along `ξ`, then evaluate
/// at the morphism `k^∨ → C(Z, M)` determined by `y`.
pub fn crossed_cup_with_point<F: Field>(
    xi: &CheckedMorphism<F>,
    cz: &ParaCyclicModule<F>,
    tc: &HopfCyclicTower<F>,
    y: &[(usize, F)],
    class: &CochainClass<F>,
) -> Result<CochainClass<F>> {
    let top = xi.target.top();
    let cz = cz.truncated(top);
    let (_, pt) = point_morphism(&cz, y)?;
    let pushed = pushforward(&xi.morphism, &xi.source, &xi.target, class)?;
    let target = tc.c.truncated(top);
    transport_with(&pushed, &xi.target, &target, |n| Matrix::identity(target.dims[n]).kron(&pt.maps[n].transpose()))
}
