//! The characteristic morphisms into diagonal Hom modules and the external
//! product of comodule coalgebra complexes.

use serde::Serialize;

use crate::cyclic::{
    cyc_algebra, cyc_coalgebra, diag_hom, diag_tensor, hopf_cyclic_comodule_coalgebra, HopfCyclicTower, ModuleMorphism,
    ParaCyclicModule, SubModule,
};
use crate::error::{Error, Result};
use crate::hopf::{
    balanced_tensor, check_equivariant, check_hypotheses, check_sayd, crossed_product_algebra, crossed_product_coalgebra,
    tensor_comodule_coalgebra, ComoduleAlgebra, ComoduleCoalgebra, EquivariantPairing, Hypotheses, ModComodule,
    ModuleAlgebra, ModuleCoalgebra,
};
use crate::linalg::matrix::{collect_sparse, SparseVec};
use crate::linalg::tensor::tensor_vectors;
use crate::linalg::{Field, Matrix, TensorShape};
use crate::report::Report;

/// A morphism together with its source, target and exact check report.
#[derive(Clone, Debug)]
pub struct CheckedMorphism<F: Field> {
    pub source: ParaCyclicModule<F>,
    pub target: ParaCyclicModule<F>,
    pub morphism: ModuleMorphism<F>,
    pub report: Report,
}

impl<F: Field> CheckedMorphism<F> {
    pub fn new(name: &str, source: ParaCyclicModule<F>, target: ParaCyclicModule<F>, maps: Vec<Matrix<F>>) -> Result<Self> {
        let morphism = ModuleMorphism { name: name.into(), maps };
        let upto = source.top().min(target.top());
        let report = morphism.check(&source, &target, upto)?.prefixed(name);
        Ok(CheckedMorphism { source, target, morphism, report })
    }

    pub fn is_lawful(&self) -> bool {
        self.report.is_empty()
    }
}

/// Sends `vec(f)` for `f: X̃ → Ỹ` to `vec(p f s)` with `p: Ỹ → Y`, `s: X → X̃`.
pub fn conjugate<F: Field>(vectorized: &Matrix<F>, p: &Matrix<F>, s: &Matrix<F>) -> Matrix<F> {
    p.kron(&s.transpose()).mul(vectorized)
}

/// The matrix `Ỹ × X̃` stored in column `col` of a vectorized Hom.
pub fn unvectorize<F: Field>(col: &[(usize, F)], rows: usize, cols: usize) -> Matrix<F> {
    Matrix::from_triplets(rows, cols, col.iter().map(|(i, c)| (i / cols, i % cols, c.clone())).collect())
}

fn sweedler_mul<F: Field>(mul: &Matrix<F>, dim: usize, x: &[(usize, F)], y: &[(usize, F)]) -> SparseVec<F> {
    let mut acc = Vec::new();
    for (i, a) in x {
        for (j, b) in y {
            let c = a.clone() * b.clone();
            acc.extend(mul.column(i * dim + j).iter().map(|(k, v)| (*k, v.clone() * c.clone())));
        }
    }
    collect_sparse(acc)
}

fn act<F: Field>(action: &Matrix<F>, dim: usize, h: &[(usize, F)], a: &[(usize, F)]) -> SparseVec<F> {
    sweedler_mul(action, dim, h, a)
}

fn product_of<F: Field>(mul: &Matrix<F>, dim: usize, unit: &[F], factors: &[usize]) -> SparseVec<F> {
    let mut acc = crate::linalg::matrix::dense_to_sparse(unit);
    for &f in factors {
        acc = sweedler_mul(mul, dim, &acc, &[(f, F::one())]);
    }
    acc
}

/// `k`-fold iterated coaction `b ↦ b_(-k) ⊗ … ⊗ b_(-1) ⊗ b_(0)`.
fn legs<F: Field>(coaction: &Matrix<F>, d: usize, b: usize, k: usize) -> Vec<(Vec<usize>, usize, F)> {
    let mut acc = vec![(Vec::new(), b, F::one())];
    for _ in 0..k {
        let mut next = Vec::new();
        for (hs, x, c) in &acc {
            for (r, v) in coaction.column(*x) {
                let mut h = hs.clone();
                h.push(r / d);
                next.push((h, r % d, c.clone() * v.clone()));
            }
        }
        acc = next;
    }
    acc
}

/// Cartesian product of per-factor expansions.
fn expand<F: Field, T: Clone>(lists: &[Vec<(T, F)>]) -> Vec<(Vec<T>, F)> {
    let mut acc = vec![(Vec::new(), F::one())];
    for l in lists {
        let mut next = Vec::with_capacity(acc.len() * l.len());
        for (xs, c) in &acc {
            for (x, v) in l {
                let mut y = xs.clone();
                y.push(x.clone());
                next.push((y, c.clone() * v.clone()));
            }
        }
        acc = next;
    }
    acc
}

/// `α_n(a)(c ⊗ m) = φ(c^0, a_0) ⊗ … ⊗ φ(c^n, a_n) ⊗ m` on the covers.
pub fn alpha_cover_maps<F: Field>(p: &EquivariantPairing<F>, dm: usize, top: usize) -> Vec<Matrix<F>> {
    let (dc, da) = (p.coalg.coalgebra.dim, p.alg.algebra.dim);
    (0..=top)
        .map(|n| {
            let cyc = TensorShape::new(vec![da; n + 1]);
            let cs = TensorShape::new(vec![dc; n + 1]);
            let dim_x = cs.total() * dm;
            let dim_y = cyc.total() * dm;
            Matrix::from_fn(dim_y * dim_x, cyc.total(), |col| {
                let a = cyc.decode(col);
                let mut out = Vec::new();
                for x in 0..dim_x {
                    let (ci, m) = (x / dm, x % dm);
                    let c = cs.decode(ci);
                    let parts: Vec<SparseVec<F>> = (0..=n).map(|i| p.phi.column(c[i] * da + a[i]).to_vec()).collect();
                    for (ya, v) in tensor_vectors(&cyc, &parts) {
                        out.push(((ya * dm + m) * dim_x + x, v));
                    }
                }
                collect_sparse(out)
            })
        })
        .collect()
}

/// `α` on the cover, the `Q` level and the coinvariant level.
#[derive(Clone, Debug)]
pub struct Alpha<F: Field> {
    pub cover: CheckedMorphism<F>,
    pub quotient: CheckedMorphism<F>,
    pub coinvariant: CheckedMorphism<F>,
    /// `α(a) τ = τ^{-1} α(t a)` on the covers.
    pub restriction: Report,
}

impl<F: Field> Alpha<F> {
    pub fn report(&self) -> Report {
        let mut r = self.restriction.clone();
        r.merge(self.cover.report.clone());
        r.merge(self.quotient.report.clone());
        r.merge(self.coinvariant.report.clone());
        r
    }
}

/// Builds `α` from towers over `T(C, M)` and `T(A, M)`; both must have the
/// same top degree.
pub fn alpha<F: Field>(p: &EquivariantPairing<F>, tc: &HopfCyclicTower<F>, ta: &HopfCyclicTower<F>) -> Result<Alpha<F>> {
    let eq = check_equivariant(p)?;
    if !eq.is_empty() {
        return Err(Error::NotEquivariant(eq.to_string().trim().to_string()));
    }
    let top = tc.c.top().min(ta.c.top());
    let dm = ta.cover.dims[0] / p.alg.algebra.dim;
    let maps = alpha_cover_maps(p, dm, top);
    let cyc = cyc_algebra(&p.alg.algebra, top, top);

    let mut restriction = Report::new();
    for n in 0..=top {
        let lhs = Matrix::identity(ta.cover.dims[n]).kron(&tc.cover.cyclic[n].transpose()).mul(&maps[n]);
        let rhs = ta.cover.cyclic_inv[n].kron(&Matrix::identity(tc.cover.dims[n])).mul(&maps[n]).mul(&cyc.cyclic[n]);
        restriction.require(lhs == rhs, "restriction identity", || format!("degree {n}"));
    }
    for n in 0..=top {
        let (dx, dy) = (tc.cover.dims[n], ta.cover.dims[n]);
        let ker_c = tc.projection(n).kernel();
        let pa = ta.projection(n);
        for col in 0..maps[n].cols() {
            let f = unvectorize(maps[n].column(col), dy, dx);
            for v in tc.j[n].basis() {
                if !ta.j[n].contains(&f.apply(v)) {
                    return Err(Error::DescentFailure(format!("alpha leaves J in degree {n}")));
                }
            }
            for v in ker_c.basis() {
                if !pa.apply(&f.apply(v)).is_empty() {
                    return Err(Error::DescentFailure(format!("alpha leaves the coinvariant kernel in degree {n}")));
                }
            }
        }
    }
    let level = |name: &str, x: &ParaCyclicModule<F>, y: &ParaCyclicModule<F>, conj: &dyn Fn(usize) -> Matrix<F>| {
        let target = diag_hom(x, y)?.truncated(top);
        CheckedMorphism::new(name, cyc.clone(), target, (0..=top).map(conj).collect())
    };
    let cover = level("alpha", &tc.cover.truncated(top), &ta.cover.truncated(top), &|n| maps[n].clone())?;
    let quotient = level("alpha on Q", &tc.q.truncated(top), &ta.q.truncated(top), &|n| {
        conjugate(&maps[n], &ta.q_maps[n].projection, &tc.q_maps[n].section)
    })?;
    let coinvariant = level("alpha on C", &tc.c.truncated(top), &ta.c.truncated(top), &|n| {
        conjugate(&maps[n], &ta.projection(n), &tc.section(n))
    })?;
    Ok(Alpha { cover, quotient, coinvariant, restriction })
}

fn crossed_source_check<F: Field>(m: &ModComodule<F>) -> Result<()> {
    let r = check_sayd(m);
    if !r.is_empty() {
        return Err(Error::NotSayd(r.to_string().trim().to_string()));
    }
    Ok(())
}

/// `β: Cyc(A ⋊ B) → Hom(C(B, M), C(A, M))` with `C(A, M)` taken from `ta`.
pub fn beta<F: Field>(
    a: &ModuleAlgebra<F>,
    b: &ComoduleAlgebra<F>,
    m: &ModComodule<F>,
    cb: &SubModule<F>,
    ta: &HopfCyclicTower<F>,
) -> Result<CheckedMorphism<F>> {
    crossed_source_check(m)?;
    let top = cb.module.top().min(ta.c.top());
    let ab = crossed_product_algebra(a, b)?;
    let source = cyc_algebra(&ab, top, top);
    let (da, db, dm, dh) = (a.algebra.dim, b.algebra.dim, m.dim, a.hopf.dim());
    let hopf = &a.hopf;
    let maps = (0..=top)
        .map(|n| {
            let src = TensorShape::new(vec![da * db; n + 1]);
            let at = TensorShape::new(vec![da; n + 1]);
            let bt = TensorShape::new(vec![db; n + 1]);
            let dim_hom = dm * bt.total();
            let raw = Matrix::from_fn(at.total() * dm * dim_hom, src.total(), |col| {
                let x = src.decode(col);
                let (av, bv): (Vec<usize>, Vec<usize>) = x.iter().map(|i| (i / db, i % db)).unzip();
                let lists: Vec<Vec<((Vec<usize>, usize), F)>> = (0..n)
                    .map(|i| legs(&b.coaction, db, bv[i], n - i).into_iter().map(|(h, z, c)| ((h, z), c)).collect())
                    .collect();
                let mut out = Vec::new();
                for (choice, coef) in expand(&lists) {
                    let mut parts: Vec<SparseVec<F>> = vec![vec![(av[0], F::one())]];
                    for j in 1..=n {
                        let hs: Vec<usize> = (0..j).map(|i| choice[i].0[j - i - 1]).collect();
                        let h = product_of(&hopf.algebra.mul, dh, hopf.unit(), &hs);
                        parts.push(act(&a.action, da, &h, &[(av[j], F::one())]));
                    }
                    let mut y: Vec<usize> = choice.iter().map(|c| c.1).collect();
                    y.push(bv[n]);
                    let yi = bt.encode(&y);
                    for (ta_idx, v) in tensor_vectors(&at, &parts) {
                        for mi in 0..dm {
                            out.push(((ta_idx * dm + mi) * dim_hom + mi * bt.total() + yi, v.clone() * coef.clone()));
                        }
                    }
                }
                collect_sparse(out)
            });
            conjugate(&raw, &ta.projection(n), &cb.ambient[n].inclusion())
        })
        .collect();
    let target = diag_hom(&cb.module.truncated(top), &ta.c.truncated(top))?;
    CheckedMorphism::new("beta", source, target, maps)
}

/// Which of the two equal expressions for `ξ` to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum XiForm {
    /// Every `z^j` twists the slots `0..=j` through `S^{-1}`.
    Twisted,
    /// The last `z^n` acts on the coefficient value instead.
    Coefficient,
    /// Every `z^j` twists only the slots `0..j`, one leg each.
    Shifted,
}

/// `ξ: Cyc(Z ⋉ C) → Hom(C(Z, M), C(C, M))` with `C(C, M)` taken from `tc`.
pub fn xi<F: Field>(
    z: &ComoduleCoalgebra<F>,
    c: &ModuleCoalgebra<F>,
    m: &ModComodule<F>,
    cz: &SubModule<F>,
    tc: &HopfCyclicTower<F>,
    form: XiForm,
) -> Result<CheckedMorphism<F>> {
    crossed_source_check(m)?;
    let top = cz.module.top().min(tc.c.top());
    let zc = crossed_product_coalgebra(z, c)?;
    let source = cyc_coalgebra(&zc, top, top);
    let (dz, dc, dm, dh) = (z.coalgebra.dim, c.coalgebra.dim, m.dim, c.hopf.dim());
    let hopf = &c.hopf;
    let maps = (0..=top)
        .map(|n| {
            let src = TensorShape::new(vec![dz * dc; n + 1]);
            let ct = TensorShape::new(vec![dc; n + 1]);
            let zt = TensorShape::new(vec![dz; n + 1]);
            let dim_hom = dm * zt.total();
            let raw = Matrix::from_fn(ct.total() * dm * dim_hom, src.total(), |col| {
                let x = src.decode(col);
                let (zv, cv): (Vec<usize>, Vec<usize>) = x.iter().map(|i| (i / dc, i % dc)).unzip();
                let twisted = form == XiForm::Twisted;
                let lists: Vec<Vec<((Vec<usize>, usize), F)>> = (0..=n)
                    .map(|j| {
                        let k = match form {
                            XiForm::Twisted => j + 1,
                            XiForm::Coefficient => if j < n { j + 1 } else { 1 },
                            XiForm::Shifted => j,
                        };
                        legs(&z.coaction, dz, zv[j], k).into_iter().map(|(h, w, c)| ((h, w), c)).collect()
                    })
                    .collect();
                let slots = if twisted { n + 1 } else { n };
                let mut out = Vec::new();
                for (choice, coef) in expand(&lists) {
                    let mut parts: Vec<SparseVec<F>> = Vec::with_capacity(n + 1);
                    for s in 0..slots {
                        let hs: Vec<usize> = match form {
                            XiForm::Twisted => (s..=n).map(|j| choice[j].0[j - s]).collect(),
                            XiForm::Coefficient => (s..n).map(|j| choice[j].0[j - s]).collect(),
                            XiForm::Shifted => (s + 1..=n).map(|j| choice[j].0[j - s - 1]).collect(),
                        };
                        let h = product_of(&hopf.algebra.mul, dh, hopf.unit(), &hs);
                        let h = hopf.antipode_inv.apply(&h);
                        parts.push(act(&c.action, dc, &h, &[(cv[s], F::one())]));
                    }
                    if !twisted {
                        parts.push(vec![(cv[n], F::one())]);
                    }
                    let w: Vec<usize> = choice.iter().map(|c| c.1).collect();
                    let wi = zt.encode(&w);
                    for (ci, v) in tensor_vectors(&ct, &parts) {
                        for mi in 0..dm {
                            let values: SparseVec<F> = if form == XiForm::Coefficient {
                                m.action.column(choice[n].0[0] * dm + mi).to_vec()
                            } else {
                                vec![(mi, F::one())]
                            };
                            for (mo, u) in values {
                                out.push(((ci * dm + mo) * dim_hom + mi * zt.total() + wi, v.clone() * coef.clone() * u));
                            }
                        }
                    }
                }
                collect_sparse(out)
            });
            conjugate(&raw, &tc.projection(n), &cz.ambient[n].inclusion())
        })
        .collect();
    let target = diag_hom(&cz.module.truncated(top), &tc.c.truncated(top))?;
    CheckedMorphism::new("xi", source, target, maps)
}

/// `f * f'` from `diag(C(Z, M) ⊗ C(Z', M'))` into `C(Z ⊗ Z', M ⊗_H M')`.
#[derive(Clone, Debug)]
pub struct Star<F: Field> {
    pub hypotheses: Hypotheses,
    pub left: SubModule<F>,
    pub right: SubModule<F>,
    pub product: SubModule<F>,
    pub morphism: CheckedMorphism<F>,
}

pub fn star<F: Field>(
    z: &ComoduleCoalgebra<F>,
    z2: &ComoduleCoalgebra<F>,
    m: &ModComodule<F>,
    m2: &ModComodule<F>,
    top: usize,
) -> Result<Star<F>> {
    let hypotheses = check_hypotheses(&z.hopf, Some((m, m2)))?;
    if !hypotheses.commutative {
        return Err(Error::HypothesisFailure("H is not commutative".into()));
    }
    if hypotheses.symmetric_modules != Some(true) {
        return Err(Error::HypothesisFailure("coefficients are not symmetric modules".into()));
    }
    let left = hopf_cyclic_comodule_coalgebra(z, m, top, top)?;
    let right = hopf_cyclic_comodule_coalgebra(z2, m2, top, top)?;
    let bal = balanced_tensor(m, m2)?;
    let zz = tensor_comodule_coalgebra(z, z2)?;
    let product = hopf_cyclic_comodule_coalgebra(&zz, &bal.module, top, top)?;
    let (d1, d2, e2) = (z.coalgebra.dim, z2.coalgebra.dim, m2.dim);
    let mut maps = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let (p1, p2) = (d1.pow(n as u32 + 1), d2.pow(n as u32 + 1));
        let s1 = TensorShape::new(vec![d1; n + 1]);
        let s2 = TensorShape::new(vec![d2; n + 1]);
        let s12 = TensorShape::new(vec![d1 * d2; n + 1]);
        let (l, r) = (left.ambient[n].basis_vectors(), right.ambient[n].basis_vectors());
        let mut columns = Vec::with_capacity(l.len() * r.len());
        for f in &l {
            for g in &r {
                let mut acc = Vec::new();
                for (i, a) in f {
                    let (mi, x) = (i / p1, i % p1);
                    let xs = s1.decode(x);
                    for (j, b) in g {
                        let (mj, y) = (j / p2, j % p2);
                        let ys = s2.decode(y);
                        let w: Vec<usize> = xs.iter().zip(&ys).map(|(u, v)| u * d2 + v).collect();
                        let wi = s12.encode(&w);
                        for (q, v) in bal.quotient.projection.column(mi * e2 + mj) {
                            acc.push((q * s12.total() + wi, a.clone() * b.clone() * v.clone()));
                        }
                    }
                }
                let image = collect_sparse(acc);
                let coords = product.ambient[n].coordinates(&image).ok_or_else(|| {
                    Error::IdentityFailure(format!("star leaves the colinear maps in degree {n}"))
                })?;
                columns.push(coords);
            }
        }
        maps.push(Matrix::from_columns(product.ambient[n].dim(), columns));
    }
    let source = diag_tensor(&left.module, &right.module)?;
    let morphism = CheckedMorphism::new("star", source, product.module.clone(), maps)?;
    Ok(Star { hypotheses, left, right, product, morphism })
}

/// The map `f ↦ f ∘ φ^{⊗n+1}` from `C(Z', M)` to `C(Z, M)` induced by a
/// comodule coalgebra map `φ: Z → Z'`.
pub fn induced_by_coalgebra_map<F: Field>(
    src: &SubModule<F>,
    tgt: &SubModule<F>,
    phi: &Matrix<F>,
    dm: usize,
) -> Result<ModuleMorphism<F>> {
    let top = src.module.top().min(tgt.module.top());
    let mut maps = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut power = Matrix::identity(1);
        for _ in 0..=n {
            power = power.kron(phi);
        }
        let ambient = Matrix::identity(dm).kron(&power.transpose());
        maps.push(ambient.restrict(&tgt.ambient[n], &src.ambient[n])?);
    }
    Ok(ModuleMorphism { name: "induced".into(), maps })
}
