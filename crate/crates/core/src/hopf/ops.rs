//! Operations on Hopf-theoretic structures.

use serde::Serialize;

use super::expr::{matrix_of, Op, Terms};
use super::structures::*;
use crate::error::{Error, Result};
use crate::linalg::matrix::sparse_to_dense;
use crate::linalg::subspace::Quotient;
use crate::linalg::{Field, Matrix, Subspace, TensorShape};
use crate::report::Report;

/// Stability and the anti-Yetter-Drinfeld condition, checked on a basis.
pub fn check_sayd<F: Field>(m: &ModComodule<F>) -> Report {
    let mut r = Report::new();
    let (h, d) = (m.hopf.dim(), m.dim);
    let (act, rho) = (m.act_op(), m.coact_op());
    compare_maps(&mut r, "stability", &[d], |t| t.apply(0, &rho).apply(0, &act), |t| t.clone());
    let (dl, mh, si) = (m.hopf.comul_op(), m.hopf.mul_op(), m.hopf.antipode_inv_op());
    compare_maps(&mut r, "anti-Yetter-Drinfeld", &[h, d], |t| t.apply(0, &act).apply(0, &rho), |t| {
        t.apply(0, &dl)
            .apply(1, &dl)
            .apply(3, &rho)
            .apply(2, &si)
            .permute(&[0, 3, 2, 1, 4])
            .apply(0, &mh)
            .apply(0, &mh)
            .apply(1, &act)
    });
    r
}

pub fn is_sayd<F: Field>(m: &ModComodule<F>) -> bool {
    check_sayd(m).is_empty()
}

/// The one-dimensional module `k_(σ,δ)`: `h·1 = δ(h)`, `1 ↦ σ ⊗ 1`.
pub fn modular_pair_module<F: Field>(hopf: &HopfAlgebraData<F>, p: &ModularPair<F>) -> ModComodule<F> {
    let d = hopf.dim();
    let action = Matrix::from_fn(1, d, |h| {
        if p.delta[h].is_zero() {
            vec![]
        } else {
            vec![(0, p.delta[h].clone())]
        }
    });
    let coaction = Matrix::from_columns(d, vec![crate::linalg::matrix::dense_to_sparse(&p.sigma)]);
    ModComodule { hopf: hopf.clone(), dim: 1, action, coaction }
}

/// Every modular pair drawn from the given candidate sets, with its SAYD verdict.
pub fn modular_pair_search<F: Field>(
    hopf: &HopfAlgebraData<F>,
    sigmas: &[Vec<F>],
    deltas: &[Vec<F>],
) -> Vec<(ModularPair<F>, bool)> {
    let mut out = Vec::new();
    for s in sigmas {
        for d in deltas {
            let p = ModularPair { sigma: s.clone(), delta: d.clone() };
            if p.check_structure(hopf).is_empty() {
                let ok = is_sayd(&modular_pair_module(hopf, &p));
                out.push((p, ok));
            }
        }
    }
    out
}

/// `(f * g)(c) = f(c_(1)) g(c_(2))` for linear maps `C → A`.
pub fn convolution<F: Field>(
    c: &CoalgebraData<F>,
    a: &AlgebraData<F>,
    f: &Matrix<F>,
    g: &Matrix<F>,
) -> Result<Matrix<F>> {
    for m in [f, g] {
        if m.rows() != a.dim || m.cols() != c.dim {
            return Err(Error::ShapeMismatch(format!(
                "convolution operand is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                a.dim,
                c.dim
            )));
        }
    }
    let (fo, go) = (Op::linear(f.clone()), Op::linear(g.clone()));
    let (dl, m) = (c.comul_op(), a.mul_op());
    Ok(matrix_of(&TensorShape::new(vec![c.dim]), &TensorShape::new(vec![a.dim]), |idx| {
        Terms::basis(idx).apply(0, &dl).apply(0, &fo).apply(1, &go).apply(0, &m)
    }))
}

/// The convolution unit `c ↦ ε(c) 1_A`.
pub fn convolution_unit<F: Field>(c: &CoalgebraData<F>, a: &AlgebraData<F>) -> Matrix<F> {
    Matrix::from_fn(a.dim, c.dim, |j| {
        let e = c.counit[j].clone();
        a.unit
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero() && !e.is_zero())
            .map(|(i, x)| (i, x.clone() * e.clone()))
            .collect()
    })
}

/// Multiplicativity, unitality and equivariance of a pairing `C ⊗ A → A`.
pub fn check_equivariant<F: Field>(p: &EquivariantPairing<F>) -> Result<Report> {
    if p.coalg.hopf != p.alg.hopf {
        return Err(Error::HopfMismatch("pairing coalgebra and algebra".into()));
    }
    let (c, a, h) = (p.coalg.coalgebra.dim, p.alg.algebra.dim, p.alg.hopf.dim());
    if p.phi.rows() != a || p.phi.cols() != c * a {
        return Err(Error::ShapeMismatch("pairing tensor".into()));
    }
    let mut r = Report::new();
    let (phi, m, dl) = (p.phi_op(), p.alg.algebra.mul_op(), p.coalg.coalgebra.comul_op());
    compare_maps(&mut r, "pairing multiplicative", &[c, a, a], |t| t.apply(1, &m).apply(0, &phi), |t| {
        t.apply(0, &dl).permute(&[0, 2, 1, 3]).apply(0, &phi).apply(1, &phi).apply(0, &m)
    });
    let (u, e) = (p.alg.algebra.unit_op(), p.coalg.coalgebra.counit_op());
    compare_maps(&mut r, "pairing unital", &[c], |t| t.apply(1, &u).apply(0, &phi), |t| {
        t.apply(0, &e).apply(0, &u)
    });
    let (act_a, act_c) = (p.alg.act_op(), p.coalg.act_op());
    compare_maps(&mut r, "pairing equivariant", &[h, c, a], |t| t.apply(1, &phi).apply(0, &act_a), |t| {
        t.apply(0, &act_c).apply(0, &phi)
    });
    Ok(r)
}

/// `φ(h, a) = h·a` for a module algebra, with `C = H` acting on itself.
pub fn action_pairing<F: Field>(a: &ModuleAlgebra<F>) -> EquivariantPairing<F> {
    EquivariantPairing {
        coalg: ModuleCoalgebra::regular(a.hopf.clone()),
        alg: a.clone(),
        phi: a.action.clone(),
    }
}

/// `(a, b)(a', b') = (a (b_(-1) a'), b_(0) b')` on `A ⊗ B`.
pub fn crossed_product_algebra<F: Field>(a: &ModuleAlgebra<F>, b: &ComoduleAlgebra<F>) -> Result<AlgebraData<F>> {
    if a.hopf != b.hopf {
        return Err(Error::HopfMismatch("crossed product algebra".into()));
    }
    let (da, db) = (a.algebra.dim, b.algebra.dim);
    let (rho, act, ma, mb) = (b.coact_op(), a.act_op(), a.algebra.mul_op(), b.algebra.mul_op());
    let pair = TensorShape::new(vec![da, db]);
    let input = TensorShape::new(vec![da, db, da, db]);
    let mul = matrix_of(&input, &pair, |idx| {
        Terms::basis(idx)
            .apply(1, &rho)
            .permute(&[0, 1, 3, 2, 4])
            .apply(1, &act)
            .apply(0, &ma)
            .apply(1, &mb)
    });
    let unit = Terms::basis(vec![])
        .apply(0, &a.algebra.unit_op())
        .apply(1, &b.algebra.unit_op())
        .flatten(&pair);
    Ok(AlgebraData { dim: da * db, mul, unit: sparse_to_dense(&unit, da * db) })
}

/// `Δ(z, c) = (z_(1), z_(2)[-1] c_(1)) ⊗ (z_(2)[0], c_(2))` on `Z ⊗ C`.
pub fn crossed_product_coalgebra<F: Field>(
    z: &ComoduleCoalgebra<F>,
    c: &ModuleCoalgebra<F>,
) -> Result<CoalgebraData<F>> {
    if z.hopf != c.hopf {
        return Err(Error::HopfMismatch("crossed product coalgebra".into()));
    }
    let compat = z.check_compatibility();
    if !compat.is_empty() {
        return Err(Error::CompatibilityFailure(compat.to_string().trim().to_string()));
    }
    let (dz, dc) = (z.coalgebra.dim, c.coalgebra.dim);
    let (rho, act, delz, delc) = (z.coact_op(), c.act_op(), z.coalgebra.comul_op(), c.coalgebra.comul_op());
    let comul = matrix_of(&TensorShape::new(vec![dz, dc]), &TensorShape::new(vec![dz, dc, dz, dc]), |idx| {
        Terms::basis(idx)
            .apply(0, &delz)
            .apply(1, &rho)
            .apply(3, &delc)
            .permute(&[0, 1, 3, 2, 4])
            .apply(1, &act)
    });
    let counit = (0..dz * dc)
        .map(|i| z.coalgebra.counit[i / dc].clone() * c.coalgebra.counit[i % dc].clone())
        .collect();
    Ok(CoalgebraData { dim: dz * dc, comul, counit })
}

/// `M □^H M'`: elements with `m_(-1) ⊗ m_(0) ⊗ m' = m'_(-1) ⊗ m ⊗ m'_(0)`.
pub fn cotensor<F: Field>(m: &ModComodule<F>, m2: &ModComodule<F>) -> Result<Subspace<F>> {
    if m.hopf != m2.hopf {
        return Err(Error::HopfMismatch("cotensor".into()));
    }
    let (h, a, b) = (m.hopf.dim(), m.dim, m2.dim);
    let (r1, r2) = (m.coact_op(), m2.coact_op());
    let op = matrix_of(&TensorShape::new(vec![a, b]), &TensorShape::new(vec![h, a, b]), |idx| {
        let t = Terms::basis(idx);
        t.apply(0, &r1).sub(&t.apply(1, &r2).permute(&[1, 0, 2]))
    });
    Ok(op.kernel())
}

/// Diagonal action `h·(m ⊗ m') = h_(1)m ⊗ h_(2)m'` on `M ⊗ M'`.
pub fn diagonal_action<F: Field>(m: &ModComodule<F>, m2: &ModComodule<F>) -> Matrix<F> {
    let (h, a, b) = (m.hopf.dim(), m.dim, m2.dim);
    let (dl, x, y) = (m.hopf.comul_op(), m.act_op(), m2.act_op());
    matrix_of(&TensorShape::new(vec![h, a, b]), &TensorShape::new(vec![a, b]), |idx| {
        Terms::basis(idx).apply(0, &dl).permute(&[0, 2, 1, 3]).apply(0, &x).apply(1, &y)
    })
}

/// `h(h'm) = h'(hm)` for all basis elements.
pub fn is_symmetric_module<F: Field>(m: &ModComodule<F>) -> bool {
    let mut r = Report::new();
    let act = m.act_op();
    let h = m.hopf.dim();
    compare_maps(&mut r, "symmetric", &[h, h, m.dim], |t| t.apply(1, &act).apply(0, &act), |t| {
        t.permute(&[1, 0, 2]).apply(1, &act).apply(0, &act)
    });
    r.is_empty()
}

/// Decided hypotheses on the Hopf algebra and the coefficient modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub commutative: bool,
    pub cocommutative: bool,
    pub symmetric_modules: Option<bool>,
    pub cotensor_submodule: Option<bool>,
}

pub fn check_hypotheses<F: Field>(
    h: &HopfAlgebraData<F>,
    modules: Option<(&ModComodule<F>, &ModComodule<F>)>,
) -> Result<Hypotheses> {
    let mut out = Hypotheses {
        commutative: h.algebra.is_commutative(),
        cocommutative: h.coalgebra.is_cocommutative(),
        symmetric_modules: None,
        cotensor_submodule: None,
    };
    if let Some((m, m2)) = modules {
        out.symmetric_modules = Some(is_symmetric_module(m) && is_symmetric_module(m2));
        let box_space = cotensor(m, m2)?;
        let act = diagonal_action(m, m2);
        let d = m.dim * m2.dim;
        let closed = (0..h.dim()).all(|hi| {
            let lh = Matrix::from_fn(d, d, |c| act.column(hi * d + c).to_vec());
            box_space.basis().iter().all(|v| box_space.contains(&lh.apply(v)))
        });
        out.cotensor_submodule = Some(closed);
    }
    Ok(out)
}

/// `M ⊗_H M'` with the action on the left factor and the diagonal coaction.
#[derive(Clone, Debug)]
pub struct BalancedTensor<F: Field> {
    pub module: ModComodule<F>,
    pub quotient: Quotient<F>,
}

pub fn balanced_tensor<F: Field>(m: &ModComodule<F>, m2: &ModComodule<F>) -> Result<BalancedTensor<F>> {
    if m.hopf != m2.hopf {
        return Err(Error::HopfMismatch("balanced tensor".into()));
    }
    let (h, a, b) = (m.hopf.dim(), m.dim, m2.dim);
    let pair = TensorShape::new(vec![a, b]);
    let (x, y) = (m.act_op(), m2.act_op());
    let mut rel = Subspace::zero(a * b);
    for hi in 0..h {
        for mi in 0..a {
            for mj in 0..b {
                let t = Terms::basis(vec![hi, mi, mj]);
                let v = t.apply(0, &x).sub(&t.permute(&[1, 0, 2]).apply(1, &y)).flatten(&pair);
                rel.insert(v);
            }
        }
    }
    let quotient = rel.quotient();
    let dq = quotient.dim();
    let act_full = matrix_of(&TensorShape::new(vec![h, a, b]), &pair, |idx| Terms::basis(idx).apply(0, &x));
    let (r1, r2, mh) = (m.coact_op(), m2.coact_op(), m.hopf.mul_op());
    let coact_full = matrix_of(&pair, &TensorShape::new(vec![h, a, b]), |idx| {
        Terms::basis(idx).apply(1, &r2).apply(0, &r1).permute(&[0, 2, 1, 3]).apply(0, &mh)
    });
    // descent: relations map into relations
    let lift = |hi: usize, v: &[(usize, F)]| -> Vec<(usize, F)> {
        v.iter().map(|(k, c)| (hi * a * b + k, c.clone())).collect()
    };
    let rel_h = Subspace::spanned_by(h * a * b, rel.basis().iter().flat_map(|v| (0..h).map(move |hi| lift(hi, v))));
    for v in rel.basis() {
        if !rel_h.contains(&coact_full.apply(v)) {
            return Err(Error::DescentFailure("coaction on the balanced tensor".into()));
        }
        for hi in 0..h {
            if !rel.contains(&act_full.apply(&lift(hi, v))) {
                return Err(Error::DescentFailure("action on the balanced tensor".into()));
            }
        }
    }
    let action = Matrix::from_fn(dq, h * dq, |c| {
        let (hi, qi) = (c / dq, c % dq);
        quotient.projection.apply(&act_full.apply(&lift(hi, quotient.section.column(qi))))
    });
    let proj_h = Matrix::identity(h).kron(&quotient.projection);
    let coaction = proj_h.mul(&coact_full).mul(&quotient.section);
    Ok(BalancedTensor { module: ModComodule { hopf: m.hopf.clone(), dim: dq, action, coaction }, quotient })
}

/// `Z ⊗ Z'` with `(z ⊗ z')_[-1] = z_[-1] z'_[-1]`; needs `H` commutative.
pub fn tensor_comodule_coalgebra<F: Field>(
    z: &ComoduleCoalgebra<F>,
    z2: &ComoduleCoalgebra<F>,
) -> Result<ComoduleCoalgebra<F>> {
    if z.hopf != z2.hopf {
        return Err(Error::HopfMismatch("tensor of comodule coalgebras".into()));
    }
    if !z.hopf.algebra.is_commutative() {
        return Err(Error::HypothesisFailure("H is not commutative".into()));
    }
    let (a, b) = (z.coalgebra.dim, z2.coalgebra.dim);
    let coalgebra = z.coalgebra.tensor(&z2.coalgebra);
    let (r1, r2, mh) = (z.coact_op(), z2.coact_op(), z.hopf.mul_op());
    let coaction = matrix_of(&TensorShape::new(vec![a, b]), &TensorShape::new(vec![z.hopf.dim(), a, b]), |idx| {
        Terms::basis(idx).apply(1, &r2).apply(0, &r1).permute(&[0, 2, 1, 3]).apply(0, &mh)
    });
    Ok(ComoduleCoalgebra { hopf: z.hopf.clone(), coalgebra, coaction })
}

/// `A ⊗ A'` as a module algebra over `H ⊗ H`.
pub fn tensor_module_algebra<F: Field>(a: &ModuleAlgebra<F>, a2: &ModuleAlgebra<F>) -> ModuleAlgebra<F> {
    let hopf = a.hopf.tensor(&a2.hopf);
    let algebra = a.algebra.tensor(&a2.algebra);
    let (h1, h2, d1, d2) = (a.hopf.dim(), a2.hopf.dim(), a.algebra.dim, a2.algebra.dim);
    let (x, y) = (a.act_op(), a2.act_op());
    let action = matrix_of(&TensorShape::new(vec![h1, h2, d1, d2]), &TensorShape::new(vec![d1, d2]), |idx| {
        Terms::basis(idx).permute(&[0, 2, 1, 3]).apply(0, &x).apply(1, &y)
    });
    ModuleAlgebra { hopf, algebra, action }
}

/// `M ⊗ M'` as a module-comodule over `H ⊗ H`.
pub fn tensor_modcomodule<F: Field>(m: &ModComodule<F>, m2: &ModComodule<F>) -> ModComodule<F> {
    let hopf = m.hopf.tensor(&m2.hopf);
    let (h1, h2, d1, d2) = (m.hopf.dim(), m2.hopf.dim(), m.dim, m2.dim);
    let (x, y, r1, r2) = (m.act_op(), m2.act_op(), m.coact_op(), m2.coact_op());
    let action = matrix_of(&TensorShape::new(vec![h1, h2, d1, d2]), &TensorShape::new(vec![d1, d2]), |idx| {
        Terms::basis(idx).permute(&[0, 2, 1, 3]).apply(0, &x).apply(1, &y)
    });
    let coaction = matrix_of(&TensorShape::new(vec![d1, d2]), &TensorShape::new(vec![h1, h2, d1, d2]), |idx| {
        Terms::basis(idx).apply(1, &r2).apply(0, &r1).permute(&[0, 2, 1, 3])
    });
    ModComodule { hopf, dim: d1 * d2, action, coaction }
}
