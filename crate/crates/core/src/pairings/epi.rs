//! The factor-reshuffling map `Q(H ⊗ H; A ⊗ A', M ⊗ M') → diag(Q(A, M) ⊗ Q(A', M'))`.

use crate::cyclic::{cover_algebra, diag_tensor, HopfCyclicTower, ModuleMorphism};
use crate::error::Result;
use crate::hopf::{tensor_modcomodule, tensor_module_algebra, ModComodule, ModuleAlgebra};
use crate::linalg::{Field, Matrix, TensorShape};
use crate::report::Report;

/// How the reshuffling treats the last `A'` factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reshuffle {
    Canonical,
    /// Replaces the last `A'` factor by its unit component.
    DropFactor,
}

/// `((a_i, a'_i))_i ⊗ (m, m') ↦ (a_i)_i ⊗ m ⊗ (a'_i)_i ⊗ m'` on the covers.
pub fn reshuffle<F: Field>(da: usize, db: usize, dm: usize, dm2: usize, n: usize, mode: Reshuffle) -> Matrix<F> {
    let src = {
        let mut d = vec![da * db; n + 1];
        d.push(dm * dm2);
        TensorShape::new(d)
    };
    let left = {
        let mut d = vec![da; n + 1];
        d.push(dm);
        TensorShape::new(d)
    };
    let right = {
        let mut d = vec![db; n + 1];
        d.push(dm2);
        TensorShape::new(d)
    };
    Matrix::from_fn(left.total() * right.total(), src.total(), |c| {
        let idx = src.decode(c);
        let mut l: Vec<usize> = idx[..=n].iter().map(|i| i / db).collect();
        let mut r: Vec<usize> = idx[..=n].iter().map(|i| i % db).collect();
        if mode == Reshuffle::DropFactor && r[n] != 0 {
            return vec![];
        }
        l.push(idx[n + 1] / dm2);
        r.push(idx[n + 1] % dm2);
        vec![(left.encode(&l) * right.total() + right.encode(&r), F::one())]
    })
}

/// Descent, morphism identities and surjectivity in degrees `0..=top`; `J`
/// is saturated up to `top + buffer`.
pub fn diag_tensor_epi_check<F: Field>(
    a: &ModuleAlgebra<F>,
    a2: &ModuleAlgebra<F>,
    m: &ModComodule<F>,
    m2: &ModComodule<F>,
    top: usize,
    buffer: usize,
    mode: Reshuffle,
    parallel: bool,
) -> Result<Report> {
    let build = |x: &ModuleAlgebra<F>, y: &ModComodule<F>| -> Result<HopfCyclicTower<F>> {
        HopfCyclicTower::build(cover_algebra(x, y, top, top + buffer)?, top, parallel)
    };
    let t1 = build(a, m)?;
    let t2 = build(a2, m2)?;
    let t12 = build(&tensor_module_algebra(a, a2), &tensor_modcomodule(m, m2))?;
    let target = diag_tensor(&t1.q, &t2.q)?;
    let mut r = Report::new();
    let mut maps = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let raw = reshuffle::<F>(a.algebra.dim, a2.algebra.dim, m.dim, m2.dim, n, mode);
        let proj = t1.q_maps[n].projection.kron(&t2.q_maps[n].projection).mul(&raw);
        let descends = t12.j[n].basis().iter().all(|v| proj.apply(v).is_empty());
        r.require(descends, "reshuffling descends to Q", || format!("degree {n}"));
        let e = proj.mul(&t12.q_maps[n].section);
        r.require(e.rank() == target.dims[n], "reshuffling is surjective", || {
            format!("degree {n}: rank {} of {}", e.rank(), target.dims[n])
        });
        maps.push(e);
    }
    let f = ModuleMorphism { name: "reshuffle".into(), maps };
    r.merge(f.check(&t12.q, &target, top)?.prefixed("reshuffle"));
    Ok(r)
}
