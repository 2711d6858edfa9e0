//! The constant modules, the classical cyclic modules and the cover
//! complexes `T(C, M)` and `T(A, M)`.

use super::module::{Generators, Orientation, ParaCyclicModule};
use crate::error::{Error, Result};
use crate::hopf::expr::{matrix_of_par, Op, Terms};
use crate::hopf::{AlgebraData, CoalgebraData, HopfAlgebraData, ModComodule, ModuleAlgebra, ModuleCoalgebra};
use crate::linalg::{Field, Matrix, TensorShape};

/// `k_•` (cocyclic) and `k_•^∨` (cyclic) on degrees `0..=top`.
pub fn constant_modules<F: Field>(truncation: usize, top: usize) -> (ParaCyclicModule<F>, ParaCyclicModule<F>) {
    let build = |name: &str, o| {
        let one = || Matrix::<F>::identity(1);
        ParaCyclicModule::from_generators(
            name,
            o,
            truncation,
            vec![1; top + 1],
            Generators {
                first_face: (0..=top).map(|_| Some(one())).collect(),
                first_degen: (0..=top).map(|_| Some(one())).collect(),
                cyclic: (0..=top).map(|_| one()).collect(),
                cyclic_inv: (0..=top).map(|_| one()).collect(),
            },
        )
    };
    (build("k", Orientation::Cochain), build("k^v", Orientation::Chain))
}

fn shape(base: usize, n: usize, m: usize) -> TensorShape {
    TensorShape::power_with(base, n + 1, m)
}

/// Diagonal action `h·(x_0 ⊗ ... ⊗ x_n ⊗ m) = h_(1)x_0 ⊗ ... ⊗ h_(n+2)m`.
fn diagonal_action<F: Field>(hopf: &HopfAlgebraData<F>, factor: &Op<F>, coeff: &Op<F>, n: usize, base: usize, m: usize) -> Vec<Matrix<F>> {
    let k = n + 2;
    let sh = shape(base, n, m);
    let dl = hopf.comul_op();
    (0..hopf.dim())
        .map(|h| {
            matrix_of_par(&sh, &sh, |idx| {
                let mut start = vec![h];
                start.extend(idx);
                let mut t = Terms::basis(start);
                for _ in 1..k {
                    t = t.apply(0, &dl);
                }
                // (h_1 .. h_k, x_0 .. x_{k-1}) -> (h_1, x_0, h_2, x_1, ...)
                let perm: Vec<usize> = (0..k).flat_map(|i| [i, k + i]).collect();
                t = t.permute(&perm);
                for i in 0..k {
                    t = t.apply(i, if i + 1 == k { coeff } else { factor });
                }
                t
            })
        })
        .collect()
}

/// `T_•(C, M)`: para-cocyclic, degree `n` is `C^{⊗n+1} ⊗ M`.
pub fn cover_coalgebra<F: Field>(c: &ModuleCoalgebra<F>, m: &ModComodule<F>, truncation: usize, top: usize) -> Result<ParaCyclicModule<F>> {
    if c.hopf != m.hopf {
        return Err(Error::HopfMismatch("coalgebra and coefficients".into()));
    }
    let (dc, dm) = (c.coalgebra.dim, m.dim);
    let (dl, eps, act, rho, act_m, si) = (
        c.coalgebra.comul_op(),
        c.coalgebra.counit_op(),
        c.act_op(),
        m.coact_op(),
        m.act_op(),
        m.hopf.antipode_inv_op(),
    );
    let dims: Vec<usize> = (0..=top).map(|n| shape(dc, n, dm).total()).collect();
    let first_face = (0..=top)
        .map(|n| (n >= 1).then(|| matrix_of_par(&shape(dc, n - 1, dm), &shape(dc, n, dm), |i| Terms::basis(i).apply(0, &dl))))
        .collect();
    let first_degen = (0..=top)
        .map(|n| (n < top).then(|| matrix_of_par(&shape(dc, n + 1, dm), &shape(dc, n, dm), |i| Terms::basis(i).apply(1, &eps))))
        .collect();
    let cyclic = (0..=top)
        .map(|n| {
            let sh = shape(dc, n, dm);
            matrix_of_par(&sh, &sh, |i| {
                // (c_1 .. c_n, m_(-1) c_0, m_(0))
                let t = Terms::basis(i).apply(n + 1, &rho);
                let mut perm: Vec<usize> = (1..=n).collect();
                perm.extend([n + 1, 0, n + 2]);
                t.permute(&perm).apply(n, &act)
            })
        })
        .collect();
    let cyclic_inv = (0..=top)
        .map(|n| {
            let sh = shape(dc, n, dm);
            matrix_of_par(&sh, &sh, |i| {
                // (S^{-1}(m_(-1)) x_n, x_0 .. x_{n-1}, m_(0))
                let t = Terms::basis(i).apply(n + 1, &rho).apply(n + 1, &si);
                let mut perm = vec![n + 1, n];
                perm.extend(0..n);
                perm.push(n + 2);
                t.permute(&perm).apply(0, &act)
            })
        })
        .collect();
    let mut x = ParaCyclicModule::from_generators(
        "T(C,M)",
        Orientation::Cochain,
        truncation,
        dims,
        Generators { first_face, first_degen, cyclic, cyclic_inv },
    );
    x.h_action = Some((0..=top).map(|n| diagonal_action(&c.hopf, &act, &act_m, n, dc, dm)).collect());
    x.hopf = Some(c.hopf.clone());
    Ok(x)
}

/// `T_•(A, M)`: para-cyclic, degree `n` is `A^{⊗n+1} ⊗ M`.
pub fn cover_algebra<F: Field>(a: &ModuleAlgebra<F>, m: &ModComodule<F>, truncation: usize, top: usize) -> Result<ParaCyclicModule<F>> {
    if a.hopf != m.hopf {
        return Err(Error::HopfMismatch("algebra and coefficients".into()));
    }
    let (da, dm) = (a.algebra.dim, m.dim);
    let (mul, unit, act, rho, act_m, si) = (
        a.algebra.mul_op(),
        a.algebra.unit_op(),
        a.act_op(),
        m.coact_op(),
        m.act_op(),
        m.hopf.antipode_inv_op(),
    );
    let dims: Vec<usize> = (0..=top).map(|n| shape(da, n, dm).total()).collect();
    let first_face = (0..=top)
        .map(|n| (n >= 1).then(|| matrix_of_par(&shape(da, n, dm), &shape(da, n - 1, dm), |i| Terms::basis(i).apply(0, &mul))))
        .collect();
    let first_degen = (0..=top)
        .map(|n| (n < top).then(|| matrix_of_par(&shape(da, n, dm), &shape(da, n + 1, dm), |i| Terms::basis(i).apply(1, &unit))))
        .collect();
    let cyclic = (0..=top)
        .map(|n| {
            let sh = shape(da, n, dm);
            matrix_of_par(&sh, &sh, |i| {
                // (S^{-1}(m_(-1)) a_n, a_0 .. a_{n-1}, m_(0))
                let t = Terms::basis(i).apply(n + 1, &rho).apply(n + 1, &si);
                let mut perm = vec![n + 1, n];
                perm.extend(0..n);
                perm.push(n + 2);
                t.permute(&perm).apply(0, &act)
            })
        })
        .collect();
    let cyclic_inv = (0..=top)
        .map(|n| {
            let sh = shape(da, n, dm);
            matrix_of_par(&sh, &sh, |i| {
                // (x_1 .. x_n, m_(-1) x_0, m_(0))
                let t = Terms::basis(i).apply(n + 1, &rho);
                let mut perm: Vec<usize> = (1..=n).collect();
                perm.extend([n + 1, 0, n + 2]);
                t.permute(&perm).apply(n, &act)
            })
        })
        .collect();
    let mut x = ParaCyclicModule::from_generators(
        "T(A,M)",
        Orientation::Chain,
        truncation,
        dims,
        Generators { first_face, first_degen, cyclic, cyclic_inv },
    );
    x.h_action = Some((0..=top).map(|n| diagonal_action(&a.hopf, &act, &act_m, n, da, dm)).collect());
    x.hopf = Some(a.hopf.clone());
    Ok(x)
}

/// The classical cyclic module of an algebra.
pub fn cyc_algebra<F: Field>(a: &AlgebraData<F>, truncation: usize, top: usize) -> ParaCyclicModule<F> {
    let h = HopfAlgebraData::trivial();
    let ma = ModuleAlgebra::trivial_action(h.clone(), a.clone());
    let mut x = cover_algebra(&ma, &ModComodule::trivial(h), truncation, top).expect("same Hopf algebra");
    x.name = "Cyc(A)".into();
    x.h_action = None;
    x.hopf = None;
    x
}

/// The classical cocyclic module of a coalgebra.
pub fn cyc_coalgebra<F: Field>(c: &CoalgebraData<F>, truncation: usize, top: usize) -> ParaCyclicModule<F> {
    let h = HopfAlgebraData::trivial();
    let action = crate::hopf::structures::trivial_action_matrix(&h, c.dim);
    let mc = ModuleCoalgebra { hopf: h.clone(), coalgebra: c.clone(), action };
    let mut x = cover_coalgebra(&mc, &ModComodule::trivial(h), truncation, top).expect("same Hopf algebra");
    x.name = "Cyc(C)".into();
    x.h_action = None;
    x.hopf = None;
    x
}
