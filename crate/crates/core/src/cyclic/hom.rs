//! Modules built from linear maps: `C_•(B, M)`, `C_•(Z, M)`, the diagonal
//! Hom and tensor modules, and the cyclic dual.

use super::module::{Generators, Orientation, ParaCyclicModule};
use crate::error::{Error, Result};
use crate::hopf::expr::{Op, Terms};
use crate::hopf::{is_sayd, ComoduleAlgebra, ComoduleCoalgebra, HopfAlgebraData, ModComodule};
use crate::linalg::{Field, Matrix, Subspace, TensorShape};

/// The matrix of `f ↦ g` from `Hom(X, M)` to `Hom(Y, M)`, where
/// `g(y) = Σ L_k f(x_k)` over the pairs `(x_k, L_k)` returned by `rule(y)`.
///
/// `Hom(X, M)` is vectorized row-major: `E_{m,x}` has index `m * dim X + x`.
pub fn hom_transform<F: Field>(
    dim_m: usize,
    x: &TensorShape,
    y: &TensorShape,
    rule: impl Fn(Vec<usize>) -> Vec<(Vec<usize>, Matrix<F>)> + Sync,
) -> Matrix<F> {
    use rayon::prelude::*;
    let (dx, dy) = (x.total(), y.total());
    let triplets: Vec<(usize, usize, F)> = (0..dy)
        .into_par_iter()
        .flat_map_iter(|yi| {
            let mut out = Vec::new();
            for (xi, l) in rule(y.decode(yi)) {
                let xf = x.encode(&xi);
                for (mr, mc, v) in l.triplets() {
                    out.push((mr * dy + yi, mc * dx + xf, v));
                }
            }
            out
        })
        .collect();
    Matrix::from_triplets(dim_m * dy, dim_m * dx, triplets)
}

/// `b^0 ⊗ ... ⊗ b^n ↦ b^0_(-1) ... b^n_(-1) ⊗ (b^0_(0) ⊗ ... ⊗ b^n_(0))`.
pub fn diagonal_coaction<F: Field>(hopf: &HopfAlgebraData<F>, rho: &Op<F>, idx: Vec<usize>) -> Terms<F> {
    let k = idx.len();
    let mut t = Terms::basis(idx);
    for i in 0..k {
        t = t.apply(2 * i, rho);
    }
    let perm: Vec<usize> = (0..k).map(|i| 2 * i).chain((0..k).map(|i| 2 * i + 1)).collect();
    t = t.permute(&perm);
    let m = hopf.mul_op();
    for _ in 1..k {
        t = t.apply(0, &m);
    }
    t
}

/// The subspace of colinear maps in `Hom(X, M)`, `X = D^{⊗k}` with the
/// diagonal coaction.
pub fn colinear_maps<F: Field>(hopf: &HopfAlgebraData<F>, rho_d: &Op<F>, dim_d: usize, k: usize, m: &ModComodule<F>) -> Subspace<F> {
    let x = TensorShape::new(vec![dim_d; k]);
    let (dx, dm, dh) = (x.total(), m.dim, hopf.dim());
    let mut triplets = Vec::new();
    // ρ_M ∘ f
    for mi in 0..dm {
        for (r, v) in m.coaction.column(mi) {
            for xi in 0..dx {
                triplets.push((r * dx + xi, mi * dx + xi, v.clone()));
            }
        }
    }
    // − (id ⊗ f) ∘ ρ_X
    for yi in 0..dx {
        for (idx, c) in diagonal_coaction(hopf, rho_d, x.decode(yi)).terms() {
            let h = idx[0];
            let xf = x.encode(&idx[1..]);
            for mi in 0..dm {
                triplets.push(((h * dm + mi) * dx + yi, mi * dx + xf, -c.clone()));
            }
        }
    }
    Matrix::from_triplets(dh * dm * dx, dm * dx, triplets).kernel()
}

/// Action matrices `L_h` on `M` for each basis `h`.
fn action_matrices<F: Field>(m: &ModComodule<F>) -> Vec<Matrix<F>> {
    (0..m.hopf.dim())
        .map(|h| Matrix::from_fn(m.dim, m.dim, |c| m.action.column(h * m.dim + c).to_vec()))
        .collect()
}

/// `L_v` for a vector `v = Σ v_h e_h`.
fn act_by<F: Field>(mats: &[Matrix<F>], v: &[(usize, F)], dim: usize) -> Matrix<F> {
    let mut acc = Matrix::zeros(dim, dim);
    for (h, c) in v {
        acc = acc.lin(&F::one(), &mats[*h], c);
    }
    acc
}

fn scalar<F: Field>(c: &F, dim: usize) -> Matrix<F> {
    Matrix::identity(dim).scaled(c)
}

/// A module realized inside ambient spaces via its inclusion.
#[derive(Clone, Debug)]
pub struct SubModule<F: Field> {
    pub module: ParaCyclicModule<F>,
    /// Degree `n` basis as a subspace of the ambient `Hom` space.
    pub ambient: Vec<Subspace<F>>,
}

fn restrict_all<F: Field>(
    name: &str,
    orientation: Orientation,
    truncation: usize,
    spaces: &[Subspace<F>],
    face0: &[Option<Matrix<F>>],
    degen0: &[Option<Matrix<F>>],
    tau: &[Matrix<F>],
    tau_inv: &[Matrix<F>],
) -> Result<SubModule<F>> {
    let top = spaces.len() - 1;
    let fd = |n| super::module::face_degrees(orientation, n);
    let dd = |n| super::module::degen_degrees(orientation, n);
    let wrap = |e: Error, what: String| match e {
        Error::IdentityFailure(_) => Error::IdentityFailure(format!("{name}: {what} leaves the colinear maps")),
        other => other,
    };
    let mut first_face = vec![None];
    for n in 1..=top {
        let (a, b) = fd(n);
        let m = face0[n].as_ref().expect("face").restrict(&spaces[a], &spaces[b]).map_err(|e| wrap(e, format!("face 0, degree {n}")))?;
        first_face.push(Some(m));
    }
    let mut first_degen = Vec::new();
    for n in 0..=top {
        if n == top {
            first_degen.push(None);
            continue;
        }
        let (a, b) = dd(n);
        let m = degen0[n].as_ref().expect("degen").restrict(&spaces[a], &spaces[b]).map_err(|e| wrap(e, format!("degeneracy 0, degree {n}")))?;
        first_degen.push(Some(m));
    }
    let mut cyclic = Vec::new();
    let mut cyclic_inv = Vec::new();
    for n in 0..=top {
        cyclic.push(tau[n].restrict(&spaces[n], &spaces[n]).map_err(|e| wrap(e, format!("tau, degree {n}")))?);
        cyclic_inv.push(tau_inv[n].restrict(&spaces[n], &spaces[n]).map_err(|e| wrap(e, format!("tau inverse, degree {n}")))?);
    }
    let dims = spaces.iter().map(|s| s.dim()).collect();
    let module = ParaCyclicModule::from_generators(
        name,
        orientation,
        truncation,
        dims,
        Generators { first_face, first_degen, cyclic, cyclic_inv },
    );
    Ok(SubModule { module, ambient: spaces.to_vec() })
}

/// `C_•(B, M)`: colinear maps `B^{⊗n+1} → M`, cocyclic.
pub fn hopf_cocyclic_comodule_algebra<F: Field>(b: &ComoduleAlgebra<F>, m: &ModComodule<F>, truncation: usize, top: usize) -> Result<SubModule<F>> {
    if b.hopf != m.hopf {
        return Err(Error::HopfMismatch("comodule algebra and coefficients".into()));
    }
    if !is_sayd(m) {
        return Err(Error::NotSayd(crate::hopf::check_sayd(m).to_string().trim().to_string()));
    }
    let (db, dm) = (b.algebra.dim, m.dim);
    let hopf = &b.hopf;
    let sh = |n: usize| TensorShape::new(vec![db; n + 1]);
    let (mul, unit, rho) = (b.algebra.mul_op(), b.algebra.unit_op(), b.coact_op());
    let acts = action_matrices(m);
    let spaces: Vec<Subspace<F>> = (0..=top).map(|n| colinear_maps(hopf, &rho, db, n + 1, m)).collect();
    let face0: Vec<Option<Matrix<F>>> = (0..=top)
        .map(|n| {
            (n >= 1).then(|| {
                hom_transform(dm, &sh(n - 1), &sh(n), |y| {
                    Terms::basis(y).apply(0, &mul).terms().iter().map(|(x, c)| (x.clone(), scalar(c, dm))).collect()
                })
            })
        })
        .collect();
    let degen0: Vec<Option<Matrix<F>>> = (0..=top)
        .map(|n| {
            (n < top).then(|| {
                hom_transform(dm, &sh(n + 1), &sh(n), |y| {
                    Terms::basis(y).apply(1, &unit).terms().iter().map(|(x, c)| (x.clone(), scalar(c, dm))).collect()
                })
            })
        })
        .collect();
    let s_op = hopf.antipode.clone();
    let tau: Vec<Matrix<F>> = (0..=top)
        .map(|n| {
            // (τf)(b^0..b^n) = S(b^n_(-1)) f(b^n_(0), b^0, .., b^{n-1})
            hom_transform(dm, &sh(n), &sh(n), |y| {
                Terms::basis(y)
                    .apply(n, &rho)
                    .terms()
                    .iter()
                    .map(|(idx, c)| {
                        let h = idx[n];
                        let mut x = vec![idx[n + 1]];
                        x.extend_from_slice(&idx[..n]);
                        (x, act_by(&acts, s_op.column(h), dm).scaled(c))
                    })
                    .collect()
            })
        })
        .collect();
    let tau_inv: Vec<Matrix<F>> = (0..=top)
        .map(|n| {
            // (τ^{-1}g)(b^0..b^n) = b^0_(-1) g(b^1, .., b^n, b^0_(0))
            hom_transform(dm, &sh(n), &sh(n), |y| {
                Terms::basis(y)
                    .apply(0, &rho)
                    .terms()
                    .iter()
                    .map(|(idx, c)| {
                        let mut x = idx[2..].to_vec();
                        x.push(idx[1]);
                        (x, acts[idx[0]].scaled(c))
                    })
                    .collect()
            })
        })
        .collect();
    restrict_all("C(B,M)", Orientation::Cochain, truncation, &spaces, &face0, &degen0, &tau, &tau_inv)
}

/// `C_•(Z, M)`: colinear maps `Z^{⊗n+1} → M`, cyclic.
pub fn hopf_cyclic_comodule_coalgebra<F: Field>(z: &ComoduleCoalgebra<F>, m: &ModComodule<F>, truncation: usize, top: usize) -> Result<SubModule<F>> {
    if z.hopf != m.hopf {
        return Err(Error::HopfMismatch("comodule coalgebra and coefficients".into()));
    }
    let compat = z.check_compatibility();
    if !compat.is_empty() {
        return Err(Error::CompatibilityFailure(compat.to_string().trim().to_string()));
    }
    let (dz, dm) = (z.coalgebra.dim, m.dim);
    let hopf = &z.hopf;
    let sh = |n: usize| TensorShape::new(vec![dz; n + 1]);
    let (dl, eps, rho) = (z.coalgebra.comul_op(), z.coalgebra.counit_op(), z.coact_op());
    let acts = action_matrices(m);
    let spaces: Vec<Subspace<F>> = (0..=top).map(|n| colinear_maps(hopf, &rho, dz, n + 1, m)).collect();
    let face0: Vec<Option<Matrix<F>>> = (0..=top)
        .map(|n| {
            (n >= 1).then(|| {
                hom_transform(dm, &sh(n), &sh(n - 1), |y| {
                    Terms::basis(y).apply(0, &dl).terms().iter().map(|(x, c)| (x.clone(), scalar(c, dm))).collect()
                })
            })
        })
        .collect();
    let degen0: Vec<Option<Matrix<F>>> = (0..=top)
        .map(|n| {
            (n < top).then(|| {
                hom_transform(dm, &sh(n), &sh(n + 1), |y| {
                    Terms::basis(y).apply(1, &eps).terms().iter().map(|(x, c)| (x.clone(), scalar(c, dm))).collect()
                })
            })
        })
        .collect();
    let s_op = hopf.antipode.clone();
    let tau: Vec<Matrix<F>> = (0..=top)
        .map(|n| {
            // (τf)(z^0..z^n) = z^0_[-1] f(z^1, .., z^n, z^0_[0])
            hom_transform(dm, &sh(n), &sh(n), |y| {
                Terms::basis(y)
                    .apply(0, &rho)
                    .terms()
                    .iter()
                    .map(|(idx, c)| {
                        let mut x = idx[2..].to_vec();
                        x.push(idx[1]);
                        (x, acts[idx[0]].scaled(c))
                    })
                    .collect()
            })
        })
        .collect();
    let tau_inv: Vec<Matrix<F>> = (0..=top)
        .map(|n| {
            // (τ^{-1}g)(z^0..z^n) = S(z^n_[-1]) g(z^n_[0], z^0, .., z^{n-1})
            hom_transform(dm, &sh(n), &sh(n), |y| {
                Terms::basis(y)
                    .apply(n, &rho)
                    .terms()
                    .iter()
                    .map(|(idx, c)| {
                        let mut x = vec![idx[n + 1]];
                        x.extend_from_slice(&idx[..n]);
                        (x, act_by(&acts, s_op.column(idx[n]), dm).scaled(c))
                    })
                    .collect()
            })
        })
        .collect();
    restrict_all("C(Z,M)", Orientation::Chain, truncation, &spaces, &face0, &degen0, &tau, &tau_inv)
}

/// The diagonal Hom module between modules of opposite orientation; it
/// takes the orientation of `y`. Degree `n` is `Hom(X_n, Y_n)`, row-major.
pub fn diag_hom<F: Field>(x: &ParaCyclicModule<F>, y: &ParaCyclicModule<F>) -> Result<ParaCyclicModule<F>> {
    if x.orientation == y.orientation {
        return Err(Error::ShapeMismatch("diagonal Hom needs opposite orientations".into()));
    }
    let top = x.top().min(y.top());
    let k = |p: &Matrix<F>, q: &Matrix<F>| p.kron(&q.transpose());
    let faces = (0..=top)
        .map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|j| k(&y.faces[n][j], &x.faces[n][j])).collect() })
        .collect();
    let degens = (0..=top)
        .map(|n| if n == top { Vec::new() } else { (0..=n).map(|i| k(&y.degens[n][i], &x.degens[n][i])).collect() })
        .collect();
    Ok(ParaCyclicModule {
        name: format!("Hom({}, {})", x.name, y.name),
        orientation: y.orientation,
        truncation: x.truncation.min(y.truncation),
        dims: (0..=top).map(|n| x.dims[n] * y.dims[n]).collect(),
        faces,
        degens,
        cyclic: (0..=top).map(|n| k(&y.cyclic[n], &x.cyclic[n])).collect(),
        cyclic_inv: (0..=top).map(|n| k(&y.cyclic_inv[n], &x.cyclic_inv[n])).collect(),
        h_action: None,
        hopf: None,
    })
}

/// The diagonal tensor product; carries the `H ⊗ H'` action when both
/// factors carry actions.
pub fn diag_tensor<F: Field>(u: &ParaCyclicModule<F>, v: &ParaCyclicModule<F>) -> Result<ParaCyclicModule<F>> {
    if u.orientation != v.orientation {
        return Err(Error::ShapeMismatch("diagonal tensor needs equal orientations".into()));
    }
    let top = u.top().min(v.top());
    let faces = (0..=top)
        .map(|n| if n == 0 { Vec::new() } else { (0..=n).map(|j| u.faces[n][j].kron(&v.faces[n][j])).collect() })
        .collect();
    let degens = (0..=top)
        .map(|n| if n == top { Vec::new() } else { (0..=n).map(|i| u.degens[n][i].kron(&v.degens[n][i])).collect() })
        .collect();
    let (h_action, hopf) = match (&u.h_action, &v.h_action, &u.hopf, &v.hopf) {
        (Some(a), Some(b), Some(ha), Some(hb)) => (
            Some(
                (0..=top)
                    .map(|n| a[n].iter().flat_map(|la| b[n].iter().map(move |lb| la.kron(lb))).collect())
                    .collect(),
            ),
            Some(ha.tensor(hb)),
        ),
        _ => (None, None),
    };
    Ok(ParaCyclicModule {
        name: format!("{} x {}", u.name, v.name),
        orientation: u.orientation,
        truncation: u.truncation.min(v.truncation),
        dims: (0..=top).map(|n| u.dims[n] * v.dims[n]).collect(),
        faces,
        degens,
        cyclic: (0..=top).map(|n| u.cyclic[n].kron(&v.cyclic[n])).collect(),
        cyclic_inv: (0..=top).map(|n| u.cyclic_inv[n].kron(&v.cyclic_inv[n])).collect(),
        h_action,
        hopf,
    })
}

/// Connes' duality. For a chain module: `δ_i = s_{i-1}` (`1 ≤ i ≤ n`),
/// `δ_0 = t_n s_{n-1}`, `σ_i = d_i`, `τ = t^{-1}`. The cochain direction
/// inverts these, with the missing last face `d_n = σ_0 τ^{-1}`.
pub fn cyclic_dual<F: Field>(x: &ParaCyclicModule<F>) -> ParaCyclicModule<F> {
    let top = x.top();
    let mut faces = vec![Vec::new(); top + 1];
    let mut degens = vec![Vec::new(); top + 1];
    match x.orientation {
        Orientation::Chain => {
            for n in 1..=top {
                let mut fs = vec![x.cyclic[n].mul(&x.degens[n - 1][n - 1])];
                fs.extend((1..=n).map(|i| x.degens[n - 1][i - 1].clone()));
                faces[n] = fs;
            }
            for n in 0..top {
                degens[n] = (0..=n).map(|i| x.faces[n + 1][i].clone()).collect();
            }
        }
        Orientation::Cochain => {
            for n in 1..=top {
                let mut fs: Vec<Matrix<F>> = (0..n).map(|i| x.degens[n - 1][i].clone()).collect();
                fs.push(x.degens[n - 1][0].mul(&x.cyclic_inv[n]));
                faces[n] = fs;
            }
            for n in 0..top {
                degens[n] = (0..=n).map(|j| x.faces[n + 1][j + 1].clone()).collect();
            }
        }
    }
    ParaCyclicModule {
        name: format!("{}^", x.name),
        orientation: x.orientation.flipped(),
        truncation: x.truncation,
        dims: x.dims.clone(),
        faces,
        degens,
        cyclic: x.cyclic_inv.clone(),
        cyclic_inv: x.cyclic.clone(),
        h_action: None,
        hopf: None,
    }
}
