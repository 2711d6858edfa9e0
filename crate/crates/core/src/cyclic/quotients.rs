//! The saturation `J_•`, the quotient `Q_• = T_•/J_•` and the coinvariants
//! `C_• = k ⊗_H Q_•`.

use serde::Serialize;

use super::module::ParaCyclicModule;
use crate::error::{Error, Result};
use crate::linalg::subspace::Quotient;
use crate::linalg::{Field, GradedOperatorSystem, Matrix, Subspace};

/// Every structure operator of `t` as a graded operator system, together
/// with the diagonal action when present.
pub fn structure_operators<F: Field>(t: &ParaCyclicModule<F>) -> GradedOperatorSystem<F> {
    let mut sys = GradedOperatorSystem::new(t.dims.clone());
    for n in 1..=t.top() {
        let (a, b) = t.face_degrees(n);
        for m in &t.faces[n] {
            sys.add(a, b, m.clone());
        }
    }
    for n in 0..t.top() {
        let (a, b) = t.degen_degrees(n);
        for m in &t.degens[n] {
            sys.add(a, b, m.clone());
        }
    }
    for n in 0..=t.top() {
        sys.add(n, n, t.cyclic[n].clone());
        sys.add(n, n, t.cyclic_inv[n].clone());
        if let Some(h) = &t.h_action {
            for l in &h[n] {
                sys.add(n, n, l.clone());
            }
        }
    }
    sys
}

/// Generators of `J_•` in each degree: images of `[L_h, τ_n]` and
/// `τ_n^{n+1} − id`, plus the redundant `[L_h, τ_n^i]` for `2 ≤ |i| ≤ extra_powers`.
pub fn j_seeds<F: Field>(t: &ParaCyclicModule<F>, extra_powers: usize) -> Vec<Vec<Vec<(usize, F)>>> {
    (0..=t.top())
        .map(|n| {
            let mut gens: Vec<Matrix<F>> = Vec::new();
            let tau = &t.cyclic[n];
            let id = Matrix::identity(t.dims[n]);
            gens.push(tau.pow(n + 1).sub(&id));
            if let Some(h) = &t.h_action {
                for l in &h[n] {
                    gens.push(l.mul(tau).sub(&tau.mul(l)));
                    for i in 2..=extra_powers {
                        let p = tau.pow(i);
                        let q = t.cyclic_inv[n].pow(i);
                        gens.push(l.mul(&p).sub(&p.mul(l)));
                        gens.push(l.mul(&q).sub(&q.mul(l)));
                    }
                }
            }
            let mut s = Subspace::zero(t.dims[n]);
            for g in &gens {
                s.extend(g.columns().iter().cloned());
            }
            s.basis_vectors()
        })
        .collect()
}

/// `J_•` closed under every structure operator of `t` on all its degrees.
pub fn compute_j<F: Field>(t: &ParaCyclicModule<F>, extra_powers: usize, parallel: bool) -> Vec<Subspace<F>> {
    structure_operators(t).closure(j_seeds(t, extra_powers), parallel)
}

/// `J_•` dimensions on degrees `0..=report_top`, for each buffer tried.
#[derive(Clone, Debug, Serialize)]
pub struct JStability {
    pub buffers: Vec<usize>,
    pub dims: Vec<Vec<usize>>,
    /// Smallest buffer from which the reported dimensions stop changing.
    pub stable_from: Option<usize>,
}

impl JStability {
    pub fn is_stable(&self) -> bool {
        self.stable_from.is_some()
    }
}

/// Computes `J_•` on truncations `report_top + b` for each `b` in `buffers`
/// (ascending), all cut from the single module `t`.
pub fn j_stability<F: Field>(t: &ParaCyclicModule<F>, report_top: usize, buffers: &[usize], parallel: bool) -> JStability {
    let mut dims = Vec::new();
    for &b in buffers {
        let tt = t.truncated(report_top + b);
        let j = compute_j(&tt, 0, parallel);
        dims.push(j[..=report_top].iter().map(|s| s.dim()).collect::<Vec<_>>());
    }
    let mut stable_from = None;
    for k in (0..buffers.len().saturating_sub(1)).rev() {
        if dims[k] == dims[k + 1] {
            stable_from = Some(buffers[k]);
        } else {
            break;
        }
    }
    JStability { buffers: buffers.to_vec(), dims, stable_from }
}

/// The module induced on degreewise quotients by an invariant subspace
/// family, which must cover degrees `0..=t.top()`.
pub fn quotient_module<F: Field>(t: &ParaCyclicModule<F>, sub: &[Subspace<F>], name: &str) -> Result<(ParaCyclicModule<F>, Vec<Quotient<F>>)> {
    if sub.len() < t.dims.len() {
        return Err(Error::ShapeMismatch("subspace family shorter than module".into()));
    }
    let qs: Vec<Quotient<F>> = (0..=t.top()).map(|n| sub[n].quotient()).collect();
    let preserved = |m: &Matrix<F>, a: usize, b: usize| sub[a].basis().iter().all(|v| sub[b].contains(&m.apply(v)));
    let induce = |m: &Matrix<F>, a: usize, b: usize, what: String| -> Result<Matrix<F>> {
        if !preserved(m, a, b) {
            return Err(Error::DescentFailure(what));
        }
        Ok(qs[a].induce(m, &qs[b]))
    };
    let mut faces = vec![Vec::new(); t.top() + 1];
    for n in 1..=t.top() {
        let (a, b) = t.face_degrees(n);
        for (j, m) in t.faces[n].iter().enumerate() {
            faces[n].push(induce(m, a, b, format!("face {j} at degree {n}"))?);
        }
    }
    let mut degens = vec![Vec::new(); t.top() + 1];
    for n in 0..t.top() {
        let (a, b) = t.degen_degrees(n);
        for (i, m) in t.degens[n].iter().enumerate() {
            degens[n].push(induce(m, a, b, format!("degeneracy {i} at degree {n}"))?);
        }
    }
    let mut cyclic = Vec::new();
    let mut cyclic_inv = Vec::new();
    for n in 0..=t.top() {
        cyclic.push(induce(&t.cyclic[n], n, n, format!("tau at degree {n}"))?);
        cyclic_inv.push(induce(&t.cyclic_inv[n], n, n, format!("tau inverse at degree {n}"))?);
    }
    let h_action = match &t.h_action {
        None => None,
        Some(h) => {
            let mut out = Vec::new();
            for n in 0..=t.top() {
                let mut row = Vec::new();
                for (hi, l) in h[n].iter().enumerate() {
                    row.push(induce(l, n, n, format!("L_e{hi} at degree {n}"))?);
                }
                out.push(row);
            }
            Some(out)
        }
    };
    let x = ParaCyclicModule {
        name: name.to_string(),
        orientation: t.orientation,
        truncation: t.truncation,
        dims: qs.iter().map(|q| q.dim()).collect(),
        faces,
        degens,
        cyclic,
        cyclic_inv,
        h_action,
        hopf: t.hopf.clone(),
    };
    Ok((x, qs))
}

/// `span{L_h x − ε(h) x}` in each degree.
pub fn augmentation_subspaces<F: Field>(q: &ParaCyclicModule<F>) -> Result<Vec<Subspace<F>>> {
    let (Some(h), Some(hopf)) = (&q.h_action, &q.hopf) else {
        return Ok(q.dims.iter().map(|&d| Subspace::zero(d)).collect());
    };
    let eps = hopf.counit();
    Ok((0..=q.top())
        .map(|n| {
            let id = Matrix::identity(q.dims[n]);
            let mut s = Subspace::zero(q.dims[n]);
            for (hi, l) in h[n].iter().enumerate() {
                let m = l.sub(&id.scaled(&eps[hi]));
                s.extend(m.columns().iter().cloned());
            }
            s
        })
        .collect())
}

/// `k ⊗_H X` for a module with an H-action; the result carries none.
pub fn coinvariants<F: Field>(q: &ParaCyclicModule<F>, name: &str) -> Result<(ParaCyclicModule<F>, Vec<Quotient<F>>)> {
    let sub = augmentation_subspaces(q)?;
    let (mut c, qs) = quotient_module(q, &sub, name)?;
    c.h_action = None;
    Ok((c, qs))
}

/// The whole chain `T → Q → C` with the intermediate data kept.
#[derive(Clone, Debug)]
pub struct HopfCyclicTower<F: Field> {
    pub cover: ParaCyclicModule<F>,
    pub j: Vec<Subspace<F>>,
    pub q: ParaCyclicModule<F>,
    pub q_maps: Vec<Quotient<F>>,
    pub c: ParaCyclicModule<F>,
    pub c_maps: Vec<Quotient<F>>,
}

impl<F: Field> HopfCyclicTower<F> {
    /// Builds `J` on all degrees of `cover` and quotients on `0..=keep`.
    pub fn build(cover: ParaCyclicModule<F>, keep: usize, parallel: bool) -> Result<Self> {
        let j_full = compute_j(&cover, 0, parallel);
        let cover_kept = cover.truncated(keep);
        let j: Vec<Subspace<F>> = j_full.into_iter().take(keep + 1).collect();
        let (q, q_maps) = quotient_module(&cover_kept, &j, &format!("Q{}", &cover.name[1..]))?;
        let (c, c_maps) = coinvariants(&q, &format!("C{}", &cover.name[1..]))?;
        Ok(HopfCyclicTower { cover: cover_kept, j, q, q_maps, c, c_maps })
    }

    /// `T_n → C_n`.
    pub fn projection(&self, n: usize) -> Matrix<F> {
        self.c_maps[n].projection.mul(&self.q_maps[n].projection)
    }

    /// A right inverse of [`Self::projection`].
    pub fn section(&self, n: usize) -> Matrix<F> {
        self.q_maps[n].section.mul(&self.c_maps[n].section)
    }
}

/// Dimensions of `k ⊗_H T_n`, computed directly from the action.
pub fn direct_coinvariant_dims<F: Field>(t: &ParaCyclicModule<F>) -> Result<Vec<usize>> {
    Ok(augmentation_subspaces(t)?.iter().map(|s| s.codim()).collect())
}
