//! Dense reference computations, independent of the sparse engine.
//!
//! Cyclic cohomology over the rationals via Connes' complex of cyclically
//! invariant cochains, built straight from structure constants.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::{One, Zero};

type Q = BigRational;

fn q(x: i64) -> Q {
    Q::from_integer(x.into())
}

/// Row-reduces a copy of `m` (rows × cols) and returns its rank and the
/// reduced rows.
fn rref(mut m: Vec<Vec<Q>>) -> (usize, Vec<Vec<Q>>, Vec<usize>) {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Q::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = m[r][j].clone() * f.clone();
                    m[i][j] = m[i][j].clone() - v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (r, m, pivots)
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    rref(m.to_vec()).0
}

/// Basis of `{v : m v = 0}` as column vectors.
pub fn nullspace(m: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let (r, red, pivots) = rref(m.to_vec());
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate().take(r) {
                v[p] = -red[i][f].clone();
            }
            v
        })
        .collect()
}

fn mat_vec(m: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a.clone() * b.clone()).sum()).collect()
}

fn decode(mut i: usize, dim: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for k in (0..len).rev() {
        out[k] = i % dim;
        i /= dim;
    }
    out
}

fn encode(idx: &[usize], dim: usize) -> usize {
    idx.iter().fold(0, |acc, &x| acc * dim + x)
}

/// Structure constants of a finite-dimensional algebra: `mul[i][j]` lists
/// `(k, c)` with `e_i e_j = Σ c e_k`.
pub struct Algebra {
    pub dim: usize,
    pub mul: Vec<Vec<Vec<(usize, i64)>>>,
}

impl Algebra {
    pub fn ground() -> Self {
        Algebra { dim: 1, mul: vec![vec![vec![(0, 1)]]] }
    }

    pub fn cyclic_group(n: usize) -> Self {
        Algebra { dim: n, mul: (0..n).map(|i| (0..n).map(|j| vec![((i + j) % n, 1)]).collect()).collect() }
    }

    pub fn dual_numbers() -> Self {
        Algebra { dim: 2, mul: vec![vec![vec![(0, 1)], vec![(1, 1)]], vec![vec![(1, 1)], vec![]]] }
    }
}

/// Hochschild coboundary `C^n → C^{n+1}` as a dense matrix, where
/// `C^n = Hom(A^{⊗n+1}, k)`.
pub fn hochschild_coboundary(a: &Algebra, n: usize) -> Vec<Vec<Q>> {
    let d = a.dim;
    let src = d.pow(n as u32 + 1);
    let tgt = d.pow(n as u32 + 2);
    let mut m = vec![vec![Q::zero(); src]; tgt];
    for (row, out) in m.iter_mut().enumerate() {
        let x = decode(row, d, n + 2);
        for i in 0..=n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            for &(k, c) in &a.mul[x[i]][x[i + 1]] {
                let mut y = x[..i].to_vec();
                y.push(k);
                y.extend_from_slice(&x[i + 2..]);
                out[encode(&y, d)] += q(sign * c);
            }
        }
        let sign = if (n + 1).is_multiple_of(2) { 1 } else { -1 };
        for &(k, c) in &a.mul[x[n + 1]][x[0]] {
            let mut y = vec![k];
            y.extend_from_slice(&x[1..=n]);
            out[encode(&y, d)] += q(sign * c);
        }
    }
    m
}

/// `1 - λ` on `C^n`, `(λφ)(a_0..a_n) = (-1)^n φ(a_n, a_0, .., a_{n-1})`.
fn one_minus_lambda(a: &Algebra, n: usize) -> Vec<Vec<Q>> {
    let d = a.dim;
    let size = d.pow(n as u32 + 1);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let mut m = vec![vec![Q::zero(); size]; size];
    for (row, out) in m.iter_mut().enumerate() {
        let x = decode(row, d, n + 1);
        let mut y = vec![x[n]];
        y.extend_from_slice(&x[..n]);
        out[row] += q(1);
        out[encode(&y, d)] -= q(sign);
    }
    m
}

fn columns_to_matrix(cols: &[Vec<Q>], rows: usize) -> Vec<Vec<Q>> {
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

/// `dim HC^n(A)` for `n ≤ n_max` from the cyclic cochains `ker(1 - λ)`.
pub fn connes_cyclic_cohomology(a: &Algebra, n_max: usize) -> Vec<usize> {
    let d = a.dim;
    let invariant: Vec<Vec<Vec<Q>>> = (0..=n_max + 1)
        .map(|n| nullspace(&one_minus_lambda(a, n), d.pow(n as u32 + 1)))
        .collect();
    let image_rank = |n: usize| -> usize {
        let b = hochschild_coboundary(a, n);
        let imgs: Vec<Vec<Q>> = invariant[n].iter().map(|v| mat_vec(&b, v)).collect();
        if imgs.is_empty() {
            0
        } else {
            rank(&columns_to_matrix(&imgs, d.pow(n as u32 + 2)))
        }
    };
    let ranks: Vec<usize> = (0..=n_max).map(image_rank).collect();
    (0..=n_max)
        .map(|n| invariant[n].len() - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
        .collect()
}

/// `dim HH^n(A)` for `n ≤ n_max`.
pub fn hochschild_cohomology(a: &Algebra, n_max: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=n_max).map(|n| rank(&hochschild_coboundary(a, n))).collect();
    (0..=n_max)
        .map(|n| a.dim.pow(n as u32 + 1) - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
        .collect()
}
