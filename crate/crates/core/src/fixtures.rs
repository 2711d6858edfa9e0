//! Small Hopf algebras and actors used by tests, benchmarks and the CLI.

use crate::hopf::*;
use crate::linalg::{Field, Matrix};

fn v<F: Field>(x: i64) -> F {
    F::from_i64(x)
}

/// The group algebra of the cyclic group of order `n`; basis `g^0 .. g^{n-1}`.
pub fn cyclic_group_algebra<F: Field>(n: usize) -> HopfAlgebraData<F> {
    let algebra = AlgebraData::from_table(n, unit_vec(n, 0), |i, j| vec![((i + j) % n, v(1))]);
    let coalgebra = CoalgebraData::from_table(n, vec![v(1); n], |i| vec![((i, i), v(1))]);
    let antipode = Matrix::from_fn(n, n, |i| vec![((n - i) % n, v(1))]);
    HopfAlgebraData::new(algebra, coalgebra, antipode, None).expect("group algebra")
}

/// The four-dimensional Sweedler algebra, basis `1, g, x, gx` with
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, `Δx = x ⊗ 1 + g ⊗ x`.
pub fn sweedler<F: Field>() -> HopfAlgebraData<F> {
    // basis index a + 2b for g^a x^b
    let algebra = AlgebraData::from_table(4, unit_vec(4, 0), |i, j| {
        let (a, b, c, d) = (i % 2, i / 2, j % 2, j / 2);
        if b + d >= 2 {
            return vec![];
        }
        let sign = if b * c == 1 { -1 } else { 1 };
        vec![((a + c) % 2 + 2 * (b + d), v(sign))]
    });
    let coalgebra = CoalgebraData::from_table(4, vec![v(1), v(1), v(0), v(0)], |i| match i {
        0 => vec![((0, 0), v(1))],
        1 => vec![((1, 1), v(1))],
        2 => vec![((2, 0), v(1)), ((1, 2), v(1))],
        _ => vec![((3, 1), v(1)), ((0, 3), v(1))],
    });
    let antipode = Matrix::from_fn(4, 4, |i| match i {
        0 => vec![(0, v(1))],
        1 => vec![(1, v(1))],
        2 => vec![(3, v(-1))],
        _ => vec![(2, v(1))],
    });
    let antipode_inv = Matrix::from_fn(4, 4, |i| match i {
        0 => vec![(0, v(1))],
        1 => vec![(1, v(1))],
        2 => vec![(3, v(1))],
        _ => vec![(2, v(-1))],
    });
    HopfAlgebraData::new(algebra, coalgebra, antipode, Some(antipode_inv)).expect("sweedler")
}

/// `k[x]/(x^2)`, basis `1, x`.
pub fn dual_numbers<F: Field>() -> AlgebraData<F> {
    AlgebraData::from_table(2, unit_vec(2, 0), |i, j| if i + j >= 2 { vec![] } else { vec![(i + j, v(1))] })
}

/// `k × k`, basis of the two idempotents.
pub fn split_pair<F: Field>() -> AlgebraData<F> {
    AlgebraData::from_table(2, vec![v(1), v(1)], |i, j| if i == j { vec![(i, v(1))] } else { vec![] })
}

/// The group algebra of `Z/n` as a plain algebra.
pub fn cyclic_group_ring<F: Field>(n: usize) -> AlgebraData<F> {
    cyclic_group_algebra::<F>(n).algebra
}

/// `k[x]/(x^2)` over `kZ/2` with the generator acting by `x ↦ -x`.
pub fn dual_numbers_sign<F: Field>() -> ModuleAlgebra<F> {
    let hopf = cyclic_group_algebra::<F>(2);
    let action = Matrix::from_fn(2, 4, |c| {
        let (h, a) = (c / 2, c % 2);
        let sign = if h == 1 && a == 1 { -1 } else { 1 };
        vec![(a, v(sign))]
    });
    ModuleAlgebra::new(hopf, dual_numbers(), action).expect("module algebra")
}

/// `k[x]/(x^2)` over the Sweedler algebra: `g` acts by `t ↦ -t` and `x` by
/// the `g`-derivation with `x(t) = 1`.
pub fn dual_numbers_sweedler<F: Field>() -> ModuleAlgebra<F> {
    let action = Matrix::from_fn(2, 8, |c| match (c / 2, c % 2) {
        (0, a) => vec![(a, v(1))],
        (1, a) => vec![(a, v(if a == 1 { -1 } else { 1 }))],
        (_, 1) => vec![(0, v(1))],
        _ => vec![],
    });
    ModuleAlgebra::new(sweedler(), dual_numbers(), action).expect("module algebra")
}

/// `kZ/n` as a comodule algebra over itself through its coproduct.
pub fn regular_comodule_algebra<F: Field>(n: usize) -> ComoduleAlgebra<F> {
    let hopf = cyclic_group_algebra::<F>(n);
    let coaction = hopf.coalgebra.comul.clone();
    ComoduleAlgebra::new(hopf.clone(), hopf.algebra.clone(), coaction).expect("comodule algebra")
}

/// The coalgebra on `1, y` with `y` primitive, graded by `y ↦ g ⊗ y` over `kZ/2`.
pub fn graded_dual_coalgebra<F: Field>() -> ComoduleCoalgebra<F> {
    let hopf = cyclic_group_algebra::<F>(2);
    let coalgebra = CoalgebraData::from_table(2, vec![v(1), v(0)], |i| match i {
        0 => vec![((0, 0), v(1))],
        _ => vec![((0, 1), v(1)), ((1, 0), v(1))],
    });
    let coaction = Matrix::from_fn(4, 2, |i| vec![(i * 2 + i, v(1))]);
    ComoduleCoalgebra::new(hopf, coalgebra, coaction).expect("comodule coalgebra")
}

/// `kZ/2` with group-like coproduct and trivial coaction.
pub fn group_coalgebra_trivial<F: Field>() -> ComoduleCoalgebra<F> {
    let hopf = cyclic_group_algebra::<F>(2);
    ComoduleCoalgebra::trivial_coaction(hopf.clone(), hopf.coalgebra.clone())
}

/// `kZ/2` with group-like coproduct coacted on by its own coproduct; this
/// violates the comodule coalgebra compatibility.
pub fn group_coalgebra_regular<F: Field>() -> ComoduleCoalgebra<F> {
    let hopf = cyclic_group_algebra::<F>(2);
    ComoduleCoalgebra::new(hopf.clone(), hopf.coalgebra.clone(), hopf.coalgebra.comul.clone())
        .expect("shapes")
}

/// `H` with left regular action and trivial coaction.
pub fn regular_module<F: Field>(hopf: HopfAlgebraData<F>) -> ModComodule<F> {
    let coaction = crate::hopf::structures::trivial_coaction_matrix(&hopf, hopf.dim());
    ModComodule::new(hopf.clone(), hopf.dim(), hopf.algebra.mul.clone(), coaction).expect("shapes")
}

/// `H` with trivial action and regular coaction.
pub fn regular_comodule<F: Field>(hopf: HopfAlgebraData<F>) -> ModComodule<F> {
    let action = crate::hopf::structures::trivial_action_matrix(&hopf, hopf.dim());
    ModComodule::new(hopf.clone(), hopf.dim(), action, hopf.coalgebra.comul.clone()).expect("shapes")
}

/// `k_(g,ε)` over `kZ/2`.
pub fn sign_coefficients<F: Field>() -> ModComodule<F> {
    let hopf = cyclic_group_algebra::<F>(2);
    let pair = ModularPair { sigma: unit_vec(2, 1), delta: vec![v(1), v(1)] };
    modular_pair_module(&hopf, &pair)
}

/// `k_(g,δ)` over `kZ/2` with `δ(g) = -1`: AYD but not stable.
pub fn unstable_coefficients<F: Field>() -> ModComodule<F> {
    let hopf = cyclic_group_algebra::<F>(2);
    let pair = ModularPair { sigma: unit_vec(2, 1), delta: vec![v(1), v(-1)] };
    modular_pair_module(&hopf, &pair)
}

/// The group-likes and `{0, ±1}`-valued characters of `hopf`, paired.
pub fn modular_pair_candidates<F: Field>(hopf: &HopfAlgebraData<F>) -> Vec<(ModularPair<F>, bool)> {
    let sigmas = hopf.group_likes_in_basis();
    let deltas = hopf.characters_with_values(&[v(0), v(1), v(-1)]);
    modular_pair_search(hopf, &sigmas, &deltas)
}

pub(crate) fn unit_vec<F: Field>(d: usize, i: usize) -> Vec<F> {
    crate::hopf::structures::unit_vector(d, i)
}

/// A corrupted copy of `kZ/2` with `S(g) = 1`.
pub fn broken_antipode<F: Field>() -> HopfAlgebraData<F> {
    let mut h = cyclic_group_algebra::<F>(2);
    h.antipode = Matrix::from_fn(2, 2, |_| vec![(0, v(1))]);
    h
}

/// `(1, δ)` over the Sweedler algebra with `δ(g) = -1`, `δ(x) = 0`.
pub fn sweedler_modular_coefficients<F: Field>() -> ModComodule<F> {
    let pair = ModularPair { sigma: unit_vec(4, 0), delta: vec![v(1), v(-1), v(0), v(0)] };
    modular_pair_module(&sweedler(), &pair)
}

/// A three-dimensional algebra over `k` with `(aa)a ≠ a(aa)`.
pub fn nonassociative<F: Field>() -> ModuleAlgebra<F> {
    // basis 1, a, b with aa = b, ab = 0, ba = b, bb = 0
    let algebra = AlgebraData::from_table(3, unit_vec(3, 0), |i, j| match (i, j) {
        (0, k) | (k, 0) => vec![(k, v(1))],
        (1, 1) | (2, 1) => vec![(2, v(1))],
        _ => vec![],
    });
    ModuleAlgebra::trivial_action(HopfAlgebraData::trivial(), algebra)
}

/// The unique invariant trace of `a` with coefficients `m`, if there is one.
pub fn invariant_trace<F: Field>(a: &ModuleAlgebra<F>, m: &ModComodule<F>) -> Option<Vec<F>> {
    let cover = crate::cyclic::cover_algebra(a, m, 1, 3).ok()?;
    let ta = crate::cyclic::HopfCyclicTower::build(cover, 1, false).ok()?;
    let mut t = crate::pairings::InvariantTrace::solve(a, m, &ta);
    (t.len() == 1).then(|| t.remove(0).tau)
}

fn labelled<F: Field>(name: &str, s: crate::format::Structure<F>, hopf: &[&str], other: &[&str]) -> crate::format::Document<F> {
    let mut d = crate::format::Document::new(name, s);
    d.labels.hopf = hopf.iter().map(|x| x.to_string()).collect();
    let other: Vec<String> = other.iter().map(|x| x.to_string()).collect();
    for l in [&mut d.labels.algebra, &mut d.labels.coalgebra, &mut d.labels.module].into_iter().flatten() {
        *l = other.clone();
    }
    d
}

/// The shipped fixture documents; every one passes its axiom check.
pub fn library<F: Field>() -> Vec<crate::format::Document<F>> {
    use crate::format::Structure as S;
    let z2 = ["1", "g"];
    let sw = ["1", "g", "x", "gx"];
    let dual = ["1", "t"];
    let trivial_m = ModComodule::trivial(cyclic_group_algebra::<F>(2));
    let sweedler_m = sweedler_modular_coefficients::<F>();
    let mut out = vec![
        labelled("trivial-hopf", S::Hopf(HopfAlgebraData::trivial()), &["1"], &[]),
        labelled("z2", S::Hopf(cyclic_group_algebra(2)), &z2, &[]),
        labelled("z3", S::Hopf(cyclic_group_algebra(3)), &["1", "g", "g2"], &[]),
        labelled("sweedler", S::Hopf(sweedler()), &sw, &[]),
        labelled("dual-numbers-z2", S::ModuleAlgebra(dual_numbers_sign()), &z2, &dual),
        labelled("dual-numbers-sweedler", S::ModuleAlgebra(dual_numbers_sweedler()), &sw, &dual),
        labelled("group-comodule-algebra-z2", S::ComoduleAlgebra(regular_comodule_algebra(2)), &z2, &["e", "u"]),
        labelled("graded-dual-z2", S::ComoduleCoalgebra(graded_dual_coalgebra()), &z2, &["1", "y"]),
        labelled("group-coalgebra-z2", S::ComoduleCoalgebra(group_coalgebra_trivial()), &z2, &["e", "u"]),
        labelled("trivial-coefficients-z2", S::ModComodule(trivial_m.clone()), &z2, &["m"]),
        labelled("sign-coefficients-z2", S::ModComodule(sign_coefficients()), &z2, &["m"]),
        labelled("trivial-coefficients-sweedler", S::ModComodule(ModComodule::trivial(sweedler())), &sw, &["m"]),
        labelled("modular-coefficients-sweedler", S::ModComodule(sweedler_m.clone()), &sw, &["m"]),
        labelled("pairing-z2", S::Pairing(action_pairing(&dual_numbers_sign())), &z2, &[]),
        labelled("pairing-sweedler", S::Pairing(action_pairing(&dual_numbers_sweedler())), &sw, &[]),
    ];
    for (name, a, m, hl) in [
        ("trace-z2", dual_numbers_sign::<F>(), trivial_m, &z2[..]),
        ("trace-sweedler", dual_numbers_sweedler(), sweedler_m, &sw[..]),
    ] {
        let tau = invariant_trace(&a, &m).expect("fixture trace");
        let mut d = labelled(name, S::Trace { alg: a, m, tau }, hl, &[]);
        d.labels.algebra = Some(dual.iter().map(|x| x.to_string()).collect());
        d.labels.module = Some(vec!["m".into()]);
        out.push(d);
    }
    for d in &mut out {
        if let S::Pairing(_) = d.structure {
            d.labels.coalgebra = Some(d.labels.hopf.clone());
            d.labels.algebra = Some(dual.iter().map(|x| x.to_string()).collect());
        }
    }
    out
}

/// Negative controls: each fails its axiom check with a named identity.
pub fn controls<F: Field>() -> Vec<crate::format::Document<F>> {
    use crate::format::Structure as S;
    vec![
        labelled("corrupted-antipode-z2", S::Hopf(broken_antipode()), &["1", "g"], &[]),
        labelled("regular-coalgebra-z2", S::ComoduleCoalgebra(group_coalgebra_regular()), &["1", "g"], &["e", "u"]),
        labelled("nonassociative", S::ModuleAlgebra(nonassociative()), &["1"], &["1", "a", "b"]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;

    type Q = Rational;

    #[test]
    fn hopf_fixtures_are_lawful() {
        assert!(HopfAlgebraData::<Q>::trivial().check_structure().is_empty());
        assert!(cyclic_group_algebra::<Q>(2).check_structure().is_empty());
        assert!(cyclic_group_algebra::<Q>(3).check_structure().is_empty());
        let s = sweedler::<Q>();
        let r = s.check_structure();
        assert!(r.is_empty(), "{r}");
        assert!(!s.algebra.is_commutative() && !s.coalgebra.is_cocommutative());
    }

    #[test]
    fn broken_antipode_reported() {
        let r = broken_antipode::<Q>().check_structure();
        assert!(r.has("antipode"), "{r}");
    }

    #[test]
    fn actor_fixtures_are_lawful() {
        assert!(dual_numbers_sign::<Q>().check_structure().is_empty());
        assert!(regular_comodule_algebra::<Q>(2).check_structure().is_empty());
        assert!(graded_dual_coalgebra::<Q>().check_structure().is_empty());
        assert!(group_coalgebra_trivial::<Q>().check_structure().is_empty());
        assert!(sign_coefficients::<Q>().check_structure().is_empty());
        let bad = group_coalgebra_regular::<Q>().check_structure();
        assert!(bad.has("coaction compatibility"), "{bad}");
    }
}
