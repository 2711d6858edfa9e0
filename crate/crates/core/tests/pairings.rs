use hopfcyc::cyclic::*;
use hopfcyc::fixtures::*;
use hopfcyc::homology::*;
use hopfcyc::hopf::*;
use hopfcyc::linalg::matrix::combine;
use hopfcyc::pairings::*;
use hopfcyc::{Error, Field, Matrix, Rational};

type Q = Rational;

fn towers(p: &EquivariantPairing<Q>, m: &ModComodule<Q>, top: usize, buffer: usize) -> (HopfCyclicTower<Q>, HopfCyclicTower<Q>) {
    let tc = HopfCyclicTower::build(cover_coalgebra(&p.coalg, m, top, top + buffer).unwrap(), top, true).unwrap();
    let ta = HopfCyclicTower::build(cover_algebra(&p.alg, m, top, top + buffer).unwrap(), top, true).unwrap();
    (tc, ta)
}

fn sign_pairing() -> EquivariantPairing<Q> {
    action_pairing(&dual_numbers_sign())
}

#[test]
fn alpha_over_trivial_hopf_is_an_isomorphism() {
    let h = HopfAlgebraData::<Q>::trivial();
    let a = ModuleAlgebra::trivial_action(h.clone(), dual_numbers());
    let p = action_pairing(&a);
    let m = ModComodule::trivial(h);
    let (tc, ta) = towers(&p, &m, 3, 1);
    let al = alpha(&p, &tc, &ta).unwrap();
    assert!(al.report().is_empty(), "{}", al.report());
    for f in &al.coinvariant.morphism.maps {
        assert_eq!(f.rows(), f.cols());
        assert!(f.inverse().is_some());
    }
}

#[test]
fn alpha_commutes_on_all_levels() {
    let p = sign_pairing();
    for m in [ModComodule::trivial(cyclic_group_algebra::<Q>(2)), sign_coefficients()] {
        let (tc, ta) = towers(&p, &m, 3, 2);
        let al = alpha(&p, &tc, &ta).unwrap();
        assert!(al.report().is_empty(), "{}", al.report());
    }
}

#[test]
fn alpha_in_degree_zero() {
    let p = sign_pairing();
    let maps = alpha_cover_maps(&p, 1, 0);
    // x ∈ A, c ∈ C: α_0(x)(g ⊗ 1) = g·x ⊗ 1 = -x
    let f = unvectorize(maps[0].column(1), 2, 2);
    assert_eq!(f.get(1, 1), -Q::one());
    assert_eq!(f.get(1, 0), Q::one());
}

#[test]
fn non_equivariant_pairing_is_rejected() {
    let mut p = sign_pairing();
    p.phi = Matrix::from_fn(2, 4, |c| vec![(c % 2, Q::one())]);
    let m = sign_coefficients();
    let (tc, ta) = towers(&sign_pairing(), &m, 1, 1);
    assert!(matches!(alpha(&p, &tc, &ta), Err(Error::NotEquivariant(_))));
}

#[test]
fn invariant_traces_are_solved_and_checked() {
    let a = dual_numbers_sign::<Q>();
    let m = sign_coefficients();
    let ta = HopfCyclicTower::build(cover_algebra(&a, &m, 2, 3).unwrap(), 2, true).unwrap();
    let traces = InvariantTrace::solve(&a, &m, &ta);
    assert_eq!(traces.len(), 1);
    let t = &traces[0];
    assert_eq!(t.tau, vec![Q::one(), Q::zero()]);
    assert!(t.check(&ta).is_empty());
    assert!(t.check_identities().is_empty(), "{}", t.check_identities());
    let bad = InvariantTrace::new(&a, &m, vec![Q::zero(), Q::one()], &ta);
    assert!(matches!(bad, Err(Error::NotCocycle(_))));
}

#[test]
fn sweedler_trace_is_delta_twisted() {
    let a = dual_numbers_sweedler::<Q>();
    let m = sweedler_modular_coefficients();
    let ta = HopfCyclicTower::build(cover_algebra(&a, &m, 1, 3).unwrap(), 1, false).unwrap();
    let traces = InvariantTrace::solve(&a, &m, &ta);
    assert_eq!(traces.len(), 1);
    let t = &traces[0];
    assert_eq!(t.tau, vec![Q::zero(), Q::one()]);
    assert!(t.check_modular_identities().is_empty(), "{}", t.check_modular_identities());
    // the ε-form forces τ = 0 here, since g(t) = -t and x(t) = 1
    let printed = t.check_identities();
    assert!(printed.has("trace is H-invariant"), "{printed}");
}

#[test]
fn trace_identity_forms_coincide_for_trivial_delta() {
    let a = dual_numbers_sign::<Q>();
    let m = ModComodule::trivial(cyclic_group_algebra::<Q>(2));
    let ta = HopfCyclicTower::build(cover_algebra(&a, &m, 1, 3).unwrap(), 1, false).unwrap();
    for t in InvariantTrace::solve(&a, &m, &ta) {
        assert!(t.check_identities().is_empty());
        assert!(t.check_modular_identities().is_empty());
    }
}

#[test]
fn characteristic_map_routes_agree() {
    let p = sign_pairing();
    let m = ModComodule::trivial(cyclic_group_algebra::<Q>(2));
    let (tc, ta) = towers(&p, &m, 4, 2);
    let al = alpha(&p, &tc, &ta).unwrap();
    let trace = InvariantTrace::solve(&p.alg, &m, &ta).remove(0);
    let mut seen = 0;
    for deg in 0..=2 {
        for v in cyclic_cocycles(&tc.c, deg).unwrap() {
            for model in [Model::Bicomplex, Model::Mixed] {
                let c = CochainClass::new(&tc.c, model, deg, v.clone()).unwrap();
                let out = cm_char_map(&trace, &p, &al, &tc, &ta, &c).unwrap();
                assert_eq!(out.direct, out.pullback);
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn sign_coefficients_have_no_low_degree_classes() {
    let p = sign_pairing();
    let (tc, _) = towers(&p, &sign_coefficients(), 3, 2);
    for deg in 0..=2 {
        assert!(cyclic_cocycles(&tc.c, deg).unwrap().is_empty(), "degree {deg}");
    }
}

#[test]
fn characteristic_map_in_degree_zero() {
    let p = sign_pairing();
    let m = ModComodule::trivial(cyclic_group_algebra::<Q>(2));
    let (tc, ta) = towers(&p, &m, 2, 2);
    let al = alpha(&p, &tc, &ta).unwrap();
    let trace = InvariantTrace::solve(&p.alg, &m, &ta).remove(0);
    let c = CochainClass::new(&tc.c, Model::Bicomplex, 0, vec![(0, Q::one())]).unwrap();
    let out = cm_char_map(&trace, &p, &al, &tc, &ta, &c).unwrap();
    // γ(c)(a) = τ(h(a)) for the lift h of c; here τ(1) = 1, τ(x) = 0
    let lift = tc.section(0).apply(&[(0, Q::one())]);
    let h: Vec<usize> = lift.iter().map(|(i, _)| *i).collect();
    assert!(!h.is_empty());
    assert!(out.direct.representative.iter().all(|(i, _)| *i == 0));
}

#[test]
fn cup_with_trace_respects_coboundaries_and_scaling() {
    let p = sign_pairing();
    let m = ModComodule::trivial(cyclic_group_algebra::<Q>(2));
    let (tc, ta) = towers(&p, &m, 4, 2);
    let al = alpha(&p, &tc, &ta).unwrap();
    let trace = InvariantTrace::solve(&p.alg, &m, &ta).remove(0);
    let coh = CyclicCohomology::new(&tc.c, Model::Mixed).unwrap();
    let g = coh.group(2).unwrap();
    let src = CyclicCohomology::new(&al.coinvariant.source, Model::Mixed).unwrap().group(2).unwrap();
    let base = g.representatives.first().expect("HC^2 is nonzero").clone();
    let c = CochainClass::new(&tc.c, Model::Mixed, 2, base.clone()).unwrap();
    let out = cup_with_trace(&al, &tc, &ta, &c, &trace).unwrap();
    assert!(!out.representative.is_empty());
    for k in 0..coh.complex.dims[1] {
        let shift = coh.complex.differential(1, &[(k, Q::one())]);
        let c2 = CochainClass::new(&tc.c, Model::Mixed, 2, combine(&Q::one(), &base, &Q::from_i64(3), &shift)).unwrap();
        let out2 = cup_with_trace(&al, &tc, &ta, &c2, &trace).unwrap();
        assert!(src.cohomologous(&out.representative, &out2.representative));
    }
}

#[test]
fn cup_image_matches_native_mixed_computation() {
    let p = sign_pairing();
    let m = ModComodule::trivial(cyclic_group_algebra::<Q>(2));
    let (tc, ta) = towers(&p, &m, 4, 2);
    let al = alpha(&p, &tc, &ta).unwrap();
    let trace = InvariantTrace::solve(&p.alg, &m, &ta).remove(0);
    let src = &al.coinvariant.source;
    let mut seen = 0;
    for deg in 0..=2 {
        for v in cyclic_cocycles(&tc.c, deg).unwrap() {
            let bi = CochainClass::new(&tc.c, Model::Bicomplex, deg, v.clone()).unwrap();
            let via_bicomplex = cup_with_trace(&al, &tc, &ta, &bi, &trace).unwrap().column_zero_to_mixed(src).unwrap();
            let mixed = CyclicCohomology::new(&tc.c, Model::Mixed).unwrap();
            let mut w = v.clone();
            if deg > 0 {
                let shift = mixed.complex.differential(deg - 1, &[(0, Q::one())]);
                w = combine(&Q::one(), &w, &Q::one(), &shift);
            }
            let native = cup_with_trace(&al, &tc, &ta, &CochainClass::new(&tc.c, Model::Mixed, deg, w).unwrap(), &trace).unwrap();
            assert!(native.cohomologous(&via_bicomplex, src).unwrap());
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn pullback_along_identity_and_of_coboundaries() {
    let x = cyc_algebra(&dual_numbers::<Q>(), 4, 4);
    let id = ModuleMorphism::identity(&x);
    let coh = CyclicCohomology::new(&x, Model::Bicomplex).unwrap();
    let g = coh.group(2).unwrap();
    for r in &g.representatives {
        let c = CochainClass::new(&x, Model::Bicomplex, 2, r.clone()).unwrap();
        assert_eq!(pullback(&id, &x, &x, &c).unwrap(), c);
    }
    let k = cyc_algebra(&AlgebraData::<Q>::ground(), 4, 4);
    let unit: Vec<Matrix<Q>> = (0..=4).map(|n| Matrix::from_fn(x.dims[n], 1, |_| vec![(0, Q::one())])).collect();
    let f = ModuleMorphism { name: "unit".into(), maps: unit };
    let cob = coh.complex.differential(1, &[(1, Q::one())]);
    let c = CochainClass::new(&x, Model::Bicomplex, 2, cob).unwrap();
    let back = pullback(&f, &k, &x, &c).unwrap();
    let gk = CyclicCohomology::new(&k, Model::Bicomplex).unwrap().group(2).unwrap();
    assert!(gk.is_coboundary(&back.representative));
    let open = (0..coh.complex.dims[2]).find(|&i| !coh.complex.differential(2, &[(i, Q::one())]).is_empty()).unwrap();
    let not_closed = CochainClass::new(&x, Model::Bicomplex, 2, vec![(open, Q::one())]);
    assert!(matches!(not_closed, Err(Error::NotCocycle(_))));
}

fn skew_group_fixture() -> (ModuleAlgebra<Q>, ComoduleAlgebra<Q>, ModComodule<Q>) {
    (dual_numbers_sign(), regular_comodule_algebra(2), sign_coefficients())
}

#[test]
fn beta_commutes_and_pairs_with_traces() {
    let (a, b, m) = skew_group_fixture();
    let cb = hopf_cocyclic_comodule_algebra(&b, &m, 3, 3).unwrap();
    let ta = HopfCyclicTower::build(cover_algebra(&a, &m, 3, 5).unwrap(), 3, true).unwrap();
    let be = beta(&a, &b, &m, &cb, &ta).unwrap();
    assert!(be.is_lawful(), "{}", be.report);
    let trace = InvariantTrace::solve(&a, &m, &ta).remove(0);
    for deg in 0..=1 {
        for v in cyclic_cocycles(&cb.module, deg).unwrap() {
            let c = CochainClass::new(&cb.module, Model::Bicomplex, deg, v).unwrap();
            let out = crossed_cup_with_trace(&be, &cb.module, &ta, &c, &trace).unwrap();
            let coh = CyclicCohomology::new(&be.source, Model::Bicomplex).unwrap();
            assert!(coh.complex.differential(deg, &out.representative).is_empty());
        }
    }
    let zero = CochainClass::new(&cb.module, Model::Bicomplex, 1, vec![]).unwrap();
    assert!(crossed_cup_with_trace(&be, &cb.module, &ta, &zero, &trace).unwrap().representative.is_empty());
}

#[test]
fn beta_in_degree_zero_evaluates() {
    let (a, b, m) = skew_group_fixture();
    let cb = hopf_cocyclic_comodule_algebra(&b, &m, 1, 1).unwrap();
    let ta = HopfCyclicTower::build(cover_algebra(&a, &m, 1, 2).unwrap(), 1, false).unwrap();
    let be = beta(&a, &b, &m, &cb, &ta).unwrap();
    assert!(be.is_lawful(), "{}", be.report);
    // β_0(a, b)(f) = a ⊗ f(b): compare against the ambient formula
    let inc = cb.ambient[0].inclusion();
    let p0 = ta.projection(0);
    for col in 0..be.source.dims[0] {
        let (ai, bi) = (col / 2, col % 2);
        let f = unvectorize(be.morphism.maps[0].column(col), ta.c.dims[0], cb.module.dims[0]);
        for k in 0..cb.module.dims[0] {
            let amb = inc.column(k);
            let value: Vec<(usize, Q)> = amb.iter().filter(|(i, _)| *i == bi).map(|(_, c)| (ai, c.clone())).collect();
            assert_eq!(f.apply(&[(k, Q::one())]), p0.apply(&value));
        }
    }
}

#[test]
fn beta_over_trivial_hopf() {
    let h = HopfAlgebraData::<Q>::trivial();
    let a = ModuleAlgebra::trivial_action(h.clone(), dual_numbers());
    let b = ComoduleAlgebra::trivial_coaction(h.clone(), split_pair());
    let m = ModComodule::trivial(h);
    let cb = hopf_cocyclic_comodule_algebra(&b, &m, 2, 2).unwrap();
    let ta = HopfCyclicTower::build(cover_algebra(&a, &m, 2, 3).unwrap(), 2, false).unwrap();
    let be = beta(&a, &b, &m, &cb, &ta).unwrap();
    assert!(be.is_lawful(), "{}", be.report);
}

#[test]
fn beta_rejects_unstable_coefficients() {
    let (a, b, _) = skew_group_fixture();
    let good = sign_coefficients();
    let cb = hopf_cocyclic_comodule_algebra(&b, &good, 1, 1).unwrap();
    let ta = HopfCyclicTower::build(cover_algebra(&a, &good, 1, 2).unwrap(), 1, false).unwrap();
    assert!(matches!(beta(&a, &b, &unstable_coefficients(), &cb, &ta), Err(Error::NotSayd(_))));
}

fn xi_fixture(
    z: ComoduleCoalgebra<Q>,
    m: ModComodule<Q>,
    top: usize,
) -> (ComoduleCoalgebra<Q>, ModuleCoalgebra<Q>, ModComodule<Q>, SubModule<Q>, HopfCyclicTower<Q>) {
    let c = ModuleCoalgebra::regular(cyclic_group_algebra::<Q>(2));
    let cz = hopf_cyclic_comodule_coalgebra(&z, &m, top, top).unwrap();
    let tc = HopfCyclicTower::build(cover_coalgebra(&c, &m, top, top + 2).unwrap(), top, true).unwrap();
    (z, c, m, cz, tc)
}

fn coefficient_choices() -> Vec<ModComodule<Q>> {
    vec![ModComodule::trivial(cyclic_group_algebra::<Q>(2)), sign_coefficients()]
}

#[test]
fn xi_printed_forms_agree_as_matrices() {
    for z in [graded_dual_coalgebra::<Q>(), group_coalgebra_trivial()] {
        for m in coefficient_choices() {
            let (z, c, m, cz, tc) = xi_fixture(z.clone(), m, 3);
            let a = xi(&z, &c, &m, &cz, &tc, XiForm::Twisted).unwrap();
            let b = xi(&z, &c, &m, &cz, &tc, XiForm::Coefficient).unwrap();
            assert_eq!(a.morphism.maps, b.morphism.maps);
        }
    }
}

#[test]
fn xi_printed_form_commutes_for_trivial_coaction() {
    for m in coefficient_choices() {
        let (z, c, m, cz, tc) = xi_fixture(group_coalgebra_trivial(), m, 3);
        let a = xi(&z, &c, &m, &cz, &tc, XiForm::Twisted).unwrap();
        assert!(a.is_lawful(), "{}", a.report);
    }
}

#[test]
fn xi_printed_form_fails_faces_for_graded_coaction() {
    let (z, c, m, cz, tc) = xi_fixture(graded_dual_coalgebra(), ModComodule::trivial(cyclic_group_algebra::<Q>(2)), 3);
    let a = xi(&z, &c, &m, &cz, &tc, XiForm::Twisted).unwrap();
    assert!(!a.is_lawful());
    assert!(a.report.failures.iter().all(|f| f.identity == "xi: commutes with faces"), "{}", a.report);
    assert!(a.report.failures.iter().any(|f| f.location.starts_with("degree 2")));
}

#[test]
fn xi_shifted_form_commutes_on_all_fixtures() {
    for z in [graded_dual_coalgebra::<Q>(), group_coalgebra_trivial()] {
        for m in coefficient_choices() {
            let (z, c, m, cz, tc) = xi_fixture(z.clone(), m, 3);
            let a = xi(&z, &c, &m, &cz, &tc, XiForm::Shifted).unwrap();
            assert!(a.is_lawful(), "{}", a.report);
        }
    }
}

#[test]
fn xi_forms_coincide_for_trivial_coaction() {
    let (z, c, m, cz, tc) = xi_fixture(group_coalgebra_trivial(), sign_coefficients(), 3);
    let a = xi(&z, &c, &m, &cz, &tc, XiForm::Twisted).unwrap();
    let b = xi(&z, &c, &m, &cz, &tc, XiForm::Shifted).unwrap();
    assert_eq!(a.morphism.maps, b.morphism.maps);
}

#[test]
fn xi_over_trivial_hopf() {
    let h = HopfAlgebraData::<Q>::trivial();
    let z = ComoduleCoalgebra::trivial_coaction(h.clone(), cyclic_group_algebra::<Q>(2).coalgebra);
    let c = ModuleCoalgebra { hopf: h.clone(), coalgebra: cyclic_group_algebra::<Q>(2).coalgebra, action: Matrix::identity(2) };
    let m = ModComodule::trivial(h);
    let cz = hopf_cyclic_comodule_coalgebra(&z, &m, 2, 2).unwrap();
    let tc = HopfCyclicTower::build(cover_coalgebra(&c, &m, 2, 3).unwrap(), 2, false).unwrap();
    let x = xi(&z, &c, &m, &cz, &tc, XiForm::Twisted).unwrap();
    assert!(x.is_lawful(), "{}", x.report);
}

#[test]
fn xi_side_pairing_gives_hopf_cyclic_cocycles() {
    let mut seen = 0;
    for z in [graded_dual_coalgebra::<Q>(), group_coalgebra_trivial()] {
        for m in coefficient_choices() {
            let (z, c, m, cz, tc) = xi_fixture(z.clone(), m, 3);
            let x = xi(&z, &c, &m, &cz, &tc, XiForm::Shifted).unwrap();
            let dual = cyclic_dual(&cz.module);
            let points = CyclicCohomology::new(&dual, Model::Bicomplex).unwrap().group(0).unwrap();
            for y in &points.representatives {
                for deg in 0..=1 {
                    for v in cyclic_cocycles(&x.source, deg).unwrap() {
                        let cl = CochainClass::new(&x.source, Model::Bicomplex, deg, v).unwrap();
                        let out = crossed_cup_with_point(&x, &cz.module, &tc, y, &cl).unwrap();
                        assert_eq!(out.degree, deg);
                        seen += 1;
                    }
                }
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn star_is_a_natural_morphism() {
    let z = graded_dual_coalgebra::<Q>();
    let m = sign_coefficients();
    let m2 = ModComodule::trivial(cyclic_group_algebra::<Q>(2));
    let s = star(&z, &z, &m, &m2, 3).unwrap();
    assert!(s.morphism.is_lawful(), "{}", s.morphism.report);
    // y ↦ 2y is a comodule coalgebra automorphism
    let phi = Matrix::from_fn(2, 2, |i| vec![(i, Q::from_i64(if i == 1 { 2 } else { 1 }))]);
    let f = induced_by_coalgebra_map(&s.left, &s.left, &phi, m.dim).unwrap();
    let g = induced_by_coalgebra_map(&s.right, &s.right, &phi, m2.dim).unwrap();
    let phi2 = phi.kron(&phi);
    let bal = balanced_tensor(&m, &m2).unwrap();
    let fg = induced_by_coalgebra_map(&s.product, &s.product, &phi2, bal.module.dim).unwrap();
    for n in 0..=3 {
        let lhs = s.morphism.morphism.maps[n].mul(&f.maps[n].kron(&g.maps[n]));
        let rhs = fg.maps[n].mul(&s.morphism.morphism.maps[n]);
        assert_eq!(lhs, rhs, "degree {n}");
    }
}

#[test]
fn star_over_trivial_hopf_and_hypotheses() {
    let h = HopfAlgebraData::<Q>::trivial();
    let z = ComoduleCoalgebra::trivial_coaction(h.clone(), cyclic_group_algebra::<Q>(2).coalgebra);
    let m = ModComodule::trivial(h);
    let s = star(&z, &z, &m, &m, 2).unwrap();
    assert!(s.morphism.is_lawful());
    assert_eq!(s.product.module.dims, vec![4, 16, 64]);
    let sw = sweedler::<Q>();
    let zs = ComoduleCoalgebra::trivial_coaction(sw.clone(), sw.coalgebra.clone());
    let ms = ModComodule::trivial(sw);
    assert!(matches!(star(&zs, &zs, &ms, &ms, 1), Err(Error::HypothesisFailure(_))));
}

#[test]
fn reshuffling_is_surjective_and_dropping_a_factor_is_caught() {
    let a = dual_numbers_sign::<Q>();
    let m = ModComodule::trivial(cyclic_group_algebra::<Q>(2));
    let r = diag_tensor_epi_check(&a, &a, &m, &m, 2, 1, Reshuffle::Canonical, true).unwrap();
    assert!(r.is_empty(), "{r}");
    let bad = diag_tensor_epi_check(&a, &a, &m, &m, 2, 1, Reshuffle::DropFactor, true).unwrap();
    assert!(bad.has("reshuffling is surjective"));
    let h = HopfAlgebraData::<Q>::trivial();
    let ak = ModuleAlgebra::trivial_action(h.clone(), dual_numbers());
    let mk = ModComodule::trivial(h);
    assert!(diag_tensor_epi_check(&ak, &ak, &mk, &mk, 2, 1, Reshuffle::Canonical, false).unwrap().is_empty());
}
