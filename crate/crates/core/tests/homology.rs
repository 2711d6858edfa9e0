mod oracle;

use hopfcyc::cyclic::*;
use hopfcyc::fixtures::*;
use hopfcyc::homology::*;
use hopfcyc::hopf::AlgebraData;
use hopfcyc::{Error, Field, Fp, Matrix, Rational};
use oracle::Algebra;

type Q = Rational;

fn both(x: &ParaCyclicModule<Q>) -> (Vec<usize>, Vec<usize>) {
    let c = compare_models(x, true).unwrap();
    assert!(c.agrees(), "{}", c.report);
    (c.bicomplex.stable_degrees().to_vec(), c.mixed.stable_degrees().to_vec())
}

#[test]
fn oracle_spot_values() {
    // frozen from the dense oracle
    assert_eq!(oracle::connes_cyclic_cohomology(&Algebra::ground(), 4), vec![1, 0, 1, 0, 1]);
    assert_eq!(oracle::connes_cyclic_cohomology(&Algebra::cyclic_group(2), 4), vec![2, 0, 2, 0, 2]);
    assert_eq!(oracle::hochschild_cohomology(&Algebra::cyclic_group(2), 3), vec![2, 0, 0, 0]);
}

#[test]
fn point_and_group_algebra_match_oracle() {
    let k = cyc_algebra(&AlgebraData::<Q>::ground(), 6, 6);
    let (a, b) = both(&k);
    assert_eq!(a, vec![1, 0, 1, 0, 1]);
    assert_eq!(a, b);
    let g = cyc_algebra(&cyclic_group_ring::<Q>(2), 6, 6);
    let (a, b) = both(&g);
    assert_eq!(a, vec![2, 0, 2, 0, 2]);
    assert_eq!(a, b);
}

#[test]
fn dual_numbers_match_oracle() {
    let want = oracle::connes_cyclic_cohomology(&Algebra::dual_numbers(), 3);
    let x = cyc_algebra(&dual_numbers::<Q>(), 5, 5);
    let (a, b) = both(&x);
    assert_eq!(a, want);
    assert_eq!(b, want);
    let hh = hochschild_dims(&x, false).unwrap();
    assert_eq!(hh[..4].to_vec(), oracle::hochschild_cohomology(&Algebra::dual_numbers(), 3));
}

#[test]
fn hh0_of_commutative_algebra_is_its_dimension() {
    for a in [split_pair::<Q>(), dual_numbers(), cyclic_group_ring(3)] {
        let x = cyc_algebra(&a, 3, 3);
        assert_eq!(hochschild_dims(&x, true).unwrap()[0], a.dim);
    }
}

#[test]
fn mixed_identities_hold() {
    let x = cyc_algebra(&cyclic_group_ring::<Q>(2), 4, 4);
    let m = mixed_of_cyclic(&x).unwrap();
    assert!(m.check().is_empty());
    let (kc, kv) = constant_modules::<Q>(4, 4);
    assert!(mixed_of_cyclic(&kv).unwrap().check().is_empty());
    assert!(mixed_of_cyclic(&kc).unwrap().check().is_empty());
}

#[test]
fn bicomplex_anticommutes() {
    let x = cyc_algebra(&split_pair::<Q>(), 4, 4);
    let bc = cyclic_bicomplex(&x).unwrap();
    assert!(bc.check().is_empty());
    assert_eq!(bc.width, 10);
    assert!(bc.total_cochains().check().is_empty());
}

#[test]
fn cocyclic_modules_use_the_same_engine() {
    let y = cyc_coalgebra(&cyclic_group_algebra::<Q>(2).coalgebra, 5, 5);
    let (a, _) = both(&y);
    assert_eq!(a, vec![2, 0, 2, 0]);
}

#[test]
fn out_of_stable_range_is_an_error() {
    let x = cyc_algebra(&AlgebraData::<Q>::ground(), 4, 4);
    let c = CyclicCohomology::new(&x, Model::Mixed).unwrap();
    assert!(c.group(2).is_ok());
    assert!(matches!(c.group(3), Err(Error::OutOfStableRange { degree: 3, stable: 2 })));
    let t = c.table(false);
    assert!(t.is_stable(2) && !t.is_stable(3));
    assert_eq!(t.degrees.len(), 4);
}

#[test]
fn paracyclic_input_is_rejected() {
    let h = cyclic_group_algebra::<Q>(2);
    let t = cover_coalgebra(&hopfcyc::hopf::ModuleCoalgebra::regular(h), &sign_coefficients(), 3, 3).unwrap();
    assert!(matches!(mixed_of_cyclic(&t), Err(Error::NotCyclic(_))));
    assert!(matches!(cyclic_bicomplex(&t), Err(Error::NotCyclic(_))));
}

#[test]
fn normalization_preserves_dimensions() {
    for a in [split_pair::<Q>(), dual_numbers()] {
        let x = cyc_algebra(&a, 5, 5);
        let full = mixed_of_cyclic(&x).unwrap();
        let norm = normalized_mixed_of_cyclic(&x).unwrap();
        assert!(norm.dims.iter().zip(&full.dims).all(|(a, b)| a <= b));
        let t1 = CyclicCohomology::from_mixed(&full).table(true);
        let t2 = CyclicCohomology::from_mixed(&norm).table(true);
        assert_eq!(t1.stable_degrees(), t2.stable_degrees());
        assert_eq!(full.hochschild_cochains().cohomology_dims(true), norm.hochschild_cochains().cohomology_dims(true));
    }
}

#[test]
fn corrupted_connes_operator_is_detected() {
    let x = cyc_algebra(&dual_numbers::<Q>(), 5, 5);
    let mut m = mixed_of_cyclic(&x).unwrap();
    m.big_b[1] = m.big_b[1].scaled(&Q::from_i64(2));
    assert!(m.check().has("bB + Bb = 0"));
    // a lawful but wrong B changes the table
    let mut z = mixed_of_cyclic(&x).unwrap();
    for b in z.big_b.iter_mut() {
        *b = Matrix::zeros(b.rows(), b.cols());
    }
    assert!(z.check().is_empty());
    let wrong = CyclicCohomology::from_mixed(&z).table(true);
    let right = cohomology_table(&x, Model::Bicomplex, true).unwrap();
    assert!(!compare_tables(&right, &wrong).is_empty());
}

#[test]
fn representatives_are_cocycles_not_coboundaries() {
    let x = cyc_algebra(&cyclic_group_ring::<Q>(2), 4, 4);
    for model in [Model::Bicomplex, Model::Mixed] {
        let c = CyclicCohomology::new(&x, model).unwrap();
        let g = c.group(2).unwrap();
        assert_eq!(g.dim(), 2);
        for v in &g.representatives {
            assert!(c.complex.differential(2, v).is_empty());
            assert!(!g.is_coboundary(v));
        }
        let first = &g.representatives[0];
        let shifted = hopfcyc::linalg::matrix::combine(&Q::one(), first, &Q::one(), &c.complex.d[1].apply(c.complex.d[0].column(0)));
        assert!(g.cohomologous(first, &shifted));
    }
}

#[test]
fn point_double_complex() {
    let (_, kv) = constant_modules::<Q>(4, 4);
    let m = mixed_of_cyclic(&kv).unwrap();
    let d = hom_mixed_double(&m, &m);
    assert!(d.check().is_empty());
    let tot = total_mixed(&d).unwrap();
    assert!(tot.check().is_empty());
    assert_eq!(tot.dims, vec![1, 2, 3, 4, 5]);
    // the identity of Hom(k, k) in bidegree (0, 0) is a cocycle
    let coch = tot.total_cochains();
    assert!(coch.differential(0, &[(0, Q::one())]).is_empty());
}

#[test]
fn diagonal_hom_matches_total_of_double_complex() {
    let x = cyc_coalgebra(&cyclic_group_algebra::<Q>(2).coalgebra, 4, 4);
    for y in [cyc_algebra(&dual_numbers::<Q>(), 4, 4), cyc_algebra(&split_pair::<Q>(), 4, 4)] {
        let diag = diag_hom(&x, &y).unwrap();
        let d = hom_mixed_double(&mixed_of_cyclic(&x).unwrap(), &mixed_of_cyclic(&y).unwrap());
        assert!(d.check().is_empty(), "{}", d.check());
        let tot = total_mixed(&d).unwrap();
        for n in 0..=4 {
            let expect: usize = (0..=n).map(|p| x.dims[p] * y.dims[n - p]).sum();
            assert_eq!(tot.dims[n], expect);
        }
        let a = CyclicCohomology::from_mixed(&tot).table(true);
        let b = cohomology_table(&diag, Model::Mixed, true).unwrap();
        let hh_tot = tot.hochschild_cochains().cohomology_dims(true);
        let hh_diag = hochschild_dims(&diag, true).unwrap();
        assert_eq!(hh_tot[..3], hh_diag[..3]);
        assert_eq!(a.stable_degrees(), b.stable_degrees());
    }
}

#[test]
fn unit_map_is_a_mixed_morphism() {
    let k = cyc_algebra(&AlgebraData::<Q>::ground(), 4, 4);
    let g = cyc_algebra(&cyclic_group_ring::<Q>(2), 4, 4);
    let maps: Vec<Matrix<Q>> = (0..=4).map(|n| Matrix::from_fn(g.dims[n], 1, |_| vec![(0, Q::one())])).collect();
    let f = ModuleMorphism { name: "unit".into(), maps: maps.clone() };
    assert!(f.check(&k, &g, 4).unwrap().is_empty());
    let r = check_mixed_morphism(&maps, &mixed_of_cyclic(&k).unwrap(), &mixed_of_cyclic(&g).unwrap());
    assert!(r.is_empty(), "{r}");
}

#[test]
fn finite_field_models_agree() {
    type F = Fp<2>;
    let x = cyc_algebra(&cyclic_group_ring::<F>(2), 5, 5);
    let c = compare_models(&x, false).unwrap();
    assert!(c.agrees(), "{}", c.report);
}
