use super::*;
use crate::catalog::{pointed_zn, su2_4_family, su2_4_parameters, su2_odd_mod2};
use crate::modular_data::trivial_datum;

fn su2_9() -> ModularDatum {
    su2_odd_mod2(5, 1).unwrap()
}

#[test]
fn canonical_lift_of_su2_9() {
    let rep = canonical_lift(&su2_9()).unwrap();
    assert!(rep.verify_relations().unwrap().passed());
    let n = rep.level();
    assert!(n % 11 == 0 && 132 % n == 0, "level {n}");
    let d = global_dimension(&su2_9()).unwrap();
    assert_eq!(d.try_mul(&d).unwrap(), su2_9().global_dim_sq());
    assert!(d.is_real() && d.to_complex().re > 0.0);
    assert_eq!(rep.s(), &su2_9().s().try_scale(&d.try_inv().unwrap()).unwrap());
}

#[test]
fn trivial_lift() {
    let rep = canonical_lift(&trivial_datum()).unwrap();
    assert_eq!(rep.rank(), 1);
    assert!(rep.s()[(0, 0)].is_one());
    assert_eq!(rep.t(), &[RootOfUnity::one()]);
    assert_eq!(rep.parity(), Parity::Even);
    assert!(spectra_connectivity(&rep).passed());
}

#[test]
fn twelve_lifts_differ_by_scalars() {
    let datum = su2_4_family(su2_4_parameters()[3]).unwrap();
    let lifts = all_lifts(&datum).unwrap();
    assert_eq!(lifts.len(), 12);
    let theta = datum.twists();
    let mut scalars = BTreeSet::new();
    for rep in &lifts {
        assert!(rep.verify_relations().unwrap().passed());
        let c = rep.t()[0] * theta[0].inv();
        for (t, th) in rep.t().iter().zip(&theta) {
            assert_eq!(*t, c * *th);
        }
        scalars.insert(c);
        let n = rep.level();
        assert!(n % 24 == 0 && 288 % n == 0, "level {n}");
    }
    assert_eq!(scalars.len(), 12);
}

#[test]
fn projective_order_of_t_is_torder() {
    for datum in [su2_9(), pointed_zn(5, 1).unwrap(), su2_4_family(su2_4_parameters()[9]).unwrap()] {
        let rep = canonical_lift(&datum).unwrap();
        let t0 = rep.t()[0].inv();
        let proj = rep.t().iter().fold(1, |acc, &t| lcm(acc, (t * t0).order()));
        assert_eq!(proj, datum.torder());
    }
}

#[test]
fn self_dual_data_have_even_lifts() {
    for datum in [su2_9(), su2_odd_mod2(3, 1).unwrap(), su2_4_family(su2_4_parameters()[0]).unwrap()] {
        let rep = even_lift(&datum).unwrap();
        assert_eq!(rep.parity(), Parity::Even);
        assert!(rep.verify_relations().unwrap().passed());
    }
    let pointed = canonical_lift(&pointed_zn(5, 1).unwrap()).unwrap();
    assert_eq!(pointed.parity(), Parity::Neither);
    assert!(matches!(even_lift(&pointed_zn(5, 1).unwrap()), Err(Error::NotApplicable(_))));
}

#[test]
fn normalize_rejects_bad_indices() {
    assert!(matches!(normalize(&su2_9(), 12, 0), Err(Error::OutOfRange(_))));
    assert!(matches!(normalize(&su2_9(), 0, 6), Err(Error::OutOfRange(_))));
    for z in 0..6 {
        assert!(normalize(&su2_9(), 5, z).unwrap().verify_relations().unwrap().passed());
    }
}

#[test]
fn block_sum_is_disconnected() {
    let s = Matrix::identity(2);
    let t = vec![RootOfUnity::one(), RootOfUnity::new(4, 12)];
    let rep = ModularRep::new(s, t).unwrap();
    assert!(!spectra_connectivity(&rep).passed());
    assert_eq!(label_components(&rep).len(), 2);
}

#[test]
fn relations_are_enforced() {
    let t = vec![RootOfUnity::new(1, 5)];
    assert!(matches!(ModularRep::new(Matrix::identity(1), t), Err(Error::NotModular(_))));
}

#[test]
fn table_lookups() {
    let rows = spectra_lookup(2, 2, Parity::Even).unwrap();
    assert_eq!(rows[0].spectra, vec![vec![RootOfUnity::one(), RootOfUnity::new(1, 2)]]);
    let rows = spectra_lookup(3, 7, Parity::Even).unwrap();
    assert_eq!(rows[0].spectra.len(), 2);
    let conj: Vec<RootOfUnity> = rows[0].spectra[0].iter().map(RootOfUnity::inv).collect();
    assert_eq!(rows[0].spectra[1], conj);
    assert_eq!(spectra_lookup(4, 7, Parity::Odd).unwrap().len(), 2);
    assert!(matches!(spectra_lookup(2, 7, Parity::Even), Err(Error::NotTabulated(_))));
    assert!(matches!(spectra_lookup(5, 5, Parity::Odd), Err(Error::NotTabulated(_))));
}

fn all_ones(r: usize) -> Matrix {
    Matrix::from_fn(r, |_, _| Cyclotomic::one())
}

#[test]
fn obstruction_scans() {
    let scan = obstruction_120(&canonical_lift(&su2_9()).unwrap()).unwrap();
    assert!(scan.verdict.passed());
    assert!(scan.closed_subsets.is_empty());

    let t77: Vec<RootOfUnity> = [1, 2, 4].iter().map(|&a| RootOfUnity::new(a, 77)).collect();
    let rep = ModularRep::from_parts(Matrix::identity(3), t77).unwrap();
    let scan = obstruction_120(&rep).unwrap();
    assert_eq!(scan.closed_subsets.len(), 3);
    assert_eq!(scan.violations.len(), 3);
    assert!(!scan.verdict.passed());

    let t = vec![RootOfUnity::one(), RootOfUnity::new(1, 77), RootOfUnity::new(2, 77)];
    let rep = ModularRep::from_parts(all_ones(3), t).unwrap();
    assert!(obstruction_120(&rep).unwrap().verdict.passed());

    let rep = ModularRep::from_parts(Matrix::identity(2), vec![RootOfUnity::one(); 2]).unwrap();
    assert!(matches!(obstruction_120(&rep), Err(Error::OutOfRange(_))));
}

#[test]
fn psi_arguments() {
    assert!(matches!(inadmissible_psi(3), Err(Error::OutOfRange(_))));
    assert!(matches!(inadmissible_psi(9), Err(Error::InvalidParameters(_))));
    let cert = inadmissible_psi(11).unwrap();
    assert!(cert.relations.passed());
    assert_eq!(cert.sqrt_conductor, 12);
    assert!(cert.verdict.passed());
}

#[test]
fn signed_perm_identity() {
    let rep = canonical_lift(&su2_9()).unwrap();
    let m = signed_perm_match(&rep, &rep).unwrap().unwrap();
    assert!(m.perm.is_identity());
    assert!(m.signs.iter().all(|&s| s == 1));
}

#[test]
fn dual_lifts_do_not_match() {
    let a = canonical_lift(&su2_9()).unwrap();
    let b = canonical_lift(&su2_odd_mod2(5, 10).unwrap()).unwrap();
    assert_ne!(a.spectrum(), b.spectrum());
    assert_eq!(signed_perm_match(&a, &b).unwrap(), None);
}

#[test]
fn signed_perm_round_trip() {
    let rep = canonical_lift(&su2_9()).unwrap();
    let perm = [0usize, 3, 1, 4, 2];
    let signs = [1i8, -1, 1, -1, -1];
    let r = rep.rank();
    let mut s2 = Matrix::zeros(r);
    let mut t2 = vec![RootOfUnity::one(); r];
    for i in 0..r {
        t2[perm[i]] = rep.t()[i];
        for j in 0..r {
            let v = &rep.s()[(i, j)];
            s2[(perm[i], perm[j])] = if signs[i] * signs[j] > 0 { v.clone() } else { -v };
        }
    }
    let other = ModularRep::new(s2, t2).unwrap();
    let m = signed_perm_match(&rep, &other).unwrap().unwrap();
    assert_eq!(m.perm, Perm::from_images(perm.to_vec()));
    assert_eq!(m.signs, signs.to_vec());
}

#[test]
fn degenerate_reps_are_not_matched() {
    let rep = canonical_lift(&su2_4_family(su2_4_parameters()[0]).unwrap()).unwrap();
    assert!(!rep.is_nondegenerate());
    assert!(matches!(signed_perm_match(&rep, &rep), Err(Error::NotApplicable(_))));
}
