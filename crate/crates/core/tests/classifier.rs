use moddata::catalog::{pointed_zn, su2_odd_mod2, CatalogEntry};
use moddata::classifier::{
    default_rank5_entries, grothendieck_equiv, integral_dimension_search, rank5_galois_cases, rank5_suite,
    residue_obstruction, vanishing_sum_check, DimensionSearch, FusionClass,
};
use moddata::modular_data::verlinde_fusion;
use moddata::{Cyclotomic, Error, Perm, RootOfUnity};

#[test]
fn default_suite_passes() {
    let entries = default_rank5_entries().unwrap();
    assert_eq!(entries.len(), 18);
    let report = rank5_suite(&entries).unwrap();
    for d in &report.data {
        assert!(d.passed(), "{}: {:?}", d.name, d.failures());
    }
    assert_eq!(report.not_instantiated, vec![FusionClass::Su3Level4ModZ3]);

    let class = |name: &str| report.data.iter().find(|d| d.name == name).unwrap().fusion_class;
    assert_eq!(class("su2_9_mod2"), Some(FusionClass::Su2Level9ModZ2));
    assert_eq!(FusionClass::Su2Level9ModZ2.label(), "(ii)");
    assert_eq!(class("pointed_z5_m1"), Some(FusionClass::Su5Level1));
    assert_eq!(class("su2_4_family_7"), Some(FusionClass::Su2Level4));

    let case = |name: &str| report.data.iter().find(|d| d.name == name).unwrap().galois_case;
    assert_eq!(case("su2_9_mod2"), Some(3));
    assert_eq!(case("su2_4_family_0"), Some(0));
    assert_eq!(case("pointed_z5_m1"), None);
}

#[test]
fn corrupted_datum_is_isolated() {
    let good = su2_odd_mod2(5, 1).unwrap();
    let bad = good.with_twist(2, RootOfUnity::new(1, 11)).unwrap();
    let entries = vec![
        CatalogEntry { name: "good".into(), datum: good },
        CatalogEntry { name: "bad".into(), datum: bad },
    ];
    let report = rank5_suite(&entries).unwrap();
    assert!(report.data[0].passed());
    assert!(!report.data[1].passed());
    let failing: Vec<&str> = report.data[1].failures().iter().map(|p| p.name.as_str()).collect();
    assert!(failing.contains(&"admissible (ii)"), "{failing:?}");
    assert!(!report.passed());
}

#[test]
fn inequivalent_fusion() {
    let a = verlinde_fusion(&su2_odd_mod2(5, 1).unwrap()).unwrap();
    let b = verlinde_fusion(&pointed_zn(5, 1).unwrap()).unwrap();
    assert_eq!(grothendieck_equiv(&a, &b).unwrap(), None);
    let c = verlinde_fusion(&su2_odd_mod2(3, 1).unwrap()).unwrap();
    assert_eq!(grothendieck_equiv(&a, &c).unwrap(), None);
}

#[test]
fn relabeling_is_recovered() {
    let f = verlinde_fusion(&su2_odd_mod2(5, 1).unwrap()).unwrap();
    let pi = Perm::from_images(vec![0, 4, 2, 1, 3]);
    let g = f.relabel(&pi);
    let found = grothendieck_equiv(&f, &g).unwrap().unwrap();
    let r = f.rank();
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                assert_eq!(g.get(found.apply(i), found.apply(j), found.apply(k)), f.get(i, j, k));
            }
        }
    }
    // the dimensions of SU(2)_9/Z_2 are distinct, so the witness is unique
    assert_eq!(found, pi);
}

#[test]
fn equivalence_composes() {
    let f = verlinde_fusion(&su2_odd_mod2(5, 1).unwrap()).unwrap();
    let p = Perm::from_images(vec![0, 2, 3, 4, 1]);
    let q = Perm::from_images(vec![0, 3, 1, 2, 4]);
    let g = f.relabel(&p);
    let h = g.relabel(&q);
    let fg = grothendieck_equiv(&f, &g).unwrap().unwrap();
    let gh = grothendieck_equiv(&g, &h).unwrap().unwrap();
    let fh = grothendieck_equiv(&f, &h).unwrap().unwrap();
    assert_eq!(gh.compose(&fg), fh);
    let gf = grothendieck_equiv(&g, &f).unwrap().unwrap();
    assert_eq!(gf, fg.inverse());
}

#[test]
fn equivalence_budget() {
    let f = verlinde_fusion(&pointed_zn(9, 1).unwrap()).unwrap();
    assert!(matches!(grothendieck_equiv(&f, &f), Err(Error::TooLarge(_))));
}

#[test]
fn case_list() {
    let cases = rank5_galois_cases();
    let t01 = Perm::from_cycles(5, &[&[0, 1]]);
    assert!(cases.iter().any(|g| g.elements.len() == 2 && g.contains(&t01)));
    let five = Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]);
    assert!(cases.iter().any(|g| g.contains(&five)));
}

#[test]
fn cube_root_never_cancels() {
    let alpha = RootOfUnity::new(1, 3);
    for ob in 3..=12 {
        for v in moddata::arith::units(ob) {
            let beta = RootOfUnity::new(v as i64, ob);
            for ca in -10i64..=10 {
                for cb in -10i64..=10 {
                    if ca == 0 || cb == 0 {
                        continue;
                    }
                    let c = vanishing_sum_check(1, 1, ca, cb, alpha, beta).unwrap();
                    assert!(!c.vanishes, "{ca} {cb} {beta}");
                }
            }
        }
    }
}

#[test]
fn vanishing_check_arguments() {
    let i = RootOfUnity::new(1, 4);
    assert!(matches!(vanishing_sum_check(0, 1, 1, 1, RootOfUnity::one(), i), Err(Error::InvalidParameters(_))));
    assert!(matches!(vanishing_sum_check(1, 1, 1, 1, i, RootOfUnity::one()), Err(Error::InvalidParameters(_))));
    let c = vanishing_sum_check(-3, 2, 3, -2, RootOfUnity::one(), i).unwrap();
    assert!(c.vanishes && c.verdict.passed());
}

fn search(orbits: Vec<u64>, primes: Vec<u64>, bound: u64, integral: bool) -> DimensionSearch {
    DimensionSearch {
        orbit_multiplicities: orbits,
        primes,
        bound,
        integral_global_dimension: integral,
        moduli: Vec::new(),
    }
}

#[test]
fn pointed_rank5_dimensions() {
    let found = integral_dimension_search(&search(vec![1; 5], vec![5], 25, false)).unwrap();
    assert!(found.contains(&vec![1, 1, 1, 1, 1]));
}

#[test]
fn rank2_matches_brute_force() {
    let found = integral_dimension_search(&search(vec![1, 1], vec![5], 10_000, false)).unwrap();
    let mut brute = Vec::new();
    for d in 1..=10_000u64 {
        let five_power = |mut n: u64| {
            while n % 5 == 0 {
                n /= 5;
            }
            n == 1
        };
        if five_power(d) && five_power(1 + d * d) {
            brute.push(vec![1, d]);
        }
    }
    assert_eq!(found, brute);
}

#[test]
fn rank7_residue_obstruction() {
    let mut s = search(vec![1, 5, 1], vec![2, 3, 11], 10_000, true);
    s.moduli = vec![5];
    assert_eq!(residue_obstruction(&s), Some(5));
    assert!(integral_dimension_search(&s).unwrap().is_empty());
    s.integral_global_dimension = false;
    assert_eq!(residue_obstruction(&s), None);
}

#[test]
fn search_rejects_bad_orbits() {
    let s = search(vec![2, 1], vec![2], 10, false);
    assert!(matches!(integral_dimension_search(&s), Err(Error::InvalidParameters(_))));
}

#[test]
fn representatives() {
    for class in FusionClass::ALL {
        let rep = class.representative().unwrap();
        assert_eq!(rep.is_none(), class == FusionClass::Su3Level4ModZ3);
        if let Some(d) = rep {
            assert_eq!(d.rank(), 5);
            assert_eq!(d.dims()[0], Cyclotomic::one());
        }
    }
}
