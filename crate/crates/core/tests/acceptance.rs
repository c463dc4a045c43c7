//! The ten acceptance criteria. Each prints one PASS/FAIL line; the process
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_complex::Complex64;

use moddata::arith::{divisors, units};
use moddata::catalog::{pointed_zn, shipped_data, su2_4_family, su2_4_parameters, su2_odd_mod2};
use moddata::classifier::{
    grothendieck_equiv, integral_dimension_search, residue_obstruction, vanishing_sum_check,
    vanishing_sum_scan, DimensionSearch,
};
use moddata::field_theory::{cauchy_prime_support, enumerate_levels, GroupShape};
use moddata::galois::{check_twist_galois_symmetry, compute_profile, transposition_signs};
use moddata::modular_data::{check_admissible, fs_exponent, verlinde_fusion};
use moddata::sl2z_reps::{all_lifts, inadmissible_psi, spectra_connectivity, spectra_lookup, spectra_table, ModularRep, Parity};
use moddata::{Cyclotomic, FusionRules, Matrix, ModularDatum, Perm, RootOfUnity};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: moddata::Error) -> String {
    err.to_string()
}

fn within(start: Instant, limit_secs: u64) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < Duration::from_secs(limit_secs), || {
        format!("took {took:.1?}, limit {limit_secs}s")
    })?;
    Ok(took)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let datum = su2_odd_mod2(5, 1).map_err(e)?;

    // float oracle for the S entries
    for i in 0..5 {
        for j in 0..5 {
            let want = ((2 * i + 1) as f64 * (2 * j + 1) as f64 * PI / 11.0).sin() / (PI / 11.0).sin();
            let got = datum.s()[(i, j)].to_complex();
            ensure((got - Complex64::new(want, 0.0)).norm() < 1e-12, || format!("S[{i}][{j}] = {got}, expected {want}"))?;
        }
    }
    let report = check_admissible(&datum);
    ensure(report.passed(), || format!("failed conditions {:?}", report.failures()))?;
    ensure(datum.t_order() == 11, || format!("ord(T) = {}", datum.t_order()))?;
    let fusion = verlinde_fusion(&datum).map_err(e)?;
    let fsexp = fs_exponent(&datum, &fusion).map_err(e)?;
    ensure(fsexp == 11, || format!("FSexp = {fsexp}"))?;

    let profile = compute_profile(&datum).map_err(e)?;
    let image = profile.image();
    ensure(image.len() == 5, || format!("|Gal| = {}", image.len()))?;
    let five_cycle = image.iter().find(|p| p.cycle_type() == vec![5]).ok_or("no 5-cycle in the image")?;
    let powers: BTreeSet<Perm> = (0..5).map(|k| five_cycle.pow(k)).collect();
    let image_set: BTreeSet<Perm> = image.iter().cloned().collect();
    ensure(powers == image_set, || "image is not generated by its 5-cycle".into())?;

    let cauchy = cauchy_prime_support(&datum).map_err(e)?;
    ensure(cauchy.norm_primes == vec![11] && cauchy.level_primes == vec![11], || {
        format!("norm primes {:?}, level primes {:?}", cauchy.norm_primes, cauchy.level_primes)
    })?;
    let took = within(start, 10)?;
    Ok(format!("7/7 conditions, N = FSexp = 11, Gal = <{five_cycle}>, Cauchy {{11}} ({took:.2?})"))
}

/// `N_ij^k` from floats, rounded.
fn float_verlinde(datum: &ModularDatum) -> Vec<Vec<Vec<i64>>> {
    let r = datum.rank();
    let s: Vec<Vec<Complex64>> = (0..r).map(|i| (0..r).map(|j| datum.s()[(i, j)].to_complex()).collect()).collect();
    let d2: f64 = (0..r).map(|j| s[0][j].norm_sqr()).sum();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    (0..r)
                        .map(|k| {
                            let v: Complex64 = (0..r).map(|m| s[i][m] * s[j][m] * s[k][m].conj() / s[0][m]).sum::<Complex64>() / d2;
                            v.re.round() as i64
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn witness_holds(f1: &FusionRules, f2: &FusionRules, pi: &Perm) -> bool {
    let r = f1.rank();
    pi.apply(0) == 0
        && (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| f2.get(pi.apply(i), pi.apply(j), pi.apply(k)) == f1.get(i, j, k))))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let params = su2_4_parameters();
    ensure(params.len() == 16, || format!("{} parameter tuples", params.len()))?;
    let data: Vec<ModularDatum> = params.iter().map(|&p| su2_4_family(p)).collect::<Result<_, _>>().map_err(e)?;
    let pairs: BTreeSet<(Vec<u64>, String)> = data.iter().map(|d| (d.t_exponents().to_vec(), d.to_json())).collect();
    ensure(pairs.len() == 16, || "the sixteen (S,T) pairs are not distinct".into())?;

    let twelve = Cyclotomic::from_integer(12);
    let transposition = Perm::from_cycles(5, &[&[0, 1]]);
    let expected_image: BTreeSet<Perm> = [Perm::identity(5), transposition.clone()].into();
    let mut fusions = Vec::new();
    for (k, d) in data.iter().enumerate() {
        let report = check_admissible(d);
        ensure(report.passed(), || format!("tuple {k}: failed {:?}", report.failures()))?;
        ensure(d.global_dim_sq() == twelve, || format!("tuple {k}: D^2 = {}", d.global_dim_sq()))?;
        let float_d2: f64 = d.dims().iter().map(|x| x.to_complex().norm_sqr()).sum();
        ensure((float_d2 - 12.0).abs() < 1e-12, || format!("tuple {k}: float D^2 = {float_d2}"))?;
        let profile = compute_profile(d).map_err(e)?;
        let image: BTreeSet<Perm> = profile.image().into_iter().collect();
        ensure(image == expected_image, || format!("tuple {k}: Galois image {image:?}"))?;
        let signs = transposition_signs(d).map_err(e)?;
        ensure(signs == vec![1, -1, -1], || format!("tuple {k}: signs {signs:?}"))?;
        let f = verlinde_fusion(d).map_err(e)?;
        let oracle = float_verlinde(d);
        ensure(
            (0..5).all(|i| (0..5).all(|j| (0..5).all(|l| f.get(i, j, l) as i64 == oracle[i][j][l]))),
            || format!("tuple {k}: Verlinde disagrees with the float oracle"),
        )?;
        fusions.push(f);
    }
    let mut witnesses = 0;
    for a in 0..16 {
        for b in 0..16 {
            let pi = grothendieck_equiv(&fusions[a], &fusions[b]).map_err(e)?.ok_or_else(|| format!("no witness for {a} ~ {b}"))?;
            ensure(witness_holds(&fusions[a], &fusions[b], &pi), || format!("bad witness {pi} for {a} ~ {b}"))?;
            witnesses += 1;
        }
    }
    let took = within(start, 30)?;
    Ok(format!("16 admissible pairs, D^2 = 12, {witnesses} verified witnesses, Gal = <(0 1)>, eps = (1,-1,-1) ({took:.2?})"))
}

fn criterion_3() -> Outcome {
    let shape = |s: &str| s.parse::<GroupShape>().map_err(e);
    let levels = |s: &str| -> Result<BTreeSet<u64>, String> { Ok(enumerate_levels(&shape(s)?).map_err(e)?.into_iter().collect()) };

    let q11: BTreeSet<u64> = divisors(264).into_iter().filter(|n| n % 11 == 0).collect();
    let got = levels("p=5,m=1,r=1")?;
    ensure(got == q11, || format!("p=5: {got:?} != {q11:?}"))?;

    let mut q7: BTreeSet<u64> = divisors(168).into_iter().filter(|n| n % 7 == 0).collect();
    q7.extend(divisors(72).into_iter().filter(|n| n % 9 == 0));
    let got = levels("p=3,m=1,r=1")?;
    ensure(got == q7, || format!("p=3: {got:?} != {q7:?}"))?;

    let mut total = 0;
    for m in 1..=4 {
        let got = levels(&format!("multiquadratic,m={m}"))?;
        ensure(!got.is_empty() || m == 4, || format!("m={m}: no levels"))?;
        ensure(got.iter().all(|n| 240 % n == 0), || format!("m={m}: {got:?} has a level not dividing 240"))?;
        total += got.len();
    }
    Ok(format!("{} levels for p=5, {} for p=3, {total} multi-quadratic levels all dividing 240", q11.len(), q7.len()))
}

/// `σ_k(s)_{ij} = ε s_{π(i) j}` for a unique row `π(i)`, found by direct search.
fn galois_rows(rep: &ModularRep, k: u64, n: u64) -> Result<Vec<usize>, String> {
    let s = rep.s();
    let r = rep.rank();
    (0..r)
        .map(|i| {
            let row: Vec<Cyclotomic> = (0..r).map(|j| s[(i, j)].galois_mod(k, n)).collect::<Result<_, _>>().map_err(e)?;
            let neg: Vec<Cyclotomic> = row.iter().map(|x| -x).collect();
            (0..r)
                .find(|&m| s.row(m) == row.as_slice() || s.row(m) == neg.as_slice())
                .ok_or_else(|| format!("sigma_{k} of row {i} is not a signed row"))
        })
        .collect()
}

fn criterion_4() -> Outcome {
    let mut lifts_checked = 0;
    let mut units_checked = 0;
    for entry in shipped_data().map_err(e)? {
        for (x, rep) in all_lifts(&entry.datum).map_err(e)?.iter().enumerate() {
            let v = check_twist_galois_symmetry(rep).map_err(e)?;
            ensure(v.passed(), || format!("{} lift {x}: {v}", entry.name))?;
            let n = moddata::arith::lcm(rep.level(), rep.s().conductor());
            for k in units(n) {
                let pi = galois_rows(rep, k, n)?;
                let t = rep.t();
                let kk = (k * k % n) as i64;
                for i in 0..rep.rank() {
                    ensure(t[i].pow(kk) == t[pi[i]], || format!("{} lift {x}, k = {k}, label {i}", entry.name))?;
                }
                units_checked += 1;
            }
            lifts_checked += 1;
        }
    }
    Ok(format!("{lifts_checked} lifts, {units_checked} (lift, unit) pairs"))
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for entry in shipped_data().map_err(e)? {
        for (x, rep) in all_lifts(&entry.datum).map_err(e)?.iter().enumerate() {
            let v = spectra_connectivity(rep);
            ensure(v.passed(), || format!("{} lift {x}: {v}", entry.name))?;
            count += 1;
        }
    }
    // direct sum of the canonical rank-2 lift and a degree-one representation
    let fib = all_lifts(&su2_odd_mod2(2, 1).map_err(e)?).map_err(e)?.remove(0);
    let taken: BTreeSet<RootOfUnity> = fib.t().iter().copied().collect();
    let j = (0..12).find(|&j| !taken.contains(&RootOfUnity::new(j, 12))).ok_or("no free 12th root")?;
    let mut s = Matrix::zeros(3);
    for a in 0..2 {
        for b in 0..2 {
            s[(a, b)] = fib.s()[(a, b)].clone();
        }
    }
    s[(2, 2)] = Cyclotomic::root_of_unity(12, -3 * j);
    let mut t = fib.t().to_vec();
    t.push(RootOfUnity::new(j, 12));
    let block = ModularRep::new(s, t).map_err(e)?;
    let v = spectra_connectivity(&block);
    ensure(!v.passed(), || "block-diagonal representation accepted".into())?;
    Ok(format!("{count} catalog lifts connected; block sum rejected: {v}"))
}

/// `(sign, a, b)` is `sign · e^{πi a/b}`, copied from the printed table.
type Entry = (i8, i64, i64);

fn e2(a: i64, b: i64) -> Entry {
    (1, 2 * a, b)
}

fn printed_table() -> Vec<(usize, Parity, u64, Vec<Vec<Entry>>)> {
    use Parity::{Even, Odd};
    let one = (1, 0, 1);
    let m1 = (-1, 0, 1);
    let i = (1, 1, 2);
    let mi = (-1, 1, 2);
    let mut rows = vec![
        (2, Even, 2, vec![vec![one, m1]]),
        (2, Odd, 3, (0..3).map(|r| vec![e2(r, 3), e2(-(r + 1), 3)]).collect()),
        (2, Odd, 4, vec![vec![i, mi]]),
        (2, Odd, 5, vec![vec![e2(1, 5), e2(-1, 5)], vec![(1, 4, 5), (1, -4, 5)]]),
        (2, Even, 8, vec![vec![(1, 5, 4), (1, 7, 4)], vec![(1, 1, 4), (1, 3, 4)]]),
        (2, Odd, 8, vec![vec![(1, 3, 4), (1, 5, 4)], vec![(1, 7, 4), (1, 1, 4)]]),
        (3, Even, 3, (0..3).map(|r| vec![e2(r + 1, 3), e2(r + 2, 3), e2(r, 3)]).collect()),
        (3, Odd, 4, vec![vec![i, m1, one], vec![mi, one, m1]]),
        (3, Even, 4, vec![vec![m1, mi, i], vec![one, i, mi]]),
        (3, Even, 5, (1..3).map(|r| vec![one, e2(r, 5), e2(-r, 5)]).collect()),
        (3, Even, 7, vec![vec![(1, 4, 7), (1, 2, 7), (1, 8, 7)], vec![(1, -4, 7), (1, -2, 7), (1, -8, 7)]]),
        (
            3,
            Odd,
            8,
            vec![
                vec![m1, (-1, 1, 4), (1, 1, 4)],
                vec![one, (1, 1, 4), (-1, 1, 4)],
                vec![m1, (-1, 3, 4), (1, 3, 4)],
                vec![one, (1, 3, 4), (-1, 3, 4)],
            ],
        ),
        (
            3,
            Even,
            8,
            vec![
                vec![mi, (-1, 3, 4), (1, 3, 4)],
                vec![i, (1, 3, 4), (-1, 3, 4)],
                vec![i, (-1, 1, 4), (1, 1, 4)],
                vec![mi, (1, 1, 4), (-1, 1, 4)],
            ],
        ),
        (
            3,
            Odd,
            16,
            vec![
                vec![(-1, 1, 4), (1, 1, 8), (-1, 1, 8)],
                vec![(1, 1, 4), (-1, 1, 8), (1, 1, 8)],
                vec![(1, 1, 4), (1, 5, 8), (-1, 5, 8)],
                vec![(-1, 1, 4), (-1, 5, 8), (1, 5, 8)],
                vec![(-1, 3, 4), (1, 3, 8), (-1, 3, 8)],
                vec![(1, 3, 4), (-1, 3, 8), (1, 3, 8)],
                vec![(1, 3, 4), (-1, 7, 8), (1, 7, 8)],
                vec![(-1, 3, 4), (-1, 7, 8), (1, 7, 8)],
            ],
        ),
        (
            3,
            Even,
            16,
            vec![
                vec![(-1, 3, 4), (1, 5, 8), (-1, 5, 8)],
                vec![(1, 3, 4), (-1, 5, 8), (1, 5, 8)],
                vec![(1, 3, 4), (-1, 1, 8), (1, 1, 8)],
                vec![(-1, 3, 4), (1, 1, 8), (-1, 1, 8)],
                vec![(-1, 1, 4), (-1, 7, 8), (1, 7, 8)],
                vec![(1, 1, 4), (1, 7, 8), (-1, 7, 8)],
                vec![(-1, 1, 4), (1, 3, 8), (-1, 3, 8)],
                vec![(1, 1, 4), (-1, 3, 8), (1, 3, 8)],
            ],
        ),
    ];
    let quartic5 = vec![vec![e2(1, 5), e2(2, 5), e2(3, 5), e2(4, 5)]];
    rows.push((4, Odd, 5, quartic5.clone()));
    rows.push((4, Even, 5, quartic5));
    rows.push((4, Odd, 7, vec![vec![one, e2(1, 7), e2(4, 7), e2(2, 7)]]));
    rows.push((4, Odd, 7, vec![vec![one, e2(6, 7), e2(3, 7), e2(5, 7)]]));
    let octic = vec![vec![(1, 1, 4), (1, 3, 4), (1, 5, 4), (1, 7, 4)]];
    rows.push((4, Odd, 8, octic.clone()));
    rows.push((4, Even, 8, octic));
    // e^{2πi(a/9 + r/3)} = e^{πi (2a + 6r)/9}
    let ninth = |a: i64, r: i64| (1, 2 * a + 6 * r, 9);
    let mut nonic: Vec<Vec<Entry>> = (0..3).map(|r| vec![ninth(1, r), ninth(4, r), ninth(7, r), ninth(3, r)]).collect();
    nonic.extend((0..3).map(|r| vec![ninth(8, r), ninth(5, r), ninth(2, r), ninth(6, r)]));
    rows.push((4, Odd, 9, nonic.clone()));
    rows.push((4, Even, 9, nonic));
    rows
}

fn eval_entry((sign, a, b): Entry) -> Complex64 {
    Complex64::from_polar(f64::from(sign), PI * a as f64 / b as f64)
}

fn criterion_6() -> Outcome {
    let table = spectra_table();
    let printed = printed_table();
    ensure(table.len() == printed.len(), || format!("{} rows vs {} printed", table.len(), printed.len()))?;
    let mut values = 0;
    for (row, (deg, parity, level, spectra)) in table.iter().zip(&printed) {
        ensure(row.degree == *deg && row.parity == *parity && row.level == *level, || {
            format!("row header {:?} vs ({deg}, {parity}, {level})", (row.degree, row.parity, row.level))
        })?;
        ensure(row.spectra.len() == spectra.len(), || format!("row ({deg}, {parity}, {level}): spectrum count"))?;
        for (got, want) in row.spectra.iter().zip(spectra) {
            ensure(got.len() == *deg && want.len() == *deg, || format!("row ({deg}, {parity}, {level}): size"))?;
            for (x, &w) in got.iter().zip(want) {
                let z = x.to_cyclotomic().complex_eval(15).map_err(e)?;
                let diff = (z - eval_entry(w)).norm();
                ensure(diff < 1e-12, || format!("row ({deg}, {parity}, {level}): {x} vs {w:?} differ by {diff:e}"))?;
                values += 1;
            }
        }
    }
    let lookup = spectra_lookup(2, 5, Parity::Odd).map_err(e)?;
    let got: Vec<Vec<RootOfUnity>> = lookup.iter().flat_map(|r| r.spectra.clone()).collect();
    let want = vec![
        vec![RootOfUnity::new(1, 5), RootOfUnity::new(-1, 5)],
        vec![RootOfUnity::new(2, 5), RootOfUnity::new(-2, 5)],
    ];
    ensure(got == want, || format!("lookup(2, 5, odd) = {got:?}"))?;
    Ok(format!("{} rows, {values} eigenvalues within 1e-12; lookup(2,5,odd) exact", table.len()))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let search = DimensionSearch {
        orbit_multiplicities: vec![1, 5, 1],
        primes: vec![2, 3, 11],
        bound: 1_000_000,
        integral_global_dimension: true,
        moduli: vec![5],
    };
    let found = integral_dimension_search(&search).map_err(e)?;
    ensure(found.is_empty(), || format!("survivors {:?}", &found[..found.len().min(3)]))?;
    ensure(residue_obstruction(&search) == Some(5), || "no residue obstruction at 5".into())?;

    // direct oracle: D² = 1 + 5 d1² + d2² is never a {2,3,11}-smooth square for smooth d1, d2 ≤ 10⁴
    let is_smooth = |n: u64| {
        let mut m = n;
        for p in [2, 3, 11] {
            while m % p == 0 {
                m /= p;
            }
        }
        m == 1
    };
    let smooth: Vec<u64> = (1..=10_000u64).filter(|&n| is_smooth(n)).collect();
    for &a in &smooth {
        for &b in &smooth {
            let d2 = 1 + 5 * a * a + b * b;
            let r = (d2 as f64).sqrt().round() as u64;
            ensure(r * r != d2 || !is_smooth(d2), || format!("d1 = {a}, d2 = {b} gives D^2 = {r}^2"))?;
        }
    }
    let took = within(start, 60)?;
    Ok(format!("empty up to 10^6, obstruction mod 5, oracle over {} smooth values ({took:.2?})", smooth.len()))
}

fn criterion_8() -> Outcome {
    let mut data: Vec<(String, ModularDatum)> = shipped_data().map_err(e)?.into_iter().map(|c| (c.name, c.datum)).collect();
    for (p, conj) in [(2, 1), (2, 2), (3, 1), (3, 3), (5, 2), (6, 1)] {
        data.push((format!("su2_odd_mod2({p}, {conj})"), su2_odd_mod2(p, conj).map_err(e)?));
    }
    for (n, m) in [(3, 1), (3, 2), (7, 3)] {
        data.push((format!("pointed_zn({n}, {m})"), pointed_zn(n, m).map_err(e)?));
    }
    for (name, d) in &data {
        let f = verlinde_fusion(d).map_err(e)?;
        for (what, v) in [
            ("associativity", f.check_associativity()),
            ("symmetries", f.check_symmetries()),
            ("unit", f.check_unit()),
            ("commuting", f.check_commuting()),
        ] {
            ensure(v.passed(), || format!("{name}: {what}: {v}"))?;
        }
        let r = f.rank();
        let oracle = float_verlinde(d);
        ensure(
            (0..r).all(|i| (0..r).all(|j| (0..r).all(|k| f.get(i, j, k) as i64 == oracle[i][j][k]))),
            || format!("{name}: Verlinde disagrees with the float oracle"),
        )?;
    }
    Ok(format!("{} fusion rings, ranks up to 7", data.len()))
}

fn criterion_9() -> Outcome {
    let mut parts = Vec::new();
    for (p, conductor) in [(5u64, 24u64), (7, 8)] {
        let cert = inadmissible_psi(p).map_err(e)?;
        ensure(cert.relations.passed(), || format!("p = {p}: relations {}", cert.relations))?;
        ensure(cert.verdict.passed(), || format!("p = {p}: {}", cert.verdict))?;
        ensure(cert.sqrt_conductor == conductor, || format!("p = {p}: conductor {}", cert.sqrt_conductor))?;
        // independent route: some σ_k with k ≡ 1 mod p moves √(p+1)
        let n = conductor * p;
        let root = &cert.rep.s()[(0, 1)];
        let moved = units(n).into_iter().filter(|k| k % p == 1).any(|k| root.galois_mod(k, n).is_ok_and(|x| x != *root));
        ensure(moved, || format!("p = {p}: sqrt(p+1) fixed by Gal(Q_{n}/Q_{p})"))?;
        // float check of ψ(s)₀₀ and the edge entries
        let s00 = cert.rep.s()[(0, 0)].to_complex();
        let s01 = root.to_complex().re.abs();
        ensure((s00.re + 1.0 / p as f64).abs() < 1e-12, || format!("p = {p}: s00 = {s00}"))?;
        ensure((s01 - ((p + 1) as f64).sqrt() / p as f64).abs() < 1e-12, || format!("p = {p}: s01 = {s01}"))?;
        parts.push(format!("p={p}: conductor {conductor} does not divide {p}"));
    }
    Ok(parts.join("; "))
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let scan = vanishing_sum_scan(24).map_err(e)?;
    ensure(scan.counterexamples.is_empty(), || format!("counterexamples {:?}", scan.counterexamples))?;
    let took = within(start, 120)?;

    // independent route: small coefficients over orders ≤ 12, sums tested in floats then exactly
    let mut solutions = 0;
    for oa in 1..=12u64 {
        for ob in oa..=12u64 {
            for a_exp in units(oa) {
                for b_exp in units(ob) {
                    let (alpha, beta) = (RootOfUnity::new(a_exp as i64, oa), RootOfUnity::new(b_exp as i64, ob));
                    let (za, zb) = (alpha.to_complex(), beta.to_complex());
                    for a in -3i64..=3 {
                        for b in -3i64..=3 {
                            for ca in -3i64..=3 {
                                for cb in -3i64..=3 {
                                    if a * b * ca * cb == 0 {
                                        continue;
                                    }
                                    let z = Complex64::new(a as f64, b as f64) + za * ca as f64 + zb * cb as f64;
                                    if z.norm() > 1e-9 {
                                        continue;
                                    }
                                    let check = vanishing_sum_check(a, b, ca, cb, alpha, beta).map_err(e)?;
                                    ensure(check.vanishes && check.verdict.passed(), || {
                                        format!("{a} + {b}i + {ca}*{alpha} + {cb}*{beta}: {}", check.verdict)
                                    })?;
                                    solutions += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    ensure(solutions > 0, || "the small-coefficient search found no vanishing sums".into())?;
    Ok(format!(
        "{} pairs, {} solvable, 0 counterexamples ({took:.2?}); {solutions} small solutions confirmed",
        scan.pairs_checked,
        scan.solvable_pairs.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("SU(2)_9/Z_2 admissibility, FSexp, Galois 5-cycle, Cauchy", criterion_1),
        ("SU(2)_4 family: 16 pairs, D^2 = 12, equivalence, signs", criterion_2),
        ("level enumeration", criterion_3),
        ("Galois twist symmetry on all lifts", criterion_4),
        ("spectra connectivity", criterion_5),
        ("t-spectra table round trip", criterion_6),
        ("rank-7 integral Z/5Z search", criterion_7),
        ("fusion ring invariants", criterion_8),
        ("psi(5), psi(7) inadmissibility", criterion_9),
        ("vanishing sum scan, M = 24", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
