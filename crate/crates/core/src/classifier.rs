//! Rank-5 verification harness: Galois cases, fusion-rule equivalence,
//! vanishing sums of roots of unity and integral dimension searches.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::{factorize, lcm, perfect_square_root, units};
use crate::catalog::{pointed_zn, shipped_data, su2_4_family, su2_4_parameters, su2_odd_mod2, CatalogEntry};
use crate::cyclotomic::{Cyclotomic, Rational, RootOfUnity};
use crate::error::{Error, Result};
use crate::field_theory::cauchy_prime_support;
use crate::galois::{check_twist_galois_symmetry, compute_profile, exclusion_predicates};
use crate::modular_data::{check_admissible, verlinde_fusion, FusionRules, ModularDatum};
use crate::perm::{for_each_fixing_zero, Perm};
use crate::sl2z_reps::{all_lifts, spectra_connectivity};
use crate::verdict::{NamedVerdict, Verdict};

/// A permutation group given by generators, with its elements listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermGroup {
    pub generators: Vec<Perm>,
    pub elements: BTreeSet<Perm>,
}

impl PermGroup {
    pub fn generate(degree: usize, generators: Vec<Perm>) -> Self {
        let mut elements = BTreeSet::from([Perm::identity(degree)]);
        let mut frontier = vec![Perm::identity(degree)];
        while let Some(x) = frontier.pop() {
            for g in &generators {
                let y = g.compose(&x);
                if elements.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        PermGroup { generators, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.contains(p)
    }

    /// `{π g π⁻¹ : g ∈ G}`.
    pub fn conjugate_elements(&self, pi: &Perm) -> BTreeSet<Perm> {
        let inv = pi.inverse();
        self.elements.iter().map(|g| pi.compose(g).compose(&inv)).collect()
    }
}

impl fmt::Display for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// The possible Galois groups of a self-dual, non-integral rank-5 modular
/// category, up to relabeling.
pub fn rank5_galois_cases() -> Vec<PermGroup> {
    let c = |cycles: &[&[usize]]| Perm::from_cycles(5, cycles);
    vec![
        PermGroup::generate(5, vec![c(&[&[0, 1]])]),
        PermGroup::generate(5, vec![c(&[&[0, 1, 2]])]),
        PermGroup::generate(5, vec![c(&[&[0, 1, 2, 3]])]),
        PermGroup::generate(5, vec![c(&[&[0, 1, 2, 3, 4]])]),
        PermGroup::generate(5, vec![c(&[&[0, 1], &[2, 3]])]),
        PermGroup::generate(5, vec![c(&[&[0, 1]]), c(&[&[2, 3]])]),
        PermGroup::generate(5, vec![c(&[&[0, 1], &[2, 3]]), c(&[&[0, 2], &[1, 3]])]),
    ]
}

/// Index of the case matched by `image` after a relabeling fixing 0,
/// together with that relabeling.
pub fn match_galois_case(image: &[Perm]) -> Option<(usize, Perm)> {
    let image: BTreeSet<Perm> = image.iter().cloned().collect();
    let n = image.iter().next()?.len();
    let cases = rank5_galois_cases();
    let mut found = None;
    for_each_fixing_zero(n, |pi| {
        let pi = Perm::from_images(pi.to_vec());
        let inv = pi.inverse();
        let relabeled: BTreeSet<Perm> = image.iter().map(|g| pi.compose(g).compose(&inv)).collect();
        if let Some(k) = cases.iter().position(|c| c.elements == relabeled) {
            found = Some((k, pi));
            return true;
        }
        false
    });
    found
}

const EQUIV_MAX_RANK: usize = 8;

/// A relabeling `π` with `π(0) = 0` and `N₂_{π(i)π(j)}^{π(k)} = N₁_{ij}^k`.
pub fn grothendieck_equiv(f1: &FusionRules, f2: &FusionRules) -> Result<Option<Perm>> {
    let r = f1.rank();
    if r != f2.rank() {
        return Ok(None);
    }
    if r > EQUIV_MAX_RANK {
        return Err(Error::TooLarge(format!(
            "rank {r} exceeds the search budget of {EQUIV_MAX_RANK}"
        )));
    }
    let invariant = |f: &FusionRules| {
        let mut v: Vec<u64> = (0..r).map(|i| (0..r).map(|j| f.get(i, i, j)).sum()).collect();
        v.sort_unstable();
        v
    };
    if invariant(f1) != invariant(f2) {
        return Ok(None);
    }
    let mut witness = None;
    for_each_fixing_zero(r, |pi| {
        let ok = (0..r).all(|i| {
            (0..r).all(|j| (0..r).all(|k| f2.get(pi[i], pi[j], pi[k]) == f1.get(i, j, k)))
        });
        if ok {
            witness = Some(Perm::from_images(pi.to_vec()));
        }
        ok
    });
    Ok(witness)
}

/// Outcome of checking `a + b i + c_α α + c_β β = 0` against the conclusions
/// `α = ±1`, `β = ±i`, `a + α c_α = 0`, `b - iβ c_β = 0`.
#[derive(Clone, Debug, Serialize)]
pub struct VanishingSumCheck {
    pub vanishes: bool,
    pub verdict: Verdict,
}

fn int(n: i64) -> Cyclotomic {
    Cyclotomic::from_integer(n)
}

pub fn vanishing_sum_check(
    a: i64,
    b: i64,
    c_alpha: i64,
    c_beta: i64,
    alpha: RootOfUnity,
    beta: RootOfUnity,
) -> Result<VanishingSumCheck> {
    if a == 0 || b == 0 || c_alpha == 0 || c_beta == 0 {
        return Err(Error::InvalidParameters("coefficients must be nonzero".into()));
    }
    if alpha.order() > beta.order() {
        return Err(Error::InvalidParameters("need ord(alpha) <= ord(beta)".into()));
    }
    let i = Cyclotomic::zeta(4);
    let (al, be) = (alpha.to_cyclotomic(), beta.to_cyclotomic());
    let sum = int(a) + int(b) * &i + int(c_alpha) * &al + int(c_beta) * &be;
    if !sum.is_zero() {
        return Ok(VanishingSumCheck {
            vanishes: false,
            verdict: Verdict::Pass,
        });
    }
    let verdict = if alpha.order() > 2 {
        Verdict::fail(format!("alpha = {alpha} is not +-1"))
    } else if beta.order() != 4 {
        Verdict::fail(format!("beta = {beta} is not +-i"))
    } else if !(int(a) + int(c_alpha) * &al).is_zero() {
        Verdict::fail("a + alpha c_alpha != 0")
    } else if !(int(b) - &i * &be * int(c_beta)).is_zero() {
        Verdict::fail("b - i beta c_beta != 0")
    } else {
        Verdict::Pass
    };
    Ok(VanishingSumCheck {
        vanishes: true,
        verdict,
    })
}

/// Summary of [`vanishing_sum_scan`].
#[derive(Clone, Debug, Serialize)]
pub struct VanishingScan {
    pub max_order: u64,
    pub pairs_checked: usize,
    /// Pairs for which some solution has all four coefficients nonzero.
    pub solvable_pairs: Vec<(RootOfUnity, RootOfUnity)>,
    pub counterexamples: Vec<(RootOfUnity, RootOfUnity)>,
}

/// Integer row echelon form over the columns `(1, i, α, β)`.
struct Echelon {
    rows: Vec<[i128; 4]>,
}

impl Echelon {
    fn insert(&mut self, mut v: [i128; 4]) {
        for row in &self.rows {
            let p = row.iter().position(|&x| x != 0).expect("rows are nonzero");
            if v[p] != 0 {
                let g = row[p].gcd(&v[p]);
                let (m_row, m_v) = (v[p] / g, row[p] / g);
                for k in 0..4 {
                    v[k] = v[k] * m_v - row[k] * m_row;
                }
            }
        }
        let g = v.iter().fold(0i128, |acc, x| acc.gcd(x));
        if g == 0 {
            return;
        }
        for x in &mut v {
            *x /= g;
        }
        let p = v.iter().position(|&x| x != 0).expect("nonzero");
        let at = self
            .rows
            .iter()
            .position(|r| r.iter().position(|&x| x != 0).unwrap() > p)
            .unwrap_or(self.rows.len());
        // keep earlier rows reduced against the new pivot
        for row in &mut self.rows[..at] {
            if row[p] != 0 {
                let g = row[p].gcd(&v[p]);
                let (m_v, m_row) = (row[p] / g, v[p] / g);
                for k in 0..4 {
                    row[k] = row[k] * m_row - v[k] * m_v;
                }
            }
        }
        self.rows.insert(at, v);
    }

    /// Rational basis of the null space.
    fn kernel(&self) -> Vec<[Rational; 4]> {
        // full reduction over Q
        let mut rows: Vec<[Rational; 4]> = self
            .rows
            .iter()
            .map(|r| r.map(|x| Rational::from_integer(x.into())))
            .collect();
        let pivots: Vec<usize> = rows
            .iter()
            .map(|r| r.iter().position(|x| !x.is_zero()).unwrap())
            .collect();
        for i in 0..rows.len() {
            let lead = rows[i][pivots[i]].clone();
            for x in rows[i].iter_mut() {
                *x = &*x / &lead;
            }
            for j in 0..rows.len() {
                if j != i && !rows[j][pivots[i]].is_zero() {
                    let f = rows[j][pivots[i]].clone();
                    for k in 0..4 {
                        let d = &rows[i][k] * &f;
                        rows[j][k] = &rows[j][k] - d;
                    }
                }
            }
        }
        (0..4)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v: [Rational; 4] = Default::default();
                v[free] = Rational::from_integer(1.into());
                for (row, &p) in rows.iter().zip(&pivots) {
                    v[p] = -row[free].clone();
                }
                v
            })
            .collect()
    }
}

fn coefficients(x: &Cyclotomic, n: u64) -> Result<Vec<i128>> {
    let x = x.embed(n)?;
    let phi = crate::arith::euler_phi(n) as usize;
    (0..phi)
        .map(|e| {
            let c = x.coeff(e);
            if !c.is_integer() {
                return Err(Error::InvalidParameters("root of unity with fractional coefficient".into()));
            }
            i128::try_from(c.to_integer()).map_err(|_| Error::TooLarge("coefficient".into()))
        })
        .collect()
}

/// Every pair of roots of unity `α`, `β` with `ord(α) ≤ ord(β) ≤ max_order`
/// for which `a + b i + c_α α + c_β β = 0` has a solution in nonzero
/// integers, checked against the conclusions of [`vanishing_sum_check`].
///
/// `σ_k` maps solutions for `(α, β)` to solutions for `(α^k, β^k)` and
/// preserves the conclusions, so `α` runs over `ζ_a` only.
pub fn vanishing_sum_scan(max_order: u64) -> Result<VanishingScan> {
    let mut scan = VanishingScan {
        max_order,
        pairs_checked: 0,
        solvable_pairs: Vec::new(),
        counterexamples: Vec::new(),
    };
    let i = Cyclotomic::zeta(4);
    for a in 1..=max_order {
        let alpha = RootOfUnity::new(1, a);
        for b in a..=max_order {
            let n = lcm(4, lcm(a, b));
            let base = [coefficients(&Cyclotomic::one(), n)?, coefficients(&i, n)?, coefficients(&alpha.to_cyclotomic(), n)?];
            for v in units(b) {
                let beta = RootOfUnity::new(v as i64, b);
                scan.pairs_checked += 1;
                let cb = coefficients(&beta.to_cyclotomic(), n)?;
                let mut ech = Echelon { rows: Vec::new() };
                for e in 0..cb.len() {
                    ech.insert([base[0][e], base[1][e], base[2][e], cb[e]]);
                    if ech.rows.len() == 4 {
                        break;
                    }
                }
                let kernel = ech.kernel();
                if kernel.is_empty() || (0..4).any(|c| kernel.iter().all(|v| v[c].is_zero())) {
                    continue;
                }
                scan.solvable_pairs.push((alpha, beta));
                let al = alpha.to_cyclotomic();
                let ib = &i * &beta.to_cyclotomic();
                let holds = alpha.order() <= 2
                    && beta.order() == 4
                    && kernel.iter().all(|v| {
                        let first = Cyclotomic::from_rational(v[0].clone()) + al.scale(&v[2]);
                        let second = Cyclotomic::from_rational(v[1].clone()) - ib.scale(&v[3]);
                        first.is_zero() && second.is_zero()
                    });
                if !holds {
                    scan.counterexamples.push((alpha, beta));
                }
            }
        }
    }
    Ok(scan)
}

/// Parameters for [`integral_dimension_search`].
#[derive(Clone, Debug, Serialize)]
pub struct DimensionSearch {
    /// Sizes of the label orbits on which dimensions are constant; the first
    /// orbit is the unit object and must have size 1.
    pub orbit_multiplicities: Vec<u64>,
    /// Allowed prime factors of every `d_i` and of `D²`.
    pub primes: Vec<u64>,
    /// Largest dimension tried.
    pub bound: u64,
    /// Require `D² = Σ d_i²` to be a perfect square.
    pub integral_global_dimension: bool,
    /// Moduli `M` at which `D²` must be the square of a unit when
    /// `integral_global_dimension` holds.
    pub moduli: Vec<u64>,
}

impl DimensionSearch {
    pub fn rank(&self) -> u64 {
        self.orbit_multiplicities.iter().sum()
    }
}

fn smooth_numbers(primes: &[u64], bound: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for &p in primes {
        let mut next = Vec::new();
        for &x in &out {
            let mut y = x;
            while y <= bound {
                next.push(y);
                match y.checked_mul(p) {
                    Some(z) => y = z,
                    None => break,
                }
            }
        }
        out = next;
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn is_smooth(mut n: u128, primes: &[u64]) -> bool {
    if n == 0 {
        return false;
    }
    for &p in primes {
        let p = u128::from(p);
        while n % p == 0 {
            n /= p;
        }
    }
    n == 1
}

/// Residues mod `m` of numbers whose prime factors lie in `primes` and are
/// prime to `m`.
fn smooth_residues(primes: &[u64], m: u64) -> BTreeSet<u64> {
    let gens: Vec<u64> = primes.iter().copied().filter(|&p| m % p != 0).collect();
    let mut set = BTreeSet::from([1 % m]);
    let mut frontier = vec![1 % m];
    while let Some(x) = frontier.pop() {
        for &g in &gens {
            let y = x * (g % m) % m;
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Whether some modulus rules out every dimension vector, independently of
/// the bound: with all `d_i` and `D` prime to `M`, `Σ m_i d_i² mod M` never
/// equals a square `D² mod M`.
pub fn residue_obstruction(search: &DimensionSearch) -> Option<u64> {
    if !search.integral_global_dimension {
        return None;
    }
    search.moduli.iter().copied().find(|&m| {
        if m < 2 || search.primes.iter().any(|&p| m % p == 0) {
            return false;
        }
        let res: Vec<u64> = smooth_residues(&search.primes, m).into_iter().collect();
        let squares: BTreeSet<u64> = res.iter().map(|r| r * r % m).collect();
        let mults = &search.orbit_multiplicities[1..];
        let mut sums = BTreeSet::from([1 % m]);
        for &mult in mults {
            let mut next = BTreeSet::new();
            for s in &sums {
                for r in &res {
                    next.insert((s + mult % m * (r * r % m)) % m);
                }
            }
            sums = next;
        }
        sums.is_disjoint(&squares)
    })
}

/// Dimension vectors `(1, d_1, …)` constant on the orbits, with each `d_i`
/// at most `bound` and all prime factors of the `d_i` and of `D²` in
/// `primes`; `D²` a perfect square whose root is a unit modulo each listed
/// modulus when `integral_global_dimension` is set. Vectors list one entry
/// per label, nondecreasing within each orbit block.
pub fn integral_dimension_search(search: &DimensionSearch) -> Result<Vec<Vec<u64>>> {
    let mults = &search.orbit_multiplicities;
    if mults.first() != Some(&1) {
        return Err(Error::InvalidParameters("the first orbit must be the unit object alone".into()));
    }
    if search.rank() > 8 {
        return Err(Error::TooLarge(format!("rank {}", search.rank())));
    }
    let values = smooth_numbers(&search.primes, search.bound);
    let free = mults.len() - 1;
    let mut out = Vec::new();
    let mut idx = vec![0usize; free];
    loop {
        let dims: Vec<u64> = idx.iter().map(|&i| values[i]).collect();
        let d2: u128 = 1 + dims
            .iter()
            .zip(&mults[1..])
            .map(|(&d, &m)| u128::from(m) * u128::from(d) * u128::from(d))
            .sum::<u128>();
        let mut ok = is_smooth(d2, &search.primes);
        if ok && search.integral_global_dimension {
            ok = match u64::try_from(d2).ok().and_then(perfect_square_root) {
                Some(root) => search.moduli.iter().all(|&m| m < 2 || root.gcd(&m) == 1),
                None => false,
            };
        }
        if ok {
            let mut v = vec![1];
            for (&d, &m) in dims.iter().zip(&mults[1..]) {
                v.extend(std::iter::repeat(d).take(m as usize));
            }
            out.push(v);
        }
        // next index tuple
        let mut k = 0;
        loop {
            if k == free {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < values.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FusionClass {
    #[serde(rename = "SU(2)_4")]
    Su2Level4,
    #[serde(rename = "SU(2)_9/Z_2")]
    Su2Level9ModZ2,
    #[serde(rename = "SU(5)_1")]
    Su5Level1,
    #[serde(rename = "SU(3)_4/Z_3")]
    Su3Level4ModZ3,
}

impl FusionClass {
    pub const ALL: [FusionClass; 4] = [
        FusionClass::Su2Level4,
        FusionClass::Su2Level9ModZ2,
        FusionClass::Su5Level1,
        FusionClass::Su3Level4ModZ3,
    ];

    /// Position in the classification list, `(i)` to `(iv)`.
    pub fn label(self) -> &'static str {
        match self {
            FusionClass::Su2Level4 => "(i)",
            FusionClass::Su2Level9ModZ2 => "(ii)",
            FusionClass::Su5Level1 => "(iii)",
            FusionClass::Su3Level4ModZ3 => "(iv)",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FusionClass::Su2Level4 => "SU(2)_4",
            FusionClass::Su2Level9ModZ2 => "SU(2)_9/Z_2",
            FusionClass::Su5Level1 => "SU(5)_1",
            FusionClass::Su3Level4ModZ3 => "SU(3)_4/Z_3",
        }
    }

    /// A representative datum, if one is constructed.
    pub fn representative(self) -> Result<Option<ModularDatum>> {
        Ok(match self {
            FusionClass::Su2Level4 => Some(su2_4_family(su2_4_parameters()[0])?),
            FusionClass::Su2Level9ModZ2 => Some(su2_odd_mod2(5, 1)?),
            FusionClass::Su5Level1 => Some(pointed_zn(5, 1)?),
            FusionClass::Su3Level4ModZ3 => None,
        })
    }
}

impl fmt::Display for FusionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.label(), self.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DatumReport {
    pub name: String,
    pub fusion_class: Option<FusionClass>,
    /// Index into [`rank5_galois_cases`], or `None` when 0 is fixed.
    pub galois_case: Option<usize>,
    pub predicates: Vec<NamedVerdict>,
}

impl DatumReport {
    pub fn passed(&self) -> bool {
        self.predicates.iter().all(|p| p.verdict.passed())
    }

    pub fn failures(&self) -> Vec<&NamedVerdict> {
        self.predicates.iter().filter(|p| !p.verdict.passed()).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Rank5Report {
    pub data: Vec<DatumReport>,
    pub not_instantiated: Vec<FusionClass>,
}

impl Rank5Report {
    pub fn passed(&self) -> bool {
        self.data.iter().all(DatumReport::passed)
    }
}

/// The rank-5 members of the catalog.
pub fn default_rank5_entries() -> Result<Vec<CatalogEntry>> {
    Ok(shipped_data()?
        .into_iter()
        .filter(|e| e.datum.rank() == 5)
        .collect())
}

fn check_datum(
    name: &str,
    datum: &ModularDatum,
    references: &[(FusionClass, FusionRules)],
) -> DatumReport {
    let mut predicates = Vec::new();
    let mut push = |name: &str, v: Verdict| predicates.push(NamedVerdict::new(name, v));
    let lift_fail = |e: Error| Verdict::fail(e.to_string());

    let report = check_admissible(datum);
    for r in &report.results {
        push(&format!("admissible {}", r.condition), r.verdict.clone());
    }
    let mut fusion_class = None;
    match verlinde_fusion(datum) {
        Ok(f) => {
            for (class, reference) in references {
                if matches!(grothendieck_equiv(&f, reference), Ok(Some(_))) {
                    fusion_class = Some(*class);
                    break;
                }
            }
            push(
                "fusion class identified",
                Verdict::from_bool(fusion_class.is_some(), || "no instantiated class matches".into()),
            );
        }
        Err(e) => push("fusion class identified", Verdict::fail(e.to_string())),
    }
    let mut galois_case = None;
    match compute_profile(datum) {
        Ok(profile) => {
            let image = profile.image();
            let fixes_zero = image.iter().all(|p| p.apply(0) == 0);
            if !fixes_zero {
                galois_case = match_galois_case(&image).map(|(k, _)| k);
            }
            push(
                "Galois group in case list",
                Verdict::from_bool(fixes_zero || galois_case.is_some(), || {
                    let perms: Vec<String> = image.iter().map(ToString::to_string).collect();
                    format!("image {{{}}} matches no case", perms.join(", "))
                }),
            );
            match exclusion_predicates(datum, &profile) {
                Ok(list) => {
                    for p in list {
                        push(&p.name, p.verdict);
                    }
                }
                Err(e) => push("exclusion predicates", Verdict::fail(e.to_string())),
            }
        }
        Err(e) => push("Galois group in case list", Verdict::fail(e.to_string())),
    }
    match all_lifts(datum) {
        Ok(lifts) => {
            let n = datum.torder();
            let twist = lifts.iter().try_fold(Verdict::Pass, |acc, rep| {
                Ok::<_, Error>(acc.and(|| check_twist_galois_symmetry(rep).unwrap_or_else(lift_fail)))
            });
            push("Galois twist symmetry on all lifts", twist.unwrap_or_else(lift_fail));
            let conn = lifts
                .iter()
                .fold(Verdict::Pass, |acc, rep| acc.and(|| spectra_connectivity(rep)));
            push("spectra connectivity on all lifts", conn);
            let bad = lifts.iter().find(|rep| rep.level() % n != 0 || (12 * n) % rep.level() != 0);
            push(
                "N | n | 12N",
                Verdict::from_bool(bad.is_none(), || format!("level {} with N = {n}", bad.unwrap().level())),
            );
        }
        Err(e) => {
            for name in [
                "Galois twist symmetry on all lifts",
                "spectra connectivity on all lifts",
                "N | n | 12N",
            ] {
                push(name, Verdict::fail(e.to_string()));
            }
        }
    }
    push(
        "Cauchy prime support",
        cauchy_prime_support(datum).map_or_else(|e| Verdict::fail(e.to_string()), |c| c.verdict),
    );
    DatumReport {
        name: name.to_string(),
        fusion_class,
        galois_case,
        predicates,
    }
}

/// Runs every rank-5 predicate on each entry.
pub fn rank5_suite(entries: &[CatalogEntry]) -> Result<Rank5Report> {
    let mut references = Vec::new();
    let mut not_instantiated = Vec::new();
    for class in FusionClass::ALL {
        match class.representative()? {
            Some(d) => references.push((class, verlinde_fusion(&d)?)),
            None => not_instantiated.push(class),
        }
    }
    let data = std::thread::scope(|scope| {
        let handles: Vec<_> = entries
            .iter()
            .map(|e| {
                let references = &references;
                scope.spawn(move || check_datum(&e.name, &e.datum, references))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite worker panicked"))
            .collect()
    });
    Ok(Rank5Report {
        data,
        not_instantiated,
    })
}

/// Prime factors of `n`, for display.
pub fn prime_factors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}
