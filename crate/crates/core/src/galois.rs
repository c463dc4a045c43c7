//! Galois action on modular data.
//!
//! For `σ = σ_k` the character columns `φ_a(i) = S_{ia}/S_{0a}` are permuted,
//! `σ(φ_a) = φ_{ĥσ(a)}`, and on a normalized pair `s` the action is a signed
//! permutation: `σ(s_{ij}) = ε_σ(i) s_{ĥσ(i) j} = ε_σ(j) s_{i ĥσ(j)}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::arith::{lcm, units};
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modular_data::ModularDatum;
use crate::perm::Perm;
use crate::sl2z_reps::ModularRep;
use crate::verdict::{NamedVerdict, Verdict};

/// How `Gal(F_S/Q)`, realized as units mod the conductor of `F_S`, permutes labels.
#[derive(Clone, Debug, Serialize)]
pub struct GaloisProfile {
    pub field_conductor: u64,
    pub group: Vec<u64>,
    pub perms: BTreeMap<u64, Perm>,
    pub orbits: Vec<Vec<usize>>,
    /// Sign functions relative to a chosen normalized `s`, keyed by units
    /// modulo the level of that lift. Only `ε_σ(i) ε_{σ⁻¹}(j)` is independent
    /// of the choice.
    pub signs: Option<SignTable>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SignTable {
    pub level: u64,
    pub signs: BTreeMap<u64, Vec<i8>>,
}

/// `ĥσ` and `ε_σ` for one unit acting on a normalized pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignFunction {
    pub unit: u64,
    pub perm: Perm,
    pub signs: Vec<i8>,
}

fn characters(datum: &ModularDatum) -> Result<Vec<Vec<Cyclotomic>>> {
    let s = datum.s();
    let r = datum.rank();
    (0..r)
        .map(|a| {
            let inv = s[(0, a)].try_inv().map_err(|_| Error::DegenerateS(format!("S[0][{a}] = 0")))?;
            (0..r).map(|i| s[(i, a)].try_mul(&inv)).collect()
        })
        .collect()
}

/// Matches `σ_k(φ_a)` against the character columns for every unit `k` modulo
/// the conductor of `F_S`.
pub fn compute_profile(datum: &ModularDatum) -> Result<GaloisProfile> {
    let r = datum.rank();
    let m = datum.s().conductor();
    let chars = characters(datum)?;
    let mut index: HashMap<&[Cyclotomic], usize> = HashMap::new();
    for (a, col) in chars.iter().enumerate() {
        if index.insert(col.as_slice(), a).is_some() {
            return Err(Error::DegenerateS(format!("character column {a} is repeated")));
        }
    }
    let group = units(m);
    let mut perms = BTreeMap::new();
    for &k in &group {
        let mut images = Vec::with_capacity(r);
        for (a, col) in chars.iter().enumerate() {
            let image: Vec<Cyclotomic> = col.iter().map(|x| x.galois_mod(k, m)).collect::<Result<_>>()?;
            let b = *index
                .get(image.as_slice())
                .ok_or(Error::NotGaloisStable { unit: k, column: a })?;
            images.push(b);
        }
        let mut seen = vec![false; r];
        for (a, &b) in images.iter().enumerate() {
            if std::mem::replace(&mut seen[b], true) {
                return Err(Error::NotGaloisStable { unit: k, column: a });
            }
        }
        perms.insert(k, Perm::from_images(images));
    }
    let orbits = orbits_of(r, perms.values());
    Ok(GaloisProfile {
        field_conductor: m,
        group,
        perms,
        orbits,
        signs: None,
    })
}

/// Like [`compute_profile`], with sign functions taken from the canonical
/// lift `s = S/D`.
pub fn compute_profile_with_signs(datum: &ModularDatum) -> Result<GaloisProfile> {
    let mut profile = compute_profile(datum)?;
    let rep = crate::sl2z_reps::canonical_lift(datum)?;
    let mut signs = BTreeMap::new();
    for k in units(rep.level()) {
        signs.insert(k, sign_function(&rep, k)?.signs);
    }
    profile.signs = Some(SignTable {
        level: rep.level(),
        signs,
    });
    Ok(profile)
}

fn orbits_of<'a>(r: usize, perms: impl Iterator<Item = &'a Perm>) -> Vec<Vec<usize>> {
    let perms: Vec<&Perm> = perms.collect();
    let mut seen = vec![false; r];
    let mut out = Vec::new();
    for start in 0..r {
        if seen[start] {
            continue;
        }
        let mut orbit = BTreeSet::from([start]);
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            for p in &perms {
                let y = p.apply(x);
                if orbit.insert(y) {
                    frontier.push(y);
                }
            }
        }
        for &x in &orbit {
            seen[x] = true;
        }
        out.push(orbit.into_iter().collect());
    }
    out
}

impl GaloisProfile {
    pub fn rank(&self) -> usize {
        self.perms.values().next().map_or(0, Perm::len)
    }

    /// `ĥσ` for `σ = σ_k`, with `k` read modulo the field conductor.
    pub fn perm(&self, k: i64) -> Option<&Perm> {
        self.perms.get(&crate::arith::rem(k, self.field_conductor))
    }

    /// Distinct permutations in the image, sorted.
    pub fn image(&self) -> Vec<Perm> {
        self.perms.values().cloned().collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn image_order(&self) -> usize {
        self.image().len()
    }

    /// The orbit `⟨j⟩`.
    pub fn orbit(&self, j: usize) -> &[usize] {
        self.orbits.iter().find(|o| o.contains(&j)).expect("every label has an orbit")
    }

    /// `ĥ_{σ_a σ_b} = ĥ_{σ_a} ∘ ĥ_{σ_b}`.
    pub fn check_homomorphism(&self) -> Verdict {
        let m = self.field_conductor;
        for (&a, pa) in &self.perms {
            for (&b, pb) in &self.perms {
                let ab = (a * b) % m;
                let ab = if m == 1 { 0 } else { ab };
                if self.perms[&ab] != pa.compose(pb) {
                    return Verdict::fail(format!("h(sigma_{a} sigma_{b}) != h(sigma_{a}) h(sigma_{b})"));
                }
            }
        }
        Verdict::Pass
    }

    pub fn check_abelian(&self) -> Verdict {
        let image = self.image();
        for a in &image {
            for b in &image {
                if a.compose(b) != b.compose(a) {
                    return Verdict::fail(format!("{a} and {b} do not commute"));
                }
            }
        }
        Verdict::Pass
    }

    /// Complex conjugation acts as `j ↦ j*`.
    pub fn check_conjugation_is_dual(&self, datum: &ModularDatum) -> Verdict {
        let Some(dual) = datum.dual() else {
            return Verdict::fail("S has no charge conjugation");
        };
        let conj = self.perm(-1).expect("-1 is a unit");
        Verdict::from_bool(*conj == dual, || format!("conjugation acts as {conj}, duality is {dual}"))
    }
}

/// Degree over `Q` of `K_j = Q(φ_j(i) : i)`, computed as the index of the
/// subgroup of units fixing every generator.
pub fn orbit_field_degree(datum: &ModularDatum, j: usize) -> Result<usize> {
    let chars = characters(datum)?;
    let m = chars[j].iter().fold(1, |acc, x| lcm(acc, x.conductor()));
    let all = units(m);
    let mut fixing = 0;
    for &k in &all {
        let mut fixes = true;
        for x in &chars[j] {
            if x.galois_mod(k, m)? != *x {
                fixes = false;
                break;
            }
        }
        fixing += usize::from(fixes);
    }
    Ok(all.len() / fixing)
}

/// `ĥσ` and `ε_σ` from the rows of a normalized `s`, for `σ = σ_k` with `k`
/// a unit modulo the level. Both the row and the column form are verified.
pub fn sign_function(rep: &ModularRep, k: u64) -> Result<SignFunction> {
    let n = rep.level();
    let s = rep.s();
    let r = s.size();
    let err = || Error::NotGaloisSymmetric { unit: k };
    let image: Matrix = s.try_map(|x| x.galois_mod(k, n))?;
    let mut perm = Vec::with_capacity(r);
    let mut signs = Vec::with_capacity(r);
    for i in 0..r {
        let row = image.row(i);
        let neg: Vec<Cyclotomic> = row.iter().map(|x| -x).collect();
        let found = (0..r).find_map(|h| {
            if s.row(h) == row {
                Some((h, 1i8))
            } else if s.row(h) == neg.as_slice() {
                Some((h, -1i8))
            } else {
                None
            }
        });
        let (h, e) = found.ok_or_else(err)?;
        perm.push(h);
        signs.push(e);
    }
    let mut seen = vec![false; r];
    for &h in &perm {
        if std::mem::replace(&mut seen[h], true) {
            return Err(err());
        }
    }
    for i in 0..r {
        for j in 0..r {
            let expected = if signs[j] > 0 {
                s[(i, perm[j])].clone()
            } else {
                -&s[(i, perm[j])]
            };
            if image[(i, j)] != expected {
                return Err(err());
            }
        }
    }
    Ok(SignFunction {
        unit: k,
        perm: Perm::from_images(perm),
        signs,
    })
}

/// `σ²(t_i) = t_{ĥσ(i)}` for every unit modulo the level.
pub fn check_twist_galois_symmetry(rep: &ModularRep) -> Result<Verdict> {
    let n = rep.level();
    for k in units(n) {
        let sf = sign_function(rep, k)?;
        for (i, t) in rep.t().iter().enumerate() {
            let lhs = t.pow((k * k % n.max(1)) as i64);
            let rhs = rep.t()[sf.perm.apply(i)];
            if lhs != rhs {
                return Ok(Verdict::fail(format!("sigma_{k}^2(t_{i}) = {lhs} but t_h({i}) = {rhs}")));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Order of the image of `σ ↦ G_σ = σ(s)s⁻¹` as `σ` runs over units mod the
/// level, together with the check that `G_σ = ±I` whenever `ĥσ = id`.
pub fn signed_permutation_image(rep: &ModularRep) -> Result<(usize, Verdict)> {
    let mut image = BTreeSet::new();
    let mut verdict = Verdict::Pass;
    for k in units(rep.level()) {
        let sf = sign_function(rep, k)?;
        if sf.perm.is_identity() && verdict.passed() && sf.signs.iter().any(|&e| e != sf.signs[0]) {
            verdict = Verdict::fail(format!("sigma_{k} fixes every label but G is not +-I"));
        }
        image.insert((sf.perm, sf.signs));
    }
    Ok((image.len(), verdict))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DimensionClass {
    Integral,
    WeaklyIntegral,
    /// `d_j` are the Frobenius–Perron dimensions.
    PseudoUnitary,
    /// A Galois conjugate is pseudo-unitary.
    PseudoUnitaryCandidate,
    Generic,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionReport {
    pub class: DimensionClass,
    /// Column whose characters are the Frobenius–Perron dimensions.
    pub fp_column: usize,
    /// A unit with `ĥσ(0) = fp_column`; applying it makes the data pseudo-unitary.
    pub pseudo_unitarizing_unit: Option<u64>,
    /// For weakly integral data with positive dimensions: `d_{ĥσ(a)} = d_a`.
    pub orbit_invariance: Option<Verdict>,
}

/// Integrality class of the dimensions.
///
/// The Frobenius–Perron column maximizes `Σ_i |φ_a(i)|²`. Columns of
/// invertible objects tie, so among the maximizers the one with all
/// characters positive is taken, then the lowest index. Floating point is
/// used only to pick it and to read signs of nonzero real dimensions.
pub fn classify_dimensions(datum: &ModularDatum, profile: &GaloisProfile) -> Result<DimensionReport> {
    let r = datum.rank();
    let chars = characters(datum)?;
    let weights: Vec<f64> = chars
        .iter()
        .map(|col| col.iter().map(|x| x.to_complex().norm_sqr()).sum())
        .collect();
    let top = weights.iter().copied().fold(f64::MIN, f64::max);
    let maximal: Vec<usize> = (0..r).filter(|&a| weights[a] >= top * (1.0 - 1e-9)).collect();
    let positive_column = |a: usize| chars[a].iter().all(|x| x.is_real() && x.to_complex().re > 0.0);
    let fp_column = maximal
        .iter()
        .copied()
        .find(|&a| positive_column(a))
        .or_else(|| maximal.first().copied())
        .unwrap_or(0);
    let pseudo_unitarizing_unit = profile
        .perms
        .iter()
        .find(|(_, p)| p.apply(0) == fp_column)
        .map(|(&k, _)| k);
    let d2 = datum.global_dim_sq();
    let weakly = d2.as_integer().is_some();
    let class = if profile.orbit(0).len() == 1 {
        DimensionClass::Integral
    } else if weakly {
        DimensionClass::WeaklyIntegral
    } else if fp_column == 0 {
        DimensionClass::PseudoUnitary
    } else if pseudo_unitarizing_unit.is_some() {
        DimensionClass::PseudoUnitaryCandidate
    } else {
        DimensionClass::Generic
    };
    let dims = datum.dims();
    let positive = dims.iter().all(|d| d.is_real() && d.to_complex().re > 0.0);
    let orbit_invariance = (weakly && positive).then(|| {
        for p in profile.perms.values() {
            for a in 0..r {
                if dims[p.apply(a)] != dims[a] {
                    return Verdict::fail(format!("d_{} != d_{a} under {p}", p.apply(a)));
                }
            }
        }
        Verdict::Pass
    });
    Ok(DimensionReport {
        class,
        fp_column,
        pseudo_unitarizing_unit,
        orbit_invariance,
    })
}

fn zero_in_cycle_of_length(p: &Perm, len: usize) -> bool {
    p.cycles().iter().any(|c| c.len() == len && c.contains(&0))
}

/// For odd rank `r ≥ 5`, no Galois permutation may have the shape of a
/// transposition through 0 times an `(r-2)`-cycle, nor an `(r-2)`-cycle
/// through 0 times a transposition of two self-dual labels.
pub fn forbidden_cycle_types(rank: usize, perms: &[Perm], dual: Option<&Perm>) -> Vec<NamedVerdict> {
    let applies = rank >= 5 && rank % 2 == 1;
    let shape = |p: &Perm| p.cycle_type() == vec![2, rank - 2];
    let first = perms
        .iter()
        .find(|p| applies && shape(p) && zero_in_cycle_of_length(p, 2));
    let second = perms.iter().find(|p| {
        applies
            && shape(p)
            && zero_in_cycle_of_length(p, rank - 2)
            && p.cycles().iter().filter(|c| c.len() == 2).all(|c| {
                dual.map_or(true, |d| c.iter().all(|&x| d.apply(x) == x))
            })
    });
    vec![
        NamedVerdict::new(
            "no (0 1)(2 ... r-1) shape",
            Verdict::from_bool(first.is_none(), || format!("{} occurs", first.unwrap())),
        ),
        NamedVerdict::new(
            "no (0 ... r-3)(r-2 r-1) shape",
            Verdict::from_bool(second.is_none(), || format!("{} occurs", second.unwrap())),
        ),
    ]
}

/// Consequences of `Gal(C) = ⟨(0 1)⟩` for rank at least 5, after relabeling
/// the partner of 0 as 1. Returns nothing when the hypothesis does not hold.
pub fn transposition_predicates(datum: &ModularDatum, profile: &GaloisProfile) -> Result<Vec<NamedVerdict>> {
    let r = datum.rank();
    let image = profile.image();
    let nontrivial: Vec<&Perm> = image.iter().filter(|p| !p.is_identity()).collect();
    if r < 5 || nontrivial.len() != 1 || nontrivial[0].cycle_type() != {
        let mut t = vec![1; r - 2];
        t.push(2);
        t
    } || nontrivial[0].apply(0) == 0
    {
        return Ok(Vec::new());
    }
    let partner = nontrivial[0].apply(0);
    let mut swap: Vec<usize> = (0..r).collect();
    swap.swap(1, partner);
    let datum = datum.relabel(&Perm::from_images(swap))?;
    let s = datum.s();
    let d = datum.dims();
    let d1 = &d[1];
    let d1_inv = d1.try_inv()?;
    let is_int = |x: &Cyclotomic| x.as_integer().is_some();
    let mut out = Vec::new();
    out.push(NamedVerdict::new(
        "d1 > 0",
        Verdict::from_bool(d1.is_real() && d1.to_complex().re > 0.0, || format!("d1 = {d1}")),
    ));
    let trace = d1.try_add(&d1_inv)?;
    out.push(NamedVerdict::new(
        "d1 + 1/d1 in Z",
        Verdict::from_bool(is_int(&trace), || format!("d1 + 1/d1 = {trace}")),
    ));
    let q = datum.global_dim_sq().try_mul(&d1_inv)?;
    out.push(NamedVerdict::new(
        "D^2/d1 in Z",
        Verdict::from_bool(is_int(&q), || format!("D^2/d1 = {q}")),
    ));
    let bad = (2..r).find(|&i| !d[i].try_mul(&d[i]).and_then(|x| x.try_mul(&d1_inv)).is_ok_and(|x| is_int(&x)));
    out.push(NamedVerdict::new(
        "d_i^2/d1 in Z",
        Verdict::from_bool(bad.is_none(), || format!("i = {}", bad.unwrap())),
    ));
    let eps: Vec<Option<i8>> = (2..r)
        .map(|j| {
            let e = s[(1, j)].try_mul(&d[j].try_inv()?)?;
            Ok(match e.as_rational() {
                Some(q) if q == Rational::from_integer(1.into()) => Some(1),
                Some(q) if q == Rational::from_integer((-1).into()) => Some(-1),
                _ => None,
            })
        })
        .collect::<Result<_>>()?;
    let bad = eps.iter().position(Option::is_none);
    out.push(NamedVerdict::new(
        "S_1j/d_j = +-1",
        Verdict::from_bool(bad.is_none(), || format!("j = {}", bad.unwrap() + 2)),
    ));
    if bad.is_none() {
        let eps: Vec<i8> = eps.into_iter().map(Option::unwrap).collect();
        out.push(NamedVerdict::new(
            "signs not all equal",
            Verdict::from_bool(eps.iter().any(|&e| e != eps[0]), || format!("eps = {eps:?}")),
        ));
        let mut clash = None;
        for i in 2..r {
            for j in 2..r {
                if eps[i - 2] != eps[j - 2] && !s[(i, j)].is_zero() {
                    clash.get_or_insert((i, j));
                }
            }
        }
        out.push(NamedVerdict::new(
            "S_ij = 0 across sign classes",
            Verdict::from_bool(clash.is_none(), || format!("S_{:?} != 0", clash.unwrap())),
        ));
    }
    Ok(out)
}

/// The signs `ε_j = S_1j/d_j` (for `j ≥ 2`) used by [`transposition_predicates`].
pub fn transposition_signs(datum: &ModularDatum) -> Result<Vec<i8>> {
    let s = datum.s();
    let d = datum.dims();
    (2..datum.rank())
        .map(|j| {
            let e = s[(1, j)].try_mul(&d[j].try_inv()?)?;
            match e.as_integer().map(|n| n.to_string()) {
                Some(n) if n == "1" => Ok(1),
                Some(n) if n == "-1" => Ok(-1),
                _ => Err(Error::NotApplicable(format!("S_1{j}/d_{j} = {e} is not +-1"))),
            }
        })
        .collect()
}

/// All exclusion predicates that apply to the datum.
pub fn exclusion_predicates(datum: &ModularDatum, profile: &GaloisProfile) -> Result<Vec<NamedVerdict>> {
    let dual = datum.dual();
    let mut out = forbidden_cycle_types(datum.rank(), &profile.image(), dual.as_ref());
    out.extend(transposition_predicates(datum, profile)?);
    Ok(out)
}
