//! Normalized modular pairs: genuine representations of `SL(2, Z)` lifting
//! the projective representation `s ↦ S`, `t ↦ T` of a modular datum.

mod spectra;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::arith::{is_prime, lcm, mod_inv};
use crate::cyclotomic::{Cyclotomic, Rational, RootOfUnity};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modular_data::ModularDatum;
use crate::perm::Perm;
use crate::verdict::Verdict;

pub use spectra::{spectra_lookup, spectra_table, SpectrumRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Neither,
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
            Parity::Neither => "neither",
        })
    }
}

/// A pair `(s, t)` with `t` diagonal of finite order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularRep {
    s: Matrix,
    t: Vec<RootOfUnity>,
    level: u64,
    parity: Parity,
}

impl ModularRep {
    /// Wraps `(s, t)` without checking the defining relations.
    pub fn from_parts(s: Matrix, t: Vec<RootOfUnity>) -> Result<Self> {
        if s.size() != t.len() {
            return Err(Error::InvalidParameters(format!(
                "s is {0}x{0} but t has {1} entries",
                s.size(),
                t.len()
            )));
        }
        let level = t.iter().fold(1, |acc, x| lcm(acc, x.order()));
        let s2 = s.try_mul(&s)?;
        let parity = if s2.is_identity() {
            Parity::Even
        } else if s2.neg().is_identity() {
            Parity::Odd
        } else {
            Parity::Neither
        };
        Ok(ModularRep { s, t, level, parity })
    }

    /// Like [`from_parts`](Self::from_parts), but rejects pairs violating
    /// `s⁴ = 1` or `(st)³ = s²`.
    pub fn new(s: Matrix, t: Vec<RootOfUnity>) -> Result<Self> {
        let rep = Self::from_parts(s, t)?;
        if let Verdict::Fail { witness } = rep.verify_relations()? {
            return Err(Error::NotModular(witness));
        }
        Ok(rep)
    }

    pub fn rank(&self) -> usize {
        self.t.len()
    }

    pub fn s(&self) -> &Matrix {
        &self.s
    }

    pub fn t(&self) -> &[RootOfUnity] {
        &self.t
    }

    /// `ord(t)`.
    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Distinct `t`-eigenvalues.
    pub fn is_nondegenerate(&self) -> bool {
        self.t.iter().collect::<BTreeSet<_>>().len() == self.t.len()
    }

    pub fn verify_relations(&self) -> Result<Verdict> {
        let s2 = self.s.try_mul(&self.s)?;
        if !s2.try_mul(&s2)?.is_identity() {
            return Ok(Verdict::fail("s^4 != 1"));
        }
        let t: Vec<Cyclotomic> = self.t.iter().map(RootOfUnity::to_cyclotomic).collect();
        let st = self.s.try_mul_diag(&t)?;
        let st3 = st.try_mul(&st)?.try_mul(&st)?;
        Ok(Verdict::from_bool(st3 == s2, || "(st)^3 != s^2".into()))
    }

    /// Multiset of `t`-eigenvalues, sorted.
    pub fn spectrum(&self) -> Vec<RootOfUnity> {
        let mut v = self.t.clone();
        v.sort();
        v
    }
}

fn anomaly(datum: &ModularDatum) -> Result<RootOfUnity> {
    let p_plus = datum.gauss_sum(1);
    let p_minus = datum.gauss_sum(-1);
    if p_minus.is_zero() {
        return Err(Error::NotModular("p- = 0".into()));
    }
    let a = p_plus.try_mul(&p_minus.try_inv()?)?;
    a.as_root_of_unity()
        .ok_or_else(|| Error::NotModular(format!("anomaly {a} is not a root of unity")))
}

/// The sixth root `ζ` of the anomaly with index `j` (`0 ≤ j < 6`).
fn sixth_root(alpha: RootOfUnity, j: u8) -> RootOfUnity {
    let (a, b) = (alpha.num(), alpha.den());
    RootOfUnity::new((a + u64::from(j) * b) as i64, 6 * b)
}

/// The lift `s = ζ³/(x³p⁺)·S`, `t = (x/ζ)·T` with `x = e(x_index/12)` and `ζ`
/// the sixth root of the anomaly with index `zeta_index`.
pub fn normalize(datum: &ModularDatum, x_index: u8, zeta_index: u8) -> Result<ModularRep> {
    if x_index >= 12 || zeta_index >= 6 {
        return Err(Error::OutOfRange(format!(
            "lift indices ({x_index}, {zeta_index}) must lie in 0..12 x 0..6"
        )));
    }
    let zeta = sixth_root(anomaly(datum)?, zeta_index);
    let x = RootOfUnity::new(i64::from(x_index), 12);
    let p_plus = datum.gauss_sum(1);
    let scalar = (zeta.pow(3) * x.pow(-3))
        .to_cyclotomic()
        .try_mul(&p_plus.try_inv()?)?;
    let s = datum.s().try_scale(&scalar)?;
    let shift = x * zeta.inv();
    let t = datum.twists().into_iter().map(|theta| theta * shift).collect();
    ModularRep::new(s, t)
}

/// `x³ = D/(p⁺ζ⁻³)` for the canonical choice, as `±1`.
fn canonical_sign(datum: &ModularDatum) -> Result<i8> {
    let zeta = sixth_root(anomaly(datum)?, 0);
    let c = datum.gauss_sum(1).try_mul(&zeta.pow(-3).to_cyclotomic())?;
    if !c.is_real() {
        return Err(Error::NotModular(format!("p+ zeta^-3 = {c} is not real")));
    }
    Ok(if c.to_complex().re > 0.0 { 1 } else { -1 })
}

/// The positive global dimension `D`, as an exact cyclotomic number.
pub fn global_dimension(datum: &ModularDatum) -> Result<Cyclotomic> {
    let zeta = sixth_root(anomaly(datum)?, 0);
    let c = datum.gauss_sum(1).try_mul(&zeta.pow(-3).to_cyclotomic())?;
    Ok(if canonical_sign(datum)? > 0 { c } else { -c })
}

/// The lift with `s = S/D`, using the smallest admissible `x`.
pub fn canonical_lift(datum: &ModularDatum) -> Result<ModularRep> {
    let x = if canonical_sign(datum)? > 0 { 0 } else { 2 };
    normalize(datum, x, 0)
}

/// All twelve lifts `ρ_x`, `x = e(k/12)`. Other choices of `ζ` repeat them.
pub fn all_lifts(datum: &ModularDatum) -> Result<Vec<ModularRep>> {
    (0..12).map(|x| normalize(datum, x, 0)).collect()
}

/// For self-dual data: the even lift `(S/D, T/ζ')` with `ζ'³ = D/p⁻`.
pub fn even_lift(datum: &ModularDatum) -> Result<ModularRep> {
    let d = global_dimension(datum)?;
    let ratio = d.try_mul(&datum.gauss_sum(-1).try_inv()?)?;
    let ratio = ratio
        .as_root_of_unity()
        .ok_or_else(|| Error::NotModular(format!("D/p- = {ratio} is not a root of unity")))?;
    let cube_root = RootOfUnity::new(ratio.num() as i64, 3 * ratio.den());
    let s = datum.s().try_scale(&d.try_inv()?)?;
    let t = datum.twists().into_iter().map(|x| x * cube_root.inv()).collect();
    let rep = ModularRep::new(s, t)?;
    if rep.parity() != Parity::Even {
        return Err(Error::NotApplicable("datum is not self-dual".into()));
    }
    Ok(rep)
}

struct Components(Vec<usize>);

impl Components {
    fn new(n: usize) -> Self {
        Components((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            y = std::mem::replace(&mut self.0[y], root);
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a.max(b)] = a.min(b);
    }

    fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut by_root: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for x in 0..n {
            let r = self.find(x);
            by_root.entry(r).or_default().push(x);
        }
        by_root.into_values().collect()
    }
}

/// Labels grouped so that `s` and `t` never mix groups: `i ~ j` when
/// `s_{ij} ≠ 0` or `t_i = t_j`.
pub fn label_components(rep: &ModularRep) -> Vec<Vec<usize>> {
    let r = rep.rank();
    let mut uf = Components::new(r);
    for i in 0..r {
        for j in 0..i {
            if rep.t[i] == rep.t[j] || !rep.s[(i, j)].is_zero() {
                uf.union(i, j);
            }
        }
    }
    uf.classes()
}

/// The graph on distinct `t`-eigenvalues, with `λ ~ μ` whenever some
/// `s_{ij} ≠ 0` has `t_i = λ`, `t_j = μ`, must be connected.
pub fn spectra_connectivity(rep: &ModularRep) -> Verdict {
    let comps = label_components(rep);
    if comps.len() <= 1 {
        return Verdict::Pass;
    }
    let blocks: Vec<String> = comps
        .iter()
        .map(|c| {
            let vals: BTreeSet<RootOfUnity> = c.iter().map(|&i| rep.t[i]).collect();
            let vals: Vec<String> = vals.iter().map(ToString::to_string).collect();
            format!("{{{}}}", vals.join(", "))
        })
        .collect();
    Verdict::fail(format!("t-spectrum splits into {}", blocks.join(" | ")))
}

/// Result of scanning the label subsets of size `r - 2` that are unions of
/// connectivity classes.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionScan {
    pub closed_subsets: Vec<Vec<usize>>,
    pub violations: Vec<Vec<usize>>,
    pub verdict: Verdict,
}

/// Every degree `r - 2` subrepresentation must have a 120th root of unity in
/// its `t`-spectrum. Candidate subrepresentations are the unions of
/// [`label_components`] with `r - 2` labels.
pub fn obstruction_120(rep: &ModularRep) -> Result<ObstructionScan> {
    let r = rep.rank();
    if r < 3 {
        return Err(Error::OutOfRange(format!("rank {r} is below 3")));
    }
    let comps = label_components(rep);
    let target = r - 2;
    let mut closed = Vec::new();
    let mut violations = Vec::new();
    let c = comps.len();
    if c > 24 {
        return Err(Error::TooLarge(format!("{c} components")));
    }
    for mask in 0u32..(1 << c) {
        let size: usize = (0..c).filter(|&b| mask >> b & 1 == 1).map(|b| comps[b].len()).sum();
        if size != target {
            continue;
        }
        let mut subset: Vec<usize> = (0..c)
            .filter(|&b| mask >> b & 1 == 1)
            .flat_map(|b| comps[b].iter().copied())
            .collect();
        subset.sort_unstable();
        if !subset.iter().any(|&i| 120 % rep.t[i].order() == 0) {
            violations.push(subset.clone());
        }
        closed.push(subset);
    }
    let verdict = Verdict::from_bool(violations.is_empty(), || {
        format!("no 120th root of unity on labels {:?}", violations[0])
    });
    Ok(ObstructionScan {
        closed_subsets: closed,
        violations,
        verdict,
    })
}

/// The degree-`p` representation `ψ` of level `p` together with the
/// certificate that it is not realized by modular data.
#[derive(Clone, Debug)]
pub struct PsiCertificate {
    pub p: u64,
    pub rep: ModularRep,
    pub relations: Verdict,
    /// Conductor of `√(p+1)`.
    pub sqrt_conductor: u64,
    /// Conductor of all entries of `ψ(s)`.
    pub s_conductor: u64,
    /// `ψ(s)` has entries outside `Q(ζ_p)`.
    pub verdict: Verdict,
}

/// `ψ(t) = diag(ζ_p^k)`, `ψ(s)_{00} = -1/p`, `ψ(s)_{0k} = √(p+1)/p` and
/// `ψ(s)_{jk} = (1/p) Σ_{a=1}^{p-1} ζ_p^{aj + a⁻¹k}`.
pub fn inadmissible_psi(p: u64) -> Result<PsiCertificate> {
    if p <= 3 {
        return Err(Error::OutOfRange(format!("p = {p} must exceed 3")));
    }
    if !is_prime(p) {
        return Err(Error::InvalidParameters(format!("p = {p} is not prime")));
    }
    let pr = p as usize;
    let inv_p = Rational::new(1.into(), (p as i64).into());
    let root = Cyclotomic::sqrt_rational(&Rational::from_integer(((p + 1) as i64).into()))?;
    let edge = root.scale(&inv_p);
    let mut s = Matrix::zeros(pr);
    s[(0, 0)] = Cyclotomic::from_rational(-inv_p.clone());
    for k in 1..pr {
        s[(0, k)] = edge.clone();
        s[(k, 0)] = edge.clone();
    }
    let inverses: Vec<u64> = (1..p).map(|a| mod_inv(a, p).expect("p is prime")).collect();
    for j in 1..p {
        for k in j..p {
            let mut acc = Cyclotomic::zero();
            for a in 1..p {
                let e = (a * j + inverses[(a - 1) as usize] * k) % p;
                acc = acc.try_add(&Cyclotomic::root_of_unity(p, e as i64))?;
            }
            let v = acc.scale(&inv_p);
            s[(j as usize, k as usize)] = v.clone();
            s[(k as usize, j as usize)] = v;
        }
    }
    let t = (0..p).map(|k| RootOfUnity::new(k as i64, p)).collect();
    let rep = ModularRep::from_parts(s, t)?;
    let relations = rep.verify_relations()?;
    let sqrt_conductor = root.conductor();
    let s_conductor = rep.s().conductor();
    let verdict = relations.clone().and(|| {
        Verdict::from_bool(p % sqrt_conductor != 0, || {
            format!("sqrt({}) lies in Q(zeta_{p})", p + 1)
        })
    });
    Ok(PsiCertificate {
        p,
        rep,
        relations,
        sqrt_conductor,
        s_conductor,
        verdict,
    })
}

/// A signed permutation `U = Q·D_σ`: `σ` on labels with signs `Q_i = ±1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedPerm {
    pub perm: Perm,
    pub signs: Vec<i8>,
}

/// For nondegenerate `rep1`, `rep2`: the permutation `σ` with
/// `t₂_{σ(i)} = t₁_i` and signs `Q` (with `Q_0 = 1`) such that
/// `s₂_{σ(i)σ(j)} = Q_i Q_j s₁_{ij}`, if any.
pub fn signed_perm_match(rep1: &ModularRep, rep2: &ModularRep) -> Result<Option<SignedPerm>> {
    for (name, rep) in [("first", rep1), ("second", rep2)] {
        if !rep.is_nondegenerate() {
            return Err(Error::NotApplicable(format!(
                "the {name} representation has a repeated t-eigenvalue"
            )));
        }
    }
    let r = rep1.rank();
    if r != rep2.rank() || rep1.spectrum() != rep2.spectrum() {
        return Ok(None);
    }
    if r > 24 {
        return Err(Error::TooLarge(format!("sign search over rank {r}")));
    }
    let sigma: Vec<usize> = rep1
        .t
        .iter()
        .map(|x| rep2.t.iter().position(|y| y == x).expect("spectra agree"))
        .collect();
    let (s1, s2) = (&rep1.s, &rep2.s);
    let neg: Matrix = s1.neg();
    'signs: for mask in 0u32..(1 << (r - 1)) {
        let q = |i: usize| -> i8 {
            if i > 0 && mask >> (i - 1) & 1 == 1 {
                -1
            } else {
                1
            }
        };
        for i in 0..r {
            for j in 0..r {
                let expected = if q(i) * q(j) > 0 { &s1[(i, j)] } else { &neg[(i, j)] };
                if s2[(sigma[i], sigma[j])] != *expected {
                    continue 'signs;
                }
            }
        }
        return Ok(Some(SignedPerm {
            perm: Perm::from_images(sigma),
            signs: (0..r).map(q).collect(),
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
