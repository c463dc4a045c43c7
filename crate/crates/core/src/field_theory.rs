//! Conductors and modularly admissible cyclotomic extensions.
//!
//! An extension `Q_n/K` is modularly admissible when `Gal(Q_n/K)` is an
//! elementary abelian 2-group. When `Gal(K/Q)` is an abelian `p`-group this
//! pins down `n` to a short explicit list.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{divisors, factorize, gcd, is_prime, lcm, mod_pow, prime_divisors, units, euler_phi, FERMAT_PRIMES};
use crate::cyclotomic::{order_cap, Cyclotomic};
use crate::error::{Error, Result};
use crate::modular_data::ModularDatum;
use crate::verdict::Verdict;

/// Smallest `m` with every generator in `Q(ζ_m)`; `1` for an empty list.
pub fn subfield_conductor(generators: &[Cyclotomic]) -> u64 {
    generators.iter().fold(1, |acc, x| lcm(acc, x.conductor()))
}

/// Whether `Q_n/K` is modularly admissible, with the divisibility facts that
/// such an extension must satisfy.
#[derive(Clone, Debug, Serialize)]
pub struct AdmissibleExtension {
    pub n: u64,
    /// Conductor `f` of `K`.
    pub conductor: u64,
    /// Units mod `n` fixing `K`, i.e. `Gal(Q_n/K)`.
    pub fixing_units: Vec<u64>,
    pub verdict: Verdict,
    /// `n/f` divides 24.
    pub index_divides_24: bool,
    /// `gcd(n/f, f)` divides 2.
    pub gcd_divides_2: bool,
    /// `Gal(Q_n/Q_f)` embeds in `(Z/2)³`.
    pub kernel_in_z2_cubed: bool,
}

pub fn is_modularly_admissible(n: u64, generators: &[Cyclotomic]) -> Result<AdmissibleExtension> {
    let f = subfield_conductor(generators);
    if n == 0 || n % f != 0 {
        return Err(Error::BadLevel(format!("K has conductor {f}, which does not divide {n}")));
    }
    let mut fixing_units = Vec::new();
    'units: for k in units(n) {
        for x in generators {
            if x.galois_mod(k, n)? != *x {
                continue 'units;
            }
        }
        fixing_units.push(k);
    }
    let bad = fixing_units.iter().find(|&&k| mod_pow(k, 2, n) != 1 % n);
    let verdict = Verdict::from_bool(bad.is_none(), || {
        format!("sigma_{} fixes K but has order > 2", bad.unwrap())
    });
    let index = n / f;
    let kernel: Vec<u64> = units(n).into_iter().filter(|k| k % f == 1 % f).collect();
    let kernel_in_z2_cubed = kernel.len() <= 8 && kernel.iter().all(|&k| mod_pow(k, 2, n) == 1 % n);
    Ok(AdmissibleExtension {
        n,
        conductor: f,
        fixing_units,
        verdict,
        index_divides_24: 24 % index == 0,
        gcd_divides_2: 2 % gcd(index, f) == 0,
        kernel_in_z2_cubed,
    })
}

/// An abelian Galois group `Gal(K/Q)` of prime-power order or a
/// multi-quadratic one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GroupShape {
    /// `Z/p^{r₁} × ⋯ × Z/p^{r_m}`.
    PrimePower { p: u64, exponents: Vec<u32> },
    /// `(Z/2)^m`.
    MultiQuadratic { m: usize },
}

impl GroupShape {
    pub fn prime_power(p: u64, mut exponents: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameters(format!("{p} is not prime")));
        }
        if exponents.is_empty() || exponents.contains(&0) {
            return Err(Error::InvalidParameters(
                "need at least one invariant factor, all exponents positive".into(),
            ));
        }
        exponents.sort_unstable();
        Ok(GroupShape::PrimePower { p, exponents })
    }

    pub fn multi_quadratic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameters("m must be positive".into()));
        }
        Ok(GroupShape::MultiQuadratic { m })
    }

    pub fn prime(&self) -> u64 {
        match self {
            GroupShape::PrimePower { p, .. } => *p,
            GroupShape::MultiQuadratic { .. } => 2,
        }
    }

    /// Exponents `r_i` of the invariant factors `p^{r_i}`.
    pub fn exponents(&self) -> Vec<u32> {
        match self {
            GroupShape::PrimePower { exponents, .. } => exponents.clone(),
            GroupShape::MultiQuadratic { m } => vec![1; *m],
        }
    }
}

impl FromStr for GroupShape {
    type Err = Error;

    /// `p=3,m=1,r=1` (one `r` for all factors, or `r=1:3`), or
    /// `multiquadratic,m=2`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidParameters(format!("shape '{text}': {why}"));
        let mut fields = BTreeMap::new();
        let mut multi = false;
        for part in text.split(',').map(str::trim) {
            if part.eq_ignore_ascii_case("multiquadratic") {
                multi = true;
                continue;
            }
            let (k, v) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            fields.insert(k.trim().to_ascii_lowercase(), v.trim().to_string());
        }
        let m: usize = fields
            .get("m")
            .ok_or_else(|| bad("missing m"))?
            .parse()
            .map_err(|_| bad("m must be a positive integer"))?;
        if multi {
            return GroupShape::multi_quadratic(m);
        }
        let p: u64 = fields
            .get("p")
            .ok_or_else(|| bad("missing p"))?
            .parse()
            .map_err(|_| bad("p must be a prime"))?;
        let r = fields.get("r").ok_or_else(|| bad("missing r"))?;
        let mut exps: Vec<u32> = r
            .split(':')
            .map(|x| x.trim().parse().map_err(|_| bad("r must be positive integers")))
            .collect::<Result<_>>()?;
        if exps.len() == 1 {
            exps = vec![exps[0]; m];
        }
        if exps.len() != m {
            return Err(bad("r must list one exponent or m of them"));
        }
        GroupShape::prime_power(p, exps)
    }
}

impl fmt::Display for GroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupShape::PrimePower { p, exponents } => {
                let parts: Vec<String> = exponents.iter().map(|r| format!("Z/{p}^{r}")).collect();
                f.write_str(&parts.join(" x "))
            }
            GroupShape::MultiQuadratic { m } => write!(f, "(Z/2)^{m}"),
        }
    }
}

/// Invariant factors of `(Z/n)^×`, as exponents per prime.
pub fn unit_group_invariants(n: u64) -> BTreeMap<u64, Vec<u32>> {
    let mut cyclic = Vec::new();
    for (q, e) in factorize(n) {
        if q == 2 {
            if e >= 2 {
                cyclic.push(2);
            }
            if e >= 3 {
                cyclic.push(1 << (e - 2));
            }
        } else {
            cyclic.push(q.pow(e - 1) * (q - 1));
        }
    }
    let mut out: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for c in cyclic {
        for (p, e) in factorize(c) {
            out.entry(p).or_default().push(e);
        }
    }
    for v in out.values_mut() {
        v.sort_unstable();
    }
    out
}

/// Whether `(Z/n)^×` has a subgroup `H` of exponent 2 with quotient of the
/// given shape.
///
/// For odd `p`, `H` must be the whole Sylow 2-subgroup. For `p = 2`, the
/// quotients by subgroups of exponent 2 are exactly the groups obtained by
/// lowering some of the exponents of the invariant factors by one.
pub fn admits_shape(n: u64, shape: &GroupShape) -> bool {
    let inv = unit_group_invariants(n);
    let p = shape.prime();
    let mut target = shape.exponents();
    target.sort_unstable();
    if inv.keys().any(|&q| q != 2 && q != p) {
        return false;
    }
    if p != 2 {
        let two_ok = inv.get(&2).map_or(true, |v| v.iter().all(|&e| e == 1));
        return two_ok && inv.get(&p).cloned().unwrap_or_default() == target;
    }
    let e = inv.get(&2).cloned().unwrap_or_default();
    if e.len() > 20 {
        return false;
    }
    (0u32..1 << e.len()).any(|mask| {
        let mut lowered: Vec<u32> = e
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (mask >> j & 1))
            .filter(|&x| x > 0)
            .collect();
        lowered.sort_unstable();
        lowered == target
    })
}

fn distinct_primes(qs: &[u64]) -> bool {
    let mut sorted = qs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == qs.len() && qs.iter().all(|&q| is_prime(q))
}

fn q_values(p: u64, exps: &[u32]) -> Result<Vec<u64>> {
    exps.iter()
        .map(|&r| {
            p.checked_pow(r)
                .and_then(|x| x.checked_mul(2))
                .and_then(|x| x.checked_add(1))
                .ok_or_else(|| Error::TooLarge(format!("2*{p}^{r}+1")))
        })
        .collect()
}

/// Candidate levels `n` for which `Q_n` can be a modularly admissible
/// extension of a field with the given Galois group, sorted.
///
/// Candidates follow the factorization pattern for the prime `p`; each is
/// then confirmed by [`admits_shape`]. For `p = 2` the Fermat primes and the
/// power of 2 are bounded by the order cap on `φ(n)`.
pub fn enumerate_levels(shape: &GroupShape) -> Result<Vec<u64>> {
    let p = shape.prime();
    let exps = shape.exponents();
    let mut candidates = Vec::new();
    if p > 3 {
        let qs = q_values(p, &exps)?;
        let odd_distinct = {
            let mut r = exps.clone();
            r.dedup();
            r.len() == exps.len() && exps.iter().all(|r| r % 2 == 1)
        };
        if distinct_primes(&qs) && odd_distinct && p % 3 == 2 {
            let base: u64 = qs.iter().product();
            candidates.extend(divisors(24).into_iter().map(|f| f * base));
        }
    } else if p == 3 {
        let qs = q_values(3, &exps)?;
        if distinct_primes(&qs) {
            let base: u64 = qs.iter().product();
            candidates.extend(divisors(24).into_iter().map(|f| f * base));
        }
        for i in 0..qs.len() {
            let rest: Vec<u64> = (0..qs.len()).filter(|&j| j != i).map(|j| qs[j]).collect();
            if !distinct_primes(&rest) {
                continue;
            }
            let base = 3u64
                .checked_pow(exps[i] + 1)
                .ok_or_else(|| Error::TooLarge(format!("3^{}", exps[i] + 1)))?
                * rest.iter().product::<u64>();
            candidates.extend(divisors(8).into_iter().map(|f| f * base));
        }
    } else {
        let cap = order_cap();
        let fermat: Vec<u64> = FERMAT_PRIMES.iter().copied().filter(|&f| f - 1 <= cap).collect();
        for mask in 0u32..1 << fermat.len() {
            let odd: u64 = (0..fermat.len())
                .filter(|&j| mask >> j & 1 == 1)
                .map(|j| fermat[j])
                .product();
            let mut n = odd;
            while euler_phi(n) <= cap {
                candidates.push(n);
                n *= 2;
            }
        }
    }
    let mut out: Vec<u64> = candidates
        .into_iter()
        .filter(|&n| admits_shape(n, shape))
        .filter(|&n| !matches!(shape, GroupShape::MultiQuadratic { .. }) || 240 % n == 0)
        .collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Constraints on the odd primes of `n` when `Q_n` is modularly admissible
/// over a field of degree a power of the odd prime `p`: every odd `q | n`
/// has `q ≡ 3 mod 4`, and every `q > 3` divides `n` once and has the form
/// `2p^r + 1` (with `r` odd and `p ≡ 2 mod 3` when `p > 3`).
pub fn odd_prime_constraints(n: u64, p: u64) -> Verdict {
    if p % 2 == 0 || !is_prime(p) {
        return Verdict::fail(format!("{p} is not an odd prime"));
    }
    for (q, e) in factorize(n) {
        if q == 2 {
            continue;
        }
        if q % 4 != 3 {
            return Verdict::fail(format!("{q} divides {n} but {q} = 1 mod 4"));
        }
        if q <= 3 {
            continue;
        }
        if e > 1 {
            return Verdict::fail(format!("{q}^{e} divides {n}"));
        }
        let mut m = (q - 1) / 2;
        let mut r = 0;
        while m % p == 0 {
            m /= p;
            r += 1;
        }
        if m != 1 || r == 0 {
            return Verdict::fail(format!("{q} is not of the form 2*{p}^r+1"));
        }
        if p > 3 && (r % 2 == 0 || p % 3 != 2) {
            return Verdict::fail(format!("{q} = 2*{p}^{r}+1 needs r odd and {p} = 2 mod 3"));
        }
    }
    Verdict::Pass
}

/// Prime supports of `Norm(D²)` and of `N`.
#[derive(Clone, Debug, Serialize)]
pub struct CauchySupport {
    /// The norm of `D²` from `Q(ζ_M)`, `M = lcm(N, conductor of D²)`.
    pub norm: String,
    pub norm_primes: Vec<u64>,
    /// Part of the norm left after trial division, if any.
    pub unfactored: Option<String>,
    pub level_primes: Vec<u64>,
    pub verdict: Verdict,
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Strips `p` from `x`, returning whether it divided.
fn strip(x: &mut BigInt, p: u64) -> bool {
    let p = BigInt::from(p);
    let mut hit = false;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return hit;
        }
        *x = q;
        hit = true;
    }
}

pub fn cauchy_prime_support(datum: &ModularDatum) -> Result<CauchySupport> {
    let d2 = datum.global_dim_sq();
    let n = datum.torder();
    let level_primes = prime_divisors(n);
    let m = lcm(n, d2.conductor());
    let norm = d2.norm_from(m)?;
    if norm.is_zero() {
        return Ok(CauchySupport {
            norm: "0".into(),
            norm_primes: Vec::new(),
            unfactored: None,
            level_primes,
            verdict: Verdict::fail("D^2 = 0"),
        });
    }
    let mut rest: BigInt = norm.numer().abs() * norm.denom();
    let mut norm_primes: Vec<u64> = level_primes
        .iter()
        .copied()
        .filter(|&p| strip(&mut rest, p))
        .collect();
    let mut extra = Vec::new();
    let mut d = 2u64;
    while !rest.is_one() && d <= TRIAL_LIMIT {
        if BigInt::from(d) * BigInt::from(d) > rest {
            break;
        }
        if strip(&mut rest, d) {
            extra.push(d);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let unfactored = if rest.is_one() {
        None
    } else if BigInt::from(d) * BigInt::from(d) > rest {
        // what remains is prime
        if let Ok(p) = u64::try_from(&rest) {
            extra.push(p);
        }
        (u64::try_from(&rest).is_err()).then(|| rest.to_string())
    } else {
        Some(rest.to_string())
    };
    norm_primes.extend(extra.iter().copied());
    norm_primes.sort_unstable();
    norm_primes.dedup();
    let verdict = if !extra.is_empty() || unfactored.is_some() {
        let mut others: Vec<String> = extra.iter().map(u64::to_string).collect();
        others.extend(unfactored.clone());
        Verdict::fail(format!(
            "Norm(D^2) has prime factors {} not dividing N = {n}",
            others.join(", ")
        ))
    } else {
        Verdict::from_bool(norm_primes == level_primes, || {
            format!("primes of Norm(D^2) are {norm_primes:?} but primes of N = {n} are {level_primes:?}")
        })
    };
    Ok(CauchySupport {
        norm: norm.to_string(),
        norm_primes,
        unfactored,
        level_primes,
        verdict,
    })
}
