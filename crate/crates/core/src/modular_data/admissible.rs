use std::fmt;

use serde::Serialize;

use super::fusion::check_orthogonality;
use super::{check_balancing, verlinde_fusion, FsTable, FusionRules, ModularDatum};
use crate::arith::{mod_pow, units};
use crate::cyclotomic::Cyclotomic;
use crate::error::Result;
use crate::field_theory::cauchy_prime_support;
use crate::galois::compute_profile;
use crate::matrix::Matrix;
use crate::verdict::Verdict;

/// The seven conditions defining admissible modular data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Condition {
    /// Real dimensions, symmetric projectively unitary `S`, `T` of finite order.
    I,
    /// `(ST)³ = p⁺S²`, `p⁺p⁻ = D²`, anomaly a root of unity.
    II,
    /// Verlinde coefficients are nonnegative integers.
    III,
    /// Balancing equation.
    IV,
    /// Frobenius–Schur indicators.
    V,
    /// Galois symmetry of `S`.
    VI,
    /// Cauchy condition on prime divisors of `D²` and `N`.
    VII,
}

impl Condition {
    pub const ALL: [Condition; 7] = [
        Condition::I,
        Condition::II,
        Condition::III,
        Condition::IV,
        Condition::V,
        Condition::VI,
        Condition::VII,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Condition::I => "(i)",
            Condition::II => "(ii)",
            Condition::III => "(iii)",
            Condition::IV => "(iv)",
            Condition::V => "(v)",
            Condition::VI => "(vi)",
            Condition::VII => "(vii)",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Condition::I => "d_j real, S symmetric, S conj(S)^T = D^2 I, ord(T) = N",
            Condition::II => "(ST)^3 = p+ S^2, p+ p- = D^2, p+/p- a root of unity",
            Condition::III => "Verlinde coefficients are nonnegative integers",
            Condition::IV => "balancing equation",
            Condition::V => "nu_2(k) in {0,+1,-1} matching duality, nu_n(k) in Z[zeta_N]",
            Condition::VI => "F_S in Q_N, Galois action by permutations, Gal(F_T/F_S) elementary 2-group",
            Condition::VII => "primes of Norm(D^2) equal primes of N",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionResult {
    pub condition: Condition,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct AdmissibilityReport {
    pub results: Vec<ConditionResult>,
    #[serde(skip)]
    pub fusion: Option<FusionRules>,
}

impl AdmissibilityReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.verdict.passed())
    }

    pub fn verdict(&self, c: Condition) -> &Verdict {
        &self
            .results
            .iter()
            .find(|r| r.condition == c)
            .expect("every condition is evaluated")
            .verdict
    }

    pub fn failures(&self) -> Vec<Condition> {
        self.results
            .iter()
            .filter(|r| !r.verdict.passed())
            .map(|r| r.condition)
            .collect()
    }
}

fn or_error(r: Result<Verdict>) -> Verdict {
    r.unwrap_or_else(|e| Verdict::fail(e.to_string()))
}

fn condition_i(datum: &ModularDatum) -> Result<Verdict> {
    if let Some(j) = datum.dims().iter().position(|d| !d.is_real()) {
        return Ok(Verdict::fail(format!("d_{j} = {} is not real", datum.dims()[j])));
    }
    if !datum.s().is_symmetric() {
        return Ok(Verdict::fail("S is not symmetric"));
    }
    let ortho = check_orthogonality(datum)?;
    if !ortho.passed() {
        return Ok(ortho);
    }
    let ord = datum.t_order();
    Ok(Verdict::from_bool(ord == datum.torder(), || {
        format!("ord(T) = {ord} but torder = {}", datum.torder())
    }))
}

fn condition_ii(datum: &ModularDatum) -> Result<Verdict> {
    let s = datum.s();
    let thetas: Vec<Cyclotomic> = datum.twists().iter().map(|t| t.to_cyclotomic()).collect();
    let st = s.try_mul_diag(&thetas)?;
    let st3 = st.try_mul(&st)?.try_mul(&st)?;
    let p_plus = datum.gauss_sum(1);
    let p_minus = datum.gauss_sum(-1);
    let s2 = s.try_mul(s)?;
    if st3 != s2.try_scale(&p_plus)? {
        return Ok(Verdict::fail("(ST)^3 != p+ S^2"));
    }
    let d2 = datum.global_dim_sq();
    if p_plus.try_mul(&p_minus)? != d2 {
        return Ok(Verdict::fail(format!("p+ p- != D^2 = {d2}")));
    }
    let anomaly = p_plus.try_mul(&p_minus.try_inv()?)?;
    Ok(Verdict::from_bool(anomaly.is_root_of_unity(), || {
        format!("anomaly {anomaly} is not a root of unity")
    }))
}

fn condition_v(datum: &ModularDatum, fusion: &FusionRules) -> Result<Verdict> {
    let table = FsTable::new(datum, fusion)?;
    let n = datum.torder();
    for k in 0..datum.rank() {
        let nu2 = table.nu(2, k)?;
        let self_dual = fusion.dual().apply(k) == k;
        let ok = if self_dual {
            nu2 == Cyclotomic::one() || nu2 == Cyclotomic::from_integer(-1)
        } else {
            nu2.is_zero()
        };
        if !ok {
            return Ok(Verdict::fail(format!(
                "nu_2({k}) = {nu2} for a {} label",
                if self_dual { "self-dual" } else { "non-self-dual" }
            )));
        }
    }
    for m in 1..=n {
        for k in 0..datum.rank() {
            let nu = table.nu(m, k)?;
            if !nu.is_algebraic_integer() || n % nu.conductor() != 0 {
                return Ok(Verdict::fail(format!("nu_{m}({k}) = {nu} is not in Z[zeta_{n}]")));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Units mod `n` whose automorphism fixes every entry of `s`.
pub(crate) fn units_fixing(s: &Matrix, n: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    'units: for k in units(n) {
        for x in s.entries() {
            if x.galois_mod(k, n)? != *x {
                continue 'units;
            }
        }
        out.push(k);
    }
    Ok(out)
}

fn condition_vi(datum: &ModularDatum) -> Result<Verdict> {
    let n = datum.torder();
    let m = datum.s().conductor();
    if n % m != 0 {
        return Ok(Verdict::fail(format!("conductor of F_S is {m}, which does not divide N = {n}")));
    }
    let profile = match compute_profile(datum) {
        Ok(p) => p,
        Err(e) => return Ok(Verdict::fail(e.to_string())),
    };
    let hom = profile.check_homomorphism();
    if !hom.passed() {
        return Ok(hom);
    }
    let ab = profile.check_abelian();
    if !ab.passed() {
        return Ok(ab);
    }
    for k in units_fixing(datum.s(), n)? {
        if mod_pow(k, 2, n) != 1 % n {
            return Ok(Verdict::fail(format!(
                "sigma_{k} fixes F_S but has order > 2 in Gal(Q_{n}/Q)"
            )));
        }
    }
    Ok(Verdict::Pass)
}

/// Evaluates every condition exactly and records a witness for each failure.
pub fn check_admissible(datum: &ModularDatum) -> AdmissibilityReport {
    let mut results = Vec::with_capacity(7);
    let mut push = |condition, verdict| results.push(ConditionResult { condition, verdict });
    push(Condition::I, or_error(condition_i(datum)));
    push(Condition::II, or_error(condition_ii(datum)));
    let fusion = verlinde_fusion(datum);
    push(
        Condition::III,
        match &fusion {
            Ok(_) => Verdict::Pass,
            Err(e) => Verdict::fail(e.to_string()),
        },
    );
    let fusion = fusion.ok();
    let unavailable = || Verdict::fail("not evaluated: fusion rules unavailable");
    push(
        Condition::IV,
        fusion
            .as_ref()
            .map_or_else(unavailable, |f| or_error(check_balancing(datum, f))),
    );
    push(
        Condition::V,
        fusion
            .as_ref()
            .map_or_else(unavailable, |f| or_error(condition_v(datum, f))),
    );
    push(Condition::VI, or_error(condition_vi(datum)));
    push(
        Condition::VII,
        or_error(cauchy_prime_support(datum).map(|c| c.verdict)),
    );
    AdmissibilityReport { results, fusion }
}
