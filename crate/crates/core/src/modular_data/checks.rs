use std::collections::BTreeMap;

use super::{FusionRules, ModularDatum};
use crate::cyclotomic::{Cyclotomic, Rational, RootOfUnity};
use crate::error::{Error, Result};
use crate::verdict::Verdict;

/// Balancing: `θ_i θ_j S_{ij} = Σ_k N_{i*j}^k d_k θ_k` for all `i, j`.
pub fn check_balancing(datum: &ModularDatum, fusion: &FusionRules) -> Result<Verdict> {
    let r = datum.rank();
    let theta: Vec<Cyclotomic> = datum.twists().iter().map(RootOfUnity::to_cyclotomic).collect();
    let dims = datum.dims();
    let weighted: Vec<Cyclotomic> = (0..r)
        .map(|k| dims[k].try_mul(&theta[k]))
        .collect::<Result<_>>()?;
    for i in 0..r {
        let i_dual = fusion.dual().apply(i);
        for j in 0..r {
            let lhs = (datum.theta(i) * datum.theta(j))
                .to_cyclotomic()
                .try_mul(&datum.s()[(i, j)])?;
            let mut rhs = Cyclotomic::zero();
            for k in 0..r {
                let n = fusion.get(i_dual, j, k);
                if n > 0 {
                    rhs = rhs.try_add(&weighted[k].scale(&Rational::from_integer(n.into())))?;
                }
            }
            if lhs != rhs {
                return Ok(Verdict::fail(format!("(i,j) = ({i},{j})")));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Twist equation: `p⁺ S_{jk} = θ_j θ_k Σ_i θ_i S_{ij} S_{ik}` for all `j, k`.
pub fn check_twist_equation(datum: &ModularDatum) -> Result<Verdict> {
    let r = datum.rank();
    let s = datum.s();
    let p_plus = datum.gauss_sum(1);
    let theta: Vec<Cyclotomic> = datum.twists().iter().map(RootOfUnity::to_cyclotomic).collect();
    for j in 0..r {
        for k in 0..=j {
            let mut sum = Cyclotomic::zero();
            for i in 0..r {
                sum = sum.try_add(&theta[i].try_mul(&s[(i, j)])?.try_mul(&s[(i, k)])?)?;
            }
            let rhs = (datum.theta(j) * datum.theta(k)).to_cyclotomic().try_mul(&sum)?;
            if p_plus.try_mul(&s[(j, k)])? != rhs {
                return Ok(Verdict::fail(format!("(j,k) = ({j},{k})")));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Precomputed data for the indicators
/// `ν_n(k) = D^{-2} Σ_{i,j} N_{ij}^k d_i d_j (θ_i/θ_j)^n`.
///
/// For each `k` the sum is grouped by the exponent of `θ_i/θ_j` over `N`,
/// so each `ν_n(k)` costs at most `N` additions.
pub struct FsTable {
    torder: u64,
    terms: Vec<BTreeMap<u64, Cyclotomic>>,
}

impl FsTable {
    pub fn new(datum: &ModularDatum, fusion: &FusionRules) -> Result<Self> {
        let r = datum.rank();
        let n = datum.torder();
        let dims = datum.dims();
        let d2_inv = datum.global_dim_sq().try_inv()?;
        let mut terms = vec![BTreeMap::new(); r];
        let a = datum.t_exponents();
        for i in 0..r {
            for j in 0..r {
                let e = (a[i] + n - a[j]) % n;
                let dd = dims[i].try_mul(&dims[j])?;
                for (k, slot) in terms.iter_mut().enumerate() {
                    let mult = fusion.get(i, j, k);
                    if mult == 0 {
                        continue;
                    }
                    let entry = slot.entry(e).or_insert_with(Cyclotomic::zero);
                    let add = dd.scale(&Rational::from_integer(mult.into()));
                    *entry = entry.try_add(&add)?;
                }
            }
        }
        for slot in &mut terms {
            for v in slot.values_mut() {
                *v = v.try_mul(&d2_inv)?;
            }
        }
        Ok(FsTable {
            torder: n,
            terms,
        })
    }

    /// `ν_n(k)`.
    pub fn nu(&self, n: u64, k: usize) -> Result<Cyclotomic> {
        let mut total = Cyclotomic::zero();
        for (&e, c) in &self.terms[k] {
            let root = RootOfUnity::new(((e as u128 * n as u128) % self.torder as u128) as i64, self.torder);
            total = total.try_add(&c.try_mul(&root.to_cyclotomic())?)?;
        }
        Ok(total)
    }
}

/// The `n`-th Frobenius–Schur indicator of label `k`.
pub fn fs_indicator(datum: &ModularDatum, fusion: &FusionRules, n: u64, k: usize) -> Result<Cyclotomic> {
    if k >= datum.rank() {
        return Err(Error::OutOfRange(format!("label {k} in rank {}", datum.rank())));
    }
    FsTable::new(datum, fusion)?.nu(n, k)
}

/// Smallest `n ≤ 12·torder` with `ν_n(k) = d_k` for every label `k`.
pub fn fs_exponent(datum: &ModularDatum, fusion: &FusionRules) -> Result<u64> {
    let table = FsTable::new(datum, fusion)?;
    let dims = datum.dims();
    let cap = 12 * datum.torder();
    for n in 1..=cap {
        let mut all = true;
        for (k, d) in dims.iter().enumerate() {
            if table.nu(n, k)? != *d {
                all = false;
                break;
            }
        }
        if all {
            return Ok(n);
        }
    }
    Err(Error::NotFound(format!(
        "no Frobenius-Schur exponent up to {cap}"
    )))
}
