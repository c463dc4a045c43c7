use serde::Serialize;

use super::ModularDatum;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::verdict::Verdict;

/// Fusion coefficients `N_{ij}^k` with the duality involution `i ↦ i*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionRules {
    rank: usize,
    tensor: Vec<u64>,
    dual: Perm,
}

impl FusionRules {
    /// Builds rules from `n(i, j, k) = N_{ij}^k`; the dual is read off from
    /// `N_{i,i*}^0 = 1`.
    pub fn from_fn(rank: usize, mut n: impl FnMut(usize, usize, usize) -> u64) -> Result<Self> {
        let mut tensor = Vec::with_capacity(rank * rank * rank);
        for i in 0..rank {
            for j in 0..rank {
                for k in 0..rank {
                    tensor.push(n(i, j, k));
                }
            }
        }
        let mut images = Vec::with_capacity(rank);
        for i in 0..rank {
            let partners: Vec<usize> = (0..rank).filter(|&j| tensor[(i * rank + j) * rank] == 1).collect();
            let zeros = (0..rank).filter(|&j| tensor[(i * rank + j) * rank] == 0).count();
            if partners.len() != 1 || zeros != rank - 1 {
                return Err(Error::InvalidParameters(format!(
                    "label {i} has no unique dual (N_{{i,j}}^0 must be a Kronecker delta)"
                )));
            }
            images.push(partners[0]);
        }
        let mut seen = vec![false; rank];
        for &i in &images {
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidParameters("duality is not a bijection".into()));
            }
        }
        Ok(FusionRules {
            rank,
            tensor,
            dual: Perm::from_images(images),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `N_{ij}^k`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.tensor[(i * self.rank + j) * self.rank + k]
    }

    pub fn dual(&self) -> &Perm {
        &self.dual
    }

    /// Fusion matrix `(N_i)_{jk} = N_{ij}^k`.
    pub fn matrix(&self, i: usize) -> Vec<Vec<u64>> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|k| self.get(i, j, k)).collect())
            .collect()
    }

    /// Rules after relabeling by `π`: `N'_{π(i)π(j)}^{π(k)} = N_{ij}^k`.
    pub fn relabel(&self, perm: &Perm) -> FusionRules {
        let inv = perm.inverse();
        FusionRules::from_fn(self.rank, |i, j, k| self.get(inv.apply(i), inv.apply(j), inv.apply(k)))
            .expect("relabeling preserves validity")
    }

    fn labels(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let r = self.rank;
        (0..r).flat_map(move |i| (0..r).flat_map(move |j| (0..r).map(move |k| (i, j, k))))
    }

    /// `N_{ij}^k = N_{ji}^k = N_{i,k*}^{j*} = N_{i*,j*}^{k*}`.
    pub fn check_symmetries(&self) -> Verdict {
        let d = |i: usize| self.dual.apply(i);
        for (i, j, k) in self.labels() {
            let n = self.get(i, j, k);
            if n != self.get(j, i, k) || n != self.get(i, d(k), d(j)) || n != self.get(d(i), d(j), d(k)) {
                return Verdict::fail(format!("(i,j,k) = ({i},{j},{k})"));
            }
        }
        Verdict::Pass
    }

    /// `N_{0j}^k = δ_{jk}` and `N_{ij}^0 = δ_{i,j*}`.
    pub fn check_unit(&self) -> Verdict {
        for (i, j, k) in self.labels() {
            if i == 0 && self.get(0, j, k) != u64::from(j == k) {
                return Verdict::fail(format!("N_{{0,{j}}}^{k}"));
            }
            if k == 0 && self.get(i, j, 0) != u64::from(j == self.dual.apply(i)) {
                return Verdict::fail(format!("N_{{{i},{j}}}^0"));
            }
        }
        Verdict::Pass
    }

    /// `Σ_m N_{ij}^m N_{mk}^l = Σ_m N_{jk}^m N_{im}^l`.
    pub fn check_associativity(&self) -> Verdict {
        let r = self.rank;
        for (i, j, k) in self.labels() {
            for l in 0..r {
                let lhs: u64 = (0..r).map(|m| self.get(i, j, m) * self.get(m, k, l)).sum();
                let rhs: u64 = (0..r).map(|m| self.get(j, k, m) * self.get(i, m, l)).sum();
                if lhs != rhs {
                    return Verdict::fail(format!("(i,j,k,l) = ({i},{j},{k},{l})"));
                }
            }
        }
        Verdict::Pass
    }

    /// The fusion matrices `N_i` commute pairwise.
    pub fn check_commuting(&self) -> Verdict {
        let r = self.rank;
        let mats: Vec<Vec<Vec<u64>>> = (0..r).map(|i| self.matrix(i)).collect();
        let mul = |a: &Vec<Vec<u64>>, b: &Vec<Vec<u64>>| -> Vec<Vec<u64>> {
            (0..r)
                .map(|x| (0..r).map(|y| (0..r).map(|z| a[x][z] * b[z][y]).sum()).collect())
                .collect()
        };
        for a in 0..r {
            for b in 0..a {
                if mul(&mats[a], &mats[b]) != mul(&mats[b], &mats[a]) {
                    return Verdict::fail(format!("N_{a} N_{b} != N_{b} N_{a}"));
                }
            }
        }
        Verdict::Pass
    }
}

/// `S · conj(S)ᵀ = D² · Id`.
pub(crate) fn check_orthogonality(datum: &ModularDatum) -> Result<Verdict> {
    let s = datum.s();
    let prod = s.try_mul(&s.conj().transpose())?;
    let d2 = datum.global_dim_sq();
    let r = datum.rank();
    for i in 0..r {
        for j in 0..r {
            let expected = if i == j { d2.clone() } else { Cyclotomic::zero() };
            if prod[(i, j)] != expected {
                return Ok(Verdict::fail(format!(
                    "(S conj(S)^T)[{i}][{j}] = {} but D^2 = {d2}",
                    prod[(i, j)]
                )));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Exact Verlinde formula `N_{ij}^k = D^{-2} Σ_a S_{ia} S_{ja} conj(S_{ka}) / S_{0a}`.
pub fn verlinde_fusion(datum: &ModularDatum) -> Result<FusionRules> {
    if let Verdict::Fail { witness } = check_orthogonality(datum)? {
        return Err(Error::DegenerateS(witness));
    }
    let s = datum.s();
    let r = datum.rank();
    if let Some(a) = (0..r).find(|&a| s[(0, a)].is_zero()) {
        return Err(Error::DegenerateS(format!("S[0][{a}] = 0")));
    }
    let d2_inv = datum.global_dim_sq().try_inv()?;
    // w_a = 1 / (D² S_{0a})
    let weights: Vec<Cyclotomic> = (0..r)
        .map(|a| s[(0, a)].try_inv().and_then(|x| x.try_mul(&d2_inv)))
        .collect::<Result<_>>()?;
    let conj = s.conj();
    let weighted = s.try_mul_diag(&weights)?;
    let mut values = vec![0u64; r * r * r];
    for i in 0..r {
        for j in 0..=i {
            // P_a = S_{ia} S_{ja} w_a
            let pa: Vec<Cyclotomic> = (0..r)
                .map(|a| weighted[(i, a)].try_mul(&s[(j, a)]))
                .collect::<Result<_>>()?;
            for k in 0..r {
                let mut total = Cyclotomic::zero();
                for a in 0..r {
                    total = total.try_add(&pa[a].try_mul(&conj[(k, a)])?)?;
                }
                let n = total
                    .as_integer()
                    .and_then(|n| u64::try_from(n).ok())
                    .ok_or_else(|| Error::NotFusionIntegral {
                        i,
                        j,
                        k,
                        value: total.to_string(),
                    })?;
                values[(i * r + j) * r + k] = n;
                values[(j * r + i) * r + k] = n;
            }
        }
    }
    FusionRules::from_fn(r, |i, j, k| values[(i * r + j) * r + k])
}
