//! Modular data `(S, T)`, the Verlinde formula and the admissibility checks.

mod admissible;
mod checks;
mod fusion;

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, lcm};
use crate::cyclotomic::{Cyclotomic, RootOfUnity};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::perm::Perm;

pub use admissible::{check_admissible, AdmissibilityReport, Condition};
pub use checks::{check_balancing, check_twist_equation, fs_exponent, fs_indicator, FsTable};
pub use fusion::{verlinde_fusion, FusionRules};

/// A rank-`r` S-matrix together with twists `θ_j = ζ_N^{a_j}`. Label 0 is the
/// unit object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularDatum {
    torder: u64,
    t_exponents: Vec<u64>,
    s: Matrix,
}

/// Quantities read off from `S` and `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedScalars {
    pub dims: Vec<Cyclotomic>,
    pub global_dim_sq: Cyclotomic,
    pub gauss_plus: Cyclotomic,
    pub gauss_minus: Cyclotomic,
    /// `p⁺/p⁻`, `None` if `p⁻ = 0`.
    pub anomaly: Option<Cyclotomic>,
    /// Charge conjugation `j ↦ j*`, from `S_{i,j*} = conj(S_{ij})`; `None` if
    /// some column has no conjugate partner.
    pub dual: Option<Perm>,
}

#[derive(Serialize, Deserialize)]
struct DatumFile {
    rank: usize,
    torder: u64,
    t_exponents: Vec<u64>,
    #[serde(rename = "S")]
    s: Vec<Vec<Cyclotomic>>,
}

fn violation(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::SchemaViolation {
        location: location.into(),
        message: message.into(),
    }
}

impl ModularDatum {
    /// Validates the structural invariants: shapes agree, exponents are below
    /// `torder`, `S` is symmetric, `S_00 = 1` and `θ_0 = 1`.
    pub fn new(torder: u64, t_exponents: Vec<u64>, s: Matrix) -> Result<Self> {
        let r = t_exponents.len();
        if torder == 0 {
            return Err(violation("torder", "must be at least 1"));
        }
        if r == 0 {
            return Err(violation("t_exponents", "rank must be at least 1"));
        }
        if s.size() != r {
            return Err(violation(
                "S",
                format!("expected {r}x{r}, found {0}x{0}", s.size()),
            ));
        }
        if let Some(j) = t_exponents.iter().position(|&a| a >= torder) {
            return Err(violation(
                format!("t_exponents[{j}]"),
                format!("exponent {} is not below torder {torder}", t_exponents[j]),
            ));
        }
        if t_exponents[0] != 0 {
            return Err(violation("t_exponents[0]", "the unit object must have twist 1"));
        }
        if !s[(0, 0)].is_one() {
            return Err(violation("S[0][0]", format!("expected 1, found {}", s[(0, 0)])));
        }
        for i in 0..r {
            for j in 0..i {
                if s[(i, j)] != s[(j, i)] {
                    return Err(violation(
                        format!("S[{j}][{i}]"),
                        format!("S is not symmetric: S[{j}][{i}] != S[{i}][{j}]"),
                    ));
                }
            }
        }
        Ok(ModularDatum {
            torder,
            t_exponents,
            s,
        })
    }

    /// Twists given as roots of unity; `torder` becomes the lcm of their orders.
    pub fn from_twists(twists: &[RootOfUnity], s: Matrix) -> Result<Self> {
        let n = twists.iter().fold(1, |acc, t| lcm(acc, t.order()));
        let exps = twists
            .iter()
            .map(|t| t.exponent_over(n).expect("order divides lcm"))
            .collect();
        Self::new(n, exps, s)
    }

    pub fn rank(&self) -> usize {
        self.t_exponents.len()
    }

    /// `N` with `θ_j = ζ_N^{a_j}`.
    pub fn torder(&self) -> u64 {
        self.torder
    }

    pub fn t_exponents(&self) -> &[u64] {
        &self.t_exponents
    }

    pub fn s(&self) -> &Matrix {
        &self.s
    }

    pub fn theta(&self, j: usize) -> RootOfUnity {
        RootOfUnity::new(self.t_exponents[j] as i64, self.torder)
    }

    pub fn twists(&self) -> Vec<RootOfUnity> {
        (0..self.rank()).map(|j| self.theta(j)).collect()
    }

    pub fn t_matrix(&self) -> Matrix {
        Matrix::diagonal(self.twists().iter().map(RootOfUnity::to_cyclotomic).collect())
    }

    /// Actual multiplicative order of `T`, which divides `torder`.
    pub fn t_order(&self) -> u64 {
        self.t_exponents
            .iter()
            .fold(1, |acc, &a| lcm(acc, self.torder / gcd(a, self.torder)))
    }

    /// `d_j = S_{0j}`.
    pub fn dims(&self) -> Vec<Cyclotomic> {
        self.s.row(0).to_vec()
    }

    /// `D² = Σ d_j²`.
    pub fn global_dim_sq(&self) -> Cyclotomic {
        self.s.row(0).iter().map(|d| d * d).sum()
    }

    /// `p± = Σ d_j² θ_j^{±1}`.
    pub fn gauss_sum(&self, sign: i64) -> Cyclotomic {
        (0..self.rank())
            .map(|j| {
                let d = &self.s[(0, j)];
                d * d * self.theta(j).pow(sign).to_cyclotomic()
            })
            .sum()
    }

    /// Label `j*` with `S_{i,j*} = conj(S_{ij})` for all `i`.
    pub fn dual(&self) -> Option<Perm> {
        let r = self.rank();
        let conj = self.s.conj();
        let mut images = Vec::with_capacity(r);
        for j in 0..r {
            let col = conj.column(j);
            let hits: Vec<usize> = (0..r).filter(|&k| self.s.column(k) == col).collect();
            if hits.len() != 1 {
                return None;
            }
            images.push(hits[0]);
        }
        let mut seen = vec![false; r];
        for &i in &images {
            if seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm::from_images(images))
    }

    pub fn derived(&self) -> DerivedScalars {
        let gauss_plus = self.gauss_sum(1);
        let gauss_minus = self.gauss_sum(-1);
        let anomaly = (!gauss_minus.is_zero()).then(|| &gauss_plus / &gauss_minus);
        DerivedScalars {
            dims: self.dims(),
            global_dim_sq: self.global_dim_sq(),
            gauss_plus,
            gauss_minus,
            anomaly,
            dual: self.dual(),
        }
    }

    /// Relabels simple objects by `π` (which must fix 0):
    /// `S'_{π(i)π(j)} = S_{ij}`, `θ'_{π(i)} = θ_i`.
    pub fn relabel(&self, perm: &Perm) -> Result<Self> {
        if perm.len() != self.rank() || perm.apply(0) != 0 {
            return Err(Error::InvalidParameters(
                "relabeling must be a permutation of the labels fixing 0".into(),
            ));
        }
        let mut exps = vec![0; self.rank()];
        for (i, &a) in self.t_exponents.iter().enumerate() {
            exps[perm.apply(i)] = a;
        }
        Self::new(self.torder, exps, self.s.permuted(perm.images()))
    }

    /// `(σ_k(S), σ_k(T))` for a unit `k` modulo the level of all entries.
    pub fn galois_conjugate(&self, k: u64) -> Result<Self> {
        let n = lcm(self.torder, self.s.conductor());
        if gcd(k, n) != 1 {
            return Err(Error::NotAUnit { k: k as i64, order: n });
        }
        let s = self.s.try_map(|x| x.galois_mod(k, n))?;
        let exps = self
            .t_exponents
            .iter()
            .map(|&a| ((a as u128 * k as u128) % self.torder as u128) as u64)
            .collect();
        Self::new(self.torder, exps, s)
    }

    /// Copy with `S_{ij}` and `S_{ji}` replaced. Structural checks still run.
    pub fn with_s_entry(&self, i: usize, j: usize, value: Cyclotomic) -> Result<Self> {
        let mut s = self.s.clone();
        s[(i, j)] = value.clone();
        s[(j, i)] = value;
        Self::new(self.torder, self.t_exponents.clone(), s)
    }

    /// Copy with `θ_j` replaced; `torder` grows to fit the new twist.
    pub fn with_twist(&self, j: usize, twist: RootOfUnity) -> Result<Self> {
        let mut twists = self.twists();
        twists[j] = twist;
        let n = lcm(self.torder, twist.order());
        let exps = twists
            .iter()
            .map(|t| t.exponent_over(n).expect("order divides lcm"))
            .collect();
        Self::new(n, exps, self.s.clone())
    }

    /// Copy with a different nominal `torder` (exponents rescaled when the
    /// new value is a multiple of the old one, otherwise kept verbatim).
    pub fn with_torder(&self, torder: u64) -> Result<Self> {
        let exps = if torder % self.torder == 0 {
            let f = torder / self.torder;
            self.t_exponents.iter().map(|a| a * f).collect()
        } else {
            self.t_exponents.clone()
        };
        Self::new(torder, exps, self.s.clone())
    }

    pub fn to_json(&self) -> String {
        let file = DatumFile {
            rank: self.rank(),
            torder: self.torder,
            t_exponents: self.t_exponents.clone(),
            s: self.s.rows(),
        };
        let mut out = serde_json::to_string_pretty(&file).expect("serializable");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: DatumFile = serde_json::from_str(text).map_err(|e| {
            violation(format!("line {} column {}", e.line(), e.column()), e.to_string())
        })?;
        if file.rank != file.t_exponents.len() {
            return Err(violation(
                "rank",
                format!(
                    "rank {} disagrees with {} twist exponents",
                    file.rank,
                    file.t_exponents.len()
                ),
            ));
        }
        if let Some(i) = file.s.iter().position(|row| row.len() != file.rank) {
            return Err(violation(format!("S[{i}]"), format!("row must have {} entries", file.rank)));
        }
        if file.s.len() != file.rank {
            return Err(violation("S", format!("expected {} rows", file.rank)));
        }
        Self::new(file.torder, file.t_exponents, Matrix::from_rows(file.s))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}

/// The rank-1 datum `S = (1)`, `T = (1)`.
pub fn trivial_datum() -> ModularDatum {
    ModularDatum::new(1, vec![0], Matrix::identity(1)).expect("trivial datum is valid")
}
