//! Explicit families of modular data.

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, is_prime};
use crate::cyclotomic::{Cyclotomic, Rational, RootOfUnity};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::modular_data::{trivial_datum, ModularDatum};

/// `sin(aπ/q)/sin(π/q)`, via `sin(aπ/q) = (ζ_{2q}^a - ζ_{2q}^{-a})/(2i)`.
fn sine_ratio(a: i64, q: u64) -> Result<Cyclotomic> {
    let sine = |k: i64| {
        Cyclotomic::root_of_unity(2 * q, k).try_sub(&Cyclotomic::root_of_unity(2 * q, -k))
    };
    sine(a)?.try_mul(&sine(1)?.try_inv()?)
}

/// Rank-`p` data with `q = 2p + 1` prime:
/// `S_{ij} = sin((2i+1)(2j+1)π/q)/sin(π/q)`, `θ_j = e^{2πi(j²+j)/q}`,
/// conjugated by `σ_conj`.
pub fn su2_odd_mod2(p: u64, conj: u64) -> Result<ModularDatum> {
    let q = 2 * p + 1;
    if p == 0 || !is_prime(q) {
        return Err(Error::InvalidFamily(format!("q = 2p+1 = {q} is not prime")));
    }
    if gcd(conj, q) != 1 {
        return Err(Error::InvalidParameters(format!("{conj} is not a unit mod {q}")));
    }
    let r = p as usize;
    let mut rows = Vec::with_capacity(r);
    for i in 0..r {
        let mut row = Vec::with_capacity(r);
        for j in 0..r {
            row.push(sine_ratio(((2 * i + 1) * (2 * j + 1)) as i64, q)?);
        }
        rows.push(row);
    }
    let exps = (0..p).map(|j| (j * j + j) % q).collect();
    let datum = ModularDatum::new(q, exps, Matrix::from_rows(rows))?;
    if conj % q == 1 {
        Ok(datum)
    } else {
        datum.galois_conjugate(conj % q)
    }
}

/// Pointed data on `Z/n` from the quadratic form `j ↦ m j²/n`:
/// `θ_j = ζ_n^{m j²}`, `S_{jk} = ζ_n^{-2mjk}`.
pub fn pointed_zn(n: u64, m: u64) -> Result<ModularDatum> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::InvalidFamily(format!("n = {n} must be odd")));
    }
    if n == 1 {
        return Ok(trivial_datum());
    }
    if gcd(m, n) != 1 {
        return Err(Error::NotModular(format!(
            "the form j -> {m} j^2 / {n} is degenerate"
        )));
    }
    let r = n as usize;
    let nn = n as u128;
    let mm = (m % n) as u128;
    let s = Matrix::from_fn(r, |j, k| {
        let e = (2 * mm * j as u128 * k as u128) % nn;
        Cyclotomic::root_of_unity(n, -(e as i64))
    });
    let exps = (0..nn).map(|j| (mm * j * j % nn) as u64).collect();
    ModularDatum::new(n, exps, s)
}

/// Parameters of the rank-5 family with `D² = 12`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Su24Params {
    pub nu1: i8,
    pub nu2: i8,
    /// `θ₂ = e^{2πi k/3}`, `k ∈ {1, 2}`.
    pub theta2: RootOfUnity,
    /// An eighth root of unity with `θ₃² = -ν₂ν₃ i`.
    pub theta3: RootOfUnity,
}

impl Su24Params {
    /// `ν₃ = ±1` with `θ₂ = e^{ν₃ 2πi/3}`.
    pub fn nu3(&self) -> i8 {
        if self.theta2 == RootOfUnity::new(1, 3) {
            1
        } else {
            -1
        }
    }

    /// File stem used for the shipped data files.
    pub fn file_stem(&self, index: usize) -> String {
        format!("su2_4_family_{index}")
    }
}

/// `-ν₂ν₃ i`.
fn theta3_square(nu2: i8, nu3: i8) -> RootOfUnity {
    let i = RootOfUnity::new(1, 4);
    if nu2 * nu3 > 0 {
        i.inv()
    } else {
        i
    }
}

/// All sixteen parameter tuples, ordered by `ν₁`, `ν₂`, `ν₃` (positive first)
/// and then by the exponent of `θ₃` over 8.
pub fn su2_4_parameters() -> Vec<Su24Params> {
    let mut out = Vec::with_capacity(16);
    for nu1 in [1i8, -1] {
        for nu2 in [1i8, -1] {
            for nu3 in [1i8, -1] {
                let theta2 = RootOfUnity::new(i64::from(nu3), 3);
                let target = theta3_square(nu2, nu3);
                for a in 0..8 {
                    let theta3 = RootOfUnity::new(a, 8);
                    if theta3.pow(2) == target {
                        out.push(Su24Params {
                            nu1,
                            nu2,
                            theta2,
                            theta3,
                        });
                    }
                }
            }
        }
    }
    out
}

/// The rank-5 datum with
///
/// ```text
/// S = [ 1     1     2   ν₁√3   ν₁√3 ]
///     [ 1     1     2  -ν₁√3  -ν₁√3 ]
///     [ 2     2    -2    0      0   ]
///     [ ν₁√3 -ν₁√3  0  -ν₂√3   ν₂√3 ]
///     [ ν₁√3 -ν₁√3  0   ν₂√3  -ν₂√3 ]
/// ```
///
/// and `T = diag(1, 1, θ₂, θ₃, -θ₃)`.
pub fn su2_4_family(params: Su24Params) -> Result<ModularDatum> {
    let Su24Params {
        nu1,
        nu2,
        theta2,
        theta3,
    } = params;
    if nu1.abs() != 1 || nu2.abs() != 1 {
        return Err(Error::InvalidParameters("nu1 and nu2 must be +1 or -1".into()));
    }
    if theta2.order() != 3 {
        return Err(Error::InvalidParameters(format!("theta2 = {theta2} is not a primitive cube root of 1")));
    }
    let nu3 = params.nu3();
    let target = theta3_square(nu2, nu3);
    if theta3.pow(2) != target {
        return Err(Error::InvalidParameters(format!(
            "theta3^2 = {} but -nu2 nu3 i = {target}",
            theta3.pow(2)
        )));
    }
    let sqrt3 = Cyclotomic::root_of_unity(12, 1) + Cyclotomic::root_of_unity(12, -1);
    let int = Cyclotomic::from_integer;
    let a = sqrt3.scale(&Rational::from_integer(nu1.into()));
    let b = sqrt3.scale(&Rational::from_integer(nu2.into()));
    let z = Cyclotomic::zero;
    let rows = vec![
        vec![int(1), int(1), int(2), a.clone(), a.clone()],
        vec![int(1), int(1), int(2), -&a, -&a],
        vec![int(2), int(2), int(-2), z(), z()],
        vec![a.clone(), -&a, z(), -&b, b.clone()],
        vec![a.clone(), -&a, z(), b.clone(), -&b],
    ];
    let twists = [
        RootOfUnity::one(),
        RootOfUnity::one(),
        theta2,
        theta3,
        theta3 * RootOfUnity::new(1, 2),
    ];
    ModularDatum::from_twists(&twists, Matrix::from_rows(rows))
}

/// Named members of the catalog.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub datum: ModularDatum,
}

/// Every shipped datum: `su2_9_mod2`, `pointed_z5_m1` and the sixteen
/// `su2_4_family_k`.
pub fn shipped_data() -> Result<Vec<CatalogEntry>> {
    let mut out = vec![
        CatalogEntry {
            name: "su2_9_mod2".into(),
            datum: su2_odd_mod2(5, 1)?,
        },
        CatalogEntry {
            name: "pointed_z5_m1".into(),
            datum: pointed_zn(5, 1)?,
        },
    ];
    for (k, params) in su2_4_parameters().into_iter().enumerate() {
        out.push(CatalogEntry {
            name: params.file_stem(k),
            datum: su2_4_family(params)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_tuples() {
        let all = su2_4_parameters();
        assert_eq!(all.len(), 16);
        let data: Vec<ModularDatum> = all.iter().map(|&p| su2_4_family(p).unwrap()).collect();
        for i in 0..16 {
            for j in 0..i {
                assert_ne!(data[i], data[j]);
            }
        }
    }

    #[test]
    fn bad_theta3() {
        let mut p = su2_4_parameters()[0];
        p.theta3 = p.theta3 * RootOfUnity::new(1, 4);
        assert!(matches!(su2_4_family(p), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn family_errors() {
        assert!(matches!(su2_odd_mod2(4, 1), Err(Error::InvalidFamily(_))));
        assert!(matches!(su2_odd_mod2(5, 11), Err(Error::InvalidParameters(_))));
        assert!(matches!(pointed_zn(4, 1), Err(Error::InvalidFamily(_))));
        assert!(matches!(pointed_zn(9, 3), Err(Error::NotModular(_))));
        assert_eq!(pointed_zn(1, 1).unwrap(), trivial_datum());
    }

    #[test]
    fn shapes() {
        let d = su2_odd_mod2(5, 1).unwrap();
        assert_eq!((d.rank(), d.torder()), (5, 11));
        let d = su2_odd_mod2(2, 1).unwrap();
        assert_eq!((d.rank(), d.torder()), (2, 5));
        let d = pointed_zn(5, 1).unwrap();
        assert!(d.dims().iter().all(Cyclotomic::is_one));
        let d = su2_4_family(su2_4_parameters()[0]).unwrap();
        assert_eq!(d.global_dim_sq(), Cyclotomic::from_integer(12));
        assert_eq!(d.torder(), 24);
    }
}
