use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::Cyclotomic;
use crate::arith::{gcd, lcm, rem};

/// The root of unity `e^{2πi num/den}`, kept as a reduced fraction of a turn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    /// `e^{2πi a/b}`. Panics if `b = 0`.
    pub fn new(a: i64, b: u64) -> Self {
        assert!(b > 0, "root of unity with zero denominator");
        let a = rem(a, b);
        let g = gcd(a, b);
        if a == 0 {
            return Self::one();
        }
        RootOfUnity {
            num: a / g,
            den: b / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity { num: 0, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        self.den
    }

    /// Exponent `a` with `self = ζ_n^a`; `n` must be a multiple of the order.
    pub fn exponent_over(&self, n: u64) -> Option<u64> {
        (n % self.den == 0).then(|| self.num * (n / self.den))
    }

    pub fn pow(&self, e: i64) -> Self {
        let k = rem(e, self.den) as u128;
        Self::new(((self.num as u128 * k) % self.den as u128) as i64, self.den)
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// Image under `ζ ↦ ζ^k`.
    pub fn galois(&self, k: i64) -> Self {
        self.pow(k)
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.den, self.num as i64)
    }

    pub fn to_complex(&self) -> Complex64 {
        let angle = std::f64::consts::TAU * self.num as f64 / self.den as f64;
        Complex64::new(angle.cos(), angle.sin())
    }
}

impl Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        let d = lcm(self.den, rhs.den);
        let a = self.num * (d / self.den) + rhs.num * (d / rhs.den);
        RootOfUnity::new((a % d) as i64, d)
    }
}

/// Renders as `e(a/b)`, meaning `e^{2πi a/b}`.
impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "1")
        } else {
            write!(f, "e({}/{})", self.num, self.den)
        }
    }
}
