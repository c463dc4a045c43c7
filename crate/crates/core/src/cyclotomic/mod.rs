//! Exact arithmetic in cyclotomic fields.
//!
//! A [`Cyclotomic`] is stored in the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}` of
//! `Q(ζ_n)` with rational coefficients. Every arithmetic result is brought
//! down to its conductor, so the stored order of a computed value is the
//! smallest `n` whose cyclotomic field contains it.

mod order;
mod root;
mod serde_impl;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{factorize, gcd, lcm, mod_pow, rem, units};
use crate::error::{Error, Result};

pub use order::{cyclotomic_polynomial, order_cap, set_order_cap};
pub use root::RootOfUnity;

pub type Rational = BigRational;

/// Largest number of decimal digits [`Cyclotomic::complex_eval`] can promise.
pub const MAX_EVAL_DIGITS: u32 = 15;

/// An element of `Q(ζ_n)`.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl Cyclotomic {
    /// Builds `Σ c_e ζ_n^e` at order `n`. Exponents may be any integers.
    ///
    /// The result is canonical for `n` but is not moved to its conductor;
    /// use [`Cyclotomic::reduce_conductor`] for that.
    pub fn make<I>(order: u64, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let ctx = order::ctx(order)?;
        let mut poly = vec![Rational::zero(); order as usize];
        for (e, c) in raw {
            poly[rem(e, order) as usize] += c;
        }
        Ok(Cyclotomic {
            order,
            coeffs: ctx.reduce(poly),
        })
    }

    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    /// `ζ_n^e`, at its conductor.
    pub fn root_of_unity(n: u64, e: i64) -> Self {
        let e = rem(e, n);
        let g = gcd(e, n);
        let (m, k) = (n / g, e / g);
        match m {
            1 => Self::one(),
            2 => Self::from_integer(-1),
            _ if m % 4 == 2 => {
                // ζ_m^k = -ζ_m^{k+m/2}, and k + m/2 is even.
                let half = m / 2;
                -Self::monomial(half, (((k + half) % m) / 2) as i64)
            }
            _ => Self::monomial(m, k as i64),
        }
    }

    fn monomial(n: u64, e: i64) -> Self {
        Self::make(n, [(e, Rational::one())]).expect("root of unity order within cap")
    }

    /// `ζ_n`.
    pub fn zeta(n: u64) -> Self {
        Self::root_of_unity(n, 1)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficient of `ζ_n^e` in the canonical form at the stored order.
    pub fn coeff(&self, e: usize) -> Rational {
        self.coeffs.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients keyed by exponent.
    pub fn coeffs(&self) -> BTreeMap<u64, Rational> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u64, c.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// The same element expressed at its conductor.
    pub fn reduce_conductor(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let ctx = order::ctx(self.order).expect("existing order is within cap");
        let axes = &ctx.axes;
        let radix: Vec<usize> = axes.iter().map(|a| a.phi as usize).collect();
        let mut tensor = vec![Rational::zero(); ctx.phi];
        let mut expansions: Vec<Vec<(u64, bool)>> = vec![Vec::new(); axes.len()];
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (ax, out) in axes.iter().zip(expansions.iter_mut()) {
                out.clear();
                let b = (e as u64 * ax.crt) % ax.q;
                if b < ax.phi {
                    out.push((b, true));
                } else {
                    let step = ax.q / ax.p;
                    for j in 0..ax.p - 1 {
                        out.push((b - ax.phi + j * step, false));
                    }
                }
            }
            let mut idx = vec![0usize; axes.len()];
            'outer: loop {
                let mut flat = 0usize;
                let mut positive = true;
                for (a, &i) in idx.iter().enumerate() {
                    let (b, sign) = expansions[a][i];
                    flat = flat * radix[a] + b as usize;
                    positive ^= !sign;
                }
                if positive {
                    tensor[flat] += c;
                } else {
                    tensor[flat] -= c;
                }
                for a in (0..idx.len()).rev() {
                    idx[a] += 1;
                    if idx[a] < expansions[a].len() {
                        continue 'outer;
                    }
                    idx[a] = 0;
                }
                break;
            }
        }

        let decode = |mut flat: usize| {
            let mut b = vec![0u64; radix.len()];
            for a in (0..radix.len()).rev() {
                b[a] = (flat % radix[a]) as u64;
                flat /= radix[a];
            }
            b
        };
        // Largest power of p dividing every index on each axis, capped at e.
        let mut drop: Vec<u32> = axes.iter().map(|a| a.e).collect();
        for (flat, c) in tensor.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, b) in decode(flat).into_iter().enumerate() {
                if b != 0 {
                    let mut v = 0;
                    let mut bb = b;
                    while bb % axes[a].p == 0 && v < drop[a] {
                        bb /= axes[a].p;
                        v += 1;
                    }
                    drop[a] = drop[a].min(v);
                }
            }
        }
        let new_q: Vec<u64> = axes
            .iter()
            .zip(&drop)
            .map(|(ax, &t)| {
                let q = ax.p.pow(ax.e - t);
                if q == 2 {
                    1
                } else {
                    q
                }
            })
            .collect();
        let m: u64 = new_q.iter().product();
        if m == self.order {
            return self.clone();
        }
        let mut poly = vec![Rational::zero(); m as usize];
        for (flat, c) in tensor.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut exp = 0u64;
            for (a, b) in decode(flat).into_iter().enumerate() {
                if new_q[a] == 1 {
                    continue;
                }
                let shrunk = b / axes[a].p.pow(drop[a]);
                exp = (exp + shrunk * (m / new_q[a])) % m;
            }
            poly[exp as usize] += c;
        }
        let ctx = order::ctx(m).expect("divisor order within cap");
        Cyclotomic {
            order: m,
            coeffs: ctx.reduce(poly),
        }
    }

    /// Smallest `m` with this element in `Q(ζ_m)`.
    pub fn conductor(&self) -> u64 {
        self.reduce_conductor().order
    }

    /// Re-expresses the element at order `n`, which must be a multiple of
    /// its conductor.
    pub fn embed(&self, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        let src = if n % self.order == 0 {
            self.clone()
        } else {
            let r = self.reduce_conductor();
            if n % r.order != 0 {
                return Err(Error::BadLevel(format!(
                    "element of conductor {} does not lie in Q(ζ_{n})",
                    r.order
                )));
            }
            r
        };
        let ctx = order::ctx(n)?;
        Ok(Cyclotomic {
            order: n,
            coeffs: ctx.reduce(src.spread(n)),
        })
    }

    /// Dense polynomial of length `n` (a multiple of the order) with the
    /// coefficients moved to exponents `e·n/order`.
    fn spread(&self, n: u64) -> Vec<Rational> {
        let step = (n / self.order) as usize;
        let mut poly = vec![Rational::zero(); n as usize];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[e * step] = c.clone();
            }
        }
        poly
    }

    fn finish(order: u64, poly: Vec<Rational>) -> Result<Self> {
        let ctx = order::ctx(order)?;
        Ok(Cyclotomic {
            order,
            coeffs: ctx.reduce(poly),
        }
        .reduce_conductor())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let n = lcm(self.order, other.order);
        order::ctx(n)?;
        let mut poly = self.spread(n);
        let step = (n / other.order) as usize;
        for (e, c) in other.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[e * step] += c;
            }
        }
        Self::finish(n, poly)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(&r));
        }
        if let Some(r) = self.as_rational() {
            return Ok(other.scale(&r));
        }
        let n = lcm(self.order, other.order);
        order::ctx(n)?;
        let (sa, sb) = (n / self.order, n / other.order);
        let mut poly = vec![Rational::zero(); n as usize];
        let rhs: Vec<(u64, &Rational)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u64 * sb, c))
            .collect();
        for (e, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ea = e as u64 * sa;
            for &(eb, b) in &rhs {
                poly[((ea + eb) % n) as usize] += a * b;
            }
        }
        Self::finish(n, poly)
    }

    /// Multiplies every coefficient by a rational.
    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
        .reduce_conductor()
    }

    /// `σ_k : ζ_n ↦ ζ_n^k` with `n` the stored order.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.order;
        let k = rem(k, n);
        if gcd(k, n) != 1 && n != 1 {
            return Err(Error::NotAUnit {
                k: k as i64,
                order: n,
            });
        }
        if k == 1 || n == 1 {
            return Ok(self.clone());
        }
        let mut poly = vec![Rational::zero(); n as usize];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(e as u64 * k % n) as usize] = c.clone();
            }
        }
        let ctx = order::ctx(n)?;
        Ok(Cyclotomic {
            order: n,
            coeffs: ctx.reduce(poly),
        })
    }

    /// Like [`Cyclotomic::galois`] but with `k` a unit modulo a level `n`
    /// that is a multiple of the conductor.
    pub fn galois_mod(&self, k: u64, n: u64) -> Result<Self> {
        if n != 1 && gcd(k % n, n) != 1 {
            return Err(Error::NotAUnit {
                k: k as i64,
                order: n,
            });
        }
        let x = self.reduce_conductor();
        if n % x.order != 0 {
            return Err(Error::BadLevel(format!(
                "element of conductor {} does not lie in Q(ζ_{n})",
                x.order
            )));
        }
        x.galois((k % x.order) as i64)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let x = self.reduce_conductor();
        let cofactor = x.conjugate_product()?;
        let norm = x
            .try_mul(&cofactor)?
            .as_rational()
            .expect("norm is rational");
        Ok(cofactor.scale(&norm.recip()))
    }

    /// Product of `σ_k(x)` over the units `k ≠ 1` of the stored order.
    fn conjugate_product(&self) -> Result<Self> {
        let mut acc = Self::one();
        for k in units(self.order) {
            if k > 1 {
                acc = acc.try_mul(&self.galois(k as i64)?)?;
            }
        }
        Ok(acc)
    }

    /// Absolute norm `N_{Q(f)/Q}` from the field of its conductor `f`.
    pub fn norm(&self) -> Rational {
        let x = self.reduce_conductor();
        if let Some(r) = x.as_rational() {
            return r;
        }
        let p = x.conjugate_product().expect("conductor within cap");
        (&x * &p).as_rational().expect("norm is rational")
    }

    /// Norm from `Q(ζ_n)` to `Q`, for `n` a multiple of the conductor.
    pub fn norm_from(&self, n: u64) -> Result<Rational> {
        let x = self.reduce_conductor();
        if n % x.order != 0 {
            return Err(Error::BadLevel(format!(
                "element of conductor {} does not lie in Q(ζ_{n})",
                x.order
            )));
        }
        let degree = crate::arith::euler_phi(n) / crate::arith::euler_phi(x.order);
        Ok(num_traits::pow(x.norm(), degree as usize))
    }

    /// Absolute trace from the field of the conductor.
    pub fn trace(&self) -> Rational {
        let x = self.reduce_conductor();
        units(x.order)
            .into_iter()
            .map(|k| x.galois(k as i64).expect("unit"))
            .sum::<Cyclotomic>()
            .as_rational()
            .expect("trace is rational")
    }

    pub fn try_pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.try_inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&b)?;
            }
            e >>= 1;
            if e > 0 {
                b = b.try_mul(&b)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, e: i64) -> Self {
        self.try_pow(e).unwrap_or_else(|err| panic!("{err}"))
    }

    pub fn inv(&self) -> Self {
        self.try_inv().unwrap_or_else(|err| panic!("{err}"))
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) && self.order <= 2 {
            return Some(self.coeffs[0].clone());
        }
        let r = self.reduce_conductor();
        (r.order == 1).then(|| r.coeffs[0].clone())
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Integer value, if the element is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// True when all power-basis coefficients are integers; the power basis
    /// spans the full ring of integers of `Q(ζ_n)`.
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Multiplicative order, if the element is a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        self.as_root_of_unity().map(|r| r.order())
    }

    pub fn is_root_of_unity(&self) -> bool {
        self.as_root_of_unity().is_some()
    }

    /// The element as `e^{2πi a/b}` when it is a root of unity.
    pub fn as_root_of_unity(&self) -> Option<RootOfUnity> {
        if self.is_zero() || !self.is_algebraic_integer() {
            return None;
        }
        let x = self.reduce_conductor();
        // Roots of unity in Q(ζ_f) all have order dividing lcm(2, f).
        let w = lcm(2, x.order);
        let z = x.to_complex();
        if (z.norm() - 1.0).abs() > 1e-6 {
            return None;
        }
        let guess = (z.arg() / std::f64::consts::TAU * w as f64).round() as i64;
        let candidate = RootOfUnity::new(guess, w);
        if candidate.to_cyclotomic() == x {
            return Some(candidate);
        }
        (0..w as i64)
            .map(|k| RootOfUnity::new(k, w))
            .find(|r| r.to_cyclotomic() == x)
    }

    /// Floating-point value, accurate to `digits` decimal places for the
    /// moderate coefficients that occur in practice.
    pub fn complex_eval(&self, digits: u32) -> Result<Complex64> {
        if digits == 0 || digits > MAX_EVAL_DIGITS {
            return Err(Error::OutOfRange(format!(
                "digits must be between 1 and {MAX_EVAL_DIGITS}, got {digits}"
            )));
        }
        Ok(self.to_complex())
    }

    pub fn to_complex(&self) -> Complex64 {
        let n = self.order as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = c.to_f64().unwrap_or(f64::NAN);
            let angle = std::f64::consts::TAU * e as f64 / n;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        Complex64::new(re, im)
    }

    /// `√r` for a rational `r`, as an element of a cyclotomic field. For
    /// `r > 0` the result is the positive root.
    pub fn sqrt_rational(r: &Rational) -> Result<Self> {
        if r.is_zero() {
            return Ok(Self::zero());
        }
        let numer = r.numer().abs();
        let denom = r.denom().clone();
        // √(a/b) = √(ab)/b
        let product = (numer * &denom)
            .to_u64()
            .ok_or_else(|| Error::TooLarge(format!("square root of {r}")))?;
        let mut square = 1u64;
        let mut free = 1u64;
        for (p, e) in factorize(product) {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= p;
            }
        }
        let mut root = Self::from_rational(Rational::new(
            BigInt::from(square),
            denom,
        ));
        for (p, _) in factorize(free) {
            root = root.try_mul(&sqrt_prime(p)?)?;
        }
        if r.is_negative() {
            root = root.try_mul(&Self::zeta(4))?;
        }
        Ok(root)
    }
}

/// Positive square root of a prime via quadratic Gauss sums.
fn sqrt_prime(p: u64) -> Result<Cyclotomic> {
    if p == 2 {
        return Cyclotomic::make(8, [(1, rat(1)), (-1, rat(1))]);
    }
    let terms = (1..p as i64).map(|a| {
        let legendre = if mod_pow(a as u64, (p - 1) / 2, p) == 1 { 1 } else { -1 };
        (a, rat(legendre))
    });
    let g = Cyclotomic::make(p, terms)?;
    if p % 4 == 1 {
        Ok(g)
    } else {
        g.try_mul(&-Cyclotomic::zeta(4))
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = (self.reduce_conductor(), other.reduce_conductor());
        a.order == b.order && a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let r = self.reduce_conductor();
        r.order.hash(state);
        r.coeffs.hash(state);
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<RootOfUnity> for Cyclotomic {
    fn from(r: RootOfUnity) -> Self {
        r.to_cyclotomic()
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl $trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$try(rhs).unwrap_or_else(|err| panic!("{err}"))
            }
        }
        impl $trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
        impl $trait<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$method(&rhs)
            }
        }
    };
}

impl Cyclotomic {
    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.try_mul(&rhs.try_inv()?)
    }
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl<'a> std::iter::Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Cyclotomic {
    fn product<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::one(), |a, b| a * b)
    }
}

/// GAP-style rendering: `E(n)` is `ζ_n`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "E({})", self.order)?,
                (_, false) => write!(f, "{mag}*E({})", self.order)?,
            }
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
