//! Per-order data for `Q(ζ_n)`: the cyclotomic polynomial, a reduction table
//! for monomials, and the prime-power decomposition used to find conductors.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::Rational;
use crate::arith::{divisors, euler_phi, factorize, mobius, mod_inv};
use crate::error::{Error, Result};

static ORDER_CAP: AtomicU64 = AtomicU64::new(2000);

/// Largest `φ(n)` accepted for any order `n`. Default 2000.
pub fn order_cap() -> u64 {
    ORDER_CAP.load(Ordering::Relaxed)
}

pub fn set_order_cap(cap: u64) {
    ORDER_CAP.store(cap, Ordering::Relaxed);
}

/// Above this many table entries monomials are reduced by long division.
const TABLE_LIMIT: u64 = 4_000_000;

#[derive(Debug)]
pub(crate) struct PrimePowerAxis {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub phi: u64,
    /// `(n/q)^{-1} mod q`, so that `ζ_n^k = Π ζ_q^{k·crt mod q}`.
    pub crt: u64,
}

#[derive(Debug)]
pub(crate) struct OrderCtx {
    pub n: u64,
    pub phi: usize,
    /// Coefficients of Φ_n, low degree first, length φ+1.
    pub cyclo: Vec<i64>,
    /// `table[E - φ]` is `x^E mod Φ_n` for `φ <= E < n`.
    table: Option<Vec<Vec<i64>>>,
    pub axes: Vec<PrimePowerAxis>,
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<OrderCtx>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<OrderCtx>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn ctx(n: u64) -> Result<Arc<OrderCtx>> {
    if n == 0 {
        return Err(Error::InvalidOrder);
    }
    if let Some(c) = cache().read().unwrap().get(&n) {
        return Ok(c.clone());
    }
    let phi = euler_phi(n);
    let cap = order_cap();
    if phi > cap {
        return Err(Error::OrderTooLarge { order: n, phi, cap });
    }
    let built = Arc::new(OrderCtx::build(n));
    cache().write().unwrap().entry(n).or_insert(built.clone());
    Ok(built)
}

/// Φ_n via the Möbius product `Π_{d|n} (x^d - 1)^{μ(n/d)}`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut poly: Vec<i128> = vec![1];
    let divs = divisors(n);
    for &d in &divs {
        if mobius(n / d) == 1 {
            poly = mul_xd_minus_one(&poly, d as usize);
        }
    }
    for &d in &divs {
        if mobius(n / d) == -1 {
            poly = div_xd_minus_one(&poly, d as usize);
        }
    }
    poly.into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect()
}

fn mul_xd_minus_one(p: &[i128], d: usize) -> Vec<i128> {
    let mut out = vec![0i128; p.len() + d];
    for (i, &c) in p.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

fn div_xd_minus_one(p: &[i128], d: usize) -> Vec<i128> {
    let deg = p.len() - 1;
    let mut rem = p.to_vec();
    let mut q = vec![0i128; deg - d + 1];
    for i in (0..=deg - d).rev() {
        q[i] = rem[i + d];
        rem[i + d] = 0;
        rem[i] += q[i];
    }
    debug_assert!(rem.iter().all(|&c| c == 0), "inexact division by x^d - 1");
    q
}

impl OrderCtx {
    fn build(n: u64) -> Self {
        let cyclo = cyclotomic_polynomial(n);
        let phi = cyclo.len() - 1;
        let rows = n.saturating_sub(phi as u64);
        let table = (rows * phi as u64 <= TABLE_LIMIT).then(|| {
            let mut table = Vec::with_capacity(rows as usize);
            if rows > 0 {
                let base: Vec<i64> = cyclo[..phi].iter().map(|c| -c).collect();
                table.push(base.clone());
                for _ in 1..rows {
                    let prev = table.last().unwrap();
                    let top = prev[phi - 1];
                    let mut next = vec![0i64; phi];
                    for j in (1..phi).rev() {
                        next[j] = prev[j - 1];
                    }
                    if top != 0 {
                        for j in 0..phi {
                            next[j] = next[j]
                                .checked_add(top.checked_mul(base[j]).expect("reduction overflow"))
                                .expect("reduction overflow");
                        }
                    }
                    table.push(next);
                }
            }
            table
        });
        let axes = factorize(n)
            .into_iter()
            .map(|(p, e)| {
                let q = p.pow(e);
                PrimePowerAxis {
                    p,
                    e,
                    q,
                    phi: q / p * (p - 1),
                    crt: mod_inv((n / q) % q, q).expect("coprime cofactor"),
                }
            })
            .collect();
        OrderCtx {
            n,
            phi,
            cyclo,
            table,
            axes,
        }
    }

    /// Reduces a dense polynomial whose exponents are already taken mod `n`
    /// (length at most `n`) to its canonical coefficient vector of length φ.
    pub fn reduce(&self, mut poly: Vec<Rational>) -> Vec<Rational> {
        debug_assert!(poly.len() <= self.n as usize);
        let phi = self.phi;
        if poly.len() <= phi {
            poly.resize(phi, Rational::zero());
            return poly;
        }
        match &self.table {
            Some(table) => {
                let (low, high) = poly.split_at_mut(phi);
                for (row, c) in table.iter().zip(high.iter()) {
                    if c.is_zero() {
                        continue;
                    }
                    for (slot, &r) in low.iter_mut().zip(row) {
                        add_scaled(slot, c, r);
                    }
                }
            }
            None => {
                for i in (phi..poly.len()).rev() {
                    if poly[i].is_zero() {
                        continue;
                    }
                    let c = std::mem::replace(&mut poly[i], Rational::zero());
                    for j in 0..phi {
                        add_scaled(&mut poly[i - phi + j], &c, -self.cyclo[j]);
                    }
                }
            }
        }
        poly.truncate(phi);
        poly
    }
}

fn add_scaled(slot: &mut Rational, c: &Rational, r: i64) {
    match r {
        0 => {}
        1 => *slot += c,
        -1 => *slot -= c,
        _ => *slot += c * BigInt::from(r),
    }
}
