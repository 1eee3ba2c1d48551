//! Exact q-analogue arithmetic and the quantum characteristic.
//!
//! Everything here takes a concrete integer `q`. The value `q = 1` is the
//! "field with one element": `|i|_1 = i`, the q-factorial is the ordinary
//! factorial and the Gaussian binomial is the ordinary binomial, so the
//! Boolean lattice and the projective spaces share one code path.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    (2..=limit).filter(|&n| is_prime(n)).collect()
}

/// Returns `(p, e)` with `q = p^e` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// The prime field GF(p) over which homology and multiplicities are taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldSpec {
    p: u32,
}

impl FieldSpec {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::Argument(format!("{p} is not a prime")));
        }
        Ok(FieldSpec { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Fails when the characteristic divides `q`.
    pub fn check_coprime(&self, q: u64) -> Result<()> {
        if q > 1 && q.is_multiple_of(self.p as u64) {
            return Err(Error::Incompatible(format!(
                "characteristic {} divides q = {q}",
                self.p
            )));
        }
        Ok(())
    }
}

impl TryFrom<u32> for FieldSpec {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        FieldSpec::new(p)
    }
}

impl From<FieldSpec> for u32 {
    fn from(f: FieldSpec) -> u32 {
        f.p
    }
}

/// `|i|_q = 1 + q + ... + q^(i-1)`.
pub fn q_int(i: u64, q: u64) -> Result<BigUint> {
    if i < 1 || q < 1 {
        return Err(Error::Argument(format!(
            "q_int needs i >= 1 and q >= 1, got i = {i}, q = {q}"
        )));
    }
    Ok(q_int_unchecked(i, q))
}

fn q_int_unchecked(i: u64, q: u64) -> BigUint {
    if q == 1 {
        return BigUint::from(i);
    }
    let q = BigUint::from(q);
    let mut acc = BigUint::zero();
    let mut power = BigUint::one();
    for _ in 0..i {
        acc += &power;
        power *= &q;
    }
    acc
}

/// `(i!)_q = |1|_q |2|_q ... |i|_q`, with `(0!)_q = 1`.
pub fn q_factorial(i: u64, q: u64) -> Result<BigUint> {
    if q < 1 {
        return Err(Error::Argument(format!("q must be >= 1, got {q}")));
    }
    Ok((1..=i).map(|t| q_int_unchecked(t, q)).product())
}

/// Number of `k`-subspaces of `GF(q)^n` (or `k`-subsets of an `n`-set for `q = 1`).
pub fn gauss_binom(n: u64, k: i64, q: u64) -> Result<BigUint> {
    if q < 1 {
        return Err(Error::Argument(format!("q must be >= 1, got {q}")));
    }
    if k < 0 || k as u64 > n {
        return Ok(BigUint::zero());
    }
    let k = k as u64;
    let k = k.min(n - k);
    // (n!)_q / ((k!)_q ((n-k)!)_q), cancelled down to the top k factors.
    let num: BigUint = (n - k + 1..=n).map(|t| q_int_unchecked(t, q)).product();
    let den: BigUint = (1..=k).map(|t| q_int_unchecked(t, q)).product();
    Ok(num / den)
}

/// `|i|_q mod p`.
pub fn q_int_mod(i: u64, q: u64, p: u64) -> u64 {
    let q = q % p;
    let mut acc = 0u64;
    let mut power = 1 % p;
    for _ in 0..i {
        acc = (acc + power) % p;
        power = power * q % p;
    }
    acc
}

/// `(i!)_q mod p`.
pub fn q_factorial_mod(i: u64, q: u64, p: u64) -> u64 {
    (1..=i).fold(1 % p, |acc, t| acc * q_int_mod(t, q, p) % p)
}

/// The quantum characteristic `pi(p, q)`: least `pi > 0` with `|pi|_q = 0 mod p`.
///
/// Computed by direct search on the definition. For `q = 1` this is `p`.
pub fn quantum_char(p: u64, q: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::Argument(format!("{p} is not a prime")));
    }
    if q < 1 {
        return Err(Error::Argument(format!("q must be >= 1, got {q}")));
    }
    if q > 1 && q.is_multiple_of(p) {
        return Err(Error::Incompatible(format!("p = {p} divides q = {q}")));
    }
    let qm = q % p;
    let mut acc = 0u64;
    let mut power = 1u64;
    // pi <= p always holds: either q = 1 mod p and pi = p, or pi divides p - 1.
    for pi in 1..=p {
        acc = (acc + power) % p;
        if acc == 0 {
            return Ok(pi);
        }
        power = power * qm % p;
    }
    Err(Error::Consistency(format!(
        "no quantum characteristic found for p = {p}, q = {q} within {p} steps"
    )))
}

/// Number-theoretic route: `p` when `q = 1 mod p`, otherwise the order of `q` mod `p`.
pub fn quantum_char_by_order(p: u64, q: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::Argument(format!("{p} is not a prime")));
    }
    if q > 1 && q.is_multiple_of(p) {
        return Err(Error::Incompatible(format!("p = {p} divides q = {q}")));
    }
    let qm = q % p;
    if qm == 1 % p {
        return Ok(p);
    }
    let mut order = 1;
    let mut power = qm;
    while power != 1 {
        power = power * qm % p;
        order += 1;
    }
    Ok(order)
}
