//! Table-driven arithmetic in GF(q) for small prime powers.
//!
//! Elements are encoded as integers `0..q`: the base-`p` digits of the code
//! are the coefficients of a polynomial modulo a fixed monic irreducible of
//! degree `e` (`q = p^e`). For prime `q` this is plain residue arithmetic.

use crate::error::{Error, Result};
use crate::qarith::prime_power;

pub const MAX_FIELD_SIZE: u64 = 256;

#[derive(Clone, Debug)]
pub struct Gf {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl Gf {
    pub fn new(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q)
            .ok_or_else(|| Error::Unsupported(format!("q = {q} is not a prime power")))?;
        if q > MAX_FIELD_SIZE {
            return Err(Error::Unsupported(format!(
                "GF({q}) exceeds the supported field size {MAX_FIELD_SIZE}"
            )));
        }
        let p = p as usize;
        let e = e as usize;
        let q = q as usize;
        let modulus = irreducible(p, e);

        let digits = |mut x: usize| -> Vec<usize> {
            let mut d = vec![0; e];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum) as u8;
                mul[a * q + b] = encode(&poly_mulmod(&da, &db, &modulus, p)) as u8;
            }
        }
        let mut neg = vec![0u8; q];
        let mut inv = vec![0u8; q];
        for a in 0..q {
            neg[a] = (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = (1..q)
                    .find(|&b| mul[a * q + b] == 1)
                    .ok_or_else(|| Error::Consistency(format!("no inverse for {a} in GF({q})")))?
                    as u8;
            }
        }
        Ok(Gf {
            q,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `a` must be nonzero.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0);
        self.inv[a as usize]
    }
}

// Coefficient vectors are little-endian.
fn poly_mulmod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let e = modulus.len() - 1;
    let mut prod = vec![0usize; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // modulus is monic of degree e
    for deg in (e..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (t, &m) in modulus.iter().enumerate() {
            let idx = deg - e + t;
            prod[idx] = (prod[idx] + p * p - c * m % p) % p;
        }
    }
    prod.truncate(e.max(1));
    prod.resize(e, 0);
    prod
}

fn poly_rem(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = (1..p).find(|&x| x * b[db] % p == 1).unwrap();
    while r.len() > db {
        let c = r[r.len() - 1] * lead_inv % p;
        let shift = r.len() - 1 - db;
        for (t, &m) in b.iter().enumerate() {
            r[shift + t] = (r[shift + t] + p * p - c * m % p) % p;
        }
        r.pop();
    }
    r
}

/// Monic polynomials of degree `deg` over GF(p), little-endian.
fn monic_polys(p: usize, deg: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..p.pow(deg as u32)).map(move |mut code| {
        let mut c = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            c.push(code % p);
            code /= p;
        }
        c.push(1);
        c
    })
}

/// Lexicographically first monic irreducible of degree `e` over GF(p).
fn irreducible(p: usize, e: usize) -> Vec<usize> {
    if e == 1 {
        return vec![0, 1];
    }
    monic_polys(p, e)
        .find(|f| {
            (1..=e / 2).all(|d| monic_polys(p, d).all(|g| poly_rem(f, &g, p).iter().any(|&c| c != 0)))
        })
        .expect("an irreducible polynomial exists in every degree")
}
