//! Exact polynomial gcd over the rationals by modular images and rational
//! reconstruction, and square-free decomposition on top of it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{IntegerPoly, ZPoly};

const MAX_PRIMES: usize = 400;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes descending from `2^62`.
fn primes() -> impl Iterator<Item = u64> {
    (0..).map(|k| (1u64 << 62) - 1 - 2 * k).filter(|&n| is_prime(n))
}

fn inv_mod(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn reduce(p: &[BigInt], m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    trim(p.iter().map(|c| c.mod_floor(&mb).to_u64().expect("reduced")).collect())
}

fn rem_mod(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = inv_mod(b[db], m);
    while r.len() > db {
        let k = r.len() - 1 - db;
        let c = mul_mod(*r.last().unwrap(), inv, m);
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + m - mul_mod(c, bj, m)) % m;
            }
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn gcd_mod(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem_mod(&a, &b, m);
        a = b;
        b = r;
    }
    let inv = inv_mod(*a.last().expect("nonzero gcd"), m);
    a.iter().map(|&c| mul_mod(c, inv, m)).collect()
}

/// `n / d` with `n = d u (mod m)` and both below `sqrt(m/2)`, if any.
fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

fn integer_coeffs(p: &ZPoly) -> Vec<BigInt> {
    IntegerPoly::from_zpoly(p).coeffs().to_vec()
}

/// Monic greatest common divisor over the rationals; zero only when both
/// inputs are zero.
pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return ZPoly::one();
    }
    let (ia, ib) = (integer_coeffs(a), integer_coeffs(b));
    let leads = ia.last().unwrap() * ib.last().unwrap();
    let mut best: Option<usize> = None;
    let mut modulus = BigInt::one();
    let mut residues: Vec<BigInt> = Vec::new();
    for m in primes().take(MAX_PRIMES) {
        if (&leads % m).is_zero() {
            continue;
        }
        let g = gcd_mod(&reduce(&ia, m), &reduce(&ib, m), m);
        let d = g.len() - 1;
        if d == 0 {
            return ZPoly::one();
        }
        match best {
            Some(bd) if d > bd => continue,
            Some(bd) if d == bd => {
                let mb = BigInt::from(m);
                let minv = BigInt::from(inv_mod((&modulus % m).to_u64().unwrap(), m));
                for (r, &c) in residues.iter_mut().zip(&g) {
                    let diff = (BigInt::from(c) - &*r).mod_floor(&mb);
                    *r += &modulus * ((diff * &minv) % &mb);
                }
                modulus *= &mb;
            }
            _ => {
                best = Some(d);
                modulus = BigInt::from(m);
                residues = g.iter().map(|&c| BigInt::from(c)).collect();
            }
        }
        let cand: Option<Vec<BigRational>> = residues.iter().map(|r| rational_reconstruction(r, &modulus)).collect();
        if let Some(c) = cand {
            let g = ZPoly::new(c);
            if a.div_rem(&g).1.is_zero() && b.div_rem(&g).1.is_zero() {
                return g;
            }
        }
    }
    euclid(a, b)
}

fn euclid(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.div_rem(&b).1;
        a = b;
        b = r.monic();
    }
    a.monic()
}

/// No repeated factor, decided by one modular gcd in the common case.
pub fn is_squarefree(p: &ZPoly) -> bool {
    gcd(p, &p.derivative()).degree().is_none_or(|d| d == 0)
}

/// Yun's algorithm: `p = c * prod_i a_i^i` with each `a_i` square-free and
/// pairwise coprime. Returns the nonconstant `(a_i, i)`, monic.
pub fn squarefree_decomposition(p: &ZPoly) -> Vec<(ZPoly, usize)> {
    let mut out = Vec::new();
    if p.degree().is_none_or(|d| d == 0) {
        return out;
    }
    let dp = p.derivative();
    let a0 = gcd(p, &dp);
    let mut b = p.div_rem(&a0).0;
    let c = dp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().is_some_and(|k| k > 0) {
        let a = gcd(&b, &d);
        let nb = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = &c - &nb.derivative();
        if a.degree().is_some_and(|k| k > 0) {
            out.push((a.monic(), i));
        }
        b = nb;
        i += 1;
    }
    out
}
