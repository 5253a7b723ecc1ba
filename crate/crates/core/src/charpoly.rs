//! Exact characteristic polynomials of integer matrices.
//!
//! `det(xI - M)` is computed modulo a run of 31-bit primes (Hessenberg
//! reduction plus the Hessenberg recurrence, `O(n^3)` per prime) and lifted by
//! Chinese remaindering. Enough primes are used to exceed twice the bound
//! `(1 + R)^n`, where `R` is the largest absolute row sum; every coefficient is
//! an elementary symmetric function of eigenvalues bounded by `R`.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Result;
use crate::matrix::DenseMatrix;
use crate::poly::IntPolynomial;

static PRIMES: Mutex<Vec<u64>> = Mutex::new(Vec::new());

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The first `count` primes below `2^31`, descending.
fn primes(count: usize) -> Vec<u64> {
    let mut cache = PRIMES.lock().expect("prime cache poisoned");
    let mut candidate = cache.last().map_or((1u64 << 31) - 1, |&p| p - 2);
    while cache.len() < count {
        if is_prime(candidate) {
            cache.push(candidate);
        }
        candidate -= 2;
    }
    cache[..count].to_vec()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Coefficients (low first, monic) of `det(xI - M)` modulo `p`.
fn charpoly_mod(m: &DenseMatrix, p: u64) -> Vec<u64> {
    let n = m.rows();
    let mut h: Vec<u64> = m.entries().iter().map(|&v| v.rem_euclid(p as i64) as u64).collect();
    let at = |r: usize, c: usize| r * n + c;

    // Similarity reduction to upper Hessenberg form.
    for col in 0..n.saturating_sub(2) {
        let Some(piv) = (col + 1..n).find(|&r| h[at(r, col)] != 0) else {
            continue;
        };
        let target = col + 1;
        if piv != target {
            for j in 0..n {
                h.swap(at(piv, j), at(target, j));
            }
            for i in 0..n {
                h.swap(at(i, piv), at(i, target));
            }
        }
        let inv = inv_mod(h[at(target, col)], p);
        for i in col + 2..n {
            let u = h[at(i, col)] * inv % p;
            if u == 0 {
                continue;
            }
            for j in 0..n {
                h[at(i, j)] = (h[at(i, j)] + p - u * h[at(target, j)] % p) % p;
            }
            for j in 0..n {
                h[at(j, target)] = (h[at(j, target)] + u * h[at(j, i)]) % p;
            }
        }
    }

    // polys[k] is the characteristic polynomial of the leading k x k block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let d = h[at(k - 1, k - 1)];
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % p;
            next[i] = (next[i] + p - d * c % p) % p;
        }
        let mut t = 1u64;
        for i in 1..k {
            t = t * h[at(k - i, k - i - 1)] % p;
            let coef = t * h[at(k - i - 1, k - 1)] % p;
            if coef == 0 {
                continue;
            }
            for (j, &c) in polys[k - i - 1].iter().enumerate() {
                next[j] = (next[j] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n + 1 polynomials")
}

/// `det(xI - M)` with exact integer coefficients.
pub fn char_poly(m: &DenseMatrix) -> Result<IntPolynomial> {
    m.ensure_square()?;
    let n = m.rows();
    let bound = BigInt::from(1 + m.max_abs_row_sum()).pow(n as u32) * 2u32;

    let mut modulus = BigInt::one();
    let mut residues = vec![BigInt::zero(); n + 1];
    let mut used = 0;
    while modulus <= bound {
        used += 1;
        let p = *primes(used).last().expect("at least one prime");
        let image = charpoly_mod(m, p);
        let big_p = BigInt::from(p);
        let m_mod_p = (&modulus % &big_p).to_u64().expect("residue fits");
        let m_inv = inv_mod(m_mod_p, p);
        for (r, &a) in residues.iter_mut().zip(&image) {
            let r_mod_p = (&*r % &big_p).to_u64().expect("residue fits");
            let t = (a + p - r_mod_p) % p * m_inv % p;
            *r += &modulus * t;
        }
        modulus *= big_p;
    }
    let half = &modulus >> 1;
    let coeffs = residues.into_iter().map(|r| if r > half { r - &modulus } else { r }).collect();
    Ok(IntPolynomial::new(coeffs))
}
