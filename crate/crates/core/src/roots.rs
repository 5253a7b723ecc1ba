//! Exact real-root isolation for real-rooted integer polynomials.
//!
//! Square-free parts from Yun's decomposition are isolated with Sturm
//! sequences on dyadic rational intervals, then refined by exact sign
//! bisection. Floating point appears only when a bracket is reported.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::spectrum::Spectrum;

/// Brackets are narrowed below `2^-PRECISION_BITS` before reporting.
const PRECISION_BITS: u32 = 46;

/// A dyadic rational `num / 2^exp`.
#[derive(Clone, Debug)]
struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    fn to_f64(&self) -> f64 {
        self.num.to_f64().unwrap_or(f64::NAN) / 2f64.powi(self.exp as i32)
    }
}

/// Sign of `p(a / 2^e)` computed exactly.
fn sign_at(p: &IntPolynomial, x: &Dyadic) -> i8 {
    let Some(d) = p.degree() else { return 0 };
    let coeffs = p.coeffs();
    let mut h = coeffs[d].clone();
    for k in (0..d).rev() {
        h = h * &x.num + (&coeffs[k] << (x.exp as usize * (d - k)));
    }
    if h.is_positive() {
        1
    } else if h.is_negative() {
        -1
    } else {
        0
    }
}

fn positive_content_part(p: IntPolynomial) -> IntPolynomial {
    let c = p.content();
    if c.is_zero() || c.is_one() {
        p
    } else {
        p.div_exact(&IntPolynomial::constant(c)).expect("content divides")
    }
}

fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_constant() {
            break;
        }
        let r = -seq[n - 2].positive_pseudo_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(positive_content_part(r));
    }
    seq
}

fn variations(seq: &[IntPolynomial], x: &Dyadic) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let s = sign_at(p, x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Smallest `b` with every root strictly inside `(-2^b, 2^b)` (Cauchy bound).
fn root_bound_bits(p: &IntPolynomial) -> u32 {
    let d = p.degree().unwrap_or(0);
    let lc = p.leading().abs();
    let max = p.coeffs()[..d].iter().map(|c| c.abs()).max().unwrap_or_default();
    let bound = BigInt::one() + num_integer::Integer::div_ceil(&max, &lc) + BigInt::one();
    bound.bits() as u32
}

fn midpoint(lo: &Dyadic, hi: &Dyadic) -> (Dyadic, Dyadic, Dyadic) {
    let exp = lo.exp + 1;
    let lo2 = Dyadic { num: &lo.num << 1, exp };
    let hi2 = Dyadic { num: &hi.num << 1, exp };
    let mid = Dyadic { num: &lo.num + &hi.num, exp };
    (lo2, mid, hi2)
}

/// Narrow a bracket `(lo, hi]` holding exactly one root of square-free `p`.
fn refine(p: &IntPolynomial, seq: &[IntPolynomial], mut lo: Dyadic, mut hi: Dyadic) -> f64 {
    if sign_at(p, &hi) == 0 {
        return hi.to_f64();
    }
    while sign_at(p, &lo) == 0 {
        let (l, m, h) = midpoint(&lo, &hi);
        if variations(seq, &l) - variations(seq, &m) == 1 {
            (lo, hi) = (l, m);
        } else {
            (lo, hi) = (m, h);
        }
        if sign_at(p, &hi) == 0 {
            return hi.to_f64();
        }
    }
    let s_lo = sign_at(p, &lo);
    while hi.exp < PRECISION_BITS || (&hi.num - &lo.num) > BigInt::one() {
        let (l, m, h) = midpoint(&lo, &hi);
        let s = sign_at(p, &m);
        if s == 0 {
            return m.to_f64();
        }
        if s == s_lo {
            (lo, hi) = (m, h);
        } else {
            (lo, hi) = (l, m);
        }
        if hi.exp >= PRECISION_BITS + 16 {
            break;
        }
    }
    0.5 * (lo.to_f64() + hi.to_f64())
}

fn isolate(
    p: &IntPolynomial,
    seq: &[IntPolynomial],
    lo: Dyadic,
    hi: Dyadic,
    v_lo: usize,
    v_hi: usize,
    out: &mut Vec<f64>,
) {
    let count = v_lo - v_hi;
    match count {
        0 => {}
        1 => out.push(refine(p, seq, lo, hi)),
        _ => {
            let (l, m, h) = midpoint(&lo, &hi);
            let v_m = variations(seq, &m);
            isolate(p, seq, l, m.clone(), v_lo, v_m, out);
            isolate(p, seq, m, h, v_m, v_hi, out);
        }
    }
}

/// Real roots of a square-free polynomial, ascending.
fn square_free_roots(p: &IntPolynomial) -> Vec<f64> {
    let seq = sturm_sequence(p);
    let b = root_bound_bits(p) as usize;
    let lo = Dyadic { num: -(BigInt::one() << b), exp: 0 };
    let hi = Dyadic { num: BigInt::one() << b, exp: 0 };
    let (v_lo, v_hi) = (variations(&seq, &lo), variations(&seq, &hi));
    let mut out = Vec::new();
    isolate(p, &seq, lo, hi, v_lo, v_hi, &mut out);
    out
}

/// All roots of `p` with multiplicity. Fails if `p` has non-real roots.
pub fn real_root_values(p: &IntPolynomial) -> Result<Vec<f64>> {
    let degree = p.degree().ok_or_else(|| Error::Precondition("zero polynomial".into()))?;
    let mut roots = Vec::with_capacity(degree);
    for (factor, mult) in p.square_free_decomposition() {
        for r in square_free_roots(&factor) {
            roots.extend(std::iter::repeat_n(r, mult));
        }
    }
    if roots.len() != degree {
        return Err(Error::NonRealRoots { degree, found: roots.len() });
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

/// Roots of a real-rooted polynomial as a clustered spectrum.
pub fn real_roots(p: &IntPolynomial) -> Result<Spectrum> {
    Ok(Spectrum::from_values(real_root_values(p)?))
}
