//! Signed coronals `chi_M(x) = mu^T (xI - M)^{-1} mu` as exact rational functions.
//!
//! The generic route uses the matrix determinant lemma:
//! `mu^T adj(xI - M) mu = det(xI - M) - det(xI - M - mu mu^T)`, so the
//! numerator is a difference of two characteristic polynomials and the
//! denominator is `det(xI - M)` before reduction.
//!
//! The closed forms cover graphs whose canonical marking is constant and which
//! are net-regular or co-regular, and signed stars. Their preconditions are
//! checked by [`closed_form`]; callers fall back to [`coronal_generic`].

use num_bigint::BigInt;

use crate::charpoly::char_poly;
use crate::error::{Error, Result};
use crate::graph::{MatrixKind, Marking, Sign, SignedGraph};
use crate::matrix::DenseMatrix;
use crate::poly::IntPolynomial;
use crate::rational::RationalFn;

pub fn coronal_generic(m: &DenseMatrix, marks: &Marking) -> Result<RationalFn> {
    m.ensure_square()?;
    if marks.len() != m.rows() {
        return Err(Error::DimensionMismatch(marks.len(), m.rows()));
    }
    let mu = marks.values();
    let mut shifted = m.clone();
    for (i, &a) in mu.iter().enumerate() {
        for (j, &b) in mu.iter().enumerate() {
            shifted.set(i, j, m.get(i, j) + a * b);
        }
    }
    let den = char_poly(m)?;
    let num = &den - &char_poly(&shifted)?;
    RationalFn::new(num, den)
}

/// Coronal of `g`'s matrix of the given kind under its canonical marking.
pub fn graph_coronal(g: &SignedGraph, kind: MatrixKind) -> Result<RationalFn> {
    coronal_generic(&g.matrix(kind), &g.canonical_marking())
}

fn c(v: i64) -> BigInt {
    BigInt::from(v)
}

fn simple_pole(n: usize, pole: i64) -> RationalFn {
    RationalFn::new(IntPolynomial::constant(c(n as i64)), IntPolynomial::linear_root(pole))
        .expect("non-zero denominator")
}

/// `n / (x - k)` for a `k`-net-regular graph with constant marking.
pub fn coronal_a_net_regular(n: usize, k: i64) -> RationalFn {
    simple_pole(n, k)
}

/// `n / (x - r - k)` for an `(r, k)` co-regular graph with constant marking.
pub fn coronal_q_coregular(n: usize, r: usize, k: i64) -> RationalFn {
    simple_pole(n, r as i64 + k)
}

/// `n / (x - r + k)` for an `(r, k)` co-regular graph with constant marking.
pub fn coronal_l_coregular(n: usize, r: usize, k: i64) -> RationalFn {
    simple_pole(n, r as i64 - k)
}

fn check_legs(legs: usize) -> Result<i64> {
    if legs == 0 {
        Err(Error::NotStar)
    } else {
        Ok(legs as i64)
    }
}

/// `((n+1)x + 2n c) / (x^2 - n)` for the star `K_{1,n}` with centre mark `c`.
pub fn coronal_a_star(legs: usize, centre: Sign) -> Result<RationalFn> {
    let n = check_legs(legs)?;
    let num = IntPolynomial::from_i64s(&[2 * n * centre.value(), n + 1]);
    let den = IntPolynomial::from_i64s(&[-n, 0, 1]);
    RationalFn::new(num, den)
}

fn star_laplacian_like(n: i64, sign_term: i64) -> Result<RationalFn> {
    let num = IntPolynomial::from_i64s(&[-(n * n + 1) + sign_term, n + 1]);
    let den = IntPolynomial::from_i64s(&[0, -(n + 1), 1]);
    RationalFn::new(num, den)
}

/// `((n+1)x - (n^2+1) + 2n c) / (x (x - (n+1)))` for the signless Laplacian of a star.
pub fn coronal_q_star(legs: usize, centre: Sign) -> Result<RationalFn> {
    let n = check_legs(legs)?;
    star_laplacian_like(n, 2 * n * centre.value())
}

/// `((n+1)x - (n^2+1) - 2n c) / (x (x - (n+1)))` for the signed Laplacian of a star.
///
/// The centre-mark term enters with the opposite sign to the signless case:
/// for an all-positive star `L mu = 0`, so the coronal must reduce to `(n+1)/x`.
pub fn coronal_l_star(legs: usize, centre: Sign) -> Result<RationalFn> {
    let n = check_legs(legs)?;
    star_laplacian_like(n, -2 * n * centre.value())
}

/// The Laplacian star coronal with the same centre-mark sign as the signless one.
/// Kept only to report where it disagrees with [`coronal_l_star`].
pub fn coronal_l_star_printed(legs: usize, centre: Sign) -> Result<RationalFn> {
    let n = check_legs(legs)?;
    star_laplacian_like(n, 2 * n * centre.value())
}

/// Which closed form applies to a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoronalShape {
    /// Constant canonical marking, regular with net degree `k`.
    CoRegular { n: usize, r: usize, k: i64 },
    /// Signed star with `legs` leaves and the given centre mark.
    Star { legs: usize, centre: Sign },
}

/// Classify `g` for the closed forms; co-regular shapes win over stars (`P_2` is both).
pub fn coronal_shape(g: &SignedGraph) -> Option<CoronalShape> {
    let marking = g.canonical_marking();
    if marking.constant().is_some() {
        if let Some((r, k)) = g.co_regularity().pair() {
            return Some(CoronalShape::CoRegular { n: g.order(), r, k });
        }
    }
    let (centre, legs) = g.as_star()?;
    Some(CoronalShape::Star { legs, centre: marking.get(centre) })
}

/// The closed-form coronal of `g`, when its shape admits one.
///
/// For the adjacency matrix net-regularity with constant marking is enough; the
/// co-regular shape always provides it.
pub fn closed_form(g: &SignedGraph, kind: MatrixKind) -> Option<RationalFn> {
    let shape = coronal_shape(g)?;
    match (shape, kind) {
        (CoronalShape::CoRegular { n, k, .. }, MatrixKind::A) => Some(coronal_a_net_regular(n, k)),
        (CoronalShape::CoRegular { n, r, k }, MatrixKind::Q) => Some(coronal_q_coregular(n, r, k)),
        (CoronalShape::CoRegular { n, r, k }, MatrixKind::L) => Some(coronal_l_coregular(n, r, k)),
        (CoronalShape::Star { legs, centre }, MatrixKind::A) => coronal_a_star(legs, centre).ok(),
        (CoronalShape::Star { legs, centre }, MatrixKind::Q) => coronal_q_star(legs, centre).ok(),
        (CoronalShape::Star { legs, centre }, MatrixKind::L) => coronal_l_star(legs, centre).ok(),
        (_, MatrixKind::D) => None,
    }
}

/// Closed form when available, generic otherwise.
pub fn coronal(g: &SignedGraph, kind: MatrixKind) -> Result<RationalFn> {
    match closed_form(g, kind) {
        Some(r) => Ok(r),
        None => graph_coronal(g, kind),
    }
}
