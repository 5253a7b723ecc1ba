//! Spectra of the corona three ways: numerically on the built matrix, as
//! roots of characteristic polynomials assembled from the factors, and from
//! closed-form eigenvalue formulas for co-regular and star second factors.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::charpoly::char_poly;
use crate::corona::{corona_block_matrix, neighbourhood_corona};
use crate::coronal::{coronal_shape, graph_coronal, CoronalShape};
use crate::eigen::{eig_symmetric, jacobi_eigenvalues};
use crate::error::{Error, Result};
use crate::graph::{MatrixKind, Sign, SignedGraph};
use crate::matrix::DenseMatrix;
use crate::poly::{resultant, IntPolynomial};
use crate::roots::real_roots;
use crate::spectrum::{Spectrum, CLUSTER_TOL};

/// Agreement tolerance between spectra computed by different methods.
pub const AGREEMENT_TOL: f64 = 1e-6;

/// Default tolerance of [`check_cospectral`].
pub const COSPECTRAL_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Numeric,
    Theorem,
    Proposition,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Numeric => "numeric",
            Method::Theorem => "theorem",
            Method::Proposition => "proposition",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "numeric" => Ok(Method::Numeric),
            "theorem" => Ok(Method::Theorem),
            "proposition" => Ok(Method::Proposition),
            _ => Err(format!("unknown method `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiscrepancyKind {
    /// Two computations that must agree did not.
    CrossCheck,
    /// A formula as printed disagrees with its validated form; informational.
    PrintedFormula,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub kind: DiscrepancyKind,
    pub id: String,
    pub detail: String,
}

impl Discrepancy {
    pub fn cross_check(id: &str, detail: impl Into<String>) -> Self {
        Discrepancy { kind: DiscrepancyKind::CrossCheck, id: id.into(), detail: detail.into() }
    }

    pub fn printed(id: &str, detail: impl Into<String>) -> Self {
        Discrepancy { kind: DiscrepancyKind::PrintedFormula, id: id.into(), detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub method: Method,
    pub spectrum: Spectrum,
    pub discrepancies: Vec<Discrepancy>,
}

impl SpectrumReport {
    pub fn has_cross_check_failures(&self) -> bool {
        self.discrepancies.iter().any(|d| d.kind == DiscrepancyKind::CrossCheck)
    }
}

fn require_spectral_kind(kind: MatrixKind) -> Result<()> {
    match kind {
        MatrixKind::D => Err(Error::Precondition("spectra are defined for A, L and Q".into())),
        _ => Ok(()),
    }
}

fn require_regular(g1: &SignedGraph) -> Result<usize> {
    g1.regular_degree().ok_or(Error::NotRegular)
}

/// Coronal `p/q` of `g2` and the cofactor `f(M2)/q`.
fn coronal_parts(g2: &SignedGraph, kind: MatrixKind) -> Result<(IntPolynomial, IntPolynomial, IntPolynomial)> {
    let f2 = char_poly(&g2.matrix(kind))?;
    let chi = graph_coronal(g2, kind)?;
    let q = chi.denominator().clone();
    let cofactor = f2.div_exact(&q).expect("coronal denominator divides the characteristic polynomial");
    Ok((chi.numerator().clone(), q, cofactor))
}

fn as_constants(p: &IntPolynomial) -> Vec<IntPolynomial> {
    p.coeffs().iter().map(|c| IntPolynomial::constant(c.clone())).collect()
}

/// `f(A(G1*G2); x) = g(x)^n1 * prod_i (q(x)(x - l_i) - p(x) l_i^2)` with
/// `chi_A(G2) = p/q`, `g = f(A(G2))/q`, the product running over the
/// eigenvalues `l_i` of `A(G1)` and evaluated exactly as a resultant.
pub fn charpoly_a_corona(g1: &SignedGraph, g2: &SignedGraph) -> Result<IntPolynomial> {
    if g1.order() == 0 || g2.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (p, q, g) = coronal_parts(g2, MatrixKind::A)?;
    let f1 = char_poly(&g1.matrix(MatrixKind::A))?;
    let term = [&q * &IntPolynomial::x(), -q.clone(), -p];
    Ok(&g.pow(g1.order()) * &resultant(&as_constants(&f1), &term))
}

/// Shared assembly for `Q` and `L` with an `r1`-regular first factor:
/// `f(M2; x-r1)^n1/q_s^n1 * prod_i (q_s (x - n2 r1 - g_i) - p_s (g_i - r1)^2)`
/// where `p_s/q_s` is the coronal of `M2` at `x - r1` and `g_i` runs over the
/// eigenvalues of `M1`.
fn charpoly_laplacian_like(g1: &SignedGraph, g2: &SignedGraph, kind: MatrixKind) -> Result<IntPolynomial> {
    if g1.order() == 0 || g2.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let r1 = require_regular(g1)? as i64;
    let n2 = g2.order() as i64;
    let (p, q, g) = coronal_parts(g2, kind)?;
    let (p, q, g) = (p.shift(-r1), q.shift(-r1), g.shift(-r1));
    let f1 = char_poly(&g1.matrix(kind))?;
    let r1c = IntPolynomial::from_i64s(&[r1]);
    let c0 = &(&q * &IntPolynomial::from_i64s(&[-n2 * r1, 1])) - &(&p * &IntPolynomial::from_i64s(&[r1 * r1]));
    let c1 = &(&p * &(&r1c + &r1c)) - &q;
    let c2 = -p;
    Ok(&g.pow(g1.order()) * &resultant(&as_constants(&f1), &[c0, c1, c2]))
}

pub fn charpoly_q_corona(g1: &SignedGraph, g2: &SignedGraph) -> Result<IntPolynomial> {
    charpoly_laplacian_like(g1, g2, MatrixKind::Q)
}

pub fn charpoly_l_corona(g1: &SignedGraph, g2: &SignedGraph) -> Result<IntPolynomial> {
    charpoly_laplacian_like(g1, g2, MatrixKind::L)
}

pub fn charpoly_corona(g1: &SignedGraph, g2: &SignedGraph, kind: MatrixKind) -> Result<IntPolynomial> {
    match kind {
        MatrixKind::A => charpoly_a_corona(g1, g2),
        MatrixKind::Q => charpoly_q_corona(g1, g2),
        MatrixKind::L => charpoly_l_corona(g1, g2),
        MatrixKind::D => Err(Error::Precondition("spectra are defined for A, L and Q".into())),
    }
}

/// Roots of a monic cubic `x^3 + a2 x^2 + a1 x + a0` assumed to be real,
/// ascending. Trigonometric form followed by Newton polishing.
pub fn solve_real_cubic(a2: f64, a1: f64, a0: f64) -> [f64; 3] {
    let shift = a2 / 3.0;
    let p = a1 - a2 * shift;
    let q = 2.0 * shift * shift * shift - a1 * shift + a0;
    let scale = 1.0 + a2.abs() + a1.abs().sqrt() + a0.abs().cbrt();
    let mut roots = if p.abs() <= 1e-14 * scale * scale {
        let t = (-q).cbrt();
        [t, t, t]
    } else if p < 0.0 {
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        let tau = 2.0 * std::f64::consts::PI / 3.0;
        [m * theta.cos(), m * (theta - tau).cos(), m * (theta + tau).cos()]
    } else {
        // one real root; real-rootedness is the caller's contract
        let disc = (q * q / 4.0 + p * p * p / 27.0).sqrt();
        let t = (-q / 2.0 + disc).cbrt() + (-q / 2.0 - disc).cbrt();
        [t, t, t]
    };
    for r in roots.iter_mut() {
        *r -= shift;
        for _ in 0..4 {
            let f = ((*r + a2) * *r + a1) * *r + a0;
            let df = (3.0 * *r + 2.0 * a2) * *r + a1;
            if df.abs() < 1e-300 {
                break;
            }
            let step = f / df;
            if !step.is_finite() || step.abs() > 1e-6 * (1.0 + r.abs()) {
                break;
            }
            *r -= step;
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

fn quadratic_pair(sum: f64, disc: f64) -> [f64; 2] {
    let root = disc.max(0.0).sqrt();
    [(sum - root) / 2.0, (sum + root) / 2.0]
}

/// Adjacency spectrum of `G1*G2` for a co-regular `G2` with constant marking
/// and net degree `k`: `(a + k +- sqrt((a-k)^2 + 4 n2 a^2))/2` for each
/// eigenvalue `a` of `G1`, each eigenvalue `b != k` of `G2` with multiplicity
/// `n1`, and `k` with multiplicity `n1 (p-1)` where `p` is its multiplicity in `G2`.
pub fn spectrum_a_coregular(spec1: &Spectrum, n2: usize, k: i64, spec2: &Spectrum) -> Spectrum {
    let k = k as f64;
    let n1 = spec1.total();
    let mut pairs = Vec::new();
    for e in spec1.pairs() {
        let a = e.value;
        for x in quadratic_pair(a + k, (a - k).powi(2) + 4.0 * n2 as f64 * a * a) {
            pairs.push((x, e.multiplicity));
        }
    }
    pairs.extend(pole_split(spec2, k, 0.0, n1));
    Spectrum::from_pairs(pairs)
}

/// Eigenvalues `b + offset` of `spec2` with multiplicity `n1` each, except the
/// pole `b = pole` which keeps multiplicity `n1 (p - 1)`.
fn pole_split(spec2: &Spectrum, pole: f64, offset: f64, n1: usize) -> Vec<(f64, usize)> {
    let p = spec2.multiplicity_of(pole, CLUSTER_TOL);
    let mut pairs: Vec<(f64, usize)> = spec2
        .pairs()
        .iter()
        .filter(|e| (e.value - pole).abs() > CLUSTER_TOL)
        .map(|e| (e.value + offset, n1 * e.multiplicity))
        .collect();
    pairs.push((pole + offset, n1 * p.saturating_sub(1)));
    pairs
}

/// Adjacency spectrum of `G1*K_{1,n}` with centre mark `c`: `0` with
/// multiplicity `n1 (n-1)` and the roots of
/// `x^3 - a x^2 - ((n+1) a^2 + n) x + n a (1 - 2 c a)` for each eigenvalue `a`.
pub fn spectrum_a_star(spec1: &Spectrum, n: usize, centre: Sign) -> Spectrum {
    let nf = n as f64;
    let c = centre.value() as f64;
    let mut pairs = vec![(0.0, spec1.total() * n.saturating_sub(1))];
    for e in spec1.pairs() {
        let a = e.value;
        let roots = solve_real_cubic(-a, -((nf + 1.0) * a * a + nf), nf * a * (1.0 - 2.0 * c * a));
        pairs.extend(roots.iter().map(|&x| (x, e.multiplicity)));
    }
    Spectrum::from_pairs(pairs)
}

/// Shared shape of the co-regular `Q`/`L` formulas: the coronal of `M2` is
/// `n2/(x - pole)`; `spec1`, `spec2` are spectra of `M1`, `M2`.
fn coregular_laplacian_like(spec1: &Spectrum, r1: usize, n2: usize, pole: f64, spec2: &Spectrum, printed_pole: Option<f64>) -> Spectrum {
    let (r1f, n2f) = (r1 as f64, n2 as f64);
    let n1 = spec1.total();
    let big_p = r1f + pole;
    let mut pairs = Vec::new();
    for e in spec1.pairs() {
        let a = e.value;
        let disc = (big_p - r1f * n2f - a).powi(2) + 4.0 * n2f * (a - r1f).powi(2);
        for x in quadratic_pair(big_p + r1f * n2f + a, disc) {
            pairs.push((x, e.multiplicity));
        }
    }
    let mut rest = pole_split(spec2, pole, r1f, n1);
    if let Some(v) = printed_pole {
        rest.last_mut().expect("pole entry").0 = v;
    }
    pairs.extend(rest);
    Spectrum::from_pairs(pairs)
}

/// Signless Laplacian spectrum of `G1*G2` for `r1`-regular `G1` and `(r2, k2)`
/// co-regular `G2` with constant marking. The repeated eigenvalue sits at the
/// pole `r1 + r2 + k2` of the shifted coronal.
pub fn spectrum_q_coregular(specq1: &Spectrum, r1: usize, n2: usize, r2: usize, k2: i64, specq2: &Spectrum) -> Spectrum {
    coregular_laplacian_like(specq1, r1, n2, r2 as f64 + k2 as f64, specq2, None)
}

/// As [`spectrum_q_coregular`] but with the repeated eigenvalue placed at `2 r2 + k2`.
pub fn spectrum_q_coregular_printed(specq1: &Spectrum, r1: usize, n2: usize, r2: usize, k2: i64, specq2: &Spectrum) -> Spectrum {
    let printed = 2.0 * r2 as f64 + k2 as f64;
    coregular_laplacian_like(specq1, r1, n2, r2 as f64 + k2 as f64, specq2, Some(printed))
}

/// Laplacian analogue of [`spectrum_q_coregular`]: the coronal pole is `r2 - k2`,
/// the repeated eigenvalue `r1 + r2 - k2`.
pub fn spectrum_l_coregular(specl1: &Spectrum, r1: usize, n2: usize, r2: usize, k2: i64, specl2: &Spectrum) -> Spectrum {
    coregular_laplacian_like(specl1, r1, n2, r2 as f64 - k2 as f64, specl2, None)
}

/// As [`spectrum_l_coregular`] but with multiplicity counted at `r2 + k2` and the
/// repeated eigenvalue placed at `2 r2 + k2`.
pub fn spectrum_l_coregular_printed(specl1: &Spectrum, r1: usize, n2: usize, r2: usize, k2: i64, specl2: &Spectrum) -> Spectrum {
    let (r1f, n2f) = (r1 as f64, n2 as f64);
    let pole = r2 as f64 - k2 as f64;
    let n1 = specl1.total();
    let mut pairs = Vec::new();
    for e in specl1.pairs() {
        let a = e.value;
        let disc = (r1f + pole - r1f * n2f - a).powi(2) + 4.0 * n2f * (r1f - a).powi(2);
        for x in quadratic_pair(r1f + pole + r1f * n2f + a, disc) {
            pairs.push((x, e.multiplicity));
        }
    }
    let p = specl2.multiplicity_of(r2 as f64 + k2 as f64, CLUSTER_TOL);
    pairs.extend(
        specl2
            .pairs()
            .iter()
            .filter(|e| (e.value - pole).abs() > CLUSTER_TOL)
            .map(|e| (e.value + r1f, n1 * e.multiplicity)),
    );
    pairs.push((2.0 * r2 as f64 + k2 as f64, n1 * p.saturating_sub(1)));
    Spectrum::from_pairs(pairs)
}

/// Cubic `(x - n2 r1 - a)(x - r1)(x - r1 - n - 1) - w ((n+1)(x - r1) + kappa)`,
/// `w = (a - r1)^2`, shared by the star formulas; `kappa` is the constant of
/// the star coronal's numerator.
fn star_cubic_roots(a: f64, r1: f64, n: f64, kappa: f64, n2r1: f64) -> [f64; 3] {
    let (aa, s, t) = (n2r1 + a, r1, r1 + n + 1.0);
    let w = (a - r1).powi(2);
    let big_n = n + 1.0;
    solve_real_cubic(
        -(aa + s + t),
        aa * s + aa * t + s * t - w * big_n,
        -aa * s * t + w * big_n * s - w * kappa,
    )
}

fn star_laplacian_like(spec1: &Spectrum, r1: usize, n: usize, kappa: f64, n2r1: f64) -> Spectrum {
    let (r1f, nf) = (r1 as f64, n as f64);
    let mut pairs = vec![(1.0 + r1f, spec1.total() * n.saturating_sub(1))];
    for e in spec1.pairs() {
        let roots = star_cubic_roots(e.value, r1f, nf, kappa, n2r1);
        pairs.extend(roots.iter().map(|&x| (x, e.multiplicity)));
    }
    Spectrum::from_pairs(pairs)
}

/// Signless Laplacian spectrum of `G1*K_{1,n}` for `r1`-regular `G1`:
/// `1 + r1` with multiplicity `n1 (n-1)` and three cubic roots per eigenvalue
/// of `Q(G1)`, using `n2 = n + 1` copies' worth of degree shift.
pub fn spectrum_q_star(specq1: &Spectrum, r1: usize, n: usize, centre: Sign) -> Spectrum {
    let nf = n as f64;
    let kappa = -(nf * nf + 1.0) + 2.0 * nf * centre.value() as f64;
    star_laplacian_like(specq1, r1, n, kappa, (nf + 1.0) * r1 as f64)
}

/// Laplacian analogue of [`spectrum_q_star`]; the centre mark enters the
/// coronal with the opposite sign.
pub fn spectrum_l_star(specl1: &Spectrum, r1: usize, n: usize, centre: Sign) -> Spectrum {
    let nf = n as f64;
    let kappa = -(nf * nf + 1.0) - 2.0 * nf * centre.value() as f64;
    star_laplacian_like(specl1, r1, n, kappa, (nf + 1.0) * r1 as f64)
}

/// The star cubic with expanded coefficients exactly as printed for both the
/// `Q` and `L` cases (degree shift `n r1`, centre term `-2 n c` in the constant).
pub fn star_cubic_printed(a: f64, r1: usize, n: usize, centre: Sign) -> [f64; 3] {
    let (r, nf, c) = (r1 as f64, n as f64, centre.value() as f64);
    let w = (a - r).powi(2);
    let a2 = -(r * (nf + 2.0) + (nf + 1.0) + a);
    let a1 = r * (2.0 * nf + 1.0) * (r + 1.0) + nf * nf * r + (2.0 * r + nf + 1.0) * a - (nf + 1.0) * w;
    let a0 = -nf * r.powi(3) - (nf + 1.0) * nf * r * r - r * r * a - (nf + 1.0) * r * a
        + (r * (nf + 1.0) + (nf * nf + 1.0) - 2.0 * nf * c) * w;
    solve_real_cubic(a2, a1, a0)
}

/// The star formula as printed (shared by `Q` and `L`).
pub fn spectrum_star_printed(spec1: &Spectrum, r1: usize, n: usize, centre: Sign) -> Spectrum {
    let mut pairs = vec![(1.0 + r1 as f64, spec1.total() * n.saturating_sub(1))];
    for e in spec1.pairs() {
        pairs.extend(star_cubic_printed(e.value, r1, n, centre).iter().map(|&x| (x, e.multiplicity)));
    }
    Spectrum::from_pairs(pairs)
}

/// Equal spectra within `tol`, compared entrywise after sorting. Matrices of
/// different order, non-square or non-symmetric matrices are never cospectral.
pub fn check_cospectral(m1: &DenseMatrix, m2: &DenseMatrix, tol: f64) -> bool {
    cospectral_deviation(m1, m2).is_some_and(|d| d <= tol)
}

/// Largest gap between sorted eigenvalues, `None` if the matrices are not
/// comparable symmetric matrices of one order.
pub fn cospectral_deviation(m1: &DenseMatrix, m2: &DenseMatrix) -> Option<f64> {
    if !(m1.is_square() && m2.is_square() && m1.rows() == m2.rows()) {
        return None;
    }
    if !(m1.is_symmetric() && m2.is_symmetric()) {
        return None;
    }
    let a = jacobi_eigenvalues(&m1.to_f64(), m1.rows());
    let b = jacobi_eigenvalues(&m2.to_f64(), m2.rows());
    Some(a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
}

/// Proposition-path spectrum and any printed-formula deviations it exposes.
pub fn proposition_spectrum(g1: &SignedGraph, g2: &SignedGraph, kind: MatrixKind) -> Result<(Spectrum, Vec<Discrepancy>)> {
    require_spectral_kind(kind)?;
    if g1.order() == 0 || g2.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let shape = coronal_shape(g2).ok_or_else(|| {
        Error::Precondition("second factor must be co-regular with constant marking, or a star".into())
    })?;
    let spec1 = eig_symmetric(&g1.matrix(kind))?;
    let spec2 = eig_symmetric(&g2.matrix(kind))?;
    let n2 = g2.order();
    let mut notes = Vec::new();
    let spectrum = match (kind, shape) {
        (MatrixKind::A, CoronalShape::CoRegular { k, .. }) => spectrum_a_coregular(&spec1, n2, k, &spec2),
        (MatrixKind::A, CoronalShape::Star { legs, centre }) => spectrum_a_star(&spec1, legs, centre),
        (MatrixKind::Q, CoronalShape::CoRegular { r, k, .. }) => {
            let r1 = require_regular(g1)?;
            let s = spectrum_q_coregular(&spec1, r1, n2, r, k, &spec2);
            let printed = spectrum_q_coregular_printed(&spec1, r1, n2, r, k, &spec2);
            compare_printed(&mut notes, "q-coregular-repeated-eigenvalue", &s, &printed,
                "repeated eigenvalue printed as 2*r2 + k2; the shifted coronal's pole is r1 + r2 + k2");
            s
        }
        (MatrixKind::L, CoronalShape::CoRegular { r, k, .. }) => {
            let r1 = require_regular(g1)?;
            let s = spectrum_l_coregular(&spec1, r1, n2, r, k, &spec2);
            let printed = spectrum_l_coregular_printed(&spec1, r1, n2, r, k, &spec2);
            compare_printed(&mut notes, "l-coregular-repeated-eigenvalue", &s, &printed,
                "repeated eigenvalue printed as 2*r2 + k2 with multiplicity taken at r2 + k2; the pole is r1 + r2 - k2 at r2 - k2");
            s
        }
        (MatrixKind::Q, CoronalShape::Star { legs, centre }) => {
            let r1 = require_regular(g1)?;
            let s = spectrum_q_star(&spec1, r1, legs, centre);
            let printed = spectrum_star_printed(&spec1, r1, legs, centre);
            compare_printed(&mut notes, "q-star-cubic", &s, &printed,
                "printed cubic shifts by n*r1 instead of n2*r1 = (n+1)*r1");
            s
        }
        (MatrixKind::L, CoronalShape::Star { legs, centre }) => {
            let r1 = require_regular(g1)?;
            let s = spectrum_l_star(&spec1, r1, legs, centre);
            let printed = spectrum_star_printed(&spec1, r1, legs, centre);
            compare_printed(&mut notes, "l-star-cubic", &s, &printed,
                "printed cubic shifts by n*r1 instead of (n+1)*r1 and carries the signless centre-mark sign");
            s
        }
        (MatrixKind::D, _) => unreachable!("rejected above"),
    };
    Ok((spectrum, notes))
}

fn compare_printed(notes: &mut Vec<Discrepancy>, id: &str, good: &Spectrum, printed: &Spectrum, why: &str) {
    if !printed.approx_eq(good, AGREEMENT_TOL) {
        notes.push(Discrepancy::printed(id, format!("{why}: printed {printed}, validated {good}")));
    }
}

pub fn numeric_spectrum(g1: &SignedGraph, g2: &SignedGraph, kind: MatrixKind) -> Result<Spectrum> {
    require_spectral_kind(kind)?;
    eig_symmetric(&neighbourhood_corona(g1, g2)?.graph.matrix(kind))
}

pub fn theorem_spectrum(g1: &SignedGraph, g2: &SignedGraph, kind: MatrixKind) -> Result<Spectrum> {
    real_roots(&charpoly_corona(g1, g2, kind)?)
}

/// Spectrum of `G1*G2` by the chosen method, cross-checked against the
/// numeric oracle on the built corona and, for the theorem path, the exact
/// characteristic polynomial of the block matrix.
pub fn corona_spectrum(g1: &SignedGraph, g2: &SignedGraph, kind: MatrixKind, method: Method) -> Result<SpectrumReport> {
    require_spectral_kind(kind)?;
    let oracle = numeric_spectrum(g1, g2, kind)?;
    let mut discrepancies = Vec::new();
    let spectrum = match method {
        Method::Numeric => oracle.clone(),
        Method::Theorem => {
            let assembled = charpoly_corona(g1, g2, kind)?;
            let direct = char_poly(&corona_block_matrix(g1, g2, kind)?)?;
            if assembled != direct {
                discrepancies.push(Discrepancy::cross_check(
                    "theorem-charpoly",
                    format!("assembled {assembled} but the corona matrix has {direct}"),
                ));
            }
            real_roots(&assembled)?
        }
        Method::Proposition => {
            let (s, notes) = proposition_spectrum(g1, g2, kind)?;
            discrepancies.extend(notes);
            s
        }
    };
    if method != Method::Numeric {
        match spectrum.max_deviation(&oracle) {
            Some(d) if d <= AGREEMENT_TOL => {}
            dev => discrepancies.push(Discrepancy::cross_check(
                "numeric-oracle",
                format!("{method} spectrum {spectrum} differs from numeric {oracle} (deviation {dev:?})"),
            )),
        }
    }
    Ok(SpectrumReport { method, spectrum, discrepancies })
}
