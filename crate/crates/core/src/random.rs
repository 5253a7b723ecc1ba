//! Seeded random instances for property checks and the verification harness.
//!
//! Every generator takes an explicit RNG; [`trial_rng`] derives an independent
//! ChaCha8 stream per trial so results do not depend on scheduling.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Sign, SignedGraph};
use crate::matrix::DenseMatrix;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn random_signs<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Sign> {
    (0..n).map(|_| random_sign(rng)).collect()
}

/// `G(n, p)` with independent fair edge signs.
pub fn random_signed_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v, random_sign(rng)));
            }
        }
    }
    SignedGraph::new(n, &edges).expect("generated edges are valid")
}

/// Random set of circulant distances in `1..=n/2`.
fn random_distances<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    (1..=n / 2).filter(|_| rng.gen_bool(0.5)).collect()
}

/// Circulant graph: `i ~ i +- d (mod n)` for each distance `d`, with edge
/// signs chosen per edge by `sign_of(distance)`.
fn circulant(n: usize, distances: &[usize], mut sign_of: impl FnMut(usize) -> Sign) -> SignedGraph {
    let mut g = SignedGraph::empty(n);
    for &d in distances {
        for i in 0..n {
            let j = (i + d) % n;
            if !g.has_edge(i, j) && i != j {
                g.add_edge(i, j, sign_of(d)).expect("circulant edge is valid");
            }
        }
    }
    g
}

/// Regular underlying graph (a random circulant) with independent random signs.
pub fn random_regular_signed<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SignedGraph {
    let distances = random_distances(rng, n);
    let signs: Vec<Sign> = random_signs(rng, n * distances.len());
    let mut next = signs.into_iter();
    circulant(n, &distances, |_| next.next().unwrap_or(Sign::Plus))
}

/// Co-regular graph with constant canonical marking: a circulant whose edge
/// sign depends only on the distance, so every node sees the same signs.
pub fn random_coregular<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SignedGraph {
    let distances = random_distances(rng, n);
    let per_distance: Vec<Sign> = random_signs(rng, n / 2 + 1);
    circulant(n, &distances, |d| per_distance[d])
}

/// `K_{1,legs}` with centre `0` and random leg signs.
pub fn random_star<R: Rng + ?Sized>(rng: &mut R, legs: usize) -> SignedGraph {
    let edges: Vec<_> = (1..=legs).map(|v| (0, v, random_sign(rng))).collect();
    SignedGraph::new(legs + 1, &edges).expect("star edges are valid")
}

/// A balanced graph: all-positive `G(n, p)` switched by a random node signing.
pub fn random_balanced<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = SignedGraph::unsigned(n, &edges).expect("generated edges are valid");
    g.switched(&random_signs(rng, n))
}

/// Random relabelling of `0..n`.
pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Symmetric matrix with entries uniform in `-bound..=bound`.
pub fn random_symmetric_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = rng.gen_range(-bound..=bound);
            m.set(i, j, v);
            m.set(j, i, v);
        }
    }
    m
}
