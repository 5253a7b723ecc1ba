#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use signed_corona::{DenseMatrix, IntPolynomial, Sign, SignedGraph};

/// Characteristic polynomial `det(xI - M)` by the Faddeev-LeVerrier recurrence
/// over big integers; every division it performs is exact for integer `M`.
pub fn faddeev_leverrier(m: &DenseMatrix) -> IntPolynomial {
    let n = m.rows();
    let a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| BigInt::from(m.get(i, j))).collect()).collect();
    let mul = |x: &Vec<Vec<BigInt>>, y: &Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| &x[i][k] * &y[k][j]).sum()).collect())
            .collect()
    };
    // coefficients from x^n downwards
    let mut c = vec![BigInt::from(1)];
    let mut mk: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &c[k - 1];
        }
        let am = mul(&a, &mk);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let ck = -trace / BigInt::from(k);
        mk = am;
        c.push(ck);
    }
    c.reverse();
    IntPolynomial::new(c)
}

/// Graphs with `1..=max_n` nodes, each pair absent, positive or negative.
pub fn signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |labels| {
            let mut edges = Vec::new();
            let mut it = labels.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    match it.next().unwrap() {
                        1 => edges.push((u, v, Sign::Plus)),
                        2 => edges.push((u, v, Sign::Minus)),
                        _ => {}
                    }
                }
            }
            SignedGraph::new(n, &edges).unwrap()
        })
    })
}

pub fn signs(n: usize) -> impl Strategy<Value = Vec<Sign>> {
    prop::collection::vec(any::<bool>().prop_map(|b| if b { Sign::Plus } else { Sign::Minus }), n)
}

/// All-positive `C_3` and `P_2`.
pub fn example_pair() -> (SignedGraph, SignedGraph) {
    (
        SignedGraph::unsigned(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
        SignedGraph::unsigned(2, &[(0, 1)]).unwrap(),
    )
}
