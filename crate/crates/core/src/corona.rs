//! The neighbourhood corona `G1 * G2`: one copy of `G1` plus `n1` copies of
//! `G2`, every neighbour of node `i` of `G1` joined to every node of copy `i`.
//!
//! Node `i` of `G1` keeps index `i`; node `j` of copy `i` gets index
//! `n1 + j*n1 + i`, so the blocks `W_j = {v_j^1, ..., v_j^{n1}}` are contiguous
//! and the matrices of the corona have a literal Kronecker block structure.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Marking, MatrixKind, Sign, SignedGraph};
use crate::matrix::DenseMatrix;

/// Sign rule for the cross edge joining `u` (a neighbour of node `i` of `G1`)
/// to node `v` of copy `i`. Both rules multiply by `mu2(v)`; they differ in the
/// factor contributed by `G1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossSign {
    /// `sigma1(u, i) * mu1(i)`: the sign pattern of the block `mu2^T (x) A1 phi1`.
    /// The characteristic-polynomial factorisations hold under this rule.
    #[default]
    CentreEdge,
    /// `mu1(u)`: the mark of the `G1` endpoint actually on the edge.
    EndpointMark,
}

impl CrossSign {
    pub const ALL: [CrossSign; 2] = [CrossSign::CentreEdge, CrossSign::EndpointMark];

    /// The `G1` factor of the sign of the cross edges between `u` and copy `i`.
    pub fn factor(self, g1: &SignedGraph, marks1: &Marking, i: usize, u: usize) -> Sign {
        match self {
            CrossSign::CentreEdge => {
                g1.sign(i, u).expect("cross edges come from G1 edges") * marks1.get(i)
            }
            CrossSign::EndpointMark => marks1.get(u),
        }
    }

    /// `n1 x n1` matrix with entry `(u, i)` equal to the factor for `u ~ i`, else 0.
    pub fn factor_matrix(self, g1: &SignedGraph) -> DenseMatrix {
        let n = g1.order();
        let marks = g1.canonical_marking();
        let mut c = DenseMatrix::zeros(n, n);
        for (u, i, _) in g1.edges() {
            c.set(u, i, self.factor(g1, &marks, i, u).value());
            c.set(i, u, self.factor(g1, &marks, u, i).value());
        }
        c
    }
}

impl fmt::Display for CrossSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossSign::CentreEdge => "centre-edge",
            CrossSign::EndpointMark => "endpoint-mark",
        })
    }
}

impl FromStr for CrossSign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "centre-edge" | "center-edge" => Ok(CrossSign::CentreEdge),
            "endpoint-mark" => Ok(CrossSign::EndpointMark),
            _ => Err(format!("unknown cross-edge sign rule `{s}`")),
        }
    }
}

/// Where a corona node comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeOrigin {
    /// Node `i` of `G1`.
    Base(usize),
    /// Node `node` of copy `copy`.
    Copy { copy: usize, node: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaLayout {
    pub n1: usize,
    pub n2: usize,
}

impl CoronaLayout {
    pub fn total(&self) -> usize {
        self.n1 * (self.n2 + 1)
    }

    pub fn base(&self, i: usize) -> usize {
        i
    }

    /// Index of node `j` of copy `i`.
    pub fn copy_node(&self, i: usize, j: usize) -> usize {
        self.n1 + j * self.n1 + i
    }

    pub fn origin(&self, index: usize) -> NodeOrigin {
        if index < self.n1 {
            NodeOrigin::Base(index)
        } else {
            let k = index - self.n1;
            NodeOrigin::Copy { copy: k % self.n1, node: k / self.n1 }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corona {
    pub graph: SignedGraph,
    pub layout: CoronaLayout,
}

pub fn neighbourhood_corona(g1: &SignedGraph, g2: &SignedGraph) -> Result<Corona> {
    neighbourhood_corona_with(g1, g2, CrossSign::default())
}

/// Builds the corona edge by edge from the definition. Markings are those of
/// the original factors.
pub fn neighbourhood_corona_with(
    g1: &SignedGraph,
    g2: &SignedGraph,
    rule: CrossSign,
) -> Result<Corona> {
    if g1.order() == 0 || g2.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let layout = CoronaLayout { n1: g1.order(), n2: g2.order() };
    let (marks1, marks2) = (g1.canonical_marking(), g2.canonical_marking());
    let mut g = SignedGraph::empty(layout.total());
    for (u, v, s) in g1.edges() {
        g.add_edge(u, v, s)?;
    }
    for i in 0..layout.n1 {
        for (a, b, s) in g2.edges() {
            g.add_edge(layout.copy_node(i, a), layout.copy_node(i, b), s)?;
        }
        for u in g1.neighbours(i) {
            let f = rule.factor(g1, &marks1, i, u);
            for j in 0..layout.n2 {
                g.add_edge(u, layout.copy_node(i, j), f * marks2.get(j))?;
            }
        }
    }
    Ok(Corona { graph: g, layout })
}

pub fn corona_block_matrix(g1: &SignedGraph, g2: &SignedGraph, kind: MatrixKind) -> Result<DenseMatrix> {
    corona_block_matrix_with(g1, g2, kind, CrossSign::default())
}

/// Assembles a matrix of the corona from the factors' matrices:
///
/// ```text
/// A = [ A1          mu2^T (x) C ]      D = [ (n2+1) D1   0                     ]
///     [ mu2 (x) C^T  A2 (x) I   ]          [ 0           D2 (x) I + I (x) D1    ]
/// ```
///
/// with `C` the cross-factor matrix of the rule (`A1 phi1` for the default),
/// `Q = D + A` and `L = D - A`.
pub fn corona_block_matrix_with(
    g1: &SignedGraph,
    g2: &SignedGraph,
    kind: MatrixKind,
    rule: CrossSign,
) -> Result<DenseMatrix> {
    if g1.order() == 0 || g2.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let (n1, n2) = (g1.order(), g2.order());
    let total = n1 * (n2 + 1);
    let i1 = DenseMatrix::identity(n1);

    let mut a = DenseMatrix::zeros(total, total);
    let c = rule.factor_matrix(g1);
    let mu2 = DenseMatrix::from_rows(&[g2.canonical_marking().values()])?;
    a.set_block(0, 0, &g1.matrix(MatrixKind::A));
    a.set_block(0, n1, &mu2.kron(&c));
    a.set_block(n1, 0, &mu2.transpose().kron(&c.transpose()));
    a.set_block(n1, n1, &g2.matrix(MatrixKind::A).kron(&i1));

    let mut d = DenseMatrix::zeros(total, total);
    let d1 = g1.matrix(MatrixKind::D);
    d.set_block(0, 0, &d1.scale(n2 as i64 + 1));
    let copies = &g2.matrix(MatrixKind::D).kron(&i1) + &DenseMatrix::identity(n2).kron(&d1);
    d.set_block(n1, n1, &copies);

    Ok(match kind {
        MatrixKind::A => a,
        MatrixKind::D => d,
        MatrixKind::Q => &d + &a,
        MatrixKind::L => &d - &a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus as M, Plus as P};

    fn c3() -> SignedGraph {
        SignedGraph::unsigned(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn example_sizes() {
        let p2 = SignedGraph::unsigned(2, &[(0, 1)]).unwrap();
        let c = neighbourhood_corona(&c3(), &p2).unwrap();
        assert_eq!(c.graph.order(), 9);
        assert_eq!(c.graph.edge_count(), 18);
        assert_eq!(c.graph.count_edges(M), 0);
        let single = SignedGraph::empty(1);
        let c = neighbourhood_corona(&c3(), &single).unwrap();
        assert_eq!((c.graph.order(), c.graph.edge_count()), (6, 9));
    }

    #[test]
    fn layout_round_trip() {
        let l = CoronaLayout { n1: 3, n2: 4 };
        for idx in 0..l.total() {
            match l.origin(idx) {
                NodeOrigin::Base(i) => assert_eq!(l.base(i), idx),
                NodeOrigin::Copy { copy, node } => assert_eq!(l.copy_node(copy, node), idx),
            }
        }
    }

    #[test]
    fn degrees() {
        let g1 = SignedGraph::new(4, &[(0, 1, M), (1, 2, P), (2, 3, M), (1, 3, P)]).unwrap();
        let g2 = SignedGraph::new(3, &[(0, 1, M), (1, 2, P)]).unwrap();
        let c = neighbourhood_corona(&g1, &g2).unwrap();
        for i in 0..4 {
            assert_eq!(c.graph.degree(i), 4 * g1.degree(i));
            for j in 0..3 {
                assert_eq!(c.graph.degree(c.layout.copy_node(i, j)), g2.degree(j) + g1.degree(i));
            }
        }
    }

    #[test]
    fn cross_sign_rules() {
        // u=1 is a neighbour of i=0 through a negative edge; marks: mu1 = (-, -, +)
        let g1 = SignedGraph::new(3, &[(0, 1, M), (1, 2, P)]).unwrap();
        let g2 = SignedGraph::empty(1);
        let centre = neighbourhood_corona_with(&g1, &g2, CrossSign::CentreEdge).unwrap();
        let endpoint = neighbourhood_corona_with(&g1, &g2, CrossSign::EndpointMark).unwrap();
        let v = centre.layout.copy_node(0, 0);
        assert_eq!(centre.graph.sign(1, v), Some(P)); // sigma(0,1) mu1(0) = (-)(-)
        assert_eq!(endpoint.graph.sign(1, v), Some(M)); // mu1(1)
        assert_eq!("endpoint-mark".parse::<CrossSign>(), Ok(CrossSign::EndpointMark));
        assert_eq!(CrossSign::default().to_string(), "centre-edge");
    }

    #[test]
    fn single_node_block() {
        let g1 = SignedGraph::new(3, &[(0, 1, M), (1, 2, P), (0, 2, P)]).unwrap();
        let g2 = SignedGraph::empty(1);
        let a = corona_block_matrix(&g1, &g2, MatrixKind::A).unwrap();
        let a1 = g1.matrix(MatrixKind::A);
        let phi = DenseMatrix::diagonal(&g1.canonical_marking().values());
        let a1phi = &a1 * &phi;
        for u in 0..3 {
            for i in 0..3 {
                assert_eq!(a.get(u, i), a1.get(u, i));
                assert_eq!(a.get(u, 3 + i), a1phi.get(u, i));
            }
        }
        let d = corona_block_matrix(&g1, &g2, MatrixKind::D).unwrap();
        assert_eq!(d.get(0, 0), 4);
    }

    #[test]
    fn block_equals_construction() {
        let g1 = SignedGraph::new(4, &[(0, 1, M), (1, 2, P), (2, 3, M), (0, 3, P), (0, 2, M)]).unwrap();
        let g2 = SignedGraph::new(3, &[(0, 1, M), (1, 2, P)]).unwrap();
        for rule in CrossSign::ALL {
            let c = neighbourhood_corona_with(&g1, &g2, rule).unwrap();
            for kind in [MatrixKind::A, MatrixKind::L, MatrixKind::Q, MatrixKind::D] {
                assert_eq!(corona_block_matrix_with(&g1, &g2, kind, rule).unwrap(), c.graph.matrix(kind));
            }
        }
    }

    #[test]
    fn rejects_empty() {
        assert_eq!(neighbourhood_corona(&SignedGraph::empty(0), &c3()), Err(Error::EmptyGraph));
        assert_eq!(neighbourhood_corona(&c3(), &SignedGraph::empty(0)), Err(Error::EmptyGraph));
    }
}
