//! Signed graphs: storage, canonical marking, degrees, graph matrices and balance.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;

/// Edge or vertex sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Which graph matrix to extract.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    /// Signed adjacency matrix.
    A,
    /// Signed Laplacian `D - A`.
    L,
    /// Signless Laplacian `D + A`.
    Q,
    /// Diagonal degree matrix.
    D,
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MatrixKind::A => "a",
            MatrixKind::L => "l",
            MatrixKind::Q => "q",
            MatrixKind::D => "d",
        };
        f.write_str(s)
    }
}

impl FromStr for MatrixKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(MatrixKind::A),
            "l" => Ok(MatrixKind::L),
            "q" => Ok(MatrixKind::Q),
            "d" => Ok(MatrixKind::D),
            other => Err(format!("unknown matrix kind `{other}` (expected a, l, q or d)")),
        }
    }
}

/// A +1/-1 label per node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Marking(Vec<Sign>);

impl Marking {
    pub fn new(marks: Vec<Sign>) -> Self {
        Marking(marks)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, u: usize) -> Sign {
        self.0[u]
    }

    pub fn as_slice(&self) -> &[Sign] {
        &self.0
    }

    pub fn values(&self) -> Vec<i64> {
        self.0.iter().map(|s| s.value()).collect()
    }

    /// The common mark if every node carries the same one.
    pub fn constant(&self) -> Option<Sign> {
        let first = *self.0.first()?;
        self.0.iter().all(|&s| s == first).then_some(first)
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.0.iter().filter(|&&s| s == sign).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub deg: Vec<usize>,
    pub pos_deg: Vec<usize>,
    pub neg_deg: Vec<usize>,
    pub sdeg: Vec<i64>,
}

/// Common degree `r` and common net degree `k`, when they exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoRegularity {
    pub r: Option<usize>,
    pub k: Option<i64>,
}

impl CoRegularity {
    pub fn pair(&self) -> Option<(usize, i64)> {
        Some((self.r?, self.k?))
    }
}

/// Undirected simple graph with `+`/`-` edge labels, stored as a dense sign array.
///
/// Nodes are `0..n`. The array is symmetric with a zero diagonal; entries are
/// `1`, `-1` or `0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    adj: Vec<i8>,
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> =
            self.edges().map(|(u, v, s)| format!("{u}{s}{v}")).collect();
        write!(f, "SignedGraph(n={}, [{}])", self.n, edges.join(" "))
    }
}

impl SignedGraph {
    pub fn new(n: usize, edges: &[(usize, usize, Sign)]) -> Result<Self> {
        let mut g = SignedGraph::empty(n);
        for &(u, v, s) in edges {
            g.add_edge(u, v, s)?;
        }
        Ok(g)
    }

    /// Graph on `n` nodes with no edges.
    pub fn empty(n: usize) -> Self {
        SignedGraph { n, adj: vec![0; n * n] }
    }

    /// All-positive graph from an unsigned edge list.
    pub fn unsigned(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let signed: Vec<_> = edges.iter().map(|&(u, v)| (u, v, Sign::Plus)).collect();
        Self::new(n, &signed)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize, s: Sign) -> Result<()> {
        for index in [u, v] {
            if index >= self.n {
                return Err(Error::IndexOutOfRange { index, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u * self.n + v] != 0 {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let val = s.value() as i8;
        self.adj[u * self.n + v] = val;
        self.adj[v * self.n + u] = val;
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// `1`, `-1` or `0`.
    pub fn entry(&self, u: usize, v: usize) -> i64 {
        self.adj[u * self.n + v] as i64
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        Sign::from_i64(self.entry(u, v))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v] != 0
    }

    /// Edges as `(u, v, sign)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| self.sign(u, v).map(|s| (u, v, s)))
        })
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbours(u).count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a != 0).count() / 2
    }

    pub fn count_edges(&self, sign: Sign) -> usize {
        self.edges().filter(|e| e.2 == sign).count()
    }

    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        (0..self.n).filter(|&w| self.has_edge(u, w) && self.has_edge(v, w)).count()
    }

    /// Mark of each node: product of the signs on its incident edges (`+` when isolated).
    pub fn canonical_marking(&self) -> Marking {
        let marks = (0..self.n)
            .map(|u| {
                self.neighbours(u)
                    .fold(Sign::Plus, |acc, v| acc * self.sign(u, v).expect("neighbour"))
            })
            .collect();
        Marking(marks)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut p = DegreeProfile {
            deg: vec![0; self.n],
            pos_deg: vec![0; self.n],
            neg_deg: vec![0; self.n],
            sdeg: vec![0; self.n],
        };
        for u in 0..self.n {
            for v in 0..self.n {
                match self.entry(u, v) {
                    1 => p.pos_deg[u] += 1,
                    -1 => p.neg_deg[u] += 1,
                    _ => {}
                }
            }
            p.deg[u] = p.pos_deg[u] + p.neg_deg[u];
            p.sdeg[u] = p.pos_deg[u] as i64 - p.neg_deg[u] as i64;
        }
        p
    }

    pub fn co_regularity(&self) -> CoRegularity {
        let p = self.degree_profile();
        CoRegularity { r: common(&p.deg), k: common(&p.sdeg) }
    }

    /// Common degree of the underlying graph, if regular.
    pub fn regular_degree(&self) -> Option<usize> {
        self.co_regularity().r
    }

    pub fn matrix(&self, which: MatrixKind) -> DenseMatrix {
        let n = self.n;
        let mut m = DenseMatrix::zeros(n, n);
        let deg = self.degree_profile().deg;
        for (u, &d) in deg.iter().enumerate() {
            for v in 0..n {
                let a = self.entry(u, v);
                let val = match which {
                    MatrixKind::A => a,
                    MatrixKind::L => -a,
                    MatrixKind::Q => a,
                    MatrixKind::D => 0,
                };
                m.set(u, v, val);
            }
            if which != MatrixKind::A {
                m.set(u, u, d as i64);
            }
        }
        m
    }

    /// A switching function `s` with `s(u)s(v) = sign(uv)` on every edge, if one exists.
    ///
    /// Built per component along a BFS tree rooted at the smallest node (root gets `+`).
    pub fn switching_function(&self) -> Option<Vec<Sign>> {
        let mut s: Vec<Option<Sign>> = vec![None; self.n];
        for root in 0..self.n {
            if s[root].is_some() {
                continue;
            }
            s[root] = Some(Sign::Plus);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = s[u].expect("visited");
                for v in self.neighbours(u) {
                    let want = su * self.sign(u, v).expect("edge");
                    match s[v] {
                        None => {
                            s[v] = Some(want);
                            queue.push_back(v);
                        }
                        Some(sv) if sv != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(s.into_iter().map(|x| x.expect("all visited")).collect())
    }

    /// Every cycle has positive sign product.
    pub fn is_balanced(&self) -> bool {
        self.switching_function().is_some()
    }

    /// The graph with `sign'(uv) = s(u) sign(uv) s(v)`.
    pub fn switched(&self, s: &[Sign]) -> SignedGraph {
        assert_eq!(s.len(), self.n, "switching vector length");
        let mut g = self.clone();
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[u * self.n + v] *= (s[u] * s[v]).value() as i8;
            }
        }
        g
    }

    /// Relabel node `u` as `perm[u]`.
    pub fn permuted(&self, perm: &[usize]) -> SignedGraph {
        assert_eq!(perm.len(), self.n, "permutation length");
        let mut g = SignedGraph::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[perm[u] * self.n + perm[v]] = self.adj[u * self.n + v];
            }
        }
        g
    }

    /// Every edge sign flipped.
    pub fn negated(&self) -> SignedGraph {
        SignedGraph { n: self.n, adj: self.adj.iter().map(|&a| -a).collect() }
    }

    /// Edge `uv` whose sign differs from `mark(u) mark(v)` under the canonical marking.
    pub fn is_offending_edge(&self, marking: &Marking, u: usize, v: usize) -> bool {
        match self.sign(u, v) {
            Some(s) => s != marking.get(u) * marking.get(v),
            None => false,
        }
    }

    /// `K_{1,n}` with centre `0`? Returns the centre and leg count.
    pub fn as_star(&self) -> Option<(usize, usize)> {
        let n = self.n;
        if n < 2 || self.edge_count() != n - 1 {
            return None;
        }
        let centre = (0..n).find(|&u| self.degree(u) == n - 1)?;
        if n == 2 {
            return Some((0, 1));
        }
        Some((centre, n - 1))
    }
}

fn common<T: Copy + PartialEq>(xs: &[T]) -> Option<T> {
    let first = *xs.first()?;
    xs.iter().all(|&x| x == first).then_some(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus as M, Plus as P};

    fn c3() -> SignedGraph {
        SignedGraph::new(3, &[(0, 1, P), (1, 2, P), (0, 2, P)]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(SignedGraph::new(2, &[(0, 0, P)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            SignedGraph::new(2, &[(0, 1, P), (1, 0, M)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            SignedGraph::new(2, &[(0, 2, P)]),
            Err(Error::IndexOutOfRange { index: 2, n: 2 })
        );
        let p2 = SignedGraph::new(2, &[(0, 1, P)]).unwrap();
        assert_eq!(p2.entry(0, 1), 1);
        assert_eq!(p2.entry(1, 0), 1);
        assert_eq!(p2.edge_count(), 1);
    }

    #[test]
    fn canonical_markings() {
        assert_eq!(c3().canonical_marking().as_slice(), &[P, P, P]);
        let p2 = SignedGraph::new(2, &[(0, 1, M)]).unwrap();
        assert_eq!(p2.canonical_marking().as_slice(), &[M, M]);
        let star = SignedGraph::new(4, &[(0, 1, M), (0, 2, P), (0, 3, P)]).unwrap();
        assert_eq!(star.canonical_marking().as_slice(), &[M, M, P, P]);
        // isolated node
        assert_eq!(SignedGraph::empty(1).canonical_marking().as_slice(), &[P]);
    }

    #[test]
    fn degrees_and_coregularity() {
        let p = c3().degree_profile();
        assert_eq!(p.deg, vec![2, 2, 2]);
        assert_eq!(p.sdeg, vec![2, 2, 2]);
        let p2 = SignedGraph::new(2, &[(0, 1, M)]).unwrap();
        assert_eq!(p2.degree_profile().sdeg, vec![-1, -1]);
        let star = SignedGraph::new(4, &[(0, 1, M), (0, 2, P), (0, 3, P)]).unwrap();
        assert_eq!(star.degree_profile().sdeg[0], 1);

        assert_eq!(c3().co_regularity(), CoRegularity { r: Some(2), k: Some(2) });
        let p2 = SignedGraph::new(2, &[(0, 1, P)]).unwrap();
        assert_eq!(p2.co_regularity().pair(), Some((1, 1)));
        let k13 = SignedGraph::unsigned(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(k13.co_regularity(), CoRegularity { r: None, k: None });
    }

    #[test]
    fn matrices() {
        let p2 = SignedGraph::new(2, &[(0, 1, P)]).unwrap();
        assert_eq!(p2.matrix(MatrixKind::A).rows_vec(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(p2.matrix(MatrixKind::L).rows_vec(), vec![vec![1, -1], vec![-1, 1]]);
        let q = c3().matrix(MatrixKind::Q);
        assert_eq!(q.rows_vec(), vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]);
    }

    #[test]
    fn balance() {
        let tree = SignedGraph::new(4, &[(0, 1, M), (1, 2, M), (1, 3, P)]).unwrap();
        assert!(tree.is_balanced());
        let one_neg = SignedGraph::new(3, &[(0, 1, M), (1, 2, P), (0, 2, P)]).unwrap();
        assert!(!one_neg.is_balanced());
        let two_neg = SignedGraph::new(3, &[(0, 1, M), (1, 2, M), (0, 2, P)]).unwrap();
        assert!(two_neg.is_balanced());
    }

    #[test]
    fn star_detection() {
        let k13 = SignedGraph::unsigned(4, &[(1, 0), (1, 2), (1, 3)]).unwrap();
        assert_eq!(k13.as_star(), Some((1, 3)));
        assert_eq!(c3().as_star(), None);
        assert_eq!(SignedGraph::empty(1).as_star(), None);
    }
}
