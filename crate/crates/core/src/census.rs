//! Edge and triad statistics of the corona, by enumeration and by closed
//! formulas over statistics of the factors, and the balance criterion.
//!
//! The closed formulas are written over a [`CoronaStatistics`] record. Under
//! [`CrossSign::EndpointMark`] its entries are the classical mark statistics of
//! the factors (nodes marked `+`/`-`, mark-weighted degree sums, edges
//! classified by their endpoint marks and weighted by common neighbours). Under
//! a general rule the `G1` entries count cross-edge factors instead, which
//! reduces to the classical statistics for the endpoint rule.

use serde::{Deserialize, Serialize};

use crate::corona::CrossSign;
use crate::graph::{Marking, Sign, SignedGraph};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCensus {
    pub total: usize,
    pub positive: usize,
    pub negative: usize,
}

/// Triangles bucketed by their number of negative edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriadCensus {
    pub t0: usize,
    pub t1: usize,
    pub t2: usize,
    pub t3: usize,
}

impl TriadCensus {
    pub fn total(&self) -> usize {
        self.t0 + self.t1 + self.t2 + self.t3
    }

    pub fn as_array(&self) -> [usize; 4] {
        [self.t0, self.t1, self.t2, self.t3]
    }

    /// The census after flipping every edge sign.
    pub fn negated(&self) -> TriadCensus {
        TriadCensus { t0: self.t3, t1: self.t2, t2: self.t1, t3: self.t0 }
    }
}

/// Node counts by mark and mark-weighted degree sums.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkDegreeSummary {
    pub n_plus: usize,
    pub n_minus: usize,
    pub b_plus: usize,
    pub b_minus: usize,
}

/// Edges of one sign classified by the marks at their endpoints
/// (`pp`: both `+`, `pm`: opposite, `mm`: both `-`); the `_c` variants weight
/// each edge by its number of common neighbours.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkPairCounts {
    pub e_pp: usize,
    pub e_pm: usize,
    pub e_mm: usize,
    pub e_pp_c: usize,
    pub e_pm_c: usize,
    pub e_mm_c: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeMarkBreakdown {
    pub plus: MarkPairCounts,
    pub minus: MarkPairCounts,
}

impl EdgeMarkBreakdown {
    pub fn of(&self, sign: Sign) -> &MarkPairCounts {
        match sign {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    fn of_mut(&mut self, sign: Sign) -> &mut MarkPairCounts {
        match sign {
            Sign::Plus => &mut self.plus,
            Sign::Minus => &mut self.minus,
        }
    }
}

/// Which slot of a [`MarkPairCounts`] a pair of marks falls into.
#[derive(Clone, Copy, PartialEq, Eq)]
enum PairClass {
    PlusPlus,
    Mixed,
    MinusMinus,
}

fn classify(a: Sign, b: Sign) -> PairClass {
    match (a, b) {
        (Sign::Plus, Sign::Plus) => PairClass::PlusPlus,
        (Sign::Minus, Sign::Minus) => PairClass::MinusMinus,
        _ => PairClass::Mixed,
    }
}

impl MarkPairCounts {
    fn bump(&mut self, class: PairClass, weight: usize) {
        match class {
            PairClass::PlusPlus => self.e_pp += weight,
            PairClass::Mixed => self.e_pm += weight,
            PairClass::MinusMinus => self.e_mm += weight,
        }
    }

    fn bump_c(&mut self, class: PairClass, weight: usize) {
        match class {
            PairClass::PlusPlus => self.e_pp_c += weight,
            PairClass::Mixed => self.e_pm_c += weight,
            PairClass::MinusMinus => self.e_mm_c += weight,
        }
    }
}

pub fn edge_census_direct(g: &SignedGraph) -> EdgeCensus {
    let positive = g.count_edges(Sign::Plus);
    let negative = g.count_edges(Sign::Minus);
    EdgeCensus { total: positive + negative, positive, negative }
}

pub fn triad_census_direct(g: &SignedGraph) -> TriadCensus {
    let n = g.order();
    let mut counts = [0usize; 4];
    for i in 0..n {
        for j in i + 1..n {
            let Some(a) = g.sign(i, j) else { continue };
            for k in j + 1..n {
                let (Some(b), Some(c)) = (g.sign(j, k), g.sign(i, k)) else { continue };
                let neg = [a, b, c].iter().filter(|s| !s.is_plus()).count();
                counts[neg] += 1;
            }
        }
    }
    TriadCensus { t0: counts[0], t1: counts[1], t2: counts[2], t3: counts[3] }
}

/// Mark counts and mark-weighted degree sums of `g` under its canonical marking.
pub fn mark_degree_summary(g: &SignedGraph) -> MarkDegreeSummary {
    let marks = g.canonical_marking();
    let mut s = MarkDegreeSummary::default();
    for u in 0..g.order() {
        match marks.get(u) {
            Sign::Plus => {
                s.n_plus += 1;
                s.b_plus += g.degree(u);
            }
            Sign::Minus => {
                s.n_minus += 1;
                s.b_minus += g.degree(u);
            }
        }
    }
    s
}

/// Endpoint-mark breakdown of `g`'s edges under its canonical marking.
pub fn edge_mark_breakdown(g: &SignedGraph) -> EdgeMarkBreakdown {
    let marks = g.canonical_marking();
    let mut b = EdgeMarkBreakdown::default();
    for (u, w, s) in g.edges() {
        let class = classify(marks.get(u), marks.get(w));
        let slot = b.of_mut(s);
        slot.bump(class, 1);
        slot.bump_c(class, g.common_neighbours(u, w));
    }
    b
}

/// `G1` statistics as seen by the cross edges under `rule`: `b_plus`/`b_minus`
/// count ordered adjacent pairs `(i, u)` by cross factor, and the `_c` counts
/// run over (apex `i`, edge `uw` inside `N(i)`) classified by the two factors.
/// Node counts and unweighted edge classes stay the canonical-mark ones.
pub fn cross_statistics(g1: &SignedGraph, rule: CrossSign) -> (MarkDegreeSummary, EdgeMarkBreakdown) {
    let marks: Marking = g1.canonical_marking();
    let n = g1.order();
    let mut summary = mark_degree_summary(g1);
    summary.b_plus = 0;
    summary.b_minus = 0;
    let mut breakdown = edge_mark_breakdown(g1);
    for p in [Sign::Plus, Sign::Minus] {
        let slot = breakdown.of_mut(p);
        slot.e_pp_c = 0;
        slot.e_pm_c = 0;
        slot.e_mm_c = 0;
    }
    for i in 0..n {
        let nbrs: Vec<usize> = g1.neighbours(i).collect();
        for &u in &nbrs {
            match rule.factor(g1, &marks, i, u) {
                Sign::Plus => summary.b_plus += 1,
                Sign::Minus => summary.b_minus += 1,
            }
        }
        for (x, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[x + 1..] {
                if let Some(p) = g1.sign(u, w) {
                    let class = classify(rule.factor(g1, &marks, i, u), rule.factor(g1, &marks, i, w));
                    breakdown.of_mut(p).bump_c(class, 1);
                }
            }
        }
    }
    (summary, breakdown)
}

/// Everything the closed formulas need from the two factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaStatistics {
    pub n1: usize,
    pub e1: EdgeCensus,
    pub e2: EdgeCensus,
    pub t1: TriadCensus,
    pub t2: TriadCensus,
    pub marks1: MarkDegreeSummary,
    pub marks2: MarkDegreeSummary,
    pub pairs1: EdgeMarkBreakdown,
    pub pairs2: EdgeMarkBreakdown,
}

pub fn corona_statistics(g1: &SignedGraph, g2: &SignedGraph, rule: CrossSign) -> CoronaStatistics {
    let (marks1, pairs1) = cross_statistics(g1, rule);
    CoronaStatistics {
        n1: g1.order(),
        e1: edge_census_direct(g1),
        e2: edge_census_direct(g2),
        t1: triad_census_direct(g1),
        t2: triad_census_direct(g2),
        marks1,
        marks2: mark_degree_summary(g2),
        pairs1,
        pairs2: edge_mark_breakdown(g2),
    }
}

/// Edge-count formulas of the corona.
pub fn edge_table(s: &CoronaStatistics) -> EdgeCensus {
    let (b, n2) = (&s.marks1, &s.marks2);
    let positive = s.e1.positive + s.n1 * s.e2.positive + b.b_plus * n2.n_plus + b.b_minus * n2.n_minus;
    let negative = s.e1.negative + s.n1 * s.e2.negative + b.b_plus * n2.n_minus + b.b_minus * n2.n_plus;
    let total = s.e1.total + s.n1 * s.e2.total + 2 * (n2.n_plus + n2.n_minus) * s.e1.total;
    debug_assert_eq!(total, positive + negative);
    EdgeCensus { total, positive, negative }
}

/// Triad-count formulas of the corona, one row per bucket.
pub fn triad_table(s: &CoronaStatistics) -> TriadCensus {
    let (b1, n2) = (&s.marks1, &s.marks2);
    let (e1p, e1m) = (&s.pairs1.plus, &s.pairs1.minus);
    let (e2p, e2m) = (&s.pairs2.plus, &s.pairs2.minus);
    let (bp, bm, np, nm) = (b1.b_plus, b1.b_minus, n2.n_plus, n2.n_minus);
    let n1 = s.n1;
    TriadCensus {
        t0: s.t1.t0 + n1 * s.t2.t0 + bp * e2p.e_pp + bm * e2p.e_mm + np * e1p.e_pp_c + nm * e1p.e_mm_c,
        t1: s.t1.t1
            + n1 * s.t2.t1
            + bp * (e2p.e_pm + e2m.e_pp)
            + bm * (e2p.e_pm + e2m.e_mm)
            + np * (e1p.e_pm_c + e1m.e_pp_c)
            + nm * (e1p.e_pm_c + e1m.e_mm_c),
        t2: s.t1.t2
            + n1 * s.t2.t2
            + bp * (e2p.e_mm + e2m.e_pm)
            + bm * (e2p.e_pp + e2m.e_pm)
            + np * (e1p.e_mm_c + e1m.e_pm_c)
            + nm * (e1p.e_pp_c + e1m.e_pm_c),
        t3: s.t1.t3 + n1 * s.t2.t3 + bp * e2m.e_mm + bm * e2m.e_pp + np * e1m.e_mm_c + nm * e1m.e_pp_c,
    }
}

pub fn edge_census_formula(g1: &SignedGraph, g2: &SignedGraph) -> EdgeCensus {
    edge_census_formula_with(g1, g2, CrossSign::default())
}

pub fn edge_census_formula_with(g1: &SignedGraph, g2: &SignedGraph, rule: CrossSign) -> EdgeCensus {
    edge_table(&corona_statistics(g1, g2, rule))
}

pub fn triad_census_formula(g1: &SignedGraph, g2: &SignedGraph) -> TriadCensus {
    triad_census_formula_with(g1, g2, CrossSign::default())
}

pub fn triad_census_formula_with(g1: &SignedGraph, g2: &SignedGraph, rule: CrossSign) -> TriadCensus {
    triad_table(&corona_statistics(g1, g2, rule))
}

/// `T(G1) + n1 T(G2) + m2 * sum_u d1(u) + n2 * sum_{uw in E1} |N(u) & N(w)|`.
///
/// The third term counts triangles with one `G1` apex and a copy edge, the
/// fourth those with a `G1` edge and one copy node; neither depends on signs.
pub fn total_triads_formula(g1: &SignedGraph, g2: &SignedGraph) -> usize {
    let degree_sum: usize = (0..g1.order()).map(|u| g1.degree(u)).sum();
    let common: usize = g1.edges().map(|(u, w, _)| g1.common_neighbours(u, w)).sum();
    triad_census_direct(g1).total()
        + g1.order() * triad_census_direct(g2).total()
        + g2.edge_count() * degree_sum
        + g2.order() * common
}

/// True when some edge's sign differs from the product of its endpoint marks:
/// a positive edge between opposite marks or a negative edge between equal ones.
pub fn has_offending_edge(g: &SignedGraph) -> bool {
    let marks = g.canonical_marking();
    g.edges().any(|(u, w, _)| g.is_offending_edge(&marks, u, w))
}

pub fn corona_balance_criterion(g1: &SignedGraph, g2: &SignedGraph) -> bool {
    corona_balance_criterion_with(g1, g2, CrossSign::default())
}

/// Balance of the corona decided from the factors.
///
/// With `s` a switching function balancing `G1`, the corona is balanced iff
/// both factors are balanced and, when `G1` has an edge, `G2` has no offending
/// edge and `s(u) * factor(i, u)` is the same for all neighbours `u` of each
/// node `i`. The last condition always holds for the centre-edge rule.
pub fn corona_balance_criterion_with(g1: &SignedGraph, g2: &SignedGraph, rule: CrossSign) -> bool {
    let Some(s) = g1.switching_function() else { return false };
    if !g2.is_balanced() {
        return false;
    }
    if g1.edge_count() == 0 {
        return true;
    }
    if has_offending_edge(g2) {
        return false;
    }
    let marks = g1.canonical_marking();
    (0..g1.order()).all(|i| {
        let mut values = g1.neighbours(i).map(|u| s[u] * rule.factor(g1, &marks, i, u));
        match values.next() {
            Some(first) => values.all(|t| t == first),
            None => true,
        }
    })
}

/// The criterion stated purely in terms of edge types: for balanced factors,
/// the corona is unbalanced iff either factor has an offending edge.
pub fn printed_balance_criterion(g1: &SignedGraph, g2: &SignedGraph) -> bool {
    g1.is_balanced() && g2.is_balanced() && !has_offending_edge(g1) && !has_offending_edge(g2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corona::neighbourhood_corona_with;
    use Sign::{Minus as M, Plus as P};

    fn c3() -> SignedGraph {
        SignedGraph::unsigned(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn p2() -> SignedGraph {
        SignedGraph::unsigned(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn direct_counts() {
        assert_eq!(edge_census_direct(&c3()), EdgeCensus { total: 3, positive: 3, negative: 0 });
        let neg = SignedGraph::new(2, &[(0, 1, M)]).unwrap();
        assert_eq!(edge_census_direct(&neg), EdgeCensus { total: 1, positive: 0, negative: 1 });
        assert_eq!(triad_census_direct(&c3()).as_array(), [1, 0, 0, 0]);
        let one_neg = SignedGraph::new(3, &[(0, 1, M), (1, 2, P), (0, 2, P)]).unwrap();
        assert_eq!(triad_census_direct(&one_neg).as_array(), [0, 1, 0, 0]);
        let path = SignedGraph::unsigned(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(triad_census_direct(&path).total(), 0);
    }

    #[test]
    fn example_pair() {
        let (g1, g2) = (c3(), p2());
        assert_eq!(edge_census_formula(&g1, &g2), EdgeCensus { total: 18, positive: 18, negative: 0 });
        assert_eq!(triad_census_formula(&g1, &g2).as_array(), [13, 0, 0, 0]);
        assert_eq!(total_triads_formula(&g1, &g2), 13);
        let c = neighbourhood_corona_with(&g1, &g2, CrossSign::default()).unwrap();
        assert_eq!(triad_census_direct(&c.graph).as_array(), [13, 0, 0, 0]);
    }

    #[test]
    fn negative_edge_with_single_node() {
        let g1 = SignedGraph::new(2, &[(0, 1, M)]).unwrap();
        let g2 = SignedGraph::empty(1);
        let s = corona_statistics(&g1, &g2, CrossSign::EndpointMark);
        assert_eq!((s.marks1.b_plus, s.marks1.b_minus), (0, 2));
        assert_eq!((s.marks2.n_plus, s.marks2.n_minus), (1, 0));
        let e = edge_census_formula_with(&g1, &g2, CrossSign::EndpointMark);
        assert_eq!(e, EdgeCensus { total: 3, positive: 0, negative: 3 });
        let c = neighbourhood_corona_with(&g1, &g2, CrossSign::EndpointMark).unwrap();
        assert_eq!(edge_census_direct(&c.graph), e);
    }

    #[test]
    fn triangle_free_edgeless() {
        let g2 = SignedGraph::empty(3);
        assert_eq!(triad_census_formula(&p2(), &g2).total(), 0);
        assert_eq!(total_triads_formula(&p2(), &g2), 0);
    }

    #[test]
    fn formulas_match_enumeration_both_rules() {
        let g1 = SignedGraph::new(
            5,
            &[(0, 1, M), (1, 2, P), (0, 2, P), (2, 3, M), (3, 4, P), (2, 4, M), (1, 3, M)],
        )
        .unwrap();
        let g2 = SignedGraph::new(4, &[(0, 1, M), (1, 2, P), (0, 2, M), (2, 3, P)]).unwrap();
        for rule in CrossSign::ALL {
            let c = neighbourhood_corona_with(&g1, &g2, rule).unwrap();
            assert_eq!(edge_census_formula_with(&g1, &g2, rule), edge_census_direct(&c.graph));
            assert_eq!(triad_census_formula_with(&g1, &g2, rule), triad_census_direct(&c.graph));
            assert_eq!(total_triads_formula(&g1, &g2), triad_census_direct(&c.graph).total());
        }
    }

    #[test]
    fn balance() {
        assert!(corona_balance_criterion(&c3(), &p2()));
        // balanced factors, but a negative P2 has an offending edge
        let neg = SignedGraph::new(2, &[(0, 1, M)]).unwrap();
        let c = neighbourhood_corona_with(&c3(), &neg, CrossSign::default()).unwrap();
        assert!(!c.graph.is_balanced());
        assert!(!corona_balance_criterion(&c3(), &neg));
        assert!(!printed_balance_criterion(&c3(), &neg));
        // offending edge in G1 without consequence under the centre-edge rule
        let g1 = SignedGraph::new(3, &[(0, 1, M), (1, 2, P)]).unwrap();
        assert!(has_offending_edge(&g1));
        let c = neighbourhood_corona_with(&g1, &p2(), CrossSign::default()).unwrap();
        assert!(c.graph.is_balanced());
        assert!(corona_balance_criterion(&g1, &p2()));
        assert!(!printed_balance_criterion(&g1, &p2()));
    }
}
