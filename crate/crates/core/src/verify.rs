//! Randomised verification: every closed formula against an independent
//! oracle on seeded instances.
//!
//! Identity failures are reported as `failures`. Deviations of formulas as
//! printed from their validated forms are expected and reported as `errata`.

use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{
    corona_balance_criterion_with, edge_census_direct, edge_census_formula_with, printed_balance_criterion,
    total_triads_formula, triad_census_direct, triad_census_formula_with,
};
use crate::charpoly::char_poly;
use crate::corona::{corona_block_matrix_with, neighbourhood_corona, neighbourhood_corona_with, CrossSign};
use crate::coronal::{closed_form, coronal_l_star_printed, coronal_shape, graph_coronal, CoronalShape};
use crate::error::{Error, Result};
use crate::graph::{MatrixKind, SignedGraph};
use crate::random::{
    random_balanced, random_coregular, random_permutation, random_regular_signed, random_signed_graph,
    random_signs, random_star, trial_rng,
};
use crate::spectra::{charpoly_corona, check_cospectral, corona_spectrum, DiscrepancyKind, Method, COSPECTRAL_TOL};

const KINDS: [MatrixKind; 3] = [MatrixKind::A, MatrixKind::L, MatrixKind::Q];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_n: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub trial: u64,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub checks: usize,
    pub failures: Vec<Finding>,
    pub errata: Vec<Finding>,
    /// Errata counts per check name.
    pub errata_summary: BTreeMap<String, usize>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Trial {
    id: u64,
    checks: usize,
    failures: Vec<Finding>,
    errata: Vec<Finding>,
}

impl Trial {
    fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(Finding { trial: self.id, check: name.into(), detail: detail() });
        }
    }

    fn erratum(&mut self, name: &str, detail: String) {
        self.errata.push(Finding { trial: self.id, check: name.into(), detail });
    }

    fn fail(&mut self, name: &str, err: Error) {
        self.checks += 1;
        self.failures.push(Finding { trial: self.id, check: name.into(), detail: err.to_string() });
    }

    fn run(&mut self, name: &str, body: impl FnOnce(&mut Trial) -> Result<()>) {
        if let Err(e) = body(self) {
            self.fail(name, e);
        }
    }
}

pub fn run_verify(config: VerifyConfig) -> Result<VerifyReport> {
    if config.max_n == 0 {
        return Err(Error::Precondition("--max-n must be at least 1".into()));
    }
    let trials: Vec<Trial> = (0..config.trials as u64)
        .into_par_iter()
        .map(|id| run_trial(&config, id))
        .collect();
    let mut report = VerifyReport {
        config,
        checks: 0,
        failures: Vec::new(),
        errata: Vec::new(),
        errata_summary: BTreeMap::new(),
    };
    for t in trials {
        report.checks += t.checks;
        report.failures.extend(t.failures);
        for e in t.errata {
            *report.errata_summary.entry(e.check.clone()).or_default() += 1;
            report.errata.push(e);
        }
    }
    Ok(report)
}

fn run_trial(config: &VerifyConfig, id: u64) -> Trial {
    let mut rng = trial_rng(config.seed, id);
    let max_n = config.max_n;
    let mut size = || rng.gen_range(1..=max_n);
    let sizes: [usize; 6] = std::array::from_fn(|_| size());
    let g1 = random_signed_graph(&mut rng, sizes[0], 0.5);
    let g2 = random_signed_graph(&mut rng, sizes[1], 0.5);
    let regular = random_regular_signed(&mut rng, sizes[2]);
    let coregular = random_coregular(&mut rng, sizes[3]);
    let star = (max_n >= 2).then(|| {
        let legs = rng.gen_range(1..max_n);
        random_star(&mut rng, legs)
    });
    let balanced = (random_balanced(&mut rng, sizes[4], 0.5), random_balanced(&mut rng, sizes[5], 0.5));
    let switching = random_signs(&mut rng, g1.order());
    let perm = random_permutation(&mut rng, regular.order());
    let switching_regular = random_signs(&mut rng, regular.order());

    let mut t = Trial { id, ..Trial::default() };
    t.run("construction", |t| check_construction(t, &g1, &g2));
    t.run("census", |t| check_census(t, &g1, &g2));
    t.run("balance", |t| check_balance(t, &balanced.0, &balanced.1));
    t.run("theorem", |t| check_theorems(t, &g1, &g2, &regular));
    t.run("coronal", |t| {
        check_coronal(t, &coregular)?;
        if let Some(s) = &star {
            check_coronal(t, s)?;
        }
        Ok(())
    });
    t.run("spectra", |t| {
        check_spectra(t, &g1, &regular, &coregular)?;
        if let Some(s) = &star {
            check_spectra(t, &g1, &regular, s)?;
        }
        Ok(())
    });
    t.run("cospectral", |t| {
        let twin = g1.switched(&switching);
        let a = |g: &SignedGraph| Ok::<_, Error>(neighbourhood_corona(g, &g2)?.graph.matrix(MatrixKind::A));
        t.check("cospectral-switched-a", check_cospectral(&a(&g1)?, &a(&twin)?, COSPECTRAL_TOL), || {
            format!("switched first factor changed the A-spectrum: {g1:?}, {g2:?}")
        });
        let twin = regular.switched(&switching_regular).permuted(&perm);
        for kind in KINDS {
            let m = |g: &SignedGraph| Ok::<_, Error>(neighbourhood_corona(g, &g2)?.graph.matrix(kind));
            t.check("cospectral-switched-regular", check_cospectral(&m(&regular)?, &m(&twin)?, COSPECTRAL_TOL), || {
                format!("{kind}: {regular:?} vs {twin:?} with {g2:?}")
            });
        }
        Ok(())
    });
    t
}

fn check_construction(t: &mut Trial, g1: &SignedGraph, g2: &SignedGraph) -> Result<()> {
    let c = neighbourhood_corona(g1, g2)?;
    let (n1, n2, m1, m2) = (g1.order(), g2.order(), g1.edge_count(), g2.edge_count());
    t.check("corona-size", c.graph.order() == n1 * (n2 + 1) && c.graph.edge_count() == m1 + n1 * m2 + 2 * m1 * n2, || {
        format!("{g1:?} * {g2:?}")
    });
    let degrees_ok = (0..n1).all(|i| {
        c.graph.degree(i) == (n2 + 1) * g1.degree(i)
            && (0..n2).all(|j| c.graph.degree(c.layout.copy_node(i, j)) == g2.degree(j) + g1.degree(i))
    });
    t.check("corona-degrees", degrees_ok, || format!("{g1:?} * {g2:?}"));
    for rule in CrossSign::ALL {
        let built = neighbourhood_corona_with(g1, g2, rule)?;
        for kind in KINDS {
            let block = corona_block_matrix_with(g1, g2, kind, rule)?;
            t.check("block-matrix", block == built.graph.matrix(kind), || format!("{rule} {kind}: {g1:?} * {g2:?}"));
        }
    }
    Ok(())
}

fn check_census(t: &mut Trial, g1: &SignedGraph, g2: &SignedGraph) -> Result<()> {
    for rule in CrossSign::ALL {
        let c = neighbourhood_corona_with(g1, g2, rule)?;
        let (edges, triads) = (edge_census_direct(&c.graph), triad_census_direct(&c.graph));
        let formula = edge_census_formula_with(g1, g2, rule);
        t.check("edge-census", formula == edges, || format!("{rule}: formula {formula:?}, direct {edges:?}"));
        let formula = triad_census_formula_with(g1, g2, rule);
        t.check("triad-census", formula == triads, || format!("{rule}: formula {formula:?}, direct {triads:?}"));
        let total = total_triads_formula(g1, g2);
        t.check("total-triads", total == triads.total(), || format!("formula {total}, direct {}", triads.total()));
    }
    let default = neighbourhood_corona(g1, g2)?;
    let printed = edge_census_formula_with(g1, g2, CrossSign::EndpointMark);
    let direct = edge_census_direct(&default.graph);
    if printed != direct {
        t.erratum("edge-census-endpoint-stats", format!("endpoint-mark statistics give {printed:?}, corona has {direct:?}"));
    }
    let printed = triad_census_formula_with(g1, g2, CrossSign::EndpointMark);
    let direct = triad_census_direct(&default.graph);
    if printed != direct {
        t.erratum("triad-census-endpoint-stats", format!("endpoint-mark statistics give {printed:?}, corona has {direct:?}"));
    }
    Ok(())
}

fn check_balance(t: &mut Trial, g1: &SignedGraph, g2: &SignedGraph) -> Result<()> {
    for rule in CrossSign::ALL {
        let oracle = neighbourhood_corona_with(g1, g2, rule)?.graph.is_balanced();
        let criterion = corona_balance_criterion_with(g1, g2, rule);
        t.check("balance-criterion", criterion == oracle, || {
            format!("{rule}: criterion {criterion}, oracle {oracle} for {g1:?} * {g2:?}")
        });
        if rule == CrossSign::default() {
            let printed = printed_balance_criterion(g1, g2);
            if printed != oracle {
                t.erratum("balance-edge-type-criterion", format!("edge-type criterion {printed}, corona balanced {oracle}"));
            }
        }
    }
    Ok(())
}

fn check_theorems(t: &mut Trial, g1: &SignedGraph, g2: &SignedGraph, regular: &SignedGraph) -> Result<()> {
    let built = neighbourhood_corona(g1, g2)?;
    let assembled = charpoly_corona(g1, g2, MatrixKind::A)?;
    let direct = char_poly(&built.graph.matrix(MatrixKind::A))?;
    t.check("theorem-a", assembled == direct, || format!("{g1:?} * {g2:?}: {assembled} vs {direct}"));
    let built = neighbourhood_corona(regular, g2)?;
    for kind in [MatrixKind::Q, MatrixKind::L] {
        let assembled = charpoly_corona(regular, g2, kind)?;
        let direct = char_poly(&built.graph.matrix(kind))?;
        t.check("theorem-ql", assembled == direct, || format!("{kind} {regular:?} * {g2:?}: {assembled} vs {direct}"));
    }
    Ok(())
}

fn check_coronal(t: &mut Trial, g: &SignedGraph) -> Result<()> {
    for kind in KINDS {
        let generic = graph_coronal(g, kind)?;
        match closed_form(g, kind) {
            Some(closed) => t.check("coronal-closed-form", closed == generic, || {
                format!("{kind} {g:?}: closed {closed}, generic {generic}")
            }),
            None => t.check("coronal-shape", false, || format!("no closed form for {g:?}")),
        }
    }
    if let Some(CoronalShape::Star { legs, centre }) = coronal_shape(g) {
        let printed = coronal_l_star_printed(legs, centre)?;
        let generic = graph_coronal(g, MatrixKind::L)?;
        if printed != generic {
            t.erratum("l-star-coronal-sign", format!("{g:?}: printed {printed}, generic {generic}"));
        }
    }
    Ok(())
}

fn check_spectra(t: &mut Trial, g1: &SignedGraph, regular: &SignedGraph, g2: &SignedGraph) -> Result<()> {
    let mut cases = vec![(g1, MatrixKind::A)];
    cases.extend([(regular, MatrixKind::A), (regular, MatrixKind::Q), (regular, MatrixKind::L)]);
    for (first, kind) in cases {
        for method in [Method::Theorem, Method::Proposition] {
            let report = corona_spectrum(first, g2, kind, method)?;
            for d in &report.discrepancies {
                match d.kind {
                    DiscrepancyKind::CrossCheck => t.check("spectra-agreement", false, || {
                        format!("{kind} {method} {first:?} * {g2:?}: {}", d.detail)
                    }),
                    DiscrepancyKind::PrintedFormula => t.erratum(&d.id, d.detail.clone()),
                }
            }
            if !report.has_cross_check_failures() {
                t.check("spectra-agreement", true, String::new);
            }
            let c = neighbourhood_corona(first, g2)?;
            let trace = c.graph.matrix(kind).trace() as f64;
            let sum = report.spectrum.sum();
            t.check("spectra-trace", (sum - trace).abs() < 1e-6, || format!("{kind} {method}: sum {sum}, trace {trace}"));
        }
    }
    Ok(())
}
