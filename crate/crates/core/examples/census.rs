//! Edge and triad statistics of a corona from closed formulas over the
//! factors, against direct enumeration, for both cross-edge sign rules.
//!
//!     cargo run --example census

use signed_corona::census::{
    corona_statistics, edge_census_direct, edge_table, total_triads_formula, triad_census_direct, triad_table,
};
use signed_corona::io::parse_graph;
use signed_corona::{neighbourhood_corona_with, CrossSign};

fn main() -> signed_corona::Result<()> {
    let g1 = parse_graph(include_str!("data/square.sg"))?;
    let g2 = parse_graph(include_str!("data/star.sg"))?;
    for rule in CrossSign::ALL {
        let c = neighbourhood_corona_with(&g1, &g2, rule)?;
        let stats = corona_statistics(&g1, &g2, rule);
        println!("cross-edge rule {rule}");
        println!("  G1 cross summary {:?}", stats.marks1);
        println!("  G2 mark summary  {:?}", stats.marks2);
        println!("  edges  formula {:?}\n         direct  {:?}", edge_table(&stats), edge_census_direct(&c.graph));
        println!("  triads formula {:?}\n         direct  {:?}", triad_table(&stats), triad_census_direct(&c.graph));
    }
    println!("total triads by formula: {}", total_triads_formula(&g1, &g2));
    Ok(())
}
