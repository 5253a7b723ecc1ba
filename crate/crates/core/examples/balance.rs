//! Two balanced graphs whose corona is unbalanced, decided by the criterion
//! on the factors and by a switching search on the built corona.
//!
//!     cargo run --example balance

use signed_corona::census::{corona_balance_criterion_with, has_offending_edge, printed_balance_criterion};
use signed_corona::io::parse_graph;
use signed_corona::{neighbourhood_corona_with, CrossSign, SignedGraph};

fn report(name: &str, g1: &SignedGraph, g2: &SignedGraph) -> signed_corona::Result<()> {
    println!("{name}");
    for (i, g) in [g1, g2].into_iter().enumerate() {
        println!(
            "  factor {}: balanced {}, offending edge {}",
            i + 1,
            g.is_balanced(),
            has_offending_edge(g)
        );
    }
    for rule in CrossSign::ALL {
        let c = neighbourhood_corona_with(g1, g2, rule)?;
        println!(
            "  {rule:<13} corona balanced {:<5}  criterion {}",
            c.graph.is_balanced(),
            corona_balance_criterion_with(g1, g2, rule)
        );
    }
    println!("  edge-type criterion {}", printed_balance_criterion(g1, g2));
    Ok(())
}

fn main() -> signed_corona::Result<()> {
    let path = parse_graph(include_str!("data/balanced_path.sg"))?;
    let negative = parse_graph(include_str!("data/negative_edge.sg"))?;
    let positive = parse_graph(include_str!("data/edge.sg"))?;
    report("path * negative edge", &path, &negative)?;
    report("path * positive edge", &path, &positive)?;
    if let Some(s) = path.switching_function() {
        println!("switching that makes the path all-positive: {s:?}");
    }
    Ok(())
}
