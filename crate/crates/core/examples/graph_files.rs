//! Graph file parsing with line-numbered errors, rendering, and spectrum
//! documents with input digests.
//!
//!     cargo run --example graph_files

use signed_corona::io::{parse_graph, parse_unsigned_edge_list, render_graph, InputDigest, SpectrumDocument};
use signed_corona::spectra::{corona_spectrum, Method};
use signed_corona::{neighbourhood_corona, MatrixKind};

fn main() -> signed_corona::Result<()> {
    let text = include_str!("data/star.sg");
    let star = parse_graph(text)?;
    println!("parsed {star:?}\nrendered:\n{}", render_graph(&star));
    for bad in ["2\n0 2 +\n", "3\n0 1 +\n1 0 -\n", "2\n0 1 ?\n"] {
        println!("{bad:?} -> {}", parse_graph(bad).unwrap_err());
    }
    let path = parse_unsigned_edge_list("3\n0 1\n1 2\n")?;
    let corona = neighbourhood_corona(&path, &star)?;
    println!("path * star has {} nodes", corona.graph.order());
    let report = corona_spectrum(&path, &star, MatrixKind::A, Method::Theorem)?;
    let doc = SpectrumDocument::new(MatrixKind::A, &report, vec![InputDigest::of("star.sg", text.as_bytes())]);
    let json = doc.to_json();
    println!("{json}");
    assert_eq!(SpectrumDocument::from_json(&json).expect("round trip"), doc);
    Ok(())
}
