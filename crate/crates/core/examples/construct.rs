//! Build a neighbourhood corona, inspect its layout and degrees, and check the
//! Kronecker block form of its matrices against the construction.
//!
//!     cargo run --example construct

use signed_corona::corona::{corona_block_matrix, CoronaLayout, NodeOrigin};
use signed_corona::io::parse_graph;
use signed_corona::{neighbourhood_corona, MatrixKind};

fn main() -> signed_corona::Result<()> {
    let g1 = parse_graph(include_str!("data/balanced_path.sg"))?;
    let g2 = parse_graph(include_str!("data/edge.sg"))?;
    let c = neighbourhood_corona(&g1, &g2)?;
    let CoronaLayout { n1, n2 } = c.layout;
    println!("G1: {g1:?}\nG2: {g2:?}");
    println!(
        "corona: {} nodes (n1(n2+1) = {}), {} edges (m1 + n1 m2 + 2 m1 n2 = {})",
        c.graph.order(),
        n1 * (n2 + 1),
        c.graph.edge_count(),
        g1.edge_count() + n1 * g2.edge_count() + 2 * g1.edge_count() * n2
    );
    for v in 0..c.graph.order() {
        let origin = match c.layout.origin(v) {
            NodeOrigin::Base(i) => format!("u{i}"),
            NodeOrigin::Copy { copy, node } => format!("v{node} of copy {copy}"),
        };
        let signs: Vec<String> = c.graph.neighbours(v).map(|w| format!("{w}{}", c.graph.sign(v, w).unwrap())).collect();
        println!("  {v:>2} {origin:<14} degree {}  [{}]", c.graph.degree(v), signs.join(" "));
    }
    for kind in [MatrixKind::A, MatrixKind::L, MatrixKind::Q] {
        let same = corona_block_matrix(&g1, &g2, kind)? == c.graph.matrix(kind);
        println!("{kind}: block form equals construction: {same}");
    }
    println!("A of the corona:\n{:?}", c.graph.matrix(MatrixKind::A));
    Ok(())
}
