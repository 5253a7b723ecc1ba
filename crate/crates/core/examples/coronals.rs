//! Signed coronals: the generic exact computation and the closed forms for
//! co-regular graphs and stars.
//!
//!     cargo run --example coronals

use signed_corona::coronal::{coronal_l_star, coronal_l_star_printed, coronal_shape, closed_form, graph_coronal};
use signed_corona::io::parse_graph;
use signed_corona::{MatrixKind, Sign};

fn main() -> signed_corona::Result<()> {
    for (name, text) in [
        ("triangle", include_str!("data/triangle.sg")),
        ("edge", include_str!("data/edge.sg")),
        ("star", include_str!("data/star.sg")),
        ("square", include_str!("data/square.sg")),
    ] {
        let g = parse_graph(text)?;
        println!("{name}: shape {:?}", coronal_shape(&g));
        for kind in [MatrixKind::A, MatrixKind::Q, MatrixKind::L] {
            let generic = graph_coronal(&g, kind)?;
            let closed = closed_form(&g, kind);
            let agree = closed.as_ref().map(|c| if *c == generic { "agrees" } else { "DIFFERS" });
            println!("  chi_{kind} = {generic}   closed form: {}", agree.unwrap_or("n/a"));
        }
    }
    println!("Laplacian star coronal, n = 2, centre +:");
    println!("  validated  {}", coronal_l_star(2, Sign::Plus)?);
    println!("  signless-sign variant {}", coronal_l_star_printed(2, Sign::Plus)?);
    Ok(())
}
