//! Spectra of the triangle * edge corona by the numeric eigensolver, by roots
//! of the assembled characteristic polynomial, and by closed-form eigenvalues.
//!
//!     cargo run --example spectra

use signed_corona::io::parse_graph;
use signed_corona::spectra::{charpoly_corona, corona_spectrum, Method};
use signed_corona::MatrixKind;

fn main() -> signed_corona::Result<()> {
    let g1 = parse_graph(include_str!("data/triangle.sg"))?;
    let g2 = parse_graph(include_str!("data/edge.sg"))?;
    for kind in [MatrixKind::A, MatrixKind::Q, MatrixKind::L] {
        println!("{kind}: f(x) = {}", charpoly_corona(&g1, &g2, kind)?);
        for method in [Method::Numeric, Method::Theorem, Method::Proposition] {
            let r = corona_spectrum(&g1, &g2, kind, method)?;
            println!("  {method:<12} {}  ({} discrepancies)", r.spectrum, r.discrepancies.len());
        }
    }
    // a signed second factor: star with one negative leg
    let star = parse_graph(include_str!("data/star.sg"))?;
    let r = corona_spectrum(&g1, &star, MatrixKind::L, Method::Proposition)?;
    println!("L, triangle * star: {}", r.spectrum);
    for d in r.discrepancies {
        println!("  {:?} {}: {}", d.kind, d.id, d.detail);
    }
    Ok(())
}
