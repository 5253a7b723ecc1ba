//! Cospectral coronas: switching the first factor changes the graph but not
//! the spectrum of its corona with any second factor.
//!
//!     cargo run --example cospectral

use signed_corona::eigen::eig_symmetric;
use signed_corona::io::parse_graph;
use signed_corona::random::{random_signed_graph, trial_rng};
use signed_corona::spectra::{check_cospectral, COSPECTRAL_TOL};
use signed_corona::{neighbourhood_corona, MatrixKind, Sign};

fn main() -> signed_corona::Result<()> {
    let g1 = parse_graph(include_str!("data/square.sg"))?;
    let twin = g1.switched(&[Sign::Minus, Sign::Plus, Sign::Minus, Sign::Plus]);
    println!("G1   {g1:?}\ntwin {twin:?}");
    let g = random_signed_graph(&mut trial_rng(3, 0), 4, 0.5);
    println!("G    {g:?}");
    for kind in [MatrixKind::A, MatrixKind::L, MatrixKind::Q] {
        let a = neighbourhood_corona(&g1, &g)?.graph.matrix(kind);
        let b = neighbourhood_corona(&twin, &g)?.graph.matrix(kind);
        println!(
            "{kind}: identical matrices {}, cospectral {}  {}",
            a == b,
            check_cospectral(&a, &b, COSPECTRAL_TOL),
            eig_symmetric(&a)?
        );
    }
    Ok(())
}
