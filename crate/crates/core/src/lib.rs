//! Neighbourhood coronas of signed graphs: construction, triad census,
//! signed coronals and spectra.

pub mod census;
pub mod charpoly;
pub mod corona;
pub mod coronal;
pub mod eigen;
pub mod error;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod poly;
pub mod random;
pub mod rational;
pub mod roots;
pub mod spectra;
pub mod spectrum;
pub mod verify;

pub use corona::{neighbourhood_corona, neighbourhood_corona_with, Corona, CoronaLayout, CrossSign};
pub use error::{Error, Result};
pub use graph::{CoRegularity, DegreeProfile, Marking, MatrixKind, Sign, SignedGraph};
pub use matrix::DenseMatrix;
pub use poly::IntPolynomial;
pub use rational::RationalFn;
pub use spectrum::{Eigenvalue, Spectrum};
