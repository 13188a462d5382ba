//! Fibered classes of the magic manifold and their pseudo-Anosov monodromies.
//!
//! Classes live in the open cone `x > 0, y > 0, x > z, y > z` of
//! `H_2(N, ∂N)`. For each one the crate computes the fiber topology, the
//! dilatation polynomial and its largest root, the metrized digraph carried
//! by the invariant train track, its curve complex and clique polynomial.
//!
//! ```
//! use ffl_core::{dilatation_polynomial, largest_root_f64, FiberedClass, Tolerance};
//!
//! let a = FiberedClass::new(2, 6, 1).unwrap();
//! let f = dilatation_polynomial(&a);
//! assert_eq!(f.to_string(), "t^7 - t^6 - t^5 - t^2 - t + 1");
//! let lambda = largest_root_f64(&f, &Tolerance::default()).unwrap();
//! assert!((lambda - 1.72208).abs() < 1e-5);
//! ```

pub mod atlas;
pub mod curves;
pub mod error;
pub mod gamma;
pub mod graph;
pub mod homology;
pub mod polynomial;
pub mod roots;
pub mod scalar;
pub mod spectral;

pub use atlas::{
    asymptotic_report, fill_and_pull_back, in_section, minimizer_catalogue, scan, sequence, Cusp, FillReport,
    ScanFilter, Section, SequenceEntry, SequenceName, SequenceParam,
};
pub use curves::{
    build_complex, clique_polynomial, complex_from_caption, simple_cycles, verify_mcmullen, CurveComplex,
    McMullenReport, SimpleCurve,
};
pub use error::{Error, Result};
pub use gamma::{gamma_for, gamma_from_figure, gamma_plus, seed_graph, Family};
pub use graph::{Edge, MetricDigraph};
pub use homology::{is_fibered, satisfies_star, FiberTopology, FiberedClass, IjkClass, Sign, Slope};
pub use polynomial::{clique_polynomial_formula, dilatation_polynomial, lanneau_thiffeault, IntPolynomial};
pub use roots::{largest_real_root, largest_root_f64, smallest_positive_root, RootBracket, Tolerance};
pub use scalar::Scalar;
pub use spectral::{growth_rate_path_count, growth_rate_spectral, incidence_matrix, IncidenceMatrix, SpectralEstimate};

/// Working precision for reports and scans.
pub type Real = f64;

/// Exact scalar for rigorous root brackets.
pub type ExactReal = num_rational::BigRational;

pub type RealBracket = RootBracket<Real>;
pub type ExactBracket = RootBracket<ExactReal>;
pub type RealSpectralEstimate = SpectralEstimate<Real>;
