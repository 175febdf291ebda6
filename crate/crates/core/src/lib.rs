//! netshrink-core: reduce complex networks by degree-ordered node removal
//! plus connectivity-preserving edge pruning, and check that the reduced
//! subgraphs keep the original's epidemic spreading dynamics and
//! Laplacian information flow.
//!
//! Modules.
//! - [`graph`]: undirected simple graphs with stable labels and the usual
//!   structural statistics.
//! - [`generate`]: seeded Erdős–Rényi and Barabási–Albert generators.
//! - [`reduce`]: degree-ordered node removal, edge pruning, and the
//!   composite pipeline.
//! - [`sample`]: baseline samplers (uniform node, Metropolis–Hastings
//!   walk, common-neighbor-aware walk).
//! - [`sir`]: event-driven continuous-time SIR ensembles and their
//!   observables.
//! - [`spectral`]: Laplacian partition function, spectral entropy, free
//!   energy; dense and stochastic routes.
//! - [`metrics`]: interpolation, Simpson quadrature, curve MAE and the
//!   overlap score.
//!
//! The numeric kernels are generic over [`scalar::Real`] (`f32`/`f64`);
//! the aliases below pin the `f64` instantiations the binaries use.

pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod reduce;
pub mod rng;
pub mod sample;
pub mod scalar;
pub mod sir;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Graph, NetworkSummary};

/// Default scalar type of the command-line tools.
pub type Scalar = f64;

pub type OverlapReport = metrics::OverlapReport<Scalar>;
pub type SirCurve = sir::SirCurve<Scalar>;
pub type SpreadingProfile = sir::SpreadingProfile<Scalar>;
pub type CurveMae = sir::CurveMae<Scalar>;
pub type LaplacianSpectrum = spectral::LaplacianSpectrum<Scalar>;
pub type SpectralSummary = spectral::SpectralSummary<Scalar>;
