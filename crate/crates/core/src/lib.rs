//! Exact power-series engine for the index-two Yau-Zaslow counts on K3
//! surfaces.
//!
//! * [`series`]: truncated power series over `Q`.
//! * [`qseries`]: divisor sums, Eisenstein series and the level-two identity.
//! * [`pipeline`]: generating functions `N0`, `P0`, `M0` and the ODE solver.
//! * [`e0`]: closed-form invariant families of `E(0)` and convolution checks.
//! * [`cli`]: the `yzq` command line, file formats and the on-disk cache.

pub mod cli;
pub mod e0;
pub mod error;
pub mod pipeline;
pub mod qseries;
pub mod rational;
pub mod report;
pub mod series;

pub use error::{Error, Result};
pub use pipeline::SeriesId;
pub use rational::Rational;
pub use report::{IdentityReport, ReportSummary};
pub use series::PowerSeries;
