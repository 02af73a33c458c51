//! Separability and absolute-separability diagnostics for qubit-qudit states.
//!
//! States live on C^2 (x) C^d in the basis |a>|k> with the qubit index
//! slowest, so a density matrix splits into d x d blocks `[[X, Y], [Y^dagger, Z]]`.

pub mod criteria;
pub mod discord;
pub mod error;
pub mod matcore;
pub mod report;
pub mod repro;
pub mod roots;
pub mod sampling;
pub mod selfcheck;
pub(crate) mod serde_ext;
pub mod statefile;
pub mod states;
pub mod svg;

pub use criteria::{classify, classify_spectrum_only, Criterion, CriterionResult, Summary, Verdict};
pub use error::{Error, Result};
pub use report::ClassificationReport;
pub use states::{BlockForm, DensityMatrix};
