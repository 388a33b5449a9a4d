//! Generalized Turán numbers `ex(n, K_r, {C_{>=k}, M_{s+1}})`.
//!
//! The crate is split into:
//!
//! * [`graph`] exact primitives: clique counts, maximum matching, circumference,
//!   block decomposition, the star transform and Berge–Tutte style certificates;
//! * [`formulas`] exact closed-form values (arbitrary precision);
//! * [`constructors`] the extremal witness graphs;
//! * [`optimizer`] the finite maximization behind the even-cycle case;
//! * [`oracle`] exhaustive ground truth for small orders;
//! * [`selfcheck`] a quick embedded invariant suite used by the CLI.

pub mod constructors;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod optimizer;
pub mod oracle;
pub mod report;
pub mod selfcheck;

pub use error::{Error, Result};
pub use graph::{ForbiddenFamily, Graph};
