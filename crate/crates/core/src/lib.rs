//! Analysis of finite Boolean dynamical systems under the asynchronous
//! (unbounded-delay) update model.
//!
//! A system is a vector field `Φ: B^n → B^n` given by its truth table.
//! Instead of iterating `Φ` synchronously, each coordinate may be recomputed
//! independently at arbitrary instants: the masked update `Φ^ν` refreshes
//! exactly the coordinates selected by `ν`. Schedules of masks produce
//! forward trajectories, and read against the update direction they produce
//! backward (anti-) trajectories, which branch because preimages need not be
//! unique.
//!
//! On top of the dynamics sit:
//!
//! - [`portrait`]: the state portrait, the non-deterministic one-step
//!   transition graph with excited-coordinate annotations;
//! - [`morphisms`]: isomorphism and anti-isomorphism pairs `(g, g′)` between
//!   systems, exhaustive pair search at small `n`, and machine verification
//!   that the pointwise, discrete, and timed characterizations agree;
//! - [`groups`]: closure of automorphism pairs into symmetry groups and
//!   classification of a system's symmetries;
//! - [`formats`]: the text file formats used by the command-line front end.
//!
//! ```
//! use bdsym_core::{Bijection, State, TruthTable};
//! use bdsym_core::morphisms::{check_anti_iso, check_iso};
//!
//! // componentwise complement on B^2: running it twice under any mask
//! // returns the start state, so the identity pair mirrors it onto itself
//! let phi = TruthTable::negation(2);
//! let id = Bijection::identity(2);
//! assert!(check_anti_iso(&phi, &phi, &id, &id).unwrap());
//! assert!(check_iso(&phi, &phi, &id, &id).unwrap());
//! ```

mod bijection;
mod error;
mod perm;
mod state;
mod table;

pub mod formats;
pub mod groups;
pub mod morphisms;
pub mod orbits;
pub mod portrait;

pub use bijection::Bijection;
pub use error::{Error, Result};
pub use perm::CoordPerm;
pub use state::{State, MAX_DIM};
pub use table::TruthTable;
