//! Skew-Hadamard doubling and the class-2 association schemes it produces.
//!
//! The crate builds Paley skew-Hadamard matrices, doubles them, extracts the
//! non-symmetric class-2 schemes, and checks by exact computation that the
//! scheme of a doubled matrix has an intransitive automorphism group
//! isomorphic to that of the original scheme, hence is not schurian.
//!
//! ```
//! use skewdouble::{hadamard::paley_skew_hadamard, scheme::scheme_from_skew_hadamard};
//! use skewdouble::schurian::verify_main_theorem;
//!
//! let x = scheme_from_skew_hadamard(&paley_skew_hadamard(7).unwrap()).unwrap();
//! let report = verify_main_theorem(&x).unwrap();
//! assert!(report.verified());
//! ```

pub mod autgroup;
pub mod bits;
pub mod cli;
pub mod error;
pub mod hadamard;
pub mod scheme;
pub mod schurian;
pub mod triples;

pub use error::{AxiomError, Error, Result};
