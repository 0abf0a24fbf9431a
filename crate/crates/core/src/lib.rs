//! Exact computations in the quantum group U_q(sl_2) and its transmuted
//! (braided) Hopf structure.
//!
//! Coefficients live in Q(q) ([`qfield`]); algebra elements are kept in the
//! PBW basis `F^a K^b E^c` ([`pbw`]); [`hopf`] provides the coproduct,
//! counit, antipode and quantum adjoint action; [`braided`] builds the
//! braided coproduct, antipode, tensor product and adjoint action from a
//! truncated R-matrix. [`checks`] is the registry of named identities that
//! the `uqsl2` command-line tool verifies.

pub mod braided;
pub mod checks;
pub mod error;
pub mod hopf;
pub mod pbw;
pub mod qfield;
pub mod render;

pub use braided::{BraidedSeries, TruncationOrder};
pub use error::{Error, Result};
pub use hopf::TensorElem;
pub use pbw::{casimir, AlgElem, Generator, PbwMonomial};
pub use qfield::{LaurentPoly, QRat};
