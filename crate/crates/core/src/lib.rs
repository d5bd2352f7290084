//! Exact spectra of the Cayley graphs `Γ(n,k) = Cay(Sym(n), C(n,k))` whose
//! connection set is the class of `(n-k)`-cycles, computed from symmetric
//! group characters and checked against explicit graphs.

pub mod charmn;
pub mod cli;
pub mod eigensolve;
pub mod error;
pub mod permgroup;
pub mod quotient;
pub mod spectra;
pub mod young;

pub use error::{Error, Result};
