//! Exact positive (semi-)definiteness decisions for 4th-order symmetric
//! tensors of dimension 2 and 3 with entries in {−1, 0, 1}.

pub mod certificates;
pub mod classifier;
pub mod criteria2d;
pub mod error;
pub mod form;
pub mod harness;
pub mod oracle;
pub mod realroots;
pub mod sos;
pub mod tern;
pub mod verdict;

pub use error::{Error, Result};
pub use form::{MultiIndex, Poly, QuarticPoly, SignedPerm, SymTensor4, Q};
pub use verdict::{CaseId, Family, Tri, Verdict};
