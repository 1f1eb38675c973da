#![forbid(unsafe_code)]

//! Exact-arithmetic constructions around Galois rings: the modular
//! group algebra `F_{p^r}[G]` of the additive group of GR(p^r, m), its
//! Jennings basis and radical filtration, and the Generalized
//! Reed-Muller codes realized inside the group algebra as extended
//! cyclic codes, with explicit generator sets.
//!
//! Everything is computed exactly over small finite fields; all results
//! are deterministic given the parameters.
//!
//! ```
//! use grm_codes::{Algebra, GaloisRing, GrmContext, OrderingKind};
//!
//! let ring = GaloisRing::new(2, 2, 2, None).unwrap();      // GR(4, 2)
//! let algebra = Algebra::new(&ring, None).unwrap();        // F_4[G], dimension 16
//! let ctx = GrmContext::new(&algebra, OrderingKind::Integer, None, None).unwrap();
//!
//! let code = ctx.code(3).unwrap();                         // C_3, canonical basis
//! let radical = algebra.radical_power(3).unwrap();         // M^3, canonical basis
//! assert_eq!(code.dim(), 10);
//! assert_eq!(radical.dim(), 10);
//! assert_ne!(code, radical); // equal dimensions, different subspaces
//! ```

pub mod error;
pub mod ff;
pub mod galois_ring;
pub mod grm;
pub mod group_algebra;
pub mod linalg;
pub mod quotient;

pub mod checks;
pub mod report;

pub use error::{Error, Result};
pub use ff::{Embedding, FieldElem, Fq};
pub use galois_ring::{GaloisRing, GroupOrdering, RingElem};
pub use grm::{CyclicPoly, GrmContext, OrderingKind};
pub use group_algebra::{Algebra, AlgebraElem};
pub use linalg::{MatrixFq, SubspaceBasis};
