//! Exact linear representations of finite gyrogroups.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`], [`matrix`], [`subspace`]: exact linear algebra over ℚ and GF(p);
//! * [`gyro`]: validated Cayley tables, gyrations, built-in examples, and a
//!   sampled check of the Möbius disk;
//! * [`rep`]: representations, invariant subspaces, averaging projections,
//!   Maschke complements, spinning and decomposition;
//! * [`regular`]: the function space `L^gyr(G)`, the left regular
//!   representation on it, the augmentation functional σ, and a certifier for
//!   the failure of Maschke's theorem in modular characteristic;
//! * [`text`]: the plain-text file formats.
//!
//! ```
//! use gyrorep::{builtin, regular::RegularRep, Field};
//!
//! let g8 = builtin("g8").unwrap();
//! assert!(!g8.is_group());
//! let reg = RegularRep::new(&g8, Field::Prime(3)).unwrap();
//! assert_eq!(reg.rep().degree(), 4);
//! ```

pub mod error;
pub mod field;
pub mod gyro;
pub mod matrix;
pub mod regular;
pub mod rep;
pub mod subspace;
pub mod text;

pub use error::{GyroError, LinalgError, MobiusError, ParseError, RegularError, RepError};
pub use field::{Field, Scalar};
pub use gyro::{builtin, GyroAutomorphism, GyroTable};
pub use matrix::Matrix;
pub use rep::Representation;
pub use subspace::Subspace;
