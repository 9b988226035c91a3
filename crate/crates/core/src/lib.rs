//! Exact lattice-point generating functions of cones that are symmetric
//! under reflection groups of types A, B and D.
//!
//! The generating function of such a cone is a sum of simple rational terms,
//! one per group element, built from a unimodular fundamental cone and the
//! descent sets of the group elements. This crate builds those sums
//! ([`genfunc`]), expands them as exact truncated series, and checks them
//! against brute-force lattice-point and lecture hall enumeration
//! ([`oracle`]) and against the closed-form permutation-statistic identities
//! they imply ([`identities`]).
//!
//! ```
//! use symcone::{conegeom::ConeSpec, coxeter::Kind, genfunc};
//!
//! let spec = ConeSpec::new(Kind::B, 3, vec![2, 4]).unwrap();
//! let series = genfunc::cone_series(&spec, 5).unwrap();
//! let coeffs: Vec<String> = series.coefficients().iter().map(|c| c.to_string()).collect();
//! assert_eq!(coeffs, ["1", "1", "1", "1", "5", "5"]);
//! ```

pub mod conegeom;
pub mod coxeter;
pub mod error;
pub mod genfunc;
pub mod identities;
pub mod oracle;

pub use error::{Error, Result};
