//! Kauffman bracket, atom genus, Khovanov homology and minimality
//! certificates for classical and virtual link diagrams.
//!
//! ```
//! use kmc_core::{certify, parse_pd, Field, Verdict};
//!
//! let trefoil = parse_pd("X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3").unwrap();
//! let cert = certify(&trefoil, &[Field::Q]).unwrap();
//! assert_eq!(cert.verdict, Verdict::Minimal);
//! ```

pub mod atom;
pub mod diagram;
mod dsu;
mod error;
pub mod half;
pub mod k1_states;
pub mod khovanov;
pub mod minimality;
pub mod poly;
pub mod random;
pub mod state_sum;

pub use atom::{build_atom, euler_characteristic, genus, orientable, Atom, AtomSummary, GenusValue};
pub use diagram::{parse_gauss, parse_pd, ArcEnds, Diagram, Orientation, StateVector, Twist};
pub use error::{Error, Result};
pub use half::HalfInt;
pub use k1_states::{enumerate_k1, r_window, K1Census};
pub use khovanov::{build_complex, homology, khovanov_table, Field, KhChainComplex, KhTable};
pub use minimality::{certify, certify_from_table, Certificate, Limits, Verdict};
pub use poly::LaurentPoly;
pub use state_sum::{circles_of_state, is_1_complete, kauffman_bracket, span_bound, StateSummary};

/// Version of every JSON document this crate emits.
pub const SCHEMA_VERSION: u32 = 1;
