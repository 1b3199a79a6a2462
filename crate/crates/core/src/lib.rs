//! Coloured-graph calculus for root subsystems of `BC_n`.
//!
//! Symmetric subsets of the `BC_n` roots correspond to bichromatic graphs
//! on `n` nodes. Root subsystems are exactly the crystallographs, which
//! split into components of a few model types. Quotients of nested
//! crystallographs encode restricted root systems, and fusing loops gives
//! trichromatic graphs that encode hyperplane arrangements.
//!
//! ```
//! use crystallograph::{models, quotient, crystal};
//!
//! let g = models::d_graph(4);
//! let gp = models::g_rs(1, 2);
//! let q = quotient::quotient_graph(&g, &gp).unwrap();
//! assert_eq!(q.edge_count(), 7);
//! assert!(crystal::is_quasi_crystallograph(&q));
//! ```

pub mod arrange;
pub mod crystal;
pub mod error;
pub mod graphs;
pub mod io;
pub mod limits;
pub mod linalg;
pub mod models;
pub mod oracle;
pub mod quotient;
pub mod rational;
pub mod rootsys;

pub use error::{Error, Result};
pub use graphs::{Colour, ColouredEdge, ColouredGraph, Hyperplane, Palette};
pub use limits::Limits;
pub use rational::{Rational, RationalMatrix, RationalVector};
pub use rootsys::{Root, RootSet, SignedPermutation};
