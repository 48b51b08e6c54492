//! Exact combinatorics of ordinary polytopes.
//!
//! An ordinary polytope `P^{d,k,n}` is a Gale polytope on the ordered vertex
//! set `0..=n` whose facets are multiplexes; the cyclic polytopes are the
//! case `n = k` and the multiplexes the case `k = d`. This crate builds
//! their facet lists and face lattices, the colex shelling with its
//! minimal new faces, the shallow boundary triangulation with a compatible
//! shelling, and the toric h-vector by several independent routes:
//!
//! * Stanley's recursion over the face lattice ([`hvector::toric_h`]),
//! * the closed binomial formula ([`hvector::h_closed_form`]),
//! * the multiplicial modified f-vector ([`hvector::multiplicial_h`]),
//! * minimal-new-face counts of the triangulation shelling
//!   ([`triangulation::simplicial_h`]).
//!
//! Everything is exact integer arithmetic over vertex sets. The crate is
//! `no_std` and only needs `alloc`.
//!
//! ```
//! use ordpoly_core::{hvector, lattice, ordinary, Params};
//!
//! let p = Params::new(5, 6, 8).unwrap();
//! let facets = ordinary::enumerate_facets(&p).unwrap();
//! assert_eq!(facets.len(), 16);
//!
//! let lat = lattice::build_face_lattice(&facets, p.d()).unwrap();
//! assert_eq!(lat.f_vector(), [9, 31, 52, 44, 16]);
//! assert_eq!(hvector::toric_h(&lat).unwrap().as_slice(), [1, 4, 7, 7, 4, 1]);
//! ```

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

pub mod bijection;
pub mod combinat;
mod error;
pub mod hvector;
pub mod lattice;
pub mod multiplex;
pub mod ordinary;
pub mod poly;
pub mod shelling;
pub mod triangulation;

pub use combinat::{Interval, Params, Vertex, VertexSet};
pub use error::{Error, Result};
pub use hvector::HVector;
pub use lattice::FaceLattice;
pub use poly::IntPolynomial;

/// Outcome of a structural check that can fail with a concrete witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail {
        /// A face (or simplex) exhibiting the failure.
        witness: VertexSet,
        reason: &'static str,
    },
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub(crate) fn fail(witness: VertexSet, reason: &'static str) -> Self {
        Verdict::Fail { witness, reason }
    }
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Fail { witness, reason } => write!(f, "fail: {reason} (witness {witness})"),
        }
    }
}
