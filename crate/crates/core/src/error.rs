use core::fmt;

use crate::VertexSet;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// The triple (d, k, n) does not describe an ordinary polytope or multiplex
    /// this crate can build.
    InvalidParams {
        d: u32,
        k: u32,
        n: u32,
        reason: &'static str,
    },
    /// A set was required to lie inside a ground interval.
    NotSubset(VertexSet),
    /// A vertex set was expected to be a facet and is not.
    NotAFacet(VertexSet),
    /// The left shift needs `max F >= k`.
    ShiftPrecondition { facet: VertexSet, k: u32 },
    /// Two generators of one facet shift to different facets.
    AmbiguousShift(VertexSet),
    /// A facet decomposition left an interval of odd length.
    OddRun(VertexSet),
    /// Intersection closure of the facets is not graded of the right rank.
    NotGraded(VertexSet),
    /// The face lattice would exceed the configured face cap.
    TooManyFaces { limit: usize },
    /// The toric recursion produced an h-polynomial of the wrong shape.
    NotEulerian(VertexSet),
    /// A set is not contained in the vertex set of the lattice.
    NotInLattice(VertexSet),
    /// The two routes to the shelling contributions `a_{j,i}` disagree.
    ContributionMismatch { facet_index: usize },
    /// A triangulation simplex was produced twice by the window construction.
    DuplicateSimplex(VertexSet),
    /// The bijection needs `n >= d + k - 1` and `1 <= i <= (d-1)/2`.
    BijectionRange { n: u32, i: u32 },
    /// A set does not have the block shape the bijection decodes.
    BijectionShape {
        set: VertexSet,
        reason: &'static str,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParams { d, k, n, reason } => {
                write!(f, "invalid parameters (d={d}, k={k}, n={n}): {reason}")
            }
            Error::NotSubset(s) => write!(f, "{s} is not contained in the ground interval"),
            Error::NotAFacet(s) => write!(f, "{s} is not a facet"),
            Error::ShiftPrecondition { facet, k } => {
                write!(f, "left shift of {facet} needs a maximum vertex of at least {k}")
            }
            Error::AmbiguousShift(s) => write!(f, "right shift of {s} depends on the generator"),
            Error::OddRun(s) => write!(f, "facet {s} leaves an odd interval after decomposition"),
            Error::NotGraded(s) => write!(f, "face lattice is not graded at {s}"),
            Error::TooManyFaces { limit } => write!(f, "face lattice exceeds {limit} faces"),
            Error::NotEulerian(s) => write!(f, "toric recursion failed at face {s}"),
            Error::NotInLattice(s) => write!(f, "{s} is not a set of vertices of the lattice"),
            Error::ContributionMismatch { facet_index } => {
                write!(f, "shelling contributions disagree at facet {facet_index}")
            }
            Error::DuplicateSimplex(s) => write!(f, "simplex {s} occurs twice in the shelling"),
            Error::BijectionRange { n, i } => {
                write!(f, "bijection undefined for n={n}, i={i}")
            }
            Error::BijectionShape { set, reason } => write!(f, "{set}: {reason}"),
        }
    }
}

impl core::error::Error for Error {}
