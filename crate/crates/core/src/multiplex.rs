//! The multiplex `M^{d,n}`: facets, its path-shaped triangulation, and the
//! induced triangulation of its boundary.
//!
//! The multiplex on vertices `0..=n` has facets `F_0, ..., F_n` where `F_i`
//! is the window of width `2d - 1` centred at `i` with `i` removed, clamped
//! into `[0, n]`. It is `P^{d,d,n}`, and the simplex when `n = d`.

use alloc::vec::Vec;

use crate::combinat::{retract, Vertex, VertexSet};
use crate::poly::IntPolynomial;
use crate::{Error, Result};

/// The facets `F_0, ..., F_n` of `M^{d,n}`, indexed by the vertex each one is
/// centred on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplexFacetList {
    d: u32,
    facets: Vec<VertexSet>,
}

impl MultiplexFacetList {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.facets.len() as u32 - 1
    }

    pub fn facet(&self, i: usize) -> &VertexSet {
        &self.facets[i]
    }

    pub fn as_slice(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Facet indices sorted by the colex order of their vertex sets.
    pub fn colex_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.facets.len()).collect();
        idx.sort_by(|&a, &b| self.facets[a].cmp(&self.facets[b]));
        idx
    }
}

fn check_dims(d: u32, n: u32) -> Result<()> {
    if d < 2 || n < d {
        return Err(Error::InvalidParams {
            d,
            k: d,
            n,
            reason: "a multiplex needs n >= d >= 2",
        });
    }
    Ok(())
}

pub fn multiplex_facets(d: u32, n: u32) -> Result<MultiplexFacetList> {
    check_dims(d, n)?;
    let w = i64::from(d);
    let facets: Vec<VertexSet> = (0..=i64::from(n))
        .map(|i| {
            let window: Vec<i64> = (i - w + 1..i).chain(i + 1..i + w).collect();
            retract(&window, n)
        })
        .collect();
    debug_assert!(facets.iter().all(|f| f.len() >= d as usize));
    Ok(MultiplexFacetList { d, facets })
}

/// The simplices `[i, i + d]`, `0 <= i <= n - d`, of the minimal
/// triangulation of the solid multiplex, in shelling order.
pub fn multiplex_triangulation(d: u32, n: u32) -> Result<Vec<VertexSet>> {
    check_dims(d, n)?;
    Ok((0..=n - d).map(|i| (i..=i + d).collect()).collect())
}

/// One boundary `(d-1)`-simplex of the triangulated multiplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySimplex {
    /// Index `j` of the multiplex facet `F_j` that contains the simplex.
    pub facet: usize,
    /// Index `i` of the solid simplex `[i, i + d]` it is a facet of.
    pub window: usize,
    pub simplex: VertexSet,
}

/// The boundary of the triangulated multiplex, ordered by facet index `j`
/// and then by window `i`. This order is a shelling.
///
/// `F_0 = [0, d-1]` and `F_n = [n-d+1, n]` are themselves simplices; every
/// other `F_j` is covered by `[i, i+d] \ {j}` for
/// `max(0, j-d+1) <= i <= min(j-1, n-d)`. The walls `[i+1, i+d]` shared by
/// consecutive solid simplices never appear.
pub fn multiplex_boundary_triangulation(d: u32, n: u32) -> Result<Vec<BoundarySimplex>> {
    check_dims(d, n)?;
    let mut out = Vec::new();
    for j in 0..=n {
        if j == 0 {
            out.push(BoundarySimplex { facet: 0, window: 0, simplex: (0..d).collect() });
        } else if j == n {
            out.push(BoundarySimplex {
                facet: n as usize,
                window: (n - d) as usize,
                simplex: (n - d + 1..=n).collect(),
            });
        } else {
            let lo = (j + 1).saturating_sub(d);
            let hi = (j - 1).min(n - d);
            for i in lo..=hi {
                let simplex: VertexSet = (i..=i + d).filter(|&v: &Vertex| v != j).collect();
                out.push(BoundarySimplex { facet: j as usize, window: i as usize, simplex });
            }
        }
    }
    Ok(out)
}

/// The toric g-polynomial of an `e`-dimensional multiplex with `v` vertices:
/// `1 + (v - 1 - e) x`.
pub fn multiplex_g(e: u32, v: u32) -> IntPolynomial {
    IntPolynomial::from_coeffs(alloc::vec![1, i64::from(v) - 1 - i64::from(e)])
}
