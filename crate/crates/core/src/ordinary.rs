//! Facets of `P^{d,k,n}` from Dinh's generator family, the left and right
//! shifts between `P^{d,k,n-1}` and `P^{d,k,n}`, and the facet recursion.
//!
//! A generator is
//!
//! ```text
//! X = [i, i+b-1] ∪ Y ∪ [i+k, i+k+b-1],   b = 2r, 1 <= r <= m,
//! ```
//!
//! with `Y` a paired `(d-1-b)`-subset of `[i+b+1, i+k-2]`. Its retraction to
//! `[0, n]` is a facet whenever it keeps at least `d` vertices, and every
//! facet arises this way.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Deref;

use crate::combinat::{is_gale, paired_offsets, retract, subsets_of_interval, Interval, Params};
use crate::{Error, Result, VertexSet};

/// One member `X` of the generator family, before retraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetGenerator {
    /// Window origin `i`; may be negative.
    pub origin: i64,
    /// Block width `b = 2r`. In the multiplex case `k = d` this is `d - 1`,
    /// which also covers even `d`.
    pub block: u32,
    /// Offsets of `Y` relative to `origin + block + 1`.
    inner: Vec<u32>,
}

impl FacetGenerator {
    /// `r = b / 2`.
    pub fn r(&self) -> u32 {
        self.block / 2
    }

    /// The paired middle part `Y`, as raw integers.
    pub fn inner(&self) -> Vec<i64> {
        let base = self.origin + i64::from(self.block) + 1;
        self.inner.iter().map(|&o| base + i64::from(o)).collect()
    }

    /// All points of `X`, increasing.
    pub fn points(&self, k: u32) -> Vec<i64> {
        let (i, b, k) = (self.origin, i64::from(self.block), i64::from(k));
        let mut out: Vec<i64> = (i..i + b).collect();
        out.extend(self.inner());
        out.extend(i + k..i + k + b);
        out
    }

    pub fn retract(&self, k: u32, n: u32) -> VertexSet {
        retract(&self.points(k), n)
    }

    /// The same generator moved one step right, `X + 1`.
    pub fn shifted(&self) -> FacetGenerator {
        FacetGenerator { origin: self.origin + 1, ..self.clone() }
    }
}

/// Every generator whose retraction to `[0, n]` has at least `d` vertices.
///
/// The origin ranges over `[1-k, n-1]`. For `i <= -k` only the right block
/// can clear `0`, giving at most `b < d` vertices; for `i >= n` everything
/// clamps to `n`.
pub fn generators(p: &Params) -> Vec<FacetGenerator> {
    let (d, k, n) = (p.d(), p.k(), p.n());
    let widths: Vec<u32> = if k == d { alloc::vec![d - 1] } else { (1..=p.m()).map(|r| 2 * r).collect() };
    let mut out = Vec::new();
    for &b in &widths {
        let inner_len = (k as usize).saturating_sub(b as usize + 2);
        let inner_size = (d - 1 - b) as usize;
        let inners = paired_offsets(inner_len, inner_size);
        for i in 1 - i64::from(k)..=i64::from(n) - 1 {
            for y in &inners {
                let g = FacetGenerator { origin: i, block: b, inner: y.clone() };
                if g.retract(k, n).len() >= d as usize {
                    out.push(g);
                }
            }
        }
    }
    out
}

/// Facets of one polytope, strictly increasing in colex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetList {
    params: Params,
    facets: Vec<VertexSet>,
}

impl FacetList {
    fn new(params: Params, mut facets: Vec<VertexSet>) -> Self {
        facets.sort();
        facets.dedup();
        FacetList { params, facets }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    /// Position of `f` in colex order, if it is a facet.
    pub fn index_of(&self, f: &VertexSet) -> Option<usize> {
        self.facets.binary_search(f).ok()
    }

    pub fn into_vec(self) -> Vec<VertexSet> {
        self.facets
    }
}

impl Deref for FacetList {
    type Target = [VertexSet];
    fn deref(&self) -> &[VertexSet] {
        &self.facets
    }
}

/// The `d`-element Gale subsets of `[0, k]`: facets of the cyclic polytope.
pub fn cyclic_facets(d: u32, k: u32) -> Vec<VertexSet> {
    let ground = Interval::new(0, i64::from(k));
    subsets_of_interval(0, k, d as usize)
        .into_iter()
        .filter(|s| is_gale(s, ground).unwrap_or(false))
        .collect()
}

pub fn enumerate_facets(p: &Params) -> Result<FacetList> {
    let p = Params::new(p.d(), p.k(), p.n())?;
    let facets = generators(&p).iter().map(|g| g.retract(p.k(), p.n())).collect();
    Ok(FacetList::new(p, facets))
}

/// Left shift of a facet with `max F >= k` into `P^{d,k,n-1}`:
/// `(F - 1) ∩ [1, n-1]`, together with `0` when `0` or `1` lies in `F`.
///
/// Membership of `F` in the facet list is not checked.
pub fn lsh(f: &VertexSet, p: &Params) -> Result<VertexSet> {
    let Some(prev) = p.predecessor() else {
        return Err(Error::InvalidParams {
            d: p.d(),
            k: p.k(),
            n: p.n(),
            reason: "no left shift out of a cyclic polytope",
        });
    };
    if f.last().map_or(true, |x| x < p.k()) {
        return Err(Error::ShiftPrecondition { facet: f.clone(), k: p.k() });
    }
    let keep_zero = f.contains(0) || f.contains(1);
    let out = f
        .iter()
        .filter(|&x| x >= 2 && x <= prev.n() + 1)
        .map(|x| x - 1)
        .chain(keep_zero.then_some(0))
        .collect();
    Ok(out)
}

/// Right shifts of all facets of `P^{d,k,n-1}`, keyed by facet.
fn right_shifts(p: &Params) -> Result<BTreeMap<VertexSet, VertexSet>> {
    let prev = p.predecessor().ok_or(Error::InvalidParams {
        d: p.d(),
        k: p.k(),
        n: p.n(),
        reason: "the right shift needs n > k",
    })?;
    let mut map: BTreeMap<VertexSet, VertexSet> = BTreeMap::new();
    for g in generators(&prev) {
        let src = g.retract(p.k(), prev.n());
        let dst = g.shifted().retract(p.k(), p.n());
        match map.get(&src) {
            Some(seen) if *seen != dst => return Err(Error::AmbiguousShift(src)),
            Some(_) => {}
            None => {
                map.insert(src, dst);
            }
        }
    }
    Ok(map)
}

/// Right shift of a facet `F` of `P^{d,k,n-1}` into `P^{d,k,n}`: the
/// retraction to `[0, n]` of `X + 1` for a generator `X` of `F`.
pub fn rsh(f: &VertexSet, p: &Params) -> Result<VertexSet> {
    right_shifts(p)?.remove(f).ok_or_else(|| Error::NotAFacet(f.clone()))
}

/// Facets of `P^{d,k,n}` built up from the cyclic polytope: at each step the
/// facets with `max F <= n-2` are kept and those with `max F >= n-2` are
/// right shifted.
pub fn facets_by_recursion(p: &Params) -> Result<FacetList> {
    let p = Params::new(p.d(), p.k(), p.n())?;
    if p.n() == p.k() {
        return Err(Error::InvalidParams {
            d: p.d(),
            k: p.k(),
            n: p.n(),
            reason: "the recursion starts above the cyclic polytope",
        });
    }
    let mut facets = cyclic_facets(p.d(), p.k());
    for n in p.k() + 1..=p.n() {
        let step = p.with_n(n)?;
        let shifts = right_shifts(&step)?;
        let mut next = Vec::with_capacity(facets.len() * 2);
        for f in &facets {
            let top = f.last().unwrap_or(0);
            if top + 2 <= n {
                next.push(f.clone());
            }
            if top + 2 >= n {
                next.push(shifts.get(f).cloned().ok_or_else(|| Error::NotAFacet(f.clone()))?);
            }
        }
        facets = next;
    }
    Ok(FacetList::new(p, facets))
}
