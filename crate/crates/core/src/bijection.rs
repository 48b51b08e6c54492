//! The bijection between the triangulation simplices `T` of facets with
//! `max F_j = n - 1` and `|U| = i`, and the `(k-d)`-subsets of
//! `[1, k-d+i-1]`. Defined for `n >= d + k - 1` and `1 <= i <= (d-1)/2`.
//!
//! Such a simplex has the block form
//!
//! ```text
//! T = [b, n-k-1] ∪ [n-k+1, c] ∪ Y ∪ [e, b+k]
//! ```
//!
//! with `Y` paired and `e = b+k-1` if `n-k-b` is odd, `e = b+k` otherwise.

use alloc::vec::Vec;

use crate::combinat::{binomial, even_positions, is_paired, maximal_runs, Interval, Params};
use crate::triangulation::triangulation_shelling;
use crate::{Error, Result, Vertex, VertexSet};

/// One simplex decoded into its blocks, with its image `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionRecord {
    pub t: VertexSet,
    /// `U = [b+1, n-k-1] ∪ E(Y) ∪ {b+k}`.
    pub u: VertexSet,
    pub b: u32,
    pub c: u32,
    pub e: u32,
    pub y: VertexSet,
    pub a1: u32,
    /// `[c+1, e-1] \ Y`, increasing.
    pub x_values: VertexSet,
    /// Number of pairs of `Y` below each `x_ℓ`.
    pub y_counts: Vec<u32>,
    pub a: VertexSet,
}

impl BijectionRecord {
    /// `i = |U|`.
    pub fn i(&self) -> u32 {
        self.u.len() as u32
    }
}

fn check_range(p: &Params, i: u32) -> Result<()> {
    if p.n() + 1 < p.d() + p.k() || i == 0 || i > p.m() {
        return Err(Error::BijectionRange { n: p.n(), i });
    }
    Ok(())
}

fn span(lo: u32, hi: u32) -> VertexSet {
    VertexSet::from_interval(Interval::new(i64::from(lo), i64::from(hi)))
}

/// Decodes `T` into its blocks and computes `A(T)`.
pub fn decode(t: &VertexSet, p: &Params) -> Result<BijectionRecord> {
    let shape = |reason| Error::BijectionShape { set: t.clone(), reason };
    let (d, k, n) = (p.d(), p.k(), p.n());
    if t.len() != d as usize {
        return Err(shape("wrong size"));
    }
    let nk = n.checked_sub(k).ok_or_else(|| shape("n < k"))?;
    let b = t.first().ok_or_else(|| shape("empty"))?;
    if b >= nk || b + d <= nk {
        return Err(shape("minimum outside [n-k-d+1, n-k-1]"));
    }
    let e = if (nk - b) % 2 == 1 { b + k - 1 } else { b + k };
    if !span(b, nk - 1).is_subset(t) || t.contains(nk) || !span(e, b + k).is_subset(t) {
        return Err(shape("end blocks missing"));
    }
    if t.last() != Some(b + k) {
        return Err(shape("maximum is not b+k"));
    }
    let middle = t.intersection(&span(nk + 1, e - 1));
    let c = maximal_runs(&middle)
        .first()
        .filter(|r| r.lo == i64::from(nk) + 1)
        .map_or(nk, |r| r.hi as u32);
    if (c - nk) % 2 == 1 {
        return Err(shape("block after n-k has odd length"));
    }
    let y = middle.difference(&span(nk + 1, c));
    if !is_paired(&y) {
        return Err(shape("middle part is not paired"));
    }
    let mut u: Vec<Vertex> = span(b + 1, nk - 1).iter().collect();
    for r in maximal_runs(&y) {
        u.extend(even_positions(r).iter());
    }
    u.push(b + k);
    let a1 = nk - b;
    let x_values = span(c + 1, e - 1).difference(&y);
    let y_counts: Vec<u32> = x_values
        .iter()
        .map(|x| y.iter().filter(|&v| v < x).count() as u32 / 2)
        .collect();
    let a = x_values
        .iter()
        .enumerate()
        .map(|(l, _)| a1 + y_counts[l] + l as u32)
        .collect();
    Ok(BijectionRecord { t: t.clone(), u: u.into_iter().collect(), b, c, e, y, a1, x_values, y_counts, a })
}

/// `A(T) = {a_1 + y(x_ℓ) + ℓ - 1}`, after checking `|U(T)| = i`.
pub fn facet_to_subset(t: &VertexSet, p: &Params, i: u32) -> Result<VertexSet> {
    check_range(p, i)?;
    let rec = decode(t, p)?;
    if rec.i() != i {
        return Err(Error::BijectionShape { set: t.clone(), reason: "minimal new face has the wrong size" });
    }
    Ok(rec.a)
}

/// The inverse map. For `k = d` the only subset is `∅`, which is sent to
/// the simplex with `a_1 = i` and `Y = ∅`.
pub fn subset_to_facet(a: &VertexSet, p: &Params, i: u32) -> Result<VertexSet> {
    check_range(p, i)?;
    let (d, k, n) = (p.d(), p.k(), p.n());
    if a.len() != (k - d) as usize || a.first().is_some_and(|x| x < 1) || a.last().is_some_and(|x| x > k - d + i - 1) {
        return Err(Error::BijectionShape { set: a.clone(), reason: "not a (k-d)-subset of [1, k-d+i-1]" });
    }
    let a1 = a.first().unwrap_or(i);
    let chi = a1 % 2;
    let nk = n - k;
    let x1 = nk + d + a1 - 2 * i - chi;
    let removed: VertexSet = a.iter().enumerate().map(|(l, al)| x1 + 2 * (al - a1) - l as u32).collect();
    let y = span(x1, n - a1 - 1 - chi).difference(&removed);
    let t = span(nk - a1, nk - 1)
        .union(&span(nk + 1, x1 - 1))
        .union(&y)
        .union(&span(n - a1 - chi, n - a1));
    Ok(t)
}

/// The simplices of the shelled triangulation with `max F_j = n - 1` and
/// `|U| = i`, decoded, in shelling order.
pub fn bijection_rows(p: &Params, i: u32) -> Result<Vec<BijectionRecord>> {
    check_range(p, i)?;
    let n = p.n();
    let steps = triangulation_shelling(p)?;
    let mut facet_max = Vec::new();
    for s in &steps {
        if facet_max.len() < s.facet_index {
            facet_max.push(0);
        }
        facet_max[s.facet_index - 1] = facet_max[s.facet_index - 1].max(s.simplex.last().unwrap_or(0));
    }
    steps
        .iter()
        .filter(|s| facet_max[s.facet_index - 1] + 1 == n && s.minimal_new_face.len() == i as usize)
        .map(|s| {
            let rec = decode(&s.simplex, p)?;
            if rec.u != s.minimal_new_face {
                return Err(Error::BijectionShape { set: s.simplex.clone(), reason: "decoded U differs from the shelling" });
            }
            Ok(rec)
        })
        .collect()
}

/// Steps with `max F_j = n - 1` and `|U| = i`. Defined for every `i` and
/// every `n`; only for `n >= d + k - 1` does it equal the increase
/// `h_i(P^{d,k,n}) - h_i(P^{d,k,n-1})`.
pub fn count_by_size(p: &Params, i: u32) -> Result<usize> {
    let n = p.n();
    let steps = triangulation_shelling(p)?;
    let mut max_of = alloc::collections::BTreeMap::new();
    for s in &steps {
        let m = max_of.entry(s.facet_index).or_insert(0);
        *m = (*m).max(s.simplex.last().unwrap_or(0));
    }
    Ok(steps
        .iter()
        .filter(|s| max_of[&s.facet_index] + 1 == n && s.minimal_new_face.len() == i as usize)
        .count())
}

/// `C(k-d+i-1, i-1)`.
pub fn expected_count(p: &Params, i: u32) -> i64 {
    let (d, k, i) = (i64::from(p.d()), i64::from(p.k()), i64::from(i));
    binomial(k - d + i - 1, i - 1)
}
