//! Vertex sets, intervals, retraction, Gale and paired subsets, colex order.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

/// A vertex label. Vertices of `P^{d,k,n}` are `0..=n`.
pub type Vertex = u32;

/// Largest `n` accepted by [`Params`]; faces are bitmasks over `0..=n`.
pub const MAX_N: u32 = 62;

/// A finite set of vertices, stored strictly increasing.
///
/// Faces of polytopes and triangulations are identified with their vertex
/// sets throughout. The [`Ord`] impl is the colex order (compare largest
/// elements first, a set that runs out first is smaller), so sorting a
/// `Vec<VertexSet>` or iterating a `BTreeSet<VertexSet>` yields colex order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from a slice that must already be strictly increasing.
    pub fn from_sorted(v: Vec<Vertex>) -> Option<Self> {
        v.windows(2).all(|w| w[0] < w[1]).then_some(VertexSet(v))
    }

    /// The integers of `iv` that are nonnegative.
    pub fn from_interval(iv: Interval) -> Self {
        iv.iter()
            .filter_map(|x| Vertex::try_from(x).ok())
            .collect()
    }

    /// Decodes a bitmask (bit `v` set iff `v` is present).
    pub fn from_mask(mut mask: u64) -> Self {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            v.push(mask.trailing_zeros());
            mask &= mask - 1;
        }
        VertexSet(v)
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| {
            debug_assert!(v < 64);
            m | (1u64 << v)
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        let mut it = other.0.iter();
        self.0.iter().all(|x| it.any(|y| y == x))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().copied().filter(|&v| !other.contains(v)).collect())
    }

    pub fn with(&self, v: Vertex) -> VertexSet {
        let mut out = self.clone();
        if let Err(pos) = out.0.binary_search(&v) {
            out.0.insert(pos, v);
        }
        out
    }

    pub fn without(&self, v: Vertex) -> VertexSet {
        let mut out = self.clone();
        if let Ok(pos) = out.0.binary_search(&v) {
            out.0.remove(pos);
        }
        out
    }

    /// Adds `delta` to every element. Panics if an element would leave `u32`.
    pub fn shifted(&self, delta: i64) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .map(|&v| Vertex::try_from(i64::from(v) + delta).expect("shift out of range"))
                .collect(),
        )
    }

    /// The `t`-th smallest element, 0-based.
    pub fn nth(&self, t: usize) -> Vertex {
        self.0[t]
    }

    /// Elements as a digit string, e.g. `678`; comma separated once any
    /// label has two digits.
    pub fn digits(&self) -> alloc::string::String {
        use core::fmt::Write;
        let wide = self.last().is_some_and(|m| m >= 10);
        let mut s = alloc::string::String::new();
        for (i, v) in self.iter().enumerate() {
            if wide && i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{v}");
        }
        s
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(a: [Vertex; N]) -> Self {
        a.into_iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        colex_compare(self, other)
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// The integer interval `[lo, hi]`; empty when `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub const fn new(lo: i64, hi: i64) -> Self {
        Interval { lo, hi }
    }

    pub const fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub fn len(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            (self.hi - self.lo + 1) as usize
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn iter(&self) -> core::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// Which family a parameter triple belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `n = k`: the cyclic polytope `C^{d,k}` (simplicial).
    Cyclic,
    /// `k = d < n`: the multiplex `M^{d,n}`.
    Multiplex,
    /// `n > k > d`, `d` odd.
    Ordinary,
}

/// The triple `(d, k, n)` naming `P^{d,k,n}`: dimension `d`, first vertex on
/// `k` edges, vertices `0..=n`.
///
/// Accepted when `n >= k >= d` and either `d = 2m+1 >= 5`, or `k = d >= 2`
/// (multiplexes of any dimension, including the simplex `n = d`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    d: u32,
    k: u32,
    n: u32,
}

impl Params {
    pub fn new(d: u32, k: u32, n: u32) -> Result<Self> {
        let bad = |reason| Err(Error::InvalidParams { d, k, n, reason });
        if d < 2 {
            return bad("dimension must be at least 2");
        }
        if k < d {
            return bad("need k >= d");
        }
        if n < k {
            return bad("need n >= k");
        }
        if n > MAX_N {
            return bad("n exceeds the supported maximum of 62");
        }
        if k > d && (d % 2 == 0 || d < 5) {
            return bad("nonsimplicial ordinary polytopes need odd d >= 5 (or k = d)");
        }
        Ok(Params { d, k, n })
    }

    pub const fn d(&self) -> u32 {
        self.d
    }

    pub const fn k(&self) -> u32 {
        self.k
    }

    pub const fn n(&self) -> u32 {
        self.n
    }

    /// `(d - 1) / 2`.
    pub const fn m(&self) -> u32 {
        (self.d - 1) / 2
    }

    pub fn family(&self) -> Family {
        if self.n == self.k {
            Family::Cyclic
        } else if self.k == self.d {
            Family::Multiplex
        } else {
            Family::Ordinary
        }
    }

    /// The same polytope family with one vertex fewer, if `n > k`.
    pub fn predecessor(&self) -> Option<Params> {
        (self.n > self.k).then(|| Params { n: self.n - 1, ..*self })
    }

    pub fn with_n(&self, n: u32) -> Result<Params> {
        Params::new(self.d, self.k, n)
    }

    /// The cyclic polytope `C^{d,k} = P^{d,k,k}`.
    pub fn cyclic(&self) -> Params {
        Params { n: self.k, ..*self }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P^{{{},{},{}}}", self.d, self.k, self.n)
    }
}

/// Clamps every element into `[0, n]` and deduplicates.
pub fn retract(points: &[i64], n: u32) -> VertexSet {
    points
        .iter()
        .map(|&x| x.clamp(0, i64::from(n)) as Vertex)
        .collect()
}

/// Gale's evenness condition relative to an ordered ground interval: between
/// any two consecutive non-elements there is an even number of elements.
pub fn is_gale(set: &VertexSet, ground: Interval) -> Result<bool> {
    if set.iter().any(|v| !ground.contains(i64::from(v))) {
        return Err(Error::NotSubset(set.clone()));
    }
    let mut last_gap: Option<i64> = None;
    let mut inside = 0usize;
    for x in ground.iter() {
        if x >= 0 && set.contains(x as Vertex) {
            inside += 1;
        } else {
            if last_gap.is_some() && inside % 2 == 1 {
                return Ok(false);
            }
            last_gap = Some(x);
            inside = 0;
        }
    }
    Ok(true)
}

/// The elements in the even positions of an interval: `[a,b] ∩ {a+1, a+3, ...}`.
pub fn even_positions(iv: Interval) -> VertexSet {
    if iv.is_empty() {
        return VertexSet::empty();
    }
    (iv.lo + 1..=iv.hi)
        .step_by(2)
        .filter_map(|x| Vertex::try_from(x).ok())
        .collect()
}

/// Colex comparison: compare largest elements first; when one set runs out
/// while the compared suffixes agree, the shorter set is smaller.
pub fn colex_compare(f: &VertexSet, g: &VertexSet) -> Ordering {
    let mut a = f.0.iter().rev();
    let mut b = g.0.iter().rev();
    loop {
        match (a.next(), b.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) => match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            },
        }
    }
}

/// Maximal intervals of consecutive integers in `f`, left to right.
pub fn maximal_runs(f: &VertexSet) -> Vec<Interval> {
    let mut out: Vec<Interval> = Vec::new();
    for v in f.iter().map(i64::from) {
        match out.last_mut() {
            Some(last) if last.hi + 1 == v => last.hi = v,
            _ => out.push(Interval::new(v, v)),
        }
    }
    out
}

/// True iff every maximal run of consecutive integers has even length.
pub fn is_paired(f: &VertexSet) -> bool {
    maximal_runs(f).iter().all(|r| r.len() % 2 == 0)
}

/// All subsets of `range` of the given (even) size whose maximal runs all
/// have even length, in colex order.
///
/// A paired set splits uniquely into disjoint adjacent pairs `{a, a+1}`, so
/// these are enumerated by choosing `size / 2` pair starts at mutual distance
/// at least 2.
pub fn paired_subsets(range: Interval, size: usize) -> Vec<VertexSet> {
    let range = Interval::new(range.lo.max(0), range.hi);
    if size % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for offsets in paired_offsets(range.len(), size) {
        out.push(offsets.iter().map(|&o| (range.lo + o as i64) as Vertex).collect());
    }
    out.sort();
    out
}

/// Paired `size`-subsets of `0..len` as offset lists (unsorted family).
pub(crate) fn paired_offsets(len: usize, size: usize) -> Vec<Vec<u32>> {
    fn go(start: usize, len: usize, pairs_left: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pairs_left == 0 {
            out.push(cur.clone());
            return;
        }
        // Leave room for the remaining pairs, each needing two slots.
        let mut s = start;
        while s + 2 * pairs_left <= len {
            cur.push(s as u32);
            cur.push(s as u32 + 1);
            go(s + 2, len, pairs_left - 1, cur, out);
            cur.pop();
            cur.pop();
            s += 1;
        }
    }
    let mut out = Vec::new();
    if size % 2 == 0 {
        go(0, len, size / 2, &mut Vec::new(), &mut out);
    }
    out
}

/// Binomial coefficient with `C(n, r) = 0` outside `0 <= r <= n`.
pub fn binomial(n: i64, r: i64) -> i64 {
    if r < 0 || n < 0 || r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: i64 = 1;
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All `size`-element subsets of `[lo, hi]` as vertex sets, in colex order.
pub fn subsets_of_interval(lo: Vertex, hi: Vertex, size: usize) -> Vec<VertexSet> {
    let pool: Vec<Vertex> = (lo..=hi).collect();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..size).collect();
    if size > pool.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| pool[i]).collect());
        let mut t = size;
        loop {
            if t == 0 {
                out.sort();
                return out;
            }
            t -= 1;
            if idx[t] < pool.len() - size + t {
                break;
            }
        }
        idx[t] += 1;
        for u in t + 1..size {
            idx[u] = idx[u - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn vs<const N: usize>(a: [Vertex; N]) -> VertexSet {
        VertexSet::from(a)
    }

    #[test]
    fn retract_examples() {
        assert_eq!(retract(&[-1, 0, 2, 3, 5, 6], 8), vs([0, 2, 3, 5, 6]));
        assert_eq!(retract(&[1, 2, 3], 8), vs([1, 2, 3]));
        assert_eq!(retract(&[9, 10, 11], 8), vs([8]));
    }

    #[test]
    fn gale_examples() {
        assert!(is_gale(&vs([0, 1, 2, 3, 4]), Interval::new(0, 8)).unwrap());
        assert!(is_gale(&vs([1, 2]), Interval::new(0, 3)).unwrap());
        assert!(!is_gale(&vs([1, 2, 3]), Interval::new(0, 5)).unwrap());
        assert_eq!(
            is_gale(&vs([1, 9]), Interval::new(0, 5)),
            Err(Error::NotSubset(vs([1, 9])))
        );
    }

    #[test]
    fn even_position_examples() {
        assert_eq!(even_positions(Interval::new(4, 5)), vs([5]));
        assert_eq!(even_positions(Interval::new(7, 7)), VertexSet::empty());
        assert_eq!(even_positions(Interval::new(3, 8)), vs([4, 6, 8]));
        assert_eq!(even_positions(Interval::new(3, 2)), VertexSet::empty());
    }

    #[test]
    fn colex_examples() {
        assert_eq!(colex_compare(&vs([0, 1, 2, 3, 4]), &vs([0, 1, 2, 4, 5])), Ordering::Less);
        assert_eq!(
            colex_compare(&vs([4, 5, 6, 7, 8]), &vs([0, 1, 2, 5, 6, 7, 8])),
            Ordering::Greater
        );
        let f = vs([0, 3, 4]);
        assert_eq!(colex_compare(&f, &f), Ordering::Equal);
    }

    #[test]
    fn paired_examples() {
        assert_eq!(paired_subsets(Interval::new(2, 3), 2), vec![vs([2, 3])]);
        assert_eq!(paired_subsets(Interval::new(2, 4), 2), vec![vs([2, 3]), vs([3, 4])]);
        assert_eq!(paired_subsets(Interval::new(1, 4), 4), vec![vs([1, 2, 3, 4])]);
        assert_eq!(paired_subsets(Interval::new(1, 4), 0), vec![VertexSet::empty()]);
        assert!(paired_subsets(Interval::new(1, 4), 3).is_empty());
        assert!(paired_subsets(Interval::new(1, 2), 4).is_empty());
    }

    #[test]
    fn paired_subsets_match_brute_force_filter() {
        for len in 0..9u32 {
            for size in (0..=len as usize).step_by(2) {
                let brute: Vec<VertexSet> = subsets_of_interval(1, len, size)
                    .into_iter()
                    .filter(is_paired)
                    .collect();
                assert_eq!(paired_subsets(Interval::new(1, len as i64), size), brute);
            }
        }
    }

    #[test]
    fn runs_examples() {
        assert_eq!(
            maximal_runs(&vs([0, 1, 2, 4, 5, 7, 8])),
            vec![Interval::new(0, 2), Interval::new(4, 5), Interval::new(7, 8)]
        );
        assert_eq!(maximal_runs(&vs([3])), vec![Interval::new(3, 3)]);
        assert_eq!(
            maximal_runs(&vs([0, 2, 4])),
            vec![Interval::new(0, 0), Interval::new(2, 2), Interval::new(4, 4)]
        );
    }

    #[test]
    fn params_validation() {
        assert!(Params::new(5, 6, 8).is_ok());
        assert!(Params::new(4, 4, 9).is_ok());
        assert!(Params::new(4, 5, 9).is_err());
        assert!(Params::new(3, 4, 5).is_err());
        assert!(Params::new(5, 4, 8).is_err());
        assert!(Params::new(5, 6, 5).is_err());
        assert!(Params::new(5, 6, 63).is_err());
        assert_eq!(Params::new(5, 6, 6).unwrap().family(), Family::Cyclic);
        assert_eq!(Params::new(5, 5, 8).unwrap().family(), Family::Multiplex);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, -1), 0);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(subsets_of_interval(0, 6, 5).len(), 21);
    }

    #[test]
    fn digit_strings() {
        assert_eq!(vs([6, 7, 8]).digits(), "678");
        assert_eq!(vs([9, 10]).digits(), "9,10");
        assert_eq!(VertexSet::empty().digits(), "");
    }
}
