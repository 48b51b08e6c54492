//! The colex shelling of `P^{d,k,n}` and its minimal new faces, with
//! independent checkers for shellings of face lattices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::combinat::{binomial, even_positions, maximal_runs, Interval, Params};
use crate::lattice::FaceLattice;
use crate::ordinary::{enumerate_facets, lsh};
use crate::{Error, Result, Verdict, VertexSet};

/// Facet `F_j` of a shelling with its minimal new face `G_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingStep {
    /// 1-based position `j`.
    pub index: usize,
    pub facet: VertexSet,
    pub minimal_new_face: VertexSet,
}

/// A facet cut into its maximal runs: the exceptional left part `A^0`, the
/// even intervals `I^1, ..., I^p` and the interval `I^n` containing `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceDecomposition {
    pub a0: VertexSet,
    pub even_intervals: Vec<Interval>,
    pub top_run: Option<Interval>,
}

fn run_containing(runs: &[Interval], v: i64) -> Option<Interval> {
    runs.iter().copied().find(|r| r.contains(v))
}

pub fn decompose_facet(f: &VertexSet, p: &Params) -> Result<FaceDecomposition> {
    let (k, n) = (i64::from(p.k()), i64::from(p.n()));
    let Some(top) = f.last().map(i64::from) else {
        return Err(Error::NotAFacet(f.clone()));
    };
    let runs = maximal_runs(f);
    let top_run = run_containing(&runs, n);
    let a0_runs: Vec<Interval> = if top < k {
        run_containing(&runs, 0).into_iter().collect()
    } else if top < n {
        let first = run_containing(&runs, top - k).ok_or_else(|| Error::NotAFacet(f.clone()))?;
        let mut v = alloc::vec![first];
        if let Some(second) = run_containing(&runs, top - k + 2) {
            if second != first {
                v.push(second);
            }
        }
        v
    } else {
        run_containing(&runs, n - k).into_iter().filter(|r| Some(*r) != top_run).collect()
    };
    let mut even_intervals = Vec::new();
    for r in runs {
        if a0_runs.contains(&r) || Some(r) == top_run {
            continue;
        }
        if r.len() % 2 == 1 {
            return Err(Error::OddRun(f.clone()));
        }
        even_intervals.push(r);
    }
    let a0 = a0_runs.iter().flat_map(|r| VertexSet::from_interval(*r).as_slice().to_vec()).collect();
    Ok(FaceDecomposition { a0, even_intervals, top_run })
}

/// `G = E(I^1) ∪ ... ∪ E(I^p) ∪ I^n`.
///
/// Multiplexes (`k = d`) need one exception: the facets `F_i`,
/// `1 <= i <= n-d`, have `G = {max F_i}`, while the run rule would swallow
/// the whole facet into `A^0`.
pub fn minimal_new_face_nonrecursive(f: &VertexSet, p: &Params) -> Result<VertexSet> {
    if let Some(g) = multiplex_exception(f, p, p.k()..p.n()) {
        return Ok(g);
    }
    let dec = decompose_facet(f, p)?;
    let mut g: Vec<u32> = Vec::new();
    for iv in &dec.even_intervals {
        g.extend(even_positions(*iv).iter());
    }
    if let Some(iv) = dec.top_run {
        g.extend(VertexSet::from_interval(iv).iter());
    }
    Ok(g.into_iter().collect())
}

fn multiplex_exception(f: &VertexSet, p: &Params, tops: core::ops::Range<u32>) -> Option<VertexSet> {
    let top = f.last()?;
    (p.k() == p.d() && tops.contains(&top)).then(|| VertexSet::from([top]))
}

/// Minimal new face by descending to the cyclic polytope through left shifts.
///
/// For multiplexes the left shift sends `F_{n-d}` onto `F_{n-d-1}`, so the
/// facet with maximum `n-1` is answered directly: its `G` is `{n-1}`.
pub fn minimal_new_face_recursive(f: &VertexSet, p: &Params) -> Result<VertexSet> {
    let n = p.n();
    let Some(top) = f.last() else {
        return Err(Error::NotAFacet(f.clone()));
    };
    if n > p.k() {
        if let Some(g) = multiplex_exception(f, p, n - 1..n) {
            return Ok(g);
        }
    }
    if n == p.k() {
        let mut g: Vec<u32> = Vec::new();
        for r in maximal_runs(f) {
            if r.lo == 0 {
                continue;
            }
            if r.hi == i64::from(n) {
                g.extend(VertexSet::from_interval(r).iter());
            } else if r.len() % 2 == 1 {
                return Err(Error::OddRun(f.clone()));
            } else {
                g.extend(even_positions(r).iter());
            }
        }
        return Ok(g.into_iter().collect());
    }
    let prev = p.predecessor().expect("n > k");
    if top + 2 <= n {
        minimal_new_face_recursive(f, &prev)
    } else {
        Ok(minimal_new_face_recursive(&lsh(f, p)?, &prev)?.shifted(1))
    }
}

/// Facets in colex order, each with its minimal new face.
pub fn colex_shelling(p: &Params) -> Result<Vec<ShellingStep>> {
    let facets = enumerate_facets(p)?;
    let p = facets.params();
    facets
        .iter()
        .enumerate()
        .map(|(j, f)| {
            Ok(ShellingStep {
                index: j + 1,
                facet: f.clone(),
                minimal_new_face: minimal_new_face_nonrecursive(f, &p)?,
            })
        })
        .collect()
}

/// The minimal faces of `F_j` that lie in no earlier facet, read off the
/// lattice. A shelling has exactly one.
pub fn minimal_new_faces_brute(lat: &FaceLattice, order: &[VertexSet], j: usize) -> Vec<VertexSet> {
    let f = order[j].mask();
    let earlier: Vec<u64> = order[..j].iter().map(VertexSet::mask).collect();
    let new: Vec<u64> = lat
        .masks()
        .iter()
        .copied()
        .filter(|&h| h & f == h && !earlier.iter().any(|&e| h & e == h))
        .collect();
    new.iter()
        .copied()
        .filter(|&h| !new.iter().any(|&o| o != h && o & h == o))
        .map(VertexSet::from_mask)
        .collect()
}

/// Every face other than the top lies in exactly one interval `[G_j, F_j]`.
pub fn verify_shelling_partition(lat: &FaceLattice, steps: &[ShellingStep]) -> Verdict {
    let ranges: Vec<(u64, u64)> = steps
        .iter()
        .map(|s| (s.minimal_new_face.mask(), s.facet.mask()))
        .collect();
    for i in 0..lat.top() {
        let h = lat.mask(i);
        let hits = ranges.iter().filter(|&&(g, f)| h & g == g && h & f == h).count();
        if hits != 1 {
            let reason = if hits == 0 { "face in no interval" } else { "face in several intervals" };
            return Verdict::fail(lat.face(i), reason);
        }
    }
    Verdict::Pass
}

/// `[G, F]` is a Boolean lattice: `G ⊆ F` are faces, there are
/// `C(c, t)` faces of rank `t` above `G` (`c = dim F - dim G`), and each
/// face is determined by the set of atoms of the interval below it, every
/// set of atoms occurring.
pub fn boolean_interval_check(lat: &FaceLattice, g: &VertexSet, f: &VertexSet) -> bool {
    let (Some(gi), Some(fi)) = (lat.index_of(g), lat.index_of(f)) else {
        return false;
    };
    if !g.is_subset(f) {
        return false;
    }
    let (dg, df) = (lat.dim(gi), lat.dim(fi));
    let c = i64::from(df - dg);
    let members = lat.interval(g.mask(), f.mask());
    for t in 0..=c {
        let count = members.iter().filter(|&&i| i64::from(lat.dim(i) - dg) == t).count();
        if count as i64 != binomial(c, t) {
            return false;
        }
    }
    if c > 63 {
        return false;
    }
    let atoms: Vec<u64> = members
        .iter()
        .filter(|&&i| lat.dim(i) == dg + 1)
        .map(|&i| lat.mask(i))
        .collect();
    let mut seen: Vec<u64> = members
        .iter()
        .map(|&i| {
            let h = lat.mask(i);
            atoms
                .iter()
                .enumerate()
                .filter(|&(_, &a)| a & h == a)
                .fold(0u64, |acc, (t, _)| acc | 1 << t)
        })
        .collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == members.len() && seen.len() as u64 == 1u64 << c
}

/// Whether the exhaustive topological check is cheap enough to run.
pub fn topological_check_feasible(p: &Params) -> bool {
    p.d() <= 7 && p.n() <= p.k() + 4
}

/// Checks that `order` is a shelling of the boundary in the recursive sense:
/// the first facet's boundary is shellable, and each later facet meets the
/// union of the earlier ones in a nonempty union of its ridges that begins
/// some shelling of its own boundary. Facets of a polygon edge (two points)
/// may come in any order.
///
/// Exhaustive over subsets of each face's facets; see
/// [`topological_check_feasible`].
pub fn verify_shelling_topological(lat: &FaceLattice, order: &[VertexSet]) -> Verdict {
    let mut want: Vec<u64> = order.iter().map(VertexSet::mask).collect();
    want.sort_unstable();
    let mut have = lat.facet_masks().to_vec();
    have.sort_unstable();
    if want != have {
        return Verdict::fail(VertexSet::empty(), "order is not a permutation of the facets");
    }
    let mut chk = Topological::new(lat);
    let masks: Vec<u64> = order.iter().map(VertexSet::mask).collect();
    for j in 0..masks.len() {
        if !chk.step_ok(masks[j], &masks[..j]) {
            return Verdict::fail(order[j].clone(), "facet does not attach along a shelling prefix");
        }
    }
    Verdict::Pass
}

struct Topological<'a> {
    lat: &'a FaceLattice,
    prefix: BTreeMap<(u64, u64), bool>,
    complete: BTreeMap<(u64, u64), bool>,
}

impl<'a> Topological<'a> {
    fn new(lat: &'a FaceLattice) -> Self {
        Topological { lat, prefix: BTreeMap::new(), complete: BTreeMap::new() }
    }

    fn covers(&self, q: u64) -> Vec<u64> {
        let i = self.lat.index_of_mask(q).expect("face of the lattice");
        self.lat.lower_covers(i).iter().map(|&c| self.lat.mask(c as usize)).collect()
    }

    fn dim(&self, q: u64) -> i32 {
        self.lat.dim(self.lat.index_of_mask(q).expect("face of the lattice"))
    }

    /// Can facet `f` be added after the facets `earlier` of the same face?
    fn step_ok(&mut self, f: u64, earlier: &[u64]) -> bool {
        let ridges = self.covers(f);
        if earlier.is_empty() {
            return self.shellable_from(f, &ridges, 0);
        }
        let mut r = 0u64;
        let mut touched: Vec<u64> = Vec::new();
        for &g in earlier {
            let x = f & g;
            if x == 0 {
                continue;
            }
            match ridges.iter().position(|&c| c == x) {
                Some(t) => r |= 1 << t,
                None => touched.push(x),
            }
        }
        if r == 0 {
            return false;
        }
        let pure = touched
            .iter()
            .all(|&x| (0..ridges.len()).any(|t| r >> t & 1 == 1 && x & ridges[t] == x));
        pure && self.shellable_from(f, &ridges, r)
    }

    /// Some shelling of the boundary of `q` starts with the ridges in `r`.
    fn shellable_from(&mut self, q: u64, ridges: &[u64], r: u64) -> bool {
        if self.dim(q) <= 1 {
            return true;
        }
        self.prefix_ok(q, ridges, r) && self.completable(q, ridges, r)
    }

    fn members(ridges: &[u64], s: u64) -> Vec<u64> {
        (0..ridges.len()).filter(|&t| s >> t & 1 == 1).map(|t| ridges[t]).collect()
    }

    fn prefix_ok(&mut self, q: u64, ridges: &[u64], s: u64) -> bool {
        if s == 0 {
            return true;
        }
        if let Some(&v) = self.prefix.get(&(q, s)) {
            return v;
        }
        let mut ok = false;
        for t in 0..ridges.len() {
            if s >> t & 1 == 1 {
                let rest = s & !(1 << t);
                if self.prefix_ok(q, ridges, rest) && self.step_ok(ridges[t], &Self::members(ridges, rest)) {
                    ok = true;
                    break;
                }
            }
        }
        self.prefix.insert((q, s), ok);
        ok
    }

    fn completable(&mut self, q: u64, ridges: &[u64], s: u64) -> bool {
        let full = (1u64 << ridges.len()) - 1;
        if s == full {
            return true;
        }
        if let Some(&v) = self.complete.get(&(q, s)) {
            return v;
        }
        let mut ok = false;
        for t in 0..ridges.len() {
            if s >> t & 1 == 0
                && self.step_ok(ridges[t], &Self::members(ridges, s))
                && self.completable(q, ridges, s | 1 << t)
            {
                ok = true;
                break;
            }
        }
        self.complete.insert((q, s), ok);
        ok
    }
}
