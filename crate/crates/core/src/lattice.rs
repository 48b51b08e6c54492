//! Face lattices as the intersection closure of a facet list.
//!
//! Faces are stored as `u64` vertex masks, so vertex labels must be below 64.
//! Numeric order on masks is colex order on vertex sets.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::{Error, Result, VertexSet};

/// All faces of a polytope, from `∅` (dimension -1) to the polytope itself
/// (dimension `d`), sorted by dimension and then colex.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    d: u32,
    masks: Vec<u64>,
    dims: Vec<i32>,
    lower: Vec<Vec<u32>>,
    upper: Vec<Vec<u32>>,
    index: BTreeMap<u64, u32>,
    facet_masks: Vec<u64>,
}

pub fn build_face_lattice(facets: &[VertexSet], d: u32) -> Result<FaceLattice> {
    build_face_lattice_capped(facets, d, usize::MAX)
}

/// Like [`build_face_lattice`], failing with [`Error::TooManyFaces`] once the
/// closure holds more than `max_faces` faces.
pub fn build_face_lattice_capped(facets: &[VertexSet], d: u32, max_faces: usize) -> Result<FaceLattice> {
    let mut facet_masks: Vec<u64> = facets.iter().map(VertexSet::mask).collect();
    facet_masks.sort_unstable();
    facet_masks.dedup();
    let top = facet_masks.iter().fold(0u64, |a, &m| a | m);
    if facet_masks.is_empty() {
        return Err(Error::NotGraded(VertexSet::empty()));
    }
    // Only the maximal members of the list are facets of the closure.
    let maximal: Vec<u64> = facet_masks
        .iter()
        .copied()
        .filter(|&f| !facet_masks.iter().any(|&g| g != f && f & g == f))
        .collect();

    let mut seen: BTreeSet<u64> = maximal.iter().copied().collect();
    seen.insert(0);
    seen.insert(top);
    let mut work: Vec<u64> = maximal.clone();
    while let Some(g) = work.pop() {
        for &f in &maximal {
            let h = g & f;
            if seen.insert(h) {
                if seen.len() > max_faces {
                    return Err(Error::TooManyFaces { limit: max_faces });
                }
                work.push(h);
            }
        }
    }

    // Process faces by vertex count: every lower cover has fewer vertices.
    let mut by_size: Vec<u64> = seen.iter().copied().collect();
    by_size.sort_by_key(|m| (m.count_ones(), *m));
    let mut dim_of: BTreeMap<u64, i32> = BTreeMap::new();
    let mut covers_of: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &g in &by_size {
        if g == 0 {
            dim_of.insert(0, -1);
            covers_of.insert(0, Vec::new());
            continue;
        }
        let candidates: BTreeSet<u64> = if g == top {
            maximal.iter().copied().collect()
        } else {
            maximal.iter().filter(|&&f| f & g != g).map(|&f| f & g).collect()
        };
        let covers: Vec<u64> = candidates
            .iter()
            .copied()
            .filter(|&h| !candidates.iter().any(|&o| o != h && o & h == h))
            .collect();
        let mut dim = None;
        for h in &covers {
            let dh = dim_of[h];
            if dim.is_some_and(|x| x != dh) {
                return Err(Error::NotGraded(VertexSet::from_mask(g)));
            }
            dim = Some(dh);
        }
        dim_of.insert(g, dim.map_or(-1, |x| x + 1));
        covers_of.insert(g, covers);
    }
    if dim_of[&top] != d as i32 {
        return Err(Error::NotGraded(VertexSet::from_mask(top)));
    }

    let mut masks = by_size;
    masks.sort_by_key(|m| (dim_of[m], *m));
    let index: BTreeMap<u64, u32> = masks.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
    let dims: Vec<i32> = masks.iter().map(|m| dim_of[m]).collect();
    let lower: Vec<Vec<u32>> = masks
        .iter()
        .map(|m| covers_of[m].iter().map(|c| index[c]).collect())
        .collect();
    let mut upper: Vec<Vec<u32>> = alloc::vec![Vec::new(); masks.len()];
    for (i, cs) in lower.iter().enumerate() {
        for &c in cs {
            upper[c as usize].push(i as u32);
        }
    }
    Ok(FaceLattice { d, masks, dims, lower, upper, index, facet_masks: maximal })
}

impl FaceLattice {
    pub fn d(&self) -> u32 {
        self.d
    }

    /// Number of faces, including `∅` and the top.
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn mask(&self, idx: usize) -> u64 {
        self.masks[idx]
    }

    pub fn face(&self, idx: usize) -> VertexSet {
        VertexSet::from_mask(self.masks[idx])
    }

    pub fn dim(&self, idx: usize) -> i32 {
        self.dims[idx]
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn dims(&self) -> &[i32] {
        &self.dims
    }

    pub fn index_of_mask(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).map(|&i| i as usize)
    }

    pub fn index_of(&self, face: &VertexSet) -> Option<usize> {
        self.index_of_mask(face.mask())
    }

    pub fn dim_of(&self, face: &VertexSet) -> Option<i32> {
        self.index_of(face).map(|i| self.dims[i])
    }

    pub fn is_face(&self, face: &VertexSet) -> bool {
        self.index_of(face).is_some()
    }

    pub fn top(&self) -> usize {
        self.masks.len() - 1
    }

    /// The vertex set of the polytope.
    pub fn vertices(&self) -> VertexSet {
        self.face(self.top())
    }

    /// Faces covered by face `idx`.
    pub fn lower_covers(&self, idx: usize) -> &[u32] {
        &self.lower[idx]
    }

    /// Faces covering face `idx`.
    pub fn upper_covers(&self, idx: usize) -> &[u32] {
        &self.upper[idx]
    }

    /// Facet masks in colex order.
    pub fn facet_masks(&self) -> &[u64] {
        &self.facet_masks
    }

    /// Indices of faces of dimension `i`.
    pub fn faces_of_dim(&self, i: i32) -> impl Iterator<Item = usize> + '_ {
        let lo = self.dims.partition_point(|&x| x < i);
        let hi = self.dims.partition_point(|&x| x <= i);
        lo..hi
    }

    /// Indices of the faces `H` with `lo ⊆ H ⊆ hi`.
    pub fn interval(&self, lo: u64, hi: u64) -> Vec<usize> {
        (0..self.masks.len())
            .filter(|&i| {
                let m = self.masks[i];
                m & lo == lo && m & hi == m
            })
            .collect()
    }

    /// Indices of the faces strictly below `hi`.
    pub fn proper_ideal(&self, hi: u64) -> Vec<usize> {
        (0..self.masks.len())
            .filter(|&i| {
                let m = self.masks[i];
                m != hi && m & hi == m
            })
            .collect()
    }

    /// `(f_0, ..., f_{d-1})`.
    pub fn f_vector(&self) -> Vec<i64> {
        (0..self.d as i32).map(|i| self.faces_of_dim(i).count() as i64).collect()
    }

    /// `(f_{0,0}, f_{0,1}, ..., f_{0,d-1})`, where `f_{0,i}` sums the vertex
    /// counts of the `i`-faces. `f_{0,0} = f_0`.
    pub fn flag_f0(&self) -> Vec<i64> {
        (0..self.d as i32)
            .map(|i| {
                self.faces_of_dim(i)
                    .map(|x| i64::from(self.masks[x].count_ones()))
                    .sum()
            })
            .collect()
    }

    /// True iff every interval of positive length has as many faces of even
    /// rank as of odd rank.
    pub fn euler_check(&self) -> bool {
        self.euler_witness().is_none()
    }

    /// An interval `[x, y]` of positive length violating the Euler relation.
    pub fn euler_witness(&self) -> Option<(VertexSet, VertexSet)> {
        for y in 0..self.masks.len() {
            let hi = self.masks[y];
            let ideal: Vec<usize> = (0..=y).filter(|&i| self.masks[i] & hi == self.masks[i]).collect();
            for &x in &ideal {
                if x == y {
                    continue;
                }
                let lo = self.masks[x];
                let sum: i64 = ideal
                    .iter()
                    .filter(|&&z| self.masks[z] & lo == lo)
                    .map(|&z| if self.dims[z] % 2 == 0 { 1 } else { -1 })
                    .sum();
                if sum != 0 {
                    return Some((self.face(x), self.face(y)));
                }
            }
        }
        None
    }

    /// The poset with face `idx` removed, covers recomputed from containment.
    /// Useful for exercising [`Self::euler_check`] on a non-lattice.
    pub fn without_face(&self, idx: usize) -> FaceLattice {
        let mut masks = self.masks.clone();
        let mut dims = self.dims.clone();
        masks.remove(idx);
        dims.remove(idx);
        let index: BTreeMap<u64, u32> = masks.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
        let below = |a: u64, b: u64| a != b && a & b == a;
        let lower: Vec<Vec<u32>> = masks
            .iter()
            .map(|&g| {
                let under: Vec<u64> = masks.iter().copied().filter(|&h| below(h, g)).collect();
                under
                    .iter()
                    .filter(|&&h| !under.iter().any(|&o| below(h, o)))
                    .map(|h| index[h])
                    .collect()
            })
            .collect();
        let mut upper: Vec<Vec<u32>> = alloc::vec![Vec::new(); masks.len()];
        for (i, cs) in lower.iter().enumerate() {
            for &c in cs {
                upper[c as usize].push(i as u32);
            }
        }
        let removed = self.masks[idx];
        let facet_masks = self.facet_masks.iter().copied().filter(|&f| f != removed).collect();
        FaceLattice { d: self.d, masks, dims, lower, upper, index, facet_masks }
    }

    /// The smallest face containing `sigma`: the intersection of the facets
    /// containing it, or the whole polytope if no facet does.
    pub fn carrier(&self, sigma: &VertexSet) -> Result<VertexSet> {
        let s = sigma.mask();
        let top = self.masks[self.top()];
        if sigma.last().is_some_and(|v| v >= 64) || s & top != s {
            return Err(Error::NotInLattice(sigma.clone()));
        }
        let m = self
            .facet_masks
            .iter()
            .filter(|&&f| f & s == s)
            .fold(top, |a, &f| a & f);
        Ok(VertexSet::from_mask(m))
    }
}
