//! The shallow boundary triangulation of `P^{d,k,n}`: every facet `F_j`
//! is cut into its windows of `d` consecutive vertices. The windows, taken
//! facet by facet in colex order, form a shelling whose minimal new faces
//! `U_{j,ℓ}` are computed right to left from `G_j`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::combinat::{is_gale, subsets_of_interval, Interval, Params};
use crate::hvector::{h_prime_from_f, HVector};
use crate::lattice::FaceLattice;
use crate::shelling::colex_shelling;
use crate::{Error, Result, Verdict, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationStep {
    /// 1-based position `j` of the facet in the colex shelling.
    pub facet_index: usize,
    /// 1-based window position `ℓ`, from `1` to `p_j - d + 1`.
    pub window: usize,
    pub simplex: VertexSet,
    pub minimal_new_face: VertexSet,
}

/// The size-`d` Gale subsets of the windows `[i, i+k]`, `0 <= i <= n-k`,
/// that contain `0`, or `n`, or both `i` and `i+k`. Colex sorted.
pub fn boundary_triangulation(p: &Params) -> Result<Vec<VertexSet>> {
    let p = Params::new(p.d(), p.k(), p.n())?;
    let (d, k, n) = (p.d(), p.k(), p.n());
    let mut out: BTreeSet<VertexSet> = BTreeSet::new();
    for i in 0..=n - k {
        let ground = Interval::new(i64::from(i), i64::from(i + k));
        for s in subsets_of_interval(i, i + k, d as usize) {
            let anchored = s.contains(0) || s.contains(n) || (s.contains(i) && s.contains(i + k));
            if anchored && is_gale(&s, ground)? {
                out.insert(s);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Windows of every facet in colex order, with their minimal new faces:
/// `U_{j,p_j-d+1} = G_j` and `U_{j,ℓ} = U_{j,ℓ+1} \ {z} ∪ {z-k, z-1}` with
/// `z = max T_{j,ℓ+1}`.
pub fn triangulation_shelling(p: &Params) -> Result<Vec<TriangulationStep>> {
    let d = p.d() as usize;
    let k = p.k();
    let mut out = Vec::new();
    let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
    for step in colex_shelling(p)? {
        let z = step.facet.as_slice();
        let windows: Vec<VertexSet> = z.windows(d).map(|w| VertexSet::from_sorted(w.to_vec()).expect("sorted")).collect();
        let mut u = vec![VertexSet::empty(); windows.len()];
        let last = windows.len() - 1;
        u[last] = step.minimal_new_face.clone();
        for l in (0..last).rev() {
            let top = windows[l + 1].last().expect("nonempty window");
            let low = top.checked_sub(k).ok_or_else(|| Error::NotAFacet(step.facet.clone()))?;
            u[l] = u[l + 1].without(top).with(low).with(top - 1);
        }
        for (l, (t, u)) in windows.into_iter().zip(u).enumerate() {
            if !seen.insert(t.clone()) {
                return Err(Error::DuplicateSimplex(t));
            }
            out.push(TriangulationStep { facet_index: step.index, window: l + 1, simplex: t, minimal_new_face: u });
        }
    }
    Ok(out)
}

/// `h_i = #{(j, ℓ) : |U_{j,ℓ}| = i}`.
pub fn simplicial_h(steps: &[TriangulationStep], d: u32) -> HVector {
    let mut h = vec![0i64; d as usize + 1];
    for s in steps {
        h[s.minimal_new_face.len()] += 1;
    }
    HVector::new(h)
}

/// The h-vector of the pure `(d-1)`-dimensional complex generated by
/// `simplices`, from its f-vector.
pub fn simplicial_h_of_complex(simplices: &[VertexSet], d: u32) -> HVector {
    let mut faces: BTreeSet<u64> = BTreeSet::new();
    for s in simplices {
        for_each_subset(s.mask(), |m| {
            faces.insert(m);
        });
    }
    let mut f = vec![0i64; d as usize];
    for m in faces {
        let c = m.count_ones() as usize;
        if (1..=d as usize).contains(&c) {
            f[c - 1] += 1;
        }
    }
    h_prime_from_f(&f)
}

fn for_each_subset(mask: u64, mut visit: impl FnMut(u64)) {
    let mut s = mask;
    loop {
        visit(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & mask;
    }
}

/// The restriction face of each simplex in a shelling order: the vertices
/// `v` of `T_j` such that `T_j \ {v}` lies in an earlier simplex.
pub fn restriction_faces(order: &[VertexSet]) -> Vec<VertexSet> {
    let mut ridges: BTreeSet<u64> = BTreeSet::new();
    order
        .iter()
        .map(|t| {
            let m = t.mask();
            let r: VertexSet = t.iter().filter(|&v| ridges.contains(&(m & !(1u64 << v)))).collect();
            for v in t.iter() {
                ridges.insert(m & !(1u64 << v));
            }
            r
        })
        .collect()
}

/// Checks that `order` shells the simplicial complex it generates: for each
/// simplex, its faces absent from all earlier simplices are exactly those
/// containing its restriction face. When `expected` is given, the
/// restriction faces must also equal it.
pub fn simplicial_shelling_check(order: &[VertexSet], expected: Option<&[VertexSet]>) -> Verdict {
    let restrictions = restriction_faces(order);
    let mut faces: BTreeSet<u64> = BTreeSet::new();
    for (j, t) in order.iter().enumerate() {
        if t.len() != order[0].len() {
            return Verdict::fail(t.clone(), "simplices of different sizes");
        }
        let r = restrictions[j].mask();
        if let Some(u) = expected {
            if u[j] != restrictions[j] {
                return Verdict::fail(t.clone(), "minimal new face differs from the restriction");
            }
        }
        let mut bad = None;
        for_each_subset(t.mask(), |s| {
            let new = !faces.contains(&s);
            if bad.is_none() && new != (s & r == r) {
                bad = Some(s);
            }
        });
        if let Some(s) = bad {
            return Verdict::fail(VertexSet::from_mask(s), "new faces are not an interval");
        }
        for_each_subset(t.mask(), |s| {
            faces.insert(s);
        });
    }
    Verdict::Pass
}

/// Every nonempty face `σ` of every simplex has `dim carrier(σ) <= 2 dim σ`.
pub fn shallowness_check(simplices: &[VertexSet], lat: &FaceLattice) -> Verdict {
    let mut faces: BTreeSet<u64> = BTreeSet::new();
    for s in simplices {
        for_each_subset(s.mask(), |m| {
            if m != 0 {
                faces.insert(m);
            }
        });
    }
    for m in faces {
        let sigma = VertexSet::from_mask(m);
        let Ok(carrier) = lat.carrier(&sigma) else {
            return Verdict::fail(sigma, "simplex leaves the vertex set");
        };
        let dc = lat.dim_of(&carrier).expect("carrier is a face");
        if dc > 2 * (sigma.len() as i32 - 1) {
            return Verdict::fail(sigma, "carrier dimension exceeds twice the simplex dimension");
        }
    }
    Verdict::Pass
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hvector::toric_h;
    use crate::lattice::build_face_lattice;
    use crate::multiplex::{multiplex_boundary_triangulation, multiplex_facets, multiplex_triangulation};
    use crate::ordinary::{enumerate_facets, tests::from_grid};
    use crate::Vertex;

    fn params(d: u32, k: u32, n: u32) -> Params {
        Params::new(d, k, n).unwrap()
    }

    fn vs<const N: usize>(a: [Vertex; N]) -> VertexSet {
        VertexSet::from(a)
    }

    fn digits(s: &str) -> VertexSet {
        s.chars().map(|c| c.to_digit(10).unwrap()).collect()
    }

    const TABLE_568: [((usize, usize), &str, &str); 24] = [
        ((1, 1), "01234    ", ""),
        ((2, 1), "012 45   ", "5"),
        ((3, 1), "0 2345   ", "35"),
        ((4, 1), "0 23 56  ", "6"),
        ((5, 1), "0  3456  ", "46"),
        ((6, 1), "01 34 6  ", "16"),
        ((6, 2), " 1 34 67 ", "7"),
        ((7, 1), "01  456  ", "156"),
        ((7, 2), " 1  4567 ", "57"),
        ((8, 1), "  2345  8", "8"),
        ((9, 1), "  23 56 8", "68"),
        ((10, 1), "   3456 8", "468"),
        ((11, 1), " 1234  7 ", "27"),
        ((11, 2), "  234  78", "78"),
        ((12, 1), " 12 45 7 ", "257"),
        ((12, 2), "  2 45 78", "578"),
        ((13, 1), "0123  6  ", "126"),
        ((13, 2), " 123  67 ", "267"),
        ((13, 3), "  23  678", "678"),
        ((14, 1), "   34 678", "4678"),
        ((15, 1), "012  56  ", "1256"),
        ((15, 2), " 12  567 ", "2567"),
        ((15, 3), "  2  5678", "5678"),
        ((16, 1), "    45678", "45678"),
    ];

    #[test]
    fn table_568() {
        let steps = triangulation_shelling(&params(5, 6, 8)).unwrap();
        assert_eq!(steps.len(), 24);
        for (s, ((j, l), t, u)) in steps.iter().zip(TABLE_568) {
            assert_eq!((s.facet_index, s.window), (j, l));
            assert_eq!(s.simplex, from_grid(t));
            assert_eq!(s.minimal_new_face, digits(u), "row ({j},{l})");
        }
        let row = steps.iter().find(|s| (s.facet_index, s.window) == (13, 2)).unwrap();
        assert_eq!(row.simplex, vs([1, 2, 3, 6, 7]));
        assert_eq!(row.minimal_new_face, vs([6, 7, 8]).without(8).with(2).with(7));
    }

    #[test]
    fn boundary_matches_windows() {
        for (d, k, n) in [(5u32, 6u32, 8u32), (5, 7, 11), (7, 9, 12), (5, 5, 9)] {
            let p = params(d, k, n);
            let mut windows: Vec<VertexSet> =
                triangulation_shelling(&p).unwrap().into_iter().map(|s| s.simplex).collect();
            windows.sort();
            assert_eq!(boundary_triangulation(&p).unwrap(), windows, "{p}");
        }
        let p = params(5, 6, 8);
        assert_eq!(boundary_triangulation(&p).unwrap().len(), 24);
        let facets = enumerate_facets(&p).unwrap();
        for t in boundary_triangulation(&p).unwrap() {
            assert!(facets.iter().any(|f| f.as_slice().windows(5).any(|w| w == t.as_slice())));
        }
    }

    #[test]
    fn cyclic_triangulation_is_the_boundary() {
        let p = params(5, 7, 7);
        let facets = enumerate_facets(&p).unwrap();
        assert_eq!(boundary_triangulation(&p).unwrap(), facets.to_vec());
        let steps = triangulation_shelling(&p).unwrap();
        assert_eq!(steps.len(), facets.len());
        let shelling = colex_shelling(&p).unwrap();
        for (t, s) in steps.iter().zip(&shelling) {
            assert_eq!(t.minimal_new_face, s.minimal_new_face);
        }
    }

    #[test]
    fn h_of_triangulation() {
        let p = params(5, 6, 8);
        let steps = triangulation_shelling(&p).unwrap();
        assert_eq!(simplicial_h(&steps, 5).as_slice(), [1, 4, 7, 7, 4, 1]);
        let simplices: Vec<VertexSet> = steps.iter().map(|s| s.simplex.clone()).collect();
        assert_eq!(simplicial_h_of_complex(&simplices, 5).as_slice(), [1, 4, 7, 7, 4, 1]);

        let m = params(5, 5, 8);
        let lat = build_face_lattice(multiplex_facets(5, 8).unwrap().as_slice(), 5).unwrap();
        let steps = triangulation_shelling(&m).unwrap();
        assert_eq!(simplicial_h(&steps, 5), toric_h(&lat).unwrap());

        let solid = multiplex_triangulation(5, 8).unwrap();
        assert_eq!(simplicial_h_of_complex(&solid, 6).as_slice(), [1, 3, 0, 0, 0, 0, 0]);
        assert_eq!(simplicial_h_of_complex(&subsets_of_interval(0, 5, 5), 5).as_slice(), [1; 6]);
    }

    #[test]
    fn steps_are_a_shelling() {
        let steps = triangulation_shelling(&params(5, 6, 8)).unwrap();
        let order: Vec<VertexSet> = steps.iter().map(|s| s.simplex.clone()).collect();
        let us: Vec<VertexSet> = steps.iter().map(|s| s.minimal_new_face.clone()).collect();
        assert!(simplicial_shelling_check(&order, Some(&us)).is_pass());
        let mut swapped = order.clone();
        swapped.swap(0, 23);
        assert!(!simplicial_shelling_check(&swapped, None).is_pass());
    }

    #[test]
    fn multiplex_boundary_order_is_a_shelling() {
        for (d, n) in [(5u32, 8u32), (4, 7), (3, 6)] {
            let order: Vec<VertexSet> =
                multiplex_boundary_triangulation(d, n).unwrap().into_iter().map(|b| b.simplex).collect();
            assert!(simplicial_shelling_check(&order, None).is_pass());
            let solid = multiplex_triangulation(d, n).unwrap();
            assert!(simplicial_shelling_check(&solid, None).is_pass());
        }
    }

    #[test]
    fn shallowness() {
        let p = params(5, 6, 8);
        let lat = build_face_lattice(&enumerate_facets(&p).unwrap(), 5).unwrap();
        assert!(shallowness_check(&boundary_triangulation(&p).unwrap(), &lat).is_pass());

        let m = build_face_lattice(multiplex_facets(5, 8).unwrap().as_slice(), 5).unwrap();
        assert!(shallowness_check(&multiplex_triangulation(5, 8).unwrap(), &m).is_pass());
        let boundary: Vec<VertexSet> =
            multiplex_boundary_triangulation(5, 8).unwrap().into_iter().map(|b| b.simplex).collect();
        assert!(shallowness_check(&boundary, &m).is_pass());

        // 0 and 9 of M^{5,9} span no proper face, so the edge {0,9} is deep.
        let m = build_face_lattice(multiplex_facets(5, 9).unwrap().as_slice(), 5).unwrap();
        assert_eq!(m.carrier(&vs([0, 9])).unwrap(), m.vertices());
        assert!(!shallowness_check(&[vs([0, 9])], &m).is_pass());
    }

    #[test]
    fn window_law() {
        let p = params(7, 9, 13);
        let steps = triangulation_shelling(&p).unwrap();
        for (t, s) in steps.iter().enumerate() {
            let last = steps.get(t + 1).map_or(true, |nx| nx.facet_index != s.facet_index);
            if !last {
                assert_eq!(s.simplex.last().unwrap() - s.simplex.first().unwrap(), 9);
            }
        }
    }
}
