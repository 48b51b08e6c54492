//! The invariant suite behind `ordpoly verify`.

use ordpoly_core::bijection::{count_by_size, expected_count, facet_to_subset, subset_to_facet};
use ordpoly_core::combinat::Family;
use ordpoly_core::hvector::{
    h_closed_form, h_from_contributions, h_prime_from_f, h_prime_from_shelling, multiplicial_h,
    shelling_contributions_from_parts, toric_h,
};
use ordpoly_core::lattice::build_face_lattice_capped;
use ordpoly_core::multiplex::{multiplex_facets, multiplex_triangulation};
use ordpoly_core::ordinary::{enumerate_facets, facets_by_recursion};
use ordpoly_core::shelling::{
    boolean_interval_check, colex_shelling, minimal_new_face_nonrecursive, minimal_new_face_recursive,
    topological_check_feasible, verify_shelling_partition, verify_shelling_topological,
};
use ordpoly_core::triangulation::{
    shallowness_check, simplicial_h, simplicial_h_of_complex, simplicial_shelling_check,
    triangulation_shelling,
};
use ordpoly_core::{Error, FaceLattice, HVector, Params, Verdict, VertexSet};

use crate::render::{braces, tuple};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    /// `None` on success, otherwise what went wrong.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// The four h computations for one instance. `closed` is `None` for even `d`.
#[derive(Clone, Debug)]
pub struct HComputations {
    pub toric: HVector,
    pub closed: Option<HVector>,
    pub multiplicial: HVector,
    pub triangulation: HVector,
    pub shelling: HVector,
    pub h_prime: HVector,
    pub f: Vec<i64>,
}

impl HComputations {
    pub fn all_agree(&self) -> bool {
        let h = &self.toric;
        self.closed.as_ref().map_or(true, |c| c == h)
            && &self.multiplicial == h
            && &self.triangulation == h
            && &self.shelling == h
    }
}

pub fn lattice(p: &Params, max_faces: usize) -> Result<FaceLattice, Error> {
    let facets = enumerate_facets(p)?;
    build_face_lattice_capped(&facets, p.d(), max_faces)
}

pub fn h_computations(p: &Params, max_faces: usize) -> Result<HComputations, Error> {
    let lat = lattice(p, max_faces)?;
    let f = lat.f_vector();
    let steps = colex_shelling(p)?;
    let tri = triangulation_shelling(p)?;
    let contributions = shelling_contributions_from_parts(&lat, &steps, &tri)?;
    let h_prime = h_prime_from_shelling(&steps, p.d());
    Ok(HComputations {
        toric: toric_h(&lat)?,
        closed: if p.d() % 2 == 1 { Some(h_closed_form(p)?) } else { None },
        multiplicial: multiplicial_h(&f, &lat.flag_f0()),
        triangulation: simplicial_h(&tri, p.d()),
        shelling: h_from_contributions(&h_prime, &contributions),
        h_prime,
        f,
    })
}

struct Suite(Vec<Check>);

impl Suite {
    fn push(&mut self, name: &'static str, failure: Option<String>) {
        self.0.push(Check { name, failure });
    }

    fn verdict(&mut self, name: &'static str, v: Verdict) {
        self.push(name, (!v.is_pass()).then(|| v.to_string()));
    }

    fn expect(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.push(name, (!ok).then(detail));
    }
}

/// Runs every invariant on `p`. A computation error becomes a failed check
/// named after the stage that raised it.
pub fn verify(p: &Params, max_faces: usize) -> Vec<Check> {
    let mut s = Suite(Vec::new());
    if let Err((stage, e)) = run_checks(p, max_faces, &mut s) {
        s.push(stage, Some(e.to_string()));
    }
    s.0
}

fn run_checks(p: &Params, max_faces: usize, s: &mut Suite) -> Result<(), (&'static str, Error)> {
    let d = p.d();
    let facets = enumerate_facets(p).map_err(|e| ("facets", e))?;
    if p.n() > p.k() {
        let rec = facets_by_recursion(p).map_err(|e| ("facet recursion", e))?;
        s.expect("facets: enumeration = recursion", *facets == *rec, || {
            format!("{} facets enumerated, {} by recursion", facets.len(), rec.len())
        });
    }

    let lat = build_face_lattice_capped(&facets, d, max_faces).map_err(|e| ("face lattice", e))?;
    s.expect("lattice Eulerian", lat.euler_check(), || match lat.euler_witness() {
        Some((lo, hi)) => format!("interval [{}, {}]", braces(&lo), braces(&hi)),
        None => "Euler relation fails".into(),
    });

    let h = h_computations(p, max_faces).map_err(|e| ("h-vector", e))?;
    s.expect("h symmetric", h.toric.is_symmetric(), || tuple(h.toric.as_slice()));
    s.expect("h: four routes agree", h.all_agree(), || {
        format!(
            "toric {} closed {} multiplicial {} triangulation {} shelling {}",
            tuple(h.toric.as_slice()),
            h.closed.as_ref().map_or("-".into(), |c| tuple(c.as_slice())),
            tuple(h.multiplicial.as_slice()),
            tuple(h.triangulation.as_slice()),
            tuple(h.shelling.as_slice())
        )
    });
    s.expect("h' = simplicial transform of f", h.h_prime == h_prime_from_f(&h.f), || {
        tuple(h.h_prime.as_slice())
    });
    s.expect("h >= h'", h.toric.dominates(&h.h_prime), || {
        format!("h {} h' {}", tuple(h.toric.as_slice()), tuple(h.h_prime.as_slice()))
    });
    let cyclic_h = h_of_cyclic(p, max_faces).map_err(|e| ("cyclic h-vector", e))?;
    let upper = (d as usize / 2 + 1)..=d as usize;
    s.expect(
        "h'_i = h_i(cyclic) for i > d/2",
        upper.clone().all(|i| h.h_prime.get(i) == cyclic_h.get(i)),
        || format!("h' {} cyclic {}", tuple(h.h_prime.as_slice()), tuple(cyclic_h.as_slice())),
    );
    let flag = lat.flag_f0();
    let fd = h.f[d as usize - 1];
    s.expect("sum h = f_{d-1} + f_{0,d-1} - d f_{d-1}", h.toric.sum() == fd + flag[d as usize - 1] - i64::from(d) * fd, || {
        format!("sum {} f_(d-1) {} f_(0,d-1) {}", h.toric.sum(), fd, flag[d as usize - 1])
    });

    let steps = colex_shelling(p).map_err(|e| ("colex shelling", e))?;
    s.verdict("shelling partition", verify_shelling_partition(&lat, &steps));
    let bad_interval = steps
        .iter()
        .find(|st| !boolean_interval_check(&lat, &st.minimal_new_face, &st.facet));
    s.expect("[G_j, F_j] Boolean", bad_interval.is_none(), || {
        let st = bad_interval.unwrap();
        format!("j = {}: [{}, {}]", st.index, braces(&st.minimal_new_face), braces(&st.facet))
    });
    let mut mismatch = None;
    for st in &steps {
        let a = minimal_new_face_nonrecursive(&st.facet, p).map_err(|e| ("nonrecursive G", e))?;
        let b = minimal_new_face_recursive(&st.facet, p).map_err(|e| ("recursive G", e))?;
        if a != b || a != st.minimal_new_face {
            mismatch = Some((st.index, a, b));
            break;
        }
    }
    s.expect("G nonrecursive = G recursive", mismatch.is_none(), || {
        let (j, a, b) = mismatch.clone().unwrap();
        format!("j = {j}: {} vs {}", braces(&a), braces(&b))
    });
    if topological_check_feasible(p) {
        let order: Vec<VertexSet> = steps.iter().map(|st| st.facet.clone()).collect();
        s.verdict("topological shelling", verify_shelling_topological(&lat, &order));
    }

    let tri = triangulation_shelling(p).map_err(|e| ("triangulation", e))?;
    let simplices: Vec<VertexSet> = tri.iter().map(|t| t.simplex.clone()).collect();
    let restriction: Vec<VertexSet> = tri.iter().map(|t| t.minimal_new_face.clone()).collect();
    s.verdict("triangulation shallow", shallowness_check(&simplices, &lat));
    s.verdict("triangulation shelling", simplicial_shelling_check(&simplices, Some(&restriction)));

    let contributions =
        shelling_contributions_from_parts(&lat, &steps, &tri).map_err(|e| ("contributions", e))?;
    let bad = contributions.iter().zip(&steps).find(|(c, st)| {
        c.a.iter().any(|&x| x < 0) || c.a.iter().sum::<i64>() != st.facet.len() as i64 - i64::from(d)
    });
    s.expect("a_{j,i} >= 0, sum = |F_j| - d", bad.is_none(), || {
        let (c, st) = bad.unwrap();
        format!("j = {}: a = {} for {}", c.index, tuple(&c.a), braces(&st.facet))
    });

    if p.n() > p.k() && p.n() + 1 >= d + p.k() {
        increment_checks(p, &h.triangulation, &tri, s).map_err(|e| ("h increment", e))?;
    }
    if p.family() == Family::Multiplex || p.k() == p.d() {
        multiplex_checks(p, &h, &steps, s).map_err(|e| ("multiplex", e))?;
    }
    Ok(())
}

fn h_of_cyclic(p: &Params, max_faces: usize) -> Result<HVector, Error> {
    toric_h(&lattice(&p.cyclic(), max_faces)?)
}

fn increment_checks(
    p: &Params,
    h: &HVector,
    tri: &[ordpoly_core::triangulation::TriangulationStep],
    s: &mut Suite,
) -> Result<(), Error> {
    let d = p.d();
    let prev = p.predecessor().expect("n > k");
    let h_prev = simplicial_h(&triangulation_shelling(&prev)?, d);
    let mut bad = None;
    for i in 1..d {
        let inc = h.get(i as usize) - h_prev.get(i as usize);
        let count = count_by_size(p, i)? as i64;
        let binom_ok = d % 2 == 0 || i > p.m() || inc == expected_count(p, i);
        if inc != count || !binom_ok {
            bad = Some(format!("i = {i}: increment {inc}, count {count}, binomial {}", expected_count(p, i)));
            break;
        }
    }
    s.push("h increment = C(k-d+i-1, i-1) = count_by_size", bad);
    if d % 2 == 0 {
        return Ok(());
    }

    let mut bad = None;
    let max_of = |j: usize| tri.iter().filter(|t| t.facet_index == j).filter_map(|t| t.simplex.last()).max();
    'outer: for t in tri {
        let i = t.minimal_new_face.len() as u32;
        if max_of(t.facet_index) != Some(p.n() - 1) || i == 0 || i > p.m() {
            continue;
        }
        let a = facet_to_subset(&t.simplex, p, i)?;
        let back = subset_to_facet(&a, p, i)?;
        if back != t.simplex {
            bad = Some(format!("{} -> {} -> {}", braces(&t.simplex), braces(&a), braces(&back)));
            break 'outer;
        }
    }
    s.push("bijection round trip", bad);
    Ok(())
}

fn multiplex_checks(
    p: &Params,
    h: &HComputations,
    steps: &[ordpoly_core::shelling::ShellingStep],
    s: &mut Suite,
) -> Result<(), Error> {
    let (d, n) = (p.d(), p.n());
    let list = multiplex_facets(d, n)?;
    let order: Vec<usize> = list.colex_order();
    let expected: Vec<usize> = (0..=(n - d) as usize)
        .chain((((n - d + 1) as usize)..n as usize).rev())
        .chain(std::iter::once(n as usize))
        .collect();
    let matches_steps = order.iter().zip(steps).all(|(&i, st)| *list.facet(i) == st.facet);
    s.expect("multiplex colex order", order == expected && matches_steps, || format!("{order:?}"));

    let e = (n - d) as i64;
    let mut toric = vec![e + 1; d as usize + 1];
    toric[0] = 1;
    toric[d as usize] = 1;
    let mut prime = vec![1; d as usize + 1];
    prime[1] = e + 1;
    s.expect("multiplex toric h", h.toric.as_slice() == toric, || tuple(h.toric.as_slice()));
    s.expect("multiplex h'", h.h_prime.as_slice() == prime, || tuple(h.h_prime.as_slice()));
    let solid = simplicial_h_of_complex(&multiplex_triangulation(d, n)?, d + 1);
    let mut want = vec![0; d as usize + 2];
    want[0] = 1;
    want[1] = e;
    s.expect("multiplex solid triangulation h", solid.as_slice() == want, || tuple(solid.as_slice()));
    Ok(())
}
