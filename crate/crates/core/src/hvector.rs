//! Toric h-vectors: Stanley's recursion over the face lattice, the closed
//! binomial formula, the multiplicial modified f-vector, the shelling count
//! `h'` and the per-facet contributions `a_{j,i}` with `h = h' + Σ a_j`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::combinat::{binomial, Params};
use crate::lattice::{build_face_lattice, FaceLattice};
use crate::poly::IntPolynomial;
use crate::shelling::{colex_shelling, ShellingStep};
use crate::triangulation::{triangulation_shelling, TriangulationStep};
use crate::{Error, Result, VertexSet};

/// `(h_0, ..., h_d)`, with `h(P, x) = Σ h_i x^{d-i}`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HVector(Vec<i64>);

impl HVector {
    pub fn new(entries: Vec<i64>) -> Self {
        HVector(entries)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.0
    }

    /// The dimension `d`, one less than the number of entries.
    pub fn d(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Entrywise `self >= other`.
    pub fn dominates(&self, other: &HVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// `Σ h_i x^{d-i}`.
    pub fn polynomial(&self) -> IntPolynomial {
        let d = self.d();
        IntPolynomial::from_coeffs((0..=d).map(|e| self.get(d - e)).collect())
    }

    fn from_polynomial(p: &IntPolynomial, d: usize) -> Self {
        HVector((0..=d).map(|i| p.coeff(d - i)).collect())
    }
}

impl fmt::Debug for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, h) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{h}")?;
        }
        f.write_str(")")
    }
}

/// `h` and `g` polynomials of every face of a lattice, indexed like the
/// lattice. `h` of a face is the toric h of that face as a polytope, `g` its
/// truncated difference.
#[derive(Clone, Debug)]
pub struct ToricPolynomials {
    pub h: Vec<IntPolynomial>,
    pub g: Vec<IntPolynomial>,
}

/// `g_0 = h_0`, `g_i = h_i - h_{i-1}` for `1 <= i <= e/2`, where `h_i` is
/// the coefficient of `x^{e-i}`.
fn g_from_h(h: &IntPolynomial, e: usize) -> IntPolynomial {
    let hi = |i: usize| h.coeff(e - i);
    IntPolynomial::from_coeffs(
        (0..=e / 2)
            .map(|i| if i == 0 { hi(0) } else { hi(i) - hi(i - 1) })
            .collect(),
    )
}

/// Runs Stanley's recursion bottom up. Every face's `h` must come out
/// palindromic of degree `dim` with leading coefficient 1, which fails on
/// non-Eulerian input.
pub fn toric_polynomials(lat: &FaceLattice) -> Result<ToricPolynomials> {
    let d = lat.d() as usize;
    let pow: Vec<IntPolynomial> = (0..=d + 1).map(|t| IntPolynomial::binomial_power(-1, t)).collect();
    let mut h: Vec<IntPolynomial> = Vec::with_capacity(lat.len());
    let mut g: Vec<IntPolynomial> = Vec::with_capacity(lat.len());
    for q in 0..lat.len() {
        let dq = lat.dim(q);
        if dq < 0 {
            h.push(IntPolynomial::one());
            g.push(IntPolynomial::one());
            continue;
        }
        let qm = lat.mask(q);
        let mut acc = IntPolynomial::zero();
        // Faces are sorted by dimension, so everything below q comes first.
        for hidx in 0..q {
            let m = lat.mask(hidx);
            if m & qm == m && m != qm {
                let t = (dq - 1 - lat.dim(hidx)) as usize;
                acc = &acc + &(&g[hidx] * &pow[t]);
            }
        }
        let e = dq as usize;
        let palindromic = (0..=e).all(|i| acc.coeff(i) == acc.coeff(e - i));
        if acc.degree() != Some(e) || acc.coeff(e) != 1 || !palindromic {
            return Err(Error::NotEulerian(lat.face(q)));
        }
        g.push(g_from_h(&acc, e));
        h.push(acc);
    }
    Ok(ToricPolynomials { h, g })
}

pub fn toric_h(lat: &FaceLattice) -> Result<HVector> {
    let t = toric_polynomials(lat)?;
    Ok(HVector::from_polynomial(&t.h[lat.top()], lat.d() as usize))
}

/// The toric g-polynomial of the polytope itself.
pub fn toric_g(lat: &FaceLattice) -> Result<IntPolynomial> {
    let t = toric_polynomials(lat)?;
    Ok(t.g[lat.top()].clone())
}

/// `h_i = C(k-d+i, i) + (n-k) C(k-d+i-1, i-1)` for `1 <= i <= m`, `h_0 = 1`,
/// extended by symmetry. Odd `d` only.
pub fn h_closed_form(p: &Params) -> Result<HVector> {
    let p = Params::new(p.d(), p.k(), p.n())?;
    if p.d() % 2 == 0 {
        return Err(Error::InvalidParams {
            d: p.d(),
            k: p.k(),
            n: p.n(),
            reason: "the closed form needs odd d",
        });
    }
    let (d, k, n, m) = (i64::from(p.d()), i64::from(p.k()), i64::from(p.n()), p.m() as usize);
    let mut h = vec![0i64; d as usize + 1];
    for i in 0..=m {
        let ii = i as i64;
        h[i] = if i == 0 { 1 } else { binomial(k - d + ii, ii) + (n - k) * binomial(k - d + ii - 1, ii - 1) };
        h[d as usize - i] = h[i];
    }
    Ok(HVector(h))
}

/// `(f̄_{-1}, f̄_0, ..., f̄_{d-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModifiedFVector(Vec<i64>);

impl ModifiedFVector {
    /// `f̄_j` for `-1 <= j <= d-1`.
    pub fn get(&self, j: i32) -> i64 {
        self.0[(j + 1) as usize]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

/// The modified f-vector of a multiplicial polytope, from its f-vector
/// `(f_0, ..., f_{d-1})` and the flag entries `(f_{0,0}, ..., f_{0,d-1})`.
pub fn modified_f_vector(f: &[i64], f0: &[i64]) -> ModifiedFVector {
    let d = f.len();
    let excess = |j: usize| f0[j] - (j as i64 + 1) * f[j];
    let mut out = vec![1i64];
    for j in 0..d {
        let v = if j == 0 {
            f[0]
        } else if j + 1 == d {
            f[j] + excess(j)
        } else {
            f[j] + excess(j + 1) + excess(j)
        };
        out.push(v);
    }
    ModifiedFVector(out)
}

/// `Σ_{i=0}^{d} c_{i-1} (x-1)^{d-i}` read as an h-vector, where
/// `c = (1, c_0, ..., c_{d-1})`.
fn transform(c: &[i64]) -> HVector {
    let d = c.len() - 1;
    let mut acc = IntPolynomial::zero();
    for (i, &ci) in c.iter().enumerate() {
        acc = &acc + &IntPolynomial::binomial_power(-1, d - i).scale(ci);
    }
    HVector::from_polynomial(&acc, d)
}

pub fn multiplicial_h(f: &[i64], f0: &[i64]) -> HVector {
    transform(modified_f_vector(f, f0).as_slice())
}

/// The h-vector `P` would have if it were simplicial.
pub fn h_prime_from_f(f: &[i64]) -> HVector {
    let mut c = vec![1i64];
    c.extend_from_slice(f);
    transform(&c)
}

/// `f_ℓ = Σ_{i=0}^{ℓ+1} C(d-i, ℓ-i+1) h_i` for `0 <= ℓ <= d-1`.
pub fn f_from_h(h: &HVector) -> Vec<i64> {
    let d = h.d() as i64;
    (0..d)
        .map(|l| (0..=l + 1).map(|i| binomial(d - i, l - i + 1) * h.get(i as usize)).sum())
        .collect()
}

/// `h'_i = #{j : |G_j| = i}`.
pub fn h_prime_from_shelling(steps: &[ShellingStep], d: u32) -> HVector {
    let mut h = vec![0i64; d as usize + 1];
    for s in steps {
        h[s.minimal_new_face.len()] += 1;
    }
    HVector(h)
}

/// The contribution `a_j = (a_{j,0}, ..., a_{j,d})` of facet `F_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contribution {
    /// 1-based facet position `j`.
    pub index: usize,
    pub a: Vec<i64>,
}

impl Contribution {
    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }
}

/// `a_{j,i}` read off the lattice: with `b_{j,i} = Σ (f_0(H) - (i+1))` over
/// the `i`-faces `H` of `[G_j, F_j]`, `a_{j,i}` is the coefficient of
/// `y^{d-1-i}` in `b_j(y - 1)`, `b_j(x) = Σ b_{j,i} x^{d-1-i}`.
pub fn contributions_from_lattice(lat: &FaceLattice, steps: &[ShellingStep]) -> Vec<Contribution> {
    let d = lat.d() as usize;
    steps
        .iter()
        .map(|s| {
            let mut b = vec![0i64; d];
            for x in lat.interval(s.minimal_new_face.mask(), s.facet.mask()) {
                let i = lat.dim(x);
                if (0..d as i32).contains(&i) {
                    b[i as usize] += i64::from(lat.mask(x).count_ones()) - (i64::from(i) + 1);
                }
            }
            let bx = IntPolynomial::from_coeffs((0..d).map(|e| b[d - 1 - e]).collect());
            let ay = bx.translate(-1);
            let mut a = vec![0i64; d + 1];
            for (i, slot) in a.iter_mut().enumerate().take(d) {
                *slot = ay.coeff(d - 1 - i);
            }
            Contribution { index: s.index, a }
        })
        .collect()
}

/// `a_{j,i}` counted in the triangulation: the windows `ℓ <= p_j - d` of
/// `F_j` with `|U_{j,ℓ}| = i`.
pub fn contributions_from_triangulation(tri: &[TriangulationStep], facets: usize, d: u32) -> Vec<Contribution> {
    let mut out: Vec<Contribution> = (1..=facets)
        .map(|index| Contribution { index, a: vec![0; d as usize + 1] })
        .collect();
    for (t, s) in tri.iter().enumerate() {
        let last = tri.get(t + 1).map_or(true, |nx| nx.facet_index != s.facet_index);
        if !last {
            out[s.facet_index - 1].a[s.minimal_new_face.len()] += 1;
        }
    }
    out
}

/// Both routes to the contributions, failing if they disagree anywhere.
pub fn shelling_contributions_from_parts(
    lat: &FaceLattice,
    steps: &[ShellingStep],
    tri: &[TriangulationStep],
) -> Result<Vec<Contribution>> {
    let a = contributions_from_lattice(lat, steps);
    let b = contributions_from_triangulation(tri, steps.len(), lat.d());
    for (x, y) in a.iter().zip(&b) {
        if x != y {
            return Err(Error::ContributionMismatch { facet_index: x.index });
        }
    }
    Ok(a)
}

pub fn shelling_contributions(p: &Params) -> Result<Vec<Contribution>> {
    let steps = colex_shelling(p)?;
    let facets: Vec<VertexSet> = steps.iter().map(|s| s.facet.clone()).collect();
    let lat = build_face_lattice(&facets, p.d())?;
    let tri = triangulation_shelling(p)?;
    shelling_contributions_from_parts(&lat, &steps, &tri)
}

/// `h' + Σ_j a_j`.
pub fn h_from_contributions(h_prime: &HVector, contributions: &[Contribution]) -> HVector {
    let mut h = h_prime.as_slice().to_vec();
    for c in contributions {
        for (slot, a) in h.iter_mut().zip(&c.a) {
            *slot += a;
        }
    }
    HVector(h)
}
