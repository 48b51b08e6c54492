//! Canonical JSON form of a face lattice: faces sorted by dimension, then
//! colex, with the empty face first and the whole polytope last.

use ordpoly_core::lattice::build_face_lattice_capped;
use ordpoly_core::{Error, FaceLattice, Vertex, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub d: u32,
    pub n: u32,
    pub faces: Vec<Vec<Vertex>>,
    pub dims: Vec<i32>,
}

impl LatticeJson {
    pub fn from_lattice(lat: &FaceLattice) -> Self {
        let mut order: Vec<usize> = (0..lat.len()).collect();
        order.sort_by_key(|&i| (lat.dim(i), lat.mask(i)));
        LatticeJson {
            d: lat.d(),
            n: lat.vertices().last().unwrap_or(0),
            faces: order.iter().map(|&i| lat.face(i).as_slice().to_vec()).collect(),
            dims: order.iter().map(|&i| lat.dim(i)).collect(),
        }
    }

    /// Rebuilds the lattice from the `(d-1)`-faces listed.
    pub fn to_lattice(&self, max_faces: usize) -> Result<FaceLattice, Error> {
        let facets: Vec<VertexSet> = self
            .faces
            .iter()
            .zip(&self.dims)
            .filter(|(_, &dim)| dim == self.d as i32 - 1)
            .map(|(f, _)| f.iter().copied().collect())
            .collect();
        build_face_lattice_capped(&facets, self.d, max_faces)
    }
}
