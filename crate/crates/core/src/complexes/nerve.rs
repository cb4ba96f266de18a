use std::collections::BTreeMap;

use super::{SimplicialComplex, Vertex};

/// A family of subcomplexes of a common ambient complex.
#[derive(Clone, Debug, Default)]
pub struct Cover {
    pub parts: Vec<SimplicialComplex>,
}

impl Cover {
    pub fn new(parts: Vec<SimplicialComplex>) -> Self {
        Cover { parts }
    }

    /// `true` iff the union of the parts is exactly `ambient`.
    pub fn covers(&self, ambient: &SimplicialComplex) -> bool {
        let union = self
            .parts
            .iter()
            .fold(SimplicialComplex::void(), |acc, p| super::union(&acc, p));
        &union == ambient
    }
}

/// The nerve of a cover, on labels `0..parts.len()`. A set of parts spans a
/// face iff the parts share at least one vertex.
pub fn nerve(cover: &Cover) -> SimplicialComplex {
    let mut owners: BTreeMap<Vertex, Vec<u32>> = BTreeMap::new();
    for (i, part) in cover.parts.iter().enumerate() {
        for &v in part.vertices() {
            owners.entry(v).or_default().push(i as u32);
        }
    }
    // A family of parts shares a vertex iff it lies inside the owner set of
    // that vertex, so the owner sets generate the nerve.
    SimplicialComplex::from_facets(
        owners
            .into_values()
            .map(|ids| ids.into_iter().map(Vertex::Label).collect::<Vec<_>>()),
    )
}
