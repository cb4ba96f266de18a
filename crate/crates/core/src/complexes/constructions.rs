use std::collections::BTreeSet;

use super::{SimplicialComplex, Vertex};
use crate::boards::Square;
use crate::error::{Error, Result};

/// `Link_K(v)`: faces `σ` with `v ∉ σ` and `σ ∪ {v} ∈ K`.
pub fn link(k: &SimplicialComplex, v: Vertex) -> Result<SimplicialComplex> {
    let vi = k.require_vertex(v)?;
    let facets: Vec<Vec<u32>> = k
        .facet_indices()
        .iter()
        .filter(|f| f.contains(&vi))
        .map(|f| f.iter().copied().filter(|&x| x != vi).collect())
        .collect();
    Ok(SimplicialComplex::from_index_sets(
        k.vertices().to_vec(),
        facets,
    ))
}

/// `Star_K(v)`: all facets through `v` together with their faces.
pub fn star(k: &SimplicialComplex, v: Vertex) -> Result<SimplicialComplex> {
    let vi = k.require_vertex(v)?;
    let facets = k
        .facet_indices()
        .iter()
        .filter(|f| f.contains(&vi))
        .cloned()
        .collect();
    Ok(SimplicialComplex::from_indexed(
        k.vertices().to_vec(),
        facets,
    ))
}

/// The anti-star `K ∖ {v}`: every face avoiding `v`.
pub fn antistar(k: &SimplicialComplex, v: Vertex) -> Result<SimplicialComplex> {
    let vi = k.require_vertex(v)?;
    let facets = k
        .facet_indices()
        .iter()
        .map(|f| f.iter().copied().filter(|&x| x != vi).collect())
        .collect();
    Ok(SimplicialComplex::from_index_sets(
        k.vertices().to_vec(),
        facets,
    ))
}

/// The join `K ∗ L`. Vertex sets must be disjoint.
pub fn join(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<SimplicialComplex> {
    let left: BTreeSet<Vertex> = k.vertices().iter().copied().collect();
    if let Some(&shared) = l.vertices().iter().find(|v| left.contains(v)) {
        return Err(Error::OverlappingVertices(shared));
    }
    let mut facets = Vec::with_capacity(k.num_facets() * l.num_facets());
    for f in k.facets() {
        for g in l.facets() {
            facets.push(f.iter().chain(g.iter()).copied().collect::<Vec<_>>());
        }
    }
    if facets.is_empty() {
        return Ok(SimplicialComplex::void());
    }
    Ok(SimplicialComplex::from_facets(facets))
}

/// Two vertices that do not occur in `k`, of the same kind as its vertices:
/// squares on fresh rows and columns for board complexes, labels otherwise.
pub(crate) fn fresh_pair(k: &SimplicialComplex) -> (Vertex, Vertex) {
    let squares: Vec<Square> = k.vertices().iter().filter_map(Vertex::as_square).collect();
    if !squares.is_empty() && squares.len() == k.num_vertices() {
        let r = squares.iter().map(|s| s.row).max().unwrap_or(0);
        let c = squares.iter().map(|s| s.col).max().unwrap_or(0);
        (Vertex::square(r + 1, c + 1), Vertex::square(r + 2, c + 2))
    } else {
        let top = k
            .vertices()
            .iter()
            .filter_map(|v| match v {
                Vertex::Label(l) => Some(*l + 1),
                Vertex::Square(_) => None,
            })
            .max()
            .unwrap_or(0);
        (Vertex::Label(top), Vertex::Label(top + 1))
    }
}

/// `ΣK = K ∗ S⁰` with a fresh pair of apex vertices.
pub fn suspension(k: &SimplicialComplex) -> SimplicialComplex {
    let (a, b) = fresh_pair(k);
    let sphere = SimplicialComplex::from_facets([[a], [b]]);
    join(k, &sphere).expect("apexes are fresh")
}

/// Union of face sets.
pub fn union(k: &SimplicialComplex, l: &SimplicialComplex) -> SimplicialComplex {
    SimplicialComplex::from_facets(k.facets().chain(l.facets()))
}

/// Intersection of face sets.
pub fn intersection(k: &SimplicialComplex, l: &SimplicialComplex) -> SimplicialComplex {
    if k.is_void() || l.is_void() {
        return SimplicialComplex::void();
    }
    let mut sets = Vec::new();
    for f in k.facets() {
        let f: BTreeSet<Vertex> = f.into_iter().collect();
        for g in l.facets() {
            sets.push(g.into_iter().filter(|v| f.contains(v)).collect::<Vec<_>>());
        }
    }
    SimplicialComplex::from_facets(sets)
}
