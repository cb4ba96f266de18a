//! Finite abstract simplicial complexes.
//!
//! A complex is stored as a sorted vertex registry plus its inclusion-maximal
//! facets, each facet a sorted list of registry indices. Faces of a given
//! dimension are materialized on first request and cached. The lexicographic
//! order of the face list of dimension `k` is the column order of every
//! boundary matrix built from the complex.
//!
//! Two degenerate complexes are kept apart: the *void* complex has no faces
//! at all, while `{∅}` has exactly the empty face. Only the latter has
//! nonzero reduced homology (in degree −1).

mod constructions;
mod faces;
mod nerve;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::boards::Square;
use crate::error::{Error, Result};

pub use constructions::{antistar, intersection, join, link, star, suspension, union};
pub use faces::FaceList;
pub use nerve::{nerve, Cover};

/// Identity of a vertex. Board-derived complexes use squares; abstract
/// complexes (nerves, fresh suspension points) use opaque labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Vertex {
    Square(Square),
    Label(u32),
}

impl Vertex {
    pub fn square(row: i32, col: i32) -> Self {
        Vertex::Square(Square::new(row, col))
    }

    pub fn as_square(&self) -> Option<Square> {
        match self {
            Vertex::Square(s) => Some(*s),
            Vertex::Label(_) => None,
        }
    }
}

impl From<Square> for Vertex {
    fn from(s: Square) -> Self {
        Vertex::Square(s)
    }
}

impl From<(i32, i32)> for Vertex {
    fn from(rc: (i32, i32)) -> Self {
        Vertex::Square(rc.into())
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Square(s) => write!(f, "{s}"),
            Vertex::Label(l) => write!(f, "#{l}"),
        }
    }
}

#[derive(Clone)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    facets: Vec<Box<[u32]>>,
    cache: Vec<OnceLock<FaceList>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.facets().map(|facet| {
                facet
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            }))
            .finish()
    }
}

impl SimplicialComplex {
    /// The void complex (no faces, not even the empty one).
    pub fn void() -> Self {
        Self::from_indexed(Vec::new(), Vec::new())
    }

    /// The complex `{∅}` whose only face is the empty face.
    pub fn empty_face() -> Self {
        Self::from_indexed(Vec::new(), vec![Box::from([])])
    }

    /// The full simplex on the given vertices.
    pub fn simplex<V: Into<Vertex>>(vertices: impl IntoIterator<Item = V>) -> Self {
        Self::from_facets([vertices
            .into_iter()
            .map(Into::into)
            .collect::<Vec<Vertex>>()])
    }

    /// Builds a complex from any family of faces: duplicates are dropped and
    /// only inclusion-maximal sets are kept as facets.
    pub fn from_facets<F, V>(facets: impl IntoIterator<Item = F>) -> Self
    where
        F: IntoIterator<Item = V>,
        V: Into<Vertex>,
    {
        let facets: Vec<BTreeSet<Vertex>> = facets
            .into_iter()
            .map(|f| f.into_iter().map(Into::into).collect())
            .collect();
        let registry: BTreeSet<Vertex> = facets.iter().flatten().copied().collect();
        let vertices: Vec<Vertex> = registry.into_iter().collect();
        let index: BTreeMap<Vertex, u32> = vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u32))
            .collect();
        let indexed = facets
            .iter()
            .map(|f| f.iter().map(|v| index[v]).collect::<Vec<u32>>())
            .collect();
        Self::from_index_sets(vertices, indexed)
    }

    /// Facets given as index lists into `vertices` (which must be sorted and
    /// duplicate free). Non-maximal sets are removed, unused vertices pruned.
    pub(crate) fn from_index_sets(vertices: Vec<Vertex>, facets: Vec<Vec<u32>>) -> Self {
        let facets = maximal_sets(facets, vertices.len());
        Self::from_indexed(vertices, facets)
    }

    /// Facets already known to be maximal and sorted.
    pub(crate) fn from_indexed(vertices: Vec<Vertex>, mut facets: Vec<Box<[u32]>>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut used = vec![false; vertices.len()];
        for f in &facets {
            for &v in f.iter() {
                used[v as usize] = true;
            }
        }
        let (vertices, facets) = if used.iter().all(|&u| u) {
            (vertices, facets)
        } else {
            let mut remap = vec![u32::MAX; vertices.len()];
            let mut kept = Vec::new();
            for (i, v) in vertices.into_iter().enumerate() {
                if used[i] {
                    remap[i] = kept.len() as u32;
                    kept.push(v);
                }
            }
            for f in facets.iter_mut() {
                for v in f.iter_mut() {
                    *v = remap[*v as usize];
                }
            }
            (kept, facets)
        };
        let mut facets = facets;
        facets.sort();
        facets.dedup();
        let dim_slots = facets.iter().map(|f| f.len()).max().map_or(0, |m| m + 1);
        SimplicialComplex {
            vertices,
            facets,
            cache: (0..dim_slots).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, v: Vertex) -> Option<u32> {
        self.vertices.binary_search(&v).ok().map(|i| i as u32)
    }

    pub(crate) fn require_vertex(&self, v: Vertex) -> Result<u32> {
        self.vertex_index(v).ok_or(Error::NotAVertex(v))
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub(crate) fn facet_indices(&self) -> &[Box<[u32]>] {
        &self.facets
    }

    /// Facets as vertex lists in lexicographic order.
    pub fn facets(&self) -> impl ExactSizeIterator<Item = Vec<Vertex>> + '_ {
        self.facets
            .iter()
            .map(|f| f.iter().map(|&i| self.vertices[i as usize]).collect())
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension of the largest facet; `None` for the void complex and −1
    /// for `{∅}`.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// The sorted list of `k`-faces (`k + 1` vertices). `k = −1` yields the
    /// empty face for every nonvoid complex.
    pub fn faces(&self, k: isize) -> &FaceList {
        static EMPTY: OnceLock<Vec<FaceList>> = OnceLock::new();
        let width = k + 1;
        if width < 0 || width as usize >= self.cache.len() {
            let empties = EMPTY.get_or_init(|| (0..64).map(FaceList::empty).collect());
            return &empties[width.clamp(0, 63) as usize];
        }
        self.cache[width as usize]
            .get_or_init(|| FaceList::from_facets(&self.facets, width as usize))
    }

    /// Number of faces per dimension, starting at dimension 0.
    pub fn f_vector(&self) -> Vec<usize> {
        match self.dim() {
            Some(d) if d >= 0 => (0..=d).map(|k| self.faces(k).len()).collect(),
            _ => Vec::new(),
        }
    }

    /// Total number of faces including the empty one.
    pub fn num_faces(&self) -> usize {
        if self.is_void() {
            0
        } else {
            1 + self.f_vector().iter().sum::<usize>()
        }
    }

    /// `Σ (−1)^k f_k`, the (unreduced) Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }

    /// Registry indices of a vertex set, sorted; `None` if a vertex is
    /// missing from the registry.
    pub fn face_indices(&self, face: &[Vertex]) -> Option<Vec<u32>> {
        let mut idx: Vec<u32> = face
            .iter()
            .map(|&v| self.vertex_index(v))
            .collect::<Option<_>>()?;
        idx.sort_unstable();
        idx.dedup();
        (idx.len() == face.len()).then_some(idx)
    }

    pub fn contains_face(&self, face: &[Vertex]) -> bool {
        if self.is_void() {
            return false;
        }
        match self.face_indices(face) {
            Some(idx) => self.faces(idx.len() as isize - 1).index_of(&idx).is_some(),
            None => false,
        }
    }

    /// All faces, as vertex lists, of dimension `k`.
    pub fn faces_as_vertices(&self, k: isize) -> Vec<Vec<Vertex>> {
        self.faces(k)
            .iter()
            .map(|f| f.iter().map(|&i| self.vertices[i as usize]).collect())
            .collect()
    }

    /// `true` iff every facet of `self` is a face of `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.check_subcomplex_of(other).is_ok()
    }

    pub(crate) fn check_subcomplex_of(&self, other: &SimplicialComplex) -> Result<()> {
        for facet in self.facets() {
            if !other.contains_face(&facet) {
                return Err(Error::NotASubcomplex(format_face(&facet)));
            }
        }
        Ok(())
    }

    /// The subcomplex of faces satisfying a downward-closed predicate.
    pub fn filter_faces(&self, mut keep: impl FnMut(&[Vertex]) -> bool) -> SimplicialComplex {
        let Some(dim) = self.dim() else {
            return SimplicialComplex::void();
        };
        let mut kept = Vec::new();
        let mut buf = Vec::new();
        for k in -1..=dim {
            for face in self.faces(k).iter() {
                buf.clear();
                buf.extend(face.iter().map(|&i| self.vertices[i as usize]));
                if keep(&buf) {
                    kept.push(face.to_vec());
                }
            }
        }
        SimplicialComplex::from_index_sets(self.vertices.clone(), kept)
    }

    /// Renames vertices. The map must be injective on the registry.
    pub fn relabel(&self, mut map: impl FnMut(Vertex) -> Vertex) -> SimplicialComplex {
        SimplicialComplex::from_facets(
            self.facets()
                .map(|f| f.into_iter().map(&mut map).collect::<Vec<_>>()),
        )
    }

    /// Equality after applying an explicit vertex bijection to `self`.
    pub fn equals_under(&self, other: &SimplicialComplex, map: &BTreeMap<Vertex, Vertex>) -> bool {
        if self.num_vertices() != other.num_vertices() {
            return false;
        }
        let mut missing = false;
        let image = self.relabel(|v| match map.get(&v) {
            Some(&w) => w,
            None => {
                missing = true;
                v
            }
        });
        !missing && image.num_vertices() == self.num_vertices() && &image == other
    }
}

pub(crate) fn format_face(face: &[Vertex]) -> String {
    let inner: Vec<String> = face.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", inner.join(" "))
}

/// Removes duplicates and non-maximal sets. Sets are sorted in place.
fn maximal_sets(mut sets: Vec<Vec<u32>>, num_vertices: usize) -> Vec<Box<[u32]>> {
    for s in sets.iter_mut() {
        s.sort_unstable();
        s.dedup();
    }
    // Largest first, so every superset of a set is already kept when it is
    // examined.
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Box<[u32]>> = Vec::new();
    let mut by_vertex: Vec<Vec<u32>> = vec![Vec::new(); num_vertices];
    let mut has_empty = false;
    for s in sets {
        if s.is_empty() {
            has_empty = true;
            continue;
        }
        let pivot = *s
            .iter()
            .min_by_key(|&&v| by_vertex[v as usize].len())
            .expect("nonempty");
        let dominated = by_vertex[pivot as usize]
            .iter()
            .any(|&k| is_subset(&s, &kept[k as usize]));
        if !dominated {
            let id = kept.len() as u32;
            for &v in &s {
                by_vertex[v as usize].push(id);
            }
            kept.push(s.into_boxed_slice());
        }
    }
    if has_empty && kept.is_empty() {
        kept.push(Box::from([]));
    }
    kept
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}
