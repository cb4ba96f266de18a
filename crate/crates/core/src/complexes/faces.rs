/// All faces of one dimension, stored flat with a fixed stride and sorted
/// lexicographically so that a face's position doubles as its matrix index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceList {
    width: usize,
    len: usize,
    data: Vec<u32>,
}

impl FaceList {
    pub(crate) fn empty(width: usize) -> Self {
        FaceList {
            width,
            len: 0,
            data: Vec::new(),
        }
    }

    /// All `width`-element subsets of the facets, deduplicated.
    pub(crate) fn from_facets(facets: &[Box<[u32]>], width: usize) -> Self {
        if width == 0 {
            let len = usize::from(!facets.is_empty());
            return FaceList {
                width,
                len,
                data: Vec::new(),
            };
        }
        let max_vertex = facets
            .iter()
            .flat_map(|f| f.iter())
            .copied()
            .max()
            .unwrap_or(0);
        if width <= 8 && max_vertex < 1 << 16 {
            return Self::from_facets_packed(facets, width);
        }
        let mut faces: Vec<Vec<u32>> = Vec::new();
        let mut pick = Vec::with_capacity(width);
        for facet in facets.iter().filter(|f| f.len() >= width) {
            subsets(facet, width, 0, &mut pick, &mut |s| faces.push(s.to_vec()));
        }
        faces.sort_unstable();
        faces.dedup();
        let len = faces.len();
        let data = faces.into_iter().flatten().collect();
        FaceList { width, len, data }
    }

    // Faces of at most eight vertices below 2¹⁶ packed big-endian into a
    // u128, whose integer order is the lexicographic order of the faces.
    fn from_facets_packed(facets: &[Box<[u32]>], width: usize) -> Self {
        let mut keys: Vec<u128> = Vec::new();
        let mut pick = Vec::with_capacity(width);
        for facet in facets.iter().filter(|f| f.len() >= width) {
            subsets(facet, width, 0, &mut pick, &mut |s| {
                keys.push(s.iter().fold(0u128, |acc, &v| (acc << 16) | v as u128))
            });
        }
        keys.sort_unstable();
        keys.dedup();
        let len = keys.len();
        let mut data = Vec::with_capacity(len * width);
        for key in keys {
            for j in (0..width).rev() {
                data.push(((key >> (16 * j)) & 0xffff) as u32);
            }
        }
        FaceList { width, len, data }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Number of vertices per face.
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.width..(i + 1) * self.width]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[u32]> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Position of a sorted index list, by binary search.
    pub fn index_of(&self, face: &[u32]) -> Option<usize> {
        if face.len() != self.width {
            return None;
        }
        if self.width == 0 {
            return (self.len == 1).then_some(0);
        }
        let (mut lo, mut hi) = (0, self.len);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

fn subsets(
    set: &[u32],
    width: usize,
    start: usize,
    pick: &mut Vec<u32>,
    out: &mut impl FnMut(&[u32]),
) {
    if pick.len() == width {
        out(pick);
        return;
    }
    let need = width - pick.len();
    for i in start..=set.len() - need {
        pick.push(set[i]);
        subsets(set, width, i + 1, pick, out);
        pick.pop();
    }
}
