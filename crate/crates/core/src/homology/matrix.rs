use rayon::prelude::*;

use crate::complexes::SimplicialComplex;

const NONE: u32 = u32::MAX;

/// A sparse integer matrix stored by rows, each row sorted by column with
/// no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn from_dense(dense: &[Vec<i64>], ncols: usize) -> Self {
        let rows = dense
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged matrix");
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(j, &v)| (j as u32, v))
                    .collect()
            })
            .collect();
        SparseMatrix {
            nrows: dense.len(),
            ncols,
            rows,
        }
    }

    pub(crate) fn from_rows(nrows: usize, ncols: usize, rows: Vec<Vec<(u32, i64)>>) -> Self {
        debug_assert_eq!(rows.len(), nrows);
        SparseMatrix { nrows, ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn rows(&self) -> &[Vec<(u32, i64)>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        let row = &self.rows[i];
        row.binary_search_by_key(&(j as u32), |e| e.0)
            .map_or(0, |k| row[k].1)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![0; self.ncols];
                for &(j, v) in r {
                    d[j as usize] = v;
                }
                d
            })
            .collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows = vec![Vec::new(); self.ncols];
        for (i, r) in self.rows.iter().enumerate() {
            for &(j, v) in r {
                rows[j as usize].push((i as u32, v));
            }
        }
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            rows,
        }
    }

    /// `self · other`; `None` on overflow.
    pub fn checked_mul(&self, other: &SparseMatrix) -> Option<SparseMatrix> {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch");
        let rows = self
            .rows
            .par_iter()
            .map(|r| {
                let mut acc: std::collections::BTreeMap<u32, i64> = Default::default();
                for &(k, a) in r {
                    for &(j, b) in &other.rows[k as usize] {
                        let e = acc.entry(j).or_insert(0);
                        *e = e.checked_add(a.checked_mul(b)?)?;
                    }
                }
                Some(acc.into_iter().filter(|e| e.1 != 0).collect())
            })
            .collect::<Option<Vec<_>>>()?;
        Some(SparseMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            rows,
        })
    }

    /// `self · x`.
    pub fn mul_vec(&self, x: &[i64]) -> Option<Vec<i64>> {
        assert_eq!(x.len(), self.ncols, "dimension mismatch");
        self.rows
            .iter()
            .map(|r| {
                r.iter().try_fold(0i64, |acc, &(j, v)| {
                    acc.checked_add(v.checked_mul(x[j as usize])?)
                })
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Appends a column.
    pub(crate) fn push_column(&mut self, col: &[(u32, i64)]) {
        let j = self.ncols as u32;
        for &(i, v) in col {
            if v != 0 {
                self.rows[i as usize].push((j, v));
            }
        }
        self.ncols += 1;
    }
}

/// The cells of a (relative, possibly augmented) simplicial chain complex:
/// per dimension, the faces of `cx` that survive.
pub(crate) struct Cells<'a> {
    pub cx: &'a SimplicialComplex,
    /// Degree −1 present (augmented and not killed by the subcomplex).
    pub augmented: bool,
    /// Per width (`k + 1`): surviving global face indices, or all faces.
    keep: Vec<Option<Vec<u32>>>,
}

impl<'a> Cells<'a> {
    /// Absolute chains; `reduced` adds the empty face in degree −1.
    pub fn absolute(cx: &'a SimplicialComplex, reduced: bool) -> Self {
        Cells {
            cx,
            augmented: reduced && !cx.is_void(),
            keep: Vec::new(),
        }
    }

    /// Chains of `cx` modulo the subcomplex `sub` (already checked).
    pub fn relative(cx: &'a SimplicialComplex, sub: &SimplicialComplex) -> Self {
        if sub.is_void() {
            return Self::absolute(cx, true);
        }
        let vmap: Vec<u32> = cx
            .vertices()
            .iter()
            .map(|&v| sub.vertex_index(v).unwrap_or(NONE))
            .collect();
        let top = cx.dim().unwrap_or(-1);
        let mut keep = vec![Some(Vec::new())];
        let mut mapped = Vec::new();
        for k in 0..=top {
            let sub_faces = sub.faces(k);
            let list = cx
                .faces(k)
                .iter()
                .enumerate()
                .filter(|(_, f)| {
                    mapped.clear();
                    mapped.extend(f.iter().map(|&v| vmap[v as usize]));
                    // the vertex map is monotone, so `mapped` stays sorted
                    mapped.contains(&NONE) || sub_faces.index_of(&mapped).is_none()
                })
                .map(|(i, _)| i as u32)
                .collect();
            keep.push(Some(list));
        }
        Cells {
            cx,
            augmented: false,
            keep,
        }
    }

    /// Number of cells in degree `k`.
    pub fn count(&self, k: isize) -> usize {
        if k < -1 {
            return 0;
        }
        if k == -1 {
            return usize::from(self.augmented);
        }
        match self.keep.get((k + 1) as usize) {
            Some(Some(list)) => list.len(),
            _ => self.cx.faces(k).len(),
        }
    }

    /// Global face index of local cell `i` in degree `k ≥ 0`.
    pub fn global(&self, k: isize, i: usize) -> u32 {
        match self.keep.get((k + 1) as usize) {
            Some(Some(list)) => list[i],
            _ => i as u32,
        }
    }

    /// Local index of a global face, if it survives.
    pub fn local_map(&self, k: isize) -> Option<Vec<u32>> {
        match self.keep.get((k + 1) as usize) {
            Some(Some(list)) => {
                let mut map = vec![NONE; self.cx.faces(k).len()];
                for (i, &g) in list.iter().enumerate() {
                    map[g as usize] = i as u32;
                }
                Some(map)
            }
            _ => None,
        }
    }

    /// The boundary `∂_k : C_k → C_{k−1}` as a sparse matrix.
    pub fn boundary(&self, k: isize) -> SparseMatrix {
        let nrows = self.count(k - 1);
        let ncols = self.count(k);
        if k < 0 || nrows == 0 || ncols == 0 {
            return SparseMatrix::zeros(nrows, ncols);
        }
        if k == 0 {
            let row = (0..ncols as u32).map(|j| (j, 1)).collect();
            return SparseMatrix::from_rows(1, ncols, vec![row]);
        }
        let lower = self.cx.faces(k - 1);
        let upper = self.cx.faces(k);
        let row_map = self.local_map(k - 1);
        let columns: Vec<Vec<(u32, i64)>> = (0..ncols)
            .into_par_iter()
            .map_init(Vec::new, |buf, j| {
                let face = upper.get(self.global(k, j) as usize);
                let mut col = Vec::with_capacity(face.len());
                // deleting later positions yields lexicographically smaller faces
                for pos in (0..face.len()).rev() {
                    buf.clear();
                    buf.extend(
                        face.iter()
                            .enumerate()
                            .filter(|&(q, _)| q != pos)
                            .map(|(_, &v)| v),
                    );
                    let g = lower.index_of(buf).expect("faces are downward closed");
                    let local = match &row_map {
                        Some(map) => map[g],
                        None => g as u32,
                    };
                    if local != NONE {
                        col.push((local, if pos % 2 == 0 { 1 } else { -1 }));
                    }
                }
                col
            })
            .collect();
        let mut rows = vec![Vec::new(); nrows];
        for (j, col) in columns.into_iter().enumerate() {
            for (i, v) in col {
                rows[i as usize].push((j as u32, v));
            }
        }
        SparseMatrix::from_rows(nrows, ncols, rows)
    }
}

/// `∂_k` of the augmented chain complex of `k`: rows are the `(k−1)`-faces,
/// columns the `k`-faces, both in `faces` order. For `k = 0` the single row
/// is the empty face.
pub fn boundary_matrix(cx: &SimplicialComplex, k: isize) -> SparseMatrix {
    Cells::absolute(cx, true).boundary(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::Vertex;

    fn l(x: u32) -> Vertex {
        Vertex::Label(x)
    }

    #[test]
    fn edge_boundary() {
        let e = SimplicialComplex::simplex([l(0), l(1)]);
        let d = boundary_matrix(&e, 1);
        assert_eq!(d.to_dense(), vec![vec![-1], vec![1]]);
        assert_eq!(boundary_matrix(&e, 0).to_dense(), vec![vec![1, 1]]);
    }

    #[test]
    fn triangle_boundary_squares_to_zero() {
        let t = SimplicialComplex::simplex([l(0), l(1), l(2)]);
        let d1 = boundary_matrix(&t, 1);
        let d2 = boundary_matrix(&t, 2);
        assert_eq!(d2.to_dense(), vec![vec![1], vec![-1], vec![1]]);
        assert!(d1.checked_mul(&d2).unwrap().is_zero());
        assert!(boundary_matrix(&t, 0).checked_mul(&d1).unwrap().is_zero());
    }

    #[test]
    fn relative_cells_drop_subcomplex() {
        let t = SimplicialComplex::simplex([l(0), l(1), l(2)]);
        let e = SimplicialComplex::simplex([l(0), l(1)]);
        let c = Cells::relative(&t, &e);
        assert_eq!(
            (c.count(-1), c.count(0), c.count(1), c.count(2)),
            (0, 1, 2, 1)
        );
        let d2 = c.boundary(2);
        assert_eq!(d2.to_dense(), vec![vec![-1], vec![1]]);
        assert_eq!(c.boundary(1).to_dense(), vec![vec![1, 1]]);
    }
}
