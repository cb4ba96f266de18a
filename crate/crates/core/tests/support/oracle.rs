//! Naive reference homology: faces enumerated from the facets, dense
//! boundary matrices, Smith normal form over `i128`.

#![allow(clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet};

use cyclefree::complexes::{SimplicialComplex, Vertex};
use cyclefree::homology::AbelianGroup;

/// Rank and invariant factors `> 1`, in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    pub rank: usize,
    pub torsion: Vec<u128>,
}

impl Group {
    pub fn matches(&self, g: &AbelianGroup) -> bool {
        let theirs: Vec<u128> = g
            .torsion()
            .iter()
            .map(|d| d.to_string().parse().unwrap())
            .collect();
        self.rank == g.rank() && self.torsion == theirs
    }
}

/// Faces per width `0..=dim+1`; width 0 holds the empty face.
pub fn faces(cx: &SimplicialComplex) -> Vec<Vec<Vec<Vertex>>> {
    let mut by_width: Vec<BTreeSet<Vec<Vertex>>> = Vec::new();
    for facet in cx.facets() {
        let mut facet = facet;
        facet.sort();
        let n = facet.len();
        assert!(n < 20, "facet too wide for the oracle");
        if by_width.len() <= n {
            by_width.resize(n + 1, BTreeSet::new());
        }
        for mask in 0u32..1 << n {
            let face: Vec<Vertex> = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| facet[i])
                .collect();
            by_width[face.len()].insert(face);
        }
    }
    by_width
        .into_iter()
        .map(|s| s.into_iter().collect())
        .collect()
}

fn boundary(rows: &[Vec<Vertex>], cols: &[Vec<Vertex>]) -> Vec<Vec<i128>> {
    let index: BTreeMap<&Vec<Vertex>, usize> =
        rows.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut m = vec![vec![0i128; cols.len()]; rows.len()];
    for (j, face) in cols.iter().enumerate() {
        for i in 0..face.len() {
            let mut smaller = face.clone();
            smaller.remove(i);
            if let Some(&r) = index.get(&smaller) {
                m[r][j] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
    }
    m
}

/// Nonzero diagonal of the Smith normal form, `d₁ | d₂ | …`, all positive.
pub fn smith(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if m[i][j] != 0 && best.is_none_or(|(a, b)| m[i][j].abs() < m[a][b].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = m[i][t] / m[t][t];
            if q != 0 {
                for j in t..cols {
                    m[i][j] -= q * m[t][j];
                }
            }
            clean &= m[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = m[t][j] / m[t][t];
            if q != 0 {
                for row in m.iter_mut().skip(t) {
                    row[j] -= q * row[t];
                }
            }
            clean &= m[t][j] == 0;
        }
        if !clean {
            continue;
        }
        let d = m[t][t];
        let stray = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| m[i][j] % d != 0));
        if let Some(i) = stray {
            for j in t..cols {
                m[t][j] += m[i][j];
            }
            continue;
        }
        diag.push(d.abs());
        t += 1;
    }
    diag
}

/// Reduced homology `H̃_k`, `k = −1..=dim`, or relative homology when `sub`
/// is given.
pub fn homology(cx: &SimplicialComplex, sub: Option<&SimplicialComplex>) -> Vec<(isize, Group)> {
    let mut cells = faces(cx);
    if let Some(sub) = sub {
        let drop: BTreeSet<Vec<Vertex>> = faces(sub).into_iter().flatten().collect();
        for list in cells.iter_mut() {
            list.retain(|f| !drop.contains(f));
        }
    }
    let top = cells.len();
    let diag: Vec<Vec<i128>> = (0..=top)
        .map(|w| {
            if w == 0 || w >= top {
                return Vec::new();
            }
            smith(boundary(&cells[w - 1], &cells[w]))
        })
        .collect();
    (0..top)
        .map(|w| {
            let rank = cells[w].len() - diag[w].len() - diag[w + 1].len();
            let torsion = diag[w + 1]
                .iter()
                .filter(|&&d| d > 1)
                .map(|&d| d as u128)
                .collect();
            (w as isize - 1, Group { rank, torsion })
        })
        .collect()
}

/// Total number of faces, the empty face included.
pub fn face_count(cx: &SimplicialComplex) -> usize {
    faces(cx).iter().map(Vec::len).sum()
}
