//! Discrete Morse reduction of a simplicial chain complex.
//!
//! The matching is the sequence of element matchings by the registry
//! vertices: at step `v`, still unmatched cells `σ ∌ v` and `σ ∪ v` are
//! paired. A sequence of element matchings is acyclic, and every matched
//! incidence is `±1`, so the Morse complex on the critical cells has the
//! homology of the original over `ℤ` and over every field.
//!
//! The Morse boundary of a critical cell is its boundary pushed along the
//! gradient flow: a cell matched upwards with `b` is eliminated by
//! subtracting a multiple of `∂b`, a cell matched downwards is dropped.
//! Cells are eliminated in a topological order of the gradient paths, so
//! each is eliminated at most once.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use rayon::prelude::*;

use super::eliminate::Overflow;
use super::matrix::{Cells, SparseMatrix};
use super::ring::Arith;

const NONE: u32 = u32::MAX;

/// Matching data of one degree.
struct Level {
    /// Local index of the partner, or `NONE` for a critical cell.
    partner: Vec<u32>,
    /// The partner lies one degree up.
    upward: Vec<bool>,
    /// Local indices of the critical cells, ascending.
    critical: Vec<u32>,
    /// Position in `critical`, or `NONE`.
    critical_of: Vec<u32>,
    /// Topological rank of upward-matched cells along gradient paths.
    rank: Vec<u32>,
    /// Local index of each global face, when not the identity.
    local: Option<Vec<u32>>,
}

/// The Morse complex of `cells` truncated to degrees `bottom..=top`. Its
/// homology agrees with the original strictly inside that range.
pub(crate) struct Morse<'a> {
    cells: &'a Cells<'a>,
    bottom: isize,
    levels: Vec<Level>,
}

impl<'a> Morse<'a> {
    pub fn new(cells: &'a Cells<'a>, bottom: isize, top: isize) -> Self {
        let bottom = bottom.max(-1);
        let mut morse = Morse {
            cells,
            bottom,
            levels: Vec::new(),
        };
        for d in bottom..=top {
            let n = cells.count(d);
            morse.levels.push(Level {
                partner: vec![NONE; n],
                upward: vec![false; n],
                critical: Vec::new(),
                critical_of: Vec::new(),
                rank: Vec::new(),
                local: if d >= 0 { cells.local_map(d) } else { None },
            });
        }
        morse.match_cells();
        for level in &mut morse.levels {
            level.critical = (0..level.partner.len() as u32)
                .filter(|&i| level.partner[i as usize] == NONE)
                .collect();
            level.critical_of = vec![NONE; level.partner.len()];
            for (c, &i) in level.critical.iter().enumerate() {
                level.critical_of[i as usize] = c as u32;
            }
        }
        for d in bottom..top {
            let rank = morse.topological_rank(d);
            morse.levels[(d - bottom) as usize].rank = rank;
        }
        morse
    }

    fn top(&self) -> isize {
        self.bottom + self.levels.len() as isize - 1
    }

    fn level(&self, d: isize) -> &Level {
        &self.levels[(d - self.bottom) as usize]
    }

    /// Number of critical cells in degree `d`.
    pub fn count(&self, d: isize) -> usize {
        if d < self.bottom || d > self.top() {
            return 0;
        }
        self.level(d).critical.len()
    }

    /// Global face index of local cell `i` in degree `d ≥ 0`.
    fn face(&self, d: isize, i: u32) -> &[u32] {
        if d < 0 {
            return &[];
        }
        self.cells
            .cx
            .faces(d)
            .get(self.cells.global(d, i as usize) as usize)
    }

    /// Local index of a sorted vertex list in degree `d`, if it is a cell.
    fn lookup(&self, d: isize, face: &[u32]) -> Option<u32> {
        if d < self.bottom || d > self.top() {
            return None;
        }
        if d < 0 {
            return (self.cells.augmented && face.is_empty()).then_some(0);
        }
        let g = self.cells.cx.faces(d).index_of(face)?;
        match &self.level(d).local {
            Some(map) => (map[g] != NONE).then_some(map[g]),
            None => Some(g as u32),
        }
    }

    /// Boundary of local cell `i` in degree `d`, in local indices.
    fn boundary_of(&self, d: isize, i: u32, out: &mut Vec<(u32, i64)>) {
        out.clear();
        if d == 0 {
            if let Some(e) = self.lookup(-1, &[]) {
                out.push((e, 1));
            }
            return;
        }
        let face = self.face(d, i);
        let mut buf = Vec::with_capacity(face.len());
        for pos in 0..face.len() {
            buf.clear();
            buf.extend(
                face.iter()
                    .enumerate()
                    .filter(|&(q, _)| q != pos)
                    .map(|(_, &v)| v),
            );
            if let Some(j) = self.lookup(d - 1, &buf) {
                out.push((j, if pos % 2 == 0 { 1 } else { -1 }));
            }
        }
    }

    fn match_cells(&mut self) {
        let (bottom, top) = (self.bottom, self.top());
        let mut open: Vec<Vec<u32>> = self
            .levels
            .iter()
            .map(|l| (0..l.partner.len() as u32).collect())
            .collect();
        let mut grown = Vec::new();
        for v in 0..self.cells.cx.vertices().len() as u32 {
            for d in bottom..top {
                let at = (d - bottom) as usize;
                let mut pairs = Vec::new();
                for &i in &open[at] {
                    let face = self.face(d, i);
                    if face.contains(&v) {
                        continue;
                    }
                    grown.clear();
                    grown.extend_from_slice(face);
                    let slot = grown.partition_point(|&x| x < v);
                    grown.insert(slot, v);
                    if let Some(j) = self.lookup(d + 1, &grown) {
                        if self.levels[at + 1].partner[j as usize] == NONE {
                            pairs.push((i, j));
                        }
                    }
                }
                for &(i, j) in &pairs {
                    self.levels[at].partner[i as usize] = j;
                    self.levels[at].upward[i as usize] = true;
                    self.levels[at + 1].partner[j as usize] = i;
                }
                if !pairs.is_empty() {
                    let (lo, hi) = open.split_at_mut(at + 1);
                    let level = &self.levels;
                    lo[at].retain(|&i| level[at].partner[i as usize] == NONE);
                    hi[0].retain(|&j| level[at + 1].partner[j as usize] == NONE);
                }
            }
        }
    }

    /// Ranks upward-matched cells of degree `d` so that eliminating a cell
    /// only introduces cells of larger rank.
    fn topological_rank(&self, d: isize) -> Vec<u32> {
        let level = self.level(d);
        let n = level.partner.len();
        let mut rank = vec![NONE; n];
        let mut state = vec![0u8; n];
        let mut post = Vec::new();
        let mut buf = Vec::new();
        let successors = |a: u32, buf: &mut Vec<(u32, i64)>| -> Vec<u32> {
            self.boundary_of(d + 1, level.partner[a as usize], buf);
            buf.iter()
                .map(|&(x, _)| x)
                .filter(|&x| x != a && level.upward[x as usize])
                .collect()
        };
        for start in 0..n as u32 {
            if !level.upward[start as usize] || state[start as usize] != 0 {
                continue;
            }
            let mut stack = vec![(start, successors(start, &mut buf), 0usize)];
            state[start as usize] = 1;
            while let Some((a, next, pos)) = stack.last_mut() {
                if let Some(&b) = next.get(*pos) {
                    *pos += 1;
                    if state[b as usize] == 0 {
                        state[b as usize] = 1;
                        let s = successors(b, &mut buf);
                        stack.push((b, s, 0));
                    }
                } else {
                    state[*a as usize] = 2;
                    post.push(*a);
                    stack.pop();
                }
            }
        }
        for (r, &a) in post.iter().rev().enumerate() {
            rank[a as usize] = r as u32;
        }
        rank
    }

    /// Pushes a `d`-chain (local indices) along the gradient flow and
    /// returns its coordinates on the critical `d`-cells.
    pub fn flow<A: Arith>(
        &self,
        a: &A,
        d: isize,
        chain: impl IntoIterator<Item = (u32, A::T)>,
    ) -> Result<Vec<(u32, A::T)>, Overflow> {
        let level = self.level(d);
        let mut coeffs: HashMap<u32, A::T> = HashMap::new();
        let mut queue = BinaryHeap::new();
        let mut buf = Vec::new();
        for (i, x) in chain {
            let entry = coeffs.entry(i).or_insert_with(|| a.lift(0));
            *entry = a.fma(entry, &a.lift(1), &x).ok_or(Overflow)?;
            if level.upward[i as usize] {
                queue.push(Reverse((level.rank[i as usize], i)));
            }
        }
        while let Some(Reverse((_, i))) = queue.pop() {
            let Some(x) = coeffs.remove(&i) else {
                continue;
            };
            if a.is_zero(&x) {
                continue;
            }
            let b = level.partner[i as usize];
            self.boundary_of(d + 1, b, &mut buf);
            let incidence = buf
                .iter()
                .find(|&&(j, _)| j == i)
                .expect("matched pairs are incident")
                .1;
            let factor = a.cancel(&x, &a.lift(incidence)).ok_or(Overflow)?;
            for &(j, s) in buf.iter().filter(|&&(j, _)| j != i) {
                let entry = coeffs.entry(j).or_insert_with(|| a.lift(0));
                let fresh = a.is_zero(entry);
                *entry = a.fma(entry, &factor, &a.lift(s)).ok_or(Overflow)?;
                if fresh && level.upward[j as usize] {
                    queue.push(Reverse((level.rank[j as usize], j)));
                }
            }
        }
        let mut out: Vec<(u32, A::T)> = coeffs
            .into_iter()
            .filter(|(i, x)| level.critical_of[*i as usize] != NONE && !a.is_zero(x))
            .map(|(i, x)| (level.critical_of[i as usize], x))
            .collect();
        out.sort_unstable_by_key(|&(c, _)| c);
        Ok(out)
    }

    /// The Morse boundary `∂̃_d` from critical `d`-cells to critical
    /// `(d−1)`-cells.
    pub fn boundary<A: Arith>(
        &self,
        a: &A,
        d: isize,
        to_i64: impl Fn(&A::T) -> Option<i64> + Sync,
    ) -> Result<SparseMatrix, Overflow> {
        let nrows = self.count(d - 1);
        let ncols = self.count(d);
        if nrows == 0 || ncols == 0 {
            return Ok(SparseMatrix::zeros(nrows, ncols));
        }
        let columns: Vec<Vec<(u32, i64)>> = self
            .level(d)
            .critical
            .par_iter()
            .map_init(Vec::new, |buf, &tau| {
                self.boundary_of(d, tau, buf);
                let start = buf.iter().map(|&(j, s)| (j, a.lift(s)));
                self.flow(a, d - 1, start)?
                    .into_iter()
                    .map(|(c, x)| Ok((c, to_i64(&x).ok_or(Overflow)?)))
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let mut rows = vec![Vec::new(); nrows];
        for (j, col) in columns.into_iter().enumerate() {
            for (i, v) in col {
                rows[i as usize].push((j as u32, v));
            }
        }
        Ok(SparseMatrix::from_rows(nrows, ncols, rows))
    }

    /// Coordinates on the critical `d`-cells of a chain given by global
    /// face indices.
    pub fn project<A: Arith>(
        &self,
        a: &A,
        d: isize,
        chain: &[(u32, i64)],
    ) -> Result<Vec<(u32, A::T)>, Overflow> {
        let local: Vec<(u32, A::T)> = chain
            .iter()
            .filter_map(|&(g, x)| {
                let i = match (d, &self.level(d).local) {
                    (-1, _) => 0,
                    (_, Some(map)) => map[g as usize],
                    (_, None) => g,
                };
                (i != NONE).then(|| (i, a.lift(x)))
            })
            .collect();
        self.flow(a, d, local)
    }
}
