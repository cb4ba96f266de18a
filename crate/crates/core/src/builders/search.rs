//! Row-by-row backtracking over rook placements.
//!
//! Squares may carry a directed edge between integer nodes; a placement is
//! admissible while the edges it carries close at most `budget` directed
//! cycles. Since a placement uses every row and column at most once, each
//! node has in- and out-degree at most one, so a new edge `x → t` closes a
//! cycle exactly when the path leaving `t` ends at `x`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::boards::Square;
use crate::complexes::{SimplicialComplex, Vertex};

const NONE: u32 = u32::MAX;

pub(crate) struct Search {
    squares: Vec<Square>,
    row_of: Vec<u32>,
    col_of: Vec<u32>,
    rows: Vec<Vec<u32>>,
    ncols: usize,
    edges: Vec<Option<(u32, u32)>>,
    nnodes: usize,
    budget: usize,
}

#[derive(Clone)]
struct State {
    row_used: Vec<bool>,
    col_used: Vec<bool>,
    succ: Vec<u32>,
    cycles: usize,
    chosen: Vec<u32>,
}

impl Search {
    pub(crate) fn new(
        squares: impl IntoIterator<Item = Square>,
        edge: impl Fn(Square) -> Option<(i32, i32)>,
        budget: usize,
    ) -> Self {
        let mut squares: Vec<Square> = squares.into_iter().collect();
        squares.sort_unstable();
        squares.dedup();
        let row_ids: BTreeMap<i32, u32> = index_labels(squares.iter().map(|s| s.row));
        let col_ids: BTreeMap<i32, u32> = index_labels(squares.iter().map(|s| s.col));
        let raw_edges: Vec<Option<(i32, i32)>> = squares.iter().map(|&s| edge(s)).collect();
        let node_ids = index_labels(raw_edges.iter().flatten().flat_map(|&(a, b)| [a, b]));
        let edges = raw_edges
            .iter()
            .map(|e| e.map(|(a, b)| (node_ids[&a], node_ids[&b])))
            .collect();
        let mut rows = vec![Vec::new(); row_ids.len()];
        for (i, s) in squares.iter().enumerate() {
            rows[row_ids[&s.row] as usize].push(i as u32);
        }
        Search {
            row_of: squares.iter().map(|s| row_ids[&s.row]).collect(),
            col_of: squares.iter().map(|s| col_ids[&s.col]).collect(),
            squares,
            rows,
            ncols: col_ids.len(),
            edges,
            nnodes: node_ids.len(),
            budget,
        }
    }

    fn initial_state(&self) -> State {
        State {
            row_used: vec![false; self.rows.len()],
            col_used: vec![false; self.ncols],
            succ: vec![NONE; self.nnodes],
            cycles: 0,
            chosen: Vec::new(),
        }
    }

    /// Cycle count after adding square `i`, if within budget.
    fn admits(&self, st: &State, i: u32) -> Option<usize> {
        if st.col_used[self.col_of[i as usize] as usize] {
            return None;
        }
        let Some((from, to)) = self.edges[i as usize] else {
            return Some(st.cycles);
        };
        let mut node = to;
        while node != from && node != NONE {
            node = st.succ[node as usize];
        }
        let cycles = st.cycles + usize::from(node == from);
        (cycles <= self.budget).then_some(cycles)
    }

    fn place(&self, st: &mut State, i: u32, cycles: usize) {
        st.row_used[self.row_of[i as usize] as usize] = true;
        st.col_used[self.col_of[i as usize] as usize] = true;
        if let Some((from, to)) = self.edges[i as usize] {
            st.succ[from as usize] = to;
        }
        st.cycles = cycles;
        st.chosen.push(i);
    }

    fn unplace(&self, st: &mut State, i: u32, cycles: usize) {
        st.row_used[self.row_of[i as usize] as usize] = false;
        st.col_used[self.col_of[i as usize] as usize] = false;
        if let Some((from, _)) = self.edges[i as usize] {
            st.succ[from as usize] = NONE;
        }
        st.cycles = cycles;
        st.chosen.pop();
    }

    fn is_maximal(&self, st: &State) -> bool {
        (0..self.squares.len() as u32)
            .all(|i| st.row_used[self.row_of[i as usize] as usize] || self.admits(st, i).is_none())
    }

    fn walk(&self, row: usize, st: &mut State, visit: &mut dyn FnMut(&State)) {
        if row == self.rows.len() {
            visit(st);
            return;
        }
        self.walk(row + 1, st, visit);
        for &i in &self.rows[row] {
            if let Some(cycles) = self.admits(st, i) {
                let before = st.cycles;
                self.place(st, i, cycles);
                self.walk(row + 1, st, visit);
                self.unplace(st, i, before);
            }
        }
    }

    /// Runs `collect` on every admissible placement, sharding the search
    /// tree on the first row's choice.
    fn sharded<T: Send>(&self, collect: impl Fn(&Search, &State, &mut Vec<T>) + Sync) -> Vec<T> {
        if self.rows.is_empty() {
            let mut out = Vec::new();
            collect(self, &self.initial_state(), &mut out);
            return out;
        }
        let mut starts: Vec<Option<u32>> = vec![None];
        starts.extend(self.rows[0].iter().map(|&i| Some(i)));
        starts
            .into_par_iter()
            .map(|start| {
                let mut st = self.initial_state();
                let mut out = Vec::new();
                if let Some(i) = start {
                    match self.admits(&st, i) {
                        Some(c) => self.place(&mut st, i, c),
                        None => return out,
                    }
                }
                self.walk(1, &mut st, &mut |s| collect(self, s, &mut out));
                out
            })
            .flatten()
            .collect()
    }

    pub(crate) fn facets(&self) -> Vec<Box<[u32]>> {
        self.sharded(|search, st, out| {
            if search.is_maximal(st) {
                out.push(st.chosen.clone().into_boxed_slice());
            }
        })
    }

    /// Every admissible placement, as sorted square lists.
    #[cfg(test)]
    pub(crate) fn all_faces(&self) -> Vec<Vec<Square>> {
        let mut faces = self.sharded(|search, st, out| {
            out.push(
                st.chosen
                    .iter()
                    .map(|&i| search.squares[i as usize])
                    .collect::<Vec<_>>(),
            )
        });
        faces.sort();
        faces
    }

    pub(crate) fn complex(&self) -> SimplicialComplex {
        let registry = self.squares.iter().map(|&s| Vertex::Square(s)).collect();
        SimplicialComplex::from_indexed(registry, self.facets())
    }
}

fn index_labels(labels: impl Iterator<Item = i32>) -> BTreeMap<i32, u32> {
    let mut map: BTreeMap<i32, u32> = labels.map(|l| (l, 0)).collect();
    for (i, v) in map.values_mut().enumerate() {
        *v = i as u32;
    }
    map
}
