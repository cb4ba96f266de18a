use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::search::Search;
use crate::boards::Square;
use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};

/// A finite digraph, loops allowed. Edge `a → b` is identified with the
/// square `(a, b)`, so digraph complexes share vertices with board ones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digraph {
    nodes: BTreeSet<i32>,
    edges: BTreeSet<(i32, i32)>,
}

impl Digraph {
    pub fn new(
        nodes: impl IntoIterator<Item = i32>,
        edges: impl IntoIterator<Item = (i32, i32)>,
    ) -> Result<Self> {
        let nodes: BTreeSet<i32> = nodes.into_iter().collect();
        let edges: BTreeSet<(i32, i32)> = edges.into_iter().collect();
        if let Some(&(a, b)) = edges
            .iter()
            .find(|(a, b)| !nodes.contains(a) || !nodes.contains(b))
        {
            return Err(Error::Invalid(format!("edge {a}->{b} leaves the node set")));
        }
        Ok(Digraph { nodes, edges })
    }

    /// The complete digraph `DKₙ` on `[n]`, loops included.
    pub fn complete(n: usize) -> Self {
        let nodes = 1..=n as i32;
        let edges = nodes
            .clone()
            .flat_map(|a| (1..=n as i32).map(move |b| (a, b)));
        Digraph::new(nodes, edges).expect("edges within nodes")
    }

    /// `K̄ₙ↑`: the complete digraph on `[n]` without loops.
    pub fn complete_loopless(n: usize) -> Self {
        let mut g = Self::complete(n);
        g.edges.retain(|(a, b)| a != b);
        g
    }

    pub fn nodes(&self) -> &BTreeSet<i32> {
        &self.nodes
    }

    pub fn edges(&self) -> &BTreeSet<(i32, i32)> {
        &self.edges
    }

    fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.edges.iter().map(|&(a, b)| Square::new(a, b))
    }
}

/// `Δ(G)`: edge sets whose components are directed paths or cycles, i.e.
/// no two edges share a tail or a head.
pub fn delta_digraph(g: &Digraph) -> SimplicialComplex {
    Search::new(g.squares(), |_| None, 0).complex()
}

/// `Ω(G)`: edge sets whose components are directed paths.
pub fn omega_digraph(g: &Digraph) -> SimplicialComplex {
    Search::new(g.squares(), |s| Some((s.row, s.col)), 0).complex()
}

/// `Δₙ^{DM}`: directed matchings of `K̄ₙ↑`, components are paths or cycles
/// of length at least two.
pub fn directed_matching(n: usize) -> SimplicialComplex {
    delta_digraph(&Digraph::complete_loopless(n))
}

/// Which ambient complex a cycle-count filtration lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `Δₙ` on `DKₙ`; loops count as cycles of length one.
    Delta,
    /// `Δₙ^{DM}` on `K̄ₙ↑`.
    DirectedMatching,
}

/// `F_p`: faces of the family's complex with at most `p` cycle components.
pub fn filtration_level(family: Family, n: usize, p: usize) -> SimplicialComplex {
    let g = match family {
        Family::Delta => Digraph::complete(n),
        Family::DirectedMatching => Digraph::complete_loopless(n),
    };
    Search::new(g.squares(), |s| Some((s.row, s.col)), p).complex()
}

/// A family of pairwise vertex-disjoint directed cycles on `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Multicycle {
    cycles: Vec<Vec<i32>>,
}

impl Multicycle {
    /// Each cycle lists its nodes in traversal order starting at its
    /// smallest node; the cycles are sorted.
    pub fn cycles(&self) -> &[Vec<i32>] {
        &self.cycles
    }

    /// The type `t(C)`: cycle lengths in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// `l(C)`: total number of nodes (equivalently edges).
    pub fn length(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    /// The edges of all cycles, as squares.
    pub fn squares(&self) -> Vec<Square> {
        let mut out: Vec<Square> = self
            .cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |i| Square::new(c[i], c[(i + 1) % c.len()])))
            .collect();
        out.sort_unstable();
        out
    }

    /// Nodes touched by the multicycle.
    pub fn support(&self) -> BTreeSet<i32> {
        self.cycles.iter().flatten().copied().collect()
    }
}

/// `𝒞_p` (or `𝒞_p^{⩾2}` with `min_len = 2`): every set of `p` vertex-disjoint
/// directed cycles on `[n]` with lengths at least `min_len`, sorted.
pub fn multicycles(n: usize, p: usize, min_len: usize) -> Vec<Multicycle> {
    let min_len = min_len.max(1);
    let all = simple_cycles(n, min_len);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    choose_disjoint(&all, p, 0, 0, &mut chosen, &mut out);
    out.sort();
    out
}

fn choose_disjoint(
    all: &[(Vec<i32>, u64)],
    p: usize,
    start: usize,
    used: u64,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Multicycle>,
) {
    if chosen.len() == p {
        let mut cycles: Vec<Vec<i32>> = chosen.iter().map(|&i| all[i].0.clone()).collect();
        cycles.sort();
        out.push(Multicycle { cycles });
        return;
    }
    for i in start..all.len() {
        let (_, mask) = &all[i];
        if used & mask == 0 {
            chosen.push(i);
            choose_disjoint(all, p, i + 1, used | mask, chosen, out);
            chosen.pop();
        }
    }
}

// Every directed simple cycle on [n], rooted at its smallest node, with the
// node bitmask.
fn simple_cycles(n: usize, min_len: usize) -> Vec<(Vec<i32>, u64)> {
    assert!(n < 64, "node masks hold at most 63 nodes");
    let mut out = Vec::new();
    for root in 1..=n as i32 {
        let mut path = vec![root];
        extend_cycles(n as i32, min_len, &mut path, 1u64 << root, &mut out);
    }
    out
}

fn extend_cycles(
    n: i32,
    min_len: usize,
    path: &mut Vec<i32>,
    mask: u64,
    out: &mut Vec<(Vec<i32>, u64)>,
) {
    if path.len() >= min_len {
        out.push((path.clone(), mask));
    }
    let root = path[0];
    for next in root + 1..=n {
        if mask & (1 << next) == 0 {
            path.push(next);
            extend_cycles(n, min_len, path, mask | (1 << next), out);
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boards::make_spec;
    use crate::builders::{delta_mn, omega, omega_n};
    use crate::complexes::{join, Vertex};

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn complete_digraph_recovers_board_complexes() {
        for n in 1..=4 {
            assert_eq!(delta_digraph(&Digraph::complete(n)), delta_mn(n, n));
            assert_eq!(omega_digraph(&Digraph::complete(n)), omega_n(n));
            assert_eq!(omega_digraph(&Digraph::complete_loopless(n)), omega_n(n));
        }
        assert_eq!(
            omega_digraph(&Digraph::complete_loopless(2)).f_vector(),
            vec![2]
        );
    }

    #[test]
    fn four_forks_give_three_sphere() {
        // component i: edges (10i → 10i+1) and (10i → 10i+2)
        let edges: Vec<(i32, i32)> = (0..4)
            .flat_map(|i| [(10 * i, 10 * i + 1), (10 * i, 10 * i + 2)])
            .collect();
        let nodes = edges.iter().flat_map(|&(a, b)| [a, b]);
        let g = Digraph::new(nodes, edges.clone()).unwrap();
        let d = delta_digraph(&g);
        assert_eq!(d, omega_digraph(&g));
        let s0 = |i: i32| {
            SimplicialComplex::from_facets([
                [Vertex::square(10 * i, 10 * i + 1)],
                [Vertex::square(10 * i, 10 * i + 2)],
            ])
        };
        let s3 = (1..4).fold(s0(0), |acc, i| join(&acc, &s0(i)).unwrap());
        assert_eq!(d, s3);
        assert_eq!(d.f_vector(), vec![8, 24, 32, 16]);
    }

    #[test]
    fn directed_matching_small() {
        let dm2 = directed_matching(2);
        assert_eq!(
            dm2,
            SimplicialComplex::simplex([Vertex::square(1, 2), Vertex::square(2, 1)])
        );
        for n in 2..=4 {
            let dm = directed_matching(n);
            let o = omega_n(n);
            assert!(o.is_subcomplex_of(&dm));
            assert!(dm.is_subcomplex_of(&delta_mn(n, n)));
            assert!(dm.vertices().iter().all(|v| {
                let s = v.as_square().unwrap();
                s.row != s.col
            }));
            assert_eq!(filtration_level(Family::DirectedMatching, n, 0), o);
            assert_eq!(filtration_level(Family::Delta, n, 0), o);
        }
    }

    #[test]
    fn filtration_is_monotone_and_exhaustive() {
        for n in 2..=4 {
            let mut prev = filtration_level(Family::Delta, n, 0);
            for p in 1..=n {
                let cur = filtration_level(Family::Delta, n, p);
                assert!(prev.is_subcomplex_of(&cur));
                prev = cur;
            }
            assert_eq!(prev, delta_mn(n, n));
            let dm_top = filtration_level(Family::DirectedMatching, n, n / 2);
            assert_eq!(dm_top, directed_matching(n));
        }
        let f1 = filtration_level(Family::Delta, 3, 1);
        assert!(f1.vertex_index(Vertex::square(1, 1)).is_some());
        assert!(omega(&make_spec(3, 0, 0)).is_subcomplex_of(&f1));
    }

    #[test]
    fn multicycle_counts() {
        assert_eq!(multicycles(3, 1, 1).len(), 8);
        assert_eq!(multicycles(3, 1, 2).len(), 5);
        let two_loops = multicycles(2, 2, 1);
        assert_eq!(two_loops.len(), 1);
        assert_eq!(two_loops[0].cycle_type(), vec![1, 1]);
        assert_eq!(
            two_loops[0].squares(),
            vec![Square::new(1, 1), Square::new(2, 2)]
        );
        assert!(multicycles(2, 3, 1).is_empty());
        assert_eq!(multicycles(4, 0, 1).len(), 1);
    }

    #[test]
    fn single_cycle_counts_match_formula() {
        // C(n,m)(m−1)! cycles of length m
        for n in 1..=6 {
            for min_len in 1..=2 {
                let expected: usize = (min_len..=n)
                    .map(|m| binom(n, m) * (1..m).product::<usize>())
                    .sum();
                assert_eq!(multicycles(n, 1, min_len).len(), expected, "n={n}");
            }
        }
    }

    #[test]
    fn multicycle_rejects_bad_edge() {
        assert!(Digraph::new([1, 2], [(1, 3)]).is_err());
    }
}
