//! Squares, boards and rook configurations.
//!
//! A board is a finite set of integer squares `(row, col)`. Generalized
//! cycle-free complexes additionally carry a distinguished sub-board `X×Y`
//! and a bijection `α: Y → X`. A square `(x, y)` of `X×Y` is read as the
//! directed edge `x → α(y)` on the node set `X`; a configuration is
//! admissible when these edges close no directed cycle (loops included).
//!
//! Labels are arbitrary integers. The canonical representatives built by
//! [`make_spec`] use negative row labels for the extra rows `Z`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A square of `ℤ²`. Ordering is lexicographic on `(row, col)`, which fixes
/// the orientation of every simplex built from squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Square {
    pub row: i32,
    pub col: i32,
}

impl Square {
    pub const fn new(row: i32, col: i32) -> Self {
        Square { row, col }
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl From<(i32, i32)> for Square {
    fn from((row, col): (i32, i32)) -> Self {
        Square { row, col }
    }
}

/// A finite set of squares, a candidate simplex of a chessboard complex.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RookConfig {
    squares: BTreeSet<Square>,
}

impl RookConfig {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn squares(&self) -> impl ExactSizeIterator<Item = Square> + '_ {
        self.squares.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    pub fn contains(&self, sq: Square) -> bool {
        self.squares.contains(&sq)
    }

    pub fn insert(&mut self, sq: Square) -> bool {
        self.squares.insert(sq)
    }

    pub fn remove(&mut self, sq: Square) -> bool {
        self.squares.remove(&sq)
    }

    /// `true` iff every two distinct squares differ in both row and column.
    pub fn is_nontaking(&self) -> bool {
        self.taking_pair().is_none()
    }

    fn taking_pair(&self) -> Option<(Square, Square)> {
        let mut rows = BTreeMap::new();
        let mut cols = BTreeMap::new();
        for &sq in &self.squares {
            if let Some(prev) = rows.insert(sq.row, sq) {
                return Some((prev, sq));
            }
            if let Some(prev) = cols.insert(sq.col, sq) {
                return Some((prev, sq));
            }
        }
        None
    }
}

impl FromIterator<Square> for RookConfig {
    fn from_iter<I: IntoIterator<Item = Square>>(iter: I) -> Self {
        RookConfig {
            squares: iter.into_iter().collect(),
        }
    }
}

impl<const N: usize> From<[(i32, i32); N]> for RookConfig {
    fn from(squares: [(i32, i32); N]) -> Self {
        squares.into_iter().map(Square::from).collect()
    }
}

/// Free-function form of [`RookConfig::is_nontaking`].
pub fn is_nontaking(config: &RookConfig) -> bool {
    config.is_nontaking()
}

/// A bijection `α: Y → X` from column labels onto row labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bijection {
    forward: BTreeMap<i32, i32>,
    inverse: BTreeMap<i32, i32>,
}

impl Bijection {
    /// Builds a bijection from `(col, row)` pairs. Each column may appear
    /// once as a source and each row once as a target.
    pub fn new(pairs: impl IntoIterator<Item = (i32, i32)>) -> Result<Self> {
        let mut forward = BTreeMap::new();
        let mut inverse = BTreeMap::new();
        for (col, row) in pairs {
            if forward.insert(col, row).is_some() {
                return Err(Error::InvalidSpec(format!("column {col} mapped twice")));
            }
            if inverse.insert(row, col).is_some() {
                return Err(Error::InvalidSpec(format!("row {row} hit twice")));
            }
        }
        Ok(Bijection { forward, inverse })
    }

    pub fn identity(labels: impl IntoIterator<Item = i32>) -> Self {
        Self::new(labels.into_iter().map(|l| (l, l))).expect("identity is a bijection")
    }

    /// `α(col)`.
    pub fn apply(&self, col: i32) -> Option<i32> {
        self.forward.get(&col).copied()
    }

    /// `α⁻¹(row)`.
    pub fn preimage(&self, row: i32) -> Option<i32> {
        self.inverse.get(&row).copied()
    }

    /// `(col, row)` pairs in column order.
    pub fn pairs(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        self.forward.iter().map(|(&c, &r)| (c, r))
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// The data `(A, X×Y, α)` of a generalized cycle-free chessboard complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoardSpec {
    board: BTreeSet<Square>,
    x_rows: BTreeSet<i32>,
    y_cols: BTreeSet<i32>,
    alpha: Bijection,
}

impl BoardSpec {
    /// Validates `X×Y ⊆ A` and that `alpha` maps `Y` onto `X`.
    pub fn new(
        board: impl IntoIterator<Item = Square>,
        x_rows: impl IntoIterator<Item = i32>,
        y_cols: impl IntoIterator<Item = i32>,
        alpha: Bijection,
    ) -> Result<Self> {
        let board: BTreeSet<Square> = board.into_iter().collect();
        let x_rows: BTreeSet<i32> = x_rows.into_iter().collect();
        let y_cols: BTreeSet<i32> = y_cols.into_iter().collect();
        if x_rows.len() != y_cols.len() {
            return Err(Error::InvalidSpec(format!(
                "|X| = {} differs from |Y| = {}",
                x_rows.len(),
                y_cols.len()
            )));
        }
        let domain: BTreeSet<i32> = alpha.forward.keys().copied().collect();
        let image: BTreeSet<i32> = alpha.inverse.keys().copied().collect();
        if domain != y_cols || image != x_rows {
            return Err(Error::InvalidSpec("alpha is not a bijection Y → X".into()));
        }
        for &x in &x_rows {
            for &y in &y_cols {
                if !board.contains(&Square::new(x, y)) {
                    return Err(Error::InvalidSpec(format!(
                        "X×Y is not contained in the board: ({x},{y}) missing"
                    )));
                }
            }
        }
        Ok(BoardSpec {
            board,
            x_rows,
            y_cols,
            alpha,
        })
    }

    /// A spec with no distinguished sub-board: its Ω-complex is `Δ(board)`.
    pub fn unrestricted(board: impl IntoIterator<Item = Square>) -> Self {
        BoardSpec {
            board: board.into_iter().collect(),
            x_rows: BTreeSet::new(),
            y_cols: BTreeSet::new(),
            alpha: Bijection::identity([]),
        }
    }

    pub fn board(&self) -> &BTreeSet<Square> {
        &self.board
    }

    pub fn x_rows(&self) -> &BTreeSet<i32> {
        &self.x_rows
    }

    pub fn y_cols(&self) -> &BTreeSet<i32> {
        &self.y_cols
    }

    pub fn alpha(&self) -> &Bijection {
        &self.alpha
    }

    /// `|X|`.
    pub fn order(&self) -> usize {
        self.x_rows.len()
    }

    pub fn in_distinguished(&self, sq: Square) -> bool {
        self.x_rows.contains(&sq.row) && self.y_cols.contains(&sq.col)
    }

    /// The directed edge `x → α(y)` contributed by a square of `X×Y`.
    pub fn edge(&self, sq: Square) -> Option<(i32, i32)> {
        if self.in_distinguished(sq) {
            self.alpha.apply(sq.col).map(|target| (sq.row, target))
        } else {
            None
        }
    }

    /// Squares `(x, α⁻¹(x))`, the loops that can never be vertices.
    pub fn forbidden_squares(&self) -> impl Iterator<Item = Square> + '_ {
        self.alpha.pairs().map(|(col, row)| Square::new(row, col))
    }

    /// The `v`-reduced spec: the board loses the row and column of `v`, and
    /// `X′`, `Y′`, `α′` follow the four cases determined by whether the row
    /// of `v` lies in `X` and whether its column lies in `Y`.
    pub fn reduced(&self, v: Square) -> Result<BoardSpec> {
        if !self.board.contains(&v) {
            return Err(Error::SquareNotOnBoard(v));
        }
        let (a, b) = (v.row, v.col);
        let board: BTreeSet<Square> = self
            .board
            .iter()
            .copied()
            .filter(|sq| sq.row != a && sq.col != b)
            .collect();
        let a_in_x = self.x_rows.contains(&a);
        let b_in_y = self.y_cols.contains(&b);
        let mut x_rows = self.x_rows.clone();
        let mut y_cols = self.y_cols.clone();
        let alpha = match (a_in_x, b_in_y) {
            (true, true) => {
                x_rows.remove(&a);
                y_cols.remove(&b);
                let redirected = self.alpha.preimage(a).expect("a ∈ X");
                let target = self.alpha.apply(b).expect("b ∈ Y");
                Bijection::new(y_cols.iter().map(|&y| {
                    if y == redirected {
                        (y, target)
                    } else {
                        (y, self.alpha.apply(y).expect("y ∈ Y"))
                    }
                }))?
            }
            (true, false) => {
                x_rows.remove(&a);
                y_cols.remove(&self.alpha.preimage(a).expect("a ∈ X"));
                self.restricted_alpha(&y_cols)?
            }
            (false, true) => {
                y_cols.remove(&b);
                x_rows.remove(&self.alpha.apply(b).expect("b ∈ Y"));
                self.restricted_alpha(&y_cols)?
            }
            (false, false) => self.alpha.clone(),
        };
        // Rows and columns of X′×Y′ never coincide with those of v, so the
        // containment X′×Y′ ⊆ A′ is inherited from X×Y ⊆ A.
        BoardSpec::new(board, x_rows, y_cols, alpha)
    }

    fn restricted_alpha(&self, cols: &BTreeSet<i32>) -> Result<Bijection> {
        Bijection::new(
            cols.iter()
                .map(|&y| (y, self.alpha.apply(y).expect("y ∈ Y"))),
        )
    }
}

/// The canonical representative of `Ω^{n,p}_{n,m}`: `X = {1..n}`,
/// `Z = {−1..−m}`, `Y = {1..n}`, `T = {n+1..n+p}`, board `(X∪Z)×(Y∪T)` and
/// `α(j) = j`. `m = p = 0` gives the spec of `Ωₙ`.
pub fn make_spec(n: usize, m: usize, p: usize) -> BoardSpec {
    let n = n as i32;
    let rows: Vec<i32> = (1..=n).chain((1..=m as i32).map(|z| -z)).collect();
    let cols: Vec<i32> = (1..=n + p as i32).collect();
    let board = rows
        .iter()
        .flat_map(|&r| cols.iter().map(move |&c| Square::new(r, c)));
    BoardSpec::new(board, 1..=n, 1..=n, Bijection::identity(1..=n))
        .expect("canonical spec is valid")
}

/// Free-function form of [`BoardSpec::reduced`].
pub fn reduced_spec(spec: &BoardSpec, v: Square) -> Result<BoardSpec> {
    spec.reduced(v)
}

/// All directed cycles of the functional digraph that `config` induces on
/// `X`: each square `(x, y)` of `config ∩ X×Y` gives an edge `x → α(y)`.
/// Loops are cycles of length one. Each cycle is reported as its squares in
/// traversal order, starting from its smallest square; cycles are sorted.
pub fn alpha_cycles(config: &RookConfig, spec: &BoardSpec) -> Result<Vec<Vec<Square>>> {
    if let Some((s, t)) = config.taking_pair() {
        return Err(Error::Taking(s, t));
    }
    // Non-taking makes out-degree and in-degree at most one.
    let successor: BTreeMap<i32, (i32, Square)> = config
        .squares()
        .filter_map(|sq| spec.edge(sq).map(|(from, to)| (from, (to, sq))))
        .collect();
    let mut visited = BTreeSet::new();
    let mut cycles = Vec::new();
    for &start in successor.keys() {
        if visited.contains(&start) {
            continue;
        }
        let mut path = Vec::new();
        let mut position = BTreeMap::new();
        let mut node = start;
        loop {
            if visited.contains(&node) {
                break;
            }
            if let Some(&at) = position.get(&node) {
                let mut cycle: Vec<Square> = path[at..].to_vec();
                let min_at = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
                cycle.rotate_left(min_at);
                cycles.push(cycle);
                break;
            }
            match successor.get(&node) {
                Some(&(next, sq)) => {
                    position.insert(node, path.len());
                    path.push(sq);
                    node = next;
                }
                None => break,
            }
        }
        visited.extend(position.into_keys());
    }
    cycles.sort();
    Ok(cycles)
}

/// `true` iff the configuration is non-taking and closes no α-cycle.
pub fn is_admissible(config: &RookConfig, spec: &BoardSpec) -> bool {
    config.squares().all(|sq| spec.board.contains(&sq))
        && matches!(alpha_cycles(config, spec), Ok(c) if c.is_empty())
}

/// The facet `S_ρ = {(i₁, α⁻¹(i₂)), …, (i_{n−1}, α⁻¹(iₙ))}` of a linear
/// order `ρ = i₁ ≺ … ≺ iₙ` of `X`.
pub fn facet_from_order(order: &[i32], spec: &BoardSpec) -> Result<RookConfig> {
    let distinct: BTreeSet<i32> = order.iter().copied().collect();
    if distinct.len() != order.len() || &distinct != spec.x_rows() {
        return Err(Error::NotAPermutation(format!("{order:?}")));
    }
    Ok(order
        .windows(2)
        .map(|w| {
            let col = spec.alpha.preimage(w[1]).expect("order lies in X");
            Square::new(w[0], col)
        })
        .collect())
}
