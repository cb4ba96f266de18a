//! Constructors for every complex family: chessboard complexes `Δ(A)`,
//! generalized cycle-free complexes `Ω(A, X×Y, α)`, the `Θₙ` decomposition,
//! digraph complexes, directed matchings, the cycle-count filtrations and
//! the suspension `Sym^{(p)}_*`.

mod digraph;
mod search;

use crate::boards::{make_spec, BoardSpec, Square};
use crate::complexes::{suspension, union, SimplicialComplex};

pub use digraph::{
    delta_digraph, directed_matching, filtration_level, multicycles, omega_digraph, Digraph,
    Family, Multicycle,
};

use search::Search;

/// `Δ(A)`: all non-taking rook configurations on the board.
pub fn delta(board: impl IntoIterator<Item = Square>) -> SimplicialComplex {
    Search::new(board, |_| None, 0).complex()
}

/// `Δ_{m,n}` on `[m]×[n]`.
pub fn delta_mn(m: usize, n: usize) -> SimplicialComplex {
    delta(rect(1..=m as i32, 1..=n as i32))
}

/// `Ω(A, X×Y, α)`: non-taking configurations whose restriction to `X×Y`
/// closes no α-cycle.
pub fn omega(spec: &BoardSpec) -> SimplicialComplex {
    omega_on(spec, spec.board().iter().copied())
}

/// The Ω-condition of `spec` applied to an arbitrary set of squares.
pub(crate) fn omega_on(
    spec: &BoardSpec,
    squares: impl IntoIterator<Item = Square>,
) -> SimplicialComplex {
    Search::new(squares, |s| spec.edge(s), 0).complex()
}

/// `Ωₙ`. For `n = 0` and `n = 1` this is `{∅}`: the empty configuration
/// is always admissible, and the only square of the `1×1` board is a loop.
pub fn omega_n(n: usize) -> SimplicialComplex {
    if n == 0 {
        return SimplicialComplex::empty_face();
    }
    omega(&make_spec(n, 0, 0))
}

/// `Ω_{n,m}`.
pub fn omega_nm(n: usize, m: usize) -> SimplicialComplex {
    if n == 0 {
        return delta(rect((1..=m as i32).map(|z| -z), std::iter::empty()));
    }
    omega(&make_spec(n, m, 0))
}

/// `Θₙ¹`: faces of `Ωₙ` with no square in column 1 (row 1 may be used).
pub fn theta1(n: usize) -> SimplicialComplex {
    let spec = make_spec(n, 0, 0);
    let squares: Vec<Square> = spec
        .board()
        .iter()
        .copied()
        .filter(|s| s.col != 1)
        .collect();
    omega_on(&spec, squares)
}

/// `Θₙ²`: faces of `Ωₙ` with no square in row 1.
pub fn theta2(n: usize) -> SimplicialComplex {
    let spec = make_spec(n, 0, 0);
    let squares: Vec<Square> = spec
        .board()
        .iter()
        .copied()
        .filter(|s| s.row != 1)
        .collect();
    omega_on(&spec, squares)
}

/// `Θₙ = Θₙ¹ ∪ Θₙ²`: faces of `Ωₙ` that do not use both row 1 and column 1.
pub fn theta(n: usize) -> SimplicialComplex {
    union(&theta1(n), &theta2(n))
}

/// `Sym^{(p)}_* = ΣΩ_{p+1}`.
pub fn sym(p: usize) -> SimplicialComplex {
    suspension(&omega_n(p + 1))
}

pub(crate) fn rect(
    rows: impl IntoIterator<Item = i32>,
    cols: impl IntoIterator<Item = i32> + Clone,
) -> Vec<Square> {
    rows.into_iter()
        .flat_map(|r| cols.clone().into_iter().map(move |c| Square::new(r, c)))
        .collect()
}
