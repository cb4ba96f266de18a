//! Explicit spheres inside cycle-free complexes, built as joins of small
//! factors (a hexagon circle and two-square "dominoes"), with their
//! fundamental cycles.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::boards::{is_admissible, make_spec, BoardSpec, RookConfig, Square};
use crate::builders::{omega_on, rect};
use crate::complexes::{join, SimplicialComplex, Vertex};
use crate::error::{Error, Result};
use crate::homology::Chain;

/// A simplicial sphere given as a join of factor spheres placed on a board,
/// every facet certified cycle-free in `ambient`.
#[derive(Clone, Debug)]
pub struct SphereEmbedding {
    factors: Vec<SimplicialComplex>,
    ambient: BoardSpec,
    complex: SimplicialComplex,
    fundamental: Chain,
}

impl SphereEmbedding {
    /// Joins the factors and certifies the result. Factors must be closed
    /// orientable pseudomanifolds on pairwise row- and column-disjoint
    /// squares.
    pub fn new(factors: Vec<SimplicialComplex>, ambient: BoardSpec) -> Result<Self> {
        let mut rows: BTreeSet<i32> = BTreeSet::new();
        let mut cols: BTreeSet<i32> = BTreeSet::new();
        for f in &factors {
            let squares: Vec<Square> = f
                .vertices()
                .iter()
                .map(|v| {
                    v.as_square()
                        .ok_or(Error::NotASphere(format!("label vertex {v}")))
                })
                .collect::<Result<_>>()?;
            let fr: BTreeSet<i32> = squares.iter().map(|s| s.row).collect();
            let fc: BTreeSet<i32> = squares.iter().map(|s| s.col).collect();
            if let Some(r) = fr.intersection(&rows).next() {
                return Err(Error::Invalid(format!("factors share row {r}")));
            }
            if let Some(c) = fc.intersection(&cols).next() {
                return Err(Error::Invalid(format!("factors share column {c}")));
            }
            rows.extend(fr);
            cols.extend(fc);
        }
        let mut complex = SimplicialComplex::empty_face();
        let mut fundamental = Chain::from_terms(-1, [(Vec::new(), 1)])?;
        for f in &factors {
            complex = join(&complex, f)?;
            fundamental = join_chains(&fundamental, &orient(f)?)?;
        }
        for facet in complex.facets() {
            let config: RookConfig = facet.iter().filter_map(Vertex::as_square).collect();
            if !is_admissible(&config, &ambient) {
                return Err(Error::Invalid(format!(
                    "facet {config:?} is not cycle-free in the ambient board"
                )));
            }
        }
        debug_assert!(fundamental.boundary().is_empty());
        Ok(SphereEmbedding {
            factors,
            ambient,
            complex,
            fundamental,
        })
    }

    pub fn factors(&self) -> &[SimplicialComplex] {
        &self.factors
    }

    pub fn ambient(&self) -> &BoardSpec {
        &self.ambient
    }

    /// The join of the factors.
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn fundamental(&self) -> &Chain {
        &self.fundamental
    }

    /// Dimension of the sphere.
    pub fn dim(&self) -> isize {
        self.fundamental.degree()
    }
}

/// The fundamental cycle of an embedding.
pub fn fundamental_cycle(e: &SphereEmbedding) -> Chain {
    e.fundamental.clone()
}

/// Orients a closed pseudomanifold by propagating signs across ridges; the
/// result is the fundamental cycle, unique up to sign.
pub fn orient(k: &SimplicialComplex) -> Result<Chain> {
    let facets: Vec<Vec<Vertex>> = k.facets().collect();
    let Some(d) = k.dim() else {
        return Err(Error::NotASphere("void complex".into()));
    };
    if facets.iter().any(|f| f.len() as isize != d + 1) {
        return Err(Error::NotASphere("not pure".into()));
    }
    // ridge → (facet, sign of the ridge in the facet's boundary)
    let mut ridges: BTreeMap<Vec<Vertex>, Vec<(usize, i64)>> = BTreeMap::new();
    for (i, f) in facets.iter().enumerate() {
        for pos in 0..f.len() {
            let mut r = f.clone();
            r.remove(pos);
            ridges
                .entry(r)
                .or_default()
                .push((i, if pos % 2 == 0 { 1 } else { -1 }));
        }
    }
    if d >= 0 && ridges.values().any(|v| v.len() != 2) {
        return Err(Error::NotASphere(
            "a ridge is not shared by exactly two facets".into(),
        ));
    }
    let mut sign: Vec<i64> = vec![0; facets.len()];
    if !facets.is_empty() {
        sign[0] = 1;
    }
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let f = &facets[i];
        for pos in 0..f.len() {
            let mut r = f.clone();
            r.remove(pos);
            let incident = &ridges[&r];
            let (mine, other) = if incident[0].0 == i {
                (incident[0], incident[1])
            } else {
                (incident[1], incident[0])
            };
            // contributions must cancel: sign_j·s_j = −sign_i·s_i
            let want = -sign[i] * mine.1 * other.1;
            match sign[other.0] {
                0 => {
                    sign[other.0] = want;
                    queue.push_back(other.0);
                }
                s if s != want => return Err(Error::NotASphere("not orientable".into())),
                _ => {}
            }
        }
    }
    if sign.contains(&0) {
        return Err(Error::NotASphere("not connected through ridges".into()));
    }
    Chain::from_terms(d, facets.into_iter().zip(sign))
}

/// `σ ∗ τ` on each pair of terms, the vertices of `σ` listed first; the
/// sorting parity supplies the shuffle sign.
pub fn join_chains(a: &Chain, b: &Chain) -> Result<Chain> {
    let mut out = Chain::zero(a.degree() + b.degree() + 1);
    for (s, x) in a.terms() {
        for (t, y) in b.terms() {
            let face: Vec<Vertex> = s.iter().chain(t).copied().collect();
            out.add_term(face, x * y)?;
        }
    }
    Ok(out)
}

fn domino(squares: [(i32, i32); 2]) -> SimplicialComplex {
    SimplicialComplex::from_facets(squares.map(|s| [Vertex::from(s)]))
}

/// The hexagon: faces of `Ω₅` on rows `{1,2}` × columns `{1..4}`, a circle
/// with six vertices and six edges.
pub fn hexagon_complex() -> SimplicialComplex {
    omega_on(&make_spec(5, 0, 0), rect(1..=2, 1..=4))
}

/// The hexagon as a 1-sphere in `Ω₅`.
pub fn hexagon() -> SphereEmbedding {
    SphereEmbedding::new(vec![hexagon_complex()], make_spec(5, 0, 0))
        .expect("the hexagon is a cycle-free circle")
}

/// `S = hexagon ∗ {(3,5),(4,5)}`, a 2-sphere in `Ω₅`.
pub fn sphere_s() -> SphereEmbedding {
    SphereEmbedding::new(
        vec![hexagon_complex(), domino([(3, 5), (4, 5)])],
        make_spec(5, 0, 0),
    )
    .expect("S is a cycle-free 2-sphere")
}

/// `Σ_{2k−1} = T₁ ∗ … ∗ T_{2k}` in `Ω_{3k,1}`, with `x₀` the extra row −1:
/// `T_{2j−1} = {(x_{3j−3}, y_{3j−2}), (x_{3j−3}, y_{3j−1})}` and
/// `T_{2j} = {(x_{3j−2}, y_{3j}), (x_{3j−1}, y_{3j})}`.
pub fn xi(k: usize) -> Result<SphereEmbedding> {
    if k == 0 {
        return Err(Error::Invalid("xi needs k ≥ 1".into()));
    }
    let x = |i: i32| if i == 0 { -1 } else { i };
    let mut factors = Vec::new();
    for j in 1..=k as i32 {
        factors.push(domino([
            (x(3 * j - 3), 3 * j - 2),
            (x(3 * j - 3), 3 * j - 1),
        ]));
        factors.push(domino([(x(3 * j - 2), 3 * j), (x(3 * j - 1), 3 * j)]));
    }
    SphereEmbedding::new(factors, make_spec(3 * k, 1, 0))
}

/// A `2k`-sphere in `Ω_{3k+2}`: `S` joined with `k − 1` blocks, block `b`
/// holding the horizontal domino `{(3b+2, 3b+3), (3b+2, 3b+4)}` and the
/// vertical domino `{(3b+3, 3b+5), (3b+4, 3b+5)}`. Every edge of a block
/// points to a larger label, so no α-cycle can close.
pub fn sigma_tight(k: usize) -> Result<SphereEmbedding> {
    if k == 0 {
        return Err(Error::Invalid("sigma_tight needs k ≥ 1".into()));
    }
    let ambient = make_spec(3 * k + 2, 0, 0);
    let mut factors = vec![hexagon_complex(), domino([(3, 5), (4, 5)])];
    for b in 1..k as i32 {
        let (r, c) = (3 * b + 2, 3 * b + 3);
        factors.push(domino([(r, c), (r, c + 1)]));
        factors.push(domino([(r + 1, c + 2), (r + 2, c + 2)]));
    }
    match SphereEmbedding::new(factors.clone(), ambient.clone()) {
        Ok(e) => Ok(e),
        Err(_) => search_blocks(k, ambient),
    }
}

// Tries every horizontal row and vertical column choice inside each block's
// three fresh rows and columns.
fn search_blocks(k: usize, ambient: BoardSpec) -> Result<SphereEmbedding> {
    fn go(
        b: i32,
        k: i32,
        factors: &mut Vec<SimplicialComplex>,
        ambient: &BoardSpec,
    ) -> Option<SphereEmbedding> {
        if b == k {
            return SphereEmbedding::new(factors.clone(), ambient.clone()).ok();
        }
        let rows = [3 * b + 2, 3 * b + 3, 3 * b + 4];
        let cols = [3 * b + 3, 3 * b + 4, 3 * b + 5];
        for hr in 0..3 {
            for vc in 0..3 {
                let hcols: Vec<i32> = (0..3).filter(|&i| i != vc).map(|i| cols[i]).collect();
                let vrows: Vec<i32> = (0..3).filter(|&i| i != hr).map(|i| rows[i]).collect();
                factors.push(domino([(rows[hr], hcols[0]), (rows[hr], hcols[1])]));
                factors.push(domino([(vrows[0], cols[vc]), (vrows[1], cols[vc])]));
                let partial = SphereEmbedding::new(factors.clone(), ambient.clone()).is_ok();
                if partial {
                    if let Some(e) = go(b + 1, k, factors, ambient) {
                        return Some(e);
                    }
                }
                factors.truncate(factors.len() - 2);
            }
        }
        None
    }
    let mut factors = vec![hexagon_complex(), domino([(3, 5), (4, 5)])];
    go(1, k as i32, &mut factors, &ambient)
        .ok_or_else(|| Error::Invalid("no cycle-free block placement".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{omega_n, omega_nm};
    use crate::homology::{homology, is_boundary, is_cycle, AbelianGroup, Coefficients};

    #[test]
    fn hexagon_is_a_circle() {
        let h = hexagon();
        assert_eq!(h.complex().f_vector(), vec![6, 6]);
        assert_eq!(h.fundamental().len(), 6);
        assert!(h.fundamental().terms().all(|(_, c)| c.abs() == 1));
        let groups = homology(h.complex(), .., Coefficients::Integers).unwrap();
        assert_eq!(groups.get(1), Some(&AbelianGroup::free(1)));
        assert_eq!(groups.get(0), Some(&AbelianGroup::zero()));
        assert!(!h
            .complex()
            .contains_face(&[Vertex::square(1, 2), Vertex::square(2, 1)]));
        assert_eq!(omega_nm(2, 2).f_vector(), h.complex().f_vector());
    }

    #[test]
    fn sphere_s_counts() {
        let s = sphere_s();
        // (1 + 6t + 6t²)(1 + 2t)
        assert_eq!(s.complex().f_vector(), vec![8, 18, 12]);
        assert_eq!(s.fundamental().len(), 12);
        assert!(is_cycle(s.fundamental(), &omega_n(5)).unwrap());
        assert_eq!(s.dim(), 2);
        assert!(s.complex().is_subcomplex_of(&omega_n(5)));
    }

    #[test]
    fn join_orientation_matches_propagation() {
        for e in [
            sphere_s(),
            xi(1).unwrap(),
            xi(2).unwrap(),
            sigma_tight(2).unwrap(),
        ] {
            let direct = orient(e.complex()).unwrap();
            assert!(direct == *e.fundamental() || direct == e.fundamental().scaled(-1));
        }
    }

    #[test]
    fn xi_factors() {
        let x1 = xi(1).unwrap();
        let sq = |r, c| Vertex::square(r, c);
        assert_eq!(x1.factors()[0].vertices(), &[sq(-1, 1), sq(-1, 2)]);
        assert_eq!(x1.factors()[1].vertices(), &[sq(1, 3), sq(2, 3)]);
        assert_eq!(x1.complex().f_vector(), vec![4, 4]);
        let x2 = xi(2).unwrap();
        assert_eq!(x2.dim(), 3);
        assert_eq!(x2.factors()[2].vertices(), &[sq(3, 4), sq(3, 5)]);
        assert_eq!(x2.factors()[3].vertices(), &[sq(4, 6), sq(5, 6)]);
        assert!(xi(0).is_err());
    }

    #[test]
    fn sigma_blocks() {
        let s1 = sigma_tight(1).unwrap();
        assert_eq!(s1.complex(), sphere_s().complex());
        let s2 = sigma_tight(2).unwrap();
        let sq = |r, c| Vertex::square(r, c);
        assert_eq!(s2.factors()[2].vertices(), &[sq(5, 6), sq(5, 7)]);
        assert_eq!(s2.factors()[3].vertices(), &[sq(6, 8), sq(7, 8)]);
        let s3 = sigma_tight(3).unwrap();
        assert_eq!(s3.dim(), 6);
        assert!(s3.complex().facets().all(|f| f.len() == 7));
        assert_eq!(s3.factors()[4].vertices(), &[sq(8, 9), sq(8, 10)]);
        assert_eq!(s3.factors()[5].vertices(), &[sq(9, 11), sq(10, 11)]);
    }

    #[test]
    fn s_generates_h2_of_delta5() {
        let s = sphere_s();
        let d5 = crate::builders::delta_mn(5, 5);
        let p = crate::homology::presentation(&d5, 2).unwrap();
        assert_eq!(p.group(), &AbelianGroup::cyclic(3));
        assert!(p.generates(s.fundamental()).unwrap());
        assert!(!is_boundary(s.fundamental(), &omega_n(5), Coefficients::Integers).unwrap());
    }

    #[test]
    fn xi_does_not_bound() {
        let x1 = xi(1).unwrap();
        assert!(!is_boundary(x1.fundamental(), &omega_nm(3, 1), Coefficients::Integers).unwrap());
        let big = crate::builders::delta(rect([-1, 1, 2, 3], 1..=3));
        assert!(!is_boundary(x1.fundamental(), &big, Coefficients::Integers).unwrap());
        let x2 = xi(2).unwrap();
        assert!(is_cycle(x2.fundamental(), &omega_nm(6, 1)).unwrap());
        assert!(!is_boundary(x2.fundamental(), &omega_nm(6, 1), Coefficients::Integers).unwrap());
    }

    #[test]
    fn block_search_finds_a_placement() {
        let e = search_blocks(2, make_spec(8, 0, 0)).unwrap();
        assert_eq!(e.dim(), 4);
    }

    #[test]
    fn rejects_bad_factors() {
        let path = SimplicialComplex::from_facets([[Vertex::square(1, 2), Vertex::square(2, 3)]]);
        assert!(matches!(
            SphereEmbedding::new(vec![path], make_spec(3, 0, 0)),
            Err(Error::NotASphere(_))
        ));
        // a domino whose squares close a loop is rejected by the certifier
        let loopy = domino([(1, 1), (2, 1)]);
        assert!(SphereEmbedding::new(vec![loopy], make_spec(2, 0, 0)).is_err());
        let a = domino([(1, 2), (1, 3)]);
        let b = domino([(1, 4), (2, 4)]);
        assert!(SphereEmbedding::new(vec![a, b], make_spec(4, 0, 0)).is_err());
    }
}
