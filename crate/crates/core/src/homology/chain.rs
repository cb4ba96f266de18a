use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::matrix::{Cells, SparseMatrix};
use super::morse::Morse;
use super::ring::{Int64, ModP};
use super::{invariants, morse_boundaries, Coefficients};
use crate::complexes::{format_face, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// A formal integer combination of oriented `k`-simplices. Faces are stored
/// with sorted vertices; the stored coefficient refers to the lexicographic
/// orientation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    degree: isize,
    terms: BTreeMap<Vec<Vertex>, i64>,
}

impl Chain {
    pub fn zero(degree: isize) -> Self {
        Chain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Sums oriented faces. Vertex lists may come in any order: an odd
    /// sorting permutation flips the sign.
    pub fn from_terms(
        degree: isize,
        terms: impl IntoIterator<Item = (Vec<Vertex>, i64)>,
    ) -> Result<Self> {
        let mut chain = Chain::zero(degree);
        for (face, c) in terms {
            chain.add_term(face, c)?;
        }
        Ok(chain)
    }

    /// The elementary chain of one oriented simplex.
    pub fn simplex(face: Vec<Vertex>) -> Result<Self> {
        let degree = face.len() as isize - 1;
        Self::from_terms(degree, [(face, 1)])
    }

    pub fn add_term(&mut self, mut face: Vec<Vertex>, coefficient: i64) -> Result<()> {
        if face.len() as isize != self.degree + 1 {
            return Err(Error::ForeignChain(format!(
                "{} is not a {}-face",
                format_face(&face),
                self.degree
            )));
        }
        let odd = sort_parity(&mut face);
        if face.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::ForeignChain(format!(
                "{} repeats a vertex",
                format_face(&face)
            )));
        }
        let c = if odd { -coefficient } else { coefficient };
        let entry = self.terms.entry(face).or_insert(0);
        *entry = entry
            .checked_add(c)
            .ok_or_else(|| Error::Invalid("chain coefficient overflow".into()))?;
        self.terms.retain(|_, v| *v != 0);
        Ok(())
    }

    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(face, coefficient)` pairs in lexicographic face order.
    pub fn terms(&self) -> impl Iterator<Item = (&[Vertex], i64)> + '_ {
        self.terms.iter().map(|(f, &c)| (f.as_slice(), c))
    }

    pub fn coefficient(&self, face: &[Vertex]) -> i64 {
        let mut sorted = face.to_vec();
        let odd = sort_parity(&mut sorted);
        let c = self.terms.get(&sorted).copied().unwrap_or(0);
        if odd {
            -c
        } else {
            c
        }
    }

    /// `∂` of the augmented complex: a 0-chain maps to the empty face with
    /// the sum of its coefficients.
    pub fn boundary(&self) -> Chain {
        let mut out: BTreeMap<Vec<Vertex>, i64> = BTreeMap::new();
        for (face, &c) in &self.terms {
            for pos in 0..face.len() {
                let mut sub = face.clone();
                sub.remove(pos);
                let sign = if pos % 2 == 0 { c } else { -c };
                *out.entry(sub).or_insert(0) += sign;
            }
        }
        out.retain(|_, v| *v != 0);
        Chain {
            degree: self.degree - 1,
            terms: out,
        }
    }

    pub fn scaled(&self, factor: i64) -> Chain {
        let mut terms = self.terms.clone();
        for v in terms.values_mut() {
            *v *= factor;
        }
        terms.retain(|_, v| *v != 0);
        Chain {
            degree: self.degree,
            terms,
        }
    }

    pub fn plus(&self, other: &Chain) -> Result<Chain> {
        if self.degree != other.degree {
            return Err(Error::ForeignChain("degrees differ".into()));
        }
        let mut out = self.clone();
        for (f, &c) in &other.terms {
            out.add_term(f.clone(), c)?;
        }
        Ok(out)
    }

    /// Coordinates in the `faces(K, k)` basis.
    pub fn to_vector(&self, cx: &SimplicialComplex) -> Result<Vec<i64>> {
        if self.degree < -1 {
            return Ok(Vec::new());
        }
        let faces = cx.faces(self.degree);
        let mut v = vec![0; faces.len()];
        for (face, &c) in &self.terms {
            let idx = cx
                .face_indices(face)
                .and_then(|idx| faces.index_of(&idx))
                .ok_or_else(|| Error::ForeignChain(format_face(face)))?;
            v[idx] = c;
        }
        Ok(v)
    }

    /// The chain with the given coordinates in the `faces(K, k)` basis.
    pub fn from_vector(cx: &SimplicialComplex, degree: isize, coords: &[i64]) -> Chain {
        let faces = cx.faces(degree);
        assert_eq!(coords.len(), faces.len(), "coordinate count");
        let terms = faces
            .iter()
            .zip(coords)
            .filter(|(_, &c)| c != 0)
            .map(|(f, &c)| (f.iter().map(|&i| cx.vertices()[i as usize]).collect(), c))
            .collect();
        Chain { degree, terms }
    }

    /// Maps vertices through `f`, which must be injective on the support.
    pub fn relabel(&self, mut f: impl FnMut(Vertex) -> Vertex) -> Result<Chain> {
        Chain::from_terms(
            self.degree,
            self.terms
                .iter()
                .map(|(face, &c)| (face.iter().map(|&v| f(v)).collect(), c)),
        )
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (face, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            let sep = if i > 0 { " " } else { "" };
            let mag = c.unsigned_abs();
            let coef = if mag == 1 {
                String::new()
            } else {
                mag.to_string()
            };
            write!(f, "{sep}{sign}{coef}{}", format_face(face))?;
        }
        Ok(())
    }
}

/// Sorts in place and reports whether the permutation was odd.
fn sort_parity(face: &mut [Vertex]) -> bool {
    let mut odd = false;
    // insertion sort: each adjacent swap flips parity
    for i in 1..face.len() {
        let mut j = i;
        while j > 0 && face[j - 1] > face[j] {
            face.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    odd
}

/// `true` iff `∂c = 0` in the augmented chain complex of `K`.
pub fn is_cycle(chain: &Chain, cx: &SimplicialComplex) -> Result<bool> {
    chain.to_vector(cx)?;
    Ok(chain.boundary().is_empty())
}

/// `true` iff `c = ∂x` for some chain `x` of `K` with the given
/// coefficients.
///
/// Over `ℤ`, `c ∈ im B` exactly when `[B | c]` has the same rank and the
/// same invariant factors as `B`: the quotients `ℤᵐ/im B` and
/// `ℤᵐ/im [B|c]` are then isomorphic, and a surjection between isomorphic
/// finitely generated modules is injective.
pub fn is_boundary(
    chain: &Chain,
    cx: &SimplicialComplex,
    coefficients: Coefficients,
) -> Result<bool> {
    let coefficients = coefficients.validate()?;
    let v = chain.to_vector(cx)?;
    let cells = Cells::absolute(cx, true);
    if chain.degree() < -1 {
        return Ok(true);
    }
    let reduce = |x: i64| match coefficients {
        Coefficients::Integers => x,
        Coefficients::Prime(p) => x.rem_euclid(p as i64),
    };
    if v.iter().all(|&x| reduce(x) == 0) {
        return Ok(true);
    }
    if !is_cycle_over(chain, coefficients) {
        return Ok(false);
    }
    let k = chain.degree();
    let sparse: Vec<(u32, i64)> = v
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| (i as u32, x))
        .collect();
    let morse = Morse::new(&cells, k - 2, k + 2);
    let reduced = match coefficients {
        Coefficients::Integers => morse.project(&Int64, k, &sparse).ok().zip(morse_boundaries(
            &morse,
            k + 1,
            k + 1,
            coefficients,
        )),
        Coefficients::Prime(p) => {
            let f = ModP::new(p);
            morse
                .project(&f, k, &sparse)
                .ok()
                .map(|z| z.into_iter().map(|(i, x)| (i, x as i64)).collect())
                .zip(morse_boundaries(&morse, k + 1, k + 1, coefficients))
        }
    };
    Ok(match reduced {
        Some((z, mut b)) => in_image(b.pop().expect("one matrix"), &z, coefficients),
        None => in_image(cells.boundary(k + 1), &sparse, coefficients),
    })
}

/// `true` iff the column `col` lies in the image of `b`.
fn in_image(b: SparseMatrix, col: &[(u32, i64)], coefficients: Coefficients) -> bool {
    if col.is_empty() {
        return true;
    }
    let mut augmented = b.clone();
    augmented.push_column(col);
    let before = invariants(&b, coefficients);
    let after = invariants(&augmented, coefficients);
    let mut t0 = before.torsion;
    let mut t1 = after.torsion;
    t0.sort();
    t1.sort();
    before.rank == after.rank && t0 == t1
}

fn is_cycle_over(chain: &Chain, coefficients: Coefficients) -> bool {
    let b = chain.boundary();
    match coefficients {
        Coefficients::Integers => b.is_empty(),
        Coefficients::Prime(p) => b.terms().all(|(_, c)| c.rem_euclid(p as i64) == 0),
    }
}
