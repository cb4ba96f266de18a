//! Exact simplicial homology over `ℤ` and prime fields.
//!
//! Chains use the lexicographic vertex order as orientation; the boundary
//! sign of deleting the vertex at position `i` is `(−1)^i`. Homology is
//! reduced unless stated otherwise: the empty face spans degree −1.

mod chain;
mod eliminate;
mod matrix;
mod morse;
mod presentation;
mod ring;
mod snf;
mod survey;

use std::fmt;
use std::ops::{Bound, RangeBounds};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};

pub use chain::{is_boundary, is_cycle, Chain};
pub use matrix::{boundary_matrix, SparseMatrix};
pub use presentation::{induced_map, presentation, InducedMap, Presentation};
pub use survey::{field_survey, FieldSurvey};

use eliminate::{eliminate, Overflow, Row};
use matrix::Cells;
use morse::Morse;
use ring::{Arith, Big, Int64, ModP};

/// Coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coefficients {
    Integers,
    /// `𝔽_p` for a prime `p < 2³¹`.
    Prime(u32),
}

impl Coefficients {
    fn validate(self) -> Result<Self> {
        match self {
            Coefficients::Prime(p) if !ring::is_prime(p) || p >= 1 << 31 => {
                Err(Error::Invalid(format!("{p} is not a prime below 2^31")))
            }
            c => Ok(c),
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => write!(f, "ℤ"),
            Coefficients::Prime(p) => write!(f, "𝔽{}", subscript(&p.to_string())),
        }
    }
}

/// A finitely generated abelian group `ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_t` with
/// `d₁ | d₂ | … | d_t`, all `dᵢ ≥ 2`. Over a field only `rank` is used.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    rank: usize,
    torsion: Vec<BigUint>,
}

impl AbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// `ℤ/d`; `d = 1` gives the trivial group, `d = 0` gives `ℤ`.
    pub fn cyclic(d: u64) -> Self {
        Self::new(0, [d])
    }

    /// Normalizes arbitrary cyclic orders into the divisibility chain:
    /// zeros add to the rank, ones vanish.
    pub fn new(rank: usize, orders: impl IntoIterator<Item = u64>) -> Self {
        Self::from_big(rank, orders.into_iter().map(BigUint::from))
    }

    pub(crate) fn from_big(mut rank: usize, orders: impl IntoIterator<Item = BigUint>) -> Self {
        let mut divisors: Vec<BigUint> = Vec::new();
        for d in orders {
            if d.is_zero() {
                rank += 1;
            } else if !d.is_one() {
                divisors.push(d);
            }
        }
        AbelianGroup {
            rank,
            torsion: normalize_chain(divisors),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Number of cyclic summands of order divisible by `p`.
    pub fn p_torsion_count(&self, p: u32) -> usize {
        let p = BigUint::from(p);
        self.torsion.iter().filter(|d| (*d % &p).is_zero()).count()
    }

    /// Minimal number of generators.
    pub fn num_generators(&self) -> usize {
        self.rank + self.torsion.len()
    }
}

/// Rewrites cyclic orders as invariant factors `d₁ | … | d_t`.
fn normalize_chain(mut ds: Vec<BigUint>) -> Vec<BigUint> {
    use num_integer::Integer;
    // repeated gcd/lcm exchange until the chain divides
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..ds.len() {
            for j in i + 1..ds.len() {
                if !(&ds[j] % &ds[i]).is_zero() {
                    let g = ds[i].gcd(&ds[j]);
                    let l = ds[i].lcm(&ds[j]);
                    ds[i] = g;
                    ds[j] = l;
                    changed = true;
                }
            }
        }
    }
    ds.retain(|d| !d.is_one());
    ds.sort();
    ds
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("ℤ".to_string()),
            r => parts.push(format!("ℤ{}", superscript(&r.to_string()))),
        }
        let mut k = 0;
        while k < self.torsion.len() {
            let d = &self.torsion[k];
            let run = self.torsion[k..].iter().take_while(|x| *x == d).count();
            let base = format!("ℤ{}", subscript(&d.to_string()));
            if run == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}{}", superscript(&run.to_string())));
            }
            k += run;
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

fn subscript(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            '0'..='9' => char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap(),
            c => c,
        })
        .collect()
}

fn superscript(s: &str) -> String {
    s.chars()
        .map(|c| match c {
            '1' => '¹',
            '2' => '²',
            '3' => '³',
            '0' | '4'..='9' => char::from_u32('⁰' as u32 + c.to_digit(10).unwrap()).unwrap(),
            c => c,
        })
        .collect()
}

/// Homology groups over a contiguous range of degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    coefficients: Coefficients,
    reduced: bool,
    first: isize,
    groups: Vec<AbelianGroup>,
    representatives: Option<Vec<Vec<Chain>>>,
}

impl HomologyResult {
    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Degrees covered, in order.
    pub fn degrees(&self) -> impl Iterator<Item = isize> + '_ {
        (0..self.groups.len()).map(|i| self.first + i as isize)
    }

    /// The group in degree `k`; `None` outside the computed range.
    pub fn get(&self, k: isize) -> Option<&AbelianGroup> {
        let i = k.checked_sub(self.first)?;
        usize::try_from(i).ok().and_then(|i| self.groups.get(i))
    }

    /// Betti number (rank over `ℤ`, dimension over `𝔽_p`) in degree `k`.
    pub fn betti(&self, k: isize) -> Option<usize> {
        self.get(k).map(AbelianGroup::rank)
    }

    pub fn iter(&self) -> impl Iterator<Item = (isize, &AbelianGroup)> + '_ {
        self.degrees().zip(self.groups.iter())
    }

    /// Representative cycles per degree, when requested.
    pub fn representatives(&self, k: isize) -> Option<&[Chain]> {
        let i = usize::try_from(k.checked_sub(self.first)?).ok()?;
        self.representatives.as_ref()?.get(i).map(Vec::as_slice)
    }

    /// `true` iff every group in range is trivial.
    pub fn is_trivial(&self) -> bool {
        self.groups.iter().all(AbelianGroup::is_trivial)
    }
}

impl fmt::Display for HomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h = if self.reduced { "H̃" } else { "H" };
        let parts: Vec<String> = self
            .iter()
            .map(|(k, g)| match self.coefficients {
                Coefficients::Integers => format!("{h}{}={g}", subscript_degree(k)),
                Coefficients::Prime(_) => format!("{h}{}={}", subscript_degree(k), g.rank()),
            })
            .collect();
        write!(f, "[{}] {}", self.coefficients, parts.join(", "))
    }
}

fn subscript_degree(k: isize) -> String {
    if k < 0 {
        format!("₋{}", subscript(&(-k).to_string()))
    } else {
        subscript(&k.to_string())
    }
}

/// Rank and (for `ℤ`) non-unit invariant factors of one boundary map.
#[derive(Clone, Debug, Default)]
pub(crate) struct Invariants {
    pub rank: usize,
    pub torsion: Vec<BigUint>,
}

fn rows_over<A: Arith>(a: &A, m: &SparseMatrix) -> Vec<Row<A::T>> {
    m.rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|&(j, v)| (j, a.lift(v)))
                .filter(|(_, v)| !a.is_zero(v))
                .collect()
        })
        .collect()
}

fn integer_invariants_with<A: Arith>(
    a: &A,
    m: &SparseMatrix,
) -> std::result::Result<Invariants, Overflow> {
    let reduced = eliminate(a, rows_over(a, m), m.ncols())?;
    let dense: Vec<Vec<BigInt>> = reduced
        .residual
        .iter()
        .map(|r| {
            let mut d = vec![BigInt::zero(); reduced.residual_cols];
            for (j, v) in r {
                d[*j as usize] = a.to_big(v);
            }
            d
        })
        .collect();
    let diag = snf::invariant_factors_big(dense, reduced.residual_cols);
    let nonzero: Vec<BigUint> = diag
        .iter()
        .filter(|d| !d.is_zero())
        .map(|d| d.abs().to_biguint().expect("nonnegative"))
        .collect();
    Ok(Invariants {
        rank: reduced.units + nonzero.len(),
        torsion: nonzero.into_iter().filter(|d| !d.is_one()).collect(),
    })
}

/// Invariants of a sparse integer matrix over the given coefficients.
pub(crate) fn invariants(m: &SparseMatrix, coefficients: Coefficients) -> Invariants {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Invariants::default();
    }
    match coefficients {
        Coefficients::Integers => integer_invariants_with(&Int64, m)
            .or_else(|Overflow| integer_invariants_with(&Big, m))
            .expect("big integers do not overflow"),
        Coefficients::Prime(p) => {
            let f = ModP::new(p);
            let reduced =
                eliminate(&f, rows_over(&f, m), m.ncols()).expect("fields do not overflow");
            debug_assert!(reduced.residual.is_empty());
            Invariants {
                rank: reduced.units,
                torsion: Vec::new(),
            }
        }
    }
}

/// Invariant factors of an integer matrix, in divisibility order; zero
/// factors are omitted, so the length is the rank.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigUint> {
    let inv = invariants(m, Coefficients::Integers);
    let mut out = vec![BigUint::one(); inv.rank - inv.torsion.len()];
    out.extend(normalize_chain(inv.torsion));
    out
}

/// Smith normal form of a dense integer matrix: the nonzero invariant
/// factors `d₁ | d₂ | …`.
pub fn snf(m: &[Vec<i64>]) -> Vec<BigUint> {
    let ncols = m.first().map_or(0, Vec::len);
    invariant_factors(&SparseMatrix::from_dense(m, ncols))
}

/// A Smith decomposition `U·M·V = D` with unimodular `U`, `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries of `D`, in order.
    pub diagonal: Vec<BigInt>,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

/// Smith normal form together with the transforms.
pub fn snf_with_transforms(m: &[Vec<i64>]) -> SmithForm {
    let ncols = m.first().map_or(0, Vec::len);
    let want = snf::Want {
        u: true,
        v: true,
        ..Default::default()
    };
    let d = snf::dense_snf_exact(m, ncols, want);
    SmithForm {
        diagonal: d.diag,
        u: d.u.expect("requested"),
        v: d.v.expect("requested"),
    }
}

fn resolve(degrees: impl RangeBounds<isize>, top: isize) -> (isize, isize) {
    let lo = match degrees.start_bound() {
        Bound::Included(&k) => k,
        Bound::Excluded(&k) => k + 1,
        Bound::Unbounded => -1,
    };
    let hi = match degrees.end_bound() {
        Bound::Included(&k) => k,
        Bound::Excluded(&k) => k - 1,
        Bound::Unbounded => top,
    };
    (lo, hi)
}

/// The Morse boundaries `∂̃_k` for `k` in `lo..=hi` over the given
/// coefficients; `None` if an integer entry overflows.
pub(crate) fn morse_boundaries(
    morse: &Morse<'_>,
    lo: isize,
    hi: isize,
    coefficients: Coefficients,
) -> Option<Vec<SparseMatrix>> {
    (lo..=hi)
        .into_par_iter()
        .map(|k| match coefficients {
            Coefficients::Integers => morse.boundary(&Int64, k, |&x| Some(x)).ok(),
            Coefficients::Prime(p) => morse.boundary(&ModP::new(p), k, |&x| Some(x as i64)).ok(),
        })
        .collect()
}

fn compute(
    cells: &Cells<'_>,
    lo: isize,
    hi: isize,
    coefficients: Coefficients,
    reduced: bool,
) -> HomologyResult {
    let lo_eff = lo.max(-1);
    let (maps, counts): (Vec<Invariants>, Vec<usize>) = if hi < lo_eff {
        (Vec::new(), Vec::new())
    } else {
        let morse = Morse::new(cells, lo_eff - 2, hi + 2);
        let (matrices, counts) = match morse_boundaries(&morse, lo_eff, hi + 1, coefficients) {
            Some(m) => (m, (lo_eff..=hi).map(|k| morse.count(k)).collect()),
            None => (
                (lo_eff..=hi + 1)
                    .into_par_iter()
                    .map(|k| cells.boundary(k))
                    .collect(),
                (lo_eff..=hi).map(|k| cells.count(k)).collect(),
            ),
        };
        let maps = matrices
            .par_iter()
            .map(|m| invariants(m, coefficients))
            .collect();
        (maps, counts)
    };
    let groups = (lo..=hi)
        .map(|k| {
            if k < lo_eff {
                return AbelianGroup::zero();
            }
            let i = (k - lo_eff) as usize;
            let cycles = counts[i] - maps[i].rank;
            AbelianGroup {
                rank: cycles - maps[i + 1].rank,
                torsion: normalize_chain(maps[i + 1].torsion.clone()),
            }
        })
        .collect();
    HomologyResult {
        coefficients,
        reduced,
        first: lo,
        groups,
        representatives: None,
    }
}

/// Reduced homology `H̃_k(K)` for `k` in `degrees` (unbounded ends default
/// to −1 and `dim K`).
pub fn homology(
    cx: &SimplicialComplex,
    degrees: impl RangeBounds<isize>,
    coefficients: Coefficients,
) -> Result<HomologyResult> {
    let coefficients = coefficients.validate()?;
    let (lo, hi) = resolve(degrees, cx.dim().unwrap_or(-1));
    Ok(compute(
        &Cells::absolute(cx, true),
        lo,
        hi,
        coefficients,
        true,
    ))
}

/// Unreduced homology `H_k(K)`.
pub fn unreduced_homology(
    cx: &SimplicialComplex,
    degrees: impl RangeBounds<isize>,
    coefficients: Coefficients,
) -> Result<HomologyResult> {
    let coefficients = coefficients.validate()?;
    let (lo, hi) = resolve(degrees, cx.dim().unwrap_or(0));
    Ok(compute(
        &Cells::absolute(cx, false),
        lo.max(0),
        hi,
        coefficients,
        false,
    ))
}

/// Integral reduced homology with a representative cycle for every cyclic
/// summand (torsion generators first, then free ones).
pub fn homology_with_representatives(
    cx: &SimplicialComplex,
    degrees: impl RangeBounds<isize>,
) -> Result<HomologyResult> {
    let (lo, hi) = resolve(degrees, cx.dim().unwrap_or(-1));
    let mut groups = Vec::new();
    let mut reps = Vec::new();
    for k in lo..=hi {
        let p = presentation(cx, k)?;
        groups.push(p.group().clone());
        reps.push(p.generators().to_vec());
    }
    Ok(HomologyResult {
        coefficients: Coefficients::Integers,
        reduced: true,
        first: lo,
        groups,
        representatives: Some(reps),
    })
}

/// Relative homology `H_k(K, L)` of the quotient chain complex
/// `C(K)/C(L)`. For void `L` this is the reduced homology of `K`.
pub fn relative_homology(
    cx: &SimplicialComplex,
    sub: &SimplicialComplex,
    degrees: impl RangeBounds<isize>,
    coefficients: Coefficients,
) -> Result<HomologyResult> {
    let coefficients = coefficients.validate()?;
    sub.check_subcomplex_of(cx)?;
    let (lo, hi) = resolve(degrees, cx.dim().unwrap_or(-1));
    Ok(compute(
        &Cells::relative(cx, sub),
        lo,
        hi,
        coefficients,
        true,
    ))
}

/// Largest `c` with `H̃ᵢ = 0` for all `i ≤ c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Connectivity {
    /// `H̃ᵢ = 0` up to this degree, nonzero in the next. The void complex
    /// and `{∅}` are reported as −2.
    Degree(isize),
    /// All reduced homology vanishes.
    Acyclic,
}

impl Connectivity {
    /// `true` iff `H̃ᵢ = 0` for all `i ≤ c`.
    pub fn is_at_least(self, c: isize) -> bool {
        match self {
            Connectivity::Acyclic => true,
            Connectivity::Degree(d) => d >= c,
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connectivity::Degree(d) => write!(f, "{d}"),
            Connectivity::Acyclic => write!(f, "∞"),
        }
    }
}

/// Homological connectivity over `ℤ`.
pub fn homological_connectivity(cx: &SimplicialComplex) -> Connectivity {
    connectivity_over(cx, Coefficients::Integers).expect("integers are valid coefficients")
}

/// Homological connectivity over the given coefficients, computed degree
/// by degree and stopping at the first nonvanishing group.
pub fn connectivity_over(
    cx: &SimplicialComplex,
    coefficients: Coefficients,
) -> Result<Connectivity> {
    let coefficients = coefficients.validate()?;
    let Some(top) = cx.dim() else {
        return Ok(Connectivity::Degree(-2));
    };
    let cells = Cells::absolute(cx, true);
    let mut below = invariants(&cells.boundary(-1), coefficients);
    for k in -1..=top {
        let above = invariants(&cells.boundary(k + 1), coefficients);
        let rank = cells.count(k) - below.rank - above.rank;
        if rank > 0 || !above.torsion.is_empty() {
            return Ok(Connectivity::Degree(k - 1));
        }
        below = above;
    }
    Ok(Connectivity::Acyclic)
}

pub(crate) fn big_to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Invalid(format!("coefficient {x} exceeds 64 bits")))
}

#[cfg(test)]
mod tests;
