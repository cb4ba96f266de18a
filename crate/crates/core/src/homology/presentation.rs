//! Explicit presentations `H̃_k(K) ≅ ℤ^β ⊕ ⊕ ℤ/dᵢ` with generator cycles
//! and a coordinate map from cycles to classes.
//!
//! With `B = ∂_{k+1}` and `U·B·V = D`, the `U`-coordinates of the cycle
//! lattice split as `⊕_{i<r} ℤeᵢ ⊕ F`, where `F` is the kernel of
//! `W = ∂_k·U⁻¹[:, r..]`. Torsion coordinates are `(Uc)ᵢ mod dᵢ`; free
//! coordinates come from a Smith basis of `W`'s kernel.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::chain::Chain;
use super::matrix::Cells;
use super::snf::{self, Dense, Want};
use super::{big_to_i64, AbelianGroup};
use crate::complexes::SimplicialComplex;
use crate::error::{Error, Result};

/// Largest number of `k`-faces for which a dense presentation is built.
pub const MAX_PRESENTATION_FACES: usize = 6000;

/// `H̃_k(K; ℤ)` with generators and a coordinate map.
#[derive(Clone, Debug)]
pub struct Presentation {
    cx: SimplicialComplex,
    degree: isize,
    group: AbelianGroup,
    /// Order of each generator; zero for free generators.
    orders: Vec<BigUint>,
    generators: Vec<Chain>,
    /// One row per generator: the linear functional giving its coordinate.
    functionals: Vec<Vec<BigInt>>,
}

impl Presentation {
    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    /// Generator cycles: torsion generators first, in the order of the
    /// invariant factors, then free generators.
    pub fn generators(&self) -> &[Chain] {
        &self.generators
    }

    /// Order of each generator (zero for infinite order).
    pub fn orders(&self) -> &[BigUint] {
        &self.orders
    }

    /// Coordinates of a cycle's class: torsion entries reduced into
    /// `0..dᵢ`, free entries as integers.
    pub fn class_of(&self, cycle: &Chain) -> Result<Vec<BigInt>> {
        if cycle.degree() != self.degree {
            return Err(Error::ForeignChain(format!(
                "expected a {}-chain, got degree {}",
                self.degree,
                cycle.degree()
            )));
        }
        if !cycle.boundary().is_empty() {
            return Err(Error::ForeignChain("not a cycle".into()));
        }
        let v = cycle.to_vector(&self.cx)?;
        Ok(self
            .functionals
            .iter()
            .zip(&self.orders)
            .map(|(row, d)| {
                let x: BigInt = row
                    .iter()
                    .zip(&v)
                    .filter(|(_, &c)| c != 0)
                    .map(|(a, &c)| a * c)
                    .sum();
                reduce(x, d)
            })
            .collect())
    }

    /// `true` iff the class of `cycle` is zero.
    pub fn is_zero_class(&self, cycle: &Chain) -> Result<bool> {
        Ok(self.class_of(cycle)?.iter().all(Zero::is_zero))
    }

    /// `true` iff the class of `cycle` alone generates the whole group.
    pub fn generates(&self, cycle: &Chain) -> Result<bool> {
        let x = self.class_of(cycle)?;
        if self.group.rank > 0 {
            // a cyclic group with a free part is ℤ
            return Ok(self.group.num_generators() == 1 && x[0].abs().is_one());
        }
        // a finite group is generated by one element iff it is cyclic and
        // the element has full order
        if self.group.torsion().len() > 1 {
            return Ok(false);
        }
        match (x.first(), self.orders.first()) {
            (None, _) => Ok(true),
            (Some(c), Some(d)) => Ok(c.gcd(&BigInt::from(d.clone())).is_one()),
            _ => Ok(false),
        }
    }
}

fn reduce(x: BigInt, d: &BigUint) -> BigInt {
    if d.is_zero() {
        x
    } else {
        x.mod_floor(&BigInt::from(d.clone()))
    }
}

fn dense_snf_big(a: Vec<Vec<BigInt>>, n: usize, want: Want) -> Dense<BigInt> {
    let small: Option<Vec<Vec<i64>>> = a
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64()).collect())
        .collect();
    if let Some(small) = small {
        if let Some(d) = snf::dense_snf(small, n, want) {
            return snf::widen(d);
        }
    }
    snf::dense_snf(a, n, want).expect("big integers do not overflow")
}

/// The presentation of `H̃_k(K; ℤ)`.
pub fn presentation(cx: &SimplicialComplex, k: isize) -> Result<Presentation> {
    let cells = Cells::absolute(cx, true);
    let m = cells.count(k);
    if m > MAX_PRESENTATION_FACES {
        return Err(Error::Invalid(format!(
            "{m} faces in degree {k} exceed the dense presentation limit"
        )));
    }
    let empty = |group| Presentation {
        cx: cx.clone(),
        degree: k,
        group,
        orders: Vec::new(),
        generators: Vec::new(),
        functionals: Vec::new(),
    };
    if m == 0 {
        return Ok(empty(AbelianGroup::zero()));
    }

    let b = cells.boundary(k + 1);
    let first = snf::dense_snf_exact(
        &b.to_dense(),
        b.ncols(),
        Want {
            u: true,
            u_inv: true,
            ..Default::default()
        },
    );
    let u = first.u.expect("requested");
    let u_inv = first.u_inv.expect("requested");
    let r = first.diag.len();

    // W = ∂_k · U⁻¹[:, r..]
    let dk = cells.boundary(k);
    let tail = m - r;
    let w: Vec<Vec<BigInt>> = dk
        .rows()
        .iter()
        .map(|row| {
            (0..tail)
                .map(|j| {
                    row.iter()
                        .map(|&(i, c)| &u_inv[i as usize][r + j] * c)
                        .sum()
                })
                .collect()
        })
        .collect();
    let second = dense_snf_big(
        w,
        tail,
        Want {
            v: true,
            v_inv: true,
            ..Default::default()
        },
    );
    let v2 = second.v.expect("requested");
    let v2_inv = second.v_inv.expect("requested");
    let r2 = second.diag.len();

    let mut orders = Vec::new();
    let mut generators = Vec::new();
    let mut functionals = Vec::new();
    for (i, d) in first.diag.iter().enumerate() {
        if d.abs().is_one() {
            continue;
        }
        let coords: Vec<i64> = u_inv
            .iter()
            .map(|row| big_to_i64(&row[i]))
            .collect::<Result<_>>()?;
        generators.push(Chain::from_vector(cx, k, &coords));
        functionals.push(u[i].clone());
        orders.push(d.abs().to_biguint().expect("nonnegative"));
    }
    for j in r2..tail {
        // generator U⁻¹[:, r..]·V2[:, j], functional V2⁻¹[j, :]·U[r.., :]
        let coords: Vec<i64> = u_inv
            .iter()
            .map(|row| {
                let x: BigInt = (0..tail).map(|t| &row[r + t] * &v2[t][j]).sum();
                big_to_i64(&x)
            })
            .collect::<Result<_>>()?;
        generators.push(Chain::from_vector(cx, k, &coords));
        let functional: Vec<BigInt> = (0..m)
            .map(|c| (0..tail).map(|t| &v2_inv[j][t] * &u[r + t][c]).sum())
            .collect();
        functionals.push(functional);
        orders.push(BigUint::zero());
    }
    let group = AbelianGroup::from_big(tail - r2, orders.iter().filter(|d| !d.is_zero()).cloned());
    Ok(Presentation {
        cx: cx.clone(),
        degree: k,
        group,
        orders,
        generators,
        functionals,
    })
}

/// The map `H̃_k(L) → H̃_k(K)` induced by an inclusion, in the generators
/// of the two presentations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedMap {
    pub degree: isize,
    pub domain: AbelianGroup,
    pub codomain: AbelianGroup,
    /// `matrix[i][j]`: coordinate `i` of the image of domain generator `j`.
    pub matrix: Vec<Vec<BigInt>>,
    pub surjective: bool,
    pub zero: bool,
}

/// The map induced on `H̃_k` by the inclusion `L ⊆ K`.
pub fn induced_map(
    sub: &SimplicialComplex,
    cx: &SimplicialComplex,
    k: isize,
) -> Result<InducedMap> {
    sub.check_subcomplex_of(cx)?;
    let source = presentation(sub, k)?;
    let target = presentation(cx, k)?;
    induced_between(&source, &target)
}

pub(crate) fn induced_between(source: &Presentation, target: &Presentation) -> Result<InducedMap> {
    let rows = target.generators.len();
    let mut matrix = vec![Vec::with_capacity(source.generators.len()); rows];
    for g in &source.generators {
        let coords = target.class_of(g)?;
        for (i, c) in coords.into_iter().enumerate() {
            matrix[i].push(c);
        }
    }
    let zero = matrix.iter().flatten().all(Zero::is_zero);
    // image + relations must span every target generator with unit factors
    let cols = source.generators.len() + rows;
    let stacked: Vec<Vec<BigInt>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..rows).map(|j| {
                if i == j {
                    BigInt::from(target.orders[i].clone())
                } else {
                    BigInt::zero()
                }
            }));
            r
        })
        .collect();
    let diag = dense_snf_big(stacked, cols, Want::default()).diag;
    let surjective = diag.len() == rows && diag.iter().all(|d| d.abs().is_one());
    Ok(InducedMap {
        degree: target.degree,
        domain: source.group.clone(),
        codomain: target.group.clone(),
        matrix,
        surjective,
        zero,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::Vertex;

    fn l(x: u32) -> Vertex {
        Vertex::Label(x)
    }

    #[test]
    fn circle_presentation() {
        let k = SimplicialComplex::from_facets((0..4).map(|i| [l(i), l((i + 1) % 4)]));
        let p = presentation(&k, 1).unwrap();
        assert_eq!(p.group(), &AbelianGroup::free(1));
        let g = &p.generators()[0];
        assert!(g.boundary().is_empty());
        assert!(p.generates(g).unwrap());
        assert_eq!(p.class_of(&g.scaled(3)).unwrap(), vec![BigInt::from(3)]);
        let p0 = presentation(&k, 0).unwrap();
        assert!(p0.group().is_trivial());
    }

    #[test]
    fn identity_map() {
        let k = crate::homology::tests::rp2();
        let m = induced_map(&k, &k, 1).unwrap();
        assert_eq!(m.matrix, vec![vec![BigInt::one()]]);
        assert!(m.surjective);
        assert!(!m.zero);
    }

    #[test]
    fn circle_into_disc_is_zero() {
        let circle = SimplicialComplex::from_facets((0..3).map(|i| [l(i), l((i + 1) % 3)]));
        let disc = SimplicialComplex::simplex([l(0), l(1), l(2)]);
        let m = induced_map(&circle, &disc, 1).unwrap();
        assert!(m.zero);
        assert!(m.surjective);
        assert!(m.codomain.is_trivial());
        let back = induced_map(&disc, &circle, 1);
        assert!(back.is_err());
    }
}
