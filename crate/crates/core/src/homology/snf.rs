//! Dense Smith normal form with optional unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integers usable in dense elimination. Machine integers report overflow
/// through `None`.
pub(crate) trait DenseInt: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `|self| < |other|`.
    fn abs_lt(&self, other: &Self) -> bool;
    /// Truncated quotient.
    fn quot(&self, d: &Self) -> Self;
    fn divides(&self, x: &Self) -> bool;
    /// `self − q·y`.
    fn sub_mul(&self, q: &Self, y: &Self) -> Option<Self>;
    fn add(&self, y: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
}

impl DenseInt for i64 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn divides(&self, x: &Self) -> bool {
        x % self == 0
    }
    fn sub_mul(&self, q: &Self, y: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*y)?)
    }
    fn add(&self, y: &Self) -> Option<Self> {
        self.checked_add(*y)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl DenseInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn quot(&self, d: &Self) -> Self {
        self / d
    }
    fn divides(&self, x: &Self) -> bool {
        x.is_multiple_of(self)
    }
    fn sub_mul(&self, q: &Self, y: &Self) -> Option<Self> {
        Some(self - q * y)
    }
    fn add(&self, y: &Self) -> Option<Self> {
        Some(self + y)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

/// Which transforms to accumulate alongside `U·A·V = D`.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Want {
    pub u: bool,
    pub u_inv: bool,
    pub v: bool,
    pub v_inv: bool,
}

pub(crate) struct Dense<I> {
    pub diag: Vec<I>,
    pub u: Option<Vec<Vec<I>>>,
    pub u_inv: Option<Vec<Vec<I>>>,
    pub v: Option<Vec<Vec<I>>>,
    pub v_inv: Option<Vec<Vec<I>>>,
}

struct Work<I> {
    a: Vec<Vec<I>>,
    m: usize,
    n: usize,
    u: Option<Vec<Vec<I>>>,
    u_inv: Option<Vec<Vec<I>>>,
    v: Option<Vec<Vec<I>>>,
    v_inv: Option<Vec<Vec<I>>>,
}

fn identity<I: DenseInt>(k: usize) -> Vec<Vec<I>> {
    (0..k)
        .map(|i| (0..k).map(|j| I::from_i64(i64::from(i == j))).collect())
        .collect()
}

impl<I: DenseInt> Work<I> {
    /// row_i −= q·row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &I) -> Option<()> {
        let (ri, rt) = two_rows(&mut self.a, i, t);
        for (x, y) in ri.iter_mut().zip(rt.iter()) {
            if !y.is_zero() {
                *x = x.sub_mul(q, y)?;
            }
        }
        if let Some(u) = &mut self.u {
            let (ri, rt) = two_rows(u, i, t);
            for (x, y) in ri.iter_mut().zip(rt.iter()) {
                if !y.is_zero() {
                    *x = x.sub_mul(q, y)?;
                }
            }
        }
        if let Some(ui) = &mut self.u_inv {
            // col_t += q·col_i
            let mq = I::zero().sub_mul(q, &I::from_i64(1))?;
            for row in ui.iter_mut() {
                if !row[i].is_zero() {
                    row[t] = row[t].sub_mul(&mq, &row[i])?;
                }
            }
        }
        Some(())
    }

    /// col_j −= q·col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &I) -> Option<()> {
        for row in self.a.iter_mut() {
            if !row[t].is_zero() {
                row[j] = row[j].sub_mul(q, &row[t])?;
            }
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                if !row[t].is_zero() {
                    row[j] = row[j].sub_mul(q, &row[t])?;
                }
            }
        }
        if let Some(vi) = &mut self.v_inv {
            // row_t += q·row_j
            let mq = I::zero().sub_mul(q, &I::from_i64(1))?;
            let (rt, rj) = two_rows(vi, t, j);
            for (x, y) in rt.iter_mut().zip(rj.iter()) {
                if !y.is_zero() {
                    *x = x.sub_mul(&mq, y)?;
                }
            }
        }
        Some(())
    }

    fn swap_rows(&mut self, i: usize, t: usize) {
        if i == t {
            return;
        }
        self.a.swap(i, t);
        if let Some(u) = &mut self.u {
            u.swap(i, t);
        }
        if let Some(ui) = &mut self.u_inv {
            for row in ui.iter_mut() {
                row.swap(i, t);
            }
        }
    }

    fn swap_cols(&mut self, j: usize, t: usize) {
        if j == t {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(j, t);
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                row.swap(j, t);
            }
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap(j, t);
        }
    }

    fn negate_row(&mut self, t: usize) -> Option<()> {
        for x in self.a[t].iter_mut() {
            *x = x.neg()?;
        }
        if let Some(u) = &mut self.u {
            for x in u[t].iter_mut() {
                *x = x.neg()?;
            }
        }
        if let Some(ui) = &mut self.u_inv {
            for row in ui.iter_mut() {
                row[t] = row[t].neg()?;
            }
        }
        Some(())
    }

    /// row_t += row_i
    fn row_add(&mut self, t: usize, i: usize) -> Option<()> {
        let (rt, ri) = two_rows(&mut self.a, t, i);
        for (x, y) in rt.iter_mut().zip(ri.iter()) {
            *x = x.add(y)?;
        }
        if let Some(u) = &mut self.u {
            let (rt, ri) = two_rows(u, t, i);
            for (x, y) in rt.iter_mut().zip(ri.iter()) {
                *x = x.add(y)?;
            }
        }
        if let Some(ui) = &mut self.u_inv {
            // col_i −= col_t
            for row in ui.iter_mut() {
                row[i] = row[i].sub_mul(&I::from_i64(1), &row[t])?;
            }
        }
        Some(())
    }

    /// Smallest nonzero entry in the lower-right block from `t`, stopping
    /// early at a unit.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                if x.is_unit() {
                    return Some((i, j));
                }
                if best.is_none_or(|(bi, bj)| x.abs_lt(&self.a[bi][bj])) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn run(mut self) -> Option<Dense<I>> {
        let mut diag = Vec::new();
        for t in 0..self.m.min(self.n) {
            let Some((pi, pj)) = self.min_entry(t) else {
                break;
            };
            self.swap_rows(pi, t);
            self.swap_cols(pj, t);
            loop {
                let p = self.a[t][t].clone();
                let mut clean = true;
                for i in t + 1..self.m {
                    if !self.a[i][t].is_zero() {
                        let q = self.a[i][t].quot(&p);
                        if !q.is_zero() {
                            self.row_sub(i, t, &q)?;
                        }
                        clean &= self.a[i][t].is_zero();
                    }
                }
                for j in t + 1..self.n {
                    if !self.a[t][j].is_zero() {
                        let q = self.a[t][j].quot(&p);
                        if !q.is_zero() {
                            self.col_sub(j, t, &q)?;
                        }
                        clean &= self.a[t][j].is_zero();
                    }
                }
                if !clean {
                    // a remainder smaller than the pivot is left in row or column t
                    let mut best = (t, t);
                    for i in t + 1..self.m {
                        let x = &self.a[i][t];
                        if !x.is_zero() && x.abs_lt(&self.a[best.0][best.1]) {
                            best = (i, t);
                        }
                    }
                    for j in t + 1..self.n {
                        let x = &self.a[t][j];
                        if !x.is_zero() && x.abs_lt(&self.a[best.0][best.1]) {
                            best = (t, j);
                        }
                    }
                    self.swap_rows(best.0, t);
                    self.swap_cols(best.1, t);
                    continue;
                }
                if p.is_unit() {
                    break;
                }
                let bad =
                    (t + 1..self.m).find(|&i| (t + 1..self.n).any(|j| !p.divides(&self.a[i][j])));
                match bad {
                    Some(i) => self.row_add(t, i)?,
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t)?;
            }
            diag.push(self.a[t][t].clone());
        }
        Some(Dense {
            diag,
            u: self.u,
            u_inv: self.u_inv,
            v: self.v,
            v_inv: self.v_inv,
        })
    }
}

fn two_rows<T>(rows: &mut [Vec<T>], i: usize, t: usize) -> (&mut Vec<T>, &mut Vec<T>) {
    assert_ne!(i, t);
    if i < t {
        let (lo, hi) = rows.split_at_mut(t);
        (&mut lo[i], &mut hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(i);
        (&mut hi[0], &mut lo[t])
    }
}

/// Smith form of an `m×n` matrix; `None` on machine-integer overflow.
pub(crate) fn dense_snf<I: DenseInt>(a: Vec<Vec<I>>, n: usize, want: Want) -> Option<Dense<I>> {
    let m = a.len();
    Work {
        u: want.u.then(|| identity(m)),
        u_inv: want.u_inv.then(|| identity(m)),
        v: want.v.then(|| identity(n)),
        v_inv: want.v_inv.then(|| identity(n)),
        a,
        m,
        n,
    }
    .run()
}

/// Smith form with transforms, first in `i64` and on overflow in `BigInt`.
pub(crate) fn dense_snf_exact(a: &[Vec<i64>], n: usize, want: Want) -> Dense<BigInt> {
    if let Some(d) = dense_snf(a.to_vec(), n, want) {
        return widen(d);
    }
    let big: Vec<Vec<BigInt>> = a
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    dense_snf(big, n, want).expect("big integers do not overflow")
}

pub(crate) fn widen(d: Dense<i64>) -> Dense<BigInt> {
    let w = |m: Option<Vec<Vec<i64>>>| {
        m.map(|m| {
            m.into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect()
        })
    };
    Dense {
        diag: d.diag.into_iter().map(BigInt::from).collect(),
        u: w(d.u),
        u_inv: w(d.u_inv),
        v: w(d.v),
        v_inv: w(d.v_inv),
    }
}

/// Invariant factors of a dense big-integer matrix.
pub(crate) fn invariant_factors_big(a: Vec<Vec<BigInt>>, n: usize) -> Vec<BigInt> {
    // try machine integers first
    let small: Option<Vec<Vec<i64>>> = a
        .iter()
        .map(|r| r.iter().map(|x| x.to_i64()).collect())
        .collect();
    if let Some(small) = small {
        if let Some(d) = dense_snf(small, n, Want::default()) {
            return d.diag.into_iter().map(BigInt::from).collect();
        }
    }
    dense_snf(a, n, Want::default())
        .expect("big integers do not overflow")
        .diag
}
