//! Floor-formula connectivity bounds.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `μₙ = ⌊(2n−1)/3⌋ − 2`, the connectivity of `Ωₙ`.
pub fn mu_n(n: usize) -> isize {
    (2 * n as isize - 1).div_euclid(3) - 2
}

/// `μ_{n,m} = min(⌊(2n+m)/3⌋ − 2, n − 2)`, the connectivity of `Ω_{n,m}`
/// for `m ≥ 1`.
pub fn mu_nm(n: usize, m: usize) -> isize {
    let (n, m) = (n as isize, m as isize);
    ((2 * n + m).div_euclid(3) - 2).min(n - 2)
}

/// `νₙ = ⌊(2n+1)/3⌋ − 2`.
pub fn nu_n(n: usize) -> isize {
    (2 * n as isize + 1).div_euclid(3) - 2
}

/// `γ_p = ⌊2(p−1)/3⌋`, the connectivity of `Sym^{(p)}_*`.
pub fn gamma_p(p: usize) -> isize {
    (2 * (p as isize - 1)).div_euclid(3)
}

/// Which bound to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundKind {
    MuN,
    MuNm,
    NuN,
    GammaP,
}

impl BoundKind {
    pub fn arity(self) -> usize {
        match self {
            BoundKind::MuNm => 2,
            _ => 1,
        }
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mu_n" => Ok(BoundKind::MuN),
            "mu_nm" => Ok(BoundKind::MuNm),
            "nu_n" => Ok(BoundKind::NuN),
            "gamma_p" => Ok(BoundKind::GammaP),
            _ => Err(Error::Invalid(format!("unknown bound `{s}`"))),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::MuN => "mu_n",
            BoundKind::MuNm => "mu_nm",
            BoundKind::NuN => "nu_n",
            BoundKind::GammaP => "gamma_p",
        })
    }
}

/// Evaluates a bound; `args` must match the kind's arity.
pub fn bounds(kind: BoundKind, args: &[usize]) -> Result<isize> {
    if args.len() != kind.arity() {
        return Err(Error::Invalid(format!(
            "{kind} takes {} argument(s), got {}",
            kind.arity(),
            args.len()
        )));
    }
    Ok(match kind {
        BoundKind::MuN => mu_n(args[0]),
        BoundKind::MuNm => mu_nm(args[0], args[1]),
        BoundKind::NuN => nu_n(args[0]),
        BoundKind::GammaP => gamma_p(args[0]),
    })
}
