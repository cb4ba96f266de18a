//! A catalog of checkable statements about the cycle-free complexes, each
//! run against the library and reported as pass, fail or skipped.
//!
//! Connectivity is certified homologically; fundamental-group statements are
//! outside what these checks can establish.

mod bounds;
mod claims;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bounds::{bounds, gamma_p, mu_n, mu_nm, nu_n, BoundKind};
pub use claims::{catalog, Check, Claim, Mode, Recipe};

/// Statements that stay out of pass/fail at desk scale.
pub const NOT_REPRODUCIBLE: &[&str] = &[
    "simple connectivity of Ωₙ: homology cannot certify π₁ = 0",
    "H_{2k}(Δ_{3k+2}) ≅ ℤ₃ for k ≥ 3: matrices beyond desk scale",
    "the spectral sequence of the filtration: only its E¹ page is checked",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedLong,
}

/// Outcome of one claim. `status` is `Pass` iff the computed values equal
/// the expected ones exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
    pub ms: u64,
}

/// Runs one claim, skipping it when it is long and `include_long` is off.
pub fn run_claim(claim: &Claim, include_long: bool) -> Result<ClaimReport> {
    if claim.long && !include_long {
        return Ok(ClaimReport {
            id: claim.id.clone(),
            status: Status::SkippedLong,
            expected: claim.statement.clone(),
            computed: "not run (long)".into(),
            ms: 0,
        });
    }
    let start = Instant::now();
    let outcome = claim.check.run()?;
    Ok(ClaimReport {
        id: claim.id.clone(),
        status: if outcome.pass {
            Status::Pass
        } else {
            Status::Fail
        },
        expected: outcome.expected,
        computed: outcome.computed,
        ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs the claims named in `filter` (all when empty), in parallel, and
/// returns the reports sorted by id.
pub fn run_claims(filter: &[String], include_long: bool) -> Result<Vec<ClaimReport>> {
    let all = catalog();
    let chosen: Vec<&Claim> = if filter.is_empty() {
        all.iter().collect()
    } else {
        filter
            .iter()
            .map(|id| {
                all.iter()
                    .find(|c| &c.id == id)
                    .ok_or_else(|| Error::UnknownClaim(id.clone()))
            })
            .collect::<Result<_>>()?
    };
    let mut reports = chosen
        .par_iter()
        .map(|c| run_claim(c, include_long))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    reports.dedup_by(|a, b| a.id == b.id);
    Ok(reports)
}
