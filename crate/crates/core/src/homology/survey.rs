use std::ops::RangeBounds;

use serde::{Deserialize, Serialize};

use super::{homology, resolve, Coefficients, HomologyResult};
use crate::complexes::SimplicialComplex;
use crate::error::Result;

/// Betti numbers over several prime fields, optionally next to the integral
/// groups, with a universal-coefficient consistency check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSurvey {
    pub integral: Option<HomologyResult>,
    pub fields: Vec<HomologyResult>,
}

impl FieldSurvey {
    /// Betti numbers over `ℚ` (the free ranks of the integral groups).
    pub fn rational_betti(&self, k: isize) -> Option<usize> {
        self.integral.as_ref()?.betti(k)
    }

    /// Over `𝔽_p`, `dim H̃_k = β_k + t_p(H̃_k) + t_p(H̃_{k−1})`, where `t_p`
    /// counts invariant factors divisible by `p`. Degrees whose predecessor
    /// is outside the integral range are skipped. `None` without integral
    /// data.
    pub fn consistent(&self) -> Option<bool> {
        let z = self.integral.as_ref()?;
        Some(self.fields.iter().all(|f| {
            let Coefficients::Prime(p) = f.coefficients() else {
                return true;
            };
            f.iter().all(|(k, g)| {
                let (Some(here), below) = (z.get(k), z.get(k - 1)) else {
                    return true;
                };
                let below = match below {
                    Some(b) => b.p_torsion_count(p),
                    None if k <= -1 => 0,
                    None => return true,
                };
                g.rank() == here.rank() + here.p_torsion_count(p) + below
            })
        }))
    }

    /// Primes whose Betti numbers differ from the rational ones somewhere,
    /// i.e. that detect torsion.
    pub fn torsion_primes(&self) -> Vec<u32> {
        let Some(z) = &self.integral else {
            return Vec::new();
        };
        self.fields
            .iter()
            .filter_map(|f| match f.coefficients() {
                Coefficients::Prime(p) if f.iter().any(|(k, g)| z.betti(k) != Some(g.rank())) => {
                    Some(p)
                }
                _ => None,
            })
            .collect()
    }
}

/// Reduced homology over each prime in `primes`, plus integral homology
/// when `integral` is set (its range starts one degree lower so the
/// consistency check covers the first requested degree).
pub fn field_survey(
    cx: &SimplicialComplex,
    degrees: impl RangeBounds<isize>,
    primes: &[u32],
    integral: bool,
) -> Result<FieldSurvey> {
    let (lo, hi) = resolve(degrees, cx.dim().unwrap_or(-1));
    let fields = primes
        .iter()
        .map(|&p| homology(cx, lo..=hi, Coefficients::Prime(p)))
        .collect::<Result<Vec<_>>>()?;
    let integral = integral
        .then(|| homology(cx, (lo - 1).max(-1)..=hi, Coefficients::Integers))
        .transpose()?;
    Ok(FieldSurvey { integral, fields })
}
