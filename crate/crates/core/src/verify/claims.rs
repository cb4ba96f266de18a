use std::fmt;

use crate::boards::{make_spec, reduced_spec};
use crate::builders::{
    delta, delta_mn, filtration_level, multicycles, omega, omega_nm, rect, sym, theta, theta1,
    theta2, Family,
};
use crate::complexes::{intersection, link, union, SimplicialComplex, Vertex};
use crate::error::Result;
use crate::generators::{sigma_tight, sphere_s, xi};
use crate::homology::{
    field_survey, homology, induced_map, is_boundary, presentation, relative_homology,
    AbelianGroup, Coefficients, HomologyResult,
};

use super::bounds::{gamma_p, mu_n, mu_nm};

/// A complex named by its construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    /// `Δ_{rows,cols}`.
    Delta(usize, usize),
    /// `Ω_{n,m}`; `m = 0` is `Ωₙ`.
    Omega(usize, usize),
    /// `Sym^{(p)}_* = ΣΩ_{p+1}`.
    Sym(usize),
}

impl Recipe {
    pub fn build(&self) -> SimplicialComplex {
        match *self {
            Recipe::Delta(r, c) => delta_mn(r, c),
            Recipe::Omega(n, m) => omega_nm(n, m),
            Recipe::Sym(p) => sym(p),
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Recipe::Delta(r, c) => write!(f, "Δ{},{}", sub(r as isize), sub(c as isize)),
            Recipe::Omega(n, 0) => write!(f, "Ω{}", sub(n as isize)),
            Recipe::Omega(n, m) => write!(f, "Ω{},{}", sub(n as isize), sub(m as isize)),
            Recipe::Sym(p) => write!(f, "Sym^({p})"),
        }
    }
}

/// How vanishing or nonvanishing is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Exact integral groups.
    Exact,
    /// Ranks over one prime field.
    Field(u32),
    /// Ranks over `𝔽₂, 𝔽₃, 𝔽₅` and `ℚ`, with the integral torsion checked
    /// against them.
    Survey,
}

/// What a claim asserts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    /// `H̃_k` equals the listed groups exactly.
    Groups(Recipe, Vec<(isize, AbelianGroup)>),
    /// `H̃ᵢ = 0` for all `i ≤ through`.
    Vanishes {
        recipe: Recipe,
        through: isize,
        mode: Mode,
    },
    /// `H̃_degree ≠ 0`.
    Nonzero {
        recipe: Recipe,
        degree: isize,
        mode: Mode,
    },
    /// Reduced homology is free and concentrated in one degree.
    Wedge { recipe: Recipe, degree: isize },
    /// Every vertex link of `omega(make_spec(n,m,p))` is the complex of the
    /// reduced spec, for every listed `(n, m, p)`.
    LinksReduced(Vec<(usize, usize, usize)>),
    /// `H̃₂(Ω₅) ≠ 0`, the inclusion onto `H̃₂(Δ₅) = ℤ₃`, and `[S]` a
    /// generator.
    Tightness,
    /// The fundamental class of `xi(k)` does not bound in any of the given
    /// complexes (`Omega` recipes, or `Delta` on `([3k] ∪ {−1}) × [3k]`
    /// when `larger_board` is set).
    XiNonBounding { k: usize, larger_board: bool },
    /// Union, intersection, vanishing and relative homology of `Θₙ`.
    Theta(usize),
    /// Relative homology of consecutive filtration levels against the
    /// multicycle formula.
    Filtration { family: Family, n: usize, p: usize },
    /// `H̃ᵢ(Sym^{(p)}) = H̃ᵢ₋₁(Ω_{p+1})` in all degrees.
    SuspensionShift(usize),
    /// `[sigma_tight(k)]` does not bound in `Δ_{3k+2}` over `𝔽_p`.
    SigmaNonBounding { k: usize, p: u32 },
}

/// A named statement and how to check it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub check: Check,
    /// Runs only on request.
    pub long: bool,
}

pub(crate) struct Outcome {
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

fn claim(id: impl Into<String>, statement: impl Into<String>, check: Check) -> Claim {
    Claim {
        id: id.into(),
        statement: statement.into(),
        check,
        long: false,
    }
}

fn long(c: Claim) -> Claim {
    Claim { long: true, ..c }
}

/// The full claim table.
pub fn catalog() -> Vec<Claim> {
    let mut out = vec![
        claim(
            "H2-Delta5",
            "H̃₂(Δ₅,₅) = ℤ₃",
            Check::Groups(Recipe::Delta(5, 5), vec![(2, AbelianGroup::cyclic(3))]),
        ),
        claim(
            "torus-Delta34",
            "Δ₃,₄ is a torus: H̃₀ = 0, H₁ = ℤ², H₂ = ℤ",
            Check::Groups(
                Recipe::Delta(3, 4),
                vec![
                    (0, AbelianGroup::zero()),
                    (1, AbelianGroup::free(2)),
                    (2, AbelianGroup::free(1)),
                ],
            ),
        ),
        claim(
            "H1-Omega3",
            "H̃₁(Ω₃) = ℤ²",
            Check::Groups(Recipe::Omega(3, 0), vec![(1, AbelianGroup::free(2))]),
        ),
        claim(
            "tight-1",
            "Ω₅ is not 2-connected, detected through Δ₅",
            Check::Tightness,
        ),
        claim(
            "xi-1",
            "ξ₁ bounds neither in Ω₃,₁ nor in the larger chessboard complex",
            Check::XiNonBounding {
                k: 1,
                larger_board: true,
            },
        ),
        claim(
            "xi-3",
            "ξ₃ does not bound in Ω₆,₁",
            Check::XiNonBounding {
                k: 2,
                larger_board: false,
            },
        ),
        claim(
            "links-reduced",
            "every vertex link is the complex of the reduced spec",
            Check::LinksReduced(
                (2..=5)
                    .map(|n| (n, 0, 0))
                    .chain((2..=4).flat_map(|n| (1..=2).map(move |m| (n, m, 0))))
                    .collect(),
            ),
        ),
        claim("theta-5", "Θ₅ decomposition", Check::Theta(5)),
        long(claim("theta-6", "Θ₆ decomposition", Check::Theta(6))),
        long(claim(
            "omega8-H4",
            "H̃₄(Ω₈; 𝔽₃) ≠ 0",
            Check::Nonzero {
                recipe: Recipe::Omega(8, 0),
                degree: 4,
                mode: Mode::Field(3),
            },
        )),
        long(claim(
            "sigma-2-Delta8",
            "[Σ] does not bound in Δ₈ over 𝔽₃",
            Check::SigmaNonBounding { k: 2, p: 3 },
        )),
    ];
    for n in 2..=7 {
        let mode = if n == 7 { Mode::Survey } else { Mode::Exact };
        out.push(claim(
            format!("omega-conn-{n}"),
            format!(
                "Ω{} is homologically μ{}-connected",
                sub(n as isize),
                sub(n as isize)
            ),
            Check::Vanishes {
                recipe: Recipe::Omega(n, 0),
                through: mu_n(n),
                mode,
            },
        ));
    }
    for n in [6, 7] {
        out.push(claim(
            format!("omega-probe-{n}"),
            format!("H̃ in degree μ{0}+1 of Ω{0} is nonzero", sub(n as isize)),
            Check::Nonzero {
                recipe: Recipe::Omega(n, 0),
                degree: mu_n(n) + 1,
                mode: Mode::Exact,
            },
        ));
    }
    for (n, m) in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)] {
        out.push(claim(
            format!("wedge-{n}-{m}"),
            format!("Ω{n},{m} is a wedge of {}-spheres", n - 1),
            Check::Wedge {
                recipe: Recipe::Omega(n, m),
                degree: n as isize - 1,
            },
        ));
    }
    for n in 1..=5 {
        for m in 1..=3 {
            out.push(claim(
                format!("omega-nm-conn-{n}-{m}"),
                format!("Ω{n},{m} is homologically μ{n},{m}-connected"),
                Check::Vanishes {
                    recipe: Recipe::Omega(n, m),
                    through: mu_nm(n, m),
                    mode: Mode::Exact,
                },
            ));
        }
    }
    for n in [4, 5] {
        for p in [1, 2] {
            for (tag, family) in [("I", Family::Delta), ("II", Family::DirectedMatching)] {
                out.push(claim(
                    format!("filtration-{tag}-{n}-{p}"),
                    format!(
                        "F_{p}/F_{} of family {tag} at n = {n} is a wedge over {p}-multicycles",
                        p - 1
                    ),
                    Check::Filtration { family, n, p },
                ));
            }
        }
    }
    for p in 1..=5 {
        out.push(claim(
            format!("sym-shift-{p}"),
            format!("Sym^({p}) is the suspension of Ω{}", p + 1),
            Check::SuspensionShift(p),
        ));
    }
    for p in 1..=6 {
        out.push(claim(
            format!("sym-conn-{p}"),
            format!("Sym^({p}) is homologically γ{p}-connected"),
            Check::Vanishes {
                recipe: Recipe::Sym(p),
                through: gamma_p(p),
                mode: Mode::Exact,
            },
        ));
    }
    out
}

fn h(k: isize) -> String {
    format!("H̃{}", sub(k))
}

fn sub(k: isize) -> String {
    let digits: String = k
        .unsigned_abs()
        .to_string()
        .chars()
        .map(|c| char::from_u32('₀' as u32 + c.to_digit(10).expect("digit")).expect("subscript"))
        .collect();
    if k < 0 {
        format!("₋{digits}")
    } else {
        digits
    }
}

fn list(groups: &[(isize, AbelianGroup)]) -> String {
    groups
        .iter()
        .map(|(k, g)| format!("{} = {g}", h(*k)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn all_groups(r: &HomologyResult) -> Vec<(isize, AbelianGroup)> {
    r.iter().map(|(k, g)| (k, g.clone())).collect()
}

fn nonzero_groups(r: &HomologyResult) -> Vec<(isize, AbelianGroup)> {
    r.iter()
        .filter(|(_, g)| !g.is_trivial())
        .map(|(k, g)| (k, g.clone()))
        .collect()
}

fn direct_sum(parts: impl IntoIterator<Item = AbelianGroup>) -> AbelianGroup {
    let mut rank = 0;
    let mut torsion = Vec::new();
    for g in parts {
        rank += g.rank();
        torsion.extend(g.torsion().iter().cloned());
    }
    AbelianGroup::from_big(rank, torsion)
}

fn coefficients(mode: Mode) -> Coefficients {
    match mode {
        Mode::Field(p) => Coefficients::Prime(p),
        _ => Coefficients::Integers,
    }
}

fn over(mode: Mode) -> &'static str {
    match mode {
        Mode::Exact => "",
        Mode::Field(_) => " (field rank)",
        Mode::Survey => " (ranks over 𝔽₂, 𝔽₃, 𝔽₅, ℚ; torsion-consistent)",
    }
}

impl Check {
    pub(crate) fn run(&self) -> Result<Outcome> {
        match self {
            Check::Groups(recipe, expected) => {
                let cx = recipe.build();
                let lo = expected.iter().map(|e| e.0).min().unwrap_or(-1);
                let hi = expected.iter().map(|e| e.0).max().unwrap_or(-1);
                let r = homology(&cx, lo..=hi, Coefficients::Integers)?;
                let computed: Vec<(isize, AbelianGroup)> = expected
                    .iter()
                    .map(|(k, _)| (*k, r.get(*k).cloned().unwrap_or_default()))
                    .collect();
                Ok(Outcome {
                    pass: &computed == expected,
                    expected: format!("{recipe}: {}", list(expected)),
                    computed: format!("{recipe}: {}", list(&computed)),
                })
            }
            Check::Vanishes {
                recipe,
                through,
                mode,
            } => {
                let cx = recipe.build();
                let expected = format!(
                    "{recipe}: {} = 0 for i ≤ {through}{} (homological connectivity)",
                    "H̃ᵢ",
                    over(*mode)
                );
                let (nonzero, consistent) = match mode {
                    Mode::Survey => {
                        let s = field_survey(&cx, -1..=*through, &[2, 3, 5], true)?;
                        let z = s.integral.as_ref().expect("requested");
                        let mut bad = nonzero_groups(z);
                        for f in &s.fields {
                            for (k, g) in f.iter().filter(|(_, g)| g.rank() > 0) {
                                bad.push((k, AbelianGroup::free(g.rank())));
                            }
                        }
                        (bad, s.consistent() == Some(true))
                    }
                    _ => {
                        let r = homology(&cx, -1..=*through, coefficients(*mode))?;
                        (nonzero_groups(&r), true)
                    }
                };
                let pass = nonzero.is_empty() && consistent;
                let computed = if pass {
                    expected.clone()
                } else if !consistent {
                    format!("{recipe}: field ranks inconsistent with integral torsion")
                } else {
                    format!("{recipe}: {}", list(&nonzero))
                };
                Ok(Outcome {
                    expected,
                    computed,
                    pass,
                })
            }
            Check::Nonzero {
                recipe,
                degree,
                mode,
            } => {
                let cx = recipe.build();
                let r = homology(&cx, *degree..=*degree, coefficients(*mode))?;
                let g = r.get(*degree).cloned().unwrap_or_default();
                let shown = match mode {
                    Mode::Field(p) => format!("𝔽{}^{}", sub(*p as isize), g.rank()),
                    _ => g.to_string(),
                };
                Ok(Outcome {
                    expected: format!("{recipe}: {} ≠ 0{}", h(*degree), over(*mode)),
                    computed: format!("{recipe}: {} = {shown}", h(*degree)),
                    pass: !g.is_trivial(),
                })
            }
            Check::Wedge { recipe, degree } => {
                let cx = recipe.build();
                let r = homology(&cx, .., Coefficients::Integers)?;
                let nz = nonzero_groups(&r);
                let pass = nz.iter().all(|(k, g)| k == degree && g.is_free());
                Ok(Outcome {
                    expected: format!("{recipe}: free, concentrated in degree {degree}"),
                    computed: format!(
                        "{recipe}: {}",
                        if nz.is_empty() {
                            "acyclic".into()
                        } else {
                            list(&nz)
                        }
                    ),
                    pass,
                })
            }
            Check::LinksReduced(specs) => {
                let mut checked = 0;
                let mut failures = Vec::new();
                for &(n, m, p) in specs {
                    let spec = make_spec(n, m, p);
                    let cx = omega(&spec);
                    for v in cx.vertices() {
                        let sq = v.as_square().expect("board vertex");
                        checked += 1;
                        if link(&cx, *v)? != omega(&reduced_spec(&spec, sq)?) {
                            failures.push(format!("({n},{m},{p}) at {sq}"));
                        }
                    }
                }
                Ok(Outcome {
                    expected: format!("{checked} links equal their reduced complexes"),
                    computed: if failures.is_empty() {
                        format!("{checked} links equal their reduced complexes")
                    } else {
                        format!("mismatch: {}", failures.join("; "))
                    },
                    pass: failures.is_empty(),
                })
            }
            Check::Tightness => {
                let om = omega_nm(5, 0);
                let d5 = delta_mn(5, 5);
                let map = induced_map(&om, &d5, 2)?;
                let s = sphere_s();
                let generates = presentation(&d5, 2)?.generates(s.fundamental())?;
                let pass = !map.domain.is_trivial()
                    && map.codomain == AbelianGroup::cyclic(3)
                    && map.surjective
                    && generates;
                Ok(Outcome {
                    expected: "H̃₂(Ω₅) ≠ 0; H̃₂(Ω₅) → H̃₂(Δ₅) = ℤ₃ onto; [S] generates".into(),
                    computed: format!(
                        "H̃₂(Ω₅) = {}; image in {} onto: {}; [S] generates: {generates}",
                        map.domain, map.codomain, map.surjective
                    ),
                    pass,
                })
            }
            Check::XiNonBounding { k, larger_board } => {
                let e = xi(*k)?;
                let z = e.fundamental();
                let mut ambients = vec![(Recipe::Omega(3 * k, 1).to_string(), omega_nm(3 * k, 1))];
                if *larger_board {
                    let rows: Vec<i32> = std::iter::once(-1).chain(1..=3 * *k as i32).collect();
                    ambients.push((
                        format!("Δ(([{}]∪{{−1}})×[{}])", 3 * k, 3 * k),
                        delta(rect(rows, 1..=3 * *k as i32)),
                    ));
                }
                let mut found = Vec::new();
                let mut pass = true;
                for (name, cx) in &ambients {
                    let b = is_boundary(z, cx, Coefficients::Integers)?;
                    pass &= !b;
                    found.push(format!(
                        "{name}: {}",
                        if b { "bounds" } else { "non-bounding" }
                    ));
                }
                let d = 2 * k - 1;
                Ok(Outcome {
                    expected: format!(
                        "ξ{} non-bounding in {}",
                        sub(d as isize),
                        ambients
                            .iter()
                            .map(|a| a.0.as_str())
                            .collect::<Vec<_>>()
                            .join(" and ")
                    ),
                    computed: format!("ξ{}: {}", sub(d as isize), found.join("; ")),
                    pass,
                })
            }
            Check::Theta(n) => theta_check(*n),
            Check::Filtration { family, n, p } => filtration_check(*family, *n, *p),
            Check::SuspensionShift(p) => {
                let base = homology(&omega_nm(p + 1, 0), .., Coefficients::Integers)?;
                let susp = homology(&sym(*p), .., Coefficients::Integers)?;
                let shifted: Vec<(isize, AbelianGroup)> = all_groups(&base)
                    .into_iter()
                    .map(|(k, g)| (k + 1, g))
                    .collect();
                let expected_nz: Vec<_> = shifted
                    .iter()
                    .filter(|(_, g)| !g.is_trivial())
                    .cloned()
                    .collect();
                let computed_nz = nonzero_groups(&susp);
                Ok(Outcome {
                    expected: format!("Sym^({p}): {}", list(&expected_nz)),
                    computed: format!("Sym^({p}): {}", list(&computed_nz)),
                    pass: expected_nz == computed_nz,
                })
            }
            Check::SigmaNonBounding { k, p } => {
                let e = sigma_tight(*k)?;
                let n = 3 * k + 2;
                let b = is_boundary(e.fundamental(), &delta_mn(n, n), Coefficients::Prime(*p))?;
                Ok(Outcome {
                    expected: format!(
                        "[Σ] ≠ 0 in {} of Δ{n} over 𝔽{}",
                        h(2 * *k as isize),
                        sub(*p as isize)
                    ),
                    computed: format!("[Σ] {}", if b { "bounds" } else { "non-bounding" }),
                    pass: !b,
                })
            }
        }
    }
}

fn theta_check(n: usize) -> Result<Outcome> {
    let (t1, t2, t) = (theta1(n), theta2(n), theta(n));
    let om = omega_nm(n, 0);
    let shift = |v: Vertex| {
        let sq = v.as_square().expect("board vertex");
        Vertex::square(sq.row + 1, sq.col + 1)
    };
    let inner = omega_nm(n - 1, 0).relabel(shift);
    let union_ok = union(&t1, &t2) == t;
    let meet_ok = intersection(&t1, &t2) == inner;
    let mu = mu_n(n);
    let h_mu = homology(&t, mu..=mu, Coefficients::Integers)?
        .get(mu)
        .cloned()
        .unwrap_or_default();
    let pairs = (n - 1) * (n - 2);
    let small = homology(&omega_nm(n - 2, 0), .., Coefficients::Integers)?;
    let rel = relative_homology(&om, &t, .., Coefficients::Integers)?;
    let predicted: Vec<(isize, AbelianGroup)> = rel
        .degrees()
        .map(|k| {
            let g = small.get(k - 2).cloned().unwrap_or_default();
            (k, direct_sum(std::iter::repeat_n(g, pairs)))
        })
        .filter(|(_, g)| !g.is_trivial())
        .collect();
    let got = nonzero_groups(&rel);
    let pass = union_ok && meet_ok && h_mu.is_trivial() && predicted == got;
    let (n1, ns) = (sub(n as isize - 1), sub(n as isize));
    Ok(Outcome {
        expected: format!(
            "Θ¹ ∪ Θ² = Θ; Θ¹ ∩ Θ² = Ω{n1}; {}(Θ{ns}) = 0; H(Ω{ns},Θ{ns}): {}",
            h(mu),
            list(&predicted)
        ),
        computed: format!(
            "union {}; intersection {}; {}(Θ{ns}) = {h_mu}; H(Ω{ns},Θ{ns}): {}",
            if union_ok { "equal" } else { "differs" },
            if meet_ok { "equal" } else { "differs" },
            h(mu),
            list(&got)
        ),
        pass,
    })
}

/// Number of unordered `p`-tuples of disjoint cycles of length ≥ `min_len`
/// on `n` nodes, from `C(n,m)·(m−1)!` counts of single cycles.
pub(crate) fn multicycle_count(n: usize, p: usize, min_len: usize) -> u128 {
    fn binom(n: usize, k: usize) -> u128 {
        (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
    }
    fn fact(n: usize) -> u128 {
        (1..=n as u128).product()
    }
    // ordered tuples, then divide by p!
    fn ordered(n: usize, p: usize, min_len: usize) -> u128 {
        if p == 0 {
            return 1;
        }
        (min_len.max(1)..=n)
            .map(|m| binom(n, m) * fact(m - 1) * ordered(n - m, p - 1, min_len))
            .sum()
    }
    ordered(n, p, min_len) / fact(p)
}

fn filtration_check(family: Family, n: usize, p: usize) -> Result<Outcome> {
    let min_len = match family {
        Family::Delta => 1,
        Family::DirectedMatching => 2,
    };
    let hi = filtration_level(family, n, p);
    let lo = filtration_level(family, n, p - 1);
    let cycles = multicycles(n, p, min_len);
    let formula = multicycle_count(n, p, min_len);
    let rel = relative_homology(&hi, &lo, .., Coefficients::Integers)?;
    let mut smaller: Vec<Option<HomologyResult>> = vec![None; n + 1];
    let mut summands: Vec<Vec<AbelianGroup>> = vec![Vec::new(); rel.degrees().count()];
    let first = rel.degrees().next().unwrap_or(-1);
    for c in &cycles {
        let l = c.length();
        if smaller[l].is_none() {
            smaller[l] = Some(homology(&omega_nm(n - l, 0), .., Coefficients::Integers)?);
        }
        let base = smaller[l].as_ref().expect("filled");
        for (i, k) in rel.degrees().enumerate() {
            debug_assert_eq!(k, first + i as isize);
            if let Some(g) = base.get(k - l as isize) {
                summands[i].push(g.clone());
            }
        }
    }
    let predicted: Vec<(isize, AbelianGroup)> = rel
        .degrees()
        .zip(summands)
        .map(|(k, parts)| (k, direct_sum(parts)))
        .filter(|(_, g)| !g.is_trivial())
        .collect();
    let got = nonzero_groups(&rel);
    let pass = predicted == got && cycles.len() as u128 == formula;
    Ok(Outcome {
        expected: format!("{formula} multicycles; {}", list(&predicted)),
        computed: format!("{} multicycles; {}", cycles.len(), list(&got)),
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multicycle_formula() {
        assert_eq!(multicycle_count(3, 1, 1), 8);
        assert_eq!(multicycle_count(3, 1, 2), 5);
        assert_eq!(multicycle_count(2, 2, 1), 1);
        // loop+loop, loop+2-cycle, loop+3-cycle, 2-cycle+2-cycle
        assert_eq!(multicycle_count(4, 2, 1), 6 + 12 + 8 + 3);
        assert_eq!(multicycle_count(4, 2, 2), 3);
    }

    #[test]
    fn recipe_names() {
        assert_eq!(Recipe::Delta(5, 5).to_string(), "Δ₅,₅");
        assert_eq!(Recipe::Omega(4, 0).to_string(), "Ω₄");
        assert_eq!(sub(-1), "₋₁");
    }
}
