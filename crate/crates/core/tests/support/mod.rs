#![allow(dead_code)]

pub mod oracle;

use cyclefree::boards::Square;
use cyclefree::builders::{
    delta, delta_mn, filtration_level, omega_nm, sym, theta, theta1, theta2, Family,
};
use cyclefree::complexes::{link, SimplicialComplex};
use cyclefree::generators::{hexagon, sphere_s, xi};

/// A complex, or a pair for relative homology, as used by the suite.
pub struct Case {
    pub name: String,
    pub complex: SimplicialComplex,
    pub sub: Option<SimplicialComplex>,
}

fn case(name: impl Into<String>, complex: SimplicialComplex) -> Case {
    Case {
        name: name.into(),
        complex,
        sub: None,
    }
}

fn pair(name: impl Into<String>, complex: SimplicialComplex, sub: SimplicialComplex) -> Case {
    Case {
        name: name.into(),
        complex,
        sub: Some(sub),
    }
}

/// Every complex and pair the claim checks and tests build, up to the
/// sizes they use.
pub fn suite_cases() -> Vec<Case> {
    let mut out = vec![
        case("Δ5,5", delta_mn(5, 5)),
        case("Δ3,4", delta_mn(3, 4)),
        case("hexagon", hexagon().complex().clone()),
        case("S", sphere_s().complex().clone()),
        case("ξ1", xi(1).unwrap().complex().clone()),
        case("ξ3", xi(2).unwrap().complex().clone()),
    ];
    let rows = [-1, 1, 2, 3];
    out.push(case(
        "Δ(([3]∪{−1})×[3])",
        delta(
            rows.iter()
                .flat_map(|&r| (1..=3).map(move |c| Square::new(r, c))),
        ),
    ));
    for n in 1..=7 {
        out.push(case(format!("Ω{n}"), omega_nm(n, 0)));
    }
    for n in 1..=5 {
        for m in 1..=4 {
            out.push(case(format!("Ω{n},{m}"), omega_nm(n, m)));
        }
    }
    for p in 1..=6 {
        out.push(case(format!("Sym({p})"), sym(p)));
    }
    for n in 3..=6 {
        let o = omega_nm(n, 0);
        out.push(case(format!("Θ{n}"), theta(n)));
        out.push(case(format!("Θ¹{n}"), theta1(n)));
        out.push(case(format!("Θ²{n}"), theta2(n)));
        out.push(pair(format!("(Ω{n}, Θ{n})"), o.clone(), theta(n)));
        if let Some(&v) = o.vertices().first() {
            out.push(case(format!("lk Ω{n}"), link(&o, v).unwrap()));
        }
    }
    for (tag, family) in [("I", Family::Delta), ("II", Family::DirectedMatching)] {
        for n in 3..=5 {
            for p in 1..=2 {
                let hi = filtration_level(family, n, p);
                let lo = filtration_level(family, n, p - 1);
                out.push(case(format!("F{tag}({n},{p})"), hi.clone()));
                out.push(pair(
                    format!("F{tag}({n},{p})/F{tag}({n},{})", p - 1),
                    hi,
                    lo,
                ));
            }
        }
    }
    out
}
