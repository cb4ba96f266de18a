use std::collections::BTreeSet;

use cyclefree::boards::{is_admissible, RookConfig};
use cyclefree::complexes::{SimplicialComplex, Vertex};
use cyclefree::generators::{
    fundamental_cycle, hexagon, sigma_tight, sphere_s, xi, SphereEmbedding,
};
use cyclefree::homology::{is_boundary, is_cycle, Coefficients};

fn shipped() -> Vec<(String, SphereEmbedding)> {
    let mut all = vec![
        ("hexagon".to_string(), hexagon()),
        ("S".to_string(), sphere_s()),
    ];
    for k in 1..=3 {
        all.push((format!("xi({k})"), xi(k).unwrap()));
        all.push((format!("sigma_tight({k})"), sigma_tight(k).unwrap()));
    }
    all
}

fn f_polynomial(cx: &SimplicialComplex) -> Vec<usize> {
    let mut f = vec![usize::from(!cx.is_void())];
    f.extend(cx.f_vector());
    f
}

#[test]
fn facets_are_cycle_free_in_the_ambient_board() {
    for (name, e) in shipped() {
        for facet in e.complex().facets() {
            let config: RookConfig = facet.iter().filter_map(Vertex::as_square).collect();
            assert!(is_admissible(&config, e.ambient()), "{name}: {config:?}");
        }
    }
}

#[test]
fn factors_use_disjoint_rows_and_columns() {
    for (name, e) in shipped() {
        let mut rows = BTreeSet::new();
        let mut cols = BTreeSet::new();
        for f in e.factors() {
            let squares: Vec<_> = f.vertices().iter().filter_map(Vertex::as_square).collect();
            let fr: BTreeSet<i32> = squares.iter().map(|s| s.row).collect();
            let fc: BTreeSet<i32> = squares.iter().map(|s| s.col).collect();
            assert!(fr.is_disjoint(&rows) && fc.is_disjoint(&cols), "{name}");
            rows.extend(fr);
            cols.extend(fc);
        }
    }
}

#[test]
fn f_polynomial_is_the_product_of_the_factors() {
    for (name, e) in shipped() {
        let product = e.factors().iter().fold(vec![1usize], |acc, f| {
            let g = f_polynomial(f);
            let mut out = vec![0; acc.len() + g.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in g.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            out
        });
        assert_eq!(f_polynomial(e.complex()), product, "{name}");
    }
}

#[test]
fn fundamental_cycles_are_cycles() {
    for (name, e) in shipped() {
        let z = fundamental_cycle(&e);
        assert_eq!(z.degree(), e.dim(), "{name}");
        assert!(z.boundary().is_empty(), "{name}");
        assert!(is_cycle(&z, e.complex()).unwrap(), "{name}");
        assert!(
            !is_boundary(&z, e.complex(), Coefficients::Integers).unwrap(),
            "{name}"
        );
    }
}
