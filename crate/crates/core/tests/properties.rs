mod support;

use std::collections::BTreeSet;

use proptest::prelude::*;

use cyclefree::builders::delta_mn;
use cyclefree::complexes::{antistar, join, link, star, suspension, SimplicialComplex, Vertex};
use cyclefree::homology::{
    boundary_matrix, homology, is_boundary, relative_homology, Chain, Coefficients,
};

use support::oracle;

fn complex_from(facets: Vec<BTreeSet<u32>>) -> SimplicialComplex {
    SimplicialComplex::from_facets(
        facets
            .into_iter()
            .map(|f| f.into_iter().map(Vertex::Label).collect::<Vec<_>>()),
    )
}

fn complexes(labels: u32, width: usize, count: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0..labels, 1..=width), 1..=count)
        .prop_map(complex_from)
}

fn f_polynomial(cx: &SimplicialComplex) -> Vec<usize> {
    let mut f = vec![usize::from(!cx.is_void())];
    f.extend(cx.f_vector());
    f
}

fn multiply(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_squares_to_zero(cx in complexes(9, 5, 8)) {
        let top = cx.dim().unwrap();
        for k in 0..=top {
            let product = boundary_matrix(&cx, k).checked_mul(&boundary_matrix(&cx, k + 1)).unwrap();
            prop_assert!(product.is_zero());
        }
    }

    #[test]
    fn euler_characteristic_from_betti_numbers(cx in complexes(9, 5, 8)) {
        let h = homology(&cx, .., Coefficients::Integers).unwrap();
        let alternating: i64 = h
            .iter()
            .map(|(k, g)| if k.rem_euclid(2) == 0 { g.rank() as i64 } else { -(g.rank() as i64) })
            .sum();
        prop_assert_eq!(alternating, cx.euler_characteristic() - 1);
    }

    #[test]
    fn universal_coefficients(cx in complexes(8, 5, 7), p in prop::sample::select(vec![2u32, 3, 5])) {
        let z = homology(&cx, .., Coefficients::Integers).unwrap();
        let f = homology(&cx, .., Coefficients::Prime(p)).unwrap();
        for (k, g) in z.iter() {
            let below = z.get(k - 1).map_or(0, |g| g.p_torsion_count(p));
            prop_assert_eq!(f.betti(k).unwrap(), g.rank() + g.p_torsion_count(p) + below);
        }
    }

    #[test]
    fn suspension_shifts_homology(cx in complexes(8, 4, 6)) {
        let h = homology(&cx, .., Coefficients::Integers).unwrap();
        let s = homology(&suspension(&cx), .., Coefficients::Integers).unwrap();
        prop_assert!(s.get(-1).unwrap().is_trivial());
        for (k, g) in h.iter() {
            prop_assert_eq!(s.get(k + 1).unwrap(), g);
        }
    }

    #[test]
    fn star_is_the_cone_on_the_link(cx in complexes(9, 5, 8), pick in any::<prop::sample::Index>()) {
        let v = cx.vertices()[pick.index(cx.num_vertices())];
        let lk = link(&cx, v).unwrap();
        let st = star(&cx, v).unwrap();
        let apex = SimplicialComplex::simplex([v]);
        let cone = if lk.dim() == Some(-1) { apex } else { join(&lk, &apex).unwrap() };
        prop_assert_eq!(
            st.facets().map(|mut f| { f.sort(); f }).collect::<BTreeSet<_>>(),
            cone.facets().map(|mut f| { f.sort(); f }).collect::<BTreeSet<_>>()
        );
        prop_assert!(homology(&st, .., Coefficients::Integers).unwrap().is_trivial());
    }

    #[test]
    fn join_multiplies_f_polynomials(a in complexes(5, 3, 4), b in complexes(5, 3, 4)) {
        let b = b.relabel(|v| match v {
            Vertex::Label(x) => Vertex::Label(x + 100),
            v => v,
        });
        let j = join(&a, &b).unwrap();
        prop_assert_eq!(f_polynomial(&j), multiply(&f_polynomial(&a), &f_polynomial(&b)));
    }

    #[test]
    fn wide_face_lists(cx in complexes(14, 11, 3)) {
        let reference = oracle::faces(&cx);
        for (w, list) in reference.iter().enumerate() {
            let k = w as isize - 1;
            prop_assert_eq!(cx.faces(k).len(), list.len());
            prop_assert_eq!(&cx.faces_as_vertices(k), list);
            for face in cx.faces(k).iter() {
                prop_assert!(face.windows(2).all(|p| p[0] < p[1]));
            }
        }
    }

    #[test]
    fn homology_matches_the_oracle(cx in complexes(9, 5, 9)) {
        let expected = oracle::homology(&cx, None);
        let computed = homology(&cx, .., Coefficients::Integers).unwrap();
        for (k, g) in &expected {
            prop_assert!(g.matches(computed.get(*k).unwrap()), "degree {k}: {g:?} vs {:?}", computed.get(*k));
        }
    }

    #[test]
    fn chessboard_subcomplexes_match_the_oracle(keep in prop::collection::vec(any::<bool>(), 120)) {
        let facets: Vec<Vec<Vertex>> = delta_mn(4, 5).facets().collect();
        let chosen = facets.into_iter().zip(&keep).filter(|(_, &k)| k).map(|(f, _)| f);
        let cx = SimplicialComplex::from_facets(chosen);
        let expected = oracle::homology(&cx, None);
        let computed = homology(&cx, .., Coefficients::Integers).unwrap();
        for (k, g) in &expected {
            prop_assert!(g.matches(computed.get(*k).unwrap()), "degree {k}: {g:?} vs {:?}", computed.get(*k));
        }
    }

    #[test]
    fn relative_homology_matches_the_oracle(cx in complexes(9, 5, 8), pick in any::<prop::sample::Index>()) {
        let v = cx.vertices()[pick.index(cx.num_vertices())];
        let sub = antistar(&cx, v).unwrap();
        let expected = oracle::homology(&cx, Some(&sub));
        let computed = relative_homology(&cx, &sub, .., Coefficients::Integers).unwrap();
        for (k, g) in &expected {
            let h = computed.get(*k).cloned().unwrap_or_default();
            prop_assert!(g.matches(&h), "degree {k}: {g:?} vs {h:?}");
        }
    }

    #[test]
    fn boundaries_bound(cx in complexes(8, 4, 6), seed in any::<u64>()) {
        let top = cx.dim().unwrap();
        let faces = cx.faces_as_vertices(top);
        let chain = Chain::from_terms(
            top,
            faces.into_iter().enumerate().map(|(i, f)| (f, ((seed >> (i % 60)) & 3) as i64 - 1)),
        )
        .unwrap();
        prop_assert!(is_boundary(&chain.boundary(), &cx, Coefficients::Integers).unwrap());
        prop_assert!(is_boundary(&chain.boundary(), &cx, Coefficients::Prime(3)).unwrap());
    }
}
