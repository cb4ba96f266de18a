use super::*;
use crate::builders::{delta_mn, omega_n, omega_nm};
use crate::complexes::{suspension, Vertex};

fn l(x: u32) -> Vertex {
    Vertex::Label(x)
}

/// The six-vertex real projective plane.
pub(crate) fn rp2() -> SimplicialComplex {
    let t = [
        [1, 2, 4],
        [1, 2, 6],
        [1, 3, 4],
        [1, 3, 5],
        [1, 5, 6],
        [2, 3, 5],
        [2, 3, 6],
        [2, 4, 5],
        [3, 4, 6],
        [4, 5, 6],
    ];
    SimplicialComplex::from_facets(t.iter().map(|f| f.map(l)))
}

fn z_groups(cx: &SimplicialComplex) -> Vec<AbelianGroup> {
    homology(cx, .., Coefficients::Integers)
        .unwrap()
        .iter()
        .map(|(_, g)| g.clone())
        .collect()
}

#[test]
fn group_display_and_normalization() {
    assert_eq!(AbelianGroup::new(2, [6, 4]).to_string(), "ℤ² ⊕ ℤ₂ ⊕ ℤ₁₂");
    assert_eq!(AbelianGroup::cyclic(3).to_string(), "ℤ₃");
    assert_eq!(AbelianGroup::new(0, [2, 2]).to_string(), "ℤ₂²");
    assert_eq!(AbelianGroup::zero().to_string(), "0");
    assert_eq!(AbelianGroup::cyclic(0), AbelianGroup::free(1));
    assert_eq!(AbelianGroup::cyclic(1), AbelianGroup::zero());
}

#[test]
fn snf_examples() {
    let d = |v: &[u64]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
    assert_eq!(snf(&[vec![2, 4], vec![6, 8]]), d(&[2, 4]));
    assert_eq!(snf(&[vec![0, 0], vec![0, 0]]), d(&[]));
    assert_eq!(snf(&[vec![2, 0], vec![0, 3]]), d(&[1, 6]));
    let s = snf_with_transforms(&[vec![2, 4], vec![6, 8]]);
    assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
}

#[test]
fn projective_plane() {
    let k = rp2();
    assert_eq!(
        z_groups(&k),
        vec![
            AbelianGroup::zero(),
            AbelianGroup::zero(),
            AbelianGroup::cyclic(2),
            AbelianGroup::zero()
        ]
    );
    let f2 = homology(&k, .., Coefficients::Prime(2)).unwrap();
    assert_eq!(f2.betti(1), Some(1));
    assert_eq!(f2.betti(2), Some(1));
    let f3 = homology(&k, .., Coefficients::Prime(3)).unwrap();
    assert!(f3.is_trivial());
}

#[test]
fn torus_chessboard() {
    let k = delta_mn(3, 4);
    let h = homology(&k, .., Coefficients::Integers).unwrap();
    assert_eq!(h.get(0), Some(&AbelianGroup::zero()));
    assert_eq!(h.get(1), Some(&AbelianGroup::free(2)));
    assert_eq!(h.get(2), Some(&AbelianGroup::free(1)));
    let u = unreduced_homology(&k, .., Coefficients::Integers).unwrap();
    assert_eq!(u.get(0), Some(&AbelianGroup::free(1)));
}

#[test]
fn omega3_two_circles() {
    let h = homology(&omega_n(3), .., Coefficients::Integers).unwrap();
    assert_eq!(h.get(-1), Some(&AbelianGroup::zero()));
    assert_eq!(h.get(0), Some(&AbelianGroup::free(1)));
    assert_eq!(h.get(1), Some(&AbelianGroup::free(2)));
    assert_eq!(
        invariants(&boundary_matrix(&omega_n(3), 1), Coefficients::Integers).rank,
        4
    );
}

#[test]
fn degenerate_complexes() {
    let void = SimplicialComplex::void();
    let empty = SimplicialComplex::empty_face();
    assert!(homology(&void, -1..=0, Coefficients::Integers)
        .unwrap()
        .is_trivial());
    let h = homology(&empty, -1..=0, Coefficients::Integers).unwrap();
    assert_eq!(h.get(-1), Some(&AbelianGroup::free(1)));
    assert_eq!(homological_connectivity(&void), Connectivity::Degree(-2));
    assert_eq!(homological_connectivity(&empty), Connectivity::Degree(-2));
    assert_eq!(
        homological_connectivity(&omega_n(2)),
        Connectivity::Degree(-1)
    );
    let simplex = SimplicialComplex::simplex([l(0), l(1), l(2)]);
    assert_eq!(homological_connectivity(&simplex), Connectivity::Acyclic);
}

#[test]
fn small_omega_connectivity() {
    assert!(homological_connectivity(&omega_n(4)).is_at_least(0));
    assert_eq!(
        homological_connectivity(&omega_n(5)),
        Connectivity::Degree(1)
    );
}

#[test]
fn relative_to_self_and_void() {
    let k = delta_mn(3, 3);
    assert!(relative_homology(&k, &k, .., Coefficients::Integers)
        .unwrap()
        .is_trivial());
    assert_eq!(
        relative_homology(&k, &SimplicialComplex::void(), .., Coefficients::Integers).unwrap(),
        homology(&k, .., Coefficients::Integers).unwrap()
    );
    let other = SimplicialComplex::simplex([l(0)]);
    assert!(relative_homology(&k, &other, .., Coefficients::Integers).is_err());
}

#[test]
fn relative_of_disc_mod_boundary_is_sphere() {
    let disc = SimplicialComplex::simplex([l(0), l(1), l(2)]);
    let circle = SimplicialComplex::from_facets((0..3).map(|i| [l(i), l((i + 1) % 3)]));
    let h = relative_homology(&disc, &circle, .., Coefficients::Integers).unwrap();
    assert_eq!(h.get(2), Some(&AbelianGroup::free(1)));
    assert_eq!(h.get(1), Some(&AbelianGroup::zero()));
}

#[test]
fn suspension_shifts_degrees() {
    for k in [omega_n(3), omega_n(4), rp2(), delta_mn(2, 3)] {
        let s = suspension(&k);
        let h = homology(&k, .., Coefficients::Integers).unwrap();
        let hs = homology(&s, .., Coefficients::Integers).unwrap();
        for (d, g) in h.iter() {
            assert_eq!(hs.get(d + 1), Some(g));
        }
        assert_eq!(hs.get(-1), Some(&AbelianGroup::zero()));
    }
}

#[test]
fn prime_fields_validated() {
    assert!(homology(&rp2(), .., Coefficients::Prime(4)).is_err());
    assert!(homology(&rp2(), .., Coefficients::Prime(2_147_483_647)).is_ok());
}

#[test]
fn survey_detects_torsion() {
    let s = field_survey(&rp2(), .., &[2, 3, 5], true).unwrap();
    assert_eq!(s.consistent(), Some(true));
    assert_eq!(s.torsion_primes(), vec![2]);
    assert_eq!(s.rational_betti(1), Some(0));
}

#[test]
fn representatives_are_cycles() {
    let h = homology_with_representatives(&omega_n(3), ..).unwrap();
    let reps = h.representatives(1).unwrap();
    assert_eq!(reps.len(), 2);
    for r in reps {
        assert!(is_cycle(r, &omega_n(3)).unwrap());
        assert!(!is_boundary(r, &omega_n(3), Coefficients::Integers).unwrap());
    }
}

#[test]
fn omega_nm_base_circle() {
    assert_eq!(
        z_groups(&omega_nm(2, 2)),
        vec![
            AbelianGroup::zero(),
            AbelianGroup::zero(),
            AbelianGroup::free(1)
        ]
    );
}
