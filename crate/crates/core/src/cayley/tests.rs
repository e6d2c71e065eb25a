use proptest::prelude::*;

use super::*;
use crate::exactla::{int_vec, rat, rat_vec};
use crate::harness::corpus;

fn poly(pts: &[&[i64]]) -> Polytope {
    Polytope::from_vertices(&pts.iter().map(|p| rat_vec(p)).collect::<Vec<_>>()).unwrap()
}

fn segment(a: i64, b: i64) -> Polytope {
    poly(&[&[a], &[b]])
}

#[test]
fn cayley_sum_examples() {
    assert_eq!(
        cayley_sum(&[segment(0, 1), segment(0, 2)]).unwrap(),
        poly(&[&[0, 0], &[1, 0], &[0, 1], &[2, 1]])
    );
    assert_eq!(cayley_sum(&[poly(&[&[0]]), poly(&[&[0]])]).unwrap(), poly(&[&[0, 0], &[0, 1]]));
    assert_eq!(cayley_sum(&[segment(0, 1), segment(0, 1)]).unwrap(), corpus::unit_square());
}

#[test]
fn cayley_sum_errors() {
    assert!(matches!(cayley_sum(&[segment(0, 1)]), Err(Error::OutOfRange(_))));
    assert!(matches!(
        cayley_sum(&[segment(0, 1), poly(&[&[0, 0]])]),
        Err(Error::DimensionMismatch(_))
    ));
    let half = Polytope::from_vertices(&[vec![rat(1, 2)]]).unwrap();
    assert!(matches!(cayley_sum(&[segment(0, 1), half]), Err(Error::NotLattice)));
}

/// Smallest k with an interior lattice point of kP, scanning a box and
/// testing interior membership against the facets directly.
fn codegree_oracle(p: &Polytope) -> usize {
    for k in 1..=10i64 {
        let r = 3 * k;
        for x in -r..=r {
            for y in -r..=r {
                let pt = rat_vec(&[x, y]);
                let inside = p.facets().iter().all(|h| {
                    crate::exactla::dot_int_rat(&h.normal, &pt) > &h.offset * rat(k, 1)
                });
                if inside {
                    return k as usize;
                }
            }
        }
    }
    unreachable!()
}

#[test]
fn codegree_examples() {
    for n in 1..=3 {
        assert_eq!(codegree(&corpus::standard_simplex(n)).unwrap(), n + 1);
    }
    for n in 2..=3 {
        for a in 2..=5 {
            assert_eq!(codegree(&corpus::delta(n, a)).unwrap(), n);
        }
    }
    assert_eq!(codegree(&corpus::unit_square()).unwrap(), 2);
    assert_eq!(codegree(&corpus::hexagon()).unwrap(), 1);
}

#[test]
fn codegree_matches_dilation_scan() {
    for p in corpus::lattice_polygons(2).into_iter().step_by(11) {
        assert_eq!(codegree(&p).unwrap(), codegree_oracle(&p));
    }
}

#[test]
fn df_bound_examples() {
    assert_eq!(df_bound(2, &rat(2, 1)), 1);
    assert_eq!(df_bound(2, &rat(3, 2)), 2);
    assert_eq!(df_bound(3, &rat(1, 1)), 5);
    assert_eq!(d_f(&corpus::hexagon()).unwrap(), 4);
    assert_eq!(d_f(&corpus::tall_wedge()).unwrap(), 5);
}

#[test]
fn simplex_recognition() {
    assert!(is_unimodular_simplex(&corpus::standard_simplex(3)));
    assert!(is_unimodular_simplex(&poly(&[&[0, 0], &[1, 0], &[1, 1]])));
    assert!(!is_unimodular_simplex(&corpus::delta(2, 2)));
    assert!(!is_unimodular_simplex(&corpus::unit_square()));
}

#[test]
fn find_structure_examples() {
    let s = find_cayley_structure(&corpus::unit_square(), 1).unwrap().unwrap();
    assert_eq!(s.summands, vec![segment(0, 1), segment(0, 1)]);
    assert_eq!(s.fiber_dim, 1);

    let s = find_cayley_structure(&corpus::delta(2, 2), 1).unwrap().unwrap();
    let mut sizes: Vec<usize> = s.summands.iter().map(|q| q.lattice_points(false).len()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 3]);
    assert_eq!(s.projection, vec![int_vec(&[0, -1])]);

    assert_eq!(find_cayley_structure(&corpus::hexagon(), 1).unwrap(), None);
    assert!(matches!(find_cayley_structure(&corpus::hexagon(), 2), Err(Error::OutOfRange(_))));
    assert!(matches!(find_cayley_structure(&corpus::hexagon(), 0), Err(Error::OutOfRange(_))));
}

#[test]
fn decomposition_examples() {
    let r = verify_decomposition_theorem(&corpus::delta(3, 2)).unwrap();
    assert_eq!((r.mu_fine.clone(), r.d_f), (rat(3, 1), 1));
    match r.outcome {
        DecompositionOutcome::Verified { structure, .. } => assert_eq!(structure.fiber_dim, 1),
        other => panic!("{other:?}"),
    }
    let r = verify_decomposition_theorem(&corpus::unit_square()).unwrap();
    assert!(matches!(r.outcome, DecompositionOutcome::Verified { fits_in_dimension: true, .. }));
    let r = verify_decomposition_theorem(&corpus::hexagon()).unwrap();
    assert_eq!(r.outcome, DecompositionOutcome::HypothesisNotMet);
    let r = verify_decomposition_theorem(&corpus::standard_simplex(2)).unwrap();
    assert_eq!(r.outcome, DecompositionOutcome::UnimodularSimplex);
}

#[test]
fn simplex_iff_maximal_codegree_on_named_polytopes() {
    for (name, p) in corpus::named_2d().into_iter().chain(corpus::named_3d()) {
        let n = p.ambient_dim();
        let simplex = is_unimodular_simplex(&p);
        assert_eq!(codegree(&p).unwrap() == n + 1, simplex, "{name}");
        assert_eq!(mu_fine(&p).unwrap() == rat(n as i64 + 1, 1), simplex, "{name}");
    }
}

fn part_strategy(k: usize) -> impl Strategy<Value = Polytope> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, k), 1..=4).prop_map(|pts| {
        Polytope::from_vertices(&pts.iter().map(|p| rat_vec(p)).collect::<Vec<_>>()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn segments_round_trip(parts in prop::collection::vec(part_strategy(1), 2..=3)) {
        let sum = cayley_sum(&parts).unwrap();
        prop_assume!(sum.is_full_dimensional());
        let t = parts.len() - 1;
        prop_assert!(find_cayley_structure(&sum, t).unwrap().is_some());
        let structures = cayley_structures(&sum, t).unwrap();
        // segments are classified by their lengths
        let lengths = |qs: &[Polytope]| {
            let mut out: Vec<Rational> = qs.iter().map(|q| q.lattice_width(&int_vec(&[1])).unwrap()).collect();
            out.sort();
            out
        };
        prop_assert!(structures.iter().all(|s| s.verify(&sum).unwrap()));
        prop_assert!(structures.iter().any(|s| lengths(&s.summands) == lengths(&parts)));
    }

    #[test]
    fn polygons_round_trip(parts in prop::collection::vec(part_strategy(2), 2..=2)) {
        let sum = cayley_sum(&parts).unwrap();
        prop_assume!(sum.is_full_dimensional());
        prop_assert!(find_cayley_structure(&sum, 1).unwrap().is_some());
        let structures = cayley_structures(&sum, 1).unwrap();
        let invariants = |qs: &[Polytope]| {
            let mut out: Vec<(isize, usize, usize)> = qs
                .iter()
                .map(|q| (q.dim(), q.vertices().len(), q.lattice_points(false).len()))
                .collect();
            out.sort();
            out
        };
        // a sum may carry several structures; the one it was built from is among them
        prop_assert!(structures.iter().all(|s| s.verify(&sum).unwrap()));
        prop_assert!(structures.iter().any(|s| invariants(&s.summands) == invariants(&parts)));
    }
}
