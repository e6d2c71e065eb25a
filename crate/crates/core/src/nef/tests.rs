use proptest::prelude::*;

use super::*;
use crate::adjunction::fine_adjoint;
use crate::exactla::{int_vec, rat, rat_vec};
use crate::harness::corpus;

fn cone(vertex: &[i64], gens: &[&[i64]]) -> VertexCone {
    VertexCone { vertex: rat_vec(vertex), generators: gens.iter().map(|g| int_vec(g)).collect() }
}

#[test]
fn height_examples() {
    let c = cone(&[0, 0], &[&[1, 0], &[0, 1]]);
    assert_eq!(height(&c, &int_vec(&[2, 3])).unwrap(), rat(5, 1));
    let c = cone(&[0, 1], &[&[1, 0], &[-1, -3]]);
    assert_eq!(height(&c, &int_vec(&[0, -1])).unwrap(), rat(2, 3));
    let c = cone(&[2, 0], &[&[-2, 1], &[-2, -1]]);
    assert_eq!(height(&c, &int_vec(&[-1, 0])).unwrap(), rat(1, 2));
}

#[test]
fn height_errors() {
    let c = cone(&[0, 0], &[&[1, 0], &[0, 1]]);
    assert!(matches!(height(&c, &int_vec(&[0, 0])), Err(Error::ZeroPoint)));
    assert!(matches!(height(&c, &int_vec(&[-1, 0])), Err(Error::NotInCone)));
}

#[test]
fn gorenstein_examples() {
    let g = gorenstein_index(&cone(&[0, 0], &[&[1, 0], &[0, 1]]));
    assert_eq!(g.status, GorensteinStatus::Gorenstein { r: 1.into(), u: int_vec(&[1, 1]) });
    let g = gorenstein_index(&cone(&[2, 0], &[&[-2, 1], &[-2, -1]]));
    assert_eq!(g.status, GorensteinStatus::Gorenstein { r: 2.into(), u: int_vec(&[-1, 0]) });
    let g = gorenstein_index(&cone(&[0, 1], &[&[1, 0], &[-1, -3]]));
    assert_eq!(g.status, GorensteinStatus::Gorenstein { r: 3.into(), u: int_vec(&[3, -2]) });
}

#[test]
fn every_polygon_cone_is_q_gorenstein() {
    for p in corpus::lattice_polygons(1) {
        for c in p.normal_fan().unwrap() {
            assert!(gorenstein_index(&c).is_q_gorenstein());
        }
    }
}

#[test]
fn skew_pyramid_apex_is_not_q_gorenstein() {
    let p = corpus::skew_pyramid();
    let apex = p.vertex_cone(&rat_vec(&[1, 1, 1])).unwrap();
    assert_eq!(apex.generators.len(), 4);
    assert_eq!(gorenstein_index(&apex).status, GorensteinStatus::NotQGorenstein);
    assert!(matches!(vertex_path(&p, &rat_vec(&[1, 1, 1]), &rat(1, 2)), Err(Error::NotGorenstein)));
    let v = nef_value_fine(&p).unwrap();
    assert_eq!(v, NefValue::Infinite { reason: NefObstruction::NotQGorenstein { vertex: rat_vec(&[1, 1, 1]) } });
}

#[test]
fn canonical_examples() {
    assert!(is_canonical(&cone(&[0, 0], &[&[1, 0], &[0, 1]]), &rat(1, 1)).unwrap().is_canonical());
    let r = is_canonical(&cone(&[0, 1], &[&[1, 0], &[-1, -3]]), &rat(1, 1)).unwrap();
    assert!(r.violators.contains(&(int_vec(&[0, -1]), rat(2, 3))));
    let r = is_canonical(&cone(&[2, 0], &[&[-2, 1], &[-2, -1]]), &rat(1, 1)).unwrap();
    assert_eq!(r.violators, vec![(int_vec(&[-1, 0]), rat(1, 2))]);
    assert_eq!(r.min_height, rat(1, 2));
    // heights 1/2 pass a weaker threshold
    let r = is_canonical(&cone(&[2, 0], &[&[-2, 1], &[-2, -1]]), &rat(1, 2)).unwrap();
    assert!(r.is_canonical());
}

/// Height in a two-generator cone by Cramer's rule.
fn planar_height(gens: &[IntVector], y: &[BigInt]) -> Option<Rational> {
    let (a, b) = (&gens[0], &gens[1]);
    let det = int_rat(&(&a[0] * &b[1] - &a[1] * &b[0]));
    let l1 = int_rat(&(&y[0] * &b[1] - &y[1] * &b[0])) / &det;
    let l2 = int_rat(&(&a[0] * &y[1] - &a[1] * &y[0])) / &det;
    (!l1.is_negative() && !l2.is_negative()).then(|| l1 + l2)
}

#[test]
fn canonicity_matches_a_box_scan_on_polygons() {
    for p in corpus::lattice_polygons(2).into_iter().step_by(7) {
        for c in p.normal_fan().unwrap() {
            let radius = c.generators.iter().flat_map(|g| g.iter()).map(|x| x.abs()).max().unwrap();
            let r = i64::try_from(&radius).unwrap();
            let mut scan_ok = true;
            for x in -r..=r {
                for y in -r..=r {
                    if (x, y) == (0, 0) {
                        continue;
                    }
                    if let Some(h) = planar_height(&c.generators, &int_vec(&[x, y])) {
                        scan_ok &= h >= rat(1, 1);
                    }
                }
            }
            assert_eq!(is_canonical(&c, &rat(1, 1)).unwrap().is_canonical(), scan_ok, "{c:?}");
        }
    }
}

#[test]
fn vertex_path_examples() {
    assert_eq!(vertex_path(&corpus::square(3), &rat_vec(&[0, 0]), &rat(1, 1)).unwrap(), rat_vec(&[1, 1]));
    let s = rat(3, 7);
    assert_eq!(
        vertex_path(&corpus::delta(2, 3), &rat_vec(&[0, 1]), &s).unwrap(),
        vec![s.clone(), rat(1, 1) - rat(2, 3) * &s]
    );
    assert_eq!(vertex_path(&corpus::hexagon(), &rat_vec(&[2, 0]), &rat(2, 1)).unwrap(), rat_vec(&[1, 0]));
    assert!(matches!(
        vertex_path(&corpus::hexagon(), &rat_vec(&[1, 1]), &rat(1, 1)),
        Err(Error::NotAVertex(_))
    ));
}

#[test]
fn vertex_path_is_tight_on_its_facets() {
    let p = corpus::pentagon();
    let s = rat(1, 3);
    for c in p.normal_fan().unwrap() {
        let w = vertex_path(&p, &c.vertex, &s).unwrap();
        for a in &c.generators {
            let b = p.min_of(a).unwrap();
            assert_eq!(dot_int_rat(a, &w), b + &s);
        }
    }
}

#[test]
fn nef_value_examples() {
    assert_eq!(
        nef_value_fine(&corpus::square(3)).unwrap(),
        NefValue::Finite { tau: rat(2, 3), s_sup: rat(3, 2), attained: false }
    );
    assert_eq!(
        nef_value_fine(&corpus::unit_square()).unwrap(),
        NefValue::Finite { tau: rat(2, 1), s_sup: rat(1, 2), attained: false }
    );
    assert_eq!(nef_value_fine(&corpus::standard_simplex(2)).unwrap().tau(), Some(&rat(3, 1)));
    assert_eq!(nef_value_fine(&corpus::standard_simplex(3)).unwrap().tau(), Some(&rat(4, 1)));
    match nef_value_fine(&corpus::hexagon()).unwrap() {
        NefValue::Infinite { reason: NefObstruction::NotCanonical { height, .. } } => {
            assert_eq!(height, rat(1, 2))
        }
        other => panic!("{other:?}"),
    }
    assert!(!nef_value_fine(&corpus::delta(2, 3)).unwrap().is_finite());
}

#[test]
fn supremum_at_collapse() {
    // [0,2] x [0,1]: the fan survives exactly up to the collapse at s = 1/2
    let p = Polytope::from_vertices(&[rat_vec(&[0, 0]), rat_vec(&[2, 0]), rat_vec(&[0, 1]), rat_vec(&[2, 1])]).unwrap();
    assert_eq!(
        nef_value_fine(&p).unwrap(),
        NefValue::Finite { tau: rat(2, 1), s_sup: rat(1, 2), attained: false }
    );
    // the cut corner edge of this pentagon shrinks to a point at s = 1
    let p = Polytope::from_vertices(&[
        rat_vec(&[0, 0]),
        rat_vec(&[4, 0]),
        rat_vec(&[4, 3]),
        rat_vec(&[3, 4]),
        rat_vec(&[0, 4]),
    ])
    .unwrap();
    assert_eq!(
        nef_value_fine(&p).unwrap(),
        NefValue::Finite { tau: rat(1, 1), s_sup: rat(1, 1), attained: false }
    );
    assert!(fans_equal(&p, &fine_adjoint(&p, &rat(9, 10)).unwrap()).unwrap());
    assert!(!fans_equal(&p, &fine_adjoint(&p, &rat(1, 1)).unwrap()).unwrap());
}

#[test]
fn adjoint_is_hull_of_vertex_paths_below_the_supremum() {
    for (name, p) in corpus::named_2d().into_iter().chain(corpus::named_3d()) {
        let NefValue::Finite { s_sup, .. } = nef_value_fine(&p).unwrap() else { continue };
        for s in [&s_sup / rat(2, 1), &s_sup / rat(7, 1)] {
            let paths: Vec<RatVector> =
                p.vertices().iter().map(|v| vertex_path(&p, v, &s).unwrap()).collect();
            assert_eq!(fine_adjoint(&p, &s).unwrap(), Polytope::from_vertices(&paths).unwrap(), "{name}");
        }
    }
}

proptest! {
    #[test]
    fn height_is_positively_homogeneous(x in 0i64..6, y in 0i64..6, k in 1i64..5) {
        prop_assume!((x, y) != (0, 0));
        let c = cone(&[0, 1], &[&[1, 0], &[-1, -3]]);
        // (x, y) mapped into the cone: x (1,0) + y (-1,-3)
        let pt = int_vec(&[x - y, -3 * y]);
        let scaled = int_vec(&[k * (x - y), -3 * k * y]);
        prop_assert_eq!(height(&c, &scaled).unwrap(), height(&c, &pt).unwrap() * rat(k, 1));
    }
}
