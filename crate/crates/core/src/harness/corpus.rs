//! Named polytopes used throughout the tests, examples and CLI, plus the
//! enumeration of all lattice polytopes with vertices in a box.

use std::collections::BTreeSet;

use crate::exactla::{int_vec, rat_vec};
use crate::polytope::Polytope;

fn lattice(pts: &[&[i64]]) -> Polytope {
    Polytope::from_vertices(&pts.iter().map(|p| rat_vec(p)).collect::<Vec<_>>())
        .expect("corpus polytopes are valid")
}

pub fn unit_square() -> Polytope {
    square(1)
}

/// `[0, k]^2`
pub fn square(k: i64) -> Polytope {
    lattice(&[&[0, 0], &[k, 0], &[0, k], &[k, k]])
}

/// `conv{(±2, 0), (±1, ±2)}`
pub fn hexagon() -> Polytope {
    lattice(&[&[2, 0], &[1, 2], &[-1, 2], &[-2, 0], &[-1, -2], &[1, -2]])
}

/// `conv{(-2, 0), (2, 0), (0, 1)}`: a Fine core segment against a single
/// point classical core.
pub fn wide_triangle() -> Polytope {
    lattice(&[&[-2, 0], &[2, 0], &[0, 1]])
}

/// The six-vertex 3-polytope of height 10 whose Fine core and classical
/// core are disjoint.
pub fn tall_wedge() -> Polytope {
    lattice(&[&[0, 0, 0], &[2, 0, 0], &[0, 4, 0], &[2, 2, 0], &[0, 0, 10], &[0, 4, 10]])
}

/// `conv(0, a e_1, e_2, ..., e_n)`
pub fn delta(n: usize, a: i64) -> Polytope {
    let mut pts = vec![vec![0; n]];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = if i == 0 { a } else { 1 };
        pts.push(e);
    }
    let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
    lattice(&refs)
}

pub fn standard_simplex(n: usize) -> Polytope {
    delta(n, 1)
}

/// `conv{±e_i}`
pub fn cross_polytope(n: usize) -> Polytope {
    let mut pts = Vec::new();
    for i in 0..n {
        for s in [1, -1] {
            let mut e = vec![0; n];
            e[i] = s;
            pts.push(e);
        }
    }
    let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
    lattice(&refs)
}

pub fn cube(n: usize) -> Polytope {
    let pts: Vec<Vec<i64>> = (0..1u32 << n)
        .map(|mask| (0..n).map(|i| i64::from((mask >> i) & 1)).collect())
        .collect();
    let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
    lattice(&refs)
}

/// Pyramid over `[0,3] x [0,2]` with apex `(1,1,1)`; the apex cone has four
/// generators admitting no common Gorenstein functional.
pub fn skew_pyramid() -> Polytope {
    lattice(&[&[0, 0, 0], &[3, 0, 0], &[0, 2, 0], &[3, 2, 0], &[1, 1, 1]])
}

/// Lattice pentagon whose cores are the segment [(2,2),(3,2)].
pub fn pentagon() -> Polytope {
    lattice(&[&[0, 0], &[5, 0], &[5, 2], &[3, 4], &[0, 4]])
}

/// Lattice quadrilateral whose cores are the point (5/3, 5/3).
pub fn quadrilateral() -> Polytope {
    lattice(&[&[0, 0], &[5, 0], &[1, 4], &[0, 4]])
}

pub fn named_2d() -> Vec<(String, Polytope)> {
    let mut out = vec![
        ("unit_square".to_string(), unit_square()),
        ("square_3".to_string(), square(3)),
        ("hexagon".to_string(), hexagon()),
        ("wide_triangle".to_string(), wide_triangle()),
        ("cross_polytope_2".to_string(), cross_polytope(2)),
        ("pentagon".to_string(), pentagon()),
        ("quadrilateral".to_string(), quadrilateral()),
    ];
    for a in 1..=5 {
        out.push((format!("delta_2_{a}"), delta(2, a)));
    }
    out
}

pub fn named_3d() -> Vec<(String, Polytope)> {
    let mut out = vec![
        ("tall_wedge".to_string(), tall_wedge()),
        ("cube_3".to_string(), cube(3)),
        ("cross_polytope_3".to_string(), cross_polytope(3)),
        ("skew_pyramid".to_string(), skew_pyramid()),
        (
            "prism_triangle".to_string(),
            lattice(&[&[0, 0, 0], &[2, 0, 0], &[0, 1, 0], &[0, 0, 1], &[2, 0, 1], &[0, 1, 1]]),
        ),
        (
            "square_pyramid".to_string(),
            lattice(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[2, 2, 0], &[1, 1, 1]]),
        ),
        (
            "box_2_1_1".to_string(),
            lattice(&[
                &[0, 0, 0],
                &[2, 0, 0],
                &[0, 1, 0],
                &[2, 1, 0],
                &[0, 0, 1],
                &[2, 0, 1],
                &[0, 1, 1],
                &[2, 1, 1],
            ]),
        ),
    ];
    for a in 1..=5 {
        out.push((format!("delta_3_{a}"), delta(3, a)));
    }
    out
}

/// Vertex sets of all full-dimensional lattice polytopes with vertices in
/// `[-bound, bound]^n`, deduplicated by exact vertex set (or up to lattice
/// translation when `up_to_translation`), in sorted order.
pub fn lattice_polytopes(n: usize, bound: i64, up_to_translation: bool) -> Vec<Vec<Vec<i64>>> {
    let grid = box_points(n, bound);

    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    let mut frontier: Vec<Vec<Vec<i64>>> = Vec::new();
    for simplex in combinations(&grid, n + 1) {
        if let Some(h) = hull_vertices(&simplex, n) {
            if h.len() == n + 1 && seen.insert(h.clone()) {
                frontier.push(h);
            }
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for poly in &frontier {
            for p in &grid {
                if poly.contains(p) {
                    continue;
                }
                let mut pts = poly.clone();
                pts.push(p.clone());
                if let Some(h) = hull_vertices(&pts, n) {
                    if seen.insert(h.clone()) {
                        next.push(h);
                    }
                }
            }
        }
        frontier = next;
    }
    if !up_to_translation {
        return seen.into_iter().collect();
    }
    let translated: BTreeSet<Vec<Vec<i64>>> = seen
        .into_iter()
        .map(|vs| {
            let base = vs[0].clone();
            vs.into_iter().map(|v| v.iter().zip(&base).map(|(x, b)| x - b).collect()).collect()
        })
        .collect();
    translated.into_iter().collect()
}

pub fn lattice_polygons(bound: i64) -> Vec<Polytope> {
    lattice_polytopes(2, bound, true)
        .iter()
        .map(|vs| Polytope::from_int_vertices(&vs.iter().map(|v| int_vec(v)).collect::<Vec<_>>()).expect("valid"))
        .collect()
}

fn box_points(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-bound..=bound).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

fn combinations(items: &[Vec<i64>], k: usize) -> Vec<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < items.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Sorted vertex set of the hull, or `None` if it is not full-dimensional.
fn hull_vertices(points: &[Vec<i64>], n: usize) -> Option<Vec<Vec<i64>>> {
    match n {
        1 => {
            let lo = points.iter().map(|p| p[0]).min()?;
            let hi = points.iter().map(|p| p[0]).max()?;
            (lo < hi).then(|| vec![vec![lo], vec![hi]])
        }
        2 => planar_hull(points),
        _ => {
            let p = Polytope::from_int_vertices(&points.iter().map(|v| int_vec(v)).collect::<Vec<_>>()).ok()?;
            if !p.is_full_dimensional() {
                return None;
            }
            Some(
                p.int_vertices()
                    .ok()?
                    .into_iter()
                    .map(|v| v.iter().map(|x| i64::try_from(x).expect("small")).collect())
                    .collect(),
            )
        }
    }
}

fn planar_hull(points: &[Vec<i64>]) -> Option<Vec<Vec<i64>>> {
    let mut pts: Vec<(i64, i64)> = points.iter().map(|p| (p[0], p[1])).collect();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return None;
    }
    let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(2 * pts.len());
    let lower = pts.iter();
    let upper = pts.iter().rev();
    for chain in [lower.collect::<Vec<_>>(), upper.collect::<Vec<_>>()] {
        let start = hull.len();
        for &p in chain {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    if hull.len() < 3 {
        return None;
    }
    let mut out: Vec<Vec<i64>> = hull.into_iter().map(|(x, y)| vec![x, y]).collect();
    out.sort();
    Some(out)
}
