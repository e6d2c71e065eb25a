use num_traits::{One, Zero};

use super::{RatVector, Rational};

/// Reduced row echelon form over `Q`. Returns the reduced rows (zero rows
/// dropped) and the pivot column of each.
pub fn rref(rows: &[RatVector]) -> (Vec<RatVector>, Vec<usize>) {
    let mut m: Vec<RatVector> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[RatVector]) -> usize {
    rref(rows).1.len()
}

/// Dimension of the affine hull of a point set (`-1` when empty).
pub fn affine_rank(points: &[RatVector]) -> isize {
    let Some(first) = points.first() else {
        return -1;
    };
    let diffs: Vec<RatVector> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs) as isize
}

/// Solves `A x = b` over `Q`. Returns `None` when inconsistent; when the
/// system is underdetermined the free variables are set to zero.
pub fn solve_linear_system(a: &[RatVector], b: &[Rational]) -> Option<RatVector> {
    let ncols = a.first().map_or(0, Vec::len);
    let augmented: Vec<RatVector> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (reduced, pivots) = rref(&augmented);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (row, &c) in reduced.iter().zip(&pivots) {
        x[c] = row[ncols].clone();
    }
    Some(x)
}

/// Inverse of a square rational matrix, `None` if singular.
pub fn rational_inverse(m: &[RatVector]) -> Option<Vec<RatVector>> {
    let n = m.len();
    let augmented: Vec<RatVector> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let (reduced, pivots) = rref(&augmented);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(reduced.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, rat_vec};

    #[test]
    fn rank_and_affine_rank() {
        let rows = vec![rat_vec(&[1, 2]), rat_vec(&[2, 4])];
        assert_eq!(rank(&rows), 1);
        let pts = vec![rat_vec(&[0, 0, 0]), rat_vec(&[1, 1, 1]), rat_vec(&[2, 2, 2])];
        assert_eq!(affine_rank(&pts), 1);
        assert_eq!(affine_rank(&[]), -1);
    }

    #[test]
    fn solves_square_and_detects_inconsistency() {
        let a = vec![rat_vec(&[1, 0]), rat_vec(&[-1, -3])];
        let x = solve_linear_system(&a, &[rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(-2, 3)]);
        let bad = vec![rat_vec(&[1, 1]), rat_vec(&[2, 2])];
        assert!(solve_linear_system(&bad, &[rat(1, 1), rat(3, 1)]).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let m = vec![rat_vec(&[2, 1]), rat_vec(&[1, 1])];
        let inv = rational_inverse(&m).unwrap();
        assert_eq!(inv, vec![rat_vec(&[1, -1]), rat_vec(&[-1, 2])]);
        assert!(rational_inverse(&[rat_vec(&[1, 2]), rat_vec(&[2, 4])]).is_none());
    }
}
