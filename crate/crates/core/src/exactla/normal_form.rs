//! Hermite and Smith normal forms over `Z` and the lattice maps built on
//! them.
//!
//! Hermite convention: row style, `H = U * M`, pivots positive, entries
//! above each pivot reduced into `[0, pivot)`, zero rows at the bottom.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{int_rat, linalg, primitive_multiple, IntMatrix, RatVector};
use crate::{Error, Result};

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn transpose(m: &IntMatrix, ncols: usize) -> IntMatrix {
    (0..ncols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

fn row_axpy(rows: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    let src = rows[source].clone();
    for (x, s) in rows[target].iter_mut().zip(&src) {
        *x -= factor * s;
    }
}

/// Row-style Hermite normal form. Returns `(H, U)` with `H = U * M` and
/// `U` unimodular.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut h = m.clone();
    let mut u = identity(nrows);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        loop {
            let smallest = (r..nrows)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&a, &b| h[a][c].abs().cmp(&h[b][c].abs()).then(a.cmp(&b)));
            let Some(p) = smallest else {
                break;
            };
            h.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in r + 1..nrows {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                row_axpy(&mut h, i, r, &q);
                row_axpy(&mut u, i, r, &q);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut() {
                *x = -&*x;
            }
            for x in u[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            row_axpy(&mut h, i, r, &q);
            row_axpy(&mut u, i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

fn is_diagonal(m: &IntMatrix) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, x)| i == j || x.is_zero()))
}

/// Nonzero Smith invariants `d_1 | d_2 | ...` of an integer matrix.
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut cur = m.clone();
    let mut rows_are_original = true;
    loop {
        let (h, _) = hermite_normal_form(&cur);
        cur = h;
        if is_diagonal(&cur) {
            break;
        }
        let width = if rows_are_original { ncols } else { m.len() };
        cur = transpose(&cur, width);
        rows_are_original = !rows_are_original;
    }
    let mut diag: Vec<BigInt> = cur
        .iter()
        .enumerate()
        .filter_map(|(i, row)| row.get(i).filter(|x| !x.is_zero()).map(Signed::abs))
        .collect();
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

/// Inverse of a unimodular integer matrix.
pub fn integer_inverse(m: &IntMatrix) -> Result<IntMatrix> {
    let rational: Vec<RatVector> = m.iter().map(|row| row.iter().map(int_rat).collect()).collect();
    let inv = linalg::rational_inverse(&rational).ok_or(Error::NotUnimodular)?;
    inv.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| if x.is_integer() { Ok(x.to_integer()) } else { Err(Error::NotUnimodular) })
                .collect()
        })
        .collect()
}

/// Extends a `t x n` integer matrix whose rows map `Z^n` onto `Z^t` to an
/// `n x n` unimodular matrix whose first `t` rows are the input.
pub fn unimodular_completion(rows: &IntMatrix, n: usize) -> Result<IntMatrix> {
    let t = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("expected rows of length {n}")));
    }
    let (h, w) = hermite_normal_form(&transpose(rows, n));
    let top_is_identity = (0..n).all(|i| {
        (0..t).all(|j| {
            let expected = if i == j { BigInt::one() } else { BigInt::zero() };
            h[i][j] == expected
        })
    });
    if !top_is_identity {
        return Err(Error::NotSurjective);
    }
    let v = transpose(&w, n);
    let completion = integer_inverse(&v)?;
    debug_assert_eq!(&completion[..t], &rows[..]);
    Ok(completion)
}

/// Integer matrix `Π` whose kernel is the rational span of `generators`
/// and which maps `Z^n` onto `Z^{n-k}`. Rows are in Hermite normal form.
pub fn lattice_quotient_basis(
    generators: &[RatVector],
    ambient_dim: usize,
    subspace_dim: usize,
) -> Result<IntMatrix> {
    if let Some(bad) = generators.iter().find(|g| g.len() != ambient_dim) {
        return Err(Error::DimensionMismatch(format!(
            "generator of length {} in ambient dimension {ambient_dim}",
            bad.len()
        )));
    }
    let gens: IntMatrix = generators.iter().filter_map(|g| primitive_multiple(g)).collect();
    let actual = linalg::rank(&gens.iter().map(|g| g.iter().map(int_rat).collect()).collect::<Vec<_>>());
    if actual != subspace_dim {
        return Err(Error::DimensionMismatch(format!(
            "generators span a {actual}-dimensional subspace, expected {subspace_dim}"
        )));
    }
    if subspace_dim == 0 {
        return Ok(identity(ambient_dim));
    }
    let (h, u) = hermite_normal_form(&transpose(&gens, ambient_dim));
    let kernel: IntMatrix = h
        .iter()
        .zip(u)
        .filter(|(row, _)| row.iter().all(Zero::is_zero))
        .map(|(_, urow)| urow)
        .collect();
    let (basis, _) = hermite_normal_form(&kernel);
    Ok(basis.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect())
}
