//! Double description (Motzkin) over the integers.
//!
//! Computes a minimal generating set `cone(rays) + lin(lineality)` of
//! `{y : <row, y> >= 0 for every row}`. All vectors are kept primitive, so
//! no rational arithmetic is needed. Adjacency of rays is decided by the
//! combinatorial test on zero sets.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactla::{dot_int, primitivize, IntVector};

#[derive(Debug, Clone)]
pub(crate) struct Cone {
    pub rays: Vec<IntVector>,
    pub lineality: Vec<IntVector>,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

fn combine(pa: &BigInt, n: &IntVector, na: &BigInt, p: &IntVector) -> IntVector {
    // pa * n - na * p, with pa > 0 and na < 0 (or pa > 0 for the lineality step)
    let v: IntVector = n.iter().zip(p).map(|(x, y)| pa * x - na * y).collect();
    primitivize(&v).unwrap_or(v)
}

pub(crate) fn double_description(rows: &[IntVector], dim: usize) -> Cone {
    let mut lineality: Vec<IntVector> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect();
    let mut rays: Vec<IntVector> = Vec::new();
    let mut zero_sets: Vec<Bits> = Vec::new();
    let total = rows.len();

    for (k, row) in rows.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !dot_int(row, l).is_zero()) {
            let mut l0 = lineality.swap_remove(pos);
            let mut a0 = dot_int(row, &l0);
            if a0.is_negative() {
                l0.iter_mut().for_each(|x| *x = -&*x);
                a0 = -a0;
            }
            for l in lineality.iter_mut() {
                let al = dot_int(row, l);
                if !al.is_zero() {
                    *l = combine(&a0, l, &al, &l0);
                }
            }
            for (r, z) in rays.iter_mut().zip(zero_sets.iter_mut()) {
                let ar = dot_int(row, r);
                if !ar.is_zero() {
                    *r = combine(&a0, r, &ar, &l0);
                }
                z.set(k);
            }
            let mut z = Bits::new(total);
            // l0 was tight on every earlier row.
            for j in 0..k {
                z.set(j);
            }
            rays.push(l0);
            zero_sets.push(z);
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot_int(row, r)).collect();
        let positive: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let negative: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if negative.is_empty() {
            for (i, z) in zero_sets.iter_mut().enumerate() {
                if values[i].is_zero() {
                    z.set(k);
                }
            }
            continue;
        }

        let mut new_rays = Vec::new();
        let mut new_zero_sets = Vec::new();
        for &p in &positive {
            for &n in &negative {
                let common = zero_sets[p].and(&zero_sets[n]);
                let adjacent = (0..rays.len())
                    .all(|r| r == p || r == n || !common.is_subset_of(&zero_sets[r]));
                if adjacent {
                    let mut z = common;
                    z.set(k);
                    new_rays.push(combine(&values[p], &rays[n], &values[n], &rays[p]));
                    new_zero_sets.push(z);
                }
            }
        }

        let mut kept_rays = Vec::with_capacity(rays.len() + new_rays.len());
        let mut kept_zero_sets = Vec::with_capacity(rays.len() + new_rays.len());
        for (i, (r, mut z)) in rays.into_iter().zip(zero_sets).enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                z.set(k);
            }
            kept_rays.push(r);
            kept_zero_sets.push(z);
        }
        kept_rays.extend(new_rays);
        kept_zero_sets.extend(new_zero_sets);
        rays = kept_rays;
        zero_sets = kept_zero_sets;
    }
    rays.retain(|r| r.iter().any(|x| !x.is_zero()));
    Cone { rays, lineality }
}
