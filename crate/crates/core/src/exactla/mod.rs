//! Exact arithmetic substrate: rationals, integer vectors, lattice normal
//! forms and an exact simplex solver.
//!
//! Nothing in this crate ever rounds. Every scalar is a [`Rational`] (an
//! arbitrary-precision fraction kept in lowest terms) or a [`BigInt`].

mod linalg;
mod lp;
mod normal_form;

pub use linalg::{affine_rank, rank, rational_inverse, rref, solve_linear_system};
pub use lp::{solve_lp, LinearProgram, LpResult, LpStatus, Relation, Sense};
pub use normal_form::{
    hermite_normal_form, integer_inverse, lattice_quotient_basis, smith_invariants,
    unimodular_completion,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision exact rational, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// A lattice vector (or lattice functional) in `Z^n`.
pub type IntVector = Vec<BigInt>;

/// A rational point in `Q^n`.
pub type RatVector = Vec<Rational>;

/// Dense integer matrix stored as a list of rows.
pub type IntMatrix = Vec<IntVector>;

/// Builds a rational from a pair of machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int_rat(value: &BigInt) -> Rational {
    Rational::from_integer(value.clone())
}

pub fn int_vec(entries: &[i64]) -> IntVector {
    entries.iter().map(|&e| BigInt::from(e)).collect()
}

pub fn rat_vec(entries: &[i64]) -> RatVector {
    entries.iter().map(|&e| Rational::from_integer(BigInt::from(e))).collect()
}

pub fn to_rat_vec(v: &[BigInt]) -> RatVector {
    v.iter().map(int_rat).collect()
}

/// Returns the integer vector if every entry is integral.
pub fn to_int_vec(v: &[Rational]) -> Option<IntVector> {
    v.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
}

pub fn dot_int_rat(a: &[BigInt], x: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), x.len());
    let mut acc = Rational::zero();
    for (ai, xi) in a.iter().zip(x) {
        if !ai.is_zero() {
            acc += xi * ai;
        }
    }
    acc
}

pub fn dot_rat(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub_rat(a: &[Rational], b: &[Rational]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_rat(a: &[Rational], b: &[Rational]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale_rat(v: &[Rational], factor: &Rational) -> RatVector {
    v.iter().map(|x| x * factor).collect()
}

/// Applies an integer matrix to a rational vector.
pub fn mat_vec(m: &[IntVector], x: &[Rational]) -> RatVector {
    m.iter().map(|row| dot_int_rat(row, x)).collect()
}

pub fn gcd_of(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

fn lcm_of_denominators(v: &[Rational]) -> BigInt {
    v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()))
}

/// Divides a nonzero integer vector by the gcd of its entries.
pub fn primitivize(v: &[BigInt]) -> Result<IntVector> {
    let g = gcd_of(v);
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Positive multiple of a rational vector that is a primitive integer
/// vector. Returns `None` for the zero vector.
pub fn primitive_multiple(v: &[Rational]) -> Option<IntVector> {
    let l = lcm_of_denominators(v);
    let scaled: IntVector = v.iter().map(|x| (x * &l).to_integer()).collect();
    primitivize(&scaled).ok()
}

/// Integer vector that is a positive multiple of `v`, with entries clear
/// of denominators and divided by their common gcd (zero stays zero).
pub fn clear_denominators(v: &[Rational]) -> IntVector {
    primitive_multiple(v).unwrap_or_else(|| vec![BigInt::zero(); v.len()])
}

pub fn floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

pub fn ceil(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

pub fn is_zero_vec<T: Zero>(v: &[T]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn abs_max(v: &[BigInt]) -> BigInt {
    v.iter().map(Signed::abs).max().unwrap_or_default()
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let parsed = match trimmed.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| Error::parse(trimmed))?;
            let d: BigInt = d.trim().parse().map_err(|_| Error::parse(trimmed))?;
            if d.is_zero() {
                return Err(Error::parse(trimmed));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(trimmed.parse().map_err(|_| Error::parse(trimmed))?),
    };
    Ok(parsed)
}

pub fn format_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn format_int_vec(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
