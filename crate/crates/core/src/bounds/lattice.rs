use super::Polytope;
use crate::rational::{big, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use thiserror::Error;

/// Points `offset_i + modulus_i * k_i` with integer `k_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    pub moduli: Vec<Rational>,
    pub offsets: Vec<Rational>,
}

impl LatticeSpec {
    pub fn new(moduli: Vec<Rational>, offsets: Vec<Rational>) -> Self {
        assert_eq!(moduli.len(), offsets.len());
        assert!(moduli.iter().all(Signed::is_positive), "moduli must be positive");
        LatticeSpec { moduli, offsets }
    }

    pub fn integers(dim: usize) -> Self {
        LatticeSpec::new(vec![Rational::from_integer(1.into()); dim], vec![Rational::default(); dim])
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("lattice search supports at most 3 variables, got {0}")]
    TooManyVariables(usize),
    #[error("polytope is unbounded along {0}")]
    Unbounded(String),
    #[error("search box holds {0} points, above the limit")]
    BoxTooLarge(u128),
}

const BOX_LIMIT: u128 = 100_000_000;

fn ceil(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

fn floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// All lattice points of `p` accepted by `filter`, in lexicographic order.
pub fn count_lattice_points<F>(p: &Polytope, lat: &LatticeSpec, filter: Option<F>) -> Result<Vec<Vec<Rational>>, LatticeError>
where
    F: Fn(&[Rational]) -> bool + Sync,
{
    if p.dim > 3 {
        return Err(LatticeError::TooManyVariables(p.dim));
    }
    let mut ranges = Vec::with_capacity(p.dim);
    let mut size: u128 = 1;
    for k in 0..p.dim {
        let (lo, hi) = match p.coordinate_range(k) {
            None => return Err(LatticeError::Unbounded(p.names[k].clone())),
            Some(None) => return Ok(Vec::new()),
            Some(Some(r)) => r,
        };
        let kmin = ceil(&((lo - &lat.offsets[k]) / &lat.moduli[k]));
        let kmax = floor(&((hi - &lat.offsets[k]) / &lat.moduli[k]));
        if kmax < kmin {
            return Ok(Vec::new());
        }
        let count = (&kmax - &kmin + 1u32).to_u128().unwrap_or(u128::MAX);
        size = size.saturating_mul(count);
        ranges.push((kmin, kmax));
    }
    if size > BOX_LIMIT {
        return Err(LatticeError::BoxTooLarge(size));
    }
    let mut candidates: Vec<Vec<Rational>> = Vec::new();
    let mut idx: Vec<BigInt> = ranges.iter().map(|r| r.0.clone()).collect();
    'outer: loop {
        let point: Vec<Rational> =
            (0..p.dim).map(|k| &lat.offsets[k] + &lat.moduli[k] * big(idx[k].clone())).collect();
        if p.contains(&point) {
            candidates.push(point);
        }
        for k in (0..p.dim).rev() {
            if idx[k] < ranges[k].1 {
                idx[k] += 1;
                continue 'outer;
            }
            idx[k] = ranges[k].0.clone();
        }
        break;
    }
    Ok(match filter {
        Some(f) => candidates.into_par_iter().filter(|x| f(x)).collect(),
        None => candidates,
    })
}

/// `true` when every entry is an integer divisible by `m`.
pub fn all_divisible(values: &[Rational], m: i64) -> bool {
    let m = BigInt::from(m);
    values.iter().all(|v| v.is_integer() && v.to_integer().is_multiple_of(&m))
}
