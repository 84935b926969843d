//! Invariant-ring parametrisations of weight enumerators.
//!
//! Stabilizer enumerators of `[[n, 1]]` M3-codes (`n` odd) are spanned by
//!
//! ```text
//! x f^{(n-1)/2 - 3j} g^j          and   x y^2 (x^2 - y^2) f^{(n-5)/2 - 3j} g^j
//! ```
//!
//! with `f = x^2 + 3y^2` and `g = y^2 (x^2 - y^2)^2`; self-dual (`[[n, 0]]`)
//! enumerators by `f^{n/2 - 3j} g^j`. The public coordinates are the
//! coefficients `c'_j, d'_j` (resp. `c_j`) of these basis elements.
//!
//! The extremal constructions work in the rescaled coordinates
//! `c_j = (-16/27)^j 4^{(n-1)/2-3j} c'_j`, `d_j = (-16/27)^j 4^{(n-5)/2-3j} d'_j`,
//! in which the distillation numerator becomes a power series in
//! `φ = (1-ε)^3 ε^3 / ((1-2ε)^2 (ε^2-ε+1)^2)` with coefficients drawn from
//! `H(φ) = (sqrt(4φ+1) - 1)/(2φ)`.

use crate::enums::Enumerator;
use crate::linalg::{self, SolveError};
use crate::poly::Poly;
use crate::rational::{big, binomial, int, pow, rat, rational_to_value, value_to_rational, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("length {0} is not valid here: {1}")]
    BadLength(usize, &'static str),
    #[error("expected {expected} coefficients in `{name}`, got {got}")]
    WrongArity { name: &'static str, expected: usize, got: usize },
    #[error("linear system is singular (rank {rank} of {unknowns})")]
    Singular { rank: usize, unknowns: usize },
    #[error("enumerator is not in the invariant family")]
    NotInFamily,
    #[error("malformed parameters: {0}")]
    Malformed(String),
}

/// Which residue of `n mod 6` an odd length falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignClass {
    /// `n ≡ 1 mod 6`
    One,
    /// `n ≡ 5 mod 6`
    Five,
}

impl SignClass {
    pub fn of(n: usize) -> Option<SignClass> {
        match n % 6 {
            1 => Some(SignClass::One),
            5 => Some(SignClass::Five),
            _ => None,
        }
    }

    /// `m` with `n = 6m + 1` or `n = 6m + 5`.
    pub fn m(n: usize) -> usize {
        n / 6
    }

    pub fn name(self) -> &'static str {
        match self {
            SignClass::One => "class1",
            SignClass::Five => "class5",
        }
    }
}

fn fhat() -> Poly {
    Poly::from_ints(&[1, 0, 3])
}

fn ghat() -> Poly {
    Poly::from_ints(&[0, 0, 1, 0, -2, 0, 1])
}

pub fn c_len(n: usize) -> usize {
    (n - 1) / 6 + 1
}

pub fn d_len(n: usize) -> usize {
    if n >= 5 {
        (n - 5) / 6 + 1
    } else {
        0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantParams {
    pub n: usize,
    pub cprime: Vec<Rational>,
    pub dprime: Vec<Rational>,
}

impl InvariantParams {
    pub fn new(n: usize, cprime: Vec<Rational>, dprime: Vec<Rational>) -> Result<Self, InvariantError> {
        if n.is_multiple_of(2) {
            return Err(InvariantError::BadLength(n, "the [[n,1]] family needs odd n"));
        }
        if cprime.len() != c_len(n) {
            return Err(InvariantError::WrongArity { name: "cprime", expected: c_len(n), got: cprime.len() });
        }
        if dprime.len() != d_len(n) {
            return Err(InvariantError::WrongArity { name: "dprime", expected: d_len(n), got: dprime.len() });
        }
        Ok(InvariantParams { n, cprime, dprime })
    }

    /// Flattened `(c'_0.., d'_0..)`.
    pub fn flat(&self) -> Vec<Rational> {
        self.cprime.iter().chain(&self.dprime).cloned().collect()
    }

    pub fn from_flat(n: usize, values: &[Rational]) -> Result<Self, InvariantError> {
        let cl = c_len(n);
        if values.len() != cl + d_len(n) {
            return Err(InvariantError::WrongArity { name: "flat", expected: cl + d_len(n), got: values.len() });
        }
        InvariantParams::new(n, values[..cl].to_vec(), values[cl..].to_vec())
    }

    pub fn to_json(&self) -> Value {
        let s = |v: &Vec<Rational>| v.iter().map(|r| Value::String(r.to_string())).collect::<Vec<_>>();
        json!({ "n": self.n, "cprime": s(&self.cprime), "dprime": s(&self.dprime) })
    }

    pub fn from_json(value: &Value) -> Result<Self, InvariantError> {
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| InvariantError::Malformed("missing `n`".into()))? as usize;
        let list = |key: &str| -> Result<Vec<Rational>, InvariantError> {
            value
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| InvariantError::Malformed(format!("missing `{key}`")))?
                .iter()
                .map(|v| value_to_rational(v).ok_or_else(|| InvariantError::Malformed(format!("bad rational {v}"))))
                .collect()
        };
        InvariantParams::new(n, list("cprime")?, list("dprime")?)
    }
}

/// Basis enumerators for the `[[n,1]]` family, `c` part then `d` part.
pub fn family_basis(n: usize) -> Result<Vec<Enumerator>, InvariantError> {
    if n.is_multiple_of(2) {
        return Err(InvariantError::BadLength(n, "the [[n,1]] family needs odd n"));
    }
    let f = fhat();
    let g = ghat();
    let extra = Poly::from_ints(&[0, 0, 1, 0, -1]);
    let mut basis = Vec::new();
    for j in 0..c_len(n) {
        let p = &f.pow(((n - 1) / 2 - 3 * j) as u32) * &g.pow(j as u32);
        basis.push(Enumerator::from_poly(n, &p).expect("degree n - 1"));
    }
    for j in 0..d_len(n) {
        let p = &(&extra * &f.pow(((n - 5) / 2 - 3 * j) as u32)) * &g.pow(j as u32);
        basis.push(Enumerator::from_poly(n, &p).expect("degree n - 1"));
    }
    Ok(basis)
}

fn combine(n: usize, basis: &[Enumerator], weights: &[Rational]) -> Enumerator {
    let mut out = vec![Rational::zero(); n + 1];
    for (b, w) in basis.iter().zip(weights) {
        if w.is_zero() {
            continue;
        }
        for (o, c) in out.iter_mut().zip(b.coeffs()) {
            *o += w * c;
        }
    }
    Enumerator::new(out)
}

pub fn expand_family(p: &InvariantParams) -> Enumerator {
    let basis = family_basis(p.n).expect("validated on construction");
    combine(p.n, &basis, &p.flat())
}

/// Inverse of [`expand_family`].
pub fn family_params(a: &Enumerator) -> Result<InvariantParams, InvariantError> {
    let n = a.n();
    let basis = family_basis(n)?;
    let rows = (0..=n).map(|j| basis.iter().map(|b| b.coeff(j).clone()).collect()).collect();
    match linalg::solve(rows, a.coeffs().to_vec(), basis.len()) {
        Ok(x) => InvariantParams::from_flat(n, &x),
        Err(_) => Err(InvariantError::NotInFamily),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDualParams {
    pub n: usize,
    pub c: Vec<Rational>,
}

pub fn selfdual_len(n: usize) -> usize {
    n / 6 + 1
}

impl SelfDualParams {
    pub fn new(n: usize, c: Vec<Rational>) -> Result<Self, InvariantError> {
        if n % 2 == 1 {
            return Err(InvariantError::BadLength(n, "self-dual codes have even length"));
        }
        if c.len() != selfdual_len(n) {
            return Err(InvariantError::WrongArity { name: "c", expected: selfdual_len(n), got: c.len() });
        }
        Ok(SelfDualParams { n, c })
    }
}

pub fn selfdual_basis(n: usize) -> Result<Vec<Enumerator>, InvariantError> {
    if n % 2 == 1 {
        return Err(InvariantError::BadLength(n, "self-dual codes have even length"));
    }
    let f = fhat();
    let g = ghat();
    Ok((0..selfdual_len(n))
        .map(|j| {
            let p = &f.pow((n / 2 - 3 * j) as u32) * &g.pow(j as u32);
            Enumerator::from_poly(n, &p).expect("degree n")
        })
        .collect())
}

pub fn expand_selfdual(p: &SelfDualParams) -> Enumerator {
    let basis = selfdual_basis(p.n).expect("validated on construction");
    combine(p.n, &basis, &p.c)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSeries {
    pub coeffs: Vec<BigInt>,
}

impl HSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// `H_j = (-4)^j (1/2)_j / (2)_j` for `j = 0..=order`.
pub fn h_series(order: usize) -> HSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut h = Rational::one();
    for j in 0..=order {
        coeffs.push(h.to_integer());
        // ratio of consecutive Pochhammer quotients: (j + 1/2) / (j + 2)
        h = h * int(-4) * (int(j as i64) + rat(1, 2)) / int(j as i64 + 2);
    }
    HSeries { coeffs }
}

/// Scale from `c'_j` to `c_j` (or `d'_j` to `d_j` with `base = (n-5)/2`).
fn rescale(j: usize, base: usize) -> Rational {
    pow(&rat(-16, 27), j as u32) * big(BigInt::from(4).pow((base - 3 * j) as u32))
}

/// Linear forms over the flattened `(c'.., d'..)` giving the coefficients of
/// `φ^0 .. φ^{count-1}` in the series whose leading power fixes `ν`.
///
/// Class 5 uses `S1 + (4/9) H S2`, class 1 uses `H S1 - (4/9) S2`.
pub fn phi_cancellation_rows(n: usize, count: usize) -> Result<Vec<Vec<Rational>>, InvariantError> {
    let class = SignClass::of(n).ok_or(InvariantError::BadLength(n, "need n ≡ ±1 mod 6"))?;
    let m = SignClass::m(n);
    let (cl, dl) = (c_len(n), d_len(n));
    let h = h_series(count);
    let h = |i: usize| big(h.coeffs[i].clone());
    let cs: Vec<Rational> = (0..cl).map(|j| rescale(j, (n - 1) / 2)).collect();
    let ds: Vec<Rational> = (0..dl).map(|j| rescale(j, (n - 5) / 2)).collect();
    let four_ninths = rat(4, 9);
    let mut rows = Vec::with_capacity(count);
    for k in 0..count {
        let mut row = vec![Rational::zero(); cl + dl];
        match class {
            SignClass::Five => {
                // S1 = Σ c_{m-i} φ^i, S2 = Σ d_{m-i} φ^i, i = 0..=m
                if k <= m {
                    row[m - k] += &cs[m - k];
                }
                for i in 0..=k.min(m) {
                    row[cl + m - i] += &four_ninths * h(k - i) * &ds[m - i];
                }
            }
            SignClass::One => {
                // S1 = Σ c_{m-i} φ^i (i ≤ m), S2 = Σ d_{m-1-i} φ^i (i < m)
                for i in 0..=k.min(m) {
                    row[m - i] += h(k - i) * &cs[m - i];
                }
                if k < m {
                    row[cl + m - 1 - k] -= &four_ninths * &ds[m - 1 - k];
                }
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

/// The number of φ-powers the free coefficients can cancel: `2m+1` or `2m`.
pub fn max_cancellations(n: usize) -> Option<usize> {
    match SignClass::of(n)? {
        SignClass::Five => Some(2 * SignClass::m(n) + 1),
        SignClass::One => Some(2 * SignClass::m(n)),
    }
}

/// `ν` reached when the first `k` powers of φ cancel.
pub fn nu_for_cancellations(class: SignClass, k: usize) -> usize {
    match class {
        SignClass::Five => 2 + 3 * k,
        SignClass::One => 1 + 3 * k,
    }
}

/// Family member with `c'_0 = 1` cancelling every available φ-power.
pub fn extremal_distillation_params(n: usize) -> Result<InvariantParams, InvariantError> {
    let count = max_cancellations(n).ok_or(InvariantError::BadLength(n, "need n ≡ ±1 mod 6"))?;
    if n < 5 {
        return Err(InvariantError::BadLength(n, "need n ≥ 5"));
    }
    let unknowns = c_len(n) + d_len(n);
    let mut rows = phi_cancellation_rows(n, count)?;
    let mut rhs = vec![Rational::zero(); count];
    let mut pin = vec![Rational::zero(); unknowns];
    pin[0] = Rational::one();
    rows.push(pin);
    rhs.push(Rational::one());
    let x = linalg::solve(rows, rhs, unknowns).map_err(|e| match e {
        SolveError::Underdetermined { rank, unknowns } => InvariantError::Singular { rank, unknowns },
        SolveError::Inconsistent => InvariantError::Singular { rank: count, unknowns },
    })?;
    InvariantParams::from_flat(n, &x)
}

pub fn extremal_distillation_enumerator(n: usize) -> Result<Enumerator, InvariantError> {
    Ok(expand_family(&extremal_distillation_params(n)?))
}

/// Closed form of `A_2` for the extremal distillation enumerator.
pub fn extremal_a2(n: usize) -> Option<i64> {
    let m = SignClass::m(n) as i64;
    match SignClass::of(n)? {
        SignClass::Five => Some(-30 - 81 * m - 54 * m * m),
        SignClass::One => Some(-9 * m - 54 * m * m),
    }
}

/// Closed-form coefficients of the extremal self-dual enumerator.
pub fn selfdual_extremal_params(n: usize) -> Result<SelfDualParams, InvariantError> {
    if n % 2 == 1 || n < 6 {
        return Err(InvariantError::BadLength(n, "need even n ≥ 6"));
    }
    let half = (n / 2) as i64;
    let mut c = vec![Rational::one()];
    for j in 1..selfdual_len(n) as i64 {
        let mut sum = BigInt::zero();
        for r in 0..j {
            let term = BigInt::from(-3).pow((r + 1) as u32)
                * binomial((half - 3 * j + r) as u64, r as u64)
                * binomial((3 * j - r - 2) as u64, (j - r - 1) as u64);
            sum += term;
        }
        c.push(big(sum) * rat(n as i64, 2 * j));
    }
    SelfDualParams::new(n, c)
}

/// `-16/27`: the factor relating `A(1, i/sqrt 3)` to the top `c_j`.
pub fn selfdual_top_factor(n: usize) -> Rational {
    pow(&rat(-16, 27), (n / 6) as u32)
}

/// JSON for self-dual parameters, mirroring [`InvariantParams::to_json`].
pub fn selfdual_to_json(p: &SelfDualParams) -> Value {
    json!({ "n": p.n, "c": p.c.iter().map(rational_to_value).collect::<Vec<_>>() })
}
