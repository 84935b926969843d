//! Homogeneous bivariate weight enumerators `Σ A_j x^{n-j} y^j`.
//!
//! Coefficients are kept as exact rationals so the same type carries code
//! enumerators (integers) and intermediate points of LP searches.

use crate::poly::Poly;
use crate::rational::{big, binomial, int, is_integral, rational_to_value, value_to_rational, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("codeword count {given} does not match the coefficient sum {sum}")]
    CountMismatch { given: Box<Rational>, sum: Box<Rational> },
    #[error("coefficient of y^{j} is {value}, not an integer")]
    NonIntegral { j: usize, value: Rational },
    #[error("coefficient of y^{j} is negative ({value})")]
    Negative { j: usize, value: Rational },
    #[error("coefficient of y^{j} should vanish but is {value}")]
    UnexpectedTerm { j: usize, value: Rational },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("malformed enumerator: {0}")]
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Enumerator {
    coeffs: Vec<Rational>,
}

impl Enumerator {
    /// `coeffs[j]` multiplies `x^{n-j} y^j`; the degree is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "an enumerator has at least one coefficient");
        Enumerator { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Enumerator::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        Enumerator::new(counts.iter().map(|&c| big(BigInt::from(c))).collect())
    }

    /// Sparse form: `terms` lists `(j, A_j)`.
    pub fn from_terms(n: usize, terms: &[(usize, i64)]) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        for &(j, a) in terms {
            coeffs[j] += int(a);
        }
        Enumerator::new(coeffs)
    }

    /// Homogenizes a polynomial in `y` (with `x = 1`) to degree `n`.
    pub fn from_poly(n: usize, p: &Poly) -> Result<Self, EnumError> {
        if let Some(d) = p.degree() {
            if d > n {
                return Err(EnumError::DegreeMismatch(d, n));
            }
        }
        Ok(Enumerator::new((0..=n).map(|j| p.coeff(j)).collect()))
    }

    /// `x^n`, the enumerator of the zero code.
    pub fn monomial_x(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[0] = Rational::one();
        Enumerator::new(coeffs)
    }

    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[j]
    }

    /// `A(1, y)` as a polynomial in `y`.
    pub fn as_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    pub fn total(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(is_integral)
    }

    pub fn first_negative(&self) -> Option<(usize, &Rational)> {
        self.coeffs.iter().enumerate().find(|(_, c)| c.is_negative())
    }

    fn parity_violation(&self, parity: usize) -> Option<usize> {
        (0..=self.n()).find(|&j| j % 2 == parity && !self.coeffs[j].is_zero())
    }

    pub fn is_even_only(&self) -> bool {
        self.parity_violation(1).is_none()
    }

    pub fn is_odd_only(&self) -> bool {
        self.parity_violation(0).is_none()
    }

    /// `|C|^{-1} A(x + 3y, x - y)` with no validity checks.
    pub fn macwilliams_rational(&self, codeword_count: &Rational) -> Enumerator {
        let n = self.n();
        let mut out = vec![Rational::zero(); n + 1];
        // row[i] = coefficients of (x+3y)^{n-j} (x-y)^j, built by convolution
        let plus: Vec<BigInt> = (0..=n as u64)
            .map(|i| binomial(n as u64, i) * BigInt::from(3).pow(i as u32))
            .collect();
        let mut row = plus;
        for j in 0..=n {
            if !self.coeffs[j].is_zero() {
                for (o, r) in out.iter_mut().zip(&row) {
                    *o += &self.coeffs[j] * big(r.clone());
                }
            }
            if j < n {
                row = step_row(&row, n - j);
            }
        }
        for o in out.iter_mut() {
            *o /= codeword_count;
        }
        Enumerator::new(out)
    }

    /// Dual enumerator; every output coefficient must be an integer.
    pub fn macwilliams(&self, codeword_count: &Rational) -> Result<Enumerator, EnumError> {
        let sum = self.total();
        if &sum != codeword_count {
            return Err(EnumError::CountMismatch { given: Box::new(codeword_count.clone()), sum: Box::new(sum) });
        }
        let b = self.macwilliams_rational(codeword_count);
        if let Some((j, value)) = b.coeffs.iter().enumerate().find(|(_, c)| !is_integral(c)) {
            return Err(EnumError::NonIntegral { j, value: value.clone() });
        }
        Ok(b)
    }

    /// `C = B - A`, the enumerator of logical operators.
    pub fn logical_enumerator(a: &Enumerator, b: &Enumerator) -> Result<Enumerator, EnumError> {
        let c = Enumerator::difference(b, a)?;
        if let Some((j, value)) = c.first_negative() {
            return Err(EnumError::Negative { j, value: value.clone() });
        }
        Ok(c)
    }

    pub fn difference(lhs: &Enumerator, rhs: &Enumerator) -> Result<Enumerator, EnumError> {
        if lhs.n() != rhs.n() {
            return Err(EnumError::DegreeMismatch(lhs.n(), rhs.n()));
        }
        Ok(Enumerator::new(lhs.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x - y).collect()))
    }

    /// `A(1, i r̄) = Σ A_{2j} (-r̄²)^j`.
    pub fn signed_eval(&self, rbar_sq: &Rational) -> Result<Rational, EnumError> {
        if let Some(j) = self.parity_violation(1) {
            return Err(EnumError::UnexpectedTerm { j, value: self.coeffs[j].clone() });
        }
        let minus = -rbar_sq;
        let mut acc = Rational::zero();
        let mut power = Rational::one();
        for j in (0..=self.n()).step_by(2) {
            acc += &self.coeffs[j] * &power;
            power *= &minus;
        }
        Ok(acc)
    }

    /// `Σ C_{2j+1} (-1)^j t^{2j+1}`, the real part of `-i C(1, i t)`.
    pub fn alt_odd_eval(&self, t: &Rational) -> Result<Rational, EnumError> {
        if let Some(j) = self.parity_violation(0) {
            return Err(EnumError::UnexpectedTerm { j, value: self.coeffs[j].clone() });
        }
        let t2 = -(t * t);
        let mut acc = Rational::zero();
        let mut power = t.clone();
        for j in (1..=self.n()).step_by(2) {
            acc += &self.coeffs[j] * &power;
            power *= &t2;
        }
        Ok(acc)
    }

    /// Canonical dedup key: the exact coefficient list.
    pub fn hash_key(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("{}:{}", self.n(), parts.join(","))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n(),
            "coeffs": self.coeffs.iter().map(rational_to_value).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self, EnumError> {
        let coeffs = value
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| EnumError::Malformed("missing `coeffs` array".into()))?;
        let coeffs: Vec<Rational> = coeffs
            .iter()
            .map(|c| value_to_rational(c).ok_or_else(|| EnumError::Malformed(format!("bad coefficient {c}"))))
            .collect::<Result<_, _>>()?;
        if coeffs.is_empty() {
            return Err(EnumError::Malformed("empty coefficient list".into()));
        }
        let e = Enumerator::new(coeffs);
        if let Some(n) = value.get("n") {
            let n = n.as_u64().ok_or_else(|| EnumError::Malformed("`n` must be an integer".into()))?;
            if n as usize != e.n() {
                return Err(EnumError::DegreeMismatch(n as usize, e.n()));
            }
        }
        Ok(e)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,A_j\n");
        for (j, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{j},{c}\n"));
        }
        out
    }
}

/// Turns the coefficients of `(x+3y)^m (x-y)^j` into those of
/// `(x+3y)^{m-1} (x-y)^{j+1}`: divide by `(x+3y)`, multiply by `(x-y)`.
fn step_row(row: &[BigInt], m: usize) -> Vec<BigInt> {
    debug_assert!(m >= 1);
    // synthetic division by (x + 3y) in y-ascending order
    let mut quotient = vec![BigInt::zero(); row.len() - 1];
    let mut carry = BigInt::zero();
    for i in 0..row.len() - 1 {
        let q: BigInt = &row[i] - &carry * 3u32;
        carry = q.clone();
        quotient[i] = q;
    }
    let mut out = vec![BigInt::zero(); row.len()];
    for (i, q) in quotient.iter().enumerate() {
        out[i] += q;
        out[i + 1] -= q;
    }
    out
}

impl fmt::Display for Enumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}")?,
            }
            match j {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn five_qubit_dual() {
        let a = Enumerator::from_terms(5, &[(0, 1), (4, 15)]);
        let b = a.macwilliams(&int(16)).unwrap();
        assert_eq!(b, Enumerator::from_ints(&[1, 0, 0, 30, 15, 18]));
        let c = Enumerator::logical_enumerator(&a, &b).unwrap();
        assert_eq!(c, Enumerator::from_terms(5, &[(3, 30), (5, 18)]));
        assert!(c.is_odd_only());
    }

    #[test]
    fn zero_code_transform_is_full_space() {
        let b = Enumerator::monomial_x(4).macwilliams(&int(1)).unwrap();
        assert_eq!(b, Enumerator::from_ints(&[1, 12, 54, 108, 81]));
    }

    #[test]
    fn count_mismatch_and_non_integral() {
        let a = Enumerator::from_terms(5, &[(0, 1), (4, 15)]);
        assert!(matches!(a.macwilliams(&int(8)), Err(EnumError::CountMismatch { .. })));
        let bogus = Enumerator::from_terms(2, &[(0, 1), (2, 2)]);
        assert!(matches!(bogus.macwilliams(&int(3)), Err(EnumError::NonIntegral { j: 1, .. })));
    }

    #[test]
    fn signed_evaluations() {
        let a = Enumerator::from_terms(5, &[(0, 1), (4, 15)]);
        assert_eq!(a.signed_eval(&rat(1, 2)).unwrap(), rat(1, 1) + rat(15, 4));
        assert_eq!(Enumerator::monomial_x(7).signed_eval(&rat(3, 7)).unwrap(), int(1));
        assert!(Enumerator::from_ints(&[1, 1]).signed_eval(&int(1)).is_err());

        let c = Enumerator::from_terms(5, &[(3, 30), (5, 18)]);
        let r = rat(1, 3);
        let expect = -int(30) * &r * &r * &r + int(18) * crate::rational::pow(&r, 5);
        assert_eq!(c.alt_odd_eval(&r).unwrap(), expect);
        assert_eq!(Enumerator::from_terms(7, &[(7, 1)]).alt_odd_eval(&int(1)).unwrap(), int(-1));
        assert_eq!(Enumerator::from_terms(5, &[]).alt_odd_eval(&int(2)).unwrap(), int(0));
    }

    #[test]
    fn json_round_trip() {
        let e = Enumerator::new(vec![int(1), rat(-3, 2), int(0)]);
        let back = Enumerator::from_json(&e.to_json()).unwrap();
        assert_eq!(back, e);
        assert!(Enumerator::from_json(&json!({"n": 3, "coeffs": [1, 2]})).is_err());
    }

    #[test]
    fn display() {
        let e = Enumerator::from_ints(&[1, 0, -30, 0, 45, 0]);
        assert_eq!(e.to_string(), "1 - 30y^2 + 45y^4");
        assert_eq!(Enumerator::from_ints(&[0, 1]).to_string(), "y");
    }
}
