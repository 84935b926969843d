//! Exact arithmetic in the ordered field `Q[sqrt 3]`.
//!
//! The face of the stabilizer octahedron sits at `eps_max = (3 - sqrt 3)/6`,
//! so every verdict that compares against it is decided here.

use crate::rational::{int, rat, Rational};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// `a + b * sqrt(3)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSqrt3 {
    pub a: Rational,
    pub b: Rational,
}

impl QSqrt3 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt3 { a, b }
    }

    pub fn zero() -> Self {
        QSqrt3::new(Rational::zero(), Rational::zero())
    }

    pub fn rational(a: Rational) -> Self {
        QSqrt3::new(a, Rational::zero())
    }

    pub fn sqrt3() -> Self {
        QSqrt3::new(Rational::zero(), int(1))
    }

    /// `(1 - 1/sqrt 3)/2 = 1/2 - sqrt(3)/6`
    pub fn eps_max() -> Self {
        QSqrt3::new(rat(1, 2), rat(-1, 6))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign: compares `a^2` against `3 b^2` when the parts disagree.
    pub fn signum(&self) -> i8 {
        let sa = sign(&self.a);
        let sb = sign(&self.b);
        if sa >= 0 && sb >= 0 {
            return if sa == 0 && sb == 0 { 0 } else { 1 };
        }
        if sa <= 0 && sb <= 0 {
            return -1;
        }
        let a2 = &self.a * &self.a;
        let b2 = &self.b * &self.b * int(3);
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn conjugate(&self) -> Self {
        QSqrt3::new(self.a.clone(), -&self.b)
    }

    /// `a^2 - 3 b^2`
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * int(3)
    }

    pub fn to_f64(&self) -> f64 {
        crate::rational::to_f64(&self.a) + crate::rational::to_f64(&self.b) * 3f64.sqrt()
    }
}

fn sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QSqrt3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt3 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for QSqrt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})*sqrt(3)", self.a, self.b)
    }
}

impl Add for &QSqrt3 {
    type Output = QSqrt3;
    fn add(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &QSqrt3 {
    type Output = QSqrt3;
    fn mul(self, rhs: &QSqrt3) -> QSqrt3 {
        QSqrt3::new(
            &self.a * &rhs.a + &self.b * &rhs.b * int(3),
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Div for &QSqrt3 {
    type Output = QSqrt3;
    fn div(self, rhs: &QSqrt3) -> QSqrt3 {
        let norm = rhs.norm();
        assert!(!norm.is_zero(), "division by zero in Q[sqrt 3]");
        let num = self * &rhs.conjugate();
        QSqrt3::new(num.a / &norm, num.b / norm)
    }
}

impl Neg for &QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3::new(-&self.a, -&self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs_near_cancellation() {
        // 7 - 4 sqrt 3 = 0.0717...
        assert_eq!(QSqrt3::new(int(7), int(-4)).signum(), 1);
        // 6 - 4 sqrt 3 < 0
        assert_eq!(QSqrt3::new(int(6), int(-4)).signum(), -1);
        assert_eq!(QSqrt3::new(int(-7), int(4)).signum(), -1);
        assert_eq!(QSqrt3::zero().signum(), 0);
    }

    #[test]
    fn eps_max_value() {
        let e = QSqrt3::eps_max();
        assert!((e.to_f64() - 0.5 * (1.0 - 1.0 / 3f64.sqrt())).abs() < 1e-15);
        // 1 - 2 eps_max = 1/sqrt 3, whose square is 1/3
        let t = &QSqrt3::rational(int(1)) - &(&e * &QSqrt3::rational(int(2)));
        assert_eq!(&t * &t, QSqrt3::rational(rat(1, 3)));
    }

    #[test]
    fn division_inverts_multiplication() {
        let x = QSqrt3::new(rat(2, 3), int(5));
        let y = QSqrt3::new(int(-1), rat(1, 7));
        assert_eq!(&(&x * &y) / &y, x);
    }
}
