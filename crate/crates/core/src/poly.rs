//! Univariate polynomials over the rationals, with Sturm-sequence root
//! isolation and Bernstein-basis conversion on `[0, 1]`.

use crate::qsqrt3::QSqrt3;
use crate::rational::{binomial, int, Rational};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial, coefficient `i` multiplies `x^i`. No trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    /// `a + b x`
    pub fn linear(a: Rational, b: Rational) -> Self {
        Poly::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Multiplicity of the root at zero; `None` for the zero polynomial.
    pub fn order_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_qsqrt3(&self, x: &QSqrt3) -> QSqrt3 {
        let mut acc = QSqrt3::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &QSqrt3::rational(c.clone());
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + crate::rational::to_f64(c))
    }

    /// Sign of `p(x)` as -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign_of(&self.eval(x))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - d];
        for i in (0..quot.len()).rev() {
            let factor = &rem[i + d] / &lead;
            if factor.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &factor * dc;
            }
            quot[i] = factor;
        }
        rem.truncate(d);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(lead) => self.scale(&(Rational::one() / lead)),
            None => Poly::zero(),
        }
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same real roots, all simple.
    pub fn square_free(&self) -> Poly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Coefficients in the degree-`degree` Bernstein basis on `[0, 1]`.
    pub fn to_bernstein(&self, degree: usize) -> Option<Vec<Rational>> {
        if self.degree().is_some_and(|d| d > degree) {
            return None;
        }
        let n = degree as u64;
        let out = (0..=degree)
            .map(|j| {
                (0..=j)
                    .map(|k| {
                        let w = Rational::new(binomial(j as u64, k as u64), binomial(n, k as u64));
                        w * self.coeff(k)
                    })
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect();
        Some(out)
    }
}

pub fn sign_of(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Sturm chain of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    /// Builds the chain for the square-free part of `p`.
    pub fn new(p: &Poly) -> Self {
        let p0 = p.square_free();
        let mut chain = vec![p0.clone()];
        let mut prev = p0.clone();
        let mut cur = p0.derivative();
        while !cur.is_zero() {
            chain.push(cur.clone());
            let (_, r) = prev.div_rem(&cur);
            prev = cur;
            cur = -&r;
        }
        SturmChain { chain }
    }

    pub fn base(&self) -> &Poly {
        &self.chain[0]
    }

    pub fn sign_variations(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        if self.chain[0].is_zero() {
            return 0;
        }
        self.sign_variations(a).saturating_sub(self.sign_variations(b))
    }

    /// Number of distinct real roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        let n = self.count_half_open(a, b);
        if n > 0 && self.chain[0].sign_at(b) == 0 {
            n - 1
        } else {
            n
        }
    }
}

/// An isolated real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootInterval {
    /// The root is exactly this rational.
    Exact(Rational),
    /// Exactly one root lies in the open interval.
    Open(Rational, Rational),
}

impl RootInterval {
    pub fn lo(&self) -> &Rational {
        match self {
            RootInterval::Exact(r) => r,
            RootInterval::Open(a, _) => a,
        }
    }

    pub fn hi(&self) -> &Rational {
        match self {
            RootInterval::Exact(r) => r,
            RootInterval::Open(_, b) => b,
        }
    }

    pub fn width(&self) -> Rational {
        self.hi() - self.lo()
    }

    pub fn midpoint(&self) -> Rational {
        (self.lo() + self.hi()) / int(2)
    }
}

/// Distinct real roots of `p` in the open interval `(lo, hi)`, in increasing
/// order. The zero polynomial has no isolated roots and yields an empty list.
pub fn isolate_roots(p: &Poly, lo: &Rational, hi: &Rational) -> Vec<RootInterval> {
    if p.is_zero() || lo >= hi {
        return Vec::new();
    }
    let sturm = SturmChain::new(p);
    let mut out = Vec::new();
    isolate_rec(&sturm, lo.clone(), hi.clone(), &mut out);
    out
}

fn isolate_rec(sturm: &SturmChain, a: Rational, b: Rational, out: &mut Vec<RootInterval>) {
    let n = sturm.count_open(&a, &b);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(RootInterval::Open(a, b));
        return;
    }
    let m = (&a + &b) / int(2);
    isolate_rec(sturm, a, m.clone(), out);
    if sturm.base().sign_at(&m) == 0 {
        out.push(RootInterval::Exact(m.clone()));
    }
    isolate_rec(sturm, m, b, out);
}

/// Shrinks an isolating interval of a root of `p` until its width is at most
/// `width`.
pub fn refine_root(p: &Poly, root: &RootInterval, width: &Rational) -> RootInterval {
    let sturm = SturmChain::new(p);
    let mut current = root.clone();
    while let RootInterval::Open(a, b) = &current {
        if &(b - a) <= width {
            break;
        }
        let m = (a + b) / int(2);
        if sturm.base().sign_at(&m) == 0 {
            current = RootInterval::Exact(m);
        } else if sturm.count_open(a, &m) == 1 {
            current = RootInterval::Open(a.clone(), m);
        } else {
            current = RootInterval::Open(m, b.clone());
        }
    }
    current
}

/// Result of deciding `p >= 0` on a closed interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Positivity {
    NonNegative,
    /// A rational point where `p` is strictly negative.
    Negative(Rational),
}

/// Decides `p(x) >= 0` for every `x` in `[lo, hi]` exactly.
///
/// Between consecutive distinct roots the sign is constant, so it suffices to
/// test every interval endpoint, every exact root neighbourhood and one point
/// in each gap.
pub fn nonnegative_on(p: &Poly, lo: &Rational, hi: &Rational) -> Positivity {
    if p.is_zero() {
        return Positivity::NonNegative;
    }
    let roots = isolate_roots(p, lo, hi);
    let mut points = vec![lo.clone(), hi.clone()];
    for r in &roots {
        points.push(r.lo().clone());
        points.push(r.hi().clone());
    }
    points.sort();
    points.dedup();
    let mut probes = points.clone();
    for pair in points.windows(2) {
        probes.push((&pair[0] + &pair[1]) / int(2));
    }
    probes.sort();
    for x in probes {
        if p.sign_at(&x) < 0 {
            return Positivity::Negative(x);
        }
    }
    Positivity::NonNegative
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = Poly::from_ints(&[1, 1]); // x + 1
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Poly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let g = a.gcd(&Poly::from_ints(&[1, 2, 1]));
        assert_eq!(g, Poly::from_ints(&[1, 1]));
    }

    #[test]
    fn square_free_drops_multiplicity() {
        let p = &Poly::from_ints(&[-1, 1]).pow(3) * &Poly::from_ints(&[2, 1]);
        let sf = p.square_free();
        assert_eq!(sf.degree(), Some(2));
    }

    #[test]
    fn sturm_counts_roots() {
        // (x - 1/4)(x - 1/2)(x - 3)
        let p = &(&Poly::linear(rat(-1, 4), int(1)) * &Poly::linear(rat(-1, 2), int(1)))
            * &Poly::linear(int(-3), int(1));
        let s = SturmChain::new(&p);
        assert_eq!(s.count_half_open(&int(0), &int(1)), 2);
        assert_eq!(s.count_open(&int(0), &rat(1, 2)), 1);
        assert_eq!(s.count_half_open(&int(0), &int(4)), 3);
    }

    #[test]
    fn isolation_reports_exact_dyadic_roots() {
        let p = &Poly::linear(rat(-1, 2), int(1)) * &Poly::linear(rat(-1, 3), int(1));
        let roots = isolate_roots(&p, &int(0), &int(1));
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().any(|r| *r == RootInterval::Exact(rat(1, 2))));
    }

    #[test]
    fn refinement_brackets_sqrt2() {
        let p = Poly::from_ints(&[-2, 0, 1]);
        let roots = isolate_roots(&p, &int(0), &int(2));
        assert_eq!(roots.len(), 1);
        let tight = refine_root(&p, &roots[0], &rat(1, 1_000_000_000));
        let mid = crate::rational::to_f64(&tight.midpoint());
        assert!((mid - 2f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn positivity_with_double_root() {
        // (x - 1/3)^2 touches zero but never goes negative
        let p = Poly::linear(rat(-1, 3), int(1)).pow(2);
        assert_eq!(nonnegative_on(&p, &int(0), &int(1)), Positivity::NonNegative);
        let q = Poly::linear(rat(-1, 2), int(1));
        match nonnegative_on(&q, &int(0), &int(1)) {
            Positivity::Negative(x) => assert!(q.eval(&x) < Rational::zero()),
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn bernstein_of_constant() {
        let b = Poly::one().to_bernstein(4).unwrap();
        assert!(b.iter().all(|c| c.is_one()));
        // x in degree 2: coefficients 0, 1/2, 1
        let b = Poly::x().to_bernstein(2).unwrap();
        assert_eq!(b, vec![int(0), rat(1, 2), int(1)]);
    }
}
