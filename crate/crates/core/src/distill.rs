//! One round of magic-state distillation as an exact rational map.
//!
//! With `t = 1 - 2ε` the input Bloch length is `r̄ = t / sqrt 3`, so the
//! stabilizer part `A(1, i r̄)` and the logical part `C(1, i r̄) / sqrt 3` are
//! both polynomials in `ε` with rational coefficients:
//!
//! ```text
//! N(ε) = Σ A_{2j} (-1)^j t^{2j} / 3^j
//! M(ε) = N(ε) + λ Σ C_{2j+1} (-1)^j t^{2j+1} / 3^{j+1}
//! ε_out = M / (2N)
//! ```
//!
//! `λ = ±1` is fixed by the choice of logical operator.

use crate::enums::{EnumError, Enumerator};
use crate::invariants::SignClass;
use crate::poly::{isolate_roots, nonnegative_on, refine_root, sign_of, Poly, Positivity, RootInterval};
use crate::qsqrt3::QSqrt3;
use crate::rational::{big, int, pow, rat, to_decimal, to_f64, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistillError {
    #[error("length {0} is not ≡ ±1 mod 6")]
    WrongClass(usize),
    #[error(transparent)]
    Enumerator(#[from] EnumError),
    #[error("success probability vanishes identically")]
    DegenerateDenominator,
    #[error("N(ε_max) = 0, so the threshold constraint is degenerate")]
    DegenerateAtEpsMax,
}

/// The two admissible logical operators differ by the sign of `C`'s term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LogicalSign {
    Plus,
    Minus,
}

impl LogicalSign {
    pub fn lambda_hat(self) -> i64 {
        match self {
            LogicalSign::Plus => -1,
            LogicalSign::Minus => 1,
        }
    }

    /// The choice that makes `ε_out` vanish at `ε = 0` for good codes.
    pub fn default_for(class: SignClass) -> LogicalSign {
        match class {
            SignClass::Five => LogicalSign::Minus,
            SignClass::One => LogicalSign::Plus,
        }
    }

    pub fn other(self) -> LogicalSign {
        match self {
            LogicalSign::Plus => LogicalSign::Minus,
            LogicalSign::Minus => LogicalSign::Plus,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LogicalSign::Plus => "plus",
            LogicalSign::Minus => "minus",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistillMap {
    pub n: usize,
    pub class: SignClass,
    pub sign: LogicalSign,
    /// Numerator `M(ε)`.
    pub m: Poly,
    /// Half denominator, the success polynomial `N(ε)`.
    pub n_poly: Poly,
}

fn t_poly() -> Poly {
    Poly::linear(int(1), int(-2))
}

/// `Σ_j A_{2j} (-1/3)^j t^{2j}` as a polynomial in ε.
pub fn success_poly(a: &Enumerator) -> Result<Poly, EnumError> {
    if !a.is_even_only() {
        // reuse the signed-evaluation diagnostic
        a.signed_eval(&Rational::zero())?;
    }
    let t2 = t_poly().pow(2);
    let mut acc = Poly::zero();
    let mut power = Poly::one();
    let mut scale = Rational::one();
    for j in (0..=a.n()).step_by(2) {
        let c = a.coeff(j);
        if !c.is_zero() {
            acc = &acc + &power.scale(&(c * &scale));
        }
        power = &power * &t2;
        scale *= rat(-1, 3);
    }
    Ok(acc)
}

/// `Σ_j C_{2j+1} (-1)^j t^{2j+1} / 3^{j+1}` as a polynomial in ε.
pub fn logical_poly(c: &Enumerator) -> Result<Poly, EnumError> {
    if !c.is_odd_only() {
        c.alt_odd_eval(&Rational::zero())?;
    }
    let t = t_poly();
    let t2 = t.pow(2);
    let mut acc = Poly::zero();
    let mut power = t;
    let mut scale = rat(1, 3);
    for j in (1..=c.n()).step_by(2) {
        let coeff = c.coeff(j);
        if !coeff.is_zero() {
            acc = &acc + &power.scale(&(coeff * &scale));
        }
        power = &power * &t2;
        scale *= rat(-1, 3);
    }
    Ok(acc)
}

/// `B` and `C = B - A` for an `[[n, 1]]` stabilizer enumerator.
pub fn dual_and_logical(a: &Enumerator) -> (Enumerator, Enumerator) {
    let size = big(BigInt::from(2).pow(a.n() as u32 - 1));
    let b = a.macwilliams_rational(&size);
    let c = Enumerator::difference(&b, a).expect("same degree");
    (b, c)
}

pub fn build_map(a: &Enumerator) -> Result<DistillMap, DistillError> {
    let class = SignClass::of(a.n()).ok_or(DistillError::WrongClass(a.n()))?;
    build_map_with(a, LogicalSign::default_for(class))
}

pub fn build_map_with(a: &Enumerator, sign: LogicalSign) -> Result<DistillMap, DistillError> {
    let n = a.n();
    let class = SignClass::of(n).ok_or(DistillError::WrongClass(n))?;
    let (_, c) = dual_and_logical(a);
    let n_poly = success_poly(a)?;
    let logical = logical_poly(&c)?;
    let m = &n_poly + &logical.scale(&int(sign.lambda_hat()));
    Ok(DistillMap { n, class, sign, m, n_poly })
}

/// Outcome of looking for the first fixed point in `(0, 1/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Threshold {
    Found(ThresholdReport),
    /// `M - 2εN` has no root in `(0, 1/2)` or vanishes identically.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdReport {
    pub interval: RootInterval,
    /// `ε_out < ε` just below the fixed point.
    pub stable: bool,
}

impl ThresholdReport {
    pub fn estimate(&self) -> Rational {
        self.interval.midpoint()
    }

    pub fn decimal(&self, digits: usize) -> String {
        to_decimal(&self.estimate(), digits)
    }

    pub fn to_json(&self, digits: usize) -> Value {
        json!({
            "lo": self.interval.lo().to_string(),
            "hi": self.interval.hi().to_string(),
            "exact": matches!(self.interval, RootInterval::Exact(_)),
            "decimal": self.decimal(digits),
            "stable": self.stable,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoiseExponent {
    Defined { nu: usize, leading: Rational },
    /// `N(0) = 0`: no output at vanishing noise.
    Useless,
    /// `M ≡ 0`.
    Perfect,
}

impl DistillMap {
    pub fn eps_out(&self, eps: &Rational) -> Option<Rational> {
        let d = self.n_poly.eval(eps) * int(2);
        (!d.is_zero()).then(|| self.m.eval(eps) / d)
    }

    pub fn eps_out_f64(&self, eps: f64) -> f64 {
        self.m.eval_f64(eps) / (2.0 * self.n_poly.eval_f64(eps))
    }

    /// `M - 2εN`; its roots are the fixed points.
    pub fn fixed_point_poly(&self) -> Poly {
        &self.m - &(&Poly::linear(int(0), int(2)) * &self.n_poly)
    }

    pub fn threshold(&self) -> Threshold {
        self.threshold_with_width(&rat(1, 1_000_000_000_000))
    }

    pub fn threshold_with_width(&self, width: &Rational) -> Threshold {
        let p = self.fixed_point_poly();
        if p.is_zero() || self.n_poly.is_zero() {
            return Threshold::None;
        }
        let roots = isolate_roots(&p, &Rational::zero(), &rat(1, 2));
        let Some(first) = roots.first() else {
            return Threshold::None;
        };
        let mut interval = refine_root(&p, first, width);
        // need a rational probe strictly between 0 and the root
        let mut w = width.clone();
        while interval.lo().is_zero() {
            w /= int(2);
            interval = refine_root(&p, &interval, &w);
        }
        let probe = interval.lo() / int(2);
        let stable = p.sign_at(&probe) * self.n_poly.sign_at(&probe) < 0;
        Threshold::Found(ThresholdReport { interval, stable })
    }

    pub fn noise_exponent(&self) -> NoiseExponent {
        if self.m.is_zero() {
            return NoiseExponent::Perfect;
        }
        if self.n_poly.coeff(0).is_zero() {
            return NoiseExponent::Useless;
        }
        let nu = self.m.order_at_zero().expect("nonzero");
        let leading = self.m.coeff(nu) / (self.n_poly.coeff(0) * int(2));
        NoiseExponent::Defined { nu, leading }
    }

    /// `ε_out(ε_max) - ε_max` has the sign of `(M - 2 ε_max N) N` at `ε_max`.
    pub fn eps_max_margin(&self) -> Result<i8, DistillError> {
        let e = QSqrt3::eps_max();
        let nv = self.n_poly.eval_qsqrt3(&e);
        if nv.is_zero() {
            return Err(DistillError::DegenerateAtEpsMax);
        }
        let two_e = &e * &QSqrt3::rational(int(2));
        let p = &self.m.eval_qsqrt3(&e) - &(&two_e * &nv);
        Ok(p.signum() * nv.signum())
    }

    /// Deterministic `(ε, ε_out)` samples on `[0, 1/2]`.
    pub fn curve(&self, grid: usize) -> Vec<(Rational, Option<Rational>)> {
        let steps = grid.max(2) - 1;
        (0..=steps)
            .map(|i| {
                let eps = rat(i as i64, 2 * steps as i64);
                let out = self.eps_out(&eps);
                (eps, out)
            })
            .collect()
    }

    pub fn curve_csv(&self, grid: usize, digits: usize) -> String {
        let mut out = String::from("epsilon,epsilon_out\n");
        for (eps, val) in self.curve(grid) {
            let v = val.map(|v| to_decimal(&v, digits)).unwrap_or_else(|| "nan".into());
            out.push_str(&format!("{},{}\n", to_decimal(&eps, digits), v));
        }
        if let Threshold::Found(t) = self.threshold() {
            out.push_str(&format!("threshold,{}\n", t.decimal(digits)));
        }
        out
    }
}

/// Verdict on the two physical-consistency requirements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumVerdict {
    pub success_nonneg: bool,
    pub threshold_ok_plus: bool,
    pub threshold_ok_minus: bool,
    /// ε in [0, 1] with `N(ε) < 0`.
    pub success_witness: Option<Rational>,
    /// ε ≥ ε_max with `ε_out(ε) < ε_max` for the plus choice.
    pub witness_plus: Option<Rational>,
    pub witness_minus: Option<Rational>,
}

impl QuantumVerdict {
    pub fn threshold_ok(&self, sign: LogicalSign) -> bool {
        match sign {
            LogicalSign::Plus => self.threshold_ok_plus,
            LogicalSign::Minus => self.threshold_ok_minus,
        }
    }

    pub fn passes(&self) -> bool {
        self.success_nonneg && self.threshold_ok_plus && self.threshold_ok_minus
    }

    pub fn to_json(&self) -> Value {
        let w = |x: &Option<Rational>| x.as_ref().map(|v| Value::String(v.to_string())).unwrap_or(Value::Null);
        json!({
            "success_nonneg": self.success_nonneg,
            "threshold_ok_plus": self.threshold_ok_plus,
            "threshold_ok_minus": self.threshold_ok_minus,
            "success_witness": w(&self.success_witness),
            "witness_plus": w(&self.witness_plus),
            "witness_minus": w(&self.witness_minus),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessCheck {
    pub nonneg: bool,
    pub witness: Option<Rational>,
}

/// Decides `N(ε) ≥ 0` on `[0, 1]` exactly.
pub fn check_success_nonneg(a: &Enumerator) -> Result<SuccessCheck, DistillError> {
    let n = success_poly(a)?;
    Ok(match nonnegative_on(&n, &Rational::zero(), &Rational::one()) {
        Positivity::NonNegative => SuccessCheck { nonneg: true, witness: None },
        Positivity::Negative(x) => SuccessCheck { nonneg: false, witness: Some(x) },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdCheck {
    pub ok: bool,
    pub witness: Option<Rational>,
}

/// `q < ε_max` exactly: `3 - 6q > sqrt 3`.
pub fn below_eps_max(q: &Rational) -> bool {
    let s = int(3) - q * int(6);
    s.is_positive() && &s * &s > int(3)
}

/// Rational ε just above ε_max whose output lands strictly inside the
/// magic region.
fn violation_witness(map: &DistillMap) -> Option<Rational> {
    let emax = QSqrt3::eps_max();
    (2..120u32).find_map(|digits| {
        let candidate = upper_decimal(&emax, digits);
        let q = map.eps_out(&candidate)?;
        below_eps_max(&q).then_some(candidate)
    })
}

/// Smallest `k / 10^digits` that exceeds `x`.
fn upper_decimal(x: &QSqrt3, digits: u32) -> Rational {
    let scale = big(BigInt::from(10).pow(digits));
    // bisection on the integer numerator keeps this exact
    let mut lo = BigInt::zero();
    let mut hi = scale.numer().clone();
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        if QSqrt3::rational(Rational::new(mid.clone(), scale.numer().clone())) > *x {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Rational::new(hi, scale.numer().clone())
}

pub fn check_threshold_for(map: &DistillMap) -> Result<ThresholdCheck, DistillError> {
    let margin = map.eps_max_margin()?;
    if margin >= 0 {
        return Ok(ThresholdCheck { ok: true, witness: None });
    }
    Ok(ThresholdCheck { ok: false, witness: violation_witness(map) })
}

/// Threshold verdict for the class's default logical choice.
pub fn check_threshold_constraint(a: &Enumerator) -> Result<ThresholdCheck, DistillError> {
    check_threshold_for(&build_map(a)?)
}

pub fn quantum_verdict(a: &Enumerator) -> Result<QuantumVerdict, DistillError> {
    let s = check_success_nonneg(a)?;
    let plus = check_threshold_for(&build_map_with(a, LogicalSign::Plus)?)?;
    let minus = check_threshold_for(&build_map_with(a, LogicalSign::Minus)?)?;
    Ok(QuantumVerdict {
        success_nonneg: s.nonneg,
        threshold_ok_plus: plus.ok,
        threshold_ok_minus: minus.ok,
        success_witness: s.witness,
        witness_plus: plus.witness,
        witness_minus: minus.witness,
    })
}

/// Rational pieces of the threshold constraint, all linear in `A`:
/// `N(0)`, `N(ε_max)` and `D` with `M - 2 ε_max N = (N(ε_max) + λ D)/sqrt 3`.
pub fn eps_max_parts(a: &Enumerator) -> (Rational, Rational, Rational) {
    let (_, c) = dual_and_logical(a);
    let mut n0 = Rational::zero();
    let mut nmax = Rational::zero();
    for j in (0..=a.n()).step_by(2) {
        n0 += a.coeff(j) * pow(&rat(-1, 3), (j / 2) as u32);
        nmax += a.coeff(j) * pow(&rat(-1, 9), (j / 2) as u32);
    }
    let mut d = Rational::zero();
    for j in (1..=a.n()).step_by(2) {
        let sign = if (j / 2) % 2 == 0 { int(1) } else { int(-1) };
        d += c.coeff(j) * sign / big(BigInt::from(3).pow(j as u32));
    }
    (n0, nmax, d)
}

/// Nonnegative Bernstein coefficients of `p` on `[0, 1]`, if they exist.
pub fn bernstein_certificate(p: &Poly, degree: usize) -> Option<Vec<Rational>> {
    let b = p.to_bernstein(degree)?;
    b.iter().all(|c| !c.is_negative()).then_some(b)
}

/// `A(1, i t / sqrt 3)` as a polynomial in `u = t^2`, for pure-state checks.
pub fn pure_state_poly(a: &Enumerator) -> Result<Poly, EnumError> {
    a.signed_eval(&Rational::zero())?;
    let coeffs = (0..=a.n() / 2)
        .map(|j| a.coeff(2 * j) * pow(&rat(-1, 3), j as u32))
        .collect();
    Ok(Poly::new(coeffs))
}

/// `A(1, i (1 - 2ε) / sqrt 3) ≥ 0` for all ε in `[0, 1]`.
pub fn check_state_nonneg(a: &Enumerator) -> Result<SuccessCheck, EnumError> {
    let p = pure_state_poly(a)?;
    Ok(match nonnegative_on(&p, &Rational::zero(), &Rational::one()) {
        Positivity::NonNegative => SuccessCheck { nonneg: true, witness: None },
        Positivity::Negative(u) => SuccessCheck { nonneg: false, witness: Some(u) },
    })
}

pub fn sign_name(x: &Rational) -> &'static str {
    match sign_of(x) {
        1 => "positive",
        -1 => "negative",
        _ => "zero",
    }
}

pub fn approx(x: &Rational) -> f64 {
    to_f64(x)
}
