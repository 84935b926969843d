//! Dense-matrix cross-check of the enumerator formulas.
//!
//! Projectors are built directly from signed Pauli groups as `2^n x 2^n`
//! matrices, either over Gaussian rationals (exact) or `Complex<f64>`.
//! Qubit `q` of a word is bit `n-1-q` of a basis index, so the first letter
//! of a Pauli string acts on the most significant bit.

use crate::distill::LogicalSign;
use crate::gf4core::{Gf4, Gf4Code, Gf4Error, Gf4Vector, SignedPauli, DEFAULT_MAX_DIMENSION};
use crate::rational::{to_f64, Rational};
use num_complex::Complex;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::HashMap;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Largest register the oracle will build.
pub const MAX_QUBITS: usize = 12;
/// Up to this size the default mode is exact.
pub const EXACT_QUBITS: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{0} qubits exceeds the dense limit of {MAX_QUBITS}")]
    TooLarge(usize),
    #[error("expected {expected} group elements, got {got}")]
    WrongGroupSize { expected: usize, got: usize },
    #[error("word has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("{0} and {1} anticommute")]
    NonCommuting(String, String),
    #[error("signs are not closed under multiplication at {0}")]
    InconsistentSigns(String),
    #[error("{0} does not commute with the projector")]
    NotLogical(String),
    #[error(transparent)]
    Code(#[from] Gf4Error),
}

/// Field operations needed by the dense routines.
pub trait Scalar:
    Clone + Send + Sync + Debug + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn i() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn re_f64(&self) -> f64;
    fn im_f64(&self) -> f64;
    fn conj(&self) -> Self;
}

pub type Exact = Complex<Rational>;
pub type Float = Complex<f64>;

impl Scalar for Exact {
    fn i() -> Self {
        Complex::new(Rational::zero(), Rational::one())
    }
    fn from_rational(r: &Rational) -> Self {
        Complex::new(r.clone(), Rational::zero())
    }
    fn re_f64(&self) -> f64 {
        to_f64(&self.re)
    }
    fn im_f64(&self) -> f64 {
        to_f64(&self.im)
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
}

impl Scalar for Float {
    fn i() -> Self {
        Complex::new(0.0, 1.0)
    }
    fn from_rational(r: &Rational) -> Self {
        Complex::new(to_f64(r), 0.0)
    }
    fn re_f64(&self) -> f64 {
        self.re
    }
    fn im_f64(&self) -> f64 {
        self.im
    }
    fn conj(&self) -> Self {
        Complex::new(self.re, -self.im)
    }
}

fn i_pow<T: Scalar>(p: u8) -> T {
    match p % 4 {
        0 => T::one(),
        1 => T::i(),
        2 => -T::one(),
        _ => -T::i(),
    }
}

/// Pauli word times `i^phase`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhasedPauli {
    pub word: Gf4Vector,
    pub phase: u8,
}

impl PhasedPauli {
    pub fn new(word: Gf4Vector, phase: u8) -> Self {
        PhasedPauli { word, phase: phase % 4 }
    }

    pub fn identity(n: usize) -> Self {
        PhasedPauli::new(Gf4Vector::zero(n), 0)
    }

    pub fn from_signed(p: &SignedPauli) -> Self {
        PhasedPauli::new(p.word, if p.sign > 0 { 0 } else { 2 })
    }
}

/// `(X-or-Y flip mask, Z-or-Y mask, Y count)` of a word on `n` qubits.
fn masks(word: &Gf4Vector) -> (usize, usize, u32) {
    let n = word.len();
    let (mut flip, mut zmask, mut ys) = (0usize, 0usize, 0u32);
    for q in 0..n {
        let bit = 1usize << (n - 1 - q);
        match word.get(q) {
            Gf4::ONE => flip |= bit,
            Gf4::OMEGA => zmask |= bit,
            Gf4::OMEGA2 => {
                flip |= bit;
                zmask |= bit;
                ys += 1;
            }
            _ => {}
        }
    }
    (flip, zmask, ys)
}

/// `P|x> = i^phase |x ^ flip>`, using `Y|b> = i (-1)^b |1-b>`.
fn action(flip: usize, zmask: usize, ys: u32, x: usize) -> (usize, u8) {
    let minus = (x & zmask).count_ones();
    (x ^ flip, ((ys + 2 * minus) % 4) as u8)
}

/// Phase of the single-qubit product `a * b` as a power of `i`.
fn site_phase(a: Gf4, b: Gf4) -> u8 {
    let order = |g: Gf4| match g {
        Gf4::ONE => 0,
        Gf4::OMEGA2 => 1,
        Gf4::OMEGA => 2,
        _ => 3,
    };
    if a.is_zero() || b.is_zero() || a == b {
        return 0;
    }
    // X Y = iZ, Y Z = iX, Z X = iY
    if (order(a) + 1) % 3 == order(b) {
        1
    } else {
        3
    }
}

fn multiply(a: &PhasedPauli, b: &PhasedPauli) -> PhasedPauli {
    let mut phase = a.phase + b.phase;
    for q in 0..a.word.len() {
        phase += site_phase(a.word.get(q), b.word.get(q));
    }
    PhasedPauli::new(a.word + b.word, phase)
}

fn commute(a: &Gf4Vector, b: &Gf4Vector) -> bool {
    let (alo, ahi) = a.planes();
    let (blo, bhi) = b.planes();
    let clash = (alo | ahi) & (blo | bhi) & ((alo ^ blo) | (ahi ^ bhi));
    clash.count_ones() % 2 == 0
}

#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator<T> {
    pub n: usize,
    pub data: Vec<T>,
}

impl<T: Scalar> DenseOperator<T> {
    pub fn dim(&self) -> usize {
        1usize << self.n
    }

    pub fn zeros(n: usize) -> Self {
        DenseOperator { n, data: vec![T::zero(); 1usize << (2 * n)] }
    }

    pub fn identity(n: usize) -> Self {
        let mut op = Self::zeros(n);
        let d = op.dim();
        for i in 0..d {
            op.data[i * d + i] = T::one();
        }
        op
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.data[row * self.dim() + col]
    }

    pub fn trace(&self) -> T {
        let d = self.dim();
        (0..d).fold(T::zero(), |acc, i| acc + self.data[i * d + i].clone())
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim();
        let data = (0..d * d).map(|k| self.data[(k % d) * d + k / d].conj()).collect();
        DenseOperator { n: self.n, data }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        let d = self.dim();
        let mut data = vec![T::zero(); d * d];
        data.par_chunks_mut(d).enumerate().for_each(|(r, row)| {
            for k in 0..d {
                let a = &self.data[r * d + k];
                if a.is_zero() {
                    continue;
                }
                for (c, out) in row.iter_mut().enumerate() {
                    let b = &other.data[k * d + c];
                    if !b.is_zero() {
                        *out = out.clone() + a.clone() * b.clone();
                    }
                }
            }
        });
        DenseOperator { n: self.n, data }
    }

    /// Largest entrywise deviation from `other`, in `f64`.
    pub fn distance(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let d = a.clone() - b.clone();
                d.re_f64().abs().max(d.im_f64().abs())
            })
            .fold(0.0, f64::max)
    }

    /// `U^{⊗n} A (U^{⊗n})^†` for a single-qubit `U`.
    pub fn conjugate_local(&self, u: &[[T; 2]; 2]) -> Self {
        let d = self.dim();
        let ud = [[u[0][0].conj(), u[1][0].conj()], [u[0][1].conj(), u[1][1].conj()]];
        let mut cur = self.data.clone();
        for q in 0..self.n {
            let bit = 1usize << (self.n - 1 - q);
            let mut next = vec![T::zero(); d * d];
            // left multiply by U on qubit q
            for r in 0..d {
                let b = usize::from(r & bit != 0);
                let r0 = r & !bit;
                for c in 0..d {
                    let v = u[b][0].clone() * cur[r0 * d + c].clone() + u[b][1].clone() * cur[(r0 | bit) * d + c].clone();
                    next[r * d + c] = v;
                }
            }
            // right multiply by U^† on qubit q
            for r in 0..d {
                for c in 0..d {
                    let b = usize::from(c & bit != 0);
                    let c0 = c & !bit;
                    cur[r * d + c] =
                        next[r * d + c0].clone() * ud[0][b].clone() + next[r * d + (c0 | bit)].clone() * ud[1][b].clone();
                }
            }
        }
        DenseOperator { n: self.n, data: cur }
    }

    /// The matrix of a phased Pauli word.
    pub fn pauli(p: &PhasedPauli) -> Self {
        let n = p.word.len();
        let mut op = Self::zeros(n);
        let d = op.dim();
        let (flip, zmask, ys) = masks(&p.word);
        for x in 0..d {
            let (y, ph) = action(flip, zmask, ys, x);
            op.data[y * d + x] = i_pow(ph + p.phase);
        }
        op
    }
}

/// Which arithmetic a projector is built in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn default_for(n: usize) -> Mode {
        if n <= EXACT_QUBITS {
            Mode::Exact
        } else {
            Mode::Float
        }
    }
}

/// Picks an independent generating set and checks that every element times
/// every generator lands on a listed element with the matching sign.
fn check_group(paulis: &[SignedPauli]) -> Result<(), OracleError> {
    let lookup: HashMap<Gf4Vector, i8> = paulis.iter().map(|p| (p.word, p.sign)).collect();
    let n = paulis[0].word.len();
    if lookup.get(&Gf4Vector::zero(n)) != Some(&1) {
        return Err(OracleError::InconsistentSigns("identity".into()));
    }
    let mut span: Vec<Gf4Vector> = vec![Gf4Vector::zero(n)];
    let mut gens = Vec::new();
    for p in paulis {
        if span.contains(&p.word) {
            continue;
        }
        let grown: Vec<Gf4Vector> = span.iter().map(|w| *w + p.word).collect();
        span.extend(grown);
        gens.push(PhasedPauli::from_signed(p));
    }
    for p in paulis {
        let pp = PhasedPauli::from_signed(p);
        for g in &gens {
            if !commute(&p.word, &g.word) {
                return Err(OracleError::NonCommuting(p.to_string(), g.word.pauli_string()));
            }
            let prod = multiply(&pp, g);
            let expected = match lookup.get(&prod.word) {
                Some(1) => 0,
                Some(_) => 2,
                None => return Err(OracleError::InconsistentSigns(prod.word.pauli_string())),
            };
            if prod.phase != expected {
                return Err(OracleError::InconsistentSigns(prod.word.pauli_string()));
            }
        }
    }
    Ok(())
}

/// `Π = 2^{-(n-k)} Σ λ(P) P` over a full signed stabilizer group.
pub fn build_projector<T: Scalar>(paulis: &[SignedPauli], n: usize, k: usize) -> Result<DenseOperator<T>, OracleError> {
    if n > MAX_QUBITS {
        return Err(OracleError::TooLarge(n));
    }
    let expected = 1usize << (n - k);
    if paulis.len() != expected {
        return Err(OracleError::WrongGroupSize { expected, got: paulis.len() });
    }
    if let Some(p) = paulis.iter().find(|p| p.word.len() != n) {
        return Err(OracleError::LengthMismatch { expected: n, got: p.word.len() });
    }
    check_group(paulis)?;
    let d = 1usize << n;
    let terms: Vec<(usize, usize, u32, u8)> = paulis
        .iter()
        .map(|p| {
            let (f, z, y) = masks(&p.word);
            (f, z, y, if p.sign > 0 { 0 } else { 2 })
        })
        .collect();
    let scale = T::from_rational(&Rational::new(1.into(), (1u64 << (n - k)).into()));
    let mut data = vec![T::zero(); d * d];
    data.par_chunks_mut(d).enumerate().for_each(|(row, out)| {
        for &(flip, zmask, ys, sign) in &terms {
            let col = row ^ flip;
            let (_, ph) = action(flip, zmask, ys, col);
            out[col] = out[col].clone() + i_pow::<T>(ph + sign);
        }
        for v in out.iter_mut() {
            *v = v.clone() * scale.clone();
        }
    });
    Ok(DenseOperator { n, data })
}

/// Projector of the M₃-code of a self-orthogonal GF(4) code, signs by Rall's rule.
pub fn code_projector<T: Scalar>(code: &Gf4Code) -> Result<DenseOperator<T>, OracleError> {
    if code.n() > MAX_QUBITS {
        return Err(OracleError::TooLarge(code.n()));
    }
    let signs = code.rall_signs(DEFAULT_MAX_DIMENSION)?;
    build_projector(&signs, code.n(), code.n() - 2 * code.k())
}

/// `Π² = Π`, `Π = Π^†` and `tr Π = 2^k`, up to `tol` (use 0 in exact mode).
pub fn is_projector<T: Scalar>(p: &DenseOperator<T>, k: usize, tol: f64) -> bool {
    let tr = p.trace();
    p.matmul(p).distance(p) <= tol
        && p.adjoint().distance(p) <= tol
        && (tr.re_f64() - (1u64 << k) as f64).abs() <= tol.max(1e-300)
        && tr.im_f64().abs() <= tol
}

/// Single-qubit state `½(a_I I + a_X X + a_Y Y + a_Z Z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityVector {
    pub a_i: Rational,
    pub a_x: Rational,
    pub a_y: Rational,
    pub a_z: Rational,
}

impl DensityVector {
    pub fn new(a_i: Rational, a_x: Rational, a_y: Rational, a_z: Rational) -> Self {
        DensityVector { a_i, a_x, a_y, a_z }
    }

    /// Twirled magic state with Bloch components `r̄` along each axis.
    pub fn t_state(rbar: Rational) -> Self {
        DensityVector::new(Rational::one(), rbar.clone(), rbar.clone(), rbar)
    }

    pub fn norm2(&self) -> Rational {
        &self.a_x * &self.a_x + &self.a_y * &self.a_y + &self.a_z * &self.a_z
    }

    pub fn is_physical(&self) -> bool {
        self.a_i == Rational::one() && self.norm2() <= Rational::one()
    }

    pub fn matrix<T: Scalar>(&self) -> [[T; 2]; 2] {
        let half = Rational::new(1.into(), 2.into());
        let f = |r: Rational| T::from_rational(&(r * &half));
        let (ai, ax, ay, az) = (self.a_i.clone(), self.a_x.clone(), self.a_y.clone(), self.a_z.clone());
        [
            [f(&ai + &az), f(ax.clone()) - T::i() * f(ay.clone())],
            [f(ax) + T::i() * f(ay), f(ai - az)],
        ]
    }
}

/// `tr(A ρ^{⊗n})`.
fn trace_against<T: Scalar>(a: &DenseOperator<T>, rho: &[[T; 2]; 2]) -> T {
    let n = a.n;
    let d = a.dim();
    let partial: Vec<T> = (0..d)
        .into_par_iter()
        .map(|x| {
            let mut acc = T::zero();
            for y in 0..d {
                let v = a.get(x, y);
                if v.is_zero() {
                    continue;
                }
                let mut r = T::one();
                for q in 0..n {
                    let bit = n - 1 - q;
                    r = r * rho[(y >> bit) & 1][(x >> bit) & 1].clone();
                }
                acc = acc + v.clone() * r;
            }
            acc
        })
        .collect();
    partial.into_iter().fold(T::zero(), |s, v| s + v)
}

/// `η = tr(Π ρ^{⊗n})`.
pub fn projection_prob<T: Scalar>(proj: &DenseOperator<T>, bloch: &DensityVector) -> T {
    trace_against(proj, &bloch.matrix())
}

/// `η_L = tr(Q_L Π ρ^{⊗n})`; `Q_L` must commute with `Π`.
pub fn logical_component<T: Scalar>(
    proj: &DenseOperator<T>,
    logical: &PhasedPauli,
    bloch: &DensityVector,
) -> Result<T, OracleError> {
    if logical.word.len() != proj.n {
        return Err(OracleError::LengthMismatch { expected: proj.n, got: logical.word.len() });
    }
    let q = DenseOperator::<T>::pauli(logical);
    let qp = q.matmul(proj);
    if qp.distance(&proj.matmul(&q)) > 1e-9 {
        return Err(OracleError::NotLogical(logical.word.pauli_string()));
    }
    Ok(trace_against(&qp, &bloch.matrix()))
}

/// Logical `X̄, Ȳ, Z̄` of an `[[n, 1]]` M₃-code made of weight-`n` words:
/// `λ₊(X, Y, Z)^{⊗n}` with `λ₊ = i^{1-n}`, or `λ₋(Y, X, Z)^{⊗n}` with
/// `λ₋ = (-1)^n i^{1-n}`.
pub fn transversal_logicals(n: usize, sign: LogicalSign) -> [PhasedPauli; 3] {
    let all = |g: Gf4| Gf4Vector::from_entries(&vec![g; n]);
    let base = ((4 - (n as i64 - 1).rem_euclid(4)) % 4) as u8;
    match sign {
        LogicalSign::Plus => [
            PhasedPauli::new(all(Gf4::ONE), base),
            PhasedPauli::new(all(Gf4::OMEGA2), base),
            PhasedPauli::new(all(Gf4::OMEGA), base),
        ],
        LogicalSign::Minus => {
            let ph = base + if n % 2 == 1 { 2 } else { 0 };
            [
                PhasedPauli::new(all(Gf4::OMEGA2), ph),
                PhasedPauli::new(all(Gf4::ONE), ph),
                PhasedPauli::new(all(Gf4::OMEGA), ph),
            ]
        }
    }
}

/// `(η, mean of η_X̄, η_Ȳ, η_Z̄)` for the magic state with parameter `r̄`.
pub fn magic_components<T: Scalar>(
    proj: &DenseOperator<T>,
    sign: LogicalSign,
    rbar: &Rational,
) -> Result<(T, T), OracleError> {
    let bloch = DensityVector::t_state(rbar.clone());
    let eta = projection_prob(proj, &bloch);
    let mut sum = T::zero();
    for l in transversal_logicals(proj.n, sign) {
        sum = sum + logical_component(proj, &l, &bloch)?;
    }
    let third = T::from_rational(&Rational::new(1.into(), 3.into()));
    Ok((eta, sum * third))
}

/// One-round output error of the twirled protocol at input error `eps`.
pub fn oracle_eps_out(proj: &DenseOperator<Float>, sign: LogicalSign, eps: f64) -> Result<f64, OracleError> {
    let n = proj.n;
    let rbar = (1.0 - 2.0 * eps) / 3f64.sqrt();
    let rho: [[Float; 2]; 2] = [
        [Complex::new(0.5 * (1.0 + rbar), 0.0), Complex::new(0.5 * rbar, -0.5 * rbar)],
        [Complex::new(0.5 * rbar, 0.5 * rbar), Complex::new(0.5 * (1.0 - rbar), 0.0)],
    ];
    let eta = trace_against(proj, &rho).re;
    let mut sum = 0.0;
    for l in transversal_logicals(n, sign) {
        let q = DenseOperator::<Float>::pauli(&l);
        let qp = q.matmul(proj);
        if qp.distance(&proj.matmul(&q)) > 1e-9 {
            return Err(OracleError::NotLogical(l.word.pauli_string()));
        }
        sum += trace_against(&qp, &rho).re;
    }
    let wl = sum / 3.0;
    Ok((eta - 3f64.sqrt() * wl) / (2.0 * eta))
}

/// A single-qubit Clifford with `M†XM = Y`, `M†YM = Z`, `M†ZM = X`.
///
/// Fixed as `½[[1+i, 1+i], [-1+i, 1-i]]`; its cube is `-I`.
pub fn m3<T: Scalar>() -> [[T; 2]; 2] {
    let h = T::from_rational(&Rational::new(1.into(), 2.into()));
    let one = T::one();
    let i = T::i();
    [
        [h.clone() * (one.clone() + i.clone()), h.clone() * (one.clone() + i.clone())],
        [h.clone() * (i.clone() - one.clone()), h * (one - i)],
    ]
}

/// `[M₃^{⊗n}, Π] = 0`.
pub fn commutes_with_m3<T: Scalar>(proj: &DenseOperator<T>, tol: f64) -> bool {
    proj.conjugate_local(&m3::<T>()).distance(proj) <= tol
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn group(words: &[(&str, i8)]) -> Vec<SignedPauli> {
        words.iter().map(|(w, s)| SignedPauli { word: Gf4Vector::from_pauli(w).unwrap(), sign: *s }).collect()
    }

    fn re(x: &Exact) -> Rational {
        assert!(x.im.is_zero());
        x.re.clone()
    }

    #[test]
    fn m3_conjugation() {
        let m = m3::<Exact>();
        let mm = DenseOperator { n: 1, data: vec![m[0][0].clone(), m[0][1].clone(), m[1][0].clone(), m[1][1].clone()] };
        let p = |s: &str| DenseOperator::<Exact>::pauli(&PhasedPauli::new(Gf4Vector::from_pauli(s).unwrap(), 0));
        let conj = |a: &DenseOperator<Exact>| mm.adjoint().matmul(a).matmul(&mm);
        assert_eq!(conj(&p("X")), p("Y"));
        assert_eq!(conj(&p("Y")), p("Z"));
        assert_eq!(conj(&p("Z")), p("X"));
        let cube = mm.matmul(&mm).matmul(&mm);
        let minus_i: DenseOperator<Exact> =
            DenseOperator { n: 1, data: DenseOperator::<Exact>::identity(1).data.into_iter().map(|v| -v).collect() };
        assert_eq!(cube, minus_i);
    }

    #[test]
    fn pauli_products() {
        let x = PhasedPauli::new(Gf4Vector::from_pauli("X").unwrap(), 0);
        let y = PhasedPauli::new(Gf4Vector::from_pauli("Y").unwrap(), 0);
        let xy = multiply(&x, &y);
        assert_eq!(xy.word.pauli_string(), "Z");
        assert_eq!(xy.phase, 1);
        let dense = DenseOperator::<Exact>::pauli(&x).matmul(&DenseOperator::pauli(&y));
        assert_eq!(dense, DenseOperator::pauli(&xy));
    }

    #[test]
    fn singlet_and_bell_states() {
        let s2 = build_projector::<Exact>(&group(&[("II", 1), ("XX", -1), ("YY", -1), ("ZZ", -1)]), 2, 0).unwrap();
        let h = rat(1, 2);
        // (|01> - |10>)/sqrt 2
        assert_eq!(re(s2.get(1, 1)), h);
        assert_eq!(re(s2.get(1, 2)), -h.clone());
        assert_eq!(re(s2.get(0, 0)), int(0));
        assert!(is_projector(&s2, 0, 0.0));
        assert!(commutes_with_m3(&s2, 0.0));
        let s1 = build_projector::<Exact>(&group(&[("II", 1), ("XX", 1), ("YY", -1), ("ZZ", 1)]), 2, 0).unwrap();
        assert_eq!(re(s1.get(0, 3)), h);
        assert!(!commutes_with_m3(&s1, 0.0));
        let mixed = projection_prob(&s2, &DensityVector::t_state(int(0)));
        assert_eq!(re(&mixed), rat(1, 4));
    }

    #[test]
    fn identity_group() {
        let p = build_projector::<Exact>(&group(&[("III", 1)]), 3, 3).unwrap();
        assert_eq!(p, DenseOperator::identity(3));
    }

    #[test]
    fn bad_groups() {
        let anti = group(&[("II", 1), ("XI", 1), ("ZI", 1), ("YI", 1)]);
        assert!(matches!(build_projector::<Exact>(&anti, 2, 0), Err(OracleError::NonCommuting(..))));
        let signs = group(&[("II", 1), ("XX", 1), ("YY", 1), ("ZZ", 1)]);
        assert!(matches!(build_projector::<Exact>(&signs, 2, 0), Err(OracleError::InconsistentSigns(_))));
        assert!(matches!(build_projector::<Exact>(&signs[..3], 2, 0), Err(OracleError::WrongGroupSize { .. })));
    }

    #[test]
    fn five_qubit_logicals() {
        let code = Gf4Code::five_qubit();
        let p = code_projector::<Exact>(&code).unwrap();
        assert!(is_projector(&p, 1, 0.0));
        let rbar = rat(1, 3);
        let (eta, wl) = magic_components(&p, LogicalSign::Minus, &rbar).unwrap();
        let r2 = &rbar * &rbar;
        assert_eq!(re(&eta), (int(1) + int(15) * &r2 * &r2) / int(16));
        // 3 W_L = 30 r̄³ - 18 r̄⁵
        let r3 = &r2 * &rbar;
        assert_eq!(re(&wl) * int(16) * int(3), int(30) * &r3 - int(18) * &r3 * &r2);
    }
}
