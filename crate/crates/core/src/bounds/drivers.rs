//! Bound searches over the invariant families.
//!
//! Every enumerator quantity used here (`A_j`, `B_j`, `C_j`, `N(0)`,
//! `N(ε_max)`, the logical term `D`, pure-state evaluations) is linear in the
//! family coefficients, so each search is a sequence of exact LPs.

use super::{all_divisible, count_lattice_points, lp_feasible, LatticeError, LatticeSpec, LinConstraint, LpOutcome, Polytope, Sense};
use crate::distill::{self, eps_max_parts};
use crate::enums::Enumerator;
use crate::linalg;
use crate::invariants::{
    self, c_len, d_len, family_basis, max_cancellations, nu_for_cancellations, phi_cancellation_rows, selfdual_basis,
    InvariantParams, SelfDualParams, SignClass,
};
use crate::rational::{big, int, pow, rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

/// Grid used to discretize `A(1, i t/sqrt 3) ≥ 0` for self-dual searches.
pub const PURE_STATE_GRID: usize = 64;

/// Linear forms of enumerator data over a coefficient vector.
#[derive(Clone, Debug)]
pub struct LinearForms {
    pub n: usize,
    pub names: Vec<String>,
    /// `a[j][k]`: contribution of variable `k` to `A_j`.
    pub a: Vec<Vec<Rational>>,
    pub b: Vec<Vec<Rational>>,
    pub c: Vec<Vec<Rational>>,
    pub n0: Vec<Rational>,
    pub nmax: Vec<Rational>,
    pub dlog: Vec<Rational>,
}

fn transpose(cols: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    (0..=n).map(|j| cols.iter().map(|col| col[j].clone()).collect()).collect()
}

impl LinearForms {
    /// Forms for the `[[n, 1]]` family over `(c'_0.., d'_0..)`.
    pub fn family(n: usize) -> Self {
        let basis = family_basis(n).expect("odd n");
        let size = big(BigInt::from(2).pow(n as u32 - 1));
        let mut names: Vec<String> = (0..c_len(n)).map(|j| format!("c'_{j}")).collect();
        names.extend((0..d_len(n)).map(|j| format!("d'_{j}")));
        let mut acols = Vec::new();
        let mut bcols = Vec::new();
        let mut ccols = Vec::new();
        let (mut n0, mut nmax, mut dlog) = (Vec::new(), Vec::new(), Vec::new());
        for e in &basis {
            let b = e.macwilliams_rational(&size);
            let c = Enumerator::difference(&b, e).expect("same degree");
            let (x, y, z) = eps_max_parts(e);
            n0.push(x);
            nmax.push(y);
            dlog.push(z);
            acols.push(e.coeffs().to_vec());
            bcols.push(b.coeffs().to_vec());
            ccols.push(c.coeffs().to_vec());
        }
        LinearForms { n, names, a: transpose(&acols, n), b: transpose(&bcols, n), c: transpose(&ccols, n), n0, nmax, dlog }
    }

    /// Forms for self-dual enumerators over `(c_0.., c_J)`; `B = A`, `C = 0`.
    pub fn selfdual(n: usize) -> Self {
        let basis = selfdual_basis(n).expect("even n");
        let names = (0..basis.len()).map(|j| format!("c_{j}")).collect();
        let acols: Vec<Vec<Rational>> = basis.iter().map(|e| e.coeffs().to_vec()).collect();
        let zero = vec![vec![Rational::zero(); basis.len()]; n + 1];
        let n0 = basis.iter().map(|e| e.signed_eval(&rat(1, 3)).expect("even")).collect();
        let nmax = basis.iter().map(|e| e.signed_eval(&rat(1, 9)).expect("even")).collect();
        LinearForms {
            n,
            names,
            a: transpose(&acols, n),
            b: transpose(&acols, n),
            c: zero,
            n0,
            nmax,
            dlog: vec![Rational::zero(); basis.len()],
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn unit(&self, k: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[k] = Rational::one();
        v
    }

    pub fn eval(form: &[Rational], x: &[Rational]) -> Rational {
        form.iter().zip(x).map(|(a, v)| a * v).sum()
    }

    /// `A_j ≥ 0` and `C_j ≥ 0` for every `j` (so `B_j ≥ A_j ≥ 0`).
    pub fn nonnegativity(&self) -> Vec<LinConstraint> {
        let mut out = Vec::new();
        for rows in [&self.a, &self.c] {
            for row in rows.iter() {
                if row.iter().any(|v| !v.is_zero()) {
                    out.push(LinConstraint::new(row.clone(), Sense::Ge, Rational::zero()));
                }
            }
        }
        out
    }

    /// `N(0) ≥ 0` and the linear form of `ε_out(ε_max) ≥ ε_max` for both
    /// logical choices, `N(ε_max) ≥ |D|`.
    pub fn quantum_cuts(&self) -> Vec<LinConstraint> {
        let plus: Vec<Rational> = self.nmax.iter().zip(&self.dlog).map(|(a, b)| a + b).collect();
        let minus: Vec<Rational> = self.nmax.iter().zip(&self.dlog).map(|(a, b)| a - b).collect();
        let mut out = vec![LinConstraint::new(self.n0.clone(), Sense::Ge, Rational::zero())];
        for f in [plus, minus] {
            if f.iter().any(|v| !v.is_zero()) {
                out.push(LinConstraint::new(f, Sense::Ge, Rational::zero()));
            }
        }
        out
    }

    pub fn pin(&self, k: usize, value: Rational) -> LinConstraint {
        LinConstraint::new(self.unit(k), Sense::Eq, value)
    }

    pub fn zero(&self, form: &[Rational]) -> LinConstraint {
        LinConstraint::new(form.to_vec(), Sense::Eq, Rational::zero())
    }

    pub fn polytope(&self, constraints: Vec<LinConstraint>) -> Polytope {
        Polytope::named(self.names.clone(), constraints)
    }
}

/// Substitutes fixed coordinates, giving a polytope over the rest.
pub fn restrict(p: &Polytope, fixed: &[(usize, Rational)]) -> Polytope {
    let keep: Vec<usize> = (0..p.dim).filter(|k| fixed.iter().all(|(f, _)| f != k)).collect();
    let constraints = p
        .constraints
        .iter()
        .map(|c| {
            let shift: Rational = fixed.iter().map(|(k, v)| &c.coeffs[*k] * v).sum();
            LinConstraint::new(keep.iter().map(|&k| c.coeffs[k].clone()).collect(), c.sense, &c.rhs - shift)
        })
        .collect();
    Polytope::named(keep.iter().map(|&k| p.names[k].clone()).collect(), constraints)
}

/// Reinserts fixed coordinates into a point of a restricted polytope.
pub fn lift(dim: usize, free: &[Rational], fixed: &[(usize, Rational)]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(dim);
    let mut it = free.iter();
    for k in 0..dim {
        match fixed.iter().find(|(f, _)| *f == k) {
            Some((_, v)) => out.push(v.clone()),
            None => out.push(it.next().expect("arity").clone()),
        }
    }
    out
}

/// LP result with points in the original coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solve {
    Infeasible,
    Optimal { point: Vec<Rational>, value: Rational },
    Unbounded { point: Vec<Rational> },
}

impl Solve {
    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            Solve::Infeasible => None,
            Solve::Optimal { point, .. } | Solve::Unbounded { point } => Some(point),
        }
    }

    pub fn is_feasible(&self) -> bool {
        !matches!(self, Solve::Infeasible)
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            Solve::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Eliminates the equality rows of `p` by substitution, then runs the
/// simplex on the remaining inequalities in the free coordinates.
pub fn solve_reduced(p: &Polytope, objective: Option<&[Rational]>) -> Solve {
    let (eqs, ineqs): (Vec<&LinConstraint>, Vec<&LinConstraint>) =
        p.constraints.iter().partition(|c| c.sense == Sense::Eq);
    let Some((x0, basis)) = linalg::affine_solution(
        eqs.iter().map(|c| c.coeffs.clone()).collect(),
        eqs.iter().map(|c| c.rhs.clone()).collect(),
        p.dim,
    ) else {
        return Solve::Infeasible;
    };
    let lift = |z: &[Rational]| -> Vec<Rational> {
        let mut x = x0.clone();
        for (t, v) in z.iter().zip(&basis) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += t * vi;
            }
        }
        x
    };
    let mut rows: Vec<LinConstraint> = Vec::new();
    for c in ineqs {
        let mut coeffs: Vec<Rational> = basis.iter().map(|v| dot(&c.coeffs, v)).collect();
        let mut rhs = &c.rhs - dot(&c.coeffs, &x0);
        let Some(lead) = coeffs.iter().find(|v| !v.is_zero()).map(|v| v.abs()) else {
            if !LinConstraint::new(vec![], c.sense, rhs).constant_holds() {
                return Solve::Infeasible;
            }
            continue;
        };
        for v in coeffs.iter_mut() {
            *v /= &lead;
        }
        rhs /= &lead;
        let row = LinConstraint::new(coeffs, c.sense, rhs);
        if !rows.contains(&row) {
            rows.push(row);
        }
    }
    let obj: Option<Vec<Rational>> = objective.map(|f| basis.iter().map(|v| dot(f, v)).collect());
    let offset = objective.map(|f| dot(f, &x0)).unwrap_or_default();
    if basis.is_empty() {
        return if p.constraints.iter().all(|c| c.holds(&x0)) {
            Solve::Optimal { point: x0, value: offset }
        } else {
            Solve::Infeasible
        };
    }
    let names = (0..basis.len()).map(|i| format!("t{i}")).collect();
    let reduced = Polytope::named(names, rows);
    match lp_feasible(&reduced, obj.as_deref()) {
        LpOutcome::Infeasible => Solve::Infeasible,
        LpOutcome::Optimal { point, value, .. } => Solve::Optimal { point: lift(&point), value: value + offset },
        LpOutcome::Unbounded { point, .. } => Solve::Unbounded { point: lift(&point) },
    }
}

fn maximize(p: &Polytope, form: &[Rational]) -> Solve {
    solve_reduced(p, Some(form))
}

fn exceeds_zero(outcome: &Solve) -> bool {
    match outcome {
        Solve::Optimal { value, .. } => value.is_positive(),
        Solve::Unbounded { .. } => true,
        Solve::Infeasible => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuBound {
    pub nu: usize,
    /// Number of cancelled series coefficients.
    pub cancellations: usize,
    /// Family coefficients of a point with `N(0) ≠ 0` attaining it.
    pub witness: Vec<Rational>,
}

/// Base polytope for non-trivial `[[n, 1]]` searches: `c'_0 = 1`, `B_1 = 0`,
/// `A_2 = 0`, nonnegativity and optional quantum cuts.
pub fn nontrivial_family_constraints(forms: &LinearForms, quantum: bool) -> Vec<LinConstraint> {
    let mut cons = forms.nonnegativity();
    cons.push(forms.pin(0, Rational::one()));
    cons.push(forms.zero(&forms.b[1]));
    if forms.n >= 2 {
        cons.push(forms.zero(&forms.a[2]));
    }
    if quantum {
        cons.extend(forms.quantum_cuts());
    }
    cons
}

/// Largest noise-suppression exponent reachable by a non-trivial enumerator
/// with nonzero success probability at ε = 0.
pub fn max_nu_bound(n: usize, quantum: bool) -> Option<NuBound> {
    let class = SignClass::of(n)?;
    if n < 5 {
        return None;
    }
    let forms = LinearForms::family(n);
    let base = nontrivial_family_constraints(&forms, quantum);
    let top = max_cancellations(n)?;
    let rows = phi_cancellation_rows(n, top).ok()?;
    for k in (0..=top).rev() {
        let mut cons = base.clone();
        cons.extend(rows[..k].iter().map(|r| forms.zero(r)));
        let p = forms.polytope(cons);
        let up = maximize(&p, &forms.n0);
        if !up.is_feasible() {
            continue;
        }
        let hit = if exceeds_zero(&up) {
            Some(up)
        } else if !quantum {
            let neg: Vec<Rational> = forms.n0.iter().map(|v| -v).collect();
            let down = maximize(&p, &neg);
            exceeds_zero(&down).then_some(down)
        } else {
            None
        };
        if let Some(outcome) = hit {
            let witness = outcome.point().expect("feasible").to_vec();
            return Some(NuBound { nu: nu_for_cancellations(class, k), cancellations: k, witness });
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceBound {
    pub d: usize,
    pub witness: Vec<Rational>,
}

fn largest_feasible<F>(start: usize, step: usize, limit: usize, mut build: F) -> Option<DistanceBound>
where
    F: FnMut(usize) -> Polytope,
{
    let mut best = None;
    let mut d = start;
    while d <= limit {
        match solve_reduced(&build(d), None) {
            Solve::Infeasible => break,
            outcome => best = Some(DistanceBound { d, witness: outcome.point().unwrap().to_vec() }),
        }
        d += step;
    }
    best
}

/// Largest odd `d` with `C_j = 0` for `0 < j < d` feasible.
pub fn max_distance_bound(n: usize, quantum: bool) -> Option<DistanceBound> {
    if n.is_multiple_of(2) || n < 3 {
        return None;
    }
    let forms = LinearForms::family(n);
    let mut base = forms.nonnegativity();
    base.push(forms.pin(0, Rational::one()));
    if quantum {
        base.extend(forms.quantum_cuts());
    }
    largest_feasible(1, 2, n + 2, |d| {
        let mut cons = base.clone();
        for j in (1..d).step_by(2) {
            cons.push(forms.zero(&forms.c[j]));
        }
        forms.polytope(cons)
    })
}

/// Quantum cuts for self-dual enumerators: `(-1)^J c_J ≥ 0` and
/// `A(1, i t/sqrt 3) ≥ 0` on a grid of `u = t^2` in `[0, 1]`.
pub fn selfdual_quantum_cuts(forms: &LinearForms, grid: usize) -> Vec<LinConstraint> {
    let top = forms.dim() - 1;
    let mut lead = vec![Rational::zero(); forms.dim()];
    lead[top] = if top.is_multiple_of(2) { int(1) } else { int(-1) };
    let mut out = vec![LinConstraint::new(lead, Sense::Ge, Rational::zero())];
    for i in 0..=grid {
        let u = rat(i as i64, grid as i64);
        let mut form = vec![Rational::zero(); forms.dim()];
        for j in (0..=forms.n).step_by(2) {
            let w = pow(&(-&u / int(3)), (j / 2) as u32);
            for (f, a) in form.iter_mut().zip(&forms.a[j]) {
                *f += a * &w;
            }
        }
        out.push(LinConstraint::new(form, Sense::Ge, Rational::zero()));
    }
    out
}

/// Largest classical distance `d` compatible with `A_2 = … = A_{d-2} = 0`.
///
/// Even `n` uses the self-dual family; odd `n` the maximal self-orthogonal
/// `[n, (n-1)/2]` family with `C ≥ 0`.
pub fn classical_distance_bound_selfdual(n: usize, quantum: bool) -> Option<DistanceBound> {
    if n < 5 {
        return None;
    }
    let (forms, mut base) = if n.is_multiple_of(2) {
        let forms = LinearForms::selfdual(n);
        let mut base = forms.nonnegativity();
        if quantum {
            base.extend(selfdual_quantum_cuts(&forms, PURE_STATE_GRID));
        }
        (forms, base)
    } else {
        let forms = LinearForms::family(n);
        let mut base = forms.nonnegativity();
        if quantum {
            base.extend(forms.quantum_cuts());
        }
        (forms, base)
    };
    base.push(forms.pin(0, Rational::one()));
    largest_feasible(2, 2, n + 1, |d| {
        let mut cons = base.clone();
        for j in (2..d.saturating_sub(1)).step_by(2) {
            cons.push(forms.zero(&forms.a[j]));
        }
        forms.polytope(cons)
    })
}

/// LP range of each free self-dual coefficient `c_1..c_J` with `c_0 = 1`.
pub fn selfdual_param_ranges(n: usize, quantum: bool) -> Vec<(Option<Rational>, Option<Rational>)> {
    let forms = LinearForms::selfdual(n);
    let mut cons = forms.nonnegativity();
    if quantum {
        cons.extend(selfdual_quantum_cuts(&forms, PURE_STATE_GRID));
    }
    let p = restrict(&forms.polytope(cons), &[(0, Rational::one())]);
    (0..p.dim)
        .map(|k| {
            let unit: Vec<Rational> = (0..p.dim).map(|i| if i == k { int(1) } else { int(0) }).collect();
            let neg: Vec<Rational> = unit.iter().map(|v| -v).collect();
            let hi = solve_reduced(&p, Some(&unit)).value().cloned();
            let lo = solve_reduced(&p, Some(&neg)).value().map(|v| -v);
            (lo, hi)
        })
        .collect()
}

/// Which physical requirements a lattice search enforces on each point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuantumFilter {
    None,
    /// Exact verdicts from `distill` (success polynomial and both thresholds),
    /// or for self-dual enumerators `A(1, i t/sqrt 3) ≥ 0` on all of `[0, 1]`.
    Full,
    /// Only the pure-state value `A(1, i/sqrt 3) ≥ 0`.
    PureStateOnly,
}

/// The `[[7, 1]]` plane in `(c'_1, d'_0)` with `B_i ≥ 0`.
pub fn n7_polytope() -> Polytope {
    let forms = LinearForms::family(7);
    let cons = forms.nonnegativity();
    restrict(&forms.polytope(cons), &[(0, Rational::one())])
}

fn family_point(n: usize, free: &[Rational], fixed: &[(usize, Rational)]) -> Enumerator {
    let flat = lift(c_len(n) + d_len(n), free, fixed);
    invariants::expand_family(&InvariantParams::from_flat(n, &flat).expect("arity"))
}

fn b_divisible(a: &Enumerator) -> bool {
    let (b, _) = distill::dual_and_logical(a);
    all_divisible(&b.coeffs()[1..], 3) && all_divisible(&a.coeffs()[1..], 3)
}

/// Integral `[[7, 1]]` candidates on `c'_1 ∈ 3Z`, `d'_0 ∈ 6Z` with `B_i ∈ 3Z`.
pub fn n7_lattice(filter: QuantumFilter) -> Result<Vec<Vec<Rational>>, LatticeError> {
    let p = n7_polytope();
    let spec = LatticeSpec::new(vec![int(3), int(6)], vec![int(0), int(0)]);
    let fixed = [(0usize, Rational::one())];
    count_lattice_points(
        &p,
        &spec,
        Some(|x: &[Rational]| {
            let a = family_point(7, x, &fixed);
            if !b_divisible(&a) {
                return false;
            }
            match filter {
                QuantumFilter::None => true,
                QuantumFilter::Full => distill::quantum_verdict(&a).map(|v| v.passes()).unwrap_or(false),
                QuantumFilter::PureStateOnly => a.signed_eval(&rat(1, 3)).map(|v| !v.is_negative()).unwrap_or(false),
            }
        }),
    )
}

/// The `(c_1, c_2)` plane of length-12 self-dual enumerators with `A_i ≥ 0`.
pub fn n12_polytope() -> Polytope {
    let forms = LinearForms::selfdual(12);
    restrict(&forms.polytope(forms.nonnegativity()), &[(0, Rational::one())])
}

fn selfdual_point(n: usize, free: &[Rational]) -> Enumerator {
    let c = lift(invariants::selfdual_len(n), free, &[(0, Rational::one())]);
    invariants::expand_selfdual(&SelfDualParams::new(n, c).expect("arity"))
}

/// Integral length-12 self-dual candidates on `c_1, c_2 ∈ 3Z`.
pub fn n12_lattice(filter: QuantumFilter) -> Result<Vec<Vec<Rational>>, LatticeError> {
    let p = n12_polytope();
    let spec = LatticeSpec::new(vec![int(3), int(3)], vec![int(0), int(0)]);
    count_lattice_points(
        &p,
        &spec,
        Some(|x: &[Rational]| {
            let a = selfdual_point(12, x);
            if !all_divisible(&a.coeffs()[1..], 3) {
                return false;
            }
            match filter {
                QuantumFilter::None => true,
                QuantumFilter::Full => distill::check_state_nonneg(&a).map(|v| v.nonneg).unwrap_or(false),
                QuantumFilter::PureStateOnly => a.signed_eval(&rat(1, 3)).map(|v| !v.is_negative()).unwrap_or(false),
            }
        }),
    )
}

/// One row of a bound sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub n: usize,
    pub classical: Option<SweepCell>,
    pub quantum: Option<SweepCell>,
}

/// One bound with the family point that attains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepCell {
    pub bound: usize,
    pub witness: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepTarget {
    Nu,
    Distance,
    ClassicalDistance,
}

/// Runs a bound for every `n`, in parallel, output in input order.
/// Columns not requested are left `None`.
pub fn bound_sweep(ns: &[usize], target: SweepTarget, classical: bool, quantum: bool) -> Vec<SweepRow> {
    ns.par_iter()
        .map(|&n| {
            let run = |q: bool| match target {
                SweepTarget::Nu => max_nu_bound(n, q).map(|b| SweepCell { bound: b.nu, witness: b.witness }),
                SweepTarget::Distance => max_distance_bound(n, q).map(|b| SweepCell { bound: b.d, witness: b.witness }),
                SweepTarget::ClassicalDistance => {
                    classical_distance_bound_selfdual(n, q).map(|b| SweepCell { bound: b.d, witness: b.witness })
                }
            };
            SweepRow {
                n,
                classical: if classical { run(false) } else { None },
                quantum: if quantum { run(true) } else { None },
            }
        })
        .collect()
}

/// Extremal self-dual `A(1, i/sqrt 3)` for `n = 12m`.
pub fn selfdual_extremal_value(n: usize) -> Option<Rational> {
    let p = invariants::selfdual_extremal_params(n).ok()?;
    invariants::expand_selfdual(&p).signed_eval(&rat(1, 3)).ok()
}
