//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! Free variables are split as `x = x+ - x-`; inequalities get a slack column,
//! and only rows without a usable slack get an artificial one.

use super::{LinConstraint, Polytope, Sense};
use crate::rational::{int, Rational};
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// Optimal vertex; without an objective any feasible vertex with value 0.
    Optimal { point: Vec<Rational>, value: Rational, dual: Vec<Rational> },
    Infeasible,
    /// `point + t * ray` stays feasible and improves without bound.
    Unbounded { point: Vec<Rational>, ray: Vec<Rational> },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }

    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { point, .. } | LpOutcome::Unbounded { point, .. } => Some(point),
            LpOutcome::Infeasible => None,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// reduced costs, last entry is minus the objective value
    z: Vec<Rational>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, e: usize) {
        let inv = self.rows[r][e].recip();
        for v in self.rows[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nonzero: Vec<usize> = (0..=self.width).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[e].is_zero() {
                continue;
            }
            let f = row[e].clone();
            for &j in &nonzero {
                let delta = &f * &pivot_row[j];
                row[j] -= delta;
            }
        }
        if !self.z[e].is_zero() {
            let f = self.z[e].clone();
            for &j in &nonzero {
                let delta = &f * &pivot_row[j];
                self.z[j] -= delta;
            }
        }
        self.rows[r] = pivot_row;
        self.basis[r] = e;
    }

    fn set_objective(&mut self, costs: &[Rational]) {
        let mut z: Vec<Rational> = costs.to_vec();
        z.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for j in 0..=self.width {
                if !self.rows[i][j].is_zero() {
                    let delta = cb * &self.rows[i][j];
                    z[j] -= delta;
                }
            }
        }
        self.z = z;
    }

    /// Maximizes; returns the entering column if unbounded.
    fn run(&mut self, allowed: &[bool]) -> Option<usize> {
        loop {
            let Some(e) = (0..self.width).find(|&j| allowed[j] && self.z[j].is_positive()) else {
                return None;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                best = match best {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br || (ratio == br && self.basis[i] < self.basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            match best {
                None => return Some(e),
                Some((r, _)) => self.pivot(r, e),
            }
        }
    }
}

/// Solves `max objective · x` over the polytope (feasibility if `None`).
pub fn lp_feasible(p: &Polytope, objective: Option<&[Rational]>) -> LpOutcome {
    let d = p.dim;
    let mut constraints: Vec<(usize, &LinConstraint)> = Vec::new();
    for (i, c) in p.constraints.iter().enumerate() {
        if c.coeffs.iter().all(Zero::is_zero) {
            if !c.constant_holds() {
                return LpOutcome::Infeasible;
            }
            continue;
        }
        constraints.push((i, c));
    }
    let m = constraints.len();
    let n_slack = constraints.iter().filter(|(_, c)| c.sense != Sense::Eq).count();
    // columns: 2d split variables, slacks, then artificials
    let mut rows = Vec::with_capacity(m);
    let mut signs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut needs_artificial = Vec::new();
    let mut slack = 2 * d;
    for (r, (_, c)) in constraints.iter().enumerate() {
        let mut row = vec![Rational::zero(); 2 * d + n_slack];
        for (k, a) in c.coeffs.iter().enumerate() {
            row[2 * k] = a.clone();
            row[2 * k + 1] = -a;
        }
        let mut rhs = c.rhs.clone();
        let mut slack_col = None;
        match c.sense {
            Sense::Le => {
                row[slack] = int(1);
                slack_col = Some(slack);
                slack += 1;
            }
            Sense::Ge => {
                row[slack] = int(-1);
                slack_col = Some(slack);
                slack += 1;
            }
            Sense::Eq => {}
        }
        let sign = if rhs.is_negative() { -1 } else { 1 };
        if sign < 0 {
            for v in row.iter_mut() {
                *v = -&*v;
            }
            rhs = -rhs;
        }
        match slack_col {
            Some(s) if row[s].is_positive() => basis.push(s),
            _ => {
                basis.push(usize::MAX);
                needs_artificial.push(r);
            }
        }
        row.push(rhs);
        rows.push(row);
        signs.push(sign);
    }
    let original: Vec<Vec<Rational>> = rows.clone();
    let n_real = 2 * d + n_slack;
    let width = n_real + needs_artificial.len();
    for row in rows.iter_mut() {
        let rhs = row.pop().unwrap();
        row.resize(width, Rational::zero());
        row.push(rhs);
    }
    for (k, &r) in needs_artificial.iter().enumerate() {
        rows[r][n_real + k] = int(1);
        basis[r] = n_real + k;
    }
    let mut tab = Tableau { rows, basis, z: Vec::new(), width };

    if !needs_artificial.is_empty() {
        let mut costs = vec![Rational::zero(); width];
        for c in costs.iter_mut().skip(n_real) {
            *c = int(-1);
        }
        tab.set_objective(&costs);
        tab.run(&vec![true; width]);
        if !tab.z[width].is_zero() {
            return LpOutcome::Infeasible;
        }
        // drive zero-level artificials out of the basis or drop their rows
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= n_real {
                if let Some(j) = (0..n_real).find(|&j| !tab.rows[i][j].is_zero()) {
                    tab.pivot(i, j);
                } else {
                    tab.rows.remove(i);
                    tab.basis.remove(i);
                    continue;
                }
            }
            i += 1;
        }
    }

    let mut costs = vec![Rational::zero(); width];
    if let Some(obj) = objective {
        for (k, c) in obj.iter().enumerate() {
            costs[2 * k] = c.clone();
            costs[2 * k + 1] = -c;
        }
    }
    tab.set_objective(&costs);
    let allowed: Vec<bool> = (0..width).map(|j| j < n_real).collect();
    let unbounded = tab.run(&allowed);

    let mut z = vec![Rational::zero(); width];
    for (i, &b) in tab.basis.iter().enumerate() {
        z[b] = tab.rhs(i).clone();
    }
    let point: Vec<Rational> = (0..d).map(|k| &z[2 * k] - &z[2 * k + 1]).collect();
    if let Some(e) = unbounded {
        let mut dz = vec![Rational::zero(); width];
        dz[e] = int(1);
        for (i, &b) in tab.basis.iter().enumerate() {
            dz[b] = -&tab.rows[i][e];
        }
        let ray = (0..d).map(|k| &dz[2 * k] - &dz[2 * k + 1]).collect();
        return LpOutcome::Unbounded { point, ray };
    }
    let value = -tab.z[width].clone();

    // duals from B^T y = c_B on the sign-normalized rows
    let basis_rows: Vec<Vec<Rational>> = (0..tab.basis.len())
        .map(|k| original.iter().map(|row| row[tab.basis[k]].clone()).collect())
        .collect();
    let cb: Vec<Rational> = tab.basis.iter().map(|&b| costs[b].clone()).collect();
    let y = crate::linalg::solve(basis_rows, cb, m).unwrap_or_else(|_| {
        // redundant rows were dropped, so solve on a supporting subset
        least_support_duals(&original, &tab.basis, &costs, m)
    });
    let mut dual = vec![Rational::zero(); p.constraints.len()];
    for (r, (i, _)) in constraints.iter().enumerate() {
        dual[*i] = &y[r] * int(signs[r]);
    }
    LpOutcome::Optimal { point, value, dual }
}

/// Solves `B^T y = c_B` when some rows were redundant: unknowns of rows not
/// needed are set to zero by extending the system with unit rows.
fn least_support_duals(original: &[Vec<Rational>], basis: &[usize], costs: &[Rational], m: usize) -> Vec<Rational> {
    let mut rows: Vec<Vec<Rational>> =
        basis.iter().map(|&b| original.iter().map(|row| row[b].clone()).collect()).collect();
    let mut rhs: Vec<Rational> = basis.iter().map(|&b| costs[b].clone()).collect();
    for r in 0..m {
        let mut trial = rows.clone();
        let mut unit = vec![Rational::zero(); m];
        unit[r] = int(1);
        trial.push(unit);
        if crate::linalg::rank(trial.clone(), m) > crate::linalg::rank(rows.clone(), m) {
            rows = trial;
            rhs.push(Rational::zero());
        }
    }
    crate::linalg::solve(rows, rhs, m).expect("basis columns are independent")
}

/// Certificate checks for an optimum: dual feasibility, stationarity,
/// zero duality gap and complementary slackness.
pub fn audit_dual(
    p: &Polytope,
    objective: &[Rational],
    point: &[Rational],
    value: &Rational,
    dual: &[Rational],
) -> Result<(), String> {
    let mut combo = vec![Rational::zero(); p.dim];
    let mut bound = Rational::zero();
    for (i, (c, u)) in p.constraints.iter().zip(dual).enumerate() {
        match c.sense {
            Sense::Le if u.is_negative() => return Err(format!("dual {i} must be ≥ 0")),
            Sense::Ge if u.is_positive() => return Err(format!("dual {i} must be ≤ 0")),
            _ => {}
        }
        let slack = c.lhs(point) - &c.rhs;
        if !(&slack * u).is_zero() {
            return Err(format!("complementary slackness fails on constraint {i}"));
        }
        for (k, a) in c.coeffs.iter().enumerate() {
            combo[k] += a * u;
        }
        bound += &c.rhs * u;
    }
    if combo.as_slice() != objective {
        return Err("duals do not reproduce the objective".into());
    }
    if &bound != value {
        return Err(format!("duality gap: primal {value}, dual {bound}"));
    }
    let primal: Rational = objective.iter().zip(point).map(|(c, x)| c * x).sum();
    if &primal != value {
        return Err("reported value does not match the point".into());
    }
    Ok(())
}
