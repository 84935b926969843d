//! Exact linear and integer programming over enumerator coefficient space.

mod drivers;
mod lattice;
mod simplex;
mod vertices;

pub use drivers::*;
pub use lattice::{all_divisible, count_lattice_points, LatticeError, LatticeSpec};
pub use simplex::{audit_dual, lp_feasible, LpOutcome};
pub use vertices::{enumerate_vertices_2d, VertexError};

use crate::rational::{rational_to_value, value_to_rational, Rational};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

impl Sense {
    fn symbol(self) -> &'static str {
        match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        }
    }

    fn parse(s: &str) -> Option<Sense> {
        match s {
            "<=" | "le" => Some(Sense::Le),
            ">=" | "ge" => Some(Sense::Ge),
            "=" | "==" | "eq" => Some(Sense::Eq),
            _ => None,
        }
    }
}

/// `coeffs · x (sense) rhs`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinConstraint {
    pub coeffs: Vec<Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

impl LinConstraint {
    pub fn new(coeffs: Vec<Rational>, sense: Sense, rhs: Rational) -> Self {
        LinConstraint { coeffs, sense, rhs }
    }

    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum()
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        let l = self.lhs(x);
        match self.sense {
            Sense::Le => l <= self.rhs,
            Sense::Ge => l >= self.rhs,
            Sense::Eq => l == self.rhs,
        }
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.lhs(x) == self.rhs
    }

    /// For a constraint with no variables: does `0 (sense) rhs` hold?
    pub fn constant_holds(&self) -> bool {
        let zero = Rational::default();
        match self.sense {
            Sense::Le => zero <= self.rhs,
            Sense::Ge => zero >= self.rhs,
            Sense::Eq => zero == self.rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    pub dim: usize,
    pub names: Vec<String>,
    pub constraints: Vec<LinConstraint>,
}

impl Polytope {
    pub fn new(dim: usize, constraints: Vec<LinConstraint>) -> Self {
        let names = (0..dim).map(|i| format!("x{i}")).collect();
        Polytope::named(names, constraints)
    }

    pub fn named(names: Vec<String>, constraints: Vec<LinConstraint>) -> Self {
        let dim = names.len();
        assert!(constraints.iter().all(|c| c.coeffs.len() == dim), "constraint arity must match dimension");
        Polytope { dim, names, constraints }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.constraints.iter().all(|c| c.holds(x))
    }

    pub fn push(&mut self, c: LinConstraint) {
        assert_eq!(c.coeffs.len(), self.dim);
        self.constraints.push(c);
    }

    /// Exact minimum and maximum of one coordinate; `None` when unbounded.
    pub fn coordinate_range(&self, k: usize) -> Option<Option<(Rational, Rational)>> {
        let mut e = vec![Rational::default(); self.dim];
        e[k] = Rational::from_integer(1.into());
        let max = lp_feasible(self, Some(&e));
        let neg: Vec<Rational> = e.iter().map(|v| -v).collect();
        let min = lp_feasible(self, Some(&neg));
        match (max, min) {
            (LpOutcome::Infeasible, _) | (_, LpOutcome::Infeasible) => Some(None),
            (LpOutcome::Optimal { value: hi, .. }, LpOutcome::Optimal { value: lo, .. }) => Some(Some((-lo, hi))),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "names": self.names,
            "constraints": self.constraints.iter().map(|c| json!({
                "coeffs": c.coeffs.iter().map(rational_to_value).collect::<Vec<_>>(),
                "sense": c.sense.symbol(),
                "rhs": rational_to_value(&c.rhs),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self, String> {
        let names: Vec<String> = value
            .get("names")
            .and_then(Value::as_array)
            .ok_or("missing `names`")?
            .iter()
            .map(|v| v.as_str().map(str::to_owned).ok_or("names must be strings"))
            .collect::<Result<_, _>>()?;
        let constraints = value
            .get("constraints")
            .and_then(Value::as_array)
            .ok_or("missing `constraints`")?
            .iter()
            .map(|c| {
                let coeffs: Vec<Rational> = c
                    .get("coeffs")
                    .and_then(Value::as_array)
                    .ok_or("missing `coeffs`")?
                    .iter()
                    .map(|v| value_to_rational(v).ok_or("bad coefficient"))
                    .collect::<Result<_, _>>()?;
                if coeffs.len() != names.len() {
                    return Err("constraint arity does not match `names`");
                }
                let sense = c.get("sense").and_then(Value::as_str).and_then(Sense::parse).ok_or("bad `sense`")?;
                let rhs = c.get("rhs").and_then(value_to_rational).ok_or("bad `rhs`")?;
                Ok(LinConstraint::new(coeffs, sense, rhs))
            })
            .collect::<Result<Vec<_>, &str>>()?;
        Ok(Polytope::named(names, constraints))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn json_round_trip() {
        let p = Polytope::named(
            vec!["c'_1".into(), "d'_0".into()],
            vec![LinConstraint::new(vec![int(1), rat(-1, 2)], Sense::Le, rat(27, 2))],
        );
        assert_eq!(Polytope::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn interval_range() {
        let p = Polytope::new(
            1,
            vec![
                LinConstraint::new(vec![int(1)], Sense::Ge, int(-6)),
                LinConstraint::new(vec![int(1)], Sense::Le, int(9)),
            ],
        );
        assert_eq!(p.coordinate_range(0), Some(Some((int(-6), int(9)))));
    }
}
