//! Gaussian elimination over the rationals.

use crate::rational::Rational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    Inconsistent,
    /// Solution space has positive dimension; `rank` independent equations.
    Underdetermined { rank: usize, unknowns: usize },
}

/// Solves `a x = b` for a unique `x`. Extra consistent rows are fine.
pub fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>, unknowns: usize) -> Result<Vec<Rational>, SolveError> {
    let pivots = reduce(&mut a, &mut b, unknowns);
    if b[pivots.len()..].iter().any(|v| !v.is_zero()) {
        return Err(SolveError::Inconsistent);
    }
    if pivots.len() < unknowns {
        return Err(SolveError::Underdetermined { rank: pivots.len(), unknowns });
    }
    Ok(b.into_iter().take(unknowns).collect())
}

/// All solutions of `a x = b` as `x0 + Σ t_i v_i`; `None` when inconsistent.
pub fn affine_solution(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Rational>,
    unknowns: usize,
) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let pivots = reduce(&mut a, &mut b, unknowns);
    if b[pivots.len()..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x0 = vec![Rational::zero(); unknowns];
    for (r, &col) in pivots.iter().enumerate() {
        x0[col] = b[r].clone();
    }
    let basis = (0..unknowns)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); unknowns];
            v[free] = Rational::one();
            for (r, &col) in pivots.iter().enumerate() {
                v[col] = -a[r][free].clone();
            }
            v
        })
        .collect();
    Some((x0, basis))
}

pub fn rank(mut a: Vec<Vec<Rational>>, unknowns: usize) -> usize {
    let mut b = vec![Rational::zero(); a.len()];
    reduce(&mut a, &mut b, unknowns).len()
}

fn reduce(a: &mut [Vec<Rational>], b: &mut [Rational], unknowns: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = a[r][col].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        b[r] *= &inv;
        for i in 0..a.len() {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for c in 0..unknowns {
                    let delta = &f * &a[r][c];
                    a[i][c] -= delta;
                }
                let delta = &f * &b[r];
                b[i] -= delta;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn unique_and_degenerate() {
        let x = solve(m(&[&[2, 1], &[1, 3], &[3, 4]]), vec![int(5), int(10), int(15)], 2).unwrap();
        assert_eq!(x, vec![int(1), int(3)]);
        assert_eq!(solve(m(&[&[1, 1], &[1, 1]]), vec![int(1), int(2)], 2), Err(SolveError::Inconsistent));
        assert_eq!(
            solve(m(&[&[1, 1]]), vec![int(1)], 2),
            Err(SolveError::Underdetermined { rank: 1, unknowns: 2 })
        );
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]]), 2), 1);
    }

    #[test]
    fn affine_family() {
        // x + y + z = 3, y - z = 1
        let (x0, basis) = affine_solution(m(&[&[1, 1, 1], &[0, 1, -1]]), vec![int(3), int(1)], 3).unwrap();
        assert_eq!(basis.len(), 1);
        let check = |x: &[Rational]| &x[0] + &x[1] + &x[2] == int(3) && &x[1] - &x[2] == int(1);
        assert!(check(&x0));
        let shifted: Vec<Rational> = x0.iter().zip(&basis[0]).map(|(a, b)| a + b * int(7)).collect();
        assert!(check(&shifted));
        assert!(affine_solution(m(&[&[1, 1], &[1, 1]]), vec![int(1), int(2)], 2).is_none());
    }
}
