use super::{lp_feasible, LpOutcome, Polytope};
use crate::rational::{int, Rational};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VertexError {
    #[error("vertex enumeration needs a 2-dimensional polytope, got dimension {0}")]
    NotPlanar(usize),
    #[error("the region is unbounded")]
    Unbounded,
}

/// Vertices of a bounded planar polytope, counterclockwise from the one
/// with the smallest angle about the centroid. Empty if infeasible.
pub fn enumerate_vertices_2d(p: &Polytope) -> Result<Vec<[Rational; 2]>, VertexError> {
    if p.dim != 2 {
        return Err(VertexError::NotPlanar(p.dim));
    }
    for dir in [[1, 0], [-1, 0], [0, 1], [0, -1]] {
        let obj = [int(dir[0]), int(dir[1])];
        match lp_feasible(p, Some(&obj)) {
            LpOutcome::Infeasible => return Ok(Vec::new()),
            LpOutcome::Unbounded { .. } => return Err(VertexError::Unbounded),
            LpOutcome::Optimal { .. } => {}
        }
    }
    let lines: Vec<_> = p.constraints.iter().filter(|c| c.coeffs.iter().any(|a| !a.is_zero())).collect();
    let mut points: Vec<[Rational; 2]> = Vec::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let (a, b) = (&lines[i].coeffs, &lines[j].coeffs);
            let det = &a[0] * &b[1] - &a[1] * &b[0];
            if det.is_zero() {
                continue;
            }
            let x = (&lines[i].rhs * &b[1] - &a[1] * &lines[j].rhs) / &det;
            let y = (&a[0] * &lines[j].rhs - &lines[i].rhs * &b[0]) / &det;
            let pt = [x, y];
            if p.contains(&pt) && !points.contains(&pt) {
                points.push(pt);
            }
        }
    }
    if points.len() > 2 {
        let n = int(points.len() as i64);
        let cx = points.iter().map(|q| q[0].clone()).sum::<Rational>() / &n;
        let cy = points.iter().map(|q| q[1].clone()).sum::<Rational>() / &n;
        points.sort_by(|p1, p2| angle_cmp(&(&p1[0] - &cx), &(&p1[1] - &cy), &(&p2[0] - &cx), &(&p2[1] - &cy)));
    } else {
        points.sort();
    }
    Ok(points)
}

/// Orders direction vectors by angle in `[0, 2π)` without trigonometry.
fn angle_cmp(x1: &Rational, y1: &Rational, x2: &Rational, y2: &Rational) -> Ordering {
    let half = |x: &Rational, y: &Rational| if y.is_positive() || (y.is_zero() && x.is_positive()) { 0 } else { 1 };
    let (h1, h2) = (half(x1, y1), half(x2, y2));
    if h1 != h2 {
        return h1.cmp(&h2);
    }
    let cross = x1 * y2 - y1 * x2;
    if cross.is_positive() {
        Ordering::Less
    } else if cross.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}
