#![allow(dead_code)]

use m3enum::gf4core::{Gf4, Gf4Code, Gf4Vector};
use rand::Rng;

pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Gf4Vector {
    let entries: Vec<Gf4> = (0..n).map(|_| Gf4::from_bits(rng.gen_range(0..4))).collect();
    Gf4Vector::from_entries(&entries)
}

/// Random Hermitian self-orthogonal code of length `n` and dimension at most `k`,
/// grown one isotropic vector of the current dual at a time.
pub fn random_self_orthogonal<R: Rng>(rng: &mut R, n: usize, k: usize) -> Gf4Code {
    let mut rows: Vec<Gf4Vector> = Vec::new();
    let mut attempts = 0;
    while rows.len() < k && attempts < 200 {
        attempts += 1;
        let code = Gf4Code::new(n, rows.clone()).unwrap();
        let dual = code.hermitian_dual();
        let mut v = Gf4Vector::zero(n);
        for g in dual.generators() {
            v = v + g.scale(Gf4::from_bits(rng.gen_range(0..4)));
        }
        if v.is_zero() || code.contains(&v) || !v.hermitian_dot(&v).is_zero() {
            continue;
        }
        rows.push(v);
    }
    Gf4Code::new(n, rows).unwrap()
}
