//! Dense-matrix checks of the enumerator formulas on small codes.

use m3enum::distill::{build_map_with, LogicalSign};
use m3enum::gf4core::{parse_code, Gf4Code};
use m3enum::oracle::{code_projector, magic_components, oracle_eps_out, projection_prob, DensityVector, Exact, Float};
use m3enum::rational::{int, rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_rbar<R: Rng>(rng: &mut R) -> Rational {
    let q = rng.gen_range(2i64..=60);
    let p = rng.gen_range(0..=q * 57 / 100);
    rat(p, q)
}

fn exact_projection_matches(code: &Gf4Code, seed: u64) {
    let n = code.n();
    let k = n - 2 * code.k();
    let a = code.weight_enumerator(10).unwrap();
    let scale = Rational::new(BigInt::one(), BigInt::one() << (n - k));
    let p = code_projector::<Exact>(code).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20 {
        let rbar = random_rbar(&mut rng);
        let eta = projection_prob(&p, &DensityVector::t_state(rbar.clone()));
        assert!(eta.im.is_zero());
        assert_eq!(eta.re, a.signed_eval(&(&rbar * &rbar)).unwrap() * &scale, "n = {n}, rbar = {rbar}");
    }
}

fn code(text: &str) -> Gf4Code {
    parse_code(text).unwrap()
}

#[test]
fn singlet_state() {
    let s2 = code("2 1\n11\n");
    assert_eq!(s2.weight_enumerator(4).unwrap().coeffs(), &[int(1), int(0), int(3)]);
    exact_projection_matches(&s2, 1);
}

#[test]
fn both_five_qubit_codes() {
    exact_projection_matches(&Gf4Code::five_qubit(), 2);
    // two singlets next to a free qubit: A = (1 + 3y²)²
    let product = code("5 2\n11000\n00110\n");
    assert_eq!(product.weight_enumerator(4).unwrap().coeffs(), &[1, 0, 6, 0, 9, 0].map(int));
    exact_projection_matches(&product, 3);
}

#[test]
fn hexacode_state() {
    exact_projection_matches(&Gf4Code::hexacode(), 4);
}

#[test]
fn five_qubit_logical_weight() {
    let p = code_projector::<Exact>(&Gf4Code::five_qubit()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let r = random_rbar(&mut rng);
        let (eta, wl) = magic_components(&p, LogicalSign::Minus, &r).unwrap();
        let r3 = &r * &r * &r;
        let r5 = &r3 * &r * &r;
        assert_eq!(eta.re * int(16), int(1) + int(15) * &r3 * &r);
        assert_eq!(wl.re * int(16), int(10) * &r3 - int(6) * r5);
    }
}

#[test]
fn five_qubit_eps_out() {
    let code = Gf4Code::five_qubit();
    let map = build_map_with(&code.weight_enumerator(4).unwrap(), LogicalSign::Minus).unwrap();
    let p = code_projector::<Float>(&code).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..20 {
        let eps: f64 = rng.gen_range(0.0..0.5);
        let lhs = oracle_eps_out(&p, LogicalSign::Minus, eps).unwrap();
        assert!((lhs - map.eps_out_f64(eps)).abs() < 1e-10, "eps = {eps}");
    }
}

#[test]
fn product_code_has_trivial_map() {
    // pure |T> copies never pass the singlet checks, so N(0) = 0; otherwise the
    // bare qubit passes through: ε under one logical, 1 - ε under the other
    let code = code("5 2\n11000\n00110\n");
    let a = code.weight_enumerator(4).unwrap();
    assert_eq!(a.signed_eval(&rat(1, 3)).unwrap(), int(0));
    let p = code_projector::<Float>(&code).unwrap();
    for (sign, flip) in [(LogicalSign::Plus, false), (LogicalSign::Minus, true)] {
        let map = build_map_with(&a, sign).unwrap();
        assert_eq!(map.eps_out(&rat(1, 5)), Some(if flip { rat(4, 5) } else { rat(1, 5) }));
        for eps in [0.05, 0.1, 0.3] {
            let expected = if flip { 1.0 - eps } else { eps };
            assert!((oracle_eps_out(&p, sign, eps).unwrap() - expected).abs() < 1e-12);
            assert!((map.eps_out_f64(eps) - expected).abs() < 1e-12);
        }
    }
}
