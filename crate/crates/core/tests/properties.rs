mod common;

use common::random_self_orthogonal;
use m3enum::bounds::{audit_dual, enumerate_vertices_2d, lp_feasible, LinConstraint, LpOutcome, Polytope, Sense};
use m3enum::distill::{build_map, build_map_with, LogicalSign, NoiseExponent};
use m3enum::enums::Enumerator;
use m3enum::invariants::{expand_family, family_params, InvariantParams, SignClass, c_len, d_len};
use m3enum::poly::{isolate_roots, nonnegative_on, Poly, Positivity, SturmChain};
use m3enum::rational::{int, rat, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pow2(e: usize) -> Rational {
    Rational::from_integer(BigInt::one() << e)
}

fn pow4(e: usize) -> Rational {
    pow2(2 * e)
}

fn code_strategy() -> impl Strategy<Value = (u64, usize, usize)> {
    (any::<u64>(), 2usize..=10).prop_flat_map(|(seed, n)| (Just(seed), Just(n), 1usize..=n / 2))
}

fn family_strategy() -> impl Strategy<Value = InvariantParams> {
    (0usize..6)
        .prop_map(|m| [6 * m + 5, 6 * m + 7])
        .prop_flat_map(|ns| prop::sample::select(ns.to_vec()))
        .prop_filter("n ≤ 35", |&n| n <= 35)
        .prop_flat_map(|n| {
            let cs = prop::collection::vec(-400i64..400, c_len(n) - 1);
            let ds = prop::collection::vec(-400i64..400, d_len(n));
            (Just(n), cs, ds)
        })
        .prop_map(|(n, cs, ds)| {
            let mut c = vec![int(1)];
            c.extend(cs.into_iter().map(int));
            InvariantParams::new(n, c, ds.into_iter().map(int).collect()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    /// Code-side identities: the transform of `A` is the dual's enumerator,
    /// transforming back recovers `A`, and nonzero weights come in triples.
    #[test]
    fn random_codes((seed, n, k) in code_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_self_orthogonal(&mut rng, n, k);
        let k = code.k();
        let a = code.weight_enumerator(10).unwrap();
        prop_assert_eq!(a.total(), pow4(k));
        prop_assert!(a.is_even_only());

        let b = a.macwilliams(&pow4(k)).unwrap();
        let dual = code.hermitian_dual();
        prop_assert_eq!(&b, &dual.weight_enumerator(10).unwrap());
        prop_assert_eq!(&b.macwilliams(&pow4(n - k)).unwrap(), &a);

        let three = BigInt::from(3);
        for e in [&a, &b] {
            for c in &e.coeffs()[1..] {
                prop_assert!(c.is_integer() && c.to_integer().is_multiple_of(&three));
            }
        }
        prop_assert!(Enumerator::logical_enumerator(&a, &b).is_ok());
        prop_assert!(code.rall_signs(10).is_ok());

        // [[n, 1]] members land in the invariant family
        if n - 2 * k == 1 && SignClass::of(n).is_some() {
            let p = family_params(&a).unwrap();
            prop_assert_eq!(&expand_family(&p), &a);
        }
    }

    /// Family-side identities for arbitrary rational points of the invariant ring.
    #[test]
    fn random_family_points(p in family_strategy()) {
        let n = p.n;
        let a = expand_family(&p);
        prop_assert!(a.is_even_only());
        let b = a.macwilliams_rational(&pow2(n - 1));
        prop_assert_eq!(&b.macwilliams_rational(&pow2(n + 1)), &a);
        let c = Enumerator::difference(&b, &a).unwrap();
        prop_assert!(c.is_odd_only());
        prop_assert_eq!(&family_params(&a).unwrap(), &p);

        let map = build_map(&a).unwrap();
        if let NoiseExponent::Defined { nu, .. } = map.noise_exponent() {
            let class = SignClass::of(n).unwrap();
            let residue = match class { SignClass::One => 1, SignClass::Five => 2 };
            prop_assert_eq!(nu % 3, residue, "n = {}, nu = {}", n, nu);
        }
    }

    /// Sturm counts agree with planted roots and bound sampled sign changes.
    #[test]
    fn sturm_vs_sampling(roots in prop::collection::btree_set(1i64..200, 0..6), extra in -50i64..50, shift in 1i64..20) {
        // planted roots r/200 times a quadratic with no real roots
        let mut p = Poly::new(vec![int(shift), int(extra), int(100)]);
        if extra * extra >= 400 * shift {
            p = Poly::constant(int(1));
        }
        for &r in &roots {
            p = &p * &Poly::linear(-rat(r, 200), int(1));
        }
        let (lo, hi) = (Rational::zero(), Rational::one());
        let iso = isolate_roots(&p, &lo, &hi);
        prop_assert_eq!(iso.len(), roots.len());
        prop_assert_eq!(SturmChain::new(&p).count_open(&lo, &hi), roots.len());
        for (interval, &r) in iso.iter().zip(&roots) {
            let root = rat(r, 200);
            prop_assert!(interval.lo() <= &root && &root <= interval.hi());
        }
        let samples: Vec<i8> = (0..=997).map(|i| p.sign_at(&rat(2 * i + 1, 1996))).filter(|s| *s != 0).collect();
        let changes = samples.windows(2).filter(|w| w[0] != w[1]).count();
        prop_assert!(changes <= roots.len());
        let expect_nonneg = roots.is_empty() && p.sign_at(&lo) >= 0;
        prop_assert_eq!(matches!(nonnegative_on(&p, &lo, &hi), Positivity::NonNegative), expect_nonneg);
    }

    /// LP optima carry a valid dual certificate and match brute-force vertex scans.
    #[test]
    fn lp_against_vertices(
        cuts in prop::collection::vec((-6i64..7, -6i64..7, -20i64..21), 0..6),
        obj in (-5i64..6, -5i64..6),
    ) {
        let mut cons = vec![
            LinConstraint::new(vec![int(1), int(0)], Sense::Ge, int(-10)),
            LinConstraint::new(vec![int(1), int(0)], Sense::Le, int(10)),
            LinConstraint::new(vec![int(0), int(1)], Sense::Ge, int(-10)),
            LinConstraint::new(vec![int(0), int(1)], Sense::Le, int(10)),
        ];
        for (a, b, r) in cuts {
            cons.push(LinConstraint::new(vec![int(a), int(b)], Sense::Le, int(r)));
        }
        let p = Polytope::new(2, cons);
        let objective = [int(obj.0), int(obj.1)];
        let vertices = enumerate_vertices_2d(&p).unwrap();
        for v in &vertices {
            prop_assert!(p.contains(v));
            prop_assert!(p.constraints.iter().filter(|c| c.is_tight(v)).count() >= 2);
        }
        match lp_feasible(&p, Some(&objective)) {
            LpOutcome::Infeasible => prop_assert!(vertices.is_empty()),
            LpOutcome::Optimal { point, value, dual } => {
                prop_assert!(p.contains(&point));
                prop_assert!(audit_dual(&p, &objective, &point, &value, &dual).is_ok());
                let best = vertices.iter().map(|v| &objective[0] * &v[0] + &objective[1] * &v[1]).max().unwrap();
                prop_assert_eq!(value, best);
            }
            LpOutcome::Unbounded { .. } => prop_assert!(false, "box-bounded region reported unbounded"),
        }
    }
}

#[test]
fn default_sign_is_the_useful_one_for_both_classes() {
    // class 5: 5-qubit; class 1: trivial [[1,1]] has ε_out = ε under Plus
    let five = Enumerator::from_ints(&[1, 0, 0, 0, 15, 0]);
    assert!(matches!(build_map_with(&five, LogicalSign::Minus).unwrap().noise_exponent(), NoiseExponent::Defined { nu: 2, .. }));
    let one = Enumerator::from_ints(&[1, 0]);
    let map = build_map_with(&one, LogicalSign::Plus).unwrap();
    assert_eq!(map.eps_out(&rat(1, 7)), Some(rat(1, 7)));
}
