//! LP bounds against codes that realize them.

use m3enum::bounds::{
    classical_distance_bound_selfdual, max_distance_bound, n7_lattice, selfdual_param_ranges, QuantumFilter,
};
use m3enum::distill::dual_and_logical;
use m3enum::gf4core::parse_code;
use m3enum::invariants::family_params;
use m3enum::rational::{int, rat};

/// GF(4) addition is XOR on the 2-bit encoding; multiplication by log tables.
fn mul(a: u8, b: u8) -> u8 {
    if a == 0 || b == 0 {
        return 0;
    }
    let log = |x: u8| (x - 1) as usize; // 1 -> 0, ω -> 1, ω² -> 2
    [1, 2, 3][(log(a) + log(b)) % 3]
}

#[test]
fn simplex_code_meets_the_odd_seven_bound() {
    let rows = [[0u8, 0, 0, 1, 1, 1, 1], [0, 1, 1, 0, 0, 1, 1], [1, 0, 1, 0, 1, 0, 1]];
    let mut weights = [0u64; 8];
    for x in 0..4u8 {
        for y in 0..4u8 {
            for z in 0..4u8 {
                let w = (0..7).filter(|&i| mul(x, rows[0][i]) ^ mul(y, rows[1][i]) ^ mul(z, rows[2][i]) != 0).count();
                weights[w] += 1;
            }
        }
    }
    assert_eq!(weights, [1, 0, 0, 0, 21, 0, 42, 0]);

    let code = parse_code("7 3\n0001111\n0110011\n1010101\n").unwrap();
    assert!(code.is_self_orthogonal());
    let a = code.weight_enumerator(4).unwrap();
    assert_eq!(a.coeffs(), &weights.map(|w| int(w as i64)));
    let (_, c) = dual_and_logical(&a);
    assert!(c.first_negative().is_none());
    family_params(&a).unwrap();

    // d = 4 is realized, and the LP rules out 6
    assert_eq!(classical_distance_bound_selfdual(7, false).unwrap().d, 4);
    assert_eq!(classical_distance_bound_selfdual(7, true).unwrap().d, 4);
}

#[test]
fn five_qubit_code_sits_at_the_distance_bound() {
    assert_eq!(max_distance_bound(5, false).unwrap().d, 3);
    assert_eq!(max_distance_bound(5, true).unwrap().d, 3);
    assert_eq!(max_distance_bound(23, true).unwrap().d, 7);
}

#[test]
fn quantum_ranges_shrink() {
    for n in [6, 8, 10] {
        let classical = selfdual_param_ranges(n, false);
        let quantum = selfdual_param_ranges(n, true);
        for ((clo, chi), (qlo, qhi)) in classical.iter().zip(&quantum) {
            assert!(qlo >= clo && qhi <= chi, "n = {n}");
        }
        assert_eq!(quantum[0].1, Some(int(0)));
    }
    assert_eq!(selfdual_param_ranges(8, false)[0], (Some(int(-12)), Some(rat(108, 5))));
    assert_eq!(selfdual_param_ranges(10, false)[0], (Some(int(-15)), Some(rat(135, 4))));
}

#[test]
fn n7_filters_are_nested() {
    let none = n7_lattice(QuantumFilter::None).unwrap();
    let pure = n7_lattice(QuantumFilter::PureStateOnly).unwrap();
    let full = n7_lattice(QuantumFilter::Full).unwrap();
    assert_eq!((none.len(), pure.len(), full.len()), (18, 9, 6));
    assert!(full.iter().all(|p| none.contains(p)));
    assert!(pure.iter().all(|p| none.contains(p)));
}
