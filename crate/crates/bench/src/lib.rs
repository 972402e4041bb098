//! Inputs shared by the benchmarks.

use rrclosure::{CutIdeal, MonomialIdeal, Rational, ValueGroup};

/// `(x^4, x^3 y, x y^3, y^4)`, whose closure gains `x^2 y^2`.
pub fn gap_ideal() -> MonomialIdeal {
    MonomialIdeal::from_exponents(&[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]).expect("valid ideal")
}

/// A two-variable ideal with `gens` generators along the line `a + b = 2 gens - 2`,
/// every other one removed so the closure has something to add.
pub fn sparse_staircase(gens: i64) -> MonomialIdeal {
    let d = 2 * gens - 2;
    let exps: Vec<Vec<i64>> = (0..=d).step_by(2).map(|a| vec![a, d - a]).collect();
    let refs: Vec<&[i64]> = exps.iter().map(Vec::as_slice).collect();
    MonomialIdeal::from_exponents(&refs).expect("valid ideal")
}

/// A cut over `lex(Q, Z)` used for the arithmetic benchmarks.
pub fn sample_cut() -> (ValueGroup, CutIdeal) {
    let group = ValueGroup::from_code("QZ").expect("valid code");
    let cut = CutIdeal::gt(&group, &[Rational::new(1, 2)]).expect("valid cut");
    (group, cut)
}
