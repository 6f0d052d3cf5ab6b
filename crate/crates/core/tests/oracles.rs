mod common;

use rayon::prelude::*;

use common::sweep;
use recouple::exact::HalfInt;
use recouple::labels::SixJLabels;
use recouple::oracle::{su2_6j, sixj_via_df6j, sixj_via_rtr6j};
use recouple::sixj::{sixj, MethodChoice};

#[test]
fn even_n_oracles_agree_with_production() {
    let labels = sweep(&[4, 6, 8, 10], 5);
    let bad: Vec<SixJLabels> = labels
        .par_iter()
        .filter(|x| {
            let v = sixj(x, MethodChoice::Auto).unwrap().value;
            sixj_via_df6j(x).unwrap() != v || sixj_via_rtr6j(x, false).unwrap() != v
        })
        .copied()
        .collect();
    assert!(bad.is_empty(), "{} of {} disagree, first {:?}", bad.len(), labels.len(), bad.first());
}

#[test]
fn extra_phase_is_wrong() {
    let x = SixJLabels::new(4, [2, 2, 2, 2, 2, 2]);
    let v = sixj(&x, MethodChoice::Auto).unwrap().value;
    let broken = sweep(&[4, 6], 4)
        .iter()
        .filter(|y| sixj_via_rtr6j(y, true).unwrap() != sixj(y, MethodChoice::Auto).unwrap().value)
        .count();
    assert!(broken > 0);
    assert_eq!(sixj_via_rtr6j(&x, false).unwrap(), v);
}

#[test]
fn so4_is_su2_squared() {
    let h = HalfInt::from_twice;
    for x in sweep(&[4], 6) {
        let s = su2_6j(h(x.a), h(x.b), h(x.e), h(x.d), h(x.c), h(x.f));
        let v = sixj(&x, MethodChoice::Auto).unwrap().value;
        assert_eq!(v, &s * &s, "{x}");
    }
}

#[test]
fn inadmissible_oracles_vanish() {
    let x = SixJLabels::new(6, [1, 1, 4, 1, 1, 2]);
    assert!(sixj_via_df6j(&x).unwrap().is_zero());
    assert!(sixj_via_rtr6j(&x, false).unwrap().is_zero());
}
