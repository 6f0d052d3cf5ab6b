use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use recouple::exact::{gamma_exact, gamma_ratio_product, integer, pochhammer, HalfInt, SurdValue};
use recouple::labels::{
    array_permutations, canonical, classical_symmetries, shelepin, symmetry_orbit, SixJLabels,
};
use recouple::sixj::forms::{double_form, FactorialForm};
use recouple::sixj::{
    c_alpha, c_alpha_factorial, c_alpha_near_stretched, c_alpha_stretched, count_nonzero_terms, dim, dim_formal,
    select_method, sixj, threej_zero, Method, MethodChoice, SixJCache,
};

/// Admissible labels built from a nonnegative array with rows
/// `r1k`, `r1k + u`, `r1k + v`.
fn labels_from_rows(row: [i64; 4], u: i64, v: i64, n: i64) -> SixJLabels {
    let m = *row.iter().min().expect("four");
    let (u, v) = (u.max(-m), v.max(-m));
    let r = |i: usize, k: usize| row[k - 1] + [0, u, v][i - 1];
    SixJLabels::new(
        n,
        [
            r(1, 1) + r(2, 2),
            r(1, 1) + r(3, 3),
            r(2, 2) + r(3, 3),
            r(1, 3) + r(2, 4),
            r(1, 2) + r(3, 4),
            r(2, 1) + r(3, 4),
        ],
    )
}

fn admissible(max_row: i64, n: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = SixJLabels> {
    (prop::array::uniform4(0..=max_row), -max_row..=max_row, -max_row..=max_row, n)
        .prop_map(|(row, u, v, n)| labels_from_rows(row, u, v, n))
}

fn half() -> impl Strategy<Value = HalfInt> {
    (-24i64..=24).prop_map(HalfInt::from_twice)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn gamma_recurrence(x in half()) {
        prop_assume!(!x.is_nonpositive_integer());
        let lhs = gamma_exact(x + 1).unwrap();
        let rhs = recouple::exact::GammaExact::rational(x.to_rational()) * gamma_exact(x).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_ratio_matches_factors(nums in prop::collection::vec(half(), 0..4), dens in prop::collection::vec(half(), 0..4)) {
        prop_assume!(nums.iter().chain(&dens).all(|x| !x.is_nonpositive_integer()));
        let mut direct = recouple::exact::GammaExact::one();
        for &x in &nums {
            direct = direct * gamma_exact(x).unwrap();
        }
        for &x in &dens {
            direct = direct / gamma_exact(x).unwrap();
        }
        prop_assert_eq!(gamma_ratio_product(&nums, &dens).unwrap(), direct);
    }

    #[test]
    fn pochhammer_as_gamma_ratio(a in half(), k in 0u64..8) {
        prop_assume!(!a.is_nonpositive_integer());
        let g = gamma_ratio_product(&[a + k as i64], &[a]).unwrap().to_rational().unwrap();
        prop_assert_eq!(pochhammer(&a.to_rational(), k), g);
    }

    #[test]
    fn surd_normal_form(p in -50i64..50, q in 1i64..50, s in 0i64..200, t in 1i64..200) {
        let coeff = BigRational::new(p.into(), q.into());
        let v = SurdValue::new(coeff.clone(), BigRational::new(s.into(), t.into())).unwrap();
        let again = SurdValue::new(v.coeff().clone(), BigRational::from_integer(v.radicand().clone().into())).unwrap();
        prop_assert_eq!(&again, &v);
        let sq = &v * &v;
        prop_assert!(sq.is_rational());
        prop_assert_eq!(sq.coeff().clone(), coeff.clone() * &coeff * BigRational::new(s.into(), t.into()));
        prop_assert_eq!(v.to_string().parse::<SurdValue>().unwrap(), v);
    }

    #[test]
    fn array_sums_and_signs(x in admissible(6, 4..=12)) {
        prop_assert!(x.admissible());
        let ra = shelepin(&x).unwrap();
        prop_assert!(ra.min_entry() >= 0);
        prop_assert_eq!(ra.alpha.iter().sum::<i64>(), ra.beta.iter().sum::<i64>());
        prop_assert_eq!(ra.to_labels(x.n), x);
    }

    #[test]
    fn orbit_is_closed(x in admissible(4, 4..=8)) {
        let orbit = symmetry_orbit(&x).unwrap();
        prop_assert_eq!(144 % orbit.len(), 0);
        let y = orbit.iter().next_back().copied().unwrap();
        let ra = shelepin(&y).unwrap();
        for (rows, cols) in array_permutations() {
            prop_assert!(orbit.contains(&ra.permuted(rows, cols).to_labels(x.n)));
        }
        for z in classical_symmetries(&x) {
            prop_assert!(orbit.contains(&z));
        }
        prop_assert_eq!(canonical(&y).unwrap(), *orbit.iter().next().unwrap());
    }

    #[test]
    fn methods_agree(x in admissible(4, 4..=10)) {
        let a = c_alpha(&x, Method::A).unwrap().value;
        for m in [Method::B, Method::C, Method::T3] {
            prop_assert_eq!(&c_alpha(&x, m).unwrap().value, &a, "{}", m);
        }
        for f in [FactorialForm::First, FactorialForm::Second, FactorialForm::Third] {
            prop_assert_eq!(&c_alpha_factorial(&x, f).unwrap().value, &a);
        }
    }

    #[test]
    fn sixj_is_orbit_invariant(x in admissible(5, 4..=11)) {
        let v = sixj(&x, MethodChoice::Forced(Method::A)).unwrap().value;
        for y in symmetry_orbit(&x).unwrap() {
            prop_assert_eq!(&sixj(&y, MethodChoice::Forced(Method::B)).unwrap().value, &v);
        }
        prop_assert_eq!(&sixj(&x, MethodChoice::Auto).unwrap().value, &v);
        prop_assert!(v.square() <= BigRational::one());
    }

    #[test]
    fn closed_forms_match(row in prop::array::uniform4(0i64..6), u in -5i64..6, v in -5i64..6, n in 4i64..=10, near in any::<bool>()) {
        let mut row = row;
        row[0] = i64::from(near);
        let m = *row.iter().min().unwrap();
        prop_assume!(u >= -m && v >= -m);
        let x = labels_from_rows(row, u, v, n);
        let closed = if near { c_alpha_near_stretched(&x) } else { c_alpha_stretched(&x) };
        prop_assert_eq!(closed.unwrap().value, c_alpha(&x, Method::A).unwrap().value);
    }

    #[test]
    fn selection_bound_holds(x in admissible(12, 4..=10)) {
        let sel = select_method(&x).unwrap();
        prop_assert!(count_nonzero_terms(&sel.variant, sel.method).unwrap() <= sel.predicted_terms);
        prop_assert!(symmetry_orbit(&x).unwrap().contains(&sel.variant));
    }

    #[test]
    fn inadmissible_is_zero(x in prop::array::uniform6(0i64..6), n in 4i64..9) {
        let l = SixJLabels::new(n, x);
        prop_assume!(!l.admissible());
        prop_assert!(sixj(&l, MethodChoice::Auto).unwrap().value.is_zero());
        if l.parity_ok() {
            prop_assert!(c_alpha(&l, Method::A).unwrap().value.is_zero());
        }
    }

    #[test]
    fn dimension_under_reflection(n in 3i64..14, l in 0i64..20) {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(dim_formal(n, -l - n + 2).unwrap(), dim(n, l) * integer(sign));
    }

    #[test]
    fn threej_with_zero(n in 4i64..12, l in 0i64..8) {
        let v = threej_zero(n, l, l, 0).unwrap();
        prop_assert_eq!(v.square(), BigRational::one() / dim(n, l));
        prop_assert!(!v.is_negative());
    }

    #[test]
    fn cache_agrees(x in admissible(4, 4..=8)) {
        let cache = SixJCache::new(16);
        for y in symmetry_orbit(&x).unwrap() {
            prop_assert_eq!(cache.sixj(&y).unwrap(), sixj(&y, MethodChoice::Auto).unwrap());
        }
        prop_assert_eq!(cache.len(), 1);
    }
}

/// Spans `hi - lo` of the summation box derived from the factorial filters
/// compared with the closed interval lengths.
#[test]
fn summation_intervals() {
    let mut checked = 0;
    for n in [4, 5, 6] {
        for a in 0..=6i64 {
            for b in 0..=6 {
                for e in 0..=6 {
                    for d in 0..=6 {
                        for c in 0..=6 {
                            for f in 0..=6 {
                                let x = SixJLabels::new(n, [a, b, e, d, c, f]);
                                if !x.admissible() {
                                    continue;
                                }
                                checked += 1;
                                let span = |form| {
                                    let r = double_form(&x, form).unwrap().ranges().unwrap();
                                    [r[0].1 - r[0].0, r[1].1 - r[1].0]
                                };
                                let expect_first = if b + c - e - f >= 0 {
                                    [(a - c + f).min(d + f - b) / 2, (d + e - c) / 2]
                                } else {
                                    [(a + b - e).min(c + d - e) / 2, (b + d - f) / 2]
                                };
                                let expect_second = [
                                    [a - c + f, d + f - b, a + b - e, c + d - e].into_iter().min().unwrap() / 2,
                                    (b - d + f).min(c + f - a) / 2,
                                ];
                                let expect_third = [(a + b - e).min(a + c - f) / 2, (b - d + f).min(c - d + e) / 2];
                                assert_eq!(span(FactorialForm::First), expect_first, "{x}");
                                assert_eq!(span(FactorialForm::Second), expect_second, "{x}");
                                assert_eq!(span(FactorialForm::Third), expect_third, "{x}");
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 0);
}
