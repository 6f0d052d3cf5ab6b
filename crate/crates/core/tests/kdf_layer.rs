mod common;

use common::sweep;
use recouple::exact::GammaExact;
use recouple::kdf::*;
use recouple::sixj::{c_alpha_with, normalization, EvalOptions, Method};
use recouple::Error;

#[test]
fn variants_reproduce_pochhammer_forms() {
    let mut defined = 0;
    let mut indefinite = 0;
    for x in sweep(&[4, 6, 8], 4) {
        let target = c_alpha_with(&x, Method::A, &EvalOptions::default()).unwrap().value;
        for v in KdFVariant::ALL {
            match kdf_params_for(&x, v) {
                Ok((p, pre)) => {
                    defined += 1;
                    for t in [Termination::Shortest, Termination::Longest] {
                        let s = kdf_eval_with(&p, t).unwrap();
                        let value = (pre.clone() * GammaExact::rational(s)).to_rational().unwrap() * normalization(&x);
                        assert_eq!(value, target, "{v} {x} {t:?}");
                    }
                }
                Err(Error::IndefinitePrefactor { .. }) => indefinite += 1,
                Err(e) => panic!("{v} {x}: {e}"),
            }
        }
    }
    assert!(defined > indefinite);
}

#[test]
fn balance_and_dependencies() {
    for x in sweep(&[4, 5, 6, 8], 4) {
        for v in KdFVariant::ALL {
            let p = kdf_params_formal(&x.into(), v);
            assert!(is_balanced(&p), "{v} {x}");
            assert!(check_dependencies(&p, v.family()), "{v} {x}");
        }
    }
}

#[test]
fn hook_reflection_pairs() {
    for x in sweep(&[4, 6, 8], 4) {
        for pair in HookPair::ALL {
            assert!(hook_reflection_map_check(&x, pair), "{pair:?} {x}");
        }
    }
}

#[test]
fn variant_3b_is_fixed_by_single_reflection() {
    use recouple::labels::{hook_reflect, FormalLabels, HookReflection};
    for x in sweep(&[4, 6, 8], 4) {
        let f = FormalLabels::from(x);
        let y = hook_reflect(&f, HookReflection::SingleD);
        assert_eq!(
            param_key(&kdf_params_formal(&f, KdFVariant::V3b)),
            param_key(&kdf_params_formal(&y, KdFVariant::V3b)),
            "{x}"
        );
    }
}

#[test]
fn termination_comes_from_numerators() {
    for x in sweep(&[4, 5, 6], 4) {
        for v in KdFVariant::ALL {
            let p = kdf_params_formal(&x.into(), v);
            assert_eq!(p.a1, p.d[0]);
            assert!(p.b.iter().any(|b| b.is_nonpositive_integer()), "{v} {x}");
            assert!(p.b_prime.iter().any(|b| b.is_nonpositive_integer()), "{v} {x}");
        }
    }
}
