use rayon::prelude::*;
use serde_json::json;

use recouple::exact::{GammaExact, HalfInt};
use recouple::kdf::{
    check_dependencies, hook_reflection_map_check, is_balanced, kdf_eval_with, kdf_params_for, HookPair, KdFVariant,
    Termination,
};
use recouple::labels::{admissible_up_to, shelepin, symmetry_orbit, SixJLabels};
use recouple::oracle::{su2_6j, sixj_via_df6j, sixj_via_rtr6j};
use recouple::sixj::{
    c_alpha, c_alpha_factorial, c_alpha_near_stretched, c_alpha_stretched, normalization, residual_sqrtpi_exp, sixj,
    FactorialForm, Method, MethodChoice,
};
use recouple::spn::{admissible_sp_labels, renormalized, sp_classical_symmetries, sp_symmetry_transform, u_sp, SpMethod};
use recouple::Error;

use crate::args::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    CrossFormula,
    Oracles,
    Symmetry,
    Rationality,
    Stretched,
    So4,
    Kdf,
    Sp,
}

pub struct Summary {
    pub suite: Suite,
    pub checked: usize,
    pub failures: Vec<String>,
    pub note: Option<String>,
}

impl Summary {
    pub fn render(&self, format: Format) -> String {
        let name = clap::ValueEnum::to_possible_value(&self.suite).expect("named").get_name().to_string();
        match format {
            Format::Json => json!({
                "kind": "verify",
                "suite": name,
                "checked": self.checked,
                "mismatches": self.failures.len(),
                "examples": self.failures.iter().take(5).collect::<Vec<_>>(),
                "note": self.note,
            })
            .to_string(),
            _ => {
                let mut s = format!("{name}: {} checked, {} mismatches", self.checked, self.failures.len());
                if let Some(note) = &self.note {
                    s += &format!(" ({note})");
                }
                for f in self.failures.iter().take(5) {
                    s += &format!("\n  {f}");
                }
                s
            }
        }
    }
}

fn labels_in(ns: &[i64], max: i64) -> Vec<SixJLabels> {
    ns.iter().flat_map(|&n| admissible_up_to(n, max)).collect()
}

/// Runs `check` on every item in parallel; failures keep input order.
fn run<T: Sync, F>(items: &[T], check: F) -> Vec<String>
where
    F: Fn(&T) -> Vec<String> + Sync + Send,
{
    items.par_iter().map(check).collect::<Vec<_>>().concat()
}

fn fails(ok: bool, what: impl FnOnce() -> String) -> Vec<String> {
    if ok {
        Vec::new()
    } else {
        vec![what()]
    }
}

fn cross_formula(x: &SixJLabels) -> Vec<String> {
    let Ok(a) = c_alpha(x, Method::A).map(|c| c.value) else {
        return vec![format!("{x}: method A failed")];
    };
    let mut out = Vec::new();
    for m in [Method::B, Method::C, Method::T3] {
        if c_alpha(x, m).map(|c| c.value).as_ref() != Ok(&a) {
            out.push(format!("{x}: {m}"));
        }
    }
    for f in [FactorialForm::First, FactorialForm::Second, FactorialForm::Third] {
        if c_alpha_factorial(x, f).map(|c| c.value).as_ref() != Ok(&a) {
            out.push(format!("{x}: {f:?} factorial form"));
        }
    }
    out
}

fn oracles(x: &SixJLabels) -> Vec<String> {
    let v = sixj(x, MethodChoice::Auto).map(|s| s.value);
    let df = sixj_via_df6j(x);
    let rtr = sixj_via_rtr6j(x, false);
    fails(v.is_ok() && v == df && v == rtr, || format!("{x}"))
}

fn symmetry(x: &SixJLabels) -> Vec<String> {
    let v = sixj(x, MethodChoice::Forced(Method::A)).map(|s| s.value);
    let orbit = symmetry_orbit(x).unwrap_or_default();
    orbit
        .iter()
        .filter(|y| sixj(y, MethodChoice::Forced(Method::A)).map(|s| s.value) != v)
        .map(|y| format!("{x} differs from {y}"))
        .collect()
}

fn rationality(x: &SixJLabels) -> Vec<String> {
    [Method::A, Method::B, Method::C]
        .into_iter()
        .filter(|&m| residual_sqrtpi_exp(x, m) != Ok(0) || c_alpha(x, m).is_err())
        .map(|m| format!("{x}: {m}"))
        .collect()
}

fn stretched(x: &SixJLabels) -> Vec<String> {
    let closed = if x.e == x.a + x.b {
        c_alpha_stretched(x)
    } else if x.e + 2 == x.a + x.b {
        c_alpha_near_stretched(x)
    } else {
        return Vec::new();
    };
    let a = c_alpha(x, Method::A);
    fails(closed.is_ok() && closed.map(|c| c.value) == a.map(|c| c.value), || format!("{x}"))
}

fn so4(x: &SixJLabels) -> Vec<String> {
    let h = HalfInt::from_twice;
    let s = su2_6j(h(x.a), h(x.b), h(x.e), h(x.d), h(x.c), h(x.f));
    let v = sixj(x, MethodChoice::Auto).map(|v| v.value);
    fails(v == Ok(&s * &s), || format!("{x}"))
}

fn kdf(x: &SixJLabels) -> Vec<String> {
    let Ok(target) = c_alpha(x, Method::A).map(|c| c.value) else {
        return vec![format!("{x}: method A failed")];
    };
    let mut out = Vec::new();
    for v in KdFVariant::ALL {
        match kdf_params_for(x, v) {
            Ok((p, pre)) => {
                if !is_balanced(&p) || !check_dependencies(&p, v.family()) {
                    out.push(format!("{x}: {v} parameters"));
                }
                for t in [Termination::Shortest, Termination::Longest] {
                    let value = kdf_eval_with(&p, t)
                        .and_then(|s| (pre.clone() * GammaExact::rational(s)).to_rational())
                        .map(|q| q * normalization(x));
                    if value.as_ref() != Ok(&target) {
                        out.push(format!("{x}: {v} value"));
                    }
                }
            }
            Err(Error::IndefinitePrefactor { .. }) => {}
            Err(e) => out.push(format!("{x}: {v}: {e}")),
        }
    }
    for pair in HookPair::ALL {
        if !hook_reflection_map_check(x, pair) {
            out.push(format!("{x}: {pair:?}"));
        }
    }
    out
}

fn sp(n: i64) -> (usize, Vec<String>) {
    let labels = admissible_sp_labels(n);
    let failures = run(&labels, |x| {
        let us: Vec<_> = SpMethod::ALL.iter().map(|&m| u_sp(x, m).map(|u| u.value)).collect();
        let Ok(u) = us[0].clone() else {
            return vec![format!("{x}: evaluation failed")];
        };
        let mut out = fails(us.iter().all(|v| v.as_ref() == Ok(&u)), || format!("{x}: methods differ"));
        let vanish = shelepin(&SixJLabels::new(n, x.as_array())).map(|ra| ra.alpha.iter().any(|&al| al > n));
        if vanish == Ok(true) && !u.is_zero() {
            out.push(format!("{x}: should vanish"));
        }
        match sp_symmetry_transform(x) {
            Ok(sym) if u_sp(&sym.labels, SpMethod::A).map(|v| v.value) == Ok(&sym.factor * &u) => {}
            _ => out.push(format!("{x}: interchange relation")),
        }
        let r = renormalized(x, SpMethod::A);
        for y in sp_classical_symmetries(x) {
            if renormalized(&y, SpMethod::A) != r {
                out.push(format!("{x}: not invariant under {y}"));
            }
        }
        out
    });
    (labels.len(), failures)
}

pub fn verify(suite: Suite, ns: &[i64], max: i64) -> Summary {
    let mut note = None;
    let (checked, failures) = match suite {
        Suite::Sp => {
            let per_n: Vec<_> = ns.iter().filter(|&&n| n >= 1).map(|&n| sp(n)).collect();
            (per_n.iter().map(|p| p.0).sum(), per_n.into_iter().flat_map(|p| p.1).collect())
        }
        _ => {
            let check: fn(&SixJLabels) -> Vec<String> = match suite {
                Suite::CrossFormula => cross_formula,
                Suite::Oracles => oracles,
                Suite::Symmetry => symmetry,
                Suite::Rationality => rationality,
                Suite::Stretched => stretched,
                Suite::So4 => so4,
                Suite::Kdf => kdf,
                Suite::Sp => unreachable!(),
            };
            let keep = |n: i64| match suite {
                Suite::Oracles | Suite::Kdf => n >= 4 && n % 2 == 0,
                Suite::Rationality => n >= 5 && n % 2 == 1,
                Suite::So4 => n == 4,
                _ => n >= 4,
            };
            let used: Vec<i64> = ns.iter().copied().filter(|&n| keep(n)).collect();
            if used.len() < ns.len() {
                note = Some(format!("n restricted to {used:?}"));
            }
            let labels = labels_in(&used, max);
            let labels: Vec<SixJLabels> = match suite {
                Suite::Stretched => labels.into_iter().filter(|x| x.e == x.a + x.b || x.e + 2 == x.a + x.b).collect(),
                _ => labels,
            };
            (labels.len(), run(&labels, check))
        }
    };
    Summary { suite, checked, failures, note }
}
