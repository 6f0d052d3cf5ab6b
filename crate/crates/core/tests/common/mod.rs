#![allow(dead_code)]

use recouple::labels::SixJLabels;

/// Admissible label sets with every entry in `0..=max`, in lexicographic order.
pub fn admissible_labels(n: i64, max: i64) -> Vec<SixJLabels> {
    let mut out = Vec::new();
    let r = 0..=max;
    for a in r.clone() {
        for b in r.clone() {
            for e in r.clone() {
                if !recouple::labels::triangle_ok(a, b, e) {
                    continue;
                }
                for d in r.clone() {
                    for c in r.clone() {
                        if !recouple::labels::triangle_ok(c, d, e) {
                            continue;
                        }
                        for f in r.clone() {
                            let x = SixJLabels::new(n, [a, b, e, d, c, f]);
                            if x.admissible() {
                                out.push(x);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn sweep(ns: &[i64], max: i64) -> Vec<SixJLabels> {
    ns.iter().flat_map(|&n| admissible_labels(n, max)).collect()
}
