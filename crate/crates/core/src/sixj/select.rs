//! Choice of evaluator by predicted term count over the symmetry orbit.

use super::Method;
use crate::error::Result;
use crate::labels::{shelepin, symmetry_orbit, RArray, SixJLabels};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Selection {
    pub method: Method,
    pub predicted_terms: u64,
    /// Orbit member the method is applied to.
    pub variant: SixJLabels,
}

fn rank(m: Method) -> u8 {
    match m {
        Method::StretchedE => 0,
        Method::NearStretchedE => 1,
        Method::A => 2,
        Method::B => 3,
        Method::C => 4,
        Method::T3 => 5,
    }
}

/// Term count bound of `method` on the array, `None` when it does not apply.
pub fn cost(ra: &RArray, method: Method) -> Option<u64> {
    let r11 = ra.at(1, 1) as u64;
    match method {
        Method::StretchedE => (r11 == 0).then_some(1),
        Method::NearStretchedE => (r11 == 1).then_some(1),
        Method::A => Some((r11 + 1) * (ra.at(1, 3) as u64 + 1)),
        Method::B | Method::C => Some((r11 + 1) * (ra.at(3, 1) as u64 + 1)),
        Method::T3 => Some((r11 + 1) * (r11 + 2) * (2 * r11 + 3) / 6),
    }
}

/// Applicable methods with their costs on these labels (no orbit search).
pub fn candidates(labels: &SixJLabels) -> Result<Vec<(Method, u64)>> {
    let ra = shelepin(labels)?;
    Ok(Method::ALL.into_iter().filter_map(|m| cost(&ra, m).map(|c| (m, c))).collect())
}

/// Cheapest method over all orbit members; ties go to the earlier method in
/// `StretchedE, NearStretchedE, A, B, C, T3`, then to the smaller variant.
pub fn select_method(labels: &SixJLabels) -> Result<Selection> {
    let mut best: Option<(u64, u8, Selection)> = None;
    for variant in symmetry_orbit(labels)? {
        let ra = shelepin(&variant)?;
        for m in Method::ALL {
            let Some(c) = cost(&ra, m) else { continue };
            let better = match &best {
                None => true,
                Some((bc, br, _)) => (c, rank(m)) < (*bc, *br),
            };
            if better {
                best = Some((c, rank(m), Selection { method: m, predicted_terms: c, variant }));
            }
        }
    }
    Ok(best.expect("orbit is nonempty").2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stretched_wins() {
        let s = select_method(&SixJLabels::new(6, [2, 2, 4, 2, 2, 4])).unwrap();
        assert_eq!((s.method, s.predicted_terms), (Method::StretchedE, 1));
    }

    #[test]
    fn all_twos() {
        let x = SixJLabels::new(6, [2; 6]);
        let c = candidates(&x).unwrap();
        assert!(c.contains(&(Method::A, 4)));
        assert!(c.contains(&(Method::T3, 5)));
        let s = select_method(&x).unwrap();
        assert_eq!((s.method, s.predicted_terms), (Method::NearStretchedE, 1));
    }

    #[test]
    fn triple_sum_wins_for_thin_arrays() {
        // r11 = 2 with the rest of its row and column at least 4.
        let x = SixJLabels::new(8, [8, 8, 12, 10, 10, 10]);
        let s = select_method(&x).unwrap();
        assert_eq!(s.method, Method::T3);
        assert_eq!(s.predicted_terms, 14);
    }
}
