//! Irrep labels, triangle conditions, the R-array and its symmetry orbit.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::HalfInt;

/// Six labels in the arrangement `{a b e; d c f}` and the group parameter.
///
/// The derived order is lexicographic in `(a, b, e, d, c, f)`, then `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SixJLabels {
    pub a: i64,
    pub b: i64,
    pub e: i64,
    pub d: i64,
    pub c: i64,
    pub f: i64,
    pub n: i64,
}

impl SixJLabels {
    /// Labels given as `[a, b, e, d, c, f]`.
    pub const fn new(n: i64, l: [i64; 6]) -> Self {
        SixJLabels { a: l[0], b: l[1], e: l[2], d: l[3], c: l[4], f: l[5], n }
    }

    pub const fn as_array(&self) -> [i64; 6] {
        [self.a, self.b, self.e, self.d, self.c, self.f]
    }

    pub fn with_n(&self, n: i64) -> Self {
        SixJLabels { n, ..*self }
    }

    pub fn max_label(&self) -> i64 {
        self.as_array().into_iter().max().unwrap_or(0)
    }

    pub fn triads(&self) -> [(i64, i64, i64); 4] {
        let SixJLabels { a, b, e, d, c, f, .. } = *self;
        [(a, b, e), (a, c, f), (b, d, f), (c, d, e)]
    }

    pub fn check_nonnegative(&self) -> Result<()> {
        if self.as_array().iter().any(|&x| x < 0) {
            return Err(Error::Precondition(format!("negative label in {self}")));
        }
        Ok(())
    }

    pub fn parity_ok(&self) -> bool {
        self.triads().iter().all(|&(x, y, z)| (x + y + z) % 2 == 0)
    }

    pub fn admissible(&self) -> bool {
        admissible(self)
    }
}

impl fmt::Display for SixJLabels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} {} {}; {} {} {}}}_{}", self.a, self.b, self.e, self.d, self.c, self.f, self.n)
    }
}

pub fn triangle_ok(l1: i64, l2: i64, l3: i64) -> bool {
    let s = l1 + l2 + l3;
    if l1 < 0 || l2 < 0 || l3 < 0 || s % 2 != 0 {
        return false;
    }
    let j = s / 2;
    j >= l1 && j >= l2 && j >= l3
}

pub fn admissible(labels: &SixJLabels) -> bool {
    labels.triads().iter().all(|&(x, y, z)| triangle_ok(x, y, z))
}

/// Admissible label sets with entries in `0..=max`, in lexicographic order.
pub fn admissible_up_to(n: i64, max: i64) -> Vec<SixJLabels> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for e in (0..=max).filter(|&e| triangle_ok(a, b, e)) {
                for d in 0..=max {
                    for c in (0..=max).filter(|&c| triangle_ok(c, d, e)) {
                        for f in 0..=max {
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

/// Shelepin array `r[i][k] = beta[i] - alpha[k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RArray {
    pub r: [[i64; 4]; 3],
    pub alpha: [i64; 4],
    pub beta: [i64; 3],
}

impl RArray {
    /// One-based entry `r_{ik}`.
    pub fn at(&self, i: usize, k: usize) -> i64 {
        self.r[i - 1][k - 1]
    }

    /// One-based `alpha_k`.
    pub fn al(&self, k: usize) -> i64 {
        self.alpha[k - 1]
    }

    /// One-based `beta_i`.
    pub fn be(&self, i: usize) -> i64 {
        self.beta[i - 1]
    }

    pub fn min_entry(&self) -> i64 {
        self.r.iter().flatten().copied().min().unwrap_or(0)
    }

    pub fn permuted(&self, rows: [usize; 3], cols: [usize; 4]) -> RArray {
        let mut r = [[0; 4]; 3];
        for i in 0..3 {
            for k in 0..4 {
                r[i][k] = self.r[rows[i]][cols[k]];
            }
        }
        let alpha = cols.map(|k| self.alpha[k]);
        let beta = rows.map(|i| self.beta[i]);
        RArray { r, alpha, beta }
    }

    /// Inverse of [`shelepin`].
    pub fn to_labels(&self, n: i64) -> SixJLabels {
        let r = |i: usize, k: usize| self.at(i, k);
        SixJLabels {
            a: r(1, 1) + r(2, 2),
            b: r(1, 1) + r(3, 3),
            e: r(2, 2) + r(3, 3),
            c: r(1, 2) + r(3, 4),
            f: r(2, 1) + r(3, 4),
            d: r(1, 3) + r(2, 4),
            n,
        }
    }
}

pub fn shelepin(labels: &SixJLabels) -> Result<RArray> {
    if !labels.parity_ok() {
        return Err(Error::Parity(labels.to_string()));
    }
    let SixJLabels { a, b, e, d, c, f, .. } = *labels;
    let alpha = [(c + d + e) / 2, (b + d + f) / 2, (a + c + f) / 2, (a + b + e) / 2];
    let beta = [(a + b + c + d) / 2, (a + d + e + f) / 2, (b + c + e + f) / 2];
    let mut r = [[0; 4]; 3];
    for (i, row) in r.iter_mut().enumerate() {
        for (k, x) in row.iter_mut().enumerate() {
            *x = beta[i] - alpha[k];
        }
    }
    Ok(RArray { r, alpha, beta })
}

fn permutations<const N: usize>() -> Vec<[usize; N]> {
    fn rec<const N: usize>(k: usize, cur: &mut [usize; N], out: &mut Vec<[usize; N]>) {
        if k == N {
            out.push(*cur);
            return;
        }
        for i in k..N {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    let mut cur = [0; N];
    for (i, x) in cur.iter_mut().enumerate() {
        *x = i;
    }
    let mut out = Vec::new();
    rec(0, &mut cur, &mut out);
    out.sort();
    out
}

/// All 144 row/column permutations of the R-array.
pub fn array_permutations() -> Vec<([usize; 3], [usize; 4])> {
    let rows = permutations::<3>();
    let cols = permutations::<4>();
    rows.iter().flat_map(|&r| cols.iter().map(move |&c| (r, c))).collect()
}

/// Distinct label sets reachable by row/column permutations of the R-array.
pub fn symmetry_orbit(labels: &SixJLabels) -> Result<BTreeSet<SixJLabels>> {
    let ra = shelepin(labels)?;
    Ok(array_permutations()
        .into_iter()
        .map(|(rows, cols)| ra.permuted(rows, cols).to_labels(labels.n))
        .collect())
}

/// Lexicographically smallest member of the orbit.
pub fn canonical(labels: &SixJLabels) -> Result<SixJLabels> {
    Ok(*symmetry_orbit(labels)?.iter().next().expect("orbit contains the input"))
}

/// The 24 classical symmetries: column permutations and paired row flips.
pub fn classical_symmetries(labels: &SixJLabels) -> Vec<SixJLabels> {
    let cols = [(labels.a, labels.d), (labels.b, labels.c), (labels.e, labels.f)];
    let mut out = Vec::with_capacity(24);
    for p in permutations::<3>() {
        for flip in [[false, false, false], [true, true, false], [true, false, true], [false, true, true]] {
            let mut up = [0; 3];
            let mut down = [0; 3];
            for k in 0..3 {
                let (x, y) = cols[p[k]];
                (up[k], down[k]) = if flip[k] { (y, x) } else { (x, y) };
            }
            out.push(SixJLabels::new(labels.n, [up[0], up[1], up[2], down[0], down[1], down[2]]));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regge {
    /// `a, b, c, d -> s3 - a, s3 - b, s3 - c, s3 - d` with `s3 = (a+b+c+d)/2`.
    Upper,
    /// `b, e, c, f -> s1 - e, s1 - b, s1 - f, s1 - c` with `s1 = (b+c+e+f)/2`.
    SwapBe,
    /// `b, e, c, f -> s1 - f, s1 - c, s1 - e, s1 - b`.
    Cross,
    /// `b, e, c, f -> s1 - c, s1 - f, s1 - b, s1 - e`.
    Rows,
}

pub fn regge(labels: &SixJLabels, kind: Regge) -> SixJLabels {
    let SixJLabels { a, b, e, d, c, f, n } = *labels;
    let s3 = (a + b + c + d) / 2;
    let s1 = (b + c + e + f) / 2;
    let l = match kind {
        Regge::Upper => [s3 - a, s3 - b, e, s3 - d, s3 - c, f],
        Regge::SwapBe => [a, s1 - e, s1 - b, d, s1 - f, s1 - c],
        Regge::Cross => [a, s1 - f, s1 - c, d, s1 - e, s1 - b],
        Regge::Rows => [a, s1 - c, s1 - f, d, s1 - b, s1 - e],
    };
    SixJLabels::new(n, l)
}

/// Labels that may be negative after a hook reflection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormalLabels {
    pub a: i64,
    pub b: i64,
    pub e: i64,
    pub d: i64,
    pub c: i64,
    pub f: i64,
    pub n: i64,
}

impl From<SixJLabels> for FormalLabels {
    fn from(l: SixJLabels) -> Self {
        FormalLabels { a: l.a, b: l.b, e: l.e, d: l.d, c: l.c, f: l.f, n: l.n }
    }
}

/// The R-array over `Z/2`, for formal labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormalRArray {
    pub r: [[HalfInt; 4]; 3],
    pub alpha: [HalfInt; 4],
    pub beta: [HalfInt; 3],
}

impl FormalRArray {
    pub fn at(&self, i: usize, k: usize) -> HalfInt {
        self.r[i - 1][k - 1]
    }

    pub fn al(&self, k: usize) -> HalfInt {
        self.alpha[k - 1]
    }

    pub fn be(&self, i: usize) -> HalfInt {
        self.beta[i - 1]
    }
}

impl From<RArray> for FormalRArray {
    fn from(ra: RArray) -> Self {
        FormalRArray {
            r: ra.r.map(|row| row.map(HalfInt::from_int)),
            alpha: ra.alpha.map(HalfInt::from_int),
            beta: ra.beta.map(HalfInt::from_int),
        }
    }
}

impl FormalLabels {
    pub fn shelepin(&self) -> FormalRArray {
        let FormalLabels { a, b, e, d, c, f, .. } = *self;
        let alpha = [c + d + e, b + d + f, a + c + f, a + b + e].map(HalfInt::half);
        let beta = [a + b + c + d, a + d + e + f, b + c + e + f].map(HalfInt::half);
        let mut r = [[HalfInt::ZERO; 4]; 3];
        for (i, row) in r.iter_mut().enumerate() {
            for (k, x) in row.iter_mut().enumerate() {
                *x = beta[i] - alpha[k];
            }
        }
        FormalRArray { r, alpha, beta }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HookReflection {
    /// `d -> -d - n + 2`.
    SingleD,
    /// `c, d, f -> -c - n + 2, -d - n + 2, -f - n + 2`.
    TripleCdf,
    /// `f -> -f - n + 2`.
    SingleF,
}

pub fn hook_reflect(labels: &FormalLabels, kind: HookReflection) -> FormalLabels {
    let h = |x: i64| -x - labels.n + 2;
    let mut out = *labels;
    match kind {
        HookReflection::SingleD => out.d = h(out.d),
        HookReflection::TripleCdf => {
            out.c = h(out.c);
            out.d = h(out.d);
            out.f = h(out.f);
        }
        HookReflection::SingleF => out.f = h(out.f),
    }
    out
}
