//! Lattice-point counts behind every dimension, grading and Dirac index.
//!
//! Instantons on L(p,q) x R pull back to Z_p-invariant instantons on S^4,
//! where invariant moduli dimensions reduce to counting solutions of
//! `i + q j = 0 (mod p)` over `|i| <= k1, |j| <= k2`,
//! split into interior points (N1), edge points (N2) and corners (neither).
//! The fixed-point dimension is -1 + 2 N1 + N2, and a bundle parameter
//! (k1,k2) supports a 1-dimensional moduli space exactly when the solution
//! set is contained in {(0,0)} plus the four corners ("minimal").
//!
//! Two independent floating-point oracles are provided: the averaged
//! Atiyah-Bott-Lefschetz character for the fixed-point dimension, and a
//! root-of-unity filter for the Dirac solution count. They share no code
//! with the exact counters they check.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flat::LensSpace;

/// Bundle parameter (k1, k2), both strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KPair {
    k1: u64,
    k2: u64,
}

impl KPair {
    pub fn new(k1: u64, k2: u64) -> Result<Self> {
        if k1 == 0 || k2 == 0 {
            return Err(Error::domain(format!(
                "bundle parameter ({k1},{k2}) must be positive"
            )));
        }
        Ok(KPair { k1, k2 })
    }

    pub fn k1(&self) -> u64 {
        self.k1
    }

    pub fn k2(&self) -> u64 {
        self.k2
    }
}

impl std::fmt::Display for KPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.k1, self.k2)
    }
}

/// Solution counts for one bundle parameter.
///
/// `solutions` lists every (i,j) in the closed rectangle, sorted
/// lexicographically; corners belong to neither n1 nor n2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeCounts {
    pub n1: u64,
    pub n2: u64,
    pub minimal: bool,
    pub solutions: Vec<(i64, i64)>,
}

/// Direct enumeration over the closed rectangle [-k1,k1] x [-k2,k2].
pub fn count_lattice(k: &KPair, y: &LensSpace) -> LatticeCounts {
    count_lattice_raw(k.k1(), k.k2(), y.p(), y.q())
}

/// Raw-variable enumeration; used directly by tests that probe degenerate
/// moduli (p = 1) outside the LensSpace domain.
pub(crate) fn count_lattice_raw(k1: u64, k2: u64, p: u64, q: u64) -> LatticeCounts {
    let (k1i, k2i) = (k1 as i64, k2 as i64);
    let pi = p as i64;
    let mut n1 = 0u64;
    let mut n2 = 0u64;
    let mut solutions = Vec::new();
    let mut minimal = true;
    for j in -k2i..=k2i {
        // i = -q j (mod p); walk the progression inside [-k1, k1].
        let c = (-(q as i128) * j as i128).rem_euclid(p as i128) as i64;
        let mut i = -k1i + (c - (-k1i)).rem_euclid(pi);
        while i <= k1i {
            solutions.push((i, j));
            let on_corner = i.unsigned_abs() == k1 && j.unsigned_abs() == k2;
            if i.unsigned_abs() < k1 && j.unsigned_abs() < k2 {
                n1 += 1;
            } else if !on_corner {
                n2 += 1;
            }
            if !(on_corner || (i, j) == (0, 0)) {
                minimal = false;
            }
            i += pi;
        }
    }
    solutions.sort_unstable();
    LatticeCounts {
        n1,
        n2,
        minimal,
        solutions,
    }
}

/// Dimension of the Z_p-fixed instanton moduli: -1 + 2 N1 + N2.
pub fn fixed_dim(k: &KPair, y: &LensSpace) -> i64 {
    let c = count_lattice(k, y);
    -1 + 2 * c.n1 as i64 + c.n2 as i64
}

#[cfg(test)]
pub(crate) fn fixed_dim_raw(k1: u64, k2: u64, p: u64, q: u64) -> i64 {
    let c = count_lattice_raw(k1, k2, p, q);
    -1 + 2 * c.n1 as i64 + c.n2 as i64
}

/// Floating-point oracle for `fixed_dim`: the group average of the
/// Atiyah-Bott-Lefschetz character -1 + sum a_ij t1^i t2^j evaluated at
/// t1 = zeta^g, t2 = zeta^{q g}, zeta = exp(2 pi sqrt(-1)/p); a_ij is 2 on
/// the open rectangle, 1 on the edges, 0 on the corners and outside.
pub fn character_dim_oracle(k: &KPair, y: &LensSpace) -> f64 {
    character_dim_oracle_raw(k.k1(), k.k2(), y.p(), y.q())
}

pub(crate) fn character_dim_oracle_raw(k1: u64, k2: u64, p: u64, q: u64) -> f64 {
    let (k1i, k2i) = (k1 as i64, k2 as i64);
    let mut total = 0.0f64;
    for g in 0..p {
        let angle = 2.0 * std::f64::consts::PI * g as f64 / p as f64;
        let mut trace = -1.0f64;
        for i in -k1i..=k1i {
            for j in -k2i..=k2i {
                let a = weight(i, j, k1, k2);
                if a != 0 {
                    let phase = (i + q as i64 * j) as f64 * angle;
                    trace += a as f64 * phase.cos();
                }
            }
        }
        total += trace;
    }
    total / p as f64
}

fn weight(i: i64, j: i64, k1: u64, k2: u64) -> u32 {
    let (ai, aj) = (i.unsigned_abs(), j.unsigned_abs());
    if ai < k1 && aj < k2 {
        2
    } else if (ai == k1 && aj < k2) || (ai < k1 && aj == k2) {
        1
    } else {
        0
    }
}

/// Solutions (a,b) of -k1 + 2a + 1 + q(-k2 + 2b + 1) = 0 (mod 2p) over
/// 0 <= a < k1, 0 <= b < k2. The twisted Dirac index is minus their number.
pub fn dirac_solutions(k: &KPair, y: &LensSpace) -> Vec<(u64, u64)> {
    let (k1, k2) = (k.k1(), k.k2());
    let (p, q) = (y.p(), y.q());
    let base = 1 - k1 as i128 + q as i128 * (1 - k2 as i128);
    let mut out = Vec::new();
    for b in 0..k2 {
        let e_b = base + 2 * q as i128 * b as i128;
        // e_b + 2a = 0 (mod 2p) has a solution iff e_b is even.
        if e_b.rem_euclid(2) != 0 {
            continue;
        }
        let a0 = (-(e_b / 2)).rem_euclid(p as i128) as u64;
        let mut a = a0;
        while a < k1 {
            out.push((a, b));
            a += p;
        }
    }
    out.sort_unstable();
    out
}

/// Number of Dirac lattice solutions for (k1,k2); see `dirac_solutions`.
pub fn dirac_count(k: &KPair, y: &LensSpace) -> u64 {
    dirac_solutions(k, y).len() as u64
}

/// Floating-point oracle for `dirac_count`: averages the character
/// exp(2 pi sqrt(-1) g e(a,b) / 2p) over g = 0..2p-1, which filters the
/// solutions of e(a,b) = 0 (mod 2p).
pub fn dirac_count_oracle(k: &KPair, y: &LensSpace) -> f64 {
    let (k1, k2) = (k.k1(), k.k2());
    let (p, q) = (y.p(), y.q());
    let two_p = 2 * p;
    let base = 1 - k1 as i64 + q as i64 * (1 - k2 as i64);
    let mut total = 0.0f64;
    for g in 0..two_p {
        let angle = std::f64::consts::PI * g as f64 / p as f64;
        for a in 0..k1 {
            for b in 0..k2 {
                let e = base + 2 * a as i64 + 2 * q as i64 * b as i64;
                total += (e as f64 * angle).cos();
            }
        }
    }
    total / two_p as f64
}

/// Slope sign of the affine eigenvalue family on the cylinder over a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlowDirection {
    /// Family -2 pi l t / p + eps + 2 pi n: holonomy weight +l.
    Positive,
    /// Family +2 pi l t / p + eps + 2 pi n: holonomy weight -l.
    Negative,
}

/// Signed count of eigenvalue zero-crossings of lambda_n(t) =
/// dir * (-2 pi l t / p) + eps + 2 pi n over t in the unit interval, n in Z.
///
/// eps is a symbolic 0+ (a sign convention, never a float): lambda_n(0)
/// has the sign of n with ties broken positive. Down-crossings count -1,
/// up-crossings +1. Requires 0 < l < p.
pub fn spectral_flow_affine(l: u64, p: u64, direction: FlowDirection) -> i64 {
    assert!(
        l > 0 && l < p,
        "spectral flow needs 0 < l < p, got l = {l}, p = {p}"
    );
    let dir: i64 = match direction {
        FlowDirection::Positive => 1,
        FlowDirection::Negative => -1,
    };
    let mut flow = 0i64;
    // The family moves by |2 pi l / p| < 2 pi, so only |n| <= 1 can cross;
    // scan a safety margin anyway.
    for n in -2i64..=2 {
        let start_positive = n >= 0; // sign of 2 pi n + eps
                                     // end value 2 pi n + eps - dir * 2 pi l / p: compare n p with dir * l
                                     // exactly; equality keeps the eps sign (positive).
        let end_positive = n * p as i64 >= dir * l as i64;
        match (start_positive, end_positive) {
            (true, false) => flow -= 1,
            (false, true) => flow += 1,
            _ => {}
        }
    }
    flow
}

/// Per-lens-space tables that answer minimality and grading queries without
/// rescanning rectangles.
///
/// For j in [1, p-1], f(j) is the least |i| with i + q j = 0 (mod p); the
/// closed rectangle [-k1,k1] x [-k2,k2] contains a non-corner nonzero
/// solution iff min_{1 <= j < k2} f(j) <= k1 or f(k2) < k1. Equivalence
/// with `count_lattice(..).minimal` is property-tested.
pub(crate) struct LatticeTables {
    p: u64,
    q: u64,
    /// f[j] for j in 1..p; f[0] is a sentinel (row 0 has no nonzero entry).
    f: Vec<u32>,
    /// fmin[j] = min f[1..=j]; fmin[0] sentinel.
    fmin: Vec<u32>,
}

impl LatticeTables {
    pub fn new(y: &LensSpace) -> Self {
        let (p, q) = (y.p(), y.q());
        let mut f = vec![u32::MAX; p as usize];
        let mut fmin = vec![u32::MAX; p as usize];
        let mut c = 0u64; // (-q * j) mod p, updated incrementally
        let step = p - q % p;
        let mut running = u32::MAX;
        for j in 1..p {
            c += step;
            if c >= p {
                c -= p;
            }
            let fj = c.min(p - c) as u32;
            f[j as usize] = fj;
            running = running.min(fj);
            fmin[j as usize] = running;
        }
        LatticeTables { p, q, f, fmin }
    }

    /// O(1) minimality test for k1, k2 in [1, p-1].
    pub fn is_minimal(&self, k1: u64, k2: u64) -> bool {
        debug_assert!((1..self.p).contains(&k1) && (1..self.p).contains(&k2));
        let k1 = k1 as u32;
        self.fmin[(k2 - 1) as usize] > k1 && self.f[k2 as usize] >= k1
    }

    /// (2 N1 + N2) mod 8 for the grading parameter (k1, k2) = (l, -rl mod p).
    ///
    /// Valid for k1 <= (p-1)/2, where each row j carries at most one |i| < p/2.
    pub fn delta_mod8(&self, k1: u64, k2: u64) -> u8 {
        debug_assert!(k1 >= 1 && 2 * k1 < self.p);
        debug_assert!((1..self.p).contains(&k2));
        let k1 = k1 as u32;
        let mut interior = 0u64; // rows 1..k2-1 with f(j) < k1, doubled below
        let mut on_column = 0u64; // rows with f(j) = k1: |i| = k1 edge points
        for j in 1..k2 {
            let fj = self.f[j as usize];
            if fj < k1 {
                interior += 1;
            } else if fj == k1 {
                on_column += 1;
            }
        }
        let on_row = u64::from(self.f[k2 as usize] < k1);
        let n1 = 1 + 2 * interior;
        let n2 = 2 * on_column + 2 * on_row;
        ((2 * n1 + n2) % 8) as u8
    }

    /// Parity of the Dirac solution count; O(k2).
    pub fn dirac_parity(&self, k1: u64, k2: u64) -> u8 {
        let (p, q) = (self.p, self.q);
        let base = 1 - k1 as i128 + q as i128 * (1 - k2 as i128);
        if base.rem_euclid(2) != 0 {
            return 0;
        }
        let h = (-(base / 2)).rem_euclid(p as i128) as u64;
        let mut parity = 0u8;
        let mut a0 = h; // (h - q b) mod p, updated incrementally
        for _ in 0..k2 {
            parity ^= u8::from(a0 < k1);
            a0 = if a0 >= q { a0 - q } else { a0 + p - q };
        }
        parity
    }

    pub fn p(&self) -> u64 {
        self.p
    }
}
