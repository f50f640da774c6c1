//! Gauge-equivalence classes of flat SU(2) connections on a lens space.
//!
//! The fundamental group of L(p,q) is Z_p, so every flat connection is
//! reducible and a class is pinned down by a holonomy weight l: the generator
//! maps to diag(zeta^l, zeta^-l). Conjugation identifies l with -l, so the
//! fundamental domain of labels is 0..=(p-1)/2, with l = 0 the trivial class
//! theta (the only one with full SU(2) stabilizer).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{gcd_u64, mod_inverse};
use crate::lattice::KPair;

/// The lens space L(p,q), p odd, 0 < q < p, gcd(p,q) = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LensSpace {
    p: u64,
    q: u64,
}

impl LensSpace {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p % 2 == 0 {
            return Err(Error::domain(format!("p = {p} must be odd")));
        }
        if q == 0 || q >= p {
            return Err(Error::domain(format!(
                "q = {q} must satisfy 0 < q < p = {p}"
            )));
        }
        if gcd_u64(p, q) != 1 {
            return Err(Error::domain(format!(
                "p = {p} and q = {q} are not coprime"
            )));
        }
        Ok(LensSpace { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The positive residue r with q r = 1 mod p.
    pub fn q_inverse(&self) -> u64 {
        mod_inverse(self.q as i64, self.p)
            .expect("q is coprime to p by construction")
            .value
    }

    /// Number of flat classes, theta included: (p+1)/2.
    pub fn class_count(&self) -> usize {
        ((self.p + 1) / 2) as usize
    }
}

impl std::fmt::Display for LensSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

/// Stabilizer of a flat connection in the gauge group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stabilizer {
    #[serde(rename = "SU2")]
    Su2,
    #[serde(rename = "U1")]
    U1,
}

impl Stabilizer {
    /// dim SU(2) = 3, dim U(1) = 1.
    pub fn dim(&self) -> i64 {
        match self {
            Stabilizer::Su2 => 3,
            Stabilizer::U1 => 1,
        }
    }
}

/// A flat class: canonical label l in [0, (p-1)/2] plus stabilizer type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlatClass {
    pub l: u64,
    pub stabilizer: Stabilizer,
}

impl FlatClass {
    pub fn theta() -> Self {
        FlatClass {
            l: 0,
            stabilizer: Stabilizer::Su2,
        }
    }

    pub fn nontrivial(l: u64) -> Self {
        debug_assert!(l > 0);
        FlatClass {
            l,
            stabilizer: Stabilizer::U1,
        }
    }

    pub fn is_theta(&self) -> bool {
        self.l == 0
    }
}

impl std::fmt::Display for FlatClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_theta() {
            write!(f, "theta")
        } else {
            write!(f, "rho_{}", self.l)
        }
    }
}

/// All flat classes in label order: [theta, rho_1, ..., rho_{(p-1)/2}].
pub fn enumerate_classes(y: &LensSpace) -> Vec<FlatClass> {
    let mut classes = Vec::with_capacity(y.class_count());
    classes.push(FlatClass::theta());
    for l in 1..=(y.p() - 1) / 2 {
        classes.push(FlatClass::nontrivial(l));
    }
    classes
}

/// Canonical label of the holonomy weight l: min(l mod p, p - l mod p).
pub fn canonical_label(l: i64, p: u64) -> u64 {
    let m = (l.rem_euclid(p as i64)) as u64;
    m.min(p - m)
}

/// The grading bundle parameters for rho_l against theta: the minimal
/// positive representatives of k1 = l, k2 = -r l (mod p), r = q^{-1}.
pub fn grading_kpair(l: u64, y: &LensSpace) -> Result<KPair> {
    if l == 0 || l >= y.p() {
        return Err(Error::domain(format!(
            "label l = {l} must satisfy 0 < l < p = {}",
            y.p()
        )));
    }
    let p = y.p();
    let r = y.q_inverse();
    let k1 = l % p;
    let k2 = (p - (r as u128 * l as u128 % p as u128) as u64) % p;
    debug_assert!(k1 != 0);
    debug_assert!(k2 != 0, "r*l is never divisible by p for 0 < l < p");
    KPair::new(k1, k2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lens_space_validation() {
        assert!(LensSpace::new(17, 2).is_ok());
        assert!(LensSpace::new(16, 3).is_err()); // even p
        assert!(LensSpace::new(9, 3).is_err()); // gcd 3
        assert!(LensSpace::new(9, 0).is_err());
        assert!(LensSpace::new(9, 9).is_err());
        assert!(LensSpace::new(5, 1).is_ok());
    }

    #[test]
    fn enumerate_known_cases() {
        let classes = enumerate_classes(&LensSpace::new(5, 1).unwrap());
        assert_eq!(classes.len(), 3);
        assert!(classes[0].is_theta());
        assert_eq!(classes[1], FlatClass::nontrivial(1));
        assert_eq!(classes[2], FlatClass::nontrivial(2));

        let classes = enumerate_classes(&LensSpace::new(17, 2).unwrap());
        assert_eq!(classes.len(), 9);
        assert_eq!(
            classes
                .iter()
                .filter(|c| c.stabilizer == Stabilizer::Su2)
                .count(),
            1
        );
        assert!(classes[0].is_theta());

        let classes = enumerate_classes(&LensSpace::new(3, 1).unwrap());
        assert_eq!(classes.len(), 2);
    }

    #[test]
    fn canonical_label_known_cases() {
        assert_eq!(canonical_label(13, 17), 4);
        assert_eq!(canonical_label(17, 17), 0);
        assert_eq!(canonical_label(5, 17), 5);
        assert_eq!(canonical_label(-1, 17), 1);
    }

    #[test]
    fn grading_kpair_known_cases() {
        let y17 = LensSpace::new(17, 2).unwrap();
        let k = grading_kpair(1, &y17).unwrap();
        assert_eq!((k.k1(), k.k2()), (1, 8));
        let k = grading_kpair(2, &y17).unwrap();
        assert_eq!((k.k1(), k.k2()), (2, 16));
        let y51 = LensSpace::new(5, 1).unwrap();
        let k = grading_kpair(1, &y51).unwrap();
        assert_eq!((k.k1(), k.k2()), (1, 4));
        assert!(grading_kpair(0, &y17).is_err());
    }

    proptest! {
        #[test]
        fn canonical_label_idempotent_and_symmetric(l in -500i64..500, p in 1u64..200) {
            let p = 2 * p + 1; // odd
            let c = canonical_label(l, p);
            prop_assert!(c <= (p - 1) / 2);
            prop_assert_eq!(canonical_label(c as i64, p), c);
            prop_assert_eq!(canonical_label(p as i64 - l, p), c);
        }

        #[test]
        fn grading_kpair_congruences(p in 1u64..300, l in 1u64..600, q in 1u64..600) {
            let p = 2 * p + 1;
            let q = q % p;
            prop_assume!(q > 0 && gcd_u64(p, q) == 1);
            let y = LensSpace::new(p, q).unwrap();
            let l = 1 + l % (p - 1);
            let k = grading_kpair(l, &y).unwrap();
            prop_assert!((1..p).contains(&k.k1()) && (1..p).contains(&k.k2()));
            prop_assert_eq!(k.k1() % p, l % p);
            let r = y.q_inverse();
            prop_assert_eq!((k.k2() + r * l) % p, 0);
        }
    }
}
