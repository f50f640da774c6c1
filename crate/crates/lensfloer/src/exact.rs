//! Exact integer, modular and rational arithmetic primitives.
//!
//! Everything downstream (sawtooth sums, Dedekind/Casson-Walker values, the
//! mod-16 signature congruence) is exact; no floating point enters except in
//! the explicitly-named floating-point oracles of the lattice module. The
//! rational type is arbitrary precision: the Casson-Walker sum at p = 28657
//! accumulates denominators up to 4p^2, past what fixed-width fractions can
//! reduce reliably.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical reduced form.
///
/// Invariants (maintained by every constructor and operation): the
/// denominator is positive and gcd(|num|, den) = 1. Serializes as the string
/// `"num/den"` (always with the denominator, e.g. `"0/1"`, `"-1/18"`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Reduced fraction num/den. Fails on a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::domain("rational with zero denominator"));
        }
        Ok(Rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Mathematical floor: floor(-1/4) = -1.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// The integer value, if the fraction is an integer.
    pub fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::str::FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = s
            .split_once('/')
            .ok_or_else(|| Error::domain(format!("rational {s:?} is not of the form num/den")))?;
        let num: BigInt = num
            .parse()
            .map_err(|_| Error::domain(format!("bad rational numerator {num:?}")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| Error::domain(format!("bad rational denominator {den:?}")))?;
        if den.is_zero() {
            return Err(Error::domain("rational with zero denominator"));
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        Rational(self.0 + rhs.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// A residue class value in [0, m), m >= 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

impl Residue {
    pub fn new(value: i128, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::domain("residue with zero modulus"));
        }
        let m = modulus as i128;
        Ok(Residue {
            value: value.rem_euclid(m) as u64,
            modulus,
        })
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Multiplicative inverse of a modulo m, as a residue in [0, m).
///
/// Fails unless gcd(a, m) = 1.
pub fn mod_inverse(a: i64, m: u64) -> Result<Residue> {
    if m == 0 {
        return Err(Error::domain("modular inverse with zero modulus"));
    }
    // Extended Euclid over i128; m <= u64::MAX so no overflow.
    let (mut r0, mut r1) = (m as i128, (a as i128).rem_euclid(m as i128));
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(Error::domain(format!(
            "{a} has no inverse modulo {m}: gcd = {r0}"
        )));
    }
    Residue::new(t0, m)
}

/// Sawtooth ((x)): 0 on integers, otherwise x - floor(x) - 1/2. Exact.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        return Rational::zero();
    }
    let half = Rational::new(1, 2).expect("nonzero denominator");
    x.clone() - Rational::from_bigint(x.floor()) - half
}

/// Smallest-a representation p = a^2 + b^2 with 0 <= a <= b, if one exists.
///
/// Exhaustive over a <= sqrt(p/2); the values in scope are desk scale.
pub fn two_squares(p: u64) -> Option<(u64, u64)> {
    let mut a = 0u64;
    while a * a * 2 <= p {
        let rest = p - a * a;
        let b = rest.isqrt();
        if b * b == rest {
            return Some((a, b));
        }
        a += 1;
    }
    None
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for p < 2^63 (Miller-Rabin with a witness set
/// proven complete for the full u64 range).
pub fn is_prime(p: u64) -> Result<bool> {
    if p > i64::MAX as u64 {
        return Err(Error::domain(format!(
            "{p} exceeds the supported range (2^63 - 1)"
        )));
    }
    if p < 2 {
        return Ok(false);
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if p == small {
            return Ok(true);
        }
        if p % small == 0 {
            return Ok(false);
        }
    }
    let d = (p - 1) >> (p - 1).trailing_zeros();
    let s = (p - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a, d, p);
        if x == 1 || x == p - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, p);
            if x == p - 1 {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// gcd on u64, used for lens-space validation.
pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn mod_inverse_small_cases() {
        assert_eq!(mod_inverse(2, 17).unwrap().value, 9);
        assert_eq!(mod_inverse(1, 17).unwrap().value, 1);
        assert_eq!(mod_inverse(1, 5).unwrap().value, 1);
        assert_eq!(mod_inverse(2, 5).unwrap().value, 3);
        assert!(mod_inverse(6, 9).is_err());
        // Negative representatives of the same class invert identically.
        assert_eq!(mod_inverse(-15, 17).unwrap().value, 9);
    }

    #[test]
    fn sawtooth_known_values() {
        assert_eq!(sawtooth(&Rational::from_integer(7)), Rational::zero());
        assert_eq!(
            sawtooth(&Rational::new(1, 4).unwrap()),
            Rational::new(-1, 4).unwrap()
        );
        assert_eq!(
            sawtooth(&Rational::new(1, 5).unwrap()),
            Rational::new(-3, 10).unwrap()
        );
        // Mathematical floor on negatives: ((-1/4)) = -1/4 - (-1) - 1/2 = 1/4.
        assert_eq!(
            sawtooth(&Rational::new(-1, 4).unwrap()),
            Rational::new(1, 4).unwrap()
        );
    }

    #[test]
    fn two_squares_known_values() {
        assert_eq!(two_squares(17), Some((1, 4)));
        assert_eq!(two_squares(3), None);
        assert_eq!(two_squares(28657), Some((89, 144)));
        assert_eq!(two_squares(0), Some((0, 0)));
        assert_eq!(two_squares(2), Some((1, 1)));
    }

    #[test]
    fn primality_known_values() {
        assert!(is_prime(28657).unwrap());
        assert!(!is_prime(1).unwrap());
        assert!(!is_prime(33).unwrap());
        assert!(is_prime(2).unwrap());
        assert!(!is_prime(28657 * 3).unwrap());
        // 2^63 - 1 = 7 * 73 * 127 * 337 * 92737 * 649657 is in range
        assert!(!is_prime(i64::MAX as u64).unwrap());
        assert!(is_prime(1 << 63).is_err());
    }

    #[test]
    fn primality_against_trial_division() {
        for p in 0u64..2000 {
            let trial = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
            assert_eq!(is_prime(p).unwrap(), trial, "p = {p}");
        }
    }

    #[test]
    fn mod_inverse_thousand_random_coprime_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x10d);
        let mut checked = 0;
        while checked < 1000 {
            let m = rng.gen_range(2u64..1_000_000);
            let a = rng.gen_range(1i64..1_000_000);
            if gcd_u64(a as u64, m) != 1 {
                continue;
            }
            let r = mod_inverse(a, m).unwrap();
            assert_eq!(a as u128 * r.value as u128 % m as u128, 1);
            checked += 1;
        }
    }

    #[test]
    fn rational_serialization_format() {
        assert_eq!(Rational::from_integer(0).to_string(), "0/1");
        assert_eq!(Rational::new(8, 17).unwrap().to_string(), "8/17");
        assert_eq!(Rational::new(1, -18).unwrap().to_string(), "-1/18");
        assert_eq!(Rational::new(2, 4).unwrap().to_string(), "1/2");
        let parsed: Rational = "-6/4".parse().unwrap();
        assert_eq!(parsed, Rational::new(-3, 2).unwrap());
        let json = serde_json::to_string(&Rational::new(8, 17).unwrap()).unwrap();
        assert_eq!(json, "\"8/17\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Rational::new(8, 17).unwrap());
    }

    proptest! {
        #[test]
        fn sawtooth_is_odd(num in -2000i64..2000, den in 1i64..500) {
            let x = Rational::new(num, den).unwrap();
            let neg = Rational::new(-num, den).unwrap();
            prop_assert_eq!(sawtooth(&neg), -sawtooth(&x));
        }

        #[test]
        fn sawtooth_is_periodic(num in -2000i64..2000, den in 1i64..500, shift in -40i64..40) {
            let x = Rational::new(num, den).unwrap();
            let shifted = x.clone() + Rational::from_integer(shift);
            prop_assert_eq!(sawtooth(&shifted), sawtooth(&x));
        }

        #[test]
        fn two_squares_exact(p in 0u64..200_000) {
            if let Some((a, b)) = two_squares(p) {
                prop_assert!(a <= b);
                prop_assert_eq!(a * a + b * b, p);
            }
        }

        #[test]
        fn mod_inverse_random_coprime(a in 1i64..1_000_000, m in 2u64..1_000_000) {
            prop_assume!(gcd_u64(a.unsigned_abs(), m) == 1);
            let r = mod_inverse(a, m).unwrap();
            prop_assert!(r.value < m);
            prop_assert_eq!((a as u128 * r.value as u128 % m as u128) as u64, 1 % m);
        }
    }
}
