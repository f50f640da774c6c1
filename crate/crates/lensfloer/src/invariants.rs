//! Casson-Walker sums, signature congruences, the theta-Dirac parity, and
//! the decomposition-obstruction decision procedure.
//!
//! The arithmetic chain: Walker's lens-space formula gives
//! lambda(-L(p,2)) = sum_{k=1}^{p-1} ((k/p)) ((2k/p)) exactly; the glued-up
//! spin 4-manifold signature satisfies sign(X') = 4 p^2 lambda mod 16, and
//! evaluates in closed form to p(p-1)(p-5)/6. For p = 8N+1 this is
//! divisible by 16, which pins the parity of the theta-twisted Dirac index
//! to N mod 2. With p = 16N'+1 prime, vanishing Floer homology and the
//! certified enlarged complex, the connected sum of two projective planes
//! admits no splitting along L(p,2) into such pieces; the verdict assembles
//! exactly these gates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{gcd_u64, is_prime, sawtooth, two_squares, Rational};
use crate::flat::LensSpace;
use crate::floer::{assemble_complex, FloerComplexData, Grading};
use crate::gamma::vanishing_certificate_from;

/// Exact Casson-Walker sawtooth sum sum_{k=1}^{p-1} ((k/p)) ((qk/p)).
pub fn casson_walker(p: u64, q: u64) -> Result<Rational> {
    if p % 2 == 0 {
        return Err(Error::domain(format!("p = {p} must be odd")));
    }
    if gcd_u64(p, q % p) != 1 {
        return Err(Error::domain(format!(
            "p = {p} and q = {q} are not coprime"
        )));
    }
    let mut acc = Rational::zero();
    for k in 1..p {
        let s1 = sawtooth(&Rational::new(k as i64, p as i64)?);
        // ((x)) has period 1, so qk may be reduced mod p before dividing.
        let qk = ((q % p) as u128 * k as u128 % p as u128) as i64;
        let s2 = sawtooth(&Rational::new(qk, p as i64)?);
        acc += s1 * s2;
    }
    Ok(acc)
}

/// Closed form p(p-1)(p-5)/6 of the glued spin 4-manifold signature.
pub fn signature_closed_form(p: u64) -> i128 {
    assert!(p % 2 == 1, "closed form stated for odd p, got {p}");
    let p = p as i128;
    let product = p * (p - 1) * (p - 5);
    debug_assert_eq!(product % 6, 0);
    product / 6
}

/// Verify 4 p^2 lambda(-L(p,2)) = p(p-1)(p-5)/6 exactly and return the
/// mod-16 residue (the only part that is load-bearing downstream).
pub fn signature_mod16_check(p: u64) -> Result<(u8, bool)> {
    let lambda = casson_walker(p, 2)?;
    let scale = Rational::from_bigint(num_bigint::BigInt::from(4) * p * p);
    let scaled = scale * lambda;
    let Some(value) = scaled.to_bigint() else {
        return Err(Error::inconsistency(format!(
            "4 p^2 lambda is not an integer for p = {p}: {scaled}"
        )));
    };
    let closed = signature_closed_form(p);
    if value != num_bigint::BigInt::from(closed) {
        return Err(Error::inconsistency(format!(
            "4 p^2 lambda = {value} disagrees with the closed form {closed} at p = {p}"
        )));
    }
    Ok((closed.rem_euclid(16) as u8, true))
}

/// Parity of the Dirac index over the capped 4-manifold with trivial limit,
/// for p = 8N + 1: equals N mod 2.
///
/// Two routes are computed and must agree: N mod 2 directly, and
/// N - sign(X')/8 mod 2 through the Casson-Walker evaluation.
pub fn theta_dirac_parity(p: u64) -> Result<u8> {
    if p % 8 != 1 {
        return Err(Error::domain(format!(
            "theta Dirac parity needs p = 1 mod 8, got {p}"
        )));
    }
    let n = ((p - 1) / 8) as i128;
    let route_direct = (n % 2) as u8;
    signature_mod16_check(p)?;
    let sign = signature_closed_form(p);
    if sign % 8 != 0 {
        return Err(Error::inconsistency(format!(
            "sign(X') = {sign} is not divisible by 8 at p = {p}"
        )));
    }
    let route_signature = (n - sign / 8).rem_euclid(2) as u8;
    if route_direct != route_signature {
        return Err(Error::inconsistency(format!(
            "theta Dirac parity routes disagree at p = {p}: {route_direct} vs {route_signature}"
        )));
    }
    Ok(route_direct)
}

/// Formal dimension mod 8 of instanton moduli over a capped 4-manifold with
/// limit of grading delta: -delta - 2 alpha^2 - 3(1 + b^+).
pub fn relative_moduli_dim_mod8(delta: Grading, alpha_sq: i64, b_plus: i64) -> Grading {
    Grading::new(-(delta.value() as i64) - 2 * alpha_sq - 3 * (1 + b_plus))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "THEOREM_APPLIES")]
    TheoremApplies,
    #[serde(rename = "NOT_APPLICABLE")]
    NotApplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::TheoremApplies => write!(f, "THEOREM_APPLIES"),
            Verdict::NotApplicable => write!(f, "NOT_APPLICABLE"),
        }
    }
}

/// Structured verdict of the decomposition-obstruction decision procedure.
///
/// The verdict is THEOREM_APPLIES iff prime, p = 1 mod 16, vanishing
/// homology, even theta-Dirac index and certified enlarged complex all
/// hold. The two-squares decomposition is informational only (a necessary
/// condition for any splitting to exist at all, never part of the verdict).
#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    pub p: u64,
    pub prime: bool,
    pub mod16: u8,
    pub homology_vanishes: bool,
    pub i_theta_even: bool,
    pub gamma_certificate: bool,
    pub two_squares: Option<(u64, u64)>,
    pub verdict: Verdict,
    pub reasons: Vec<String>,
}

/// Run the full decision procedure for L(p,2) (q = 2 and b^+ = 1 are the
/// theorem's configuration and are wired in).
pub fn obstruction_report(p: u64) -> Result<ObstructionReport> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::domain(format!(
            "obstruction verdict needs odd p >= 3, got {p}"
        )));
    }
    let complex = assemble_complex(&LensSpace::new(p, 2)?)?;
    obstruction_report_from(&complex)
}

/// Decision procedure on a pre-assembled complex of L(p,2).
pub fn obstruction_report_from(complex: &FloerComplexData) -> Result<ObstructionReport> {
    let p = complex.y.p();
    debug_assert_eq!(complex.y.q(), 2);
    let prime = is_prime(p)?;
    let mod16 = (p % 16) as u8;
    let homology_vanishes = complex.homology_vanishes();
    let i_theta_even = if p % 8 == 1 {
        theta_dirac_parity(p)? == 0
    } else {
        false
    };
    let gamma_certificate = prime && vanishing_certificate_from(complex, i_theta_even).certified;

    let mut reasons = Vec::with_capacity(5);
    reasons.push(if prime {
        format!("ok: p = {p} is prime")
    } else {
        format!("FAIL: p = {p} is not prime")
    });
    reasons.push(if mod16 == 1 {
        format!("ok: p = {p} is 1 mod 16")
    } else {
        format!("FAIL: p = {p} is {mod16} mod 16, need 1")
    });
    reasons.push(if homology_vanishes {
        format!("ok: Floer homology of L({p},2) vanishes")
    } else {
        format!(
            "FAIL: Floer homology of L({p},2) is nonzero: {:?}",
            complex.homology
        )
    });
    reasons.push(if i_theta_even {
        "ok: theta Dirac index is even".to_string()
    } else if p % 8 == 1 {
        "FAIL: theta Dirac index is odd".to_string()
    } else {
        format!(
            "FAIL: theta Dirac parity is undetermined (p = {} mod 8, need 1)",
            p % 8
        )
    });
    reasons.push(if gamma_certificate {
        "ok: enlarged-complex vanishing certificate holds".to_string()
    } else if prime {
        "FAIL: enlarged-complex vanishing certificate does not hold".to_string()
    } else {
        "FAIL: enlarged complex is undefined for composite p".to_string()
    });

    let applies = prime && mod16 == 1 && homology_vanishes && i_theta_even && gamma_certificate;
    Ok(ObstructionReport {
        p,
        prime,
        mod16,
        homology_vanishes,
        i_theta_even,
        gamma_certificate,
        two_squares: two_squares(p),
        verdict: if applies {
            Verdict::TheoremApplies
        } else {
            Verdict::NotApplicable
        },
        reasons,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn casson_walker_known_values() {
        assert_eq!(casson_walker(5, 2).unwrap(), Rational::zero());
        assert_eq!(casson_walker(3, 2).unwrap(), Rational::new(-1, 18).unwrap());
        assert_eq!(casson_walker(17, 2).unwrap(), Rational::new(8, 17).unwrap());
        assert!(casson_walker(9, 3).is_err());
        assert!(casson_walker(8, 3).is_err());
    }

    #[test]
    fn signature_known_values() {
        assert_eq!(signature_closed_form(17), 544);
        assert_eq!(signature_closed_form(5), 0);
        assert_eq!(signature_closed_form(9), 48);
        assert_eq!(signature_mod16_check(17).unwrap(), (0, true));
        assert_eq!(signature_mod16_check(9).unwrap(), (0, true));
        assert_eq!(signature_mod16_check(41).unwrap(), (0, true));
        // p = 3 gives a negative signature; the residue is still in [0,16)
        assert_eq!(
            signature_mod16_check(3).unwrap(),
            ((-2i64).rem_euclid(16) as u8, true)
        );
    }

    #[test]
    fn theta_parity_known_values() {
        assert_eq!(theta_dirac_parity(17).unwrap(), 0);
        assert_eq!(theta_dirac_parity(41).unwrap(), 1);
        assert_eq!(theta_dirac_parity(97).unwrap(), 0);
        assert!(theta_dirac_parity(11).is_err());
    }

    #[test]
    fn relative_dim_known_values() {
        assert_eq!(relative_moduli_dim_mod8(Grading::new(0), 0, 1).value(), 2);
        assert_eq!(relative_moduli_dim_mod8(Grading::new(2), 17, 1).value(), 6);
        // with alpha^2 = p = 1 mod 16 and b^+ = 1 this is -delta mod 8
        for d in [0i64, 2, 4, 6] {
            assert_eq!(
                relative_moduli_dim_mod8(Grading::new(d), 17, 1).value(),
                Grading::new(-d).value()
            );
        }
    }

    #[test]
    fn obstruction_known_cases() {
        let r = obstruction_report(17).unwrap();
        assert_eq!(r.verdict, Verdict::TheoremApplies);
        assert_eq!(r.two_squares, Some((1, 4)));
        assert_eq!(r.reasons.len(), 5);
        assert!(r.reasons.iter().all(|s| s.starts_with("ok:")));

        let r = obstruction_report(13).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert_eq!(r.mod16, 13);

        assert!(obstruction_report(2).is_err());
        assert!(obstruction_report(15).is_ok()); // composite: verdict only
        let r = obstruction_report(15).unwrap();
        assert!(!r.prime && r.verdict == Verdict::NotApplicable);
    }

    #[test]
    fn failing_reasons_match_failing_gates() {
        for p in [9u64, 13, 15, 17, 25, 41, 97, 113] {
            let r = obstruction_report(p).unwrap();
            let gates = [
                r.prime,
                r.mod16 == 1,
                r.homology_vanishes,
                r.i_theta_even,
                r.gamma_certificate,
            ];
            let failing = gates.iter().filter(|&&g| !g).count();
            let fail_lines = r.reasons.iter().filter(|s| s.starts_with("FAIL:")).count();
            assert_eq!(failing, fail_lines, "p = {p}");
            assert_eq!(
                r.verdict == Verdict::TheoremApplies,
                failing == 0,
                "verdict must be the conjunction of the gates, p = {p}"
            );
        }
    }

    #[test]
    fn report_json_schema() {
        let r = obstruction_report(17).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["verdict"], "THEOREM_APPLIES");
        assert_eq!(v["two_squares"], serde_json::json!([1, 4]));
        assert_eq!(v["mod16"], 1);
        let r = obstruction_report(13).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["verdict"], "NOT_APPLICABLE");
    }
}
