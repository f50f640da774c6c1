//! Exact Casson-Walker sawtooth sums for L(p,2), the closed-form signature
//! p(p-1)(p-5)/6, and the mod-16 congruence that drives the theta-Dirac
//! parity.

use lensfloer::{casson_walker, signature_closed_form, signature_mod16_check, theta_dirac_parity};

fn main() -> lensfloer::Result<()> {
    println!("p, lambda(-L(p,2)), 4p^2 lambda, sign mod 16, theta parity");
    for p in [3u64, 5, 9, 17, 41, 97, 28657] {
        let lambda = casson_walker(p, 2)?;
        let closed = signature_closed_form(p);
        let (mod16, _) = signature_mod16_check(p)?;
        let parity = if p % 8 == 1 {
            theta_dirac_parity(p)?.to_string()
        } else {
            "-".to_string()
        };
        println!("  p = {p}: lambda = {lambda}, sign(X') = {closed}, mod 16 = {mod16}, i_theta = {parity}");
    }
    Ok(())
}
