//! A boundary matrix element with its full evidence: the four sign-choice
//! bundle parameters, which of them carry a minimal solution set, and the
//! Dirac witnesses that decide the parity.

use lensfloer::{boundary_element, LensSpace};

fn main() -> lensfloer::Result<()> {
    let y = LensSpace::new(17, 2)?;
    for (l, m) in [(4, 3), (2, 1), (8, 3)] {
        let (value, evidence) = boundary_element(l, m, &y)?;
        println!("<d rho_{l}, rho_{m}> = {value}");
        println!(
            "{}",
            serde_json::to_string_pretty(&evidence).expect("serializable")
        );
        println!();
    }
    Ok(())
}
