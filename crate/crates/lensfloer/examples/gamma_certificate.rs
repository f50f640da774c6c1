//! The loop-enlarged complex: chain groups, the theta arrows, and the
//! vanishing certificate that the obstruction argument rests on.

use lensfloer::gamma;
use lensfloer::{theta_dirac_parity, LensSpace};

fn main() -> lensfloer::Result<()> {
    let y = LensSpace::new(17, 2)?;

    for i in 0..4 {
        let group = gamma::chain_group(&y, i, true)?;
        let names: Vec<String> = group
            .iter()
            .map(|g| match g {
                gamma::GammaGenerator::Upper(c) => format!("{c}"),
                gamma::GammaGenerator::Lower(c) => format!("{c}'"),
                gamma::GammaGenerator::Theta => "theta".to_string(),
            })
            .collect();
        println!("C_{i}(Y;gamma) = [{}]", names.join(", "));
    }

    let (theta_in, theta_out) = gamma::theta_maps(&y, true)?;
    println!("theta arrows (loop class nonzero): in = {theta_in:?}, out = {theta_out:?}");
    let (tin0, tout0) = gamma::theta_maps(&y, false)?;
    println!("theta arrows (loop class zero):    in = {tin0:?}, out = {tout0:?}");

    for p in [17u64, 97] {
        let y = LensSpace::new(p, 2)?;
        let even = theta_dirac_parity(p)? == 0;
        let cert = gamma::vanishing_certificate(&y, even)?;
        println!(
            "L({p},2): {}",
            serde_json::to_string(&cert).expect("serializable")
        );
    }
    Ok(())
}
