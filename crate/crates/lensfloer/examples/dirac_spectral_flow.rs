//! The two Dirac-side computations: lattice counts of the twisted Dirac
//! congruence (with their root-of-unity oracle), and the spectral flow of
//! the affine eigenvalue families over the cylinder.

use lensfloer::{
    dirac_count, dirac_count_oracle, dirac_solutions, spectral_flow_affine, FlowDirection, KPair,
    LensSpace,
};

fn main() -> lensfloer::Result<()> {
    let y = LensSpace::new(17, 2)?;
    println!("Dirac counts on {y}:");
    for (k1, k2) in [(1, 5), (1, 7), (1, 8), (2, 16)] {
        let k = KPair::new(k1, k2)?;
        let count = dirac_count(&k, &y);
        let oracle = dirac_count_oracle(&k, &y);
        let witnesses = dirac_solutions(&k, &y);
        println!(
            "  k = ({k1},{k2}): count = {count} (oracle {oracle:.6}), witnesses = {witnesses:?}"
        );
    }

    println!("spectral flow of the affine families (any 0 < l < p):");
    for (l, p) in [(1u64, 5u64), (3, 17), (50, 101)] {
        let fwd = spectral_flow_affine(l, p, FlowDirection::Positive);
        let bwd = spectral_flow_affine(l, p, FlowDirection::Negative);
        println!(
            "  l = {l}, p = {p}: weight +l gives {fwd}, weight -l gives {bwd}, total {}",
            fwd + bwd
        );
    }
    Ok(())
}
