//! Assemble the Floer complex for the L(8N+1, 2) family and print chain
//! dimensions and homology. Every member of the family is acyclic: the
//! boundary alternates between isomorphisms and zero maps.

use lensfloer::{assemble_complex, LensSpace};

fn main() -> lensfloer::Result<()> {
    println!("p, dims (C_0..C_3), homology (I_0..I_3)");
    for n in 1..=12u64 {
        let p = 8 * n + 1;
        let complex = assemble_complex(&LensSpace::new(p, 2)?)?;
        let dims = complex.dims();
        let h = complex.homology;
        println!(
            "  L({p},2): C = ({},{},{},{}), I = ({},{},{},{})",
            dims[0], dims[1], dims[2], dims[3], h[0], h[1], h[2], h[3]
        );
    }

    // A space outside the family, where homology survives.
    let complex = assemble_complex(&LensSpace::new(7, 1)?)?;
    let h = complex.homology;
    println!("  L(7,1): I = ({},{},{},{})", h[0], h[1], h[2], h[3]);
    Ok(())
}
