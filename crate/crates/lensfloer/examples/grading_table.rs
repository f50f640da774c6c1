//! The mod-8 Floer grading of every class of L(17,2), alongside the bundle
//! parameter and lattice counts it came from. Odd labels land on 2l mod 8,
//! even labels on 6l mod 8.

use lensfloer::{count_lattice, grading, grading_kpair, grading_reversed, LensSpace};

fn main() -> lensfloer::Result<()> {
    let y = LensSpace::new(17, 2)?;
    println!("{y}: l, (k1,k2), N1, N2, delta, delta on -Y");
    for l in 1..=8 {
        let k = grading_kpair(l, &y)?;
        let c = count_lattice(&k, &y);
        let d = grading(l, &y)?;
        let rev = grading_reversed(l, &y)?;
        println!(
            "  rho_{l}: k = ({},{}), N1 = {}, N2 = {}, delta = {d}, reversed = {rev}",
            k.k1(),
            k.k2(),
            c.n1,
            c.n2
        );
    }
    Ok(())
}
