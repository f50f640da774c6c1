//! Enumerate the flat SU(2) classes of a few lens spaces and show how
//! arbitrary holonomy weights fold into canonical labels.

use lensfloer::{canonical_label, enumerate_classes, LensSpace};

fn main() -> lensfloer::Result<()> {
    for (p, q) in [(5, 1), (17, 2), (97, 2)] {
        let y = LensSpace::new(p, q)?;
        let classes = enumerate_classes(&y);
        println!("{y}: {} classes", classes.len());
        let names: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
        println!("  {}", names.join(" "));
    }

    let p = 17;
    println!("label folding mod {p}: weight -> canonical");
    for l in [5i64, 13, 17, 20, -1] {
        println!("  {l:>3} -> {}", canonical_label(l, p));
    }
    Ok(())
}
