//! Run the full decomposition-obstruction decision procedure: positive
//! verdicts for 16N+1 primes, negative ones elsewhere, and the two-squares
//! screen on spaces that do split.

use lensfloer::obstruction_report;

fn main() -> lensfloer::Result<()> {
    for p in [17u64, 13, 41, 97, 28657] {
        let report = obstruction_report(p)?;
        println!("p = {p}: {}", report.verdict);
        for reason in &report.reasons {
            println!("    {reason}");
        }
        if let Some((a, b)) = report.two_squares {
            println!("    two squares: {p} = {a}^2 + {b}^2");
        }
    }
    Ok(())
}
