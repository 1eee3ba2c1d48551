//! Lower bounds on orbit numbers from folded chains, with the derivation.
//!
//!     cargo run --example orbit_bounds [n] [pi,pi,...]

use incidence::inequal::deduce_bounds;

fn main() -> incidence::Result<()> {
    let mut args = std::env::args().skip(1);
    let n = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    let pis: Vec<u64> = args
        .next()
        .unwrap_or_else(|| "9,8,7".into())
        .split(',')
        .filter_map(|s| s.trim().parse().ok())
        .collect();
    let report = deduce_bounds(n, &pis)?;
    for d in report.log.iter().filter(|d| d.round > 0) {
        println!("{d}");
    }
    println!("L = {:?} after {} rounds", report.lower, report.rounds);
    Ok(())
}
