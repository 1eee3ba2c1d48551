//! Orbits of the Mathieu group M24 on subsets of its 24 points, the folded
//! chains for p = 13, 17, 19 and the bounds they imply for any group of
//! order prime to those primes.
//!
//!     cargo run --release --example m24_orbits

use incidence::groupact::{group_order, orbit_series_unionfind, parse_group};
use incidence::inequal::{check_chain, deduce_bounds};
use incidence::poset::{Limits, Poset, PosetSpec};

fn main() -> incidence::Result<()> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/m24.json"))?;
    let group = parse_group(&text)?;
    let limits = Limits::default();
    println!("|M24| = {}", group_order(&group, limits)?);

    let poset = Poset::new(PosetSpec::boolean(24)?, limits)?;
    let start = std::time::Instant::now();
    let series = orbit_series_unionfind(&group, &poset)?;
    println!("N = {series}  ({:.2?})", start.elapsed());

    for pi in [13, 17, 19] {
        let chain = check_chain(&series, pi)?;
        println!("p = {pi}: {}  [{}]", chain.render("N"), if chain.pass { "holds" } else { "fails" });
    }
    let bounds = deduce_bounds(24, &[13, 17, 19])?;
    println!("lower bounds: {:?}", bounds.lower);
    Ok(())
}
