//! Scans every H_(j,i) of a poset over GF(p) and lists the nonzero ones.
//!
//!     cargo run --release --example homology_scan [poset] [p]

use incidence::homology::homology_scan;
use incidence::poset::{Limits, Poset, PosetSpec};
use incidence::qarith::FieldSpec;

fn main() -> incidence::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec: PosetSpec = args.next().as_deref().unwrap_or("boolean:8").parse()?;
    let p: u32 = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let poset = Poset::new(spec, Limits::default())?;
    let report = homology_scan(&poset, FieldSpec::new(p)?)?;
    println!("{spec} over GF({p}), pi = {}", report.pi);
    for r in report.nonzero() {
        println!(
            "  dim H_({},{}) = {:>4}   trace {} = {}",
            r.j, r.i, r.dim_h, r.trace_lhs, r.trace_rhs
        );
    }
    println!("vanishing outside the window and trace identities: {}", report.pass);
    Ok(())
}
