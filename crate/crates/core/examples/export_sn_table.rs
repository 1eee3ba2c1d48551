//! Writes the character table of S_n as JSON, in the format `load_table` reads.
//!
//!     cargo run --example export_sn_table 6 > s6_table.json

use incidence::chartab::sn_table;

fn main() -> incidence::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    println!("{}", sn_table(n)?.to_json());
    Ok(())
}
