//! The character table of S_n and the multiplicity of each irreducible in
//! the action on k-subsets.
//!
//!     cargo run --example character_table [n]

use incidence::chartab::{multiplicity_series, sn_table, validate_table};

fn main() -> incidence::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let table = sn_table(n)?;
    print!("{table}");
    println!("valid: {}\n", validate_table(&table).pass);
    for chi in &table.irreducibles {
        println!("{:<14} {}", chi.name, multiplicity_series(&table, &chi.name, n)?);
    }
    Ok(())
}
