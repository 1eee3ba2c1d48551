//! A complex character table read from a file: C5 acting on the subsets of
//! five points, with the folded chain at p = 3.

use incidence::chartab::{load_table, multiplicity_series};
use incidence::inequal::check_chain;

fn main() -> incidence::Result<()> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/c5_table.json"))?;
    let table = load_table(&text)?;
    for chi in &table.irreducibles {
        let c = multiplicity_series(&table, &chi.name, 5)?;
        let chain = check_chain(&c, 3)?;
        println!("{}: c = {c}, {}", chi.name, chain.render("c"));
    }
    Ok(())
}
