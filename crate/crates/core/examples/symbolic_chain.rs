//! The folded chain as index sets. For P(10,2) with pi = 8 the last two
//! terms each contain a symmetric pair, which forces doubled multiplicities.

use incidence::inequal::symbolic_chain;

fn main() -> incidence::Result<()> {
    for (n, pi) in [(10, 8), (24, 13), (24, 17), (4, 5)] {
        let chain = symbolic_chain(n, pi)?;
        let terms: Vec<String> = chain
            .iter()
            .map(|set| set.iter().map(|k| format!("c_{k}")).collect::<Vec<_>>().join("+"))
            .collect();
        println!("n = {n:>2}, pi = {pi:>2}: {}", terms.join(" >= "));
    }
    Ok(())
}
