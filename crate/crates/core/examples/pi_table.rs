//! Prints the quantum characteristic pi(p, q) for small primes and field sizes.
//!
//!     cargo run --example pi_table [pmax]

use incidence::cli::{cmd_pitable, DEFAULT_PITABLE_Q};
use incidence::qarith::{quantum_char, quantum_char_by_order};

fn main() {
    let pmax = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(19);
    let report = cmd_pitable(pmax, &DEFAULT_PITABLE_Q);
    print!("{}", report.text);

    // q = 1 gives p, and the multiplicative order of q mod p agrees elsewhere.
    for p in [3, 5, 7, 17, 73, 127] {
        let direct = quantum_char(p, 2).unwrap();
        assert_eq!(direct, quantum_char_by_order(p, 2).unwrap());
        println!("pi({p}, 1) = {}, pi({p}, 2) = {direct}", quantum_char(p, 1).unwrap());
    }
}
