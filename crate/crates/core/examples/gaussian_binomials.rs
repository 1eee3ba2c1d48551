//! q-integers, q-factorials and Gaussian binomials; the latter count rank sets.

use incidence::poset::{rank_size, PosetSpec};
use incidence::qarith::{gauss_binom, q_factorial, q_int};

fn main() {
    println!("|5|_2 = {}, (4!)_3 = {}", q_int(5, 2).unwrap(), q_factorial(4, 3).unwrap());
    for q in [1u64, 2, 3] {
        let row: Vec<String> = (0..=6).map(|k| gauss_binom(6, k, q).unwrap().to_string()).collect();
        println!("[6 choose k]_{q}: {}", row.join(" "));
    }
    let spec = PosetSpec::projective(10, 2).unwrap();
    let sizes: Vec<String> = (0..=10).map(|k| rank_size(spec, k).to_string()).collect();
    println!("{spec} rank sizes: {}", sizes.join(" "));
}
