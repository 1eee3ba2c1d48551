//! Powers of the incidence map: d^i is (i!)_q times the inclusion matrix of
//! rank k - i elements in rank k elements, and d^pi vanishes.

use incidence::gfpla::power_boundary;
use incidence::poset::{Limits, Poset, PosetSpec};
use incidence::qarith::{q_factorial_mod, FieldSpec};

fn main() -> incidence::Result<()> {
    let field = FieldSpec::new(3)?;
    for spec in [PosetSpec::boolean(7)?, PosetSpec::projective(4, 2)?] {
        let poset = Poset::new(spec, Limits::default())?;
        let pi = incidence::homology::nilpotency(spec, field)? as usize;
        println!("{spec} over GF(3): pi = {pi}");
        let k = spec.n() / 2 + 1;
        for i in 1..=pi {
            let d = power_boundary(&poset, k as i64, i, field)?;
            let coeff = q_factorial_mod(i as u64, spec.q(), 3);
            let expected = poset.incidence(k, i)?.to_sparse(coeff, 3)?;
            println!(
                "  d^{i} from rank {k}: {}x{} with {} nonzeros, (i!)_q = {coeff} mod 3, matches inclusion: {}",
                d.rows(),
                d.cols(),
                d.nnz(),
                d == expected
            );
        }
    }
    Ok(())
}
