//! Matrix groups acting on subspaces of GF(2)^3: a Singer cycle and GL(3,2).

use incidence::groupact::{group_order, orbit_series_unionfind, parse_group};
use incidence::poset::{Limits, Poset, PosetSpec};

fn main() -> incidence::Result<()> {
    let poset = Poset::new(PosetSpec::projective(3, 2)?, Limits::default())?;
    for file in ["singer_3_2.json", "gl_3_2.json"] {
        let path = format!("{}/data/{file}", env!("CARGO_MANIFEST_DIR"));
        let group = parse_group(&std::fs::read_to_string(path)?)?;
        let order = group_order(&group, Limits::default())?;
        println!("{file}: |G| = {order}, N = {}", orbit_series_unionfind(&group, &poset)?);
    }
    Ok(())
}
