//! Orbit numbers on subsets by two independent routes: averaging fixed
//! subsets over all group elements, and merging generator images.

use incidence::groupact::{burnside_counts, orbit_series_unionfind, Group, PermGroup};
use incidence::poset::{Limits, Poset, PosetSpec};

fn main() -> incidence::Result<()> {
    let limits = Limits::default();
    let groups = [
        ("C8", PermGroup::cyclic(8)),
        ("D9", PermGroup::dihedral(9)),
        ("A6", PermGroup::alternating(6)),
        ("S5 on pairs", PermGroup::symmetric(5).on_pairs()),
    ];
    for (name, pg) in groups {
        let spec = PosetSpec::boolean(pg.degree())?;
        let order = pg.order();
        let group = Group::Permutation(pg);
        let poset = Poset::new(spec, limits)?;
        let uf = orbit_series_unionfind(&group, &poset)?;
        let bs = burnside_counts(&group, spec, limits)?;
        println!("{name:<12} |G| = {order:<4} {uf}  {}", if uf == bs { "agree" } else { "DISAGREE" });
    }
    Ok(())
}
