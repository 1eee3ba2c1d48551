mod common;

use incidence::chartab::{load_table, sn_table};
use incidence::groupact::{group_order, parse_group};
use incidence::poset::Limits;
use num_bigint::BigUint;

#[test]
fn group_files_parse_with_declared_orders() {
    for (file, order) in [
        ("m24.json", 244_823_040u64),
        ("s4.json", 24),
        ("c4.json", 4),
        ("c5.json", 5),
        ("singer_3_2.json", 7),
        ("gl_3_2.json", 168),
    ] {
        let g = parse_group(&common::read_data(file)).unwrap_or_else(|e| panic!("{file}: {e}"));
        assert_eq!(group_order(&g, Limits::default()).unwrap(), BigUint::from(order), "{file}");
    }
}

#[test]
fn exported_tables_round_trip() {
    for n in 4..=6 {
        let t = load_table(&common::read_data(&format!("s{n}_table.json"))).unwrap();
        assert_eq!(t, sn_table(n).unwrap());
    }
}

#[test]
fn c5_table_loads() {
    let t = load_table(&common::read_data("c5_table.json")).unwrap();
    assert_eq!(t.classes.len(), 5);
    assert!(!t.is_exact());
}

#[test]
fn repeated_image_is_rejected() {
    let text = r#"{"kind":"permutation","degree":4,"generators":["(1,2,2)"]}"#;
    assert!(parse_group(text).is_err());
}
