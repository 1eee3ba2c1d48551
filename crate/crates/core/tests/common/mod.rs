//! Test corpus: small permutation groups paired with their character tables.
//! Tables are built here from class representatives, so cycle types come
//! from the actual permutations rather than from the tables' labels.

#![allow(dead_code)]

use std::f64::consts::TAU;

use incidence::chartab::{sn_table, CharValue, CharacterTable, ConjugacyClass, Irreducible};
use incidence::groupact::{Perm, PermGroup};

pub struct CorpusGroup {
    pub name: String,
    pub group: PermGroup,
    pub table: CharacterTable,
}

pub fn data_path(file: &str) -> String {
    format!("{}/data/{file}", env!("CARGO_MANIFEST_DIR"))
}

pub fn read_data(file: &str) -> String {
    std::fs::read_to_string(data_path(file)).expect("bundled data file")
}

fn power(g: &Perm, e: usize) -> Perm {
    (0..e).fold(Perm::identity(g.degree()), |acc, _| g.compose(&acc))
}

fn class(name: String, size: u64, rep: &Perm) -> ConjugacyClass {
    ConjugacyClass {
        name,
        size: size.into(),
        cycle_type: Some(rep.cycle_type()),
    }
}

fn complex(re: f64, im: f64) -> CharValue {
    CharValue::Complex(re, im)
}

fn table(order: u64, classes: Vec<ConjugacyClass>, rows: Vec<(String, Vec<CharValue>)>) -> CharacterTable {
    CharacterTable {
        group_order: order.into(),
        classes,
        irreducibles: rows.into_iter().map(|(name, values)| Irreducible { name, values }).collect(),
    }
}

pub fn cyclic(n: usize) -> CorpusGroup {
    let group = PermGroup::cyclic(n);
    let r = group.generators()[0].clone();
    let classes = (0..n).map(|j| class(format!("r^{j}"), 1, &power(&r, j))).collect();
    let rows = (0..n)
        .map(|a| {
            let values = (0..n)
                .map(|j| {
                    let t = TAU * (a * j) as f64 / n as f64;
                    complex(t.cos(), t.sin())
                })
                .collect();
            (format!("chi{a}"), values)
        })
        .collect();
    CorpusGroup { name: format!("C{n}"), group, table: table(n as u64, classes, rows) }
}

pub fn dihedral(n: usize) -> CorpusGroup {
    assert!(n >= 3);
    let group = PermGroup::dihedral(n);
    let r = group.generators()[0].clone();
    let s = group.generators()[1].clone();
    let half = (n - 1) / 2;
    let mut classes = vec![class("1".into(), 1, &Perm::identity(n))];
    let mut reps: Vec<usize> = Vec::new();
    for j in 1..=half {
        classes.push(class(format!("r^{j}"), 2, &power(&r, j)));
        reps.push(j);
    }
    let rot = |h: usize, j: usize| CharValue::Real(2.0 * (TAU * (h * j) as f64 / n as f64).cos());
    let mut rows = Vec::new();
    if n % 2 == 1 {
        classes.push(class("s".into(), n as u64, &s));
        rows.push(("1".into(), vec![CharValue::Int(1); classes.len()]));
        let mut sign = vec![CharValue::Int(1); classes.len()];
        *sign.last_mut().unwrap() = CharValue::Int(-1);
        rows.push(("sign".into(), sign));
        for h in 1..=half {
            let mut v = vec![CharValue::Int(2)];
            v.extend(reps.iter().map(|&j| rot(h, j)));
            v.push(CharValue::Int(0));
            rows.push((format!("psi{h}"), v));
        }
    } else {
        let m = n / 2;
        classes.push(class(format!("r^{m}"), 1, &power(&r, m)));
        classes.push(class("s".into(), m as u64, &s));
        classes.push(class("sr".into(), m as u64, &s.compose(&r)));
        for (a, b) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)] {
            // a: value on r, b: value on s
            let mut v = vec![CharValue::Int(1)];
            v.extend(reps.iter().map(|&j| CharValue::Int(a.pow(j as u32))));
            v.push(CharValue::Int(a.pow(m as u32)));
            v.push(CharValue::Int(b));
            v.push(CharValue::Int(a * b));
            rows.push((format!("lin({a},{b})"), v));
        }
        for h in 1..m {
            let mut v = vec![CharValue::Int(2)];
            v.extend(reps.iter().map(|&j| rot(h, j)));
            v.push(CharValue::Int(if h % 2 == 0 { 2 } else { -2 }));
            v.push(CharValue::Int(0));
            v.push(CharValue::Int(0));
            rows.push((format!("psi{h}"), v));
        }
    }
    CorpusGroup { name: format!("D{n}"), group, table: table(2 * n as u64, classes, rows) }
}

pub fn alternating4() -> CorpusGroup {
    let group = PermGroup::alternating(4);
    let p = |s: &str| Perm::from_cycles(s, 4).unwrap();
    let classes = vec![
        class("1".into(), 1, &p("()")),
        class("2A".into(), 3, &p("(1,2)(3,4)")),
        class("3A".into(), 4, &p("(1,2,3)")),
        class("3B".into(), 4, &p("(1,3,2)")),
    ];
    let w = (TAU / 3.0).cos();
    let z = (TAU / 3.0).sin();
    let one = complex(1.0, 0.0);
    let rows = vec![
        ("1".to_string(), vec![one; 4]),
        ("w".to_string(), vec![one, one, complex(w, z), complex(w, -z)]),
        ("w2".to_string(), vec![one, one, complex(w, -z), complex(w, z)]),
        ("3".to_string(), vec![complex(3.0, 0.0), complex(-1.0, 0.0), complex(0.0, 0.0), complex(0.0, 0.0)]),
    ];
    CorpusGroup { name: "A4".into(), group, table: table(12, classes, rows) }
}

/// A5 on five points, or on the ten 2-subsets when `pairs` is set.
pub fn alternating5(pairs: bool) -> CorpusGroup {
    let base = PermGroup::alternating(5);
    let act = |s: &str| {
        let g = Perm::from_cycles(s, 5).unwrap();
        if pairs {
            PermGroup::new(5, vec![g]).unwrap().on_pairs().generators()[0].clone()
        } else {
            g
        }
    };
    let classes = vec![
        class("1".into(), 1, &act("()")),
        class("2A".into(), 15, &act("(1,2)(3,4)")),
        class("3A".into(), 20, &act("(1,2,3)")),
        class("5A".into(), 12, &act("(1,2,3,4,5)")),
        class("5B".into(), 12, &act("(1,3,5,2,4)")),
    ];
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let r = CharValue::Real;
    let rows = vec![
        ("1".to_string(), vec![r(1.0); 5]),
        ("3a".to_string(), vec![r(3.0), r(-1.0), r(0.0), r(phi), r(1.0 - phi)]),
        ("3b".to_string(), vec![r(3.0), r(-1.0), r(0.0), r(1.0 - phi), r(phi)]),
        ("4".to_string(), vec![r(4.0), r(0.0), r(1.0), r(-1.0), r(-1.0)]),
        ("5".to_string(), vec![r(5.0), r(1.0), r(-1.0), r(0.0), r(0.0)]),
    ];
    let group = if pairs { base.on_pairs() } else { base };
    let name = if pairs { "A5 on pairs" } else { "A5" };
    CorpusGroup { name: name.into(), group, table: table(60, classes, rows) }
}

fn perm_of_type(mu: &[usize]) -> Perm {
    let n: usize = mu.iter().sum();
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut start = 0;
    for &len in mu {
        for t in 0..len {
            images[start + t] = (start + (t + 1) % len) as u32;
        }
        start += len;
    }
    Perm::from_images(images).unwrap()
}

/// S_n on `n` points, or on pairs with cycle types recomputed for that action.
pub fn symmetric(n: usize, pairs: bool) -> CorpusGroup {
    let mut t = sn_table(n).unwrap();
    let base = PermGroup::symmetric(n);
    if pairs {
        for cl in &mut t.classes {
            let rep = perm_of_type(cl.cycle_type.as_ref().unwrap());
            let induced = PermGroup::new(n, vec![rep]).unwrap().on_pairs().generators()[0].clone();
            cl.cycle_type = Some(induced.cycle_type());
        }
    }
    let (group, name) = if pairs { (base.on_pairs(), format!("S{n} on pairs")) } else { (base, format!("S{n}")) };
    CorpusGroup { name, group, table: t }
}

pub fn corpus() -> Vec<CorpusGroup> {
    vec![
        cyclic(5),
        cyclic(6),
        cyclic(8),
        dihedral(5),
        dihedral(6),
        dihedral(8),
        alternating4(),
        alternating5(false),
        alternating5(true),
        symmetric(4, false),
        symmetric(5, false),
        symmetric(6, false),
        symmetric(5, true),
    ]
}
