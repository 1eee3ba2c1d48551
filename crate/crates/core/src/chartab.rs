//! Character tables, permutation characters of the `k`-subset actions and
//! multiplicity series `c_k = <fix_k, chi>`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groupact::fix_count_subsets;
use crate::series::Series;

const FLOAT_TOLERANCE: f64 = 1e-8;
const ROUNDING_TOLERANCE: f64 = 1e-6;

/// A character value: an exact integer or a complex number `[re, im]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CharValue {
    Int(i64),
    Complex(f64, f64),
    Real(f64),
}

impl CharValue {
    pub fn as_complex(self) -> (f64, f64) {
        match self {
            CharValue::Int(v) => (v as f64, 0.0),
            CharValue::Real(v) => (v, 0.0),
            CharValue::Complex(re, im) => (re, im),
        }
    }

    fn as_int(self) -> Option<i64> {
        match self {
            CharValue::Int(v) => Some(v),
            _ => None,
        }
    }
}

mod big {
    use super::*;

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(u64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
        match v.to_u64() {
            Some(x) => s.serialize_u64(x),
            None => s.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigUint, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(x) => Ok(BigUint::from(x)),
            Repr::Text(t) => t.trim().parse().map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConjugacyClass {
    pub name: String,
    #[serde(with = "big")]
    pub size: BigUint,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle_type: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Irreducible {
    pub name: String,
    pub values: Vec<CharValue>,
}

impl Irreducible {
    /// Value on the identity class.
    pub fn degree(&self) -> f64 {
        self.values.first().map_or(0.0, |v| v.as_complex().0)
    }

    fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| {
            let (re, im) = v.as_complex();
            (re - 1.0).abs() < FLOAT_TOLERANCE && im.abs() < FLOAT_TOLERANCE
        })
    }
}

/// The identity class is expected first.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterTable {
    #[serde(with = "big")]
    pub group_order: BigUint,
    pub classes: Vec<ConjugacyClass>,
    pub irreducibles: Vec<Irreducible>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableValidation {
    pub pass: bool,
    pub exact: bool,
    pub diagnostics: Vec<String>,
}

impl CharacterTable {
    pub fn is_exact(&self) -> bool {
        self.irreducibles
            .iter()
            .all(|chi| chi.values.iter().all(|v| v.as_int().is_some()))
    }

    pub fn irreducible(&self, name: &str) -> Result<&Irreducible> {
        if let Some(chi) = self.irreducibles.iter().find(|chi| chi.name == name) {
            return Ok(chi);
        }
        if name == "trivial" {
            if let Some(chi) = self.irreducibles.iter().find(|chi| chi.is_trivial()) {
                return Ok(chi);
            }
        }
        let names: Vec<&str> = self.irreducibles.iter().map(|c| c.name.as_str()).collect();
        Err(Error::Argument(format!(
            "no irreducible named '{name}' (available: {})",
            names.join(", ")
        )))
    }

    pub fn trivial(&self) -> Result<&Irreducible> {
        self.irreducible("trivial")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("character tables serialize")
    }
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = |v: &CharValue| match *v {
            CharValue::Int(x) => x.to_string(),
            CharValue::Real(x) => format!("{x:.3}"),
            CharValue::Complex(re, im) => format!("{re:.3}{im:+.3}i"),
        };
        let name_w = self.irreducibles.iter().map(|c| c.name.len()).max().unwrap_or(0);
        let widths: Vec<usize> = self
            .classes
            .iter()
            .enumerate()
            .map(|(c, cl)| {
                self.irreducibles
                    .iter()
                    .filter_map(|chi| chi.values.get(c).map(|v| cell(v).len()))
                    .chain([cl.name.len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        write!(f, "{:name_w$}", "")?;
        for (cl, w) in self.classes.iter().zip(&widths) {
            write!(f, "  {:>w$}", cl.name)?;
        }
        writeln!(f)?;
        for chi in &self.irreducibles {
            write!(f, "{:name_w$}", chi.name)?;
            for (v, w) in chi.values.iter().zip(&widths) {
                write!(f, "  {:>w$}", cell(v))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Partitions of `n` in descending lexicographic order, parts descending.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn partition_name(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn class_name(ct: &[usize]) -> String {
    let parts: Vec<String> = ct.iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// `n! / z_mu`, the number of permutations of cycle type `mu`.
fn class_size(mu: &[usize]) -> BigUint {
    let n: usize = mu.iter().sum();
    let mut z = BigUint::from(1u32);
    let mut i = 0;
    while i < mu.len() {
        let len = mu[i];
        let mult = mu[i..].iter().take_while(|&&x| x == len).count();
        for m in 1..=mult {
            z *= len * m;
        }
        i += mult;
    }
    (1..=n).fold(BigUint::from(1u32), |acc, x| acc * x) / z
}

/// `chi^lambda(mu)` by removing border strips on the beta-set of `lambda`.
fn mn_value(beta: &mut Vec<usize>, mu: &[usize]) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for idx in 0..beta.len() {
        let b = beta[idx];
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > b - r && x < b).count();
        beta[idx] = b - r;
        let v = mn_value(beta, rest);
        beta[idx] = b;
        total += if crossed % 2 == 0 { v } else { -v };
    }
    total
}

/// Character table of `S_n` for `1 <= n <= 10`.
///
/// Classes are cycle types in ascending lexicographic order (identity first);
/// irreducibles are labelled by partitions in descending order, so the
/// trivial character `(n)` comes first.
pub fn sn_table(n: usize) -> Result<CharacterTable> {
    if !(1..=10).contains(&n) {
        return Err(Error::Argument(format!("S_n tables are built for 1 <= n <= 10, got {n}")));
    }
    let labels = partitions(n);
    let mut cycle_types = labels.clone();
    cycle_types.reverse();
    let classes = cycle_types
        .iter()
        .map(|ct| ConjugacyClass {
            name: class_name(ct),
            size: class_size(ct),
            cycle_type: Some(ct.clone()),
        })
        .collect();
    let irreducibles = labels
        .iter()
        .map(|lambda| {
            let len = lambda.len();
            let mut beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &part)| part + len - 1 - i).collect();
            let values = cycle_types
                .iter()
                .map(|mu| CharValue::Int(mn_value(&mut beta, mu)))
                .collect();
            Irreducible {
                name: partition_name(lambda),
                values,
            }
        })
        .collect();
    Ok(CharacterTable {
        group_order: (1..=n).fold(BigUint::from(1u32), |acc, x| acc * x),
        classes,
        irreducibles,
    })
}

/// Checks class sizes, row orthogonality and the sum of squared degrees.
/// Integer tables are checked exactly, others to within `1e-8`.
pub fn validate_table(t: &CharacterTable) -> TableValidation {
    let mut diag = Vec::new();
    let exact = t.is_exact();
    let order = &t.group_order;

    if t.classes.is_empty() || t.irreducibles.is_empty() {
        diag.push("table has no classes or no irreducibles".to_string());
    }
    let total: BigUint = t.classes.iter().map(|c| c.size.clone()).sum();
    if &total != order {
        diag.push(format!("class sizes sum to {total}, group order is {order}"));
    }
    if t.classes.first().is_some_and(|c| c.size != BigUint::from(1u32)) {
        diag.push(format!("first class '{}' has size {}, expected the identity", t.classes[0].name, t.classes[0].size));
    }
    for cl in &t.classes {
        if cl.size.is_zero() {
            diag.push(format!("class '{}' is empty", cl.name));
        }
    }
    let width = t.classes.len();
    let mut shapes_ok = true;
    for chi in &t.irreducibles {
        if chi.values.len() != width {
            diag.push(format!("'{}' has {} values for {width} classes", chi.name, chi.values.len()));
            shapes_ok = false;
        }
    }
    if t.irreducibles.len() != width {
        diag.push(format!("{} irreducibles for {width} classes", t.irreducibles.len()));
    }
    if !shapes_ok || t.classes.is_empty() || t.irreducibles.is_empty() {
        return TableValidation { pass: false, exact, diagnostics: diag };
    }

    let irr = &t.irreducibles;
    if exact {
        let order = BigInt::from(order.clone());
        let sizes: Vec<BigInt> = t.classes.iter().map(|c| BigInt::from(c.size.clone())).collect();
        for a in 0..irr.len() {
            for b in a..irr.len() {
                let ip: BigInt = (0..width)
                    .map(|c| {
                        let x = irr[a].values[c].as_int().unwrap() * irr[b].values[c].as_int().unwrap();
                        &sizes[c] * x
                    })
                    .sum();
                let want = if a == b { order.clone() } else { BigInt::zero() };
                if ip != want {
                    diag.push(orthogonality_message(irr, a, b, &format!("{ip}/{order}")));
                }
            }
        }
        let squares: BigInt = irr.iter().map(|chi| BigInt::from(chi.values[0].as_int().unwrap()).pow(2)).sum();
        if squares != order {
            diag.push(format!("squared degrees sum to {squares}, group order is {order}"));
        }
        if irr.iter().any(|chi| !chi.values[0].as_int().unwrap().is_positive()) {
            diag.push("a degree is not positive".to_string());
        }
    } else {
        let order_f = order.to_f64().unwrap_or(f64::INFINITY);
        let sizes: Vec<f64> = t.classes.iter().map(|c| c.size.to_f64().unwrap_or(f64::INFINITY)).collect();
        for a in 0..irr.len() {
            for b in a..irr.len() {
                let (mut re, mut im) = (0.0, 0.0);
                for c in 0..width {
                    let (x, y) = irr[a].values[c].as_complex();
                    let (u, v) = irr[b].values[c].as_complex();
                    // x conj(y)
                    re += sizes[c] * (x * u + y * v);
                    im += sizes[c] * (y * u - x * v);
                }
                let (re, im) = (re / order_f, im / order_f);
                let want = if a == b { 1.0 } else { 0.0 };
                if (re - want).abs() > FLOAT_TOLERANCE || im.abs() > FLOAT_TOLERANCE {
                    diag.push(orthogonality_message(irr, a, b, &format!("{re:.3e}{im:+.3e}i")));
                }
            }
        }
        let squares: f64 = irr.iter().map(|chi| chi.degree().powi(2)).sum();
        if (squares - order_f).abs() > FLOAT_TOLERANCE * order_f.max(1.0) {
            diag.push(format!("squared degrees sum to {squares}, group order is {order}"));
        }
    }
    TableValidation {
        pass: diag.is_empty(),
        exact,
        diagnostics: diag,
    }
}

fn orthogonality_message(irr: &[Irreducible], a: usize, b: usize, got: &str) -> String {
    if a == b {
        format!("<{0}, {0}> = {got}, expected 1", irr[a].name)
    } else {
        format!("<{}, {}> = {got}, expected 0", irr[a].name, irr[b].name)
    }
}

/// Parses a JSON table and rejects it unless [`validate_table`] passes.
pub fn load_table(text: &str) -> Result<CharacterTable> {
    let table: CharacterTable = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    let report = validate_table(&table);
    if !report.pass {
        return Err(Error::Validation(report.diagnostics.join("; ")));
    }
    Ok(table)
}

/// `fix_k` on each class, from its cycle type.
pub fn perm_character(t: &CharacterTable, n: usize, k: usize) -> Result<Vec<BigUint>> {
    t.classes
        .iter()
        .map(|cl| {
            let ct = cl.cycle_type.as_ref().ok_or_else(|| {
                Error::Unsupported(format!("class '{}' has no cycle type, so the subset action is unknown", cl.name))
            })?;
            if ct.iter().sum::<usize>() != n {
                return Err(Error::Incompatible(format!(
                    "class '{}' has a cycle type of degree {}, not {n}",
                    cl.name,
                    ct.iter().sum::<usize>()
                )));
            }
            Ok(fix_count_subsets(ct, k))
        })
        .collect()
}

/// Multiplicities `c_0..c_n` of the named irreducible in the subset actions.
pub fn multiplicity_series(t: &CharacterTable, irreducible: &str, n: usize) -> Result<Series> {
    let chi = t.irreducible(irreducible)?;
    let exact = t.is_exact();
    let values = (0..=n)
        .map(|k| {
            let fix = perm_character(t, n, k)?;
            if exact {
                exact_multiplicity(t, chi, &fix, k)
            } else {
                float_multiplicity(t, chi, &fix, k)
            }
        })
        .collect::<Result<Vec<u64>>>()?;
    Series::new(values)
}

fn exact_multiplicity(t: &CharacterTable, chi: &Irreducible, fix: &[BigUint], k: usize) -> Result<u64> {
    let sum: BigInt = t
        .classes
        .iter()
        .zip(fix)
        .zip(&chi.values)
        .map(|((cl, f), v)| BigInt::from(&cl.size * f) * v.as_int().expect("exact table"))
        .sum();
    let order = BigInt::from(t.group_order.clone());
    if !(&sum % &order).is_zero() || sum.is_negative() {
        return Err(Error::Data(format!(
            "multiplicity of '{}' at k = {k} is {sum}/{order}, not a nonnegative integer",
            chi.name
        )));
    }
    (sum / order)
        .to_u64()
        .ok_or_else(|| Error::Resource("multiplicity does not fit in 64 bits".into()))
}

fn float_multiplicity(t: &CharacterTable, chi: &Irreducible, fix: &[BigUint], k: usize) -> Result<u64> {
    let (mut re, mut im) = (0.0, 0.0);
    for ((cl, f), v) in t.classes.iter().zip(fix).zip(&chi.values) {
        let w = (&cl.size * f).to_f64().unwrap_or(f64::INFINITY);
        let (x, y) = v.as_complex();
        re += w * x;
        im -= w * y;
    }
    let order = t.group_order.to_f64().unwrap_or(f64::INFINITY);
    let (re, im) = (re / order, im / order);
    let rounded = re.round();
    if (re - rounded).abs() > ROUNDING_TOLERANCE || im.abs() > ROUNDING_TOLERANCE || rounded < 0.0 {
        return Err(Error::Data(format!(
            "multiplicity of '{}' at k = {k} is {re:.9}{im:+.9}i, not a nonnegative integer",
            chi.name
        )));
    }
    Ok(rounded as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupact::{burnside_counts, Group, PermGroup};
    use crate::poset::{Limits, PosetSpec};

    fn ints(chi: &Irreducible) -> Vec<i64> {
        chi.values.iter().map(|v| v.as_int().unwrap()).collect()
    }

    fn binom(n: usize, k: usize) -> u64 {
        (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
    }

    pub(crate) fn c5_table() -> CharacterTable {
        let tau = std::f64::consts::TAU;
        let mut classes = vec![ConjugacyClass {
            name: "1A".into(),
            size: 1u32.into(),
            cycle_type: Some(vec![1; 5]),
        }];
        for j in 1..5 {
            classes.push(ConjugacyClass {
                name: format!("5{}", ["A", "B", "C", "D"][j - 1]),
                size: 1u32.into(),
                cycle_type: Some(vec![5]),
            });
        }
        let irreducibles = (0..5)
            .map(|a| Irreducible {
                name: format!("chi{a}"),
                values: (0..5)
                    .map(|j| {
                        let t = tau * (a * j) as f64 / 5.0;
                        CharValue::Complex(t.cos(), t.sin())
                    })
                    .collect(),
            })
            .collect();
        CharacterTable {
            group_order: 5u32.into(),
            classes,
            irreducibles,
        }
    }

    #[test]
    fn small_symmetric_tables() {
        let t3 = sn_table(3).unwrap();
        let names: Vec<&str> = t3.classes.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["[1,1,1]", "[2,1]", "[3]"]);
        assert_eq!(ints(t3.irreducible("(3)").unwrap()), [1, 1, 1]);
        assert_eq!(ints(t3.irreducible("(2,1)").unwrap()), [2, 0, -1]);
        assert_eq!(ints(t3.irreducible("(1,1,1)").unwrap()), [1, -1, 1]);

        let t1 = sn_table(1).unwrap();
        assert_eq!(t1.classes.len(), 1);
        assert_eq!(ints(&t1.irreducibles[0]), [1]);

        let t4 = sn_table(4).unwrap();
        assert_eq!(t4.classes.len(), 5);
        let degrees: Vec<i64> = t4.irreducibles.iter().map(|c| ints(c)[0]).collect();
        assert_eq!(degrees, [1, 3, 2, 3, 1]);
        assert_eq!(degrees.iter().map(|d| d * d).sum::<i64>(), 24);
        assert!(sn_table(0).is_err() && sn_table(11).is_err());
    }

    #[test]
    fn symmetric_tables_validate() {
        for n in 1..=10 {
            let v = validate_table(&sn_table(n).unwrap());
            assert!(v.pass && v.exact, "S_{n}: {:?}", v.diagnostics);
        }
        assert_eq!(sn_table(10).unwrap().classes.len(), 42);
    }

    // Sign character equals (-1)^(n - number of cycles).
    #[test]
    fn sign_character() {
        let t = sn_table(7).unwrap();
        let sign = t.irreducibles.last().unwrap();
        for (cl, v) in t.classes.iter().zip(&sign.values) {
            let ct = cl.cycle_type.as_ref().unwrap();
            let expect = if (7 - ct.len()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(v.as_int(), Some(expect));
        }
    }

    #[test]
    fn validation_failures() {
        let mut t = sn_table(4).unwrap();
        t.classes[1].size += 1u32;
        assert!(!validate_table(&t).pass);

        let mut t = sn_table(4).unwrap();
        let dup = t.irreducibles[1].clone();
        t.irreducibles[2] = dup;
        let v = validate_table(&t);
        assert!(!v.pass);
        assert!(v.diagnostics.iter().any(|d| d.contains("<(3,1), (3,1)>") || d.contains("expected 0")));

        let mut t = sn_table(5).unwrap();
        t.irreducibles[2].values[3] = CharValue::Int(7);
        let err = load_table(&t.to_json()).unwrap_err();
        assert!(matches!(err, Error::Validation(ref m) if m.contains('<')), "{err}");
    }

    #[test]
    fn json_round_trip() {
        let t = sn_table(4).unwrap();
        assert_eq!(load_table(&t.to_json()).unwrap(), t);
        let c5 = c5_table();
        let back = load_table(&c5.to_json()).unwrap();
        assert!(!validate_table(&back).exact);
        assert!(matches!(load_table("{\"group_order\": 1}"), Err(Error::Parse { .. })));
    }

    #[test]
    fn big_orders_as_strings() {
        let text = r#"{"group_order":"1","classes":[{"name":"1A","size":"1"}],"irreducibles":[{"name":"1","values":[1]}]}"#;
        let t = load_table(text).unwrap();
        assert_eq!(t.group_order, BigUint::from(1u32));
        assert!(matches!(perm_character(&t, 3, 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn permutation_characters() {
        let t = sn_table(4).unwrap();
        let pc = |k| perm_character(&t, 4, k).unwrap();
        let as_u64 = |v: Vec<BigUint>| v.iter().map(|x| x.to_u64().unwrap()).collect::<Vec<_>>();
        assert_eq!(as_u64(pc(2)), [6, 2, 2, 0, 0]);
        assert_eq!(as_u64(pc(0)), [1; 5]);
        assert_eq!(as_u64(pc(5)), [0; 5]);
        assert!(matches!(perm_character(&t, 5, 1), Err(Error::Incompatible(_))));
    }

    #[test]
    fn multiplicity_examples() {
        let t = sn_table(5).unwrap();
        assert_eq!(multiplicity_series(&t, "trivial", 5).unwrap().values(), &[1; 6]);
        assert_eq!(multiplicity_series(&t, "(4,1)", 5).unwrap().values(), &[0, 1, 1, 1, 1, 0]);
        assert!(matches!(multiplicity_series(&t, "(9)", 5), Err(Error::Argument(_))));

        let c5 = c5_table();
        for a in 1..5 {
            let s = multiplicity_series(&c5, &format!("chi{a}"), 5).unwrap();
            assert_eq!(s.values(), &[0, 1, 2, 2, 1, 0]);
        }
        assert_eq!(multiplicity_series(&c5, "chi0", 5).unwrap().values(), &[1, 1, 2, 2, 1, 1]);
    }

    #[test]
    fn wrong_table_is_a_data_error() {
        // Swapping two columns keeps orthogonality but breaks the action.
        let mut t = sn_table(4).unwrap();
        for chi in &mut t.irreducibles {
            chi.values.swap(1, 3);
        }
        t.classes.swap(1, 3);
        let types: Vec<_> = t.classes.iter().map(|c| c.cycle_type.clone()).collect();
        t.classes[1].cycle_type = types[3].clone();
        t.classes[3].cycle_type = types[1].clone();
        assert!(validate_table(&t).pass);
        let results: Vec<_> = t.irreducibles.iter().map(|chi| multiplicity_series(&t, &chi.name, 4)).collect();
        assert!(results.iter().any(|r| matches!(r, Err(Error::Data(_)))));
    }

    #[test]
    fn column_reconstruction() {
        for n in 1..=8 {
            let t = sn_table(n).unwrap();
            let series: Vec<Series> = t
                .irreducibles
                .iter()
                .map(|chi| multiplicity_series(&t, &chi.name, n).unwrap())
                .collect();
            for k in 0..=n {
                let total: u64 = t
                    .irreducibles
                    .iter()
                    .zip(&series)
                    .map(|(chi, s)| s.values()[k] * chi.values[0].as_int().unwrap() as u64)
                    .sum();
                assert_eq!(total, binom(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn youngs_rule_pattern() {
        for n in 1..=8 {
            let t = sn_table(n).unwrap();
            for chi in &t.irreducibles {
                let s = multiplicity_series(&t, &chi.name, n).unwrap();
                let lambda: Vec<usize> = chi.name[1..chi.name.len() - 1]
                    .split(',')
                    .map(|x| x.parse().unwrap())
                    .collect();
                let two_row = lambda.len() <= 2;
                let j = if lambda.len() == 2 { lambda[1] } else { 0 };
                for k in 0..=n {
                    let expect = u64::from(two_row && j <= k.min(n - k));
                    assert_eq!(s.values()[k], expect, "{} k={k}", chi.name);
                }
            }
        }
    }

    #[test]
    fn stanley_monotone_and_palindromic() {
        for n in 1..=8 {
            let t = sn_table(n).unwrap();
            for chi in &t.irreducibles {
                let c = multiplicity_series(&t, &chi.name, n).unwrap();
                let c = c.values();
                for k in 0..=n {
                    assert_eq!(c[k], c[n - k]);
                    for l in (k..=n).filter(|l| k + l <= n) {
                        assert!(c[k] <= c[l], "{} c_{k} > c_{l}", chi.name);
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_series_matches_burnside() {
        let t = sn_table(6).unwrap();
        let spec = PosetSpec::boolean(6).unwrap();
        let g = Group::Permutation(PermGroup::symmetric(6));
        assert_eq!(
            multiplicity_series(&t, "(6)", 6).unwrap(),
            burnside_counts(&g, spec, Limits::default()).unwrap()
        );
        let c5 = c5_table();
        let g = Group::Permutation(PermGroup::cyclic(5));
        assert_eq!(
            multiplicity_series(&c5, "trivial", 5).unwrap(),
            burnside_counts(&g, PosetSpec::boolean(5).unwrap(), Limits::default()).unwrap()
        );
    }
}
