//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::time::{Duration, Instant};

use incidence::chartab::{load_table, multiplicity_series, sn_table, validate_table};
use incidence::cli::{pi_table, DEFAULT_PITABLE_Q};
use incidence::gfpla::power_boundary;
use incidence::groupact::{burnside_counts, group_order, orbit_count_unionfind, orbit_series_unionfind, parse_group, Group};
use incidence::homology::{homology_dim, homology_scan, nilpotency};
use incidence::inequal::{check_chain, check_lw, check_palindrome, deduce_bounds, fold, symbolic_chain};
use incidence::poset::{Limits, Poset, PosetSpec};
use incidence::qarith::{q_factorial_mod, FieldSpec};
use incidence::series::Series;
use num_bigint::BigUint;

const PITABLE_BUDGET: Duration = Duration::from_secs(1);
const M24_RANK12_BUDGET: Duration = Duration::from_secs(60);
const BOUNDS_BUDGET: Duration = Duration::from_secs(1);
const SCAN_BUDGET: Duration = Duration::from_secs(300);
const MAX_CORPUS_ORDER: u64 = 100_000;
const MAX_CORPUS_DEGREE: usize = 16;

/// pi(p, q) for p = 2..19 (rows) and q = 2,3,4,5,7,8,9,11,13,16,17,19,23; 0 marks p | q.
const EXPECTED_PI: [[u64; 13]; 8] = [
    [0, 2, 0, 2, 2, 0, 2, 2, 2, 0, 2, 2, 2],
    [2, 0, 3, 2, 3, 2, 0, 2, 3, 3, 2, 3, 2],
    [4, 4, 2, 0, 4, 4, 2, 5, 4, 5, 4, 2, 4],
    [3, 6, 3, 6, 0, 7, 3, 3, 2, 3, 6, 6, 3],
    [10, 5, 5, 5, 10, 10, 5, 0, 10, 5, 10, 10, 11],
    [12, 3, 6, 4, 12, 4, 3, 12, 0, 3, 6, 12, 6],
    [8, 16, 4, 16, 16, 8, 8, 16, 4, 2, 0, 8, 16],
    [18, 18, 9, 9, 3, 6, 9, 3, 18, 9, 9, 0, 9],
];

const M24_ORDER: u64 = 244_823_040;
const M24_HALF: [u64; 13] = [1, 1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 3, 5];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

type Check = fn() -> Result<Outcome, String>;

fn criterion_1() -> Result<Outcome, String> {
    let start = Instant::now();
    let table = pi_table(19, &DEFAULT_PITABLE_Q).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let mut mismatches = Vec::new();
    for ((p, row), want) in table.iter().zip(EXPECTED_PI) {
        for ((q, got), w) in DEFAULT_PITABLE_Q.iter().zip(row).zip(want) {
            let expected = (w != 0).then_some(w);
            if *got != expected {
                mismatches.push(format!("pi({p},{q}) = {got:?}, expected {expected:?}"));
            }
        }
    }
    let cells = table.iter().map(|(_, r)| r.len()).sum::<usize>();
    let pass = table.len() == 8 && cells == 104 && mismatches.is_empty() && elapsed < PITABLE_BUDGET;
    Ok(outcome(pass, format!("{cells} cells, {} mismatches, {elapsed:.2?} (budget {PITABLE_BUDGET:?}) {}", mismatches.len(), mismatches.join("; "))))
}

fn m24() -> Result<Group, String> {
    parse_group(&common::read_data("m24.json")).map_err(|e| e.to_string())
}

fn criterion_2() -> Result<Outcome, String> {
    let group = m24()?;
    let limits = Limits::default();
    let order = group_order(&group, limits).map_err(|e| e.to_string())?;
    if order != BigUint::from(M24_ORDER) {
        return Ok(outcome(false, format!("|G| = {order}, expected {M24_ORDER}")));
    }
    let poset = Poset::new(PosetSpec::boolean(24).unwrap(), limits).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let n12 = orbit_count_unionfind(&group, &poset, 12).map_err(|e| e.to_string())?;
    let rank12 = start.elapsed();
    let series = orbit_series_unionfind(&group, &poset).map_err(|e| e.to_string())?;
    let expected = Series::symmetric(&M24_HALF, 24).unwrap();
    let pass = n12 == 5 && series == expected && rank12 < M24_RANK12_BUDGET;
    Ok(outcome(pass, format!("|G| = {order}, N = {series}, N_12 in {rank12:.2?} (budget {M24_RANK12_BUDGET:?})")))
}

fn criterion_3() -> Result<Outcome, String> {
    let series = Series::symmetric(&M24_HALF, 24).unwrap();
    let mut detail = Vec::new();
    let mut pass = true;
    for pi in [13, 17, 19] {
        let chain = check_chain(&series, pi).map_err(|e| e.to_string())?;
        pass &= chain.pass;
        detail.push(format!("pi={pi}: {:?} {}", chain.values, if chain.pass { "holds" } else { "fails" }));
    }
    // pi = 17 displayed from N_8 down to N_4 + N_3, closed by 2 N_3.
    let n = |k: i64| series.get(k);
    let head = n(8);
    let last_fold = fold(&series, 17, 4);
    let tail = 2 * n(3);
    let endpoints = head == 3 && last_fold == 2 && tail == 2 && last_fold >= tail;
    pass &= endpoints;
    detail.push(format!("pi=17 display: N_8 = {head} >= ... >= N_4+N_3 = {last_fold} >= 2N_3 = {tail}"));
    Ok(outcome(pass, detail.join("; ")))
}

fn criterion_4() -> Result<Outcome, String> {
    let start = Instant::now();
    let ex1 = deduce_bounds(10, &[9, 8, 7]).map_err(|e| e.to_string())?;
    let t1 = start.elapsed();
    let start = Instant::now();
    let ex2 = deduce_bounds(24, &[13, 17, 19]).map_err(|e| e.to_string())?;
    let t2 = start.elapsed();
    let l1 = &ex1.lower;
    let l2 = &ex2.lower;
    let ok1 = l1[2] == 2 && l1[3] == 3 && l1[4] == 4;
    let ok2 = l2[6] == 2 && l2[7] == 2 && (8..=11).all(|k| l2[k] == 3) && l2[12] == 4;
    let pass = ok1 && ok2 && t1 < BOUNDS_BUDGET && t2 < BOUNDS_BUDGET;
    Ok(outcome(pass, format!("n=10: {l1:?} ({t1:.2?}); n=24: {l2:?} ({t2:.2?})")))
}

fn scan_configs() -> Vec<(PosetSpec, u32)> {
    let mut out = Vec::new();
    for n in 4..=12 {
        for p in [2, 3, 5, 7] {
            out.push((PosetSpec::boolean(n).unwrap(), p));
        }
    }
    for n in 1..=5 {
        for q in [2, 3] {
            for p in [2u32, 3, 5, 7].into_iter().filter(|&p| q % p as u64 != 0) {
                out.push((PosetSpec::projective(n, q).unwrap(), p));
            }
        }
    }
    out
}

fn criterion_5() -> Result<Outcome, String> {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut nonzero = 0;
    let configs = scan_configs();
    for &(spec, p) in &configs {
        let poset = Poset::new(spec, Limits::default()).map_err(|e| e.to_string())?;
        let report = homology_scan(&poset, FieldSpec::new(p).unwrap()).map_err(|e| e.to_string())?;
        nonzero += report.nonzero().count();
        if !report.pass {
            failures.push(format!("{spec} p={p}"));
        }
    }
    let spot_poset = Poset::new(PosetSpec::boolean(4).unwrap(), Limits::default()).unwrap();
    let spot = homology_dim(&spot_poset, FieldSpec::new(3).unwrap(), 2, 1).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && spot == 1 && elapsed < SCAN_BUDGET;
    Ok(outcome(
        pass,
        format!(
            "{} configurations, {nonzero} nonzero H, dim H_(2,1)(boolean:4, p=3) = {spot}, {elapsed:.2?} (budget {SCAN_BUDGET:?}){}",
            configs.len(),
            if failures.is_empty() { String::new() } else { format!(", failed: {}", failures.join(", ")) }
        ),
    ))
}

fn criterion_6() -> Result<Outcome, String> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (spec, p) in scan_configs() {
        let field = FieldSpec::new(p).unwrap();
        let poset = Poset::new(spec, Limits::default()).map_err(|e| e.to_string())?;
        let pi = nilpotency(spec, field).map_err(|e| e.to_string())? as usize;
        for k in 0..=spec.n() {
            for i in (1..=pi).filter(|&i| i <= k) {
                let d = power_boundary(&poset, k as i64, i, field).map_err(|e| e.to_string())?;
                let coeff = q_factorial_mod(i as u64, spec.q(), p as u64);
                let scaled = poset.incidence(k, i).and_then(|m| m.to_sparse(coeff, p)).map_err(|e| e.to_string())?;
                checked += 1;
                if d != scaled || (i == pi && !d.is_zero()) {
                    failures.push(format!("{spec} p={p} k={k} i={i}"));
                }
            }
        }
    }
    Ok(outcome(failures.is_empty(), format!("{checked} matrix identities, {} failures {}", failures.len(), failures.join(", "))))
}

fn criterion_7() -> Result<Outcome, String> {
    let limits = Limits::default();
    let mut lines = Vec::new();
    let mut pass = true;
    let corpus = common::corpus();
    for g in &corpus {
        let order = g.group.order();
        let degree = g.group.degree();
        let spec = PosetSpec::boolean(degree).unwrap();
        let group = Group::Permutation(g.group.clone());
        let poset = Poset::new(spec, limits).map_err(|e| e.to_string())?;
        let uf = orbit_series_unionfind(&group, &poset).map_err(|e| e.to_string())?;
        let bs = burnside_counts(&group, spec, limits).map_err(|e| e.to_string())?;
        let ok = uf == bs && order <= BigUint::from(MAX_CORPUS_ORDER) && degree <= MAX_CORPUS_DEGREE;
        pass &= ok;
        lines.push(format!("{}{}", g.name, if ok { "" } else { " MISMATCH" }));
    }
    let transitive_10 = corpus.iter().any(|g| g.group.degree() == 10);
    pass &= corpus.len() >= 10 && transitive_10;
    Ok(outcome(pass, format!("{} groups: {}", corpus.len(), lines.join(", "))))
}

fn criterion_8() -> Result<Outcome, String> {
    let mut problems = Vec::new();
    for n in 1..=8 {
        let t = sn_table(n).unwrap();
        let v = validate_table(&t);
        if !(v.pass && v.exact) {
            problems.push(format!("S{n} table: {:?}", v.diagnostics));
        }
        for chi in &t.irreducibles {
            let c = multiplicity_series(&t, &chi.name, n).map_err(|e| e.to_string())?;
            if !check_lw(&c).pass {
                problems.push(format!("S{n} {}: not monotone", chi.name));
            }
            let parts: Vec<usize> = chi.name[1..chi.name.len() - 1].split(',').map(|x| x.parse().unwrap()).collect();
            let second = if parts.len() == 2 { parts[1] } else { 0 };
            for k in 0..=n {
                let want = u64::from(parts.len() <= 2 && second <= k.min(n - k));
                if c.values()[k] != want {
                    problems.push(format!("S{n} {} at k={k}: {} != {want}", chi.name, c.values()[k]));
                }
            }
        }
    }
    let limits = Limits::default();
    let corpus = common::corpus();
    for g in &corpus {
        let v = validate_table(&g.table);
        if !v.pass {
            problems.push(format!("{} table: {:?}", g.name, v.diagnostics));
            continue;
        }
        let degree = g.group.degree();
        let trivial = multiplicity_series(&g.table, "trivial", degree).map_err(|e| e.to_string())?;
        let orbits = burnside_counts(&Group::Permutation(g.group.clone()), PosetSpec::boolean(degree).unwrap(), limits)
            .map_err(|e| e.to_string())?;
        if trivial != orbits {
            problems.push(format!("{}: trivial {trivial} vs orbits {orbits}", g.name));
        }
    }
    Ok(outcome(problems.is_empty(), format!("S1..S8 tables, {} corpus groups; {}", corpus.len(), if problems.is_empty() { "no problems".into() } else { problems.join("; ") })))
}

fn criterion_9() -> Result<Outcome, String> {
    let table = load_table(&common::read_data("c5_table.json")).map_err(|e| e.to_string())?;
    let mut detail = Vec::new();
    let mut pass = true;
    for name in ["chi1", "chi2", "chi3", "chi4"] {
        let c = multiplicity_series(&table, name, 5).map_err(|e| e.to_string())?;
        let chain = check_chain(&c, 3).map_err(|e| e.to_string())?;
        let ok = chain.pass && chain.values == [2, 2] && check_palindrome(&c).pass;
        pass &= ok;
        detail.push(format!("{name}: c = {c}, [c_2]_3 = {} >= [c_1]_3 = {} >= 0", chain.values[0], chain.values[1]));
    }
    Ok(outcome(pass, detail.join("; ")))
}

fn criterion_10() -> Result<Outcome, String> {
    let chain = symbolic_chain(10, 8).map_err(|e| e.to_string())?;
    let expected: Vec<Vec<usize>> = vec![vec![5], vec![4], vec![3], vec![2, 10], vec![1, 9]];
    Ok(outcome(chain == expected, format!("{chain:?}")))
}

fn main() {
    let checks: [(&str, Check); 10] = [
        ("pi(p,q) table", criterion_1),
        ("M24 orbit numbers", criterion_2),
        ("M24 folded chains", criterion_3),
        ("orbit lower bounds", criterion_4),
        ("homology vanishing and trace", criterion_5),
        ("incidence power identities", criterion_6),
        ("Burnside vs union-find", criterion_7),
        ("character pipeline", criterion_8),
        ("C5 multiplicity chain", criterion_9),
        ("symbolic chain n=10 pi=8", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let (pass, detail) = match result {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "{} criterion {:>2} {name}: {detail} [{:.2?}]",
            if pass { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed()
        );
    }
    println!("acceptance: {} of {} criteria pass", checks.len() - failed, checks.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
