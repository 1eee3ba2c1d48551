//! Command-line front end. Every command produces a [`Report`] whose JSON
//! form is the machine-readable contract; the text form is for people.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use crate::chartab::{load_table, multiplicity_series, sn_table, validate_table, CharacterTable};
use crate::error::{Error, Result};
use crate::groupact::{burnside_counts, group_order, orbit_count_unionfind, orbit_series_unionfind, parse_group};
use crate::homology::{homology_dim, homology_scan, nilpotency, trace_check, vanishing_window};
use crate::inequal::{check_chain, check_lw, check_palindrome, check_pairwise, deduce_bounds};
use crate::poset::{Limits, Poset, PosetKind, PosetSpec};
use crate::qarith::{primes_up_to, quantum_char, FieldSpec};
use crate::series::Series;

/// The `q` columns printed by `pitable` when none are given.
pub const DEFAULT_PITABLE_Q: [u64; 13] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    fn new(command: &str, inputs: Value, results: Value, pass: bool, text: String) -> Self {
        Report {
            command: command.into(),
            inputs,
            results,
            status: if pass { Status::Pass } else { Status::Fail },
            timing_ms: None,
            text,
        }
    }

    pub fn error(command: &str, inputs: Value, err: &Error) -> Self {
        Report {
            command: command.into(),
            inputs,
            results: json!({ "error": err.to_string() }),
            status: Status::Error,
            timing_ms: None,
            text: format!("error: {err}\n"),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn run_cmd(command: &str, inputs: Value, body: impl FnOnce() -> Result<Report>) -> Report {
    body().unwrap_or_else(|e| Report::error(command, inputs, &e))
}

/// Table of `pi(p, q)` for primes `p <= pmax`; `None` where `p` divides `q`.
pub fn pi_table(pmax: u64, qs: &[u64]) -> Result<Vec<(u64, Vec<Option<u64>>)>> {
    primes_up_to(pmax)
        .into_iter()
        .map(|p| {
            let row = qs
                .iter()
                .map(|&q| if q % p == 0 { Ok(None) } else { quantum_char(p, q).map(Some) })
                .collect::<Result<Vec<_>>>()?;
            Ok((p, row))
        })
        .collect()
}

pub fn cmd_pitable(pmax: u64, qs: &[u64]) -> Report {
    let inputs = json!({ "pmax": pmax, "q": qs });
    run_cmd("pitable", inputs.clone(), || {
        if let Some(&q) = qs.iter().find(|&&q| q < 1) {
            return Err(Error::Argument(format!("q must be >= 1, got {q}")));
        }
        let table = pi_table(pmax, qs)?;
        let cell = |v: &Option<u64>| v.map_or("—".to_string(), |x| x.to_string());
        let width = qs
            .iter()
            .map(|q| q.to_string().len())
            .chain(table.iter().flat_map(|(_, row)| row.iter().map(|v| cell(v).chars().count())))
            .max()
            .unwrap_or(1);
        let pw = table.iter().map(|(p, _)| p.to_string().len()).max().unwrap_or(1).max(2);
        let mut text = format!("{:>pw$} |", "p\\q");
        for q in qs {
            write!(text, " {q:>width$}").unwrap();
        }
        text.push('\n');
        text.push_str(&"-".repeat(pw + 2 + qs.len() * (width + 1)));
        text.push('\n');
        for (p, row) in &table {
            write!(text, "{p:>pw$} |").unwrap();
            for v in row {
                let c = cell(v);
                let pad = width.saturating_sub(c.chars().count());
                write!(text, " {}{c}", " ".repeat(pad)).unwrap();
            }
            text.push('\n');
        }
        let results = json!({
            "primes": table.iter().map(|(p, _)| p).collect::<Vec<_>>(),
            "q": qs,
            "pi": table.iter().map(|(_, row)| row).collect::<Vec<_>>(),
        });
        Ok(Report::new("pitable", inputs, results, true, text))
    })
}

pub fn cmd_homology(spec: PosetSpec, p: u32, at: Option<(i64, i64)>, limits: Limits) -> Report {
    let inputs = json!({ "poset": spec.to_string(), "p": p, "j": at.map(|a| a.0), "i": at.map(|a| a.1) });
    run_cmd("homology", inputs.clone(), || {
        let field = FieldSpec::new(p)?;
        let pi = nilpotency(spec, field)?;
        let poset = Poset::new(spec, limits)?;
        let n = spec.n() as i64;
        if let Some((j, i)) = at {
            let dim = homology_dim(&poset, field, j, i)?;
            let in_window = vanishing_window(n, pi, j, i);
            let trace = trace_check(&poset, field, j, i)?;
            let pass = trace.pass && (in_window || dim == 0);
            let text = format!(
                "{spec} over GF({p}), pi = {pi}\nH_({j},{i}): dim {dim}, {} the vanishing window\n\
                 trace: {} = (-1)^{} * ([M_{}] - [M_{}]) = {}  [{}]\n",
                if in_window { "inside" } else { "outside" },
                trace.lhs,
                trace.d,
                trace.type_ab.1,
                trace.type_ab.0,
                trace.rhs,
                if trace.pass { "ok" } else { "FAIL" },
            );
            let results = json!({ "pi": pi, "dim_h": dim, "in_window": in_window, "trace": to_value(&trace) });
            return Ok(Report::new("homology", inputs, results, pass, text));
        }
        let report = homology_scan(&poset, field)?;
        let mut text = format!(
            "{spec} over GF({p}), pi = {pi}: {} pairs (j,i) scanned, {}\n",
            report.records.len(),
            if report.pass { "all checks pass" } else { "FAILURES" }
        );
        for r in report.nonzero() {
            writeln!(text, "  dim H_({},{}) = {}", r.j, r.i, r.dim_h).unwrap();
        }
        for r in report.records.iter().filter(|r| !r.pass) {
            writeln!(
                text,
                "  failed at (j,i)=({},{}): dim {}, window {}, trace {} vs {}",
                r.j, r.i, r.dim_h, r.in_window, r.trace_lhs, r.trace_rhs
            )
            .unwrap();
        }
        let pass = report.pass;
        Ok(Report::new("homology", inputs, to_value(&report), pass, text))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitMethod {
    Uf,
    Burnside,
    Both,
}

pub fn cmd_orbits(group_text: &str, spec: PosetSpec, k: Option<usize>, method: OrbitMethod, limits: Limits) -> Report {
    let inputs = json!({ "poset": spec.to_string(), "k": k, "method": method });
    run_cmd("orbits", inputs.clone(), || {
        let group = parse_group(group_text)?;
        group.check_acts_on(spec)?;
        let order = group_order(&group, limits)?;
        let poset = Poset::new(spec, limits)?;
        let uf = |k: Option<usize>| -> Result<Vec<u64>> {
            match k {
                Some(k) => Ok(vec![orbit_count_unionfind(&group, &poset, k)?]),
                None => Ok(orbit_series_unionfind(&group, &poset)?.values().to_vec()),
            }
        };
        let burnside = |k: Option<usize>| -> Result<Vec<u64>> {
            let all = burnside_counts(&group, spec, limits)?;
            Ok(match k {
                Some(k) => vec![all.get(k as i64)],
                None => all.values().to_vec(),
            })
        };
        if let Some(k) = k.filter(|&k| k > spec.n()) {
            return Err(Error::Argument(format!("rank {k} exceeds n = {}", spec.n())));
        }
        let (uf_values, bs_values) = match method {
            OrbitMethod::Uf => (Some(uf(k)?), None),
            OrbitMethod::Burnside => (None, Some(burnside(k)?)),
            OrbitMethod::Both => (Some(uf(k)?), Some(burnside(k)?)),
        };
        let agree = match (&uf_values, &bs_values) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        };
        let values = uf_values.clone().or(bs_values.clone()).expect("some method ran");
        let mut results = json!({
            "order": order.to_string(),
            "union_find": uf_values,
            "burnside": bs_values,
            "methods_agree": agree,
        });
        let mut pass = agree;
        let mut text = format!("{} group of order {order} on {spec}\n", group.kind_name());
        match k {
            Some(k) => writeln!(text, "N_{k} = {}", values[0]).unwrap(),
            None => {
                let series = Series::new(values)?;
                let pal = check_palindrome(&series);
                let lw = check_lw(&series);
                pass &= pal.pass && lw.pass;
                results["series"] = to_value(&series);
                results["palindrome"] = to_value(&pal);
                results["livingstone_wagner"] = to_value(&lw);
                writeln!(text, "N = {series}").unwrap();
                writeln!(text, "symmetric: {}, monotone to the middle: {}", pal.pass, lw.pass).unwrap();
            }
        }
        if !agree {
            writeln!(text, "union-find {uf_values:?} and Burnside {bs_values:?} disagree").unwrap();
        }
        Ok(Report::new("orbits", inputs, results, pass, text))
    })
}

/// A table given as `sn:<n>` or as a path to a JSON table file.
pub fn resolve_table(source: &str) -> Result<CharacterTable> {
    if let Some(n) = source.strip_prefix("sn:") {
        let n: usize = n.trim().parse().map_err(|e| Error::parse(format!("table '{source}'"), format!("{e}")))?;
        return sn_table(n);
    }
    load_table(&std::fs::read_to_string(source)?)
}

pub fn cmd_mult(table_source: &str, spec: PosetSpec, p: u32, irreducible: &str) -> Report {
    let inputs = json!({ "table": table_source, "poset": spec.to_string(), "p": p, "irreducible": irreducible });
    run_cmd("mult", inputs.clone(), || {
        let field = FieldSpec::new(p)?;
        if spec.kind() == PosetKind::Projective {
            return Err(Error::Unsupported(
                "multiplicities need fixed-subspace class functions; only boolean posets are supported".into(),
            ));
        }
        let table = resolve_table(table_source)?;
        let validation = validate_table(&table);
        if !validation.pass {
            return Err(Error::Validation(validation.diagnostics.join("; ")));
        }
        let n = spec.n();
        let series = multiplicity_series(&table, irreducible, n)?;
        let pi = nilpotency(spec, field)?;
        let coprime = (&table.group_order % BigUint::from(p)) != BigUint::from(0u32);
        let palindrome = check_palindrome(&series);
        let stanley = check_lw(&series);
        let chain = check_chain(&series, pi as u64)?;
        let pairwise = check_pairwise(&series, pi as u64)?;
        let regime = if pi as usize > n { "stanley" } else { "folded" };
        let pass = palindrome.pass && stanley.pass && (!coprime || (chain.pass && pairwise.pass));
        let mut text = format!(
            "multiplicities of {irreducible} in the k-subset actions, |G| = {}\nc = {series}\n",
            table.group_order
        );
        writeln!(text, "symmetric: {}, monotone to the middle: {}", palindrome.pass, stanley.pass).unwrap();
        if coprime {
            writeln!(text, "pi = {pi} ({regime} regime): {} [{}]", chain.render("c"), if chain.pass { "ok" } else { "FAIL" }).unwrap();
            writeln!(text, "pairwise folded comparisons: {}", if pairwise.pass { "ok" } else { "FAIL" }).unwrap();
        } else {
            writeln!(
                text,
                "p = {p} divides |G|: ordinary multiplicities need not satisfy the folded chain\n  (computed anyway: {})",
                chain.render("c")
            )
            .unwrap();
        }
        let results = json!({
            "group_order": table.group_order.to_string(),
            "series": to_value(&series),
            "pi": pi,
            "regime": regime,
            "p_coprime_to_order": coprime,
            "palindrome": to_value(&palindrome),
            "monotone": to_value(&stanley),
            "chain": to_value(&chain),
            "chain_applicable": coprime,
            "pairwise_pass": pairwise.pass,
        });
        Ok(Report::new("mult", inputs, results, pass, text))
    })
}

pub fn cmd_bounds(n: usize, pis: &[u64]) -> Report {
    let inputs = json!({ "n": n, "pis": pis });
    run_cmd("bounds", inputs.clone(), || {
        let report = deduce_bounds(n, pis)?;
        let mut text = String::new();
        for d in report.log.iter().filter(|d| d.round > 0) {
            writeln!(text, "  {d}").unwrap();
        }
        let lower: Vec<String> = report.lower.iter().enumerate().map(|(k, l)| format!("L_{k}={l}")).collect();
        writeln!(text, "{}", lower.join(" ")).unwrap();
        Ok(Report::new("bounds", inputs, to_value(&report), true, text))
    })
}

/// `series` may list only `c_0..c_m`; `n` then completes it by symmetry.
pub fn cmd_chain(series: &str, n: Option<usize>, pi: u64) -> Report {
    let inputs = json!({ "series": series, "n": n, "pi": pi });
    run_cmd("chain", inputs.clone(), || {
        let parsed = Series::parse(series)?;
        let series = match n {
            Some(n) if n != parsed.n() => Series::symmetric(parsed.values(), n)?,
            _ => parsed,
        };
        let chain = check_chain(&series, pi)?;
        let text = format!(
            "c = {series}\npi = {pi}: {}\n{}\n",
            chain.render("c"),
            match chain.first_violation {
                None => "chain holds".to_string(),
                Some(r) => format!("violated at r = {r}: {} < {}", chain.values[r - 1], chain.values[r]),
            }
        );
        let results = json!({ "series": to_value(&series), "chain": to_value(&chain), "rendered": chain.render("c") });
        let pass = chain.pass;
        Ok(Report::new("chain", inputs, results, pass, text))
    })
}

/// Prime factorization of a group order small enough for trial division.
pub fn factorize(order: &BigUint) -> Option<Vec<(u64, u32)>> {
    let mut n = order.to_u64()?;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    Some(out)
}

pub fn cmd_order(group_text: &str, limits: Limits) -> Report {
    let inputs = json!({});
    run_cmd("order", inputs.clone(), || {
        let group = parse_group(group_text)?;
        let order = group_order(&group, limits)?;
        let factors = factorize(&order);
        let shown = factors.as_ref().map(|f| {
            f.iter()
                .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
                .collect::<Vec<_>>()
                .join(" * ")
        });
        let text = match &shown {
            Some(s) => format!("|G| = {order} = {s}\n"),
            None => format!("|G| = {order}\n"),
        };
        let results = json!({ "kind": group.kind_name(), "order": order.to_string(), "factorization": factors });
        Ok(Report::new("order", inputs, results, true, text))
    })
}

#[derive(Parser, Debug)]
#[command(name = "incidence", version, about = "Incidence homology of subset and subspace lattices, and the orbit inequalities it implies")]
pub struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[arg(long, global = true, default_value_t = crate::poset::DEFAULT_MAX_RANK_SIZE)]
    pub max_rank_size: usize,
    #[arg(long, global = true, default_value_t = crate::poset::DEFAULT_MAX_GROUP_ORDER)]
    pub max_group_order: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of the quantum characteristic pi(p, q).
    Pitable {
        #[arg(long, default_value_t = 19)]
        pmax: u64,
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_PITABLE_Q)]
        q: Vec<u64>,
    },
    /// Homology scan, or a single H_(j,i) with its trace identity.
    Homology {
        poset: PosetSpec,
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        at: PairArgs,
    },
    /// Orbit numbers of a group on the ranks of a poset.
    Orbits {
        group: PathBuf,
        poset: PosetSpec,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = OrbitMethod::Uf)]
        method: OrbitMethod,
    },
    /// Multiplicity series of an irreducible character and its inequalities.
    Mult {
        /// `sn:<n>` or a character table file.
        table: String,
        poset: PosetSpec,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        irreducible: String,
    },
    /// Lower bounds on orbit numbers from folded chains.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        pis: Vec<u64>,
    },
    /// Checks the folded chain for a series.
    Chain {
        #[arg(long)]
        series: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        pi: u64,
    },
    /// Order of a group given in a file.
    Order { group: PathBuf },
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long, requires = "i")]
    pub j: Option<i64>,
    #[arg(long, requires = "j")]
    pub i: Option<i64>,
}

fn read_group(command: &str, path: &PathBuf) -> std::result::Result<String, Box<Report>> {
    std::fs::read_to_string(path).map_err(|e| {
        Box::new(Report::error(command, json!({ "group": path.display().to_string() }), &Error::Io(e)))
    })
}

pub fn dispatch(cli: &Cli) -> Report {
    let limits = Limits {
        max_rank_size: cli.max_rank_size,
        max_group_order: cli.max_group_order,
    };
    match &cli.command {
        Command::Pitable { pmax, q } => cmd_pitable(*pmax, q),
        Command::Homology { poset, p, at } => cmd_homology(*poset, *p, at.j.zip(at.i), limits),
        Command::Orbits { group, poset, k, method } => match read_group("orbits", group) {
            Ok(text) => cmd_orbits(&text, *poset, *k, *method, limits),
            Err(report) => *report,
        },
        Command::Mult { table, poset, p, irreducible } => cmd_mult(table, *poset, *p, irreducible),
        Command::Bounds { n, pis } => cmd_bounds(*n, pis),
        Command::Chain { series, n, pi } => cmd_chain(series, *n, *pi),
        Command::Order { group } => match read_group("order", group) {
            Ok(text) => cmd_order(&text, limits),
            Err(report) => *report,
        },
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = dispatch(&cli);
    if cli.timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.text);
        if cli.timing {
            println!("({:.1} ms)", report.timing_ms.unwrap_or(0.0));
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> PosetSpec {
        s.parse().unwrap()
    }

    #[test]
    fn pitable_cells() {
        let r = cmd_pitable(2, &[3]);
        assert!(r.passed());
        assert_eq!(r.results["pi"], json!([[2]]));
        let r = cmd_pitable(3, &[3]);
        assert_eq!(r.results["pi"][1], json!([null]));
        assert!(r.text.contains('—'));
    }

    #[test]
    fn homology_reports() {
        let r = cmd_homology(spec("boolean:4"), 3, Some((2, 1)), Limits::default());
        assert!(r.passed(), "{}", r.text);
        assert_eq!(r.results["dim_h"], json!(1));
        let r = cmd_homology(spec("projective:4,2"), 3, None, Limits::default());
        assert!(r.passed());
        assert_eq!(r.results["pi"], json!(2));
        let r = cmd_homology(spec("projective:3,3"), 3, None, Limits::default());
        assert_eq!(r.status, Status::Error);
    }

    #[test]
    fn orbit_reports() {
        let c4 = r#"{"kind":"permutation","degree":4,"generators":["(1,2,3,4)"]}"#;
        let r = cmd_orbits(c4, spec("boolean:4"), None, OrbitMethod::Both, Limits::default());
        assert!(r.passed(), "{}", r.text);
        assert_eq!(r.results["series"], json!([1, 1, 2, 1, 1]));
        assert_eq!(r.results["union_find"], r.results["burnside"]);
        let r = cmd_orbits(c4, spec("projective:4,2"), None, OrbitMethod::Uf, Limits::default());
        assert_eq!(r.status, Status::Error);
        let r = cmd_orbits(c4, spec("boolean:4"), Some(2), OrbitMethod::Both, Limits::default());
        assert_eq!(r.results["union_find"], json!([2]));
    }

    #[test]
    fn mult_reports() {
        let r = cmd_mult("sn:5", spec("boolean:5"), 3, "(4,1)");
        assert_eq!(r.results["series"], json!([0, 1, 1, 1, 1, 0]));
        assert_eq!(r.results["chain_applicable"], json!(false));
        assert!(r.passed());
        let r = cmd_mult("sn:6", spec("boolean:6"), 7, "(4,2)");
        assert_eq!(r.results["regime"], json!("stanley"));
        assert!(r.passed());
        assert_eq!(cmd_mult("sn:6", spec("boolean:6"), 7, "(9)").status, Status::Error);
    }

    #[test]
    fn bounds_and_chain_reports() {
        let r = cmd_bounds(10, &[9, 8, 7]);
        assert_eq!(r.results["lower"], json!([1, 1, 2, 3, 4, 4, 4, 3, 2, 1, 1]));
        let r = cmd_chain("1,1,1,1,1,1,2,2,3,3,3,3,5", Some(24), 17);
        assert!(r.passed());
        let r = cmd_chain("0,2,1,0,0", None, 3);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.results["chain"]["first_violation"], json!(1));
        assert_eq!(cmd_chain("1,x", None, 3).status, Status::Error);
    }

    #[test]
    fn order_report() {
        let s4 = r#"{"kind":"permutation","degree":4,"generators":["(1,2,3,4)","(1,2)"]}"#;
        let r = cmd_order(s4, Limits::default());
        assert_eq!(r.results["order"], json!("24"));
        assert_eq!(factorize(&BigUint::from(244823040u64)).unwrap(), [(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)]);
    }

    #[test]
    fn json_is_deterministic() {
        let a = cmd_bounds(24, &[13, 17, 19]).to_json();
        let b = cmd_bounds(24, &[13, 17, 19]).to_json();
        assert_eq!(a, b);
        assert!(!a.contains("timing"));
    }

    #[test]
    fn cli_parses() {
        let cli = Cli::try_parse_from(["incidence", "--json", "chain", "--series", "1,2,1", "--pi", "3"]).unwrap();
        assert!(cli.json);
        assert!(Cli::try_parse_from(["incidence", "homology", "boolean:4", "--p", "3", "--j", "1"]).is_err());
        let cli = Cli::try_parse_from(["incidence", "pitable"]).unwrap();
        assert!(dispatch(&cli).passed());
    }
}
