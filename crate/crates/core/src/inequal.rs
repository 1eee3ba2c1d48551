//! Folded sums `[c_k]_pi`, the folded inequality chain and its use for
//! lower bounds on orbit numbers.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{sequence_layout, window_slot};
use crate::series::Series;

/// `[c_k]_pi`: the sum of `c_x` over `x = k (mod pi)`, `0 <= x <= n`.
pub fn fold(c: &Series, pi: u64, k: i64) -> u64 {
    assert!(pi >= 1, "fold needs pi >= 1");
    residue_class(c.n(), pi, k).iter().map(|&x| c.get(x as i64)).sum()
}

/// Indices `0 <= x <= n` congruent to `k` mod `pi`, ascending.
fn residue_class(n: usize, pi: u64, k: i64) -> Vec<usize> {
    let start = k.rem_euclid(pi as i64) as usize;
    (start..=n).step_by(pi as usize).collect()
}

fn chain_shape(n: usize, pi: u64) -> (usize, usize) {
    (n / 2, (pi / 2) as usize)
}

/// The chain `[c_m]_pi >= [c_{m-1}]_pi >= ... >= [c_{m-s}]_pi >= 0` as index sets,
/// `m = floor(n/2)`, `s = floor(pi/2)`, without using `c_k = c_{n-k}`.
pub fn symbolic_chain(n: usize, pi: u64) -> Result<Vec<Vec<usize>>> {
    if pi < 2 {
        return Err(Error::Argument(format!("need pi >= 2, got {pi}")));
    }
    let (m, s) = chain_shape(n, pi);
    Ok((0..=s).map(|r| residue_class(n, pi, m as i64 - r as i64)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoldedChainResult {
    pub n: usize,
    pub pi: u64,
    pub m: usize,
    pub s: usize,
    /// Index sets of the folded terms, `r = 0..=s`.
    pub terms: Vec<Vec<usize>>,
    /// `[c_{m-r}]_pi` for `r = 0..=s`.
    pub values: Vec<u64>,
    pub pass: bool,
    /// First `r` with `values[r - 1] < values[r]`.
    pub first_violation: Option<usize>,
}

impl FoldedChainResult {
    /// Renders the chain as `N_8 = 3 >= N_7+N_24 = 3 >= ...` with the given symbol.
    pub fn render(&self, symbol: &str) -> String {
        let parts: Vec<String> = self
            .terms
            .iter()
            .zip(&self.values)
            .map(|(set, v)| {
                let names: Vec<String> = set.iter().map(|x| format!("{symbol}_{x}")).collect();
                let lhs = if names.is_empty() { "0".to_string() } else { names.join("+") };
                format!("{lhs} = {v}")
            })
            .collect();
        parts.join(" >= ")
    }
}

impl fmt::Display for FoldedChainResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("c"))
    }
}

pub fn check_chain(c: &Series, pi: u64) -> Result<FoldedChainResult> {
    let n = c.n();
    let terms = symbolic_chain(n, pi)?;
    let values: Vec<u64> = terms.iter().map(|set| set.iter().map(|&x| c.values()[x]).sum()).collect();
    let first_violation = (1..values.len()).find(|&r| values[r - 1] < values[r]);
    let (m, s) = chain_shape(n, pi);
    Ok(FoldedChainResult {
        n,
        pi,
        m,
        s,
        terms,
        values,
        pass: first_violation.is_none(),
        first_violation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LwResult {
    pub pass: bool,
    /// First `(k, l)` with `k <= l`, `k + l <= n` and `c_k > c_l`.
    pub violation: Option<(usize, usize)>,
}

pub fn check_lw(c: &Series) -> LwResult {
    let v = c.values();
    let n = c.n();
    let violation = (0..=n)
        .flat_map(|k| (k..=n - k.min(n)).map(move |l| (k, l)))
        .filter(|&(k, l)| k + l <= n)
        .find(|&(k, l)| v[k] > v[l]);
    LwResult {
        pass: violation.is_none(),
        violation,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PalindromeResult {
    pub pass: bool,
    /// First `k` with `c_k != c_{n-k}`.
    pub violation: Option<usize>,
}

pub fn check_palindrome(c: &Series) -> PalindromeResult {
    let v = c.values();
    let n = c.n();
    let violation = (0..=n).find(|&k| v[k] != v[n - k]);
    PalindromeResult {
        pass: violation.is_none(),
        violation,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairwiseCheck {
    pub j: i64,
    pub i: i64,
    pub type_ab: (i64, i64),
    /// Position of the surviving homology; `None` if the sequence is exact.
    pub d: Option<i64>,
    pub folded_a: u64,
    pub folded_b: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairwiseReport {
    pub pi: u64,
    pub checks: Vec<PairwiseCheck>,
    pub pass: bool,
}

/// Compares `[c_a]_pi` and `[c_b]_pi` for the sequence through every `(j, i)`,
/// `0 <= j <= n`, `0 < i < pi`: `<=` when the homology sits at an even
/// position, `>=` at an odd one, and equality when the sequence is exact.
pub fn check_pairwise(c: &Series, pi: u64) -> Result<PairwiseReport> {
    if pi < 2 {
        return Err(Error::Argument(format!("need pi >= 2, got {pi}")));
    }
    let n = c.n() as i64;
    let mut checks = Vec::new();
    for j in 0..=n {
        for i in 1..pi as i64 {
            let layout = sequence_layout(j, i, pi as i64, n)?;
            let (a, b) = layout.initial_arrow;
            let (fa, fb) = (fold(c, pi, a), fold(c, pi, b));
            let d = window_slot(&layout).and_then(|(x, _)| layout.position_of(x));
            let pass = match d {
                Some(d) if d.rem_euclid(2) == 0 => fa <= fb,
                Some(_) => fb <= fa,
                None => fa == fb,
            };
            checks.push(PairwiseCheck {
                j,
                i,
                type_ab: (a, b),
                d,
                folded_a: fa,
                folded_b: fb,
                pass,
            });
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(PairwiseReport { pi, checks, pass })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Baseline,
    Symmetry,
    LivingstoneWagner,
    FoldedChain,
}

/// One improvement of a lower bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Derivation {
    pub round: usize,
    pub rule: Rule,
    pub target: usize,
    pub value: u64,
    pub from: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<u64>,
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let from: Vec<String> = self.from.iter().map(|x| format!("L_{x}")).collect();
        match self.rule {
            Rule::Baseline => write!(f, "L_{} >= {} (rank set nonempty)", self.target, self.value),
            Rule::Symmetry => write!(f, "L_{} >= {} = {} (symmetry)", self.target, from.join(""), self.value),
            Rule::LivingstoneWagner => {
                write!(f, "L_{} >= {} = {} (monotonicity)", self.target, from.join(""), self.value)
            }
            Rule::FoldedChain => write!(
                f,
                "L_{} >= {} = {} (pi = {})",
                self.target,
                from.join(" + "),
                self.value,
                self.pi.unwrap_or(0)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub n: usize,
    pub pis: Vec<u64>,
    pub lower: Vec<u64>,
    pub rounds: usize,
    pub log: Vec<Derivation>,
}

/// Lower bounds `L_0..L_n` on orbit numbers `N_k` of any group for which
/// every `pi` in `pis` yields a valid folded chain.
///
/// Starting from `L_k = 1`, bounds are propagated by `N_k = N_{n-k}`, by
/// `N_k <= N_l` for `k <= l`, `k + l <= n`, and by each link of a folded
/// chain whose larger side is a single index `u`: `L_u >= sum of L` over the
/// smaller side. Stops at the fixpoint or after `4n` rounds.
pub fn deduce_bounds(n: usize, pis: &[u64]) -> Result<BoundsReport> {
    let chains = pis
        .iter()
        .map(|&pi| symbolic_chain(n, pi).map(|c| (pi, c)))
        .collect::<Result<Vec<_>>>()?;
    let mut lower = vec![0u64; n + 1];
    let mut log = Vec::new();
    let cap = 4 * n.max(1);
    let raise = |lower: &mut Vec<u64>, log: &mut Vec<Derivation>, d: Derivation| {
        if d.value > lower[d.target] {
            lower[d.target] = d.value;
            log.push(d);
            true
        } else {
            false
        }
    };
    for k in 0..=n {
        raise(&mut lower, &mut log, Derivation { round: 0, rule: Rule::Baseline, target: k, value: 1, from: vec![], pi: None });
    }
    for round in 1..=cap {
        let mut changed = false;
        for k in 0..=n {
            let d = Derivation { round, rule: Rule::Symmetry, target: k, value: lower[n - k], from: vec![n - k], pi: None };
            changed |= raise(&mut lower, &mut log, d);
        }
        for l in 0..=n {
            for k in (0..l).filter(|k| k + l <= n) {
                let d = Derivation { round, rule: Rule::LivingstoneWagner, target: l, value: lower[k], from: vec![k], pi: None };
                changed |= raise(&mut lower, &mut log, d);
            }
        }
        for (pi, chain) in &chains {
            for pair in chain.windows(2) {
                if let [u] = pair[0][..] {
                    let value = pair[1].iter().map(|&x| lower[x]).sum();
                    let d = Derivation { round, rule: Rule::FoldedChain, target: u, value, from: pair[1].clone(), pi: Some(*pi) };
                    changed |= raise(&mut lower, &mut log, d);
                }
            }
        }
        if !changed {
            return Ok(BoundsReport { n, pis: pis.to_vec(), lower, rounds: round, log });
        }
    }
    Err(Error::NonConvergence(cap))
}
