//! Generalized homology of the incidence sequence.
//!
//! With `d^pi = 0`, each pair `(j, i)` with `0 < i < pi` picks out the
//! subsequence
//!
//! ```text
//! ... <- M_{j-pi} <- M_{j-i} <- M_j <- M_{j+pi-i} <- M_{j+pi} <- ...
//! ```
//!
//! whose maps are `d^i` and `d^(pi-i)` alternately, and `H_{j,i}` is its
//! homology at `M_j`. Exactly one arrow `M_a <- M_b` of the subsequence has
//! `0 <= a + b < pi`; `M_b` sits at position 0 and positions grow by one per
//! arrow toward larger indices.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gfpla::{power_boundary, SparseMat};
use crate::poset::{Poset, PosetSpec};
use crate::qarith::{quantum_char, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceLayout {
    pub j: i64,
    pub i: i64,
    pub pi: i64,
    pub n: i64,
    /// Indices of the subsequence within `[min(j, 0) - pi, max(j, n) + pi]`, ascending.
    pub indices: Vec<i64>,
    pub initial_arrow: (i64, i64),
    /// Position of `M_j`.
    pub d: i64,
}

impl SequenceLayout {
    /// Position of `index` counted from `M_b`; `None` if not in the displayed window.
    pub fn position_of(&self, index: i64) -> Option<i64> {
        let b = self.indices.iter().position(|&x| x == self.initial_arrow.1)?;
        let at = self.indices.iter().position(|&x| x == index)?;
        Some(at as i64 - b as i64)
    }

    /// The homology parameter at `index`: `i` on the class of `j`, `pi - i` on the class of `j - i`.
    pub fn parameter_at(&self, index: i64) -> i64 {
        if (index - self.j).rem_euclid(self.pi) == 0 {
            self.i
        } else {
            self.pi - self.i
        }
    }

    pub fn type_ab(&self) -> (i64, i64) {
        self.initial_arrow
    }
}

pub fn sequence_layout(j: i64, i: i64, pi: i64, n: i64) -> Result<SequenceLayout> {
    if !(0 < i && i < pi) {
        return Err(Error::Argument(format!("need 0 < i < pi, got i = {i}, pi = {pi}")));
    }
    let lo = j.min(0) - pi;
    let hi = n.max(j) + pi;
    let mut indices: Vec<i64> = (lo - i..=hi + i)
        .filter(|&x| (x - j).rem_euclid(pi) == 0 || (x - j + i).rem_euclid(pi) == 0)
        .collect();
    indices.dedup();
    let arrows: Vec<(i64, i64)> = indices
        .windows(2)
        .map(|w| (w[0], w[1]))
        .filter(|&(a, b)| 0 <= a + b && a + b < pi)
        .collect();
    let initial_arrow = match arrows.as_slice() {
        [single] => *single,
        other => {
            return Err(Error::Consistency(format!(
                "expected one initial arrow for (j={j}, i={i}, pi={pi}), found {}",
                other.len()
            )))
        }
    };
    indices.retain(|&x| lo <= x && x <= hi);
    let mut layout = SequenceLayout {
        j,
        i,
        pi,
        n,
        indices,
        initial_arrow,
        d: 0,
    };
    layout.d = layout
        .position_of(j)
        .ok_or_else(|| Error::Consistency(format!("index {j} missing from its own sequence")))?;
    Ok(layout)
}

/// True iff `n - pi < 2j - i < n`, the only place homology can survive.
pub fn vanishing_window(n: i64, pi: i64, j: i64, i: i64) -> bool {
    let x = 2 * j - i;
    n - pi < x && x < n
}

/// The quantum characteristic governing `spec` over `field`.
pub fn nilpotency(spec: PosetSpec, field: FieldSpec) -> Result<i64> {
    Ok(quantum_char(field.p() as u64, spec.q())? as i64)
}

/// Ranks of the powers `d^i` leaving each `M_k`, computed on demand.
struct PowerRanks<'a> {
    poset: &'a Poset,
    field: FieldSpec,
}

impl PowerRanks<'_> {
    fn rank(&self, k: i64, i: i64) -> Result<usize> {
        let n = self.poset.spec().n() as i64;
        if k < 0 || k > n || k - i < 0 {
            return Ok(0);
        }
        Ok(power_boundary(self.poset, k, i as usize, self.field)?.rank())
    }
}

fn dim_from_ranks(dim_mj: usize, kernel_rank: usize, image_rank: usize, j: i64, i: i64) -> Result<usize> {
    let nullity = dim_mj - kernel_rank;
    nullity.checked_sub(image_rank).ok_or_else(|| {
        Error::Consistency(format!(
            "image of d^(pi-i) larger than kernel of d^i at (j={j}, i={i}): {image_rank} > {nullity}"
        ))
    })
}

/// `dim H_{j,i} = nullity(d^i on M_j) - rank(d^(pi-i) from M_{j+pi-i})`.
pub fn homology_dim(poset: &Poset, field: FieldSpec, j: i64, i: i64) -> Result<usize> {
    let pi = nilpotency(poset.spec(), field)?;
    if !(0 < i && i < pi) {
        return Err(Error::Argument(format!("need 0 < i < pi = {pi}, got i = {i}")));
    }
    let n = poset.spec().n() as i64;
    if j < 0 || j > n {
        return Err(Error::Argument(format!("need 0 <= j <= n = {n}, got j = {j}")));
    }
    let ranks = PowerRanks { poset, field };
    dim_from_ranks(
        poset.rank_len(j)?,
        ranks.rank(j, i)?,
        ranks.rank(j + pi - i, pi - i)?,
        j,
        i,
    )
}

/// `[f]_pi` for the rank sizes: `sum_t |Q_{k + t pi}|`.
fn folded_rank_size(poset: &Poset, k: i64, pi: i64) -> Result<i64> {
    let n = poset.spec().n() as i64;
    let mut total = 0i64;
    for x in 0..=n {
        if (x - k).rem_euclid(pi) == 0 {
            total += poset.rank_len(x)? as i64;
        }
    }
    Ok(total)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceCheck {
    pub j: i64,
    pub i: i64,
    /// The module of the sequence lying in the vanishing window, as
    /// `(index, parameter)`; `None` when no module of the sequence does.
    pub slot: Option<(i64, i64)>,
    pub type_ab: (i64, i64),
    pub d: i64,
    pub lhs: i64,
    pub rhs: i64,
    pub pass: bool,
}

/// The unique module of the sequence through `(j, i)` with its index in the
/// vanishing window, if any.
pub fn window_slot(layout: &SequenceLayout) -> Option<(i64, i64)> {
    let (n, pi) = (layout.n, layout.pi);
    let mut slots = layout
        .indices
        .iter()
        .map(|&x| (x, layout.parameter_at(x)))
        .filter(|&(x, param)| vanishing_window(n, pi, x, param));
    let first = slots.next();
    debug_assert!(slots.next().is_none());
    first
}

/// The trace identity `H ~ (-1)^d [M_b - M_a]_pi` at the dimension level.
///
/// The identity concerns the one homology of the sequence through `(j, i)`
/// that may survive. When `(j, i)` is in the vanishing window that is
/// `H_{j,i}` itself; otherwise it is the window slot of the sequence, and
/// `lhs` is its dimension (0 if the slot lies outside `0..=n` or no slot exists).
pub fn trace_check(poset: &Poset, field: FieldSpec, j: i64, i: i64) -> Result<TraceCheck> {
    let pi = nilpotency(poset.spec(), field)?;
    let n = poset.spec().n() as i64;
    let layout = sequence_layout(j, i, pi, n)?;
    let slot = window_slot(&layout);
    let (lhs, d) = match slot {
        Some((x, param)) => {
            let dim = if (0..=n).contains(&x) {
                homology_dim(poset, field, x, param)? as i64
            } else {
                0
            };
            let d = layout
                .position_of(x)
                .ok_or_else(|| Error::Consistency(format!("window slot {x} outside the layout")))?;
            (dim, d)
        }
        None => (0, layout.d),
    };
    let (a, b) = layout.initial_arrow;
    let euler = folded_rank_size(poset, b, pi)? - folded_rank_size(poset, a, pi)?;
    let rhs = if d.rem_euclid(2) == 0 { euler } else { -euler };
    Ok(TraceCheck {
        j,
        i,
        slot,
        type_ab: (a, b),
        d,
        lhs,
        rhs,
        pass: lhs == rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyRecord {
    pub j: i64,
    pub i: i64,
    pub dim_h: usize,
    pub in_window: bool,
    pub trace_lhs: i64,
    pub trace_rhs: i64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub spec: PosetSpec,
    pub p: u32,
    pub pi: i64,
    pub records: Vec<HomologyRecord>,
    pub pass: bool,
}

impl HomologyReport {
    pub fn record(&self, j: i64, i: i64) -> Option<&HomologyRecord> {
        self.records.iter().find(|r| r.j == j && r.i == i)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &HomologyRecord> {
        self.records.iter().filter(|r| r.dim_h > 0)
    }
}

/// All powers `d^i : M_k -> M_{k-i}` for `1 <= i <= max_power`, per rank `k`.
pub(crate) fn power_table(poset: &Poset, field: FieldSpec, max_power: i64) -> Result<Vec<Vec<SparseMat>>> {
    let n = poset.spec().n() as i64;
    let boundaries: Vec<SparseMat> = (0..=n)
        .into_par_iter()
        .map(|k| poset.boundary(k, field))
        .collect::<Result<_>>()?;
    (0..=n)
        .into_par_iter()
        .map(|k| {
            let mut powers = Vec::new();
            let mut acc: Option<SparseMat> = None;
            for i in 1..=max_power.min(k) {
                let step = &boundaries[(k - i + 1) as usize];
                let next = match &acc {
                    None => step.clone(),
                    Some(prev) => step.matmul(prev)?,
                };
                powers.push(next.clone());
                acc = Some(next);
            }
            Ok(powers)
        })
        .collect()
}

/// Homology dimensions, window flags and trace identities for every
/// `0 <= j <= n`, `0 < i < pi`.
pub fn homology_scan(poset: &Poset, field: FieldSpec) -> Result<HomologyReport> {
    let spec = poset.spec();
    let pi = nilpotency(spec, field)?;
    let n = spec.n() as i64;
    for k in 0..=n {
        poset.rank_len(k)?;
    }
    let powers = power_table(poset, field, pi - 1)?;
    // rank_of[k][i-1] = rank of d^i leaving M_k (0 when the target is empty)
    let rank_of: Vec<Vec<usize>> = powers
        .par_iter()
        .map(|ps| ps.iter().map(SparseMat::rank).collect())
        .collect();
    let rank = |k: i64, i: i64| -> usize {
        if k < 0 || k > n || i < 1 {
            return 0;
        }
        rank_of[k as usize].get(i as usize - 1).copied().unwrap_or(0)
    };
    let dims: Vec<usize> = (0..=n).map(|k| poset.rank_len(k)).collect::<Result<_>>()?;
    let dim_h = |j: i64, i: i64| -> Result<usize> {
        if j < 0 || j > n {
            return Ok(0);
        }
        dim_from_ranks(dims[j as usize], rank(j, i), rank(j + pi - i, pi - i), j, i)
    };
    let folded = |k: i64| -> i64 {
        (0..=n)
            .filter(|x| (x - k).rem_euclid(pi) == 0)
            .map(|x| dims[x as usize] as i64)
            .sum()
    };

    let mut records = Vec::new();
    for i in 1..pi {
        for j in 0..=n {
            let layout = sequence_layout(j, i, pi, n)?;
            let dim = dim_h(j, i)?;
            let in_window = vanishing_window(n, pi, j, i);
            let (lhs, d) = match window_slot(&layout) {
                Some((x, param)) => (dim_h(x, param)? as i64, layout.position_of(x).unwrap_or(layout.d)),
                None => (0, layout.d),
            };
            let (a, b) = layout.initial_arrow;
            let euler = folded(b) - folded(a);
            let rhs = if d.rem_euclid(2) == 0 { euler } else { -euler };
            if rhs < 0 {
                return Err(Error::Consistency(format!(
                    "negative trace value {rhs} at (j={j}, i={i}) for {spec} over GF({})",
                    field.p()
                )));
            }
            let pass = (in_window || dim == 0) && lhs == rhs;
            records.push(HomologyRecord {
                j,
                i,
                dim_h: dim,
                in_window,
                trace_lhs: lhs,
                trace_rhs: rhs,
                pass,
            });
        }
    }
    let pass = records.iter().all(|r| r.pass);
    Ok(HomologyReport {
        spec,
        p: field.p(),
        pi,
        records,
        pass,
    })
}
