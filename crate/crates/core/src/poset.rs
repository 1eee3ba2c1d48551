//! The ranked posets P(n,1) (subsets of an n-set) and P(n,q) (subspaces of
//! GF(q)^n), their rank sets, and their incidence and boundary matrices.
//!
//! Basis order is fixed: subsets by the numeric value of their bit mask,
//! subspaces by the lexicographic order of their flattened RREF matrix.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::Gf;
use crate::gfpla::SparseMat;
use crate::qarith::{gauss_binom, prime_power, FieldSpec};

pub const DEFAULT_MAX_RANK_SIZE: usize = 5_000_000;
pub const DEFAULT_MAX_GROUP_ORDER: u64 = 1_000_000;

/// Resource caps shared by enumeration-heavy operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_rank_size: usize,
    pub max_group_order: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_rank_size: DEFAULT_MAX_RANK_SIZE,
            max_group_order: DEFAULT_MAX_GROUP_ORDER,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PosetKind {
    Boolean,
    Projective,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PosetSpec {
    kind: PosetKind,
    n: usize,
    q: u64,
}

impl PosetSpec {
    pub fn boolean(n: usize) -> Result<Self> {
        if n == 0 || n > 63 {
            return Err(Error::Argument(format!(
                "boolean lattice needs 1 <= n <= 63, got {n}"
            )));
        }
        Ok(PosetSpec {
            kind: PosetKind::Boolean,
            n,
            q: 1,
        })
    }

    pub fn projective(n: usize, q: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("projective space needs n >= 1".into()));
        }
        if prime_power(q).is_none() {
            return Err(Error::Argument(format!(
                "projective space needs q a prime power >= 2, got {q}"
            )));
        }
        Ok(PosetSpec {
            kind: PosetKind::Projective,
            n,
            q,
        })
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl fmt::Display for PosetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PosetKind::Boolean => write!(f, "boolean:{}", self.n),
            PosetKind::Projective => write!(f, "projective:{},{}", self.n, self.q),
        }
    }
}

impl FromStr for PosetSpec {
    type Err = Error;

    /// Accepts `boolean:<n>` and `projective:<n>,<q>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::parse(format!("poset '{s}'"), msg);
        let (kind, rest) = s.split_once(':').ok_or_else(|| bad("expected <kind>:<params>"))?;
        let nums: Vec<u64> = rest
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| bad(&e.to_string()))?;
        match (kind.trim(), nums.as_slice()) {
            ("boolean", [n]) => PosetSpec::boolean(*n as usize),
            ("projective", [n, q]) => PosetSpec::projective(*n as usize, *q),
            _ => Err(bad("expected boolean:<n> or projective:<n>,<q>")),
        }
    }
}

/// A subspace of GF(q)^n stored as its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    dim: usize,
    entries: Vec<u8>,
}

impl Subspace {
    /// Canonical form of the row space spanned by `rows` (each of length `n`).
    pub fn from_rows(gf: &Gf, n: usize, rows: &[Vec<u8>]) -> Result<Self> {
        let mut flat = Vec::with_capacity(rows.len() * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Argument(format!(
                    "row {r} has length {}, expected {n}",
                    row.len()
                )));
            }
            if row.iter().any(|&x| x as usize >= gf.order()) {
                return Err(Error::Argument(format!("row {r} has an entry outside GF({})", gf.order())));
            }
            flat.extend_from_slice(row);
        }
        let dim = rref(gf, &mut flat, n);
        Ok(Subspace {
            n,
            dim,
            entries: flat,
        })
    }

    pub(crate) fn from_canonical(n: usize, dim: usize, entries: Vec<u8>) -> Self {
        Subspace { n, dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    /// Flattened `dim x n` RREF matrix.
    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        if self.n == 0 {
            return vec![Vec::new(); self.dim];
        }
        self.entries.chunks(self.n).map(<[u8]>::to_vec).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RankElement {
    /// Bit `i` set means point `i + 1` is in the subset.
    Subset(u64),
    Subspace(Subspace),
}

impl RankElement {
    pub fn rank(&self) -> usize {
        match self {
            RankElement::Subset(mask) => mask.count_ones() as usize,
            RankElement::Subspace(s) => s.dim,
        }
    }
}

/// Reduces the flattened matrix in place to RREF, truncates zero rows and
/// returns the rank.
pub(crate) fn rref(gf: &Gf, m: &mut Vec<u8>, n: usize) -> usize {
    if n == 0 {
        m.clear();
        return 0;
    }
    let rows = m.len() / n;
    let mut rank = 0;
    for col in 0..n {
        let Some(piv) = (rank..rows).find(|&r| m[r * n + col] != 0) else {
            continue;
        };
        if piv != rank {
            for c in 0..n {
                m.swap(piv * n + c, rank * n + c);
            }
        }
        let inv = gf.inv(m[rank * n + col]);
        for c in col..n {
            m[rank * n + c] = gf.mul(m[rank * n + c], inv);
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let f = m[r * n + col];
            if f == 0 {
                continue;
            }
            for c in col..n {
                let sub = gf.mul(f, m[rank * n + c]);
                m[r * n + c] = gf.sub(m[r * n + c], sub);
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    m.truncate(rank * n);
    rank
}

/// All `dim`-dimensional subspaces of GF(q)^n as flattened RREF matrices,
/// sorted lexicographically.
fn enumerate_rref(gf: &Gf, n: usize, dim: usize) -> Vec<u8> {
    let q = gf.order();
    let stride = dim * n;
    let mut all: Vec<Vec<u8>> = Vec::new();
    let mut pivots: Vec<usize> = (0..dim).collect();
    if dim > n {
        return Vec::new();
    }
    loop {
        // free slots: (row, col) right of the row's pivot and not a pivot column
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| (pc + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let mut fill = vec![0usize; free.len()];
        loop {
            let mut m = vec![0u8; stride];
            for (r, &pc) in pivots.iter().enumerate() {
                m[r * n + pc] = 1;
            }
            for (&(r, c), &v) in free.iter().zip(&fill) {
                m[r * n + c] = v as u8;
            }
            all.push(m);
            // odometer
            let mut t = 0;
            while t < fill.len() {
                fill[t] += 1;
                if fill[t] < q {
                    break;
                }
                fill[t] = 0;
                t += 1;
            }
            if t == fill.len() {
                break;
            }
        }
        // next combination of pivot columns
        let mut t = dim;
        loop {
            if t == 0 {
                all.sort_unstable();
                return all.concat();
            }
            t -= 1;
            if pivots[t] < n - dim + t {
                pivots[t] += 1;
                for u in t + 1..dim {
                    pivots[u] = pivots[u - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `m * x` for a `a x b` matrix `m` and `b x n` matrix `x`, flattened.
fn mat_mul(gf: &Gf, m: &[u8], b: usize, x: &[u8], n: usize) -> Vec<u8> {
    let a = m.len().checked_div(b).unwrap_or(0);
    let mut out = vec![0u8; a * n];
    for r in 0..a {
        for t in 0..b {
            let f = m[r * b + t];
            if f == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] = gf.add(out[r * n + c], gf.mul(f, x[t * n + c]));
            }
        }
    }
    out
}

/// Binomial coefficients up to 64 choose 64, for colex ranking of masks.
pub(crate) struct Binomials {
    table: Vec<[u64; 65]>,
}

impl Binomials {
    pub(crate) fn get() -> &'static Binomials {
        static TABLE: OnceLock<Binomials> = OnceLock::new();
        TABLE.get_or_init(|| {
            let mut table = vec![[0u64; 65]; 65];
            for n in 0..65 {
                table[n][0] = 1;
                for k in 1..=n {
                    table[n][k] = table[n - 1][k - 1].saturating_add(table[n - 1][k]);
                }
            }
            Binomials { table }
        })
    }

    /// Position of `mask` among masks of equal popcount in numeric order.
    #[inline]
    pub(crate) fn colex_rank(&self, mut mask: u64) -> usize {
        let mut rank = 0u64;
        let mut t = 1;
        while mask != 0 {
            let c = mask.trailing_zeros() as usize;
            rank += self.table[c][t];
            t += 1;
            mask &= mask - 1;
        }
        rank as usize
    }
}

/// Masks with exactly `k` of the low `n` bits set, in increasing numeric order.
pub fn subset_masks(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let first = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(if k == 64 { u64::MAX } else { (1u64 << k) - 1 })
    };
    std::iter::successors(first, move |&x| {
        if x == 0 {
            return None;
        }
        // Gosper's hack
        let c = x & x.wrapping_neg();
        let r = x.checked_add(c)?;
        let next = (((r ^ x) >> 2) / c) | r;
        (next <= limit && next != 0).then_some(next)
    })
}

/// One rank set with an index <-> element bijection.
#[derive(Clone, Debug)]
pub enum RankSet {
    Boolean { n: usize, k: usize, len: usize },
    Projective { n: usize, k: usize, len: usize, data: Vec<u8> },
}

impl RankSet {
    pub fn len(&self) -> usize {
        match self {
            RankSet::Boolean { len, .. } | RankSet::Projective { len, .. } => *len,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn rank(&self) -> usize {
        match self {
            RankSet::Boolean { k, .. } | RankSet::Projective { k, .. } => *k,
        }
    }

    fn stride(&self) -> usize {
        match self {
            RankSet::Boolean { .. } => 0,
            RankSet::Projective { n, k, .. } => n * k,
        }
    }

    /// Flattened RREF entries of element `i` (projective only).
    pub(crate) fn subspace_entries(&self, i: usize) -> &[u8] {
        match self {
            RankSet::Projective { data, .. } => {
                let s = self.stride();
                &data[i * s..(i + 1) * s]
            }
            RankSet::Boolean { .. } => &[],
        }
    }

    /// Index of a canonical flattened RREF matrix (projective only).
    pub(crate) fn index_of_entries(&self, entries: &[u8]) -> Option<usize> {
        match self {
            RankSet::Projective { data, len, .. } => {
                let s = self.stride();
                if s == 0 {
                    return (*len == 1 && entries.is_empty()).then_some(0);
                }
                let (mut lo, mut hi) = (0usize, *len);
                while lo < hi {
                    let mid = (lo + hi) / 2;
                    match data[mid * s..(mid + 1) * s].cmp(entries) {
                        std::cmp::Ordering::Less => lo = mid + 1,
                        std::cmp::Ordering::Greater => hi = mid,
                        std::cmp::Ordering::Equal => return Some(mid),
                    }
                }
                None
            }
            RankSet::Boolean { .. } => None,
        }
    }

    pub fn element(&self, i: usize) -> RankElement {
        match self {
            RankSet::Boolean { n, k, .. } => {
                RankElement::Subset(subset_masks(*n, *k).nth(i).expect("index in range"))
            }
            RankSet::Projective { n, k, .. } => {
                RankElement::Subspace(Subspace::from_canonical(*n, *k, self.subspace_entries(i).to_vec()))
            }
        }
    }

    pub fn index_of(&self, x: &RankElement) -> Option<usize> {
        match (self, x) {
            (RankSet::Boolean { n, k, .. }, RankElement::Subset(mask)) => {
                let fits = *n >= 64 || mask >> n == 0;
                (fits && mask.count_ones() as usize == *k).then(|| Binomials::get().colex_rank(*mask))
            }
            (RankSet::Projective { n, k, .. }, RankElement::Subspace(s)) => {
                if s.n != *n || s.dim != *k {
                    return None;
                }
                self.index_of_entries(&s.entries)
            }
            _ => None,
        }
    }

    pub fn elements(&self) -> Vec<RankElement> {
        match self {
            RankSet::Boolean { n, k, .. } => subset_masks(*n, *k).map(RankElement::Subset).collect(),
            RankSet::Projective { .. } => (0..self.len()).map(|i| self.element(i)).collect(),
        }
    }
}

/// 0/1 incidence matrix between two rank sets, over the integers.
///
/// Entry `(y, x)` is 1 iff `y <= x`. Stored as sorted `(row, col)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Incidence {
    rows: usize,
    cols: usize,
    ones: Vec<(u32, u32)>,
}

impl Incidence {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ones(&self) -> &[(u32, u32)] {
        &self.ones
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.ones.binary_search(&(row as u32, col as u32)).is_ok()
    }

    pub fn column_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.cols];
        for &(_, c) in &self.ones {
            counts[c as usize] += 1;
        }
        counts
    }

    /// `coeff * self` reduced mod `p`.
    pub fn to_sparse(&self, coeff: u64, p: u32) -> Result<SparseMat> {
        SparseMat::from_triplets(
            self.rows,
            self.cols,
            p,
            self.ones.iter().map(|&(r, c)| (r as usize, c as usize, coeff)),
        )
    }
}

/// A poset together with lazily built rank sets.
pub struct Poset {
    spec: PosetSpec,
    limits: Limits,
    gf: Option<Arc<Gf>>,
    ranks: Vec<OnceLock<RankSet>>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset").field("spec", &self.spec).field("limits", &self.limits).finish()
    }
}

impl Poset {
    pub fn new(spec: PosetSpec, limits: Limits) -> Result<Self> {
        let gf = match spec.kind {
            PosetKind::Boolean => None,
            PosetKind::Projective => Some(Arc::new(Gf::new(spec.q)?)),
        };
        Ok(Poset {
            spec,
            limits,
            gf,
            ranks: (0..=spec.n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn spec(&self) -> PosetSpec {
        self.spec
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn field(&self) -> Option<&Gf> {
        self.gf.as_deref()
    }

    /// Size of rank set `k`, failing if it exceeds the enumeration cap.
    pub fn rank_len(&self, k: i64) -> Result<usize> {
        let size = rank_size(self.spec, k);
        match size.to_usize() {
            Some(s) if s <= self.limits.max_rank_size => Ok(s),
            _ => Err(Error::Resource(format!(
                "rank {k} of {} has {size} elements, above the cap of {}",
                self.spec, self.limits.max_rank_size
            ))),
        }
    }

    pub fn rank_set(&self, k: usize) -> Result<&RankSet> {
        if k > self.spec.n {
            return Err(Error::Argument(format!("rank {k} exceeds n = {}", self.spec.n)));
        }
        if let Some(set) = self.ranks[k].get() {
            return Ok(set);
        }
        let len = self.rank_len(k as i64)?;
        let n = self.spec.n;
        let set = match &self.gf {
            None => RankSet::Boolean { n, k, len },
            Some(gf) => {
                let data = enumerate_rref(gf, n, k);
                debug_assert_eq!(data.len(), len * n * k);
                RankSet::Projective { n, k, len, data }
            }
        };
        let _ = self.ranks[k].set(set);
        Ok(self.ranks[k].get().expect("just initialised"))
    }

    /// Matrix of `y <= x` for `x` of rank `k`, `y` of rank `k - i`.
    pub fn incidence(&self, k: usize, i: usize) -> Result<Incidence> {
        if i > k || k > self.spec.n {
            return Err(Error::Argument(format!(
                "incidence needs 0 <= k - i and k <= n, got k = {k}, i = {i}, n = {}",
                self.spec.n
            )));
        }
        let lower = k - i;
        let top = self.rank_set(k)?;
        let bottom = self.rank_set(lower)?;
        let mut ones: Vec<(u32, u32)> = Vec::new();
        match &self.gf {
            None => {
                let binom = Binomials::get();
                for (col, x) in subset_masks(self.spec.n, k).enumerate() {
                    let bits: Vec<u64> = (0..64).filter(|b| x >> b & 1 == 1).map(|b| 1u64 << b).collect();
                    for choice in subset_masks(k, lower) {
                        let y = (0..k).filter(|t| choice >> t & 1 == 1).fold(0u64, |acc, t| acc | bits[t]);
                        ones.push((binom.colex_rank(y) as u32, col as u32));
                    }
                }
            }
            Some(gf) => {
                let n = self.spec.n;
                let coeffs = enumerate_rref(gf, k, lower);
                let cstride = k * lower;
                let ncoeff = coeffs.len().checked_div(cstride).unwrap_or(1);
                for col in 0..top.len() {
                    let x = top.subspace_entries(col);
                    for t in 0..ncoeff {
                        let c = &coeffs[t * cstride..(t + 1) * cstride];
                        let mut y = mat_mul(gf, c, k, x, n);
                        rref(gf, &mut y, n);
                        let row = bottom.index_of_entries(&y).ok_or_else(|| {
                            Error::Consistency("sub-subspace missing from its rank set".into())
                        })?;
                        ones.push((row as u32, col as u32));
                    }
                }
            }
        }
        ones.sort_unstable();
        Ok(Incidence {
            rows: bottom.len(),
            cols: top.len(),
            ones,
        })
    }

    /// Matrix of the boundary `M_k -> M_{k-1}` over GF(p); zero outside `1..=n`.
    pub fn boundary(&self, k: i64, field: FieldSpec) -> Result<SparseMat> {
        field.check_coprime(self.spec.q)?;
        if k < 1 || k > self.spec.n as i64 {
            return Ok(SparseMat::zero(self.rank_len(k - 1)?, self.rank_len(k)?, field.p()));
        }
        self.incidence(k as usize, 1)?.to_sparse(1, field.p())
    }
}

pub fn rank_size(spec: PosetSpec, k: i64) -> BigUint {
    gauss_binom(spec.n as u64, k, spec.q).expect("q >= 1 by construction")
}

pub fn enumerate_rank(spec: PosetSpec, k: i64, limits: Limits) -> Result<Vec<RankElement>> {
    if k < 0 || k > spec.n as i64 {
        return Ok(Vec::new());
    }
    let poset = Poset::new(spec, limits)?;
    Ok(poset.rank_set(k as usize)?.elements())
}

pub fn boundary_matrix(spec: PosetSpec, k: usize, field: FieldSpec) -> Result<SparseMat> {
    field.check_coprime(spec.q)?;
    if k < 1 || k > spec.n {
        return Err(Error::Argument(format!("boundary needs 1 <= k <= n, got k = {k}")));
    }
    Poset::new(spec, Limits::default())?.boundary(k as i64, field)
}

pub fn incidence_matrix(spec: PosetSpec, k: usize, i: usize) -> Result<Incidence> {
    Poset::new(spec, Limits::default())?.incidence(k, i)
}
