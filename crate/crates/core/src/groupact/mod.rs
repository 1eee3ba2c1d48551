//! Permutation and matrix groups acting on rank sets: group order, orbit
//! counting by union-find over generators, and Burnside averaging.

mod matrix;
mod perm;
mod schreier;

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Deserialize;

pub use matrix::Mat;
pub use perm::Perm;
pub use schreier::StabChain;

use crate::error::{Error, Result};
use crate::galois::Gf;
use crate::poset::{rref, Binomials, Limits, Poset, PosetKind, PosetSpec, RankElement, Subspace, subset_masks};
use crate::series::OrbitSeries;
use perm::MaskAction;

pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabChain>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators.iter().map(Perm::to_string).collect::<Vec<_>>())
            .finish()
    }
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup::new(self.degree, self.generators.clone()).expect("already validated")
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Validation("permutation degree must be positive".into()));
        }
        if generators.is_empty() {
            return Err(Error::Validation(
                "generator list is empty (use the identity \"()\" for the trivial group)".into(),
            ));
        }
        if let Some((i, g)) = generators.iter().enumerate().find(|(_, g)| g.degree() != degree) {
            return Err(Error::Validation(format!(
                "generator {i} has degree {}, expected {degree}",
                g.degree()
            )));
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    fn from_cycle_strings(degree: usize, gens: &[&str]) -> Self {
        let gens = gens.iter().map(|s| Perm::from_cycles(s, degree).expect("well-formed")).collect();
        PermGroup::new(degree, gens).expect("well-formed")
    }

    fn cycle_text(points: impl IntoIterator<Item = usize>) -> String {
        let pts: Vec<String> = points.into_iter().map(|p| p.to_string()).collect();
        if pts.len() < 2 {
            "()".into()
        } else {
            format!("({})", pts.join(","))
        }
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup::new(n, vec![Perm::identity(n)]).expect("n > 0")
    }

    pub fn cyclic(n: usize) -> Self {
        Self::from_cycle_strings(n, &[&Self::cycle_text(1..=n)])
    }

    /// Symmetries of the regular `n`-gon, order `2n`.
    pub fn dihedral(n: usize) -> Self {
        let rotation = Self::cycle_text(1..=n);
        let reflection: String = (1..=n / 2)
            .filter(|&i| i != n + 1 - i)
            .map(|i| format!("({},{})", i, n + 1 - i))
            .collect();
        let reflection = if reflection.is_empty() { "()".to_string() } else { reflection };
        Self::from_cycle_strings(n, &[&rotation, &reflection])
    }

    pub fn symmetric(n: usize) -> Self {
        Self::from_cycle_strings(n, &[&Self::cycle_text(1..=n), &Self::cycle_text(1..=2.min(n))])
    }

    pub fn alternating(n: usize) -> Self {
        if n < 3 {
            return Self::trivial(n);
        }
        let long = if n % 2 == 1 { Self::cycle_text(1..=n) } else { Self::cycle_text(2..=n) };
        Self::from_cycle_strings(n, &["(1,2,3)", &long])
    }

    /// The induced action on 2-subsets, of degree `n(n-1)/2`.
    pub fn on_pairs(&self) -> PermGroup {
        let n = self.degree;
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let gens = self
            .generators
            .iter()
            .map(|g| {
                let images = pairs
                    .iter()
                    .map(|&(a, b)| {
                        let (x, y) = (g.apply(a), g.apply(b));
                        index[&(x.min(y), x.max(y))] as u32
                    })
                    .collect();
                Perm::from_images(images).expect("induced map is a bijection")
            })
            .collect();
        PermGroup::new(pairs.len(), gens).expect("nonempty")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// All elements by breadth-first closure over the generators.
    pub fn elements(&self, cap: u64) -> Result<Vec<Perm>> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::Resource(format!(
                "group of order {order} exceeds the element enumeration cap {cap}"
            )));
        }
        let id = Perm::identity(self.degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    out.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        if BigUint::from(out.len()) != order {
            return Err(Error::Consistency(format!(
                "closure produced {} elements but the stabilizer chain gives {order}",
                out.len()
            )));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct MatrixGroup {
    n: usize,
    q: u64,
    gf: Arc<Gf>,
    generators: Vec<Mat>,
    declared_order: Option<BigUint>,
}

impl MatrixGroup {
    pub fn new(n: usize, q: u64, generators: Vec<Mat>, declared_order: Option<BigUint>) -> Result<Self> {
        let gf = Arc::new(Gf::new(q)?);
        if n == 0 {
            return Err(Error::Validation("matrix dimension must be positive".into()));
        }
        if generators.is_empty() {
            return Err(Error::Validation("generator list is empty".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.n() != n {
                return Err(Error::Validation(format!("generator {i} is {0}x{0}, expected {n}x{n}", g.n())));
            }
            if !g.is_invertible(&gf) {
                return Err(Error::Validation(format!("generator {i} is singular over GF({q})")));
            }
        }
        Ok(MatrixGroup {
            n,
            q,
            gf,
            generators,
            declared_order,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn field(&self) -> &Gf {
        &self.gf
    }

    pub fn generators(&self) -> &[Mat] {
        &self.generators
    }

    pub fn declared_order(&self) -> Option<&BigUint> {
        self.declared_order.as_ref()
    }

    /// Size of the generated matrix group by closure, or `None` past `cap`.
    pub fn closure_order(&self, cap: u64) -> Option<u64> {
        let id = Mat::identity(self.n);
        let mut seen: HashSet<Mat> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.mul(&self.gf, &x);
                if !seen.contains(&y) {
                    if seen.len() as u64 >= cap {
                        return None;
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Some(seen.len() as u64)
    }
}

#[derive(Clone, Debug)]
pub enum Group {
    Permutation(PermGroup),
    Matrix(MatrixGroup),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Perm(Perm),
    Matrix(Mat),
}

impl Group {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Group::Permutation(_) => "permutation",
            Group::Matrix(_) => "matrix",
        }
    }

    pub fn generators(&self) -> Vec<GroupElement> {
        match self {
            Group::Permutation(g) => g.generators.iter().cloned().map(GroupElement::Perm).collect(),
            Group::Matrix(g) => g.generators.iter().cloned().map(GroupElement::Matrix).collect(),
        }
    }

    /// The poset this group acts on must match in kind, `n` and `q`.
    pub fn check_acts_on(&self, spec: PosetSpec) -> Result<()> {
        match (self, spec.kind()) {
            (Group::Permutation(g), PosetKind::Boolean) if g.degree == spec.n() => Ok(()),
            (Group::Matrix(g), PosetKind::Projective) if g.n == spec.n() && g.q == spec.q() => Ok(()),
            _ => Err(Error::Incompatible(format!(
                "a {} group {} does not act on {spec}",
                self.kind_name(),
                match self {
                    Group::Permutation(g) => format!("of degree {}", g.degree),
                    Group::Matrix(g) => format!("in dimension {} over GF({})", g.n, g.q),
                }
            ))),
        }
    }
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum GroupFile {
    Permutation {
        degree: usize,
        generators: Vec<String>,
        #[serde(default)]
        order: Option<u64>,
    },
    Matrix {
        n: usize,
        q: u64,
        generators: Vec<Vec<Vec<u32>>>,
        #[serde(default)]
        order: Option<u64>,
    },
}

/// Parses and validates a JSON group description.
///
/// Permutation groups use 1-based cycle notation; a declared `order` is
/// checked against the stabilizer chain. Matrix groups list `n x n` integer
/// matrices with entries in `0..q`; a declared order is checked by closure
/// when that fits under the default group-order cap.
pub fn parse_group(text: &str) -> Result<Group> {
    let file: GroupFile = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string()))?;
    match file {
        GroupFile::Permutation {
            degree,
            generators,
            order,
        } => {
            let gens = generators
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    Perm::from_cycles(s, degree).map_err(|e| match e {
                        Error::Validation(m) => Error::Validation(format!("generators[{i}]: {m}")),
                        Error::Parse { message, .. } => Error::parse(format!("generators[{i}]"), message),
                        other => other,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let group = PermGroup::new(degree, gens)?;
            if let Some(declared) = order {
                let actual = group.order();
                if actual != BigUint::from(declared) {
                    return Err(Error::Validation(format!(
                        "declared order {declared} but the generators give {actual}"
                    )));
                }
            }
            Ok(Group::Permutation(group))
        }
        GroupFile::Matrix {
            n,
            q,
            generators,
            order,
        } => {
            let gf = Gf::new(q).map_err(|e| Error::Validation(format!("q: {e}")))?;
            let gens = generators
                .iter()
                .enumerate()
                .map(|(i, rows)| {
                    Mat::from_rows(&gf, rows).map_err(|e| Error::Validation(format!("generators[{i}]: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let group = MatrixGroup::new(n, q, gens, order.map(BigUint::from))?;
            if let Some(declared) = order {
                if let Some(actual) = group.closure_order(Limits::default().max_group_order) {
                    if actual != declared {
                        return Err(Error::Validation(format!(
                            "declared order {declared} but the generators give {actual}"
                        )));
                    }
                }
            }
            Ok(Group::Matrix(group))
        }
    }
}

/// Exact `|G|`: stabilizer chain for permutation groups, closure for matrix groups.
pub fn group_order(g: &Group, limits: Limits) -> Result<BigUint> {
    match g {
        Group::Permutation(p) => Ok(p.order()),
        Group::Matrix(m) => match (m.closure_order(limits.max_group_order), &m.declared_order) {
            (Some(order), _) => Ok(BigUint::from(order)),
            (None, Some(declared)) => Ok(declared.clone()),
            (None, None) => Err(Error::Resource(format!(
                "matrix group closure exceeds {} elements; supply \"order\" in the group file",
                limits.max_group_order
            ))),
        },
    }
}

pub fn cycle_type(g: &Perm) -> Vec<usize> {
    g.cycle_type()
}

/// Number of `k`-subsets fixed by an element of the given cycle type: the
/// coefficient of `t^k` in `prod_c (1 + t^c)`.
pub fn fix_count_subsets(cycle_type: &[usize], k: usize) -> BigUint {
    let n: usize = cycle_type.iter().sum();
    if k > n {
        return BigUint::zero();
    }
    let mut poly = vec![BigUint::zero(); n + 1];
    poly[0] = BigUint::from(1u32);
    let mut deg = 0;
    for &c in cycle_type {
        for d in (0..=deg).rev() {
            if !poly[d].is_zero() {
                let v = poly[d].clone();
                poly[d + c] += v;
            }
        }
        deg += c;
    }
    poly.swap_remove(k)
}

/// Orbit numbers on all ranks of `boolean(n)` by averaging fixed-subset counts.
pub fn burnside_counts(g: &Group, spec: PosetSpec, limits: Limits) -> Result<OrbitSeries> {
    g.check_acts_on(spec)?;
    let Group::Permutation(pg) = g else {
        return Err(Error::Unsupported("Burnside counting is implemented for permutation groups only".into()));
    };
    let elements = pg.elements(limits.max_group_order)?;
    let mut by_type: HashMap<Vec<usize>, u64> = HashMap::new();
    for e in &elements {
        *by_type.entry(e.cycle_type()).or_default() += 1;
    }
    let order = BigUint::from(elements.len());
    let n = spec.n();
    let values = (0..=n)
        .map(|k| {
            let total: BigUint = by_type
                .iter()
                .map(|(ct, &count)| fix_count_subsets(ct, k) * count)
                .sum();
            if !(&total % &order).is_zero() {
                return Err(Error::Consistency(format!(
                    "Burnside sum {total} at k = {k} is not divisible by |G| = {order}"
                )));
            }
            (total / &order)
                .to_u64()
                .ok_or_else(|| Error::Resource("orbit count does not fit in 64 bits".into()))
        })
        .collect::<Result<Vec<u64>>>()?;
    OrbitSeries::new(values)
}

/// Orbits of the generated group on rank `k`, by union-find over generator edges.
pub fn orbit_count_unionfind(g: &Group, poset: &Poset, k: usize) -> Result<u64> {
    let spec = poset.spec();
    g.check_acts_on(spec)?;
    if k > spec.n() {
        return Err(Error::Argument(format!("rank {k} exceeds n = {}", spec.n())));
    }
    let len = poset.rank_len(k as i64)?;
    if len == 0 {
        return Ok(0);
    }
    let mut uf: UnionFind<u32> = UnionFind::new(len);
    let mut components = len as u64;
    match g {
        Group::Permutation(pg) => {
            let actions: Vec<MaskAction> = pg.generators.iter().map(MaskAction::new).collect();
            let binom = Binomials::get();
            for (x, mask) in subset_masks(spec.n(), k).enumerate() {
                for act in &actions {
                    let y = binom.colex_rank(act.apply(mask));
                    if uf.union(x as u32, y as u32) {
                        components -= 1;
                    }
                }
            }
        }
        Group::Matrix(mg) => {
            let set = poset.rank_set(k)?;
            let n = spec.n();
            for x in 0..len {
                let entries = set.subspace_entries(x);
                for gen in &mg.generators {
                    let mut img = gen.act_on_rows(&mg.gf, entries);
                    rref(&mg.gf, &mut img, n);
                    let y = set.index_of_entries(&img).ok_or_else(|| {
                        Error::Consistency("image subspace missing from its rank set".into())
                    })?;
                    if uf.union(x as u32, y as u32) {
                        components -= 1;
                    }
                }
            }
        }
    }
    Ok(components)
}

/// Orbit numbers on every rank by union-find; ranks are processed in parallel.
pub fn orbit_series_unionfind(g: &Group, poset: &Poset) -> Result<OrbitSeries> {
    g.check_acts_on(poset.spec())?;
    let n = poset.spec().n();
    for k in 0..=n {
        poset.rank_set(k)?;
    }
    let values = (0..=n)
        .into_par_iter()
        .map(|k| orbit_count_unionfind(g, poset, k))
        .collect::<Result<Vec<u64>>>()?;
    OrbitSeries::new(values)
}

/// Image of a rank element under a group element; the rank is preserved.
pub fn act(g: &GroupElement, x: &RankElement, poset: &Poset) -> Result<RankElement> {
    match (g, x) {
        (GroupElement::Perm(p), RankElement::Subset(mask)) => {
            if p.degree() != poset.spec().n() {
                return Err(Error::Incompatible("permutation degree does not match the poset".into()));
            }
            Ok(RankElement::Subset(p.apply_mask(*mask)))
        }
        (GroupElement::Matrix(m), RankElement::Subspace(s)) => {
            let gf = poset
                .field()
                .ok_or_else(|| Error::Incompatible("matrix acting on a Boolean lattice".into()))?;
            if m.n() != s.ambient_dim() {
                return Err(Error::Incompatible("matrix size does not match the subspace".into()));
            }
            let mut img = m.act_on_rows(gf, s.entries());
            let dim = rref(gf, &mut img, m.n());
            Ok(RankElement::Subspace(Subspace::from_canonical(m.n(), dim, img)))
        }
        _ => Err(Error::Incompatible("group element and poset element kinds differ".into())),
    }
}
