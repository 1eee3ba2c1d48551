//! Exact sparse linear algebra over GF(p).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::qarith::FieldSpec;

/// Compressed-row sparse matrix over GF(p).
///
/// Entries within a row are sorted by column, stored values are in `1..p`,
/// and no `(row, col)` pair appears twice. Zero-row and zero-column
/// matrices are ordinary values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: usize,
    p: u32,
    row_ptr: Vec<usize>,
    col_idx: Vec<u32>,
    vals: Vec<u32>,
}

#[inline]
fn mulmod(a: u32, b: u32, p: u32) -> u32 {
    (a as u64 * b as u64 % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize, p: u32) -> Self {
        SparseMat {
            rows,
            cols,
            p,
            row_ptr: vec![0; rows + 1],
            col_idx: Vec::new(),
            vals: Vec::new(),
        }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let one = 1 % p;
        if one == 0 {
            return Self::zero(n, n, p);
        }
        SparseMat {
            rows: n,
            cols: n,
            p,
            row_ptr: (0..=n).collect(),
            col_idx: (0..n as u32).collect(),
            vals: vec![one; n],
        }
    }

    /// Builds a matrix from `(row, col, value)` triplets. Values are reduced
    /// mod `p`, duplicates are summed and resulting zeros dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, p: u32, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        if p < 2 {
            return Err(Error::Argument(format!("modulus must be >= 2, got {p}")));
        }
        let mut items: Vec<(usize, usize, u32)> = Vec::new();
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::Argument(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            items.push((r, c, (v % p as u64) as u32));
        }
        items.sort_unstable_by_key(|&(r, c, _)| (r, c));
        let mut row_ptr = vec![0usize; rows + 1];
        let mut col_idx = Vec::with_capacity(items.len());
        let mut vals = Vec::with_capacity(items.len());
        let mut last: Option<(usize, usize)> = None;
        let mut row_of = Vec::with_capacity(items.len());
        for (r, c, v) in items {
            if last == Some((r, c)) {
                let slot = vals.len() - 1;
                vals[slot] = ((vals[slot] as u64 + v as u64) % p as u64) as u32;
            } else {
                col_idx.push(c as u32);
                vals.push(v);
                row_of.push(r);
                last = Some((r, c));
            }
        }
        let mut m = SparseMat {
            rows,
            cols,
            p,
            row_ptr: Vec::new(),
            col_idx: Vec::with_capacity(col_idx.len()),
            vals: Vec::with_capacity(vals.len()),
        };
        for ((r, c), v) in row_of.into_iter().zip(col_idx).zip(vals) {
            if v != 0 {
                row_ptr[r + 1] += 1;
                m.col_idx.push(c);
                m.vals.push(v);
            }
        }
        for r in 0..rows {
            row_ptr[r + 1] += row_ptr[r];
        }
        m.row_ptr = row_ptr;
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn row(&self, r: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        let span = self.row_ptr[r]..self.row_ptr[r + 1];
        self.col_idx[span.clone()]
            .iter()
            .zip(&self.vals[span])
            .map(|(&c, &v)| (c as usize, v))
    }

    /// All stored entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.rows).flat_map(move |r| self.row(r).map(move |(c, v)| (r, c, v)))
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        let span = self.row_ptr[r]..self.row_ptr[r + 1];
        match self.col_idx[span.clone()].binary_search(&(c as u32)) {
            Ok(pos) => self.vals[span.start + pos],
            Err(_) => 0,
        }
    }

    /// Number of stored entries in each column.
    pub fn column_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.cols];
        for &c in &self.col_idx {
            counts[c as usize] += 1;
        }
        counts
    }

    pub fn transpose(&self) -> SparseMat {
        let mut counts = vec![0usize; self.cols + 1];
        for &c in &self.col_idx {
            counts[c as usize + 1] += 1;
        }
        for c in 0..self.cols {
            counts[c + 1] += counts[c];
        }
        let row_ptr = counts.clone();
        let mut next = counts;
        let mut col_idx = vec![0u32; self.nnz()];
        let mut vals = vec![0u32; self.nnz()];
        for (r, c, v) in self.entries() {
            let slot = next[c];
            col_idx[slot] = r as u32;
            vals[slot] = v;
            next[c] += 1;
        }
        SparseMat {
            rows: self.cols,
            cols: self.rows,
            p: self.p,
            row_ptr,
            col_idx,
            vals,
        }
    }

    /// Multiplies every entry by `c` (mod p).
    pub fn scale(&self, c: u64) -> SparseMat {
        let c = (c % self.p as u64) as u32;
        if c == 0 {
            return SparseMat::zero(self.rows, self.cols, self.p);
        }
        let mut out = self.clone();
        for v in &mut out.vals {
            *v = mulmod(*v, c, self.p);
        }
        out
    }

    /// Exact product `self * rhs` mod p.
    pub fn matmul(&self, rhs: &SparseMat) -> Result<SparseMat> {
        if self.cols != rhs.rows {
            return Err(Error::Argument(format!(
                "dimension mismatch: {}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        if self.p != rhs.p {
            return Err(Error::Argument(format!(
                "modulus mismatch: {} vs {}",
                self.p, rhs.p
            )));
        }
        let p = self.p as u64;
        let mut acc = vec![0u64; rhs.cols];
        let mut touched: Vec<u32> = Vec::new();
        let mut row_ptr = Vec::with_capacity(self.rows + 1);
        row_ptr.push(0);
        let mut col_idx = Vec::new();
        let mut vals = Vec::new();
        for r in 0..self.rows {
            for (k, a) in self.row(r) {
                for (c, b) in rhs.row(k) {
                    if acc[c] == 0 {
                        touched.push(c as u32);
                    }
                    // keep acc nonzero as a "touched" marker by storing value + p
                    acc[c] = (acc[c] % p + a as u64 * b as u64) % p + p;
                }
            }
            touched.sort_unstable();
            for &c in &touched {
                let v = (acc[c as usize] % p) as u32;
                acc[c as usize] = 0;
                if v != 0 {
                    col_idx.push(c);
                    vals.push(v);
                }
            }
            touched.clear();
            row_ptr.push(vals.len());
        }
        Ok(SparseMat {
            rows: self.rows,
            cols: rhs.cols,
            p: self.p,
            row_ptr,
            col_idx,
            vals,
        })
    }

    /// Rank over GF(p) by row reduction. `p` must be prime.
    pub fn rank(&self) -> usize {
        let p = self.p;
        // pivot rows keyed by leading column, normalized to leading 1
        let mut pivots: Vec<Option<Vec<(u32, u32)>>> = vec![None; self.cols];
        let mut dense = vec![0u32; self.cols];
        let mut heap: BinaryHeap<Reverse<u32>> = BinaryHeap::new();
        let mut rank = 0;
        for r in 0..self.rows {
            for (c, v) in self.row(r) {
                dense[c] = v;
                heap.push(Reverse(c as u32));
            }
            while let Some(Reverse(c)) = heap.pop() {
                let lead = dense[c as usize];
                if lead == 0 {
                    continue;
                }
                // drop stale duplicates of the same column
                while heap.peek() == Some(&Reverse(c)) {
                    heap.pop();
                }
                match &pivots[c as usize] {
                    Some(prow) => {
                        let factor = p - lead;
                        for &(pc, pv) in prow {
                            let slot = &mut dense[pc as usize];
                            let was_zero = *slot == 0;
                            *slot = ((*slot as u64 + factor as u64 * pv as u64) % p as u64) as u32;
                            if was_zero && *slot != 0 {
                                heap.push(Reverse(pc));
                            }
                        }
                    }
                    None => {
                        let lead_inv = inv_mod(lead, p);
                        let mut cols: Vec<u32> = vec![c];
                        cols.extend(heap.drain().map(|Reverse(x)| x));
                        cols.sort_unstable();
                        cols.dedup();
                        let mut prow = Vec::with_capacity(cols.len());
                        for x in cols {
                            let v = dense[x as usize];
                            if v != 0 {
                                prow.push((x, mulmod(v, lead_inv, p)));
                                dense[x as usize] = 0;
                            }
                        }
                        pivots[c as usize] = Some(prow);
                        rank += 1;
                        break;
                    }
                }
            }
            // row reduced to zero: clear any leftovers
            for Reverse(x) in heap.drain() {
                dense[x as usize] = 0;
            }
        }
        rank
    }
}

pub fn rank(m: &SparseMat) -> usize {
    m.rank()
}

pub fn matmul(a: &SparseMat, b: &SparseMat) -> Result<SparseMat> {
    a.matmul(b)
}

/// Matrix of `d^i : M_k -> M_{k-i}` as the product of `i` boundary maps.
///
/// Outside `0..=n` the modules are zero, so the result is an empty matrix
/// with the appropriate shape.
pub fn power_boundary(poset: &Poset, k: i64, i: usize, field: FieldSpec) -> Result<SparseMat> {
    if i == 0 {
        return Err(Error::Argument("power of the boundary must be positive".into()));
    }
    field.check_coprime(poset.spec().q())?;
    let n = poset.spec().n() as i64;
    let p = field.p();
    let dim = |k: i64| poset.rank_len(k);
    let target = k - i as i64;
    if k > n || target < 0 || k < 0 {
        return Ok(SparseMat::zero(dim(target)?, dim(k)?, p));
    }
    let mut acc = poset.boundary(k, field)?;
    for step in 1..i as i64 {
        let next = poset.boundary(k - step, field)?;
        acc = next.matmul(&acc)?;
    }
    Ok(acc)
}
