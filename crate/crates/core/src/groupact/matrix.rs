use crate::error::{Error, Result};
use crate::galois::Gf;
use crate::poset::rref;

/// An `n x n` matrix over GF(q), row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    n: usize,
    entries: Vec<u8>,
}

impl Mat {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Mat { n, entries }
    }

    pub fn from_rows(gf: &Gf, rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Validation(format!(
                    "row {r} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &x in row {
                if x as usize >= gf.order() {
                    return Err(Error::Validation(format!(
                        "entry {x} in row {r} is outside 0..{}",
                        gf.order() - 1
                    )));
                }
                entries.push(x as u8);
            }
        }
        Ok(Mat { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.entries[r * self.n + c]
    }

    pub fn mul(&self, gf: &Gf, rhs: &Mat) -> Mat {
        let n = self.n;
        let mut entries = vec![0u8; n * n];
        for r in 0..n {
            for t in 0..n {
                let a = self.get(r, t);
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    let slot = &mut entries[r * n + c];
                    *slot = gf.add(*slot, gf.mul(a, rhs.get(t, c)));
                }
            }
        }
        Mat { n, entries }
    }

    pub fn is_invertible(&self, gf: &Gf) -> bool {
        let mut m = self.entries.clone();
        rref(gf, &mut m, self.n) == self.n
    }

    /// Image of the row space of the flattened `rows x n` matrix `x` under
    /// `v -> self v`, i.e. each row `r` becomes `r self^T`. Not canonicalised.
    pub(crate) fn act_on_rows(&self, gf: &Gf, x: &[u8]) -> Vec<u8> {
        let n = self.n;
        let rows = x.len().checked_div(n).unwrap_or(0);
        let mut out = vec![0u8; x.len()];
        for r in 0..rows {
            for c in 0..n {
                let mut acc = 0u8;
                for t in 0..n {
                    acc = gf.add(acc, gf.mul(x[r * n + t], self.get(c, t)));
                }
                out[r * n + c] = acc;
            }
        }
        out
    }
}
