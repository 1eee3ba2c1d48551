use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` stored by images. Displayed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// `images[x]` is the image of `x` (0-based).
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (x, &y) in images.iter().enumerate() {
            let y = y as usize;
            if y >= n {
                return Err(Error::Validation(format!("image {} of point {} is out of range", y + 1, x + 1)));
            }
            if std::mem::replace(&mut seen[y], true) {
                return Err(Error::Validation(format!("repeated image {}", y + 1)));
            }
        }
        Ok(Perm { images })
    }

    /// Parses 1-based cycle notation such as `(1,2,3)(4,5)`; omitted points are fixed.
    pub fn from_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse(format!("'{text}'"), "expected '('"))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::parse(format!("'{text}'"), "unclosed cycle"))?;
            let body = &open[..close];
            let points: Vec<usize> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|e| Error::parse(format!("'{text}'"), format!("bad point '{s}': {e}")))
                })
                .collect::<Result<_>>()?;
            for &pt in &points {
                if pt == 0 || pt > degree {
                    return Err(Error::Validation(format!("point {pt} outside 1..{degree} in '{text}'")));
                }
                if std::mem::replace(&mut seen[pt - 1], true) {
                    return Err(Error::Validation(format!("point {pt} repeated in '{text}'")));
                }
            }
            for (t, &pt) in points.iter().enumerate() {
                images[pt - 1] = (points[(t + 1) % points.len()] - 1) as u32;
            }
            rest = open[close + 1..].trim_start();
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y as usize] = x as u32;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x as u32 == y)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(x, &y)| x as u32 != y)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in descending order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut ct: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        ct.sort_unstable_by(|a, b| b.cmp(a));
        ct
    }

    /// Image of a subset given as a bit mask.
    pub fn apply_mask(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            out |= 1 << self.images[b];
            m &= m - 1;
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

/// Byte-indexed lookup tables applying a permutation to bit masks.
pub(crate) struct MaskAction {
    tables: Vec<[u64; 256]>,
}

impl MaskAction {
    pub(crate) fn new(perm: &Perm) -> Self {
        let chunks = perm.degree().div_ceil(8);
        let tables = (0..chunks)
            .map(|chunk| {
                let mut table = [0u64; 256];
                for (byte, slot) in table.iter_mut().enumerate() {
                    let mask = (byte as u64) << (8 * chunk);
                    let valid = if perm.degree() >= 64 { mask } else { mask & ((1u64 << perm.degree()) - 1) };
                    *slot = perm.apply_mask(valid);
                }
                table
            })
            .collect();
        MaskAction { tables }
    }

    #[inline]
    pub(crate) fn apply(&self, mask: u64) -> u64 {
        self.tables
            .iter()
            .enumerate()
            .fold(0, |acc, (chunk, table)| acc | table[(mask >> (8 * chunk)) as usize & 0xff])
    }
}
