use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer function `c_0, ..., c_n` such as orbit numbers or multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Series {
    values: Vec<u64>,
}

/// Orbit numbers `N_0, ..., N_n`.
pub type OrbitSeries = Series;

impl Series {
    pub fn new(values: Vec<u64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Argument("a series needs at least c_0".into()));
        }
        Ok(Series { values })
    }

    /// Completes `c_0..c_h` to `c_0..c_n` using `c_k = c_{n-k}`.
    pub fn symmetric(prefix: &[u64], n: usize) -> Result<Self> {
        if prefix.len() > n + 1 {
            return Err(Error::Argument(format!(
                "{} values given for a series of length {}",
                prefix.len(),
                n + 1
            )));
        }
        if prefix.len() < n / 2 + 1 {
            return Err(Error::Argument(format!(
                "need at least c_0..c_{} to complete a series with n = {n}",
                n / 2
            )));
        }
        let values = (0..=n)
            .map(|k| if k < prefix.len() { prefix[k] } else { prefix[n - k] })
            .collect();
        Series::new(values)
    }

    /// Parses `1,2,3` or a JSON array `[1, 2, 3]`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let values: Vec<u64> = if t.starts_with('[') {
            serde_json::from_str(t).map_err(|e| Error::parse("series", e.to_string()))?
        } else {
            t.split(',')
                .map(|x| x.trim().parse::<u64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::parse("series", e.to_string()))?
        };
        Series::new(values)
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `c_k`, zero outside `0..=n`.
    pub fn get(&self, k: i64) -> u64 {
        if k < 0 {
            return 0;
        }
        self.values.get(k as usize).copied().unwrap_or(0)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}
