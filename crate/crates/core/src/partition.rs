//! Integer partitions in weakly decreasing normal form.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates and normalises a list of parts.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub(crate) fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `1^n`.
    pub fn ones(n: usize) -> Self {
        Partition {
            parts: vec![1; n],
        }
    }

    /// `[2, 1^{n-2}]`, the shape of two matchings differing by one edge swap.
    /// Does not exist for `n < 2`.
    pub fn single_swap(n: usize) -> Option<Self> {
        if n < 2 {
            return None;
        }
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, n - 2));
        Some(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ + λ`: every part repeated twice.
    pub fn doubled(&self) -> Partition {
        Partition::from_unsorted(self.parts.iter().flat_map(|&p| [p, p]).collect())
    }

    /// All partitions of `n`, in reverse lexicographic order
    /// (`(n)`, `(n-1, 1)`, …, `1^n`).
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n as u32, n as u32, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

/// Accepts the comma list `2,1,1` and the exponent form `2^1 1^2`
/// (exponent tokens separated by spaces or commas).
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        let bad = |tok: &str| Error::InvalidPartition(format!("bad token `{}` in `{}`", tok, s));
        let mut parts = Vec::new();
        if s.contains('^') {
            for tok in s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
                let (base, exp) = match tok.split_once('^') {
                    Some((b, e)) => (b, e),
                    None => (tok, "1"),
                };
                let base: u32 = base.parse().map_err(|_| bad(tok))?;
                let exp: usize = exp.parse().map_err(|_| bad(tok))?;
                parts.extend(std::iter::repeat_n(base, exp));
            }
        } else {
            for tok in s.split(',') {
                let tok = tok.trim();
                parts.push(tok.parse().map_err(|_| bad(tok))?);
            }
        }
        if parts.is_empty() {
            return Err(Error::InvalidPartition(format!("`{}` has no parts", s)));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
