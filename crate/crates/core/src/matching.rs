//! Pair matchings (fixed-point-free involutions) and the shape `Λ(δ₁, δ₂)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{check_n, Permutation};

/// A fixed-point-free involution on the `2n` signed labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairMatching(Permutation);

impl PairMatching {
    pub fn new(p: Permutation) -> Result<Self> {
        if !p.is_involution() || !p.is_fixed_point_free() {
            return Err(Error::NotAPairMatching(p.to_string()));
        }
        Ok(PairMatching(p))
    }

    pub fn parse(text: &str, n: usize) -> Result<Self> {
        PairMatching::new(Permutation::parse(text, Some(n))?)
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn into_permutation(self) -> Permutation {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn partner_index(&self, i: usize) -> usize {
        self.0.apply_index(i)
    }

    /// Conjugate `g δ g⁻¹`, again a pair matching.
    pub fn conjugate(&self, g: &Permutation) -> Result<PairMatching> {
        Ok(PairMatching(self.0.conjugate(g)?))
    }

    /// All pair matchings on `2n` labels, `(2n-1)!!` of them, in a fixed
    /// order: the smallest unmatched label is paired with each larger label
    /// in turn.
    pub fn all(n: usize) -> Result<Vec<PairMatching>> {
        check_n(n)?;
        fn go(images: &mut Vec<u8>, out: &mut Vec<PairMatching>) {
            let Some(first) = images.iter().position(|&y| y == u8::MAX) else {
                out.push(PairMatching(Permutation::from_images_unchecked(images.clone())));
                return;
            };
            for other in first + 1..images.len() {
                if images[other] != u8::MAX {
                    continue;
                }
                images[first] = other as u8;
                images[other] = first as u8;
                go(images, out);
                images[first] = u8::MAX;
                images[other] = u8::MAX;
            }
        }
        let mut out = Vec::new();
        go(&mut vec![u8::MAX; 2 * n], &mut out);
        Ok(out)
    }
}

impl fmt::Display for PairMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `τ = (1 -1)(2 -2)…(n -n)`, i.e. negation.
pub fn tau(n: usize) -> Result<PairMatching> {
    check_n(n)?;
    let images = (0..2 * n as u8).map(|i| i ^ 1).collect();
    Ok(PairMatching(Permutation::from_images_unchecked(images)))
}

/// `Λ(δ₁, δ₂)`: the cycles of `δ₁δ₂` come in pairs `c`, `δ₁c⁻¹δ₁` of equal
/// length; the result lists one length per pair and has weight `n`.
pub fn lambda_of(d1: &PairMatching, d2: &PairMatching) -> Result<Partition> {
    let product = d1.0.compose(&d2.0)?;
    let size = product.images().len();
    let mut cycle_of = vec![usize::MAX; size];
    let mut lengths = Vec::new();
    for start in 0..size {
        if cycle_of[start] != usize::MAX {
            continue;
        }
        let id = lengths.len();
        let mut i = start;
        let mut len = 0u32;
        while cycle_of[i] == usize::MAX {
            cycle_of[i] = id;
            len += 1;
            i = product.apply_index(i);
        }
        lengths.push(len);
    }
    let mut paired = vec![false; lengths.len()];
    let mut parts = Vec::new();
    for start in 0..size {
        let c = cycle_of[start];
        if paired[c] {
            continue;
        }
        let partner = cycle_of[d1.partner_index(start)];
        if partner == c || lengths[partner] != lengths[c] {
            // impossible for two fixed-point-free involutions
            return Err(Error::NotAPairMatching(format!(
                "cycle through {} of {} is not paired",
                start, product
            )));
        }
        paired[c] = true;
        paired[partner] = true;
        parts.push(lengths[c]);
    }
    Ok(Partition::from_unsorted(parts))
}
