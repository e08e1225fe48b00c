//! Permutations of the signed ground set `{±1, …, ±n}`.
//!
//! A barred element `k̄` is encoded as `-k`, so the involution `τ` is plain
//! negation. Internally a label is stored as an index in `0..2n` using the
//! order `1 < -1 < 2 < -2 < …`, which is also the canonical order used for
//! printing cycles and keying them.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest supported ground-set size.
pub const MAX_N: usize = 64;

/// A nonzero signed label; `-k` stands for `k̄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedLabel(i32);

impl SignedLabel {
    pub fn new(value: i32) -> Result<Self> {
        if value == 0 {
            return Err(Error::ZeroLabel);
        }
        Ok(SignedLabel(value))
    }

    /// Label for the internal index `i` (`0 ↦ 1`, `1 ↦ -1`, `2 ↦ 2`, …).
    pub fn from_index(i: usize) -> Self {
        let k = (i / 2 + 1) as i32;
        SignedLabel(if i.is_multiple_of(2) { k } else { -k })
    }

    pub fn index(self) -> usize {
        let k = self.0.unsigned_abs() as usize;
        2 * (k - 1) + usize::from(self.0 < 0)
    }

    pub fn value(self) -> i32 {
        self.0
    }

    pub fn abs(self) -> u32 {
        self.0.unsigned_abs()
    }

    /// `k ↦ k̄`, `k̄ ↦ k`.
    pub fn bar(self) -> Self {
        SignedLabel(-self.0)
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    pub fn check_range(self, n: usize) -> Result<Self> {
        if self.abs() as usize > n {
            return Err(Error::LabelOutOfRange { label: self.0, n });
        }
        Ok(self)
    }
}

impl Ord for SignedLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.index().cmp(&other.index())
    }
}

impl PartialOrd for SignedLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > MAX_N {
        return Err(Error::GroundSetTooLarge(n));
    }
    Ok(())
}

/// A permutation of the `2n` signed labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Permutation {
            images: (0..2 * n as u8).collect(),
        })
    }

    /// Builds a permutation from images of internal indices.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        if images.is_empty() || !images.len().is_multiple_of(2) {
            return Err(Error::NotABijection(format!(
                "image table of length {} is not 2n",
                images.len()
            )));
        }
        check_n(images.len() / 2)?;
        let mut seen = vec![false; images.len()];
        for &y in &images {
            let y = y as usize;
            if y >= images.len() || seen[y] {
                return Err(Error::NotABijection(format!("image {} repeated or out of range", y)));
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u8>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from a map on signed labels.
    pub fn from_fn(n: usize, f: impl Fn(SignedLabel) -> SignedLabel) -> Result<Self> {
        check_n(n)?;
        let mut images = Vec::with_capacity(2 * n);
        for i in 0..2 * n {
            let y = f(SignedLabel::from_index(i)).check_range(n)?;
            images.push(y.index() as u8);
        }
        Permutation::from_images(images)
    }

    /// Builds a permutation from disjoint cycles; unmentioned labels are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<SignedLabel>]) -> Result<Self> {
        check_n(n)?;
        let mut images: Vec<u8> = (0..2 * n as u8).collect();
        let mut used = vec![false; 2 * n];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                x.check_range(n)?;
                if used[x.index()] {
                    return Err(Error::NotABijection(format!("label {} appears twice", x)));
                }
                used[x.index()] = true;
                let next = cycle[(pos + 1) % cycle.len()];
                images[x.index()] = next.index() as u8;
            }
        }
        Ok(Permutation { images })
    }

    /// Ground-set size `n`; the permutation acts on `2n` labels.
    pub fn n(&self) -> usize {
        self.images.len() / 2
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn apply(&self, x: SignedLabel) -> SignedLabel {
        SignedLabel::from_index(self.apply_index(x.index()))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y as usize)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &y) in self.images.iter().enumerate() {
            inv[y as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    fn check_same_size(&self, other: &Permutation) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    /// `self · other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_same_size(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&y| self.images[y as usize]).collect(),
        })
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        self.check_same_size(g)?;
        let mut images = vec![0u8; self.images.len()];
        for (i, &y) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[y as usize];
        }
        Ok(Permutation { images })
    }

    /// Disjoint cycles including fixed points. Each cycle starts at its
    /// canonically smallest label; cycles are sorted by that label.
    pub fn cycles(&self) -> Vec<Vec<SignedLabel>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(SignedLabel::from_index(i));
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths, fixed points included; weight `2n`.
    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    pub fn is_involution(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &y)| self.images[y as usize] as usize == i)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i != y as usize)
    }

    /// Parses disjoint cycle notation such as `(1 -2)(-1 2)`; `()` is the
    /// identity. When `n` is `None` the ground set is the smallest one
    /// containing every label mentioned.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Permutation> {
        let cycles = parse_cycles(text, 1)?;
        let needed = cycles
            .iter()
            .flatten()
            .map(|x| x.abs() as usize)
            .max()
            .unwrap_or(1);
        let n = n.unwrap_or(needed);
        Permutation::from_cycles(n, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles().iter().filter(|c| c.len() > 1) {
            write_cycle(f, cycle)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

pub(crate) fn write_cycle(f: &mut fmt::Formatter<'_>, cycle: &[SignedLabel]) -> fmt::Result {
    f.write_str("(")?;
    for (k, x) in cycle.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{}", x)?;
    }
    f.write_str(")")
}

/// Parses a run of parenthesised cycles. Positions in errors are 1-based
/// columns on the given line.
pub(crate) fn parse_cycles(text: &str, line: usize) -> Result<Vec<Vec<SignedLabel>>> {
    let err = |column: usize, message: String| Error::Parse {
        line,
        column,
        message,
    };
    let chars: Vec<char> = text.chars().collect();
    let mut cycles = Vec::new();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == chars.len() {
        return Err(err(1, "expected `(`".into()));
    }
    while pos < chars.len() {
        if chars[pos] != '(' {
            return Err(err(pos + 1, format!("expected `(`, found `{}`", chars[pos])));
        }
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos == chars.len() {
                return Err(err(pos + 1, "unterminated cycle".into()));
            }
            if chars[pos] == ')' {
                pos += 1;
                break;
            }
            let start = pos;
            if chars[pos] == '-' || chars[pos] == '+' || chars[pos] == '\u{2212}' {
                pos += 1;
            }
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let token: String = chars[start..pos].iter().collect();
            let token = token.replace('\u{2212}', "-");
            let value: i32 = token
                .parse()
                .map_err(|_| err(start + 1, format!("invalid label `{}`", token)))?;
            let label = SignedLabel::new(value).map_err(|e| err(start + 1, e.to_string()))?;
            cycle.push(label);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        skip_ws(&mut pos);
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn label_index_order() {
        let order: Vec<i32> = (0..6).map(|i| SignedLabel::from_index(i).value()).collect();
        assert_eq!(order, vec![1, -1, 2, -2, 3, -3]);
        for i in 0..10 {
            assert_eq!(SignedLabel::from_index(i).index(), i);
            let x = SignedLabel::from_index(i);
            assert_eq!(x.bar().bar(), x);
        }
        assert!(SignedLabel::new(0).is_err());
    }

    #[test]
    fn compose_examples() {
        let t = p("(1 2)", 2);
        assert!(t.compose(&t).unwrap().is_identity());
        let got = p("(1 2)", 2).compose(&p("(1 -1)", 2)).unwrap();
        assert_eq!(got, p("(1 -1 2)", 2));
        assert_eq!(got.to_string(), "(1 -1 2)");
    }

    #[test]
    fn compose_size_mismatch() {
        let a = Permutation::identity(2).unwrap();
        let b = Permutation::identity(3).unwrap();
        assert_eq!(
            a.compose(&b),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        );
        assert!(a.conjugate(&b).is_err());
    }

    #[test]
    fn conjugate_examples() {
        let q = p("(1 2)", 2);
        assert_eq!(q.conjugate(&Permutation::identity(2).unwrap()).unwrap(), q);
        let c = q.conjugate(&p("(1 -1)", 2)).unwrap();
        assert_eq!(c.to_string(), "(-1 2)");
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(2).unwrap().cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(p("(1 -1 2)", 2).cycle_type().parts(), &[3, 1]);
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("()", 2).to_string(), "()");
        assert_eq!(p(" (2 -2) ( 1  -1 ) ", 2).to_string(), "(1 -1)(2 -2)");
        assert_eq!(Permutation::parse("(1 \u{2212}2)", None).unwrap().n(), 2);
        match Permutation::parse("(1 2", Some(2)) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("unexpected {:?}", other),
        }
        match Permutation::parse("(1 x)", Some(2)) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("unexpected {:?}", other),
        }
        assert!(Permutation::parse("(1 2)(2 3)", Some(3)).is_err());
        assert!(Permutation::parse("(1 3)", Some(2)).is_err());
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![0, 1, 2]).is_err());
        assert!(Permutation::from_images(vec![]).is_err());
    }
}
