//! Admissible transposition sequences, their twisted products, and exact
//! purely real Hurwitz numbers by exhaustive enumeration.
//!
//! A sequence `(σ₁, …, σ_m)` of transpositions `σ_s = (i_s j_s)` with
//! `j_s ≠ -i_s` is counted for `λ` when
//! `σ₁⋯σ_m (τσ_mτ)⋯(τσ₁τ) = x_m τ x_m⁻¹ τ` lies in `B̃_λ`, where
//! `x_k = σ₁⋯σ_k` is the prefix product. The number is that count over `n!`.
//!
//! Enumeration walks all `(2n(n-1))^m` words depth-first in lexicographic
//! order of transposition indices, keeping the prefix products on a stack.
//! No pruning is applied. Work is sharded by the first transposition.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::class::twisted_class_of_images;
use crate::error::{Error, Result};
use crate::parallel::run_sharded;
use crate::partition::Partition;
use crate::perm::{check_n, parse_cycles, Permutation, SignedLabel};

/// An unordered pair of distinct labels, stored smallest-first in the
/// canonical order `1 < -1 < 2 < -2 < …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    a: SignedLabel,
    b: SignedLabel,
}

impl Transposition {
    /// Any pair of distinct labels; admissibility is not checked here.
    pub fn new(a: SignedLabel, b: SignedLabel) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateTransposition {
                a: a.value(),
                b: b.value(),
            });
        }
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        Ok(Transposition { a, b })
    }

    pub fn from_values(a: i32, b: i32) -> Result<Self> {
        Transposition::new(SignedLabel::new(a)?, SignedLabel::new(b)?)
    }

    pub fn a(&self) -> SignedLabel {
        self.a
    }

    pub fn b(&self) -> SignedLabel {
        self.b
    }

    /// `j ≠ τ(i)`.
    pub fn is_admissible(&self) -> bool {
        self.b != self.a.bar()
    }

    /// Image under a relabelling `g`: `(i j) ↦ (g(i) g(j))`.
    pub fn relabel(&self, g: &Permutation) -> Transposition {
        Transposition::new(g.apply(self.a), g.apply(self.b)).expect("bijection keeps labels distinct")
    }

    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        Permutation::from_cycles(n, &[vec![self.a, self.b]])
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

/// All `2n(n-1)` admissible transpositions in canonical order.
pub fn valid_transpositions(n: usize) -> Result<Vec<Transposition>> {
    check_n(n)?;
    let mut out = Vec::with_capacity(2 * n * (n - 1));
    for i in 0..2 * n {
        for j in i + 1..2 * n {
            let t = Transposition {
                a: SignedLabel::from_index(i),
                b: SignedLabel::from_index(j),
            };
            if t.is_admissible() {
                out.push(t);
            }
        }
    }
    Ok(out)
}

/// A word of admissible transpositions on the ground set of size `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TranspositionSeq {
    n: usize,
    seq: Vec<Transposition>,
}

impl TranspositionSeq {
    pub fn new(n: usize, seq: Vec<Transposition>) -> Result<Self> {
        check_n(n)?;
        for t in &seq {
            t.a.check_range(n)?;
            t.b.check_range(n)?;
            if !t.is_admissible() {
                return Err(Error::InadmissibleTransposition {
                    a: t.a.value(),
                    b: t.b.value(),
                });
            }
        }
        Ok(TranspositionSeq { n, seq })
    }

    pub fn empty(n: usize) -> Result<Self> {
        TranspositionSeq::new(n, Vec::new())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Length `m`.
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn entries(&self) -> &[Transposition] {
        &self.seq
    }

    /// Prefix product `x_k = σ₁⋯σ_k`.
    pub fn prefix_product(&self, k: usize) -> Permutation {
        let mut images: Vec<u8> = (0..2 * self.n as u8).collect();
        for t in &self.seq[..k] {
            images.swap(t.a.index(), t.b.index());
        }
        Permutation::from_images_unchecked(images)
    }

    /// Entrywise relabelling by `g`; `g` must commute with `τ` to preserve
    /// admissibility.
    pub fn relabel(&self, g: &Permutation) -> Result<TranspositionSeq> {
        if g.n() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: g.n(),
            });
        }
        TranspositionSeq::new(self.n, self.seq.iter().map(|t| t.relabel(g)).collect())
    }

    /// Parses `(1 2);(-1 2)`. The empty word is written `()`.
    pub fn parse(text: &str, n: usize, line: usize) -> Result<Self> {
        let text = text.trim();
        let mut seq = Vec::new();
        if text != "()" {
            let mut offset = 0;
            for piece in text.split(';') {
                let err = |column: usize, message: String| Error::Parse {
                    line,
                    column: offset + column,
                    message,
                };
                let cycles = parse_cycles(piece, line).map_err(|e| match e {
                    Error::Parse { column, message, .. } => err(column, message),
                    other => other,
                })?;
                let lead = piece.len() - piece.trim_start().len();
                if cycles.len() != 1 || cycles[0].len() != 2 {
                    return Err(err(lead + 1, format!("`{}` is not a transposition", piece.trim())));
                }
                let t = Transposition::new(cycles[0][0], cycles[0][1])
                    .map_err(|e| err(lead + 1, e.to_string()))?;
                if !t.is_admissible() {
                    let (a, b) = (t.a().value(), t.b().value());
                    return Err(err(lead + 1, Error::InadmissibleTransposition { a, b }.to_string()));
                }
                seq.push(t);
                offset += piece.len() + 1;
            }
        }
        TranspositionSeq::new(n, seq).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::Parse {
                line,
                column: 1,
                message: other.to_string(),
            },
        })
    }
}

impl fmt::Display for TranspositionSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.seq.is_empty() {
            return f.write_str("()");
        }
        for (k, t) in self.seq.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}", t)?;
        }
        Ok(())
    }
}

/// `σ₁⋯σ_m (τσ_mτ)⋯(τσ₁τ) = x_m τ x_m⁻¹ τ`.
pub fn twisted_product(ts: &TranspositionSeq) -> Permutation {
    let x = ts.prefix_product(ts.len());
    Permutation::from_images_unchecked(twisted_images(x.images()))
}

fn twisted_images(x: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; x.len()];
    for (i, &y) in x.iter().enumerate() {
        inv[y as usize] = i as u8;
    }
    (0..x.len())
        .map(|y| x[inv[y ^ 1] as usize ^ 1])
        .collect()
}

/// Depth-first walk over all words of length `m` with a stack of prefix
/// products. Optionally the first letter is pinned (one shard).
struct Walk {
    letters: Vec<(usize, usize)>,
    m: usize,
    digits: Vec<usize>,
    /// `prefix[k]` holds the images of `x_k`.
    prefix: Vec<Vec<u8>>,
    lowest_free: usize,
    state: WalkState,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum WalkState {
    Fresh,
    Running,
    Done,
}

impl Walk {
    fn new(n: usize, m: usize, letters: &[Transposition], first: Option<usize>) -> Self {
        let identity: Vec<u8> = (0..2 * n as u8).collect();
        let mut digits = vec![0; m];
        if let (Some(f), true) = (first, m > 0) {
            digits[0] = f;
        }
        let empty = m > 0 && (letters.is_empty() || first.is_some_and(|f| f >= letters.len()));
        Walk {
            letters: letters.iter().map(|t| (t.a.index(), t.b.index())).collect(),
            m,
            digits,
            prefix: vec![identity; m + 1],
            lowest_free: usize::from(first.is_some() && m > 0),
            state: if empty { WalkState::Done } else { WalkState::Fresh },
        }
    }

    fn rebuild_from(&mut self, depth: usize) {
        for k in depth..self.m {
            let (i, j) = self.letters[self.digits[k]];
            let (lo, hi) = self.prefix.split_at_mut(k + 1);
            hi[0].copy_from_slice(&lo[k]);
            hi[0].swap(i, j);
        }
    }

    /// Advances to the next word; returns `false` when exhausted.
    fn advance(&mut self) -> bool {
        match self.state {
            WalkState::Done => return false,
            WalkState::Fresh => {
                self.state = WalkState::Running;
                self.rebuild_from(0);
                return true;
            }
            WalkState::Running => {}
        }
        let mut pos = self.m;
        loop {
            if pos == self.lowest_free {
                self.state = WalkState::Done;
                return false;
            }
            pos -= 1;
            self.digits[pos] += 1;
            if self.digits[pos] < self.letters.len() {
                break;
            }
            self.digits[pos] = 0;
        }
        self.rebuild_from(pos);
        true
    }

    fn product(&self) -> &[u8] {
        &self.prefix[self.m]
    }
}

/// Stream of the members of `𝔥_{m,λ}` in lexicographic order of
/// transposition indices.
pub struct FactorizationIter {
    n: usize,
    lambda: Partition,
    letters: Vec<Transposition>,
    walk: Walk,
}

impl FactorizationIter {
    /// The shard of words whose first letter is `valid_transpositions(n)[first]`.
    /// For `m = 0` the single shard is `first = 0`.
    pub fn shard(m: usize, lambda: &Partition, first: usize) -> Result<Self> {
        let n = lambda.weight();
        let letters = valid_transpositions(n)?;
        let mut walk = Walk::new(n, m, &letters, Some(first));
        if m == 0 && first > 0 {
            walk.state = WalkState::Done;
        }
        Ok(FactorizationIter {
            n,
            lambda: lambda.clone(),
            letters,
            walk,
        })
    }
}

impl Iterator for FactorizationIter {
    type Item = TranspositionSeq;

    fn next(&mut self) -> Option<TranspositionSeq> {
        while self.walk.advance() {
            if twisted_class_of_images(&twisted_images(self.walk.product())).as_ref() == Some(&self.lambda) {
                let seq = self.walk.digits.iter().map(|&d| self.letters[d]).collect();
                return Some(TranspositionSeq { n: self.n, seq });
            }
        }
        None
    }
}

/// Every admissible word in one shard (first letter pinned), unfiltered.
pub fn shard_words(n: usize, m: usize, first: usize) -> Result<impl Iterator<Item = TranspositionSeq>> {
    check_n(n)?;
    let letters = valid_transpositions(n)?;
    let mut walk = Walk::new(n, m, &letters, Some(first));
    if m == 0 && first > 0 {
        walk.state = WalkState::Done;
    }
    Ok(std::iter::from_fn(move || {
        if !walk.advance() {
            return None;
        }
        let seq = walk.digits.iter().map(|&d| letters[d]).collect();
        Some(TranspositionSeq { n, seq })
    }))
}

/// Number of shards used for words of length `m` on ground set `n`.
pub fn shard_count(m: usize, n: usize) -> usize {
    if m == 0 {
        1
    } else {
        2 * n * (n - 1)
    }
}

/// All members of `𝔥_{m,λ}`, deterministic order.
pub fn enumerate_factorizations(m: usize, lambda: &Partition) -> Result<impl Iterator<Item = TranspositionSeq>> {
    let n = lambda.weight();
    check_n(n)?;
    let shards = (0..shard_count(m, n))
        .map(|s| FactorizationIter::shard(m, lambda, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(shards.into_iter().flatten())
}

/// Same stream as [`enumerate_factorizations`], computed on `workers` threads.
pub fn enumerate_factorizations_par(m: usize, lambda: &Partition, workers: usize) -> Result<Vec<TranspositionSeq>> {
    let n = lambda.weight();
    check_n(n)?;
    let parts = run_sharded(workers, shard_count(m, n), |s| {
        FactorizationIter::shard(m, lambda, s).map(|it| it.collect::<Vec<_>>())
    })?;
    let mut out = Vec::new();
    for part in parts {
        out.extend(part?);
    }
    Ok(out)
}

/// Exact `h^ℝ_{m,λ} = #𝔥_{m,λ} / n!`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationCount {
    pub raw_count: u64,
    pub weight: usize,
    #[serde(with = "ratio_record")]
    pub value: Ratio<u64>,
}

impl FactorizationCount {
    pub fn new(raw_count: u64, weight: usize) -> Result<Self> {
        let den = factorial(weight)?;
        Ok(FactorizationCount {
            raw_count,
            weight,
            value: Ratio::new(raw_count, den),
        })
    }
}

/// Serialises a ratio as `{"num": …, "den": …}`.
pub mod ratio_record {
    use num_rational::Ratio;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Record {
        num: u64,
        den: u64,
    }

    pub fn serialize<S: Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
        Record {
            num: *r.numer(),
            den: *r.denom(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<u64>, D::Error> {
        let r = Record::deserialize(d)?;
        if r.den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Ratio::new(r.num, r.den))
    }
}

pub fn factorial(n: usize) -> Result<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k).ok_or(Error::Overflow("computing n!")))
}

/// `(2n(n-1))^m`, the number of admissible words.
pub fn word_count(m: usize, n: usize) -> Result<u64> {
    let letters = (2 * n * (n - 1)) as u64;
    letters
        .checked_pow(m as u32)
        .ok_or(Error::Overflow("computing the number of words"))
}

pub fn hurwitz_number(m: usize, lambda: &Partition, workers: usize) -> Result<FactorizationCount> {
    let n = lambda.weight();
    let counts = count_by_cycle_type(m, n, workers)?;
    FactorizationCount::new(counts.get(lambda), n)
}

/// Raw counts of all admissible words of length `m`, bucketed by the twisted
/// class of their product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleTypeCounts {
    pub n: usize,
    pub m: usize,
    /// Every partition of `n` is present, possibly with count 0.
    pub counts: BTreeMap<Partition, u64>,
    /// Words whose product lies in no twisted class.
    pub none: u64,
}

impl CycleTypeCounts {
    pub fn get(&self, lambda: &Partition) -> u64 {
        self.counts.get(lambda).copied().unwrap_or(0)
    }

    pub fn total(&self) -> Result<u64> {
        self.counts
            .values()
            .try_fold(self.none, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow("summing counts"))
    }

    /// Rows in [`Partition::all`] order followed by the `none` bucket.
    pub fn rows(&self) -> Vec<(String, u64)> {
        let mut rows: Vec<(String, u64)> = Partition::all(self.n)
            .into_iter()
            .map(|p| {
                let c = self.get(&p);
                (p.to_string(), c)
            })
            .collect();
        rows.push(("none".to_string(), self.none));
        rows
    }
}

pub fn count_by_cycle_type(m: usize, n: usize, workers: usize) -> Result<CycleTypeCounts> {
    check_n(n)?;
    word_count(m, n)?;
    let letters = valid_transpositions(n)?;
    let shards = run_sharded(workers, shard_count(m, n), |s| {
        let mut walk = Walk::new(n, m, &letters, Some(s));
        let mut local: BTreeMap<Partition, u64> = BTreeMap::new();
        let mut none = 0u64;
        while walk.advance() {
            match twisted_class_of_images(&twisted_images(walk.product())) {
                Some(p) => *local.entry(p).or_insert(0) += 1,
                None => none += 1,
            }
        }
        (local, none)
    })?;
    let mut counts: BTreeMap<Partition, u64> = Partition::all(n).into_iter().map(|p| (p, 0)).collect();
    let mut none = 0u64;
    for (local, local_none) in shards {
        for (p, c) in local {
            let slot = counts.entry(p).or_insert(0);
            *slot = slot.checked_add(c).ok_or(Error::Overflow("summing counts"))?;
        }
        none = none.checked_add(local_none).ok_or(Error::Overflow("summing counts"))?;
    }
    Ok(CycleTypeCounts { n, m, counts, none })
}
