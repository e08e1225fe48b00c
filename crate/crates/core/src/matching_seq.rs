//! Sequences of pair matchings `(δ₋₁ = τ, δ₀, …, δ_{m-1})` and the `2^m:1`
//! map from admissible transposition words onto them.
//!
//! A word with prefix products `x_k` maps to `δ_k = (τx_{k+1}) τ (τx_{k+1})⁻¹`.
//! Its image is valid for `λ` when consecutive matchings differ by a single
//! swap, `Λ(δ_k, δ_{k+1}) = [2, 1^{n-2}]`, and `Λ(τ, δ_{m-1}) = λ`.
//!
//! Indices are external: `delta(-1)` is `τ`, stored at position 0.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::{Transposition, TranspositionSeq};
use crate::matching::{lambda_of, tau, PairMatching};
use crate::partition::Partition;
use crate::perm::{check_n, Permutation, SignedLabel};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchingSeq {
    n: usize,
    deltas: Vec<PairMatching>,
}

impl MatchingSeq {
    /// `deltas` lists `δ₋₁, …, δ_{m-1}`; the first entry must be `τ`.
    pub fn new(n: usize, deltas: Vec<PairMatching>) -> Result<Self> {
        check_n(n)?;
        for d in &deltas {
            if d.n() != n {
                return Err(Error::SizeMismatch { left: n, right: d.n() });
            }
        }
        if deltas.first() != Some(&tau(n)?) {
            return Err(Error::FirstNotTau);
        }
        Ok(MatchingSeq { n, deltas })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of matchings after `τ`.
    pub fn m(&self) -> usize {
        self.deltas.len() - 1
    }

    /// `δ_k` for `k ∈ -1..m`.
    pub fn delta(&self, k: isize) -> &PairMatching {
        &self.deltas[(k + 1) as usize]
    }

    /// All matchings, `δ₋₁` first.
    pub fn deltas(&self) -> &[PairMatching] {
        &self.deltas
    }

    /// Replaces `δ_k` (`k ≥ 0`) without validation; the result may fail
    /// [`validate_matching_seq`].
    pub fn with_delta(&self, k: usize, d: PairMatching) -> Result<MatchingSeq> {
        if d.n() != self.n {
            return Err(Error::SizeMismatch { left: self.n, right: d.n() });
        }
        let mut deltas = self.deltas.clone();
        deltas[k + 1] = d;
        Ok(MatchingSeq { n: self.n, deltas })
    }

    /// `Λ(τ, δ_{m-1})`.
    pub fn profile(&self) -> Partition {
        lambda_of(&self.deltas[0], self.deltas.last().expect("nonempty")).expect("same ground set")
    }

    /// `Λ(δ_k, δ_{k+1}) = [2, 1^{n-2}]` for every consecutive pair.
    pub fn is_swap_chain(&self) -> bool {
        let swap = Partition::single_swap(self.n);
        self.deltas
            .windows(2)
            .all(|w| swap.is_some() && lambda_of(&w[0], &w[1]).ok() == swap)
    }

    pub fn to_record(&self) -> MatchingSeqRecord {
        MatchingSeqRecord {
            n: self.n,
            deltas: self.deltas.iter().map(|d| d.to_string()).collect(),
        }
    }

    pub fn from_record(record: &MatchingSeqRecord) -> Result<Self> {
        check_n(record.n)?;
        let mut deltas = Vec::with_capacity(record.deltas.len());
        for (k, text) in record.deltas.iter().enumerate() {
            let p = Permutation::parse(text, Some(record.n))?;
            let d = PairMatching::new(p).map_err(|_| {
                Error::NotAPairMatching(format!("delta[{}] = {}", k as isize - 1, text))
            })?;
            deltas.push(d);
        }
        MatchingSeq::new(record.n, deltas)
    }
}

impl fmt::Display for MatchingSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, d) in self.deltas.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", d)?;
        }
        f.write_str("]")
    }
}

/// Wire form `{"n": …, "deltas": ["(1 -1)(2 -2)", …]}`, `δ₋₁` first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingSeqRecord {
    pub n: usize,
    pub deltas: Vec<String>,
}

/// `(τ, δ₀, …, δ_{m-1})` with `δ_k = conjugate(τ, τ·x_{k+1})`.
pub fn p_map(ts: &TranspositionSeq) -> MatchingSeq {
    let n = ts.n();
    let t = tau(n).expect("n checked by the sequence");
    let mut deltas = Vec::with_capacity(ts.len() + 1);
    deltas.push(t.clone());
    for k in 1..=ts.len() {
        let g = t.as_permutation().compose(&ts.prefix_product(k)).expect("same n");
        deltas.push(t.conjugate(&g).expect("same n"));
    }
    MatchingSeq { n, deltas }
}

/// One `Λ(δ_k, δ_{k+1})` check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapCheck {
    pub k: isize,
    pub shape: Partition,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub starts_with_tau: bool,
    pub swaps: Vec<SwapCheck>,
    pub profile: Partition,
    pub profile_ok: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.starts_with_tau && self.profile_ok && self.swaps.iter().all(|c| c.ok)
    }

    /// Human-readable name of the first violated condition.
    pub fn first_violation(&self) -> Option<String> {
        if !self.starts_with_tau {
            return Some("delta[-1] = tau".into());
        }
        if let Some(c) = self.swaps.iter().find(|c| !c.ok) {
            return Some(format!(
                "Lambda(delta[{}], delta[{}]) = [2,1^(n-2)] (got {})",
                c.k,
                c.k + 1,
                c.shape
            ));
        }
        if !self.profile_ok {
            return Some(format!("Lambda(tau, delta[m-1]) = lambda (got {})", self.profile));
        }
        None
    }
}

pub fn validate_matching_seq(ms: &MatchingSeq, lambda: &Partition) -> Result<ValidationReport> {
    if lambda.weight() != ms.n {
        return Err(Error::WeightMismatch {
            weight: lambda.weight(),
            n: ms.n,
        });
    }
    let swap = Partition::single_swap(ms.n);
    let mut swaps = Vec::with_capacity(ms.m());
    for (k, w) in ms.deltas.windows(2).enumerate() {
        let shape = lambda_of(&w[0], &w[1])?;
        let ok = swap.as_ref() == Some(&shape);
        swaps.push(SwapCheck {
            k: k as isize - 1,
            shape,
            ok,
        });
    }
    let profile = ms.profile();
    Ok(ValidationReport {
        starts_with_tau: ms.deltas[0] == tau(ms.n)?,
        swaps,
        profile_ok: &profile == lambda,
        profile,
    })
}

/// Names the first consecutive pair that is not a single swap apart.
pub(crate) fn not_a_swap_chain(ms: &MatchingSeq) -> Error {
    let violated = validate_matching_seq(ms, &ms.profile())
        .ok()
        .and_then(|r| r.first_violation())
        .unwrap_or_else(|| "consecutive matchings differ by a single swap".into());
    Error::InvalidMatchingSeq(format!("violates {}", violated))
}

/// The `2^m` words mapping to `ms`, ordered by their binary choice vector
/// (branch 0 before branch 1 at each step, first step most significant).
///
/// At step `t` with prefix `x = x_{t-1}`, `δ_{t-2}δ_{t-1}` is a product of two
/// disjoint transpositions; with `(a b)` the one holding the smallest moved
/// label, branch 0 is `(x⁻¹τ(a), x⁻¹τ(b))` and branch 1 is
/// `(τx⁻¹τ(a), τx⁻¹τ(b))`.
pub fn p_preimages(ms: &MatchingSeq) -> Result<Vec<TranspositionSeq>> {
    if !ms.is_swap_chain() {
        return Err(not_a_swap_chain(ms));
    }
    let n = ms.n;
    let mut out = Vec::with_capacity(1 << ms.m());
    let mut word = Vec::with_capacity(ms.m());
    let identity: Vec<u8> = (0..2 * n as u8).collect();
    preimage_dfs(ms, 1, &identity, &mut word, &mut out)?;
    debug_assert!(out.iter().all(|ts| &p_map(ts) == ms));
    Ok(out)
}

fn preimage_dfs(
    ms: &MatchingSeq,
    step: usize,
    prefix: &[u8],
    word: &mut Vec<Transposition>,
    out: &mut Vec<TranspositionSeq>,
) -> Result<()> {
    if step > ms.m() {
        out.push(TranspositionSeq::new(ms.n, word.clone())?);
        return Ok(());
    }
    let product = ms.deltas[step - 1]
        .as_permutation()
        .compose(ms.deltas[step].as_permutation())?;
    let a = (0..product.images().len())
        .find(|&i| product.apply_index(i) != i)
        .ok_or_else(|| Error::InvalidMatchingSeq(format!("delta[{}] repeats delta[{}]", step - 1, step - 2)))?;
    let b = product.apply_index(a);
    let mut inv = vec![0u8; prefix.len()];
    for (i, &y) in prefix.iter().enumerate() {
        inv[y as usize] = i as u8;
    }
    let pull = |label: usize| inv[label ^ 1] as usize;
    let first = (pull(a), pull(b));
    let second = (first.0 ^ 1, first.1 ^ 1);
    let branches = [first, second];
    let as_transposition = |(i, j): (usize, usize)| {
        Transposition::new(SignedLabel::from_index(i), SignedLabel::from_index(j))
    };
    if as_transposition(first)? == as_transposition(second)? {
        return Err(Error::DuplicatePreimageBranch { step });
    }
    for (i, j) in branches {
        let t = as_transposition((i, j))?;
        if !t.is_admissible() {
            return Err(Error::InvalidMatchingSeq(format!("step {} forces inadmissible {}", step, t)));
        }
        let mut next = prefix.to_vec();
        next.swap(i, j);
        word.push(t);
        preimage_dfs(ms, step + 1, &next, word, out)?;
        word.pop();
    }
    Ok(())
}

/// The single-swap graph on all pair matchings of `2n` labels.
struct SwapGraph {
    matchings: Vec<PairMatching>,
    neighbours: Vec<Vec<usize>>,
    tau: usize,
}

impl SwapGraph {
    fn new(n: usize) -> Result<Self> {
        let matchings = PairMatching::all(n)?;
        let swap = Partition::single_swap(n);
        let mut neighbours = vec![Vec::new(); matchings.len()];
        if let Some(swap) = swap {
            for (i, di) in matchings.iter().enumerate() {
                for (j, dj) in matchings.iter().enumerate() {
                    if lambda_of(di, dj)? == swap {
                        neighbours[i].push(j);
                    }
                }
            }
        }
        let t = tau(n)?;
        let tau = matchings.iter().position(|d| d == &t).expect("tau is a matching");
        Ok(SwapGraph {
            matchings,
            neighbours,
            tau,
        })
    }
}

/// Every valid sequence for `(m, λ)` exactly once, depth-first in the
/// order of [`PairMatching::all`].
pub fn enumerate_matching_seqs(m: usize, lambda: &Partition) -> Result<Vec<MatchingSeq>> {
    let n = lambda.weight();
    let graph = SwapGraph::new(n)?;
    let mut out = Vec::new();
    let mut path = vec![graph.tau];
    fn go(graph: &SwapGraph, m: usize, lambda: &Partition, path: &mut Vec<usize>, out: &mut Vec<MatchingSeq>) -> Result<()> {
        let last = *path.last().expect("nonempty");
        if path.len() == m + 1 {
            if &lambda_of(&graph.matchings[graph.tau], &graph.matchings[last])? == lambda {
                out.push(MatchingSeq {
                    n: lambda.weight(),
                    deltas: path.iter().map(|&i| graph.matchings[i].clone()).collect(),
                });
            }
            return Ok(());
        }
        for &next in &graph.neighbours[last] {
            path.push(next);
            go(graph, m, lambda, path, out)?;
            path.pop();
        }
        Ok(())
    }
    go(&graph, m, lambda, &mut path, &mut out)?;
    Ok(out)
}

/// `#𝔓_{m,λ}` by counting walks in the single-swap graph, without
/// materialising the sequences.
pub fn count_matching_seqs(m: usize, lambda: &Partition) -> Result<u64> {
    let n = lambda.weight();
    let graph = SwapGraph::new(n)?;
    let mut walks = vec![0u64; graph.matchings.len()];
    walks[graph.tau] = 1;
    for _ in 0..m {
        let mut next = vec![0u64; walks.len()];
        for (i, &w) in walks.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for &j in &graph.neighbours[i] {
                next[j] = next[j].checked_add(w).ok_or(Error::Overflow("counting matching sequences"))?;
            }
        }
        walks = next;
    }
    let t = &graph.matchings[graph.tau];
    let mut total = 0u64;
    for (d, &w) in graph.matchings.iter().zip(&walks) {
        if w > 0 && &lambda_of(t, d)? == lambda {
            total = total.checked_add(w).ok_or(Error::Overflow("counting matching sequences"))?;
        }
    }
    Ok(total)
}

/// Number of orbits of `⟨δ₋₁, …, δ_{m-1}⟩` on the signed labels.
pub fn matching_orbit_count(ms: &MatchingSeq) -> usize {
    let size = 2 * ms.n;
    let mut parent: Vec<usize> = (0..size).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for d in &ms.deltas {
        for i in 0..size {
            let (a, b) = (find(&mut parent, i), find(&mut parent, d.partner_index(i)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..size).filter(|&i| find(&mut parent, i) == i).count()
}
