//! The twisted class `B̃_λ` and the hyperoctahedral group acting on it.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::perm::{check_n, Permutation, SignedLabel};

/// Returns `λ` if `σ ∈ B̃_λ`, `None` if `σ` lies in no twisted class.
///
/// Membership means `τστ = σ⁻¹` and the cycles of `σ` split into pairs
/// `c ≠ τc⁻¹τ`; `λ` collects one length per pair.
pub fn twisted_class_of(sigma: &Permutation) -> Option<Partition> {
    twisted_class_of_images(sigma.images())
}

pub(crate) fn twisted_class_of_images(images: &[u8]) -> Option<Partition> {
    let size = images.len();
    // τστ = σ⁻¹  ⇔  σ(τ(σ(τ(x)))) = x
    for x in 0..size {
        let y = images[x ^ 1] as usize ^ 1;
        if images[y] as usize != x {
            return None;
        }
    }
    let mut cycle_of = [u8::MAX; 2 * crate::perm::MAX_N];
    let mut lengths = [0u8; 2 * crate::perm::MAX_N];
    let mut cycles = 0usize;
    for start in 0..size {
        if cycle_of[start] != u8::MAX {
            continue;
        }
        let mut i = start;
        while cycle_of[i] == u8::MAX {
            cycle_of[i] = cycles as u8;
            lengths[cycles] += 1;
            i = images[i] as usize;
        }
        cycles += 1;
    }
    let mut parts = Vec::with_capacity(cycles / 2);
    let mut paired = [false; 2 * crate::perm::MAX_N];
    for start in 0..size {
        let c = cycle_of[start] as usize;
        if paired[c] {
            continue;
        }
        // τc⁻¹τ is the cycle through τ(start)
        let partner = cycle_of[start ^ 1] as usize;
        if partner == c {
            return None;
        }
        paired[c] = true;
        paired[partner] = true;
        parts.push(lengths[c] as u32);
    }
    Some(Partition::from_unsorted(parts))
}

/// Decides `σ ∈ B̃_λ` by checking the three defining conditions separately.
pub fn is_twisted_class_member(sigma: &Permutation, lambda: &Partition) -> Result<bool> {
    let n = sigma.n();
    if lambda.weight() != n {
        return Err(Error::WeightMismatch {
            weight: lambda.weight(),
            n,
        });
    }
    let tau = crate::matching::tau(n)?.into_permutation();
    let twisted = tau.compose(sigma)?.compose(&tau)?;
    if twisted != sigma.inverse() {
        return Ok(false);
    }
    if sigma.cycle_type() != lambda.doubled() {
        return Ok(false);
    }
    Ok(twisted_class_of(sigma).as_ref() == Some(lambda))
}

/// The centraliser of `τ` in `S_{2n}`: signed permutations
/// `k ↦ ±π(k)`, `-k ↦ ∓π(k)`. Yields `2^n · n!` elements, ordered by the
/// underlying `π` lexicographically and then by sign mask.
pub fn hyperoctahedral_elements(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    check_n(n)?;
    Ok((0..n).permutations(n).flat_map(move |pi| {
        (0u64..1 << n).map(move |signs| {
            let mut images = vec![0u8; 2 * n];
            for (k, &target) in pi.iter().enumerate() {
                let flip = (signs >> k) & 1 == 1;
                let plus = 2 * target + usize::from(flip);
                images[2 * k] = plus as u8;
                images[2 * k + 1] = (plus ^ 1) as u8;
            }
            Permutation::from_images_unchecked(images)
        })
    }))
}

/// The generators of the hyperoctahedral group: adjacent swaps
/// `(k k+1)(-k -(k+1))` and the sign flip `(1 -1)`.
pub fn hyperoctahedral_generators(n: usize) -> Result<Vec<Permutation>> {
    check_n(n)?;
    let mut gens = Vec::with_capacity(n);
    for k in 1..n as i32 {
        let a = SignedLabel::new(k)?;
        let b = SignedLabel::new(k + 1)?;
        gens.push(Permutation::from_cycles(n, &[vec![a, b], vec![a.bar(), b.bar()]])?);
    }
    let one = SignedLabel::new(1)?;
    gens.push(Permutation::from_cycles(n, &[vec![one, one.bar()]])?);
    Ok(gens)
}

/// All `(2n)!` permutations of the signed ground set.
pub fn symmetric_group(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    check_n(n)?;
    Ok((0..2 * n as u8)
        .permutations(2 * n)
        .map(Permutation::from_images_unchecked))
}

/// `B̃_λ` by exhaustive scan of `S_{2n}`.
pub fn twisted_class_members(lambda: &Partition) -> Result<BTreeSet<Permutation>> {
    let n = lambda.weight();
    let mut out = BTreeSet::new();
    for sigma in symmetric_group(n)? {
        if is_twisted_class_member(&sigma, lambda)? {
            out.insert(sigma);
        }
    }
    Ok(out)
}

/// Orbit of `sigma` under conjugation by `group`, closed by breadth-first
/// search so that a generating set suffices.
pub fn conjugation_orbit(sigma: &Permutation, group: &[Permutation]) -> Result<BTreeSet<Permutation>> {
    let mut orbit = BTreeSet::new();
    orbit.insert(sigma.clone());
    let mut frontier = vec![sigma.clone()];
    while let Some(p) = frontier.pop() {
        for g in group {
            let q = p.conjugate(g)?;
            if orbit.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    Ok(orbit)
}
