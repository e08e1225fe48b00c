//! CD-labelled simple `m`-constellations as flag systems.
//!
//! A constellation is built directly from its right paths. Every right path
//! `a` runs along one side of exactly one edge in each gap `k` (the edges
//! joining colours `k` and `k+1`), so flags are indexed by
//! `(path a, gap k, end)` with `end` 0 at the colour-`k` vertex and 1 at the
//! colour-`k+1` vertex. Then
//!
//! * `s0` swaps the two ends of a path segment,
//! * `s2` swaps `a` with `δ_k(a)`, the path on the other side of the edge,
//! * `s1` continues a path through an interior corner, and at the terminal
//!   colours joins the paths sharing a corner: `a ↔ -a` at colour 0 and
//!   `a ↔ δ_{m-1}(a)` at colour `m-1`.
//!
//! Reading the matchings back walks each path from its labelled colour-0
//! corner, so extraction does not depend on how flags are numbered.

mod export;
mod flags;
mod report;

pub use export::{export_graph, ConstellationRecord, ExportFormat};
pub use flags::FlagMap;
pub use report::{orientable_by_vertex_flips, surface_report, SurfaceReport};

use crate::error::{Error, Result};
use crate::matching::PairMatching;
use crate::matching_seq::MatchingSeq;
use crate::perm::{Permutation, SignedLabel};

/// A colour-0 corner carrying the label `k`. `flags[0]` starts right path
/// `k` and `flags[1]` starts right path `-k`; their order is the corner's
/// orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corner0 {
    pub label: u32,
    pub flags: [usize; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CDConstellation {
    map: FlagMap,
    /// Colour of the vertex each flag is incident to.
    colors: Vec<usize>,
    /// Right-path label starting at each colour-0 flag, 0 elsewhere.
    labels: Vec<i32>,
    m: usize,
    n: usize,
    corners: Vec<Corner0>,
    /// Flag walk of each right path, indexed by label index.
    paths: Vec<Vec<usize>>,
    /// Label index of the path running along each flag.
    owner: Vec<usize>,
}

impl CDConstellation {
    /// Validates a flag system with vertex colours and a CD labelling.
    pub fn from_parts(map: FlagMap, colors: Vec<usize>, labels: Vec<i32>) -> Result<Self> {
        let len = map.len();
        if colors.len() != len || labels.len() != len {
            return Err(Error::MalformedFlags(format!(
                "{} flags but {} colours and {} labels",
                len,
                colors.len(),
                labels.len()
            )));
        }
        let m = colors.iter().max().map_or(0, |&c| c + 1);
        if m < 2 {
            return Err(Error::ConstellationTooShort(m));
        }
        for f in 0..len {
            if colors[map.s1(f)] != colors[f] || colors[map.s2(f)] != colors[f] {
                return Err(Error::NotSimpleConstellation(format!(
                    "vertex through flag {} is not monochromatic",
                    f
                )));
            }
            if colors[map.s0(f)].abs_diff(colors[f]) != 1 {
                return Err(Error::NotSimpleConstellation(format!(
                    "edge through flag {} joins colours {} and {}",
                    f,
                    colors[f],
                    colors[map.s0(f)]
                )));
            }
        }
        check_simple(&map, &colors, m)?;
        let corners = check_labels(&map, &colors, &labels)?;
        let n = corners.len();
        let mut c = CDConstellation {
            map,
            colors,
            labels,
            m,
            n,
            corners,
            paths: Vec::new(),
            owner: Vec::new(),
        };
        c.trace_paths()?;
        Ok(c)
    }

    fn trace_paths(&mut self) -> Result<()> {
        let len = self.map.len();
        let mut owner = vec![usize::MAX; len];
        let mut paths = vec![Vec::new(); 2 * self.n];
        for corner in &self.corners {
            for (side, &start) in corner.flags.iter().enumerate() {
                let label = if side == 0 { corner.label as i32 } else { -(corner.label as i32) };
                let idx = SignedLabel::new(label)?.index();
                let fail = |reason: String| Error::MalformedRightPath { label, reason };
                let mut walk = Vec::with_capacity(2 * (self.m - 1));
                let mut cur = start;
                for gap in 0..self.m - 1 {
                    let hi = self.map.s0(cur);
                    if self.colors[cur] != gap || self.colors[hi] != gap + 1 {
                        return Err(fail(format!("segment {} does not climb from colour {}", gap, gap)));
                    }
                    for f in [cur, hi] {
                        if owner[f] != usize::MAX {
                            return Err(fail(format!("flag {} is already on another path", f)));
                        }
                        owner[f] = idx;
                        walk.push(f);
                    }
                    if gap + 2 < self.m {
                        cur = self.map.s1(hi);
                    }
                }
                paths[idx] = walk;
            }
        }
        if let Some(f) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::MalformedRightPath {
                label: 0,
                reason: format!("flag {} lies on no right path", f),
            });
        }
        self.paths = paths;
        self.owner = owner;
        Ok(())
    }

    pub fn map(&self) -> &FlagMap {
        &self.map
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn labels(&self) -> &[i32] {
        &self.labels
    }

    /// Number of colours.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Size: the number of colour-0 corners.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The CD labelling, ordered by label.
    pub fn color0_corners(&self) -> &[Corner0] {
        &self.corners
    }

    /// Flags along the right path `label`, colour 0 first.
    pub fn right_path(&self, label: SignedLabel) -> &[usize] {
        &self.paths[label.index()]
    }

    /// Label of the right path running along flag `f`.
    pub fn path_of(&self, f: usize) -> SignedLabel {
        SignedLabel::from_index(self.owner[f])
    }
}

/// Degree and alternation constraints of a simple constellation.
fn check_simple(map: &FlagMap, colors: &[usize], m: usize) -> Result<()> {
    let mut special = vec![0usize; m];
    for vertex in map.vertices() {
        let color = colors[vertex[0]];
        let degree = vertex.len() / 2;
        let terminal = color == 0 || color == m - 1;
        let (regular, pivot) = if terminal { (1, 2) } else { (2, 4) };
        if degree == pivot {
            special[color] += 1;
        } else if degree != regular {
            return Err(Error::NotSimpleConstellation(format!(
                "colour-{} vertex at flag {} has degree {}",
                color, vertex[0], degree
            )));
        }
        if !terminal {
            for &f in &vertex {
                if colors[map.s0(f)] == colors[map.s0(map.s1(f))] {
                    return Err(Error::NotSimpleConstellation(format!(
                        "edges around the colour-{} vertex at flag {} do not alternate",
                        color, vertex[0]
                    )));
                }
            }
        }
    }
    if let Some(color) = special.iter().position(|&s| s != 1) {
        return Err(Error::NotSimpleConstellation(format!(
            "colour {} has {} branching vertices, expected 1",
            color, special[color]
        )));
    }
    Ok(())
}

/// The labels must put `k` and `-k` on the two flags of each colour-0
/// corner, covering `{±1, …, ±n}` exactly once.
fn check_labels(map: &FlagMap, colors: &[usize], labels: &[i32]) -> Result<Vec<Corner0>> {
    let color0: Vec<usize> = (0..map.len()).filter(|&f| colors[f] == 0).collect();
    let n = color0.len() / 2;
    let bad = |msg: String| Error::NotSimpleConstellation(format!("CD labelling: {}", msg));
    let mut corners: Vec<Option<Corner0>> = vec![None; n];
    for f in 0..map.len() {
        let label = labels[f];
        if colors[f] != 0 {
            if label != 0 {
                return Err(bad(format!("flag {} off colour 0 carries label {}", f, label)));
            }
            continue;
        }
        if label == 0 || label.unsigned_abs() as usize > n {
            return Err(bad(format!("flag {} carries label {}", f, label)));
        }
        if labels[map.s1(f)] != -label {
            return Err(bad(format!("corner at flag {} is not labelled k, -k", f)));
        }
        if label > 0 {
            let slot = &mut corners[label as usize - 1];
            if slot.is_some() {
                return Err(bad(format!("label {} used twice", label)));
            }
            *slot = Some(Corner0 {
                label: label as u32,
                flags: [f, map.s1(f)],
            });
        }
    }
    corners
        .into_iter()
        .enumerate()
        .map(|(k, c)| c.ok_or_else(|| bad(format!("label {} missing", k + 1))))
        .collect()
}

/// Builds the CD-labelled constellation whose matchings are `ms`.
pub fn build_constellation(ms: &MatchingSeq) -> Result<CDConstellation> {
    let m = ms.m();
    if m < 2 {
        return Err(Error::ConstellationTooShort(m));
    }
    if !ms.is_swap_chain() {
        return Err(crate::matching_seq::not_a_swap_chain(ms));
    }
    let n = ms.n();
    let labels_count = 2 * n;
    let gaps = m - 1;
    let flag = |a: usize, gap: usize, end: usize| (gap * labels_count + a) * 2 + end;
    let len = gaps * labels_count * 2;
    let mut s0 = vec![0; len];
    let mut s1 = vec![0; len];
    let mut s2 = vec![0; len];
    let mut colors = vec![0; len];
    let mut labels = vec![0; len];
    let last = ms.delta(m as isize - 1);
    for gap in 0..gaps {
        let across = ms.delta(gap as isize);
        for a in 0..labels_count {
            for end in 0..2 {
                let f = flag(a, gap, end);
                s0[f] = flag(a, gap, 1 - end);
                s2[f] = flag(across.partner_index(a), gap, end);
                colors[f] = gap + end;
                s1[f] = match (end, gap) {
                    (0, 0) => flag(a ^ 1, 0, 0),
                    (0, _) => flag(a, gap - 1, 1),
                    (_, g) if g + 1 == gaps => flag(last.partner_index(a), gap, 1),
                    _ => flag(a, gap + 1, 0),
                };
            }
            if gap == 0 {
                labels[flag(a, 0, 0)] = SignedLabel::from_index(a).value();
            }
        }
    }
    CDConstellation::from_parts(FlagMap::new(s0, s1, s2)?, colors, labels)
}

/// Reads `(δ₋₁, …, δ_{m-1})` off the right paths: `δ_k` pairs the paths on
/// the two sides of each gap-`k` edge and `δ_{m-1}` pairs the paths sharing a
/// colour-`(m-1)` corner.
pub fn extract_matchings(c: &CDConstellation) -> Result<MatchingSeq> {
    let size = 2 * c.n;
    let map = &c.map;
    let matching = |partner: &dyn Fn(usize) -> usize| -> Result<PairMatching> {
        let images = (0..size).map(|a| c.owner[partner(a)] as u8).collect();
        PairMatching::new(Permutation::from_images(images)?)
    };
    let mut deltas = Vec::with_capacity(c.m + 1);
    deltas.push(matching(&|a| map.s1(c.paths[a][0]))?);
    for gap in 0..c.m - 1 {
        deltas.push(matching(&|a| map.s2(c.paths[a][2 * gap]))?);
    }
    deltas.push(matching(&|a| map.s1(*c.paths[a].last().expect("m >= 2")))?);
    MatchingSeq::new(c.n, deltas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching_seq::enumerate_matching_seqs;
    use crate::partition::Partition;

    fn ms(n: usize, deltas: &[&str]) -> MatchingSeq {
        MatchingSeq::new(n, deltas.iter().map(|d| PairMatching::parse(d, n).unwrap()).collect()).unwrap()
    }

    pub(crate) fn projective() -> MatchingSeq {
        ms(2, &["(1 -1)(2 -2)", "(1 2)(-1 -2)", "(1 -2)(-1 2)"])
    }

    pub(crate) fn sphere() -> MatchingSeq {
        ms(2, &["(1 -1)(2 -2)", "(1 2)(-1 -2)", "(1 -1)(2 -2)"])
    }

    #[test]
    fn round_trip_examples() {
        for example in [projective(), sphere()] {
            let c = build_constellation(&example).unwrap();
            assert_eq!(extract_matchings(&c).unwrap(), example);
            assert_eq!(c.m(), 2);
            assert_eq!(c.n(), 2);
        }
    }

    #[test]
    fn round_trip_all_small() {
        for n in 2..=3 {
            for m in 2..=3 {
                for lambda in Partition::all(n) {
                    for seq in enumerate_matching_seqs(m, &lambda).unwrap() {
                        let c = build_constellation(&seq).unwrap();
                        assert_eq!(extract_matchings(&c).unwrap(), seq);
                    }
                }
            }
        }
    }

    #[test]
    fn right_paths_start_at_their_corner() {
        let c = build_constellation(&projective()).unwrap();
        for corner in c.color0_corners() {
            let k = corner.label as i32;
            assert_eq!(c.right_path(SignedLabel::new(k).unwrap())[0], corner.flags[0]);
            assert_eq!(c.right_path(SignedLabel::new(-k).unwrap())[0], corner.flags[1]);
        }
    }

    #[test]
    fn rejects_short_and_invalid() {
        let one = ms(2, &["(1 -1)(2 -2)", "(1 2)(-1 -2)"]);
        assert_eq!(build_constellation(&one), Err(Error::ConstellationTooShort(1)));
        let stuck = ms(2, &["(1 -1)(2 -2)", "(1 -1)(2 -2)", "(1 2)(-1 -2)"]);
        assert!(matches!(build_constellation(&stuck), Err(Error::InvalidMatchingSeq(_))));
    }

    #[test]
    fn corrupted_s1_is_a_structural_error() {
        let c = build_constellation(&projective()).unwrap();
        let mut s1 = c.map().involution(1).to_vec();
        // break the involution property
        let f = 0;
        let g = s1[f];
        s1[f] = s1[g ^ 1];
        let broken = FlagMap::new(c.map().involution(0).to_vec(), s1, c.map().involution(2).to_vec());
        assert!(matches!(broken, Err(Error::MalformedFlags(_))));

        // an involutive but non-alternating s1 at an interior vertex
        let lambda: Partition = "2,1".parse().unwrap();
        let seq = enumerate_matching_seqs(3, &lambda).unwrap().remove(0);
        let c = build_constellation(&seq).unwrap();
        let mut s1 = c.map().involution(1).to_vec();
        let interior: Vec<usize> = (0..s1.len()).filter(|&f| c.colors()[f] == 1).collect();
        // pair two flags that both lie on gap-0 edges
        let lows: Vec<usize> = interior.iter().copied().filter(|&f| c.colors()[c.map().s0(f)] == 0).collect();
        let (a, b) = (lows[0], lows[1]);
        let (pa, pb) = (s1[a], s1[b]);
        s1[a] = b;
        s1[b] = a;
        s1[pa] = pb;
        s1[pb] = pa;
        let map = FlagMap::new(c.map().involution(0).to_vec(), s1, c.map().involution(2).to_vec()).unwrap();
        let err = CDConstellation::from_parts(map, c.colors().to_vec(), c.labels().to_vec()).unwrap_err();
        assert!(matches!(err, Error::NotSimpleConstellation(_)), "{:?}", err);
    }

    #[test]
    fn bad_labels_are_rejected() {
        let c = build_constellation(&sphere()).unwrap();
        let mut labels = c.labels().to_vec();
        let f = c.color0_corners()[0].flags[0];
        labels[f] = 2;
        let err = CDConstellation::from_parts(c.map().clone(), c.colors().to_vec(), labels).unwrap_err();
        assert!(matches!(err, Error::NotSimpleConstellation(_)));
    }
}
