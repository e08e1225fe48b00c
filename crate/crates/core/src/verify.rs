//! Cross-module identity suites run over every instance up to given bounds.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::class::{
    conjugation_orbit, hyperoctahedral_elements, hyperoctahedral_generators, symmetric_group,
    twisted_class_of,
};
use crate::constellation::{
    build_constellation, export_graph, extract_matchings, orientable_by_vertex_flips, surface_report,
    ConstellationRecord,
};
use crate::error::Result;
use crate::factorization::{shard_count, shard_words, twisted_product, word_count};
use crate::matching::{tau, PairMatching};
use crate::matching_seq::{
    count_matching_seqs, enumerate_matching_seqs, matching_orbit_count, p_map, p_preimages,
    validate_matching_seq, MatchingSeq,
};
use crate::parallel::run_sharded;
use crate::partition::Partition;

pub const CARDINALITY: &str = "cardinality 2^m:1";
pub const PREIMAGES: &str = "preimage exactness";
pub const ROUND_TRIP: &str = "word round trip";
pub const IMAGE_VALIDITY: &str = "image validity";
pub const TOTAL_COUNT: &str = "total count";
pub const CONJUGATION: &str = "conjugation symmetry";
pub const CLASS_ORBIT: &str = "twisted class orbit";
pub const BIJECTION: &str = "constellation bijection";
pub const SURFACE_COUNTS: &str = "surface counts";
pub const ORIENTABILITY: &str = "orientability oracle";
pub const COMPONENTS: &str = "component count";

const SUITES: [&str; 11] = [
    CARDINALITY,
    PREIMAGES,
    ROUND_TRIP,
    IMAGE_VALIDITY,
    TOTAL_COUNT,
    CONJUGATION,
    CLASS_ORBIT,
    BIJECTION,
    SURFACE_COUNTS,
    ORIENTABILITY,
    COMPONENTS,
];

/// Largest component the brute-force orientability oracle will search.
const ORACLE_MAX_VERTICES: usize = 24;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub m_max: usize,
    pub workers: usize,
    /// Replaces one matching of the first valid image before validating it.
    pub inject_fault: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub instances: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n_max: usize,
    pub m_max: usize,
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("verify n_max={} m_max={}\n", self.n_max, self.m_max);
        out.push_str(&format!("{:<26}{:>12}{:>10}  status\n", "suite", "instances", "failures"));
        for s in &self.suites {
            out.push_str(&format!(
                "{:<26}{:>12}{:>10}  {}\n",
                s.name,
                s.instances,
                s.failures,
                if s.passed() { "ok" } else { "FAIL" }
            ));
            if let Some(why) = &s.first_failure {
                out.push_str(&format!("  first failure: {}\n", why));
            }
        }
        let failed: Vec<&str> = self.suites.iter().filter(|s| !s.passed()).map(|s| s.name).collect();
        if failed.is_empty() {
            out.push_str(&format!("PASS: {} suites\n", self.suites.len()));
        } else {
            out.push_str(&format!("FAIL: {}\n", failed.join(", ")));
        }
        out
    }
}

/// Accumulates outcomes per suite in a fixed order.
#[derive(Default)]
struct Tally {
    suites: BTreeMap<&'static str, (u64, u64, Option<String>)>,
}

impl Tally {
    fn record(&mut self, suite: &'static str, ok: bool, why: impl FnOnce() -> String) {
        let entry = self.suites.entry(suite).or_insert((0, 0, None));
        entry.0 += 1;
        if !ok {
            entry.1 += 1;
            if entry.2.is_none() {
                entry.2 = Some(why());
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        for (name, (inst, fail, why)) in other.suites {
            let entry = self.suites.entry(name).or_insert((0, 0, None));
            entry.0 += inst;
            entry.1 += fail;
            if entry.2.is_none() {
                entry.2 = why;
            }
        }
    }
}

pub fn run_verify(config: &VerifyConfig) -> Result<VerifyReport> {
    let mut tally = Tally::default();
    let mut fault_pending = config.inject_fault;
    for n in 1..=config.n_max {
        check_class_orbits(n, &mut tally)?;
        for m in 0..=config.m_max {
            let raw = check_words(n, m, config.workers, &mut fault_pending, &mut tally)?;
            for lambda in Partition::all(n) {
                check_matchings(n, m, &lambda, raw.get(&lambda).copied().unwrap_or(0), config.workers, &mut tally)?;
            }
        }
    }
    let suites = SUITES
        .iter()
        .map(|&name| {
            let (instances, failures, first_failure) = tally.suites.remove(name).unwrap_or((0, 0, None));
            SuiteResult {
                name,
                instances,
                failures,
                first_failure,
            }
        })
        .collect();
    Ok(VerifyReport {
        n_max: config.n_max,
        m_max: config.m_max,
        suites,
    })
}

/// `B̃_λ` is non-empty, closed under the hyperoctahedral action, and one orbit.
fn check_class_orbits(n: usize, tally: &mut Tally) -> Result<()> {
    let mut classes: BTreeMap<Partition, BTreeSet<_>> = BTreeMap::new();
    for sigma in symmetric_group(n)? {
        if let Some(lambda) = twisted_class_of(&sigma) {
            classes.entry(lambda).or_default().insert(sigma);
        }
    }
    let group: Vec<_> = hyperoctahedral_elements(n)?.collect();
    let generators = hyperoctahedral_generators(n)?;
    for lambda in Partition::all(n) {
        let members = classes.remove(&lambda).unwrap_or_default();
        let Some(first) = members.iter().next() else {
            tally.record(CLASS_ORBIT, false, || format!("B~_{{{}}} is empty", lambda));
            continue;
        };
        let mut closed = true;
        for sigma in &members {
            for g in &group {
                closed &= members.contains(&sigma.conjugate(g)?);
            }
        }
        let orbit = conjugation_orbit(first, &generators)?;
        let ok = closed && orbit == members;
        tally.record(CLASS_ORBIT, ok, || {
            format!(
                "B~_{{{}}}: closed={} orbit size {} vs class size {}",
                lambda,
                closed,
                orbit.len(),
                members.len()
            )
        });
    }
    Ok(())
}

/// Walks every admissible word once; returns raw counts per class.
fn check_words(
    n: usize,
    m: usize,
    workers: usize,
    fault_pending: &mut bool,
    tally: &mut Tally,
) -> Result<BTreeMap<Partition, u64>> {
    let total = word_count(m, n)?;
    let generators = hyperoctahedral_generators(n)?;
    let fault = *fault_pending;
    let shards = run_sharded(workers, shard_count(m, n), |s| -> Result<_> {
        let mut local = Tally::default();
        let mut counts: BTreeMap<Option<Partition>, u64> = BTreeMap::new();
        let mut faulted = false;
        for ts in shard_words(n, m, s)? {
            let class = twisted_class_of(&twisted_product(&ts));
            *counts.entry(class.clone()).or_insert(0) += 1;
            let Some(lambda) = class else { continue };

            let mut image = p_map(&ts);
            if fault && s == 0 && !faulted && m > 0 {
                image = flip_last(&image)?;
                faulted = true;
            }
            let report = validate_matching_seq(&image, &lambda)?;
            local.record(IMAGE_VALIDITY, report.passed(), || {
                format!("{} -> {}: {}", ts, image, report.first_violation().unwrap_or_default())
            });

            let image = p_map(&ts);
            let back = p_preimages(&image);
            let ok = back.as_ref().is_ok_and(|pre| pre.contains(&ts));
            local.record(ROUND_TRIP, ok, || format!("{} not among the preimages of {}", ts, image));

            for g in &generators {
                let moved = ts.relabel(g)?;
                let ok = twisted_class_of(&twisted_product(&moved)).as_ref() == Some(&lambda);
                local.record(CONJUGATION, ok, || format!("{} relabelled by {} leaves class {}", ts, g, lambda));
            }
        }
        Ok((local, counts, faulted))
    })?;
    let mut counts: BTreeMap<Option<Partition>, u64> = BTreeMap::new();
    for shard in shards {
        let (local, part, faulted) = shard?;
        tally.merge(local);
        for (k, v) in part {
            *counts.entry(k).or_insert(0) += v;
        }
        if faulted {
            *fault_pending = false;
        }
    }
    let seen: u64 = counts.values().sum();
    tally.record(TOTAL_COUNT, seen == total, || {
        format!("n={} m={}: buckets sum to {} but (2n(n-1))^m = {}", n, m, seen, total)
    });
    Ok(counts
        .into_iter()
        .filter_map(|(k, v)| k.map(|p| (p, v)))
        .collect())
}

/// Swaps `δ_{m-1}` for a different matching.
fn flip_last(ms: &MatchingSeq) -> Result<MatchingSeq> {
    let t = tau(ms.n())?;
    let last = ms.delta(ms.m() as isize - 1);
    let replacement = if last != &t {
        t
    } else {
        PairMatching::all(ms.n())?
            .into_iter()
            .find(|d| d != last)
            .unwrap_or(t)
    };
    ms.with_delta(ms.m() - 1, replacement)
}

fn check_matchings(n: usize, m: usize, lambda: &Partition, raw: u64, workers: usize, tally: &mut Tally) -> Result<()> {
    let seqs = enumerate_matching_seqs(m, lambda)?;
    let walks = count_matching_seqs(m, lambda)?;
    let expected = (seqs.len() as u64).checked_shl(m as u32).unwrap_or(u64::MAX);
    tally.record(CARDINALITY, raw == expected && walks == seqs.len() as u64, || {
        format!(
            "n={} m={} lambda={}: #H={} but 2^m * #P = {} (walk count {})",
            n,
            m,
            lambda,
            raw,
            expected,
            walks
        )
    });

    const CHUNK: usize = 64;
    let chunks = seqs.len().div_ceil(CHUNK);
    let results = run_sharded(workers, chunks, |c| -> Result<Tally> {
        let mut local = Tally::default();
        for ms in &seqs[c * CHUNK..((c + 1) * CHUNK).min(seqs.len())] {
            check_one_matching_seq(ms, lambda, &mut local)?;
        }
        Ok(local)
    })?;
    for r in results {
        tally.merge(r?);
    }
    Ok(())
}

fn check_one_matching_seq(ms: &MatchingSeq, lambda: &Partition, tally: &mut Tally) -> Result<()> {
    let m = ms.m();
    let n = ms.n();
    match p_preimages(ms) {
        Ok(pre) => {
            let distinct: BTreeSet<_> = pre.iter().collect();
            let ok = pre.len() == 1 << m
                && distinct.len() == pre.len()
                && pre.iter().all(|ts| &p_map(ts) == ms);
            tally.record(PREIMAGES, ok, || format!("{}: {} preimages, {} distinct", ms, pre.len(), distinct.len()));
        }
        Err(e) => tally.record(PREIMAGES, false, || format!("{}: {}", ms, e)),
    }
    if m < 2 {
        return Ok(());
    }
    let c = match build_constellation(ms) {
        Ok(c) => c,
        Err(e) => {
            tally.record(BIJECTION, false, || format!("{}: {}", ms, e));
            return Ok(());
        }
    };
    let back = extract_matchings(&c);
    let record: Option<ConstellationRecord> = export_graph(&c, "structured")
        .ok()
        .and_then(|s| serde_json::from_str(&s).ok());
    let reimported = record.and_then(|r| r.into_constellation().ok());
    tally.record(
        BIJECTION,
        back.as_ref() == Ok(ms) && reimported.as_ref() == Some(&c),
        || format!("{}: extracted {:?}", ms, back.map(|b| b.to_string())),
    );

    let report = surface_report(&c);
    let s = lambda.len() as i64;
    let ok = report.vertex_counts.iter().all(|&v| v == n - 1)
        && report.vertex_count() == m * (n - 1)
        && report.edge_count == (m - 1) * n
        && report.face_count == lambda.len()
        && report.euler_characteristic == n as i64 + s - m as i64
        && &report.face_degrees == lambda
        && report.face_degrees == ms.profile();
    tally.record(SURFACE_COUNTS, ok, || format!("{}: {:?}", ms, report));

    let oracle = orientable_by_vertex_flips(&c, ORACLE_MAX_VERTICES);
    tally.record(ORIENTABILITY, oracle.as_ref() == Some(&report.orientable), || {
        format!("{}: bipartite {:?} vs flips {:?}", ms, report.orientable, oracle)
    });

    let orbits = matching_orbit_count(ms);
    tally.record(COMPONENTS, orbits == report.component_count, || {
        format!("{}: {} flag components vs {} matching orbits", ms, report.component_count, orbits)
    });
    Ok(())
}
