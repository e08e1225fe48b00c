use std::io::Write;

use serde::Serialize;

use hurwitz_core::constellation::{build_constellation, export_graph, extract_matchings, ConstellationRecord};
use hurwitz_core::factorization::{enumerate_factorizations, enumerate_factorizations_par, hurwitz_number};
use hurwitz_core::matching_seq::{
    count_matching_seqs, enumerate_matching_seqs, p_map, p_preimages, MatchingSeqRecord,
};
use hurwitz_core::perm::MAX_N;
use hurwitz_core::table::{table_rows, TableRow};
use hurwitz_core::verify::{run_verify, VerifyConfig};
use hurwitz_core::{MatchingSeq, Partition, TranspositionSeq};

use crate::args::{Bounds, Format, Global, Input, Kind};
use crate::failure::{Failure, VERIFY_FAILED};
use crate::io::{for_each_line, for_each_record, open_input, open_output};

const N_CAP: usize = 5;
const M_CAP: usize = 7;
const VERIFY_N_CAP: usize = 4;
const VERIFY_M_CAP: usize = 5;

fn check_caps(g: &Global, n: usize, m: usize, n_cap: usize, m_cap: usize) -> Result<(), Failure> {
    if g.force {
        return Ok(());
    }
    if n > n_cap {
        return Err(Failure::bounds(format!("n = {} exceeds the cap {} (use --force)", n, n_cap)));
    }
    if m > m_cap {
        return Err(Failure::bounds(format!("m = {} exceeds the cap {} (use --force)", m, m_cap)));
    }
    Ok(())
}

fn format_or(g: &Global, default: Format, allowed: &[Format], command: &str) -> Result<Format, Failure> {
    let f = g.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::usage(format!("{} does not support --format {:?}", command, f).to_lowercase()))
    }
}

/// `(n, m, λ)` from the flags; `n` defaults to the weight of `λ`.
fn instance(g: &Global) -> Result<(usize, usize, Partition), Failure> {
    let text = g.lambda.as_deref().ok_or_else(|| Failure::usage("--lambda is required"))?;
    let lambda: Partition = text.parse()?;
    let m = g.m.ok_or_else(|| Failure::usage("--m is required"))?;
    let n = lambda.weight();
    if let Some(given) = g.n {
        if given != n {
            return Err(Failure::usage(format!("--lambda {} has weight {} but --n is {}", lambda, n, given)));
        }
    }
    check_caps(g, n, m, N_CAP, M_CAP)?;
    if n > MAX_N {
        return Err(Failure::bounds(format!("n = {} exceeds the supported maximum {}", n, MAX_N)));
    }
    Ok((n, m, lambda))
}

#[derive(Serialize)]
struct Rational {
    num: u64,
    den: u64,
}

#[derive(Serialize)]
struct CountOutput {
    raw: u64,
    hurwitz: Rational,
    matching: u64,
}

pub fn count(g: &Global) -> Result<i32, Failure> {
    let format = format_or(g, Format::Json, &[Format::Json, Format::Csv, Format::Text], "count")?;
    let (n, m, lambda) = instance(g)?;
    let value = hurwitz_number(m, &lambda, g.workers)?;
    let matching = count_matching_seqs(m, &lambda)?;
    let row = TableRow {
        n,
        m,
        lambda: lambda.to_string(),
        raw_count: value.raw_count,
        hurwitz_num: *value.value.numer(),
        hurwitz_den: *value.value.denom(),
        matching_count: matching,
    };
    let mut out = open_output(g.out.as_deref())?;
    match format {
        Format::Json => {
            let record = CountOutput {
                raw: row.raw_count,
                hurwitz: Rational {
                    num: row.hurwitz_num,
                    den: row.hurwitz_den,
                },
                matching: row.matching_count,
            };
            writeln!(out, "{}", to_json(&record))?;
        }
        Format::Csv => write_csv(&mut out, std::slice::from_ref(&row))?,
        _ => writeln!(
            out,
            "n={} m={} lambda={} raw={} hurwitz={}/{} matching={}",
            row.n, row.m, row.lambda, row.raw_count, row.hurwitz_num, row.hurwitz_den, row.matching_count
        )?,
    }
    out.flush()?;
    Ok(0)
}

pub fn enumerate(g: &Global, kind: Kind) -> Result<i32, Failure> {
    let format = format_or(g, Format::Text, &[Format::Json, Format::Text], "enumerate")?;
    let (_, m, lambda) = instance(g)?;
    let mut out = open_output(g.out.as_deref())?;
    match kind {
        Kind::Factorizations => {
            let mut emit = |ts: TranspositionSeq| -> Result<(), Failure> {
                match format {
                    Format::Json => writeln!(out, "{}", to_json(&ts.to_string()))?,
                    _ => writeln!(out, "{}", ts)?,
                }
                Ok(())
            };
            if g.workers > 1 {
                for ts in enumerate_factorizations_par(m, &lambda, g.workers)? {
                    emit(ts)?;
                }
            } else {
                for ts in enumerate_factorizations(m, &lambda)? {
                    emit(ts)?;
                }
            }
        }
        Kind::Matchings => {
            for ms in enumerate_matching_seqs(m, &lambda)? {
                write_matching_seq(&mut out, &ms, format)?;
            }
        }
    }
    out.flush()?;
    Ok(0)
}

fn write_matching_seq(out: &mut dyn Write, ms: &MatchingSeq, format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => writeln!(out, "{}", to_json(&ms.to_record()))?,
        _ => writeln!(out, "{}", ms)?,
    }
    Ok(())
}

/// Parses a word; without `--n` the ground set is the largest label used.
fn parse_word(text: &str, n: Option<usize>, line: usize) -> Result<TranspositionSeq, Failure> {
    if let Some(n) = n {
        return Ok(TranspositionSeq::parse(text, n, line)?);
    }
    let wide = TranspositionSeq::parse(text, MAX_N, line)?;
    let n = wide
        .entries()
        .iter()
        .map(|t| t.a().abs().max(t.b().abs()) as usize)
        .max()
        .ok_or_else(|| Failure::usage(format!("line {}: the empty word needs --n", line)))?;
    Ok(TranspositionSeq::new(n, wide.entries().to_vec())?)
}

pub fn pmap(g: &Global, input: &Input) -> Result<i32, Failure> {
    let format = format_or(g, Format::Json, &[Format::Json, Format::Text], "pmap")?;
    let mut out = open_output(g.out.as_deref())?;
    for_each_line(open_input(input.input.as_deref())?, |line, text| {
        let ts = parse_word(text, g.n, line)?;
        write_matching_seq(&mut out, &p_map(&ts), format)
    })?;
    out.flush()?;
    Ok(0)
}

#[derive(Serialize)]
struct PreimageOutput {
    n: usize,
    preimages: Vec<String>,
}

pub fn preimages(g: &Global, input: &Input) -> Result<i32, Failure> {
    let format = format_or(g, Format::Json, &[Format::Json, Format::Text], "preimages")?;
    let mut out = open_output(g.out.as_deref())?;
    for_each_record(open_input(input.input.as_deref())?, |_, record: MatchingSeqRecord| {
        let ms = MatchingSeq::from_record(&record)?;
        let words = p_preimages(&ms)?;
        match format {
            Format::Json => {
                let record = PreimageOutput {
                    n: ms.n(),
                    preimages: words.iter().map(|w| w.to_string()).collect(),
                };
                writeln!(out, "{}", to_json(&record))?;
            }
            _ => {
                for w in &words {
                    writeln!(out, "{}", w)?;
                }
            }
        }
        Ok(())
    })?;
    out.flush()?;
    Ok(0)
}

pub fn build(g: &Global, input: &Input, dot: bool) -> Result<i32, Failure> {
    let format = if dot {
        Format::Dot
    } else {
        format_or(g, Format::Json, &[Format::Json, Format::Dot], "build")?
    };
    let token = if format == Format::Dot { "dot" } else { "structured" };
    let mut out = open_output(g.out.as_deref())?;
    for_each_record(open_input(input.input.as_deref())?, |_, record: MatchingSeqRecord| {
        let ms = MatchingSeq::from_record(&record)?;
        let c = build_constellation(&ms)?;
        let text = export_graph(&c, token)?;
        if format == Format::Dot {
            write!(out, "{}", text)?;
        } else {
            writeln!(out, "{}", text)?;
        }
        Ok(())
    })?;
    out.flush()?;
    Ok(0)
}

pub fn extract(g: &Global, input: &Input) -> Result<i32, Failure> {
    let format = format_or(g, Format::Json, &[Format::Json, Format::Text], "extract")?;
    let mut out = open_output(g.out.as_deref())?;
    for_each_record(open_input(input.input.as_deref())?, |_, record: ConstellationRecord| {
        let c = record.into_constellation()?;
        write_matching_seq(&mut out, &extract_matchings(&c)?, format)
    })?;
    out.flush()?;
    Ok(0)
}

fn check_bounds(g: &Global, b: &Bounds, n_cap: usize, m_cap: usize) -> Result<(), Failure> {
    if b.n_max == 0 {
        return Err(Failure::usage("--n-max must be at least 1"));
    }
    check_caps(g, b.n_max, b.m_max, n_cap, m_cap)
}

pub fn verify(g: &Global, bounds: &Bounds, inject_fault: bool) -> Result<i32, Failure> {
    let format = format_or(g, Format::Text, &[Format::Json, Format::Text], "verify")?;
    check_bounds(g, bounds, VERIFY_N_CAP, VERIFY_M_CAP)?;
    let report = run_verify(&VerifyConfig {
        n_max: bounds.n_max,
        m_max: bounds.m_max,
        workers: g.workers,
        inject_fault,
    })?;
    let mut out = open_output(g.out.as_deref())?;
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialises")
        )?,
        _ => write!(out, "{}", report.render_text())?,
    }
    out.flush()?;
    if report.passed() {
        Ok(0)
    } else {
        if let Some(path) = &g.out {
            eprintln!("verification failed; see {}", path.display());
        }
        Ok(VERIFY_FAILED)
    }
}

pub fn table(g: &Global, bounds: &Bounds) -> Result<i32, Failure> {
    let format = format_or(g, Format::Csv, &[Format::Json, Format::Csv], "table")?;
    check_bounds(g, bounds, N_CAP, M_CAP)?;
    let rows = table_rows(bounds.n_max, bounds.m_max, g.workers)?;
    let mut out = open_output(g.out.as_deref())?;
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows).expect("rows serialise"))?,
        _ => write_csv(&mut out, &rows)?,
    }
    out.flush()?;
    Ok(0)
}

fn write_csv(out: &mut dyn Write, rows: &[TableRow]) -> Result<(), Failure> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("plain value serialises")
}
