use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::de::DeserializeOwned;

use crate::failure::Failure;

pub fn open_input(path: Option<&Path>) -> Result<Box<dyn BufRead>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(
            File::open(p).map_err(|e| Failure::usage(format!("cannot open {}: {}", p.display(), e)))?,
        )),
        None => Box::new(BufReader::new(io::stdin())),
    })
}

pub fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::usage(format!("cannot create {}: {}", p.display(), e)))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

/// Calls `f` on each non-blank, non-comment line with its 1-based number.
pub fn for_each_line(
    input: impl BufRead,
    mut f: impl FnMut(usize, &str) -> Result<(), Failure>,
) -> Result<(), Failure> {
    for (k, line) in input.lines().enumerate() {
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        f(k + 1, text)?;
    }
    Ok(())
}

/// Calls `f` on each JSON value of a whitespace-separated stream, with its
/// 1-based record number.
pub fn for_each_record<T: DeserializeOwned>(
    input: impl Read,
    mut f: impl FnMut(usize, T) -> Result<(), Failure>,
) -> Result<(), Failure> {
    let stream = serde_json::Deserializer::from_reader(input).into_iter::<T>();
    for (k, item) in stream.enumerate() {
        let value = item.map_err(|e| Failure::usage(format!("parse error: {}", e)))?;
        f(k + 1, value).map_err(|e| e.context(format!("record {}", k + 1)))?;
    }
    Ok(())
}
