use std::fmt::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{surface_report, CDConstellation, FlagMap};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Structured,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "structured" | "json" => Ok(ExportFormat::Structured),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// Lossless wire form of a CD-labelled constellation. `colors[f]` is the
/// colour of the vertex at flag `f`; `labels[f]` is the right path starting
/// at a colour-0 flag and 0 elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstellationRecord {
    pub flags: usize,
    pub s0: Vec<usize>,
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
    pub colors: Vec<usize>,
    pub labels: Vec<i32>,
}

impl ConstellationRecord {
    pub fn from_constellation(c: &CDConstellation) -> Self {
        let map = c.map();
        ConstellationRecord {
            flags: map.len(),
            s0: map.involution(0).to_vec(),
            s1: map.involution(1).to_vec(),
            s2: map.involution(2).to_vec(),
            colors: c.colors().to_vec(),
            labels: c.labels().to_vec(),
        }
    }

    pub fn into_constellation(self) -> Result<CDConstellation> {
        if self.s0.len() != self.flags {
            return Err(Error::MalformedFlags(format!(
                "record declares {} flags but s0 has {}",
                self.flags,
                self.s0.len()
            )));
        }
        let map = FlagMap::new(self.s0, self.s1, self.s2)?;
        CDConstellation::from_parts(map, self.colors, self.labels)
    }
}

pub fn export_graph(c: &CDConstellation, format: &str) -> Result<String> {
    match format.parse()? {
        ExportFormat::Structured => {
            let record = ConstellationRecord::from_constellation(c);
            Ok(serde_json::to_string(&record).expect("plain record serialises"))
        }
        ExportFormat::Dot => Ok(to_dot(c)),
    }
}

fn to_dot(c: &CDConstellation) -> String {
    let map = c.map();
    let vertices = map.vertices();
    let vertex_of = map.orbit_index(&vertices);
    let report = surface_report(c);
    let mut out = String::new();
    let _ = writeln!(out, "graph constellation {{");
    let _ = writeln!(
        out,
        "  // n={} m={} lambda={} chi={} orientable={}",
        c.n(),
        c.m(),
        report.face_degrees,
        report.euler_characteristic,
        report.is_orientable()
    );
    for (k, v) in vertices.iter().enumerate() {
        let color = c.colors()[v[0]];
        let degree = v.len() / 2;
        let _ = writeln!(out, "  v{} [label=\"color {} degree {}\"];", k, color, degree);
    }
    for e in map.edges() {
        // the low end sits at the smaller colour
        let lo = if c.colors()[e[0]] < c.colors()[map.s0(e[0])] { e[0] } else { map.s0(e[0]) };
        let hi = map.s0(lo);
        let mut flanking = [c.path_of(lo), c.path_of(map.s2(lo))];
        flanking.sort();
        let _ = writeln!(
            out,
            "  v{} -- v{} [label=\"gap {}: {} {}\"];",
            vertex_of[lo],
            vertex_of[hi],
            c.colors()[lo],
            flanking[0],
            flanking[1]
        );
    }
    out.push_str("}\n");
    out
}
