//! Flag systems: embedded graphs given by three fixed-point-free involutions.
//!
//! A flag is a (vertex, edge, side) incidence. `s0` moves to the other end of
//! the same edge side, `s1` to the neighbouring edge across a corner, `s2` to
//! the other side of the same edge end. Vertices are orbits of `⟨s1, s2⟩`,
//! edges are orbits of `⟨s0, s2⟩` (always of size 4), faces are orbits of
//! `⟨s0, s1⟩`.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagMap {
    s: [Vec<usize>; 3],
}

impl FlagMap {
    pub fn new(s0: Vec<usize>, s1: Vec<usize>, s2: Vec<usize>) -> Result<Self> {
        let len = s0.len();
        if len == 0 {
            return Err(Error::MalformedFlags("no flags".into()));
        }
        if s1.len() != len || s2.len() != len {
            return Err(Error::MalformedFlags(format!(
                "involution lengths differ: {}, {}, {}",
                len,
                s1.len(),
                s2.len()
            )));
        }
        for (k, s) in [&s0, &s1, &s2].into_iter().enumerate() {
            for (f, &g) in s.iter().enumerate() {
                if g >= len {
                    return Err(Error::MalformedFlags(format!("s{}[{}] = {} out of range", k, f, g)));
                }
                if g == f {
                    return Err(Error::MalformedFlags(format!("s{} fixes flag {}", k, f)));
                }
                if s[g] != f {
                    return Err(Error::MalformedFlags(format!("s{} is not an involution at flag {}", k, f)));
                }
            }
        }
        for f in 0..len {
            if s0[s2[f]] != s2[s0[f]] {
                return Err(Error::MalformedFlags(format!("s0 and s2 do not commute at flag {}", f)));
            }
            if s0[f] == s2[f] {
                return Err(Error::MalformedFlags(format!("edge through flag {} has fewer than 4 flags", f)));
            }
        }
        Ok(FlagMap { s: [s0, s1, s2] })
    }

    pub fn len(&self) -> usize {
        self.s[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.s[0].is_empty()
    }

    pub fn s0(&self, f: usize) -> usize {
        self.s[0][f]
    }

    pub fn s1(&self, f: usize) -> usize {
        self.s[1][f]
    }

    pub fn s2(&self, f: usize) -> usize {
        self.s[2][f]
    }

    pub fn involution(&self, k: usize) -> &[usize] {
        &self.s[k]
    }

    /// Orbits of the subgroup generated by the listed involutions; each orbit
    /// is sorted and orbits are ordered by their smallest flag.
    pub fn orbits(&self, generators: &[usize]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let f = orbit[head];
                head += 1;
                for &k in generators {
                    let g = self.s[k][f];
                    if !seen[g] {
                        seen[g] = true;
                        orbit.push(g);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn vertices(&self) -> Vec<Vec<usize>> {
        self.orbits(&[1, 2])
    }

    pub fn edges(&self) -> Vec<Vec<usize>> {
        self.orbits(&[0, 2])
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.orbits(&[0, 1])
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.orbits(&[0, 1, 2])
    }

    /// Maps each flag to the index of its orbit in `orbits`.
    pub fn orbit_index(&self, orbits: &[Vec<usize>]) -> Vec<usize> {
        let mut index = vec![0; self.len()];
        for (k, orbit) in orbits.iter().enumerate() {
            for &f in orbit {
                index[f] = k;
            }
        }
        index
    }
}
