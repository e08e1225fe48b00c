use serde::Serialize;

use super::CDConstellation;
use crate::partition::Partition;

/// Topology of the surface carrying a constellation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceReport {
    pub vertex_counts: Vec<usize>,
    pub edge_count: usize,
    pub face_count: usize,
    pub euler_characteristic: i64,
    pub component_count: usize,
    /// One entry per component, in order of smallest flag.
    pub orientable: Vec<bool>,
    pub face_degrees: Partition,
}

impl SurfaceReport {
    pub fn vertex_count(&self) -> usize {
        self.vertex_counts.iter().sum()
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable.iter().all(|&o| o)
    }
}

pub fn surface_report(c: &CDConstellation) -> SurfaceReport {
    let map = c.map();
    let vertices = map.vertices();
    let edges = map.edges();
    let faces = map.faces();
    let components = map.components();

    let mut vertex_counts = vec![0; c.m()];
    for v in &vertices {
        vertex_counts[c.colors()[v[0]]] += 1;
    }
    let face_degrees = Partition::from_unsorted(
        faces
            .iter()
            .map(|face| (face.iter().filter(|&&f| c.colors()[f] == 0).count() / 2) as u32)
            .collect(),
    );

    // orientable iff the flag graph is bipartite with every s_i crossing sides
    let mut side = vec![u8::MAX; map.len()];
    let orientable = components
        .iter()
        .map(|component| {
            let start = component[0];
            side[start] = 0;
            let mut stack = vec![start];
            let mut ok = true;
            while let Some(f) = stack.pop() {
                for k in 0..3 {
                    let g = map.involution(k)[f];
                    if side[g] == u8::MAX {
                        side[g] = 1 - side[f];
                        stack.push(g);
                    } else if side[g] == side[f] {
                        ok = false;
                    }
                }
            }
            ok
        })
        .collect();

    SurfaceReport {
        vertex_counts,
        edge_count: edges.len(),
        face_count: faces.len(),
        euler_characteristic: vertices.len() as i64 - edges.len() as i64 + faces.len() as i64,
        component_count: components.len(),
        orientable,
        face_degrees,
    }
}

/// Orientability by brute force over local vertex orientations.
///
/// Each vertex gets a local orientation from the parity of flags along its
/// `s1`/`s2` cycle; an edge is twisted when its two ends disagree. Flipping a
/// vertex toggles every edge at it. A component is orientable iff one of the
/// `2^V` flip assignments leaves no twisted edge. Returns `None` when some
/// component has more than `max_vertices` vertices.
pub fn orientable_by_vertex_flips(c: &CDConstellation, max_vertices: usize) -> Option<Vec<bool>> {
    let map = c.map();
    let vertices = map.vertices();
    let vertex_of = map.orbit_index(&vertices);
    let mut parity = vec![0u8; map.len()];
    for v in &vertices {
        let start = v[0];
        let mut f = start;
        let mut p = 0u8;
        loop {
            parity[f] = p;
            let g = if p == 0 { map.s1(f) } else { map.s2(f) };
            if g == start {
                break;
            }
            f = g;
            p ^= 1;
        }
    }
    let twisted_edges: Vec<(usize, usize, bool)> = map
        .edges()
        .iter()
        .map(|e| {
            let f = e[0];
            let g = map.s0(f);
            (vertex_of[f], vertex_of[g], parity[f] == parity[g])
        })
        .collect();

    let components = map.components();
    let mut out = Vec::with_capacity(components.len());
    for component in &components {
        let mut local: Vec<usize> = component.iter().map(|&f| vertex_of[f]).collect();
        local.sort_unstable();
        local.dedup();
        if local.len() > max_vertices {
            return None;
        }
        let position = |v: usize| local.binary_search(&v).expect("vertex in component");
        let edges: Vec<(usize, usize, bool)> = twisted_edges
            .iter()
            .filter(|(u, _, _)| local.binary_search(u).is_ok())
            .map(|&(u, w, t)| (position(u), position(w), t))
            .collect();
        let found = (0u64..1 << local.len()).any(|flips| {
            edges
                .iter()
                .all(|&(u, w, t)| !(t ^ ((flips >> u) & 1 == 1) ^ ((flips >> w) & 1 == 1)))
        });
        out.push(found);
    }
    Some(out)
}
