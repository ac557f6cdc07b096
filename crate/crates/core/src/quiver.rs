//! Resolution quivers as functional graphs.
//!
//! Vertex `i` has a single arrow to `f(i) = wrap(c_i + i)`. Every connected
//! component of such a graph contains exactly one directed cycle.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::AdmissibleSequence;

/// Arrow table of a resolution quiver; `target(i)` is the unique successor of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct ResolutionQuiver {
    f: Vec<usize>,
}

impl ResolutionQuiver {
    /// `f_A(i) = wrap(c_i + i)`. Defined for line and cycle algebras alike.
    pub fn of(a: &AdmissibleSequence) -> Self {
        let f = (1..=a.n()).map(|i| a.wrap((a.c(i) + i) as i64)).collect();
        Self { f }
    }

    /// Builds a quiver from a 1-based arrow table.
    pub fn from_table(f: Vec<usize>) -> Result<Self> {
        let n = f.len();
        if n == 0 {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        if let Some(&bad) = f.iter().find(|&&t| t == 0 || t > n) {
            return Err(Error::InvalidQuiver(format!(
                "arrow target {bad} outside 1..={n}"
            )));
        }
        Ok(Self { f })
    }

    pub fn n(&self) -> usize {
        self.f.len()
    }

    pub fn target(&self, i: usize) -> usize {
        self.f[i - 1]
    }

    pub fn table(&self) -> &[usize] {
        &self.f
    }

    /// Splits the quiver into components and extracts their cycles.
    pub fn decompose(&self) -> ComponentDecomposition {
        let n = self.n();

        // Components of the underlying undirected graph.
        let mut dsu = DisjointSets::new(n);
        for i in 1..=n {
            dsu.union(i - 1, self.target(i) - 1);
        }

        #[derive(Clone, Copy, PartialEq, Eq)]
        enum Mark {
            White,
            Grey,
            Black,
        }
        let mut mark = vec![Mark::White; n];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for start in 1..=n {
            if mark[start - 1] != Mark::White {
                continue;
            }
            let mut path = Vec::new();
            let mut v = start;
            while mark[v - 1] == Mark::White {
                mark[v - 1] = Mark::Grey;
                path.push(v);
                v = self.target(v);
            }
            if mark[v - 1] == Mark::Grey {
                // `v` closes a new cycle inside the current path.
                let pos = path
                    .iter()
                    .position(|&x| x == v)
                    .expect("grey vertex on path");
                cycles.push(canonical_cycle(&path[pos..]));
            }
            for &x in &path {
                mark[x - 1] = Mark::Black;
            }
        }
        cycles.sort();

        let mut cyclic = vec![false; n];
        for cyc in &cycles {
            for &x in cyc {
                cyclic[x - 1] = true;
            }
        }

        // Component ids follow the order of the (sorted) cycles.
        let mut root_to_id = vec![usize::MAX; n];
        for (id, cyc) in cycles.iter().enumerate() {
            let root = dsu.find(cyc[0] - 1);
            root_to_id[root] = id;
        }
        let component = (0..n).map(|i| root_to_id[dsu.find(i)]).collect();

        ComponentDecomposition {
            component,
            component_count: dsu.count(),
            cycles,
            cyclic,
        }
    }

    /// Directed-graph text in DOT syntax. Cyclic vertices are drawn as double circles.
    pub fn to_dot(&self, d: &ComponentDecomposition) -> String {
        let mut out = String::from("digraph resolution_quiver {\n");
        for i in 1..=self.n() {
            if d.is_cyclic(i) {
                let _ = writeln!(out, "  {i} [shape=doublecircle];");
            } else {
                let _ = writeln!(out, "  {i} [shape=circle];");
            }
        }
        for i in 1..=self.n() {
            let _ = writeln!(out, "  {i} -> {};", self.target(i));
        }
        out.push_str("}\n");
        out
    }
}

/// Rotates a cycle so it starts at its smallest vertex.
fn canonical_cycle(vertices: &[usize]) -> Vec<usize> {
    let (start, _) = vertices
        .iter()
        .enumerate()
        .min_by_key(|&(_, &v)| v)
        .expect("cycle is nonempty");
    let mut out = vertices.to_vec();
    out.rotate_left(start);
    out
}

struct DisjointSets {
    parent: Vec<usize>,
    sets: usize,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.sets -= 1;
        }
    }

    fn count(&self) -> usize {
        self.sets
    }
}

/// Components and cycles of a resolution quiver, in canonical order: each
/// cycle starts at its smallest vertex and cycles are sorted by that vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDecomposition {
    component: Vec<usize>,
    component_count: usize,
    cycles: Vec<Vec<usize>>,
    cyclic: Vec<bool>,
}

impl ComponentDecomposition {
    /// Component id of vertex `i`; component `k` contains `cycles()[k]`.
    pub fn component_of(&self, i: usize) -> usize {
        self.component[i - 1]
    }

    /// Number of connected components, counted independently of the cycles.
    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn is_cyclic(&self, i: usize) -> bool {
        self.cyclic[i - 1]
    }

    /// Cyclic vertices, ascending.
    pub fn cyclic_vertices(&self) -> Vec<usize> {
        (1..=self.cyclic.len())
            .filter(|&i| self.is_cyclic(i))
            .collect()
    }
}

/// A cycle of `R(A)` with its size and weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub size: usize,
    pub weight: usize,
}

/// Weight of a cycle `x_1 -> ... -> x_s -> x_1` of `R(A)`.
///
/// Computed as the sum of the quotients `k_i` in `c_{x_i} + x_i = k_i n + x_{i+1}`
/// and cross-checked against `(sum of c_{x_i}) / n`, which must be exact.
pub fn cycle_weight(a: &AdmissibleSequence, vertices: &[usize]) -> Result<usize> {
    let n = a.n();
    let not_a_cycle = || Error::NotACycle(vertices.to_vec());
    if vertices.is_empty() || vertices.iter().any(|&x| x == 0 || x > n) {
        return Err(not_a_cycle());
    }
    let mut seen = vec![false; n];
    for &x in vertices {
        if std::mem::replace(&mut seen[x - 1], true) {
            return Err(not_a_cycle());
        }
    }

    let f = ResolutionQuiver::of(a);
    let mut quotient_sum = 0;
    let mut length_sum = 0;
    for (idx, &x) in vertices.iter().enumerate() {
        let next = vertices[(idx + 1) % vertices.len()];
        if f.target(x) != next {
            return Err(not_a_cycle());
        }
        let total = a.c(x) + x;
        // total - next is a positive multiple of n (c_x >= 1, next <= n).
        if total < next || !(total - next).is_multiple_of(n) {
            return Err(Error::InternalInvariantViolated(format!(
                "c_{x} + {x} = {total} is not congruent to {next} mod {n}"
            )));
        }
        quotient_sum += (total - next) / n;
        length_sum += a.c(x);
    }
    if length_sum % n != 0 || length_sum / n != quotient_sum {
        return Err(Error::InternalInvariantViolated(format!(
            "weight mismatch on {vertices:?}: sum c = {length_sum}, n = {n}, sum k = {quotient_sum}"
        )));
    }
    Ok(quotient_sum)
}

/// All cycles of `R(A)` in canonical order with sizes and weights.
pub fn cycles(a: &AdmissibleSequence) -> Vec<Cycle> {
    cycles_of(a, &ResolutionQuiver::of(a).decompose())
}

pub(crate) fn cycles_of(a: &AdmissibleSequence, d: &ComponentDecomposition) -> Vec<Cycle> {
    d.cycles()
        .iter()
        .map(|vs| Cycle {
            vertices: vs.clone(),
            size: vs.len(),
            weight: cycle_weight(a, vs).expect("decomposition yields cycles of f_A"),
        })
        .collect()
}
