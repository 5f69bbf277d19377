use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex count plus an edge list with multiplicities; `u == v` is a loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize, u32)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(usize, usize, u32)>,
}

impl TryFrom<GraphJson> for Multigraph {
    type Error = Error;

    fn try_from(g: GraphJson) -> Result<Self> {
        Multigraph::new(g.vertices, g.edges)
    }
}

impl From<Multigraph> for GraphJson {
    fn from(g: Multigraph) -> Self {
        GraphJson { vertices: g.vertex_count, edges: g.edges }
    }
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize, u32)>) -> Result<Self> {
        for &(u, v, m) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{vertex_count}"
                )));
            }
            if m == 0 {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) has multiplicity 0")));
            }
        }
        Ok(Self { vertex_count, edges })
    }

    /// Simple edges `(u, v)` each with multiplicity one.
    pub fn from_simple_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(vertex_count, edges.iter().map(|&(u, v)| (u, v, 1)).collect())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(|e| e.2 as usize).sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for &(u, v, _) in &self.edges {
            uf.union(u, v);
        }
        uf.components() == 1
    }

    /// The same graph with vertex `i` renamed `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        Self {
            vertex_count: self.vertex_count,
            edges: self.edges.iter().map(|&(u, v, m)| (perm[u], perm[v], m)).collect(),
        }
    }

    pub(crate) fn to_edge_map(&self) -> EdgeMap {
        let mut map = BTreeMap::new();
        for &(u, v, m) in &self.edges {
            *map.entry((u.min(v), u.max(v))).or_insert(0) += m;
        }
        EdgeMap { n: self.vertex_count, edges: map }
    }
}

/// Normalized working form: endpoints ordered, parallel edges merged.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct EdgeMap {
    pub n: usize,
    pub edges: BTreeMap<(usize, usize), u32>,
}

impl EdgeMap {
    /// Removes one copy of the edge `(u, v)`.
    pub fn delete_one(&self, e: (usize, usize)) -> Self {
        let mut out = self.clone();
        let m = out.edges.get_mut(&e).expect("edge present");
        *m -= 1;
        if *m == 0 {
            out.edges.remove(&e);
        }
        out
    }

    /// Contracts one copy of the non-loop edge `(u, v)`; the remaining copies
    /// become loops at the merged vertex.
    pub fn contract_one(&self, (u, v): (usize, usize)) -> Self {
        debug_assert!(u < v);
        let rename = |w: usize| -> usize {
            let w = if w == v { u } else { w };
            if w > v {
                w - 1
            } else {
                w
            }
        };
        let reduced = self.delete_one((u, v));
        let mut edges = BTreeMap::new();
        for (&(a, b), &m) in &reduced.edges {
            let (a, b) = (rename(a), rename(b));
            *edges.entry((a.min(b), a.max(b))).or_insert(0) += m;
        }
        Self { n: self.n - 1, edges }
    }

    /// Single-multiplicity non-loop edges whose removal disconnects the graph.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let simple: Vec<(usize, usize)> =
            self.edges.iter().filter(|(&(a, b), &m)| a != b && m == 1).map(|(&e, _)| e).collect();
        simple
            .into_iter()
            .filter(|&e| {
                let mut uf = UnionFind::new(self.n);
                for &(a, b) in self.edges.keys() {
                    if (a, b) != e {
                        uf.union(a, b);
                    }
                }
                uf.find(e.0) != uf.find(e.1)
            })
            .collect()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }

    pub fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}
