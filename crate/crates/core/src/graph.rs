//! Oriented multigraphs with stable edge identities.
//!
//! Loops and parallel edges are allowed. Deletion, contraction, restriction
//! and reorientation all return new graphs whose surviving edges keep the
//! identities they had in the original graph, so that edge sets of a minor
//! can be compared directly with edge sets of the graph it came from.

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

pub type EdgeSet = BTreeSet<EdgeId>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: EdgeId,
    pub tail: VertexId,
    pub head: VertexId,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Loop,
    Coloop,
    Ordinary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInvariants {
    pub components: usize,
    pub cyclotomic: usize,
    pub indegree: Vec<i64>,
    pub outdegree: Vec<i64>,
}

/// Vertex-by-edge incidence matrix: head `+1`, tail `-1`, loops give a zero
/// column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: Vec<Vec<i64>>,
    edges: usize,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_columns(&self) -> usize {
        self.edges
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// `A * x` for a vector indexed in canonical edge order.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(x.len(), self.edges, "vector length must match edge count");
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedMultigraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl OrientedMultigraph {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(vertices.len());
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        let mut ids = HashSet::with_capacity(edges.len());
        for e in &edges {
            if !ids.insert(e.id) {
                return Err(Error::DuplicateEdge(e.id));
            }
            for v in [e.tail, e.head] {
                if !seen.contains(&v) {
                    return Err(Error::UnknownVertex(v));
                }
            }
        }
        Ok(OrientedMultigraph { vertices, edges })
    }

    /// Vertices `1..=n`, edges `(tail, head)` with identities `1..=m` in order.
    pub fn from_edge_list(n: u32, edges: &[(u32, u32)]) -> Result<Self> {
        let vertices = (1..=n).map(VertexId).collect();
        let edges = edges
            .iter()
            .zip(1u32..)
            .map(|(&(u, v), id)| Edge {
                id: EdgeId(id),
                tail: VertexId(u),
                head: VertexId(v),
            })
            .collect();
        Self::new(vertices, edges)
    }

    pub fn edgeless(n: u32) -> Self {
        OrientedMultigraph {
            vertices: (1..=n).map(VertexId).collect(),
            edges: Vec::new(),
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().map(|e| e.id)
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edge_ids().collect()
    }

    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn edge_position(&self, id: EdgeId) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn vertex_position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn vertex_index(&self) -> HashMap<VertexId, usize> {
        self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect()
    }

    /// Endpoints of every edge as canonical vertex positions, in edge order.
    pub fn endpoint_positions(&self) -> Vec<(usize, usize)> {
        let index = self.vertex_index();
        self.edges
            .iter()
            .map(|e| (index[&e.tail], index[&e.head]))
            .collect()
    }

    pub fn check_edges<'a>(&self, s: impl IntoIterator<Item = &'a EdgeId>) -> Result<()> {
        let ids: HashSet<EdgeId> = self.edge_ids().collect();
        for e in s {
            if !ids.contains(e) {
                return Err(Error::UnknownEdge(*e));
            }
        }
        Ok(())
    }

    pub fn delete(&self, s: &EdgeSet) -> Result<Self> {
        self.check_edges(s)?;
        Ok(OrientedMultigraph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().filter(|e| !s.contains(&e.id)).copied().collect(),
        })
    }

    pub fn delete_edge(&self, e: EdgeId) -> Result<Self> {
        self.delete(&EdgeSet::from([e]))
    }

    /// Identifies the endpoints of every edge of `s`, one vertex per connected
    /// component of `G[s]`. The merged vertex keeps the identity of the
    /// component's earliest vertex in canonical order.
    pub fn contract(&self, s: &EdgeSet) -> Result<Self> {
        self.check_edges(s)?;
        if s.is_empty() {
            return Ok(self.clone());
        }
        let positions = self.endpoint_positions();
        let mut dsu = DisjointSets::new(self.vertices.len());
        for (e, &(u, v)) in self.edges.iter().zip(&positions) {
            if s.contains(&e.id) {
                dsu.union(u, v);
            }
        }
        let rep = |i: usize, dsu: &mut DisjointSets| self.vertices[dsu.find(i)];
        let vertices = (0..self.vertices.len())
            .filter(|&i| dsu.find(i) == i)
            .map(|i| self.vertices[i])
            .collect();
        let mut edges = Vec::with_capacity(self.edges.len() - s.len());
        for (e, &(u, v)) in self.edges.iter().zip(&positions) {
            if !s.contains(&e.id) {
                edges.push(Edge {
                    id: e.id,
                    tail: rep(u, &mut dsu),
                    head: rep(v, &mut dsu),
                });
            }
        }
        Ok(OrientedMultigraph { vertices, edges })
    }

    pub fn contract_edge(&self, e: EdgeId) -> Result<Self> {
        self.contract(&EdgeSet::from([e]))
    }

    /// `G[s]`: the edges of `s` on the full vertex set.
    pub fn restrict(&self, s: &EdgeSet) -> Result<Self> {
        self.check_edges(s)?;
        Ok(OrientedMultigraph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().filter(|e| s.contains(&e.id)).copied().collect(),
        })
    }

    /// Drops every vertex without an incident edge.
    pub fn prune_isolated(&self) -> Self {
        let used: HashSet<VertexId> = self.edges.iter().flat_map(|e| [e.tail, e.head]).collect();
        OrientedMultigraph {
            vertices: self.vertices.iter().copied().filter(|v| used.contains(v)).collect(),
            edges: self.edges.clone(),
        }
    }

    pub fn reorient(&self, s: &EdgeSet) -> Result<Self> {
        self.check_edges(s)?;
        Ok(OrientedMultigraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| {
                    if s.contains(&e.id) {
                        Edge {
                            id: e.id,
                            tail: e.head,
                            head: e.tail,
                        }
                    } else {
                        *e
                    }
                })
                .collect(),
        })
    }

    pub fn classify_edge(&self, id: EdgeId) -> Result<EdgeKind> {
        let edge = self.edge(id).ok_or(Error::UnknownEdge(id))?;
        if edge.is_loop() {
            return Ok(EdgeKind::Loop);
        }
        let index = self.vertex_index();
        let mut dsu = DisjointSets::new(self.vertices.len());
        for e in self.edges.iter().filter(|e| e.id != id) {
            dsu.union(index[&e.tail], index[&e.head]);
        }
        if dsu.find(index[&edge.tail]) == dsu.find(index[&edge.head]) {
            Ok(EdgeKind::Ordinary)
        } else {
            Ok(EdgeKind::Coloop)
        }
    }

    /// The edge a deletion-contraction recursion should split on: any loop
    /// first, then any coloop, otherwise the ordinary edge of smallest
    /// identity. `None` when there are no edges.
    pub fn reduction_edge(&self) -> Option<(EdgeId, EdgeKind)> {
        if let Some(e) = self.edges.iter().filter(|e| e.is_loop()).min_by_key(|e| e.id) {
            return Some((e.id, EdgeKind::Loop));
        }
        let mut ids: Vec<EdgeId> = self.edge_ids().collect();
        ids.sort();
        let mut ordinary = None;
        for id in ids {
            match self.classify_edge(id).expect("edge belongs to graph") {
                EdgeKind::Coloop => return Some((id, EdgeKind::Coloop)),
                EdgeKind::Ordinary if ordinary.is_none() => ordinary = Some(id),
                _ => {}
            }
        }
        ordinary.map(|id| (id, EdgeKind::Ordinary))
    }

    /// Weak component of every vertex, labelled `0..c` in order of first
    /// appearance along the canonical vertex order.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut dsu = DisjointSets::new(self.vertices.len());
        for (u, v) in self.endpoint_positions() {
            dsu.union(u, v);
        }
        let mut label = HashMap::new();
        (0..self.vertices.len())
            .map(|i| {
                let root = dsu.find(i);
                let next = label.len();
                *label.entry(root).or_insert(next)
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().into_iter().max().map_or(0, |m| m + 1)
    }

    /// `|V| - c(G)`, the rank of the incidence matrix.
    pub fn rank(&self) -> usize {
        self.num_vertices() - self.component_count()
    }

    /// `|E| - |V| + c(G)`, the dimension of the flow space.
    pub fn cyclotomic_number(&self) -> usize {
        self.num_edges() - self.rank()
    }

    pub fn indegrees(&self) -> Vec<i64> {
        let index = self.vertex_index();
        let mut d = vec![0; self.vertices.len()];
        for e in &self.edges {
            d[index[&e.head]] += 1;
        }
        d
    }

    pub fn outdegrees(&self) -> Vec<i64> {
        let index = self.vertex_index();
        let mut d = vec![0; self.vertices.len()];
        for e in &self.edges {
            d[index[&e.tail]] += 1;
        }
        d
    }

    /// Undirected degrees; a loop counts twice.
    pub fn degrees(&self) -> Vec<i64> {
        self.indegrees()
            .into_iter()
            .zip(self.outdegrees())
            .map(|(i, o)| i + o)
            .collect()
    }

    pub fn invariants(&self) -> GraphInvariants {
        GraphInvariants {
            components: self.component_count(),
            cyclotomic: self.cyclotomic_number(),
            indegree: self.indegrees(),
            outdegree: self.outdegrees(),
        }
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let mut rows = vec![vec![0i64; self.edges.len()]; self.vertices.len()];
        for (j, (u, v)) in self.endpoint_positions().into_iter().enumerate() {
            if u != v {
                rows[u][j] = -1;
                rows[v][j] = 1;
            }
        }
        IncidenceMatrix {
            rows,
            edges: self.edges.len(),
        }
    }

    /// Characteristic vector of `s` in canonical edge order.
    pub fn indicator(&self, s: &EdgeSet) -> Vec<i64> {
        self.edges.iter().map(|e| i64::from(s.contains(&e.id))).collect()
    }

    /// The edge set whose canonical-order characteristic vector is `bits`
    /// read most significant first, i.e. edge `0` is bit `m - 1`.
    pub fn edge_set_from_bits(&self, bits: u64) -> EdgeSet {
        let m = self.edges.len();
        self.edges
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> (m - 1 - i) & 1 == 1)
            .map(|(_, e)| e.id)
            .collect()
    }
}

/// Union-find over `0..n` with path halving.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Joins the classes of `a` and `b`; the smaller root survives so the
    /// representative is always the earliest member. Returns `false` if they
    /// were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
