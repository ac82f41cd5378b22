//! Totally cyclic and acyclic reorientations.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, OrientedMultigraph};
use std::collections::{BTreeSet, HashSet, VecDeque};

/// A set of edges to flip.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Reorientation(pub EdgeSet);

impl Reorientation {
    pub fn flipped(&self) -> &EdgeSet {
        &self.0
    }

    pub fn apply(&self, g: &OrientedMultigraph) -> Result<OrientedMultigraph> {
        g.reorient(&self.0)
    }

    /// `e_sigma` in canonical edge order.
    pub fn characteristic_vector(&self, g: &OrientedMultigraph) -> Vec<i64> {
        g.indicator(&self.0)
    }
}

impl From<EdgeSet> for Reorientation {
    fn from(s: EdgeSet) -> Self {
        Reorientation(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrientationMode {
    TotallyCyclic,
    Acyclic,
}

/// Strongly connected component of every vertex (Kosaraju).
pub fn strong_components(g: &OrientedMultigraph) -> Vec<usize> {
    let n = g.num_vertices();
    let mut out_adj = vec![Vec::new(); n];
    let mut in_adj = vec![Vec::new(); n];
    for (u, v) in g.endpoint_positions() {
        out_adj[u].push(v);
        in_adj[v].push(u);
    }

    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![(s, 0usize)];
        while let Some((v, i)) = stack.pop() {
            if let Some(&w) = out_adj[v].get(i) {
                stack.push((v, i + 1));
                if !seen[w] {
                    seen[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
            }
        }
    }

    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for &s in order.iter().rev() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in &in_adj[v] {
                if comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Every edge lies on a directed cycle, i.e. every weak component is
/// strongly connected.
pub fn is_totally_cyclic(g: &OrientedMultigraph) -> bool {
    let comp = strong_components(g);
    g.endpoint_positions().iter().all(|&(u, v)| comp[u] == comp[v])
}

pub fn is_acyclic(g: &OrientedMultigraph) -> bool {
    cyclic_part(g).is_empty()
}

/// The edges lying on some directed cycle: the unique `S` with `G[S]`
/// totally cyclic and `G/S` acyclic.
pub fn cyclic_part(g: &OrientedMultigraph) -> EdgeSet {
    let comp = strong_components(g);
    g.edges()
        .iter()
        .zip(g.endpoint_positions())
        .filter(|(_, (u, v))| comp[*u] == comp[*v])
        .map(|(e, _)| e.id)
        .collect()
}

/// All `sigma` making `G` totally cyclic (or acyclic), ordered
/// lexicographically by characteristic vector.
pub fn enumerate_reorientations(
    g: &OrientedMultigraph,
    mode: OrientationMode,
    caps: &Caps,
) -> Result<Vec<Reorientation>> {
    caps.check_subsets("reorientation scan", g.num_edges())?;
    let test = match mode {
        OrientationMode::TotallyCyclic => is_totally_cyclic,
        OrientationMode::Acyclic => is_acyclic,
    };
    let mut out = Vec::new();
    for bits in 0..1u64 << g.num_edges() {
        let sigma = g.edge_set_from_bits(bits);
        if test(&g.reorient(&sigma)?) {
            out.push(Reorientation(sigma));
        }
    }
    Ok(out)
}

/// Whether two totally cyclic reorientations differ by reversing directed
/// cycles, decided by `A e_sigma == A e_sigma'`.
pub fn cycle_reversal_equivalent(
    g: &OrientedMultigraph,
    sigma: &Reorientation,
    other: &Reorientation,
) -> Result<bool> {
    for s in [sigma, other] {
        if !is_totally_cyclic(&s.apply(g)?) {
            return Err(Error::NotTotallyCyclic);
        }
    }
    let a = g.incidence_matrix();
    Ok(a.apply(&sigma.characteristic_vector(g)) == a.apply(&other.characteristic_vector(g)))
}

/// Simple directed cycles as edge sets. Parallel edges give distinct cycles
/// and each loop is a cycle of its own.
pub fn directed_cycles(g: &OrientedMultigraph) -> Vec<EdgeSet> {
    let n = g.num_vertices();
    let ends = g.endpoint_positions();
    let mut out_edges = vec![Vec::new(); n];
    for (j, &(u, v)) in ends.iter().enumerate() {
        out_edges[u].push((j, v));
    }
    let ids: Vec<_> = g.edge_ids().collect();
    let mut cycles = BTreeSet::new();

    // Cycles are rooted at their smallest vertex.
    fn walk(
        root: usize,
        v: usize,
        out_edges: &[Vec<(usize, usize)>],
        on_path: &mut [bool],
        path: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        for &(j, w) in &out_edges[v] {
            if w == root {
                let mut c = path.clone();
                c.push(j);
                found.push(c);
            } else if w > root && !on_path[w] {
                on_path[w] = true;
                path.push(j);
                walk(root, w, out_edges, on_path, path, found);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    for root in 0..n {
        let mut on_path = vec![false; n];
        on_path[root] = true;
        let mut found = Vec::new();
        walk(root, root, &out_edges, &mut on_path, &mut Vec::new(), &mut found);
        for c in found {
            cycles.insert(c.into_iter().map(|j| ids[j]).collect::<EdgeSet>());
        }
    }
    cycles.into_iter().collect()
}

/// Breadth-first search over single directed-cycle reversals from `sigma`;
/// true when `other` is reached.
pub fn reversal_connected(
    g: &OrientedMultigraph,
    sigma: &Reorientation,
    other: &Reorientation,
    caps: &Caps,
) -> Result<bool> {
    caps.check_subsets("cycle reversal search", g.num_edges())?;
    g.check_edges(sigma.flipped())?;
    g.check_edges(other.flipped())?;
    let mut seen = HashSet::from([sigma.clone()]);
    let mut queue = VecDeque::from([sigma.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == other {
            return Ok(true);
        }
        for cycle in directed_cycles(&cur.apply(g)?) {
            let next = Reorientation(cur.0.symmetric_difference(&cycle).copied().collect());
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}
