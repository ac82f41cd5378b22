//! Brute-force counters for the reciprocity statements.
//!
//! Everything here is deliberately naive and shares no code with the
//! polynomial engines beyond the graph type: flows come from full residue
//! scans, tensions from the image of the coloring map, and orientation
//! properties from plain reachability.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::flows::ModularAssignment;
use crate::graph::{EdgeId, EdgeKind, EdgeSet, OrientedMultigraph};
use crate::orient::Reorientation;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// Calls `visit` on every vector in `0..base` per coordinate.
fn scan(len: usize, base: i64, mut visit: impl FnMut(&[i64])) {
    let mut cur = vec![0i64; len];
    if base <= 0 && len > 0 {
        return;
    }
    'outer: loop {
        visit(&cur);
        for i in (0..len).rev() {
            cur[i] += 1;
            if cur[i] < base {
                continue 'outer;
            }
            cur[i] = 0;
        }
        return;
    }
}

fn reachable_from(n: usize, ends: &[(usize, usize)], start: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &(u, v) in ends {
            if u == x && !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

/// Whether each edge `u -> v` closes a directed cycle, i.e. `u` is
/// reachable from `v`.
fn edges_on_cycles(g: &OrientedMultigraph) -> Vec<bool> {
    let ends = g.endpoint_positions();
    let n = g.num_vertices();
    let reach: Vec<Vec<bool>> = (0..n).map(|s| reachable_from(n, &ends, s)).collect();
    ends.iter().map(|&(u, v)| reach[v][u]).collect()
}

pub fn totally_cyclic(g: &OrientedMultigraph) -> bool {
    edges_on_cycles(g).into_iter().all(|c| c)
}

pub fn acyclic(g: &OrientedMultigraph) -> bool {
    !edges_on_cycles(g).into_iter().any(|c| c)
}

/// The edges lying on directed cycles.
pub fn cycle_edges(g: &OrientedMultigraph) -> EdgeSet {
    g.edge_ids().zip(edges_on_cycles(g)).filter(|(_, c)| *c).map(|(e, _)| e).collect()
}

fn subsets_of(s: &EdgeSet) -> impl Iterator<Item = EdgeSet> + '_ {
    let items: Vec<EdgeId> = s.iter().copied().collect();
    (0..1u64 << items.len()).map(move |bits| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    })
}

fn count_reorientations(g: &OrientedMultigraph, free: &EdgeSet, test: fn(&OrientedMultigraph) -> bool) -> u64 {
    subsets_of(free)
        .filter(|s| test(&g.reorient(s).expect("free edges belong to g")))
        .count() as u64
}

/// Every `Z_k`-flow, by checking conservation on all `k^|E|` vectors.
pub fn all_flows(g: &OrientedMultigraph, k: u32, caps: &Caps) -> Result<Vec<Vec<i64>>> {
    if k == 0 {
        return Err(Error::ZeroModulus);
    }
    caps.check_assignments("flow scan", k.into(), g.num_edges())?;
    let ends = g.endpoint_positions();
    let m = i64::from(k);
    let mut out = Vec::new();
    scan(g.num_edges(), m, |f| {
        let mut net = vec![0i64; g.num_vertices()];
        for (&(u, v), &x) in ends.iter().zip(f) {
            net[v] += x;
            net[u] -= x;
        }
        if net.iter().all(|x| x.rem_euclid(m) == 0) {
            out.push(f.to_vec());
        }
    });
    Ok(out)
}

/// Every `Z_l`-tension, as the set of edge differences of all colorings.
pub fn all_tensions(g: &OrientedMultigraph, l: u32, caps: &Caps) -> Result<Vec<Vec<i64>>> {
    if l == 0 {
        return Err(Error::ZeroModulus);
    }
    caps.check_assignments("coloring scan", l.into(), g.num_vertices())?;
    let ends = g.endpoint_positions();
    let m = i64::from(l);
    let mut out = BTreeSet::new();
    scan(g.num_vertices(), m, |c| {
        out.insert(ends.iter().map(|&(u, v)| (c[u] - c[v]).rem_euclid(m)).collect::<Vec<_>>());
    });
    Ok(out.into_iter().collect())
}

fn support(g: &OrientedMultigraph, values: &[i64]) -> EdgeSet {
    g.edge_ids().zip(values).filter(|(_, &x)| x != 0).map(|(e, _)| e).collect()
}

fn complement(g: &OrientedMultigraph, s: &EdgeSet) -> EdgeSet {
    g.edge_ids().filter(|e| !s.contains(e)).collect()
}

/// Pairs `(f, sigma)` with `f` a `Z_k`-flow and `sigma` a subset of the
/// edges outside its support making `G/supp(f)` totally cyclic, tallied by
/// `|supp(f)|`.
pub fn flow_pair_census(g: &OrientedMultigraph, k: u32, caps: &Caps) -> Result<BTreeMap<usize, u64>> {
    caps.check_subsets("flow pair count", g.num_edges())?;
    let mut per_support: HashMap<EdgeSet, u64> = HashMap::new();
    let mut census = BTreeMap::new();
    for f in all_flows(g, k, caps)? {
        let s = support(g, &f);
        let size = s.len();
        let count = match per_support.get(&s) {
            Some(&c) => c,
            None => {
                let c = count_reorientations(&g.contract(&s)?, &complement(g, &s), totally_cyclic);
                per_support.insert(s, c);
                c
            }
        };
        *census.entry(size).or_insert(0) += count;
    }
    Ok(census)
}

pub fn count_flow_pairs(g: &OrientedMultigraph, k: u32, caps: &Caps) -> Result<u64> {
    Ok(flow_pair_census(g, k, caps)?.values().sum())
}

/// Pairs `(t, sigma)` with `t` a `Z_l`-tension and `sigma` a subset of the
/// edges outside its support making `G\supp(t)` acyclic.
pub fn count_tension_pairs(g: &OrientedMultigraph, l: u32, caps: &Caps) -> Result<u64> {
    caps.check_subsets("tension pair count", g.num_edges())?;
    let mut per_support: HashMap<EdgeSet, u64> = HashMap::new();
    let mut total = 0;
    for t in all_tensions(g, l, caps)? {
        let s = support(g, &t);
        total += match per_support.get(&s) {
            Some(&c) => c,
            None => {
                let c = count_reorientations(&g.delete(&s)?, &complement(g, &s), acyclic);
                per_support.insert(s, c);
                c
            }
        };
    }
    Ok(total)
}

/// Pairs of an `l`-coloring and an acyclic reorientation along whose edges
/// colors never decrease from tail to head.
pub fn count_stanley_pairs(g: &OrientedMultigraph, l: u32, caps: &Caps) -> Result<u64> {
    caps.check_subsets("Stanley pair count", g.num_edges())?;
    caps.check_assignments("coloring scan", l.into(), g.num_vertices())?;
    let acyclic_ends: Vec<Vec<(usize, usize)>> = subsets_of(&g.edge_set())
        .map(|s| g.reorient(&s).expect("edges of g"))
        .filter(acyclic)
        .map(|h| h.endpoint_positions())
        .collect();
    let mut total = 0;
    scan(g.num_vertices(), l.into(), |c| {
        total += acyclic_ends
            .iter()
            .filter(|ends| ends.iter().all(|&(u, v)| c[u] <= c[v]))
            .count() as u64;
    });
    Ok(total)
}

/// Triples `(f, t, sigma)`: a `Z_k`-flow and a `Z_l`-tension with disjoint
/// supports, and any reorientation of the remaining edges.
pub fn count_tutte_triples(g: &OrientedMultigraph, l: u32, k: u32, caps: &Caps) -> Result<u64> {
    caps.check_subsets("triple count", g.num_edges())?;
    let flows: Vec<EdgeSet> = all_flows(g, k, caps)?.iter().map(|f| support(g, f)).collect();
    let tensions: Vec<EdgeSet> = all_tensions(g, l, caps)?.iter().map(|t| support(g, t)).collect();
    let mut total = 0u64;
    for sf in &flows {
        for st in &tensions {
            if sf.is_disjoint(st) {
                total += 1 << (g.num_edges() - sf.len() - st.len());
            }
        }
    }
    Ok(total)
}

fn nowhere_zero_flows(g: &OrientedMultigraph, k: u32, caps: &Caps) -> Result<u64> {
    Ok(all_flows(g, k, caps)?.iter().filter(|f| f.iter().all(|&x| x != 0)).count() as u64)
}

fn nowhere_zero_tensions(g: &OrientedMultigraph, l: u32, caps: &Caps) -> Result<u64> {
    Ok(all_tensions(g, l, caps)?.iter().filter(|t| t.iter().all(|&x| x != 0)).count() as u64)
}

/// `sum_{S <= T <= E} 2^|T\S| phi_{G[S]}(k) tau_{G/T}(l)`, every factor
/// counted directly.
pub fn reiner_sum(g: &OrientedMultigraph, l: u32, k: u32, caps: &Caps) -> Result<u64> {
    caps.check_subsets("nested subset sum", g.num_edges())?;
    let m = g.num_edges();
    let mut phi = vec![0u64; 1 << m];
    let mut tau = vec![0u64; 1 << m];
    for bits in 0..1u64 << m {
        let s = g.edge_set_from_bits(bits);
        phi[bits as usize] = nowhere_zero_flows(&g.restrict(&s)?.prune_isolated(), k, caps)?;
        tau[bits as usize] = nowhere_zero_tensions(&g.contract(&s)?.prune_isolated(), l, caps)?;
    }
    let mut total = 0u64;
    for t in 0..1u64 << m {
        if tau[t as usize] == 0 {
            continue;
        }
        // every S contained in T
        let mut s = t;
        loop {
            let gap = (t & !s).count_ones();
            total += (1 << gap) * phi[s as usize] * tau[t as usize];
            if s == 0 {
                break;
            }
            s = (s - 1) & t;
        }
    }
    Ok(total)
}

/// A flow, a tension and a reorientation as counted by
/// [`count_tutte_triples`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TutteTriple {
    pub flow: ModularAssignment,
    pub tension: ModularAssignment,
    pub sigma: Reorientation,
}

impl TutteTriple {
    pub fn validate(&self, g: &OrientedMultigraph) -> Result<()> {
        let f = self.flow.on(g)?;
        let t = self.tension.on(g)?;
        g.check_edges(self.sigma.flipped())?;
        if !is_flow_on(g, &f, self.flow.modulus().into()) {
            return Err(Error::InvalidTriple("not a flow"));
        }
        if !is_tension_on(g, &t, self.tension.modulus().into()) {
            return Err(Error::InvalidTriple("not a tension"));
        }
        let (sf, st) = (support(g, &f), support(g, &t));
        if !sf.is_disjoint(&st) {
            return Err(Error::InvalidTriple("supports overlap"));
        }
        if self.sigma.flipped().iter().any(|e| sf.contains(e) || st.contains(e)) {
            return Err(Error::InvalidTriple("reorientation meets a support"));
        }
        Ok(())
    }
}

fn is_flow_on(g: &OrientedMultigraph, f: &[i64], m: i64) -> bool {
    let mut net = vec![0i64; g.num_vertices()];
    for (&(u, v), &x) in g.endpoint_positions().iter().zip(f) {
        net[v] += x;
        net[u] -= x;
    }
    net.iter().all(|x| x.rem_euclid(m) == 0)
}

/// Whether a potential `c` with `t(uv) = c(u) - c(v)` exists, found by
/// propagating values outwards from each vertex.
fn is_tension_on(g: &OrientedMultigraph, t: &[i64], m: i64) -> bool {
    let ends = g.endpoint_positions();
    let mut potential: Vec<Option<i64>> = vec![None; g.num_vertices()];
    for start in 0..g.num_vertices() {
        if potential[start].is_some() {
            continue;
        }
        potential[start] = Some(0);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for (&(u, v), &val) in ends.iter().zip(t) {
                let (other, want) = if u == x {
                    (v, potential[x].unwrap() - val)
                } else if v == x {
                    (u, potential[x].unwrap() + val)
                } else {
                    continue;
                };
                match potential[other] {
                    None => {
                        potential[other] = Some(want);
                        stack.push(other);
                    }
                    Some(p) if (p - want).rem_euclid(m) != 0 => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

fn values_on(g: &OrientedMultigraph, a: &ModularAssignment) -> Vec<i64> {
    g.edge_ids().map(|e| a.get(e).map_or(0, i64::from)).collect()
}

/// Whether `s` splits the triple: `f` a flow on `G[S]` whose remaining
/// edges are made totally cyclic by `sigma`, and `t` a tension on `G/S`
/// whose remaining edges are made acyclic by `sigma`.
pub fn is_split(g: &OrientedMultigraph, triple: &TutteTriple, s: &EdgeSet) -> Result<bool> {
    let sf = triple.flow.support();
    let st = triple.tension.support();
    if !sf.is_subset(s) || !st.is_disjoint(s) {
        return Ok(false);
    }
    let inner = g.restrict(s)?;
    if !is_flow_on(&inner, &values_on(&inner, &triple.flow), triple.flow.modulus().into()) {
        return Ok(false);
    }
    let sigma = triple.sigma.flipped();
    let inside: EdgeSet = sigma.intersection(s).copied().collect();
    if !totally_cyclic(&inner.contract(&sf)?.reorient(&inside)?) {
        return Ok(false);
    }
    let outer = g.contract(s)?;
    if !is_tension_on(&outer, &values_on(&outer, &triple.tension), triple.tension.modulus().into()) {
        return Ok(false);
    }
    let outside: EdgeSet = sigma.difference(s).copied().collect();
    Ok(acyclic(&outer.delete(&st)?.reorient(&outside)?))
}

/// The split set: `supp(f)` together with the edges on directed cycles of
/// `(G/supp f)\supp t` reoriented along `sigma`.
pub fn unique_split_witness(g: &OrientedMultigraph, triple: &TutteTriple) -> Result<EdgeSet> {
    triple.validate(g)?;
    let sf = triple.flow.support();
    let minor = g
        .contract(&sf)?
        .delete(&triple.tension.support())?
        .reorient(triple.sigma.flipped())?;
    let mut s = cycle_edges(&minor);
    s.extend(sf);
    Ok(s)
}

/// Every `S` passing [`is_split`], by scanning all edge subsets.
pub fn split_sets(g: &OrientedMultigraph, triple: &TutteTriple, caps: &Caps) -> Result<Vec<EdgeSet>> {
    caps.check_subsets("split scan", g.num_edges())?;
    let mut out = Vec::new();
    for bits in 0..1u64 << g.num_edges() {
        let s = g.edge_set_from_bits(bits);
        if is_split(g, triple, &s)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// Every `S` with `G[S]` totally cyclic and `G/S` acyclic.
pub fn cyclic_part_candidates(g: &OrientedMultigraph, caps: &Caps) -> Result<Vec<EdgeSet>> {
    caps.check_subsets("cyclic part scan", g.num_edges())?;
    let mut out = Vec::new();
    for bits in 0..1u64 << g.num_edges() {
        let s = g.edge_set_from_bits(bits);
        if totally_cyclic(&g.restrict(&s)?) && acyclic(&g.contract(&s)?) {
            out.push(s);
        }
    }
    Ok(out)
}

/// Every triple of `g` at moduli `(l, k)`.
pub fn all_tutte_triples(g: &OrientedMultigraph, l: u32, k: u32, caps: &Caps) -> Result<Vec<TutteTriple>> {
    caps.check_subsets("triple listing", g.num_edges())?;
    let flows = all_flows(g, k, caps)?;
    let tensions = all_tensions(g, l, caps)?;
    let mut out = Vec::new();
    for f in &flows {
        let sf = support(g, f);
        for t in &tensions {
            let st = support(g, t);
            if !sf.is_disjoint(&st) {
                continue;
            }
            let rest: EdgeSet = g.edge_ids().filter(|e| !sf.contains(e) && !st.contains(e)).collect();
            for sigma in subsets_of(&rest) {
                out.push(TutteTriple {
                    flow: ModularAssignment::from_values(g, k, f)?,
                    tension: ModularAssignment::from_values(g, l, t)?,
                    sigma: Reorientation(sigma),
                });
            }
        }
    }
    Ok(out)
}

/// One clause of a deletion-contraction recursion, evaluated on an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionClause {
    /// `None` for the edgeless base case.
    pub edge: Option<EdgeId>,
    pub kind: Option<EdgeKind>,
    pub lhs: u64,
    pub rhs: u64,
}

impl RecursionClause {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn label(&self) -> String {
        match (self.edge, self.kind) {
            (Some(e), Some(EdgeKind::Loop)) => format!("{e} loop"),
            (Some(e), Some(EdgeKind::Coloop)) => format!("{e} coloop"),
            (Some(e), _) => format!("{e} ordinary"),
            (None, _) => "empty".to_string(),
        }
    }
}

/// The pair count `R` checked against `R = 1` when edgeless, `0` across a
/// coloop, `(k + 1) R(G\e)` across a loop and `R(G\e) + R(G/e)` otherwise,
/// for every edge.
pub fn appendix_recursion_clauses(g: &OrientedMultigraph, k: u32, caps: &Caps) -> Result<Vec<RecursionClause>> {
    let r = count_flow_pairs(g, k, caps)?;
    if g.num_edges() == 0 {
        return Ok(vec![RecursionClause {
            edge: None,
            kind: None,
            lhs: r,
            rhs: 1,
        }]);
    }
    let mut out = Vec::new();
    for e in g.edge_ids() {
        let kind = g.classify_edge(e)?;
        let rhs = match kind {
            EdgeKind::Coloop => 0,
            EdgeKind::Loop => (u64::from(k) + 1) * count_flow_pairs(&g.delete_edge(e)?, k, caps)?,
            EdgeKind::Ordinary => {
                count_flow_pairs(&g.delete_edge(e)?, k, caps)? + count_flow_pairs(&g.contract_edge(e)?, k, caps)?
            }
        };
        out.push(RecursionClause {
            edge: Some(e),
            kind: Some(kind),
            lhs: r,
            rhs,
        });
    }
    Ok(out)
}

pub fn appendix_recursion_check(g: &OrientedMultigraph, k: u32, caps: &Caps) -> Result<bool> {
    Ok(appendix_recursion_clauses(g, k, caps)?.iter().all(RecursionClause::holds))
}

/// The triple count `T` checked against `T = l^[coloop] T(G\e) + k^[loop]
/// T(G/e)` for every edge.
pub fn triple_recursion_clauses(g: &OrientedMultigraph, l: u32, k: u32, caps: &Caps) -> Result<Vec<RecursionClause>> {
    let total = count_tutte_triples(g, l, k, caps)?;
    let mut out = Vec::new();
    for e in g.edge_ids() {
        let kind = g.classify_edge(e)?;
        let del = count_tutte_triples(&g.delete_edge(e)?, l, k, caps)?;
        let con = count_tutte_triples(&g.contract_edge(e)?, l, k, caps)?;
        let a = if kind == EdgeKind::Coloop { u64::from(l) } else { 1 };
        let b = if kind == EdgeKind::Loop { u64::from(k) } else { 1 };
        out.push(RecursionClause {
            edge: Some(e),
            kind: Some(kind),
            lhs: total,
            rhs: a * del + b * con,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: u32, edges: &[(u32, u32)]) -> OrientedMultigraph {
        OrientedMultigraph::from_edge_list(n, edges).unwrap()
    }

    fn g1() -> OrientedMultigraph {
        graph(2, &[(1, 2), (1, 2), (1, 2)])
    }

    fn g2() -> OrientedMultigraph {
        graph(3, &[(1, 2), (2, 3), (2, 3), (3, 1), (3, 1)])
    }

    fn triangle() -> OrientedMultigraph {
        graph(3, &[(1, 2), (2, 3), (3, 1)])
    }

    #[test]
    fn orientation_predicates() {
        assert!(totally_cyclic(&graph(1, &[(1, 1)])));
        assert!(!acyclic(&graph(1, &[(1, 1)])));
        assert!(!totally_cyclic(&graph(2, &[(1, 2)])));
        assert!(acyclic(&graph(2, &[(1, 2)])));
        assert!(!acyclic(&triangle()));
        assert!(totally_cyclic(&OrientedMultigraph::edgeless(2)));
    }

    #[test]
    fn flow_pairs() {
        let caps = Caps::default();
        assert_eq!(count_flow_pairs(&g1(), 2, &caps).unwrap(), 12);
        assert_eq!(count_flow_pairs(&g1(), 1, &caps).unwrap(), 6);
        assert_eq!(count_flow_pairs(&g2(), 1, &caps).unwrap(), 18);
        for k in 1..5u64 {
            let census = flow_pair_census(&g1(), k as u32, &caps).unwrap();
            let expected: BTreeMap<usize, u64> =
                [(0, 6), (2, 6 * (k - 1)), (3, (k - 1) * (k.saturating_sub(2)))]
                    .into_iter()
                    .filter(|&(_, c)| c > 0)
                    .collect();
            assert_eq!(census, expected, "k={k}");
        }
    }

    #[test]
    fn tension_and_stanley_pairs() {
        let caps = Caps::default();
        assert_eq!(count_tension_pairs(&triangle(), 1, &caps).unwrap(), 6);
        for l in 1..5u32 {
            assert_eq!(count_tension_pairs(&graph(2, &[(1, 2)]), l, &caps).unwrap(), u64::from(l) + 1);
            assert_eq!(count_stanley_pairs(&OrientedMultigraph::edgeless(3), l, &caps).unwrap(), u64::from(l).pow(3));
        }
        assert_eq!(count_tension_pairs(&graph(2, &[(1, 2), (2, 2)]), 3, &caps).unwrap(), 0);
        assert_eq!(count_stanley_pairs(&triangle(), 1, &caps).unwrap(), 6);
        assert_eq!(count_stanley_pairs(&graph(2, &[(1, 2)]), 1, &caps).unwrap(), 2);
    }

    /// Reading compatibility head-to-tail instead of tail-to-head gives the
    /// same count.
    #[test]
    fn stanley_count_ignores_edge_direction_convention() {
        let caps = Caps::default();
        for g in crate::corpus::exhaustive(3, 3) {
            for l in 1..=3u32 {
                let mut swapped = 0u64;
                for s in subsets_of(&g.edge_set()) {
                    let h = g.reorient(&s).unwrap();
                    if !acyclic(&h) {
                        continue;
                    }
                    let ends = h.endpoint_positions();
                    scan(g.num_vertices(), l.into(), |c| {
                        if ends.iter().all(|&(u, v)| c[u] >= c[v]) {
                            swapped += 1;
                        }
                    });
                }
                assert_eq!(count_stanley_pairs(&g, l, &caps).unwrap(), swapped, "{g:?} l={l}");
            }
        }
    }

    #[test]
    fn triples_and_nested_sums() {
        let caps = Caps::default();
        assert_eq!(count_tutte_triples(&g1(), 1, 1, &caps).unwrap(), 8);
        assert_eq!(count_tutte_triples(&g1(), 2, 2, &caps).unwrap(), 15);
        assert_eq!(reiner_sum(&g1(), 1, 1, &caps).unwrap(), 8);
        assert_eq!(reiner_sum(&OrientedMultigraph::edgeless(2), 2, 3, &caps).unwrap(), 1);
        for g in [g1(), triangle(), g2()] {
            for (l, k) in [(1, 1), (2, 2), (1, 3), (3, 2)] {
                assert_eq!(count_tutte_triples(&g, l, k, &caps).unwrap(), reiner_sum(&g, l, k, &caps).unwrap());
            }
            assert_eq!(all_tutte_triples(&g, 2, 2, &caps).unwrap().len() as u64, count_tutte_triples(&g, 2, 2, &caps).unwrap());
        }
    }

    #[test]
    fn split_witnesses() {
        let caps = Caps::default();
        let g = g1();
        let zero = |m| ModularAssignment::zero(&g, m).unwrap();
        let cyclic = TutteTriple {
            flow: zero(2),
            tension: zero(2),
            sigma: Reorientation([EdgeId(1)].into()),
        };
        assert_eq!(unique_split_witness(&g, &cyclic).unwrap(), g.edge_set());
        let path = graph(3, &[(1, 2), (2, 3)]);
        let acyclic_triple = TutteTriple {
            flow: ModularAssignment::zero(&path, 2).unwrap(),
            tension: ModularAssignment::zero(&path, 2).unwrap(),
            sigma: Reorientation::default(),
        };
        assert!(unique_split_witness(&path, &acyclic_triple).unwrap().is_empty());
        for g in [g1(), triangle(), graph(3, &[(1, 2), (2, 1), (2, 3), (3, 3)])] {
            for triple in all_tutte_triples(&g, 2, 2, &caps).unwrap() {
                let witness = unique_split_witness(&g, &triple).unwrap();
                assert_eq!(split_sets(&g, &triple, &caps).unwrap(), vec![witness]);
            }
        }
        let bad = TutteTriple {
            flow: ModularAssignment::from_values(&g, 3, &[1, 0, 0]).unwrap(),
            tension: zero(3),
            sigma: Reorientation::default(),
        };
        assert_eq!(unique_split_witness(&g, &bad), Err(Error::InvalidTriple("not a flow")));
    }

    #[test]
    fn cyclic_parts_are_unique() {
        let caps = Caps::default();
        let g = graph(4, &[(1, 2), (2, 3), (3, 1), (3, 4)]);
        let candidates = cyclic_part_candidates(&g, &caps).unwrap();
        assert_eq!(candidates, vec![[EdgeId(1), EdgeId(2), EdgeId(3)].into()]);
        assert_eq!(candidates[0], crate::orient::cyclic_part(&g));
    }

    #[test]
    fn recursions() {
        let caps = Caps::default();
        for g in [g1(), g2(), graph(2, &[(1, 2), (2, 2)]), OrientedMultigraph::edgeless(1)] {
            for k in 1..3 {
                assert!(appendix_recursion_check(&g, k, &caps).unwrap());
                assert!(triple_recursion_clauses(&g, 2, k, &caps).unwrap().iter().all(RecursionClause::holds));
            }
        }
        let clauses = appendix_recursion_clauses(&graph(2, &[(1, 2)]), 2, &caps).unwrap();
        assert_eq!(clauses[0].label(), "e1 coloop");
        assert_eq!((clauses[0].lhs, clauses[0].rhs), (0, 0));
    }
}
