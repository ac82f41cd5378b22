//! Spanning-forest cycle bases, modular tensions, and the tension and
//! chromatic polynomials.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::flows::{for_each_coordinate, ModularAssignment};
use crate::graph::{DisjointSets, EdgeId, EdgeKind, EdgeSet, OrientedMultigraph, VertexId};
use crate::{rational, Method, RationalPolynomial};
use std::collections::{BTreeMap, VecDeque};

/// One signed fundamental cycle per co-tree edge of a spanning forest.
///
/// The row of co-tree edge `f` is `+1` at `f`, and `+1`/`-1` on the forest
/// path closing the cycle, according to whether the edge agrees with the
/// direction of traversal that keeps `f` forward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBasisMatrix {
    forest: EdgeSet,
    edges: Vec<EdgeId>,
    rows: Vec<(EdgeId, Vec<i64>)>,
}

impl CycleBasisMatrix {
    pub fn forest(&self) -> &EdgeSet {
        &self.forest
    }

    pub fn cotree(&self) -> Vec<EdgeId> {
        self.rows.iter().map(|(f, _)| *f).collect()
    }

    /// Column labels.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn rows(&self) -> &[(EdgeId, Vec<i64>)] {
        &self.rows
    }

    pub fn row(&self, f: EdgeId) -> Option<&[i64]> {
        self.rows.iter().find(|(g, _)| *g == f).map(|(_, r)| r.as_slice())
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_columns(&self) -> usize {
        self.edges.len()
    }

    /// Positions of the forest edges among the columns.
    pub fn forest_columns(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&j| self.forest.contains(&self.edges[j])).collect()
    }
}

/// Breadth-first from the earliest vertex of each component, taking
/// incident edges in order of identity.
pub fn default_spanning_forest(g: &OrientedMultigraph) -> EdgeSet {
    let ends = g.endpoint_positions();
    let n = g.num_vertices();
    let mut incident: Vec<Vec<(EdgeId, usize)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().zip(&ends) {
        if u != v {
            incident[u].push((e.id, v));
            incident[v].push((e.id, u));
        }
    }
    for list in &mut incident {
        list.sort();
    }
    let mut seen = vec![false; n];
    let mut forest = EdgeSet::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(id, w) in &incident[v] {
                if !seen[w] {
                    seen[w] = true;
                    forest.insert(id);
                    queue.push_back(w);
                }
            }
        }
    }
    forest
}

pub fn validate_forest(g: &OrientedMultigraph, forest: &EdgeSet) -> Result<()> {
    g.check_edges(forest)?;
    let index = g.vertex_index();
    let mut dsu = DisjointSets::new(g.num_vertices());
    for e in g.edges().iter().filter(|e| forest.contains(&e.id)) {
        if !dsu.union(index[&e.tail], index[&e.head]) {
            return Err(Error::InvalidForest(format!("{} closes a cycle", e.id)));
        }
    }
    if forest.len() != g.rank() {
        return Err(Error::InvalidForest(format!(
            "{} edges do not span; a spanning forest has {}",
            forest.len(),
            g.rank()
        )));
    }
    Ok(())
}

pub fn cycle_basis(g: &OrientedMultigraph, forest: Option<&EdgeSet>) -> Result<CycleBasisMatrix> {
    let forest = match forest {
        Some(t) => {
            validate_forest(g, t)?;
            t.clone()
        }
        None => default_spanning_forest(g),
    };
    let ends = g.endpoint_positions();
    let n = g.num_vertices();
    let mut tree_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (j, (e, &(u, v))) in g.edges().iter().zip(&ends).enumerate() {
        if forest.contains(&e.id) {
            tree_adj[u].push((j, v));
            tree_adj[v].push((j, u));
        }
    }

    let mut rows = Vec::new();
    for (j, (e, &(u, v))) in g.edges().iter().zip(&ends).enumerate() {
        if forest.contains(&e.id) {
            continue;
        }
        let mut row = vec![0i64; g.num_edges()];
        row[j] = 1;
        // Walk the forest path from the head v back to the tail u.
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[v] = true;
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            for &(edge, y) in &tree_adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((edge, x));
                    queue.push_back(y);
                }
            }
        }
        let mut y = u;
        while y != v {
            let (edge, x) = parent[y].expect("forest spans the component of every co-tree edge");
            // traversal x -> y along the path from v to u
            row[edge] = if ends[edge].0 == x { 1 } else { -1 };
            y = x;
        }
        rows.push((e.id, row));
    }
    Ok(CycleBasisMatrix {
        forest,
        edges: g.edge_ids().collect(),
        rows,
    })
}

pub fn is_tension(g: &OrientedMultigraph, t: &ModularAssignment) -> Result<bool> {
    let values = t.on(g)?;
    let basis = cycle_basis(g, None)?;
    let m = i64::from(t.modulus());
    Ok(basis.rows().iter().all(|(_, row)| {
        row.iter().zip(&values).map(|(a, b)| a * b).sum::<i64>().rem_euclid(m) == 0
    }))
}

/// Every `Z_l`-tension, parametrised by its values on the default spanning
/// forest. There are `l^(|V|-c)` of them.
pub fn tensions_by_forest(g: &OrientedMultigraph, l: u32, caps: &Caps) -> Result<Vec<Vec<i64>>> {
    if l == 0 {
        return Err(Error::ZeroModulus);
    }
    let basis = cycle_basis(g, None)?;
    let forest_cols = basis.forest_columns();
    caps.check_assignments("tension enumeration", l.into(), forest_cols.len())?;
    let m = i64::from(l);
    let mut out = Vec::new();
    for_each_coordinate(forest_cols.len(), 0, m, |coords| {
        out.push(complete_tension(&basis, &forest_cols, coords, m));
    });
    Ok(out)
}

/// Fills in co-tree values so every basis row sums to zero mod `m`.
pub(crate) fn complete_tension(basis: &CycleBasisMatrix, forest_cols: &[usize], coords: &[i64], m: i64) -> Vec<i64> {
    let mut t = vec![0i64; basis.num_columns()];
    for (&j, &x) in forest_cols.iter().zip(coords) {
        t[j] = x;
    }
    for (f, row) in basis.rows() {
        let j = basis.edges().iter().position(|e| e == f).expect("co-tree edge is a column");
        let rest: i64 = forest_cols.iter().map(|&c| row[c] * t[c]).sum();
        t[j] = (-rest).rem_euclid(m);
    }
    t
}

/// Every `Z_l`-tension by scanning all `l^|E|` residue vectors.
pub fn tensions_by_full_scan(g: &OrientedMultigraph, l: u32, caps: &Caps) -> Result<Vec<Vec<i64>>> {
    if l == 0 {
        return Err(Error::ZeroModulus);
    }
    caps.check_assignments("tension residue scan", l.into(), g.num_edges())?;
    let basis = cycle_basis(g, None)?;
    let m = i64::from(l);
    let mut out = Vec::new();
    for_each_coordinate(g.num_edges(), 0, m, |t| {
        let ok = basis
            .rows()
            .iter()
            .all(|(_, row)| row.iter().zip(t).map(|(a, b)| a * b).sum::<i64>().rem_euclid(m) == 0);
        if ok {
            out.push(t.to_vec());
        }
    });
    Ok(out)
}

pub fn count_nowhere_zero_tensions(g: &OrientedMultigraph, l: u32, caps: &Caps) -> Result<u64> {
    Ok(tensions_by_forest(g, l, caps)?
        .iter()
        .filter(|t| t.iter().all(|&x| x != 0))
        .count() as u64)
}

/// Sampled at `l = r+1 ..= 2r+1` with `r = |V| - c(G)` when enumerating.
pub fn tension_polynomial(g: &OrientedMultigraph, method: Method, caps: &Caps) -> Result<RationalPolynomial> {
    match method {
        Method::DeletionContraction => Ok(tension_deletion_contraction(g)),
        Method::Enumerate => {
            let r = g.rank() as u32;
            let samples = (r + 1..=2 * r + 1)
                .map(|l| Ok((i64::from(l), rational(count_nowhere_zero_tensions(g, l, caps)?))))
                .collect::<Result<Vec<_>>>()?;
            RationalPolynomial::interpolate(&samples)
        }
    }
}

fn tension_deletion_contraction(g: &OrientedMultigraph) -> RationalPolynomial {
    match g.reduction_edge() {
        None => RationalPolynomial::one(),
        Some((_, EdgeKind::Loop)) => RationalPolynomial::zero(),
        Some((e, EdgeKind::Coloop)) => {
            let rest = tension_deletion_contraction(&g.contract_edge(e).expect("edge of g"));
            &RationalPolynomial::linear_factor(1) * &rest
        }
        Some((e, EdgeKind::Ordinary)) => {
            let deleted = tension_deletion_contraction(&g.delete_edge(e).expect("edge of g"));
            let contracted = tension_deletion_contraction(&g.contract_edge(e).expect("edge of g"));
            &deleted - &contracted
        }
    }
}

/// `l^c(G) * tension(l)`.
pub fn chromatic_polynomial(g: &OrientedMultigraph) -> RationalPolynomial {
    let c = g.component_count() as u32;
    &RationalPolynomial::variable().pow(c) * &tension_deletion_contraction(g)
}

/// A map from vertices to `0..modulus`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    modulus: u32,
    values: BTreeMap<VertexId, u32>,
}

impl Coloring {
    pub fn new(modulus: u32, values: impl IntoIterator<Item = (VertexId, i64)>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let m = i64::from(modulus);
        Ok(Coloring {
            modulus,
            values: values.into_iter().map(|(v, c)| (v, c.rem_euclid(m) as u32)).collect(),
        })
    }

    /// Colors in canonical vertex order.
    pub fn from_values(g: &OrientedMultigraph, modulus: u32, colors: &[i64]) -> Result<Self> {
        assert_eq!(colors.len(), g.num_vertices(), "one color per vertex");
        Self::new(modulus, g.vertices().iter().copied().zip(colors.iter().copied()))
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.values.get(&v).copied()
    }

    pub fn on(&self, g: &OrientedMultigraph) -> Result<Vec<i64>> {
        g.vertices()
            .iter()
            .map(|&v| self.get(v).map(i64::from).ok_or(Error::MissingVertexValue(v)))
            .collect()
    }

    pub fn is_proper(&self, g: &OrientedMultigraph) -> Result<bool> {
        for e in g.edges() {
            let (a, b) = (self.get(e.tail), self.get(e.head));
            match (a, b) {
                (Some(a), Some(b)) if a == b => return Ok(false),
                (Some(_), Some(_)) => {}
                (None, _) => return Err(Error::MissingVertexValue(e.tail)),
                (_, None) => return Err(Error::MissingVertexValue(e.head)),
            }
        }
        Ok(true)
    }
}

/// `t(uv) = c(u) - c(v)` on every edge `u -> v`.
pub fn coloring_tension(g: &OrientedMultigraph, c: &Coloring) -> Result<ModularAssignment> {
    let colors = c.on(g)?;
    let ends = g.endpoint_positions();
    ModularAssignment::new(
        c.modulus(),
        g.edge_ids().zip(ends).map(|(e, (u, v))| (e, colors[u] - colors[v])),
    )
}

/// The `l^c(G)` colorings inducing `t`, ordered by the colors of the
/// component roots.
pub fn tension_colorings(g: &OrientedMultigraph, t: &ModularAssignment) -> Result<Vec<Coloring>> {
    if !is_tension(g, t)? {
        return Err(Error::NotATension);
    }
    let values = t.on(g)?;
    let m = i64::from(t.modulus());
    let ends = g.endpoint_positions();
    let n = g.num_vertices();
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for (&(u, v), &x) in ends.iter().zip(&values) {
        // c(v) = c(u) - t and c(u) = c(v) + t
        adj[u].push((v, -x));
        adj[v].push((u, x));
    }
    // Offsets relative to each component root.
    let mut offset = vec![None; n];
    let mut root_of = vec![0usize; n];
    let mut roots = Vec::new();
    for r in 0..n {
        if offset[r].is_some() {
            continue;
        }
        roots.push(r);
        offset[r] = Some(0i64);
        root_of[r] = roots.len() - 1;
        let mut queue = VecDeque::from([r]);
        while let Some(x) = queue.pop_front() {
            let ox = offset[x].expect("visited");
            for &(y, d) in &adj[x] {
                if offset[y].is_none() {
                    offset[y] = Some(ox + d);
                    root_of[y] = roots.len() - 1;
                    queue.push_back(y);
                }
            }
        }
    }
    let mut out = Vec::new();
    for_each_coordinate(roots.len(), 0, m, |root_colors| {
        let colors: Vec<i64> = (0..n)
            .map(|v| root_colors[root_of[v]] + offset[v].expect("visited"))
            .collect();
        out.push(Coloring::from_values(g, t.modulus(), &colors).expect("modulus is positive"));
    });
    Ok(out)
}
