//! Lattice points in the slices `{0 <= f <= k, A f = k b}` of the cube,
//! their Ehrhart polynomials, the in-degree description of the feasible
//! right-hand sides, and inside-out counts over a spanning forest.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::flows::{combine_rows, for_each_coordinate, ModularAssignment};
use crate::graph::{EdgeSet, OrientedMultigraph};
use crate::orient::{enumerate_reorientations, OrientationMode, Reorientation};
use crate::tensions::{complete_tension, cycle_basis, CycleBasisMatrix};
use crate::{rational, sign, Integer, Rational, RationalPolynomial};
use std::collections::BTreeSet;
use std::fmt;

/// A right-hand side `b`, indexed by the canonical vertex order. The derived
/// ordering is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FeasibleRhs(pub Vec<i64>);

impl fmt::Display for FeasibleRhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Which lattice points of `k P(b)` are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Openness {
    /// `0 < f_e < k`
    Open,
    /// `0 <= f_e <= k`
    Closed,
}

/// The face of `k P(b)` carrying a lattice point: coordinates at `0`,
/// strictly inside, and at `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FacePartition {
    pub sigma_minus: EdgeSet,
    pub sigma_zero: EdgeSet,
    pub sigma_plus: EdgeSet,
}

impl FacePartition {
    pub fn of_point(g: &OrientedMultigraph, f: &[i64], k: i64) -> Self {
        let mut face = FacePartition {
            sigma_minus: EdgeSet::new(),
            sigma_zero: EdgeSet::new(),
            sigma_plus: EdgeSet::new(),
        };
        for (id, &x) in g.edge_ids().zip(f) {
            if x <= 0 {
                face.sigma_minus.insert(id);
            } else if x >= k {
                face.sigma_plus.insert(id);
            } else {
                face.sigma_zero.insert(id);
            }
        }
        face
    }
}

/// `{A e_sigma : sigma totally cyclic}`, deduplicated and sorted.
pub fn feasible_b_set(g: &OrientedMultigraph, caps: &Caps) -> Result<Vec<FeasibleRhs>> {
    let a = g.incidence_matrix();
    let set: BTreeSet<FeasibleRhs> = enumerate_reorientations(g, OrientationMode::TotallyCyclic, caps)?
        .iter()
        .map(|s| FeasibleRhs(a.apply(&s.characteristic_vector(g))))
        .collect();
    Ok(set.into_iter().collect())
}

fn check_rhs(g: &OrientedMultigraph, b: &FeasibleRhs) -> Result<()> {
    if b.0.len() != g.num_vertices() {
        return Err(Error::RhsLength {
            expected: g.num_vertices(),
            found: b.0.len(),
        });
    }
    Ok(())
}

fn check_feasible(g: &OrientedMultigraph, b: &FeasibleRhs, caps: &Caps) -> Result<()> {
    check_rhs(g, b)?;
    if feasible_b_set(g, caps)?.contains(b) {
        Ok(())
    } else {
        Err(Error::InfeasibleRhs(b.0.clone()))
    }
}

/// A forest-supported `p` with `A p = target`, found by peeling leaves
/// towards each component root. `None` when some component's target does
/// not sum to zero.
fn forest_solution(g: &OrientedMultigraph, forest: &EdgeSet, target: &[i64]) -> Option<Vec<i64>> {
    let n = g.num_vertices();
    let ends = g.endpoint_positions();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (j, (e, &(u, v))) in g.edges().iter().zip(&ends).enumerate() {
        if forest.contains(&e.id) {
            adj[u].push((j, v));
            adj[v].push((j, u));
        }
    }
    let mut parent_edge = vec![None; n];
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut roots = Vec::new();
    for r in 0..n {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        roots.push(r);
        let mut stack = vec![r];
        while let Some(x) = stack.pop() {
            order.push(x);
            for &(j, y) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent_edge[y] = Some(j);
                    stack.push(y);
                }
            }
        }
    }
    let mut p = vec![0i64; g.num_edges()];
    // Remaining demand at each vertex once its subtree is settled.
    let mut demand = target.to_vec();
    for &x in order.iter().rev() {
        let Some(j) = parent_edge[x] else { continue };
        let (tail, head) = ends[j];
        // Column j contributes +p_j at the head and -p_j at the tail.
        let (here, there, s) = if head == x { (head, tail, 1) } else { (tail, head, -1) };
        p[j] = s * demand[here];
        demand[there] += s * p[j];
        demand[here] = 0;
    }
    roots.iter().all(|&r| demand[r] == 0).then_some(p)
}

fn coordinate_range(openness: Openness, k: i64) -> (i64, i64) {
    match openness {
        Openness::Open => (1, k),
        Openness::Closed => (0, k + 1),
    }
}

/// Integer points `f` with `A f = k b` and each `f_e` in the range given by
/// `openness`, listed by increasing co-tree coordinates.
pub fn fiber_points(
    g: &OrientedMultigraph,
    b: &FeasibleRhs,
    k: u32,
    openness: Openness,
    caps: &Caps,
) -> Result<Vec<Vec<i64>>> {
    check_rhs(g, b)?;
    let k = i64::from(k);
    let basis = cycle_basis(g, None)?;
    let (lo, hi) = coordinate_range(openness, k);
    let width = u64::try_from(hi - lo).unwrap_or(0);
    caps.check_assignments("fiber enumeration", width, basis.num_rows())?;
    let target: Vec<i64> = b.0.iter().map(|x| k * x).collect();
    let Some(p) = forest_solution(g, basis.forest(), &target) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for_each_coordinate(basis.num_rows(), lo, hi, |h| {
        let f = offset_combination(&basis, &p, h);
        if f.iter().all(|&x| lo <= x && x < hi) {
            out.push(f);
        }
    });
    Ok(out)
}

/// `p + h C` over the integers.
fn offset_combination(basis: &CycleBasisMatrix, p: &[i64], h: &[i64]) -> Vec<i64> {
    let mut f = p.to_vec();
    for (coef, (_, row)) in h.iter().zip(basis.rows()) {
        for (x, r) in f.iter_mut().zip(row) {
            *x += coef * r;
        }
    }
    f
}

pub fn count_fiber_points(
    g: &OrientedMultigraph,
    b: &FeasibleRhs,
    k: u32,
    openness: Openness,
    caps: &Caps,
) -> Result<u64> {
    Ok(fiber_points(g, b, k, openness, caps)?.len() as u64)
}

/// The same count by scanning the whole box of edge values.
pub fn count_fiber_points_box_scan(
    g: &OrientedMultigraph,
    b: &FeasibleRhs,
    k: u32,
    openness: Openness,
    caps: &Caps,
) -> Result<u64> {
    check_rhs(g, b)?;
    let k = i64::from(k);
    let (lo, hi) = coordinate_range(openness, k);
    let width = u64::try_from(hi - lo).unwrap_or(0);
    caps.check_assignments("fiber box scan", width, g.num_edges())?;
    let a = g.incidence_matrix();
    let target: Vec<i64> = b.0.iter().map(|x| k * x).collect();
    let mut count = 0;
    for_each_coordinate(g.num_edges(), lo, hi, |f| {
        if a.apply(f) == target {
            count += 1;
        }
    });
    Ok(count)
}

/// Closed counts at `k = 0..=xi(G)`, interpolated.
pub fn ehrhart_polynomial(g: &OrientedMultigraph, b: &FeasibleRhs, caps: &Caps) -> Result<RationalPolynomial> {
    check_feasible(g, b, caps)?;
    let xi = g.cyclotomic_number() as u32;
    let samples = (0..=xi)
        .map(|k| Ok((i64::from(k), rational(count_fiber_points(g, b, k, Openness::Closed, caps)?))))
        .collect::<Result<Vec<_>>>()?;
    RationalPolynomial::interpolate(&samples)
}

/// Both sides of `open(k) = (-1)^xi ehr(-k)`.
pub fn ehrhart_macdonald_sides(
    g: &OrientedMultigraph,
    b: &FeasibleRhs,
    k: u32,
    caps: &Caps,
) -> Result<(Integer, Rational)> {
    let ehr = ehrhart_polynomial(g, b, caps)?;
    let open = count_fiber_points(g, b, k, Openness::Open, caps)?;
    let reflected = ehr.eval_i64(-i64::from(k)) * rational(sign(g.cyclotomic_number()));
    Ok((Integer::from(open), reflected))
}

pub fn check_ehrhart_macdonald(g: &OrientedMultigraph, b: &FeasibleRhs, k: u32, caps: &Caps) -> Result<bool> {
    let (open, reflected) = ehrhart_macdonald_sides(g, b, k, caps)?;
    Ok(rational(open) == reflected)
}

/// In-degree sequence of the reorientations with `A e_sigma = b`:
/// `I = (D + A 1 - 2 b) / 2` with `D` the undirected degrees.
pub fn indegree_of_rhs(g: &OrientedMultigraph, b: &FeasibleRhs) -> Result<Vec<i64>> {
    check_rhs(g, b)?;
    let ones = vec![1; g.num_edges()];
    let b0 = g.incidence_matrix().apply(&ones);
    Ok(g.degrees()
        .iter()
        .zip(&b0)
        .zip(&b.0)
        .map(|((d, b0), b)| (d + b0 - 2 * b) / 2)
        .collect())
}

/// Every feasible `b` with its in-degree sequence, ordered by `b`.
pub fn indegree_map(g: &OrientedMultigraph, caps: &Caps) -> Result<Vec<(FeasibleRhs, Vec<i64>)>> {
    feasible_b_set(g, caps)?
        .into_iter()
        .map(|b| {
            let indeg = indegree_of_rhs(g, &b)?;
            Ok((b, indeg))
        })
        .collect()
}

/// Points `h` of the open cube on the co-tree coordinates that avoid every
/// hyperplane `(h C)_e = 0 mod k` for forest edges `e`.
pub fn inside_out_flow_count(
    g: &OrientedMultigraph,
    forest: Option<&EdgeSet>,
    k: u32,
    caps: &Caps,
) -> Result<u64> {
    if k == 0 {
        return Err(Error::ZeroModulus);
    }
    let basis = cycle_basis(g, forest)?;
    caps.check_assignments("inside-out flow scan", u64::from(k - 1), basis.num_rows())?;
    let forest_cols = basis.forest_columns();
    let mut count = 0;
    for_each_coordinate(basis.num_rows(), 1, k.into(), |h| {
        let f = combine_rows(&basis, h, k.into());
        if forest_cols.iter().all(|&j| f[j] != 0) {
            count += 1;
        }
    });
    Ok(count)
}

/// Points `g` of the open cube on the forest coordinates whose implied
/// co-tree values are all nonzero mod `l`.
pub fn inside_out_tension_count(
    g: &OrientedMultigraph,
    forest: Option<&EdgeSet>,
    l: u32,
    caps: &Caps,
) -> Result<u64> {
    if l == 0 {
        return Err(Error::ZeroModulus);
    }
    let basis = cycle_basis(g, forest)?;
    let forest_cols = basis.forest_columns();
    caps.check_assignments("inside-out tension scan", u64::from(l - 1), forest_cols.len())?;
    let mut count = 0;
    for_each_coordinate(forest_cols.len(), 1, l.into(), |coords| {
        let t = complete_tension(&basis, &forest_cols, coords, l.into());
        if t.iter().all(|&x| x != 0) {
            count += 1;
        }
    });
    Ok(count)
}

/// A lattice point `f` of some `k P(b)` as a pair: the flow `f mod k` and
/// the edges where `f_e = k`.
pub fn point_to_flow_pair(g: &OrientedMultigraph, f: &[i64], k: u32) -> Result<(ModularAssignment, Reorientation)> {
    let sigma: EdgeSet = g
        .edge_ids()
        .zip(f)
        .filter(|(_, &x)| x == i64::from(k))
        .map(|(e, _)| e)
        .collect();
    Ok((ModularAssignment::from_values(g, k, f)?, Reorientation(sigma)))
}

/// Inverse of [`point_to_flow_pair`]: `f_e = k` on `sigma`, the residue
/// elsewhere.
pub fn flow_pair_to_point(g: &OrientedMultigraph, flow: &ModularAssignment, sigma: &Reorientation) -> Result<Vec<i64>> {
    let values = flow.on(g)?;
    Ok(g.edge_ids()
        .zip(values)
        .map(|(e, x)| {
            if sigma.flipped().contains(&e) {
                i64::from(flow.modulus())
            } else {
                x
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flows::{count_nowhere_zero_flows, flow_polynomial};
    use crate::graph::EdgeId;
    use crate::orient::is_totally_cyclic;
    use crate::tensions::tension_polynomial;
    use crate::Method;

    fn graph(n: u32, edges: &[(u32, u32)]) -> OrientedMultigraph {
        OrientedMultigraph::from_edge_list(n, edges).unwrap()
    }

    fn g1() -> OrientedMultigraph {
        graph(2, &[(1, 2), (1, 2), (1, 2)])
    }

    fn g2() -> OrientedMultigraph {
        graph(3, &[(1, 2), (2, 3), (2, 3), (3, 1), (3, 1)])
    }

    fn rhs(v: &[i64]) -> FeasibleRhs {
        FeasibleRhs(v.to_vec())
    }

    #[test]
    fn feasible_sets() {
        let caps = Caps::default();
        assert_eq!(feasible_b_set(&g1(), &caps).unwrap(), vec![rhs(&[-2, 2]), rhs(&[-1, 1])]);
        assert_eq!(feasible_b_set(&g2(), &caps).unwrap().len(), 4);
        assert!(feasible_b_set(&graph(2, &[(1, 2)]), &caps).unwrap().is_empty());
        assert_eq!(rhs(&[-1, 1]).to_string(), "(-1,1)");
    }

    #[test]
    fn g1_slice_points() {
        let caps = Caps::default();
        let pts = fiber_points(&g1(), &rhs(&[-1, 1]), 4, Openness::Open, &caps).unwrap();
        let set: BTreeSet<_> = pts.into_iter().collect();
        assert_eq!(set, BTreeSet::from([vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]));
        let closed: Vec<u64> = (0..3)
            .map(|k| count_fiber_points(&g1(), &rhs(&[-1, 1]), k, Openness::Closed, &caps).unwrap())
            .collect();
        assert_eq!(closed, vec![1, 3, 6]);
    }

    #[test]
    fn basis_and_box_scan_agree() {
        let caps = Caps::default();
        for g in [g1(), g2(), graph(3, &[(1, 2), (2, 1), (2, 3), (3, 3)])] {
            let bs = feasible_b_set(&g, &caps).unwrap();
            let mut probes = bs.clone();
            probes.push(FeasibleRhs(vec![0; g.num_vertices()]));
            let mut skew = vec![0; g.num_vertices()];
            skew[0] = 1;
            probes.push(FeasibleRhs(skew));
            for b in &probes {
                for k in 0..4 {
                    for o in [Openness::Open, Openness::Closed] {
                        assert_eq!(
                            count_fiber_points(&g, b, k, o, &caps).unwrap(),
                            count_fiber_points_box_scan(&g, b, k, o, &caps).unwrap(),
                            "{b} k={k} {o:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn open_fibers_sum_to_flow_count() {
        let caps = Caps::default();
        for g in [g1(), g2()] {
            let bs = feasible_b_set(&g, &caps).unwrap();
            for k in 1..6 {
                let total: u64 = bs
                    .iter()
                    .map(|b| count_fiber_points(&g, b, k, Openness::Open, &caps).unwrap())
                    .sum();
                assert_eq!(total, count_nowhere_zero_flows(&g, k, &caps).unwrap());
            }
        }
    }

    #[test]
    fn triangle_slice_polynomial() {
        let caps = Caps::default();
        let ehr = ehrhart_polynomial(&g1(), &rhs(&[-1, 1]), &caps).unwrap();
        // (k + 1)(k + 2) / 2
        let expected = RationalPolynomial::new(vec![rational(1), Rational::new(3.into(), 2.into()), Rational::new(1.into(), 2.into())]);
        assert_eq!(ehr, expected);
        assert!(check_ehrhart_macdonald(&g1(), &rhs(&[-1, 1]), 4, &caps).unwrap());
        assert_eq!(
            ehrhart_polynomial(&g1(), &rhs(&[0, 0]), &caps),
            Err(Error::InfeasibleRhs(vec![0, 0]))
        );
        assert!(matches!(
            count_fiber_points(&g1(), &rhs(&[0]), 1, Openness::Open, &caps),
            Err(Error::RhsLength { .. })
        ));
    }

    #[test]
    fn reciprocity_and_volume_on_g2() {
        let caps = Caps::default();
        let g = g2();
        let mut volume = rational(0);
        for b in feasible_b_set(&g, &caps).unwrap() {
            let ehr = ehrhart_polynomial(&g, &b, &caps).unwrap();
            assert_eq!(ehr.coefficient(0), rational(1));
            volume += ehr.coefficient(g.cyclotomic_number());
            for k in 1..4 {
                assert!(check_ehrhart_macdonald(&g, &b, k, &caps).unwrap());
            }
        }
        assert_eq!(volume, rational(1));
    }

    #[test]
    fn indegree_images() {
        let caps = Caps::default();
        let map = indegree_map(&g1(), &caps).unwrap();
        assert_eq!(map, vec![(rhs(&[-2, 2]), vec![2, 1]), (rhs(&[-1, 1]), vec![1, 2])]);
        // every totally cyclic reorientation has the in-degree predicted by its b
        for g in [g1(), g2(), graph(2, &[(1, 1), (1, 2), (2, 1)])] {
            let a = g.incidence_matrix();
            for s in enumerate_reorientations(&g, OrientationMode::TotallyCyclic, &caps).unwrap() {
                let b = FeasibleRhs(a.apply(&s.characteristic_vector(&g)));
                assert_eq!(indegree_of_rhs(&g, &b).unwrap(), s.apply(&g).unwrap().indegrees());
            }
        }
        assert_eq!(indegree_map(&g2(), &caps).unwrap().len(), 4);
    }

    #[test]
    fn inside_out_counts() {
        let caps = Caps::default();
        let t1: EdgeSet = [EdgeId(1)].into();
        assert_eq!(inside_out_flow_count(&g1(), Some(&t1), 4, &caps).unwrap(), 6);
        let t2: EdgeSet = [EdgeId(1), EdgeId(2)].into();
        assert_eq!(inside_out_flow_count(&g2(), Some(&t2), 3, &caps).unwrap(), 2);
        // no co-tree coordinates: the empty point survives only without forest edges
        let tree = graph(3, &[(1, 2), (2, 3)]);
        assert_eq!(inside_out_flow_count(&tree, None, 3, &caps).unwrap(), 0);
        assert_eq!(inside_out_flow_count(&OrientedMultigraph::edgeless(2), None, 3, &caps).unwrap(), 1);

        assert_eq!(inside_out_tension_count(&graph(2, &[(1, 2)]), None, 5, &caps).unwrap(), 4);
        let tri = graph(3, &[(1, 2), (2, 3), (3, 1)]);
        assert_eq!(inside_out_tension_count(&tri, None, 4, &caps).unwrap(), 6);
        assert_eq!(inside_out_tension_count(&graph(1, &[(1, 1)]), None, 4, &caps).unwrap(), 0);
    }

    #[test]
    fn inside_out_is_forest_independent() {
        let caps = Caps::default();
        for g in [g1(), g2(), graph(3, &[(1, 2), (2, 3), (3, 1), (1, 3), (2, 2)])] {
            let phi = flow_polynomial(&g, Method::DeletionContraction, &caps).unwrap();
            let tau = tension_polynomial(&g, Method::DeletionContraction, &caps).unwrap();
            for bits in 0..1u64 << g.num_edges() {
                let t = g.edge_set_from_bits(bits);
                if crate::tensions::validate_forest(&g, &t).is_err() {
                    continue;
                }
                for k in 1..5 {
                    assert_eq!(rational(inside_out_flow_count(&g, Some(&t), k, &caps).unwrap()), phi.eval_i64(k.into()));
                    assert_eq!(rational(inside_out_tension_count(&g, Some(&t), k, &caps).unwrap()), tau.eval_i64(k.into()));
                }
            }
        }
    }

    #[test]
    fn boundary_points_are_flow_pairs() {
        let caps = Caps::default();
        let g = g1();
        for k in 1..4 {
            for b in feasible_b_set(&g, &caps).unwrap() {
                for f in fiber_points(&g, &b, k, Openness::Closed, &caps).unwrap() {
                    let face = FacePartition::of_point(&g, &f, k.into());
                    let (flow, sigma) = point_to_flow_pair(&g, &f, k).unwrap();
                    assert_eq!(&face.sigma_plus, sigma.flipped());
                    assert_eq!(flow_pair_to_point(&g, &flow, &sigma).unwrap(), f);
                    let minor = g.contract(&flow.support()).unwrap();
                    assert!(is_totally_cyclic(&sigma.apply(&minor).unwrap()));
                }
            }
        }
    }
}
