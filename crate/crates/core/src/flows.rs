//! Modular flows and the modular flow polynomial.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeKind, EdgeSet, OrientedMultigraph};
use crate::tensions::{cycle_basis, CycleBasisMatrix};
use crate::{rational, Method, RationalPolynomial};
use std::collections::BTreeMap;

/// Residues in `0..modulus` on edges, used for both flows and tensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModularAssignment {
    modulus: u32,
    values: BTreeMap<EdgeId, u32>,
}

impl ModularAssignment {
    /// Values are reduced into `0..modulus`.
    pub fn new(modulus: u32, values: impl IntoIterator<Item = (EdgeId, i64)>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        let m = i64::from(modulus);
        Ok(ModularAssignment {
            modulus,
            values: values
                .into_iter()
                .map(|(e, v)| (e, v.rem_euclid(m) as u32))
                .collect(),
        })
    }

    /// Values given in the graph's canonical edge order.
    pub fn from_values(g: &OrientedMultigraph, modulus: u32, values: &[i64]) -> Result<Self> {
        assert_eq!(values.len(), g.num_edges(), "one value per edge");
        Self::new(modulus, g.edge_ids().zip(values.iter().copied()))
    }

    pub fn zero(g: &OrientedMultigraph, modulus: u32) -> Result<Self> {
        Self::new(modulus, g.edge_ids().map(|e| (e, 0)))
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, e: EdgeId) -> Option<u32> {
        self.values.get(&e).copied()
    }

    pub fn values(&self) -> &BTreeMap<EdgeId, u32> {
        &self.values
    }

    pub fn support(&self) -> EdgeSet {
        self.values.iter().filter(|(_, &v)| v != 0).map(|(&e, _)| e).collect()
    }

    /// Values in the canonical edge order of `g`.
    pub fn on(&self, g: &OrientedMultigraph) -> Result<Vec<i64>> {
        g.edge_ids()
            .map(|e| self.get(e).map(i64::from).ok_or(Error::MissingEdgeValue(e)))
            .collect()
    }

    /// Keeps only the values of edges present in `g`.
    pub fn restricted_to(&self, g: &OrientedMultigraph) -> Self {
        ModularAssignment {
            modulus: self.modulus,
            values: g.edge_ids().filter_map(|e| self.get(e).map(|v| (e, v))).collect(),
        }
    }
}

/// Net inflow minus outflow at every vertex, reduced mod `modulus`.
fn net_flow(g: &OrientedMultigraph, values: &[i64], modulus: i64) -> Vec<i64> {
    g.incidence_matrix()
        .apply(values)
        .into_iter()
        .map(|x| x.rem_euclid(modulus))
        .collect()
}

pub fn is_flow(g: &OrientedMultigraph, f: &ModularAssignment) -> Result<bool> {
    let values = f.on(g)?;
    Ok(net_flow(g, &values, f.modulus().into()).iter().all(|&x| x == 0))
}

/// Every `Z_k`-flow of `g`, in canonical edge order, parametrised by its
/// co-tree coordinates. There are `k^xi` of them.
pub fn flows_by_basis(g: &OrientedMultigraph, k: u32, caps: &Caps) -> Result<Vec<Vec<i64>>> {
    if k == 0 {
        return Err(Error::ZeroModulus);
    }
    let basis = cycle_basis(g, None)?;
    caps.check_assignments("flow enumeration", k.into(), basis.num_rows())?;
    let mut out = Vec::new();
    for_each_coordinate(basis.num_rows(), 0, k as i64, |h| {
        out.push(combine_rows(&basis, h, k.into()));
    });
    Ok(out)
}

/// Every `Z_k`-flow by scanning all `k^|E|` residue vectors.
pub fn flows_by_full_scan(g: &OrientedMultigraph, k: u32, caps: &Caps) -> Result<Vec<Vec<i64>>> {
    if k == 0 {
        return Err(Error::ZeroModulus);
    }
    caps.check_assignments("flow residue scan", k.into(), g.num_edges())?;
    let mut out = Vec::new();
    for_each_coordinate(g.num_edges(), 0, k as i64, |f| {
        if net_flow(g, f, k.into()).iter().all(|&x| x == 0) {
            out.push(f.to_vec());
        }
    });
    Ok(out)
}

pub fn count_nowhere_zero_flows(g: &OrientedMultigraph, k: u32, caps: &Caps) -> Result<u64> {
    Ok(flows_by_basis(g, k, caps)?
        .iter()
        .filter(|f| f.iter().all(|&x| x != 0))
        .count() as u64)
}

pub fn count_nowhere_zero_flows_full_scan(g: &OrientedMultigraph, k: u32, caps: &Caps) -> Result<u64> {
    Ok(flows_by_full_scan(g, k, caps)?
        .iter()
        .filter(|f| f.iter().all(|&x| x != 0))
        .count() as u64)
}

/// `phi(k)` for `k = d+1 ..= 2d+1`, `d = xi(G)`, interpolated.
pub fn flow_polynomial(g: &OrientedMultigraph, method: Method, caps: &Caps) -> Result<RationalPolynomial> {
    match method {
        Method::DeletionContraction => Ok(flow_deletion_contraction(g)),
        Method::Enumerate => {
            let d = g.cyclotomic_number() as u32;
            let samples = (d + 1..=2 * d + 1)
                .map(|k| Ok((i64::from(k), rational(count_nowhere_zero_flows(g, k, caps)?))))
                .collect::<Result<Vec<_>>>()?;
            RationalPolynomial::interpolate(&samples)
        }
    }
}

fn flow_deletion_contraction(g: &OrientedMultigraph) -> RationalPolynomial {
    match g.reduction_edge() {
        None => RationalPolynomial::one(),
        Some((_, EdgeKind::Coloop)) => RationalPolynomial::zero(),
        Some((e, EdgeKind::Loop)) => {
            let rest = flow_deletion_contraction(&g.delete_edge(e).expect("edge of g"));
            &RationalPolynomial::linear_factor(1) * &rest
        }
        Some((e, EdgeKind::Ordinary)) => {
            let contracted = flow_deletion_contraction(&g.contract_edge(e).expect("edge of g"));
            let deleted = flow_deletion_contraction(&g.delete_edge(e).expect("edge of g"));
            &contracted - &deleted
        }
    }
}

/// Which minor a flow was taken on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Minor {
    Contracted,
    Deleted,
}

/// The unique flow on `g` restricting to `f_minor` on `g/e` or `g\e`.
pub fn restrict_lift_flow(
    g: &OrientedMultigraph,
    e: EdgeId,
    f_minor: &ModularAssignment,
    minor: Minor,
) -> Result<ModularAssignment> {
    let edge = *g.edge(e).ok_or(Error::UnknownEdge(e))?;
    if g.classify_edge(e)? != EdgeKind::Ordinary {
        return Err(Error::LoopOrColoop(e));
    }
    let minor_graph = match minor {
        Minor::Contracted => g.contract_edge(e)?,
        Minor::Deleted => g.delete_edge(e)?,
    };
    if !is_flow(&minor_graph, f_minor)? {
        return Err(Error::NotAFlow);
    }
    let k = i64::from(f_minor.modulus());
    // Net flow at the tail of e from every other edge, (A* f)_u.
    let mut at_tail = 0i64;
    for other in g.edges().iter().filter(|x| x.id != e) {
        let v = i64::from(f_minor.get(other.id).ok_or(Error::MissingEdgeValue(other.id))?);
        if other.head == edge.tail {
            at_tail += v;
        }
        if other.tail == edge.tail {
            at_tail -= v;
        }
    }
    let mut values: Vec<(EdgeId, i64)> = f_minor.values().iter().map(|(&id, &v)| (id, v.into())).collect();
    values.push((e, at_tail.rem_euclid(k)));
    let lifted = ModularAssignment::new(f_minor.modulus(), values)?;
    debug_assert!(is_flow(g, &lifted)?);
    Ok(lifted)
}

/// Calls `visit` on every vector in `lo..hi` per coordinate, first
/// coordinate most significant.
pub(crate) fn for_each_coordinate(len: usize, lo: i64, hi: i64, mut visit: impl FnMut(&[i64])) {
    if hi <= lo && len > 0 {
        return;
    }
    let mut cur = vec![lo; len];
    loop {
        visit(&cur);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < hi {
                break;
            }
            cur[i] = lo;
        }
    }
}

/// `h * C` reduced mod `k`, in canonical edge order.
pub(crate) fn combine_rows(basis: &CycleBasisMatrix, h: &[i64], k: i64) -> Vec<i64> {
    let mut f = vec![0i64; basis.num_columns()];
    for (coef, (_, row)) in h.iter().zip(basis.rows()) {
        for (x, r) in f.iter_mut().zip(row) {
            *x += coef * r;
        }
    }
    f.iter().map(|x| x.rem_euclid(k)).collect()
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

    #[test]
    fn conservation() {
        let caps = Caps::default();
        let f = ModularAssignment::from_values(&g1(), 4, &[1, 1, 2]).unwrap();
        assert!(is_flow(&g1(), &f).unwrap());
        assert!(is_flow(&g2(), &ModularAssignment::zero(&g2(), 5).unwrap()).unwrap());
        let coloop = graph(2, &[(1, 2)]);
        assert!(!is_flow(&coloop, &ModularAssignment::from_values(&coloop, 3, &[1]).unwrap()).unwrap());
        let partial = ModularAssignment::new(4, [(EdgeId(1), 1)]).unwrap();
        assert_eq!(is_flow(&g1(), &partial), Err(Error::MissingEdgeValue(EdgeId(2))));
        assert_eq!(ModularAssignment::new(0, []), Err(Error::ZeroModulus));
        let _ = caps;
    }

    #[test]
    fn nowhere_zero_counts() {
        let caps = Caps::default();
        assert_eq!(count_nowhere_zero_flows(&g1(), 4, &caps).unwrap(), 6);
        assert_eq!(count_nowhere_zero_flows(&g2(), 3, &caps).unwrap(), 2);
        let with_coloop = graph(3, &[(1, 2), (2, 1), (2, 3)]);
        for k in 1..5 {
            assert_eq!(count_nowhere_zero_flows(&with_coloop, k, &caps).unwrap(), 0);
        }
    }

    #[test]
    fn flow_polynomials_of_examples() {
        let caps = Caps::default();
        for method in [Method::Enumerate, Method::DeletionContraction] {
            assert_eq!(
                flow_polynomial(&g1(), method, &caps).unwrap(),
                RationalPolynomial::from_integers(&[2, -3, 1])
            );
            let expected = &RationalPolynomial::linear_factor(1) * &RationalPolynomial::linear_factor(2).pow(2);
            assert_eq!(flow_polynomial(&g2(), method, &caps).unwrap(), expected);
            assert_eq!(
                flow_polynomial(&OrientedMultigraph::edgeless(3), method, &caps).unwrap(),
                RationalPolynomial::one()
            );
        }
    }

    #[test]
    fn basis_and_full_scan_agree() {
        let caps = Caps::default();
        for g in [g1(), g2(), graph(3, &[(1, 1), (1, 2), (2, 3), (3, 2)])] {
            for k in 1..5 {
                let mut a = flows_by_basis(&g, k, &caps).unwrap();
                let mut b = flows_by_full_scan(&g, k, &caps).unwrap();
                a.sort();
                b.sort();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn lifting_from_contraction() {
        let g = g1();
        let minor = g.contract_edge(EdgeId(1)).unwrap();
        let f_minor = ModularAssignment::new(3, [(EdgeId(2), 1), (EdgeId(3), 2)]).unwrap();
        assert!(is_flow(&minor, &f_minor).unwrap());
        let lifted = restrict_lift_flow(&g, EdgeId(1), &f_minor, Minor::Contracted).unwrap();
        assert_eq!(lifted.get(EdgeId(1)), Some(0));
        assert!(is_flow(&g, &lifted).unwrap());

        // Uniqueness: exactly one value of f(e1) completes the flow.
        let f_minor = ModularAssignment::new(5, [(EdgeId(2), 1), (EdgeId(3), 1)]).unwrap();
        let lifted = restrict_lift_flow(&g, EdgeId(1), &f_minor, Minor::Contracted).unwrap();
        let completions: Vec<i64> = (0..5)
            .filter(|&x| {
                let f = ModularAssignment::new(5, [(EdgeId(1), x), (EdgeId(2), 1), (EdgeId(3), 1)]).unwrap();
                is_flow(&g, &f).unwrap()
            })
            .collect();
        assert_eq!(completions, vec![i64::from(lifted.get(EdgeId(1)).unwrap())]);
        assert_eq!(completions, vec![3]);
    }

    #[test]
    fn lifting_from_deletion_and_errors() {
        let g = g1();
        let minor = g.delete_edge(EdgeId(2)).unwrap();
        let zero = ModularAssignment::zero(&minor, 4).unwrap();
        let lifted = restrict_lift_flow(&g, EdgeId(2), &zero, Minor::Deleted).unwrap();
        assert!(lifted.support().is_empty());

        let f = ModularAssignment::new(4, [(EdgeId(1), 1), (EdgeId(3), 3)]).unwrap();
        assert_eq!(restrict_lift_flow(&g, EdgeId(2), &f, Minor::Deleted).unwrap().get(EdgeId(2)), Some(0));
        let bad = ModularAssignment::new(4, [(EdgeId(1), 1), (EdgeId(3), 1)]).unwrap();
        assert_eq!(restrict_lift_flow(&g, EdgeId(2), &bad, Minor::Deleted), Err(Error::NotAFlow));

        let coloop = graph(2, &[(1, 2)]);
        let empty = ModularAssignment::new(3, []).unwrap();
        assert_eq!(
            restrict_lift_flow(&coloop, EdgeId(1), &empty, Minor::Deleted),
            Err(Error::LoopOrColoop(EdgeId(1)))
        );
    }

    #[test]
    fn modulus_one_and_caps() {
        let caps = Caps::default();
        assert_eq!(count_nowhere_zero_flows(&OrientedMultigraph::edgeless(2), 1, &caps).unwrap(), 1);
        assert_eq!(count_nowhere_zero_flows(&g1(), 1, &caps).unwrap(), 0);
        let tight = Caps {
            max_assignments: 10,
            ..caps
        };
        assert!(matches!(
            flows_by_full_scan(&g1(), 3, &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn coordinate_iteration_order() {
        let mut seen = Vec::new();
        for_each_coordinate(2, 0, 2, |v| seen.push(v.to_vec()));
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        let mut count = 0;
        for_each_coordinate(0, 0, 3, |_| count += 1);
        assert_eq!(count, 1);
        for_each_coordinate(2, 1, 1, |_| count += 1);
        assert_eq!(count, 1);
    }
}
