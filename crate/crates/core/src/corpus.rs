//! Test graph families: every small oriented multigraph, and a seeded
//! random family.

use crate::caps::Caps;
use crate::checks::{run_check, CheckKind, IdentityCheck};
use crate::error::Result;
use crate::format::write_graph;
use crate::graph::OrientedMultigraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every oriented multigraph on `1..=max_vertices` vertices with at most
/// `max_edges` edges, loops and parallel edges included, up to reordering
/// of edges. Edges are listed in increasing `(tail, head)` order.
pub fn exhaustive(max_vertices: u32, max_edges: usize) -> Vec<OrientedMultigraph> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(u32, u32)> = (1..=n).flat_map(|u| (1..=n).map(move |v| (u, v))).collect();
        for m in 0..=max_edges {
            // multisets of size m as non-decreasing index sequences
            let mut idx = vec![0usize; m];
            loop {
                let edges: Vec<(u32, u32)> = idx.iter().map(|&i| pairs[i]).collect();
                out.push(OrientedMultigraph::from_edge_list(n, &edges).expect("valid endpoints"));
                let Some(pos) = (0..m).rev().find(|&i| idx[i] + 1 < pairs.len()) else {
                    break;
                };
                let next = idx[pos] + 1;
                idx[pos..].iter_mut().for_each(|x| *x = next);
            }
        }
    }
    out
}

/// `count` graphs with a uniform vertex count in `1..=max_vertices`, edge
/// count in `0..=max_edges` and endpoints, reproducible from `seed`.
pub fn random(seed: u64, count: usize, max_vertices: u32, max_edges: usize) -> Vec<OrientedMultigraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_vertices.max(1));
            let m = rng.gen_range(0..=max_edges);
            let edges: Vec<(u32, u32)> = (0..m).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
            OrientedMultigraph::from_edge_list(n, &edges).expect("valid endpoints")
        })
        .collect()
}

/// Aggregate result of one identity over a family of graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusOutcome {
    pub graphs: usize,
    pub checks: usize,
    pub passed: usize,
    /// The first failing graph, written in the text format, and its check.
    pub first_failure: Option<(String, IdentityCheck)>,
}

impl CorpusOutcome {
    pub fn all_passed(&self) -> bool {
        self.passed == self.checks
    }
}

/// Runs `kind` on every graph for every `(l, k)` pair, in order.
pub fn run_corpus(
    graphs: &[OrientedMultigraph],
    kind: CheckKind,
    moduli: &[(u32, u32)],
    caps: &Caps,
) -> Result<CorpusOutcome> {
    let mut outcome = CorpusOutcome {
        graphs: graphs.len(),
        checks: 0,
        passed: 0,
        first_failure: None,
    };
    for g in graphs {
        for &(l, k) in moduli {
            for check in run_check(g, kind, k, l, caps)? {
                outcome.checks += 1;
                if check.pass {
                    outcome.passed += 1;
                } else if outcome.first_failure.is_none() {
                    outcome.first_failure = Some((write_graph(g), check));
                }
            }
        }
    }
    Ok(outcome)
}
