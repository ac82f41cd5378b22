//! Executable identities: each compares a direct count with the value a
//! polynomial predicts for it.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::flows::flow_polynomial;
use crate::geometry::{ehrhart_macdonald_sides, ehrhart_polynomial, feasible_b_set};
use crate::graph::{EdgeKind, OrientedMultigraph};
use crate::oracles::{
    appendix_recursion_clauses, count_flow_pairs, count_stanley_pairs, count_tension_pairs, count_tutte_triples,
    reiner_sum,
};
use crate::tensions::{chromatic_polynomial, tension_polynomial};
use crate::tutte::{convolution, evaluate, tutte_polynomial};
use crate::{rational, sign, Method, Rational};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    FlowReciprocity,
    TensionReciprocity,
    Stanley,
    TutteTriples,
    Convolution,
    Reiner,
    EhrhartMacdonald,
    AppendixRecursion,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::FlowReciprocity,
        CheckKind::TensionReciprocity,
        CheckKind::Stanley,
        CheckKind::TutteTriples,
        CheckKind::Convolution,
        CheckKind::Reiner,
        CheckKind::EhrhartMacdonald,
        CheckKind::AppendixRecursion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::FlowReciprocity => "flow-reciprocity",
            CheckKind::TensionReciprocity => "tension-reciprocity",
            CheckKind::Stanley => "stanley",
            CheckKind::TutteTriples => "tutte-triples",
            CheckKind::Convolution => "convolution",
            CheckKind::Reiner => "reiner",
            CheckKind::EhrhartMacdonald => "ehrhart-macdonald",
            CheckKind::AppendixRecursion => "appendix-recursion",
        }
    }

    /// Whether the check reads `k`, `l`, or both.
    pub fn uses(self) -> (bool, bool) {
        match self {
            CheckKind::FlowReciprocity | CheckKind::EhrhartMacdonald | CheckKind::AppendixRecursion => (true, false),
            CheckKind::TensionReciprocity | CheckKind::Stanley => (false, true),
            CheckKind::TutteTriples | CheckKind::Convolution | CheckKind::Reiner => (true, true),
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CheckKind::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

/// One identity instance with both sides rendered exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        IdentityCheck {
            name: name.into(),
            pass: lhs == rhs,
            lhs,
            rhs,
        }
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "pass" } else { "FAIL" };
        write!(f, "{}: {} = {} {}", self.name, self.lhs, self.rhs, verdict)
    }
}

/// Integer values print without a denominator.
fn exact(r: &Rational) -> String {
    r.to_string()
}

/// Runs one identity on `g` with moduli `k` and `l`.
pub fn run_check(g: &OrientedMultigraph, kind: CheckKind, k: u32, l: u32, caps: &Caps) -> Result<Vec<IdentityCheck>> {
    if k == 0 || l == 0 {
        return Err(Error::ZeroModulus);
    }
    let dc = Method::DeletionContraction;
    let t_point = || evaluate(&tutte_polynomial(g), 1 + i64::from(l), 1 + i64::from(k));
    let tag = |name: &str| match kind.uses() {
        (true, false) => format!("{name} k={k}"),
        (false, true) => format!("{name} l={l}"),
        _ => format!("{name} l={l} k={k}"),
    };
    let checks = match kind {
        CheckKind::FlowReciprocity => {
            let phi = flow_polynomial(g, dc, caps)?;
            let rhs = phi.eval_i64(-i64::from(k)) * rational(sign(g.cyclotomic_number()));
            vec![IdentityCheck::new(tag(kind.name()), count_flow_pairs(g, k, caps)?, exact(&rhs))]
        }
        CheckKind::TensionReciprocity => {
            let tau = tension_polynomial(g, dc, caps)?;
            let rhs = tau.eval_i64(-i64::from(l)) * rational(sign(g.rank()));
            vec![IdentityCheck::new(tag(kind.name()), count_tension_pairs(g, l, caps)?, exact(&rhs))]
        }
        CheckKind::Stanley => {
            let pairs = count_stanley_pairs(g, l, caps)?;
            let chi = chromatic_polynomial(g).eval_i64(-i64::from(l)) * rational(sign(g.num_vertices()));
            let factored = u64::from(l).pow(g.component_count() as u32) * count_tension_pairs(g, l, caps)?;
            vec![
                IdentityCheck::new(tag("stanley-chromatic"), pairs, exact(&chi)),
                IdentityCheck::new(tag("stanley-factorization"), pairs, factored),
            ]
        }
        CheckKind::TutteTriples => {
            vec![IdentityCheck::new(tag(kind.name()), count_tutte_triples(g, l, k, caps)?, t_point())]
        }
        CheckKind::Convolution => vec![IdentityCheck::new(tag(kind.name()), convolution(g, l, k, caps)?, t_point())],
        CheckKind::Reiner => vec![IdentityCheck::new(tag(kind.name()), reiner_sum(g, l, k, caps)?, t_point())],
        CheckKind::EhrhartMacdonald => ehrhart_checks(g, k, caps)?,
        CheckKind::AppendixRecursion => appendix_recursion_clauses(g, k, caps)?
            .into_iter()
            .map(|c| IdentityCheck::new(format!("{} {}", tag(kind.name()), c.label()), c.lhs, c.rhs))
            .collect(),
    };
    Ok(checks)
}

/// Reciprocity and constant term for every feasible `b`, and, when there
/// is at least one, the leading coefficients summing to one.
fn ehrhart_checks(g: &OrientedMultigraph, k: u32, caps: &Caps) -> Result<Vec<IdentityCheck>> {
    let xi = g.cyclotomic_number();
    let mut checks = Vec::new();
    let mut volume = rational(0);
    let bs = feasible_b_set(g, caps)?;
    for b in &bs {
        let (open, reflected) = ehrhart_macdonald_sides(g, b, k, caps)?;
        checks.push(IdentityCheck::new(format!("ehrhart-macdonald b={b} k={k}"), open, exact(&reflected)));
        let ehr = ehrhart_polynomial(g, b, caps)?;
        checks.push(IdentityCheck::new(format!("ehrhart-constant b={b}"), exact(&ehr.coefficient(0)), 1));
        volume += ehr.coefficient(xi);
    }
    if !bs.is_empty() {
        checks.push(IdentityCheck::new("ehrhart-volume", exact(&volume), 1));
    }
    Ok(checks)
}

/// `true` when `g` has no coloop, i.e. some reorientation is totally cyclic.
pub fn coloop_free(g: &OrientedMultigraph) -> bool {
    g.edge_ids()
        .all(|e| g.classify_edge(e).is_ok_and(|kind| kind != EdgeKind::Coloop))
}
