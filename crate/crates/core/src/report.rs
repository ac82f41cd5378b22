//! Run reports in a line-oriented text form and a JSON form.

use crate::checks::IdentityCheck;
use crate::graph::OrientedMultigraph;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub cyclotomic: usize,
}

impl GraphSummary {
    pub fn of(g: &OrientedMultigraph) -> Self {
        GraphSummary {
            vertices: g.num_vertices(),
            edges: g.num_edges(),
            components: g.component_count(),
            cyclotomic: g.cyclotomic_number(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResultEntry {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub graph: Option<GraphSummary>,
    pub command: String,
    pub results: Vec<ResultEntry>,
    pub checks: Vec<IdentityCheck>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, graph: Option<&OrientedMultigraph>) -> Self {
        RunReport {
            graph: graph.map(GraphSummary::of),
            command: command.into(),
            results: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn result(&mut self, name: impl Into<String>, value: impl ToString) {
        self.results.push(ResultEntry {
            name: name.into(),
            value: value.to_string(),
        });
    }

    pub fn check(&mut self, check: IdentityCheck) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(g) = &self.graph {
            let _ = writeln!(
                out,
                "graph: vertices={} edges={} components={} cyclotomic={}",
                g.vertices, g.edges, g.components, g.cyclotomic
            );
        }
        let _ = writeln!(out, "command: {}", self.command);
        for r in &self.results {
            let _ = writeln!(out, "{}: {}", r.name, r.value);
        }
        for c in &self.checks {
            let _ = writeln!(out, "check {c}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json() {
        let g = OrientedMultigraph::from_edge_list(2, &[(1, 2), (1, 2), (1, 2)]).unwrap();
        let mut r = RunReport::new("check flow-reciprocity", Some(&g));
        r.result("method", "deletion-contraction");
        r.check(IdentityCheck::new("flow-reciprocity k=2", 12, 12));
        assert!(r.passed());
        assert_eq!(
            r.to_text(),
            "graph: vertices=2 edges=3 components=1 cyclotomic=2\n\
             command: check flow-reciprocity\n\
             method: deletion-contraction\n\
             check flow-reciprocity k=2: 12 = 12 pass\n"
        );
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["graph"]["cyclotomic"], 2);
        assert_eq!(v["checks"][0]["lhs"], "12");
        assert_eq!(v["checks"][0]["pass"], true);
        assert_eq!(v["results"][0]["value"], "deletion-contraction");
        r.check(IdentityCheck::new("bad", 1, 2));
        assert!(!r.passed());
    }

    #[test]
    fn graphless_report() {
        let r = RunReport::new("corpus stanley", None);
        assert_eq!(r.to_text(), "command: corpus stanley\n");
        assert!(r.to_json().contains("\"graph\": null"));
    }
}
