//! Report types emitted by the CLI, their construction, and both output
//! renderings. JSON is the contract: keys are sorted, a top-level
//! `schema_version` is always present, and timing fields are the only
//! nondeterministic parts.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use indecomp::checkers::{
    canonical_shelling_multipartite, cohen_macaulay_verdict, find_shelling, is_vertex_decomposable,
    minimal_vertex_covers, multipartite_is_cm, multipartite_is_shellable, multipartite_is_unmixed,
    multipartite_is_vertex_decomposable, CmVerdict, ShellingCertificate, VdNode, VdTree,
};
use indecomp::harness::ValidationReport;
use indecomp::{
    independence_complex, maximal_independent_sets, Graph, Partition, Result, VertexSet,
};

pub const SCHEMA_VERSION: &str = "1";

/// Serializes with sorted keys, pretty-printed, trailing newline.
pub fn to_sorted_json<T: Serialize>(report: &T) -> String {
    let value = serde_json::to_value(report).expect("reports serialize to JSON");
    let mut out = serde_json::to_string_pretty(&value).expect("values print as JSON");
    out.push('\n');
    out
}

/// The checks `analyze` can run, in report key order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckKind {
    Chromatic,
    Cm,
    Facets,
    Mis,
    Shellable,
    Unmixed,
    Vd,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::Chromatic,
        CheckKind::Cm,
        CheckKind::Facets,
        CheckKind::Mis,
        CheckKind::Shellable,
        CheckKind::Unmixed,
        CheckKind::Vd,
    ];

    fn name(self) -> &'static str {
        match self {
            CheckKind::Chromatic => "chromatic",
            CheckKind::Cm => "cm",
            CheckKind::Facets => "facets",
            CheckKind::Mis => "mis",
            CheckKind::Shellable => "shellable",
            CheckKind::Unmixed => "unmixed",
            CheckKind::Vd => "vd",
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum Outcome {
    Mis {
        count: usize,
        sets: Vec<VertexSet>,
    },
    Chromatic {
        number: usize,
    },
    Facets {
        n: usize,
        facets: Vec<VertexSet>,
        pure: bool,
        simplex: bool,
    },
    Shellable {
        shellable: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        certificate: Option<ShellingCertificate>,
    },
    Vd {
        vertex_decomposable: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        tree: Option<VdTree>,
    },
    Unmixed {
        unmixed: bool,
        cover_sizes: Vec<usize>,
    },
    Cm(CmVerdict),
}

struct TimedCheck {
    kind: CheckKind,
    time_ms: u64,
    outcome: Outcome,
}

#[derive(Serialize)]
struct InputEcho {
    n: usize,
    edge_count: usize,
    partition: Option<Partition>,
}

/// Full analysis of one graph.
pub struct AnalysisReport {
    input: InputEcho,
    checks: Vec<TimedCheck>,
}

fn run_check(g: &Graph, kind: CheckKind) -> Result<Outcome> {
    Ok(match kind {
        CheckKind::Mis => {
            let sets = maximal_independent_sets(g)?;
            Outcome::Mis {
                count: sets.len(),
                sets,
            }
        }
        CheckKind::Chromatic => Outcome::Chromatic {
            number: g.chromatic_number()?,
        },
        CheckKind::Facets => {
            let c = independence_complex(g)?;
            Outcome::Facets {
                n: c.n(),
                pure: c.is_pure(),
                simplex: c.is_simplex(),
                facets: c.facets().to_vec(),
            }
        }
        CheckKind::Shellable => {
            let certificate = find_shelling(&independence_complex(g)?)?;
            Outcome::Shellable {
                shellable: certificate.is_some(),
                certificate,
            }
        }
        CheckKind::Vd => {
            let tree = is_vertex_decomposable(&independence_complex(g)?)?;
            Outcome::Vd {
                vertex_decomposable: tree.is_some(),
                tree,
            }
        }
        CheckKind::Unmixed => {
            let covers = minimal_vertex_covers(g)?;
            let mut cover_sizes: Vec<usize> = covers.iter().map(|c| c.len()).collect();
            cover_sizes.sort_unstable();
            cover_sizes.dedup();
            Outcome::Unmixed {
                unmixed: cover_sizes.len() == 1,
                cover_sizes,
            }
        }
        CheckKind::Cm => Outcome::Cm(cohen_macaulay_verdict(g)?),
    })
}

/// Runs the requested checks (all seven when the list is empty), each at
/// most once, and assembles the report.
pub fn build_analysis(g: &Graph, requested: &[CheckKind]) -> Result<AnalysisReport> {
    let kinds: Vec<CheckKind> = if requested.is_empty() {
        CheckKind::ALL.to_vec()
    } else {
        let mut seen = Vec::new();
        for &k in requested {
            if !seen.contains(&k) {
                seen.push(k);
            }
        }
        seen
    };
    let partition = if g.n() == 0 {
        None
    } else {
        g.detect_multipartite()?
    };
    let mut checks = Vec::with_capacity(kinds.len());
    for kind in kinds {
        let start = Instant::now();
        let outcome = run_check(g, kind)?;
        checks.push(TimedCheck {
            kind,
            time_ms: start.elapsed().as_millis() as u64,
            outcome,
        });
    }
    Ok(AnalysisReport {
        input: InputEcho {
            n: g.n(),
            edge_count: g.edge_count(),
            partition,
        },
        checks,
    })
}

impl Serialize for AnalysisReport {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Shape<'a> {
            schema_version: &'static str,
            input: &'a InputEcho,
            checks: BTreeMap<&'static str, Value>,
        }
        let checks = self
            .checks
            .iter()
            .map(|tc| {
                let mut value = serde_json::to_value(&tc.outcome).expect("outcomes serialize");
                value
                    .as_object_mut()
                    .expect("outcomes are objects")
                    .insert("time_ms".to_string(), tc.time_ms.into());
                (tc.kind.name(), value)
            })
            .collect();
        Shape {
            schema_version: SCHEMA_VERSION,
            input: &self.input,
            checks,
        }
        .serialize(serializer)
    }
}

fn format_sets(sets: &[VertexSet]) -> String {
    sets.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn format_certificate(cert: &ShellingCertificate) -> String {
    let witnesses = cert
        .witnesses
        .iter()
        .map(|w| format!("({},{})", w.prior, w.vertex))
        .collect::<Vec<_>>()
        .join(", ");
    format!("order={:?} witnesses=[{witnesses}]", cert.order)
}

impl Outcome {
    fn render(&self) -> String {
        match self {
            Outcome::Mis { count, sets } => format!("count={count} sets={}", format_sets(sets)),
            Outcome::Chromatic { number } => number.to_string(),
            Outcome::Facets {
                n,
                facets,
                pure,
                simplex,
            } => format!(
                "n={n} pure={pure} simplex={simplex} facets={}",
                format_sets(facets)
            ),
            Outcome::Shellable {
                shellable,
                certificate,
            } => match certificate {
                Some(cert) => format!("{shellable} {}", format_certificate(cert)),
                None => shellable.to_string(),
            },
            Outcome::Vd {
                vertex_decomposable,
                tree,
            } => match tree {
                Some(tree) => match &tree.nodes[tree.root] {
                    VdNode::Simplex => format!("{vertex_decomposable} (simplex)"),
                    VdNode::Shed { vertex, .. } => format!(
                        "{vertex_decomposable} (shed vertex {vertex}, {} nodes)",
                        tree.nodes.len()
                    ),
                },
                None => vertex_decomposable.to_string(),
            },
            Outcome::Unmixed {
                unmixed,
                cover_sizes,
            } => format!("{unmixed} cover_sizes={cover_sizes:?}"),
            Outcome::Cm(verdict) => format!("{} ({})", verdict.state, verdict.reason),
        }
    }
}

impl AnalysisReport {
    pub fn render_text(&self) -> String {
        let partition = match &self.input.partition {
            Some(p) => p.to_csv(),
            None => "none".to_string(),
        };
        let mut out = format!(
            "graph: n={} edges={} partition={partition}\n",
            self.input.n, self.input.edge_count
        );
        for tc in &self.checks {
            out.push_str(&format!("{:<10} {}\n", tc.kind.name(), tc.outcome.render()));
        }
        out
    }
}

/// Closed-form answers for one complete multipartite graph.
#[derive(Serialize)]
pub struct MultipartiteReport {
    schema_version: &'static str,
    parts: Partition,
    total: usize,
    class_count: usize,
    shellable: bool,
    vertex_decomposable: bool,
    unmixed: bool,
    cohen_macaulay: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    canonical_shelling: Option<ShellingCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<String>,
}

pub fn build_multipartite(p: &Partition, emit_graph: bool) -> Result<MultipartiteReport> {
    let shellable = multipartite_is_shellable(p);
    let canonical_shelling = if shellable {
        Some(canonical_shelling_multipartite(p)?)
    } else {
        None
    };
    let graph = if emit_graph {
        let g = Graph::complete_multipartite(p)?;
        Some(format!(
            "# complete multipartite {}\n{}",
            p.to_csv(),
            g.to_text()
        ))
    } else {
        None
    };
    Ok(MultipartiteReport {
        schema_version: SCHEMA_VERSION,
        parts: p.clone(),
        total: p.total(),
        class_count: p.class_count(),
        shellable,
        vertex_decomposable: multipartite_is_vertex_decomposable(p),
        unmixed: multipartite_is_unmixed(p),
        cohen_macaulay: multipartite_is_cm(p),
        canonical_shelling,
        graph,
    })
}

impl MultipartiteReport {
    /// The emitted graph file, when `--emit-graph` was requested.
    pub fn graph_text(&self) -> Option<&str> {
        self.graph.as_deref()
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "partition {}: total={} classes={}\n",
            self.parts.to_csv(),
            self.total,
            self.class_count
        );
        out.push_str(&format!("{:<20} {}\n", "shellable", self.shellable));
        out.push_str(&format!(
            "{:<20} {}\n",
            "vertex_decomposable", self.vertex_decomposable
        ));
        out.push_str(&format!("{:<20} {}\n", "unmixed", self.unmixed));
        out.push_str(&format!(
            "{:<20} {}\n",
            "cohen_macaulay", self.cohen_macaulay
        ));
        if let Some(cert) = &self.canonical_shelling {
            out.push_str(&format!(
                "{:<20} {}\n",
                "canonical_shelling",
                format_certificate(cert)
            ));
        }
        out
    }
}

/// A validation run with the schema version stamped on top.
#[derive(Serialize)]
pub struct ValidateReport {
    schema_version: &'static str,
    #[serde(flatten)]
    report: ValidationReport,
}

pub fn build_validate(report: ValidationReport) -> ValidateReport {
    ValidateReport {
        schema_version: SCHEMA_VERSION,
        report,
    }
}

impl ValidateReport {
    pub fn passed(&self) -> bool {
        self.report.passed
    }

    pub fn render_text(&self) -> String {
        let scope = &self.report.scope;
        let mut out = format!(
            "scope: max_partition_total={} max_random_n={} samples={} seed={}\n",
            scope.max_partition_total, scope.max_random_n, scope.samples, scope.seed
        );
        out.push_str(&format!(
            "{:<48} {:>9} {:>9}\n",
            "check", "instances", "failures"
        ));
        for check in &self.report.checks {
            out.push_str(&format!(
                "{:<48} {:>9} {:>9}\n",
                check.name, check.instances, check.failures
            ));
            if let Some(ce) = &check.first_counterexample {
                out.push_str("  first counterexample:\n");
                for line in ce.lines() {
                    out.push_str(&format!("    {line}\n"));
                }
            }
        }
        out.push_str(&format!("passed: {}\n", self.report.passed));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use indecomp::harness::{cross_validate, Budgets};

    fn multipartite(parts: &[usize]) -> Graph {
        Graph::complete_multipartite(&Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn analysis_json_shape() {
        let g = multipartite(&[2, 2]);
        let report = build_analysis(&g, &[]).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["schema_version"], "1");
        assert_eq!(v["input"]["n"], 4);
        assert_eq!(v["input"]["edge_count"], 4);
        assert_eq!(v["input"]["partition"], serde_json::json!([2, 2]));
        let checks = v["checks"].as_object().unwrap();
        let names: Vec<&String> = checks.keys().collect();
        assert_eq!(
            names,
            [
                "chromatic",
                "cm",
                "facets",
                "mis",
                "shellable",
                "unmixed",
                "vd"
            ]
        );
        assert_eq!(v["checks"]["mis"]["count"], 2);
        assert_eq!(v["checks"]["shellable"]["shellable"], false);
        assert!(v["checks"]["shellable"].get("certificate").is_none());
        assert!(v["checks"]["mis"]["time_ms"].is_u64());
    }

    #[test]
    fn certificate_present_iff_true() {
        let g = multipartite(&[3, 1, 1]);
        let report = build_analysis(&g, &[CheckKind::Shellable, CheckKind::Vd]).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["checks"]["shellable"]["shellable"], true);
        assert!(v["checks"]["shellable"]["certificate"]["order"].is_array());
        assert_eq!(v["checks"]["vd"]["vertex_decomposable"], true);
        assert!(v["checks"]["vd"]["tree"]["nodes"].is_array());
        assert!(v["checks"].get("mis").is_none());
    }

    #[test]
    fn requested_checks_appear_once() {
        let g = multipartite(&[2, 1]);
        let report =
            build_analysis(&g, &[CheckKind::Mis, CheckKind::Mis, CheckKind::Chromatic]).unwrap();
        let v = serde_json::to_value(&report).unwrap();
        assert_eq!(v["checks"].as_object().unwrap().len(), 2);
    }

    #[test]
    fn multipartite_report_shapes() {
        let p = Partition::new([2, 2]).unwrap();
        let v = serde_json::to_value(build_multipartite(&p, false).unwrap()).unwrap();
        assert_eq!(v["shellable"], false);
        assert_eq!(v["vertex_decomposable"], false);
        assert_eq!(v["unmixed"], true);
        assert_eq!(v["cohen_macaulay"], false);
        assert!(v.get("canonical_shelling").is_none());
        assert!(v.get("graph").is_none());

        let p = Partition::new([3, 1, 1]).unwrap();
        let v = serde_json::to_value(build_multipartite(&p, true).unwrap()).unwrap();
        assert_eq!(v["shellable"], true);
        assert_eq!(v["unmixed"], false);
        assert_eq!(
            v["canonical_shelling"]["order"],
            serde_json::json!([0, 1, 2])
        );
        let text = v["graph"].as_str().unwrap();
        let g = Graph::from_text(text).unwrap();
        assert_eq!(g.edge_count(), 7);
    }

    #[test]
    fn sorted_json_is_stable() {
        let p = Partition::new([1, 1, 1]).unwrap();
        let a = to_sorted_json(&build_multipartite(&p, false).unwrap());
        let b = to_sorted_json(&build_multipartite(&p, false).unwrap());
        assert_eq!(a, b);
        assert!(a.ends_with('\n'));
        let keys: Vec<usize> = ["canonical_shelling", "class_count", "cohen_macaulay"]
            .iter()
            .map(|k| a.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn validate_report_text_lists_all_checks() {
        let report = cross_validate(&Budgets {
            max_partition_total: 2,
            max_random_n: 3,
            samples: 6,
            seed: 5,
        });
        let wrapped = build_validate(report);
        assert!(wrapped.passed());
        let text = wrapped.render_text();
        assert!(text.contains("passed: true"));
        assert_eq!(text.lines().count(), 2 + 20 + 1);
        let v = serde_json::to_value(&wrapped).unwrap();
        assert_eq!(v["schema_version"], "1");
        assert!(v["passed"].as_bool().unwrap());
        assert_eq!(v["scope"]["samples"], 6);
    }
}
