//! Cross-validation harness: replays every stated invariant over an
//! exhaustive partition sweep and a seeded random-graph sample, and
//! assembles the outcome into a deterministic report.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::checkers::{
    cohen_macaulay_verdict, find_shelling, is_shelling_order, is_unmixed, is_vertex_decomposable,
    minimal_vertex_covers, multipartite_is_cm, multipartite_is_shellable, multipartite_is_unmixed,
    multipartite_is_vertex_decomposable, CmState,
};
use crate::complex::{count_mis, independence_complex, maximal_independent_sets, Complex};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits;
use crate::partition::Partition;
use crate::vertex_set::VertexSet;

/// Budgets for one cross-validation run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Budgets {
    /// Sweep all partitions of every total up to this value.
    pub max_partition_total: usize,
    /// Random graphs cycle through orders `1..=max_random_n`.
    pub max_random_n: usize,
    /// Number of random graphs to sample.
    pub samples: usize,
    /// Base seed; sample `k` uses `seed + k`.
    pub seed: u64,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            max_partition_total: 8,
            max_random_n: 8,
            samples: 200,
            seed: 42,
        }
    }
}

/// Outcome of a single named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub instances: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

/// Outcome of a full cross-validation run, checks sorted by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub scope: Budgets,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

/// All integer partitions of every total in `1..=max_total`, each in
/// canonical descending form; totals ascend and, within a total, larger
/// leading parts come first.
pub fn enumerate_partitions(max_total: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()).expect("parts are positive"));
            return;
        }
        for k in (1..=max_part.min(remaining)).rev() {
            prefix.push(k);
            rec(remaining - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    for total in 1..=max_total {
        rec(total, total, &mut prefix, &mut out);
    }
    out
}

/// A seeded Erdős–Rényi sample: every pair `u < v` becomes an edge
/// independently with the given probability. The same arguments always
/// produce the same graph.
pub fn random_graph(n: usize, edge_probability: f64, seed: u64) -> Result<Graph> {
    if n > limits::RANDOM_GRAPH_MAX_N {
        return Err(Error::limit(format!(
            "random graphs limited to {} vertices, got {n}",
            limits::RANDOM_GRAPH_MAX_N
        )));
    }
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::input(format!(
            "edge probability {edge_probability} is not in [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(edge_probability) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Whether the graph has at least as many maximal independent sets as its
/// chromatic number.
pub fn check_mis_chromatic_bound(g: &Graph) -> Result<bool> {
    Ok(count_mis(g)? >= g.chromatic_number()?)
}

/// The naive maximal-independent-set oracle: filter all `2^n` subsets for
/// independence and maximality. Only for cross-checking the real
/// enumerator; rejects graphs beyond 20 vertices.
pub fn mis_by_subset_filter(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.n();
    if n > 20 {
        return Err(Error::limit(format!(
            "subset filter limited to 20 vertices, got {n}"
        )));
    }
    let mut out = Vec::new();
    for mask in 0..(1u32 << n) {
        let s: VertexSet = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        let independent = s.iter().all(|u| (g.neighbors(u) & s).is_empty());
        if !independent {
            continue;
        }
        let maximal = (0..n)
            .filter(|&v| !s.contains(v))
            .all(|v| !(g.neighbors(v) & s).is_empty());
        if maximal {
            out.push(s);
        }
    }
    crate::complex::canonical_sort(&mut out);
    Ok(out)
}

/// The naive shellability oracle: try every permutation of the facets
/// against [`is_shelling_order`]. Exists to validate the subset dynamic
/// program independently; rejects complexes beyond 8 facets.
pub fn shellable_by_permutation_search(c: &Complex) -> Result<bool> {
    fn rec(c: &Complex, order: &mut Vec<usize>, k: usize) -> Result<bool> {
        if k == order.len() {
            return Ok(is_shelling_order(c, order)?.is_some());
        }
        for i in k..order.len() {
            order.swap(k, i);
            if rec(c, order, k + 1)? {
                return Ok(true);
            }
            order.swap(k, i);
        }
        Ok(false)
    }
    let s = c.facet_count();
    if s > 8 {
        return Err(Error::limit(format!(
            "permutation search limited to 8 facets, got {s}"
        )));
    }
    let mut order: Vec<usize> = (0..s).collect();
    rec(c, &mut order, 0)
}

struct Check {
    name: &'static str,
    instances: usize,
    failures: usize,
    first_counterexample: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Check {
        Check {
            name,
            instances: 0,
            failures: 0,
            first_counterexample: None,
        }
    }

    fn fail(&mut self, counterexample: String) {
        self.failures += 1;
        if self.first_counterexample.is_none() {
            self.first_counterexample = Some(counterexample);
        }
    }

    /// Records one instance. `Ok(None)` means the instance is out of the
    /// check's scope and is not counted.
    fn record(&mut self, outcome: Result<Option<bool>>, describe: impl FnOnce() -> String) {
        match outcome {
            Ok(None) => {}
            Ok(Some(true)) => self.instances += 1,
            Ok(Some(false)) => {
                self.instances += 1;
                self.fail(describe());
            }
            Err(e) => {
                self.instances += 1;
                let desc = describe();
                if desc.ends_with('\n') {
                    self.fail(format!("{desc}# error: {e}"));
                } else {
                    self.fail(format!("{desc} # error: {e}"));
                }
            }
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name.to_string(),
            instances: self.instances,
            failures: self.failures,
            first_counterexample: self.first_counterexample,
        }
    }
}

struct Sample {
    desc: String,
    n: usize,
    graph: Option<Graph>,
    error: Option<Error>,
}

fn build_samples(budgets: &Budgets) -> Vec<Sample> {
    if budgets.max_random_n == 0 {
        return Vec::new();
    }
    let probs = [0.2, 0.5, 0.8];
    (0..budgets.samples)
        .map(|k| {
            let n = (k % budgets.max_random_n) + 1;
            let p = probs[k % probs.len()];
            let seed = budgets.seed + k as u64;
            let header = format!("# sample n={n} p={p} seed={seed}\n");
            match random_graph(n, p, seed) {
                Ok(g) => Sample {
                    desc: format!("{header}{}", g.to_text()),
                    n,
                    graph: Some(g),
                    error: None,
                },
                Err(e) => Sample {
                    desc: header,
                    n,
                    graph: None,
                    error: Some(e),
                },
            }
        })
        .collect()
}

fn is_canonical_antichain(c: &Complex) -> bool {
    let facets = c.facets();
    for (i, f) in facets.iter().enumerate() {
        for (j, g) in facets.iter().enumerate() {
            if i != j && f.is_subset_of(g) {
                return false;
            }
        }
    }
    facets
        .windows(2)
        .all(|w| match w[1].len().cmp(&w[0].len()) {
            Ordering::Less => true,
            Ordering::Equal => w[0].lex_cmp(&w[1]) == Ordering::Less,
            Ordering::Greater => false,
        })
}

/// Runs one check over every partition in the sweep.
fn sweep_partitions(
    name: &'static str,
    partitions: &[Partition],
    f: impl Fn(&Partition) -> Result<Option<bool>>,
) -> CheckResult {
    let mut check = Check::new(name);
    for p in partitions {
        check.record(f(p), || p.to_csv());
    }
    check.finish()
}

/// Runs one check over every sampled graph of order at most `cap_n`;
/// failed sample generation counts as a failed instance.
fn sweep_samples(
    name: &'static str,
    samples: &[Sample],
    cap_n: usize,
    f: impl Fn(&Graph) -> Result<Option<bool>>,
) -> CheckResult {
    let mut check = Check::new(name);
    for s in samples {
        if s.n > cap_n {
            continue;
        }
        match (&s.graph, &s.error) {
            (Some(g), _) => check.record(f(g), || s.desc.clone()),
            (None, Some(e)) => check.record(Err(e.clone()), || s.desc.clone()),
            (None, None) => unreachable!("sample holds a graph or an error"),
        }
    }
    check.finish()
}

/// Runs one check over independence complexes from both sweeps.
fn sweep_complexes(
    name: &'static str,
    complexes: &[(String, Complex)],
    f: impl Fn(&Complex) -> Result<Option<bool>>,
) -> CheckResult {
    let mut check = Check::new(name);
    for (desc, c) in complexes {
        check.record(f(c), || desc.clone());
    }
    check.finish()
}

/// Replays every stated invariant at the given budgets and reports per
/// check how many instances ran, how many failed, and a first
/// counterexample in the input text format. Deterministic: identical
/// budgets produce identical reports. Operational errors inside a check
/// are recorded as failures rather than propagated.
pub fn cross_validate(budgets: &Budgets) -> ValidationReport {
    let partitions = enumerate_partitions(budgets.max_partition_total);
    let samples = build_samples(budgets);

    // independence complexes from both sweeps feed the complex-level checks
    let mut complexes: Vec<(String, Complex)> = Vec::new();
    for p in &partitions {
        if let Ok(g) = Graph::complete_multipartite(p) {
            if let Ok(c) = independence_complex(&g) {
                complexes.push((p.to_csv(), c));
            }
        }
    }
    for s in &samples {
        if let Some(g) = &s.graph {
            if let Ok(c) = independence_complex(g) {
                complexes.push((s.desc.clone(), c));
            }
        }
    }

    let mut checks = vec![
        sweep_partitions("multipartite_detect_roundtrip", &partitions, |p| {
            let g = Graph::complete_multipartite(p)?;
            Ok(Some(g.detect_multipartite()?.as_ref() == Some(p)))
        }),
        sweep_partitions(
            "multipartite_chromatic_equals_class_count",
            &partitions,
            |p| {
                let g = Graph::complete_multipartite(p)?;
                Ok(Some(g.chromatic_number()? == p.class_count()))
            },
        ),
        sweep_partitions(
            "multipartite_mis_count_equals_class_count",
            &partitions,
            |p| {
                let g = Graph::complete_multipartite(p)?;
                Ok(Some(count_mis(&g)? == p.class_count()))
            },
        ),
        sweep_partitions(
            "multipartite_shellable_fastpath_matches_search",
            &partitions,
            |p| {
                let c = independence_complex(&Graph::complete_multipartite(p)?)?;
                Ok(Some(
                    find_shelling(&c)?.is_some() == multipartite_is_shellable(p),
                ))
            },
        ),
        sweep_partitions(
            "multipartite_vd_fastpath_matches_recursion",
            &partitions,
            |p| {
                let c = independence_complex(&Graph::complete_multipartite(p)?)?;
                Ok(Some(
                    is_vertex_decomposable(&c)?.is_some() == multipartite_is_vertex_decomposable(p),
                ))
            },
        ),
        sweep_partitions("vd_implies_shellable", &partitions, |p| {
            let c = independence_complex(&Graph::complete_multipartite(p)?)?;
            Ok(Some(
                is_vertex_decomposable(&c)?.is_none() || find_shelling(&c)?.is_some(),
            ))
        }),
        sweep_partitions(
            "multipartite_unmixed_fastpath_matches_covers",
            &partitions,
            |p| {
                let g = Graph::complete_multipartite(p)?;
                let covers = minimal_vertex_covers(&g)?;
                let equal_sizes = covers.iter().all(|c| c.len() == covers[0].len());
                Ok(Some(equal_sizes == multipartite_is_unmixed(p)))
            },
        ),
        sweep_partitions("cm_and_shellable_iff_all_singletons", &partitions, |p| {
            let conj = multipartite_is_cm(p) && multipartite_is_shellable(p);
            Ok(Some(conj == p.parts().iter().all(|&k| k == 1)))
        }),
        sweep_partitions("cm_verdict_decisive_on_multipartite", &partitions, |p| {
            let g = Graph::complete_multipartite(p)?;
            Ok(Some(cohen_macaulay_verdict(&g)?.state != CmState::Unknown))
        }),
        {
            let mut check = Check::new("complete_graph_chromatic_equals_order");
            for n in 1..=budgets.max_partition_total.min(8) {
                let outcome = Graph::complete(n)
                    .and_then(|g| g.chromatic_number())
                    .map(|chi| Some(chi == n));
                check.record(outcome, || {
                    Partition::new(vec![1; n]).expect("singletons").to_csv()
                });
            }
            check.finish()
        },
        sweep_samples("complement_involution", &samples, 10, |g| {
            Ok(Some(g.complement().complement() == *g))
        }),
        sweep_samples("mis_independent_and_maximal", &samples, 10, |g| {
            let sets = maximal_independent_sets(g)?;
            let ok = sets.iter().all(|s| {
                let independent = s.iter().all(|u| (g.neighbors(u) & *s).is_empty());
                let maximal = (0..g.n())
                    .filter(|&v| !s.contains(v))
                    .all(|v| !(g.neighbors(v) & *s).is_empty());
                independent && maximal
            });
            Ok(Some(ok))
        }),
        sweep_samples("mis_matches_subset_filter", &samples, 12, |g| {
            Ok(Some(
                maximal_independent_sets(g)? == mis_by_subset_filter(g)?,
            ))
        }),
        sweep_samples("unmixed_equals_pure_complex", &samples, 10, |g| {
            Ok(Some(is_unmixed(g)? == independence_complex(g)?.is_pure()))
        }),
        sweep_samples(
            "mis_count_at_least_chromatic_number",
            &samples,
            usize::MAX,
            |g| check_mis_chromatic_bound(g).map(Some),
        ),
        sweep_complexes("link_of_empty_face_is_identity", &complexes, |c| {
            Ok(Some(c.link(&VertexSet::EMPTY)? == *c))
        }),
        sweep_complexes("delete_vertex_idempotent", &complexes, |c| {
            for v in c.support().iter() {
                let once = c.delete_vertex(v)?;
                if once.delete_vertex(v)? != once {
                    return Ok(Some(false));
                }
            }
            Ok(Some(true))
        }),
        sweep_complexes("facets_canonical_antichain", &complexes, |c| {
            if !is_canonical_antichain(c) {
                return Ok(Some(false));
            }
            if let Some(v) = c.support().min_vertex() {
                if !is_canonical_antichain(&c.delete_vertex(v)?) {
                    return Ok(Some(false));
                }
                if !is_canonical_antichain(&c.link(&VertexSet::singleton(v))?) {
                    return Ok(Some(false));
                }
            }
            Ok(Some(true))
        }),
        sweep_complexes("shelling_certificate_accepted", &complexes, |c| {
            if c.facet_count() > limits::SHELLING_MAX_FACETS {
                return Ok(None);
            }
            match find_shelling(c)? {
                Some(cert) => Ok(Some(is_shelling_order(c, &cert.order)?.is_some())),
                None => Ok(Some(true)),
            }
        }),
        sweep_complexes("shelling_dp_matches_permutation_search", &complexes, |c| {
            if c.facet_count() > 7 {
                return Ok(None);
            }
            Ok(Some(
                find_shelling(c)?.is_some() == shellable_by_permutation_search(c)?,
            ))
        }),
    ];

    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let passed = checks.iter().all(|c| c.failures == 0);
    ValidationReport {
        scope: budgets.clone(),
        checks,
        passed,
    }
}
