//! Prediction-versus-search verification and the exhaustive consistency
//! sweep. A report records every claim, the evidence brought against it,
//! and a verdict; any contradicted verdict is a hard failure surfaced in
//! the exit status.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::circulant::CirculantSpec;
use crate::families::{predict, FamilyTag, MStatus, Prediction, ZClaim};
use crate::forcing::{
    is_forcing_set, witness_set, zf_exact, zf_lower_bounds, SearchOptions, WitnessConstruction,
    DEFAULT_CEILING, MAX_SEARCH_ORDER,
};
use crate::graph::Graph;
use crate::linalg::{
    biadjacency_exponents, c913_vertex_map, pattern_graph, sequential_normalize,
    torus_pattern_map, witness_c913, witness_k4, witness_k6,
};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub ceiling: usize,
    pub budget: Option<Duration>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            ceiling: DEFAULT_CEILING,
            budget: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Exact search (or exact evidence) pinned the claim down.
    Confirmed,
    /// No exact value available, but every bound agrees with the claim.
    BoundConsistent,
    /// Hard failure: the claim disagrees with exact evidence.
    Contradicted,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckedPrediction {
    #[serde(flatten)]
    pub prediction: Prediction,
    pub verdict: Verdict,
    pub method: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchRecord {
    pub z: usize,
    pub witness: Vec<usize>,
    pub forces: usize,
}

/// A piece of exact evidence gathered alongside the predictions: a
/// witness-matrix nullity, a constructive forcing set, or a sequential
/// biadjacency certificate. Values are per connected copy.
#[derive(Clone, Debug, Serialize)]
pub struct EvidenceRecord {
    pub kind: String,
    pub name: String,
    pub value: usize,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub spec: String,
    pub order: usize,
    pub degree: usize,
    pub connected: bool,
    pub copies: usize,
    pub reduced: String,
    pub lower_bound: usize,
    pub search: Option<SearchRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search_skipped: Option<String>,
    pub predictions: Vec<CheckedPrediction>,
    pub evidence: Vec<EvidenceRecord>,
    pub contradictions: Vec<String>,
    pub incomplete: bool,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.contradictions.is_empty()
            && !self
                .predictions
                .iter()
                .any(|p| p.verdict == Verdict::Contradicted)
    }

    /// Aligned human-readable rendering.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "spec {}  order {}  degree {}  copies {}  reduced {}",
            self.spec, self.order, self.degree, self.copies, self.reduced
        );
        let _ = writeln!(out, "lower bound {}", self.lower_bound);
        match &self.search {
            Some(s) => {
                let _ = writeln!(out, "search Z = {}  witness {:?}", s.z, s.witness);
            }
            None => {
                let _ = writeln!(
                    out,
                    "search skipped: {}",
                    self.search_skipped.as_deref().unwrap_or("-")
                );
            }
        }
        let _ = writeln!(
            out,
            "{:<22} {:<16} {:<14} {:>4} {:>6}  verdict",
            "family", "claim", "max nullity", "mult", "copies"
        );
        for p in &self.predictions {
            let m = match p.prediction.m_status {
                MStatus::ProvedEqual => "equals Z".to_string(),
                MStatus::LowerBound(b) => format!(">= {b}"),
                MStatus::Unknown => "unknown".to_string(),
            };
            let _ = writeln!(
                out,
                "{:<22} {:<16} {:<14} {:>4} {:>6}  {:?}",
                p.prediction.family.to_string(),
                p.prediction.z.to_string(),
                m,
                p.prediction.multiplier,
                p.prediction.copies,
                p.verdict
            );
        }
        for e in &self.evidence {
            let _ = writeln!(out, "evidence {}: {} = {}  ({})", e.kind, e.name, e.value, e.detail);
        }
        for c in &self.contradictions {
            let _ = writeln!(out, "CONTRADICTED: {c}");
        }
        out
    }
}

fn param(p: &Prediction, key: &str) -> Option<usize> {
    p.params.get(key).and_then(|v| v.parse().ok())
}

/// Check every applicable closed-form claim for `spec` against exact
/// search, witness-matrix nullities, constructive forcing sets, and the
/// sequential biadjacency certificate.
pub fn verify(spec: &CirculantSpec, opts: &VerifyOptions) -> VerificationReport {
    let started = Instant::now();
    let out_of_budget = |flag: &mut bool| -> bool {
        let over = opts.budget.is_some_and(|lim| started.elapsed() >= lim);
        *flag |= over;
        over
    };

    let decomp = spec.decompose();
    let graph = spec.build();
    let lower_bound = zf_lower_bounds(&graph);
    let predictions = predict(spec);
    let mut incomplete = false;
    let mut contradictions: Vec<String> = Vec::new();
    let mut evidence: Vec<EvidenceRecord> = Vec::new();

    // exact search
    let cap = opts.ceiling.min(MAX_SEARCH_ORDER);
    let mut search_skipped = None;
    let search = if graph.order() > cap {
        search_skipped = Some(format!("order {} above ceiling {cap}", graph.order()));
        None
    } else if out_of_budget(&mut incomplete) {
        search_skipped = Some("budget exhausted".into());
        None
    } else {
        let outcome = zf_exact(
            &graph,
            &SearchOptions {
                ceiling: cap,
                fix_first_vertex: true,
                aggressive: false,
                hints: Some((lower_bound, graph.order())),
            },
        )
        .expect("order checked against ceiling");
        let cert = is_forcing_set(&graph, &outcome.witness)
            .expect("witness has the right order")
            .expect("search witness must force");
        cert.replay(&graph).expect("fresh certificate replays");
        Some(SearchRecord {
            z: outcome.z,
            witness: outcome.witness.iter().collect(),
            forces: cert.chronology.len(),
        })
    };
    if let Some(s) = &search {
        if lower_bound > s.z {
            contradictions.push(format!(
                "lower bound {lower_bound} exceeds searched Z = {}",
                s.z
            ));
        }
    }

    // witness evidence keyed off the matched families
    for p in &predictions {
        if out_of_budget(&mut incomplete) {
            break;
        }
        match p.family {
            FamilyTag::NineExplicit => {
                let w = witness_c913();
                let nullity = w.nullity();
                let target = CirculantSpec::new(9, vec![1, 3]).expect("valid").build();
                let pattern_ok = pattern_graph(&w)
                    .map(|g| g.relabel(&c913_vertex_map()) == target)
                    .unwrap_or(false);
                if !pattern_ok {
                    contradictions.push("nine-vertex witness support mismatch".into());
                }
                push_nullity_evidence(
                    &mut evidence,
                    &mut contradictions,
                    "nine-vertex-witness",
                    nullity,
                    p,
                    &search,
                    decomp.copies,
                );
            }
            FamilyTag::CompleteRing => {
                let (Some(h), Some(m)) = (param(p, "h"), param(p, "m")) else {
                    continue;
                };
                if m == 4 || m == 6 {
                    let built = if m == 4 { witness_k4(h) } else { witness_k6(h) };
                    match built {
                        Ok(k) => {
                            let nullity = k.nullity();
                            let pattern_ok = pattern_graph(&k)
                                .map(|g| {
                                    let torus = Graph::complete(h)
                                        .torus_product(m)
                                        .expect("m >= 4");
                                    g.relabel(&torus_pattern_map(h, m)) == torus
                                })
                                .unwrap_or(false);
                            if !pattern_ok {
                                contradictions
                                    .push(format!("ring witness support mismatch for m={m}"));
                            }
                            push_nullity_evidence(
                                &mut evidence,
                                &mut contradictions,
                                &format!("ring-witness-{m}"),
                                nullity,
                                p,
                                &search,
                                decomp.copies,
                            );
                        }
                        Err(e) => contradictions.push(format!("ring witness failed: {e}")),
                    }
                }
                let construction = if m == 2 {
                    WitnessConstruction::ClosedNeighborhood { n: h }
                } else if m == 3 {
                    WitnessConstruction::ThreeColumns { n: h }
                } else {
                    WitnessConstruction::TwoColumns { n: h, m }
                };
                push_forcing_evidence(
                    &mut evidence,
                    &mut contradictions,
                    &construction,
                    &search,
                    decomp.copies,
                );
            }
            FamilyTag::TwistedTorusBounds => {
                let (Some(rows), Some(ring)) = (param(p, "rows"), param(p, "ring")) else {
                    continue;
                };
                let construction = WitnessConstruction::CycleColumns { n: rows, m: ring };
                push_forcing_evidence(
                    &mut evidence,
                    &mut contradictions,
                    &construction,
                    &search,
                    decomp.copies,
                );
                // the interval's lower end is exactly the girth bound
                let (lo, _) = p.z.bounds();
                if lo != lower_bound {
                    contradictions.push(format!(
                        "twisted-torus lower end {lo} disagrees with girth bound {lower_bound}"
                    ));
                }
            }
            _ => {}
        }
    }

    // sequential biadjacency certificate for connected bipartite pieces;
    // the single-column biadjacency of K_2 says nothing (t = 0 but Z = 1)
    if decomp.reduced.is_bipartite() && decomp.reduced.n() >= 4 && !out_of_budget(&mut incomplete)
    {
        if let Ok(exponents) = biadjacency_exponents(&decomp.reduced) {
            if let Some((a, b, t)) = sequential_normalize(&exponents, decomp.reduced.n() / 2) {
                let implied = 2 * t * decomp.copies;
                evidence.push(EvidenceRecord {
                    kind: "sequential-biadjacency".into(),
                    name: format!("a={a},b={b},t={t}"),
                    value: 2 * t,
                    detail: format!(
                        "biadjacency normalizes to an initial run; M = Z = {} per copy",
                        2 * t
                    ),
                });
                if let Some(s) = &search {
                    if s.z != implied {
                        contradictions.push(format!(
                            "sequential biadjacency implies Z = {implied}, search found {}",
                            s.z
                        ));
                    }
                }
            }
        }
    }

    // verdicts
    let checked: Vec<CheckedPrediction> = predictions
        .into_iter()
        .map(|p| match &search {
            Some(s) => {
                let verdict = if p.z.admits(s.z) {
                    Verdict::Confirmed
                } else {
                    Verdict::Contradicted
                };
                CheckedPrediction {
                    prediction: p,
                    verdict,
                    method: "exact-search".into(),
                }
            }
            None => {
                let (lo, hi) = p.z.bounds();
                let roof = upper_evidence(&evidence, decomp.copies).unwrap_or(usize::MAX);
                let verdict = if hi < lower_bound || lo > roof {
                    Verdict::Contradicted
                } else {
                    Verdict::BoundConsistent
                };
                CheckedPrediction {
                    prediction: p,
                    verdict,
                    method: "bound-consistency".into(),
                }
            }
        })
        .collect();

    for c in &checked {
        if c.verdict == Verdict::Contradicted {
            contradictions.push(format!(
                "{} claims {}, against exact evidence",
                c.prediction.family, c.prediction.z
            ));
        }
    }
    for (i, a) in checked.iter().enumerate() {
        for b in checked.iter().skip(i + 1) {
            if !a.prediction.z.compatible(b.prediction.z) {
                contradictions.push(format!(
                    "{} ({}) and {} ({}) cannot both hold",
                    a.prediction.family, a.prediction.z, b.prediction.family, b.prediction.z
                ));
            }
        }
    }

    VerificationReport {
        spec: spec.to_string(),
        order: spec.n(),
        degree: spec.degree(),
        connected: decomp.copies == 1,
        copies: decomp.copies,
        reduced: decomp.reduced.to_string(),
        lower_bound,
        search,
        search_skipped,
        predictions: checked,
        evidence,
        contradictions,
        incomplete,
    }
}

/// Smallest upper bound the gathered evidence supports, scaled to the
/// whole graph.
fn upper_evidence(evidence: &[EvidenceRecord], copies: usize) -> Option<usize> {
    evidence
        .iter()
        .filter(|e| e.kind == "forcing-set")
        .map(|e| e.value * copies)
        .min()
}

fn push_nullity_evidence(
    evidence: &mut Vec<EvidenceRecord>,
    contradictions: &mut Vec<String>,
    name: &str,
    nullity: usize,
    p: &Prediction,
    search: &Option<SearchRecord>,
    copies: usize,
) {
    evidence.push(EvidenceRecord {
        kind: "matrix-nullity".into(),
        name: name.into(),
        value: nullity,
        detail: "exact nullity of the explicit witness matrix, per copy".into(),
    });
    let scaled = nullity * copies;
    if let Some(s) = search {
        if scaled > s.z {
            contradictions.push(format!(
                "nullity {scaled} of {name} exceeds searched Z = {}",
                s.z
            ));
        }
        if p.m_status == MStatus::ProvedEqual && scaled != s.z {
            contradictions.push(format!(
                "{} asserts M = Z but nullity {scaled} != Z = {}",
                p.family, s.z
            ));
        }
    }
    if p.m_status == MStatus::ProvedEqual && p.z != ZClaim::Exact(scaled) {
        contradictions.push(format!(
            "{} claims {} but its witness nullity is {scaled}",
            p.family, p.z
        ));
    }
}

fn push_forcing_evidence(
    evidence: &mut Vec<EvidenceRecord>,
    contradictions: &mut Vec<String>,
    construction: &WitnessConstruction,
    search: &Option<SearchRecord>,
    copies: usize,
) {
    match witness_set(construction) {
        Ok((g, f)) => {
            let size = f.card();
            evidence.push(EvidenceRecord {
                kind: "forcing-set".into(),
                name: format!("{construction:?}"),
                value: size,
                detail: format!(
                    "closure-verified forcing set on the {}-vertex product, per copy",
                    g.order()
                ),
            });
            if let Some(s) = search {
                if s.z > size * copies {
                    contradictions.push(format!(
                        "searched Z = {} exceeds the {size}-vertex constructive witness",
                        s.z
                    ));
                }
            }
        }
        Err(e) => contradictions.push(format!("construction failed: {e}")),
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub max_n: usize,
    pub ceiling: usize,
    pub budget: Option<Duration>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_n: 16,
            ceiling: DEFAULT_CEILING,
            budget: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub spec: String,
    pub z: usize,
    pub lower_bound: usize,
    pub claims: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub max_n: usize,
    pub specs_checked: usize,
    pub predictions_checked: usize,
    pub confirmed: usize,
    pub bound_consistent: usize,
    pub contradictions: Vec<String>,
    pub incomplete: bool,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.contradictions.is_empty()
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "sweep through n = {}: {} specs, {} predictions ({} confirmed, {} bound-consistent)",
            self.max_n,
            self.specs_checked,
            self.predictions_checked,
            self.confirmed,
            self.bound_consistent
        );
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{:<14} Z = {:<3} lb = {:<3} {}",
                row.spec,
                row.z,
                row.lower_bound,
                row.claims.join("; ")
            );
        }
        for c in &self.contradictions {
            let _ = writeln!(out, "CONTRADICTED: {c}");
        }
        if self.incomplete {
            let _ = writeln!(out, "budget exhausted: report is incomplete");
        }
        out
    }
}

/// Every connected spec with order up to `max_n`, in lexicographic order.
pub fn connected_specs(max_n: usize) -> Vec<CirculantSpec> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        let half = n / 2;
        for mask in 1u64..(1u64 << half) {
            let s: Vec<usize> = (1..=half).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let spec = CirculantSpec::new(n, s).expect("in-range jumps");
            if spec.is_connected() {
                out.push(spec);
            }
        }
    }
    out
}

/// Exhaustive non-contradiction sweep: verify every connected circulant
/// up to `max_n` vertices and aggregate verdicts. Runs in parallel when
/// no budget is set; the aggregate is ordered by spec either way.
pub fn sweep(opts: &SweepOptions) -> SweepReport {
    let specs = connected_specs(opts.max_n);
    let verify_opts = VerifyOptions {
        ceiling: opts.ceiling,
        budget: None,
    };
    let started = Instant::now();
    let mut incomplete = false;
    let reports: Vec<VerificationReport> = if opts.budget.is_some() {
        let mut acc = Vec::new();
        for spec in &specs {
            if opts.budget.is_some_and(|lim| started.elapsed() >= lim) {
                incomplete = true;
                break;
            }
            acc.push(verify(spec, &verify_opts));
        }
        acc
    } else {
        specs.par_iter().map(|s| verify(s, &verify_opts)).collect()
    };

    let mut report = SweepReport {
        max_n: opts.max_n,
        specs_checked: reports.len(),
        predictions_checked: 0,
        confirmed: 0,
        bound_consistent: 0,
        contradictions: Vec::new(),
        incomplete,
        rows: Vec::new(),
    };
    for r in reports {
        report.predictions_checked += r.predictions.len();
        let mut claims = Vec::new();
        for p in &r.predictions {
            match p.verdict {
                Verdict::Confirmed => report.confirmed += 1,
                Verdict::BoundConsistent => report.bound_consistent += 1,
                Verdict::Contradicted => {}
            }
            claims.push(format!("{}: {}", p.prediction.family, p.prediction.z));
        }
        for c in &r.contradictions {
            report.contradictions.push(format!("{}: {c}", r.spec));
        }
        report.rows.push(SweepRow {
            spec: r.spec.clone(),
            z: r.search.as_ref().map_or(0, |s| s.z),
            lower_bound: r.lower_bound,
            claims,
        });
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(text: &str) -> CirculantSpec {
        CirculantSpec::parse(text).unwrap()
    }

    #[test]
    fn verify_nine_explicit() {
        let r = verify(&spec("C9(1,3)"), &VerifyOptions::default());
        assert!(r.ok(), "contradictions: {:?}", r.contradictions);
        assert_eq!(r.search.as_ref().unwrap().z, 5);
        assert!(r
            .evidence
            .iter()
            .any(|e| e.kind == "matrix-nullity" && e.value == 5));
        assert!(r
            .predictions
            .iter()
            .all(|p| p.verdict == Verdict::Confirmed));
    }

    #[test]
    fn verify_ring_with_matrix_witness() {
        let r = verify(&spec("C12(1,4)"), &VerifyOptions::default());
        assert!(r.ok(), "contradictions: {:?}", r.contradictions);
        assert_eq!(r.search.as_ref().unwrap().z, 6);
        assert!(r
            .evidence
            .iter()
            .any(|e| e.name == "ring-witness-4" && e.value == 6));
    }

    #[test]
    fn verify_three_chord() {
        let r = verify(&spec("C15(1,3)"), &VerifyOptions::default());
        assert!(r.ok(), "contradictions: {:?}", r.contradictions);
        assert_eq!(r.search.as_ref().unwrap().z, 6);
    }

    #[test]
    fn verify_above_ceiling_is_bound_consistent() {
        let r = verify(&spec("C30(1,6,12)"), &VerifyOptions::default());
        assert!(r.ok(), "contradictions: {:?}", r.contradictions);
        assert!(r.search.is_none());
        assert!(r.search_skipped.is_some());
        assert!(r
            .predictions
            .iter()
            .all(|p| p.verdict == Verdict::BoundConsistent));
        // the 6-ring witness still certifies M = 10 per copy
        assert!(r
            .evidence
            .iter()
            .any(|e| e.name == "ring-witness-6" && e.value == 10));
    }

    #[test]
    fn verify_disconnected_scales() {
        let r = verify(&spec("C12(3,6)"), &VerifyOptions::default());
        assert!(r.ok(), "contradictions: {:?}", r.contradictions);
        assert_eq!(r.copies, 3);
        assert_eq!(r.search.as_ref().unwrap().z, 9);
    }

    #[test]
    fn sweep_small_is_clean() {
        let report = sweep(&SweepOptions {
            max_n: 10,
            ..Default::default()
        });
        assert!(report.ok(), "contradictions: {:?}", report.contradictions);
        assert!(report.specs_checked > 0);
        assert_eq!(
            report.rows.len(),
            report.specs_checked,
            "one row per spec"
        );
        // every row carries a searched value at this size
        assert!(report.rows.iter().all(|r| r.z >= 1));
    }

    #[test]
    fn budgeted_sweep_marks_incomplete() {
        let report = sweep(&SweepOptions {
            max_n: 16,
            ceiling: 24,
            budget: Some(Duration::ZERO),
        });
        assert!(report.incomplete);
        assert_eq!(report.specs_checked, 0);
    }
}
