//! Closed-form predictions for circulant specs: each known graph family
//! is a syntactic matcher on the normalized connection set, emitting a
//! claimed zero forcing number (exact or an interval) plus the status of
//! the maximum nullity for that family.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::circulant::CirculantSpec;

/// Which rule produced a prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyTag {
    /// Full connection set: the complete graph.
    Complete,
    /// Single unit jump: a plain cycle.
    Cycle,
    /// Full set minus one unit jump: complement of a cycle.
    CycleComplement,
    /// Jumps 1..d with 2d < n.
    Consecutive,
    /// Even-order spec whose odd jumps run up to half the order.
    BipartiteHighRun,
    /// Even-order spec with jumps 1, 3, ..., 2l-1.
    BipartiteOddRun,
    /// Cubic C_{2m}(1, m): the twisted prism (Moebius ladder).
    MobiusLadder,
    /// Cubic C_{2m}(2, m) with odd m: a prism.
    CubicPrism,
    /// Any cubic C_{2m}(a, m), via the content gcd of the jump.
    Cubic,
    /// C_{nm}(1, m, 2m, ..., m*floor(n/2)): a twisted ring of complete
    /// graphs.
    CompleteRing,
    /// The nine-vertex graph with jumps {1, 3}; exact by the explicit
    /// rational witness.
    NineExplicit,
    /// C_{3m}(1, 3) with m > 3.
    ThreeChordRing,
    /// C_{nm}(1, t) with t in {n, m}: twisted-torus interval from the
    /// girth bound below and the column construction above.
    TwistedTorusBounds,
    /// Fallback: regularity below, all-but-one above.
    DegreeBounds,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FamilyTag::Complete => "complete",
            FamilyTag::Cycle => "cycle",
            FamilyTag::CycleComplement => "cycle-complement",
            FamilyTag::Consecutive => "consecutive",
            FamilyTag::BipartiteHighRun => "bipartite-high-run",
            FamilyTag::BipartiteOddRun => "bipartite-odd-run",
            FamilyTag::MobiusLadder => "moebius-ladder",
            FamilyTag::CubicPrism => "cubic-prism",
            FamilyTag::Cubic => "cubic",
            FamilyTag::CompleteRing => "complete-ring",
            FamilyTag::NineExplicit => "nine-explicit",
            FamilyTag::ThreeChordRing => "three-chord-ring",
            FamilyTag::TwistedTorusBounds => "twisted-torus-bounds",
            FamilyTag::DegreeBounds => "degree-bounds",
        };
        f.write_str(name)
    }
}

/// A claimed zero forcing number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ZClaim {
    Exact(usize),
    Interval { lo: usize, hi: usize },
}

impl ZClaim {
    pub fn scaled(self, copies: usize) -> ZClaim {
        match self {
            ZClaim::Exact(v) => ZClaim::Exact(v * copies),
            ZClaim::Interval { lo, hi } => ZClaim::Interval {
                lo: lo * copies,
                hi: hi * copies,
            },
        }
    }

    pub fn admits(self, z: usize) -> bool {
        match self {
            ZClaim::Exact(v) => v == z,
            ZClaim::Interval { lo, hi } => lo <= z && z <= hi,
        }
    }

    /// Do two claims tolerate a common value?
    pub fn compatible(self, other: ZClaim) -> bool {
        let (alo, ahi) = self.bounds();
        let (blo, bhi) = other.bounds();
        alo.max(blo) <= ahi.min(bhi)
    }

    pub fn bounds(self) -> (usize, usize) {
        match self {
            ZClaim::Exact(v) => (v, v),
            ZClaim::Interval { lo, hi } => (lo, hi),
        }
    }
}

impl fmt::Display for ZClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZClaim::Exact(v) => write!(f, "Z = {v}"),
            ZClaim::Interval { lo, hi } => write!(f, "{lo} <= Z <= {hi}"),
        }
    }
}

/// What the family says about the maximum nullity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MStatus {
    /// The family proves M equal to the claimed Z.
    ProvedEqual,
    /// Only a lower bound on M is known.
    LowerBound(usize),
    Unknown,
}

/// One theorem-shaped claim about one spec.
#[derive(Clone, Debug, Serialize)]
pub struct Prediction {
    pub family: FamilyTag,
    pub z: ZClaim,
    pub m_status: MStatus,
    /// Human-readable rule description.
    pub citation: String,
    /// The matched parameter bindings.
    pub params: BTreeMap<String, String>,
    /// Unit multiplier whose rewrite exposed the family (1 = matched as
    /// given).
    pub multiplier: usize,
    /// Disjoint-copy factor already folded into the claim (1 = connected).
    pub copies: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Prediction {
    fn scaled(mut self, copies: usize, multiplier: usize) -> Prediction {
        self.z = self.z.scaled(copies);
        if let MStatus::LowerBound(b) = self.m_status {
            self.m_status = MStatus::LowerBound(b * copies);
        }
        self.copies = copies;
        self.multiplier = multiplier;
        self
    }
}

fn pred(
    family: FamilyTag,
    z: ZClaim,
    m_status: MStatus,
    citation: impl Into<String>,
    params: &[(&str, String)],
) -> Prediction {
    Prediction {
        family,
        z,
        m_status,
        citation: citation.into(),
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        multiplier: 1,
        copies: 1,
        note: None,
    }
}

/// All applicable closed-form claims for a spec.
///
/// Disconnected specs are decomposed first and per-copy claims scaled by
/// the copy count; families are then matched against every unit-multiplier
/// rewrite of the reduced spec, recording the multiplier that fired.
/// Cubic specs are additionally matched as given, since the cubic rule
/// handles its own decomposition through the jump gcd. The degree-bound
/// fallback is always present.
pub fn predict(spec: &CirculantSpec) -> Vec<Prediction> {
    let mut out: Vec<Prediction> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    let mut push = |out: &mut Vec<Prediction>, p: Prediction| {
        let key = (p.family, format!("{:?}|{:?}", p.z, p.m_status));
        if seen.insert(key) {
            out.push(p);
        }
    };

    if !spec.is_connected() {
        if let Some(p) = match_cubic(spec) {
            push(&mut out, p);
        }
    }

    let decomp = spec.decompose();
    let base = &decomp.reduced;
    for k in base.units() {
        let rewritten = base.rewrite(k).expect("unit");
        for p in match_connected(&rewritten) {
            push(&mut out, p.scaled(decomp.copies, k));
        }
    }
    push(&mut out, fallback(base).scaled(decomp.copies, 1));
    out
}

fn match_connected(sp: &CirculantSpec) -> Vec<Prediction> {
    let mut out = Vec::new();
    let mut add = |p: Option<Prediction>| {
        if let Some(p) = p {
            out.push(p);
        }
    };
    add(match_complete(sp));
    add(match_cycle(sp));
    add(match_cycle_complement(sp));
    add(match_consecutive(sp));
    add(match_bipartite_high_run(sp));
    add(match_bipartite_odd_run(sp));
    add(match_moebius_ladder(sp));
    add(match_cubic_prism(sp));
    add(match_cubic(sp));
    add(match_complete_ring(sp));
    add(match_nine_explicit(sp));
    add(match_three_chord_ring(sp));
    add(match_twisted_torus_bounds(sp));
    out
}

fn match_complete(sp: &CirculantSpec) -> Option<Prediction> {
    let n = sp.n();
    if n >= 2 && sp.s().iter().copied().eq(1..=n / 2) {
        Some(pred(
            FamilyTag::Complete,
            ZClaim::Exact(n - 1),
            MStatus::ProvedEqual,
            format!("complete graph on {n} vertices needs all but one vertex"),
            &[("n", n.to_string())],
        ))
    } else {
        None
    }
}

fn match_cycle(sp: &CirculantSpec) -> Option<Prediction> {
    // connected single-jump spec: gcd(n, j) = 1
    if sp.t() == 1 && sp.n() >= 3 {
        Some(pred(
            FamilyTag::Cycle,
            ZClaim::Exact(2),
            MStatus::ProvedEqual,
            "a single coprime jump realizes a plain cycle",
            &[("j", sp.s()[0].to_string())],
        ))
    } else {
        None
    }
}

fn match_cycle_complement(sp: &CirculantSpec) -> Option<Prediction> {
    let n = sp.n();
    if n < 5 || sp.t() + 1 != n / 2 {
        return None;
    }
    let missing = (1..=n / 2).find(|j| !sp.s().contains(j))?;
    if missing.gcd(&n) != 1 {
        return None;
    }
    Some(pred(
        FamilyTag::CycleComplement,
        ZClaim::Exact(n - 3),
        MStatus::ProvedEqual,
        "all jumps but one coprime jump realize a cycle complement",
        &[("n", n.to_string()), ("missing", missing.to_string())],
    ))
}

fn match_consecutive(sp: &CirculantSpec) -> Option<Prediction> {
    let d = sp.t();
    if sp.s().iter().copied().eq(1..=d) && 2 * d < sp.n() {
        Some(pred(
            FamilyTag::Consecutive,
            ZClaim::Exact(2 * d),
            MStatus::ProvedEqual,
            format!("consecutive jumps 1..{d} on more than {} vertices", 2 * d),
            &[("d", d.to_string())],
        ))
    } else {
        None
    }
}

/// Arithmetic step-2 run ending at the half order (odd half) or one below
/// it (even half).
fn match_bipartite_high_run(sp: &CirculantSpec) -> Option<Prediction> {
    let n = sp.n();
    if !n.is_multiple_of(2) {
        return None;
    }
    let half = n / 2;
    let s = sp.s();
    if s.len() < 2 || !s.windows(2).all(|w| w[1] - w[0] == 2) {
        return None;
    }
    let l = s.len() - 1;
    let top = *s.last().expect("nonempty");
    let expected_top = if half % 2 == 1 { half } else { half - 1 };
    if top != expected_top || half < 2 * l + 2 {
        return None;
    }
    let z = if half % 2 == 1 { 4 * l } else { 4 * l + 2 };
    Some(pred(
        FamilyTag::BipartiteHighRun,
        ZClaim::Exact(z),
        MStatus::ProvedEqual,
        "bipartite: top-anchored odd jump run normalizes to a sequential biadjacency",
        &[("half", half.to_string()), ("l", l.to_string())],
    ))
}

/// Jumps 1, 3, ..., 2l-1 on an even order.
fn match_bipartite_odd_run(sp: &CirculantSpec) -> Option<Prediction> {
    let n = sp.n();
    if !n.is_multiple_of(2) {
        return None;
    }
    let half = n / 2;
    let l = sp.t();
    if half <= 1 || !sp.s().iter().copied().eq((0..l).map(|i| 2 * i + 1)) {
        return None;
    }
    // validity of the spec already forces 2l - 1 <= half
    let z = if 2 * l - 1 == half { 4 * l - 4 } else { 4 * l - 2 };
    Some(pred(
        FamilyTag::BipartiteOddRun,
        ZClaim::Exact(z),
        MStatus::ProvedEqual,
        "bipartite: initial odd jump run normalizes to a sequential biadjacency",
        &[("half", half.to_string()), ("l", l.to_string())],
    ))
}

fn cubic_shape(sp: &CirculantSpec) -> Option<(usize, usize)> {
    // S = {a, m} with order 2m and a < m: the 3-regular circulants
    if sp.t() == 2 && 2 * sp.s()[1] == sp.n() && sp.s()[0] < sp.s()[1] {
        Some((sp.s()[0], sp.s()[1]))
    } else {
        None
    }
}

fn match_moebius_ladder(sp: &CirculantSpec) -> Option<Prediction> {
    let (a, m) = cubic_shape(sp)?;
    if a != 1 {
        return None;
    }
    let z = if m == 2 { 3 } else { 4 };
    Some(pred(
        FamilyTag::MobiusLadder,
        ZClaim::Exact(z),
        MStatus::ProvedEqual,
        "twisted prism on 2m vertices",
        &[("m", m.to_string())],
    ))
}

fn match_cubic_prism(sp: &CirculantSpec) -> Option<Prediction> {
    let (a, m) = cubic_shape(sp)?;
    if a != 2 || m < 3 || m % 2 == 0 {
        return None;
    }
    Some(pred(
        FamilyTag::CubicPrism,
        ZClaim::Exact(m.min(4)),
        MStatus::ProvedEqual,
        "prism over an odd cycle",
        &[("m", m.to_string())],
    ))
}

fn match_cubic(sp: &CirculantSpec) -> Option<Prediction> {
    let (a, m) = cubic_shape(sp)?;
    let n = sp.n();
    let t = a.gcd(&n);
    let q = n / t;
    let z = if q.is_multiple_of(2) {
        if m == 2 * t {
            3 * t
        } else {
            4 * t
        }
    } else if n == 3 * t {
        m
    } else {
        2 * t
    };
    Some(pred(
        FamilyTag::Cubic,
        ZClaim::Exact(z),
        MStatus::ProvedEqual,
        "cubic circulant, reduced through the jump gcd",
        &[
            ("a", a.to_string()),
            ("m", m.to_string()),
            ("t", t.to_string()),
        ],
    ))
}

/// S = {1, m, 2m, ..., m*floor(h/2)} with n = h m: a twisted ring of m
/// copies of the complete graph on h vertices.
fn match_complete_ring(sp: &CirculantSpec) -> Option<Prediction> {
    let s = sp.s();
    if s.len() < 2 || s[0] != 1 {
        return None;
    }
    let m = s[1];
    if m < 2 || !sp.n().is_multiple_of(m) {
        return None;
    }
    let h = sp.n() / m;
    if h < 3 {
        return None;
    }
    let b = h / 2;
    let expected: Vec<usize> = std::iter::once(1).chain((1..=b).map(|i| i * m)).collect();
    if s != expected {
        return None;
    }
    let z = match m {
        2 => h + 1,
        3 => 2 * h - 1,
        _ => 2 * h,
    };
    let m_status = if m == 4 || m == 6 {
        MStatus::ProvedEqual
    } else {
        MStatus::Unknown
    };
    let mut p = pred(
        FamilyTag::CompleteRing,
        ZClaim::Exact(z),
        m_status,
        format!("ring of {m} complete graphs on {h} vertices with a twist"),
        &[("h", h.to_string()), ("m", m.to_string())],
    );
    if m == 2 && h.is_multiple_of(2) {
        p.note = Some(format!(
            "largest jump {} sits on the half-order boundary",
            b * m
        ));
    }
    Some(p)
}

fn match_nine_explicit(sp: &CirculantSpec) -> Option<Prediction> {
    if sp.n() == 9 && sp.s() == [1, 3] {
        Some(pred(
            FamilyTag::NineExplicit,
            ZClaim::Exact(5),
            MStatus::ProvedEqual,
            "nine vertices, jumps {1,3}: exact by the explicit rank-4 witness",
            &[],
        ))
    } else {
        None
    }
}

fn match_three_chord_ring(sp: &CirculantSpec) -> Option<Prediction> {
    if sp.s() != [1, 3] || !sp.n().is_multiple_of(3) || sp.n() / 3 <= 3 {
        return None;
    }
    Some(pred(
        FamilyTag::ThreeChordRing,
        ZClaim::Exact(6),
        MStatus::Unknown,
        "jumps {1,3} on 3m vertices, m > 3: bounds meet at 6",
        &[("m", (sp.n() / 3).to_string())],
    ))
}

fn match_twisted_torus_bounds(sp: &CirculantSpec) -> Option<Prediction> {
    let s = sp.s();
    if s.len() != 2 || s[0] != 1 || s[1] < 3 {
        return None;
    }
    let t = s[1];
    if !sp.n().is_multiple_of(t) {
        return None;
    }
    let q = sp.n() / t;
    if q < 3 {
        return None;
    }
    let lo = if 3 * t == sp.n() { 4 } else { 6 };
    let hi = if q == t { 2 * t - 1 } else { 2 * t.min(q) };
    Some(pred(
        FamilyTag::TwistedTorusBounds,
        ZClaim::Interval { lo, hi },
        MStatus::Unknown,
        "twisted torus of two cycles: girth bound below, column fill above",
        &[("rows", q.to_string()), ("ring", t.to_string())],
    ))
}

fn fallback(sp: &CirculantSpec) -> Prediction {
    let lo = sp.degree();
    let hi = sp.n().saturating_sub(1).max(1);
    pred(
        FamilyTag::DegreeBounds,
        ZClaim::Interval { lo, hi },
        MStatus::Unknown,
        "regular-degree lower bound; all-but-one-vertex upper bound",
        &[("degree", lo.to_string())],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, s: &[usize]) -> CirculantSpec {
        CirculantSpec::new(n, s.to_vec()).unwrap()
    }

    fn exact_claims(preds: &[Prediction]) -> Vec<(FamilyTag, usize)> {
        preds
            .iter()
            .filter_map(|p| match p.z {
                ZClaim::Exact(v) => Some((p.family, v)),
                _ => None,
            })
            .collect()
    }

    #[test]
    fn complete_and_cycle() {
        let preds = predict(&spec(4, &[1, 2]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::Complete, 3)));
        // consecutive must not fire at 2d = n
        assert!(!preds.iter().any(|p| p.family == FamilyTag::Consecutive));
        let preds = predict(&spec(5, &[1]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::Cycle, 2)));
        let preds = predict(&spec(2, &[1]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::Complete, 1)));
        assert!(!predict(&spec(2, &[1]))
            .iter()
            .any(|p| p.family == FamilyTag::Cycle));
    }

    #[test]
    fn consecutive_families() {
        let preds = predict(&spec(8, &[1, 2]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::Consecutive, 4)));
        // multiples of a coprime jump rewrite into consecutive form
        let preds = predict(&spec(11, &[2, 4]));
        let hit = preds
            .iter()
            .find(|p| p.family == FamilyTag::Consecutive)
            .unwrap();
        assert_eq!(hit.z, ZClaim::Exact(4));
        assert!(hit.multiplier > 1);
    }

    #[test]
    fn complement_family() {
        let preds = predict(&spec(7, &[2, 3]));
        // C_7(2,3): missing jump 1; also rewrites to consecutive C_7(1,2)
        assert!(exact_claims(&preds).contains(&(FamilyTag::CycleComplement, 4)));
        assert!(exact_claims(&preds).contains(&(FamilyTag::Consecutive, 4)));
    }

    #[test]
    fn bipartite_families() {
        let preds = predict(&spec(14, &[3, 5, 7]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::BipartiteHighRun, 8)));
        let preds = predict(&spec(8, &[1, 3]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::BipartiteOddRun, 6)));
        // half = 2l - 1 switches to the complete-bipartite value
        let preds = predict(&spec(10, &[1, 3, 5]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::BipartiteOddRun, 8)));
        // near miss: half < 2l + 2 blocks the high-run rule
        assert!(!predict(&spec(10, &[1, 3, 5]))
            .iter()
            .any(|p| p.family == FamilyTag::BipartiteHighRun));
        // both bipartite rules can fire and must agree
        let preds = predict(&spec(12, &[1, 3, 5]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::BipartiteHighRun, 10)));
        assert!(exact_claims(&preds).contains(&(FamilyTag::BipartiteOddRun, 10)));
    }

    #[test]
    fn cubic_families() {
        let preds = predict(&spec(10, &[1, 5]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::MobiusLadder, 4)));
        assert!(exact_claims(&preds).contains(&(FamilyTag::Cubic, 4)));
        let preds = predict(&spec(10, &[2, 5]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::CubicPrism, 4)));
        let preds = predict(&spec(6, &[2, 3]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::CubicPrism, 3)));
        // disconnected cubic: matched as given and via decomposition
        let preds = predict(&spec(12, &[3, 6]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::Cubic, 9)));
        let complete = preds
            .iter()
            .find(|p| p.family == FamilyTag::Complete)
            .unwrap();
        assert_eq!(complete.z, ZClaim::Exact(9));
        assert_eq!(complete.copies, 3);
    }

    #[test]
    fn ring_families() {
        let preds = predict(&spec(12, &[1, 4]));
        let ring = preds
            .iter()
            .find(|p| p.family == FamilyTag::CompleteRing)
            .unwrap();
        assert_eq!(ring.z, ZClaim::Exact(6));
        assert_eq!(ring.m_status, MStatus::ProvedEqual);
        let preds = predict(&spec(10, &[1, 2, 4]));
        let ring = preds
            .iter()
            .find(|p| p.family == FamilyTag::CompleteRing)
            .unwrap();
        assert_eq!(ring.z, ZClaim::Exact(6));
        assert_eq!(ring.m_status, MStatus::Unknown);
        let preds = predict(&spec(8, &[1, 2, 4]));
        let ring = preds
            .iter()
            .find(|p| p.family == FamilyTag::CompleteRing)
            .unwrap();
        assert_eq!(ring.z, ZClaim::Exact(5));
        assert!(ring.note.is_some());
        let preds = predict(&spec(18, &[1, 6]));
        let ring = preds
            .iter()
            .find(|p| p.family == FamilyTag::CompleteRing)
            .unwrap();
        assert_eq!(ring.z, ZClaim::Exact(6));
        assert_eq!(ring.m_status, MStatus::ProvedEqual);
    }

    #[test]
    fn nine_and_three_chord() {
        let preds = predict(&spec(9, &[1, 3]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::NineExplicit, 5)));
        let ring = preds
            .iter()
            .find(|p| p.family == FamilyTag::CompleteRing)
            .unwrap();
        assert_eq!(ring.z, ZClaim::Exact(5));
        let preds = predict(&spec(15, &[1, 3]));
        assert!(exact_claims(&preds).contains(&(FamilyTag::ThreeChordRing, 6)));
        assert!(!predict(&spec(9, &[1, 3]))
            .iter()
            .any(|p| p.family == FamilyTag::ThreeChordRing));
    }

    #[test]
    fn twisted_torus_intervals() {
        let preds = predict(&spec(16, &[1, 4]));
        let tt = preds
            .iter()
            .find(|p| p.family == FamilyTag::TwistedTorusBounds)
            .unwrap();
        assert_eq!(tt.z, ZClaim::Interval { lo: 6, hi: 7 });
        let preds = predict(&spec(9, &[1, 3]));
        let tt = preds
            .iter()
            .find(|p| p.family == FamilyTag::TwistedTorusBounds)
            .unwrap();
        assert_eq!(tt.z, ZClaim::Interval { lo: 4, hi: 5 });
        let preds = predict(&spec(15, &[1, 5]));
        let tt = preds
            .iter()
            .find(|p| p.family == FamilyTag::TwistedTorusBounds)
            .unwrap();
        assert_eq!(tt.z, ZClaim::Interval { lo: 4, hi: 6 });
    }

    #[test]
    fn fallback_always_present() {
        let preds = predict(&spec(13, &[2, 5]));
        let fb = preds
            .iter()
            .find(|p| p.family == FamilyTag::DegreeBounds)
            .unwrap();
        assert_eq!(fb.z, ZClaim::Interval { lo: 4, hi: 12 });
    }

    #[test]
    fn claims_admit_and_combine() {
        assert!(ZClaim::Exact(5).admits(5));
        assert!(!ZClaim::Exact(5).admits(4));
        assert!(ZClaim::Interval { lo: 4, hi: 6 }.admits(6));
        assert!(ZClaim::Exact(5).compatible(ZClaim::Interval { lo: 4, hi: 6 }));
        assert!(!ZClaim::Exact(7).compatible(ZClaim::Interval { lo: 4, hi: 6 }));
    }
}
