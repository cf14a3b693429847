//! The zero forcing game: closure under the filling rule, forcing-set
//! certificates, lower bounds, and exact `Z(G)` by pruned search.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::error::Error;
use crate::graph::Graph;

/// A fill state is just a vertex set; the alias marks intent in signatures.
pub type FillState = VertexSet;

/// Hard cap on searchable orders; candidate sets are packed into one word.
pub const MAX_SEARCH_ORDER: usize = 63;

/// Default search ceiling. Everything the closed-form catalog needs fits.
pub const DEFAULT_CEILING: usize = 24;

/// A replayable run of the filling rule from an initial set to the full
/// vertex set: `chronology[i] = (forcing vertex, forced vertex)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingCertificate {
    pub initial: FillState,
    pub chronology: Vec<(usize, usize)>,
}

impl ForcingCertificate {
    /// Re-run the chronology, checking at every step that the forcing
    /// vertex is filled and the forced vertex is its only unfilled
    /// neighbor, and that the final state is the whole vertex set.
    pub fn replay(&self, g: &Graph) -> Result<(), Error> {
        check_state(g, &self.initial)?;
        let mut filled = self.initial.clone();
        for &(v, w) in &self.chronology {
            if !filled.contains(v) {
                return Err(Error::Inconsistent(format!(
                    "forcing vertex {v} is not filled at its step"
                )));
            }
            let unfilled = g.adjacency(v).minus(&filled);
            if unfilled.sole_member() != Some(w) {
                return Err(Error::Inconsistent(format!(
                    "vertex {v} cannot force {w}: unfilled neighbors are {unfilled}"
                )));
            }
            filled.insert(w);
        }
        if !filled.is_full() {
            return Err(Error::Inconsistent(format!(
                "chronology ends before the graph is filled: {filled}"
            )));
        }
        Ok(())
    }
}

fn check_state(g: &Graph, state: &FillState) -> Result<(), Error> {
    if state.len() != g.order() {
        return Err(Error::OrderMismatch {
            mask: state.len(),
            graph: g.order(),
        });
    }
    Ok(())
}

/// The final filling of `filled`: the unique fixed point of the rule "a
/// filled vertex with exactly one unfilled neighbor fills it".
pub fn closure(g: &Graph, filled: &FillState) -> Result<FillState, Error> {
    check_state(g, filled)?;
    Ok(close_generic(g, filled, None))
}

/// Closure plus the order in which forces fired.
pub fn closure_with_chronology(
    g: &Graph,
    filled: &FillState,
) -> Result<(FillState, Vec<(usize, usize)>), Error> {
    check_state(g, filled)?;
    let mut chron = Vec::new();
    let out = close_generic(g, filled, Some(&mut chron));
    Ok((out, chron))
}

/// Certificate that `filled` is a zero forcing set, or `None` if its
/// closure stalls short of the full vertex set.
pub fn is_forcing_set(g: &Graph, filled: &FillState) -> Result<Option<ForcingCertificate>, Error> {
    let (end, chronology) = closure_with_chronology(g, filled)?;
    if end.is_full() {
        Ok(Some(ForcingCertificate {
            initial: filled.clone(),
            chronology,
        }))
    } else {
        Ok(None)
    }
}

/// Queue of candidate forcers; a vertex re-enters whenever a neighbor is
/// filled, so each is rechecked only when its unfilled count changed.
fn close_generic(
    g: &Graph,
    start: &FillState,
    mut record: Option<&mut Vec<(usize, usize)>>,
) -> FillState {
    let mut filled = start.clone();
    let mut queue: VecDeque<usize> = filled.iter().collect();
    while let Some(v) = queue.pop_front() {
        let unfilled = g.adjacency(v).minus(&filled);
        if let Some(w) = unfilled.sole_member() {
            filled.insert(w);
            if let Some(rec) = record.as_deref_mut() {
                rec.push((v, w));
            }
            queue.push_back(w);
            for u in g.adjacency(w).iter() {
                if filled.contains(u) {
                    queue.push_back(u);
                }
            }
        }
    }
    filled
}

/// Word-packed closure for orders up to 63, used by the search inner loop.
fn close_words(adj: &[u64], full: u64, mut filled: u64, queue: &mut Vec<u32>) -> u64 {
    queue.clear();
    let mut seed = filled;
    while seed != 0 {
        queue.push(seed.trailing_zeros());
        seed &= seed - 1;
    }
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head] as usize;
        head += 1;
        let unfilled = adj[v] & !filled;
        if unfilled != 0 && unfilled & (unfilled - 1) == 0 {
            filled |= unfilled;
            if filled == full {
                return filled;
            }
            let w = unfilled.trailing_zeros();
            queue.push(w);
            let mut touched = adj[w as usize] & filled;
            while touched != 0 {
                queue.push(touched.trailing_zeros());
                touched &= touched - 1;
            }
        }
    }
    filled
}

/// Best lower bound on `Z(G)` from regularity and girth, summed over
/// components. A k-regular component forces `Z >= k`; a component with
/// minimum degree `d >= 2` and girth `g` forces `Z >= (g-3)(d-2) + d`.
/// Inapplicable bounds are skipped; every nonempty component counts 1.
pub fn zf_lower_bounds(g: &Graph) -> usize {
    g.components()
        .iter()
        .map(|comp| component_lower_bound(&g.induced(comp)))
        .sum()
}

fn component_lower_bound(g: &Graph) -> usize {
    let mut best = usize::from(g.order() > 0);
    if let Some(k) = g.regular_degree() {
        best = best.max(k);
    }
    let delta = g.min_degree();
    if delta >= 2 {
        if let Some(girth) = g.girth() {
            best = best.max((girth - 3) * (delta - 2) + delta);
        }
    }
    best
}

/// Knobs for [`zf_exact`].
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Refuse graphs larger than this; never answer heuristically.
    pub ceiling: usize,
    /// Sound only for vertex-transitive graphs (all circulants): some
    /// minimum forcing set contains vertex 0, so candidates are forced to.
    pub fix_first_vertex: bool,
    /// Also prune candidates that miss a previously discovered fort (an
    /// unfilled region no outside vertex sees exactly once). Must agree
    /// with the default mode; kept optional.
    pub aggressive: bool,
    /// Trusted (lower, upper) bracket; the lower end seeds the size loop.
    pub hints: Option<(usize, usize)>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            ceiling: DEFAULT_CEILING,
            fix_first_vertex: false,
            aggressive: false,
            hints: None,
        }
    }
}

/// Result of an exact search: the zero forcing number and a witness
/// attaining it (the least candidate mask of minimum size, with vertex 0
/// first when `fix_first_vertex` is set).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub z: usize,
    pub witness: FillState,
}

/// Exact `Z(G)` by exhaustive size-by-size candidate enumeration with
/// closure testing. Disconnected graphs are solved per component and
/// summed; the whole graph must still fit under the ceiling.
pub fn zf_exact(g: &Graph, opts: &SearchOptions) -> Result<SearchOutcome, Error> {
    let n = g.order();
    let cap = opts.ceiling.min(MAX_SEARCH_ORDER);
    if n > cap {
        return Err(Error::CeilingExceeded {
            order: n,
            ceiling: cap,
        });
    }
    if n == 0 {
        return Ok(SearchOutcome {
            z: 0,
            witness: VertexSet::empty(0),
        });
    }
    let comps = g.components();
    if comps.len() == 1 {
        return search_connected(g, opts);
    }
    let mut z = 0;
    let mut witness = VertexSet::empty(n);
    for comp in &comps {
        let sub = g.induced(comp);
        let sub_opts = SearchOptions {
            hints: None,
            ..opts.clone()
        };
        let out = search_connected(&sub, &sub_opts)?;
        z += out.z;
        for i in out.witness.iter() {
            witness.insert(comp[i]);
        }
    }
    Ok(SearchOutcome { z, witness })
}

fn search_connected(g: &Graph, opts: &SearchOptions) -> Result<SearchOutcome, Error> {
    let n = g.order();
    let adj = g
        .adjacency_words()
        .expect("search order fits in one word");
    let full: u64 = if n == 64 { !0 } else { (1u64 << n) - 1 };
    // Z >= min degree: the first force needs a filled vertex with all
    // neighbors but one filled, and nothing has fired before it.
    let mut start_k = g.min_degree().max(1);
    if let Some((lo, _)) = opts.hints {
        start_k = start_k.max(lo);
    }
    let mut queue: Vec<u32> = Vec::with_capacity(4 * n);
    let mut forts: Vec<u64> = Vec::new();
    for k in start_k..=n {
        let found = if opts.fix_first_vertex {
            SubsetMasks::new(n - 1, k - 1)
                .map(|sub| (sub << 1) | 1)
                .find(|&mask| accept(&adj, full, mask, opts, &mut queue, &mut forts))
        } else {
            SubsetMasks::new(n, k)
                .find(|&mask| accept(&adj, full, mask, opts, &mut queue, &mut forts))
        };
        if let Some(mask) = found {
            return Ok(SearchOutcome {
                z: k,
                witness: VertexSet::from_word(n, mask),
            });
        }
    }
    unreachable!("the full vertex set always forces");
}

fn accept(
    adj: &[u64],
    full: u64,
    mask: u64,
    opts: &SearchOptions,
    queue: &mut Vec<u32>,
    forts: &mut Vec<u64>,
) -> bool {
    if opts.aggressive && forts.iter().any(|&f| mask & f == 0) {
        // a forcing set must meet every fort
        return false;
    }
    let closed = close_words(adj, full, mask, queue);
    if closed == full {
        return true;
    }
    if opts.aggressive && forts.len() < 64 {
        let fort = full & !closed;
        if !forts.contains(&fort) {
            forts.push(fort);
        }
    }
    false
}

/// Same-cardinality masks over `width` low bits, ascending.
struct SubsetMasks {
    next: Option<u64>,
    limit: u64,
}

impl SubsetMasks {
    fn new(width: usize, count: usize) -> Self {
        assert!(width <= MAX_SEARCH_ORDER);
        if count > width {
            return SubsetMasks {
                next: None,
                limit: 0,
            };
        }
        let limit = if width == 0 { 0 } else { (1u64 << width) - 1 };
        let first = if count == 0 { 0 } else { (1u64 << count) - 1 };
        SubsetMasks {
            next: Some(first),
            limit,
        }
    }
}

impl Iterator for SubsetMasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let next = (((r ^ cur) >> 2) / c) | r;
            (next <= self.limit).then_some(next)
        };
        Some(cur)
    }
}

/// The explicit forcing-set constructions used as upper-bound witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessConstruction {
    /// Two adjacent full copies of K_n on the n-by-m twisted ring: 2n
    /// vertices.
    TwoColumns { n: usize, m: usize },
    /// On a 3-ring of K_n copies: all but the last row of the first two
    /// copies plus the first row of the third: 2n - 1 vertices.
    ThreeColumns { n: usize },
    /// On C_{2n}(1, 2, 4, ..., 2*floor(n/2)): a vertex together with all
    /// but its highest-indexed neighbor: n + 1 vertices.
    ClosedNeighborhood { n: usize },
    /// On the n-by-m twisted ring of cycles: a middle column plus its
    /// right neighbor minus one row when m = n (2m - 1 vertices), two
    /// adjacent full columns or rows otherwise (2 min(n, m)).
    CycleColumns { n: usize, m: usize },
}

impl WitnessConstruction {
    /// Size the construction is guaranteed to have.
    pub fn expected_size(&self) -> usize {
        match *self {
            WitnessConstruction::TwoColumns { n, .. } => 2 * n,
            WitnessConstruction::ThreeColumns { n } => 2 * n - 1,
            WitnessConstruction::ClosedNeighborhood { n } => n + 1,
            WitnessConstruction::CycleColumns { n, m } => {
                if n == m {
                    2 * m - 1
                } else {
                    2 * n.min(m)
                }
            }
        }
    }
}

/// Build the construction's graph and fill state and verify by closure
/// that the set forces, before handing both back. A construction that
/// fails its own closure check is reported as an internal inconsistency.
pub fn witness_set(c: &WitnessConstruction) -> Result<(Graph, FillState), Error> {
    let (g, f) = match *c {
        WitnessConstruction::TwoColumns { n, m } => {
            if n < 2 || m < 3 {
                return Err(Error::Unsupported(format!(
                    "two-column construction needs n >= 2, m >= 3, got n={n}, m={m}"
                )));
            }
            let g = Graph::complete(n).torus_product(m)?;
            let f = VertexSet::from_indices(n * m, &(0..2 * n).collect::<Vec<_>>());
            (g, f)
        }
        WitnessConstruction::ThreeColumns { n } => {
            if n < 3 {
                return Err(Error::Unsupported(format!(
                    "three-column construction needs n >= 3, got n={n}"
                )));
            }
            let g = Graph::complete(n).torus_product(3)?;
            let mut f = VertexSet::empty(3 * n);
            for r in 0..n - 1 {
                f.insert(r);
                f.insert(n + r);
            }
            f.insert(2 * n);
            (g, f)
        }
        WitnessConstruction::ClosedNeighborhood { n } => {
            if n < 3 {
                return Err(Error::Unsupported(format!(
                    "closed-neighborhood construction needs n >= 3, got n={n}"
                )));
            }
            let mut s: Vec<usize> = vec![1];
            s.extend((1..=n / 2).map(|i| 2 * i));
            let g = crate::circulant::CirculantSpec::new(2 * n, s)?.build();
            let mut f = VertexSet::empty(2 * n);
            f.insert(0);
            let nbrs: Vec<usize> = g.neighbors(0).collect();
            for &v in &nbrs[..nbrs.len() - 1] {
                f.insert(v);
            }
            (g, f)
        }
        WitnessConstruction::CycleColumns { n, m } => {
            if n < 3 || m < 3 {
                return Err(Error::Unsupported(format!(
                    "cycle-column construction needs n, m >= 3, got n={n}, m={m}"
                )));
            }
            let g = Graph::cycle(n).torus_product(m)?;
            let mut f = VertexSet::empty(n * m);
            if n == m {
                let c0 = m.div_ceil(2) - 1;
                for r in 0..n {
                    f.insert(c0 * n + r);
                }
                for r in 1..n {
                    f.insert((c0 + 1) * n + r);
                }
            } else if n < m {
                for v in 0..2 * n {
                    f.insert(v);
                }
            } else {
                for c in 0..m {
                    f.insert(c * n);
                    f.insert(c * n + 1);
                }
            }
            (g, f)
        }
    };
    debug_assert_eq!(f.card(), c.expected_size());
    match is_forcing_set(&g, &f)? {
        Some(_) => Ok((g, f)),
        None => Err(Error::Inconsistent(format!(
            "construction {c:?} produced a non-forcing set {f}"
        ))),
    }
}
