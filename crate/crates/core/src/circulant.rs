//! Circulant graph specs `C_n(s_1, ..., s_t)` and their structure theory.

use std::fmt;

use num_integer::Integer;

use crate::error::Error;
use crate::graph::Graph;

/// A circulant connection-set spec: order `n` and distinct jumps
/// `s_1 < s_2 < ... < s_t` with `1 <= s_i <= n/2`.
///
/// The realized graph has vertices `0..n` with `i ~ i +- s_j (mod n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CirculantSpec {
    n: usize,
    s: Vec<usize>,
}

/// Result of splitting a spec into connected pieces: `copies` disjoint
/// copies of the connected `reduced` spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub copies: usize,
    pub reduced: CirculantSpec,
}

impl CirculantSpec {
    /// Validate and build a spec. The jump list may be unsorted but must
    /// be duplicate-free and inside `[1, n/2]`.
    pub fn new(n: usize, mut s: Vec<usize>) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidSpec("order must be positive".into()));
        }
        if s.is_empty() {
            return Err(Error::InvalidSpec("connection set must be nonempty".into()));
        }
        s.sort_unstable();
        for w in s.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidSpec(format!(
                    "duplicate connection element {}",
                    w[0]
                )));
            }
        }
        let half = n / 2;
        for &x in &s {
            if x == 0 || x > half {
                return Err(Error::InvalidSpec(format!(
                    "connection element {x} outside [1, {half}] for order {n}"
                )));
            }
        }
        Ok(CirculantSpec { n, s })
    }

    /// Parse the textual form `Cn(s1,s2,...)`, whitespace-insensitive.
    pub fn parse(input: &str) -> Result<Self, Error> {
        let mut p = Parser::new(input);
        p.skip_ws();
        p.expect_char('C')?;
        let n = p.number()?;
        p.skip_ws();
        p.expect_char('(')?;
        let mut s = Vec::new();
        loop {
            p.skip_ws();
            s.push(p.number()?);
            p.skip_ws();
            match p.peek() {
                Some(',') => {
                    p.bump();
                }
                Some(')') => {
                    p.bump();
                    break;
                }
                _ => return Err(p.error("expected ',' or ')'")),
            }
        }
        p.skip_ws();
        if p.peek().is_some() {
            return Err(p.error("trailing input after spec"));
        }
        CirculantSpec::new(n, s).map_err(|e| match e {
            Error::InvalidSpec(msg) => p.error(&msg),
            other => other,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The sorted jump list.
    pub fn s(&self) -> &[usize] {
        &self.s
    }

    pub fn t(&self) -> usize {
        self.s.len()
    }

    /// Degree of the realized graph: `2t - 1` when `2 s_t = n`, else `2t`.
    pub fn degree(&self) -> usize {
        let t = self.t();
        if 2 * self.s[t - 1] == self.n {
            2 * t - 1
        } else {
            2 * t
        }
    }

    /// Connected iff gcd(n, s_1, ..., s_t) = 1.
    pub fn is_connected(&self) -> bool {
        self.content_gcd() == 1
    }

    fn content_gcd(&self) -> usize {
        self.s.iter().fold(self.n, |g, &x| g.gcd(&x))
    }

    /// Bipartiteness test for connected specs: the realized graph is
    /// bipartite iff `n` is even and every jump is odd. For a disconnected
    /// spec, test the reduced spec of [`CirculantSpec::decompose`].
    pub fn is_bipartite(&self) -> bool {
        self.n.is_multiple_of(2) && self.s.iter().all(|&x| x % 2 == 1)
    }

    /// Realize the spec as a graph.
    pub fn build(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for &s in &self.s {
                let j = (i + s) % self.n;
                if i != j {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Split off the copy count `g = gcd(n, s_1, ..., s_t)`: the realized
    /// graph is `g` disjoint copies of the reduced spec's graph (vertex
    /// `i` lives in copy `i mod g` at position `i div g`). Connected specs
    /// decompose into one copy of themselves.
    pub fn decompose(&self) -> ComponentDecomposition {
        let g = self.content_gcd();
        let reduced = CirculantSpec::new(self.n / g, self.s.iter().map(|&x| x / g).collect())
            .expect("reduced spec is valid when the original is");
        ComponentDecomposition { copies: g, reduced }
    }

    /// Units of Z_n, ascending.
    pub fn units(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n.max(2)).filter(move |k| k.gcd(&self.n) == 1)
    }

    /// Rewrite by a unit multiplier: the spec whose jump set is
    /// `{±k·s mod n}` normalized back into `[1, n/2]`. Realizes an
    /// isomorphic graph under `i -> k·i mod n`.
    pub fn rewrite(&self, k: usize) -> Result<CirculantSpec, Error> {
        if k.gcd(&self.n) != 1 {
            return Err(Error::Unsupported(format!(
                "multiplier {k} is not a unit modulo {}",
                self.n
            )));
        }
        let mut s: Vec<usize> = self
            .s
            .iter()
            .map(|&x| {
                let m = (k * x) % self.n;
                m.min(self.n - m)
            })
            .collect();
        s.sort_unstable();
        s.dedup();
        CirculantSpec::new(self.n, s)
    }

    /// Search for a unit `k` with `rewrite(self, k) == other`. Returns the
    /// smallest such multiplier. This test is one-sided: a `None` answer
    /// does not prove the realized graphs non-isomorphic.
    pub fn multiplier_isomorphic(&self, other: &CirculantSpec) -> Result<Option<usize>, Error> {
        if self.n != other.n {
            return Err(Error::Unsupported(format!(
                "orders differ: {} vs {}",
                self.n, other.n
            )));
        }
        for k in self.units() {
            if self.rewrite(k).expect("k is a unit") == *other {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}(", self.n)?;
        for (i, s) in self.s.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cursor over spec text, tracking 1-based line and column for messages.
struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            text,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.bump();
        }
    }

    fn line_col(&self) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for c in self.text.chars().take(self.pos) {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn error(&self, message: &str) -> Error {
        let (line, column) = self.line_col();
        Error::parse(line, column, message)
    }

    fn expect_char(&mut self, want: char) -> Result<(), Error> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            _ => Err(self.error(&format!("expected '{want}'"))),
        }
    }

    fn number(&mut self) -> Result<usize, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| self.error("number does not fit in a machine word"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, s: &[usize]) -> CirculantSpec {
        CirculantSpec::new(n, s.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(CirculantSpec::new(12, vec![1, 6]).is_ok());
        assert!(CirculantSpec::new(12, vec![1, 7]).is_err()); // above n/2
        assert!(CirculantSpec::new(12, vec![0, 1]).is_err());
        assert!(CirculantSpec::new(12, vec![1, 1]).is_err());
        assert!(CirculantSpec::new(12, vec![]).is_err());
        assert!(CirculantSpec::new(1, vec![1]).is_err()); // floor(1/2) = 0
        assert!(CirculantSpec::new(2, vec![1]).is_ok()); // K_2
        assert!(CirculantSpec::new(0, vec![1]).is_err());
    }

    #[test]
    fn parse_and_display() {
        let s = CirculantSpec::parse("C12(1,6)").unwrap();
        assert_eq!(s, spec(12, &[1, 6]));
        assert_eq!(s.to_string(), "C12(1,6)");
        let ws = CirculantSpec::parse("  C12 ( 1 , 6 ) ").unwrap();
        assert_eq!(ws, s);
        // positions in errors
        match CirculantSpec::parse("C12(1,6") {
            Err(Error::Parse { line: 1, column, .. }) => assert_eq!(column, 8),
            other => panic!("expected parse error, got {other:?}"),
        }
        match CirculantSpec::parse("D12(1)") {
            Err(Error::Parse { column: 1, .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(CirculantSpec::parse("C12(1,6) extra").is_err());
        assert!(CirculantSpec::parse("C12()").is_err());
        assert!(CirculantSpec::parse("C12(1,,6)").is_err());
    }

    #[test]
    fn degree_formula() {
        assert_eq!(spec(4, &[1, 2]).degree(), 3); // K_4
        assert_eq!(spec(12, &[1, 6]).degree(), 3); // 2 s_t = n
        assert_eq!(spec(8, &[1, 3]).degree(), 4);
        let g = spec(12, &[1, 6]).build();
        assert_eq!(g.regular_degree(), Some(3));
    }

    #[test]
    fn build_examples() {
        let k4 = spec(4, &[1, 2]).build();
        assert_eq!(k4, Graph::complete(4));
        // C_8(1,3) is K_{4,4} under the parity relabeling
        let g = spec(8, &[1, 3]).build();
        assert_eq!(g.regular_degree(), Some(4));
        let perm: Vec<usize> = (0..8).map(|v| if v % 2 == 0 { v / 2 } else { 4 + v / 2 }).collect();
        assert_eq!(g.relabel(&perm), Graph::complete_bipartite(4, 4));
    }

    #[test]
    fn decompose_examples() {
        let d = spec(8, &[2, 4]).decompose();
        assert_eq!(d.copies, 2);
        assert_eq!(d.reduced, spec(4, &[1, 2]));
        let d = spec(14, &[2, 6]).decompose();
        assert_eq!(d.copies, 2);
        assert_eq!(d.reduced, spec(7, &[1, 3]));
        let d = spec(5, &[1]).decompose();
        assert_eq!(d.copies, 1);
        assert_eq!(d.reduced, spec(5, &[1]));
    }

    #[test]
    fn decompose_realizes_disjoint_copies() {
        // exhaustive small sweep: the relabeling v_i -> (i mod g) * (n/g) + i div g
        // carries the realized graph onto g stacked copies of the reduced graph
        for n in 2..=14usize {
            for mask in 1u32..(1 << (n / 2)) {
                let s: Vec<usize> = (1..=n / 2).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let sp = spec(n, &s);
                let d = sp.decompose();
                let reduced = d.reduced.build();
                let mut stacked = Graph::empty(0);
                for _ in 0..d.copies {
                    stacked = stacked.disjoint_union(&reduced);
                }
                let m = n / d.copies;
                let perm: Vec<usize> = (0..n).map(|i| (i % d.copies) * m + i / d.copies).collect();
                assert_eq!(sp.build().relabel(&perm), stacked, "spec {sp}");
            }
        }
    }

    #[test]
    fn multiplier_examples() {
        let a = spec(7, &[1, 3]);
        let b = spec(7, &[2, 3]);
        assert_eq!(a.multiplier_isomorphic(&b).unwrap(), Some(3));
        assert_eq!(a.multiplier_isomorphic(&a).unwrap(), Some(1));
        assert_eq!(
            spec(8, &[3]).multiplier_isomorphic(&spec(8, &[1])).unwrap(),
            Some(3)
        );
        assert!(spec(8, &[1]).multiplier_isomorphic(&spec(6, &[1])).is_err());
        // no unit maps a 4-regular spec to a 3-regular one
        assert_eq!(
            spec(8, &[1, 2]).multiplier_isomorphic(&spec(8, &[1, 4])).unwrap(),
            None
        );
    }

    #[test]
    fn multiplier_gives_graph_isomorphism() {
        for (n, s, other) in [
            (7usize, vec![1, 3], vec![2, 3]),
            (8, vec![3], vec![1]),
            (13, vec![1, 5], vec![2, 3]),
        ] {
            let a = spec(n, &s);
            let b = spec(n, &other);
            if let Some(k) = a.multiplier_isomorphic(&b).unwrap() {
                let perm: Vec<usize> = (0..n).map(|i| k * i % n).collect();
                assert_eq!(a.build().relabel(&perm), b.build());
            } else {
                panic!("expected a multiplier for C{n}{s:?} vs {other:?}");
            }
        }
    }

    #[test]
    fn bipartite_formula_examples() {
        assert!(spec(8, &[1, 3]).is_bipartite());
        assert!(!spec(9, &[1, 3]).is_bipartite());
        assert!(!spec(10, &[2, 5]).is_bipartite());
    }

    #[test]
    fn bipartite_formula_matches_two_coloring() {
        for n in 2..=30usize {
            for mask in 1u64..(1 << (n / 2)) {
                let s: Vec<usize> = (1..=n / 2).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let sp = spec(n, &s);
                if !sp.is_connected() {
                    continue;
                }
                assert_eq!(
                    sp.is_bipartite(),
                    sp.build().bipartition().is_some(),
                    "spec {sp}"
                );
            }
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(spec(9, &[1, 3]).build().girth(), Some(3));
        assert_eq!(spec(16, &[1, 4]).build().girth(), Some(4));
        assert_eq!(spec(5, &[1]).build().girth(), Some(5));
    }

    #[test]
    fn torus_product_of_complete_matches_circulant() {
        // K_n torus C_m vs C_{nm}(1, m, ..., bm) under (c, r) -> c + m r
        for (n, m) in [(2usize, 6usize), (3, 6), (4, 4), (3, 4), (2, 4), (3, 3), (5, 4)] {
            let b = n / 2;
            let mut s: Vec<usize> = vec![1];
            s.extend((1..=b).map(|i| i * m));
            let circ = spec(n * m, &s).build();
            let torus = Graph::complete(n).torus_product(m).unwrap();
            let perm: Vec<usize> = (0..m)
                .flat_map(|c| (0..n).map(move |r| c + m * r))
                .collect();
            assert_eq!(torus.relabel(&perm), circ, "K_{n} torus C_{m}");
        }
    }
}
