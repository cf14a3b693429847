//! Simple undirected graphs as per-vertex neighbor masks.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::bitset::VertexSet;
use crate::error::Error;

/// An undirected simple graph. Vertices are `0..order`.
///
/// Values are immutable once built by the constructors below; nothing in
/// the crate mutates a graph it did not create.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Cycle C_n (empty for n < 3).
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        if n >= 3 {
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
        }
        g
    }

    /// Path on n vertices.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// Complete bipartite graph with parts 0..a and a..a+b.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// Erdos-Renyi G(n, p) with a fixed seed.
    pub fn random(n: usize, p: f64, seed: u64) -> Self {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].card()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degs = (0..self.order()).map(|v| self.degree(v));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    /// Neighbor mask of `v`.
    pub fn adjacency(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.card()).sum::<usize>() / 2
    }

    /// All edges (u, v) with u < v, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order())
            .flat_map(move |u| self.neighbors(u).filter(move |&v| u < v).map(move |v| (u, v)))
    }

    /// Adjacency rows packed into words, available when order <= 64.
    pub fn adjacency_words(&self) -> Option<Vec<u64>> {
        self.adj.iter().map(|s| s.as_word()).collect()
    }

    /// Complement graph: adjacency flipped off the diagonal.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are relabeled after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order();
        let mut g = Self::empty(n + other.order());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(n + u, n + v);
        }
        g
    }

    /// Cartesian product. Vertex (x_i, y_j) has index `i * other.order() + j`;
    /// (x_i,y_j) ~ (x_k,y_l) iff i = k and y_j ~ y_l, or j = l and x_i ~ x_k.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let (n, m) = (self.order(), other.order());
        let mut g = Self::empty(n * m);
        let idx = |i: usize, j: usize| i * m + j;
        for i in 0..n {
            for (j, l) in other.edges() {
                g.add_edge(idx(i, j), idx(i, l));
            }
        }
        for j in 0..m {
            for (i, k) in self.edges() {
                g.add_edge(idx(i, j), idx(k, j));
            }
        }
        g
    }

    /// Torus product: `m >= 3` copies of `self` joined in a ring of column
    /// rungs, with the wrap-around rungs shifted one row down.
    ///
    /// Copy `c` (0-based) occupies indices `c*n .. (c+1)*n` (copy-major
    /// order). Row r of copy c is adjacent to row r of copy c+1 for
    /// c < m-1, and row r of the last copy is adjacent to row (r+1) mod n
    /// of the first.
    pub fn torus_product(&self, m: usize) -> Result<Graph, Error> {
        if m < 3 {
            return Err(Error::Unsupported(format!(
                "torus product needs at least 3 copies, got {m}"
            )));
        }
        let n = self.order();
        let mut g = Self::empty(n * m);
        let idx = |c: usize, r: usize| c * n + r;
        for c in 0..m {
            for (u, v) in self.edges() {
                g.add_edge(idx(c, u), idx(c, v));
            }
        }
        for c in 0..m - 1 {
            for r in 0..n {
                g.add_edge(idx(c, r), idx(c + 1, r));
            }
        }
        for r in 0..n {
            g.add_edge(idx(m - 1, r), idx(0, (r + 1) % n));
        }
        Ok(g)
    }

    /// Rebuild with vertex `v` renamed to `perm[v]`; `perm` must be a
    /// bijection on `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut seen = vec![false; n];
        for &p in perm {
            assert!(p < n && !seen[p], "relabeling is not a bijection");
            seen[p] = true;
        }
        let mut g = Self::empty(n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Connected components as ascending vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Induced subgraph on `vertices` (ascending); vertex `vertices[i]`
    /// becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Self::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// Breadth-first search from every root; a non-tree edge seen from the
    /// root's tree closes a walk of length dist(u) + dist(v) + 1 through
    /// the root, and the minimum of these over all roots is the girth.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // Deeper layers cannot improve on the current best.
                    if 2 * dist[u] >= b {
                        break;
                    }
                }
                for v in self.neighbors(u) {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if v != parent[u] {
                        let cand = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }

    /// A 2-coloring (as the two color classes), if the graph is bipartite.
    /// Isolated vertices land in the first class.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.order();
        let mut color = vec![u8::MAX; n];
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let mut a = VertexSet::empty(n);
        let mut b = VertexSet::empty(n);
        for (v, &c) in color.iter().enumerate() {
            if c == 1 {
                b.insert(v);
            } else {
                a.insert(v);
            }
        }
        Some((a, b))
    }

    /// Plain edge list: one "u v" line per edge, u < v, ascending.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// DOT rendering of the graph.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.order() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    /// Parse the edge-list format back into a graph. The order is inferred
    /// as the largest mentioned vertex plus one, so isolated trailing
    /// vertices are not representable in this format.
    pub fn from_edge_list(text: &str) -> Result<Graph, Error> {
        let mut edges = Vec::new();
        let mut max = 0usize;
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, Error> {
                tok.ok_or_else(|| Error::parse(ln + 1, 1, "expected \"u v\""))?
                    .parse::<usize>()
                    .map_err(|_| Error::parse(ln + 1, 1, "expected a vertex number"))
            };
            let u = parse(parts.next())?;
            let v = parse(parts.next())?;
            if parts.next().is_some() {
                return Err(Error::parse(ln + 1, 1, "trailing tokens after edge"));
            }
            if u == v {
                return Err(Error::parse(ln + 1, 1, "self-loops are not allowed"));
            }
            max = max.max(u).max(v);
            edges.push((u, v));
        }
        let mut g = Graph::empty(if edges.is_empty() { 0 } else { max + 1 });
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        Ok(g)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(order={}, edges={})", self.order(), self.edge_count())
    }
}
