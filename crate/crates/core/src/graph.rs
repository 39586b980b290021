//! Simple undirected graphs, the edge-list file format, and the Laplacian.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::vertex_set::{bits, VertexSet};

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(min, max)` pairs in sorted order. Immutable once
/// built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    /// Neighbourhood bitmasks, present when `n <= 64`.
    masks: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges (in either
    /// orientation) and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u} {v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u} {v}")));
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let masks = (n <= 64).then(|| {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect()
        });
        Graph {
            n,
            edges,
            adj,
            masks,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub(crate) fn masks(&self) -> Option<&[u64]> {
        self.masks.as_deref()
    }

    /// A copy of this graph with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        DegreeStats {
            min: degrees.iter().copied().min().unwrap_or(0),
            max: degrees.iter().copied().max().unwrap_or(0),
            degrees,
        }
    }

    /// `L = D - A`, as integers.
    pub fn laplacian(&self) -> Vec<Vec<i64>> {
        let mut l = vec![vec![0i64; self.n]; self.n];
        for (v, row) in l.iter_mut().enumerate() {
            row[v] = self.degree(v) as i64;
        }
        for &(u, v) in &self.edges {
            l[u][v] = -1;
            l[v][u] = -1;
        }
        l
    }

    pub fn laplacian_f64(&self) -> Vec<Vec<f64>> {
        self.laplacian()
            .into_iter()
            .map(|row| row.into_iter().map(|x| x as f64).collect())
            .collect()
    }

    /// The graph on a single vertex counts as connected; the empty graph does not.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.induced_connected_unchecked(&VertexSet::full(self.n))
    }

    /// Whether the subgraph induced by `s` is connected.
    pub fn induced_connected(&self, s: &VertexSet) -> Result<bool> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::TrivialVertexSet);
        }
        Ok(self.induced_connected_unchecked(s))
    }

    fn induced_connected_unchecked(&self, s: &VertexSet) -> bool {
        if let (Some(masks), Some(mask)) = (self.masks(), s.as_mask()) {
            return mask_connected(masks, mask);
        }
        let Some(start) = s.iter().next() else {
            return false;
        };
        let mut seen = VertexSet::empty(self.n);
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if s.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == s.len()
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::VertexSetMismatch {
                expected: self.n,
                actual: s.universe(),
            });
        }
        Ok(())
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Number of edges with exactly one endpoint in `s`.
    pub fn boundary_size(&self, s: &VertexSet) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| s.contains(u) != s.contains(v))
            .count()
    }

    /// Renders the edge-list format read by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Flood fill restricted to `set`; true iff `set` is nonempty and connected.
pub(crate) fn mask_connected(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return false;
    }
    let mut reached = set & set.wrapping_neg();
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= adj[v];
        }
        frontier = next & set & !reached;
        reached |= frontier;
    }
    reached == set
}

/// Parses the edge-list format: `#` comment lines and blank lines are
/// skipped, the first remaining line is `n`, every later one is `u v`.
pub fn parse_edge_list(text: &str) -> std::result::Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut seen = BTreeSet::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |kind| ParseError {
            line: line_no,
            kind,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                let [count] = fields[..] else {
                    return Err(err(ParseErrorKind::Malformed(line.to_string())));
                };
                let count = count
                    .parse::<usize>()
                    .map_err(|_| err(ParseErrorKind::Malformed(line.to_string())))?;
                n = Some(count);
            }
            Some(n) => {
                let [a, b] = fields[..] else {
                    return Err(err(ParseErrorKind::Malformed(line.to_string())));
                };
                let (u, v) = match (a.parse::<usize>(), b.parse::<usize>()) {
                    (Ok(u), Ok(v)) => (u, v),
                    _ => return Err(err(ParseErrorKind::Malformed(line.to_string()))),
                };
                for vertex in [u, v] {
                    if vertex >= n {
                        return Err(err(ParseErrorKind::VertexOutOfRange { vertex, n }));
                    }
                }
                if u == v {
                    return Err(err(ParseErrorKind::SelfLoop(u)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(err(ParseErrorKind::DuplicateEdge(u, v)));
                }
            }
        }
    }

    let n = n.ok_or(ParseError {
        line: last_line.max(1),
        kind: ParseErrorKind::MissingVertexCount,
    })?;
    Ok(Graph::from_sorted(n, seen.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn path(n: usize) -> Graph {
        generate(&FamilySpec::Path { n }).unwrap()
    }

    #[test]
    fn parse_path() {
        let g = parse_edge_list("4\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g, path(4));
    }

    #[test]
    fn parse_comments_and_orientation() {
        let g = parse_edge_list("# a comment\n\n3\n# another\n2 0\n1 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = parse_edge_list("2\n0 0").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.kind, ParseErrorKind::SelfLoop(0));

        let e = parse_edge_list("3\n0 1\n0 1").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::DuplicateEdge(0, 1));

        let e = parse_edge_list("3\n0 1\n1 0").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DuplicateEdge(1, 0));

        let e = parse_edge_list("# header\n3\n0 3").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(e.kind, ParseErrorKind::VertexOutOfRange { vertex: 3, n: 3 });

        let e = parse_edge_list("3\n0 1 2").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Malformed(_)));
        let e = parse_edge_list("x").unwrap_err();
        assert_eq!(e.line, 1);
        assert_eq!(
            parse_edge_list("# nothing\n").unwrap_err().kind,
            ParseErrorKind::MissingVertexCount
        );
    }

    #[test]
    fn new_rejects_bad_edges() {
        assert!(Graph::new(2, [(0, 0)]).is_err());
        assert!(Graph::new(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn laplacian_small() {
        assert_eq!(path(2).laplacian(), vec![vec![1, -1], vec![-1, 1]]);

        let k3 = generate(&FamilySpec::Complete { n: 3 })
            .unwrap()
            .laplacian();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k3[i][j], if i == j { 2 } else { -1 });
            }
        }

        let p4 = path(4).laplacian();
        let diag: Vec<i64> = (0..4).map(|i| p4[i][i]).collect();
        assert_eq!(diag, vec![1, 2, 2, 1]);
        assert!(p4.iter().all(|row| row.iter().sum::<i64>() == 0));
    }

    #[test]
    fn connectivity() {
        let p4 = path(4);
        assert!(p4.is_connected());
        assert!(p4
            .induced_connected(&VertexSet::from_vertices(4, [0, 1]))
            .unwrap());
        assert!(!p4
            .induced_connected(&VertexSet::from_vertices(4, [0, 3]))
            .unwrap());
        assert_eq!(
            p4.induced_connected(&VertexSet::empty(4)),
            Err(Error::TrivialVertexSet)
        );
        assert!(!Graph::new(3, [(0, 1)]).unwrap().is_connected());
        assert!(Graph::new(1, []).unwrap().is_connected());
    }

    #[test]
    fn cycle_arcs_are_connected() {
        let c5 = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        for start in 0..5 {
            for len in 1..=5 {
                let s = VertexSet::from_vertices(5, (0..len).map(|i| (start + i) % 5));
                assert!(c5.induced_connected(&s).unwrap());
            }
        }
        // {0, 2} is not an arc
        assert!(!c5
            .induced_connected(&VertexSet::from_vertices(5, [0, 2]))
            .unwrap());
    }

    #[test]
    fn large_graph_uses_general_path() {
        let p = path(100);
        assert!(p.masks().is_none());
        assert!(p.is_connected());
        let mut s = VertexSet::from_vertices(100, 0..50);
        assert!(p.induced_connected(&s).unwrap());
        s.remove(25);
        assert!(!p.induced_connected(&s).unwrap());
        assert_eq!(p.boundary_size(&s), 3);
    }

    #[test]
    fn degree_stats_families() {
        let star = generate(&FamilySpec::Star { n: 5 }).unwrap().degree_stats();
        assert_eq!((star.min, star.max), (1, 4));
        let c6 = generate(&FamilySpec::Cycle { n: 6 })
            .unwrap()
            .degree_stats();
        assert_eq!((c6.min, c6.max), (2, 2));
        let cube = generate(&FamilySpec::Cube).unwrap().degree_stats();
        assert_eq!((cube.min, cube.max), (3, 3));
        assert_eq!(cube.degrees.len(), 8);
    }

    #[test]
    fn render_is_sorted() {
        let g = Graph::new(3, [(2, 1), (1, 0)]).unwrap();
        assert_eq!(g.to_edge_list(), "3\n0 1\n1 2\n");
    }
}
