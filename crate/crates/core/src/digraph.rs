//! Finite digraphs: parsing, adjacency, BFS distances, path enumeration and
//! the thin/thick/multisquare census of distance-two vertex pairs.
//!
//! Vertex names are arbitrary strings; every computation runs on dense
//! indices assigned in first-appearance order. Loops and parallel arrows are
//! rejected at construction time.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A directed walk `(p_0, ..., p_n)`: every consecutive pair is an arrow.
/// Vertices may repeat (the digraph may contain directed cycles), but never
/// consecutively since loops are banned.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Path(pub Vec<usize>);

impl Path {
    /// Number of arrows in the walk; one less than the vertex count.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    /// True for zero-paths (a single vertex, no arrows).
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Human-readable label using the digraph's vertex names.
    pub fn label(&self, g: &Digraph) -> String {
        self.0
            .iter()
            .map(|&v| g.name(v))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Classification of a distance-two pair by its number of two-paths.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PairKind {
    /// Exactly one two-path between the endpoints.
    Thin,
    /// Exactly two two-paths.
    Thick,
    /// Three or more two-paths; the ambient digraph has a multisquare.
    Multi,
}

/// A vertex pair together with its directed distance and the midpoints of
/// its two-paths.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexPair {
    pub source: usize,
    pub target: usize,
    /// Directed BFS distance, `None` when the target is unreachable.
    pub distance: Option<u32>,
    /// Sorted vertices `v` with arrows `source -> v -> target`.
    pub midpoints: Vec<usize>,
}

impl VertexPair {
    /// Thin/thick/multi label; only meaningful at distance exactly two.
    pub fn kind(&self) -> Option<PairKind> {
        if self.distance != Some(2) {
            return None;
        }
        Some(match self.midpoints.len() {
            1 => PairKind::Thin,
            2 => PairKind::Thick,
            _ => PairKind::Multi,
        })
    }
}

/// A finite loop-free digraph without parallel arrows.
pub struct Digraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    out_neighbors: Vec<Vec<usize>>,
    in_neighbors: Vec<Vec<usize>>,
    arrow_count: usize,
    // All-sources BFS table, filled on first distance query. The digraphs
    // here are tiny, so one dense table per digraph is cheap.
    distances: OnceLock<Vec<Vec<Option<u32>>>>,
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("vertices", &self.names)
            .field("arrows", &self.arrows().collect::<Vec<_>>())
            .finish()
    }
}

impl Clone for Digraph {
    fn clone(&self) -> Self {
        Digraph {
            names: self.names.clone(),
            index: self.index.clone(),
            out_neighbors: self.out_neighbors.clone(),
            in_neighbors: self.in_neighbors.clone(),
            arrow_count: self.arrow_count,
            distances: OnceLock::new(),
        }
    }
}

impl Digraph {
    /// Parses a line-oriented edge list: each non-empty, non-comment line is
    /// `SRC DST` with whitespace-separated vertex names; `#` starts a
    /// comment. Vertices get dense indices in first-appearance order.
    pub fn parse(text: &str) -> Result<Digraph> {
        let mut builder = DigraphBuilder::new();
        for (line_no, raw) in text.lines().enumerate() {
            let line = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut tokens = line.split_whitespace();
            let (src, dst) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(s), Some(d), None) => (s, d),
                _ => {
                    return Err(Error::Syntax {
                        line: line_no + 1,
                        content: raw.trim_end().to_owned(),
                    })
                }
            };
            builder.add_arrow(src, dst)?;
        }
        Ok(builder.build())
    }

    /// Builds a digraph from explicit name pairs, assigning indices in
    /// first-appearance order. Intended for fixtures and tests.
    pub fn from_named_arrows<'a, I>(arrows: I) -> Result<Digraph>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut builder = DigraphBuilder::new();
        for (src, dst) in arrows {
            builder.add_arrow(src, dst)?;
        }
        Ok(builder.build())
    }

    /// Rebuilds a digraph on the same vertex set from a subset of arrows,
    /// preserving the dense index assignment.
    pub fn with_arrows(&self, arrows: &[(usize, usize)]) -> Result<Digraph> {
        let mut builder = DigraphBuilder::new();
        for name in &self.names {
            builder.intern(name);
        }
        for &(u, v) in arrows {
            builder.add_arrow(&self.names[u], &self.names[v])?;
        }
        Ok(builder.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrow_count
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_owned()))
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out_neighbors[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.in_neighbors[v]
    }

    pub fn has_arrow(&self, u: usize, v: usize) -> bool {
        self.out_neighbors[u].binary_search(&v).is_ok()
    }

    /// All arrows as index pairs, sorted by (source, target).
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out_neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    /// Directed BFS distance; `None` when `v` is unreachable from `u`.
    pub fn distance(&self, u: usize, v: usize) -> Option<u32> {
        self.distance_table()[u][v]
    }

    /// Distance keyed by vertex names, for callers holding external input.
    pub fn distance_by_name(&self, u: &str, v: &str) -> Result<Option<u32>> {
        Ok(self.distance(self.vertex_index(u)?, self.vertex_index(v)?))
    }

    fn distance_table(&self) -> &Vec<Vec<Option<u32>>> {
        self.distances
            .get_or_init(|| (0..self.vertex_count()).map(|s| self.bfs_row(s)).collect())
    }

    fn bfs_row(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.out_neighbors[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// All `n`-paths in strictly increasing lexicographic order of their
    /// index sequences. DFS over sorted out-neighbors produces the order
    /// directly; no sort pass.
    pub fn enumerate_paths(&self, n: usize) -> Vec<Path> {
        let mut paths = Vec::new();
        let mut stack = Vec::with_capacity(n + 1);
        for v in 0..self.vertex_count() {
            stack.push(v);
            self.extend_paths(n, &mut stack, &mut paths);
            stack.pop();
        }
        paths
    }

    fn extend_paths(&self, n: usize, stack: &mut Vec<usize>, out: &mut Vec<Path>) {
        if stack.len() == n + 1 {
            out.push(Path(stack.clone()));
            return;
        }
        let last = *stack.last().unwrap();
        for &w in &self.out_neighbors[last] {
            stack.push(w);
            self.extend_paths(n, stack, out);
            stack.pop();
        }
    }

    /// Counts `n`-paths, aborting with `None` once the count exceeds `cap`.
    pub fn count_paths_capped(&self, n: usize, cap: usize) -> Option<usize> {
        fn go(g: &Digraph, v: usize, remaining: usize, count: &mut usize, cap: usize) -> bool {
            if remaining == 0 {
                *count += 1;
                return *count <= cap;
            }
            for &w in &g.out_neighbors[v] {
                if !go(g, w, remaining - 1, count, cap) {
                    return false;
                }
            }
            true
        }
        let mut count = 0;
        for v in 0..self.vertex_count() {
            if !go(self, v, n, &mut count, cap) {
                return None;
            }
        }
        Some(count)
    }

    /// All vertex pairs at distance exactly two, sorted by (source, target),
    /// each carrying its sorted midpoint list.
    pub fn classify_pairs(&self) -> Vec<VertexPair> {
        let mut pairs = Vec::new();
        for u in 0..self.vertex_count() {
            for v in 0..self.vertex_count() {
                if self.distance(u, v) != Some(2) {
                    continue;
                }
                let midpoints: Vec<usize> = self.out_neighbors[u]
                    .iter()
                    .copied()
                    .filter(|&w| self.has_arrow(w, v))
                    .collect();
                debug_assert!(!midpoints.is_empty());
                pairs.push(VertexPair {
                    source: u,
                    target: v,
                    distance: Some(2),
                    midpoints,
                });
            }
        }
        pairs
    }

    /// Index pairs `(x, y)` at distance two with exactly one two-path.
    pub fn thin_pairs(&self) -> Vec<(usize, usize)> {
        self.classify_pairs()
            .iter()
            .filter(|p| p.kind() == Some(PairKind::Thin))
            .map(|p| (p.source, p.target))
            .collect()
    }

    /// First distance-two pair with three or more two-paths, if any.
    pub fn multisquare_witness(&self) -> Option<VertexPair> {
        self.classify_pairs()
            .into_iter()
            .find(|p| p.kind() == Some(PairKind::Multi))
    }

    pub fn is_multisquare_free(&self) -> bool {
        self.multisquare_witness().is_none()
    }

    /// Length of the longest directed walk, or `None` when the digraph has
    /// a directed cycle (walks of unbounded length exist).
    pub fn longest_path_length(&self) -> Option<usize> {
        // Kahn topological order; a leftover vertex means a cycle.
        let n = self.vertex_count();
        let mut indeg: Vec<usize> = (0..n).map(|v| self.in_neighbors[v].len()).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop() {
            order.push(v);
            for &w in &self.out_neighbors[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if order.len() < n {
            return None;
        }
        let mut longest = vec![0usize; n];
        for &v in order.iter().rev() {
            longest[v] = self.out_neighbors[v]
                .iter()
                .map(|&w| longest[w] + 1)
                .max()
                .unwrap_or(0);
        }
        longest.into_iter().max()
    }

    /// Verifies that every consecutive pair of `p` is an arrow.
    pub fn is_path(&self, p: &[usize]) -> bool {
        p.windows(2).all(|w| self.has_arrow(w[0], w[1]))
    }
}

struct DigraphBuilder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    arrows: Vec<(usize, usize)>,
    seen: std::collections::HashSet<(usize, usize)>,
}

impl DigraphBuilder {
    fn new() -> Self {
        DigraphBuilder {
            names: Vec::new(),
            index: HashMap::new(),
            arrows: Vec::new(),
            seen: std::collections::HashSet::new(),
        }
    }

    fn intern(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), i);
        i
    }

    fn add_arrow(&mut self, src: &str, dst: &str) -> Result<()> {
        if src == dst {
            return Err(Error::LoopArrow(src.to_owned()));
        }
        let u = self.intern(src);
        let v = self.intern(dst);
        if !self.seen.insert((u, v)) {
            return Err(Error::DuplicateArrow(src.to_owned(), dst.to_owned()));
        }
        self.arrows.push((u, v));
        Ok(())
    }

    fn build(self) -> Digraph {
        let n = self.names.len();
        let mut out_neighbors = vec![Vec::new(); n];
        let mut in_neighbors = vec![Vec::new(); n];
        for &(u, v) in &self.arrows {
            out_neighbors[u].push(v);
            in_neighbors[v].push(u);
        }
        for list in out_neighbors.iter_mut().chain(in_neighbors.iter_mut()) {
            list.sort_unstable();
        }
        Digraph {
            names: self.names,
            index: self.index,
            arrow_count: self.arrows.len(),
            out_neighbors,
            in_neighbors,
            distances: OnceLock::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::builtin_fixture;

    fn triangle() -> Digraph {
        Digraph::parse("0 1\n1 2\n0 2").unwrap()
    }

    #[test]
    fn parse_triangle() {
        let g = triangle();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.arrow_count(), 3);
        assert!(g.has_arrow(0, 1));
        assert!(!g.has_arrow(1, 0));
    }

    #[test]
    fn parse_rejects_loop() {
        assert_eq!(
            Digraph::parse("a a").unwrap_err(),
            Error::LoopArrow("a".to_owned())
        );
    }

    #[test]
    fn parse_rejects_duplicate() {
        assert_eq!(
            Digraph::parse("a b\na b").unwrap_err(),
            Error::DuplicateArrow("a".to_owned(), "b".to_owned())
        );
    }

    #[test]
    fn parse_rejects_bad_line() {
        let err = Digraph::parse("a b\nc\n").unwrap_err();
        assert_eq!(
            err,
            Error::Syntax {
                line: 2,
                content: "c".to_owned()
            }
        );
    }

    #[test]
    fn parse_handles_comments_and_crlf() {
        let g = Digraph::parse("# header\r\na b # trailing\r\n\r\nb c\r\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.arrow_count(), 2);
    }

    #[test]
    fn first_appearance_indexing() {
        let g = Digraph::parse("x y\nz x").unwrap();
        assert_eq!(g.names(), &["x".to_owned(), "y".to_owned(), "z".to_owned()]);
        assert_eq!(g.vertex_index("z").unwrap(), 2);
        assert!(g.vertex_index("w").is_err());
    }

    #[test]
    fn distances_on_cube() {
        let g = builtin_fixture("cube").unwrap();
        assert_eq!(g.distance(0, 7), Some(3));
        for v in 0..g.vertex_count() {
            assert_eq!(g.distance(v, v), Some(0));
        }
        // 7 is the sink: nothing is reachable from it.
        assert_eq!(g.distance(7, 0), None);
    }

    #[test]
    fn distance_in_g_prime() {
        let g = builtin_fixture("g_prime").unwrap();
        assert_eq!(g.distance_by_name("x1^0", "x3^1").unwrap(), Some(2));
    }

    #[test]
    fn distance_triangle_inequality() {
        for name in ["cube", "g_main", "trapezohedron"] {
            let g = builtin_fixture(name).unwrap();
            let n = g.vertex_count();
            for u in 0..n {
                for v in 0..n {
                    for w in 0..n {
                        if let (Some(a), Some(b)) = (g.distance(u, v), g.distance(v, w)) {
                            let d = g.distance(u, w).expect("composite route exists");
                            assert!(d <= a + b);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn path_enumeration_counts() {
        let g = triangle();
        assert_eq!(g.enumerate_paths(0).len(), g.vertex_count());
        assert_eq!(g.enumerate_paths(1).len(), g.arrow_count());
        assert_eq!(g.enumerate_paths(2), vec![Path(vec![0, 1, 2])]);

        let gp = builtin_fixture("g_prime").unwrap();
        assert_eq!(gp.enumerate_paths(4).len(), 12);

        let cube = builtin_fixture("cube").unwrap();
        assert_eq!(cube.enumerate_paths(3).len(), 6);
    }

    #[test]
    fn path_enumeration_is_lexicographic_and_valid() {
        for name in ["cube", "g_main", "star6", "trapezohedron"] {
            let g = builtin_fixture(name).unwrap();
            for n in 0..=4 {
                let paths = g.enumerate_paths(n);
                for p in &paths {
                    assert!(g.is_path(p.vertices()));
                    assert_eq!(p.len(), n);
                }
                for w in paths.windows(2) {
                    assert!(w[0] < w[1], "not strictly increasing: {:?}", w);
                }
            }
        }
    }

    #[test]
    fn count_paths_capped_matches_enumeration() {
        let g = builtin_fixture("g_main").unwrap();
        for n in 0..=5 {
            assert_eq!(
                g.count_paths_capped(n, 10_000),
                Some(g.enumerate_paths(n).len())
            );
        }
        assert_eq!(g.count_paths_capped(1, 3), None);
    }

    #[test]
    fn classify_pairs_triangle_is_empty() {
        assert!(triangle().classify_pairs().is_empty());
    }

    #[test]
    fn classify_pairs_matches_two_path_recount() {
        for name in ["cube", "g_prime", "g_main", "grid", "trapezohedron"] {
            let g = builtin_fixture(name).unwrap();
            let two_paths = g.enumerate_paths(2);
            for pair in g.classify_pairs() {
                let recount: Vec<usize> = two_paths
                    .iter()
                    .filter(|p| p.vertices()[0] == pair.source && p.vertices()[2] == pair.target)
                    .map(|p| p.vertices()[1])
                    .collect();
                assert_eq!(recount, pair.midpoints);
            }
        }
    }

    #[test]
    fn g_prime_thin_pairs() {
        let g = builtin_fixture("g_prime").unwrap();
        let name = |v: usize| g.name(v).to_owned();
        let thin: Vec<(String, String)> = g
            .thin_pairs()
            .into_iter()
            .map(|(u, v)| (name(u), name(v)))
            .collect();
        let mut expected = Vec::new();
        for i in 0..3 {
            expected.push((format!("x1^{i}"), format!("x3^{i}")));
            expected.push((format!("x1^{i}"), format!("x3^{}", (i + 2) % 3)));
        }
        expected.sort();
        let mut thin = thin;
        thin.sort();
        assert_eq!(thin, expected);
    }

    #[test]
    fn g_main_pair_families() {
        let g = builtin_fixture("g_main").unwrap();
        let pairs = g.classify_pairs();
        assert_eq!(pairs.len(), 15);
        assert!(pairs.iter().all(|p| p.kind() == Some(PairKind::Thick)));

        let idx = |s: &str| g.vertex_index(s).unwrap();
        let midpoints = |src: &str, dst: &str| -> Vec<usize> {
            pairs
                .iter()
                .find(|p| p.source == idx(src) && p.target == idx(dst))
                .unwrap_or_else(|| panic!("missing pair {src} {dst}"))
                .midpoints
                .clone()
        };
        let sorted = |mut v: Vec<usize>| {
            v.sort_unstable();
            v
        };
        for i in 0..3usize {
            let s = |j: usize, k: usize| format!("x{j}^{}", k % 3);
            // The five families of distance-two pairs and their midpoints.
            assert_eq!(
                midpoints("x0", &s(2, i)),
                sorted(vec![idx(&s(1, i)), idx(&s(1, i + 2))])
            );
            assert_eq!(
                midpoints("x0", &s(3, i)),
                sorted(vec![idx(&s(1, i)), idx(&s(1, i + 1))])
            );
            assert_eq!(
                midpoints(&s(1, i), &s(3, i + 1)),
                sorted(vec![idx(&s(2, i)), idx(&s(2, i + 1))])
            );
            assert_eq!(
                midpoints(&s(1, i), "x4"),
                sorted(vec![idx(&s(3, i)), idx(&s(3, i + 2))])
            );
            assert_eq!(
                midpoints(&s(2, i), "x4"),
                sorted(vec![idx(&s(3, i)), idx(&s(3, i + 1))])
            );
        }
    }

    #[test]
    fn multisquare_witness_detection() {
        let g = Digraph::parse("0 a\n0 b\n0 c\na 1\nb 1\nc 1").unwrap();
        let witness = g.multisquare_witness().expect("three midpoints");
        assert_eq!(g.name(witness.source), "0");
        assert_eq!(g.name(witness.target), "1");
        assert_eq!(witness.midpoints.len(), 3);
        assert!(!g.is_multisquare_free());

        assert!(builtin_fixture("g_main").unwrap().is_multisquare_free());

        // Independent recount for the cube: raw double loop over all
        // ordered vertex pairs.
        let cube = builtin_fixture("cube").unwrap();
        assert!(cube.is_multisquare_free());
        let n = cube.vertex_count();
        for x in 0..n {
            for y in 0..n {
                let midpoints = (0..n)
                    .filter(|&v| cube.has_arrow(x, v) && cube.has_arrow(v, y))
                    .count();
                assert!(midpoints <= 2, "({x},{y}) has {midpoints} midpoints");
            }
        }
    }

    #[test]
    fn longest_path_lengths() {
        assert_eq!(triangle().longest_path_length(), Some(2));
        assert_eq!(
            builtin_fixture("g_main").unwrap().longest_path_length(),
            Some(4)
        );
        let cyclic = Digraph::parse("a b\nb c\nc a").unwrap();
        assert_eq!(cyclic.longest_path_length(), None);
    }

    #[test]
    fn digraph_is_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Digraph>();
        assert_send_sync::<Path>();
    }

    #[test]
    fn with_arrows_preserves_indexing() {
        let g = builtin_fixture("g_main").unwrap();
        let kept: Vec<(usize, usize)> = g.arrows().skip(1).collect();
        let h = g.with_arrows(&kept).unwrap();
        assert_eq!(h.vertex_count(), g.vertex_count());
        assert_eq!(h.arrow_count(), g.arrow_count() - 1);
        assert_eq!(h.names(), g.names());
    }
}
