//! The graph of short moves on `n`-paths.
//!
//! Two distinct `n`-paths are joined by an edge of color `i` when they agree
//! everywhere except at position `i` (with `1 <= i <= n-1`) and the skipped
//! pair `(p_{i-1}, p_{i+1})` is at distance exactly two. Connected
//! components are classified as thin/thick and bipartite/non-bipartite; the
//! classification drives the basis construction in `chain` and `cochain`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::digraph::{Digraph, Path};

/// An undirected colored edge between path nodes; stored with `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SmEdge {
    pub a: usize,
    pub b: usize,
    pub color: usize,
}

/// The short-move graph at a fixed level, with its component partition.
#[derive(Clone, Debug)]
pub struct ShortMoveGraph {
    pub level: usize,
    /// Node `i` is `paths[i]`, in lexicographic order.
    pub paths: Vec<Path>,
    pub edges: Vec<SmEdge>,
    /// Connected components, each sorted, ordered by least member.
    pub components: Vec<Vec<usize>>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl ShortMoveGraph {
    pub fn node_count(&self) -> usize {
        self.paths.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbors of a node as `(node, color)`, sorted.
    pub fn neighbors(&self, node: usize) -> &[(usize, usize)] {
        &self.adjacency[node]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].iter().any(|&(n, _)| n == b)
    }
}

/// One `S_n`-class: a connected component with its classification.
#[derive(Clone, Debug)]
pub struct SnClass {
    /// Sorted member nodes.
    pub members: Vec<usize>,
    /// Lexicographically least member; lands in the plus part when bipartite.
    pub representative: usize,
    /// Contains at least one thin path.
    pub is_thin: bool,
    pub is_bipartite: bool,
    /// Proper two-coloring `(plus, minus)` when bipartite.
    pub parts: Option<(Vec<usize>, Vec<usize>)>,
    /// A shortest odd cycle when non-bipartite, as a cyclic node sequence.
    pub odd_cycle_witness: Option<Vec<usize>>,
    /// False when the ambient digraph has a multisquare; such classes carry
    /// no basis interpretation and basis builders refuse them.
    pub basis_supported: bool,
}

impl SnClass {
    pub fn is_thick(&self) -> bool {
        !self.is_thin
    }
}

/// Builds the full short-move graph of `g` at level `n`. For `n <= 1` the
/// graph is discrete.
pub fn build_smoves(g: &Digraph, n: usize) -> ShortMoveGraph {
    let paths = g.enumerate_paths(n);
    let index: HashMap<&[usize], usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.vertices(), i))
        .collect();

    let mut edge_set: BTreeSet<SmEdge> = BTreeSet::new();
    for (a, path) in paths.iter().enumerate() {
        let p = path.vertices();
        for i in 1..n {
            let (x, y) = (p[i - 1], p[i + 1]);
            // d(x, y) = 2 exactly when x != y and there is no direct arrow;
            // the two-path through p[i] already bounds the distance by two.
            if x == y || g.has_arrow(x, y) {
                continue;
            }
            for &w in g.out_neighbors(x) {
                if w == p[i] || !g.has_arrow(w, y) {
                    continue;
                }
                let mut q = p.to_vec();
                q[i] = w;
                let b = index[q.as_slice()];
                edge_set.insert(SmEdge {
                    a: a.min(b),
                    b: a.max(b),
                    color: i,
                });
            }
        }
    }
    let edges: Vec<SmEdge> = edge_set.into_iter().collect();

    let mut adjacency = vec![Vec::new(); paths.len()];
    for e in &edges {
        adjacency[e.a].push((e.b, e.color));
        adjacency[e.b].push((e.a, e.color));
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }

    let components = connected_components(paths.len(), &adjacency);
    ShortMoveGraph {
        level: n,
        paths,
        edges,
        components,
        adjacency,
    }
}

fn connected_components(n: usize, adjacency: &[Vec<(usize, usize)>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut members = Vec::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            members.push(v);
            for &(w, _) in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    // BFS from increasing starts already yields components ordered by their
    // least member.
    components
}

/// Classifies every component of `smg` (built from `g`): thin/thick,
/// bipartite with parts or non-bipartite with a shortest odd cycle.
pub fn classify_components(smg: &ShortMoveGraph, g: &Digraph) -> Vec<SnClass> {
    let thin_pairs: HashSet<(usize, usize)> = g.thin_pairs().into_iter().collect();
    let basis_supported = g.is_multisquare_free();
    let path_is_thin = |p: &Path| -> bool {
        let v = p.vertices();
        (1..p.len()).any(|i| thin_pairs.contains(&(v[i - 1], v[i + 1])))
    };

    smg.components
        .iter()
        .map(|members| {
            let representative = members[0];
            let is_thin = members.iter().any(|&m| path_is_thin(&smg.paths[m]));
            let (parts, odd_cycle_witness) = match two_color(smg, members) {
                Some(parts) => (Some(parts), None),
                None => (None, Some(shortest_odd_cycle(smg, members))),
            };
            SnClass {
                members: members.clone(),
                representative,
                is_thin,
                is_bipartite: parts.is_some(),
                parts,
                odd_cycle_witness,
                basis_supported,
            }
        })
        .collect()
}

// BFS two-coloring from the representative, which is placed in the plus
// part. Returns None on a color conflict.
fn two_color(smg: &ShortMoveGraph, members: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut color: HashMap<usize, bool> = HashMap::new();
    let root = members[0];
    color.insert(root, true);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let cv = color[&v];
        for &(w, _) in smg.neighbors(v) {
            match color.get(&w) {
                Some(&cw) => {
                    if cw == cv {
                        return None;
                    }
                }
                None => {
                    color.insert(w, !cv);
                    queue.push_back(w);
                }
            }
        }
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for &m in members {
        if color[&m] {
            plus.push(m);
        } else {
            minus.push(m);
        }
    }
    Some((plus, minus))
}

// Shortest odd closed walk within one component, via BFS on the bipartite
// double cover from every member in order. A shortest odd closed walk is
// always a simple cycle. Deterministic: first minimum wins.
fn shortest_odd_cycle(smg: &ShortMoveGraph, members: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for &s in members {
        if let Some(walk) = odd_walk_from(smg, s) {
            if best.as_ref().is_none_or(|b| walk.len() < b.len()) {
                best = Some(walk);
            }
        }
    }
    best.expect("non-bipartite component has an odd cycle")
}

fn odd_walk_from(smg: &ShortMoveGraph, s: usize) -> Option<Vec<usize>> {
    let n = smg.node_count();
    // State (v, parity) encoded as 2*v + parity.
    let mut parent: Vec<Option<usize>> = vec![None; 2 * n];
    let mut seen = vec![false; 2 * n];
    let start = 2 * s;
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let goal = 2 * s + 1;
    while let Some(state) = queue.pop_front() {
        if state == goal {
            let mut walk = Vec::new();
            let mut cur = Some(state);
            while let Some(c) = cur {
                walk.push(c / 2);
                if c == start {
                    break;
                }
                cur = parent[c];
            }
            walk.reverse();
            walk.pop(); // drop the repeated start vertex
            return Some(walk);
        }
        let (v, parity) = (state / 2, state % 2);
        for &(w, _) in smg.neighbors(v) {
            let next = 2 * w + (1 - parity);
            if !seen[next] {
                seen[next] = true;
                parent[next] = Some(state);
                queue.push_back(next);
            }
        }
    }
    None
}

/// Graphviz export of the short-move graph with class annotations. Node
/// labels are the vertex-name sequences; edge labels are colors.
pub fn export_dot(smg: &ShortMoveGraph, classes: &[SnClass], g: &Digraph) -> String {
    let mut class_of = vec![usize::MAX; smg.node_count()];
    let mut part_of: Vec<&str> = vec![""; smg.node_count()];
    for (ci, class) in classes.iter().enumerate() {
        for &m in &class.members {
            class_of[m] = ci;
        }
        if let Some((plus, minus)) = &class.parts {
            for &m in plus {
                part_of[m] = "+";
            }
            for &m in minus {
                part_of[m] = "-";
            }
        }
    }
    let mut out = String::new();
    out.push_str(&format!(
        "graph smoves {{\n  graph [level={}];\n",
        smg.level
    ));
    for (i, path) in smg.paths.iter().enumerate() {
        let class = &classes[class_of[i]];
        let mut attrs = format!(
            "label=\"{}\", class={}, thin={}, bipartite={}",
            escape(&path.label(g)),
            class_of[i],
            class.is_thin,
            class.is_bipartite
        );
        if !part_of[i].is_empty() {
            attrs.push_str(&format!(", part=\"{}\"", part_of[i]));
        }
        out.push_str(&format!("  n{i} [{attrs}];\n"));
    }
    for e in &smg.edges {
        out.push_str(&format!(
            "  n{} -- n{} [label=\"{}\"];\n",
            e.a, e.b, e.color
        ));
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::builtin_fixture;

    fn label_of(g: &Digraph, smg: &ShortMoveGraph, node: usize) -> String {
        smg.paths[node].label(g).replace(' ', "")
    }

    #[test]
    fn grid_level_three_is_the_three_node_path() {
        let g = builtin_fixture("grid").unwrap();
        let smg = build_smoves(&g, 3);
        assert_eq!(smg.node_count(), 3);
        assert_eq!(
            smg.edges,
            vec![
                SmEdge {
                    a: 0,
                    b: 1,
                    color: 2
                },
                SmEdge {
                    a: 1,
                    b: 2,
                    color: 1
                },
            ]
        );
        assert_eq!(label_of(&g, &smg, 0), "0125");
        assert_eq!(label_of(&g, &smg, 1), "0145");
        assert_eq!(label_of(&g, &smg, 2), "0345");
        let classes = classify_components(&smg, &g);
        assert_eq!(classes.len(), 1);
        assert!(classes[0].is_thin);
        assert!(classes[0].is_bipartite);
    }

    #[test]
    fn grid_chords_class_is_thick() {
        let g = builtin_fixture("grid_chords").unwrap();
        let smg = build_smoves(&g, 3);
        assert_eq!(smg.node_count(), 3);
        let classes = classify_components(&smg, &g);
        assert_eq!(classes.len(), 1);
        assert!(classes[0].is_thick());
    }

    #[test]
    fn cube_level_three_is_a_hexagon() {
        let g = builtin_fixture("cube").unwrap();
        let smg = build_smoves(&g, 3);
        assert_eq!(smg.node_count(), 6);
        assert_eq!(smg.edge_count(), 6);
        assert_eq!(smg.components.len(), 1);
        let labels: Vec<String> = (0..6).map(|i| label_of(&g, &smg, i)).collect();
        assert_eq!(
            labels,
            vec!["0147", "0157", "0247", "0267", "0357", "0367"]
        );
        for node in 0..6 {
            let colors: Vec<usize> = smg.neighbors(node).iter().map(|&(_, c)| c).collect();
            assert_eq!(colors.len(), 2);
            assert!(colors.contains(&1) && colors.contains(&2), "alternating");
        }
        let classes = classify_components(&smg, &g);
        assert!(classes[0].is_thick());
        assert!(classes[0].is_bipartite);
        let (plus, minus) = classes[0].parts.as_ref().unwrap();
        assert_eq!(plus.len(), 3);
        assert_eq!(minus.len(), 3);
        assert!(plus.contains(&classes[0].representative));
    }

    #[test]
    fn star6_level_three_is_an_odd_line() {
        let g = builtin_fixture("star6").unwrap();
        let smg = build_smoves(&g, 3);
        assert_eq!(smg.node_count(), 9);
        assert_eq!(smg.edge_count(), 8);
        assert_eq!(smg.components.len(), 1);
        let degrees: Vec<usize> = (0..9).map(|v| smg.neighbors(v).len()).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 2);
        assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 7);
        let classes = classify_components(&smg, &g);
        assert!(classes[0].is_thin);
        let chorded = builtin_fixture("star6_chords").unwrap();
        let smg = build_smoves(&chorded, 3);
        assert_eq!(smg.node_count(), 9);
        let classes = classify_components(&smg, &chorded);
        assert!(classes[0].is_thick());
    }

    #[test]
    fn trapezohedron_level_three_is_an_even_cycle() {
        let g = builtin_fixture("trapezohedron").unwrap();
        let smg = build_smoves(&g, 3);
        assert_eq!(smg.node_count(), 10);
        assert_eq!(smg.edge_count(), 10);
        assert_eq!(smg.components.len(), 1);
        assert!((0..10).all(|v| smg.neighbors(v).len() == 2));
        let classes = classify_components(&smg, &g);
        assert!(classes[0].is_thick());
        assert!(classes[0].is_bipartite);
        let (plus, minus) = classes[0].parts.as_ref().unwrap();
        assert!(!plus.is_empty() && !minus.is_empty());
    }

    #[test]
    fn g_main_level_four_diagram() {
        let g = builtin_fixture("g_main").unwrap();
        let smg = build_smoves(&g, 4);
        assert_eq!(smg.node_count(), 12);
        assert_eq!(smg.edge_count(), 15);
        assert_eq!(smg.components.len(), 1);
        let classes = classify_components(&smg, &g);
        let class = &classes[0];
        assert!(class.is_thick());
        assert!(!class.is_bipartite);
        let witness = class.odd_cycle_witness.as_ref().unwrap();
        assert_eq!(witness.len(), 9);
        assert_eq!(witness.len() % 2, 1);
        for k in 0..witness.len() {
            let (a, b) = (witness[k], witness[(k + 1) % witness.len()]);
            assert!(smg.has_edge(a, b), "witness step {a} -- {b}");
        }
        // Simple cycle: no repeated node.
        let distinct: std::collections::HashSet<_> = witness.iter().collect();
        assert_eq!(distinct.len(), witness.len());
    }

    #[test]
    fn g_prime_level_four_is_the_same_graph_but_thin() {
        let gp = builtin_fixture("g_prime").unwrap();
        let gm = builtin_fixture("g_main").unwrap();
        let sp = build_smoves(&gp, 4);
        let sm = build_smoves(&gm, 4);
        assert_eq!(sp.paths, sm.paths);
        assert_eq!(sp.edges, sm.edges);
        let classes = classify_components(&sp, &gp);
        assert_eq!(classes.len(), 1);
        assert!(classes[0].is_thin);
    }

    #[test]
    fn level_one_is_discrete_and_thick() {
        let g = Digraph::parse("0 1\n1 2\n0 2").unwrap();
        let smg = build_smoves(&g, 1);
        assert_eq!(smg.node_count(), 3);
        assert_eq!(smg.edge_count(), 0);
        let classes = classify_components(&smg, &g);
        assert_eq!(classes.len(), 3);
        assert!(classes.iter().all(|c| c.is_thick() && c.is_bipartite));
    }

    #[test]
    fn color_degree_bound_when_multisquare_free() {
        for name in crate::fixtures::FIXTURE_NAMES {
            let g = builtin_fixture(name).unwrap();
            for n in 0..=4 {
                let smg = build_smoves(&g, n);
                for v in 0..smg.node_count() {
                    let mut colors: Vec<usize> = smg.neighbors(v).iter().map(|&(_, c)| c).collect();
                    let len = colors.len();
                    colors.dedup();
                    assert_eq!(colors.len(), len, "one edge per color at {name} n={n}");
                    // At most one move per interior position.
                    assert!(len < n.max(1));
                }
            }
        }
    }

    #[test]
    fn bipartite_parts_are_proper() {
        for name in crate::fixtures::FIXTURE_NAMES {
            let g = builtin_fixture(name).unwrap();
            for n in 2..=4 {
                let smg = build_smoves(&g, n);
                for class in classify_components(&smg, &g) {
                    if let Some((plus, minus)) = &class.parts {
                        let in_plus: HashSet<usize> = plus.iter().copied().collect();
                        let mut joined: Vec<usize> = plus.iter().chain(minus).copied().collect();
                        joined.sort_unstable();
                        assert_eq!(joined, class.members);
                        for e in &smg.edges {
                            if class.members.binary_search(&e.a).is_ok() {
                                assert_ne!(in_plus.contains(&e.a), in_plus.contains(&e.b));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dot_export_shape() {
        let g = Digraph::parse("0 1\n1 2\n0 2").unwrap();
        let smg = build_smoves(&g, 1);
        let classes = classify_components(&smg, &g);
        let dot = export_dot(&smg, &classes, &g);
        assert!(dot.starts_with("graph smoves {"));
        assert_eq!(dot.matches(" -- ").count(), 0);
        assert_eq!(dot.matches("label=").count(), 3);

        let cube = builtin_fixture("cube").unwrap();
        let smg = build_smoves(&cube, 3);
        let classes = classify_components(&smg, &cube);
        let dot = export_dot(&smg, &classes, &cube);
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(dot.contains("label=\"1\""));
        assert!(dot.contains("label=\"2\""));
        assert_eq!(dot, export_dot(&smg, &classes, &cube));

        let gm = builtin_fixture("g_main").unwrap();
        let smg = build_smoves(&gm, 4);
        let classes = classify_components(&smg, &gm);
        let dot = export_dot(&smg, &classes, &gm);
        assert_eq!(dot.matches(" [label=").count(), 12 + 15);
        assert_eq!(dot.matches(" -- ").count(), 15);
        assert!(dot.contains("bipartite=false"));
    }
}
