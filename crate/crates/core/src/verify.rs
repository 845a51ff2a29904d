//! The built-in verification suite.
//!
//! Nine named checks reproduce every headline computation on the built-in
//! fixtures and stress the two independent basis constructions against each
//! other on a randomized multisquare-free corpus. The CLI `verify-paper`
//! subcommand runs the suite; the `acceptance` integration test target runs
//! the same checks one criterion per test. All expectations are exact; no
//! tolerances anywhere.

use num::bigint::BigInt;

use crate::chain::{boundary_matrix, homology_summary, omega_class_basis, omega_general};
use crate::cochain::{
    cochain_structure_classes, cochain_structure_snf, pairing, relation_set_general,
};
use crate::digraph::Digraph;
use crate::error::Result;
use crate::field::{Field, PrimeField, Rationals};
use crate::fixtures::{builtin_fixture, g_main_chords, FIXTURE_NAMES};
use crate::linalg::{spans_equal, ExactMatrix};
use crate::random::{multisquare_free_corpus, CorpusConfig};
use crate::report::{CheckReport, VerifyReport};
use crate::smoves::{build_smoves, classify_components, SnClass};
use crate::snf::{smith_normal_form, verify_smith};

/// Levels covered by the randomized oracle checks.
const CORPUS_MAX_LEVEL: usize = 5;
/// Cap for boundedness detection; a complex not dead by here is reported
/// unbounded and skipped by the Euler checks.
const EULER_MAX_LEVEL: usize = 8;

/// The corpus used by `run_all` and the acceptance suite: two hundred
/// multisquare-free digraphs on at most ten vertices, fixed seed.
pub fn default_corpus() -> Vec<Digraph> {
    multisquare_free_corpus(&CorpusConfig::default())
}

/// Runs every check against the given corpus.
pub fn run_all(corpus: &[Digraph]) -> VerifyReport {
    let checks = vec![
        main_example_replication(),
        smove_diagram_replication(),
        worked_example_replication(),
        low_degree_dimensions(),
        basis_oracle_equivalence(corpus),
        structure_oracle_agreement(corpus),
        invariant_suite(corpus),
        field_independence(corpus),
        negative_control(),
    ];
    let passed = checks.iter().all(|c| c.passed);
    VerifyReport { checks, passed }
}

fn check(name: &str, body: impl FnOnce() -> std::result::Result<String, String>) -> CheckReport {
    match body() {
        Ok(details) => CheckReport {
            name: name.to_owned(),
            passed: true,
            details,
        },
        Err(details) => CheckReport {
            name: name.to_owned(),
            passed: false,
            details,
        },
    }
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn fixture(name: &str) -> Digraph {
    builtin_fixture(name).expect("builtin fixture")
}

fn classes_at(g: &Digraph, n: usize) -> Vec<SnClass> {
    classify_components(&build_smoves(g, n), g)
}

/// Outcomes checked by the main-example criterion, reused by the negative
/// control on mutated fixtures.
#[derive(PartialEq, Eq, Debug, Clone)]
struct MainOutcomes {
    dim4_rational: usize,
    dim4_mod2: usize,
    level4_free_rank: usize,
    level4_torsion: Vec<BigInt>,
    euler_gap: Option<i64>,
}

fn main_outcomes(g: &Digraph) -> MainOutcomes {
    let structure = cochain_structure_snf(g, 4);
    let hq = homology_summary(g, &Rationals, 5);
    let h2 = homology_summary(g, &PrimeField::new(2), 5);
    let euler_gap = match (hq.euler, h2.euler) {
        (Some(a), Some(b)) => Some(b - a),
        _ => None,
    };
    MainOutcomes {
        dim4_rational: omega_general(g, 4, &Rationals).dim(),
        dim4_mod2: omega_general(g, 4, &PrimeField::new(2)).dim(),
        level4_free_rank: structure.free_rank,
        level4_torsion: structure.torsion,
        euler_gap,
    }
}

/// Criterion 1: level-four dimensions of g_main over the rationals and
/// GF(2), two-torsion of the integral level-four cochain component, and the
/// Euler characteristic gap of exactly one.
pub fn main_example_replication() -> CheckReport {
    check("main-example", || {
        let g = fixture("g_main");
        let outcomes = main_outcomes(&g);
        ensure!(
            outcomes.dim4_rational == 0,
            "dim at level 4 over Q is {}, expected 0",
            outcomes.dim4_rational
        );
        ensure!(
            outcomes.dim4_mod2 == 1,
            "dim at level 4 over F2 is {}, expected 1",
            outcomes.dim4_mod2
        );
        ensure!(
            outcomes.level4_free_rank == 0 && outcomes.level4_torsion == vec![BigInt::from(2)],
            "integral level 4 is Z^{} + torsion {:?}, expected pure Z/2Z",
            outcomes.level4_free_rank,
            outcomes.level4_torsion
        );
        ensure!(
            outcomes.euler_gap == Some(1),
            "euler gap is {:?}, expected exactly 1",
            outcomes.euler_gap
        );
        let hq = homology_summary(&g, &Rationals, 5);
        let h2 = homology_summary(&g, &PrimeField::new(2), 5);
        Ok(format!(
            "dim4(Q)=0, dim4(F2)=1, level-4 integral structure Z/2Z, euler {} vs {}",
            hq.euler.unwrap(),
            h2.euler.unwrap()
        ))
    })
}

/// Criterion 2: the level-four short-move graph of g_main has 12 nodes, 15
/// edges, one thick non-bipartite class with a nine-cycle; g_prime yields
/// the identical graph but a thin class with exactly six thin paths.
pub fn smove_diagram_replication() -> CheckReport {
    check("smove-diagram", || {
        let gm = fixture("g_main");
        let sm = build_smoves(&gm, 4);
        ensure!(
            sm.node_count() == 12 && sm.edge_count() == 15 && sm.components.len() == 1,
            "g_main level 4: {} nodes, {} edges, {} components",
            sm.node_count(),
            sm.edge_count(),
            sm.components.len()
        );
        let classes = classify_components(&sm, &gm);
        let class = &classes[0];
        ensure!(class.is_thick(), "g_main class must be thick");
        ensure!(!class.is_bipartite, "g_main class must be non-bipartite");
        let witness = class
            .odd_cycle_witness
            .as_ref()
            .ok_or("missing odd cycle witness")?;
        ensure!(
            witness.len() == 9,
            "odd cycle witness has length {}, expected 9",
            witness.len()
        );
        for k in 0..witness.len() {
            let (a, b) = (witness[k], witness[(k + 1) % witness.len()]);
            ensure!(sm.has_edge(a, b), "witness step {a}-{b} is not an edge");
        }

        let gp = fixture("g_prime");
        let sp = build_smoves(&gp, 4);
        ensure!(
            sp.paths == sm.paths && sp.edges == sm.edges,
            "g_prime level-4 graph differs from g_main's"
        );
        let classes = classify_components(&sp, &gp);
        ensure!(
            classes.len() == 1 && classes[0].is_thin,
            "g_prime class must be thin"
        );
        let thin_pairs: std::collections::HashSet<(usize, usize)> =
            gp.thin_pairs().into_iter().collect();
        let thin_paths = sp
            .paths
            .iter()
            .filter(|p| {
                let v = p.vertices();
                (1..p.len()).any(|i| thin_pairs.contains(&(v[i - 1], v[i + 1])))
            })
            .count();
        ensure!(thin_paths == 6, "{thin_paths} thin four-paths, expected 6");
        Ok(
            "12 nodes, 15 edges, one class; thick non-bipartite with a 9-cycle on g_main, \
            thin with 6 thin paths on g_prime"
                .to_owned(),
        )
    })
}

/// Criterion 3: the grid, cube and trapezohedron level-three graphs have
/// their documented shapes.
pub fn worked_example_replication() -> CheckReport {
    check("worked-examples", || {
        let grid = fixture("grid");
        let s = build_smoves(&grid, 3);
        ensure!(
            s.node_count() == 3,
            "grid level 3 has {} nodes, expected 3",
            s.node_count()
        );
        let edges: Vec<(usize, usize, usize)> =
            s.edges.iter().map(|e| (e.a, e.b, e.color)).collect();
        ensure!(
            edges == vec![(0, 1, 2), (1, 2, 1)],
            "grid level 3 edges {edges:?}, expected a path with colors (2, 1)"
        );
        let labels: Vec<String> = s
            .paths
            .iter()
            .map(|p| p.label(&grid).replace(' ', ""))
            .collect();
        ensure!(
            labels == vec!["0125", "0145", "0345"],
            "grid level 3 nodes {labels:?}"
        );

        let cube = fixture("cube");
        let s = build_smoves(&cube, 3);
        ensure!(
            s.node_count() == 6 && s.edge_count() == 6 && s.components.len() == 1,
            "cube level 3: {} nodes, {} edges, {} components",
            s.node_count(),
            s.edge_count(),
            s.components.len()
        );
        for v in 0..s.node_count() {
            let mut colors: Vec<usize> = s.neighbors(v).iter().map(|&(_, c)| c).collect();
            colors.sort_unstable();
            ensure!(
                colors == vec![1, 2],
                "cube node {v} lacks alternating colors: {colors:?}"
            );
        }
        let classes = classify_components(&s, &cube);
        ensure!(
            classes.len() == 1 && classes[0].is_thick() && classes[0].is_bipartite,
            "cube class must be one thick bipartite hexagon"
        );

        let trapezohedron = fixture("trapezohedron");
        let s = build_smoves(&trapezohedron, 3);
        ensure!(
            s.components.len() == 1,
            "trapezohedron level 3 must be connected"
        );
        ensure!(
            (0..s.node_count()).all(|v| s.neighbors(v).len() == 2),
            "trapezohedron level 3 must be a cycle"
        );
        ensure!(
            s.node_count().is_multiple_of(2),
            "trapezohedron cycle length {} must be even",
            s.node_count()
        );
        let classes = classify_components(&s, &trapezohedron);
        ensure!(
            classes.len() == 1 && classes[0].is_thick() && classes[0].is_bipartite,
            "trapezohedron class must be thick and bipartite"
        );
        Ok(format!(
            "grid path (2,1); cube hexagon; trapezohedron even {}-cycle",
            s.node_count()
        ))
    })
}

// Independent counting used by the low-degree criterion: raw loops over the
// adjacency structure, no shared code with the pair census.
fn brute_force_triangles(g: &Digraph) -> usize {
    let n = g.vertex_count();
    let mut count = 0;
    for u in 0..n {
        for v in 0..n {
            if !g.has_arrow(u, v) {
                continue;
            }
            for w in 0..n {
                if g.has_arrow(v, w) && g.has_arrow(u, w) {
                    count += 1;
                }
            }
        }
    }
    count
}

fn brute_force_squares(g: &Digraph) -> std::result::Result<usize, String> {
    let n = g.vertex_count();
    let mut count = 0;
    for x in 0..n {
        for y in 0..n {
            if x == y || g.has_arrow(x, y) {
                continue;
            }
            let midpoints = (0..n)
                .filter(|&v| g.has_arrow(x, v) && g.has_arrow(v, y))
                .count();
            if midpoints > 2 {
                return Err(format!("multisquare at ({x}, {y})"));
            }
            if midpoints == 2 {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Criterion 4: on every fixture the low dimensions are the vertex count,
/// the arrow count, and triangles plus squares, counted by brute force.
pub fn low_degree_dimensions() -> CheckReport {
    check("low-degree-dims", || {
        for name in FIXTURE_NAMES {
            let g = fixture(name);
            let f = Rationals;
            let dim0 = omega_general(&g, 0, &f).dim();
            let dim1 = omega_general(&g, 1, &f).dim();
            let dim2 = omega_general(&g, 2, &f).dim();
            ensure!(
                dim0 == g.vertex_count(),
                "{name}: dim0 {dim0} != vertices {}",
                g.vertex_count()
            );
            ensure!(
                dim1 == g.arrow_count(),
                "{name}: dim1 {dim1} != arrows {}",
                g.arrow_count()
            );
            let triangles = brute_force_triangles(&g);
            let squares = brute_force_squares(&g)?;
            ensure!(
                dim2 == triangles + squares,
                "{name}: dim2 {dim2} != {triangles} triangles + {squares} squares"
            );
        }
        Ok(format!("verified on all {} fixtures", FIXTURE_NAMES.len()))
    })
}

fn oracle_graphs(corpus: &[Digraph]) -> Vec<(String, Digraph)> {
    let mut graphs: Vec<(String, Digraph)> = FIXTURE_NAMES
        .iter()
        .map(|&n| (n.to_owned(), fixture(n)))
        .collect();
    graphs.extend(
        corpus
            .iter()
            .enumerate()
            .map(|(i, g)| (format!("corpus[{i}]"), g.clone())),
    );
    graphs
}

fn spans_match<F: Field>(g: &Digraph, n: usize, field: &F, classes: &[SnClass]) -> Result<bool> {
    let ambient = g.enumerate_paths(n).len();
    let general = omega_general(g, n, field);
    let class = omega_class_basis(g, n, field, classes)?;
    Ok(general.dim() == class.dim()
        && spans_equal(
            field,
            ambient.max(1),
            &general.to_columns(field, ambient),
            &class.to_columns(field, ambient),
        ))
}

/// Criterion 5: on every fixture and the whole corpus, for levels up to
/// five over Q, GF(2) and GF(3), the general kernel and the class basis
/// span the same space.
pub fn basis_oracle_equivalence(corpus: &[Digraph]) -> CheckReport {
    check("basis-oracle", || {
        let mut checked = 0usize;
        for (name, g) in oracle_graphs(corpus) {
            for n in 0..=CORPUS_MAX_LEVEL {
                let classes = classes_at(&g, n);
                for p in [0u32, 2, 3] {
                    let ok = if p == 0 {
                        spans_match(&g, n, &Rationals, &classes)
                    } else {
                        spans_match(&g, n, &PrimeField::new(p), &classes)
                    }
                    .map_err(|e| format!("{name}: {e}"))?;
                    ensure!(ok, "{name}: span mismatch at level {n} over field {p}");
                    checked += 1;
                }
            }
        }
        Ok(format!("{checked} span comparisons, all equal"))
    })
}

/// Criterion 6: Smith-normal-form structure equals the class structure in
/// free rank and torsion on the same corpus, at every level.
pub fn structure_oracle_agreement(corpus: &[Digraph]) -> CheckReport {
    check("structure-oracle", || {
        let mut checked = 0usize;
        for (name, g) in oracle_graphs(corpus) {
            for n in 0..=CORPUS_MAX_LEVEL {
                let by_snf = cochain_structure_snf(&g, n);
                let by_classes = cochain_structure_classes(&g, n, &classes_at(&g, n))
                    .map_err(|e| format!("{name}: {e}"))?;
                ensure!(
                    by_snf.free_rank == by_classes.free_rank
                        && by_snf.torsion == by_classes.torsion,
                    "{name} level {n}: snf gives rank {} torsion {:?}, classes give rank {} torsion {:?}",
                    by_snf.free_rank,
                    by_snf.torsion,
                    by_classes.free_rank,
                    by_classes.torsion
                );
                checked += 1;
            }
        }
        Ok(format!("{checked} structure comparisons, all equal"))
    })
}

fn dot_against_column<F: Field>(
    field: &F,
    v: &crate::chain::ChainVector<F>,
    column: &[BigInt],
) -> F::Elem {
    let mut acc = field.zero();
    for (r, entry) in column.iter().enumerate() {
        if !num::Zero::is_zero(entry) {
            let term = field.mul(&field.from_bigint(entry), &v.coefficient(field, r));
            acc = field.add(&acc, &term);
        }
    }
    acc
}

fn orthogonality_holds<F: Field>(g: &Digraph, n: usize, field: &F) -> bool {
    let relations = relation_set_general(g, n);
    let basis = omega_general(g, n, field);
    basis.vectors.iter().all(|v| {
        (0..relations.cols())
            .all(|c| field.is_zero(&dot_against_column(field, v, &relations.column(c))))
    })
}

fn duality_holds<F: Field>(g: &Digraph, n: usize, field: &F, classes: &[SnClass]) -> Result<bool> {
    let basis = omega_class_basis(g, n, field, classes)?;
    let tags = basis.class_tags.as_ref().expect("class basis carries tags");
    for (i, v) in basis.vectors.iter().enumerate() {
        for (j, &rep) in tags.iter().enumerate() {
            let value = pairing(field, v, n, rep)?;
            let expected = if i == j { field.one() } else { field.zero() };
            if value != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn boundary_squares_to_zero<F: Field>(g: &Digraph, field: &F, max_level: usize) -> Result<bool> {
    let mut bases = Vec::new();
    for n in 0..=max_level {
        let basis = omega_general(g, n, field);
        let empty = basis.dim() == 0;
        bases.push(basis);
        if empty {
            break;
        }
    }
    for n in 2..bases.len() {
        if bases[n].dim() == 0 {
            continue;
        }
        let hi = boundary_matrix(g, n, field, &bases[n], &bases[n - 1])?;
        let lo = boundary_matrix(g, n - 1, field, &bases[n - 1], &bases[n - 2])?;
        if !lo.matmul(&hi).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Criterion 7: the invariant suite. Boundary composition vanishes, chain
/// bases are orthogonal to the relation ideal, the class bases are dual to
/// their representatives, every level-three class over the whole corpus is
/// bipartite, and the Smith forms of the fixture relation matrices verify
/// (every elimination call additionally self-checks in debug builds).
pub fn invariant_suite(corpus: &[Digraph]) -> CheckReport {
    check("invariants", || {
        // A slice of the corpus keeps the matrix-heavy checks quick; the
        // bipartiteness scan below covers every corpus graph.
        let sample: Vec<(String, Digraph)> = oracle_graphs(corpus).into_iter().take(108).collect();
        for (name, g) in &sample {
            for p in [0u32, 2, 3] {
                let ok = if p == 0 {
                    boundary_squares_to_zero(g, &Rationals, CORPUS_MAX_LEVEL)
                } else {
                    boundary_squares_to_zero(g, &PrimeField::new(p), CORPUS_MAX_LEVEL)
                }
                .map_err(|e| format!("{name}: {e}"))?;
                ensure!(ok, "{name}: boundary composition nonzero over field {p}");
            }
            for n in 2..=4 {
                ensure!(
                    orthogonality_holds(g, n, &Rationals),
                    "{name}: chain space not orthogonal to relations at level {n} over Q"
                );
                ensure!(
                    orthogonality_holds(g, n, &PrimeField::new(2)),
                    "{name}: chain space not orthogonal to relations at level {n} over F2"
                );
                let classes = classes_at(g, n);
                for p in [0u32, 2] {
                    let ok = if p == 0 {
                        duality_holds(g, n, &Rationals, &classes)
                    } else {
                        duality_holds(g, n, &PrimeField::new(2), &classes)
                    }
                    .map_err(|e| format!("{name}: {e}"))?;
                    ensure!(ok, "{name}: duality pairing not the identity at level {n}");
                }
            }
        }
        // Low levels are bipartite on every multisquare-free digraph.
        for (i, g) in corpus.iter().enumerate() {
            for n in 0..=3 {
                for class in classes_at(g, n) {
                    ensure!(
                        class.is_bipartite,
                        "corpus[{i}]: non-bipartite class at level {n}"
                    );
                }
            }
        }
        // Explicit Smith verification on the fixture relation matrices.
        for name in ["g_main", "g_prime", "cube", "trapezohedron"] {
            let g = fixture(name);
            for n in 2..=4 {
                let relations = relation_set_general(&g, n);
                let form = smith_normal_form(&relations);
                verify_smith(&relations, &form).map_err(|e| format!("{name} level {n}: {e}"))?;
            }
        }
        // Rank plus nullity spot check.
        let g = fixture("g_main");
        for n in 1..=4 {
            let paths = g.enumerate_paths(n).len();
            let relations = relation_set_general(&g, n);
            let f = Rationals;
            let columns: Vec<Vec<num::BigRational>> = (0..relations.cols())
                .map(|c| {
                    relations
                        .column(c)
                        .iter()
                        .map(|x| f.from_bigint(x))
                        .collect()
                })
                .collect();
            let m = ExactMatrix::from_columns(f, paths, &columns);
            ensure!(
                m.rank() + m.kernel_basis().len() == relations.cols(),
                "rank-nullity violated on the level {n} relation matrix"
            );
        }
        Ok(format!(
            "boundary, orthogonality and duality on {} graphs; bipartite low levels on {} corpus graphs",
            sample.len(),
            corpus.len()
        ))
    })
}

/// Criterion 8: dimensions agree across Q, GF(2), GF(3) for levels up to
/// three everywhere; Euler characteristics agree across the three fields on
/// every bounded corpus member with no thick non-bipartite class.
pub fn field_independence(corpus: &[Digraph]) -> CheckReport {
    check("field-independence", || {
        for (name, g) in oracle_graphs(corpus) {
            for n in 0..=CORPUS_MAX_LEVEL {
                let dq = omega_general(&g, n, &Rationals).dim();
                let d2 = omega_general(&g, n, &PrimeField::new(2)).dim();
                let d3 = omega_general(&g, n, &PrimeField::new(3)).dim();
                // The characteristic-two dimension exceeds the others by
                // exactly the number of thick non-bipartite classes; below
                // level four there are none, so all three agree.
                let non_bipartite = classes_at(&g, n)
                    .iter()
                    .filter(|c| c.is_thick() && !c.is_bipartite)
                    .count();
                ensure!(
                    d2 == dq + non_bipartite && d3 == dq,
                    "{name} level {n}: dims Q={dq} F2={d2} F3={d3} with {non_bipartite} \
                     thick non-bipartite classes"
                );
                if n <= 3 {
                    ensure!(
                        dq == d2 && dq == d3,
                        "{name} level {n}: dims differ Q={dq} F2={d2} F3={d3}"
                    );
                }
            }
        }
        let mut euler_checked = 0usize;
        for (name, g) in oracle_graphs(corpus) {
            let hq = homology_summary(&g, &Rationals, EULER_MAX_LEVEL);
            let h2 = homology_summary(&g, &PrimeField::new(2), EULER_MAX_LEVEL);
            let h3 = homology_summary(&g, &PrimeField::new(3), EULER_MAX_LEVEL);
            if !(hq.bounded && h2.bounded && h3.bounded) {
                continue;
            }
            // The mod-2 dimensions bound every level with thick classes, so
            // scanning up to the mod-2 cutoff sees all of them.
            let top = h2.omega_dims.len();
            let torsion_free = (0..top).all(|n| {
                classes_at(&g, n)
                    .iter()
                    .all(|c| c.is_thin || c.is_bipartite)
            });
            if !torsion_free {
                continue;
            }
            ensure!(
                hq.euler == h2.euler && hq.euler == h3.euler,
                "{name}: eulers differ on a torsion-free bounded digraph: Q={:?} F2={:?} F3={:?}",
                hq.euler,
                h2.euler,
                h3.euler
            );
            euler_checked += 1;
        }
        ensure!(
            euler_checked > 0,
            "no bounded torsion-free graphs in the corpus"
        );
        Ok(format!(
            "low-level dims equal everywhere; eulers equal on {euler_checked} bounded torsion-free graphs"
        ))
    })
}

/// Criterion 9: deleting any one of the six chords of g_main changes at
/// least one main-example outcome, so the suite detects fixture corruption.
pub fn negative_control() -> CheckReport {
    check("negative-control", || {
        let g = fixture("g_main");
        let baseline = main_outcomes(&g);
        ensure!(
            baseline.dim4_rational == 0 && baseline.dim4_mod2 == 1 && baseline.euler_gap == Some(1),
            "baseline outcomes are off: {baseline:?}"
        );
        let chords = g_main_chords();
        let mut changed = Vec::new();
        for (u, v) in &chords {
            let (ui, vi) = (g.vertex_index(u).unwrap(), g.vertex_index(v).unwrap());
            let kept: Vec<(usize, usize)> = g.arrows().filter(|&a| a != (ui, vi)).collect();
            let mutated = g.with_arrows(&kept).expect("subgraph is valid");
            let outcomes = main_outcomes(&mutated);
            ensure!(
                outcomes != baseline,
                "deleting chord {u} -> {v} left every outcome unchanged"
            );
            // Removing a chord re-creates a thin pair, so the class turns
            // thin and the mod-2 dimension collapses.
            changed.push(format!(
                "{u}->{v}: dim4(F2) {} gap {:?}",
                outcomes.dim4_mod2, outcomes.euler_gap
            ));
        }
        Ok(format!(
            "all {} chord deletions detected ({})",
            chords.len(),
            changed.join("; ")
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    // The full-corpus checks live in the acceptance test target; here a
    // small corpus keeps the unit run quick.
    fn small_corpus() -> Vec<Digraph> {
        multisquare_free_corpus(&CorpusConfig {
            count: 12,
            ..CorpusConfig::default()
        })
    }

    #[test]
    fn fixture_checks_pass() {
        for report in [
            main_example_replication(),
            smove_diagram_replication(),
            worked_example_replication(),
            low_degree_dimensions(),
            negative_control(),
        ] {
            assert!(report.passed, "{}: {}", report.name, report.details);
        }
    }

    #[test]
    fn corpus_checks_pass_on_a_small_corpus() {
        let corpus = small_corpus();
        for report in [
            basis_oracle_equivalence(&corpus),
            structure_oracle_agreement(&corpus),
            invariant_suite(&corpus),
            field_independence(&corpus),
        ] {
            assert!(report.passed, "{}: {}", report.name, report.details);
        }
    }

    #[test]
    fn run_all_aggregates() {
        let corpus = small_corpus();
        let report = run_all(&corpus);
        assert_eq!(report.checks.len(), 9);
        assert!(report.passed);
    }
}
