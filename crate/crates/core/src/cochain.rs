//! The cochain quotient presentation: path cochains are the quotient of the
//! path algebra of `g` by the ideal generated by the distance-two relations
//! `t_{x,y}` (the sum of all two-paths from `x` to `y`).
//!
//! Degree by degree the quotient is a cokernel of an integer relation
//! matrix, so Smith normal form reads off its free rank and torsion. On
//! multisquare-free digraphs the relations split into thick short-move
//! edges and thin paths, and the structure is one free summand per thick
//! bipartite class and one order-two summand per thick non-bipartite class;
//! both routes are computed and compared in the verification suite.

use std::collections::BTreeSet;

use num::bigint::BigInt;

use crate::chain::ChainVector;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::smoves::{build_smoves, classify_components, SnClass};
use crate::snf::{cokernel_structure, IntegerMatrix};

/// Degree-`n` generators of the relation ideal on a multisquare-free
/// digraph: one `q + q'` per short-move edge and one thin `n`-path each.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationSet {
    pub level: usize,
    /// Pairs of path indices, one per short-move edge.
    pub thick_relations: Vec<(usize, usize)>,
    /// Indices of the thin `n`-paths.
    pub thin_relations: Vec<usize>,
}

fn multisquare_error(g: &Digraph) -> Option<Error> {
    g.multisquare_witness().map(|w| Error::MultisquarePresent {
        x: g.name(w.source).to_owned(),
        y: g.name(w.target).to_owned(),
    })
}

/// The thick/thin generators of the degree-`n` relations. Refuses
/// multisquare digraphs, where a relation has three or more terms and the
/// split does not apply; use `relation_set_general` there.
pub fn relation_set(g: &Digraph, n: usize) -> Result<RelationSet> {
    if let Some(err) = multisquare_error(g) {
        return Err(err);
    }
    let smg = build_smoves(g, n);
    let thin_pairs: std::collections::HashSet<(usize, usize)> =
        g.thin_pairs().into_iter().collect();
    let thin_relations = smg
        .paths
        .iter()
        .enumerate()
        .filter(|(_, p)| {
            let v = p.vertices();
            (1..p.len()).any(|i| thin_pairs.contains(&(v[i - 1], v[i + 1])))
        })
        .map(|(i, _)| i)
        .collect();
    Ok(RelationSet {
        level: n,
        thick_relations: smg.edges.iter().map(|e| (e.a, e.b)).collect(),
        thin_relations,
    })
}

/// The degree-`n` component of the two-sided relation ideal for an
/// arbitrary digraph, as an integer matrix in `n`-path coordinates: one
/// column per product `a * t_{x,y} * b` with `a`, `b` composable monomial
/// paths. Columns are deduplicated and sorted.
pub fn relation_set_general(g: &Digraph, n: usize) -> IntegerMatrix {
    let paths = g.enumerate_paths(n);
    if n < 2 {
        return IntegerMatrix::zero(paths.len(), 0);
    }
    let index: std::collections::HashMap<&[usize], usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.vertices(), i))
        .collect();

    // Paths of each length up to n-2, grouped for the left and right factors.
    let by_length: Vec<Vec<crate::digraph::Path>> =
        (0..=n - 2).map(|l| g.enumerate_paths(l)).collect();

    let mut columns: BTreeSet<Vec<usize>> = BTreeSet::new();
    for pair in g.classify_pairs() {
        let (x, y) = (pair.source, pair.target);
        for j in 0..=n - 2 {
            let right_len = n - 2 - j;
            for left in by_length[j]
                .iter()
                .filter(|p| *p.vertices().last().unwrap() == x)
            {
                for right in by_length[right_len].iter().filter(|p| p.vertices()[0] == y) {
                    let mut column: Vec<usize> = pair
                        .midpoints
                        .iter()
                        .map(|&v| {
                            let mut word = Vec::with_capacity(n + 1);
                            word.extend_from_slice(left.vertices());
                            word.push(v);
                            word.extend_from_slice(right.vertices());
                            index[word.as_slice()]
                        })
                        .collect();
                    column.sort_unstable();
                    columns.insert(column);
                }
            }
        }
    }
    let columns: Vec<Vec<usize>> = columns.into_iter().collect();
    IntegerMatrix::from_unit_columns(paths.len(), &columns)
}

/// Integral structure of one degree of the cochain quotient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CochainStructure {
    pub level: usize,
    pub free_rank: usize,
    /// Invariant factors greater than one. On multisquare-free digraphs
    /// these are all two; they are reported as computed either way.
    pub torsion: Vec<BigInt>,
    /// One path index per thick bipartite class, when class data applies.
    pub free_representatives: Vec<usize>,
    /// One path index per thick non-bipartite class, when class data applies.
    pub torsion_representatives: Vec<usize>,
}

fn class_representatives(classes: &[SnClass]) -> (Vec<usize>, Vec<usize>) {
    let mut free = Vec::new();
    let mut torsion = Vec::new();
    for class in classes.iter().filter(|c| c.is_thick()) {
        if class.is_bipartite {
            free.push(class.representative);
        } else {
            torsion.push(class.representative);
        }
    }
    (free, torsion)
}

/// Structure via Smith normal form of the general relation matrix. Works
/// for any digraph; representatives are filled only when the class reading
/// applies (no multisquares).
pub fn cochain_structure_snf(g: &Digraph, n: usize) -> CochainStructure {
    let relations = relation_set_general(g, n);
    let (free_rank, torsion) = cokernel_structure(&relations);
    let (free_representatives, torsion_representatives) = if g.is_multisquare_free() {
        let classes = classify_components(&build_smoves(g, n), g);
        class_representatives(&classes)
    } else {
        (Vec::new(), Vec::new())
    };
    CochainStructure {
        level: n,
        free_rank,
        torsion,
        free_representatives,
        torsion_representatives,
    }
}

/// Structure read off the short-move classes: one free summand per thick
/// bipartite class, one order-two summand per thick non-bipartite class.
pub fn cochain_structure_classes(
    g: &Digraph,
    n: usize,
    classes: &[SnClass],
) -> Result<CochainStructure> {
    if let Some(err) = multisquare_error(g) {
        return Err(err);
    }
    let (free_representatives, torsion_representatives) = class_representatives(classes);
    Ok(CochainStructure {
        level: n,
        free_rank: free_representatives.len(),
        torsion: vec![BigInt::from(2); torsion_representatives.len()],
        free_representatives,
        torsion_representatives,
    })
}

/// The Kronecker pairing of a chain vector against a cochain monomial:
/// the coefficient of the path `q` in `v`.
pub fn pairing<F: Field>(
    field: &F,
    v: &ChainVector<F>,
    q_level: usize,
    q: usize,
) -> Result<F::Elem> {
    if v.level != q_level {
        return Err(Error::LevelMismatch {
            expected: v.level,
            found: q_level,
        });
    }
    Ok(v.coefficient(field, q))
}
