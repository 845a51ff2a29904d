//! Serializable report shapes for the CLI. Key order is the struct order
//! and every collection is sorted, so emitted JSON is byte-stable across
//! runs; all report types round-trip through serde.

use serde::{Deserialize, Serialize};

use crate::chain::{BasisMethod, OmegaBasis};
use crate::cochain::CochainStructure;
use crate::digraph::{Digraph, PairKind};
use crate::field::{Field, FieldDescriptor};
use crate::smoves::{ShortMoveGraph, SnClass};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InfoReport {
    pub vertices: usize,
    pub arrows: usize,
    pub multisquare_free: bool,
    pub thin_pairs: usize,
    pub thick_pairs: usize,
    pub multi_pairs: usize,
    /// None when the digraph has a directed cycle.
    pub longest_path: Option<usize>,
}

impl InfoReport {
    pub fn new(g: &Digraph) -> Self {
        let pairs = g.classify_pairs();
        let count = |kind: PairKind| pairs.iter().filter(|p| p.kind() == Some(kind)).count();
        InfoReport {
            vertices: g.vertex_count(),
            arrows: g.arrow_count(),
            multisquare_free: g.is_multisquare_free(),
            thin_pairs: count(PairKind::Thin),
            thick_pairs: count(PairKind::Thick),
            multi_pairs: count(PairKind::Multi),
            longest_path: g.longest_path_length(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SnClassReport {
    pub members: Vec<usize>,
    pub thin: bool,
    pub bipartite: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parts: Option<(Vec<usize>, Vec<usize>)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub odd_cycle_witness: Option<Vec<usize>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SmovesReport {
    pub level: usize,
    /// Node labels as vertex-name sequences, in node order.
    pub nodes: Vec<Vec<String>>,
    /// Edges as `[node, node, color]`.
    pub edges: Vec<[usize; 3]>,
    pub classes: Vec<SnClassReport>,
}

impl SmovesReport {
    pub fn new(g: &Digraph, smg: &ShortMoveGraph, classes: &[SnClass]) -> Self {
        SmovesReport {
            level: smg.level,
            nodes: smg
                .paths
                .iter()
                .map(|p| p.vertices().iter().map(|&v| g.name(v).to_owned()).collect())
                .collect(),
            edges: smg.edges.iter().map(|e| [e.a, e.b, e.color]).collect(),
            classes: classes
                .iter()
                .map(|c| SnClassReport {
                    members: c.members.clone(),
                    thin: c.is_thin,
                    bipartite: c.is_bipartite,
                    parts: c.parts.clone(),
                    odd_cycle_witness: c.odd_cycle_witness.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CochainLevelReport {
    pub level: usize,
    pub free_rank: usize,
    /// Invariant factors greater than one, as decimal strings.
    pub torsion: Vec<String>,
    /// Free representatives followed by torsion representatives.
    pub representatives: Vec<usize>,
    /// Agreement between the Smith form and the class reading; absent on
    /// digraphs with multisquares where only the Smith form applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub methods_agree: Option<bool>,
}

impl CochainLevelReport {
    pub fn new(structure: &CochainStructure, methods_agree: Option<bool>) -> Self {
        let mut representatives = structure.free_representatives.clone();
        representatives.extend(&structure.torsion_representatives);
        CochainLevelReport {
            level: structure.level,
            free_rank: structure.free_rank,
            torsion: structure.torsion.iter().map(|t| t.to_string()).collect(),
            representatives,
            methods_agree,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BasisTerm {
    pub path: String,
    pub coeff: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BasisReport {
    pub level: usize,
    pub field: FieldDescriptor,
    pub method: BasisMethod,
    pub dimension: usize,
    pub vectors: Vec<Vec<BasisTerm>>,
}

impl BasisReport {
    pub fn new<F: Field>(g: &Digraph, field: &F, basis: &OmegaBasis<F>) -> Self {
        let paths = g.enumerate_paths(basis.level);
        BasisReport {
            level: basis.level,
            field: field.descriptor(),
            method: basis.method,
            dimension: basis.dim(),
            vectors: basis
                .vectors
                .iter()
                .map(|v| {
                    v.coeffs
                        .iter()
                        .map(|(&i, x)| BasisTerm {
                            path: paths[i].label(g),
                            coeff: x.to_string(),
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// One named verification check with its outcome.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckReport>,
    pub passed: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::builtin_fixture;
    use crate::smoves::{build_smoves, classify_components};

    #[test]
    fn info_report_facts() {
        let g = builtin_fixture("g_main").unwrap();
        let info = InfoReport::new(&g);
        assert_eq!(info.vertices, 11);
        assert_eq!(info.arrows, 24);
        assert!(info.multisquare_free);
        assert_eq!(info.thin_pairs, 0);
        assert_eq!(info.thick_pairs, 15);
        assert_eq!(info.longest_path, Some(4));

        let gp = builtin_fixture("g_prime").unwrap();
        assert_eq!(InfoReport::new(&gp).thin_pairs, 6);
    }

    #[test]
    fn reports_round_trip_through_json() {
        let g = builtin_fixture("cube").unwrap();
        let info = InfoReport::new(&g);
        let json = serde_json::to_string(&info).unwrap();
        assert_eq!(serde_json::from_str::<InfoReport>(&json).unwrap(), info);

        let smg = build_smoves(&g, 3);
        let classes = classify_components(&smg, &g);
        let smoves = SmovesReport::new(&g, &smg, &classes);
        let json = serde_json::to_string_pretty(&smoves).unwrap();
        assert_eq!(serde_json::from_str::<SmovesReport>(&json).unwrap(), smoves);

        let summary = crate::chain::homology_summary(&g, &crate::field::Rationals, 4);
        let json = serde_json::to_string(&summary).unwrap();
        assert_eq!(
            serde_json::from_str::<crate::chain::HomologySummary>(&json).unwrap(),
            summary
        );

        let structure = crate::cochain::cochain_structure_snf(&g, 3);
        let level = CochainLevelReport::new(&structure, Some(true));
        let json = serde_json::to_string(&level).unwrap();
        assert_eq!(
            serde_json::from_str::<CochainLevelReport>(&json).unwrap(),
            level
        );

        let basis = crate::chain::omega_general(&g, 3, &crate::field::Rationals);
        let basis_report = BasisReport::new(&g, &crate::field::Rationals, &basis);
        let json = serde_json::to_string(&basis_report).unwrap();
        assert_eq!(
            serde_json::from_str::<BasisReport>(&json).unwrap(),
            basis_report
        );

        let verify = VerifyReport {
            checks: vec![CheckReport {
                name: "example".to_owned(),
                passed: true,
                details: "details".to_owned(),
            }],
            passed: true,
        };
        let json = serde_json::to_string(&verify).unwrap();
        assert_eq!(serde_json::from_str::<VerifyReport>(&json).unwrap(), verify);
    }

    #[test]
    fn basis_report_renders_paths() {
        let g = builtin_fixture("cube").unwrap();
        let f = crate::field::Rationals;
        let smg = build_smoves(&g, 3);
        let classes = classify_components(&smg, &g);
        let basis = crate::chain::omega_class_basis(&g, 3, &f, &classes).unwrap();
        let report = BasisReport::new(&g, &f, &basis);
        assert_eq!(report.dimension, 1);
        assert_eq!(report.vectors[0].len(), 6);
        assert!(report.vectors[0]
            .iter()
            .all(|t| t.coeff == "1" || t.coeff == "-1"));
        assert_eq!(report.vectors[0][0].path, "0 1 4 7");
    }
}
