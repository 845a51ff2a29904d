//! The path chain spaces: the largest subcomplex of the non-degenerate
//! tuple complex supported on paths, computed two independent ways.
//!
//! `omega_general` works for any digraph: expand the boundary of the path
//! span inside the ambient tuple complex, project onto the non-path
//! coordinates and take the kernel. `omega_class_basis` is the short-move
//! construction for multisquare-free digraphs: one signed class sum per
//! thick bipartite class away from characteristic two, one plain class sum
//! per thick class in characteristic two. The two must always span the same
//! space; `homology_summary` enforces that as a hard error.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, Path};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::linalg::{spans_equal, ExactMatrix};
use crate::smoves::{build_smoves, classify_components, SnClass};

/// A sparse exact linear combination of `n`-paths; indices refer to the
/// lexicographic enumeration at the vector's level. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct ChainVector<F: Field> {
    pub level: usize,
    pub coeffs: BTreeMap<usize, F::Elem>,
}

impl<F: Field> ChainVector<F> {
    pub fn unit(level: usize, index: usize, field: &F) -> Self {
        ChainVector {
            level,
            coeffs: BTreeMap::from([(index, field.one())]),
        }
    }

    pub fn from_dense(level: usize, field: &F, dense: &[F::Elem]) -> Self {
        let coeffs = dense
            .iter()
            .enumerate()
            .filter(|(_, x)| !field.is_zero(x))
            .map(|(i, x)| (i, x.clone()))
            .collect();
        ChainVector { level, coeffs }
    }

    pub fn to_dense(&self, field: &F, ambient: usize) -> Vec<F::Elem> {
        let mut dense = vec![field.zero(); ambient];
        for (&i, x) in &self.coeffs {
            dense[i] = x.clone();
        }
        dense
    }

    pub fn coefficient(&self, field: &F, index: usize) -> F::Elem {
        self.coeffs
            .get(&index)
            .cloned()
            .unwrap_or_else(|| field.zero())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisMethod {
    General,
    ClassBasis,
}

/// An explicit basis of the level-`n` chain space.
#[derive(Clone, Debug)]
pub struct OmegaBasis<F: Field> {
    pub level: usize,
    pub vectors: Vec<ChainVector<F>>,
    pub method: BasisMethod,
    /// For the class method, the class representative node of each vector.
    pub class_tags: Option<Vec<usize>>,
}

impl<F: Field> OmegaBasis<F> {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn to_columns(&self, field: &F, ambient: usize) -> Vec<Vec<F::Elem>> {
        self.vectors
            .iter()
            .map(|v| v.to_dense(field, ambient))
            .collect()
    }
}

fn multisquare_error(g: &Digraph) -> Option<Error> {
    g.multisquare_witness().map(|w| Error::MultisquarePresent {
        x: g.name(w.source).to_owned(),
        y: g.name(w.target).to_owned(),
    })
}

/// The general kernel computation, valid for any digraph. The ambient
/// complex is restricted to face tuples actually reachable from `n`-paths;
/// everything else never carries a nonzero coordinate.
pub fn omega_general<F: Field>(g: &Digraph, n: usize, field: &F) -> OmegaBasis<F> {
    let paths = g.enumerate_paths(n);
    if n == 0 {
        let vectors = (0..paths.len())
            .map(|i| ChainVector::unit(0, i, field))
            .collect();
        return OmegaBasis {
            level: 0,
            vectors,
            method: BasisMethod::General,
            class_tags: None,
        };
    }
    let mut row_of: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut entries: Vec<(usize, usize, i64)> = Vec::new();
    for (col, path) in paths.iter().enumerate() {
        let p = path.vertices();
        // Only interior faces can leave the path span: removing an endpoint
        // leaves a sub-path, removing p_i with equal neighbors gives a
        // degenerate tuple that vanishes, and a junction arrow keeps the
        // face a path.
        for i in 1..n {
            if p[i - 1] == p[i + 1] || g.has_arrow(p[i - 1], p[i + 1]) {
                continue;
            }
            let mut face = Vec::with_capacity(n);
            face.extend_from_slice(&p[..i]);
            face.extend_from_slice(&p[i + 1..]);
            let next = row_of.len();
            let row = *row_of.entry(face).or_insert(next);
            entries.push((row, col, if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    let mut m = ExactMatrix::zero(field.clone(), row_of.len(), paths.len());
    for (r, c, s) in entries {
        let v = field.add(m.get(r, c), &field.from_int(s));
        m.set(r, c, v);
    }
    let vectors = m
        .kernel_basis()
        .into_iter()
        .map(|x| ChainVector::from_dense(n, field, &x))
        .collect();
    OmegaBasis {
        level: n,
        vectors,
        method: BasisMethod::General,
        class_tags: None,
    }
}

/// The short-move class basis for multisquare-free digraphs: away from
/// characteristic two the signed sum over each thick bipartite class, in
/// characteristic two the plain sum over each thick class. Thin classes
/// contribute nothing.
pub fn omega_class_basis<F: Field>(
    g: &Digraph,
    n: usize,
    field: &F,
    classes: &[SnClass],
) -> Result<OmegaBasis<F>> {
    if let Some(err) = multisquare_error(g) {
        return Err(err);
    }
    let char_two = field.characteristic() == 2;
    let mut vectors = Vec::new();
    let mut tags = Vec::new();
    for class in classes {
        if class.is_thin {
            continue;
        }
        let mut coeffs = BTreeMap::new();
        if char_two {
            for &m in &class.members {
                coeffs.insert(m, field.one());
            }
        } else {
            let Some((plus, minus)) = &class.parts else {
                continue; // non-bipartite classes vanish away from char 2
            };
            for &m in plus {
                coeffs.insert(m, field.one());
            }
            let minus_one = field.neg(&field.one());
            for &m in minus {
                coeffs.insert(m, minus_one.clone());
            }
        }
        vectors.push(ChainVector { level: n, coeffs });
        tags.push(class.representative);
    }
    Ok(OmegaBasis {
        level: n,
        vectors,
        method: BasisMethod::ClassBasis,
        class_tags: Some(tags),
    })
}

/// Expands the boundary of a chain vector in `(n-1)`-path coordinates.
/// Fails when the result has support outside the path span, i.e. the input
/// was not actually a path chain.
fn boundary_coeffs<F: Field>(
    field: &F,
    paths: &[Path],
    lower_index: &HashMap<Vec<usize>, usize>,
    v: &ChainVector<F>,
) -> Result<Vec<(usize, F::Elem)>> {
    let n = v.level;
    let mut acc: BTreeMap<Vec<usize>, F::Elem> = BTreeMap::new();
    for (&pi, coeff) in &v.coeffs {
        let p = paths[pi].vertices();
        for i in 0..=n {
            if i > 0 && i < n && p[i - 1] == p[i + 1] {
                continue;
            }
            let mut face = Vec::with_capacity(n);
            face.extend_from_slice(&p[..i]);
            face.extend_from_slice(&p[i + 1..]);
            let term = if i % 2 == 0 {
                coeff.clone()
            } else {
                field.neg(coeff)
            };
            match acc.get_mut(&face) {
                Some(existing) => *existing = field.add(existing, &term),
                None => {
                    acc.insert(face, term);
                }
            }
        }
    }
    let mut result = Vec::new();
    for (face, value) in acc {
        if field.is_zero(&value) {
            continue;
        }
        match lower_index.get(&face) {
            Some(&idx) => result.push((idx, value)),
            None => return Err(Error::NotInSpan { level: n }),
        }
    }
    Ok(result)
}

fn lower_path_index(paths: &[Path]) -> HashMap<Vec<usize>, usize> {
    paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.vertices().to_vec(), i))
        .collect()
}

/// The matrix of the boundary map restricted to the domain basis, expressed
/// in the codomain basis by an exact linear solve.
pub fn boundary_matrix<F: Field>(
    g: &Digraph,
    n: usize,
    field: &F,
    domain: &OmegaBasis<F>,
    codomain: &OmegaBasis<F>,
) -> Result<ExactMatrix<F>> {
    assert!(n >= 1, "boundary starts at level one");
    if domain.level != n {
        return Err(Error::LevelMismatch {
            expected: n,
            found: domain.level,
        });
    }
    if codomain.level != n - 1 {
        return Err(Error::LevelMismatch {
            expected: n - 1,
            found: codomain.level,
        });
    }
    let paths = g.enumerate_paths(n);
    let lower_paths = g.enumerate_paths(n - 1);
    let lower_index = lower_path_index(&lower_paths);

    let mut image = ExactMatrix::zero(field.clone(), lower_paths.len(), domain.dim());
    for (j, v) in domain.vectors.iter().enumerate() {
        for (idx, value) in boundary_coeffs(field, &paths, &lower_index, v)? {
            image.set(idx, j, value);
        }
    }
    let codomain_columns = ExactMatrix::from_columns(
        field.clone(),
        lower_paths.len(),
        &codomain.to_columns(field, lower_paths.len()),
    );
    codomain_columns.solve_columns(&image).map_err(|e| match e {
        Error::NotInSpan { .. } => Error::NotInSpan { level: n },
        other => other,
    })
}

/// Rank of the boundary restricted to the given level-`n` basis, computed
/// in plain path coordinates (basis-independent).
fn boundary_rank<F: Field>(g: &Digraph, field: &F, basis: &OmegaBasis<F>) -> usize {
    if basis.dim() == 0 {
        return 0;
    }
    let n = basis.level;
    let paths = g.enumerate_paths(n);
    let lower_paths = g.enumerate_paths(n - 1);
    let lower_index = lower_path_index(&lower_paths);
    let mut image = ExactMatrix::zero(field.clone(), lower_paths.len(), basis.dim());
    for (j, v) in basis.vectors.iter().enumerate() {
        let coeffs =
            boundary_coeffs(field, &paths, &lower_index, v).expect("basis vectors are path chains");
        for (idx, value) in coeffs {
            image.set(idx, j, value);
        }
    }
    image.rank()
}

/// Chain space dimensions, boundary ranks, path homology dimensions and the
/// Euler characteristic over one field.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HomologySummary {
    pub field: FieldDescriptor,
    pub omega_dims: Vec<usize>,
    pub boundary_ranks: Vec<usize>,
    pub ph_dims: Vec<usize>,
    pub bounded: bool,
    pub euler: Option<i64>,
    pub method_agreement: Option<bool>,
}

/// Computes dimensions and homology up to `n_max` (inclusive), stopping
/// early at the first vanishing level: once some level is zero all higher
/// levels vanish too, the complex is bounded and the Euler characteristic
/// is defined. On multisquare-free digraphs every level is cross-checked
/// against the class basis; a disagreement would falsify either the basis
/// theorem or this implementation, so it aborts.
pub fn homology_summary<F: Field>(g: &Digraph, field: &F, n_max: usize) -> HomologySummary {
    assert!(n_max >= 1);
    let check_classes = g.is_multisquare_free();
    let mut omega_dims = Vec::new();
    let mut bases = Vec::new();
    let mut bounded = false;
    for level in 0..=n_max {
        let basis = omega_general(g, level, field);
        if check_classes {
            let smg = build_smoves(g, level);
            let classes = classify_components(&smg, g);
            let class_basis =
                omega_class_basis(g, level, field, &classes).expect("multisquare-free");
            let ambient = smg.node_count();
            let agree = class_basis.dim() == basis.dim()
                && spans_equal(
                    field,
                    ambient.max(1),
                    &basis.to_columns(field, ambient),
                    &class_basis.to_columns(field, ambient),
                );
            assert!(
                agree,
                "general and class methods disagree at level {level} over {}",
                field.descriptor()
            );
        }
        let dim = basis.dim();
        omega_dims.push(dim);
        bases.push(basis);
        if dim == 0 {
            bounded = true;
            break;
        }
    }

    let levels = omega_dims.len();
    let mut boundary_ranks = vec![0usize];
    for basis in bases.iter().skip(1) {
        boundary_ranks.push(boundary_rank(g, field, basis));
    }

    // ph[n] = dim - rank(d_n) - rank(d_{n+1}); past the last computed level
    // the rank is only known to be zero when the complex is bounded.
    let ph_levels = if bounded {
        levels
    } else {
        levels.saturating_sub(1)
    };
    let mut ph_dims = Vec::with_capacity(ph_levels);
    for l in 0..ph_levels {
        let next = if l + 1 < levels {
            boundary_ranks[l + 1]
        } else {
            0
        };
        let dim = omega_dims[l]
            .checked_sub(boundary_ranks[l])
            .and_then(|x| x.checked_sub(next))
            .expect("image of the boundary lies in its kernel");
        ph_dims.push(dim);
    }

    let euler = bounded.then(|| {
        omega_dims
            .iter()
            .enumerate()
            .map(|(l, &d)| if l % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    });

    HomologySummary {
        field: field.descriptor(),
        omega_dims,
        boundary_ranks,
        ph_dims,
        bounded,
        euler,
        method_agreement: check_classes.then_some(true),
    }
}

/// Observed nonzero entries of one boundary matrix in the class bases.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundaryEntryLevel {
    pub level: usize,
    /// Multiset of nonzero entries, rendered exactly, with multiplicities.
    pub entries: Vec<(String, usize)>,
    pub all_unit: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BoundaryEntryReport {
    pub field: FieldDescriptor,
    pub levels: Vec<BoundaryEntryLevel>,
    pub all_unit: bool,
}

/// Reports the entries of every boundary matrix written in the short-move
/// class bases, flagging any entry other than plus or minus one. This
/// observes; it never asserts unit entries.
pub fn boundary_entry_report<F: Field>(
    g: &Digraph,
    field: &F,
    n_max: usize,
) -> Result<BoundaryEntryReport> {
    if let Some(err) = multisquare_error(g) {
        return Err(err);
    }
    let mut bases = Vec::new();
    for level in 0..=n_max {
        let smg = build_smoves(g, level);
        let classes = classify_components(&smg, g);
        let basis = omega_class_basis(g, level, field, &classes)?;
        let empty = basis.dim() == 0;
        bases.push(basis);
        if empty {
            break;
        }
    }
    let mut levels = Vec::new();
    let mut all_unit = true;
    for n in 1..bases.len() {
        if bases[n].dim() == 0 {
            continue;
        }
        let matrix = boundary_matrix(g, n, field, &bases[n], &bases[n - 1])?;
        let mut counts: BTreeMap<String, usize> = BTreeMap::new();
        let mut unit = true;
        let minus_one = field.neg(&field.one());
        for r in 0..matrix.rows() {
            for c in 0..matrix.cols() {
                let e = matrix.get(r, c);
                if field.is_zero(e) {
                    continue;
                }
                *counts.entry(e.to_string()).or_insert(0) += 1;
                if !field.is_one(e) && *e != minus_one {
                    unit = false;
                }
            }
        }
        all_unit &= unit;
        levels.push(BoundaryEntryLevel {
            level: n,
            entries: counts.into_iter().collect(),
            all_unit: unit,
        });
    }
    Ok(BoundaryEntryReport {
        field: field.descriptor(),
        levels,
        all_unit,
    })
}
