//! Two cluster patterns whose initial data satisfy `B·R = B̄·R̄`: the map
//! `x_{i;t} ↦ x̄_{i;t}` between their cluster variables, and checks that it
//! is well defined and carries clusters to clusters.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::variable_key;
use crate::invariants::{d_matrix_along, DMatrix};
use crate::laurent::LaurentPolynomial;
use crate::seed::{path_between, ClusterPattern, Seed};

#[derive(Debug, Clone)]
pub struct AlgebraPair {
    left: ClusterPattern,
    right: ClusterPattern,
}

fn degree_vector(p: &ClusterPattern) -> Vec<i64> {
    p.pair().degrees().iter().map(|&r| r as i64).collect()
}

/// Validates equal ranks and `B_{t0}·R = B̄_{t0}·R̄`.
pub fn make_pair(left: ClusterPattern, right: ClusterPattern) -> Result<AlgebraPair> {
    if left.rank() != right.rank() {
        return Err(Error::Dimension { expected: left.rank(), found: right.rank() });
    }
    let lhs = left.initial_matrix().matrix().scale_columns(&degree_vector(&left));
    let rhs = right.initial_matrix().matrix().scale_columns(&degree_vector(&right));
    if lhs != rhs {
        return Err(Error::IncompatibleInitialData);
    }
    Ok(AlgebraPair { left, right })
}

impl AlgebraPair {
    pub fn left(&self) -> &ClusterPattern {
        &self.left
    }

    pub fn right(&self) -> &ClusterPattern {
        &self.right
    }

    pub fn rank(&self) -> usize {
        self.left.rank()
    }
}

/// `(D_v^w, D̄_v^w)` computed by the integer recurrence on each side.
pub fn d_matrices(pair: &AlgebraPair, w: &[usize], v: &[usize]) -> (DMatrix, DMatrix) {
    let path = path_between(w, v);
    let side = |p: &ClusterPattern| d_matrix_along(p.matrix_at(w).matrix(), p.pair().degrees(), &path);
    (side(&pair.left), side(&pair.right))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DEqualityReport {
    pub cases: usize,
    pub violations: Vec<String>,
}

impl DEqualityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `D_v^w = D̄_v^w` for each `(w, v)`.
pub fn verify_d_equality(pair: &AlgebraPair, paths: &[(Vec<usize>, Vec<usize>)]) -> DEqualityReport {
    let mut report = DEqualityReport { cases: paths.len(), violations: Vec::new() };
    for (w, v) in paths {
        let (d, d_bar) = d_matrices(pair, w, v);
        if d != d_bar {
            report.violations.push(format!("w={w:?} v={v:?}: {d} vs {d_bar}"));
        }
    }
    report
}

/// The matched pair `(x_{i;t}, x̄_{i;t})` at the tree vertex `path`.
pub fn transport(pair: &AlgebraPair, path: &[usize], i: usize) -> Result<(LaurentPolynomial, LaurentPolynomial)> {
    if i >= pair.rank() {
        return Err(Error::Argument(format!("index {} out of range", i + 1)));
    }
    let l = pair.left.seed_at(path)?;
    let r = pair.right.seed_at(path)?;
    Ok((l.x()[i].clone(), r.x()[i].clone()))
}

/// All reduced words of length at most `horizon`, with their seeds, by depth-first mutation.
pub fn tree_seeds(pattern: &ClusterPattern, horizon: usize) -> Result<Vec<(Vec<usize>, Seed)>> {
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), pattern.initial_seed().clone())];
    while let Some((path, seed)) = stack.pop() {
        if path.len() < horizon {
            for k in (0..pattern.rank()).rev() {
                if path.last() != Some(&k) {
                    let mut next = path.clone();
                    next.push(k);
                    stack.push((next, pattern.mutate(&seed, k)?));
                }
            }
        }
        out.push((path, seed));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentificationReport {
    pub horizon: usize,
    pub vertices: usize,
    pub left_variables: usize,
    pub right_variables: usize,
    pub left_clusters: usize,
    pub right_clusters: usize,
    pub violations: Vec<String>,
}

impl IdentificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Groups `(vertex, index)` pairs by variable value on each side and checks
/// that both partitions and the induced cluster sets coincide.
pub fn verify_identification(pair: &AlgebraPair, horizon: usize) -> Result<IdentificationReport> {
    let (left, right) = rayon::join(|| tree_seeds(&pair.left, horizon), || tree_seeds(&pair.right, horizon));
    let (left, right) = (left?, right?);
    let classify = |seeds: &[(Vec<usize>, Seed)]| {
        let mut ids: HashMap<String, usize> = HashMap::new();
        let labels: Vec<Vec<usize>> = seeds
            .iter()
            .map(|(_, s)| {
                s.x()
                    .iter()
                    .map(|x| {
                        let next = ids.len();
                        *ids.entry(variable_key(x)).or_insert(next)
                    })
                    .collect()
            })
            .collect();
        (ids.len(), labels)
    };
    let (nl, left_labels) = classify(&left);
    let (nr, right_labels) = classify(&right);

    let mut violations = Vec::new();
    let mut forward: HashMap<usize, usize> = HashMap::new();
    let mut backward: HashMap<usize, usize> = HashMap::new();
    for (v, (ls, rs)) in left_labels.iter().zip(&right_labels).enumerate() {
        for (i, (&a, &b)) in ls.iter().zip(rs).enumerate() {
            let fa = *forward.entry(a).or_insert(b);
            let bb = *backward.entry(b).or_insert(a);
            if fa != b || bb != a {
                violations.push(format!(
                    "x_{} at path {:?} is identified inconsistently",
                    i + 1,
                    one_based(&left[v].0)
                ));
            }
        }
    }
    let clusters = |labels: &[Vec<usize>]| -> BTreeSet<BTreeSet<usize>> {
        labels.iter().map(|c| c.iter().copied().collect()).collect()
    };
    let (lc, rc) = (clusters(&left_labels), clusters(&right_labels));
    if lc.len() != rc.len() {
        violations.push(format!("{} clusters on the left, {} on the right", lc.len(), rc.len()));
    }
    if nl != nr {
        violations.push(format!("{nl} variables on the left, {nr} on the right"));
    }
    Ok(IdentificationReport {
        horizon,
        vertices: left.len(),
        left_variables: nl,
        right_variables: nr,
        left_clusters: lc.len(),
        right_clusters: rc.len(),
        violations,
    })
}

fn one_based(path: &[usize]) -> Vec<usize> {
    path.iter().map(|k| k + 1).collect()
}
