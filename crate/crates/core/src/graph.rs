//! Exchange graph: seeds up to simultaneous relabeling, joined by single
//! mutations, plus verifiers for the structural statements about it.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::d_matrix_from_laurent;
use crate::laurent::LaurentPolynomial;
use crate::matrix::IntMatrix;
use crate::seed::{path_between, ClusterPattern, MutationPair, Seed};

/// Canonical serialization of a cluster variable: its flat terms in the
/// polynomial's internal order.
pub fn variable_key(x: &LaurentPolynomial) -> String {
    let mut out = String::new();
    for (key, c) in x.flat_terms() {
        let exps: Vec<String> = key.iter().map(i64::to_string).collect();
        let _ = write!(out, "{}:{};", exps.join(","), c);
    }
    out
}

/// 64-bit FNV-1a, used only for short, stable vertex labels.
pub fn short_hash(text: &str) -> String {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in text.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    format!("{:08x}", h >> 32)
}

/// A seed brought to canonical labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalSeed {
    /// Serialization of the relabeled `(x, y, B)`.
    pub core_key: String,
    /// `core_key` together with the relabeled mutation degrees and frozen coefficients.
    pub key: String,
    pub seed: Seed,
    /// `seed = original.permute(perm)`.
    pub perm: Vec<usize>,
}

/// Sorts the cluster by variable key and relabels `x`, `y`, `B` and `(r, z)` accordingly.
pub fn canonical_form(seed: &Seed, pair: &MutationPair) -> Result<CanonicalSeed> {
    let keys: Vec<String> = seed.x().iter().map(variable_key).collect();
    let mut perm: Vec<usize> = (0..seed.rank()).collect();
    perm.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    for w in perm.windows(2) {
        if keys[w[0]] == keys[w[1]] {
            let (first, second) = (w[0].min(w[1]) + 1, w[0].max(w[1]) + 1);
            return Err(Error::DuplicateClusterVariable { first, second });
        }
    }
    let relabeled = seed.permute(&perm);
    let mut core_key = String::new();
    for &i in &perm {
        let _ = write!(core_key, "x[{}]", keys[i]);
    }
    for y in relabeled.y() {
        let _ = write!(core_key, "y{:?}", y.exponents());
    }
    let _ = write!(core_key, "B{}", relabeled.b().matrix());
    let moved = pair.permute(&perm);
    let mut key = core_key.clone();
    for k in 0..moved.rank() {
        let z: Vec<&[i64]> = moved.frozen(k).iter().map(|z| z.exponents()).collect();
        let _ = write!(key, "r{}z{:?}", moved.degree(k), z);
    }
    Ok(CanonicalSeed { core_key, key, seed: relabeled, perm })
}

/// A vertex: a representative labeled seed together with the tree path that reaches it.
#[derive(Debug, Clone)]
pub struct Vertex {
    pub path: Vec<usize>,
    pub depth: usize,
    pub seed: Seed,
    pub key: String,
    perm: Vec<usize>,
    /// Variable ids of `x_{1;t}, ..., x_{n;t}` in the representative's labeling.
    pub cluster: Vec<usize>,
    pub d_matrix: IntMatrix,
}

/// Counters for the runtime consistency checks made during exploration.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExplorationStats {
    /// Deduplication hits, each checked for transport of `y`, `B`, `r`, `z`.
    pub transport_checks: usize,
    /// Seeds whose D-matrix is a column permutation of `-I`.
    pub permuted_identity_checks: usize,
    /// Of those, seeds whose cluster was not the matching permutation of the initial one.
    pub permuted_identity_violations: usize,
}

#[derive(Debug, Clone)]
pub struct ExchangeGraph {
    pattern: ClusterPattern,
    vertices: Vec<Vertex>,
    index: HashMap<String, usize>,
    core_keys: HashSet<String>,
    /// `adjacency[v][k]`: neighbor of `v` in direction `k`, if resolved.
    adjacency: Vec<Vec<Option<usize>>>,
    variables: Vec<LaurentPolynomial>,
    variable_index: HashMap<String, usize>,
    stats: ExplorationStats,
}

/// Breadth-first exploration from the initial seed. Never fails on limits:
/// a limited run returns a graph with [`ExchangeGraph::is_complete`] false.
pub fn explore(
    pattern: &ClusterPattern,
    depth_limit: Option<usize>,
    vertex_limit: Option<usize>,
) -> Result<ExchangeGraph> {
    let mut g = ExchangeGraph::new(pattern)?;
    g.extend(depth_limit, vertex_limit)?;
    Ok(g)
}

impl ExchangeGraph {
    /// The graph with only the initial vertex.
    pub fn new(pattern: &ClusterPattern) -> Result<Self> {
        let mut g = Self {
            pattern: pattern.clone(),
            vertices: Vec::new(),
            index: HashMap::new(),
            core_keys: HashSet::new(),
            adjacency: Vec::new(),
            variables: Vec::new(),
            variable_index: HashMap::new(),
            stats: ExplorationStats::default(),
        };
        let seed = pattern.initial_seed().clone();
        let canon = canonical_form(&seed, pattern.pair())?;
        g.insert(Vec::new(), seed, canon)?;
        Ok(g)
    }

    /// Continues exploration. Vertices at `depth_limit` are still mutated so
    /// that edges between already known vertices are recorded.
    pub fn extend(&mut self, depth_limit: Option<usize>, vertex_limit: Option<usize>) -> Result<()> {
        if depth_limit.is_none() && vertex_limit.is_none() {
            return Err(Error::Argument("unbounded exploration needs a depth or vertex limit".into()));
        }
        let n = self.pattern.rank();
        let mut depth = 0;
        loop {
            let batch: Vec<(usize, usize)> = (0..self.vertices.len())
                .filter(|&v| self.vertices[v].depth == depth)
                .flat_map(|v| (0..n).map(move |k| (v, k)))
                .filter(|&(v, k)| self.adjacency[v][k].is_none())
                .collect();
            let max_depth = self.vertices.iter().map(|v| v.depth).max().unwrap_or(0);
            if batch.is_empty() && depth >= max_depth {
                return Ok(());
            }
            let pair = self.pattern.pair();
            let results: Vec<Result<(Seed, CanonicalSeed)>> = batch
                .par_iter()
                .map(|&(v, k)| {
                    let seed = self.vertices[v].seed.mutate(pair, k)?;
                    let canon = canonical_form(&seed, pair)?;
                    Ok((seed, canon))
                })
                .collect();
            for (&(v, k), res) in batch.iter().zip(results) {
                let (seed, canon) = res?;
                let target = match self.index.get(&canon.key) {
                    Some(&w) => {
                        self.check_transport(w, &seed, &canon)?;
                        Some(w)
                    }
                    None => {
                        self.check_core_collision(&canon)?;
                        let deeper_ok = depth_limit.is_none_or(|d| depth < d);
                        let room = vertex_limit.is_none_or(|m| self.vertices.len() < m);
                        if deeper_ok && room {
                            let mut path = self.vertices[v].path.clone();
                            path.push(k);
                            Some(self.insert(path, seed, canon)?)
                        } else {
                            None
                        }
                    }
                };
                if let Some(w) = target {
                    self.adjacency[v][k] = Some(w);
                }
            }
            depth += 1;
        }
    }

    fn insert(&mut self, path: Vec<usize>, seed: Seed, canon: CanonicalSeed) -> Result<usize> {
        let id = self.vertices.len();
        let cluster = seed
            .x()
            .iter()
            .map(|x| {
                let key = variable_key(x);
                *self.variable_index.entry(key).or_insert_with(|| {
                    self.variables.push(x.clone());
                    self.variables.len() - 1
                })
            })
            .collect();
        let d_matrix = d_matrix_from_laurent(&seed)?;
        self.check_permuted_identity(&seed, &d_matrix);
        self.index.insert(canon.key.clone(), id);
        self.core_keys.insert(canon.core_key.clone());
        self.adjacency.push(vec![None; seed.rank()]);
        self.vertices.push(Vertex {
            depth: path.len(),
            path,
            seed,
            key: canon.key,
            perm: canon.perm,
            cluster,
            d_matrix,
        });
        Ok(id)
    }

    /// A D-matrix equal to `-I` with permuted columns must come with the
    /// correspondingly permuted initial cluster.
    fn check_permuted_identity(&mut self, seed: &Seed, d: &IntMatrix) {
        let n = seed.rank();
        let mut sigma = Vec::with_capacity(n);
        for j in 0..n {
            let col = d.column(j);
            let hits: Vec<usize> = (0..n).filter(|&i| col[i] != 0).collect();
            if hits.len() != 1 || col[hits[0]] != -1 {
                return;
            }
            sigma.push(hits[0]);
        }
        if sigma.iter().collect::<BTreeSet<_>>().len() != n {
            return;
        }
        self.stats.permuted_identity_checks += 1;
        let initial = self.pattern.initial_seed();
        if (0..n).any(|j| seed.x()[j] != initial.x()[sigma[j]]) {
            self.stats.permuted_identity_violations += 1;
        }
    }

    /// On a deduplication hit, recovers `σ` with `x_{j;new} = x_{σ(j);old}` and
    /// checks that it also carries `y`, `B`, `r` and `z`.
    fn check_transport(&mut self, w: usize, seed: &Seed, canon: &CanonicalSeed) -> Result<()> {
        self.stats.transport_checks += 1;
        let old = &self.vertices[w];
        let n = seed.rank();
        let mut inv_new = vec![0; n];
        for (i, &p) in canon.perm.iter().enumerate() {
            inv_new[p] = i;
        }
        let sigma: Vec<usize> = (0..n).map(|j| old.perm[inv_new[j]]).collect();
        let pair = self.pattern.pair();
        let consistent = (0..n).all(|j| {
            seed.x()[j] == old.seed.x()[sigma[j]]
                && seed.y()[j] == old.seed.y()[sigma[j]]
                && pair.degree(j) == pair.degree(sigma[j])
                && pair.frozen(j) == pair.frozen(sigma[j])
                && (0..n).all(|i| seed.b().get(i, j) == old.seed.b().get(sigma[i], sigma[j]))
        });
        if consistent {
            Ok(())
        } else {
            Err(Error::InconsistentDegreeTransport)
        }
    }

    /// Same `(x, y, B)` with different `(r, z)` would contradict transport of degrees.
    fn check_core_collision(&self, canon: &CanonicalSeed) -> Result<()> {
        if self.core_keys.contains(&canon.core_key) {
            Err(Error::InconsistentDegreeTransport)
        } else {
            Ok(())
        }
    }

    pub fn pattern(&self) -> &ClusterPattern {
        &self.pattern
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Unordered edges `(a, b)` with `a ≤ b` and the directions leading from `a` to `b`.
    pub fn edges(&self) -> BTreeMap<(usize, usize), BTreeSet<usize>> {
        let mut out: BTreeMap<(usize, usize), BTreeSet<usize>> = BTreeMap::new();
        for (v, adj) in self.adjacency.iter().enumerate() {
            for (k, w) in adj.iter().enumerate() {
                if let Some(w) = *w {
                    let entry = out.entry((v.min(w), v.max(w))).or_default();
                    if v <= w {
                        entry.insert(k);
                    }
                }
            }
        }
        out
    }

    pub fn num_edges(&self) -> usize {
        self.edges().len()
    }

    /// Number of resolved mutation directions at `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].iter().filter(|w| w.is_some()).count()
    }

    pub fn neighbor(&self, v: usize, k: usize) -> Option<usize> {
        self.adjacency[v][k]
    }

    /// True when every mutation of every vertex has been resolved.
    pub fn is_complete(&self) -> bool {
        self.adjacency.iter().all(|a| a.iter().all(Option::is_some))
    }

    pub fn stats(&self) -> &ExplorationStats {
        &self.stats
    }

    pub fn variables(&self) -> &[LaurentPolynomial] {
        &self.variables
    }

    pub fn variable_id(&self, x: &LaurentPolynomial) -> Option<usize> {
        self.variable_index.get(&variable_key(x)).copied()
    }

    pub fn find_vertex(&self, seed: &Seed) -> Result<Option<usize>> {
        let canon = canonical_form(seed, self.pattern.pair())?;
        Ok(self.index.get(&canon.key).copied())
    }

    /// Clusters as sets of variable ids.
    pub fn cluster_sets(&self) -> Vec<BTreeSet<usize>> {
        self.vertices.iter().map(|v| v.cluster.iter().copied().collect()).collect()
    }

    fn compatibility_matrix(&self) -> Vec<Vec<bool>> {
        let m = self.variables.len();
        let mut compat = vec![vec![false; m]; m];
        for v in &self.vertices {
            for &a in &v.cluster {
                for &b in &v.cluster {
                    compat[a][b] = true;
                }
            }
        }
        compat
    }

    pub fn compatible_ids(&self, a: usize, b: usize) -> bool {
        self.vertices.iter().any(|v| v.cluster.contains(&a) && v.cluster.contains(&b))
    }

    /// True iff some explored cluster contains both variables.
    pub fn compatibility(&self, a: &LaurentPolynomial, b: &LaurentPolynomial) -> Result<bool> {
        let ia = self.variable_id(a).ok_or_else(|| Error::UnknownVariable(self.pattern.render_variable(a)))?;
        let ib = self.variable_id(b).ok_or_else(|| Error::UnknownVariable(self.pattern.render_variable(b)))?;
        Ok(self.compatible_ids(ia, ib))
    }

    pub fn render_variable(&self, id: usize) -> String {
        self.pattern.render_variable(&self.variables[id])
    }

    /// Graphviz rendering; vertices are labeled by a short hash of their key.
    pub fn to_dot(&self, with_d_matrix: bool) -> String {
        let mut out = String::from("graph exchange {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let mut label = short_hash(&v.key);
            if with_d_matrix {
                let _ = write!(label, "\\nD={}", v.d_matrix);
            }
            let _ = writeln!(out, "  v{i} [label=\"{label}\"];");
        }
        for ((a, b), dirs) in self.edges() {
            let dirs: Vec<String> = dirs.iter().map(|k| (k + 1).to_string()).collect();
            let _ = writeln!(out, "  v{a} -- v{b} [label=\"{}\"];", dirs.join(","));
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphExport {
        let f = self.pattern.semifield();
        GraphExport {
            complete: self.is_complete(),
            num_vertices: self.num_vertices(),
            num_edges: self.num_edges(),
            stats: self.stats.clone(),
            vertices: self
                .vertices
                .iter()
                .enumerate()
                .map(|(id, v)| VertexExport {
                    id,
                    hash: short_hash(&v.key),
                    path: v.path.iter().map(|k| k + 1).collect(),
                    b: v.seed.b().matrix().clone(),
                    x: v.seed.x().iter().map(|x| x.render(f)).collect(),
                    y: v.seed.y().iter().map(|y| f.render(y)).collect(),
                    d_matrix: v.d_matrix.clone(),
                })
                .collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|((a, b), dirs)| EdgeExport { a, b, directions: dirs.iter().map(|k| k + 1).collect() })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphExport {
    pub complete: bool,
    pub num_vertices: usize,
    pub num_edges: usize,
    pub stats: ExplorationStats,
    pub vertices: Vec<VertexExport>,
    pub edges: Vec<EdgeExport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexExport {
    pub id: usize,
    pub hash: String,
    /// 1-based mutation directions from the initial seed.
    pub path: Vec<usize>,
    pub b: IntMatrix,
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub d_matrix: IntMatrix,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgeExport {
    pub a: usize,
    pub b: usize,
    pub directions: Vec<usize>,
}

/// Outcome of a verifier run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    /// False when the graph was truncated: a clean run then only means
    /// "no counterexample within the explored horizon".
    pub complete: bool,
    pub cases: usize,
    pub violations: Vec<String>,
}

impl VerificationReport {
    fn new(check: &str, complete: bool) -> Self {
        Self { check: check.into(), complete, cases: 0, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn status(&self) -> &'static str {
        match (self.passed(), self.complete) {
            (false, _) => "fail",
            (true, true) => "pass",
            (true, false) => "no counterexample within horizon",
        }
    }
}

/// Vertices whose cluster contains every variable of `j`, and whether they
/// induce a connected subgraph.
pub fn connected_subgraph(graph: &ExchangeGraph, j: &BTreeSet<usize>) -> (Vec<usize>, bool) {
    let members: Vec<usize> =
        (0..graph.num_vertices()).filter(|&v| j.iter().all(|a| graph.vertices[v].cluster.contains(a))).collect();
    let Some(&start) = members.first() else {
        return (members, true);
    };
    let inside: BTreeSet<usize> = members.iter().copied().collect();
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for w in graph.adjacency[v].iter().flatten() {
            if inside.contains(w) && seen.insert(*w) {
                queue.push_back(*w);
            }
        }
    }
    let connected = seen.len() == members.len();
    (members, connected)
}

/// Checks connectivity of the induced subgraph for a single variable set `j`.
pub fn verify_connected_subgraph(graph: &ExchangeGraph, j: &BTreeSet<usize>) -> VerificationReport {
    let mut report = VerificationReport::new("connected-subgraph", graph.is_complete());
    report.cases = 1;
    let (members, connected) = connected_subgraph(graph, j);
    if !connected {
        report.violations.push(format!("J={j:?}: vertices {members:?} not connected"));
    }
    report
}

/// Checks every subset of every cluster.
pub fn verify_all_connected_subgraphs(graph: &ExchangeGraph) -> VerificationReport {
    let mut subsets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for v in &graph.vertices {
        let n = v.cluster.len();
        for mask in 0u32..(1 << n) {
            subsets.insert((0..n).filter(|i| mask & (1 << i) != 0).map(|i| v.cluster[i]).collect());
        }
    }
    let results: Vec<(BTreeSet<usize>, Vec<usize>, bool)> = subsets
        .into_par_iter()
        .map(|j| {
            let (members, ok) = connected_subgraph(graph, &j);
            (j, members, ok)
        })
        .collect();
    let mut report = VerificationReport::new("connected-subgraph", graph.is_complete());
    report.cases = results.len();
    for (j, members, ok) in results {
        if !ok {
            report.violations.push(format!("J={j:?}: vertices {members:?} not connected"));
        }
    }
    report
}

/// For every cluster variable `x` and initial variable `x_k`: `d_k(x) = -1`
/// iff `x = x_k`, `0` iff distinct and compatible, positive iff incompatible.
/// Also recomputes `d_k` from every cluster containing `x_k` and requires agreement.
pub fn verify_dvector_trichotomy(graph: &ExchangeGraph) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("d-trichotomy", graph.is_complete());
    let initial = &graph.vertices[0].cluster;
    let dvecs: Vec<Vec<i64>> =
        graph.variables.iter().map(|x| x.denominator_vector().map(|d| d.0)).collect::<Result<_>>()?;
    for (v, d) in dvecs.iter().enumerate() {
        for (k, &xk) in initial.iter().enumerate() {
            report.cases += 1;
            let dk = d[k];
            let expected = if v == xk {
                dk == -1
            } else if graph.compatible_ids(v, xk) {
                dk == 0
            } else {
                dk > 0
            };
            if !expected {
                report.violations.push(format!(
                    "d_{}({}) = {dk} disagrees with its relation to the initial variable",
                    k + 1,
                    graph.render_variable(v)
                ));
            }
        }
    }

    // one occurrence (vertex, position) per variable
    let mut occurrence: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (t, vert) in graph.vertices.iter().enumerate() {
        for (i, &v) in vert.cluster.iter().enumerate() {
            occurrence.entry(v).or_insert((t, i));
        }
    }
    let bases: Vec<usize> =
        (0..graph.num_vertices()).filter(|&t| graph.vertices[t].cluster.iter().any(|v| initial.contains(v))).collect();
    let checks: Vec<Result<Vec<String>>> = bases
        .par_iter()
        .map(|&base| {
            let mut bad = Vec::new();
            let base_vertex = &graph.vertices[base];
            let rebased = graph.pattern.rebased(&base_vertex.path)?;
            for (&v, &(t, i)) in &occurrence {
                let seed = rebased.seed_at(&path_between(&base_vertex.path, &graph.vertices[t].path))?;
                let d = seed.x()[i].denominator_vector()?.0;
                for (j, xj) in base_vertex.cluster.iter().enumerate() {
                    if let Some(k) = initial.iter().position(|x| x == xj) {
                        if d[j] != dvecs[v][k] {
                            bad.push(format!(
                                "d_{}({}) = {} from vertex {base} but {} from the initial seed",
                                k + 1,
                                graph.render_variable(v),
                                d[j],
                                dvecs[v][k]
                            ));
                        }
                    }
                }
            }
            Ok(bad)
        })
        .collect();
    for c in checks {
        report.cases += 1;
        report.violations.extend(c?);
    }
    Ok(report)
}

/// Largest variable count for which compatible subsets are enumerated.
pub const MAX_SUBSET_VARIABLES: usize = 24;

/// Every pairwise compatible set of variables lies in a cluster, and the
/// maximal ones are exactly the clusters.
pub fn verify_compatible_sets(graph: &ExchangeGraph) -> Result<VerificationReport> {
    let m = graph.variables.len();
    if m > MAX_SUBSET_VARIABLES {
        return Err(Error::Argument(format!("{m} variables is too many for subset enumeration")));
    }
    let compat = graph.compatibility_matrix();
    let clusters = graph.cluster_sets();
    let mut report = VerificationReport::new("compatible-sets", graph.is_complete());
    let mut maximal: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    // depth-first over subsets that stay pairwise compatible
    while let Some((set, next)) = stack.pop() {
        report.cases += 1;
        let as_set: BTreeSet<usize> = set.iter().copied().collect();
        if !clusters.iter().any(|c| c.is_superset(&as_set)) {
            report.violations.push(format!("compatible set {} lies in no cluster", render_set(graph, &as_set)));
        }
        let extendable = (0..m).any(|v| !as_set.contains(&v) && set.iter().all(|&a| compat[a][v]));
        if !extendable {
            maximal.insert(as_set);
        }
        for v in next..m {
            if set.iter().all(|&a| compat[a][v]) {
                let mut s = set.clone();
                s.push(v);
                stack.push((s, v + 1));
            }
        }
    }
    let cluster_set: BTreeSet<BTreeSet<usize>> = clusters.into_iter().collect();
    for s in maximal.difference(&cluster_set) {
        report.violations.push(format!("maximal compatible set {} is not a cluster", render_set(graph, s)));
    }
    for c in cluster_set.difference(&maximal) {
        report.violations.push(format!("cluster {} is not a maximal compatible set", render_set(graph, c)));
    }
    Ok(report)
}

fn render_set(graph: &ExchangeGraph, s: &BTreeSet<usize>) -> String {
    let parts: Vec<String> = s.iter().map(|&v| graph.render_variable(v)).collect();
    format!("{{{}}}", parts.join(", "))
}
