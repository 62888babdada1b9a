//! JSON configuration and the commands behind the `gcluster` binary.
//!
//! A pattern configuration looks like
//!
//! ```json
//! { "n": 2, "B": [[0, 1], [-1, 0]], "R": [2, 1],
//!   "semifield": ["z"], "z": { "1": ["z"] }, "y0": ["1", "1"] }
//! ```
//!
//! Directions in `z` and in paths are 1-based. `principal: true` replaces
//! `semifield`, `z` and `y0` by principal coefficients. A pair configuration
//! is `{ "left": <pattern>, "right": <pattern> }`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::correspondence::{make_pair, tree_seeds, verify_d_equality, verify_identification, AlgebraPair};
use crate::error::{Error, Result};
use crate::graph::{explore, verify_all_connected_subgraphs, verify_compatible_sets, verify_dvector_trichotomy};
use crate::graph::{ExchangeGraph, VerificationReport};
use crate::invariants::{
    c_matrix, check_cg_duality, d_matrix_from_laurent, f_polynomials, g_matrix, separation_reconstruct,
};
use crate::matrix::IntMatrix;
use crate::seed::{cluster_formula_check, ClusterPattern, ExchangeMatrix, MutationPair};
use crate::semifield::TropicalSemifield;

/// Seed for all randomized checks unless `--rng-seed` is given.
pub const DEFAULT_RNG_SEED: u64 = 2024;
/// Vertex budget for graph-based checks when no limit is given.
pub const DEFAULT_MAX_VERTICES: usize = 2000;

fn config_err(field: impl Into<String>, message: impl fmt::Display) -> Error {
    Error::Config { field: field.into(), message: message.to_string() }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternConfig {
    pub n: usize,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub z: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub semifield: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y0: Option<Vec<String>>,
    #[serde(default)]
    pub principal: bool,
}

impl PatternConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| config_err("<root>", e))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Validates the configuration and builds the pattern.
    pub fn build(&self) -> Result<ClusterPattern> {
        let n = self.n;
        if self.b.len() != n {
            return Err(config_err("B", format!("expected {n} rows, got {}", self.b.len())));
        }
        for (i, row) in self.b.iter().enumerate() {
            if row.len() != n {
                return Err(config_err(format!("B[{i}]"), format!("expected {n} entries, got {}", row.len())));
            }
        }
        let b = ExchangeMatrix::new(IntMatrix::from_rows(self.b.clone())).map_err(|e| config_err("B", e))?;
        let degrees = self.r.clone().unwrap_or_else(|| vec![1; n]);
        if degrees.len() != n {
            return Err(config_err("R", format!("expected {n} degrees, got {}", degrees.len())));
        }
        if let Some(i) = degrees.iter().position(|&r| r == 0) {
            return Err(config_err(format!("R[{i}]"), "degrees must be positive"));
        }
        if self.principal {
            return ClusterPattern::principal(b, degrees).map_err(|e| config_err("principal", e));
        }

        let semifield = TropicalSemifield::new(self.semifield.clone()).map_err(|e| config_err("semifield", e))?;
        let mut frozen = vec![Vec::new(); n];
        for (key, values) in &self.z {
            let field = format!("z.{key}");
            let k = key
                .parse::<usize>()
                .ok()
                .filter(|k| (1..=n).contains(k))
                .ok_or_else(|| config_err(&field, format!("direction must be in 1..={n}")))?;
            let r = degrees[k - 1] as usize;
            if values.len() != r - 1 {
                return Err(config_err(&field, format!("expected {} coefficients, got {}", r - 1, values.len())));
            }
            frozen[k - 1] = values
                .iter()
                .enumerate()
                .map(|(s, v)| semifield.parse(v).map_err(|e| config_err(format!("{field}[{s}]"), e)))
                .collect::<Result<_>>()?;
        }
        for (k, &r) in degrees.iter().enumerate() {
            if r > 1 && frozen[k].is_empty() {
                return Err(config_err(format!("z.{}", k + 1), format!("missing {} coefficients", r - 1)));
            }
        }
        let pair = MutationPair::new(degrees, frozen).map_err(|e| match e {
            Error::Reciprocity { direction } => config_err(format!("z.{direction}"), e),
            other => config_err("z", other),
        })?;
        let y0 = match &self.y0 {
            None => vec![semifield.one(); n],
            Some(list) => {
                if list.len() != n {
                    return Err(config_err("y0", format!("expected {n} entries, got {}", list.len())));
                }
                list.iter()
                    .enumerate()
                    .map(|(i, v)| semifield.parse(v).map_err(|e| config_err(format!("y0[{i}]"), e)))
                    .collect::<Result<_>>()?
            }
        };
        ClusterPattern::new(semifield, b, pair, y0).map_err(|e| config_err("<root>", e))
    }

    /// The configuration describing `pattern`.
    pub fn from_pattern(pattern: &ClusterPattern) -> Self {
        let n = pattern.rank();
        let f = pattern.semifield();
        let b = pattern.initial_matrix().matrix().rows().to_vec();
        let r = Some(pattern.pair().degrees().to_vec());
        if pattern.is_principal() {
            return Self { n, b, r, z: BTreeMap::new(), semifield: Vec::new(), y0: None, principal: true };
        }
        let z = (0..n)
            .filter(|&k| !pattern.pair().frozen(k).is_empty())
            .map(|k| ((k + 1).to_string(), pattern.pair().frozen(k).iter().map(|v| f.render(v)).collect()))
            .collect();
        Self {
            n,
            b,
            r,
            z,
            semifield: f.generators().to_vec(),
            y0: Some(pattern.initial_seed().y().iter().map(|y| f.render(y)).collect()),
            principal: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairConfig {
    pub left: PatternConfig,
    pub right: PatternConfig,
}

impl PairConfig {
    pub fn build(&self) -> Result<AlgebraPair> {
        let prefix = |side: &str, e: Error| match e {
            Error::Config { field, message } => Error::Config { field: format!("{side}.{field}"), message },
            other => other,
        };
        let left = self.left.build().map_err(|e| prefix("left", e))?;
        let right = self.right.build().map_err(|e| prefix("right", e))?;
        make_pair(left, right)
    }
}

/// A configuration file: a single pattern or a pair of patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Config {
    Pattern(PatternConfig),
    Pair(PairConfig),
}

impl Config {
    pub fn from_json(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| config_err("<root>", e))?;
        if value.get("left").is_some() || value.get("right").is_some() {
            serde_json::from_value(value).map(Config::Pair).map_err(|e| config_err("<root>", e))
        } else {
            serde_json::from_value(value).map(Config::Pattern).map_err(|e| config_err("<root>", e))
        }
    }

    pub fn load(path: &str) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| config_err("--config", format!("{path}: {e}")))?;
        Self::from_json(&text)
    }

    pub fn pattern(&self) -> Result<ClusterPattern> {
        match self {
            Config::Pattern(p) => p.build(),
            Config::Pair(_) => Err(Error::Argument("this command needs a single-pattern configuration".into())),
        }
    }

    pub fn pair(&self) -> Result<AlgebraPair> {
        match self {
            Config::Pair(p) => p.build(),
            Config::Pattern(_) => Err(Error::Argument("this check needs a pair configuration".into())),
        }
    }
}

/// Parses `"1,2,1"` into 0-based directions; the empty string is the root.
pub fn parse_path(text: &str, n: usize) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .ok()
                .filter(|k| (1..=n).contains(k))
                .map(|k| k - 1)
                .ok_or_else(|| config_err("--path", format!("'{part}' is not a direction in 1..={n}")))
        })
        .collect()
}

/// The seed at a path together with its invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedDump {
    pub config: PatternConfig,
    /// 1-based directions.
    pub path: Vec<usize>,
    #[serde(rename = "B")]
    pub b: IntMatrix,
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub d_matrix: IntMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_matrix: Option<IntMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g_matrix: Option<IntMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f_polynomials: Option<Vec<String>>,
}

pub fn cmd_mutate(pattern: &ClusterPattern, path: &[usize]) -> Result<SeedDump> {
    let seed = pattern.seed_at(path)?;
    let f = pattern.semifield();
    let (c, g, fp) = if pattern.is_principal() {
        let fp = f_polynomials(pattern, &seed)?.iter().map(|p| f.render_ring(p)).collect();
        (Some(c_matrix(pattern, &seed)?), Some(g_matrix(pattern, &seed)?), Some(fp))
    } else {
        (None, None, None)
    };
    Ok(SeedDump {
        config: PatternConfig::from_pattern(pattern),
        path: path.iter().map(|k| k + 1).collect(),
        b: seed.b().matrix().clone(),
        x: seed.x().iter().map(|x| x.render(f)).collect(),
        y: seed.y().iter().map(|y| f.render(y)).collect(),
        d_matrix: d_matrix_from_laurent(&seed)?,
        c_matrix: c,
        g_matrix: g,
        f_polynomials: fp,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            other => Err(Error::Argument(format!("unknown format '{other}' (expected dot or json)"))),
        }
    }
}

/// Exploration limits; with neither set, [`DEFAULT_MAX_VERTICES`] applies.
#[derive(Debug, Clone, Copy, Default)]
pub struct Limits {
    pub depth: Option<usize>,
    pub max_vertices: Option<usize>,
}

impl Limits {
    fn explore(&self, pattern: &ClusterPattern) -> Result<ExchangeGraph> {
        let max = match (self.depth, self.max_vertices) {
            (None, None) => Some(DEFAULT_MAX_VERTICES),
            (_, m) => m,
        };
        explore(pattern, self.depth, max)
    }
}

/// One-line summary such as `5 vertices, 5 edges, complete`.
pub fn graph_summary(g: &ExchangeGraph) -> String {
    let nv = g.num_vertices();
    let ne = g.num_edges();
    format!(
        "{nv} {}, {ne} {}, {}",
        if nv == 1 { "vertex" } else { "vertices" },
        if ne == 1 { "edge" } else { "edges" },
        if g.is_complete() { "complete" } else { "truncated" }
    )
}

/// Explores and renders the graph; returns `(rendering, summary)`.
pub fn cmd_explore(pattern: &ClusterPattern, limits: Limits, format: Format) -> Result<(String, String)> {
    let g = limits.explore(pattern)?;
    let out = match format {
        Format::Dot => g.to_dot(true),
        Format::Json => serde_json::to_string_pretty(&g.to_json()).expect("graph serializes"),
    };
    Ok((out, graph_summary(&g)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    ConnectedSubgraph,
    DTrichotomy,
    CompatibleSets,
    DEquality,
    Bijection,
    ClusterFormula,
    CgDuality,
    Separation,
}

impl Selector {
    pub const ALL: [Selector; 8] = [
        Selector::ConnectedSubgraph,
        Selector::DTrichotomy,
        Selector::CompatibleSets,
        Selector::DEquality,
        Selector::Bijection,
        Selector::ClusterFormula,
        Selector::CgDuality,
        Selector::Separation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Selector::ConnectedSubgraph => "connected-subgraph",
            Selector::DTrichotomy => "d-trichotomy",
            Selector::CompatibleSets => "compatible-sets",
            Selector::DEquality => "d-equality",
            Selector::Bijection => "bijection",
            Selector::ClusterFormula => "cluster-formula",
            Selector::CgDuality => "cg-duality",
            Selector::Separation => "separation",
        }
    }

    pub fn needs_pair(self) -> bool {
        matches!(self, Selector::DEquality | Selector::Bijection)
    }
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|sel| sel.name() == s).ok_or_else(|| Error::Argument(format!("unknown check '{s}'")))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub limits: Limits,
    pub rng_seed: u64,
    pub trials: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { limits: Limits::default(), rng_seed: DEFAULT_RNG_SEED, trials: 20 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOutcome {
    pub passed: bool,
    pub report: Value,
}

fn graph_outcome(selector: Selector, g: &ExchangeGraph, report: VerificationReport) -> VerifyOutcome {
    VerifyOutcome {
        passed: report.passed(),
        report: json!({
            "check": selector.name(),
            "status": report.status(),
            "graph": graph_summary(g),
            "cases": report.cases,
            "violations": report.violations,
        }),
    }
}

fn violations_outcome(selector: Selector, extra: Value, cases: usize, violations: Vec<String>) -> VerifyOutcome {
    let passed = violations.is_empty();
    let mut report = json!({
        "check": selector.name(),
        "status": if passed { "pass" } else { "fail" },
        "cases": cases,
        "violations": violations,
    });
    if let (Value::Object(r), Value::Object(e)) = (&mut report, extra) {
        r.extend(e);
    }
    VerifyOutcome { passed, report }
}

/// Runs one check. `Ok` carries the report; the exit status is 0 iff `passed`.
pub fn cmd_verify(config: &Config, selector: Selector, opts: &VerifyOptions) -> Result<VerifyOutcome> {
    if selector.needs_pair() {
        let pair = config.pair()?;
        return match selector {
            Selector::DEquality => verify_d_equality_within(&pair, opts.limits.depth.unwrap_or(6)),
            _ => {
                let r = verify_identification(&pair, opts.limits.depth.unwrap_or(10))?;
                let passed = r.passed();
                Ok(VerifyOutcome {
                    passed,
                    report: json!({
                        "check": selector.name(),
                        "status": if passed { "pass" } else { "fail" },
                        "identification": r,
                    }),
                })
            }
        };
    }
    let pattern = config.pattern()?;
    match selector {
        Selector::ConnectedSubgraph => {
            let g = opts.limits.explore(&pattern)?;
            let r = verify_all_connected_subgraphs(&g);
            Ok(graph_outcome(selector, &g, r))
        }
        Selector::DTrichotomy => {
            let g = opts.limits.explore(&pattern)?;
            let r = verify_dvector_trichotomy(&g)?;
            Ok(graph_outcome(selector, &g, r))
        }
        Selector::CompatibleSets => {
            let g = opts.limits.explore(&pattern)?;
            let r = verify_compatible_sets(&g)?;
            Ok(graph_outcome(selector, &g, r))
        }
        Selector::ClusterFormula => {
            let depth = opts.limits.depth.unwrap_or(4);
            let mut rng = ChaCha8Rng::seed_from_u64(opts.rng_seed);
            let mut violations = Vec::new();
            let paths: Vec<Vec<usize>> = tree_seeds(&pattern, depth)?.into_iter().map(|(p, _)| p).collect();
            for path in &paths {
                let r = cluster_formula_check(&pattern, path, &[], opts.trials, &mut rng)?;
                if !r.passed() {
                    violations.push(format!("path {:?}: {:?}", one_based(path), r));
                }
            }
            let extra = json!({ "depth": depth, "trials": opts.trials, "rng_seed": opts.rng_seed });
            Ok(violations_outcome(selector, extra, paths.len(), violations))
        }
        Selector::CgDuality => {
            let principal = principal_companion(&pattern)?;
            let g = opts.limits.explore(&principal)?;
            let mut violations = Vec::new();
            for v in g.vertices() {
                if !check_cg_duality(&principal, &v.seed)? {
                    violations.push(format!("path {:?}", one_based(&v.path)));
                }
            }
            let extra = json!({ "graph": graph_summary(&g) });
            Ok(violations_outcome(selector, extra, g.num_vertices(), violations))
        }
        Selector::Separation => {
            let principal = principal_companion(&pattern)?;
            let g = opts.limits.explore(&pattern)?;
            let mut violations = Vec::new();
            for v in g.vertices() {
                for i in 0..pattern.rank() {
                    let (y, x) = separation_reconstruct(&pattern, &principal, &v.path, i)?;
                    if y != v.seed.y()[i] || x != v.seed.x()[i] {
                        violations.push(format!("x_{} at path {:?}", i + 1, one_based(&v.path)));
                    }
                }
            }
            let extra = json!({ "graph": graph_summary(&g) });
            Ok(violations_outcome(selector, extra, g.num_vertices() * pattern.rank(), violations))
        }
        Selector::DEquality | Selector::Bijection => unreachable!("pair selectors handled above"),
    }
}

/// The principal-coefficient pattern with the same `B` and `R`.
pub fn principal_companion(pattern: &ClusterPattern) -> Result<ClusterPattern> {
    ClusterPattern::principal(pattern.initial_matrix().clone(), pattern.pair().degrees().to_vec())
}

/// `D_v^w = D̄_v^w` for every `v` within `depth` of the root and `w` within half of it.
fn verify_d_equality_within(pair: &AlgebraPair, depth: usize) -> Result<VerifyOutcome> {
    let vs: Vec<Vec<usize>> = tree_seeds(pair.left(), depth)?.into_iter().map(|(p, _)| p).collect();
    let paths: Vec<(Vec<usize>, Vec<usize>)> = vs
        .iter()
        .filter(|w| w.len() <= depth / 2)
        .flat_map(|w| vs.iter().map(move |v| (w.clone(), v.clone())))
        .collect();
    let r = verify_d_equality(pair, &paths);
    let extra = json!({ "depth": depth });
    Ok(violations_outcome(Selector::DEquality, extra, r.cases, r.violations))
}

fn one_based(path: &[usize]) -> Vec<usize> {
    path.iter().map(|k| k + 1).collect()
}
