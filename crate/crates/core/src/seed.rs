//! Seeds, mutation pairs and `(R, z)`-seed mutation.
//!
//! Conventions: directions are 0-based, mutation at `k` reads column `k` of
//! the exchange matrix (`ŷ_k = y_k ∏ x_i^{b_ik}`), and every seed stores its
//! cluster as Laurent expansions over the pattern's initial cluster.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::matrix::{IntMatrix, RatMatrix};
use crate::semifield::{eval_poly_tropical, SemifieldElement, TropicalSemifield};

/// Positive integer diagonal `S` with `S·M` skew-symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SkewSymmetrizer(Vec<i64>);

impl SkewSymmetrizer {
    pub fn diag(&self) -> &[i64] {
        &self.0
    }

    pub fn symmetrizes(&self, m: &IntMatrix) -> bool {
        m.nrows() == self.0.len() && m.scale_rows(&self.0).is_skew_symmetric()
    }
}

/// Finds the minimal skew-symmetrizer of a square integer matrix.
///
/// Ratios `s_j / s_i = -m_ij / m_ji` are propagated over each connected
/// component of the nonzero pattern, then each component is cleared to
/// coprime positive integers. Isolated directions get `s = 1`.
pub fn find_skew_symmetrizer(m: &IntMatrix) -> Result<SkewSymmetrizer> {
    if !m.is_square() {
        return Err(Error::NotSkewSymmetrizable("matrix is not square".into()));
    }
    let n = m.nrows();
    for i in 0..n {
        if m.get(i, i) != 0 {
            return Err(Error::NotSkewSymmetrizable(format!("nonzero diagonal entry at {i}")));
        }
        for j in 0..i {
            let (a, b) = (m.get(i, j), m.get(j, i));
            if (a == 0) != (b == 0) || a * b > 0 {
                return Err(Error::NotSkewSymmetrizable(format!("sign pattern violated at ({i},{j})")));
            }
        }
    }

    let mut scale: Vec<Option<BigRational>> = vec![None; n];
    let mut result = vec![0i64; n];
    for root in 0..n {
        if scale[root].is_some() {
            continue;
        }
        scale[root] = Some(BigRational::one());
        let mut component = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let si = scale[i].clone().expect("visited");
            for j in 0..n {
                if m.get(i, j) == 0 {
                    continue;
                }
                // s_i m_ij = -s_j m_ji
                let sj = &si * BigRational::new((-m.get(i, j)).into(), m.get(j, i).into());
                match &scale[j] {
                    Some(existing) if *existing != sj => {
                        return Err(Error::NotSkewSymmetrizable(format!("inconsistent cycle ratio through ({i},{j})")));
                    }
                    Some(_) => {}
                    None => {
                        scale[j] = Some(sj);
                        component.push(j);
                        queue.push_back(j);
                    }
                }
            }
        }
        let denom_lcm =
            component.iter().fold(BigInt::one(), |acc, &i| acc.lcm(scale[i].as_ref().expect("visited").denom()));
        let ints: Vec<BigInt> = component
            .iter()
            .map(|&i| (scale[i].as_ref().expect("visited") * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        for (&i, v) in component.iter().zip(&ints) {
            result[i] =
                i64::try_from(v / &g).map_err(|_| Error::NotSkewSymmetrizable("symmetrizer entry overflows".into()))?;
        }
    }
    Ok(SkewSymmetrizer(result))
}

/// A skew-symmetrizable exchange matrix `B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ExchangeMatrix(IntMatrix);

impl ExchangeMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        find_skew_symmetrizer(&m)?;
        Ok(Self(m))
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != rows.len()) {
            return Err(Error::NotSkewSymmetrizable("matrix is not square".into()));
        }
        Self::new(IntMatrix::from_rows(rows))
    }

    pub fn rank(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0.get(i, j)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn column(&self, k: usize) -> Vec<i64> {
        self.0.column(k)
    }

    /// `B'_{ij} = B_{σ(i)σ(j)}`.
    pub fn permute(&self, sigma: &[usize]) -> Self {
        Self(self.0.permute(sigma))
    }
}

fn pos(v: i64) -> i64 {
    v.max(0)
}

/// The `R`-mutation of an integer matrix at `k` with degree `r_k`.
pub fn mutate_int_matrix(b: &IntMatrix, r_k: i64, k: usize) -> IntMatrix {
    let n = b.nrows();
    let mut out = b.clone();
    for i in 0..n {
        for j in 0..n {
            let v = if i == k || j == k {
                -b.get(i, j)
            } else {
                b.get(i, j) + r_k * (b.get(i, k) * pos(-b.get(k, j)) + pos(b.get(i, k)) * b.get(k, j))
            };
            out.set(i, j, v);
        }
    }
    out
}

/// Matrix mutation `μ_k(B)` under the degree matrix of `pair`.
pub fn mutate_matrix(b: &ExchangeMatrix, pair: &MutationPair, k: usize) -> ExchangeMatrix {
    ExchangeMatrix(mutate_int_matrix(&b.0, pair.degree(k) as i64, k))
}

/// Checks `μ_k(B)·R = μ°_k(B·R)`, where `μ°` is the classic mutation.
pub fn check_classic_compat(b: &ExchangeMatrix, pair: &MutationPair, k: usize) -> bool {
    let r: Vec<i64> = pair.degrees().iter().map(|&d| d as i64).collect();
    let lhs = mutate_matrix(b, pair, k).0.scale_columns(&r);
    let rhs = mutate_int_matrix(&b.0.scale_columns(&r), 1, k);
    lhs == rhs
}

/// Mutation degrees `r_i` and frozen coefficients `z_{i,s}`, `1 ≤ s < r_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MutationPair {
    degrees: Vec<u32>,
    frozen: Vec<Vec<SemifieldElement>>,
}

impl MutationPair {
    /// Validates `r_i ≥ 1`, list lengths `r_i - 1` and reciprocity `z_{i,s} = z_{i,r_i-s}`.
    pub fn new(degrees: Vec<u32>, frozen: Vec<Vec<SemifieldElement>>) -> Result<Self> {
        check_dim(degrees.len(), frozen.len())?;
        for (i, (&r, zs)) in degrees.iter().zip(&frozen).enumerate() {
            if r == 0 {
                return Err(Error::Argument(format!("mutation degree r_{} must be positive", i + 1)));
            }
            if zs.len() != r as usize - 1 {
                return Err(Error::Argument(format!(
                    "direction {} needs {} frozen coefficients, got {}",
                    i + 1,
                    r - 1,
                    zs.len()
                )));
            }
            if zs.iter().zip(zs.iter().rev()).any(|(a, b)| a != b) {
                return Err(Error::Reciprocity { direction: i + 1 });
            }
        }
        if let Some(rank) = frozen.iter().flatten().map(SemifieldElement::rank).next() {
            for z in frozen.iter().flatten() {
                check_dim(rank, z.rank())?;
            }
        }
        Ok(Self { degrees, frozen })
    }

    /// `R = I`, no frozen coefficients.
    pub fn classic(n: usize) -> Self {
        Self { degrees: vec![1; n], frozen: vec![Vec::new(); n] }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn degree(&self, k: usize) -> u32 {
        self.degrees[k]
    }

    pub fn frozen(&self, k: usize) -> &[SemifieldElement] {
        &self.frozen[k]
    }

    pub fn is_classic(&self) -> bool {
        self.degrees.iter().all(|&r| r == 1)
    }

    /// Coefficients `(z_{k,0}, ..., z_{k,r_k})` of the mutation polynomial `Z_k`.
    pub fn polynomial(&self, k: usize, semifield_rank: usize) -> Vec<SemifieldElement> {
        let one = SemifieldElement::one(semifield_rank);
        let mut out = vec![one.clone()];
        out.extend(self.frozen[k].iter().cloned());
        out.push(one);
        out
    }

    /// `Z_k|_P(u)`.
    pub fn tropical_value(&self, k: usize, u: &SemifieldElement) -> SemifieldElement {
        eval_poly_tropical(&self.polynomial(k, u.rank()), u).expect("nonempty polynomial")
    }

    /// Reorders directions: the result's direction `i` is this pair's `σ(i)`.
    pub fn permute(&self, sigma: &[usize]) -> Self {
        Self {
            degrees: sigma.iter().map(|&i| self.degrees[i]).collect(),
            frozen: sigma.iter().map(|&i| self.frozen[i].clone()).collect(),
        }
    }
}

/// The ratio `ŷ_k = U / V` with `U = y_k ∏ x_i^{[b_ik]+}` and `V = ∏ x_i^{[-b_ik]+}`.
///
/// Both parts are Laurent polynomials in the initial cluster; the ratio itself
/// is Laurent only when `V` is a unit monomial (e.g. at the initial seed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatY {
    pub numerator: LaurentPolynomial,
    pub denominator: LaurentPolynomial,
}

impl HatY {
    pub fn as_laurent(&self) -> Option<LaurentPolynomial> {
        self.numerator.exact_div(&self.denominator).ok()
    }
}

/// A labeled seed `(B, x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Seed {
    b: ExchangeMatrix,
    x: Vec<LaurentPolynomial>,
    y: Vec<SemifieldElement>,
}

impl Seed {
    pub fn new(b: ExchangeMatrix, x: Vec<LaurentPolynomial>, y: Vec<SemifieldElement>) -> Result<Self> {
        let n = b.rank();
        check_dim(n, x.len())?;
        check_dim(n, y.len())?;
        let ngens = y.first().map_or(0, SemifieldElement::rank);
        for v in &x {
            check_dim(n, v.rank())?;
            check_dim(ngens, v.ngens())?;
            if v.is_zero() {
                return Err(Error::Argument("cluster variable is zero".into()));
            }
        }
        for c in &y {
            check_dim(ngens, c.rank())?;
        }
        Ok(Self { b, x, y })
    }

    /// Seed whose cluster is the initial variables themselves.
    pub fn initial(b: ExchangeMatrix, y: Vec<SemifieldElement>, ngens: usize) -> Result<Self> {
        let n = b.rank();
        let x = (0..n).map(|i| LaurentPolynomial::generator(n, ngens, i)).collect();
        for c in &y {
            check_dim(ngens, c.rank())?;
        }
        Self::new(b, x, y)
    }

    pub fn rank(&self) -> usize {
        self.b.rank()
    }

    pub fn ngens(&self) -> usize {
        self.x[0].ngens()
    }

    pub fn b(&self) -> &ExchangeMatrix {
        &self.b
    }

    pub fn x(&self) -> &[LaurentPolynomial] {
        &self.x
    }

    pub fn y(&self) -> &[SemifieldElement] {
        &self.y
    }

    /// Relabels by `σ`: `x'_i = x_{σ(i)}`, `y'_i = y_{σ(i)}`, `b'_ij = b_{σ(i)σ(j)}`.
    pub fn permute(&self, sigma: &[usize]) -> Self {
        Self {
            b: self.b.permute(sigma),
            x: sigma.iter().map(|&i| self.x[i].clone()).collect(),
            y: sigma.iter().map(|&i| self.y[i].clone()).collect(),
        }
    }

    pub fn hat_y(&self, k: usize) -> HatY {
        let n = self.rank();
        let ngens = self.ngens();
        let mut numerator = LaurentPolynomial::monomial(&vec![0; n], &self.y[k]);
        let mut denominator = LaurentPolynomial::one(n, ngens);
        for i in 0..n {
            let b = self.b.get(i, k);
            if b > 0 {
                numerator = &numerator * &self.x[i].pow(b).expect("nonnegative power");
            } else if b < 0 {
                denominator = &denominator * &self.x[i].pow(-b).expect("nonnegative power");
            }
        }
        HatY { numerator, denominator }
    }

    /// `(R, z)`-seed mutation at direction `k`.
    pub fn mutate(&self, pair: &MutationPair, k: usize) -> Result<Self> {
        let n = self.rank();
        if k >= n {
            return Err(Error::Argument(format!("direction {k} out of range")));
        }
        check_dim(n, pair.rank())?;
        let r = pair.degree(k) as i64;
        let ngens = self.ngens();
        let y_k = &self.y[k];
        let coeffs = pair.polynomial(k, ngens);
        let z_trop = eval_poly_tropical(&coeffs, y_k)?;

        // V^r Z_k(U/V) = Σ_s z_{k,s} U^s V^{r-s}
        let HatY { numerator: u, denominator: v } = self.hat_y(k);
        let mut u_pows = vec![LaurentPolynomial::one(n, ngens)];
        let mut v_pows = vec![LaurentPolynomial::one(n, ngens)];
        for s in 1..=r as usize {
            u_pows.push(&u_pows[s - 1] * &u);
            v_pows.push(&v_pows[s - 1] * &v);
        }
        let mut exchange = LaurentPolynomial::zero(n, ngens);
        for (s, z) in coeffs.iter().enumerate() {
            let term = (&u_pows[s] * &v_pows[r as usize - s]).mul_monomial(&vec![0; n], z)?;
            exchange = &exchange + &term;
        }
        let exchange = exchange.mul_monomial(&vec![0; n], &z_trop.inv())?;
        let new_xk = exchange.exact_div(&self.x[k])?;

        let mut x = self.x.clone();
        x[k] = new_xk;

        let y = (0..n)
            .map(|i| {
                if i == k {
                    y_k.inv()
                } else {
                    let b_ki = self.b.get(k, i);
                    &(&self.y[i] * &y_k.pow(pos(b_ki) * r)) * &z_trop.pow(-b_ki)
                }
            })
            .collect();

        Ok(Self { b: mutate_matrix(&self.b, pair, k), x, y })
    }

    /// Left-to-right composition of mutations along `path`.
    pub fn apply_path(&self, pair: &MutationPair, path: &[usize]) -> Result<Self> {
        let mut seed = self.clone();
        for &k in path {
            seed = seed.mutate(pair, k)?;
        }
        Ok(seed)
    }
}

/// An `(R, z)`-cluster pattern: coefficient semifield, mutation pair and the
/// seed at the root `t0` of the `n`-regular tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterPattern {
    semifield: TropicalSemifield,
    pair: MutationPair,
    initial: Seed,
    symmetrizer: SkewSymmetrizer,
    principal: bool,
}

impl ClusterPattern {
    pub fn new(
        semifield: TropicalSemifield,
        b: ExchangeMatrix,
        pair: MutationPair,
        y0: Vec<SemifieldElement>,
    ) -> Result<Self> {
        let n = b.rank();
        check_dim(n, pair.rank())?;
        check_dim(n, y0.len())?;
        for z in (0..n).flat_map(|k| pair.frozen(k)) {
            check_dim(semifield.rank(), z.rank())?;
        }
        let initial = Seed::initial(b, y0, semifield.rank())?;
        Self::from_seed(semifield, pair, initial, false)
    }

    fn from_seed(semifield: TropicalSemifield, pair: MutationPair, initial: Seed, principal: bool) -> Result<Self> {
        let r: Vec<i64> = pair.degrees().iter().map(|&d| d as i64).collect();
        let symmetrizer = find_skew_symmetrizer(&initial.b.0.scale_rows(&r))?;
        Ok(Self { semifield, pair, initial, symmetrizer, principal })
    }

    /// Classic pattern (`R = I`) over the given coefficients.
    pub fn classic(semifield: TropicalSemifield, b: ExchangeMatrix, y0: Vec<SemifieldElement>) -> Result<Self> {
        let n = b.rank();
        Self::new(semifield, b, MutationPair::classic(n), y0)
    }

    /// Principal coefficients at `t0`: `P = Trop(y, z)` with `y_{t0} = y` and
    /// formal frozen coefficients `z{i}_{s}` for `1 ≤ s ≤ r_i / 2`
    /// (the rest follow by reciprocity).
    pub fn principal(b: ExchangeMatrix, degrees: Vec<u32>) -> Result<Self> {
        let n = b.rank();
        check_dim(n, degrees.len())?;
        let mut names: Vec<String> = (1..=n).map(|i| format!("y{i}")).collect();
        let mut z_index = Vec::new();
        for (i, &r) in degrees.iter().enumerate() {
            if r == 0 {
                return Err(Error::Argument(format!("mutation degree r_{} must be positive", i + 1)));
            }
            for s in 1..r {
                let s_min = s.min(r - s);
                if s == s_min {
                    names.push(format!("z{}_{}", i + 1, s));
                }
                z_index.push((i, s, format!("z{}_{}", i + 1, s_min)));
            }
        }
        let semifield = TropicalSemifield::new(names)?;
        let mut frozen = vec![Vec::new(); n];
        for (i, _, name) in z_index {
            frozen[i].push(semifield.generator(semifield.index_of(&name).expect("registered")));
        }
        let pair = MutationPair::new(degrees, frozen)?;
        let y0 = (0..n).map(|i| semifield.generator(i)).collect();
        let initial = Seed::initial(b, y0, semifield.rank())?;
        Self::from_seed(semifield, pair, initial, true)
    }

    pub fn rank(&self) -> usize {
        self.initial.rank()
    }

    pub fn semifield(&self) -> &TropicalSemifield {
        &self.semifield
    }

    pub fn pair(&self) -> &MutationPair {
        &self.pair
    }

    pub fn initial_seed(&self) -> &Seed {
        &self.initial
    }

    pub fn initial_matrix(&self) -> &ExchangeMatrix {
        &self.initial.b
    }

    /// Skew-symmetrizer of `R·B_{t0}`.
    pub fn symmetrizer(&self) -> &SkewSymmetrizer {
        &self.symmetrizer
    }

    pub fn is_principal(&self) -> bool {
        self.principal
    }

    pub fn mutate(&self, seed: &Seed, k: usize) -> Result<Seed> {
        seed.mutate(&self.pair, k)
    }

    pub fn seed_at(&self, path: &[usize]) -> Result<Seed> {
        self.initial.apply_path(&self.pair, path)
    }

    /// `B_t` by matrix mutation only.
    pub fn matrix_at(&self, path: &[usize]) -> ExchangeMatrix {
        path.iter().fold(self.initial.b.clone(), |b, &k| mutate_matrix(&b, &self.pair, k))
    }

    /// The same pattern with its root moved to the vertex at `path`: the new
    /// initial seed is `(B_t, fresh variables, y_t)`.
    pub fn rebased(&self, path: &[usize]) -> Result<Self> {
        let seed = self.seed_at(path)?;
        let initial = Seed::initial(seed.b.clone(), seed.y.clone(), self.semifield.rank())?;
        Self::from_seed(self.semifield.clone(), self.pair.clone(), initial, self.principal && path.is_empty())
    }

    pub fn render_variable(&self, v: &LaurentPolynomial) -> String {
        v.render(&self.semifield)
    }
}

/// Removes adjacent repeated directions (`μ_k μ_k = id`).
pub fn reduce_path(path: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(path.len());
    for &k in path {
        if out.last() == Some(&k) {
            out.pop();
        } else {
            out.push(k);
        }
    }
    out
}

/// Tree path from `from` to `to`, both given as paths from the root.
pub fn path_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = from.iter().rev().copied().collect();
    p.extend_from_slice(to);
    reduce_path(&p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClusterFormulaReport {
    pub trials: usize,
    pub resampled: usize,
    pub identity_holds: bool,
    pub det_is_unit: bool,
    pub determinants: Vec<String>,
}

impl ClusterFormulaReport {
    pub fn passed(&self) -> bool {
        self.identity_holds && self.det_is_unit
    }
}

fn random_nonzero_rational<R: Rng>(rng: &mut R) -> BigRational {
    let num: i64 = rng.gen_range(1..=9);
    let den: i64 = rng.gen_range(1..=7);
    let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
    BigRational::new((sign * num).into(), den.into())
}

/// Jacobian `J_{ji} = ∂x_i/∂u_j` of a cluster over the initial variables `u`, at a point.
fn jacobian_at(x: &[LaurentPolynomial], xp: &[BigRational], pp: &[BigRational]) -> Result<RatMatrix> {
    let n = x.len();
    let mut rows = vec![vec![BigRational::zero(); n]; n];
    for (i, xi) in x.iter().enumerate() {
        for (j, row) in rows.iter_mut().enumerate() {
            row[i] = xi.partial_derivative(j)?.evaluate(xp, pp)?;
        }
    }
    Ok(RatMatrix::from_rows(rows))
}

/// Random-point check of `H (B_t R^{-1} S^{-1}) H^T = B_{t0} R^{-1} S^{-1}` and
/// `det H = ±1`, where `H = diag(x_{t0}) J^t_{t0} diag(x_t^{-1})`.
///
/// Both seeds are expansions over the pattern's initial cluster; the Jacobian
/// between them is obtained by the chain rule. Points at which a cluster
/// variable vanishes, or the base Jacobian is singular, are resampled.
pub fn cluster_formula_check<R: Rng>(
    pattern: &ClusterPattern,
    t: &[usize],
    t0: &[usize],
    trials: usize,
    rng: &mut R,
) -> Result<ClusterFormulaReport> {
    let n = pattern.rank();
    let seed_t = pattern.seed_at(t)?;
    let seed_0 = pattern.seed_at(t0)?;
    let r: Vec<i64> = pattern.pair().degrees().iter().map(|&d| d as i64).collect();
    let s = pattern.symmetrizer().diag();
    let rs: Vec<i64> = r.iter().zip(s).map(|(a, b)| a * b).collect();
    let scale = RatMatrix::inverse_diagonal(&rs);
    let lhs_mid = seed_t.b().matrix().to_rational().mul(&scale);
    let rhs = seed_0.b().matrix().to_rational().mul(&scale);

    let mut report = ClusterFormulaReport {
        trials,
        resampled: 0,
        identity_holds: true,
        det_is_unit: true,
        determinants: Vec::new(),
    };
    let mut done = 0;
    while done < trials {
        if report.resampled > 100 * trials.max(1) {
            return Err(Error::Evaluation("could not find a regular sample point".into()));
        }
        let xp: Vec<BigRational> = (0..n).map(|_| random_nonzero_rational(rng)).collect();
        let pp: Vec<BigRational> = (0..seed_t.ngens()).map(|_| random_nonzero_rational(rng)).collect();
        let xt: Vec<BigRational> = seed_t.x().iter().map(|v| v.evaluate(&xp, &pp)).collect::<Result<_>>()?;
        let x0: Vec<BigRational> = seed_0.x().iter().map(|v| v.evaluate(&xp, &pp)).collect::<Result<_>>()?;
        if xt.iter().chain(&x0).any(Zero::is_zero) {
            report.resampled += 1;
            continue;
        }
        let j_t = jacobian_at(seed_t.x(), &xp, &pp)?;
        let j_0 = jacobian_at(seed_0.x(), &xp, &pp)?;
        let Some(j_0_inv) = j_0.inverse() else {
            report.resampled += 1;
            continue;
        };
        let jac = j_0_inv.mul(&j_t);
        let h = RatMatrix::diagonal(x0).mul(&jac).mul(&RatMatrix::diagonal(xt.iter().map(|v| v.recip()).collect()));
        let lhs = h.mul(&lhs_mid).mul(&h.transpose());
        if lhs != rhs {
            report.identity_holds = false;
        }
        let det = h.determinant();
        if !(det.is_integer() && det.to_integer().abs().is_one()) {
            report.det_is_unit = false;
        }
        report.determinants.push(det.to_string());
        done += 1;
    }
    Ok(report)
}
