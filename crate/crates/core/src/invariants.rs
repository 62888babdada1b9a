//! Numerical invariants of a cluster pattern: D-, C- and G-matrices,
//! F-polynomials, the C–G duality and the separation formulas.
//!
//! Matrices are returned as [`IntMatrix`] whose columns are the vectors
//! attached to the cluster variables `x_{1;t}, ..., x_{n;t}`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{check_dim, Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::matrix::{IntMatrix, RatMatrix};
use crate::seed::{mutate_int_matrix, ClusterPattern, Seed};
use crate::semifield::{GroupRingElement, SemifieldElement};

pub type DMatrix = IntMatrix;
pub type CMatrix = IntMatrix;
pub type GMatrix = IntMatrix;

/// D-matrix of the seed reached from a base seed with exchange matrix `b_base`
/// along `path`, by the integer recurrence started at `-I`:
///
/// `d_k' = -d_k + max(Σ_{b_lk>0} d_l b_lk r_k, Σ_{b_lk<0} -d_l b_lk r_k)`
/// with the maximum taken componentwise.
pub fn d_matrix_along(b_base: &IntMatrix, degrees: &[u32], path: &[usize]) -> DMatrix {
    let n = b_base.nrows();
    let mut cols: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| if i == j { -1 } else { 0 }).collect()).collect();
    let mut b = b_base.clone();
    for &k in path {
        let r = degrees[k] as i64;
        let mut pos_sum = vec![0i64; n];
        let mut neg_sum = vec![0i64; n];
        for l in 0..n {
            let blk = b.get(l, k);
            if blk > 0 {
                for (acc, d) in pos_sum.iter_mut().zip(&cols[l]) {
                    *acc += d * blk * r;
                }
            } else if blk < 0 {
                for (acc, d) in neg_sum.iter_mut().zip(&cols[l]) {
                    *acc -= d * blk * r;
                }
            }
        }
        cols[k] = (0..n).map(|j| -cols[k][j] + pos_sum[j].max(neg_sum[j])).collect();
        b = mutate_int_matrix(&b, r, k);
    }
    IntMatrix::from_columns(&cols)
}

/// `D_t^{t0}` for the vertex at `path`, via the integer recurrence only.
pub fn d_matrix_by_recurrence(pattern: &ClusterPattern, path: &[usize]) -> DMatrix {
    d_matrix_along(pattern.initial_matrix().matrix(), pattern.pair().degrees(), path)
}

/// `D_t^{t0}` read off the Laurent expansions of the cluster.
pub fn d_matrix_from_laurent(seed: &Seed) -> Result<DMatrix> {
    let cols = seed.x().iter().map(|x| x.denominator_vector().map(|d| d.0)).collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_columns(&cols))
}

fn require_principal(pattern: &ClusterPattern) -> Result<()> {
    if pattern.is_principal() {
        Ok(())
    } else {
        Err(Error::Argument("pattern does not have principal coefficients".into()))
    }
}

/// C-matrix of a seed of a principal-coefficient pattern.
pub fn c_matrix(pattern: &ClusterPattern, seed: &Seed) -> Result<CMatrix> {
    require_principal(pattern)?;
    let n = pattern.rank();
    let mut cols = Vec::with_capacity(n);
    for (i, y) in seed.y().iter().enumerate() {
        let (ys, zs) = y.exponents().split_at(n);
        if zs.iter().any(|&e| e != 0) {
            return Err(Error::NonMonomialCoefficient { index: i + 1 });
        }
        cols.push(ys.to_vec());
    }
    Ok(IntMatrix::from_columns(&cols))
}

/// Degree of each flat term of an X-function: `deg x_j = e_j`,
/// `deg y_j = -b_j` (column of `B_{t0}`), `deg z = 0`.
fn term_degree(b0: &IntMatrix, key: &[i64]) -> Vec<i64> {
    let n = b0.nrows();
    let mut deg = key[..n].to_vec();
    for (j, &e) in key[n..2 * n].iter().enumerate() {
        if e != 0 {
            for (l, d) in deg.iter_mut().enumerate() {
                *d -= e * b0.get(l, j);
            }
        }
    }
    deg
}

/// g-vector of `x_{i;t}`: the common degree of all terms of its X-function.
pub fn g_vector(pattern: &ClusterPattern, seed: &Seed, i: usize) -> Result<Vec<i64>> {
    require_principal(pattern)?;
    let b0 = pattern.initial_matrix().matrix();
    let mut degree: Option<Vec<i64>> = None;
    for (key, _) in seed.x()[i].flat_terms() {
        let d = term_degree(b0, key);
        match &degree {
            None => degree = Some(d),
            Some(prev) if *prev != d => return Err(Error::NotHomogeneous { index: i + 1 }),
            Some(_) => {}
        }
    }
    degree.ok_or(Error::NotHomogeneous { index: i + 1 })
}

pub fn g_matrix(pattern: &ClusterPattern, seed: &Seed) -> Result<GMatrix> {
    let cols = (0..pattern.rank()).map(|i| g_vector(pattern, seed, i)).collect::<Result<Vec<_>>>()?;
    Ok(IntMatrix::from_columns(&cols))
}

/// F-polynomial `X_{i;t}|_{x=1}` in `Z[y, z]`.
pub fn f_polynomial(pattern: &ClusterPattern, seed: &Seed, i: usize) -> Result<GroupRingElement> {
    require_principal(pattern)?;
    let n = pattern.rank();
    for (key, _) in seed.x()[i].flat_terms() {
        if key[n..].iter().any(|&e| e < 0) {
            return Err(Error::NegativeCoefficientExponent { index: i + 1 });
        }
    }
    Ok(seed.x()[i].specialize_cluster_to_one())
}

pub fn f_polynomials(pattern: &ClusterPattern, seed: &Seed) -> Result<Vec<GroupRingElement>> {
    (0..pattern.rank()).map(|i| f_polynomial(pattern, seed, i)).collect()
}

/// Checks `S R C_t R^{-1} S^{-1} G_t^T = I` exactly, with `S` the
/// skew-symmetrizer of `R·B_{t0}`.
pub fn check_cg_duality(pattern: &ClusterPattern, seed: &Seed) -> Result<bool> {
    let c = c_matrix(pattern, seed)?;
    let g = g_matrix(pattern, seed)?;
    Ok(cg_duality_product(pattern, &c, &g) == RatMatrix::identity(pattern.rank()))
}

pub(crate) fn cg_duality_product(pattern: &ClusterPattern, c: &CMatrix, g: &GMatrix) -> RatMatrix {
    let sr: Vec<i64> =
        pattern.symmetrizer().diag().iter().zip(pattern.pair().degrees()).map(|(s, &r)| s * r as i64).collect();
    let sr_rat = RatMatrix::diagonal(sr.iter().map(|&v| BigRational::from_integer(v.into())).collect());
    sr_rat.mul(&c.to_rational()).mul(&RatMatrix::inverse_diagonal(&sr)).mul(&g.transpose().to_rational())
}

/// Images of the principal generators `(y_1..y_n, z...)` in the general
/// pattern's semifield: `y_j ↦ y_{j;t0}` and each formal `z_{i,s}` to the
/// general pattern's `z_{i,s}`.
pub fn specialization(general: &ClusterPattern, principal: &ClusterPattern) -> Result<Vec<SemifieldElement>> {
    require_principal(principal)?;
    let n = principal.rank();
    check_dim(n, general.rank())?;
    if general.initial_matrix() != principal.initial_matrix() {
        return Err(Error::Argument("patterns have different initial exchange matrices".into()));
    }
    if general.pair().degrees() != principal.pair().degrees() {
        return Err(Error::Argument("patterns have different mutation degrees".into()));
    }
    let target = general.semifield().rank();
    let mut images: Vec<Option<SemifieldElement>> = vec![None; principal.semifield().rank()];
    for (j, y) in general.initial_seed().y().iter().enumerate() {
        images[j] = Some(y.clone());
    }
    for k in 0..n {
        for (formal, value) in principal.pair().frozen(k).iter().zip(general.pair().frozen(k)) {
            let g = formal.exponents().iter().position(|&e| e == 1).expect("formal frozen coefficient is a generator");
            images[g] = Some(value.clone());
        }
    }
    Ok(images.into_iter().map(|v| v.unwrap_or_else(|| SemifieldElement::one(target))).collect())
}

/// Reconstructs `(y_{i;t}, x_{i;t})` of `general` at `path` from the c-vectors,
/// g-vectors and F-polynomials of `principal`:
///
/// `y_{i;t} = ∏ y_{j;t0}^{c_ji} ∏ F_j|_P(y_{t0}, z)^{b_ji}` and
/// `x_{i;t} = x^{g_i} F_i|_F(ŷ_{t0}, z) / F_i|_P(y_{t0}, z)`.
pub fn separation_reconstruct(
    general: &ClusterPattern,
    principal: &ClusterPattern,
    path: &[usize],
    i: usize,
) -> Result<(SemifieldElement, LaurentPolynomial)> {
    let images = specialization(general, principal)?;
    let n = general.rank();
    let m = general.semifield().rank();
    let seed = principal.seed_at(path)?;
    let c = c_matrix(principal, &seed)?;
    let g = g_vector(principal, &seed, i)?;
    let f = f_polynomials(principal, &seed)?;
    let f_trop = f.iter().map(|fj| fj.tropical_eval(&images, m)).collect::<Result<Vec<_>>>()?;
    let y0 = general.initial_seed().y();

    let mut y = SemifieldElement::one(m);
    for j in 0..n {
        y = y.try_mul(&y0[j].pow(c.get(j, i)))?;
        y = y.try_mul(&f_trop[j].pow(seed.b().get(j, i)))?;
    }

    // flat images of the principal generators in ZP[x^±1]: ŷ_j and z values
    let b0 = general.initial_matrix();
    let flat_images: Vec<Vec<i64>> = images
        .iter()
        .enumerate()
        .map(|(gen, img)| {
            let mut key = if gen < n { b0.column(gen) } else { vec![0; n] };
            key.extend_from_slice(img.exponents());
            key
        })
        .collect();
    let terms = f[i].terms().map(|(mono, coeff)| {
        let mut key = vec![0i64; n + m];
        for (img, &e) in flat_images.iter().zip(mono.exponents()) {
            for (k, v) in key.iter_mut().zip(img) {
                *k += e * v;
            }
        }
        (key, coeff.clone())
    });
    let f_hat = LaurentPolynomial::from_flat_terms(n, m, terms.collect::<Vec<(Vec<i64>, BigInt)>>())?;
    let x = f_hat.mul_monomial(&g, &f_trop[i].inv())?;
    Ok((y, x))
}
