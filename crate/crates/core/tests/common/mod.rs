#![allow(dead_code)]

use gencluster::{ClusterPattern, ExchangeMatrix, MutationPair, SemifieldElement, TropicalSemifield};
use num_integer::Integer;
use rand::Rng;

pub fn trivial_classic(rows: Vec<Vec<i64>>) -> ClusterPattern {
    let n = rows.len();
    let f = TropicalSemifield::trivial();
    ClusterPattern::classic(f.clone(), ExchangeMatrix::from_rows(rows).unwrap(), vec![f.one(); n]).unwrap()
}

pub fn a2() -> ClusterPattern {
    trivial_classic(vec![vec![0, 1], vec![-1, 0]])
}

pub fn a3() -> ClusterPattern {
    trivial_classic(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]])
}

/// `B = [[0,1],[-1,0]]`, `R = diag(2,1)`, `Z_1 = 1 + z u + u^2`, trivial `y`.
pub fn rank2_generalized() -> ClusterPattern {
    let f = TropicalSemifield::new(["z"]).unwrap();
    let pair = MutationPair::new(vec![2, 1], vec![vec![f.generator(0)], vec![]]).unwrap();
    let b = ExchangeMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]]).unwrap();
    ClusterPattern::new(f.clone(), b, pair, vec![f.one(), f.one()]).unwrap()
}

/// Same `B` and `R` over `Trop(u, v)` with nontrivial `y` and `z`.
pub fn rank2_tropical() -> ClusterPattern {
    let f = TropicalSemifield::new(["u", "v"]).unwrap();
    let pair = MutationPair::new(vec![2, 1], vec![vec![f.parse("u^2*v^-1").unwrap()], vec![]]).unwrap();
    let b = ExchangeMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]]).unwrap();
    ClusterPattern::new(f.clone(), b, pair, vec![f.parse("u^-1*v").unwrap(), f.parse("v^2").unwrap()]).unwrap()
}

/// A2 over `Trop(u, v)`.
pub fn a2_tropical() -> ClusterPattern {
    let f = TropicalSemifield::new(["u", "v"]).unwrap();
    let b = ExchangeMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]]).unwrap();
    ClusterPattern::classic(f.clone(), b, vec![f.parse("u*v^-2").unwrap(), f.parse("u^-3").unwrap()]).unwrap()
}

/// Rank 3, `B` of type A3, `R = diag(2,1,1)`, tropical `y` and `z`;
/// its classic companion `B·R` is of finite type.
pub fn rank3_generalized() -> ClusterPattern {
    let f = TropicalSemifield::new(["u", "v"]).unwrap();
    let pair = MutationPair::new(vec![2, 1, 1], vec![vec![f.parse("u*v").unwrap()], vec![], vec![]]).unwrap();
    let b = ExchangeMatrix::from_rows(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]]).unwrap();
    let y0 = vec![f.parse("u").unwrap(), f.parse("v^-1").unwrap(), f.parse("u^-1*v").unwrap()];
    ClusterPattern::new(f.clone(), b, pair, y0).unwrap()
}

pub fn random_monomial<R: Rng>(rng: &mut R, rank: usize, spread: i64) -> SemifieldElement {
    SemifieldElement::new((0..rank).map(|_| rng.gen_range(-spread..=spread)).collect())
}

/// Random skew-symmetrizable `B` built from a random symmetrizer `D`:
/// `b_ij = c d_j / g`, `b_ji = -c d_i / g` with `g = gcd(d_i, d_j)`.
pub fn random_exchange_matrix<R: Rng>(rng: &mut R, n: usize, max_entry: i64) -> ExchangeMatrix {
    let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let g = d[i].gcd(&d[j]);
            let c = rng.gen_range(-max_entry..=max_entry);
            rows[i][j] = c * d[j] / g;
            rows[j][i] = -c * d[i] / g;
        }
    }
    ExchangeMatrix::from_rows(rows).unwrap()
}

/// Random pattern over `Trop(u, v)` with `r_i ≤ max_degree` and reciprocal random `z`.
pub fn random_pattern<R: Rng>(rng: &mut R, n: usize, max_degree: u32, max_entry: i64) -> ClusterPattern {
    let f = TropicalSemifield::new(["u", "v"]).unwrap();
    let b = random_exchange_matrix(rng, n, max_entry);
    let degrees: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=max_degree)).collect();
    let frozen = degrees
        .iter()
        .map(|&r| {
            let r = r as usize;
            let mut zs = vec![f.one(); r.saturating_sub(1)];
            for s in 1..r {
                if s <= r - s {
                    let m = random_monomial(rng, 2, 2);
                    zs[s - 1] = m.clone();
                    zs[r - s - 1] = m;
                }
            }
            zs
        })
        .collect();
    let pair = MutationPair::new(degrees, frozen).unwrap();
    let y0 = (0..n).map(|_| random_monomial(rng, 2, 2)).collect();
    ClusterPattern::new(f, b, pair, y0).unwrap()
}

pub fn random_path<R: Rng>(rng: &mut R, n: usize, len: usize) -> Vec<usize> {
    let mut path: Vec<usize> = Vec::with_capacity(len);
    while path.len() < len {
        let k = rng.gen_range(0..n);
        if path.last() != Some(&k) || n == 1 {
            path.push(k);
        }
    }
    path
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// True when every mutation along `path` (and one more step in any direction)
/// stays within `bound` for `r_k |b_ik|`; wild patterns blow up the Laurent
/// expansions within a couple of steps.
pub fn tractable(p: &ClusterPattern, path: &[usize], bound: i64) -> bool {
    let n = p.rank();
    let ok = |m: &gencluster::ExchangeMatrix| {
        (0..n).all(|k| (0..n).all(|i| p.pair().degree(k) as i64 * m.get(i, k).abs() <= bound))
    };
    (0..=path.len()).all(|end| ok(&p.matrix_at(&path[..end])))
}
