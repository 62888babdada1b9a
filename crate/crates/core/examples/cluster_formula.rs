//! The Jacobian identity `H (B_t R^-1 S^-1) H^T = B_t0 R^-1 S^-1`, `det H = ±1`,
//! checked exactly at random rational points.
//!
//! ```bash
//! cargo run --example cluster_formula
//! ```

use gencluster::seed::cluster_formula_check;
use gencluster::{ClusterPattern, ExchangeMatrix, MutationPair, Result, TropicalSemifield};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let f = TropicalSemifield::new(["z"])?;
    let pair = MutationPair::new(vec![2, 1], vec![vec![f.generator(0)], vec![]])?;
    let b = ExchangeMatrix::from_rows(vec![vec![0, 1], vec![-1, 0]])?;
    let pattern = ClusterPattern::new(f.clone(), b, pair, vec![f.one(), f.one()])?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    for (t, t0) in [(vec![0], vec![]), (vec![0, 1, 0], vec![]), (vec![0, 1, 0, 1], vec![1])] {
        let r = cluster_formula_check(&pattern, &t, &t0, 20, &mut rng)?;
        println!(
            "t = {t:?}, t0 = {t0:?}: identity {}, det = ±1 {}, sample determinants {:?}",
            r.identity_holds,
            r.det_is_unit,
            &r.determinants[..3]
        );
    }
    Ok(())
}
