//! D-matrices from the integer recurrence and from Laurent expansions.
//!
//! ```bash
//! cargo run --example d_matrices
//! ```

use gencluster::invariants::{d_matrix_by_recurrence, d_matrix_from_laurent};
use gencluster::{ClusterPattern, ExchangeMatrix, Result, TropicalSemifield};

fn main() -> Result<()> {
    let f = TropicalSemifield::trivial();
    let b = ExchangeMatrix::from_rows(vec![vec![0, 1, 0], vec![-1, 0, 1], vec![0, -1, 0]])?;
    let a3 = ClusterPattern::classic(f.clone(), b, vec![f.one(); 3])?;

    for path in [vec![], vec![0], vec![0, 1], vec![0, 1, 2], vec![2, 1, 0, 2]] {
        let by_rec = d_matrix_by_recurrence(&a3, &path);
        let by_laurent = d_matrix_from_laurent(&a3.seed_at(&path)?)?;
        let shown: Vec<usize> = path.iter().map(|k| k + 1).collect();
        println!("path {shown:?}: D = {by_rec}  (agrees with expansions: {})", by_rec == by_laurent);
    }
    Ok(())
}
